#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iwalk/rational.hpp"

namespace iwalk {

// Partition of n: weakly decreasing positive parts, canonical form with no
// trailing zeros. Indexes both the irreducible representations of S_n and the
// eigenvalues of the walk.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int n() const { return n_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 1-indexed row length; 0 beyond the last row.
    int part(int k) const {
        return (k >= 1 && k <= rows()) ? parts_[k - 1] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;

    // 1-indexed column length lambda'_k; 0 beyond the first row.
    int conj_part(int k) const;

    // Partition below the first row, [lambda_2, lambda_3, ...].
    Partition below_first_row() const;

    std::string str() const;  // "5,2,1"; empty partition -> ""
    static Partition parse(std::string_view text);

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// Conjugacy class of S_n as a multiplicity vector (a_1, ..., a_n) with
// sum k*a_k = n.
class CycleType {
public:
    CycleType() = default;
    // mults[k-1] is the number of k-cycles; trailing entries may be omitted.
    CycleType(int n, std::vector<int> mults);

    // Class (1^{n-2s}, 2^s).
    static CycleType involution(int n, int s);
    // Cycle type of a permutation given as a partition of its cycle lengths.
    static CycleType from_cycle_partition(const Partition& cycles);

    int n() const { return n_; }
    int mult(int k) const {
        return (k >= 1 && k <= static_cast<int>(mults_.size())) ? mults_[k - 1] : 0;
    }
    const std::vector<int>& mults() const { return mults_; }

    int num_cycles() const;
    int sign() const;  // (-1)^(n - #cycles)
    bool is_involution_class() const;  // only 1- and 2-cycles

    // Cycle lengths in weakly decreasing order.
    Partition cycle_partition() const;
    std::vector<int> cycle_lengths_desc() const;

    std::string str() const;  // "1:2,2:1", zero multiplicities omitted
    static CycleType parse(int n, std::string_view text);

    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend std::strong_ordering operator<=>(const CycleType& a, const CycleType& b) {
        return a.mults_ <=> b.mults_;
    }

private:
    std::vector<int> mults_;  // fixed length n, index k-1 holds a_k
    int n_ = 0;
};

enum class StripKind { HorizontalDomino, VerticalDomino, DisconnectedPair, SingleBox };

struct BorderstripRemoval {
    Partition result;
    StripKind kind;
    int height;  // rows spanned minus one; 0 for single boxes and corner pairs
};

// All partitions of n in descending lexicographic order ([n] first, [1^n] last).
std::vector<Partition> enumerate_partitions(int n);

// Partitions of n whose first part equals `first`.
std::vector<Partition> enumerate_partitions_with_first(int n, int first);

// All cycle types of S_n, one per partition of n, in the enumeration order of
// the underlying cycle partitions.
std::vector<CycleType> enumerate_classes(int n);

// Hook length formula, d_lambda = n! / prod(hooks).
Int dimension(const Partition& lambda);

// n! / prod_k (k^{a_k} a_k!).
Int class_size(const CycleType& alpha);

// Connected border strips of `size` boxes removable from lambda, as
// (result, height) pairs. Used by Murnaghan-Nakayama for arbitrary cycles.
std::vector<std::pair<Partition, int>> strip_removals(const Partition& lambda, int size);

// For size 1: single-box corner removals. For size 2: horizontal dominoes,
// vertical dominoes, and pairs of corners in distinct rows and columns (the
// disconnected shape [1]+[1] appearing in the eigenvalue recursion).
std::vector<BorderstripRemoval> borderstrip_removals(const Partition& lambda, int size);

enum class MajCompare { LessEqual, GreaterEqualOnly, Incomparable };

// Partial-sum comparison; requires |lambda| == |mu|. Equal partitions compare
// LessEqual.
MajCompare majorization_compare(const Partition& lambda, const Partition& mu);

// All covering pairs (lo, hi) of the majorization order on partitions of n,
// i.e. lo < hi with nothing strictly between.
std::vector<std::pair<Partition, Partition>> majorization_covers(int n);

// Cycle lexicographic order: alpha > beta iff at the smallest k with
// a_k != b_k, a_k > b_k. Returns +1, 0, -1. Requires equal n.
int cycle_lex_compare(const CycleType& alpha, const CycleType& beta);

// lambda_2 + lambda'_1 - 2 >= i and lambda_1 + lambda'_2 - 2 >= i.
bool is_i_cycle_detector(const Partition& lambda, int i);

struct DimRatioReport {
    int n = 0;
    int i = 0;
    std::vector<std::pair<Partition, Rat>> ratios;  // d_{lambda \ lambda_1} / d_lambda
    Partition argmax;
    Rat max_ratio;
    Rat formula_value;  // C(n,i)^{-1} (n-i+1)/(n-2i+1)
    bool max_at_two_row = false;
    bool matches_formula = false;
    bool pass() const { return max_at_two_row && matches_formula; }
};

// Enumerates all lambda with lambda_1 = n-i and checks the maximum of
// d_{lambda \ lambda_1}/d_lambda is attained at [n-i,i] with the closed-form
// value. Requires 1 <= i <= n/2.
DimRatioReport verify_dim_ratio_max(int n, int i);

}  // namespace iwalk
