#include "iwalk/characters.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace iwalk {

namespace {

std::mutex memo_mutex;

// Involution-class table keyed by (partition, s); general classes keyed by
// (partition, remaining cycle multiset). Insertions are idempotent: a key is
// only ever associated with one value.
std::unordered_map<std::string, Int>& inv_memo() {
    static std::unordered_map<std::string, Int> table;
    return table;
}
std::unordered_map<std::string, Int>& gen_memo() {
    static std::unordered_map<std::string, Int> table;
    return table;
}

template <typename Table>
bool memo_lookup(Table& table, const std::string& key, Int& out) {
    std::lock_guard lock(memo_mutex);
    auto it = table.find(key);
    if (it == table.end()) return false;
    out = it->second;
    return true;
}

template <typename Table>
void memo_store(Table& table, const std::string& key, const Int& value) {
    std::lock_guard lock(memo_mutex);
    auto [it, inserted] = table.emplace(key, value);
    if (!inserted && it->second != value)
        throw std::logic_error("character memo: conflicting value for key " + key);
}

Int chi_involution(const Partition& lambda, int s) {
    if (s == 0) return dimension(lambda);
    std::string key = lambda.str() + "|" + std::to_string(s);
    Int cached;
    if (memo_lookup(inv_memo(), key, cached)) return cached;
    Int total = 0;
    for (const auto& [rest, height] : strip_removals(lambda, 2)) {
        Int sub = chi_involution(rest, s - 1);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo_store(inv_memo(), key, total);
    return total;
}

// cycles must be weakly decreasing with every length >= 2; the 1-cycle tail
// has already been stripped.
Int chi_general(const Partition& lambda, const std::vector<int>& cycles, size_t from) {
    if (from == cycles.size()) return dimension(lambda);
    if (cycles[from] == 2) {
        int s = static_cast<int>(cycles.size() - from);
        return chi_involution(lambda, s);
    }
    std::vector<int> mults(lambda.n(), 0);
    int ones = lambda.n();
    for (size_t q = from; q < cycles.size(); ++q) {
        ++mults[cycles[q] - 1];
        ones -= cycles[q];
    }
    if (ones > 0) mults[0] = ones;
    std::string key = lambda.str() + "|" + CycleType(lambda.n(), std::move(mults)).str();
    Int cached;
    if (memo_lookup(gen_memo(), key, cached)) return cached;
    Int total = 0;
    for (const auto& [rest, height] : strip_removals(lambda, cycles[from])) {
        Int sub = chi_general(rest, cycles, from + 1);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo_store(gen_memo(), key, total);
    return total;
}

// Character polynomial 1-cycle insertion, q_sigma(x) = d_{[x - |sigma|, sigma]}
// continued to every integer x. The displayed product
//   C(x,|sigma|) d_sigma prod_k (x-|sigma|-k+1)/(x-|sigma|-k+sigma'_k+1)
// is, after cancellation, d_sigma/|sigma|! times a product of linear factors;
// each denominator root cancels a distinct numerator root, so we keep the
// surviving root list per shape.
struct InsertPoly {
    Int dim;
    Int size_factorial;
    std::vector<long> roots;
};

const InsertPoly& insert_poly(const Partition& sigma) {
    static std::unordered_map<std::string, InsertPoly> cache;
    static std::mutex poly_mutex;
    std::string key = sigma.str();
    {
        std::lock_guard lock(poly_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    long size = sigma.n();
    std::vector<long> roots;
    for (long a = 0; a < size; ++a) roots.push_back(a);
    for (long k = 1; k <= sigma.part(1); ++k) roots.push_back(size + k - 1);
    for (long k = 1; k <= sigma.part(1); ++k) {
        long den_root = size + k - sigma.conj_part(static_cast<int>(k)) - 1;
        auto it = std::find(roots.begin(), roots.end(), den_root);
        if (it == roots.end())
            throw std::logic_error("insert_poly: denominator root does not cancel");
        roots.erase(it);
    }
    InsertPoly poly{dimension(sigma), factorial(size), std::move(roots)};
    std::lock_guard lock(poly_mutex);
    return cache.emplace(key, std::move(poly)).first->second;
}

Int evaluate_insert_poly(const Partition& sigma, long x) {
    const InsertPoly& poly = insert_poly(sigma);
    Int prod = poly.dim;
    for (long root : poly.roots) prod *= Int(x) - root;
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), prod.get_mpz_t(),
                poly.size_factorial.get_mpz_t());
    if (rem != 0) throw std::logic_error("insert_poly: non-integral value");
    return q;
}

}  // namespace

Int character(const Partition& lambda, const CycleType& alpha) {
    if (lambda.n() != alpha.n())
        throw std::invalid_argument("character: |lambda| != n of class");
    if (lambda.empty()) return 1;
    if (alpha.is_involution_class()) return chi_involution(lambda, alpha.mult(2));
    std::vector<int> cycles;
    for (int len : alpha.cycle_lengths_desc())
        if (len >= 2) cycles.push_back(len);
    return chi_general(lambda, cycles, 0);
}

Int character_involution(const Partition& lambda, int s) {
    if (s < 0 || 2 * s > lambda.n())
        throw std::invalid_argument("character_involution: bad s");
    return chi_involution(lambda, s);
}

Int character_involution_poly(const Partition& lambda, int s) {
    int n = lambda.n();
    if (s < 0 || 2 * s > n)
        throw std::invalid_argument("character_involution_poly: bad s");
    Partition rho = lambda.below_first_row();
    // Signed counts of j-step domino removal chains from rho, per end shape.
    std::map<Partition, Int> level{{rho, Int(1)}};
    Int total = 0;
    long x = n - 2 * s;
    for (int j = 0; 2 * j <= rho.n(); ++j) {
        Int chosen = binomial(s, j);
        if (chosen != 0) {
            for (const auto& [shape, count] : level)
                total += chosen * count * evaluate_insert_poly(shape, x);
        }
        std::map<Partition, Int> next;
        for (const auto& [shape, count] : level) {
            for (const auto& [rest, height] : strip_removals(shape, 2))
                next[rest] += (height % 2 == 0) ? count : -count;
        }
        level = std::move(next);
        if (level.empty()) break;
    }
    return total;
}

Int character_with_order(const Partition& lambda, const std::vector<int>& cycles) {
    long total = 0;
    for (int len : cycles) total += len;
    if (total != lambda.n())
        throw std::invalid_argument("character_with_order: cycles do not sum to n");
    // Plain MN: peel strips for cycles[0], cycles[1], ... in the given order.
    struct Rec {
        static Int go(const Partition& shape, const std::vector<int>& cycles, size_t from) {
            if (from == cycles.size()) return 1;
            Int sum = 0;
            for (const auto& [rest, height] : strip_removals(shape, cycles[from])) {
                Int sub = go(rest, cycles, from + 1);
                sum += (height % 2 == 0) ? sub : -sub;
            }
            return sum;
        }
    };
    return Rec::go(lambda, cycles, 0);
}

Rat transposition_character_ratio(const Partition& lambda) {
    if (lambda.n() < 2)
        throw std::invalid_argument("transposition_character_ratio: need n >= 2");
    Rat ratio(character_involution(lambda, 1), dimension(lambda));
    ratio.canonicalize();
    return ratio;
}

std::map<std::string, std::string> character_memo_snapshot() {
    std::lock_guard lock(memo_mutex);
    std::map<std::string, std::string> out;
    for (const auto& [key, value] : inv_memo()) {
        auto bar = key.rfind('|');
        std::string lambda = key.substr(0, bar);
        int s = std::stoi(key.substr(bar + 1));
        int n = Partition::parse(lambda).n();
        out[lambda + "|" + CycleType::involution(n, s).str()] = value.get_str();
    }
    for (const auto& [key, value] : gen_memo()) out[key] = value.get_str();
    return out;
}

}  // namespace iwalk
