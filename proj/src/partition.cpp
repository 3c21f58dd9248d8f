#include "iwalk/partition.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>

namespace iwalk {

namespace {

int checked_sum(const std::vector<int>& parts) {
    long total = 0;
    for (int part : parts) {
        total += part;
        if (total > std::numeric_limits<int>::max())
            throw std::overflow_error("Partition: size overflows machine integer");
    }
    return static_cast<int>(total);
}

std::vector<int> parse_int_list(std::string_view text, char sep) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find(sep, pos);
        if (next == std::string_view::npos) next = text.size();
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + next, value);
        if (ec != std::errc() || ptr != text.data() + next)
            throw std::invalid_argument("bad integer list '" + std::string(text) + "'");
        out.push_back(value);
        pos = next + 1;
    }
    return out;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    n_ = checked_sum(parts_);
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (!parts_.empty()) conj.resize(parts_[0], 0);
    for (int part : parts_)
        for (int c = 0; c < part; ++c) ++conj[c];
    return Partition(std::move(conj));
}

int Partition::conj_part(int k) const {
    if (k < 1 || parts_.empty() || k > parts_[0]) return 0;
    int count = 0;
    for (int part : parts_) {
        if (part >= k) ++count;
        else break;
    }
    return count;
}

Partition Partition::below_first_row() const {
    if (parts_.empty()) return Partition();
    return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

std::string Partition::str() const {
    std::string out;
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(parts_[k]);
    }
    return out;
}

Partition Partition::parse(std::string_view text) {
    if (text.empty()) return Partition();
    return Partition(parse_int_list(text, ','));
}

CycleType::CycleType(int n, std::vector<int> mults) : mults_(std::move(mults)), n_(n) {
    if (n < 0) throw std::invalid_argument("CycleType: negative n");
    mults_.resize(n, 0);
    long total = 0;
    for (size_t k = 0; k < mults_.size(); ++k) {
        if (mults_[k] < 0) throw std::invalid_argument("CycleType: negative multiplicity");
        total += static_cast<long>(k + 1) * mults_[k];
    }
    if (total != n) throw std::invalid_argument("CycleType: multiplicities do not sum to n");
}

CycleType CycleType::involution(int n, int s) {
    if (s < 0 || 2 * s > n) throw std::invalid_argument("CycleType::involution: bad s");
    std::vector<int> mults(n, 0);
    if (n > 0) mults[0] = n - 2 * s;
    if (n > 1) mults[1] = s;
    return CycleType(n, std::move(mults));
}

CycleType CycleType::from_cycle_partition(const Partition& cycles) {
    std::vector<int> mults(cycles.n(), 0);
    for (int len : cycles.parts()) ++mults[len - 1];
    return CycleType(cycles.n(), std::move(mults));
}

int CycleType::num_cycles() const {
    int count = 0;
    for (int m : mults_) count += m;
    return count;
}

int CycleType::sign() const { return ((n_ - num_cycles()) % 2 == 0) ? 1 : -1; }

bool CycleType::is_involution_class() const {
    for (size_t k = 2; k < mults_.size(); ++k)
        if (mults_[k] != 0) return false;
    return true;
}

Partition CycleType::cycle_partition() const {
    return Partition(cycle_lengths_desc());
}

std::vector<int> CycleType::cycle_lengths_desc() const {
    std::vector<int> lens;
    for (int k = static_cast<int>(mults_.size()); k >= 1; --k)
        for (int c = 0; c < mults_[k - 1]; ++c) lens.push_back(k);
    return lens;
}

std::string CycleType::str() const {
    std::string out;
    for (size_t k = 0; k < mults_.size(); ++k) {
        if (mults_[k] == 0) continue;
        if (!out.empty()) out += ',';
        out += std::to_string(k + 1) + ":" + std::to_string(mults_[k]);
    }
    return out;
}

CycleType CycleType::parse(int n, std::string_view text) {
    std::vector<int> mults(n, 0);
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find(',', pos);
        if (next == std::string_view::npos) next = text.size();
        std::string_view item = text.substr(pos, next - pos);
        size_t colon = item.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("CycleType: expected k:a_k entries");
        auto nums = parse_int_list(item.substr(0, colon), ',');
        auto vals = parse_int_list(item.substr(colon + 1), ',');
        if (nums.size() != 1 || vals.size() != 1 || nums[0] < 1 || nums[0] > n)
            throw std::invalid_argument("CycleType: bad entry '" + std::string(item) + "'");
        mults[nums[0] - 1] = vals[0];
        pos = next + 1;
    }
    return CycleType(n, std::move(mults));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

std::vector<Partition> enumerate_partitions_with_first(int n, int first) {
    std::vector<Partition> out;
    if (first < 1 || first > n) return out;
    std::vector<int> prefix{first};
    partitions_rec(n - first, first, prefix, out);
    return out;
}

std::vector<CycleType> enumerate_classes(int n) {
    std::vector<CycleType> out;
    for (const Partition& cycles : enumerate_partitions(n))
        out.push_back(CycleType::from_cycle_partition(cycles));
    return out;
}

Int dimension(const Partition& lambda) {
    if (lambda.empty()) return 1;
    Int hooks = 1;
    Partition conj = lambda.conjugate();
    for (int r = 1; r <= lambda.rows(); ++r)
        for (int c = 1; c <= lambda.part(r); ++c)
            hooks *= (lambda.part(r) - c) + (conj.part(c) - r) + 1;
    Int q, rem;
    Int num = factorial(lambda.n());
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), hooks.get_mpz_t());
    if (rem != 0) throw std::logic_error("dimension: hook product does not divide n!");
    return q;
}

Int class_size(const CycleType& alpha) {
    Int den = 1;
    for (int k = 1; k <= alpha.n(); ++k) {
        int mult = alpha.mult(k);
        if (mult == 0) continue;
        Int kpow;
        mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(k),
                      static_cast<unsigned long>(mult));
        den *= kpow * factorial(mult);
    }
    Int q, rem;
    Int num = factorial(alpha.n());
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0) throw std::logic_error("class_size: centralizer does not divide n!");
    return q;
}

std::vector<std::pair<Partition, int>> strip_removals(const Partition& lambda, int size) {
    std::vector<std::pair<Partition, int>> out;
    if (size < 1 || lambda.n() < size) return out;
    // Beta-number encoding: removing a border strip of `size` boxes moves one
    // bead down by `size`; the height is the number of beads jumped over.
    int rows = lambda.rows();
    std::vector<int> beta(rows);
    for (int r = 0; r < rows; ++r) beta[r] = lambda.part(r + 1) + (rows - 1 - r);
    std::set<int> occupied(beta.begin(), beta.end());
    for (int r = 0; r < rows; ++r) {
        int target = beta[r] - size;
        if (target < 0 || occupied.count(target)) continue;
        int height = 0;
        for (int other : beta)
            if (other > target && other < beta[r]) ++height;
        std::vector<int> nb = beta;
        nb[r] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> parts(rows);
        for (int q = 0; q < rows; ++q) parts[q] = nb[q] - (rows - 1 - q);
        out.push_back({Partition(std::move(parts)), height});
    }
    return out;
}

std::vector<BorderstripRemoval> borderstrip_removals(const Partition& lambda, int size) {
    if (size != 1 && size != 2)
        throw std::invalid_argument("borderstrip_removals: size must be 1 or 2");
    std::vector<BorderstripRemoval> out;
    if (lambda.n() < size) return out;
    if (size == 1) {
        for (auto& [result, height] : strip_removals(lambda, 1))
            out.push_back({std::move(result), StripKind::SingleBox, height});
        return out;
    }
    for (auto& [result, height] : strip_removals(lambda, 2)) {
        out.push_back({std::move(result),
                       height == 0 ? StripKind::HorizontalDomino : StripKind::VerticalDomino,
                       height});
    }
    // Corner pairs: two removable boxes necessarily sit in distinct rows and
    // distinct columns, and are never adjacent.
    std::vector<int> corners;
    for (int r = 1; r <= lambda.rows(); ++r)
        if (lambda.part(r) > lambda.part(r + 1)) corners.push_back(r);
    for (size_t a = 0; a < corners.size(); ++a) {
        for (size_t b = a + 1; b < corners.size(); ++b) {
            std::vector<int> parts = lambda.parts();
            --parts[corners[a] - 1];
            --parts[corners[b] - 1];
            out.push_back({Partition(std::move(parts)), StripKind::DisconnectedPair, 0});
        }
    }
    return out;
}

MajCompare majorization_compare(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n())
        throw std::invalid_argument("majorization_compare: size mismatch");
    bool leq = true, geq = true;
    long sum_l = 0, sum_m = 0;
    int rows = std::max(lambda.rows(), mu.rows());
    for (int k = 1; k <= rows; ++k) {
        sum_l += lambda.part(k);
        sum_m += mu.part(k);
        if (sum_l > sum_m) leq = false;
        if (sum_l < sum_m) geq = false;
    }
    if (leq) return MajCompare::LessEqual;
    if (geq) return MajCompare::GreaterEqualOnly;
    return MajCompare::Incomparable;
}

std::vector<std::pair<Partition, Partition>> majorization_covers(int n) {
    auto parts = enumerate_partitions(n);
    auto strictly_below = [](const Partition& lo, const Partition& hi) {
        return lo != hi && majorization_compare(lo, hi) == MajCompare::LessEqual;
    };
    std::vector<std::pair<Partition, Partition>> covers;
    for (const Partition& hi : parts) {
        for (const Partition& lo : parts) {
            if (!strictly_below(lo, hi)) continue;
            bool is_cover = true;
            for (const Partition& mid : parts) {
                if (mid == lo || mid == hi) continue;
                if (strictly_below(lo, mid) && strictly_below(mid, hi)) {
                    is_cover = false;
                    break;
                }
            }
            if (is_cover) covers.push_back({lo, hi});
        }
    }
    return covers;
}

int cycle_lex_compare(const CycleType& alpha, const CycleType& beta) {
    if (alpha.n() != beta.n())
        throw std::invalid_argument("cycle_lex_compare: size mismatch");
    for (int k = 1; k <= alpha.n(); ++k) {
        if (alpha.mult(k) != beta.mult(k))
            return alpha.mult(k) > beta.mult(k) ? 1 : -1;
    }
    return 0;
}

bool is_i_cycle_detector(const Partition& lambda, int i) {
    if (i < 1 || i > lambda.n())
        throw std::invalid_argument("is_i_cycle_detector: i out of range");
    return lambda.part(2) + lambda.conj_part(1) - 2 >= i &&
           lambda.part(1) + lambda.conj_part(2) - 2 >= i;
}

DimRatioReport verify_dim_ratio_max(int n, int i) {
    if (i < 1 || 2 * i > n)
        throw std::invalid_argument("verify_dim_ratio_max: need 1 <= i <= n/2");
    DimRatioReport report;
    report.n = n;
    report.i = i;
    for (const Partition& lambda : enumerate_partitions_with_first(n, n - i)) {
        Rat ratio(dimension(lambda.below_first_row()), dimension(lambda));
        ratio.canonicalize();
        report.ratios.push_back({lambda, ratio});
        if (report.argmax.empty() || ratio > report.max_ratio) {
            report.argmax = lambda;
            report.max_ratio = ratio;
        }
    }
    Partition two_row(std::vector<int>{n - i, i});
    report.formula_value = Rat(Int(n - i + 1), binomial(n, i) * (n - 2 * i + 1));
    report.formula_value.canonicalize();
    report.max_at_two_row = (report.argmax == two_row);
    report.matches_formula = (report.max_ratio == report.formula_value);
    return report;
}

}  // namespace iwalk
