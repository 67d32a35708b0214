#include "rmc/qcalc.hpp"

#include <algorithm>
#include <memory>

namespace rmc {

QBinomialTable::QBinomialTable(std::uint32_t q) : q_(q) {
    if (q < 2) throw domain_error("q_binomial requires q >= 2");
}

Int QBinomialTable::get(int s, int t) const {
    if (s < 0 || t < 0 || t > s) return 0;
    if (t == 0) return 1;
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find({s, t});
    if (it != memo_.end()) return it->second;
    for (int a = 1; a <= s; ++a) {
        const int bmax = std::min(a, t);
        for (int b = 1; b <= bmax; ++b) {
            if (memo_.count({a, b})) continue;
            Int left = (b - 1 == 0) ? Int(1) : memo_[{a - 1, b - 1}];
            Int right = (b > a - 1) ? Int(0) : memo_[{a - 1, b}];
            memo_[{a, b}] = left + pow_q(q_, static_cast<unsigned>(b)) * right;
        }
    }
    return memo_[{s, t}];
}

Int q_binomial(std::uint32_t q, int s, int t) {
    if (q < 2) throw domain_error("q_binomial requires q >= 2");
    static std::mutex mu;
    static std::map<std::uint32_t, std::unique_ptr<QBinomialTable>> tables;
    QBinomialTable* tab;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto& slot = tables[q];
        if (!slot) slot = std::make_unique<QBinomialTable>(q);
        tab = slot.get();
    }
    return tab->get(s, t);
}

// ---------------------------------------------------------------------------

RankDistribution::RankDistribution(std::uint32_t q, int k, int m, std::vector<Int> counts)
    : q_(q), k_(std::min(k, m)), m_(std::max(k, m)) {
    if (q < 2) throw domain_error("rank distribution requires q >= 2");
    if (k < 0 || m < 0) throw domain_error("rank distribution shape must be nonnegative");
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] < 0) throw domain_error("rank distribution counts must be nonnegative");
        if (static_cast<int>(i) > k_ && counts[i] != 0)
            throw domain_error("rank distribution has a count above min(k,m)");
    }
    counts.resize(static_cast<std::size_t>(k_) + 1, Int(0));
    counts_ = std::move(counts);
}

Int RankDistribution::at(int i) const {
    if (i < 0) throw domain_error("rank index must be nonnegative");
    if (i > k_) return 0;
    return counts_[static_cast<std::size_t>(i)];
}

Int RankDistribution::total() const {
    Int s = 0;
    for (const auto& c : counts_) s += c;
    return s;
}

int RankDistribution::code_dim() const {
    Int t = total();
    int d = 0;
    while (t > 1 && t % q_ == 0) {
        t /= q_;
        ++d;
    }
    if (t != 1) throw domain_error("distribution total is not a power of q");
    return d;
}

Int moment_lhs(const RankDistribution& a, int nu) {
    if (nu < 0 || nu > a.k()) throw domain_error("moment order must be in [0, k]");
    Int s = 0;
    for (int i = 0; i <= a.k(); ++i) s += a.at(i) * q_binomial(a.q(), a.k() - i, nu);
    return s;
}

Rat moment_rhs(const RankDistribution& b, const Int& code_size, int nu) {
    if (nu < 0 || nu > b.k()) throw domain_error("moment order must be in [0, k]");
    Int s = 0;
    for (int j = 0; j <= b.k(); ++j) s += b.at(j) * q_binomial(b.q(), b.k() - j, nu - j);
    return Rat(code_size * s) / Rat(pow_q(b.q(), static_cast<unsigned>(b.m() * nu)));
}

namespace {

void check_code_distribution(const RankDistribution& a, int dim_c) {
    if (dim_c < 0 || dim_c > a.k() * a.m())
        throw domain_error("code dimension must be in [0, k*m]");
    if (a.at(0) != 1)
        throw domain_error("a code distribution has exactly one rank-0 word");
    if (a.total() != pow_q(a.q(), static_cast<unsigned>(dim_c)))
        throw domain_error("distribution total does not equal q^dim");
}

int binom2(int r) {  // ordinary binomial(r, 2)
    return r < 2 ? 0 : r * (r - 1) / 2;
}

}  // namespace

RankDistribution dual_distribution_recursive(const RankDistribution& a, int dim_c) {
    check_code_distribution(a, dim_c);
    const std::uint32_t q = a.q();
    const int k = a.k(), m = a.m();
    const Int size_c = pow_q(q, static_cast<unsigned>(dim_c));
    std::vector<Int> b(static_cast<std::size_t>(k) + 1, Int(0));
    b[0] = 1;
    for (int nu = 1; nu <= k; ++nu) {
        Int s = 0;
        for (int i = 0; i <= k; ++i) s += a.at(i) * q_binomial(q, k - i, nu);
        Int t = pow_q(q, static_cast<unsigned>(m * nu)) * s;
        if (t % size_c != 0)
            throw domain_error(
                "non-integral transform coefficient: not the distribution of a linear code");
        Int val = t / size_c;
        for (int j = 0; j < nu; ++j) val -= b[static_cast<std::size_t>(j)] * q_binomial(q, k - j, nu - j);
        if (val < 0)
            throw domain_error(
                "negative transform output: not the distribution of a linear code");
        b[static_cast<std::size_t>(nu)] = std::move(val);
    }
    return RankDistribution(q, k, m, std::move(b));
}

RankDistribution dual_distribution_explicit(const RankDistribution& a, int dim_c) {
    check_code_distribution(a, dim_c);
    const std::uint32_t q = a.q();
    const int k = a.k(), m = a.m();
    const Int size_c = pow_q(q, static_cast<unsigned>(dim_c));
    std::vector<Int> b(static_cast<std::size_t>(k) + 1, Int(0));
    for (int j = 0; j <= k; ++j) {
        Int outer = 0;
        for (int i = 0; i <= k; ++i) {
            const Int ai = a.at(i);
            if (ai == 0) continue;
            Int inner = 0;
            for (int s = 0; s <= j; ++s) {
                Int term = pow_q(q, static_cast<unsigned>(m * s + binom2(j - s))) *
                           q_binomial(q, k - s, k - j) * q_binomial(q, k - i, s);
                if ((j - s) % 2 != 0) term = -term;
                inner += term;
            }
            outer += ai * inner;
        }
        if (outer % size_c != 0)
            throw domain_error(
                "non-integral explicit transform output: not the distribution of a linear code");
        Int val = outer / size_c;
        if (val < 0)
            throw domain_error(
                "negative transform output: not the distribution of a linear code");
        b[static_cast<std::size_t>(j)] = std::move(val);
    }
    return RankDistribution(q, k, m, std::move(b));
}

RankDistribution mrd_distribution(std::uint32_t q, int k, int m, int d) {
    if (q < 2) throw domain_error("mrd_distribution requires q >= 2");
    if (!(1 <= d && d <= k && k <= m))
        throw domain_error("mrd_distribution requires 1 <= d <= k <= m");
    std::vector<Int> a(static_cast<std::size_t>(k) + 1, Int(0));
    a[0] = 1;
    a[static_cast<std::size_t>(d)] =
        (pow_q(q, static_cast<unsigned>(m)) - 1) * q_binomial(q, k, k - d);
    for (int l = 1; l <= k - d; ++l) {
        Int v = (pow_q(q, static_cast<unsigned>(m * (1 + l))) - 1) * q_binomial(q, k, k - d - l);
        for (int i = d; i < d + l; ++i)
            v -= a[static_cast<std::size_t>(i)] * q_binomial(q, k - i, k - d - l);
        a[static_cast<std::size_t>(d + l)] = std::move(v);
    }
    RankDistribution dist(q, k, m, std::move(a));
    if (dist.total() != pow_q(q, static_cast<unsigned>(m * (k - d + 1))))
        throw error("mrd_distribution total mismatch (internal)");
    for (int i = d; i <= k; ++i)
        if (dist.at(i) <= 0) throw error("mrd_distribution has a non-positive count (internal)");
    return dist;
}

}  // namespace rmc
