#include "rmc/gabidulin.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "rmc/errors.hpp"
#include "rmc/linalg.hpp"

namespace rmc {

namespace {

void require_same_ext(const ExtensionSpec* want, const std::vector<ExtElement>& v) {
    for (const auto& e : v)
        if (e.ext_ptr() != want)
            throw field_mismatch_error("vector entries belong to a different extension");
}

}  // namespace

GabidulinCode GabidulinCode::from_generators(const std::vector<std::vector<ExtElement>>& gens) {
    if (gens.empty() || gens.front().empty())
        throw domain_error("generator list is empty and no shape was given");
    return from_generators(gens.front().front().ext(), static_cast<int>(gens.front().size()),
                           gens);
}

GabidulinCode GabidulinCode::from_generators(const ExtensionSpec& ext, int length,
                                             const std::vector<std::vector<ExtElement>>& gens) {
    if (length < 1) throw domain_error("code length must be positive");
    std::vector<std::vector<ExtElement>> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != length) throw domain_error("generators have mixed lengths");
        require_same_ext(&ext, g);
        rows.push_back(g);
    }
    linalg::rref(rows);
    return GabidulinCode(&ext, length, std::move(rows));
}

GabidulinCode GabidulinCode::zero_code(const ExtensionSpec& ext, int length) {
    return from_generators(ext, length, {});
}

GabidulinCode GabidulinCode::full_code(const ExtensionSpec& ext, int length) {
    std::vector<std::vector<ExtElement>> gens;
    for (int i = 0; i < length; ++i) {
        std::vector<ExtElement> e(static_cast<std::size_t>(length), ext.zero());
        e[static_cast<std::size_t>(i)] = ext.one();
        gens.push_back(std::move(e));
    }
    return from_generators(ext, length, gens);
}

bool GabidulinCode::contains(const std::vector<ExtElement>& v) const {
    if (static_cast<int>(v.size()) != k_) throw domain_error("vector length differs from code length");
    require_same_ext(ext_, v);
    return linalg::in_row_space(gens_, v);
}

int vector_rank(const std::vector<ExtElement>& a) {
    if (a.empty()) return 0;
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(a.size());
    for (const auto& e : a) rows.push_back(e.coords());
    return linalg::rank_of(std::move(rows));
}

MatrixFq expand_matrix(const std::vector<ExtElement>& a, const FieldBasis& G) {
    const ExtensionSpec& ext = G.ext();
    require_same_ext(&ext, a);
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(a.size());
    for (const auto& e : a) rows.push_back(coords_over_basis(e, G));
    return MatrixFq::from_rows(ext.base(), rows);
}

DelsarteCode expand_code(const GabidulinCode& c, const FieldBasis& G) {
    if (&G.ext() != c.ext_ptr())
        throw field_mismatch_error("basis extension differs from code extension");
    const int m = static_cast<int>(c.ext().degree());
    std::vector<MatrixFq> gens;
    gens.reserve(static_cast<std::size_t>(c.dim()) * m);
    for (const auto& g : c.generators())
        for (const auto& gamma : G.elements()) {
            std::vector<ExtElement> scaled;
            scaled.reserve(g.size());
            for (const auto& e : g) scaled.push_back(gamma * e);
            gens.push_back(expand_matrix(scaled, G));
        }
    DelsarteCode out = DelsarteCode::from_generators(c.ext().base(), c.length(), m, gens);
    if (out.dim() != m * c.dim())
        throw domain_error("expansion lost dimension; basis is not a basis");
    return out;
}

GabidulinCode gabidulin_dual(const GabidulinCode& c) {
    auto ker = linalg::kernel(c.generators(), static_cast<std::size_t>(c.length()),
                              c.ext().zero(), c.ext().one());
    return GabidulinCode::from_generators(c.ext(), c.length(), ker);
}

RankDistribution gabidulin_rank_distribution(const GabidulinCode& c, std::uint64_t budget) {
    const Int total = pow_int(c.ext().cardinality(), static_cast<unsigned>(c.dim()));
    if (total > budget) throw budget_error("codeword enumeration exceeds the budget");
    const std::uint64_t qm = c.ext().cardinality_u64();
    const int k = c.length();
    const int m = static_cast<int>(c.ext().degree());
    std::vector<Int> counts(static_cast<std::size_t>(std::min(k, m)) + 1, Int(0));
    std::vector<ExtElement> word(static_cast<std::size_t>(k), c.ext().zero());
    auto rec = [&](auto&& self, int level, std::vector<ExtElement>& acc) -> void {
        if (level == c.dim()) {
            counts[static_cast<std::size_t>(vector_rank(acc))] += 1;
            return;
        }
        const auto& g = c.generators()[static_cast<std::size_t>(level)];
        for (std::uint64_t v = 0; v < qm; ++v) {
            ExtElement coeff = c.ext().element(v);
            std::vector<ExtElement> next = acc;
            for (int i = 0; i < k; ++i)
                next[static_cast<std::size_t>(i)] =
                    next[static_cast<std::size_t>(i)] + coeff * g[static_cast<std::size_t>(i)];
            self(self, level + 1, next);
        }
    };
    rec(rec, 0, word);
    return RankDistribution(c.ext().base_cardinality(), k, m, counts);
}

LinearizedPoly::LinearizedPoly(const ExtensionSpec& ext, std::vector<ExtElement> coeffs)
    : ext_(&ext), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.ext_ptr() != ext_)
            throw field_mismatch_error("coefficients belong to a different extension");
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

LinearizedPoly LinearizedPoly::zero(const ExtensionSpec& ext) { return LinearizedPoly(ext, {}); }

LinearizedPoly LinearizedPoly::identity(const ExtensionSpec& ext) {
    return LinearizedPoly(ext, {ext.one()});
}

int LinearizedPoly::q_degree() const { return static_cast<int>(coeffs_.size()) - 1; }

bool operator==(const LinearizedPoly& a, const LinearizedPoly& b) {
    return a.ext_ == b.ext_ && a.coeffs_ == b.coeffs_;
}

ExtElement linearized_eval(const LinearizedPoly& p, const ExtElement& a) {
    if (a.ext_ptr() != &p.ext())
        throw field_mismatch_error("argument belongs to a different extension");
    ExtElement acc = p.ext().zero();
    ExtElement power = a;  // a^{q^i}
    for (const auto& c : p.coeffs()) {
        acc = acc + c * power;
        power = power.frobenius();
    }
    return acc;
}

LinearizedPoly subspace_polynomial(const ExtensionSpec& ext,
                                   const std::vector<ExtElement>& u_basis) {
    const std::uint64_t q = ext.base_cardinality();
    LinearizedPoly p = LinearizedPoly::identity(ext);
    for (const auto& b : u_basis) {
        if (b.ext_ptr() != &ext)
            throw field_mismatch_error("basis elements belong to a different extension");
        const ExtElement gamma = linearized_eval(p, b);
        if (gamma.is_zero())
            throw domain_error("subspace basis elements are dependent over the base field");
        // (x^q - gamma^{q-1} x) o p
        const ExtElement c = gamma.pow(Int(q - 1));
        const auto& old = p.coeffs();
        std::vector<ExtElement> nc(old.size() + 1, ext.zero());
        for (std::size_t i = 0; i < old.size(); ++i) {
            nc[i + 1] = old[i].frobenius();
            nc[i] = nc[i] - c * old[i];
        }
        p = LinearizedPoly(ext, std::move(nc));
    }
    return p;
}

VectorSubspace roots_space(const LinearizedPoly& p, std::uint64_t budget) {
    const ExtensionSpec& ext = p.ext();
    if (ext.cardinality() > budget) throw budget_error("root scan exceeds the budget");
    const std::uint64_t qm = ext.cardinality_u64();
    std::vector<std::vector<FieldElement>> roots;
    for (std::uint64_t v = 0; v < qm; ++v) {
        ExtElement a = ext.element(v);
        if (linearized_eval(p, a).is_zero()) roots.push_back(a.coords());
    }
    return VectorSubspace::span(ext.base(), static_cast<int>(ext.degree()), roots);
}

GabidulinCode evaluation_code(const ExtensionSpec& ext, const std::vector<ExtElement>& points,
                              int d) {
    const int k = static_cast<int>(points.size());
    const int m = static_cast<int>(ext.degree());
    if (d < 1 || d > k) throw domain_error("minimum rank must satisfy 1 <= d <= k");
    if (k > m) throw domain_error("need at most m independent points");
    if (vector_rank(points) != k) throw domain_error("evaluation points are dependent over the base field");
    std::vector<std::vector<ExtElement>> gens;
    for (int i = 0; i <= k - d; ++i) {
        std::vector<ExtElement> row;
        row.reserve(points.size());
        for (const auto& g : points) row.push_back(g.frobenius(static_cast<unsigned>(i)));
        gens.push_back(std::move(row));
    }
    GabidulinCode c = GabidulinCode::from_generators(ext, k, gens);
    if (c.dim() != k - d + 1)
        throw domain_error("evaluation map is not injective on the chosen points");
    return c;
}

GabidulinCode evaluation_code(const ExtensionSpec& ext, int k, int d) {
    std::vector<ExtElement> points;
    points.reserve(static_cast<std::size_t>(k));
    ExtElement z = ext.root();
    ExtElement p = ext.one();
    for (int i = 0; i < k; ++i) {
        points.push_back(p);
        p = p * z;
    }
    return evaluation_code(ext, points, d);
}

bool check_orthobasis_duality(const GabidulinCode& c, const FieldBasis& G) {
    FieldBasis Gp = dual_basis(G);
    return expand_code(gabidulin_dual(c), Gp) == dual(expand_code(c, G));
}

namespace {

MatrixFq random_matrix(std::mt19937_64& rng, const FieldSpec& f, int rows, int cols) {
    MatrixFq m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.set(i, j, f.element(static_cast<std::uint32_t>(rng() % f.cardinality())));
    return m;
}

MatrixFq random_invertible(std::mt19937_64& rng, const FieldSpec& f, int n) {
    for (;;) {
        MatrixFq m = random_matrix(rng, f, n, n);
        if (is_invertible(m)) return m;
    }
}

}  // namespace

bool sampled_anticode_criterion(const DelsarteCode& c, int trials, std::uint64_t seed) {
    if (trials < 1) throw domain_error("trial count must be positive");
    const bool transposed = c.k() > c.m();
    const DelsarteCode work = transposed ? transpose_code(c) : c;
    const int k = work.k();
    const int m = work.m();
    if (work.dim() % m != 0)
        throw domain_error("criterion needs dim divisible by max(k,m)");
    const int D = work.dim() / m;
    if (D > k - 1) throw domain_error("criterion needs dim at most max(k,m)*(min(k,m)-1)");
    if (D == 0) return true;  // the zero code meets every MRD code trivially

    const FieldSpec& f = work.field();
    FieldSpecPtr fp = FieldSpec::get(f.characteristic(), f.degree(), f.modulus());
    ExtensionSpecPtr ext = ExtensionSpec::get(fp, static_cast<unsigned>(m));
    DelsarteCode mrd = expand_code(evaluation_code(*ext, k, D + 1),
                                   FieldBasis::power_basis(*ext));
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        MatrixFq P = random_invertible(rng, f, k);
        MatrixFq Q = random_invertible(rng, f, m);
        std::vector<MatrixFq> gens;
        gens.reserve(mrd.generators().size());
        for (const auto& g : mrd.generators()) gens.push_back(P * g * Q);
        DelsarteCode sample = DelsarteCode::from_generators(f, k, m, gens);
        if (intersect(work, sample).dim() > 0) return false;
    }
    return true;
}

}  // namespace rmc
