#include "rmc/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <utility>

#include "rmc/codefile.hpp"
#include "rmc/counting.hpp"
#include "rmc/errors.hpp"
#include "rmc/linalg.hpp"
#include "rmc/qcalc.hpp"

namespace rmc {

namespace gen {

std::vector<std::uint32_t> field_sizes_up_to(std::uint32_t max_q) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = 2; q <= max_q; ++q) {
        std::uint32_t t = q, p = 0;
        for (std::uint32_t d = 2; d * d <= q; ++d)
            if (q % d == 0) {
                p = d;
                break;
            }
        if (p == 0) p = q;
        while (t % p == 0) t /= p;
        if (t == 1) out.push_back(q);
    }
    return out;
}

FieldSpecPtr random_field(Rng& rng, std::uint32_t max_q) {
    const auto sizes = field_sizes_up_to(max_q);
    const std::uint32_t q = sizes[below(rng, sizes.size())];
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    unsigned n = 0;
    std::uint32_t t = q;
    while (t > 1) {
        t /= p;
        ++n;
    }
    return FieldSpec::get(p, n);
}

MatrixFq random_matrix(Rng& rng, const FieldSpec& f, int rows, int cols) {
    MatrixFq m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.set(i, j, f.element(static_cast<std::uint32_t>(below(rng, f.cardinality()))));
    return m;
}

MatrixFq random_invertible(Rng& rng, const FieldSpec& f, int n) {
    for (;;) {
        MatrixFq m = random_matrix(rng, f, n, n);
        if (is_invertible(m)) return m;
    }
}

DelsarteCode random_code(Rng& rng, const FieldSpec& f, int rows, int cols, int dim) {
    if (dim < 0 || dim > rows * cols) throw domain_error("requested code dimension out of range");
    for (;;) {
        std::vector<MatrixFq> gens;
        gens.reserve(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) gens.push_back(random_matrix(rng, f, rows, cols));
        DelsarteCode c = DelsarteCode::from_generators(f, rows, cols, gens);
        if (c.dim() == dim) return c;
    }
}

VectorSubspace random_subspace(Rng& rng, const FieldSpec& f, int ambient, int dim) {
    if (dim < 0 || dim > ambient) throw domain_error("requested subspace dimension out of range");
    for (;;) {
        std::vector<std::vector<FieldElement>> vecs;
        for (int i = 0; i < dim; ++i) {
            std::vector<FieldElement> v;
            v.reserve(static_cast<std::size_t>(ambient));
            for (int j = 0; j < ambient; ++j)
                v.push_back(f.element(static_cast<std::uint32_t>(below(rng, f.cardinality()))));
            vecs.push_back(std::move(v));
        }
        VectorSubspace u = VectorSubspace::span(f, ambient, vecs);
        if (u.dim() == dim) return u;
    }
}

ExtElement random_ext_element(Rng& rng, const ExtensionSpec& e) {
    return e.element(below(rng, e.cardinality_u64()));
}

std::vector<ExtElement> random_ext_vector(Rng& rng, const ExtensionSpec& e, int k) {
    std::vector<ExtElement> v;
    v.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) v.push_back(random_ext_element(rng, e));
    return v;
}

GabidulinCode random_gabidulin(Rng& rng, const ExtensionSpec& e, int length, int dim) {
    if (dim < 0 || dim > length) throw domain_error("requested code dimension out of range");
    for (;;) {
        std::vector<std::vector<ExtElement>> gens;
        for (int i = 0; i < dim; ++i) gens.push_back(random_ext_vector(rng, e, length));
        GabidulinCode c = GabidulinCode::from_generators(e, length, gens);
        if (c.dim() == dim) return c;
    }
}

FieldBasis random_basis(Rng& rng, const ExtensionSpec& e) {
    const int m = static_cast<int>(e.degree());
    MatrixFq coords = random_invertible(rng, e.base(), m);
    std::vector<ExtElement> elems;
    elems.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) elems.push_back(e.from_coords(coords.row(i)));
    return FieldBasis(std::move(elems));
}

}  // namespace gen

namespace {

using gen::below;
using gen::Rng;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

struct Ctx {
    const VerifyConfig& cfg;
    Rng rng;
    bool ok = true;
    long cases = 0;
    std::string detail;

    template <class F>
    void check(bool cond, F&& msg) {
        ++cases;
        if (!cond && ok) {
            ok = false;
            detail = msg();
        }
    }
    void check_s(bool cond, const char* msg) {
        check(cond, [&] { return std::string(msg); });
    }
};

std::string shape_tag(std::uint32_t q, int k, int m) {
    std::ostringstream os;
    os << "q=" << q << " k=" << k << " m=" << m;
    return os.str();
}

std::string dist_str(const RankDistribution& d) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i <= d.max_index(); ++i) {
        if (i) os << ",";
        os << d.at(i);
    }
    os << ")";
    return os.str();
}

std::pair<int, int> random_shape(Rng& rng, int max_cells, int max_side = 4) {
    for (;;) {
        const int k = 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(max_side)));
        const int m = 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(max_side)));
        if (k * m <= max_cells) return {k, m};
    }
}

// Largest dim with q^dim <= cap, clamped to [0, km].
int exp_cap(std::uint32_t q, int km, std::uint64_t cap) {
    int e = 0;
    std::uint64_t v = 1;
    while (e < km && v <= cap / q) {
        v *= q;
        ++e;
    }
    return e;
}

// Random dim such that both q^dim and q^{km-dim} stay under cap.
int random_balanced_dim(Rng& rng, std::uint32_t q, int km, std::uint64_t cap) {
    const int hi = exp_cap(q, km, cap);
    const int lo = std::max(0, km - hi);
    if (lo > hi) throw domain_error("shape too large for the enumeration cap");
    return lo + static_cast<int>(below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// ---------------------------------------------------------------------------
// finite_field properties

void prop_field_mul_tables(Ctx& c) {
    for (std::uint32_t q : gen::field_sizes_up_to(16)) {
        std::uint32_t p = 2;
        while (q % p != 0) ++p;
        unsigned n = 0;
        std::uint32_t t = q;
        while (t > 1) {
            t /= p;
            ++n;
        }
        FieldSpecPtr fp = FieldSpec::get(p, n);
        const FieldSpec& f = *fp;
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                c.check(f.mul_v(a, b) == f.mul_schoolbook_v(a, b), [&] {
                    std::ostringstream os;
                    os << "q=" << q << " a=" << a << " b=" << b << ": table "
                       << f.mul_v(a, b) << " schoolbook " << f.mul_schoolbook_v(a, b);
                    return os.str();
                });
        for (std::uint32_t a = 1; a < q; ++a)
            c.check(f.mul_v(a, f.inv_v(a)) == 1, [&] {
                std::ostringstream os;
                os << "q=" << q << " a=" << a << ": a * a^-1 != 1";
                return os.str();
            });
    }
}

void prop_field_axioms(Ctx& c) {
    for (int t = 0; t < c.cfg.trials * 8; ++t) {
        FieldSpecPtr fp = gen::random_field(c.rng, 16);
        const FieldSpec& f = *fp;
        const FieldElement a = f.element(static_cast<std::uint32_t>(below(c.rng, f.cardinality())));
        const FieldElement b = f.element(static_cast<std::uint32_t>(below(c.rng, f.cardinality())));
        const FieldElement d = f.element(static_cast<std::uint32_t>(below(c.rng, f.cardinality())));
        c.check_s((a * b) * d == a * (b * d), "multiplication is not associative");
        c.check_s(a * (b + d) == a * b + a * d, "multiplication does not distribute");
        c.check_s(a * b == b * a && a + b == b + a, "operations are not commutative");
        c.check_s((a + b) - b == a, "subtraction does not undo addition");
        if (!a.is_zero()) {
            c.check_s(a * a.inverse() == f.one(), "inverse is wrong");
            c.check_s(a.pow(f.cardinality() - 1) == f.one(), "a^(q-1) != 1");
        }
    }
}

void prop_ext_frobenius(Ctx& c) {
    for (int t = 0; t < c.cfg.trials * 2; ++t) {
        FieldSpecPtr fp = gen::random_field(c.rng, 4);
        const unsigned m = 2 + static_cast<unsigned>(below(c.rng, 2));
        ExtensionSpecPtr ep = ExtensionSpec::get(fp, m);
        const ExtElement a = gen::random_ext_element(c.rng, *ep);
        const ExtElement b = gen::random_ext_element(c.rng, *ep);
        const FieldElement s = fp->element(static_cast<std::uint32_t>(below(c.rng, fp->cardinality())));
        c.check_s((a + b).frobenius() == a.frobenius() + b.frobenius(),
                  "frobenius is not additive");
        c.check_s((s * a).frobenius() == s.pow(fp->cardinality()) * a.frobenius(),
                  "frobenius is not semilinear over the base");
        c.check_s(a.frobenius(m) == a, "frobenius^m is not the identity");
        c.check_s((a * b).frobenius() == a.frobenius() * b.frobenius(),
                  "frobenius is not multiplicative");
    }
}

void prop_ext_trace(Ctx& c) {
    for (std::uint32_t q : {2u, 3u, 4u}) {
        std::uint32_t p = q == 4 ? 2u : q;
        unsigned n = q == 4 ? 2u : 1u;
        FieldSpecPtr fp = FieldSpec::get(p, n);
        for (unsigned m = 2; m <= 3; ++m) {
            ExtensionSpecPtr ep = ExtensionSpec::get(fp, m);
            std::set<std::uint32_t> seen;
            const std::uint64_t qm = ep->cardinality_u64();
            for (std::uint64_t v = 0; v < qm; ++v) {
                const ExtElement a = ep->element(v);
                seen.insert(field_trace(a).value());
                c.check_s(field_trace(a.frobenius()) == field_trace(a),
                          "trace is not frobenius-invariant");
            }
            c.check(seen.size() == fp->cardinality(), [&] {
                std::ostringstream os;
                os << "trace not surjective for q=" << q << " m=" << m;
                return os.str();
            });
            for (int t = 0; t < c.cfg.trials; ++t) {
                const ExtElement a = gen::random_ext_element(c.rng, *ep);
                const ExtElement b = gen::random_ext_element(c.rng, *ep);
                const FieldElement s =
                    fp->element(static_cast<std::uint32_t>(below(c.rng, fp->cardinality())));
                c.check_s(field_trace(a + b) == field_trace(a) + field_trace(b),
                          "trace is not additive");
                c.check_s(field_trace(s * a) == s * field_trace(a), "trace is not F_q-linear");
            }
        }
    }
}

void prop_dual_basis(Ctx& c) {
    for (int t = 0; t < c.cfg.trials; ++t) {
        FieldSpecPtr fp = gen::random_field(c.rng, 4);
        const unsigned m = 2 + static_cast<unsigned>(below(c.rng, 2));
        ExtensionSpecPtr ep = ExtensionSpec::get(fp, m);
        FieldBasis g = gen::random_basis(c.rng, *ep);
        FieldBasis gp = dual_basis(g);
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 0; j < m; ++j) {
                const FieldElement tr = field_trace(gp[i] * g[j]);
                c.check(tr == (i == j ? fp->one() : fp->zero()), [&] {
                    std::ostringstream os;
                    os << "trace gram not identity at (" << i << "," << j << ")";
                    return os.str();
                });
            }
        c.check_s(dual_basis(gp) == g, "dual basis is not an involution");
    }
}

void prop_coords_roundtrip(Ctx& c) {
    for (int t = 0; t < c.cfg.trials * 2; ++t) {
        FieldSpecPtr fp = gen::random_field(c.rng, 4);
        const unsigned m = 2 + static_cast<unsigned>(below(c.rng, 2));
        ExtensionSpecPtr ep = ExtensionSpec::get(fp, m);
        FieldBasis g = gen::random_basis(c.rng, *ep);
        const ExtElement a = gen::random_ext_element(c.rng, *ep);
        const ExtElement b = gen::random_ext_element(c.rng, *ep);
        c.check_s(element_from_coords(coords_over_basis(a, g), g) == a,
                  "coords_over_basis does not invert");
        auto ca = coords_over_basis(a, g);
        auto cb = coords_over_basis(b, g);
        auto cab = coords_over_basis(a + b, g);
        bool linear = true;
        for (unsigned i = 0; i < m; ++i)
            if (cab[i] != ca[i] + cb[i]) linear = false;
        c.check_s(linear, "coordinates are not additive");
    }
}

// ---------------------------------------------------------------------------
// matrix_space properties

void prop_rank_transpose(Ctx& c) {
    for (int t = 0; t < c.cfg.trials * 2; ++t) {
        FieldSpecPtr fp = gen::random_field(c.rng, c.cfg.max_q);
        auto [k, m] = random_shape(c.rng, 20, 5);
        MatrixFq a = gen::random_matrix(c.rng, *fp, k, m);
        c.check_s(rank(a) == rank(a.transpose()), "rank changes under transpose");
        MatrixFq p = gen::random_invertible(c.rng, *fp, k);
        MatrixFq q = gen::random_invertible(c.rng, *fp, m);
        c.check_s(rank(p * a * q) == rank(a), "rank changes under equivalence");
    }
}

void prop_trace_product(Ctx& c) {
    for (int t = 0; t < c.cfg.trials * 2; ++t) {
        FieldSpecPtr fp = gen::random_field(c.rng, c.cfg.max_q);
        auto [k, m] = random_shape(c.rng, 20, 5);
        MatrixFq a = gen::random_matrix(c.rng, *fp, k, m);
        MatrixFq b = gen::random_matrix(c.rng, *fp, k, m);
        const MatrixFq prod = a * b.transpose();
        c.check_s(trace_product(a, b) == h_trace(prod, k), "trace product != Tr(M N^t)");
        c.check_s(trace_product(a, b) == trace_product(b, a), "trace product is not symmetric");
    }
}

void prop_subspace_dual(Ctx& c) {
    for (int t = 0; t < c.cfg.trials * 2; ++t) {
        FieldSpecPtr fp = gen::random_field(c.rng, c.cfg.max_q);
        const int k = 1 + static_cast<int>(below(c.rng, 5));
        const int d = static_cast<int>(below(c.rng, static_cast<std::uint64_t>(k) + 1));
        VectorSubspace u = gen::random_subspace(c.rng, *fp, k, d);
        VectorSubspace w = subspace_dual(u);
        c.check_s(u.dim() + w.dim() == k, "dual dimensions do not add up");
        c.check_s(subspace_dual(w) == u, "subspace dual is not an involution");
    }
}

void prop_mat_u_code(Ctx& c) {
    for (int t = 0; t < c.cfg.trials; ++t) {
        FieldSpecPtr fp = gen::random_field(c.rng, c.cfg.max_q);
        const int k = 2 + static_cast<int>(below(c.rng, 2));
        const int m = 2 + static_cast<int>(below(c.rng, 2));
        const int s = static_cast<int>(below(c.rng, static_cast<std::uint64_t>(k) + 1));
        VectorSubspace u = gen::random_subspace(c.rng, *fp, k, s);
        DelsarteCode code = mat_u_code(u, m);
        c.check_s(code.dim() == m * s, "Mat_U dimension is not m*dim(U)");
        if (pow_q(fp->cardinality(), static_cast<unsigned>(code.dim())) <= 4096) {
            bool all_inside = true;
            for_each_codeword(code, [&](const MatrixFq& w) {
                for (int j = 0; j < w.cols(); ++j)
                    if (!u.contains(w.col(j))) all_inside = false;
            });
            c.check_s(all_inside, "a Mat_U codeword has a column outside U");
        }
    }
}

// ---------------------------------------------------------------------------
// delsarte properties

DelsarteCode draw_code(Ctx& c, FieldSpecPtr& fp) {
    fp = gen::random_field(c.rng, c.cfg.max_q);
    auto [k, m] = random_shape(c.rng, c.cfg.max_dim);
    const int dim = static_cast<int>(below(c.rng, static_cast<std::uint64_t>(k * m) + 1));
    return gen::random_code(c.rng, *fp, k, m, dim);
}

void prop_code_dual_involution(Ctx& c) {
    for (int t = 0; t < c.cfg.trials; ++t) {
        FieldSpecPtr fp;
        DelsarteCode code = draw_code(c, fp);
        DelsarteCode d = dual(code);
        c.check_s(d.dim() == code.k() * code.m() - code.dim(), "dual dimension is wrong");
        c.check_s(dual(d) == code, "dual is not an involution");
    }
}

void prop_code_duality_lattice(Ctx& c) {
    for (int t = 0; t < c.cfg.trials; ++t) {
        FieldSpecPtr fp = gen::random_field(c.rng, c.cfg.max_q);
        auto [k, m] = random_shape(c.rng, c.cfg.max_dim);
        const int km = k * m;
        const int d1 = static_cast<int>(below(c.rng, static_cast<std::uint64_t>(km) + 1));
        const int d2 = static_cast<int>(below(c.rng, static_cast<std::uint64_t>(km) + 1));
        DelsarteCode a = gen::random_code(c.rng, *fp, k, m, d1);
        DelsarteCode b = gen::random_code(c.rng, *fp, k, m, d2);
        c.check_s(dual(intersect(a, b)) == sum(dual(a), dual(b)),
                  "(C cap D)-dual != C-dual + D-dual");
        c.check_s(dual(sum(a, b)) == intersect(dual(a), dual(b)),
                  "(C + D)-dual != C-dual cap D-dual");
        c.check_s(sum(a, b).dim() == a.dim() + b.dim() - intersect(a, b).dim(),
                  "lattice dimension formula fails");
    }
}

void prop_code_transpose_dual(Ctx& c) {
    for (int t = 0; t < c.cfg.trials; ++t) {
        FieldSpecPtr fp;
        DelsarteCode code = draw_code(c, fp);
        c.check_s(dual(transpose_code(code)) == transpose_code(dual(code)),
                  "transpose does not commute with dual");
        c.check_s(transpose_code(transpose_code(code)) == code, "transpose is not an involution");
    }
}

void prop_matu_cardinality(Ctx& c) {
    for (int t = 0; t < c.cfg.trials; ++t) {
        FieldSpecPtr fp = gen::random_field(c.rng, std::min<std::uint32_t>(c.cfg.max_q, 3));
        const int k = 2 + static_cast<int>(below(c.rng, 2));
        const int m = 2 + static_cast<int>(below(c.rng, 2));
        const int dim = static_cast<int>(below(c.rng, static_cast<std::uint64_t>(k * m) + 1));
        DelsarteCode code = gen::random_code(c.rng, *fp, k, m, dim);
        DelsarteCode dc = dual(code);
        const std::uint32_t q = fp->cardinality();
        for (int s = 0; s <= k; ++s)
            for (const VectorSubspace& u : subspaces_of_dim(*fp, k, s)) {
                const Int lhs = pow_q(q, static_cast<unsigned>(intersect(code, mat_u_code(u, m)).dim()));
                const Int rhs = pow_q(
                    q, static_cast<unsigned>(intersect(dc, mat_u_code(subspace_dual(u), m)).dim()));
                // |C cap Mat_U| * q^{m(k-s)} = |C| * |C-dual cap Mat_{U-dual}|
                c.check(lhs * pow_q(q, static_cast<unsigned>(m * (k - s))) ==
                            code.cardinality() * rhs,
                        [&] {
                            return "cardinality identity fails at " + shape_tag(q, k, m) +
                                   " dim=" + std::to_string(dim) + " s=" + std::to_string(s);
                        });
            }
    }
}

void prop_double_count(Ctx& c) {
    FieldSpecPtr fp = FieldSpec::get(2, 1);
    const int k = 3, m = 3;
    for (int t = 0; t < c.cfg.trials; ++t) {
        const int dim = static_cast<int>(below(c.rng, static_cast<std::uint64_t>(k * m) + 1));
        DelsarteCode code = gen::random_code(c.rng, *fp, k, m, dim);
        RankDistribution a = rank_distribution(code, c.cfg.enum_budget);
        for (int s = 0; s <= k; ++s) {
            Int lhs = 0;
            for (const VectorSubspace& u : subspaces_of_dim(*fp, k, s))
                lhs += pow_q(2, static_cast<unsigned>(intersect(code, mat_u_code(u, m)).dim()));
            Int rhs = 0;
            for (int i = 0; i <= k; ++i) rhs += a.at(i) * q_binomial(2, k - i, k - s);
            c.check(lhs == rhs, [&] {
                return "double counting fails at s=" + std::to_string(s) +
                       " dim=" + std::to_string(dim);
            });
        }
    }
}

void prop_transform_vs_enum(Ctx& c) {
    for (int t = 0; t < c.cfg.trials; ++t) {
        FieldSpecPtr fp = gen::random_field(c.rng, c.cfg.max_q);
        auto [k, m] = random_shape(c.rng, c.cfg.max_dim);
        const int km = k * m;
        const int dim = random_balanced_dim(c.rng, fp->cardinality(), km, 1u << 14);
        DelsarteCode code = gen::random_code(c.rng, *fp, k, m, dim);
        RankDistribution a = rank_distribution(code, c.cfg.enum_budget);
        RankDistribution b_enum = rank_distribution(dual(code), c.cfg.enum_budget);
        RankDistribution b_rec = dual_distribution_recursive(a, code.dim());
        RankDistribution b_exp = dual_distribution_explicit(a, code.dim());
        c.check(b_rec == b_enum, [&] {
            return "recursive transform " + dist_str(b_rec) + " != enumerated dual " +
                   dist_str(b_enum) + " at " + shape_tag(fp->cardinality(), k, m);
        });
        c.check(b_exp == b_enum, [&] {
            return "explicit transform " + dist_str(b_exp) + " != enumerated dual " +
                   dist_str(b_enum) + " at " + shape_tag(fp->cardinality(), k, m);
        });
    }
}

void prop_transform_involution(Ctx& c) {
    for (int t = 0; t < c.cfg.trials; ++t) {
        FieldSpecPtr fp = gen::random_field(c.rng, c.cfg.max_q);
        auto [k, m] = random_shape(c.rng, c.cfg.max_dim);
        const int km = k * m;
        const int dim = random_balanced_dim(c.rng, fp->cardinality(), km, 1u << 14);
        DelsarteCode code = gen::random_code(c.rng, *fp, k, m, dim);
        RankDistribution a = rank_distribution(code, c.cfg.enum_budget);
        RankDistribution b = dual_distribution_recursive(a, dim);
        c.check_s(dual_distribution_recursive(b, km - dim) == a,
                  "recursive transform twice is not the identity");
        c.check_s(dual_distribution_explicit(dual_distribution_explicit(a, dim), km - dim) == a,
                  "explicit transform twice is not the identity");
    }
}

void prop_moment_identity(Ctx& c) {
    for (int t = 0; t < c.cfg.trials; ++t) {
        FieldSpecPtr fp = gen::random_field(c.rng, c.cfg.max_q);
        auto [k, m] = random_shape(c.rng, c.cfg.max_dim);
        const int dim = random_balanced_dim(c.rng, fp->cardinality(), k * m, 1u << 14);
        DelsarteCode code = gen::random_code(c.rng, *fp, k, m, dim);
        RankDistribution a = rank_distribution(code, c.cfg.enum_budget);
        RankDistribution b = rank_distribution(dual(code), c.cfg.enum_budget);
        const Int size_c = code.cardinality();
        const Int size_d = dual(code).cardinality();
        for (int nu = 0; nu <= std::min(k, m); ++nu) {
            c.check(Rat(moment_lhs(a, nu)) == moment_rhs(b, size_c, nu), [&] {
                return "moment identity fails at nu=" + std::to_string(nu) + " " +
                       shape_tag(fp->cardinality(), k, m) + " dim=" + std::to_string(dim);
            });
            c.check(Rat(moment_lhs(b, nu)) == moment_rhs(a, size_d, nu), [&] {
                return "reverse moment identity fails at nu=" + std::to_string(nu);
            });
        }
    }
}

void prop_mrd_duality(Ctx& c) {
    for (std::uint32_t q : {2u, 3u}) {
        FieldSpecPtr fp = FieldSpec::get(q, 1);
        for (int m = 1; m <= 3; ++m)
            for (int k = 1; k <= m; ++k) {
                ExtensionSpecPtr ep = ExtensionSpec::get(fp, static_cast<unsigned>(m));
                FieldBasis g = FieldBasis::power_basis(*ep);
                for (int d = 1; d <= k; ++d) {
                    DelsarteCode e = expand_code(evaluation_code(*ep, k, d), g);
                    c.check(is_mrd(e, c.cfg.enum_budget), [&] {
                        return "evaluation expansion not MRD at " + shape_tag(q, k, m) +
                               " d=" + std::to_string(d);
                    });
                    c.check(is_mrd(dual(e), c.cfg.enum_budget), [&] {
                        return "dual of MRD not MRD at " + shape_tag(q, k, m) +
                               " d=" + std::to_string(d);
                    });
                }
                c.check_s(is_mrd(DelsarteCode::zero_code(*fp, k, m)), "zero code not MRD");
                c.check_s(is_mrd(DelsarteCode::full_code(*fp, k, m)), "full space not MRD");
            }
    }
    for (int t = 0; t < c.cfg.trials; ++t) {
        FieldSpecPtr fp;
        DelsarteCode code = draw_code(c, fp);
        if (code.dim() > 0 && is_mrd(code, c.cfg.enum_budget))
            c.check_s(is_mrd(dual(code), c.cfg.enum_budget), "dual of a random MRD code not MRD");
    }
}

void prop_anticode_duality(Ctx& c) {
    for (int t = 0; t < c.cfg.trials; ++t) {
        FieldSpecPtr fp;
        DelsarteCode code = draw_code(c, fp);
        c.check(is_optimal_anticode(code, c.cfg.enum_budget) ==
                    is_optimal_anticode(dual(code), c.cfg.enum_budget),
                [&] {
                    return "anticode duality fails at " +
                           shape_tag(code.field().cardinality(), code.k(), code.m()) +
                           " dim=" + std::to_string(code.dim());
                });
    }
}

void prop_minrk_dual_bound(Ctx& c) {
    for (int t = 0; t < c.cfg.trials * 2; ++t) {
        FieldSpecPtr fp = gen::random_field(c.rng, c.cfg.max_q);
        auto [k, m] = random_shape(c.rng, c.cfg.max_dim);
        const int km = k * m;
        if (km < 2) continue;
        const int dim = 1 + static_cast<int>(below(c.rng, static_cast<std::uint64_t>(km - 1)));
        DelsarteCode code = gen::random_code(c.rng, *fp, k, m, dim);
        const int lo = std::min(k, m);
        const int d = min_rank(code, c.cfg.enum_budget);
        const int dd = min_rank(dual(code), c.cfg.enum_budget);
        c.check(dd <= lo - d + 2, [&] {
            return "minrk dual bound fails at " + shape_tag(fp->cardinality(), k, m) +
                   " dim=" + std::to_string(dim);
        });
        c.check((dd == lo - d + 2) == is_mrd(code, c.cfg.enum_budget), [&] {
            return "minrk dual equality mismatch at " + shape_tag(fp->cardinality(), k, m) +
                   " dim=" + std::to_string(dim);
        });
    }
}

void prop_minrk_vs_dual_maxrk(Ctx& c) {
    for (int t = 0; t < c.cfg.trials * 2; ++t) {
        FieldSpecPtr fp = gen::random_field(c.rng, c.cfg.max_q);
        auto [k, m] = random_shape(c.rng, c.cfg.max_dim);
        const int km = k * m;
        const int dim = 1 + static_cast<int>(below(c.rng, static_cast<std::uint64_t>(km)));
        DelsarteCode code = gen::random_code(c.rng, *fp, k, m, dim);
        c.check(min_rank(code, c.cfg.enum_budget) <=
                    max_rank(dual(code), c.cfg.enum_budget) + 1,
                [&] {
                    return "minrk(C) > maxrk(C-dual)+1 at " + shape_tag(fp->cardinality(), k, m) +
                           " dim=" + std::to_string(dim);
                });
    }
}

void prop_maxrk_dual_bound(Ctx& c) {
    for (int t = 0; t < c.cfg.trials * 2; ++t) {
        FieldSpecPtr fp;
        DelsarteCode code = draw_code(c, fp);
        const int lo = std::min(code.k(), code.m());
        const int a = max_rank(code, c.cfg.enum_budget);
        const int b = max_rank(dual(code), c.cfg.enum_budget);
        c.check_s(a >= lo - b, "maxrk(C) < min(k,m) - maxrk(C-dual)");
        c.check_s((a == lo - b) == is_optimal_anticode(code, c.cfg.enum_budget),
                  "maxrk equality does not match the anticode predicate");
    }
}

DelsarteCode scramble(Rng& rng, const DelsarteCode& c) {
    MatrixFq p = gen::random_invertible(rng, c.field(), c.k());
    MatrixFq q = gen::random_invertible(rng, c.field(), c.m());
    std::vector<MatrixFq> gens;
    gens.reserve(c.generators().size());
    for (const auto& g : c.generators()) gens.push_back(p * g * q);
    return DelsarteCode::from_generators(c.field(), c.k(), c.m(), gens);
}

void prop_anticode_criterion(Ctx& c) {
    for (int t = 0; t < c.cfg.trials; ++t) {
        FieldSpecPtr fp = gen::random_field(c.rng, c.cfg.max_q);
        const int k = 2 + static_cast<int>(below(c.rng, 2));
        const int m = k + static_cast<int>(below(c.rng, 2));
        const int hi = std::max(k, m);
        const int d = 1 + static_cast<int>(below(c.rng, static_cast<std::uint64_t>(std::min(k, m) - 1)));
        // a genuine optimal anticode, scrambled
        DelsarteCode anticode =
            scramble(c.rng, mat_u_code(gen::random_subspace(c.rng, *fp, k, d), m));
        // a code of the right dimension that is almost surely not one
        DelsarteCode other = gen::random_code(c.rng, *fp, k, m, hi * d);
        // The sampled test is one-sided: an anticode can never hit a sampled MRD
        // code nontrivially, while a miss on every sample is only evidence.
        for (const DelsarteCode& code : {anticode, other}) {
            const bool predicate = is_optimal_anticode(code, c.cfg.enum_budget);
            const bool sampled = sampled_anticode_criterion(code, 64, c.rng());
            c.check(!predicate || sampled, [&] {
                return "an optimal anticode failed the sampled intersection test at " +
                       shape_tag(fp->cardinality(), k, m) + " dim=" + std::to_string(code.dim());
            });
        }
        c.check_s(sampled_anticode_criterion(anticode, 64, c.rng()),
                  "a scrambled Mat_U anticode failed the sampled intersection test");
    }
}

void prop_anticode_construction(Ctx& c) {
    for (std::uint32_t q : {2u, 3u}) {
        FieldSpecPtr fp = FieldSpec::get(q, 1);
        for (int k = 1; k <= 3; ++k)
            for (int m = k; m <= 3; ++m)
                for (int d = 0; d <= k; ++d) {
                    VectorSubspace u = gen::random_subspace(c.rng, *fp, k, d);
                    DelsarteCode code = mat_u_code(u, m);
                    c.check(is_optimal_anticode(code, c.cfg.enum_budget), [&] {
                        return "Mat_U is not an optimal anticode at " + shape_tag(q, k, m) +
                               " d=" + std::to_string(d);
                    });
                    c.check(is_optimal_anticode(dual(code), c.cfg.enum_budget), [&] {
                        return "dual of Mat_U is not an optimal anticode at " +
                               shape_tag(q, k, m) + " d=" + std::to_string(d);
                    });
                }
    }
}

// ---------------------------------------------------------------------------
// gabidulin properties

ExtensionSpecPtr draw_ext(Ctx& c, std::uint64_t max_card, unsigned max_m = 4) {
    for (;;) {
        FieldSpecPtr fp = gen::random_field(c.rng, c.cfg.max_q);
        const unsigned m = 2 + static_cast<unsigned>(below(c.rng, max_m - 1));
        std::uint64_t card = 1;
        bool fits = true;
        for (unsigned i = 0; i < m; ++i) {
            card *= fp->cardinality();
            if (card > max_card) {
                fits = false;
                break;
            }
        }
        if (fits) return ExtensionSpec::get(fp, m);
    }
}

void prop_vector_rank_expansion(Ctx& c) {
    for (int t = 0; t < c.cfg.trials * 2; ++t) {
        ExtensionSpecPtr ep = draw_ext(c, 81);
        const int k = 1 + static_cast<int>(below(c.rng, 4));
        const auto v = gen::random_ext_vector(c.rng, *ep, k);
        FieldBasis g = gen::random_basis(c.rng, *ep);
        c.check_s(vector_rank(v) == rank(expand_matrix(v, g)),
                  "vector rank differs from expansion rank");
    }
}

void prop_expansion_distribution(Ctx& c) {
    for (int t = 0; t < c.cfg.trials / 2 + 1; ++t) {
        ExtensionSpecPtr ep = draw_ext(c, 81, 3);
        const int k = 1 + static_cast<int>(below(c.rng, 3));
        const int dim = static_cast<int>(below(c.rng, static_cast<std::uint64_t>(std::min(k, 2)) + 1));
        GabidulinCode code = gen::random_gabidulin(c.rng, *ep, k, dim);
        RankDistribution direct = gabidulin_rank_distribution(code, c.cfg.enum_budget);
        for (int i = 0; i < 3; ++i) {
            FieldBasis g = gen::random_basis(c.rng, *ep);
            RankDistribution expanded =
                rank_distribution(expand_code(code, g), c.cfg.enum_budget);
            c.check(expanded == direct, [&] {
                return "expansion distribution " + dist_str(expanded) +
                       " differs from direct distribution " + dist_str(direct);
            });
        }
    }
}

void prop_orthobasis_duality(Ctx& c) {
    for (int t = 0; t < c.cfg.trials; ++t) {
        ExtensionSpecPtr ep = draw_ext(c, 81);
        const int k = 1 + static_cast<int>(below(c.rng, std::min<std::uint64_t>(ep->degree(), 4)));
        const int dim = static_cast<int>(below(c.rng, static_cast<std::uint64_t>(k) + 1));
        GabidulinCode code = gen::random_gabidulin(c.rng, *ep, k, dim);
        FieldBasis g = gen::random_basis(c.rng, *ep);
        c.check(check_orthobasis_duality(code, g), [&] {
            return "orthogonal-basis duality fails at q=" +
                   std::to_string(ep->base_cardinality()) + " m=" + std::to_string(ep->degree()) +
                   " k=" + std::to_string(k) + " dim=" + std::to_string(dim);
        });
    }
}

void prop_expansion_dimension(Ctx& c) {
    for (int t = 0; t < c.cfg.trials; ++t) {
        ExtensionSpecPtr ep = draw_ext(c, 81, 3);
        const int k = 1 + static_cast<int>(below(c.rng, 3));
        const int dim = static_cast<int>(below(c.rng, static_cast<std::uint64_t>(k) + 1));
        GabidulinCode code = gen::random_gabidulin(c.rng, *ep, k, dim);
        FieldBasis g = gen::random_basis(c.rng, *ep);
        DelsarteCode e = expand_code(code, g);
        c.check_s(e.dim() == static_cast<int>(ep->degree()) * dim,
                  "expansion dimension is not m*dim");
        // a random extension-linear combination expands into the Delsarte code
        std::vector<ExtElement> word(static_cast<std::size_t>(k), ep->zero());
        for (const auto& gvec : code.generators()) {
            const ExtElement coeff = gen::random_ext_element(c.rng, *ep);
            for (int i = 0; i < k; ++i)
                word[static_cast<std::size_t>(i)] =
                    word[static_cast<std::size_t>(i)] + coeff * gvec[static_cast<std::size_t>(i)];
        }
        c.check_s(e.contains(expand_matrix(word, g)), "expanded codeword not in expansion");
    }
}

void prop_evaluation_mrd(Ctx& c) {
    for (std::uint32_t q : {2u, 3u}) {
        FieldSpecPtr fp = FieldSpec::get(q, 1);
        for (int m = 1; m <= 3; ++m) {
            ExtensionSpecPtr ep = ExtensionSpec::get(fp, static_cast<unsigned>(m));
            FieldBasis g = FieldBasis::power_basis(*ep);
            for (int k = 1; k <= m; ++k)
                for (int d = 1; d <= k; ++d) {
                    GabidulinCode code = evaluation_code(*ep, k, d);
                    c.check_s(code.dim() == k - d + 1, "evaluation code dimension is wrong");
                    DelsarteCode e = expand_code(code, g);
                    c.check(min_rank(e, c.cfg.enum_budget) == d, [&] {
                        return "evaluation expansion minrk != d at " + shape_tag(q, k, m) +
                               " d=" + std::to_string(d);
                    });
                    c.check_s(is_mrd(e, c.cfg.enum_budget), "evaluation expansion is not MRD");
                    RankDistribution got = rank_distribution(e, c.cfg.enum_budget);
                    RankDistribution want = mrd_distribution(q, k, m, d);
                    c.check(got == want, [&] {
                        return "MRD distribution mismatch at " + shape_tag(q, k, m) + " d=" +
                               std::to_string(d) + ": " + dist_str(got) + " vs " + dist_str(want);
                    });
                    for (int l = 0; l <= k - d; ++l)
                        c.check_s(got.at(d + l) > 0, "MRD spectrum has a hole");
                }
        }
    }
}

void prop_subspace_poly_roots(Ctx& c) {
    for (int t = 0; t < c.cfg.trials; ++t) {
        ExtensionSpecPtr ep = draw_ext(c, 81);
        const unsigned m = ep->degree();
        const int dim = static_cast<int>(below(c.rng, std::min(m, 3u) + 1));
        // draw an independent set by rejection on the F_q-span
        std::vector<ExtElement> basis;
        std::vector<std::vector<FieldElement>> coords;
        while (static_cast<int>(basis.size()) < dim) {
            ExtElement a = gen::random_ext_element(c.rng, *ep);
            auto cs = coords;
            cs.push_back(a.coords());
            if (linalg::rank_of(cs) == static_cast<int>(basis.size()) + 1) {
                basis.push_back(a);
                coords.push_back(a.coords());
            }
        }
        LinearizedPoly p = subspace_polynomial(*ep, basis);
        c.check_s(p.q_degree() == dim, "subspace polynomial q-degree is not dim(U)");
        c.check_s(p.coeffs().back().is_one(), "subspace polynomial is not monic");
        VectorSubspace u = VectorSubspace::span(ep->base(), static_cast<int>(m), coords);
        c.check_s(roots_space(p, c.cfg.enum_budget) == u,
                  "roots of the subspace polynomial are not U");
    }
}

void prop_subspace_poly_product(Ctx& c) {
    for (int t = 0; t < c.cfg.trials; ++t) {
        ExtensionSpecPtr ep = draw_ext(c, 64);
        const unsigned m = ep->degree();
        const std::uint32_t q = ep->base_cardinality();
        int dim_cap = 0;
        std::uint64_t card = 1;
        while (card * q <= 64 && dim_cap < static_cast<int>(m)) {
            card *= q;
            ++dim_cap;
        }
        const int dim = static_cast<int>(below(c.rng, static_cast<std::uint64_t>(dim_cap) + 1));
        std::vector<ExtElement> basis;
        std::vector<std::vector<FieldElement>> coords;
        while (static_cast<int>(basis.size()) < dim) {
            ExtElement a = gen::random_ext_element(c.rng, *ep);
            auto cs = coords;
            cs.push_back(a.coords());
            if (linalg::rank_of(cs) == static_cast<int>(basis.size()) + 1) {
                basis.push_back(a);
                coords.push_back(a.coords());
            }
        }
        LinearizedPoly p = subspace_polynomial(*ep, basis);
        // enumerate U itself
        std::vector<ExtElement> u_elems;
        const std::uint64_t count = [&] {
            std::uint64_t n = 1;
            for (int i = 0; i < dim; ++i) n *= q;
            return n;
        }();
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            ExtElement e = ep->zero();
            std::uint64_t rest = idx;
            for (int i = 0; i < dim; ++i) {
                const std::uint32_t digit = static_cast<std::uint32_t>(rest % q);
                rest /= q;
                e = e + ep->base().element(digit) * basis[static_cast<std::size_t>(i)];
            }
            u_elems.push_back(e);
        }
        const std::uint64_t qm = ep->cardinality_u64();
        for (std::uint64_t v = 0; v < qm; ++v) {
            const ExtElement a = ep->element(v);
            ExtElement prod = ep->one();
            for (const auto& beta : u_elems) prod = prod * (a - beta);
            c.check_s(linearized_eval(p, a) == prod,
                      "composition recurrence differs from the literal product");
        }
    }
}

void prop_linearized_linear(Ctx& c) {
    for (int t = 0; t < c.cfg.trials * 2; ++t) {
        ExtensionSpecPtr ep = draw_ext(c, 81);
        const int deg = static_cast<int>(below(c.rng, 3));
        std::vector<ExtElement> coeffs;
        for (int i = 0; i <= deg; ++i) coeffs.push_back(gen::random_ext_element(c.rng, *ep));
        LinearizedPoly p(*ep, coeffs);
        const ExtElement a = gen::random_ext_element(c.rng, *ep);
        const ExtElement b = gen::random_ext_element(c.rng, *ep);
        const FieldElement s = ep->base().element(
            static_cast<std::uint32_t>(below(c.rng, ep->base_cardinality())));
        c.check_s(linearized_eval(p, a + s * b) ==
                      linearized_eval(p, a) + s * linearized_eval(p, b),
                  "linearized polynomial is not F_q-linear");
    }
}

// ---------------------------------------------------------------------------
// qcalc properties

void prop_qbinom_subspace_count(Ctx& c) {
    for (std::uint32_t q : {2u, 3u}) {
        FieldSpecPtr fp = FieldSpec::get(q, 1);
        for (int s = 0; s <= 4; ++s)
            for (int t = 0; t <= s; ++t) {
                const Int want = q_binomial(q, s, t);
                const Int got = s == 0 && t == 0
                                    ? Int(1)
                                    : Int(subspaces_of_dim(*fp, s, t).size());
                c.check(got == want, [&] {
                    std::ostringstream os;
                    os << "subspace count " << got << " != q-binomial " << want << " at q=" << q
                       << " s=" << s << " t=" << t;
                    return os.str();
                });
            }
    }
}

void prop_qbinom_product(Ctx& c) {
    for (std::uint32_t q : {2u, 3u, 4u, 5u})
        for (int s = -2; s <= 12; ++s)
            for (int t = -2; t <= 12; ++t) {
                const Int got = q_binomial(q, s, t);
                Int want;
                if (s < 0 || t < 0 || t > s)
                    want = 0;
                else if (t == 0)
                    want = 1;
                else {
                    // exact rational-free evaluation of the product formula
                    Rat r(1);
                    for (int i = 1; i <= t; ++i)
                        r *= Rat(pow_q(q, static_cast<unsigned>(s - i + 1)) - 1,
                                 pow_q(q, static_cast<unsigned>(i)) - 1);
                    c.check_s(boost::multiprecision::denominator(r) == 1,
                              "q-binomial product is not an integer");
                    want = boost::multiprecision::numerator(r);
                }
                c.check(got == want, [&] {
                    std::ostringstream os;
                    os << "q-binomial mismatch at q=" << q << " s=" << s << " t=" << t << ": "
                       << got << " vs " << want;
                    return os.str();
                });
                if (s >= 0 && t >= 0 && t <= s)
                    c.check_s(got == q_binomial(q, s, s - t), "q-binomial symmetry fails");
            }
}

void prop_qbinom_alternating(Ctx& c) {
    for (std::uint32_t q : {2u, 3u, 4u, 5u})
        for (int n = 0; n <= 12; ++n) {
            Int acc = 0;
            for (int r = 0; r <= n; ++r) {
                Int term = q_binomial(q, n, r) * pow_q(q, static_cast<unsigned>(r * (r - 1) / 2));
                if (r % 2) term = -term;
                acc += term;
            }
            c.check(acc == (n == 0 ? 1 : 0), [&] {
                std::ostringstream os;
                os << "alternating q-binomial sum is " << acc << " at q=" << q << " n=" << n;
                return os.str();
            });
        }
}

void prop_mrd_distribution_sanity(Ctx& c) {
    for (std::uint32_t q : {2u, 3u})
        for (int m = 1; m <= 4; ++m)
            for (int k = 1; k <= m; ++k)
                for (int d = 1; d <= k; ++d) {
                    RankDistribution a = mrd_distribution(q, k, m, d);
                    c.check_s(a.at(0) == 1, "MRD distribution A_0 != 1");
                    for (int i = 1; i < d; ++i)
                        c.check_s(a.at(i) == 0, "MRD distribution nonzero below minrk");
                    for (int i = d; i <= k; ++i)
                        c.check_s(a.at(i) > 0, "MRD distribution has a hole");
                    c.check_s(a.total() == pow_q(q, static_cast<unsigned>(m * (k - d + 1))),
                              "MRD distribution total is wrong");
                    const int dim = m * (k - d + 1);
                    RankDistribution b = dual_distribution_recursive(a, dim);
                    RankDistribution want = [&] {
                        if (d > 1) return mrd_distribution(q, k, m, k - d + 2);
                        std::vector<Int> counts{Int(1)};
                        return RankDistribution(q, k, m, counts);
                    }();
                    c.check_s(b == want, "dual of the MRD distribution is wrong");
                }
}

// ---------------------------------------------------------------------------
// counting properties

void prop_count_three_routes(Ctx& c) {
    for (std::uint32_t q : {2u, 3u})
        for (int k = 1; k <= 3; ++k)
            for (int m = k; m <= 3; ++m) {
                CensusTable census = census_bruteforce(q, k, m);
                for (int r = 0; r <= k; ++r) {
                    c.check_s(census.rank_count(r) == count_rank(q, k, m, r),
                              "census rank marginal differs from the closed form");
                    for (int h = 1; h <= k; ++h) {
                        const Int rec = count_rank_htrace_recursive(q, k, m, r, h);
                        const Int exp = count_rank_htrace_explicit(q, k, m, r, h);
                        const Int oracle = census.count(r, h, 0);
                        c.check(rec == oracle && exp == oracle, [&] {
                            std::ostringstream os;
                            os << "zero-trace count mismatch at " << shape_tag(q, k, m)
                               << " r=" << r << " h=" << h << ": recursive " << rec
                               << ", explicit " << exp << ", census " << oracle;
                            return os.str();
                        });
                        for (std::uint32_t v = 1; v < q; ++v)
                            c.check_s(census.count(r, h, v) ==
                                          count_rank_trace_value(q, k, m, r, h, v),
                                      "nonzero-trace bucket differs from the census");
                    }
                }
            }
}

void prop_count_zero_trace_total(Ctx& c) {
    for (std::uint32_t q : {2u, 3u, 4u, 5u})
        for (int k = 1; k <= 5; ++k)
            for (int m = k; m <= 5; ++m) {
                Int rank_total = 0;
                for (int r = 0; r <= k; ++r) rank_total += count_rank(q, k, m, r);
                c.check_s(rank_total == pow_q(q, static_cast<unsigned>(k * m)),
                          "rank counts do not sum to q^{km}");
                for (int h = 1; h <= k; ++h) {
                    Int total = 0;
                    for (int r = 0; r <= k; ++r) total += count_rank_htrace_recursive(q, k, m, r, h);
                    c.check(total == pow_q(q, static_cast<unsigned>(k * m - 1)), [&] {
                        std::ostringstream os;
                        os << "zero-trace total " << total << " != q^(km-1) at " << shape_tag(q, k, m)
                           << " h=" << h;
                        return os.str();
                    });
                }
            }
}

void prop_count_partition(Ctx& c) {
    for (std::uint32_t q : {2u, 3u, 4u})
        for (int k = 1; k <= 4; ++k)
            for (int m = k; m <= 4; ++m)
                for (int r = 0; r <= k; ++r)
                    for (int h = 1; h <= k; ++h) {
                        const Int whole = count_rank(q, k, m, r);
                        const Int zero = count_rank_htrace_recursive(q, k, m, r, h);
                        const Int each = count_rank_trace_value(q, k, m, r, h, 1);
                        c.check(whole == zero + Int(q - 1) * each, [&] {
                            std::ostringstream os;
                            os << "partition identity fails at " << shape_tag(q, k, m) << " r=" << r
                               << " h=" << h;
                            return os.str();
                        });
                    }
}

void prop_census_marginals(Ctx& c) {
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const int cap = q == 2 ? 4 : (q == 3 ? 3 : 2);
        for (int k = 1; k <= cap; ++k)
            for (int m = k; m <= cap; ++m) {
                CensusTable census = census_bruteforce(q, k, m);
                Int total = 0;
                for (int r = 0; r <= k; ++r) {
                    total += census.rank_count(r);
                    c.check_s(census.rank_count(r) == count_rank(q, k, m, r),
                              "census marginal differs from the closed form");
                }
                c.check_s(total == pow_q(q, static_cast<unsigned>(k * m)),
                          "census total is not q^{km}");
            }
    }
}

// ---------------------------------------------------------------------------
// codefile properties

void prop_element_literals(Ctx& c) {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u, 16u, 25u}) {
        std::uint32_t p = 2;
        while (q % p != 0) ++p;
        unsigned n = 0;
        std::uint32_t t = q;
        while (t > 1) {
            t /= p;
            ++n;
        }
        FieldSpecPtr fp = FieldSpec::get(p, n);
        for (std::uint32_t v = 0; v < q; ++v) {
            const FieldElement a = fp->element(v);
            c.check(parse_element(element_text(a), *fp) == a, [&] {
                return "field literal does not round trip: '" + element_text(a) + "' in " +
                       field_spec_text(*fp);
            });
        }
        c.check_s(parse_field_spec(field_spec_text(*fp)).get() == fp.get(),
                  "field spec text does not round trip");
    }
    for (int t = 0; t < c.cfg.trials * 2; ++t) {
        ExtensionSpecPtr ep = draw_ext(c, 256);
        const ExtElement a = gen::random_ext_element(c.rng, *ep);
        c.check(parse_ext_element(ext_element_text(a), *ep) == a, [&] {
            return "extension literal does not round trip: '" + ext_element_text(a) + "'";
        });
        c.check_s(parse_ext_spec(ext_spec_text(*ep), ep->base_ptr()).get() == ep.get(),
                  "extension spec text does not round trip");
    }
}

void prop_code_file_roundtrip(Ctx& c) {
    for (int t = 0; t < c.cfg.trials; ++t) {
        FieldSpecPtr fp;
        DelsarteCode code = draw_code(c, fp);
        std::ostringstream os;
        write_delsarte_file(os, code);
        CodeFile file = read_code_file(os.str());
        c.check_s(file.kind == CodeFile::Kind::Delsarte && file.delsarte && *file.delsarte == code,
                  "delsarte file does not round trip");
        std::ostringstream os2;
        write_delsarte_file(os2, *file.delsarte);
        c.check_s(os.str() == os2.str(), "delsarte file write is not canonical-stable");
    }
    for (int t = 0; t < c.cfg.trials; ++t) {
        ExtensionSpecPtr ep = draw_ext(c, 81, 3);
        const int k = 1 + static_cast<int>(below(c.rng, 3));
        const int dim = static_cast<int>(below(c.rng, static_cast<std::uint64_t>(k) + 1));
        GabidulinCode code = gen::random_gabidulin(c.rng, *ep, k, dim);
        std::optional<FieldBasis> basis;
        if (below(c.rng, 2)) basis.emplace(gen::random_basis(c.rng, *ep));
        std::ostringstream os;
        write_gabidulin_file(os, code, basis);
        CodeFile file = read_code_file(os.str());
        c.check_s(file.kind == CodeFile::Kind::Gabidulin && file.gabidulin &&
                      *file.gabidulin == code,
                  "gabidulin file does not round trip");
        c.check_s(file.basis.has_value() == basis.has_value() &&
                      (!basis || file.basis->elements() == basis->elements()),
                  "gabidulin basis does not round trip");
        std::ostringstream os2;
        write_gabidulin_file(os2, *file.gabidulin, file.basis);
        c.check_s(os.str() == os2.str(), "gabidulin file write is not canonical-stable");
    }
}

using PropFn = void (*)(Ctx&);

const std::vector<std::pair<const char*, PropFn>>& registry() {
    static const std::vector<std::pair<const char*, PropFn>> props = {
        {"field-mul-table-vs-schoolbook", prop_field_mul_tables},
        {"field-axioms-sampled", prop_field_axioms},
        {"ext-frobenius-linear", prop_ext_frobenius},
        {"ext-trace-properties", prop_ext_trace},
        {"dual-basis-gram", prop_dual_basis},
        {"basis-coords-roundtrip", prop_coords_roundtrip},
        {"matrix-rank-transpose", prop_rank_transpose},
        {"trace-product-form", prop_trace_product},
        {"subspace-dual-involution", prop_subspace_dual},
        {"mat-u-code-dimension", prop_mat_u_code},
        {"code-dual-involution", prop_code_dual_involution},
        {"code-duality-lattice", prop_code_duality_lattice},
        {"code-transpose-dual", prop_code_transpose_dual},
        {"matu-cardinality-identity", prop_matu_cardinality},
        {"rank-weight-double-count", prop_double_count},
        {"transform-vs-enumeration", prop_transform_vs_enum},
        {"transform-involution", prop_transform_involution},
        {"moment-identity", prop_moment_identity},
        {"mrd-duality", prop_mrd_duality},
        {"anticode-duality", prop_anticode_duality},
        {"minrk-dual-bound", prop_minrk_dual_bound},
        {"minrk-vs-dual-maxrk", prop_minrk_vs_dual_maxrk},
        {"maxrk-dual-bound", prop_maxrk_dual_bound},
        {"anticode-criterion-agreement", prop_anticode_criterion},
        {"anticode-construction", prop_anticode_construction},
        {"vector-rank-expansion", prop_vector_rank_expansion},
        {"expansion-rank-distribution", prop_expansion_distribution},
        {"orthobasis-duality", prop_orthobasis_duality},
        {"expansion-dimension", prop_expansion_dimension},
        {"evaluation-mrd-family", prop_evaluation_mrd},
        {"subspace-poly-roots", prop_subspace_poly_roots},
        {"subspace-poly-vs-product", prop_subspace_poly_product},
        {"linearized-eval-linear", prop_linearized_linear},
        {"qbinomial-subspace-count", prop_qbinom_subspace_count},
        {"qbinomial-product-formula", prop_qbinom_product},
        {"qbinomial-alternating-sum", prop_qbinom_alternating},
        {"mrd-distribution-sanity", prop_mrd_distribution_sanity},
        {"count-three-routes", prop_count_three_routes},
        {"count-zero-trace-total", prop_count_zero_trace_total},
        {"count-partition-identity", prop_count_partition},
        {"census-marginal-closed-form", prop_census_marginals},
        {"element-literal-roundtrip", prop_element_literals},
        {"code-file-roundtrip", prop_code_file_roundtrip},
    };
    return props;
}

}  // namespace

std::vector<std::string> verification_property_names() {
    std::vector<std::string> names;
    names.reserve(registry().size());
    for (const auto& [name, fn] : registry()) names.emplace_back(name);
    return names;
}

std::vector<PropertyResult> run_verification(const VerifyConfig& cfg) {
    if (!cfg.only.empty()) {
        bool known = false;
        for (const auto& [name, fn] : registry())
            if (cfg.only == name) known = true;
        if (!known) throw domain_error("unknown property '" + cfg.only + "'");
    }
    std::vector<PropertyResult> results;
    for (const auto& [name, fn] : registry()) {
        if (!cfg.only.empty() && cfg.only != name) continue;
        Ctx ctx{cfg, Rng(cfg.seed ^ fnv1a(name))};
        fn(ctx);
        PropertyResult r;
        r.name = name;
        r.pass = ctx.ok;
        r.detail = ctx.ok ? std::to_string(ctx.cases) + " checks" : ctx.detail;
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace rmc
