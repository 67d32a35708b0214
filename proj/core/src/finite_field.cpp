#include "rmc/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "poly_util.hpp"
#include "rmc/linalg.hpp"

namespace rmc {

namespace {

bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> prime_factors_u64(std::uint64_t n) {
    std::vector<std::uint32_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(static_cast<std::uint32_t>(d));
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(static_cast<std::uint32_t>(n));
    return fs;
}

// Registries interning specs by structure. A recursive mutex: constructing
// GF(p^n) interns GF(p) for the irreducibility check.
std::recursive_mutex& registry_mutex() {
    static std::recursive_mutex m;
    return m;
}

using FieldKey = std::tuple<std::uint32_t, unsigned, std::vector<std::uint32_t>>;
std::map<FieldKey, FieldSpecPtr>& field_registry() {
    static std::map<FieldKey, FieldSpecPtr> r;
    return r;
}

using ExtKey = std::tuple<const FieldSpec*, unsigned, std::vector<std::uint32_t>>;
std::map<ExtKey, ExtensionSpecPtr>& ext_registry() {
    static std::map<ExtKey, ExtensionSpecPtr> r;
    return r;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned n) {
    if (n == 1) return {0, 1};  // x
    FieldSpecPtr base = FieldSpec::get(p, 1);
    // Candidates x^n + c_{n-1} x^{n-1} + ... + c_0 ordered by the tuple
    // (c_{n-1},...,c_0); encoding the tuple as a base-p integer with digit i
    // of weight p^i makes numeric order coincide with that order.
    for (std::uint64_t v = 0;; ++v) {
        std::vector<FieldElement> f(n + 1, base->zero());
        std::vector<std::uint32_t> digits(n + 1, 0);
        std::uint64_t t = v;
        for (unsigned i = 0; i < n; ++i) {
            digits[i] = static_cast<std::uint32_t>(t % p);
            f[i] = base->element(digits[i]);
            t /= p;
        }
        digits[n] = 1;
        f[n] = base->one();
        if (polyu::irreducible(f, Int(p), base->zero(), base->one())) return digits;
    }
}

std::vector<FieldElement> default_ext_modulus(const FieldSpecPtr& base, unsigned m) {
    if (m == 1) return {base->zero(), base->one()};  // x
    const std::uint64_t q = base->cardinality();
    for (std::uint64_t v = 0;; ++v) {
        std::vector<FieldElement> f(m + 1, base->zero());
        std::uint64_t t = v;
        for (unsigned i = 0; i < m; ++i) {
            f[i] = base->element(static_cast<std::uint32_t>(t % q));
            t /= q;
        }
        f[m] = base->one();
        if (polyu::irreducible(f, Int(q), base->zero(), base->one())) return f;
    }
}

std::uint32_t pow_schoolbook(const FieldSpec& f, std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e > 0) {
        if (e & 1) r = f.mul_schoolbook_v(r, a);
        a = f.mul_schoolbook_v(a, a);
        e >>= 1;
    }
    return r;
}

}  // namespace

FieldSpec::FieldSpec(std::uint32_t p, unsigned n, std::vector<std::uint32_t> modulus)
    : p_(p), n_(n), mod_(std::move(modulus)) {
    if (!is_prime_u32(p)) throw domain_error("characteristic must be a prime");
    if (n < 1) throw domain_error("field degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) {
        q *= p;
        if (q > kMaxFieldCardinality)
            throw domain_error("field cardinality exceeds the 2^16 budget");
    }
    q_ = static_cast<std::uint32_t>(q);
    if (mod_.size() != n + 1) throw domain_error("modulus degree must equal the field degree");
    for (std::uint32_t c : mod_)
        if (c >= p) throw domain_error("modulus coefficient out of range [0,p)");
    if (mod_[n] != 1) throw domain_error("modulus must be monic");
    if (n > 1) {
        FieldSpecPtr base = FieldSpec::get(p, 1);
        std::vector<FieldElement> f;
        f.reserve(n + 1);
        for (std::uint32_t c : mod_) f.push_back(base->element(c));
        if (!polyu::irreducible(f, Int(p), base->zero(), base->one()))
            throw domain_error("modulus polynomial is reducible");
    }
    // Find a primitive element and lay out the log/exp tables.
    if (q_ == 2) {
        gen_ = 1;
    } else {
        const auto factors = prime_factors_u64(q_ - 1);
        for (std::uint32_t cand = 2;; ++cand) {
            if (cand >= q_) throw error("no primitive element found (internal)");
            bool ok = true;
            for (std::uint32_t f : factors)
                if (pow_schoolbook(*this, cand, (q_ - 1) / f) == 1) {
                    ok = false;
                    break;
                }
            if (ok) {
                gen_ = cand;
                break;
            }
        }
    }
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = mul_schoolbook_v(cur, gen_);
    }
    if (cur != 1) throw error("log table construction failed (internal)");
}

FieldSpecPtr FieldSpec::get(std::uint32_t p, unsigned n,
                            const std::vector<std::uint32_t>& modulus) {
    std::lock_guard<std::recursive_mutex> lock(registry_mutex());
    FieldKey key{p, n, modulus};
    auto it = field_registry().find(key);
    if (it != field_registry().end()) return it->second;
    FieldSpecPtr spec(new FieldSpec(p, n, modulus));
    field_registry().emplace(std::move(key), spec);
    return spec;
}

FieldSpecPtr FieldSpec::get(std::uint32_t p, unsigned n) {
    if (!is_prime_u32(p)) throw domain_error("characteristic must be a prime");
    if (n < 1) throw domain_error("field degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) {
        q *= p;
        if (q > kMaxFieldCardinality)
            throw domain_error("field cardinality exceeds the 2^16 budget");
    }
    return get(p, n, default_modulus(p, n));
}

FieldElement FieldSpec::element(std::uint32_t packed) const {
    if (packed >= q_) throw domain_error("packed element value out of range");
    return FieldElement(this, packed);
}

FieldElement FieldSpec::from_coeffs(const std::vector<std::uint32_t>& digits) const {
    if (digits.size() > n_) throw domain_error("too many coefficients for this field");
    std::uint32_t v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) v = v * p_ + digits[i] % p_;
    return FieldElement(this, v);
}

std::uint32_t FieldSpec::add_v(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (n_ == 1) {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t r = 0, w = 1;
    for (unsigned i = 0; i < n_; ++i) {
        std::uint32_t da = a % p_, db = b % p_;
        std::uint32_t s = da + db;
        if (s >= p_) s -= p_;
        r += s * w;
        a /= p_;
        b /= p_;
        w *= p_;
    }
    return r;
}

std::uint32_t FieldSpec::neg_v(std::uint32_t a) const {
    if (p_ == 2) return a;
    if (n_ == 1) return a == 0 ? 0 : p_ - a;
    std::uint32_t r = 0, w = 1;
    for (unsigned i = 0; i < n_; ++i) {
        std::uint32_t da = a % p_;
        r += (da == 0 ? 0 : p_ - da) * w;
        a /= p_;
        w *= p_;
    }
    return r;
}

std::uint32_t FieldSpec::sub_v(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    return add_v(a, neg_v(b));
}

std::uint32_t FieldSpec::mul_schoolbook_v(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (n_ == 1) return static_cast<std::uint32_t>(std::uint64_t(a) * b % p_);
    std::uint32_t da[16], db[16];
    for (unsigned i = 0; i < n_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    std::uint64_t acc[31] = {0};
    for (unsigned i = 0; i < n_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < n_; ++j) acc[i + j] += std::uint64_t(da[i]) * db[j];
    }
    // x^n = -(mod_[n-1] x^{n-1} + ... + mod_[0]) since the modulus is monic.
    for (int i = 2 * static_cast<int>(n_) - 2; i >= static_cast<int>(n_); --i) {
        std::uint64_t c = acc[i] % p_;
        acc[i] = 0;
        if (c == 0) continue;
        for (unsigned j = 0; j < n_; ++j) {
            std::uint32_t neg = mod_[j] == 0 ? 0 : p_ - mod_[j];
            acc[i - n_ + j] += c * neg;
        }
    }
    std::uint32_t r = 0, w = 1;
    for (unsigned j = 0; j < n_; ++j) {
        r += static_cast<std::uint32_t>(acc[j] % p_) * w;
        w *= p_;
    }
    return r;
}

std::uint32_t FieldSpec::inv_v(std::uint32_t a) const {
    if (a == 0) throw domain_error("division by zero in the field");
    std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

std::uint32_t FieldSpec::div_v(std::uint32_t a, std::uint32_t b) const {
    return mul_v(a, inv_v(b));
}

std::uint32_t FieldSpec::pow_v(std::uint32_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    std::uint64_t l = log_[a];
    return exp_[static_cast<std::uint32_t>(l * (e % (q_ - 1)) % (q_ - 1))];
}

// ---------------------------------------------------------------------------
// ExtensionSpec

namespace {

std::vector<std::uint32_t> packed_modulus(const std::vector<FieldElement>& mod) {
    std::vector<std::uint32_t> r;
    r.reserve(mod.size());
    for (const auto& c : mod) r.push_back(c.value());
    return r;
}

std::vector<FieldElement> to_poly(const ExtElement& a) {
    std::vector<FieldElement> f = a.coords();
    polyu::trim(f);
    return f;
}

}  // namespace

ExtensionSpec::ExtensionSpec(FieldSpecPtr base, unsigned m, std::vector<FieldElement> modulus)
    : base_(std::move(base)), m_(m), mod_(std::move(modulus)) {
    if (!base_) throw domain_error("extension needs a base field");
    if (m_ < 1) throw domain_error("extension degree must be at least 1");
    if (mod_.size() != m_ + 1)
        throw domain_error("extension modulus degree must equal the extension degree");
    for (const auto& c : mod_)
        if (c.field_ptr() != base_.get())
            throw field_mismatch_error("extension modulus coefficients must lie in the base field");
    if (!mod_[m_].is_one()) throw domain_error("extension modulus must be monic");
    if (m_ > 1 &&
        !polyu::irreducible(mod_, Int(base_->cardinality()), base_->zero(), base_->one()))
        throw domain_error("extension modulus is reducible over the base field");
}

ExtensionSpecPtr ExtensionSpec::get(const FieldSpecPtr& base, unsigned m,
                                    const std::vector<FieldElement>& modulus) {
    std::lock_guard<std::recursive_mutex> lock(registry_mutex());
    ExtKey key{base.get(), m, packed_modulus(modulus)};
    auto it = ext_registry().find(key);
    if (it != ext_registry().end()) return it->second;
    ExtensionSpecPtr spec(new ExtensionSpec(base, m, modulus));
    ext_registry().emplace(std::move(key), spec);
    return spec;
}

ExtensionSpecPtr ExtensionSpec::get(const FieldSpecPtr& base, unsigned m) {
    if (!base) throw domain_error("extension needs a base field");
    if (m < 1) throw domain_error("extension degree must be at least 1");
    return get(base, m, default_ext_modulus(base, m));
}

Int ExtensionSpec::cardinality() const { return pow_q(base_->cardinality(), m_); }

std::uint64_t ExtensionSpec::cardinality_u64() const {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < m_; ++i) {
        if (r > (std::uint64_t(1) << 62) / base_->cardinality())
            throw budget_error("extension field too large to enumerate");
        r *= base_->cardinality();
    }
    return r;
}

ExtElement ExtensionSpec::zero() const {
    return ExtElement(this, std::vector<FieldElement>(m_, base_->zero()));
}

ExtElement ExtensionSpec::one() const { return embed(base_->one()); }

ExtElement ExtensionSpec::root() const {
    if (m_ == 1) {
        // x = -c_0 in a degree-1 extension x + c_0.
        return ExtElement(this, {-mod_[0]});
    }
    std::vector<FieldElement> c(m_, base_->zero());
    c[1] = base_->one();
    return ExtElement(this, std::move(c));
}

ExtElement ExtensionSpec::embed(const FieldElement& c) const {
    if (c.field_ptr() != base_.get())
        throw field_mismatch_error("embed expects a base field element");
    std::vector<FieldElement> v(m_, base_->zero());
    v[0] = c;
    return ExtElement(this, std::move(v));
}

ExtElement ExtensionSpec::from_coords(std::vector<FieldElement> coords) const {
    if (coords.size() != m_) throw domain_error("coordinate vector has wrong length");
    for (const auto& c : coords)
        if (c.field_ptr() != base_.get())
            throw field_mismatch_error("coordinates must lie in the base field");
    return ExtElement(this, std::move(coords));
}

ExtElement ExtensionSpec::element(std::uint64_t index) const {
    const std::uint32_t q = base_->cardinality();
    std::vector<FieldElement> c(m_, base_->zero());
    for (unsigned i = 0; i < m_; ++i) {
        c[i] = base_->element(static_cast<std::uint32_t>(index % q));
        index /= q;
    }
    if (index != 0) throw domain_error("element index out of range");
    return ExtElement(this, std::move(c));
}

ExtElement ExtensionSpec::add(const ExtElement& a, const ExtElement& b) const {
    std::vector<FieldElement> c(m_, base_->zero());
    for (unsigned i = 0; i < m_; ++i) c[i] = a.coords_[i] + b.coords_[i];
    return ExtElement(this, std::move(c));
}

ExtElement ExtensionSpec::sub(const ExtElement& a, const ExtElement& b) const {
    std::vector<FieldElement> c(m_, base_->zero());
    for (unsigned i = 0; i < m_; ++i) c[i] = a.coords_[i] - b.coords_[i];
    return ExtElement(this, std::move(c));
}

ExtElement ExtensionSpec::neg(const ExtElement& a) const {
    std::vector<FieldElement> c(m_, base_->zero());
    for (unsigned i = 0; i < m_; ++i) c[i] = -a.coords_[i];
    return ExtElement(this, std::move(c));
}

ExtElement ExtensionSpec::mul(const ExtElement& a, const ExtElement& b) const {
    std::vector<FieldElement> r =
        polyu::mulmod(to_poly(a), to_poly(b), mod_, base_->zero());
    r.resize(m_, base_->zero());
    return ExtElement(this, std::move(r));
}

ExtElement ExtensionSpec::mul_base(const ExtElement& a, const FieldElement& s) const {
    if (s.field_ptr() != base_.get())
        throw field_mismatch_error("scalar must lie in the base field");
    std::vector<FieldElement> c(m_, base_->zero());
    for (unsigned i = 0; i < m_; ++i) c[i] = a.coords_[i] * s;
    return ExtElement(this, std::move(c));
}

ExtElement ExtensionSpec::inv(const ExtElement& a) const {
    if (a.is_zero()) throw domain_error("division by zero in the extension field");
    std::vector<FieldElement> u = polyu::invmod(to_poly(a), mod_, base_->zero(), base_->one());
    u.resize(m_, base_->zero());
    return ExtElement(this, std::move(u));
}

bool ExtElement::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

bool ExtElement::is_one() const {
    if (coords_.empty() || !coords_[0].is_one()) return false;
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (!coords_[i].is_zero()) return false;
    return true;
}

std::uint64_t ExtElement::index() const {
    const std::uint32_t q = ext().base_cardinality();
    std::uint64_t r = 0;
    for (std::size_t i = coords_.size(); i-- > 0;) {
        if (r > (std::uint64_t(1) << 62) / q)
            throw budget_error("extension field too large to index");
        r = r * q + coords_[i].value();
    }
    return r;
}

ExtElement ExtElement::pow(const Int& e) const {
    if (e < 0) throw domain_error("negative exponent");
    const ExtensionSpec& E = ext();
    std::vector<FieldElement> r = polyu::powmod(to_poly(*this), e, E.modulus(),
                                                E.base().zero(), E.base().one());
    r.resize(E.degree(), E.base().zero());
    return ExtElement(&E, std::move(r));
}

ExtElement ExtElement::frobenius(unsigned i) const {
    ExtElement r = *this;
    const Int q(ext().base_cardinality());
    for (unsigned j = 0; j < i; ++j) r = r.pow(q);
    return r;
}

FieldElement field_trace(const ExtElement& a) {
    if (a.ext_ptr() == nullptr) throw domain_error("trace of a singular element");
    const ExtensionSpec& E = a.ext();
    ExtElement sum = a, acc = a;
    for (unsigned i = 1; i < E.degree(); ++i) {
        acc = acc.frobenius();
        sum = sum + acc;
    }
    for (unsigned i = 1; i < E.degree(); ++i)
        if (!sum.coords()[i].is_zero()) throw error("trace is not base-valued (internal)");
    return sum.coords()[0];
}

// ---------------------------------------------------------------------------
// FieldBasis

FieldBasis::FieldBasis(std::vector<ExtElement> elems) {
    if (elems.empty()) throw domain_error("basis must be nonempty");
    ext_ = elems[0].ext_ptr();
    if (ext_ == nullptr) throw domain_error("basis of singular elements");
    for (const auto& e : elems)
        if (e.ext_ptr() != ext_)
            throw field_mismatch_error("basis elements must lie in one extension");
    if (elems.size() != ext_->degree())
        throw domain_error("basis size must equal the extension degree");
    std::vector<std::vector<FieldElement>> B;
    B.reserve(elems.size());
    for (const auto& e : elems) B.push_back(e.coords());
    auto inv = linalg::inverse(B, ext_->base().zero(), ext_->base().one());
    if (!inv) throw domain_error("basis elements are linearly dependent over the base field");
    inv_ = std::move(*inv);
    elems_ = std::move(elems);
}

FieldBasis FieldBasis::power_basis(const ExtensionSpec& ext) {
    std::vector<ExtElement> e;
    e.reserve(ext.degree());
    ExtElement cur = ext.one();
    const ExtElement x = ext.root();
    for (unsigned i = 0; i < ext.degree(); ++i) {
        e.push_back(cur);
        if (i + 1 < ext.degree()) cur = cur * x;
    }
    return FieldBasis(std::move(e));
}

std::vector<FieldElement> coords_over_basis(const ExtElement& a, const FieldBasis& G) {
    if (a.ext_ptr() != &G.ext())
        throw field_mismatch_error("element and basis belong to different extensions");
    const unsigned m = G.size();
    const FieldSpec& base = G.ext().base();
    std::vector<FieldElement> c(m, base.zero());
    const auto& ac = a.coords();
    for (unsigned j = 0; j < m; ++j) {
        FieldElement s = base.zero();
        for (unsigned l = 0; l < m; ++l) s = s + ac[l] * G.inv_[l][j];
        c[j] = s;
    }
    return c;
}

ExtElement element_from_coords(const std::vector<FieldElement>& coords, const FieldBasis& G) {
    if (coords.size() != G.size()) throw domain_error("coordinate vector has wrong length");
    ExtElement r = G.ext().zero();
    for (unsigned i = 0; i < G.size(); ++i) r = r + G[i] * coords[i];
    return r;
}

FieldBasis dual_basis(const FieldBasis& G) {
    const unsigned m = G.size();
    const FieldSpec& base = G.ext().base();
    std::vector<std::vector<FieldElement>> gram(m, std::vector<FieldElement>(m, base.zero()));
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) gram[i][j] = field_trace(G[i] * G[j]);
    auto inv = linalg::inverse(gram, base.zero(), base.one());
    if (!inv) throw domain_error("trace form is degenerate on this basis");
    std::vector<ExtElement> dual;
    dual.reserve(m);
    for (unsigned i = 0; i < m; ++i) {
        ExtElement s = G.ext().zero();
        for (unsigned j = 0; j < m; ++j) s = s + G[j] * (*inv)[i][j];
        dual.push_back(std::move(s));
    }
    return FieldBasis(std::move(dual));
}

}  // namespace rmc
