#pragma once

// Finite fields GF(p^n) with an explicit monic irreducible modulus, and
// relative extensions F_{q^m}/F_q whose base may itself be non-prime.
//
// Elements are stored packed: a coefficient vector (c_0,...,c_{n-1}) over
// GF(p) in the power basis of the modulus root becomes the integer
// sum c_i * p^i. The packing doubles as the canonical element order used by
// every deterministic enumeration in the library.
//
// FieldSpec and ExtensionSpec instances are interned in a process-wide
// registry: constructing the same field twice yields the same object, so
// elements can carry a raw owner pointer and cross-field operations are
// detected by pointer comparison. Interned specs live for the duration of
// the process. All spec state is immutable after construction; the log/exp
// tables are built once inside the constructor.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rmc/bigint.hpp"
#include "rmc/errors.hpp"

namespace rmc {

class FieldSpec;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

// Largest supported field and base-field cardinality.
inline constexpr std::uint32_t kMaxFieldCardinality = 1u << 16;

class FieldElement {
public:
    FieldElement() = default;  // singular value: assignable, not usable

    const FieldSpec& field() const { return *field_; }
    const FieldSpec* field_ptr() const { return field_; }
    std::uint32_t value() const { return value_; }
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    std::vector<std::uint32_t> coeffs() const;  // n digits over GF(p), ascending
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    friend class FieldSpec;
    FieldElement(const FieldSpec* f, std::uint32_t v) : field_(f), value_(v) {}

    const FieldSpec* field_ = nullptr;
    std::uint32_t value_ = 0;
};

class FieldSpec {
public:
    // Interned constructors. The modulus is ascending (index = degree),
    // monic, irreducible over GF(p), length n+1. Without a modulus the
    // lowest one in the canonical order is chosen: candidates are compared
    // by their coefficient tuple (c_{n-1},...,c_0) lexicographically.
    static FieldSpecPtr get(std::uint32_t p, unsigned n);
    static FieldSpecPtr get(std::uint32_t p, unsigned n, const std::vector<std::uint32_t>& modulus);

    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return n_; }
    std::uint32_t cardinality() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return mod_; }  // ascending

    FieldElement zero() const { return FieldElement(this, 0); }
    FieldElement one() const { return FieldElement(this, 1); }
    FieldElement element(std::uint32_t packed) const;
    FieldElement from_coeffs(const std::vector<std::uint32_t>& digits) const;  // ascending, mod p
    FieldElement generator() const { return FieldElement(this, gen_); }

    // Packed-value arithmetic. These are the hot paths for exhaustive
    // enumerations; FieldElement operators delegate here.
    std::uint32_t add_v(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub_v(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_v(std::uint32_t a) const;
    std::uint32_t mul_v(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    std::uint32_t inv_v(std::uint32_t a) const;
    std::uint32_t div_v(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow_v(std::uint32_t a, std::uint64_t e) const;
    // Table-free multiplication; same contract as mul_v. Kept public so the
    // two routes can be cross-checked.
    std::uint32_t mul_schoolbook_v(std::uint32_t a, std::uint32_t b) const;

    FieldSpec(const FieldSpec&) = delete;
    FieldSpec& operator=(const FieldSpec&) = delete;
    ~FieldSpec() = default;

private:
    FieldSpec(std::uint32_t p, unsigned n, std::vector<std::uint32_t> modulus);

    std::uint32_t p_ = 0;
    unsigned n_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> mod_;   // ascending, size n+1, monic
    std::uint32_t gen_ = 0;            // primitive element backing the tables
    std::vector<std::uint32_t> exp_;   // size q-1, exp_[i] = gen^i
    std::vector<std::uint32_t> log_;   // size q, log_[exp_[i]] = i
};

inline FieldElement operator+(const FieldElement& a, const FieldElement& b);
inline FieldElement operator-(const FieldElement& a, const FieldElement& b);
inline FieldElement operator-(const FieldElement& a);
inline FieldElement operator*(const FieldElement& a, const FieldElement& b);
inline FieldElement operator/(const FieldElement& a, const FieldElement& b);

namespace detail {
inline const FieldSpec& same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field_ptr() == nullptr || a.field_ptr() != b.field_ptr())
        throw field_mismatch_error("operands belong to different fields");
    return a.field();
}
}  // namespace detail

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    const FieldSpec& f = detail::same_field(a, b);
    return f.element(f.add_v(a.value(), b.value()));
}
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    const FieldSpec& f = detail::same_field(a, b);
    return f.element(f.sub_v(a.value(), b.value()));
}
inline FieldElement operator-(const FieldElement& a) {
    return a.field().element(a.field().neg_v(a.value()));
}
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const FieldSpec& f = detail::same_field(a, b);
    return f.element(f.mul_v(a.value(), b.value()));
}
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    const FieldSpec& f = detail::same_field(a, b);
    return f.element(f.div_v(a.value(), b.value()));
}
inline FieldElement FieldElement::inverse() const {
    return field().element(field().inv_v(value_));
}
inline FieldElement FieldElement::pow(std::uint64_t e) const {
    return field().element(field().pow_v(value_, e));
}
inline std::vector<std::uint32_t> FieldElement::coeffs() const {
    std::vector<std::uint32_t> d(field().degree());
    std::uint32_t v = value_;
    const std::uint32_t p = field().characteristic();
    for (auto& x : d) {
        x = v % p;
        v /= p;
    }
    return d;
}

// ---------------------------------------------------------------------------
// Relative extension F_{q^m}/F_q. One level of relativity: the base is a
// FieldSpec (possibly non-prime); towers of ExtensionSpec are not needed.

class ExtensionSpec;
using ExtensionSpecPtr = std::shared_ptr<const ExtensionSpec>;

class ExtElement {
public:
    ExtElement() = default;  // singular

    const ExtensionSpec& ext() const { return *ext_; }
    const ExtensionSpec* ext_ptr() const { return ext_; }
    // Coordinates over the base field in the power basis of the extension
    // modulus root; size m.
    const std::vector<FieldElement>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    std::uint64_t index() const;  // sum packed(coords[i]) * q^i

    ExtElement inverse() const;
    ExtElement frobenius() const { return frobenius(1); }  // a^q
    ExtElement frobenius(unsigned i) const;                // a^(q^i)
    ExtElement pow(const Int& e) const;

    friend bool operator==(const ExtElement& a, const ExtElement& b) {
        return a.ext_ == b.ext_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const ExtElement& a, const ExtElement& b) { return !(a == b); }

private:
    friend class ExtensionSpec;
    ExtElement(const ExtensionSpec* e, std::vector<FieldElement> c)
        : ext_(e), coords_(std::move(c)) {}

    const ExtensionSpec* ext_ = nullptr;
    std::vector<FieldElement> coords_;
};

class ExtensionSpec {
public:
    // Interned constructors; the modulus is ascending over the base field,
    // monic, irreducible, length m+1. The default modulus is the lowest in
    // the same canonical order as FieldSpec (base elements ordered by their
    // packed value).
    static ExtensionSpecPtr get(const FieldSpecPtr& base, unsigned m);
    static ExtensionSpecPtr get(const FieldSpecPtr& base, unsigned m,
                                const std::vector<FieldElement>& modulus);

    const FieldSpec& base() const { return *base_; }
    const FieldSpecPtr& base_ptr() const { return base_; }
    unsigned degree() const { return m_; }
    std::uint32_t base_cardinality() const { return base_->cardinality(); }
    Int cardinality() const;               // q^m
    std::uint64_t cardinality_u64() const; // throws budget_error beyond 2^62
    const std::vector<FieldElement>& modulus() const { return mod_; }

    ExtElement zero() const;
    ExtElement one() const;
    ExtElement root() const;  // the class of x
    ExtElement embed(const FieldElement& c) const;
    ExtElement from_coords(std::vector<FieldElement> coords) const;
    ExtElement element(std::uint64_t index) const;  // digits base q, canonical order

    ExtElement add(const ExtElement& a, const ExtElement& b) const;
    ExtElement sub(const ExtElement& a, const ExtElement& b) const;
    ExtElement neg(const ExtElement& a) const;
    ExtElement mul(const ExtElement& a, const ExtElement& b) const;
    ExtElement mul_base(const ExtElement& a, const FieldElement& c) const;
    ExtElement inv(const ExtElement& a) const;

    ExtensionSpec(const ExtensionSpec&) = delete;
    ExtensionSpec& operator=(const ExtensionSpec&) = delete;
    ~ExtensionSpec() = default;

private:
    ExtensionSpec(FieldSpecPtr base, unsigned m, std::vector<FieldElement> modulus);

    FieldSpecPtr base_;
    unsigned m_ = 0;
    std::vector<FieldElement> mod_;  // ascending, size m+1, monic
};

namespace detail {
inline const ExtensionSpec& same_ext(const ExtElement& a, const ExtElement& b) {
    if (a.ext_ptr() == nullptr || a.ext_ptr() != b.ext_ptr())
        throw field_mismatch_error("operands belong to different extension fields");
    return a.ext();
}
}  // namespace detail

inline ExtElement operator+(const ExtElement& a, const ExtElement& b) {
    return detail::same_ext(a, b).add(a, b);
}
inline ExtElement operator-(const ExtElement& a, const ExtElement& b) {
    return detail::same_ext(a, b).sub(a, b);
}
inline ExtElement operator-(const ExtElement& a) { return a.ext().neg(a); }
inline ExtElement operator*(const ExtElement& a, const ExtElement& b) {
    return detail::same_ext(a, b).mul(a, b);
}
inline ExtElement operator*(const ExtElement& a, const FieldElement& c) {
    return a.ext().mul_base(a, c);
}
inline ExtElement operator*(const FieldElement& c, const ExtElement& a) {
    return a.ext().mul_base(a, c);
}
inline ExtElement operator/(const ExtElement& a, const ExtElement& b) {
    const ExtensionSpec& e = detail::same_ext(a, b);
    return e.mul(a, e.inv(b));
}
inline ExtElement ExtElement::inverse() const { return ext().inv(*this); }

// Trace of the extension: a + a^q + ... + a^(q^(m-1)), always base-valued.
FieldElement field_trace(const ExtElement& a);

// An ordered F_q-basis of the extension. Independence is validated at
// construction; the inverse coordinate matrix is precomputed so that
// coords_over_basis is a single matrix-vector product.
class FieldBasis {
public:
    explicit FieldBasis(std::vector<ExtElement> elems);
    static FieldBasis power_basis(const ExtensionSpec& ext);

    const ExtensionSpec& ext() const { return *ext_; }
    unsigned size() const { return static_cast<unsigned>(elems_.size()); }
    const ExtElement& operator[](unsigned i) const { return elems_[i]; }
    const std::vector<ExtElement>& elements() const { return elems_; }

    friend bool operator==(const FieldBasis& a, const FieldBasis& b) {
        return a.ext_ == b.ext_ && a.elems_ == b.elems_;
    }

private:
    friend std::vector<FieldElement> coords_over_basis(const ExtElement&, const FieldBasis&);
    const ExtensionSpec* ext_ = nullptr;
    std::vector<ExtElement> elems_;
    // inv_[i][j]: row i of the inverse of the matrix whose rows are the
    // power-basis coordinates of the basis elements.
    std::vector<std::vector<FieldElement>> inv_;
};

// Coordinates c with a = sum c_i * G[i].
std::vector<FieldElement> coords_over_basis(const ExtElement& a, const FieldBasis& G);
ExtElement element_from_coords(const std::vector<FieldElement>& coords, const FieldBasis& G);

// The basis G' with field_trace(G'[i] * G[j]) = (i == j), obtained by
// inverting the trace Gram matrix of G.
FieldBasis dual_basis(const FieldBasis& G);

}  // namespace rmc
