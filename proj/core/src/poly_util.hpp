#pragma once

// Small dense-polynomial toolkit shared by the field tower and the linearized
// polynomial code. Polynomials are coefficient vectors in ascending degree
// order with no trailing zeros; the empty vector is the zero polynomial.
// The element type E needs +, -, *, ==, is_zero(), is_one(), inverse() and
// value semantics (FieldElement and ExtElement both qualify).

#include <utility>
#include <vector>

#include "rmc/bigint.hpp"
#include "rmc/errors.hpp"

namespace rmc::polyu {

template <class E>
void trim(std::vector<E>& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

template <class E>
int degree(const std::vector<E>& f) {
    return static_cast<int>(f.size()) - 1;  // -1 for the zero polynomial
}

template <class E>
std::vector<E> add(const std::vector<E>& a, const std::vector<E>& b) {
    std::vector<E> r = a.size() >= b.size() ? a : b;
    const std::vector<E>& s = a.size() >= b.size() ? b : a;
    for (std::size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
    trim(r);
    return r;
}

template <class E>
std::vector<E> sub(const std::vector<E>& a, const std::vector<E>& b, const E& zero) {
    std::vector<E> r(std::max(a.size(), b.size()), zero);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
    trim(r);
    return r;
}

template <class E>
std::vector<E> mul(const std::vector<E>& a, const std::vector<E>& b, const E& zero) {
    if (a.empty() || b.empty()) return {};
    std::vector<E> r(a.size() + b.size() - 1, zero);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    trim(r);
    return r;
}

// Quotient and remainder; b need not be monic.
template <class E>
std::pair<std::vector<E>, std::vector<E>> divmod(std::vector<E> a, const std::vector<E>& b,
                                                 const E& zero) {
    trim(a);
    if (b.empty()) throw domain_error("division by zero polynomial");
    if (a.size() < b.size()) return {{}, std::move(a)};
    const E lead_inv = b.back().inverse();
    std::vector<E> q(a.size() - b.size() + 1, zero);
    while (a.size() >= b.size()) {
        E c = a.back() * lead_inv;
        std::size_t off = a.size() - b.size();
        q[off] = c;
        if (!c.is_zero())
            for (std::size_t j = 0; j + 1 < b.size(); ++j) a[off + j] = a[off + j] - c * b[j];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return {std::move(q), std::move(a)};
}

template <class E>
std::vector<E> mod(std::vector<E> a, const std::vector<E>& f, const E& zero) {
    return divmod(std::move(a), f, zero).second;
}

template <class E>
std::vector<E> mulmod(const std::vector<E>& a, const std::vector<E>& b,
                      const std::vector<E>& f, const E& zero) {
    return mod(mul(a, b, zero), f, zero);
}

template <class E>
std::vector<E> powmod(std::vector<E> base, Int e, const std::vector<E>& f,
                      const E& zero, const E& one) {
    std::vector<E> r{one};
    base = mod(std::move(base), f, zero);
    while (e > 0) {
        if ((e & 1) != 0) r = mulmod(r, base, f, zero);
        base = mulmod(base, base, f, zero);
        e >>= 1;
    }
    return r;
}

// Monic gcd (zero polynomial when both inputs are zero).
template <class E>
std::vector<E> gcd(std::vector<E> a, std::vector<E> b, const E& zero) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        std::vector<E> r = mod(std::move(a), b, zero);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && !a.back().is_one()) {
        const E inv = a.back().inverse();
        for (auto& c : a) c = c * inv;
    }
    return a;
}

// u with u*a == 1 (mod f); throws if gcd(a, f) is not constant.
template <class E>
std::vector<E> invmod(const std::vector<E>& a, const std::vector<E>& f,
                      const E& zero, const E& one) {
    std::vector<E> r0 = f, r1 = mod(a, f, zero);
    std::vector<E> t0, t1{one};
    while (!r1.empty()) {
        auto [q, r2] = divmod(std::move(r0), r1, zero);
        r0 = std::move(r1);
        r1 = std::move(r2);
        std::vector<E> t2 = sub(t0, mul(q, t1, zero), zero);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (degree(r0) != 0) throw domain_error("element is not invertible modulo the given polynomial");
    const E inv = r0[0].inverse();
    for (auto& c : t0) c = c * inv;
    trim(t0);
    return t0;
}

// Rabin test over a coefficient field of cardinality Q.
template <class E>
bool irreducible(const std::vector<E>& f, const Int& Q, const E& zero, const E& one) {
    const int m = degree(f);
    if (m < 1) return false;
    if (m == 1) return true;
    const std::vector<E> x{zero, one};
    std::vector<E> xq =
        powmod(x, boost::multiprecision::pow(Q, static_cast<unsigned>(m)), f, zero, one);
    if (xq != x) return false;
    std::vector<int> primes;
    int rest = m;
    for (int l = 2; l * l <= rest; ++l) {
        if (rest % l == 0) {
            primes.push_back(l);
            while (rest % l == 0) rest /= l;
        }
    }
    if (rest > 1) primes.push_back(rest);
    for (int l : primes) {
        std::vector<E> xe =
            powmod(x, boost::multiprecision::pow(Q, static_cast<unsigned>(m / l)), f, zero, one);
        std::vector<E> g = gcd(sub(xe, x, zero), f, zero);
        if (degree(g) > 0) return false;
    }
    return true;
}

}  // namespace rmc::polyu
