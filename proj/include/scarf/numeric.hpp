#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace scarf {

// Arbitrary-precision integers and rationals. Exponents such as A*max(s)
// routinely exceed 64 bits even for three-generator inputs, so everything
// downstream of matrix entries stays exact.
using Int = mpz_class;
using Rat = mpq_class;

using Vec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const RatVec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

inline Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec negate(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline bool is_zero(const Vec& a) {
    for (const Int& x : a)
        if (x != 0) return false;
    return true;
}

// Componentwise a <= b.
inline bool leq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("leq: dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Componentwise strict a < b.
inline bool strictly_less(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("strictly_less: dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] >= b[i]) return false;
    return true;
}

inline bool lex_less(const Vec& a, const Vec& b) { return a < b; }

// floor(a / b) for b != 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// ceil(a / b) for b != 0.
inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int rat_floor(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }

inline Int rat_ceil(const Rat& q) { return ceil_div(q.get_num(), q.get_den()); }

inline std::string to_string(const Int& x) { return x.get_str(); }

inline std::string to_string(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    return c.get_str();
}

inline Int parse_int(const std::string& s) {
    Int x;
    if (x.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: '" + s + "'");
    return x;
}

}  // namespace scarf
