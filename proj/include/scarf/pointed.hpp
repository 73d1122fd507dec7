#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scarf/errors.hpp"
#include "scarf/int_matrix.hpp"
#include "scarf/numeric.hpp"

namespace scarf {

// Certificate that the semigroup cone is pointed: <l, a_i> < 0 for every
// column, equivalently w = -A^T l > 0 entrywise. The functional -l grades
// the semigroup; w grades the coefficient space, and every lattice point of
// ker A is w-orthogonal, which is what makes all the box searches finite.
struct PointednessCertificate {
    RatVec l;  // length d
    RatVec w;  // length n, w_i = -<l, a_i>

    Rat grading(const Vec& b) const {
        if (b.size() != l.size())
            throw std::invalid_argument("grading: dimension mismatch");
        Rat s = 0;
        for (std::size_t i = 0; i < b.size(); ++i) s -= l[i] * Rat(b[i]);
        return s;
    }
};

// Exact rational Fourier-Motzkin machinery over systems sum_j c_j x_j <= rhs.
namespace fm {

struct Ineq {
    RatVec coeff;
    Rat rhs;
};

using System = std::vector<Ineq>;

// Projects away variable `var` (coefficients at `var` become irrelevant and
// are zeroed). Exact: the result is the shadow of the feasible set.
inline System eliminate(const System& sys, std::size_t var) {
    System zero, pos, neg;
    for (const Ineq& q : sys) {
        int s = sgn(q.coeff[var]);
        if (s == 0)
            zero.push_back(q);
        else if (s > 0)
            pos.push_back(q);
        else
            neg.push_back(q);
    }
    System out = std::move(zero);
    for (const Ineq& p : pos) {
        for (const Ineq& m : neg) {
            Ineq c;
            c.coeff.resize(p.coeff.size());
            const Rat a = p.coeff[var];   // > 0
            const Rat b = -m.coeff[var];  // > 0
            for (std::size_t j = 0; j < p.coeff.size(); ++j)
                c.coeff[j] = b * p.coeff[j] + a * m.coeff[j];
            c.rhs = b * p.rhs + a * m.rhs;
            c.coeff[var] = 0;
            out.push_back(std::move(c));
        }
    }
    return out;
}

struct Interval {
    std::optional<Rat> lo, hi;
    bool feasible = true;
};

// Interval for variable `var` in a system whose only effective variable is
// `var` once the fixed values are substituted for the others.
inline Interval interval_for(const System& sys, std::size_t var, const RatVec& fixed) {
    Interval iv;
    for (const Ineq& q : sys) {
        Rat rhs = q.rhs;
        for (std::size_t j = 0; j < q.coeff.size(); ++j) {
            if (j == var) continue;
            if (q.coeff[j] != 0) rhs -= q.coeff[j] * fixed[j];
        }
        int s = sgn(q.coeff[var]);
        if (s == 0) {
            if (rhs < 0) iv.feasible = false;
        } else if (s > 0) {
            Rat b = rhs / q.coeff[var];
            if (!iv.hi || b < *iv.hi) iv.hi = b;
        } else {
            Rat b = rhs / q.coeff[var];
            if (!iv.lo || b > *iv.lo) iv.lo = b;
        }
    }
    if (iv.lo && iv.hi && *iv.lo > *iv.hi) iv.feasible = false;
    return iv;
}

// Canonical pick inside a (nonempty) interval: prefer an integer near the
// upper end so certificates come out small and reproducible.
inline Rat pick(const Interval& iv) {
    if (!iv.lo && !iv.hi) return 0;
    if (!iv.lo) return Rat(rat_floor(*iv.hi));
    if (!iv.hi) return Rat(rat_ceil(*iv.lo));
    Rat f(rat_floor(*iv.hi));
    if (f >= *iv.lo) return f;
    return (*iv.lo + *iv.hi) / 2;
}

// One feasible point of the system in `nvars` variables, or nullopt.
inline std::optional<RatVec> feasible_point(const System& sys, std::size_t nvars) {
    if (nvars == 0) {
        for (const Ineq& q : sys)
            if (q.rhs < 0) return std::nullopt;
        return RatVec{};
    }
    std::vector<System> stages(nvars);
    stages[nvars - 1] = sys;
    for (std::size_t v = nvars - 1; v > 0; --v) stages[v - 1] = eliminate(stages[v], v);

    RatVec x(nvars, Rat(0));
    for (std::size_t v = 0; v < nvars; ++v) {
        Interval iv = interval_for(stages[v], v, x);
        if (!iv.feasible) return std::nullopt;
        x[v] = pick(iv);
    }
    return x;
}

// [min, max] of variable `var` over the feasible set; nullopt on either side
// means unbounded. `feasible` false means the set is empty.
inline Interval project_interval(System sys, std::size_t nvars, std::size_t var) {
    for (std::size_t v = 0; v < nvars; ++v)
        if (v != var) sys = eliminate(sys, v);
    RatVec fixed(nvars, Rat(0));
    return interval_for(sys, var, fixed);
}

}  // namespace fm

// Finds l with <l, a_i> <= -1 for every column by exact Fourier-Motzkin
// elimination, or proves no such l exists. The -1 normalization makes the
// open condition < 0 a closed system without loss.
inline PointednessCertificate positive_functional(const IntMatrix& A) {
    const std::size_t d = A.rows();
    const std::size_t n = A.cols();
    fm::System sys;
    sys.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        fm::Ineq q;
        q.coeff.resize(d);
        for (std::size_t j = 0; j < d; ++j) q.coeff[j] = Rat(A(j, i));
        q.rhs = -1;
        sys.push_back(std::move(q));
    }
    auto l = fm::feasible_point(sys, d);
    if (!l)
        throw NotPointedError(
            "no functional l with <l, a_i> < 0 exists; the semigroup contains a linear subgroup");
    PointednessCertificate cert;
    cert.l = *l;
    cert.w.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat wi = 0;
        for (std::size_t j = 0; j < d; ++j) wi -= cert.l[j] * Rat(A(j, i));
        if (wi <= 0) throw NotPointedError("internal: certificate failed the sign check");
        cert.w[i] = wi;
    }
    return cert;
}

// Lower corner of the search box for points lambda of a w-orthogonal lattice
// with lambda <= u: from <w, lambda> = 0, lambda_i >= u_i - <w, u>/w_i.
inline Vec dominator_lower_bound(const Vec& u, const PointednessCertificate& cert) {
    const std::size_t n = u.size();
    if (cert.w.size() != n) throw std::invalid_argument("dominator_lower_bound: dimension mismatch");
    Rat s = 0;
    for (std::size_t j = 0; j < n; ++j) s += cert.w[j] * Rat(u[j]);
    Vec lo(n);
    for (std::size_t i = 0; i < n; ++i) lo[i] = rat_ceil(Rat(u[i]) - s / cert.w[i]);
    return lo;
}

}  // namespace scarf
