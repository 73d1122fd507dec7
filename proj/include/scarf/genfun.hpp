#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scarf/complex.hpp"
#include "scarf/errors.hpp"
#include "scarf/int_matrix.hpp"
#include "scarf/laurent.hpp"
#include "scarf/pointed.hpp"

namespace scarf {

// Rational form numerator / prod_i (1 - z^{a_i}). The certificate records
// the expansion region: the series below is the Laurent expansion valid near
// z = exp(l).
struct RationalGF {
    LaurentPoly numerator;
    std::vector<Vec> denominator_exponents;  // the columns a_i, in order
    PointednessCertificate cert;
};

// Truncated Laurent series: exact coefficients for every b with
// 0 <= <-l, b> <= bound. Absent keys in range are zero.
struct SeriesBox {
    Rat bound;
    RatVec l;
    std::map<Vec, Int> coeffs;

    bool in_region(const Vec& b) const {
        Rat g = 0;
        for (std::size_t i = 0; i < l.size(); ++i) g -= l[i] * Rat(b[i]);
        return g >= 0 && g <= bound;
    }

    Int at(const Vec& b) const {
        if (!in_region(b)) throw std::invalid_argument("SeriesBox::at: outside the computed region");
        auto it = coeffs.find(b);
        return it == coeffs.end() ? Int(0) : it->second;
    }
};

// Numerator sum over representatives: (-1)^dim(s) z^{A*max(s)}. Cancelling
// contributions merge away inside LaurentPoly.
inline RationalGF assemble_gf(const ScarfReps& reps, const IntMatrix& A,
                              const PointednessCertificate& cert) {
    RationalGF gf;
    gf.numerator = LaurentPoly(A.rows());
    for (const Simplex& s : reps.simplices)
        gf.numerator.add_term(A.apply(s.max_vector()), s.dim() % 2 == 0 ? Int(1) : Int(-1));
    gf.denominator_exponents = A.columns();
    gf.cert = cert;
    return gf;
}

namespace detail {

struct GradedKey {
    Rat g;
    Vec b;
    bool operator<(const GradedKey& o) const {
        if (g != o.g) return g < o.g;
        return b < o.b;
    }
};

}  // namespace detail

// Expands the rational function into its Laurent series on the certificate
// region, up to grading `bound`. Dividing by (1 - z^{a_i}) is a prefix sum
// along direction a_i in increasing grading order; each factor strictly
// increases the grading, so a single forward sweep per factor is exact.
inline SeriesBox expand_series(const RationalGF& gf, const Rat& bound) {
    if (bound < 0) throw std::invalid_argument("expand_series: bound must be >= 0");
    std::vector<Rat> step;
    step.reserve(gf.denominator_exponents.size());
    for (const Vec& a : gf.denominator_exponents) {
        Rat g = gf.cert.grading(a);
        if (g <= 0)
            throw DegenerateGradingError("a denominator factor has nonpositive grading");
        step.push_back(g);
    }

    std::map<detail::GradedKey, Int> work;
    for (const auto& [e, c] : gf.numerator.terms()) {
        Rat g = gf.cert.grading(e);
        if (g <= bound) work[{g, e}] = c;
    }

    for (std::size_t i = 0; i < gf.denominator_exponents.size(); ++i) {
        const Vec& a = gf.denominator_exponents[i];
        for (auto it = work.begin(); it != work.end(); ++it) {
            if (it->second == 0) continue;
            Rat g2 = it->first.g + step[i];
            if (g2 > bound) continue;
            work[{g2, add(it->first.b, a)}] += it->second;
        }
    }

    SeriesBox out;
    out.bound = bound;
    out.l = gf.cert.l;
    for (const auto& [k, c] : work)
        if (c != 0 && k.g >= 0) out.coeffs.emplace(k.b, c);
    return out;
}

// Frobenius number from the complex: largest numerator exponent minus the
// sum of the generators.
inline Int frobenius_from_complex(const ScarfReps& reps, const IntMatrix& A) {
    if (A.rows() != 1) throw WrongDimensionError("Frobenius number needs a 1 x n matrix");
    Int g = 0;
    Int sum = 0;
    for (std::size_t i = 0; i < A.cols(); ++i) {
        const Int& a = A(0, i);
        if (a < 1) throw std::invalid_argument("Frobenius number needs positive generators");
        g = gcd(g, a);
        sum += a;
    }
    if (g != 1) throw GcdNotOneError("generators have a common divisor; the gaps are unbounded");
    Int N = 0;
    for (const Simplex& s : reps.simplices) {
        Int e = A.apply(s.max_vector())[0];
        if (e > N) N = e;
    }
    return N - sum;
}

struct SeriesDiff {
    Vec b;
    Int lhs;
    Int rhs;
};

struct CompareReport {
    std::vector<SeriesDiff> diffs;  // sorted by exponent

    bool equal() const { return diffs.empty(); }
};

inline CompareReport series_compare(const SeriesBox& s1, const SeriesBox& s2) {
    if (s1.bound != s2.bound || s1.l != s2.l)
        throw IncomparableRegionsError("series boxes cover different regions");
    CompareReport rep;
    auto it1 = s1.coeffs.begin();
    auto it2 = s2.coeffs.begin();
    while (it1 != s1.coeffs.end() || it2 != s2.coeffs.end()) {
        if (it2 == s2.coeffs.end() || (it1 != s1.coeffs.end() && it1->first < it2->first)) {
            rep.diffs.push_back({it1->first, it1->second, Int(0)});
            ++it1;
        } else if (it1 == s1.coeffs.end() || it2->first < it1->first) {
            rep.diffs.push_back({it2->first, Int(0), it2->second});
            ++it2;
        } else {
            if (it1->second != it2->second) rep.diffs.push_back({it1->first, it1->second, it2->second});
            ++it1;
            ++it2;
        }
    }
    return rep;
}

// Terms of the numerator sorted by (grading, lex exponent) -- the order the
// wire format pins down.
inline std::vector<std::pair<Vec, Int>> graded_terms(const LaurentPoly& p,
                                                     const PointednessCertificate& cert) {
    std::vector<std::pair<Vec, Int>> out(p.terms().begin(), p.terms().end());
    std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        Rat ga = cert.grading(a.first), gb = cert.grading(b.first);
        if (ga != gb) return ga < gb;
        return a.first < b.first;
    });
    return out;
}

}  // namespace scarf
