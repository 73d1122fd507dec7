#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "scarf/numeric.hpp"

namespace scarf {

// Column-style Hermite normal form. Columns are vectors of length `nrows`;
// all operations are unimodular column operations, so the column span over Z
// (the lattice generated by the columns) never changes.

namespace detail {

// g = gcd(a, b) together with p*a + q*b = g.
inline void ext_gcd(const Int& a, const Int& b, Int& g, Int& p, Int& q) {
    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace detail

struct HermiteForm {
    std::vector<Vec> columns;            // rank columns in canonical echelon form
    std::vector<std::size_t> pivot_rows; // strictly increasing, one per column
};

// Canonical column HNF of the lattice spanned by `cols`. Zero columns are
// dropped; pivots are positive; entries left of a pivot in its pivot row lie
// in [0, pivot). The result depends only on the lattice, not on the input
// basis, which is what makes golden tests reproducible.
//
// When `transform` is non-null it must hold an identity-like set of columns
// matching `cols`; the same column operations are applied to it, and columns
// of *transform beyond the returned rank span the integer kernel of the
// column map x -> cols * x.
inline HermiteForm hnf_columns(std::vector<Vec> cols, std::size_t nrows,
                               std::vector<Vec>* transform = nullptr) {
    const std::size_t k = cols.size();
    std::size_t r = 0;  // next pivot column
    std::vector<std::size_t> pivots;

    auto col_combine = [&](std::size_t cr, std::size_t cj, const Int& p, const Int& q,
                           const Int& ar, const Int& aj) {
        // (col_cr, col_cj) <- (p*col_cr + q*col_cj, -aj*col_cr + ar*col_cj)
        // with p*W[i][cr] + q*W[i][cj] = g, ar = W[i][cr]/g, aj = W[i][cj]/g.
        auto apply = [&](std::vector<Vec>& m) {
            Vec& u = m[cr];
            Vec& v = m[cj];
            for (std::size_t t = 0; t < u.size(); ++t) {
                Int nu = p * u[t] + q * v[t];
                Int nv = ar * v[t] - aj * u[t];
                u[t] = std::move(nu);
                v[t] = std::move(nv);
            }
        };
        apply(cols);
        if (transform) apply(*transform);
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        std::swap(cols[a], cols[b]);
        if (transform) std::swap((*transform)[a], (*transform)[b]);
    };
    auto col_negate = [&](std::size_t a) {
        for (Int& x : cols[a]) x = -x;
        if (transform)
            for (Int& x : (*transform)[a]) x = -x;
    };
    auto col_axpy = [&](std::size_t dst, const Int& c, std::size_t src) {
        // col_dst += c * col_src
        for (std::size_t t = 0; t < cols[dst].size(); ++t) cols[dst][t] += c * cols[src][t];
        if (transform)
            for (std::size_t t = 0; t < (*transform)[dst].size(); ++t)
                (*transform)[dst][t] += c * (*transform)[src][t];
    };

    for (std::size_t i = 0; i < nrows && r < k; ++i) {
        std::size_t j = r;
        while (j < k && cols[j][i] == 0) ++j;
        if (j == k) continue;
        if (j != r) col_swap(j, r);
        for (std::size_t j2 = r + 1; j2 < k; ++j2) {
            if (cols[j2][i] == 0) continue;
            Int g, p, q;
            detail::ext_gcd(cols[r][i], cols[j2][i], g, p, q);
            Int ar = cols[r][i] / g;
            Int aj = cols[j2][i] / g;
            col_combine(r, j2, p, q, ar, aj);
        }
        if (cols[r][i] < 0) col_negate(r);
        for (std::size_t j2 = 0; j2 < r; ++j2) {
            // reduce the entry left of the pivot into [0, pivot)
            Int q = floor_div(cols[j2][i], cols[r][i]);
            if (q != 0) col_axpy(j2, -q, r);
        }
        pivots.push_back(i);
        ++r;
    }

    HermiteForm h;
    h.columns.assign(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(r));
    h.pivot_rows = std::move(pivots);
    return h;
}

inline std::vector<Vec> identity_columns(std::size_t n) {
    std::vector<Vec> id(n, Vec(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

}  // namespace scarf
