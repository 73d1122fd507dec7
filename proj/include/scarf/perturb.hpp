#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "scarf/lattice.hpp"
#include "scarf/numeric.hpp"

namespace scarf {

// Symbolic proper perturbation: coordinate i compares by (x_i, lex(x)).
// Total on distinct points, never reverses a strict coordinate order, and
// translation invariant, so it breaks ties exactly the way a numeric
// perturbation would without ever leaving integer arithmetic.
inline bool phi_less(const Vec& x, const Vec& y, std::size_t i) {
    if (x.size() != y.size()) throw std::invalid_argument("phi_less: dimension mismatch");
    if (i >= x.size()) throw std::invalid_argument("phi_less: coordinate out of range");
    if (x[i] != y[i]) return x[i] < y[i];
    if (x == y) return false;
    return x < y;
}

// Perturbed coordinatewise maximum of vertices, coordinate i.
inline const Vec& phi_max_vertex(const std::vector<Vec>& vertices, std::size_t i) {
    const Vec* best = &vertices.front();
    for (const Vec& v : vertices)
        if (phi_less(*best, v, i)) best = &v;
    return *best;
}

// True iff the perturbed image of `candidate` lies strictly below the
// perturbed coordinatewise maximum of `vertices` in every coordinate.
inline bool dominated(const Vec& candidate, const std::vector<Vec>& vertices) {
    if (vertices.empty()) throw std::invalid_argument("dominated: empty vertex set");
    const std::size_t n = candidate.size();
    for (std::size_t i = 0; i < n; ++i) {
        bool below = false;
        for (const Vec& v : vertices) {
            if (phi_less(candidate, v, i)) {
                below = true;
                break;
            }
        }
        if (!below) return false;
    }
    return true;
}

// Unperturbed coordinatewise maximum; this is what exponents A*max(s) and
// the subcomplex cutoff max(s) <= xi are built from.
inline Vec max_vector(const std::vector<Vec>& vertices) {
    if (vertices.empty()) throw std::invalid_argument("max_vector: empty vertex set");
    Vec m = vertices.front();
    for (const Vec& v : vertices)
        for (std::size_t i = 0; i < m.size(); ++i)
            if (v[i] > m[i]) m[i] = v[i];
    return m;
}

struct GenericityReport {
    bool generic_within_radius = true;
    std::optional<Vec> witness;  // nonzero point with a zero coordinate and no dominator
    Int radius = 0;
};

// Diagnostic scan: looks for a nonzero lattice point with some coordinate
// equal to zero that no lattice point (within the same coefficient radius)
// strictly dominates. The complex itself never relies on genericity; this
// only reports whether the unperturbed definition would have been ambiguous.
inline GenericityReport genericity_report(const LatticeBasis& B, const Int& radius) {
    if (radius < 1) throw std::invalid_argument("genericity_report: radius must be >= 1");
    GenericityReport rep;
    rep.radius = radius;
    const std::size_t r = B.rank();
    if (r == 0) return rep;

    std::vector<Vec> pts;
    Vec x(r, Int(0));
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == r) {
            pts.push_back(B.point(x));
            return;
        }
        for (Int c = -radius; c <= radius; ++c) {
            x[k] = c;
            self(self, k + 1);
        }
        x[k] = 0;
    };
    rec(rec, 0);

    for (const Vec& lam : pts) {
        if (is_zero(lam)) continue;
        bool has_zero_coord = false;
        for (const Int& c : lam)
            if (c == 0) {
                has_zero_coord = true;
                break;
            }
        if (!has_zero_coord) continue;
        Vec u(lam.size());
        for (std::size_t i = 0; i < lam.size(); ++i) u[i] = lam[i] > 0 ? lam[i] : Int(0);
        bool dominator = false;
        for (const Vec& other : pts) {
            if (strictly_less(other, u)) {
                dominator = true;
                break;
            }
        }
        if (!dominator) {
            rep.generic_within_radius = false;
            rep.witness = lam;
            return rep;
        }
    }
    return rep;
}

}  // namespace scarf
