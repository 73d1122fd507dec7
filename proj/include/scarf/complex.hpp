#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scarf/errors.hpp"
#include "scarf/lattice.hpp"
#include "scarf/perturb.hpp"
#include "scarf/pointed.hpp"

namespace scarf {

// Finite set of distinct lattice points, kept sorted so equal simplices
// compare equal. Ordering groups by dimension first.
class Simplex {
public:
    static Simplex of(std::vector<Vec> vertices) {
        if (vertices.empty()) throw std::invalid_argument("Simplex: empty vertex set");
        const std::size_t n = vertices.front().size();
        for (const Vec& v : vertices)
            if (v.size() != n) throw std::invalid_argument("Simplex: mixed ambient dimensions");
        std::sort(vertices.begin(), vertices.end());
        if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
            throw std::invalid_argument("Simplex: duplicate vertex");
        Simplex s;
        s.vertices_ = std::move(vertices);
        return s;
    }

    const std::vector<Vec>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    std::size_t dim() const { return vertices_.size() - 1; }
    std::size_t ambient_dim() const { return vertices_.front().size(); }

    Simplex translated(const Vec& t) const {
        std::vector<Vec> vs;
        vs.reserve(vertices_.size());
        for (const Vec& v : vertices_) vs.push_back(add(v, t));
        Simplex s;
        s.vertices_ = std::move(vs);  // translation preserves order and distinctness
        return s;
    }

    // Orbit representative: translate so the lexicographically smallest
    // vertex sits at the origin.
    Simplex canonical() const { return translated(negate(vertices_.front())); }

    Vec max_vector() const { return scarf::max_vector(vertices_); }

    bool operator==(const Simplex& o) const { return vertices_ == o.vertices_; }
    bool operator<(const Simplex& o) const {
        if (vertices_.size() != o.vertices_.size()) return vertices_.size() < o.vertices_.size();
        return vertices_ < o.vertices_;
    }

private:
    Simplex() = default;
    std::vector<Vec> vertices_;
};

struct FiniteComplex {
    std::vector<Simplex> simplices;  // sorted, subset-closed, empty set excluded

    bool empty() const { return simplices.empty(); }
};

struct ScarfReps {
    std::vector<Simplex> simplices;  // canonical orbit representatives, sorted

    std::size_t count_of_dim(std::size_t d) const {
        std::size_t c = 0;
        for (const Simplex& s : simplices)
            if (s.dim() == d) ++c;
        return c;
    }
    std::size_t max_dim() const {
        std::size_t m = 0;
        for (const Simplex& s : simplices) m = std::max(m, s.dim());
        return m;
    }
};

struct SearchPolicy {
    Int radius_cap = 64;
    unsigned stability_rounds = 12;
};

// Membership test for the neighborhood complex: s is a simplex iff no
// lattice point is perturbed-strictly below max(phi(s)) in every coordinate.
// Any dominator satisfies lambda <= max(s) componentwise and is w-orthogonal,
// so the search box is finite and the test is complete.
inline bool is_simplex(const Simplex& s, const LatticeBasis& B, const PointednessCertificate& cert) {
    const Vec u = s.max_vector();
    Box box{dominator_lower_bound(u, cert), u};
    bool found = false;
    for_each_in_box(B, box, [&](const LatticePoint& p) {
        if (dominated(p.point, s.vertices())) {
            found = true;
            return false;
        }
        return true;
    });
    return !found;
}

// All h != 0 with {0, h} in the complex. Iterative deepening over the
// coefficient-space infinity norm; stops once `stability_rounds` consecutive
// shells contribute nothing. There is no a-priori radius bound for neighbors,
// so completeness is certified downstream by the series-vs-oracle checks;
// hitting the cap before stabilizing raises BudgetExceeded instead of
// silently truncating.
inline std::vector<Vec> neighbors(const LatticeBasis& B, const PointednessCertificate& cert,
                                  const SearchPolicy& policy = {}) {
    if (policy.stability_rounds < 1 || policy.radius_cap < 1)
        throw std::invalid_argument("neighbors: policy values must be positive");
    const std::size_t r = B.rank();
    if (r == 0) return {};
    const std::size_t n = B.ambient_dim();
    const Vec zero(n, Int(0));

    std::set<Vec> found;
    unsigned gap = 0;

    // Lex-positive coefficient vectors on the shell max|x_k| = R; the mirror
    // image -x is covered by neighbor symmetry. The candidate point is kept
    // incrementally along the odometer.
    Vec x(r, Int(0));
    Vec h(n, Int(0));
    const auto& cols = B.basis_columns();
    auto scan_shell = [&](const Int& R) -> bool {
        bool added = false;
        auto rec = [&](auto&& self, std::size_t k, bool decided, bool touched) -> void {
            if (k == r) {
                if (!decided || !touched) return;
                std::vector<Vec> verts{zero, h};
                std::sort(verts.begin(), verts.end());
                for (const Vec& g : found)
                    if (dominated(g, verts)) return;
                Simplex s = Simplex::of(verts);
                if (is_simplex(s, B, cert)) {
                    found.insert(h);
                    found.insert(negate(h));
                    added = true;
                }
                return;
            }
            const Int lo = decided ? -R : Int(0);
            for (std::size_t i = 0; i < n; ++i) h[i] += lo * cols[k][i];
            for (Int c = lo; c <= R; ++c) {
                x[k] = c;
                self(self, k + 1, decided || c != 0, touched || c == R || c == -R);
                for (std::size_t i = 0; i < n; ++i) h[i] += cols[k][i];
            }
            Int back = R + 1;
            for (std::size_t i = 0; i < n; ++i) h[i] -= back * cols[k][i];
            x[k] = 0;
        };
        rec(rec, 0, false, false);
        return added;
    };

    for (Int R = 1;; ++R) {
        if (R > policy.radius_cap)
            throw BudgetExceededError("neighbor search hit the radius cap before stabilizing");
        gap = scan_shell(R) ? 0 : gap + 1;
        if (gap >= policy.stability_rounds) break;
    }
    return std::vector<Vec>(found.begin(), found.end());
}

// Orbit representatives of the whole complex. Every simplex translates to
// one whose lex-min vertex is 0 and whose other vertices are then neighbors
// forming a clique in the neighbor graph (faces of simplices are simplices),
// so clique enumeration plus the exact membership filter is complete.
inline ScarfReps scarf_representatives(const LatticeBasis& B, const PointednessCertificate& cert,
                                       const SearchPolicy& policy = {}) {
    const std::size_t n = B.ambient_dim();
    const Vec zero(n, Int(0));
    std::set<Simplex> reps;
    reps.insert(Simplex::of({zero}));

    if (B.rank() > 0) {
        const std::vector<Vec> nb = neighbors(B, cert, policy);
        const std::set<Vec> nb_set(nb.begin(), nb.end());

        std::vector<Vec> clique;  // vertices besides 0, ascending index
        auto rec = [&](auto&& self, std::size_t start) -> void {
            for (std::size_t k = start; k < nb.size(); ++k) {
                bool compatible = true;
                for (const Vec& v : clique) {
                    if (!nb_set.count(sub(nb[k], v))) {
                        compatible = false;
                        break;
                    }
                }
                if (!compatible) continue;
                std::vector<Vec> verts;
                verts.reserve(clique.size() + 2);
                verts.push_back(zero);
                verts.insert(verts.end(), clique.begin(), clique.end());
                verts.push_back(nb[k]);
                Simplex s = Simplex::of(std::move(verts));
                // a pair {0, h} with h a neighbor is a simplex by definition
                if (s.size() == 2 || is_simplex(s, B, cert)) {
                    reps.insert(s.canonical());
                    clique.push_back(nb[k]);
                    self(self, k + 1);
                    clique.pop_back();
                }
            }
        };
        rec(rec, 0);
    }

    ScarfReps out;
    out.simplices.assign(reps.begin(), reps.end());
    return out;
}

// The finite subcomplex of simplices with max(s) <= xi, computed as the
// complex of the finite point set X = {x in Lambda : x <= xi} with the
// perturbed domination rule restricted to X.
inline FiniteComplex subcomplex_below(const LatticeBasis& B, const PointednessCertificate& cert,
                                      const Vec& xi) {
    FiniteComplex K;
    Box box{dominator_lower_bound(xi, cert), xi};
    std::vector<LatticePoint> X = enumerate_box(B, box);
    if (X.empty()) return K;

    std::vector<Vec> pts;
    pts.reserve(X.size());
    for (const LatticePoint& p : X) pts.push_back(p.point);

    auto in_complex = [&](const std::vector<Vec>& verts) -> bool {
        for (const Vec& z : pts)
            if (dominated(z, verts)) return false;
        return true;
    };

    std::set<Simplex> found;
    std::vector<Vec> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        for (std::size_t k = start; k < pts.size(); ++k) {
            cur.push_back(pts[k]);
            if (in_complex(cur)) {
                found.insert(Simplex::of(cur));
                self(self, k + 1);
            }
            cur.pop_back();
        }
    };
    rec(rec, 0);

    K.simplices.assign(found.begin(), found.end());
    return K;
}

// Alternating sum over simplices; the empty set is not counted.
inline Int euler_characteristic(const FiniteComplex& K) {
    Int ec = 0;
    for (const Simplex& s : K.simplices) ec += (s.dim() % 2 == 0) ? 1 : -1;
    return ec;
}

// Independent route for is_simplex on generic input: the inequality body
// {x : Bx <= max over vertices} must contain no integer point that is
// strictly inside every facet bound. A strict interior point (vertices
// included) decides the answer robustly; if none exists but some non-vertex
// point ties the maximum, an infinitesimal tie-break would decide, and that
// ambiguity surfaces as NonGenericInput.
inline bool lattice_free_body_check(const Simplex& s, const LatticeBasis& B) {
    const std::size_t r = B.rank();
    for (const Vec& v : s.vertices())
        if (!B.contains(v))
            throw std::invalid_argument("lattice_free_body_check: vertex not in the lattice");

    const Vec u = s.max_vector();
    const std::size_t n = B.ambient_dim();
    const auto& verts = s.vertices();

    if (r == 0) return true;

    fm::System sys;
    sys.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        fm::Ineq q;
        q.coeff.resize(r);
        for (std::size_t j = 0; j < r; ++j) q.coeff[j] = Rat(B.basis_columns()[j][i]);
        q.rhs = Rat(u[i]);
        sys.push_back(std::move(q));
    }
    Vec lo(r), hi(r);
    for (std::size_t k = 0; k < r; ++k) {
        fm::Interval iv = fm::project_interval(sys, r, k);
        if (!iv.feasible) return true;
        if (!iv.lo || !iv.hi)
            throw std::invalid_argument("lattice_free_body_check: body is unbounded");
        lo[k] = rat_ceil(*iv.lo);
        hi[k] = rat_floor(*iv.hi);
    }

    bool interior = false;
    bool tie = false;
    Vec x(r, Int(0));
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == r) {
            Vec z = B.point(x);
            if (!leq(z, u)) return;
            if (strictly_less(z, u)) {
                interior = true;
                return;
            }
            // z sits on the max boundary. A vertex that attains some
            // coordinate of u alone is robustly on the boundary; every other
            // boundary point is tie-break territory.
            bool is_vertex = false;
            for (const Vec& v : verts)
                if (z == v) {
                    is_vertex = true;
                    break;
                }
            if (is_vertex) {
                for (std::size_t i = 0; i < n; ++i) {
                    if (z[i] != u[i]) continue;
                    bool shared = false;
                    for (const Vec& v : verts)
                        if (v != z && v[i] == u[i]) {
                            shared = true;
                            break;
                        }
                    if (!shared) return;  // unique attainment
                }
            }
            tie = true;
            return;
        }
        for (Int c = lo[k]; c <= hi[k]; ++c) {
            x[k] = c;
            self(self, k + 1);
        }
        x[k] = 0;
    };
    rec(rec, 0);

    if (interior) return false;
    if (tie) throw NonGenericInputError("a lattice point ties the coordinatewise maximum");
    return true;
}

}  // namespace scarf
