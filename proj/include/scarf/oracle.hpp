#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "scarf/errors.hpp"
#include "scarf/int_matrix.hpp"
#include "scarf/lattice.hpp"
#include "scarf/numeric.hpp"
#include "scarf/pointed.hpp"

// Ground-truth semigroup computations by direct enumeration. Everything here
// is deliberately naive: the point is to validate the complex-based pipeline
// against code that shares nothing with it beyond the basic lattice types.
namespace scarf::oracle {

// All xi >= 0 with A xi = b, in lexicographic order. Finite because each
// coordinate is capped by the grading: <w, xi> = <-l, b>.
inline std::vector<Vec> enumerate_Tb(const IntMatrix& A, const PointednessCertificate& cert,
                                     const Vec& b) {
    if (b.size() != A.rows()) throw std::invalid_argument("enumerate_Tb: dimension mismatch");
    std::vector<Vec> out;
    if (cert.grading(b) < 0) return out;

    const std::size_t n = A.cols();
    Vec xi(n, Int(0));
    Vec rem = b;
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == n) {
            if (is_zero(rem)) out.push_back(xi);
            return;
        }
        Int k = 0;
        while (true) {
            xi[j] = k;
            if (cert.grading(rem) < 0) break;
            self(self, j + 1);
            for (std::size_t i = 0; i < A.rows(); ++i) rem[i] -= A(i, j);
            ++k;
        }
        // undo the k subtractions
        for (std::size_t i = 0; i < A.rows(); ++i) rem[i] += k * A(i, j);
        xi[j] = 0;
    };
    rec(rec, 0);
    return out;
}

// One representative per class of T_b under xi ~ eta iff xi - eta in Lambda;
// first member of each class in lexicographic order.
inline std::vector<Vec> class_representatives(const IntMatrix& A, const PointednessCertificate& cert,
                                              const LatticeBasis& lambda, const Vec& b) {
    for (const Vec& c : lambda.basis_columns())
        if (!is_zero(A.apply(c)))
            throw std::invalid_argument("class_representatives: lattice is not inside ker A");
    std::vector<Vec> t = enumerate_Tb(A, cert, b);
    std::vector<Vec> reps;
    for (const Vec& xi : t) {
        bool fresh = true;
        for (const Vec& r : reps) {
            if (lambda.contains(sub(xi, r))) {
                fresh = false;
                break;
            }
        }
        if (fresh) reps.push_back(xi);
    }
    return reps;
}

// Number of classes of T_b under xi ~ eta iff xi - eta in Lambda.
inline Int count_classes(const IntMatrix& A, const PointednessCertificate& cert,
                         const LatticeBasis& lambda, const Vec& b) {
    return Int(class_representatives(A, cert, lambda, b).size());
}

// Membership flags from breadth-first closure under adding columns;
// representation counts from independent T_b enumeration.
struct MembershipTable {
    Rat bound;
    std::map<Vec, Int> counts;  // b in G (within the graded region) -> |T_b|

    bool member(const Vec& b) const { return counts.count(b) > 0; }
    Int count(const Vec& b) const {
        auto it = counts.find(b);
        return it == counts.end() ? Int(0) : it->second;
    }
};

inline MembershipTable membership_table(const IntMatrix& A, const PointednessCertificate& cert,
                                        const Rat& bound) {
    if (bound < 0) throw std::invalid_argument("membership_table: bound must be >= 0");
    MembershipTable table;
    table.bound = bound;

    std::set<Vec> seen;
    std::deque<Vec> queue;
    Vec zero(A.rows(), Int(0));
    seen.insert(zero);
    queue.push_back(zero);
    while (!queue.empty()) {
        Vec b = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < A.cols(); ++j) {
            Vec b2 = b;
            for (std::size_t i = 0; i < A.rows(); ++i) b2[i] += A(i, j);
            if (cert.grading(b2) > bound || seen.count(b2)) continue;
            seen.insert(b2);
            queue.push_back(b2);
        }
    }
    for (const Vec& b : seen) table.counts[b] = Int(enumerate_Tb(A, cert, b).size());
    return table;
}

// Largest integer not representable, by scanning a coin-style reachability
// table until min(a) consecutive members certify that no later gap exists.
inline Int brute_frobenius(const std::vector<Int>& a) {
    if (a.empty()) throw std::invalid_argument("brute_frobenius: no generators");
    Int g = 0;
    Int amin = a.front();
    for (const Int& v : a) {
        if (v < 1) throw std::invalid_argument("brute_frobenius: generators must be positive");
        g = gcd(g, v);
        if (v < amin) amin = v;
    }
    if (g != 1) throw GcdNotOneError("generators have a common divisor; the gaps are unbounded");

    std::vector<bool> reachable{true};  // reachable[x] for x = 0,1,2,...
    long last_gap = -1;
    for (long x = 1;; ++x) {
        bool r = false;
        for (const Int& v : a) {
            if (v > x) continue;
            if (reachable[static_cast<std::size_t>(x - v.get_si())]) {
                r = true;
                break;
            }
        }
        reachable.push_back(r);
        if (!r) last_gap = x;
        if (Int(x - last_gap) >= amin) break;
    }
    return Int(last_gap);
}

}  // namespace scarf::oracle
