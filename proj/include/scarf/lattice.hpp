#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scarf/errors.hpp"
#include "scarf/hnf.hpp"
#include "scarf/int_matrix.hpp"
#include "scarf/numeric.hpp"

namespace scarf {

// A sublattice of Z^n, stored as the canonical column-HNF basis. The HNF form
// gives two things at once: a deterministic representation (the basis depends
// only on the lattice) and the staircase pivot structure that membership and
// box enumeration back-substitute along.
class LatticeBasis {
public:
    // Canonicalizes the span of `generators`; dependent generators collapse.
    static LatticeBasis span(std::size_t ambient_dim, const std::vector<Vec>& generators) {
        for (const Vec& g : generators)
            if (g.size() != ambient_dim)
                throw std::invalid_argument("LatticeBasis: generator length mismatch");
        HermiteForm h = hnf_columns(generators, ambient_dim);
        return LatticeBasis(ambient_dim, std::move(h));
    }

    // As `span`, but rejects inputs whose columns are linearly dependent.
    static LatticeBasis from_basis(std::size_t ambient_dim, const std::vector<Vec>& basis_cols) {
        LatticeBasis b = span(ambient_dim, basis_cols);
        if (b.rank() != basis_cols.size())
            throw std::invalid_argument("LatticeBasis: columns are linearly dependent");
        return b;
    }

    static LatticeBasis zero(std::size_t ambient_dim) { return span(ambient_dim, {}); }

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t rank() const { return hnf_.columns.size(); }
    const std::vector<Vec>& basis_columns() const { return hnf_.columns; }
    const std::vector<std::size_t>& pivot_rows() const { return hnf_.pivot_rows; }

    // B * x.
    Vec point(const Vec& coeffs) const {
        if (coeffs.size() != rank()) throw std::invalid_argument("LatticeBasis::point: bad coeff length");
        Vec p(ambient_dim_, Int(0));
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (coeffs[j] == 0) continue;
            for (std::size_t i = 0; i < ambient_dim_; ++i) p[i] += coeffs[j] * hnf_.columns[j][i];
        }
        return p;
    }

    // Solves B x = v over Z; back-substitution along the pivot staircase,
    // then a full re-check so vectors outside the column span are rejected.
    std::optional<Vec> membership(const Vec& v) const {
        if (v.size() != ambient_dim_)
            throw std::invalid_argument("LatticeBasis::membership: dimension mismatch");
        Vec x(rank(), Int(0));
        for (std::size_t k = 0; k < rank(); ++k) {
            const std::size_t p = hnf_.pivot_rows[k];
            Int rem = v[p];
            for (std::size_t j = 0; j < k; ++j) rem -= x[j] * hnf_.columns[j][p];
            const Int& piv = hnf_.columns[k][p];
            if (rem % piv != 0) return std::nullopt;
            x[k] = rem / piv;
        }
        if (point(x) != v) return std::nullopt;
        return x;
    }

    bool contains(const Vec& v) const { return membership(v).has_value(); }

private:
    LatticeBasis(std::size_t ambient_dim, HermiteForm h) : ambient_dim_(ambient_dim), hnf_(std::move(h)) {}

    std::size_t ambient_dim_;
    HermiteForm hnf_;
};

// Saturated integer kernel {x in Z^n : A x = 0}, via unimodular column
// reduction of A: the transform columns beyond rank(A) span the kernel
// exactly (not a finite-index sublattice of it).
inline LatticeBasis kernel_basis(const IntMatrix& A) {
    std::vector<Vec> work = A.columns();
    std::vector<Vec> u = identity_columns(A.cols());
    HermiteForm h = hnf_columns(std::move(work), A.rows(), &u);
    std::vector<Vec> kernel_cols(u.begin() + static_cast<std::ptrdiff_t>(h.columns.size()), u.end());
    return LatticeBasis::span(A.cols(), kernel_cols);
}

// One integer solution of A xi = b, or nullopt if b is not in A * Z^n.
inline std::optional<Vec> solve_particular(const IntMatrix& A, const Vec& b) {
    if (b.size() != A.rows()) throw std::invalid_argument("solve_particular: dimension mismatch");
    std::vector<Vec> work = A.columns();
    std::vector<Vec> u = identity_columns(A.cols());
    HermiteForm h = hnf_columns(std::move(work), A.rows(), &u);

    const std::size_t rank = h.columns.size();
    Vec y(rank, Int(0));
    for (std::size_t k = 0; k < rank; ++k) {
        const std::size_t p = h.pivot_rows[k];
        Int rem = b[p];
        for (std::size_t j = 0; j < k; ++j) rem -= y[j] * h.columns[j][p];
        const Int& piv = h.columns[k][p];
        if (rem % piv != 0) return std::nullopt;
        y[k] = rem / piv;
    }
    Vec hy(A.rows(), Int(0));
    for (std::size_t j = 0; j < rank; ++j)
        for (std::size_t i = 0; i < A.rows(); ++i) hy[i] += y[j] * h.columns[j][i];
    if (hy != b) return std::nullopt;

    Vec xi(A.cols(), Int(0));
    for (std::size_t j = 0; j < rank; ++j)
        for (std::size_t i = 0; i < A.cols(); ++i) xi[i] += y[j] * u[j][i];
    return xi;
}

struct Box {
    Vec lower;
    Vec upper;

    bool empty() const {
        for (std::size_t i = 0; i < lower.size(); ++i)
            if (lower[i] > upper[i]) return true;
        return false;
    }
};

struct LatticePoint {
    Vec point;   // ambient coordinates
    Vec coeffs;  // basis coefficients
};

// Visits every lattice point with lower <= B x <= upper. The visitor returns
// false to stop early. Order of visitation is coefficient-DFS, not sorted.
//
// Bounds per level come from the pivot staircase: once x_0..x_{k-1} are
// fixed, the pivot row of column k pins x_k to an interval, and every row
// strictly between consecutive pivots is fully determined and can prune.
template <typename Visit>
inline void for_each_in_box(const LatticeBasis& B, const Box& box, Visit&& visit) {
    const std::size_t n = B.ambient_dim();
    if (box.lower.size() != n || box.upper.size() != n)
        throw std::invalid_argument("for_each_in_box: box dimension mismatch");
    if (box.empty()) return;

    const std::size_t r = B.rank();
    const auto& pivots = B.pivot_rows();
    const auto& cols = B.basis_columns();

    // Rows above the first pivot are identically zero on the lattice.
    const std::size_t first_pivot = r == 0 ? n : pivots[0];
    for (std::size_t i = 0; i < first_pivot; ++i)
        if (box.lower[i] > 0 || box.upper[i] < 0) return;

    if (r == 0) {
        Vec zero(n, Int(0));
        visit(LatticePoint{zero, Vec{}});
        return;
    }

    Vec partial(n, Int(0));
    Vec coeffs(r, Int(0));
    bool keep_going = true;

    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (!keep_going) return;
        if (k == r) {
            for (std::size_t i = pivots[r - 1] + 1; i < n; ++i)
                if (partial[i] < box.lower[i] || partial[i] > box.upper[i]) return;
            if (!visit(LatticePoint{partial, coeffs})) keep_going = false;
            return;
        }
        // rows strictly between the previous pivot and this one are final
        const std::size_t prev = k == 0 ? pivots[0] : pivots[k - 1] + 1;
        for (std::size_t i = prev; i < pivots[k]; ++i)
            if (partial[i] < box.lower[i] || partial[i] > box.upper[i]) return;

        const std::size_t p = pivots[k];
        const Int& d = cols[k][p];
        Int lo = ceil_div(box.lower[p] - partial[p], d);
        Int hi = floor_div(box.upper[p] - partial[p], d);
        for (Int c = lo; c <= hi && keep_going; ++c) {
            coeffs[k] = c;
            for (std::size_t i = p; i < n; ++i) partial[i] += c * cols[k][i];
            self(self, k + 1);
            for (std::size_t i = p; i < n; ++i) partial[i] -= c * cols[k][i];
        }
        coeffs[k] = 0;
    };
    rec(rec, 0);
}

// All lattice points in the box, sorted lexicographically by ambient point.
inline std::vector<LatticePoint> enumerate_box(const LatticeBasis& B, const Box& box) {
    std::vector<LatticePoint> out;
    for_each_in_box(B, box, [&](const LatticePoint& p) {
        out.push_back(p);
        return true;
    });
    std::sort(out.begin(), out.end(),
              [](const LatticePoint& a, const LatticePoint& b) { return a.point < b.point; });
    return out;
}

// Distinct representatives of L modulo Lambda, for Lambda a finite-index
// sublattice of L. Count equals the index |det M| where Lambda = L * M.
inline std::vector<Vec> cosets(const LatticeBasis& L, const LatticeBasis& lambda) {
    if (L.ambient_dim() != lambda.ambient_dim())
        throw std::invalid_argument("cosets: ambient dimension mismatch");
    std::vector<Vec> m_cols;
    for (const Vec& c : lambda.basis_columns()) {
        auto x = L.membership(c);
        if (!x) throw NotSublatticeError("sublattice basis vector is not a member of the big lattice");
        m_cols.push_back(*x);
    }
    if (lambda.rank() < L.rank())
        throw InfiniteIndexError("sublattice has smaller rank; index is infinite");

    const std::size_t r = L.rank();
    if (r == 0) return {Vec(L.ambient_dim(), Int(0))};

    // M is square full-rank; its HNF is lower triangular with positive
    // diagonal, and {x : 0 <= x_k < H_kk} is a complete residue system.
    HermiteForm h = hnf_columns(m_cols, r);
    std::vector<Vec> reps;
    Vec x(r, Int(0));
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == r) {
            reps.push_back(L.point(x));
            return;
        }
        for (Int v = 0; v < h.columns[k][k]; ++v) {
            x[k] = v;
            self(self, k + 1);
        }
        x[k] = 0;
    };
    rec(rec, 0);
    return reps;
}

}  // namespace scarf
