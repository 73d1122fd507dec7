#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "scarf/numeric.hpp"

namespace scarf {

// d x n integer matrix, stored by columns a_1..a_n. A zero column is rejected
// at construction: it would make the generated semigroup contain no strictly
// positive functional direction and every downstream pointedness argument
// breaks.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Vec> columns)
        : rows_(rows), cols_(cols), columns_(std::move(columns)) {
        if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("IntMatrix: empty dimensions");
        if (columns_.size() != cols_) throw std::invalid_argument("IntMatrix: column count mismatch");
        for (const Vec& c : columns_) {
            if (c.size() != rows_) throw std::invalid_argument("IntMatrix: column length mismatch");
            if (is_zero(c)) throw std::invalid_argument("IntMatrix: zero column");
        }
    }

    static IntMatrix from_rows(const std::vector<Vec>& rows) {
        if (rows.empty() || rows[0].empty()) throw std::invalid_argument("IntMatrix: empty rows");
        const std::size_t d = rows.size();
        const std::size_t n = rows[0].size();
        std::vector<Vec> cols(n, Vec(d));
        for (std::size_t i = 0; i < d; ++i) {
            if (rows[i].size() != n) throw std::invalid_argument("IntMatrix: ragged rows");
            for (std::size_t j = 0; j < n; ++j) cols[j][i] = rows[i][j];
        }
        return IntMatrix(d, n, std::move(cols));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Vec& col(std::size_t j) const { return columns_.at(j); }
    const std::vector<Vec>& columns() const { return columns_; }
    const Int& operator()(std::size_t i, std::size_t j) const { return columns_[j][i]; }

    // A * x for x in Z^n.
    Vec apply(const Vec& x) const {
        if (x.size() != cols_) throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
        Vec r(rows_, Int(0));
        for (std::size_t j = 0; j < cols_; ++j) {
            if (x[j] == 0) continue;
            for (std::size_t i = 0; i < rows_; ++i) r[i] += x[j] * columns_[j][i];
        }
        return r;
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && columns_ == o.columns_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Vec> columns_;
};

}  // namespace scarf
