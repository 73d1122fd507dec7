#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>

#include "scarf/numeric.hpp"

namespace scarf {

// Sparse Laurent polynomial over Z^d exponents; zero coefficients are never
// stored, so equality of maps is equality of polynomials.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t exponent_dim) : dim_(exponent_dim), dim_fixed_(true) {}

    void add_term(const Vec& exponent, const Int& coeff) {
        if (coeff == 0) return;
        if (!dim_fixed_) {
            dim_ = exponent.size();
            dim_fixed_ = true;
        } else if (exponent.size() != dim_) {
            throw std::invalid_argument("LaurentPoly: exponent dimension mismatch");
        }
        auto it = terms_.find(exponent);
        if (it == terms_.end()) {
            terms_.emplace(exponent, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Int coefficient(const Vec& exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Int(0) : it->second;
    }

    const std::map<Vec, Int>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t exponent_dim() const { return dim_; }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

private:
    std::map<Vec, Int> terms_;
    std::size_t dim_ = 0;
    bool dim_fixed_ = false;
};

}  // namespace scarf
