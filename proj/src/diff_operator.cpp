#include "polyspec/diff_operator.hpp"

#include <string>

namespace polyspec {

DiffOperator::DiffOperator(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
    int n = static_cast<int>(coeffs_.size());
    if (n < 2 || n % 2 != 0)
        throw std::domain_error("DiffOperator: order must be even and >= 2, got " +
                                std::to_string(n));
    if (coeffs_.back().is_zero())
        throw std::domain_error("DiffOperator: leading coefficient a_" + std::to_string(n) +
                                " must be nonzero");
    for (int k = 1; k <= n; ++k) {
        if (coeffs_[static_cast<size_t>(k - 1)].degree_or(-1) > k)
            throw std::domain_error("DiffOperator: deg(a_" + std::to_string(k) +
                                    ") exceeds " + std::to_string(k));
    }
}

const Poly& DiffOperator::coeff(int k) const {
    if (k < 1 || k > order())
        throw std::out_of_range("DiffOperator::coeff: index " + std::to_string(k));
    return coeffs_[static_cast<size_t>(k - 1)];
}

Poly DiffOperator::apply(const Poly& y) const {
    Poly acc;
    Poly d = y;
    for (int k = 1; k <= order(); ++k) {
        d = d.derivative();
        if (d.is_zero()) break;
        acc += coeffs_[static_cast<size_t>(k - 1)] * d;
    }
    return acc;
}

}  // namespace polyspec
