#pragma once

#include <vector>

#include "polyspec/ratfunc.hpp"

namespace polyspec {

// The operator L = sum_{k=1}^{n} a_k(x) D^k with n even, deg(a_k) <= k and
// a_n nonzero. There is no order-zero coefficient: L(1) = 0 always.
class DiffOperator {
public:
    // coeffs[k-1] is a_k, for k = 1..n (n = coeffs.size()).
    explicit DiffOperator(std::vector<Poly> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()); }
    // a_k for 1 <= k <= n.
    const Poly& coeff(int k) const;
    const Poly& leading() const { return coeffs_.back(); }
    const Poly& subleading() const { return coeffs_[coeffs_.size() - 2]; }

    // L applied to a polynomial; deg L(y) <= deg y.
    Poly apply(const Poly& y) const;

    friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const DiffOperator& a, const DiffOperator& b) { return !(a == b); }

private:
    std::vector<Poly> coeffs_;
};

}  // namespace polyspec
