#pragma once

#include "bvext/algebra.hpp"

namespace bvext {

struct coefficient_not_algebra : error {
    using error::error;
};

/// A bimodule over the argument algebra, given by commuting unital left/right
/// action matrices per basis element. When the module underlies an algebra in
/// the relevant module category (A itself, its Nakayama twist, k for Hopf
/// coefficients), the product is carried along for the operadic operations.
struct CoefficientModule {
    std::string label;
    std::size_t dim_m = 0;
    std::vector<Matrix> left;   // action of b_i on the left
    std::vector<Matrix> right;  // action of b_i on the right

    bool is_algebra = false;
    std::vector<Scalar> product;  // dim_m^3 structure constants when is_algebra
    Vec unit_m;

    const Scalar& prod(std::size_t i, std::size_t j, std::size_t k) const {
        return product[(i * dim_m + j) * dim_m + k];
    }
    Vec multiply(const Vec& x, const Vec& y) const;
    Vec act_left(const Vec& a, const Vec& m) const;   // a in A coordinates
    Vec act_right(const Vec& m, const Vec& a) const;

    /// A as a bimodule over itself.
    static CoefficientModule regular(const AlgebraPresentation& A);
    /// The Nakayama twist: (a (x) b) acts by sigma(a) m b; carries A's product.
    static CoefficientModule sigma_twist(const FrobeniusStructure& f);
    /// One-dimensional module where both actions go through the given
    /// character (the Hopf counit case).
    static CoefficientModule character(const AlgebraPresentation& A, const Vec& chi,
                                       const std::string& label);

    /// Unitality, module laws and bimodule commutation on all basis pairs.
    ValidationReport validate(const AlgebraPresentation& A) const;
};

}  // namespace bvext
