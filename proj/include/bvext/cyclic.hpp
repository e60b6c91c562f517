#pragma once

#include "bvext/cochain.hpp"

#include <functional>

namespace bvext {

struct axiom_violation : error {
    using error::error;
};
struct not_cyclic : error {
    using error::error;
};

/// A right contraaction gamma: Hom(A, M) -> M on a coefficient module.
/// Elements of Hom(A, M) are flattened as (a-index * dim_m + m-index).
struct Contraaction {
    CoefficientModule coefficient;
    Matrix gamma;  // dim_m x (dim A * dim_m)
    bool stable = false;

    Vec apply(const Vec& hom_flat) const { return gamma.apply(hom_flat); }
};

/// The three contramodule identities, checked on basis inputs: right
/// linearity gamma(f(a(-))) = gamma(f) a, contraassociativity
/// gamma.(gamma..(g)) = gamma(g(. (x) 1)), and counitality gamma(m id(-)) = m.
ValidationReport contraaction_axioms(const AlgebraPresentation& A, const Contraaction& c);

/// gamma(f) = sum_i eps(f(e_i)) e^i on the Nakayama twist of A. The axioms
/// are machine-verified; failure indicates an implementation bug.
Contraaction frobenius_contraaction(const FrobeniusStructure& f);

/// D(m) = gamma(a -> a m) with plain algebra multiplication when the
/// coefficients have algebra size, and the module action otherwise.
/// A contraaction is stable when D = id; for the Frobenius contraaction
/// D equals the Nakayama automorphism.
Matrix stability_defect(const AlgebraPresentation& A, const Contraaction& c);

/// For symmetric Frobenius structures: the Frobenius gamma transported along
/// a -> eps(a(-)) agrees with g -> g(- (x) 1).
struct CrosscheckReport {
    bool equal = true;
    std::string witness;
};
CrosscheckReport symmetric_contraaction_crosscheck(const FrobeniusStructure& f);

/// Cyclic machinery over a cochain complex: the cocyclic operator tau, its
/// gamma-built inverse rotation, and the Connes boundary B.
///
/// The gamma formula rotates cochains one way; the operator satisfying the
/// cocyclic coface relations and the insertion compatibilities in classical
/// indexing is its matrix inverse, which is what tau() returns.
class CyclicStructure {
  public:
    using RotationBuilder = std::function<Matrix(std::size_t /*degree*/)>;

    CyclicStructure(const HochschildComplex& C, Contraaction c);
    /// Overrides how the rotation is built (the Hopf path constructs it from
    /// the antipode translation map instead of the module action).
    void set_rotation_builder(RotationBuilder b);

    const HochschildComplex& complex() const { return *C_; }
    const Contraaction& contraaction() const { return contra_; }
    const Matrix& defect() const { return defect_; }
    bool is_cyclic() const { return defect_.is_identity(); }

    const Matrix& rotation(std::size_t n) const;  // gamma-built operator on C^n
    const Matrix& tau(std::size_t n) const;       // its inverse
    Matrix tau_power_np1(std::size_t n) const;    // tau^{n+1} on C^n
    /// Conjugation prediction for tau^{n+1}: f -> D^{-1} o f o D (x) ... (x) D.
    Matrix predicted_defect_operator(std::size_t n) const;
    const Matrix& connes_B(std::size_t n) const;  // C^n -> C^{n-1}, n >= 1

  private:
    const HochschildComplex* C_;
    Contraaction contra_;
    Matrix defect_;
    RotationBuilder builder_;
    mutable std::map<std::size_t, Matrix> rot_cache_, tau_cache_, b_cache_;

    Matrix build_rotation(std::size_t n) const;
};

struct CyclicCheck {
    std::string name;
    bool ok = true;
    std::string witness;
};

struct CyclicReport {
    bool all_identities = true;  // the para-cocyclic families
    bool cyclic = false;         // tau^{n+1} = id verdict
    std::vector<CyclicCheck> checks;
    void add(CyclicCheck c);
};

/// Checks, exhaustively on basis cochains through the degree bound:
/// tau(phi o_1 psi) = tau psi o_q tau phi, tau(phi o_i psi) = tau phi o_{i-1}
/// psi, tau 1 = 1, tau mu = mu, and tau^{n+1} against the defect prediction.
CyclicReport cyclic_operad_report(const CyclicStructure& cs, std::size_t max_degree);

/// beta B + B beta = id - tau^{n+1} in every degree <= bound (degree 0 uses
/// B beta alone); exact matrix identities.
CyclicReport homotopy_report(const CyclicStructure& cs, std::size_t max_degree);

}  // namespace bvext
