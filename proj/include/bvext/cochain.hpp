#pragma once

#include "bvext/coefficients.hpp"

#include <map>
#include <memory>

namespace bvext {

struct index_out_of_range : error {
    using error::error;
};
struct budget_exceeded : error {
    using error::error;
};

/// Element of C^n = Hom(A^{(x)n}, M), stored as a dense tensor: flat index
/// (((i_1 n_A + i_2) ... ) n_A + i_n) dim_m + m.
struct Cochain {
    std::size_t degree = 0;
    Vec data;
};

/// Operator between cochain spaces, materialized on flattened coordinates.
struct ComplexOperator {
    std::size_t source_degree = 0;
    std::size_t target_degree = 0;
    Matrix matrix;
};

/// How insertions compose cochains: direct argument substitution (the
/// enveloping-algebra case) or comultiplication-twisted substitution (the
/// Hopf case, where coefficients are scalars).
enum class InsertionRule { direct, comult };

/// The Hochschild-type cochain complex of an algebra with bimodule
/// coefficients, together with its endomorphism-operad structure.
class HochschildComplex {
  public:
    HochschildComplex(const AlgebraPresentation& A, CoefficientModule M,
                      std::size_t budget = default_budget);

    /// Switches insertions to the comultiplication rule; `comult[i]` holds the
    /// coefficients of Delta(b_i) as an n x n matrix.
    void use_comult_insertion(std::vector<Matrix> comult);

    const AlgebraPresentation& algebra() const { return *A_; }
    const CoefficientModule& module() const { return M_; }
    InsertionRule insertion_rule() const { return rule_; }

    static constexpr std::size_t default_budget = 1u << 22;
    std::size_t space_dim(std::size_t n) const;  // throws budget_exceeded past the cap

    Cochain zero_cochain(std::size_t n) const;
    Cochain basis_cochain(std::size_t n, std::size_t flat) const;
    /// Identity 1-cochain (the operad identity); requires dim_m == dim A for
    /// the direct rule, and is eps-dual for character coefficients.
    Cochain one_cochain() const;
    /// Multiplication 2-cochain mu(a, b) = ab (as an M-value).
    Cochain mu_cochain() const;
    /// Unit 0-cochain e = 1_M.
    Cochain unit_cochain() const;

    Cochain coface(std::size_t i, const Cochain& f) const;
    Cochain codegeneracy(std::size_t j, const Cochain& f) const;
    const Matrix& differential(std::size_t n) const;    // beta: C^n -> C^{n+1}, cached
    Matrix coface_matrix(std::size_t i, std::size_t n) const;
    Matrix codegeneracy_matrix(std::size_t j, std::size_t n) const;

    Cochain cup(const Cochain& f, const Cochain& g) const;
    Cochain circ(const Cochain& f, std::size_t i, const Cochain& g) const;
    Cochain bracket(const Cochain& f, const Cochain& g) const;

    /// phi -> phi o_i g for fixed g, as a matrix C^p -> C^{p+q-1}.
    Matrix insert_fixed_arg(const Cochain& g, std::size_t i, std::size_t p) const;
    /// psi -> g o_i psi for fixed g, as a matrix C^q -> C^{p+q-1}.
    Matrix insert_into_fixed(const Cochain& g, std::size_t i, std::size_t q) const;

    bool equal(const Cochain& a, const Cochain& b) const;

  private:
    const AlgebraPresentation* A_;
    CoefficientModule M_;
    InsertionRule rule_ = InsertionRule::direct;
    std::vector<Matrix> comult_;
    std::size_t budget_;
    mutable std::map<std::size_t, Matrix> beta_cache_;

    void add_coface_into(Matrix& target, std::size_t i, std::size_t n, const Scalar& sign) const;
};

struct OperadCheck {
    std::string name;
    bool ok = true;
    std::string witness;
};

struct OperadReport {
    bool ok = true;
    std::vector<OperadCheck> checks;
    void add(OperadCheck c);
};

/// Exhaustive check of the operad axioms (insertion associativity in its
/// three index regimes, unit laws, and the multiplication axioms) on all
/// standard basis cochains of degrees up to the bounds.
OperadReport operad_axiom_report(const HochschildComplex& C, std::size_t max_p, std::size_t max_q,
                                 std::size_t max_r);

}  // namespace bvext
