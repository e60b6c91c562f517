#pragma once

#include "bvext/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace bvext {

struct not_frobenius : error {
    using error::error;
};
struct not_diagonalizable : error {
    using error::error;
};
struct not_symmetric : error {
    using error::error;
};

/// A finite-dimensional unital associative algebra given by structure
/// constants: b_i b_j = sum_k c[i][j][k] b_k.
class AlgebraPresentation {
  public:
    AlgebraPresentation(FieldSpec field, std::size_t dim, std::vector<std::string> labels,
                        std::vector<Scalar> structure_constants, Vec unit);

    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return n_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const Vec& unit() const { return unit_; }
    std::string name;

    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * n_ + j) * n_ + k];
    }

    Vec multiply(const Vec& x, const Vec& y) const;
    Vec basis_product(std::size_t i, std::size_t j) const;
    Matrix left_mult(const Vec& x) const;   // matrix of y -> x y
    Matrix right_mult(const Vec& x) const;  // matrix of y -> y x

  private:
    FieldSpec field_;
    std::size_t n_;
    std::vector<std::string> labels_;
    std::vector<Scalar> c_;
    Vec unit_;
};

struct ValidationIssue {
    std::string what;     // e.g. "associativity", "unitality"
    std::string witness;  // first failing triple/pair, human readable
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;
};

/// Checks associativity on all n^3 basis triples and unitality on all basis
/// elements; failures are report entries, never exceptions.
ValidationReport validate_algebra(const AlgebraPresentation& p);

/// Frobenius functional, the dual bases {e_i}, {e^i} and the Nakayama
/// automorphism. e_i is fixed to the presentation basis; e^i is derived.
class FrobeniusStructure {
  public:
    /// Throws not_frobenius when the Gram matrix eps(b_k b_i) is singular.
    FrobeniusStructure(const AlgebraPresentation& algebra, Vec epsilon);

    const AlgebraPresentation& algebra() const { return *a_; }
    const Vec& functional() const { return eps_; }
    Scalar eps(const Vec& x) const;  // eps applied to a coefficient vector
    /// e^i as a coefficient vector.
    Vec dual_basis_vector(std::size_t i) const { return dual_.row(i); }
    const Matrix& gram() const { return gram_; }
    const Matrix& nakayama() const { return sigma_; }
    Matrix nakayama_inverse() const;

    bool is_symmetric() const;

  private:
    const AlgebraPresentation* a_;
    Vec eps_;
    Matrix gram_;   // H[k][i] = eps(b_k b_i)
    Matrix dual_;   // row j = e^j
    Matrix sigma_;  // sigma as a matrix (columns are images of basis vectors)

    void verify() const;
};

/// Eigen-decomposition of A along the Nakayama automorphism.
struct NakayamaGrading {
    std::vector<Scalar> eigenvalues;       // distinct, deterministic order
    std::vector<Subspace> eigenspaces;     // A_lambda per eigenvalue
    std::vector<std::size_t> weight_of_basis;  // eigenbasis index -> eigenvalue index
    Matrix eigenbasis;                     // rows are an eigenbasis of A
};

/// Eigenvalues are sought inside the ground field only; throws
/// not_diagonalizable when the eigenspaces do not sum to A.
/// Refuses prime fields (the splitting arguments need characteristic zero).
NakayamaGrading nakayama_grading(const FrobeniusStructure& f);

/// Roots of det(x I - m) lying in the ground field (rationals only).
std::vector<Scalar> rational_eigenvalues(const Matrix& m);

/// Diagonalizability helper shared with the grading: eigenspaces of the given
/// matrix for in-field eigenvalues; throws not_diagonalizable when proper.
NakayamaGrading diagonalize(const Matrix& m);

}  // namespace bvext
