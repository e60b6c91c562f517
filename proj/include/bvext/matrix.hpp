#pragma once

#include "bvext/field.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace bvext {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n, const FieldSpec& f);
Vec unit_vec(std::size_t n, std::size_t i, const FieldSpec& f);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& a);
bool is_zero_vec(const Vec& a);

/// Dense matrix with exact entries, all over one field.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const FieldSpec& f);

    static Matrix identity(std::size_t n, const FieldSpec& f);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols, const FieldSpec& f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    void set_row(std::size_t i, const Vec& v);
    Matrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Scalar& c) const;
    Vec apply(const Vec& v) const;  // matrix * column vector
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    /// Stacks the rows of `o` below this matrix.
    Matrix stacked(const Matrix& o) const;

    std::string str() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    FieldSpec field_ = FieldSpec::rationals();
    std::vector<Scalar> a_;
};

struct RrefResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
    Matrix reduced;                   // the unique reduced row echelon form
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Rows form a basis of the right kernel {v : m v = 0}; dim = cols - rank.
Matrix kernel_basis_matrix(const Matrix& m);

/// Solves m x = b; returns std::nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);

/// Subspace of a coordinate space, held as a reduced-echelon row basis so that
/// equality of subspaces is equality of matrices.
class Subspace {
  public:
    Subspace() = default;
    static Subspace from_rows(const Matrix& rows);
    static Subspace zero(std::size_t ambient, const FieldSpec& f);
    static Subspace full(std::size_t ambient, const FieldSpec& f);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const FieldSpec& field() const { return basis_.field(); }

    bool contains(const Vec& v) const { return membership(v).has_value(); }
    bool contains(const Subspace& o) const;
    /// Coordinates c with sum_i c_i basis_i = v, or absent.
    std::optional<Vec> membership(const Vec& v) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

  private:
    std::size_t ambient_ = 0;
    Matrix basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

/// numerator/denominator with chosen class representatives and a reduction map.
/// reduce * v gives class coordinates; reduce annihilates the denominator and
/// sends representative i to the i-th standard basis vector.
struct QuotientPresentation {
    std::size_t ambient = 0;
    Subspace numerator;
    Subspace denominator;
    Matrix class_reps;  // dim x ambient, rows are representatives
    Matrix reduce;      // dim x ambient

    std::size_t dim() const { return class_reps.rows(); }
    Vec reduce_vector(const Vec& v) const { return reduce.apply(v); }
    /// The representative cochain of a coordinate vector.
    Vec lift(const Vec& coords) const;
};

QuotientPresentation quotient(const Subspace& numerator, const Subspace& denominator);

}  // namespace bvext
