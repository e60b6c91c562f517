#include "bvext/matrix.hpp"

#include <sstream>

namespace bvext {

Vec zero_vec(std::size_t n, const FieldSpec& f) {
    return Vec(n, Scalar::zero(f));
}

Vec unit_vec(std::size_t n, std::size_t i, const FieldSpec& f) {
    Vec v = zero_vec(n, f);
    v[i] = Scalar::one(f);
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw dimension_mismatch("vector sizes differ");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw dimension_mismatch("vector sizes differ");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

Vec scale(const Scalar& c, const Vec& a) {
    Vec r = a;
    for (auto& x : r)
        x *= c;
    return r;
}

bool is_zero_vec(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero())
            return false;
    return true;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& f)
    : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, const FieldSpec& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols, const FieldSpec& f) {
    Matrix m(rows.size(), cols, f);
    for (std::size_t i = 0; i < rows.size(); ++i)
        m.set_row(i, rows[i]);
    return m;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

void Matrix::set_row(std::size_t i, const Vec& v) {
    if (v.size() != cols_)
        throw dimension_mismatch("row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j)
        at(i, j) = v[j];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero())
            return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_)
        return false;
    return *this == identity(rows_, field_);
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw dimension_mismatch("matrix shapes differ in +");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw dimension_mismatch("matrix shapes differ in -");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] -= o.a_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw dimension_mismatch("matrix shapes differ in *");
    Matrix r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero())
                    continue;
                r.at(i, j) += x * o.at(k, j);
            }
        }
    return r;
}

Matrix Matrix::operator*(const Scalar& c) const {
    Matrix r = *this;
    for (auto& x : r.a_)
        x *= c;
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_)
        throw dimension_mismatch("matrix/vector size mismatch");
    Vec r = zero_vec(rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero())
                r[i] += at(i, j) * v[j];
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
        return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i])
            return false;
    return true;
}

Matrix Matrix::stacked(const Matrix& o) const {
    if (cols_ != o.cols_)
        throw dimension_mismatch("column counts differ in stack");
    Matrix r(rows_ + o.rows_, cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j).str();
        os << "]";
    }
    return os.str();
}

RrefResult rref(const Matrix& m) {
    RrefResult res;
    res.reduced = m;
    Matrix& a = res.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && a.at(piv, c).is_zero())
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(a.at(piv, j), a.at(r, j));
        Scalar inv = a.at(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j)
            a.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || a.at(i, c).is_zero())
                continue;
            Scalar f = a.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                a.at(i, j) -= f * a.at(r, j);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::size_t rank(const Matrix& m) {
    return rref(m).rank;
}

Matrix kernel_basis_matrix(const Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivots)
        is_pivot[c] = true;
    std::vector<Vec> rows;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c])
            continue;
        Vec v = zero_vec(m.cols(), m.field());
        v[c] = Scalar::one(m.field());
        for (std::size_t r = 0; r < rr.rank; ++r)
            v[rr.pivots[r]] = -rr.reduced.at(r, c);
        rows.push_back(v);
    }
    return Matrix::from_rows(rows, m.cols(), m.field());
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows())
        throw dimension_mismatch("rhs size mismatch in solve");
    Matrix aug(m.rows(), m.cols() + 1, m.field());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    RrefResult rr = rref(aug);
    Vec x = zero_vec(m.cols(), m.field());
    for (std::size_t r = 0; r < rr.rank; ++r) {
        std::size_t c = rr.pivots[r];
        if (c == m.cols())
            return std::nullopt;  // pivot in the augmented column: inconsistent
        x[c] = rr.reduced.at(r, m.cols());
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols())
        throw dimension_mismatch("inverse of a nonsquare matrix");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n, m.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar::one(m.field());
    }
    RrefResult rr = rref(aug);
    if (rr.rank < n || rr.pivots[n - 1] >= n)
        return std::nullopt;
    Matrix inv(n, n, m.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.at(i, j) = rr.reduced.at(i, n + j);
    return inv;
}

Subspace Subspace::from_rows(const Matrix& rows) {
    RrefResult rr = rref(rows);
    Subspace s;
    s.ambient_ = rows.cols();
    s.basis_ = Matrix(rr.rank, rows.cols(), rows.field());
    for (std::size_t i = 0; i < rr.rank; ++i)
        s.basis_.set_row(i, rr.reduced.row(i));
    return s;
}

Subspace Subspace::zero(std::size_t ambient, const FieldSpec& f) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(0, ambient, f);
    return s;
}

Subspace Subspace::full(std::size_t ambient, const FieldSpec& f) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix::identity(ambient, f);
    return s;
}

std::optional<Vec> Subspace::membership(const Vec& v) const {
    if (v.size() != ambient_)
        throw dimension_mismatch("vector not in the ambient space");
    // The basis is in RREF: coordinates are read off at the pivot columns.
    Vec coords = zero_vec(dim(), field());
    Vec rest = v;
    for (std::size_t r = 0; r < dim(); ++r) {
        std::size_t c = 0;
        while (c < ambient_ && basis_.at(r, c).is_zero())
            ++c;
        coords[r] = rest[c];
        if (!coords[r].is_zero())
            rest = sub(rest, scale(coords[r], basis_.row(r)));
    }
    if (!is_zero_vec(rest))
        return std::nullopt;
    return coords;
}

bool Subspace::contains(const Subspace& o) const {
    if (o.ambient_dim() != ambient_)
        return false;
    for (std::size_t i = 0; i < o.dim(); ++i)
        if (!contains(o.basis().row(i)))
            return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw dimension_mismatch("subspace ambients differ");
    return Subspace::from_rows(a.basis().stacked(b.basis()));
}

Subspace intersection(const Subspace& a, const Subspace& b) {
    // Zassenhaus: kernel of [A; B] pairing. Solve x A = y B by stacking.
    if (a.ambient_dim() != b.ambient_dim())
        throw dimension_mismatch("subspace ambients differ");
    Matrix stacked = a.basis().stacked(b.basis());
    Matrix ker = kernel_basis_matrix(stacked.transpose());  // rows (x, -y)
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ker.rows(); ++i) {
        Vec v = zero_vec(a.ambient_dim(), a.field());
        for (std::size_t r = 0; r < a.dim(); ++r)
            v = add(v, scale(ker.at(i, r), a.basis().row(r)));
        rows.push_back(v);
    }
    return Subspace::from_rows(Matrix::from_rows(rows, a.ambient_dim(), a.field()));
}

Vec QuotientPresentation::lift(const Vec& coords) const {
    if (coords.size() != dim())
        throw dimension_mismatch("class coordinate size mismatch");
    Vec v = zero_vec(ambient, class_reps.field());
    for (std::size_t i = 0; i < dim(); ++i)
        if (!coords[i].is_zero())
            v = add(v, scale(coords[i], class_reps.row(i)));
    return v;
}

QuotientPresentation quotient(const Subspace& numerator, const Subspace& denominator) {
    if (numerator.ambient_dim() != denominator.ambient_dim())
        throw dimension_mismatch("quotient ambients differ");
    if (!numerator.contains(denominator))
        throw containment_error("denominator is not contained in numerator");

    const FieldSpec& f = numerator.field();
    std::size_t n = numerator.ambient_dim();

    // Extend the denominator basis by numerator rows, then complete to the
    // ambient space; the added numerator rows are the class representatives.
    Matrix work = denominator.basis();
    std::size_t cur = rank(work);
    std::vector<Vec> reps;
    for (std::size_t i = 0; i < numerator.dim(); ++i) {
        Matrix cand = work.stacked(Matrix::from_rows({numerator.basis().row(i)}, n, f));
        if (rank(cand) > cur) {
            work = cand;
            ++cur;
            reps.push_back(numerator.basis().row(i));
        }
    }
    std::size_t d = denominator.dim(), k = reps.size();
    for (std::size_t i = 0; i < n && cur < n; ++i) {
        Matrix cand = work.stacked(Matrix::from_rows({unit_vec(n, i, f)}, n, f));
        if (rank(cand) > cur) {
            work = cand;
            ++cur;
        }
    }

    // work rows: [denominator; reps; completion] form a basis; coordinates of v
    // in that basis are (work^T)^{-1} v, and reduce keeps the rep block.
    auto inv = inverse(work.transpose());
    if (!inv)
        throw error("internal: quotient basis is singular");
    QuotientPresentation q;
    q.ambient = n;
    q.numerator = numerator;
    q.denominator = denominator;
    q.class_reps = Matrix::from_rows(reps, n, f);
    q.reduce = Matrix(k, n, f);
    for (std::size_t i = 0; i < k; ++i)
        q.reduce.set_row(i, inv->row(d + i));
    return q;
}

}  // namespace bvext
