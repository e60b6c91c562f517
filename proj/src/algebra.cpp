#include "bvext/algebra.hpp"

#include <algorithm>

namespace bvext {

AlgebraPresentation::AlgebraPresentation(FieldSpec field, std::size_t dim,
                                         std::vector<std::string> labels,
                                         std::vector<Scalar> structure_constants, Vec unit)
    : field_(field), n_(dim), labels_(std::move(labels)), c_(std::move(structure_constants)),
      unit_(std::move(unit)) {
    if (n_ == 0)
        throw error("algebra dimension must be >= 1");
    if (c_.size() != n_ * n_ * n_)
        throw dimension_mismatch("structure constant tensor has wrong size");
    if (unit_.size() != n_)
        throw dimension_mismatch("unit vector has wrong size");
    if (labels_.empty())
        for (std::size_t i = 0; i < n_; ++i)
            labels_.push_back("b" + std::to_string(i));
}

Vec AlgebraPresentation::multiply(const Vec& x, const Vec& y) const {
    if (x.size() != n_ || y.size() != n_)
        throw dimension_mismatch("multiply: vectors must have length dim");
    Vec z = zero_vec(n_, field_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (y[j].is_zero())
                continue;
            Scalar xy = x[i] * y[j];
            for (std::size_t k = 0; k < n_; ++k)
                if (!c(i, j, k).is_zero())
                    z[k] += xy * c(i, j, k);
        }
    }
    return z;
}

Vec AlgebraPresentation::basis_product(std::size_t i, std::size_t j) const {
    Vec z(n_, Scalar::zero(field_));
    for (std::size_t k = 0; k < n_; ++k)
        z[k] = c(i, j, k);
    return z;
}

Matrix AlgebraPresentation::left_mult(const Vec& x) const {
    Matrix m(n_, n_, field_);
    for (std::size_t j = 0; j < n_; ++j) {
        Vec col = multiply(x, unit_vec(n_, j, field_));
        for (std::size_t k = 0; k < n_; ++k)
            m.at(k, j) = col[k];
    }
    return m;
}

Matrix AlgebraPresentation::right_mult(const Vec& x) const {
    Matrix m(n_, n_, field_);
    for (std::size_t j = 0; j < n_; ++j) {
        Vec col = multiply(unit_vec(n_, j, field_), x);
        for (std::size_t k = 0; k < n_; ++k)
            m.at(k, j) = col[k];
    }
    return m;
}

ValidationReport validate_algebra(const AlgebraPresentation& p) {
    ValidationReport rep;
    std::size_t n = p.dim();
    auto label = [&](std::size_t i) { return p.basis_labels()[i]; };
    for (std::size_t i = 0; i < n && rep.ok; ++i)
        for (std::size_t j = 0; j < n && rep.ok; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = p.multiply(p.basis_product(i, j), unit_vec(n, k, p.field()));
                Vec rhs = p.multiply(unit_vec(n, i, p.field()), p.basis_product(j, k));
                if (lhs != rhs) {
                    rep.ok = false;
                    rep.issues.push_back({"associativity", "(" + label(i) + " " + label(j) +
                                                               ") " + label(k) + " != " + label(i) +
                                                               " (" + label(j) + " " + label(k) +
                                                               ")"});
                    break;
                }
            }
    for (std::size_t i = 0; i < n; ++i) {
        Vec b = unit_vec(n, i, p.field());
        if (p.multiply(p.unit(), b) != b || p.multiply(b, p.unit()) != b) {
            rep.ok = false;
            rep.issues.push_back({"unitality", "1 * " + label(i) + " or " + label(i) + " * 1"});
            break;
        }
    }
    return rep;
}

FrobeniusStructure::FrobeniusStructure(const AlgebraPresentation& algebra, Vec epsilon)
    : a_(&algebra), eps_(std::move(epsilon)) {
    std::size_t n = algebra.dim();
    if (eps_.size() != n)
        throw dimension_mismatch("Frobenius functional has wrong length");
    gram_ = Matrix(n, n, algebra.field());
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            gram_.at(k, i) = eps(algebra.basis_product(k, i));
    auto hinv = inverse(gram_);
    if (!hinv)
        throw not_frobenius("the Gram matrix eps(b_k b_i) is singular");
    // Row j of H^{-1} solves eps(e^j e_i) = delta^j_i.
    dual_ = *hinv;
    // eps(b_i b_j) = eps(sigma(b_j) b_i) gives H^T sigma = H, solved columnwise.
    auto htinv = inverse(gram_.transpose());
    sigma_ = (*htinv) * gram_;
    verify();
}

Scalar FrobeniusStructure::eps(const Vec& x) const {
    Scalar s = Scalar::zero(a_->field());
    for (std::size_t i = 0; i < x.size(); ++i)
        s += eps_[i] * x[i];
    return s;
}

Matrix FrobeniusStructure::nakayama_inverse() const {
    return *inverse(sigma_);
}

void FrobeniusStructure::verify() const {
    const auto& A = *a_;
    std::size_t n = A.dim();
    const FieldSpec& f = A.field();
    for (std::size_t i = 0; i < n; ++i) {
        // eps(e^j e_i) = delta
        for (std::size_t j = 0; j < n; ++j) {
            Scalar want = i == j ? Scalar::one(f) : Scalar::zero(f);
            if (eps(A.multiply(dual_.row(j), unit_vec(n, i, f))) != want)
                throw error("internal: dual basis fails eps(e^j e_i) = delta");
        }
        Vec bi = unit_vec(n, i, f);
        // eps(a b) = eps(sigma(b) a) on all basis pairs
        for (std::size_t j = 0; j < n; ++j) {
            Vec bj = unit_vec(n, j, f);
            if (eps(A.multiply(bi, bj)) != eps(A.multiply(sigma_.apply(bj), bi)))
                throw error("internal: Nakayama property fails");
        }
        // a = sum_i eps(a e_i) e^i
        Vec rec = zero_vec(n, f);
        for (std::size_t k = 0; k < n; ++k)
            rec = add(rec, scale(eps(A.multiply(bi, unit_vec(n, k, f))), dual_.row(k)));
        if (rec != bi)
            throw error("internal: counit decomposition fails");
    }
    // 1 = sum_i eps(e_i) e^i
    Vec one = zero_vec(n, f);
    for (std::size_t k = 0; k < n; ++k)
        one = add(one, scale(eps_[k], dual_.row(k)));
    if (one != A.unit())
        throw error("internal: unit decomposition fails");
    // sigma is a unital algebra automorphism
    if (sigma_.apply(A.unit()) != A.unit())
        throw error("internal: sigma(1) != 1");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec lhs = sigma_.apply(A.basis_product(i, j));
            Vec rhs = A.multiply(sigma_.apply(unit_vec(n, i, f)), sigma_.apply(unit_vec(n, j, f)));
            if (lhs != rhs)
                throw error("internal: sigma is not multiplicative");
        }
}

bool FrobeniusStructure::is_symmetric() const {
    bool by_sigma = sigma_.is_identity();
    bool by_form = true;
    std::size_t n = a_->dim();
    for (std::size_t i = 0; i < n && by_form; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (eps(a_->basis_product(i, j)) != eps(a_->basis_product(j, i))) {
                by_form = false;
                break;
            }
    if (by_sigma != by_form)
        throw error("internal: sigma = id and eps symmetry disagree");
    return by_sigma;
}

std::vector<Scalar> rational_eigenvalues(const Matrix& m) {
    if (!m.field().is_rational())
        throw error("eigenvalue search is implemented over Q only");
    std::size_t n = m.rows();
    // Characteristic polynomial by the Faddeev-LeVerrier recursion.
    std::vector<Rational> coef(n + 1);  // coef[k] multiplies x^k
    coef[n] = 1;
    Matrix mk = m;  // M_1 = m
    Rational ck;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            tr += mk.at(i, i).rational();
        ck = -tr / int(k);
        coef[n - k] = ck;
        if (k == n)
            break;
        Matrix shifted = mk;
        for (std::size_t i = 0; i < n; ++i)
            shifted.at(i, i) += Scalar::from_rational(ck);
        mk = m * shifted;
    }
    // Clear denominators to an integer polynomial.
    Integer lcm = 1;
    for (const auto& c : coef)
        lcm = boost::multiprecision::lcm(lcm, Integer(boost::multiprecision::denominator(c)));
    std::vector<Integer> ic(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        ic[k] = Integer(boost::multiprecision::numerator(coef[k])) *
                (lcm / Integer(boost::multiprecision::denominator(coef[k])));
    // Strip zero roots.
    std::size_t low = 0;
    while (low <= n && ic[low] == 0)
        ++low;
    std::vector<Scalar> roots;
    if (low > 0 && low <= n)
        roots.push_back(Scalar::from_int(0, m.field()));
    if (low > n)
        return roots;
    auto eval_at = [&](const Rational& x) {
        Rational v = 0;
        for (std::size_t k = n + 1; k-- > low;)
            v = v * x + Rational(ic[k]);
        return v;
    };
    auto divisors = [](Integer v) {
        std::vector<Integer> ds;
        v = boost::multiprecision::abs(v);
        for (Integer d = 1; d * d <= v; ++d)
            if (v % d == 0) {
                ds.push_back(d);
                ds.push_back(v / d);
            }
        return ds;
    };
    for (const Integer& p : divisors(ic[low]))
        for (const Integer& q : divisors(ic[n]))
            for (int sign : {1, -1}) {
                Rational cand = Rational(p * sign, q);
                if (eval_at(cand) == 0) {
                    Scalar s = Scalar::from_rational(cand);
                    if (std::find(roots.begin(), roots.end(), s) == roots.end())
                        roots.push_back(s);
                }
            }
    std::sort(roots.begin(), roots.end(),
              [](const Scalar& a, const Scalar& b) { return a.rational() < b.rational(); });
    return roots;
}

NakayamaGrading diagonalize(const Matrix& m) {
    NakayamaGrading g;
    g.eigenvalues = rational_eigenvalues(m);
    std::size_t n = m.rows(), total = 0;
    std::vector<Vec> basis_rows;
    for (std::size_t e = 0; e < g.eigenvalues.size(); ++e) {
        Matrix shifted = m;
        for (std::size_t i = 0; i < n; ++i)
            shifted.at(i, i) -= g.eigenvalues[e];
        Matrix ker = kernel_basis_matrix(shifted);
        Subspace es = Subspace::from_rows(ker);
        total += es.dim();
        for (std::size_t r = 0; r < es.dim(); ++r) {
            basis_rows.push_back(es.basis().row(r));
            g.weight_of_basis.push_back(e);
        }
        g.eigenspaces.push_back(std::move(es));
    }
    if (total != n)
        throw not_diagonalizable("eigenspaces over the ground field do not sum to the whole space");
    g.eigenbasis = Matrix::from_rows(basis_rows, n, m.field());
    return g;
}

NakayamaGrading nakayama_grading(const FrobeniusStructure& f) {
    const auto& A = f.algebra();
    if (!A.field().is_rational())
        throw error("Nakayama eigen-splitting requires characteristic zero");
    NakayamaGrading g = diagonalize(f.nakayama());
    // 1 sits in A_1 and A_lambda A_mu lands in A_{lambda mu}.
    std::size_t n = A.dim();
    const FieldSpec& fld = A.field();
    for (std::size_t e = 0; e < g.eigenvalues.size(); ++e)
        if (g.eigenvalues[e].is_one() && !g.eigenspaces[e].contains(A.unit()))
            throw error("internal: 1 is not in the weight-1 eigenspace");
    for (std::size_t e1 = 0; e1 < g.eigenvalues.size(); ++e1)
        for (std::size_t e2 = 0; e2 < g.eigenvalues.size(); ++e2) {
            Scalar prod = g.eigenvalues[e1] * g.eigenvalues[e2];
            auto it = std::find(g.eigenvalues.begin(), g.eigenvalues.end(), prod);
            for (std::size_t r1 = 0; r1 < g.eigenspaces[e1].dim(); ++r1)
                for (std::size_t r2 = 0; r2 < g.eigenspaces[e2].dim(); ++r2) {
                    Vec p = A.multiply(g.eigenspaces[e1].basis().row(r1),
                                       g.eigenspaces[e2].basis().row(r2));
                    if (it == g.eigenvalues.end()) {
                        if (!is_zero_vec(p))
                            throw error("internal: A_l A_m escapes the grading");
                    } else if (!g.eigenspaces[it - g.eigenvalues.begin()].contains(p)) {
                        throw error("internal: A_l A_m not inside A_{lm}");
                    }
                }
        }
    (void)n;
    (void)fld;
    return g;
}

}  // namespace bvext
