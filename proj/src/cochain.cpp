#include "bvext/cochain.hpp"

#include <algorithm>
#include <functional>

namespace bvext {

namespace {

// Multi-index helpers: flat = (((i_1 n + i_2) ... ) n + i_k) dim_m + m.
std::vector<std::size_t> unflatten(std::size_t flat, std::size_t degree, std::size_t n,
                                   std::size_t dim_m, std::size_t& m) {
    m = flat % dim_m;
    flat /= dim_m;
    std::vector<std::size_t> idx(degree);
    for (std::size_t k = degree; k-- > 0;) {
        idx[k] = flat % n;
        flat /= n;
    }
    return idx;
}

std::size_t flatten(const std::vector<std::size_t>& idx, std::size_t n, std::size_t dim_m,
                    std::size_t m) {
    std::size_t f = 0;
    for (std::size_t k : idx)
        f = f * n + k;
    return f * dim_m + m;
}

}  // namespace

HochschildComplex::HochschildComplex(const AlgebraPresentation& A, CoefficientModule M,
                                     std::size_t budget)
    : A_(&A), M_(std::move(M)), budget_(budget) {
    if (M_.left.size() != A.dim())
        throw dimension_mismatch("coefficient actions do not match the algebra dimension");
}

void HochschildComplex::use_comult_insertion(std::vector<Matrix> comult) {
    if (M_.dim_m != 1)
        throw coefficient_not_algebra("comultiplication insertions need scalar coefficients");
    if (comult.size() != A_->dim())
        throw dimension_mismatch("comultiplication tensor has wrong size");
    rule_ = InsertionRule::comult;
    comult_ = std::move(comult);
}

std::size_t HochschildComplex::space_dim(std::size_t n) const {
    std::size_t d = M_.dim_m;
    for (std::size_t k = 0; k < n; ++k) {
        d *= A_->dim();
        if (d > budget_)
            throw budget_exceeded("cochain space in degree " + std::to_string(n) +
                                  " exceeds the configured budget");
    }
    return d;
}

Cochain HochschildComplex::zero_cochain(std::size_t n) const {
    return {n, zero_vec(space_dim(n), A_->field())};
}

Cochain HochschildComplex::basis_cochain(std::size_t n, std::size_t flat) const {
    Cochain c = zero_cochain(n);
    c.data[flat] = Scalar::one(A_->field());
    return c;
}

Cochain HochschildComplex::one_cochain() const {
    std::size_t n = A_->dim();
    Cochain c = zero_cochain(1);
    if (rule_ == InsertionRule::comult) {
        for (std::size_t i = 0; i < n; ++i)
            c.data[i] = M_.left[i].at(0, 0);
        return c;
    }
    if (M_.dim_m != n)
        throw coefficient_not_algebra("operad identity needs coefficients of algebra size");
    for (std::size_t i = 0; i < n; ++i)
        c.data[i * n + i] = Scalar::one(A_->field());
    return c;
}

Cochain HochschildComplex::mu_cochain() const {
    std::size_t n = A_->dim();
    Cochain c = zero_cochain(2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec prod = A_->basis_product(i, j);
            if (rule_ == InsertionRule::comult) {
                Scalar v = Scalar::zero(A_->field());
                for (std::size_t k = 0; k < n; ++k)
                    v += prod[k] * M_.left[k].at(0, 0);
                c.data[(i * n + j) * 1 + 0] = v;
            } else {
                for (std::size_t m = 0; m < M_.dim_m; ++m)
                    c.data[(i * n + j) * M_.dim_m + m] = prod[m];
            }
        }
    return c;
}

Cochain HochschildComplex::unit_cochain() const {
    return {0, M_.unit_m};
}

void HochschildComplex::add_coface_into(Matrix& target, std::size_t i, std::size_t n,
                                        const Scalar& sign) const {
    std::size_t nA = A_->dim(), dm = M_.dim_m;
    std::size_t src = space_dim(n);
    for (std::size_t col = 0; col < src; ++col) {
        std::size_t m;
        std::vector<std::size_t> K = unflatten(col, n, nA, dm, m);
        if (i == 0) {
            for (std::size_t j = 0; j < nA; ++j)
                for (std::size_t mp = 0; mp < dm; ++mp) {
                    const Scalar& a = M_.left[j].at(mp, m);
                    if (a.is_zero())
                        continue;
                    std::vector<std::size_t> J;
                    J.reserve(n + 1);
                    J.push_back(j);
                    J.insert(J.end(), K.begin(), K.end());
                    target.at(flatten(J, nA, dm, mp), col) += sign * a;
                }
        } else if (i <= n) {
            std::size_t merged = K[i - 1];
            for (std::size_t u = 0; u < nA; ++u)
                for (std::size_t w = 0; w < nA; ++w) {
                    const Scalar& a = A_->c(u, w, merged);
                    if (a.is_zero())
                        continue;
                    std::vector<std::size_t> J(K.begin(), K.begin() + (i - 1));
                    J.push_back(u);
                    J.push_back(w);
                    J.insert(J.end(), K.begin() + i, K.end());
                    target.at(flatten(J, nA, dm, m), col) += sign * a;
                }
        } else {  // i == n + 1
            for (std::size_t j = 0; j < nA; ++j)
                for (std::size_t mp = 0; mp < dm; ++mp) {
                    const Scalar& a = M_.right[j].at(mp, m);
                    if (a.is_zero())
                        continue;
                    std::vector<std::size_t> J(K);
                    J.push_back(j);
                    target.at(flatten(J, nA, dm, mp), col) += sign * a;
                }
        }
    }
}

Matrix HochschildComplex::coface_matrix(std::size_t i, std::size_t n) const {
    if (i > n + 1)
        throw index_out_of_range("coface index " + std::to_string(i) + " in degree " +
                                 std::to_string(n));
    Matrix d(space_dim(n + 1), space_dim(n), A_->field());
    add_coface_into(d, i, n, Scalar::one(A_->field()));
    return d;
}

Cochain HochschildComplex::coface(std::size_t i, const Cochain& f) const {
    return {f.degree + 1, coface_matrix(i, f.degree).apply(f.data)};
}

const Matrix& HochschildComplex::differential(std::size_t n) const {
    auto it = beta_cache_.find(n);
    if (it != beta_cache_.end())
        return it->second;
    Matrix beta(space_dim(n + 1), space_dim(n), A_->field());
    Scalar sign = Scalar::one(A_->field());
    for (std::size_t i = 0; i <= n + 1; ++i) {
        add_coface_into(beta, i, n, sign);
        sign = -sign;
    }
    return beta_cache_.emplace(n, std::move(beta)).first->second;
}

Matrix HochschildComplex::codegeneracy_matrix(std::size_t j, std::size_t n) const {
    if (n == 0 || j > n - 1)
        throw index_out_of_range("codegeneracy index " + std::to_string(j) + " in degree " +
                                 std::to_string(n));
    std::size_t nA = A_->dim(), dm = M_.dim_m;
    Matrix s(space_dim(n - 1), space_dim(n), A_->field());
    const Vec& u = A_->unit();
    for (std::size_t col = 0; col < space_dim(n); ++col) {
        std::size_t m;
        std::vector<std::size_t> K = unflatten(col, n, nA, dm, m);
        // (sigma_j f)(a_1 .. a_{n-1}) = f(a_1, .., a_j, 1, a_{j+1}, ..); the
        // matrix transposes this onto basis cochains.
        if (u[K[j]].is_zero())
            continue;
        std::vector<std::size_t> J(K);
        J.erase(J.begin() + j);
        s.at(flatten(J, nA, dm, m), col) += u[K[j]];
    }
    return s;
}

Cochain HochschildComplex::codegeneracy(std::size_t j, const Cochain& f) const {
    return {f.degree - 1, codegeneracy_matrix(j, f.degree).apply(f.data)};
}

Cochain HochschildComplex::cup(const Cochain& f, const Cochain& g) const {
    if (!M_.is_algebra)
        throw coefficient_not_algebra("cup product needs algebra coefficients");
    std::size_t nA = A_->dim(), dm = M_.dim_m;
    std::size_t p = f.degree, q = g.degree;
    Cochain out = zero_cochain(p + q);
    for (std::size_t fa = 0; fa < space_dim(p) / dm; ++fa)
        for (std::size_t m1 = 0; m1 < dm; ++m1) {
            const Scalar& fv = f.data[fa * dm + m1];
            if (fv.is_zero())
                continue;
            for (std::size_t ga = 0; ga < space_dim(q) / dm; ++ga)
                for (std::size_t m2 = 0; m2 < dm; ++m2) {
                    const Scalar& gv = g.data[ga * dm + m2];
                    if (gv.is_zero())
                        continue;
                    Scalar fg = fv * gv;
                    std::size_t args = fa;
                    for (std::size_t k = 0; k < q; ++k)
                        args *= nA;
                    args += ga;
                    for (std::size_t m = 0; m < dm; ++m)
                        if (!M_.prod(m1, m2, m).is_zero())
                            out.data[args * dm + m] += fg * M_.prod(m1, m2, m);
                }
        }
    return out;
}

Cochain HochschildComplex::circ(const Cochain& f, std::size_t i, const Cochain& g) const {
    std::size_t p = f.degree, q = g.degree;
    if (p == 0)
        return zero_cochain(q > 0 ? q - 1 : 0);
    if (i < 1 || i > p)
        throw index_out_of_range("insertion slot " + std::to_string(i) + " with p = " +
                                 std::to_string(p));
    std::size_t nA = A_->dim(), dm = M_.dim_m;
    Cochain out = zero_cochain(p + q - 1);

    if (rule_ == InsertionRule::direct) {
        if (dm != nA)
            throw coefficient_not_algebra("direct insertion needs coefficients of algebra size");
        Vec constant;  // the inserted element for q = 0
        if (q == 0)
            constant = g.data;
        for (std::size_t flat = 0; flat < space_dim(p + q - 1); ++flat) {
            std::size_t m;
            std::vector<std::size_t> L = unflatten(flat, p + q - 1, nA, dm, m);
            std::vector<std::size_t> block(L.begin() + (i - 1), L.begin() + (i - 1 + q));
            Scalar v = Scalar::zero(A_->field());
            for (std::size_t t = 0; t < nA; ++t) {
                Scalar gv = q == 0 ? constant[t] : g.data[flatten(block, nA, dm, t)];
                if (gv.is_zero())
                    continue;
                std::vector<std::size_t> J(L.begin(), L.begin() + (i - 1));
                J.push_back(t);
                J.insert(J.end(), L.begin() + (i - 1 + q), L.end());
                v += gv * f.data[flatten(J, nA, dm, m)];
            }
            out.data[flat] = v;
        }
        return out;
    }

    // Comultiplication rule; coefficients are scalars (dim_m == 1).
    if (q == 0) {
        // Empty Sweedler block: insert 1_H scaled by the 0-cochain value.
        const Vec& u = A_->unit();
        for (std::size_t flat = 0; flat < space_dim(p - 1); ++flat) {
            std::size_t m;
            std::vector<std::size_t> L = unflatten(flat, p - 1, nA, dm, m);
            Scalar v = Scalar::zero(A_->field());
            for (std::size_t t = 0; t < nA; ++t) {
                if (u[t].is_zero())
                    continue;
                std::vector<std::size_t> J(L.begin(), L.begin() + (i - 1));
                J.push_back(t);
                J.insert(J.end(), L.begin() + (i - 1), L.end());
                v += u[t] * f.data[flatten(J, nA, dm, m)];
            }
            out.data[flat] = g.data[0] * v;
        }
        return out;
    }
    for (std::size_t flat = 0; flat < space_dim(p + q - 1); ++flat) {
        std::size_t m;
        std::vector<std::size_t> L = unflatten(flat, p + q - 1, nA, dm, m);
        std::vector<std::size_t> block(L.begin() + (i - 1), L.begin() + (i - 1 + q));
        Scalar total = Scalar::zero(A_->field());
        // Odometer over the Sweedler legs (u_l, w_l) of each block argument.
        std::vector<std::size_t> uu(q, 0), ww(q, 0);
        while (true) {
            Scalar coeff = Scalar::one(A_->field());
            for (std::size_t l = 0; l < q && !coeff.is_zero(); ++l)
                coeff *= comult_[block[l]].at(uu[l], ww[l]);
            if (!coeff.is_zero()) {
                Scalar gv = g.data[flatten(uu, nA, dm, 0)];
                if (!gv.is_zero()) {
                    Vec w = unit_vec(nA, ww[0], A_->field());
                    for (std::size_t l = 1; l < q; ++l)
                        w = A_->multiply(w, unit_vec(nA, ww[l], A_->field()));
                    for (std::size_t t = 0; t < nA; ++t) {
                        if (w[t].is_zero())
                            continue;
                        std::vector<std::size_t> J(L.begin(), L.begin() + (i - 1));
                        J.push_back(t);
                        J.insert(J.end(), L.begin() + (i - 1 + q), L.end());
                        total += coeff * gv * w[t] * f.data[flatten(J, nA, dm, m)];
                    }
                }
            }
            std::size_t k = 0;
            for (; k < 2 * q; ++k) {
                std::size_t& digit = k < q ? uu[k] : ww[k - q];
                if (++digit < nA)
                    break;
                digit = 0;
            }
            if (k == 2 * q)
                break;
        }
        out.data[flat] = total;
    }
    return out;
}

Cochain HochschildComplex::bracket(const Cochain& f, const Cochain& g) const {
    // {f,g} = f ob g - (-1)^{(p-1)(q-1)} g ob f with
    // f ob g = sum_i (-1)^{(i-1)(q-1)} f o_i g; parities are taken of the
    // signed exponents, so q = 0 contributes like q - 1 = -1, i.e. odd.
    int p = int(f.degree), q = int(g.degree);
    auto circ_bar = [&](const Cochain& a, const Cochain& b) {
        int pa = int(a.degree), qb = int(b.degree);
        int out_deg = pa + qb - 1;
        Cochain acc = zero_cochain(out_deg > 0 ? std::size_t(out_deg) : 0);
        for (int i = 1; i <= pa; ++i) {
            Cochain term = circ(a, std::size_t(i), b);
            bool neg = ((i - 1) * (qb - 1)) % 2 != 0;
            acc.data = neg ? sub(acc.data, term.data) : add(acc.data, term.data);
        }
        return acc;
    };
    Cochain fg = circ_bar(f, g);
    Cochain gf = circ_bar(g, f);
    bool flip = ((p - 1) * (q - 1)) % 2 != 0;
    Cochain out = fg;
    out.data = flip ? add(fg.data, gf.data) : sub(fg.data, gf.data);
    return out;
}

Matrix HochschildComplex::insert_fixed_arg(const Cochain& g, std::size_t i, std::size_t p) const {
    std::size_t q = g.degree;
    std::size_t out_deg = p + q == 0 ? 0 : p + q - 1;
    Matrix m(space_dim(out_deg), space_dim(p), A_->field());
    for (std::size_t col = 0; col < space_dim(p); ++col) {
        Cochain r = circ(basis_cochain(p, col), i, g);
        for (std::size_t row = 0; row < r.data.size(); ++row)
            if (!r.data[row].is_zero())
                m.at(row, col) = r.data[row];
    }
    return m;
}

Matrix HochschildComplex::insert_into_fixed(const Cochain& g, std::size_t i,
                                            std::size_t q) const {
    std::size_t p = g.degree;
    std::size_t out_deg = p + q == 0 ? 0 : p + q - 1;
    Matrix m(space_dim(out_deg), space_dim(q), A_->field());
    for (std::size_t col = 0; col < space_dim(q); ++col) {
        Cochain r = circ(g, i, basis_cochain(q, col));
        for (std::size_t row = 0; row < r.data.size(); ++row)
            if (!r.data[row].is_zero())
                m.at(row, col) = r.data[row];
    }
    return m;
}

bool HochschildComplex::equal(const Cochain& a, const Cochain& b) const {
    return a.degree == b.degree && a.data == b.data;
}

void OperadReport::add(OperadCheck c) {
    ok = ok && c.ok;
    checks.push_back(std::move(c));
}

namespace {

using Pattern = std::vector<std::size_t>;

struct DeltaComposite {
    bool zero = false;
    std::size_t need_t = 0;  // required value index of the inserted delta
    Pattern pattern;
};

DeltaComposite compose(const Pattern& J, std::size_t i, const Pattern& K) {
    DeltaComposite r;
    if (J.empty()) {
        r.zero = true;
        return r;
    }
    r.need_t = J[i - 1];
    r.pattern.assign(J.begin(), J.begin() + (i - 1));
    r.pattern.insert(r.pattern.end(), K.begin(), K.end());
    r.pattern.insert(r.pattern.end(), J.begin() + i, J.end());
    return r;
}

struct SideResult {
    bool zero = false;
    std::size_t t_psi = 0, t_chi = 0;
    Pattern result;
};

bool operator==(const SideResult& a, const SideResult& b) {
    if (a.zero || b.zero)
        return a.zero == b.zero;
    return a.t_psi == b.t_psi && a.t_chi == b.t_chi && a.result == b.result;
}

std::string pattern_str(const Pattern& p) {
    std::string s = "(";
    for (std::size_t k = 0; k < p.size(); ++k)
        s += (k ? "," : "") + std::to_string(p[k]);
    return s + ")";
}

bool next_pattern(Pattern& p, std::size_t n) {
    for (std::size_t k = p.size(); k-- > 0;) {
        if (++p[k] < n)
            return true;
        p[k] = 0;
    }
    return false;
}

}  // namespace

OperadReport operad_axiom_report(const HochschildComplex& C, std::size_t max_p, std::size_t max_q,
                                 std::size_t max_r) {
    OperadReport rep;
    const auto& A = C.algebra();
    std::size_t nA = A.dim();

    if (C.insertion_rule() == InsertionRule::direct) {
        // On standard basis cochains, direct insertions compose by index
        // bookkeeping alone: delta_{J,s} o_i delta_{K,t} is delta_{J+K,s} when
        // J[i-1] = t and zero otherwise. Checking the three associativity
        // regimes on every basis triple therefore reduces to comparing the
        // required value indices and the merged patterns; the dense insertion
        // path is tied to this one by the evaluator cross-checks in the test
        // suite.
        for (std::size_t cse = 0; cse < 3; ++cse) {
            OperadCheck check{cse == 0 ? "insert-assoc (j < i)"
                                       : cse == 1 ? "insert-assoc (i <= j < q+i)"
                                                  : "insert-assoc (j >= q+i)",
                              true, ""};
            for (std::size_t p = 1; p <= max_p && check.ok; ++p)
                for (std::size_t q = 0; q <= max_q && check.ok; ++q)
                    for (std::size_t r = 0; r <= max_r && check.ok; ++r) {
                        Pattern J(p, 0);
                        do {
                            Pattern K(q, 0);
                            do {
                                Pattern L(r, 0);
                                do {
                                    for (std::size_t i = 1; i <= p && check.ok; ++i) {
                                        std::size_t jlo, jhi;  // inclusive range per regime
                                        if (cse == 0) {
                                            jlo = 1;
                                            jhi = i - 1;
                                        } else if (cse == 1) {
                                            jlo = i;
                                            jhi = q + i - 1;
                                        } else {
                                            jlo = q + i;
                                            jhi = p + q - 1;
                                        }
                                        for (std::size_t j = jlo; j <= jhi && j >= 1; ++j) {
                                            if (p + q == 0 || j > p + q - 1)
                                                continue;
                                            SideResult lhs, rhs;
                                            {
                                                DeltaComposite in = compose(J, i, K);
                                                lhs.t_psi = in.need_t;
                                                DeltaComposite out = compose(in.pattern, j, L);
                                                lhs.t_chi = out.need_t;
                                                lhs.result = out.pattern;
                                            }
                                            if (cse == 0) {
                                                DeltaComposite in = compose(J, j, L);
                                                rhs.t_chi = in.need_t;
                                                DeltaComposite out =
                                                    compose(in.pattern, i + r - 1, K);
                                                rhs.t_psi = out.need_t;
                                                rhs.result = out.pattern;
                                            } else if (cse == 1) {
                                                DeltaComposite in = compose(K, j - i + 1, L);
                                                rhs.t_chi = in.need_t;
                                                DeltaComposite out = compose(J, i, in.pattern);
                                                rhs.t_psi = out.need_t;
                                                rhs.result = out.pattern;
                                                if (in.zero)
                                                    rhs.zero = true;
                                            } else {
                                                DeltaComposite in = compose(J, j - q + 1, L);
                                                rhs.t_chi = in.need_t;
                                                DeltaComposite out = compose(in.pattern, i, K);
                                                rhs.t_psi = out.need_t;
                                                rhs.result = out.pattern;
                                            }
                                            if (!(lhs == rhs)) {
                                                check.ok = false;
                                                check.witness =
                                                    "J=" + pattern_str(J) + " K=" + pattern_str(K) +
                                                    " L=" + pattern_str(L) +
                                                    " i=" + std::to_string(i) +
                                                    " j=" + std::to_string(j);
                                                break;
                                            }
                                        }
                                    }
                                } while (check.ok && next_pattern(L, nA));
                            } while (check.ok && next_pattern(K, nA));
                        } while (check.ok && next_pattern(J, nA));
                    }
            rep.add(std::move(check));
        }
    } else {
        // Comultiplication insertions: bilinearity lets us compare, for each
        // fixed pair of basis cochains, the two sides as operators in the
        // remaining slot.
        OperadCheck check{"insert-assoc (all regimes)", true, ""};
        for (std::size_t p = 1; p <= max_p && check.ok; ++p)
            for (std::size_t q = 0; q <= max_q && check.ok; ++q)
                for (std::size_t r = 0; r <= max_r && check.ok; ++r)
                    for (std::size_t kq = 0; kq < C.space_dim(q) && check.ok; ++kq)
                        for (std::size_t kr = 0; kr < C.space_dim(r) && check.ok; ++kr) {
                            Cochain psi = C.basis_cochain(q, kq);
                            Cochain chi = C.basis_cochain(r, kr);
                            for (std::size_t i = 1; i <= p && check.ok; ++i)
                                for (std::size_t j = 1; p + q >= 1 && j <= p + q - 1; ++j) {
                                    Matrix lhs = C.insert_fixed_arg(chi, j, p + q - 1) *
                                                 C.insert_fixed_arg(psi, i, p);
                                    Matrix rhs(lhs.rows(), lhs.cols(), A.field());
                                    if (j < i) {
                                        rhs = C.insert_fixed_arg(psi, i + r - 1, p + r - 1) *
                                              C.insert_fixed_arg(chi, j, p);
                                    } else if (j < q + i) {
                                        Cochain inner = C.circ(psi, j - i + 1, chi);
                                        rhs = C.insert_fixed_arg(inner, i, p);
                                    } else {
                                        rhs = C.insert_fixed_arg(psi, i, p + r - 1) *
                                              C.insert_fixed_arg(chi, j - q + 1, p);
                                    }
                                    if (lhs != rhs) {
                                        check.ok = false;
                                        check.witness = "q-basis " + std::to_string(kq) +
                                                        ", r-basis " + std::to_string(kr) +
                                                        ", i=" + std::to_string(i) +
                                                        ", j=" + std::to_string(j);
                                        break;
                                    }
                                }
                        }
        rep.add(std::move(check));
    }

    // phi o_i psi vanishes when phi has arity zero.
    {
        OperadCheck check{"zero rule (p = 0)", true, ""};
        for (std::size_t q = 0; q <= max_q && check.ok; ++q)
            for (std::size_t k = 0; k < C.space_dim(q); ++k) {
                Cochain z = C.circ(C.unit_cochain(), 1, C.basis_cochain(q, k));
                if (!is_zero_vec(z.data)) {
                    check.ok = false;
                    check.witness = "degree " + std::to_string(q) + " basis " + std::to_string(k);
                    break;
                }
            }
        rep.add(std::move(check));
    }

    // Unit laws phi o_i 1 = phi and 1 o_1 phi = phi.
    {
        OperadCheck check{"unit laws", true, ""};
        Cochain one = C.one_cochain();
        for (std::size_t p = 1; p <= max_p && check.ok; ++p)
            for (std::size_t k = 0; k < C.space_dim(p) && check.ok; ++k) {
                Cochain phi = C.basis_cochain(p, k);
                for (std::size_t i = 1; i <= p; ++i)
                    if (!C.equal(C.circ(phi, i, one), phi)) {
                        check.ok = false;
                        check.witness = "phi o_" + std::to_string(i) + " 1 at degree " +
                                        std::to_string(p) + " basis " + std::to_string(k);
                        break;
                    }
                if (check.ok && !C.equal(C.circ(one, 1, phi), phi)) {
                    check.ok = false;
                    check.witness =
                        "1 o_1 phi at degree " + std::to_string(p) + " basis " + std::to_string(k);
                }
            }
        rep.add(std::move(check));
    }

    // Multiplication element: mu o_1 mu = mu o_2 mu and mu o_i e = 1.
    {
        OperadCheck check{"multiplication axioms", true, ""};
        Cochain mu = C.mu_cochain(), e = C.unit_cochain();
        if (!C.equal(C.circ(mu, 1, mu), C.circ(mu, 2, mu))) {
            check.ok = false;
            check.witness = "mu o_1 mu != mu o_2 mu";
        } else if (!C.equal(C.circ(mu, 1, e), C.one_cochain()) ||
                   !C.equal(C.circ(mu, 2, e), C.one_cochain())) {
            check.ok = false;
            check.witness = "mu o_i e != identity";
        }
        rep.add(std::move(check));
    }

    return rep;
}

}  // namespace bvext
