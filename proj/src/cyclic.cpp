#include "bvext/cyclic.hpp"

namespace bvext {

ValidationReport contraaction_axioms(const AlgebraPresentation& A, const Contraaction& c) {
    ValidationReport rep;
    std::size_t n = A.dim(), dm = c.coefficient.dim_m;
    const FieldSpec& fld = A.field();
    auto fail = [&](const std::string& what, const std::string& witness) {
        rep.ok = false;
        rep.issues.push_back({what, witness});
    };

    // gamma(f(a(-))) = gamma(f) a on basis f = E_{k,m} and basis a = b_j.
    for (std::size_t k = 0; k < n && rep.ok; ++k)
        for (std::size_t m = 0; m < dm && rep.ok; ++m) {
            Vec f = zero_vec(n * dm, fld);
            f[k * dm + m] = Scalar::one(fld);
            Vec gf = c.apply(f);
            for (std::size_t j = 0; j < n; ++j) {
                Vec fa = zero_vec(n * dm, fld);  // x -> f(b_j x)
                for (std::size_t a = 0; a < n; ++a)
                    fa[a * dm + m] = A.c(j, a, k);
                Vec lhs = c.apply(fa);
                Vec rhs = c.coefficient.act_right(gf, unit_vec(n, j, fld));
                if (lhs != rhs) {
                    fail("right linearity", "f = E(" + std::to_string(k) + "," +
                                                std::to_string(m) + "), a = b" + std::to_string(j));
                    break;
                }
            }
        }

    // Contraassociativity on basis g = E_{(k1,k2),m}.
    for (std::size_t k1 = 0; k1 < n && rep.ok; ++k1)
        for (std::size_t k2 = 0; k2 < n && rep.ok; ++k2)
            for (std::size_t m = 0; m < dm; ++m) {
                Vec inner = zero_vec(n * dm, fld);  // y -> g(b_{k1} (x) y) as Hom(A,M)
                inner[k2 * dm + m] = Scalar::one(fld);
                Vec w = c.apply(inner);
                Vec outer = zero_vec(n * dm, fld);  // x -> gammadd(g(x (x) ..))
                for (std::size_t mp = 0; mp < dm; ++mp)
                    outer[k1 * dm + mp] = w[mp];
                Vec lhs = c.apply(outer);
                Vec g1 = zero_vec(n * dm, fld);  // x -> g(x (x) 1)
                for (std::size_t mp = 0; mp < dm; ++mp)
                    g1[k1 * dm + mp] = (mp == m) ? A.unit()[k2] : Scalar::zero(fld);
                Vec rhs = c.apply(g1);
                if (lhs != rhs) {
                    fail("contraassociativity", "g = E(" + std::to_string(k1) + "," +
                                                    std::to_string(k2) + "," + std::to_string(m) +
                                                    ")");
                    break;
                }
            }

    // Counitality gamma(m id(-)) = m with the module right action.
    for (std::size_t m = 0; m < dm && rep.ok; ++m) {
        Vec f = zero_vec(n * dm, fld);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t mp = 0; mp < dm; ++mp)
                f[a * dm + mp] = c.coefficient.right[a].at(mp, m);
        Vec lhs = c.apply(f);
        if (lhs != unit_vec(dm, m, fld))
            fail("counitality", "m = e" + std::to_string(m));
    }
    return rep;
}

Contraaction frobenius_contraaction(const FrobeniusStructure& f) {
    const auto& A = f.algebra();
    std::size_t n = A.dim();
    const FieldSpec& fld = A.field();
    Contraaction c;
    c.coefficient = CoefficientModule::sigma_twist(f);
    c.gamma = Matrix(n, n * n, fld);
    // gamma(E_{j,m}) = eps(b_m) e^j.
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t m = 0; m < n; ++m) {
            Vec col = scale(f.functional()[m], f.dual_basis_vector(j));
            for (std::size_t r = 0; r < n; ++r)
                c.gamma.at(r, j * n + m) = col[r];
        }
    ValidationReport axioms = contraaction_axioms(A, c);
    if (!axioms.ok)
        throw axiom_violation("Frobenius contraaction violates " + axioms.issues[0].what + " at " +
                              axioms.issues[0].witness);
    c.stable = stability_defect(A, c).is_identity();
    return c;
}

Matrix stability_defect(const AlgebraPresentation& A, const Contraaction& c) {
    std::size_t n = A.dim(), dm = c.coefficient.dim_m;
    const FieldSpec& fld = A.field();
    Matrix d(dm, dm, fld);
    for (std::size_t m = 0; m < dm; ++m) {
        Vec f = zero_vec(n * dm, fld);
        if (dm == n) {
            // a -> a b_m, plain algebra multiplication
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t mp = 0; mp < n; ++mp)
                    f[a * dm + mp] = A.c(a, m, mp);
        } else {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t mp = 0; mp < dm; ++mp)
                    f[a * dm + mp] = c.coefficient.left[a].at(mp, m);
        }
        Vec col = c.apply(f);
        for (std::size_t r = 0; r < dm; ++r)
            d.at(r, m) = col[r];
    }
    return d;
}

CrosscheckReport symmetric_contraaction_crosscheck(const FrobeniusStructure& f) {
    if (!f.is_symmetric())
        throw not_symmetric("crosscheck needs a symmetric Frobenius structure");
    const auto& A = f.algebra();
    std::size_t n = A.dim();
    const FieldSpec& fld = A.field();
    Contraaction frob = frobenius_contraaction(f);
    auto htinv = inverse(f.gram().transpose());
    CrosscheckReport rep;
    // Transport of g -> g(- (x) 1): the image of f under it is the element a
    // with eps(a x) = eps(f(x)) for all x.
    for (std::size_t j = 0; j < n && rep.equal; ++j)
        for (std::size_t m = 0; m < n; ++m) {
            Vec hom = zero_vec(n * n, fld);
            hom[j * n + m] = Scalar::one(fld);
            Vec lhs = frob.apply(hom);
            Vec rhs_vals = zero_vec(n, fld);
            rhs_vals[j] = f.functional()[m];  // eps(f(b_i)) per i
            Vec rhs = htinv->apply(rhs_vals);
            if (lhs != rhs) {
                rep.equal = false;
                rep.witness = "f = E(" + std::to_string(j) + "," + std::to_string(m) + ")";
                break;
            }
        }
    return rep;
}

CyclicStructure::CyclicStructure(const HochschildComplex& C, Contraaction c)
    : C_(&C), contra_(std::move(c)) {
    defect_ = stability_defect(C.algebra(), contra_);
}

void CyclicStructure::set_rotation_builder(RotationBuilder b) {
    builder_ = std::move(b);
    rot_cache_.clear();
    tau_cache_.clear();
    b_cache_.clear();
}

Matrix CyclicStructure::build_rotation(std::size_t n) const {
    if (builder_)
        return builder_(n);
    if (n == 0)
        return defect_;
    const auto& A = C_->algebra();
    std::size_t nA = A.dim(), dm = contra_.coefficient.dim_m;
    // (rot f)(a_1,..,a_n) = gamma(c -> a_1 |> f(a_2,..,a_n,c)); the rotation
    // factors through a single (head, tail) block W, constant in the middle
    // arguments.
    Matrix rot(C_->space_dim(n), C_->space_dim(n), A.field());
    std::size_t mid = 1;
    for (std::size_t k = 0; k + 1 < n; ++k)
        mid *= nA;
    const auto& M = C_->module();
    // W[(j,m''),(t,m)] = sum_{m'} gamma[m'', t dm + m'] L_j[m', m]
    Matrix W(nA * dm, nA * dm, A.field());
    for (std::size_t j = 0; j < nA; ++j)
        for (std::size_t mpp = 0; mpp < dm; ++mpp)
            for (std::size_t t = 0; t < nA; ++t)
                for (std::size_t m = 0; m < dm; ++m) {
                    Scalar v = Scalar::zero(A.field());
                    for (std::size_t mp = 0; mp < dm; ++mp)
                        v += contra_.gamma.at(mpp, t * dm + mp) * M.left[j].at(mp, m);
                    W.at(j * dm + mpp, t * dm + m) = v;
                }
    for (std::size_t P = 0; P < mid; ++P)
        for (std::size_t t = 0; t < nA; ++t)
            for (std::size_t m = 0; m < dm; ++m) {
                std::size_t col = (P * nA + t) * dm + m;
                for (std::size_t j = 0; j < nA; ++j)
                    for (std::size_t mpp = 0; mpp < dm; ++mpp) {
                        const Scalar& v = W.at(j * dm + mpp, t * dm + m);
                        if (v.is_zero())
                            continue;
                        rot.at((j * mid + P) * dm + mpp, col) = v;
                    }
            }
    return rot;
}

const Matrix& CyclicStructure::rotation(std::size_t n) const {
    auto it = rot_cache_.find(n);
    if (it != rot_cache_.end())
        return it->second;
    return rot_cache_.emplace(n, build_rotation(n)).first->second;
}

const Matrix& CyclicStructure::tau(std::size_t n) const {
    auto it = tau_cache_.find(n);
    if (it != tau_cache_.end())
        return it->second;
    Matrix t(0, 0, C_->algebra().field());
    if (!builder_ && n > 0) {
        // Invert the rotation through its (head, tail) block.
        const auto& A = C_->algebra();
        std::size_t nA = A.dim(), dm = contra_.coefficient.dim_m;
        std::size_t mid = 1;
        for (std::size_t k = 0; k + 1 < n; ++k)
            mid *= nA;
        const auto& M = C_->module();
        Matrix W(nA * dm, nA * dm, A.field());
        for (std::size_t j = 0; j < nA; ++j)
            for (std::size_t mpp = 0; mpp < dm; ++mpp)
                for (std::size_t t = 0; t < nA; ++t)
                    for (std::size_t m = 0; m < dm; ++m) {
                        Scalar v = Scalar::zero(A.field());
                        for (std::size_t mp = 0; mp < dm; ++mp)
                            v += contra_.gamma.at(mpp, t * dm + mp) * M.left[j].at(mp, m);
                        W.at(j * dm + mpp, t * dm + m) = v;
                    }
        auto winv = inverse(W);
        if (!winv)
            throw error("cyclic rotation is not invertible in degree " + std::to_string(n));
        t = Matrix(C_->space_dim(n), C_->space_dim(n), A.field());
        for (std::size_t P = 0; P < mid; ++P)
            for (std::size_t j = 0; j < nA; ++j)
                for (std::size_t mpp = 0; mpp < dm; ++mpp) {
                    std::size_t col = (j * mid + P) * dm + mpp;
                    for (std::size_t tt = 0; tt < nA; ++tt)
                        for (std::size_t m = 0; m < dm; ++m) {
                            const Scalar& v = winv->at(tt * dm + m, j * dm + mpp);
                            if (v.is_zero())
                                continue;
                            t.at((P * nA + tt) * dm + m, col) = v;
                        }
                }
    } else {
        auto inv = inverse(rotation(n));
        if (!inv)
            throw error("cyclic rotation is not invertible in degree " + std::to_string(n));
        t = *inv;
    }
    return tau_cache_.emplace(n, std::move(t)).first->second;
}

Matrix CyclicStructure::tau_power_np1(std::size_t n) const {
    Matrix p = Matrix::identity(C_->space_dim(n), C_->algebra().field());
    const Matrix& t = tau(n);
    for (std::size_t k = 0; k <= n; ++k)
        p = p * t;
    return p;
}

Matrix CyclicStructure::predicted_defect_operator(std::size_t n) const {
    const auto& A = C_->algebra();
    std::size_t nA = A.dim(), dm = contra_.coefficient.dim_m;
    auto dinv = inverse(defect_);
    if (!dinv)
        throw error("stability defect is not invertible");
    Matrix out(C_->space_dim(n), C_->space_dim(n), A.field());
    // f -> D^{-1} o f o (D (x) ... (x) D) on basis cochains.
    std::vector<std::size_t> K(n, 0), J(n, 0);
    for (std::size_t col = 0; col < C_->space_dim(n); ++col) {
        std::size_t rest = col / dm, m = col % dm;
        for (std::size_t k = n; k-- > 0;) {
            K[k] = rest % nA;
            rest /= nA;
        }
        std::fill(J.begin(), J.end(), 0);
        while (true) {
            Scalar w = Scalar::one(A.field());
            for (std::size_t l = 0; l < n && !w.is_zero(); ++l)
                w *= defect_.at(K[l], J[l]);
            if (!w.is_zero()) {
                std::size_t args = 0;
                for (std::size_t l = 0; l < n; ++l)
                    args = args * nA + J[l];
                for (std::size_t mp = 0; mp < dm; ++mp) {
                    const Scalar& dv = dinv->at(mp, m);
                    if (!dv.is_zero())
                        out.at(args * dm + mp, col) += w * dv;
                }
            }
            std::size_t k = 0;
            for (; k < n; ++k) {
                if (++J[k] < nA)
                    break;
                J[k] = 0;
            }
            if (k == n)
                break;
        }
        if (n == 0) {
            for (std::size_t mp = 0; mp < dm; ++mp)
                out.at(mp, col) = dinv->at(mp, m);
        }
    }
    return out;
}

const Matrix& CyclicStructure::connes_B(std::size_t n) const {
    auto it = b_cache_.find(n);
    if (it != b_cache_.end())
        return it->second;
    if (n == 0)
        throw index_out_of_range("Connes B needs degree >= 1");
    const FieldSpec& fld = C_->algebra().field();
    std::size_t dn = C_->space_dim(n), dn1 = C_->space_dim(n - 1);
    Scalar minus_one = -Scalar::one(fld);
    // lambda = (-1)^n tau
    Matrix lam_n = tau(n);
    if (n % 2 == 1)
        lam_n = lam_n * minus_one;
    Matrix one_minus_lam = Matrix::identity(dn, fld) - lam_n;
    // extra codegeneracy sigma_{n-1} after tau
    Matrix sigma_ex = C_->codegeneracy_matrix(n - 1, n) * tau(n);
    // norm on C^{n-1}
    Matrix lam_n1 = tau(n - 1);
    if ((n - 1) % 2 == 1)
        lam_n1 = lam_n1 * minus_one;
    Matrix norm = Matrix::identity(dn1, fld);
    Matrix pw = Matrix::identity(dn1, fld);
    for (std::size_t j = 1; j < n; ++j) {
        pw = pw * lam_n1;
        norm = norm + pw;
    }
    Matrix B = norm * (sigma_ex * one_minus_lam);
    return b_cache_.emplace(n, std::move(B)).first->second;
}

void CyclicReport::add(CyclicCheck c) {
    all_identities = all_identities && c.ok;
    checks.push_back(std::move(c));
}

CyclicReport cyclic_operad_report(const CyclicStructure& cs, std::size_t max_degree) {
    CyclicReport rep;
    const auto& C = cs.complex();
    const FieldSpec& fld = C.algebra().field();

    {
        CyclicCheck ch{"tau(1) = 1", true, ""};
        Cochain one = C.one_cochain();
        ch.ok = cs.tau(1).apply(one.data) == one.data;
        rep.add(std::move(ch));
    }
    {
        CyclicCheck ch{"tau(mu) = mu", true, ""};
        Cochain mu = C.mu_cochain();
        ch.ok = cs.tau(2).apply(mu.data) == mu.data;
        rep.add(std::move(ch));
    }

    // tau(phi o_i psi) = tau(phi) o_{i-1} psi for 2 <= i <= p, exhaustively
    // over basis psi; both sides compared as operators in phi.
    {
        CyclicCheck ch{"tau insert (2 <= i <= p)", true, ""};
        for (std::size_t p = 2; p <= max_degree + 1 && ch.ok; ++p)
            for (std::size_t q = 0; p + q - 1 <= max_degree && ch.ok; ++q)
                for (std::size_t kq = 0; kq < C.space_dim(q) && ch.ok; ++kq) {
                    Cochain psi = C.basis_cochain(q, kq);
                    for (std::size_t i = 2; i <= p; ++i) {
                        Matrix lhs = cs.tau(p + q - 1) * C.insert_fixed_arg(psi, i, p);
                        Matrix rhs = C.insert_fixed_arg(psi, i - 1, p) * cs.tau(p);
                        if (lhs != rhs) {
                            ch.ok = false;
                            ch.witness = "p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                         " i=" + std::to_string(i) + " psi#" + std::to_string(kq);
                            break;
                        }
                    }
                }
        rep.add(std::move(ch));
    }

    // tau(phi o_1 psi) = tau(psi) o_q tau(phi) for p, q >= 1.
    {
        CyclicCheck ch{"tau insert (i = 1)", true, ""};
        for (std::size_t p = 1; p <= max_degree && ch.ok; ++p)
            for (std::size_t q = 1; p + q - 1 <= max_degree && ch.ok; ++q)
                for (std::size_t kq = 0; kq < C.space_dim(q); ++kq) {
                    Cochain psi = C.basis_cochain(q, kq);
                    Matrix lhs = cs.tau(p + q - 1) * C.insert_fixed_arg(psi, 1, p);
                    Cochain tau_psi{q, cs.tau(q).apply(psi.data)};
                    Matrix rhs = C.insert_into_fixed(tau_psi, q, p) * cs.tau(p);
                    if (lhs != rhs) {
                        ch.ok = false;
                        ch.witness = "p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                     " psi#" + std::to_string(kq);
                        break;
                    }
                }
        rep.add(std::move(ch));
    }

    // tau^{n+1} against the defect conjugation; cyclic verdict when D = id.
    {
        CyclicCheck ch{"tau^{n+1} = defect conjugation", true, ""};
        for (std::size_t n = 0; n <= max_degree; ++n) {
            Matrix got = cs.tau_power_np1(n);
            if (got != cs.predicted_defect_operator(n)) {
                ch.ok = false;
                ch.witness = "degree " + std::to_string(n);
                break;
            }
        }
        rep.add(std::move(ch));
    }
    {
        CyclicCheck ch{"tau^{n+1} = id", true, ""};
        for (std::size_t n = 0; n <= max_degree; ++n)
            if (cs.tau_power_np1(n) != Matrix::identity(C.space_dim(n), fld)) {
                ch.ok = false;
                ch.witness = "degree " + std::to_string(n);
                break;
            }
        rep.cyclic = ch.ok;
        if (!cs.is_cyclic() && !ch.ok)
            ch.witness += " (defect is not the identity; para-cyclic as expected)";
        rep.add(std::move(ch));
    }
    return rep;
}

CyclicReport homotopy_report(const CyclicStructure& cs, std::size_t max_degree) {
    CyclicReport rep;
    const auto& C = cs.complex();
    const FieldSpec& fld = C.algebra().field();
    for (std::size_t n = 0; n <= max_degree; ++n) {
        CyclicCheck ch{"beta B + B beta = id - tau^{n+1} in degree " + std::to_string(n), true,
                       ""};
        Matrix acc = cs.connes_B(n + 1) * C.differential(n);
        if (n >= 1)
            acc = acc + C.differential(n - 1) * cs.connes_B(n);
        Matrix expected = Matrix::identity(C.space_dim(n), fld) - cs.tau_power_np1(n);
        ch.ok = acc == expected;
        rep.add(std::move(ch));
    }
    rep.cyclic = cs.is_cyclic();
    return rep;
}

}  // namespace bvext
