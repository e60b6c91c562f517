#include "bvext/coefficients.hpp"

namespace bvext {

Vec CoefficientModule::multiply(const Vec& x, const Vec& y) const {
    if (!is_algebra)
        throw coefficient_not_algebra("coefficient module \"" + label + "\" carries no product");
    Vec z = zero_vec(dim_m, x.empty() ? FieldSpec::rationals() : x[0].field());
    for (std::size_t i = 0; i < dim_m; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim_m; ++j) {
            if (y[j].is_zero())
                continue;
            Scalar xy = x[i] * y[j];
            for (std::size_t k = 0; k < dim_m; ++k)
                if (!prod(i, j, k).is_zero())
                    z[k] += xy * prod(i, j, k);
        }
    }
    return z;
}

Vec CoefficientModule::act_left(const Vec& a, const Vec& m) const {
    Vec r = zero_vec(dim_m, m[0].field());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero())
            r = add(r, scale(a[i], left[i].apply(m)));
    return r;
}

Vec CoefficientModule::act_right(const Vec& m, const Vec& a) const {
    Vec r = zero_vec(dim_m, m[0].field());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero())
            r = add(r, scale(a[i], right[i].apply(m)));
    return r;
}

CoefficientModule CoefficientModule::regular(const AlgebraPresentation& A) {
    CoefficientModule m;
    m.label = "A";
    m.dim_m = A.dim();
    for (std::size_t i = 0; i < A.dim(); ++i) {
        Vec bi = unit_vec(A.dim(), i, A.field());
        m.left.push_back(A.left_mult(bi));
        m.right.push_back(A.right_mult(bi));
    }
    m.is_algebra = true;
    m.product.reserve(A.dim() * A.dim() * A.dim());
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            for (std::size_t k = 0; k < A.dim(); ++k)
                m.product.push_back(A.c(i, j, k));
    m.unit_m = A.unit();
    return m;
}

CoefficientModule CoefficientModule::sigma_twist(const FrobeniusStructure& f) {
    const auto& A = f.algebra();
    CoefficientModule m = regular(A);
    m.label = "twist";
    for (std::size_t i = 0; i < A.dim(); ++i) {
        Vec si = f.nakayama().apply(unit_vec(A.dim(), i, A.field()));
        m.left[i] = A.left_mult(si);
    }
    return m;
}

CoefficientModule CoefficientModule::character(const AlgebraPresentation& A, const Vec& chi,
                                               const std::string& label) {
    CoefficientModule m;
    m.label = label;
    m.dim_m = 1;
    for (std::size_t i = 0; i < A.dim(); ++i) {
        Matrix act(1, 1, A.field());
        act.at(0, 0) = chi[i];
        m.left.push_back(act);
        m.right.push_back(act);
    }
    m.is_algebra = true;
    m.product = {Scalar::one(A.field())};
    m.unit_m = {Scalar::one(A.field())};
    return m;
}

ValidationReport CoefficientModule::validate(const AlgebraPresentation& A) const {
    ValidationReport rep;
    std::size_t n = A.dim();
    auto fail = [&](const std::string& what, const std::string& witness) {
        rep.ok = false;
        rep.issues.push_back({what, witness});
    };
    Matrix lu(dim_m, dim_m, A.field()), ru(dim_m, dim_m, A.field());
    for (std::size_t i = 0; i < n; ++i) {
        lu = lu + left[i] * A.unit()[i];
        ru = ru + right[i] * A.unit()[i];
    }
    if (!lu.is_identity() || !ru.is_identity())
        fail("module unitality", "action of 1_A is not the identity");
    for (std::size_t i = 0; i < n && rep.ok; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix lprod(dim_m, dim_m, A.field()), rprod(dim_m, dim_m, A.field());
            for (std::size_t k = 0; k < n; ++k) {
                lprod = lprod + left[k] * A.c(i, j, k);
                rprod = rprod + right[k] * A.c(j, i, k);
            }
            if (left[i] * left[j] != lprod) {
                fail("left action", "L(b_i)L(b_j) != L(b_i b_j) at (" + std::to_string(i) + "," +
                                        std::to_string(j) + ")");
                break;
            }
            if (right[i] * right[j] != rprod) {
                fail("right action", "R(b_i)R(b_j) != R(b_j b_i) at (" + std::to_string(i) + "," +
                                         std::to_string(j) + ")");
                break;
            }
            if (left[i] * right[j] != right[j] * left[i]) {
                fail("bimodule", "actions do not commute at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
                break;
            }
        }
    return rep;
}

}  // namespace bvext
