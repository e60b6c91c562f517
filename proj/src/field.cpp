#include "bvext/field.hpp"

namespace bvext {

bool is_prime(std::int64_t n) {
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

FieldSpec FieldSpec::gf(std::int64_t p) {
    if (p <= 1 || p >= (std::int64_t(1) << 31) || !is_prime(p))
        throw error("GF(p) requires a prime p < 2^31, got " + std::to_string(p));
    return {FieldKind::prime_field, p};
}

std::string FieldSpec::str() const {
    return is_rational() ? std::string("Q") : "GF(" + std::to_string(p) + ")";
}

namespace {

std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    // extended Euclid; a nonzero mod p
    std::int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1)
        throw error("division by zero in GF(p)");
    return mod_norm(t, p);
}

}  // namespace

Scalar Scalar::from_int(std::int64_t v, const FieldSpec& f) {
    Scalar s;
    s.field_ = f;
    if (f.is_rational())
        s.q_ = Rational(v);
    else
        s.r_ = mod_norm(v, f.p);
    return s;
}

Scalar Scalar::from_rational(const Rational& q) {
    Scalar s;
    s.field_ = FieldSpec::rationals();
    s.q_ = q;
    return s;
}

Scalar Scalar::parse(const std::string& s, const FieldSpec& f) {
    try {
        if (f.is_rational())
            return from_rational(Rational(s));
        std::size_t pos = 0;
        std::int64_t v = std::stoll(s, &pos);
        if (pos != s.size())
            throw parse_error("trailing characters in scalar \"" + s + "\"");
        return from_int(v, f);
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception&) {
        throw parse_error("cannot parse scalar \"" + s + "\" over " + f.str());
    }
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? q_.is_zero() : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? q_ == 1 : r_ == 1;
}

const Rational& Scalar::rational() const {
    if (!field_.is_rational())
        throw field_mismatch("rational() on a GF(p) scalar");
    return q_;
}

std::int64_t Scalar::residue() const {
    if (field_.is_rational())
        throw field_mismatch("residue() on a rational scalar");
    return r_;
}

void Scalar::check_same(const Scalar& o) const {
    if (field_ != o.field_)
        throw field_mismatch("scalars over " + field_.str() + " and " + o.field_.str());
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.is_rational())
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : field_.p - r_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational())
        q_ += o.q_;
    else
        r_ = mod_norm(r_ + o.r_, field_.p);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational())
        q_ -= o.q_;
    else
        r_ = mod_norm(r_ - o.r_, field_.p);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational())
        q_ *= o.q_;
    else
        r_ = static_cast<std::int64_t>((__int128)r_ * o.r_ % field_.p);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same(o);
    if (o.is_zero())
        throw error("division by zero");
    if (field_.is_rational())
        q_ /= o.q_;
    else
        r_ = static_cast<std::int64_t>((__int128)r_ * mod_inv(o.r_, field_.p) % field_.p);
    return *this;
}

Scalar Scalar::inverse() const {
    return one(field_) / *this;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same(o);
    return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    return field_.is_rational() ? q_.str() : std::to_string(r_);
}

}  // namespace bvext
