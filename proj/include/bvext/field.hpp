#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bvext {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_mismatch : error {
    using error::error;
};
struct containment_error : error {
    using error::error;
};
struct field_mismatch : error {
    using error::error;
};
struct parse_error : error {
    using error::error;
};

enum class FieldKind { rationals, prime_field };

/// Ground field: Q or GF(p) for a prime p.
struct FieldSpec {
    FieldKind kind = FieldKind::rationals;
    std::int64_t p = 0;

    static FieldSpec rationals() { return {FieldKind::rationals, 0}; }
    static FieldSpec gf(std::int64_t p);

    bool is_rational() const { return kind == FieldKind::rationals; }
    std::int64_t characteristic() const { return is_rational() ? 0 : p; }
    std::string str() const;

    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }
};

bool is_prime(std::int64_t n);

/// Exact field element: arbitrary-precision rational, or residue mod p.
/// Arithmetic never rounds; mixing elements of different fields throws.
class Scalar {
  public:
    Scalar() = default;  // zero of Q

    static Scalar zero(const FieldSpec& f) { return from_int(0, f); }
    static Scalar one(const FieldSpec& f) { return from_int(1, f); }
    static Scalar from_int(std::int64_t v, const FieldSpec& f);
    static Scalar from_rational(const Rational& q);
    /// Parses the serialized form: "p/q" or integer for Q, decimal residue for GF(p).
    static Scalar parse(const std::string& s, const FieldSpec& f);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;
    const Rational& rational() const;
    std::int64_t residue() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

  private:
    FieldSpec field_ = FieldSpec::rationals();
    Rational q_;          // value when rational
    std::int64_t r_ = 0;  // residue in [0, p) when prime field

    void check_same(const Scalar& o) const;
};

}  // namespace bvext
