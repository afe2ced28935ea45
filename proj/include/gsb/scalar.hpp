#pragma once

// Exact coefficients: residues modulo a prime p, or arbitrary-precision
// rationals when the characteristic is 0.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gsb {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The coefficient field: GF(p) for a prime p, or Q when p == 0.
class Field {
public:
    Field() = default;
    static Field rationals() { return Field(0); }
    static Field prime(std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An element of GF(p) (canonical residue 0..p-1) or of Q (reduced fraction,
/// positive denominator).
class Scalar {
public:
    Scalar() = default;
    Scalar(Field f, std::int64_t v);
    Scalar(Field f, const Rational& v);

    static Scalar zero(Field f) { return Scalar(f, 0); }
    static Scalar one(Field f) { return Scalar(f, 1); }

    Field field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Residue for GF(p); throws for Q.
    std::int64_t residue() const;
    /// Value as a rational (residue for GF(p)).
    Rational rational() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Integer mod p, or `n` / `n/m` for rationals.
    std::string to_string() const;

private:
    void check_same(const Scalar& o) const;

    Field field_;
    std::int64_t r_ = 0;  // GF(p)
    Rational q_;          // Q
};

}  // namespace gsb
