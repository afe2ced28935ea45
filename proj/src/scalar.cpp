#include "gsb/scalar.hpp"

namespace gsb {

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p)
{
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    // residues are multiplied in 64 bits
    if (p > (1u << 31)) throw FieldError("characteristic too large");
    return Field(p);
}

std::string Field::name() const
{
    return p_ == 0 ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(Field f, std::int64_t v) : field_(f)
{
    if (f.is_rational()) {
        q_ = v;
    } else {
        const auto p = static_cast<std::int64_t>(f.characteristic());
        r_ = v % p;
        if (r_ < 0) r_ += p;
    }
}

Scalar::Scalar(Field f, const Rational& v) : field_(f)
{
    if (f.is_rational()) {
        q_ = v;
        return;
    }
    const BigInt p = f.characteristic();
    BigInt num = boost::multiprecision::numerator(v) % p;
    BigInt den = boost::multiprecision::denominator(v) % p;
    if (num < 0) num += p;
    if (den == 0) throw FieldError("denominator vanishes in " + f.name());
    r_ = num.convert_to<std::int64_t>();
    *this *= Scalar(f, den.convert_to<std::int64_t>()).inverse();
}

bool Scalar::is_zero() const
{
    return field_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const
{
    return field_.is_rational() ? q_ == 1 : r_ == 1;
}

std::int64_t Scalar::residue() const
{
    if (field_.is_rational()) throw FieldError("residue() on a rational scalar");
    return r_;
}

Rational Scalar::rational() const
{
    return field_.is_rational() ? q_ : Rational(r_);
}

void Scalar::check_same(const Scalar& o) const
{
    if (!(field_ == o.field_)) throw FieldError("mixed characteristics: " + field_.name() + " and " + o.field_.name());
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    if (field_.is_rational()) {
        r.q_ = -q_;
    } else if (r_ != 0) {
        r.r_ = static_cast<std::int64_t>(field_.characteristic()) - r_;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    check_same(o);
    if (field_.is_rational()) {
        q_ += o.q_;
    } else {
        r_ += o.r_;
        if (r_ >= static_cast<std::int64_t>(field_.characteristic())) r_ -= field_.characteristic();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    check_same(o);
    if (field_.is_rational())
        q_ *= o.q_;
    else
        r_ = (r_ * o.r_) % static_cast<std::int64_t>(field_.characteristic());
    return *this;
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw FieldError("division by zero");
    Scalar r = *this;
    if (field_.is_rational()) {
        r.q_ = 1 / q_;
        return r;
    }
    // extended Euclid
    std::int64_t a = r_, m = field_.characteristic(), x0 = 1, x1 = 0;
    while (m != 0) {
        const std::int64_t q = a / m;
        std::int64_t t = a - q * m;
        a = m;
        m = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    const auto p = static_cast<std::int64_t>(field_.characteristic());
    r.r_ = ((x0 % p) + p) % p;
    return r;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const
{
    if (!field_.is_rational()) return std::to_string(r_);
    return q_.str();
}

}  // namespace gsb
