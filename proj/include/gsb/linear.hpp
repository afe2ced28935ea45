#pragma once

// Finite k-linear combinations of monomials, kept canonical: no zero
// coefficients, keys ordered by the monomial order so the leading term is the
// last entry.

#include "gsb/scalar.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

namespace gsb {

class ZeroElementError : public std::domain_error {
public:
    ZeroElementError() : std::domain_error("zero element has no leading term") {}
};

template <class Mono, class Less>
class LinComb {
public:
    using Terms = std::map<Mono, Scalar, Less>;

    LinComb() = default;
    explicit LinComb(Field f) : field_(f) {}
    LinComb(Field f, const Mono& m) : field_(f) { terms_.emplace(m, Scalar::one(f)); }
    LinComb(Field f, const Mono& m, const Scalar& c) : field_(f)
    {
        if (!c.is_zero()) terms_.emplace(m, c);
    }

    Field field() const { return field_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of m (zero when absent).
    Scalar coeff(const Mono& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar::zero(field_) : it->second;
    }

    const Mono& leading_monomial() const
    {
        if (terms_.empty()) throw ZeroElementError();
        return terms_.rbegin()->first;
    }
    const Scalar& leading_coeff() const
    {
        if (terms_.empty()) throw ZeroElementError();
        return terms_.rbegin()->second;
    }

    void add_term(const Mono& m, const Scalar& c)
    {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// this += c * (mul(m) for each term of o), where mul maps monomials.
    template <class F>
    void add_mapped(const LinComb& o, const Scalar& c, F&& mul)
    {
        if (c.is_zero()) return;
        for (const auto& [m, a] : o.terms_) add_term(mul(m), a * c);
    }

    LinComb& operator+=(const LinComb& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    LinComb& operator*=(const Scalar& c)
    {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, a] : terms_) a *= c;
        return *this;
    }
    LinComb operator-() const
    {
        LinComb r = *this;
        for (auto& [m, a] : r.terms_) a = -a;
        return r;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Scalar& c) { return a *= c; }
    friend LinComb operator*(const Scalar& c, LinComb a) { return a *= c; }

    /// Divide by the leading coefficient.
    LinComb monic() const
    {
        if (terms_.empty()) throw ZeroElementError();
        return *this * leading_coeff().inverse();
    }

    friend bool operator==(const LinComb& a, const LinComb& b)
    {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto it = b.terms_.begin();
        for (const auto& [m, c] : a.terms_) {
            if (!(m == it->first) || !(c == it->second)) return false;
            ++it;
        }
        return true;
    }

private:
    Field field_;
    Terms terms_;
};

}  // namespace gsb
