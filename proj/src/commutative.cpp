#include "gsb/commutative.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace gsb {

YMonomial::YMonomial(std::vector<std::uint16_t> exponents) : exp_(std::move(exponents))
{
    normalize();
}

YMonomial YMonomial::generator(std::size_t index, std::uint16_t power)
{
    std::vector<std::uint16_t> e(index + 1, 0);
    e[index] = power;
    return YMonomial(std::move(e));
}

void YMonomial::normalize()
{
    while (!exp_.empty() && exp_.back() == 0) exp_.pop_back();
    degree_ = 0;
    for (auto e : exp_) degree_ += e;
}

bool YMonomial::divides(const YMonomial& other) const
{
    if (exp_.size() > other.exp_.size() || degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] > other.exp_[i]) return false;
    return true;
}

YMonomial YMonomial::quotient(const YMonomial& d) const
{
    if (!d.divides(*this)) throw std::domain_error("monomial quotient: divisor does not divide");
    std::vector<std::uint16_t> e = exp_;
    for (std::size_t i = 0; i < d.exp_.size(); ++i) e[i] -= d.exp_[i];
    return YMonomial(std::move(e));
}

YMonomial operator*(const YMonomial& a, const YMonomial& b)
{
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    std::vector<std::uint16_t> e(std::max(a.exp_.size(), b.exp_.size()), 0);
    for (std::size_t i = 0; i < a.exp_.size(); ++i) e[i] += a.exp_[i];
    for (std::size_t i = 0; i < b.exp_.size(); ++i) e[i] += b.exp_[i];
    return YMonomial(std::move(e));
}

YMonomial monomial_lcm(const YMonomial& a, const YMonomial& b)
{
    std::vector<std::uint16_t> e(std::max(a.exponents().size(), b.exponents().size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exponent(i), b.exponent(i));
    return YMonomial(std::move(e));
}

YMonomial monomial_gcd(const YMonomial& a, const YMonomial& b)
{
    std::vector<std::uint16_t> e(std::min(a.exponents().size(), b.exponents().size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.exponent(i), b.exponent(i));
    return YMonomial(std::move(e));
}

std::strong_ordering monomial_compare(const YMonomial& a, const YMonomial& b)
{
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    const std::size_t n = std::max(a.exponents().size(), b.exponents().size());
    for (std::size_t i = n; i-- > 0;)
        if (auto c = a.exponent(i) <=> b.exponent(i); c != 0) return c;
    return std::strong_ordering::equal;
}

CommPoly operator*(const CommPoly& a, const YMonomial& m)
{
    CommPoly r(a.field());
    r.add_mapped(a, Scalar::one(a.field()), [&](const YMonomial& t) { return t * m; });
    return r;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b)
{
    CommPoly r(a.field());
    for (const auto& [m, c] : b.terms()) r.add_mapped(a, c, [&](const YMonomial& t) { return t * m; });
    return r;
}

CommPoly comm_normal_form(const CommPoly& p, const std::vector<CommPoly>& basis)
{
    CommPoly rest = p;
    CommPoly out(p.field());
    while (!rest.is_zero()) {
        const YMonomial lm = rest.leading_monomial();
        const Scalar lc = rest.leading_coeff();
        const CommPoly* divisor = nullptr;
        for (const auto& g : basis) {
            if (!g.is_zero() && g.leading_monomial().divides(lm)) {
                divisor = &g;
                break;
            }
        }
        if (divisor == nullptr) {
            out.add_term(lm, lc);
            rest.add_term(lm, -lc);
            continue;
        }
        const YMonomial q = lm.quotient(divisor->leading_monomial());
        const Scalar factor = -(lc / divisor->leading_coeff());
        rest.add_mapped(*divisor, factor, [&](const YMonomial& t) { return t * q; });
    }
    return out;
}

namespace {

CommPoly s_polynomial(const CommPoly& f, const CommPoly& g)
{
    const YMonomial l = monomial_lcm(f.leading_monomial(), g.leading_monomial());
    CommPoly s = f * l.quotient(f.leading_monomial()) * f.leading_coeff().inverse();
    s -= g * l.quotient(g.leading_monomial()) * g.leading_coeff().inverse();
    return s;
}

bool coprime(const YMonomial& a, const YMonomial& b)
{
    return monomial_gcd(a, b).is_one();
}

}  // namespace

std::vector<CommPoly> interreduce(const std::vector<CommPoly>& input)
{
    std::vector<CommPoly> basis;
    for (const auto& p : input)
        if (!p.is_zero()) basis.push_back(p.monic());
    // drop elements whose leading monomial is divisible by another's
    std::sort(basis.begin(), basis.end(), [](const CommPoly& a, const CommPoly& b) {
        return monomial_compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<CommPoly> kept;
    for (const auto& p : basis) {
        bool redundant = false;
        for (const auto& q : kept)
            if (q.leading_monomial().divides(p.leading_monomial())) redundant = true;
        if (!redundant) kept.push_back(p);
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<CommPoly> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        CommPoly tail = kept[i];
        tail.add_term(tail.leading_monomial(), -tail.leading_coeff());
        CommPoly reduced = comm_normal_form(tail, others);
        reduced.add_term(kept[i].leading_monomial(), Scalar::one(kept[i].field()));
        kept[i] = reduced;
    }
    return kept;
}

BuchbergerResult buchberger_complete(const std::vector<CommPoly>& relations, const BuchbergerOptions& opts)
{
    BuchbergerResult result;
    std::vector<CommPoly> basis;
    for (const auto& r : relations) {
        CommPoly nf = comm_normal_form(r, basis);
        if (!nf.is_zero()) basis.push_back(nf.monic());
    }
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const YMonomial& a = basis[i].leading_monomial();
        const YMonomial& b = basis[j].leading_monomial();
        if (coprime(a, b)) continue;
        if (monomial_lcm(a, b).degree() > opts.max_deg) {
            ++result.skipped_pairs;
            continue;
        }
        CommPoly r = comm_normal_form(s_polynomial(basis[i], basis[j]), basis);
        if (r.is_zero()) continue;
        if (basis.size() >= opts.max_elements) throw BudgetExceeded("Buchberger basis exceeded element cap");
        basis.push_back(r.monic());
        const std::size_t k = basis.size() - 1;
        for (std::size_t m = 0; m < k; ++m) pairs.emplace_back(m, k);
    }
    result.basis = interreduce(basis);
    return result;
}

bool is_groebner(const std::vector<CommPoly>& basis, unsigned max_deg)
{
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const YMonomial& a = basis[i].leading_monomial();
            const YMonomial& b = basis[j].leading_monomial();
            if (coprime(a, b) || monomial_lcm(a, b).degree() > max_deg) continue;
            if (!comm_normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace gsb
