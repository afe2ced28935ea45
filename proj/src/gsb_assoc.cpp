#include "gsb/gsb_assoc.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsb {

AssocPresentation envelope(const LiePresentation& p)
{
    AssocPresentation out{p.field, p.y_names, p.x_names, p.r, {}};
    for (const auto& s : p.s)
        if (!s.is_zero()) out.s.push_back(make_k_monic(to_associative(s)));
    return out;
}

std::vector<AssocElement> assoc_ideal_generators(const AssocPresentation& p, unsigned r_cap)
{
    std::vector<AssocElement> out;
    for (const auto& s : p.s)
        if (!s.is_zero()) out.push_back(make_k_monic(s));
    std::vector<CommPoly> r = p.r;
    if (!r.empty()) r = buchberger_complete(r, BuchbergerOptions{r_cap, 4096}).basis;
    for (const auto& e : rx_relations(p.field, r, p.x_names.size())) out.push_back(to_associative(e));
    return out;
}

std::size_t AssocRuleSet::add(const AssocElement& s)
{
    if (s.is_zero()) throw std::invalid_argument("AssocRuleSet::add: zero relation");
    rules_.push_back(make_k_monic(s));
    leads_.push_back(rules_.back().leading_monomial());
    const std::size_t idx = rules_.size() - 1;
    by_word_[leads_.back().x].push_back(idx);
    max_word_len_ = std::max(max_word_len_, leads_.back().x.size());
    return idx;
}

std::optional<AssocRuleSet::Match> AssocRuleSet::find(const AssocMonomial& t, MatchPolicy policy,
                                                      std::size_t limit) const
{
    std::optional<Match> best;
    const std::size_t n = t.x.size();
    for (std::size_t pos = 0; pos < n; ++pos) {
        for (std::size_t len = 1; len <= std::min(max_word_len_, n - pos); ++len) {
            auto it = by_word_.find(t.x.sub(pos, len));
            if (it == by_word_.end()) continue;
            for (std::size_t idx : it->second) {
                if (idx >= limit) break;
                if (!leads_[idx].y.divides(t.y)) continue;
                if (policy == MatchPolicy::first_rule) {
                    if (!best || idx < best->rule) best = Match{idx, pos};
                    break;
                }
                if (!best) {
                    best = Match{idx, pos};
                    continue;
                }
                const auto c = mixed_compare(leads_[idx], leads_[best->rule]);
                if (c > 0 || (c == 0 && idx > best->rule) || (idx == best->rule && pos > best->pos))
                    best = Match{idx, pos};
            }
        }
    }
    return best;
}

AssocReduction assoc_reduce(const AssocElement& h, const AssocRuleSet& rules, MatchPolicy policy, bool record)
{
    const Field f = h.field();
    AssocReduction out;
    out.remainder = AssocElement(f);
    AssocElement rest = h;
    while (!rest.is_zero()) {
        const AssocMonomial t = rest.leading_monomial();
        const Scalar c = rest.leading_coeff();
        const auto m = rules.find(t, policy, rules.size());
        if (!m) {
            out.remainder.add_term(t, c);
            rest.add_term(t, -c);
            continue;
        }
        const AssocMonomial& lead = rules.lead(m->rule);
        XWord a = t.x.sub(0, m->pos);
        XWord b = t.x.sub(m->pos + lead.x.size());
        const YMonomial beta = t.y.quotient(lead.y);
        const Scalar alpha = c / rules.rule(m->rule).leading_coeff();
        rest.add_mapped(rules.rule(m->rule), -alpha,
                        [&](const AssocMonomial& u) { return AssocMonomial{u.y * beta, a + u.x + b}; });
        if (record) out.steps.push_back(AssocStep{m->rule, std::move(a), std::move(b), beta, alpha});
    }
    return out;
}

AssocReduction assoc_reduce(const AssocElement& h, const std::vector<AssocElement>& s, MatchPolicy policy)
{
    AssocRuleSet rules(h.field());
    for (const auto& e : s) rules.add(e);
    return assoc_reduce(h, rules, policy);
}

AssocElement replay(const AssocReduction& r, const std::vector<AssocElement>& s)
{
    AssocElement out = r.remainder;
    for (const auto& st : r.steps) {
        AssocElement term = assoc_multiply(make_k_monic(s.at(st.rule)), st.beta, st.a, st.b);
        term *= st.alpha;
        out += term;
    }
    return out;
}

std::string to_string(AssocCompositionKind k)
{
    switch (k) {
    case AssocCompositionKind::inclusion: return "inclusion";
    case AssocCompositionKind::intersection: return "intersection";
    case AssocCompositionKind::external: return "external";
    case AssocCompositionKind::left_multiple: return "left-multiple";
    case AssocCompositionKind::right_multiple: return "right-multiple";
    }
    return "?";
}

namespace {

// All words over the alphabet of length <= n, shortest first.
std::vector<XWord> all_words(std::size_t alphabet, std::size_t n)
{
    std::vector<XWord> out{XWord()};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= n; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t x = 0; x < alphabet; ++x) out.push_back(out[i] + XWord::letter(static_cast<Letter>(x)));
        begin = end;
    }
    return out;
}

AssocElement shifted(const AssocElement& e, const YMonomial& y, const XWord& a, const XWord& b)
{
    return assoc_multiply(e, y, a, b);
}

bool fits(const AssocElement& e, const Caps& caps)
{
    return x_degree(e) <= caps.max_x_deg && y_degree(e) <= caps.max_y_deg;
}

}  // namespace

std::vector<AssocComposition> assoc_compositions(const AssocRuleSet& rules, std::size_t fi, std::size_t gi,
                                                 std::size_t alphabet_size, const Caps& caps)
{
    std::vector<AssocComposition> out;
    const AssocElement& f = rules.rule(fi);
    const AssocElement& g = rules.rule(gi);
    const AssocMonomial& fl = rules.lead(fi);
    const AssocMonomial& gl = rules.lead(gi);
    const YMonomial l = monomial_lcm(fl.y, gl.y);
    const YMonomial lf = l.quotient(fl.y);
    const YMonomial lg = l.quotient(gl.y);

    if (fi != gi && (!(fl.x == gl.x) || fi < gi)) {
        for (std::size_t p : fl.x.occurrences(gl.x)) {
            XWord a = fl.x.sub(0, p), b = fl.x.sub(p + gl.x.size());
            AssocElement v = shifted(f, lf, {}, {}) - shifted(g, lg, a, b);
            out.push_back({AssocCompositionKind::inclusion, fi, gi, std::move(a), std::move(b), std::move(v)});
        }
    }
    const std::size_t max_overlap = std::min(fl.x.size(), gl.x.size());
    for (std::size_t k = 1; k < max_overlap; ++k) {
        if (!(fl.x.sub(fl.x.size() - k) == gl.x.sub(0, k))) continue;
        XWord a = fl.x.sub(0, fl.x.size() - k), b = gl.x.sub(k);
        AssocElement v = shifted(f, lf, {}, b) - shifted(g, lg, a, {});
        out.push_back({AssocCompositionKind::intersection, fi, gi, std::move(a), std::move(b), std::move(v)});
    }
    if (!monomial_gcd(fl.y, gl.y).is_one() && l.degree() <= caps.max_y_deg &&
        fl.x.size() + gl.x.size() <= caps.max_x_deg) {
        for (const XWord& t : all_words(alphabet_size, caps.max_x_deg - fl.x.size() - gl.x.size())) {
            AssocElement v = shifted(f, lf, {}, t + gl.x) - shifted(g, lg, fl.x + t, {});
            out.push_back({AssocCompositionKind::external, fi, gi, t, {}, std::move(v)});
        }
    }
    if (fi == gi && !fl.y.is_one() && fl.x.size() + 1 <= caps.max_x_deg) {
        for (std::size_t x = 0; x < alphabet_size; ++x) {
            const XWord letter = XWord::letter(static_cast<Letter>(x));
            out.push_back({AssocCompositionKind::left_multiple, fi, fi, letter, {}, shifted(f, YMonomial(), letter, {})});
            out.push_back({AssocCompositionKind::right_multiple, fi, fi, {}, letter, shifted(f, YMonomial(), {}, letter)});
        }
    }
    return out;
}

std::vector<AssocElement> interreduce(const std::vector<AssocElement>& s)
{
    std::vector<AssocElement> sorted;
    for (const auto& e : s)
        if (!e.is_zero()) sorted.push_back(make_k_monic(e));
    std::stable_sort(sorted.begin(), sorted.end(), [](const AssocElement& a, const AssocElement& b) {
        return mixed_compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<AssocElement> out;
    if (sorted.empty()) return out;
    AssocRuleSet rules(sorted.front().field());
    for (const auto& e : sorted) {
        if (rules.find(e.leading_monomial())) continue;
        rules.add(assoc_reduce(e, rules, MatchPolicy::first_rule, false).remainder);
        out.push_back(rules.rule(rules.size() - 1));
    }
    return out;
}

AssocCompletionResult assoc_complete(const std::vector<AssocElement>& s, std::size_t alphabet_size, const Caps& caps,
                                     const CompletionOptions& opts)
{
    AssocCompletionResult result;
    result.caps = caps;
    if (s.empty()) return result;
    AssocRuleSet rules(s.front().field());
    for (const auto& e : s)
        if (!e.is_zero()) rules.add(e);

    std::size_t first_new = 0;
    while (first_new < rules.size()) {
        if (result.rounds >= opts.max_rounds) throw BudgetExceeded("associative completion exceeded the round cap");
        ++result.rounds;
        const std::size_t snapshot = rules.size();
        std::vector<std::pair<std::size_t, std::size_t>> jobs;
        for (std::size_t f = 0; f < snapshot; ++f)
            for (std::size_t g = 0; g < snapshot; ++g)
                if (std::max(f, g) >= first_new) jobs.emplace_back(f, g);
        std::vector<std::vector<AssocElement>> per_job(jobs.size());
        std::vector<std::size_t> counts(jobs.size(), 0);
        parallel_for(jobs.size(), opts.threads, [&](unsigned) {
            return [&](std::size_t j) {
                auto comps = assoc_compositions(rules, jobs[j].first, jobs[j].second, alphabet_size, caps);
                counts[j] = comps.size();
                for (auto& c : comps) {
                    AssocElement r = assoc_reduce(c.value, rules, MatchPolicy::first_rule, false).remainder;
                    if (!r.is_zero()) per_job[j].push_back(std::move(r));
                }
            };
        });
        for (std::size_t j = 0; j < jobs.size(); ++j) {
            result.compositions += counts[j];
            for (const auto& cand : per_job[j]) {
                if (!fits(cand, caps)) {
                    ++result.discarded;
                    continue;
                }
                AssocElement r = assoc_reduce(cand, rules, MatchPolicy::first_rule, false).remainder;
                if (r.is_zero()) continue;
                if (!fits(r, caps)) {
                    ++result.discarded;
                    continue;
                }
                if (rules.size() >= opts.max_elements)
                    throw BudgetExceeded("associative completion exceeded the element cap");
                rules.add(r);
            }
        }
        first_new = snapshot;
    }
    result.basis = interreduce(rules.rules());
    return result;
}

bool assoc_irreducible(const AssocMonomial& m, const AssocRuleSet& rules)
{
    return !rules.find(m).has_value();
}

}  // namespace gsb
