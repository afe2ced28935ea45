#include "gsb/gsb_lie.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace gsb {

LieElement normal_s_word(const LieElement& s, const XWord& a, const XWord& b)
{
    const TAMonomial& lead = s.leading_monomial();
    const XWord word = a + lead.x + b;
    if (!is_alsw(word)) throw ContextError("normal_s_word: " + word.debug() + " is not an ALSW");
    const LieTree t = special_bracketing(word, lead.x, a.size());
    return evaluate_tree(s.field(), t, &s);
}

bool divides_mixed(const TAMonomial& s_lead, const TAMonomial& t)
{
    return s_lead.y.divides(t.y) && !t.x.occurrences(s_lead.x).empty();
}

std::size_t LieRuleSet::add(const LieElement& s)
{
    if (s.is_zero()) throw std::invalid_argument("LieRuleSet::add: zero relation");
    rules_.push_back(make_k_monic(s));
    leads_.push_back(rules_.back().leading_monomial());
    const std::size_t idx = rules_.size() - 1;
    by_word_[leads_.back().x].push_back(idx);
    max_word_len_ = std::max(max_word_len_, leads_.back().x.size());
    return idx;
}

std::optional<LieRuleSet::Match> LieRuleSet::find(const TAMonomial& t, MatchPolicy policy, std::size_t limit) const
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
                    break;  // later indices in this bucket are larger
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

const LieElement& LieReducer::normal_word(std::size_t rule, const XWord& a, const XWord& b)
{
    Key key{rule, a, b};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(std::move(key), normal_s_word(rules_->rule(rule), a, b)).first->second;
}

ReductionTrace LieReducer::reduce(const LieElement& h, const std::optional<MixedMonomial>& bound, bool record,
                                  std::optional<std::size_t> limit)
{
    const Field f = h.field();
    const std::size_t lim = limit.value_or(rules_->size());
    ReductionTrace trace;
    trace.remainder = LieElement(f);
    LieElement rest = h;
    while (!rest.is_zero()) {
        const TAMonomial t = rest.leading_monomial();
        const Scalar c = rest.leading_coeff();
        const auto m = rules_->find(t, policy_, lim);
        if (!m) {
            trace.remainder.add_term(t, c);
            rest.add_term(t, -c);
            continue;
        }
        const TAMonomial& lead = rules_->lead(m->rule);
        XWord a = t.x.sub(0, m->pos);
        XWord b = t.x.sub(m->pos + lead.x.size());
        const YMonomial beta = t.y.quotient(lead.y);
        const Scalar alpha = c / rules_->rule(m->rule).leading_coeff();
        const LieElement& word = normal_word(m->rule, a, b);
        rest.add_mapped(word, -alpha, [&](const MixedMonomial& u) { return MixedMonomial{u.y * beta, u.x}; });
        if (!rest.coeff(t).is_zero()) throw std::logic_error("reduce: normal s-word has the wrong leading word");
        if (bound && mixed_compare(t, *bound) >= 0) trace.within_bound = false;
        if (record) trace.steps.push_back(ReductionStep{m->rule, std::move(a), std::move(b), beta, alpha});
    }
    return trace;
}

ReductionTrace reduce(const LieElement& h, const std::vector<LieElement>& s, const std::optional<MixedMonomial>& bound,
                      MatchPolicy policy)
{
    LieRuleSet rules(h.field());
    for (const auto& e : s) rules.add(e);
    LieReducer reducer(rules, policy);
    return reducer.reduce(h, bound);
}

LieElement replay(const ReductionTrace& trace, const std::vector<LieElement>& s, Field f)
{
    LieElement out = trace.remainder;
    for (const auto& st : trace.steps) {
        const LieElement rule = make_k_monic(s.at(st.rule));
        out += normal_s_word(rule, st.a, st.b) * st.beta * st.alpha;
    }
    (void)f;
    return out;
}

std::string to_string(CompositionKind k)
{
    switch (k) {
    case CompositionKind::inclusion: return "inclusion";
    case CompositionKind::intersection: return "intersection";
    case CompositionKind::external: return "external";
    case CompositionKind::multiplication: return "multiplication";
    }
    return "?";
}

namespace {

// A composition without its value.
struct CompSpec {
    CompositionKind kind;
    std::size_t f, g;
    XWord a, b, c;
    std::size_t overlap = 0;
};

using NormalWordFn = std::function<const LieElement&(std::size_t, const XWord&, const XWord&)>;

MixedMonomial ambiguity(const CompSpec& sp, const TAMonomial& fl, const TAMonomial& gl)
{
    const YMonomial l = monomial_lcm(fl.y, gl.y);
    switch (sp.kind) {
    case CompositionKind::inclusion: return {l, fl.x};
    case CompositionKind::intersection: return {l, fl.x + gl.x.sub(sp.overlap)};
    case CompositionKind::external: return {l, sp.a + fl.x + sp.b + gl.x + sp.c};
    case CompositionKind::multiplication: {
        const XWord u = sp.a + fl.x + sp.b;
        return {fl.y, u + u};
    }
    }
    return {};
}

LieElement composition_value(const CompSpec& sp, const LieElement& f, const LieElement& g, const NormalWordFn& nw)
{
    const TAMonomial& fl = f.leading_monomial();
    const TAMonomial& gl = g.leading_monomial();
    const YMonomial l = monomial_lcm(fl.y, gl.y);
    const YMonomial lf = l.quotient(fl.y);
    const YMonomial lg = l.quotient(gl.y);
    const Field fld = f.field();
    switch (sp.kind) {
    case CompositionKind::inclusion:
        return f * lf - nw(sp.g, sp.a, sp.b) * lg;
    case CompositionKind::intersection:
        return nw(sp.f, XWord(), gl.x.sub(sp.overlap)) * lf - nw(sp.g, fl.x.sub(0, fl.x.size() - sp.overlap), XWord()) * lg;
    case CompositionKind::external:
        return nw(sp.f, sp.a, sp.b + gl.x + sp.c) * lf - nw(sp.g, sp.a + fl.x + sp.b, sp.c) * lg;
    case CompositionKind::multiplication: {
        const XWord u = sp.a + fl.x + sp.b;
        return lie_bracket(lie_basis(fld, TAMonomial{YMonomial(), u}), nw(sp.f, sp.a, sp.b));
    }
    }
    return LieElement(fld);
}

// ALSWs up to a length, indexed by their subwords.
class WordIndex {
public:
    WordIndex(std::size_t alphabet, std::size_t max_len) : words_(enumerate_alsw(alphabet, max_len))
    {
        for (std::size_t id = 0; id < words_.size(); ++id) {
            const XWord& w = words_[id];
            for (std::size_t p = 0; p < w.size(); ++p)
                for (std::size_t l = 1; p + l <= w.size(); ++l) index_[w.sub(p, l)].emplace_back(id, p);
        }
    }
    const std::vector<XWord>& words() const { return words_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& containing(const XWord& u) const
    {
        static const std::vector<std::pair<std::size_t, std::size_t>> none;
        auto it = index_.find(u);
        return it == index_.end() ? none : it->second;
    }

private:
    std::vector<XWord> words_;
    std::unordered_map<XWord, std::vector<std::pair<std::size_t, std::size_t>>, XWordHash> index_;
};

// All compositions of the ordered pair (f, g); f == g adds the multiplication
// compositions of f.
void pair_compositions(const LieRuleSet& rules, std::size_t fi, std::size_t gi, const Caps& caps,
                       const WordIndex& words, std::size_t mult_len, std::vector<CompSpec>& out)
{
    const TAMonomial& fl = rules.lead(fi);
    const TAMonomial& gl = rules.lead(gi);
    // inclusion
    if (fi != gi && (!(fl.x == gl.x) || fi < gi)) {
        for (std::size_t p : fl.x.occurrences(gl.x))
            out.push_back({CompositionKind::inclusion, fi, gi, fl.x.sub(0, p), fl.x.sub(p + gl.x.size()), {}, 0});
    }
    // intersection
    const std::size_t max_overlap = std::min(fl.x.size(), gl.x.size());
    for (std::size_t k = 1; k < max_overlap; ++k) {
        if (fl.x.sub(fl.x.size() - k) == gl.x.sub(0, k))
            out.push_back({CompositionKind::intersection, fi, gi, {}, {}, {}, k});
    }
    // external
    if (!monomial_gcd(fl.y, gl.y).is_one() && monomial_lcm(fl.y, gl.y).degree() <= caps.max_y_deg) {
        for (const auto& [id, p] : words.containing(fl.x)) {
            const XWord& w = words.words()[id];
            const std::size_t after = p + fl.x.size();
            for (std::size_t q : w.occurrences(gl.x)) {
                if (q < after) continue;
                out.push_back({CompositionKind::external, fi, gi, w.sub(0, p), w.sub(after, q - after),
                               w.sub(q + gl.x.size()), 0});
            }
        }
    }
    // multiplication
    if (fi == gi && !fl.y.is_one()) {
        for (const auto& [id, p] : words.containing(fl.x)) {
            const XWord& u = words.words()[id];
            if (u.size() > mult_len) continue;
            out.push_back({CompositionKind::multiplication, fi, fi, u.sub(0, p), u.sub(p + fl.x.size()), {}, 0});
        }
    }
}

struct PairJob {
    std::size_t f, g;
};

std::vector<PairJob> pair_jobs(std::size_t n, std::size_t first_new)
{
    std::vector<PairJob> jobs;
    for (std::size_t f = 0; f < n; ++f)
        for (std::size_t g = 0; g < n; ++g)
            if (std::max(f, g) >= first_new) jobs.push_back({f, g});
    return jobs;
}

CompositionRecord make_record(const CompSpec& sp, const LieRuleSet& rules, LieElement value)
{
    CompositionRecord r;
    r.kind = sp.kind;
    r.f = sp.f;
    r.g = sp.g;
    r.w = ambiguity(sp, rules.lead(sp.f), rules.lead(sp.g));
    if (sp.kind == CompositionKind::intersection) {
        r.a = rules.lead(sp.f).x.sub(0, rules.lead(sp.f).x.size() - sp.overlap);
        r.b = rules.lead(sp.g).x.sub(sp.overlap);
    } else {
        r.a = sp.a;
        r.b = sp.b;
        r.c = sp.c;
    }
    r.value = std::move(value);
    return r;
}

std::size_t half_up(unsigned n)
{
    return (n + 1) / 2;
}

bool fits(const LieElement& e, const Caps& caps)
{
    return x_degree(e) <= caps.max_x_deg && y_degree(e) <= caps.max_y_deg;
}

// Reduces every composition of the listed pairs; `keep` decides which
// records to return (called with the reduction trace).
template <class Keep>
std::vector<CompositionRecord> process_pairs(const LieRuleSet& rules, const std::vector<PairJob>& jobs,
                                             const Caps& caps, const WordIndex& words, unsigned threads,
                                             std::size_t& checked, Keep keep)
{
    const std::size_t mult_len = half_up(caps.max_x_deg);
    std::vector<std::vector<CompositionRecord>> per_job(jobs.size());
    std::vector<std::size_t> counts(jobs.size(), 0);
    parallel_for(jobs.size(), threads, [&](std::size_t /*worker*/) {
        return [&, reducer = std::make_shared<LieReducer>(rules)](std::size_t j) {
            std::vector<CompSpec> specs;
            pair_compositions(rules, jobs[j].f, jobs[j].g, caps, words, mult_len, specs);
            counts[j] = specs.size();
            NormalWordFn nw = [&](std::size_t r, const XWord& a, const XWord& b) -> const LieElement& {
                return reducer->normal_word(r, a, b);
            };
            for (const auto& sp : specs) {
                LieElement value = composition_value(sp, rules.rule(sp.f), rules.rule(sp.g), nw);
                const MixedMonomial w = ambiguity(sp, rules.lead(sp.f), rules.lead(sp.g));
                ReductionTrace tr = reducer->reduce(value, w, false);
                if (keep(tr)) per_job[j].push_back(make_record(sp, rules, std::move(tr.remainder)));
            }
        };
    });
    std::vector<CompositionRecord> out;
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        checked += counts[j];
        for (auto& r : per_job[j]) out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

CompositionRecord comp_inclusion(const LieElement& f0, const LieElement& g0, const XWord& a, const XWord& b)
{
    const LieElement f = make_k_monic(f0), g = make_k_monic(g0);
    const TAMonomial& fl = f.leading_monomial();
    const TAMonomial& gl = g.leading_monomial();
    if (!(fl.x == a + gl.x + b)) throw ContextError("comp_inclusion: x-part mismatch");
    LieRuleSet rules(f.field());
    rules.add(f);
    rules.add(g);
    LieReducer r(rules);
    const CompSpec sp{CompositionKind::inclusion, 0, 1, a, b, {}, 0};
    NormalWordFn nw = [&](std::size_t i, const XWord& x, const XWord& y) -> const LieElement& { return r.normal_word(i, x, y); };
    return make_record(sp, rules, composition_value(sp, f, g, nw));
}

CompositionRecord comp_intersection(const LieElement& f0, const LieElement& g0, std::size_t overlap_len)
{
    const LieElement f = make_k_monic(f0), g = make_k_monic(g0);
    const XWord& fx = f.leading_monomial().x;
    const XWord& gx = g.leading_monomial().x;
    if (overlap_len == 0 || overlap_len >= fx.size() || overlap_len >= gx.size() ||
        !(fx.sub(fx.size() - overlap_len) == gx.sub(0, overlap_len)))
        throw ContextError("comp_intersection: no overlap of length " + std::to_string(overlap_len));
    LieRuleSet rules(f.field());
    rules.add(f);
    rules.add(g);
    LieReducer r(rules);
    const CompSpec sp{CompositionKind::intersection, 0, 1, {}, {}, {}, overlap_len};
    NormalWordFn nw = [&](std::size_t i, const XWord& x, const XWord& y) -> const LieElement& { return r.normal_word(i, x, y); };
    return make_record(sp, rules, composition_value(sp, f, g, nw));
}

CompositionRecord comp_external(const LieElement& f0, const LieElement& g0, const XWord& a, const XWord& b,
                                const XWord& c)
{
    const LieElement f = make_k_monic(f0), g = make_k_monic(g0);
    const TAMonomial& fl = f.leading_monomial();
    const TAMonomial& gl = g.leading_monomial();
    if (monomial_gcd(fl.y, gl.y).is_one()) throw ContextError("comp_external: coprime y-parts");
    if (!is_alsw(a + fl.x + b + gl.x + c)) throw ContextError("comp_external: word is not an ALSW");
    LieRuleSet rules(f.field());
    rules.add(f);
    rules.add(g);
    LieReducer r(rules);
    const CompSpec sp{CompositionKind::external, 0, 1, a, b, c, 0};
    NormalWordFn nw = [&](std::size_t i, const XWord& x, const XWord& y) -> const LieElement& { return r.normal_word(i, x, y); };
    return make_record(sp, rules, composition_value(sp, f, g, nw));
}

CompositionRecord comp_multiplication(const LieElement& f0, const XWord& a, const XWord& b)
{
    const LieElement f = make_k_monic(f0);
    const TAMonomial& fl = f.leading_monomial();
    if (fl.y.is_one()) throw ContextError("comp_multiplication: y-part is trivial");
    if (!is_alsw(a + fl.x + b)) throw ContextError("comp_multiplication: context is not an ALSW");
    LieRuleSet rules(f.field());
    rules.add(f);
    LieReducer r(rules);
    const CompSpec sp{CompositionKind::multiplication, 0, 0, a, b, {}, 0};
    NormalWordFn nw = [&](std::size_t i, const XWord& x, const XWord& y) -> const LieElement& { return r.normal_word(i, x, y); };
    return make_record(sp, rules, composition_value(sp, f, f, nw));
}

std::vector<CompositionRecord> enumerate_compositions(const LieRuleSet& rules, std::size_t alphabet_size,
                                                      const Caps& caps, std::size_t first_new)
{
    const WordIndex words(alphabet_size, caps.max_x_deg);
    const std::size_t mult_len = half_up(caps.max_x_deg);
    LieReducer reducer(rules);
    NormalWordFn nw = [&](std::size_t r, const XWord& a, const XWord& b) -> const LieElement& {
        return reducer.normal_word(r, a, b);
    };
    std::vector<CompositionRecord> out;
    for (const auto& job : pair_jobs(rules.size(), first_new)) {
        std::vector<CompSpec> specs;
        pair_compositions(rules, job.f, job.g, caps, words, mult_len, specs);
        for (const auto& sp : specs)
            out.push_back(make_record(sp, rules, composition_value(sp, rules.rule(sp.f), rules.rule(sp.g), nw)));
    }
    return out;
}

std::vector<CompositionRecord> enumerate_compositions(const std::vector<LieElement>& s, std::size_t alphabet_size,
                                                      const Caps& caps)
{
    if (s.empty()) return {};
    LieRuleSet rules(s.front().field());
    for (const auto& e : s) rules.add(e);
    return enumerate_compositions(rules, alphabet_size, caps);
}

GsbCheck is_gsb(const std::vector<LieElement>& s, std::size_t alphabet_size, const Caps& caps, unsigned threads)
{
    GsbCheck out;
    if (s.empty()) return out;
    LieRuleSet rules(s.front().field());
    for (const auto& e : s) rules.add(e);
    const WordIndex words(alphabet_size, caps.max_x_deg);
    out.failures = process_pairs(rules, pair_jobs(rules.size(), 0), caps, words, threads, out.checked,
                                 [](const ReductionTrace& tr) { return !tr.remainder.is_zero() || !tr.within_bound; });
    out.ok = out.failures.empty();
    return out;
}

std::vector<LieElement> interreduce(const std::vector<LieElement>& s)
{
    std::vector<LieElement> sorted;
    for (const auto& e : s)
        if (!e.is_zero()) sorted.push_back(make_k_monic(e));
    std::stable_sort(sorted.begin(), sorted.end(), [](const LieElement& a, const LieElement& b) {
        return mixed_compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<LieElement> out;
    if (sorted.empty()) return out;
    LieRuleSet rules(sorted.front().field());
    LieReducer reducer(rules);
    for (const auto& e : sorted) {
        if (rules.find(e.leading_monomial())) continue;
        // tails only meet rules with smaller leading words, all final already
        LieElement reduced = reducer.remainder(e);
        rules.add(reduced);
        out.push_back(rules.rule(rules.size() - 1));
    }
    return out;
}

CompletionResult shirshov_complete(const std::vector<LieElement>& s, std::size_t alphabet_size, const Caps& caps,
                                   const CompletionOptions& opts)
{
    CompletionResult result;
    result.caps = caps;
    if (s.empty()) return result;
    const Field f = s.front().field();
    LieRuleSet rules(f);
    for (const auto& e : s)
        if (!e.is_zero()) rules.add(e);
    const WordIndex words(alphabet_size, caps.max_x_deg);

    std::size_t first_new = 0;
    while (first_new < rules.size()) {
        if (result.rounds >= opts.max_rounds) throw BudgetExceeded("Shirshov completion exceeded the round cap");
        ++result.rounds;
        const std::size_t snapshot = rules.size();
        std::vector<CompositionRecord> candidates =
            process_pairs(rules, pair_jobs(snapshot, first_new), caps, words, opts.threads, result.compositions,
                          [](const ReductionTrace& tr) { return !tr.remainder.is_zero(); });
        LieReducer serial(rules);
        for (auto& rec : candidates) {
            if (!fits(rec.value, caps)) {
                ++result.discarded;
                continue;
            }
            LieElement r = serial.remainder(rec.value);
            if (r.is_zero()) continue;
            if (!fits(r, caps)) {
                ++result.discarded;
                continue;
            }
            if (rules.size() >= opts.max_elements) throw BudgetExceeded("Shirshov completion exceeded the element cap");
            rules.add(r);
        }
        first_new = snapshot;
    }
    result.basis = interreduce(rules.rules());
    return result;
}

std::vector<TAMonomial> irr_basis(const std::vector<LieElement>& s, std::size_t alphabet_size, std::size_t y_count,
                                  const Caps& caps)
{
    std::vector<TAMonomial> leads;
    for (const auto& e : s)
        if (!e.is_zero()) leads.push_back(e.leading_monomial());

    // all Y-monomials of degree <= max_y_deg
    std::vector<YMonomial> ys;
    std::vector<std::uint16_t> cur(y_count, 0);
    std::function<void(std::size_t, unsigned)> gen = [&](std::size_t i, unsigned left) {
        if (i == y_count) {
            ys.emplace_back(cur);
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            cur[i] = static_cast<std::uint16_t>(e);
            gen(i + 1, left - e);
        }
        cur[i] = 0;
    };
    gen(0, caps.max_y_deg);

    std::vector<TAMonomial> out;
    for (const auto& w : enumerate_alsw(alphabet_size, caps.max_x_deg))
        for (const auto& y : ys) {
            const TAMonomial t{y, w};
            bool reducible = false;
            for (const auto& l : leads)
                if (divides_mixed(l, t)) {
                    reducible = true;
                    break;
                }
            if (!reducible) out.push_back(t);
        }
    std::sort(out.begin(), out.end(), [](const TAMonomial& a, const TAMonomial& b) { return mixed_compare(a, b) < 0; });
    return out;
}

LieElement nf(const LieElement& e, const std::vector<LieElement>& s, const Caps& caps)
{
    if (!fits(e, caps)) throw CapsExceeded("nf: element exceeds the caps of the basis");
    if (s.empty()) return e;
    LieRuleSet rules(e.field());
    for (const auto& r : s) rules.add(r);
    LieReducer reducer(rules);
    return reducer.remainder(e);
}

bool word_problem_homogeneous(const LieElement& e, const std::vector<LieElement>& s, std::size_t alphabet_size)
{
    for (const auto& r : s) {
        if (r.is_zero()) continue;
        const std::size_t d = r.leading_monomial().x.size();
        for (const auto& [m, c] : r.terms())
            if (!m.y.is_one() || m.x.size() != d)
                throw std::invalid_argument("word_problem_homogeneous: relations must be Y-free and X-homogeneous");
    }
    if (e.is_zero()) return true;
    const Caps caps{x_degree(e), y_degree(e)};
    const CompletionResult sc = shirshov_complete(s, alphabet_size, caps);
    return nf(e, sc.basis, caps).is_zero();
}

LiePresentation embed_two_generated(const LiePresentation& p)
{
    LiePresentation out = p;
    auto fresh = [&](std::string name) {
        auto taken = [&](const std::string& n) {
            return std::find(out.x_names.begin(), out.x_names.end(), n) != out.x_names.end() ||
                   std::find(out.y_names.begin(), out.y_names.end(), n) != out.y_names.end();
        };
        while (taken(name)) name += "_";
        return name;
    };
    const std::string b_name = fresh("b");
    out.x_names.push_back(b_name);
    const std::string a_name = fresh("a");
    out.x_names.push_back(a_name);
    const auto b = static_cast<Letter>(p.x_names.size());
    const auto a = static_cast<Letter>(p.x_names.size() + 1);
    for (std::size_t i = 0; i < p.x_names.size(); ++i) {
        // a a b^i a b with i = rank + 1
        XWord w{a, a};
        for (std::size_t k = 0; k <= i; ++k) w = w + XWord::letter(b);
        w = w + XWord{a, b};
        LieElement rel = lie_basis(p.field, TAMonomial{YMonomial(), w});
        rel -= lie_generator(p.field, static_cast<Letter>(i));
        out.s.push_back(rel);
    }
    return out;
}

}  // namespace gsb
