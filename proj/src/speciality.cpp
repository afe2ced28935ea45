#include "gsb/speciality.hpp"

#include <algorithm>

namespace gsb {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::special_certified: return "special-certified";
    case Verdict::non_special_witnessed: return "non-special-witnessed";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

bool is_rx_element(const LieElement& e)
{
    if (e.is_zero()) return false;
    const XWord& x = e.leading_monomial().x;
    if (x.size() != 1) return false;
    return std::all_of(e.terms().begin(), e.terms().end(), [&](const auto& t) { return t.first.x == x; });
}

namespace {

struct Sides {
    CompletionResult lie;
    AssocCompletionResult assoc;
    bool r_complete = true;
};

Sides complete_both(const LiePresentation& p, const Caps& caps, unsigned threads)
{
    Sides out;
    const unsigned r_cap = r_degree_cap(p, caps);
    if (!p.r.empty()) out.r_complete = buchberger_complete(p.r, BuchbergerOptions{r_cap, 4096}).skipped_pairs == 0;
    const CompletionOptions opts{threads};
    out.lie = shirshov_complete(lie_ideal_generators(p, r_cap), p.x_names.size(), caps, opts);
    out.assoc = assoc_complete(assoc_ideal_generators(envelope(p), r_cap), p.x_names.size(), caps, opts);
    return out;
}

void fill_sizes(SpecialityReport& rep, const Sides& s)
{
    rep.lie_basis_size = s.lie.basis.size();
    rep.assoc_basis_size = s.assoc.basis.size();
    rep.lie_discarded = s.lie.discarded;
    rep.assoc_discarded = s.assoc.discarded;
    rep.exact = s.r_complete && s.lie.discarded == 0 && s.assoc.discarded == 0;
}

}  // namespace

SpecialityReport check_speciality_criterion(const LiePresentation& p, const Caps& caps, const SpecialityOptions& opts)
{
    SpecialityReport rep;
    rep.caps = caps;
    for (std::size_t i = 0; i < p.s.size(); ++i)
        if (!is_kY_monic(p.s[i])) rep.reasons.push_back("relation " + std::to_string(i + 1) + " is not k[Y]-monic");
    if (!rep.reasons.empty()) return rep;

    const Sides sides = complete_both(p, caps, opts.threads);
    fill_sizes(rep, sides);
    if (!sides.r_complete) rep.reasons.push_back("R was not completed within the degree cap");
    for (const auto& e : sides.lie.basis)
        if (!is_rx_element(e) && !is_kY_monic(e)) {
            rep.reasons.push_back("completion produced a relation that is not k[Y]-monic");
            break;
        }
    if (!rep.reasons.empty()) return rep;

    AssocRuleSet assoc(p.field);
    for (const auto& e : sides.assoc.basis) assoc.add(e);
    for (const auto& u : irr_basis(sides.lie.basis, p.x_names.size(), p.y_names.size(), caps)) {
        ++rep.irr_checked;
        if (!assoc_irreducible(u, assoc)) {
            rep.reasons.push_back("Irr monomial " + u.x.debug() + " is reducible on the associative side");
            return rep;
        }
    }
    rep.verdict = Verdict::special_certified;
    return rep;
}

SpecialityReport nonspeciality_witness(const LiePresentation& p, const LieElement& witness, const Caps& caps,
                                       const SpecialityOptions& opts)
{
    if (x_degree(witness) > caps.max_x_deg || y_degree(witness) > caps.max_y_deg)
        throw CapsExceeded("witness exceeds the caps");
    SpecialityReport rep;
    rep.caps = caps;
    rep.witness = witness;
    const Sides sides = complete_both(p, caps, opts.threads);
    fill_sizes(rep, sides);

    LieRuleSet lie(p.field);
    for (const auto& e : sides.lie.basis) lie.add(e);
    LieReducer reducer(lie);
    rep.lie_trace = reducer.reduce(witness);
    rep.nf_lie = rep.lie_trace->remainder;

    AssocRuleSet assoc(p.field);
    for (const auto& e : sides.assoc.basis) assoc.add(e);
    rep.assoc_trace = assoc_reduce(to_associative(witness), assoc);
    rep.nf_assoc = rep.assoc_trace->remainder;

    if (rep.nf_lie->is_zero()) rep.reasons.push_back("witness is zero in the Lie algebra");
    if (!rep.nf_assoc->is_zero()) rep.reasons.push_back("witness is nonzero in the enveloping algebra");
    if (rep.reasons.empty()) rep.verdict = Verdict::non_special_witnessed;
    return rep;
}

}  // namespace gsb
