#include "gsb/presentation.hpp"

#include <algorithm>

namespace gsb {

std::vector<LieElement> rx_relations(Field f, const std::vector<CommPoly>& rels, std::size_t x_count)
{
    std::vector<LieElement> out;
    for (const auto& r : rels) {
        if (r.is_zero()) continue;
        const CommPoly monic = r.monic();
        for (std::size_t x = 0; x < x_count; ++x) out.push_back(monic * lie_generator(f, static_cast<Letter>(x)));
    }
    return out;
}

unsigned r_degree_cap(const LiePresentation& p, const Caps& caps)
{
    unsigned d = caps.max_y_deg;
    for (const auto& r : p.r)
        for (const auto& [m, c] : r.terms()) d = std::max(d, m.degree());
    return 2 * d;
}

std::vector<LieElement> lie_ideal_generators(const LiePresentation& p, unsigned r_cap)
{
    std::vector<LieElement> out;
    for (const auto& s : p.s)
        if (!s.is_zero()) out.push_back(make_k_monic(s));
    std::vector<CommPoly> r = p.r;
    if (!r.empty()) r = buchberger_complete(r, BuchbergerOptions{r_cap, 4096}).basis;
    for (auto& e : rx_relations(p.field, r, p.x_names.size())) out.push_back(std::move(e));
    return out;
}

}  // namespace gsb
