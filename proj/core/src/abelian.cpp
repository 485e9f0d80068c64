#include "ratsub/abelian.hpp"

#include "ratsub/ilp.hpp"

namespace ratsub {

GroupDecider abelian_group_decider(std::uint32_t free_rank,
                                   const std::vector<std::uint32_t>& torsion) {
    for (auto m : torsion)
        if (m < 2) throw validation_error("abelian_group_decider: torsion orders must be ≥ 2");
    std::vector<std::string> base;
    for (std::uint32_t i = 1; i <= free_rank; ++i) base.push_back("e" + std::to_string(i));
    for (std::uint32_t j = 1; j <= torsion.size(); ++j) base.push_back("f" + std::to_string(j));
    InvolutiveAlphabet gens = InvolutiveAlphabet::with_inverses(base);
    const std::size_t dim = free_rank + torsion.size();

    // letter x contributes ±1 to one coordinate
    auto coordinate = [dim](Letter x) { return (x / 2) % dim; };
    auto sign = [](Letter x) { return (x % 2 == 0) ? 1 : -1; };

    return GroupDecider{
        gens,
        [=](const Nfa& r0, const Word& w) {
            Nfa r = trim(r0);
            std::vector<Integer> target(dim, 0);
            for (Letter x : w) target[coordinate(x)] += sign(x);

            const std::vector<Edge> edges(r.edges().begin(), r.edges().end());
            const std::uint32_t n = r.num_states();

            // shared rows: one accepting endpoint, walk degree balance, and
            // the evaluation conditions on the letter counts
            auto add_core_rows = [&](IlpInstance& ilp, const std::vector<std::uint32_t>& y,
                                     const std::vector<std::uint32_t>& final_sel,
                                     const std::vector<std::uint32_t>& final_states) {
                IlpRow one;
                for (auto v : final_sel) one.coeffs.push_back({v, 1});
                one.rel = IlpRow::Rel::eq;
                one.rhs = 1;
                ilp.add_row(std::move(one));
                for (std::uint32_t v = 0; v < n; ++v) {
                    IlpRow row;
                    std::vector<Rational> coeff(edges.size(), 0);
                    for (std::size_t e = 0; e < edges.size(); ++e) {
                        if (edges[e].src == v) coeff[e] += 1;
                        if (edges[e].dst == v) coeff[e] -= 1;
                    }
                    for (std::size_t e = 0; e < edges.size(); ++e)
                        if (coeff[e] != 0) row.coeffs.push_back({y[e], coeff[e]});
                    for (std::size_t f = 0; f < final_states.size(); ++f)
                        if (final_states[f] == v) row.coeffs.push_back({final_sel[f], 1});
                    row.rel = IlpRow::Rel::eq;
                    row.rhs = (v == r.initial()) ? 1 : 0;
                    ilp.add_row(std::move(row));
                }
                for (std::size_t c = 0; c < dim; ++c) {
                    IlpRow row;
                    for (std::size_t e = 0; e < edges.size(); ++e) {
                        if (edges[e].label == kEpsilon) continue;
                        Letter x = static_cast<Letter>(edges[e].label);
                        if (coordinate(x) == c) row.coeffs.push_back({y[e], sign(x)});
                    }
                    if (c >= free_rank) {
                        Integer m = Integer(torsion[c - free_rank]);
                        row.coeffs.push_back({ilp.add_var(), -Rational(m)});
                        row.coeffs.push_back({ilp.add_var(), Rational(m)});
                    }
                    row.rel = IlpRow::Rel::eq;
                    row.rhs = Rational(target[c]);
                    ilp.add_row(std::move(row));
                }
            };

            // connectivity-free relaxation plus lazy cuts: infeasibility
            // refutes, a witness whose used edges hang together certifies, and
            // a disconnected witness forces a cut — some edge across the gap
            // must be used — before re-solving.  Every genuine walk satisfies
            // each cut, and each cut excludes the witness that spawned it, so
            // the loop stays exact and terminates.
            IlpInstance ilp;
            std::vector<std::uint32_t> y(edges.size());
            for (std::size_t e = 0; e < edges.size(); ++e) y[e] = ilp.add_var();
            std::vector<std::uint32_t> final_states(r.finals().begin(), r.finals().end());
            std::vector<std::uint32_t> final_sel;
            for (std::size_t f = 0; f < final_states.size(); ++f)
                final_sel.push_back(ilp.add_var(Integer(1)));
            add_core_rows(ilp, y, final_sel, final_states);
            for (;;) {
                auto witness = ilp_solve(ilp);
                if (!witness) return false;
                std::vector<bool> used(edges.size());
                bool any = false;
                for (std::size_t e = 0; e < edges.size(); ++e) {
                    used[e] = (*witness)[y[e]] > 0;
                    any = any || used[e];
                }
                if (!any) return true; // empty walk: the selected final is the initial
                std::vector<bool> reach(n, false);
                reach[r.initial()] = true;
                bool grew = true;
                while (grew) {
                    grew = false;
                    for (std::size_t e = 0; e < edges.size(); ++e) {
                        if (!used[e]) continue;
                        bool a = reach[edges[e].src], b = reach[edges[e].dst];
                        if (a != b) {
                            reach[edges[e].src] = reach[edges[e].dst] = true;
                            grew = true;
                        }
                    }
                }
                std::vector<std::size_t> stranded;
                for (std::size_t e = 0; e < edges.size(); ++e)
                    if (used[e] && !reach[edges[e].src]) stranded.push_back(e);
                if (stranded.empty()) return true;
                // the gap count z totals the usage of edges straddling the
                // reached/unreached split; a stranded edge in use forces z ≥ 1
                IlpRow gap;
                std::uint32_t z = ilp.add_var();
                gap.coeffs.push_back({z, -1});
                for (std::size_t e = 0; e < edges.size(); ++e)
                    if (reach[edges[e].src] != reach[edges[e].dst])
                        gap.coeffs.push_back({y[e], 1});
                gap.rel = IlpRow::Rel::eq;
                gap.rhs = 0;
                ilp.add_row(std::move(gap));
                for (std::size_t f : stranded) ilp.add_implication(y[f], z);
            }
        },
        "abelian(" + std::to_string(free_rank) + "," + std::to_string(torsion.size()) + ")"};
}

} // namespace ratsub
