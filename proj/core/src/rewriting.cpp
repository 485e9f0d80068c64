#include "ratsub/rewriting.hpp"

#include "ratsub/budget.hpp"
#include "ratsub/regex.hpp"

namespace ratsub {

void MonadicSystem::add_rule_set(Label x, RidLanguage gamma) {
    if (!(gamma.alphabet() == alphabet_))
        throw alphabet_mismatch("rule set over a different alphabet than the system");
    if (x != kEpsilon && (x < 0 || static_cast<std::size_t>(x) >= alphabet_.size()))
        throw validation_error("rule target outside the alphabet");
    auto it = rules_.find(x);
    if (it == rules_.end())
        rules_.emplace(x, std::move(gamma));
    else
        it->second = rid_union(it->second, gamma);
}

MonadicSystem MonadicSystem::free_reduction(const InvolutiveAlphabet& a) {
    MonadicSystem sys(a.alphabet());
    std::vector<Word> pairs;
    for (Letter x = 0; x < a.size(); ++x) pairs.push_back(Word{x, a.inverse(x)});
    sys.add_rule_set(kEpsilon, rid_regular(nfa_for_words(a.alphabet(), pairs)));
    return sys;
}

namespace {

Nfa saturate_impl(const Nfa& m0, const MonadicSystem& g,
                  const std::vector<std::uint32_t>& sources, SaturationStats* stats) {
    if (!(m0.alphabet() == g.alphabet()))
        throw alphabet_mismatch("saturate: automaton alphabet differs from system alphabet");
    Nfa cur = m0;
    SaturationStats local;
    bool changed = true;
    while (changed) {
        changed = false;
        ++local.rounds;
        for (std::uint32_t p : sources) {
            for (std::uint32_t q = 0; q < cur.num_states(); ++q) {
                for (const auto& [x, gamma] : g.rules()) {
                    if (cur.has_edge(p, x, q)) continue;
                    budget::tick_oracle();
                    if (gamma.intersects(cur.rerooted(p, {q}))) {
                        cur = cur.with_edge(Edge{p, x, q});
                        changed = true;
                        ++local.edges_added;
                    }
                }
            }
        }
    }
    if (stats) *stats = local;
    return cur;
}

} // namespace

Nfa saturate(const Nfa& m0, const MonadicSystem& g, SaturationStats* stats) {
    std::vector<std::uint32_t> all(m0.num_states());
    for (std::uint32_t p = 0; p < m0.num_states(); ++p) all[p] = p;
    return saturate_impl(m0, g, all, stats);
}

Nfa saturate_from(const Nfa& m0, const MonadicSystem& g,
                  const std::vector<std::uint32_t>& sources, SaturationStats* stats) {
    for (auto p : sources)
        if (p >= m0.num_states()) throw validation_error("saturate_from: source out of range");
    return saturate_impl(m0, g, sources, stats);
}

bool descendants_contains(const Nfa& m0, const MonadicSystem& g, const Word& w) {
    return accepts(saturate(m0, g), w);
}

RidLanguage ancestors_rid(const RidLanguage& l, const MonadicSystem& g) {
    if (!(l.alphabet() == g.alphabet()))
        throw alphabet_mismatch("ancestors_rid: alphabets differ");
    return RidLanguage(l.alphabet(),
                       [l, g](const Nfa& r) { return l.intersects(saturate(r, g)); },
                       "ancestors(" + l.description() + ")");
}

} // namespace ratsub
