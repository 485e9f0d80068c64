#include "ratsub/fautomaton.hpp"

#include <algorithm>

namespace ratsub {

FAutomaton::FAutomaton(InvolutiveAlphabet group_alphabet, Alphabet output_alphabet,
                       std::uint32_t num_states, std::uint32_t initial,
                       std::set<std::uint32_t> finals, std::vector<FEdge> edges)
    : group_(std::move(group_alphabet)),
      output_(std::move(output_alphabet)),
      num_states_(num_states),
      initial_(initial),
      finals_(std::move(finals)),
      edges_(std::move(edges)) {
    if (num_states_ == 0) throw validation_error("automaton needs at least one state");
    if (initial_ >= num_states_) throw validation_error("initial state out of range");
    for (auto f : finals_)
        if (f >= num_states_) throw validation_error("final state out of range");
    for (const auto& e : edges_) {
        if (e.src >= num_states_ || e.dst >= num_states_)
            throw validation_error("edge endpoint out of range");
        for (Letter x : e.group)
            if (x >= group_.size()) throw validation_error("edge group letter out of range");
        for (Letter x : e.output)
            if (x >= output_.size()) throw validation_error("edge output letter out of range");
    }
}

namespace {

// Edge with at most one group letter; obtained by splitting long group labels
// through fresh intermediate states.  Output rides on the first piece.
struct Piece {
    std::uint32_t src;
    Label letter; // kEpsilon or a group letter
    Word output;
    std::uint32_t dst;
};

} // namespace

Cfg fautomaton_to_cfg(const FAutomaton& p) {
    std::uint32_t n = p.num_states();
    std::vector<Piece> pieces;
    for (const auto& e : p.edges()) {
        if (e.group.size() <= 1) {
            Label l = e.group.empty() ? kEpsilon : static_cast<Label>(e.group[0]);
            pieces.push_back({e.src, l, e.output, e.dst});
        } else {
            std::uint32_t prev = e.src;
            for (std::size_t i = 0; i < e.group.size(); ++i) {
                std::uint32_t next = (i + 1 == e.group.size()) ? e.dst : n++;
                pieces.push_back({prev, static_cast<Label>(e.group[i]),
                                  i == 0 ? e.output : Word{}, next});
                prev = next;
            }
        }
    }

    // Matched-pair construction.  N[p,q] generates the outputs of the p→q
    // paths whose group word reduces freely to the empty word: either the
    // path is empty, or its first letter cancels against a matching inverse
    // letter later on, with the enclosed and trailing parts reducing to the
    // empty word themselves.
    auto nid = [n](std::uint32_t s, std::uint32_t q) { return s * n + q; };
    std::vector<std::string> names(static_cast<std::size_t>(n) * n + 1);
    for (std::uint32_t s = 0; s < n; ++s)
        for (std::uint32_t q = 0; q < n; ++q)
            names[nid(s, q)] = "<" + std::to_string(s) + "," + std::to_string(q) + ">";
    std::uint32_t start = n * n;
    names[start] = "<start>";

    auto terms = [](const Word& w) {
        std::vector<Cfg::Sym> out;
        for (Letter x : w) out.push_back(Cfg::t(x));
        return out;
    };

    std::vector<Cfg::Production> prods;
    for (auto f : p.finals()) prods.push_back({start, {Cfg::nt(nid(p.initial(), f))}});
    for (std::uint32_t s = 0; s < n; ++s) prods.push_back({nid(s, s), {}});
    for (const auto& e : pieces) {
        if (e.letter == kEpsilon) {
            for (std::uint32_t q = 0; q < n; ++q) {
                auto rhs = terms(e.output);
                rhs.push_back(Cfg::nt(nid(e.dst, q)));
                prods.push_back({nid(e.src, q), std::move(rhs)});
            }
        } else {
            Label inv =
                static_cast<Label>(p.group_alphabet().inverse(static_cast<Letter>(e.letter)));
            for (const auto& m : pieces) {
                if (m.letter != inv) continue;
                for (std::uint32_t q = 0; q < n; ++q) {
                    auto rhs = terms(e.output);
                    rhs.push_back(Cfg::nt(nid(e.dst, m.src)));
                    for (Letter x : m.output) rhs.push_back(Cfg::t(x));
                    rhs.push_back(Cfg::nt(nid(m.dst, q)));
                    prods.push_back({nid(e.src, q), std::move(rhs)});
                }
            }
        }
    }
    std::sort(prods.begin(), prods.end());
    prods.erase(std::unique(prods.begin(), prods.end()), prods.end());
    return cfg_prune(Cfg(p.output_alphabet(), std::move(names), start, std::move(prods)));
}

} // namespace ratsub
