#ifndef RATSUB_NFA_HPP
#define RATSUB_NFA_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ratsub/words.hpp"

namespace ratsub {

/// Edge label: a letter id, or kEpsilon.
using Label = std::int32_t;
constexpr Label kEpsilon = -1;

struct Edge {
    std::uint32_t src;
    Label label;
    std::uint32_t dst;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Nondeterministic finite automaton with a single initial state and
/// letter-or-epsilon edge labels.  Immutable in all library operations:
/// every construction returns a fresh automaton.
class Nfa {
public:
    Nfa(Alphabet alphabet, std::uint32_t num_states, std::uint32_t initial,
        std::set<std::uint32_t> finals, std::set<Edge> edges);

    const Alphabet& alphabet() const { return alphabet_; }
    std::uint32_t num_states() const { return num_states_; }
    std::uint32_t initial() const { return initial_; }
    const std::set<std::uint32_t>& finals() const { return finals_; }
    const std::set<Edge>& edges() const { return edges_; }

    bool has_edge(std::uint32_t src, Label l, std::uint32_t dst) const {
        return edges_.count(Edge{src, l, dst}) != 0;
    }

    /// Same states and edges, different root and finals.
    Nfa rerooted(std::uint32_t initial, std::set<std::uint32_t> finals) const;

    /// Same automaton plus one edge.
    Nfa with_edge(Edge e) const;

    /// Stable textual key (used for memoization and determinism checks).
    std::string key() const;

    friend bool operator==(const Nfa& x, const Nfa& y) {
        return x.alphabet_ == y.alphabet_ && x.num_states_ == y.num_states_ &&
               x.initial_ == y.initial_ && x.finals_ == y.finals_ && x.edges_ == y.edges_;
    }

private:
    Alphabet alphabet_;
    std::uint32_t num_states_;
    std::uint32_t initial_;
    std::set<std::uint32_t> finals_;
    std::set<Edge> edges_;
};

/// Automaton accepting exactly the given finite set of words.
Nfa nfa_for_words(const Alphabet& a, const std::vector<Word>& words);
Nfa nfa_empty(const Alphabet& a);

std::set<std::uint32_t> epsilon_closure(const Nfa& m, const std::set<std::uint32_t>& from);
/// States reachable from `from` reading word w (epsilon moves free).
std::set<std::uint32_t> step_word(const Nfa& m, const std::set<std::uint32_t>& from, const Word& w);

bool accepts(const Nfa& m, const Word& w);
bool is_empty(const Nfa& m);

Nfa intersect(const Nfa& m1, const Nfa& m2);
Nfa nfa_union(const Nfa& m1, const Nfa& m2);
Nfa concat(const Nfa& m1, const Nfa& m2);
Nfa star(const Nfa& m);
Nfa left_translate(const Word& w, const Nfa& m);
Nfa right_translate(const Nfa& m, const Word& w);
Nfa reverse(const Nfa& m);

/// { w : prefix·w·suffix ∈ L(m) }, by re-rooting.
Nfa quotient(const Nfa& m, const Word& prefix, const Word& suffix);

/// Replaces every a-labelled edge by a path spelling h(a); L(result) = h(L(m)).
Nfa relabel(const Nfa& m, const Morphism& h);

/// Keeps only edges labelled by `keep` (and epsilon edges) and reinterprets
/// them over the alphabet `target`; `keep[a]` maps an old letter to its letter
/// in the target, or -1 to drop edges with that label.
/// L(result) = (L(m) ∩ keep-letters*) re-spelled.
Nfa restrict_letters(const Nfa& m, const Alphabet& target, const std::vector<Label>& keep);

/// Drops states not on some initial→final path. Language preserved.
Nfa trim(const Nfa& m);

} // namespace ratsub

#endif
