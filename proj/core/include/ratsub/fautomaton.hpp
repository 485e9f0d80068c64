#ifndef RATSUB_FAUTOMATON_HPP
#define RATSUB_FAUTOMATON_HPP

#include "ratsub/cfg.hpp"
#include "ratsub/nfa.hpp"

namespace ratsub {

/// Automaton whose edges carry a pair of words: one over an involutive
/// (free-group) alphabet and one over a separate output alphabet.  It accepts
/// the output word v when some path to a final state spells (g, v) with g
/// freely reducing to the empty word.
class FAutomaton {
public:
    struct FEdge {
        std::uint32_t src;
        Word group;  // word over the group alphabet
        Word output; // word over the output alphabet
        std::uint32_t dst;
        friend auto operator<=>(const FEdge&, const FEdge&) = default;
    };

    FAutomaton(InvolutiveAlphabet group_alphabet, Alphabet output_alphabet,
               std::uint32_t num_states, std::uint32_t initial, std::set<std::uint32_t> finals,
               std::vector<FEdge> edges);

    const InvolutiveAlphabet& group_alphabet() const { return group_; }
    const Alphabet& output_alphabet() const { return output_; }
    std::uint32_t num_states() const { return num_states_; }
    std::uint32_t initial() const { return initial_; }
    const std::set<std::uint32_t>& finals() const { return finals_; }
    const std::vector<FEdge>& edges() const { return edges_; }

private:
    InvolutiveAlphabet group_;
    Alphabet output_;
    std::uint32_t num_states_;
    std::uint32_t initial_;
    std::set<std::uint32_t> finals_;
    std::vector<FEdge> edges_;
};

/// Grammar over the output alphabet generating exactly the accepted outputs.
Cfg fautomaton_to_cfg(const FAutomaton& p);

} // namespace ratsub

#endif
