#ifndef RATSUB_TRANSDUCER_HPP
#define RATSUB_TRANSDUCER_HPP

#include <set>

#include "ratsub/nfa.hpp"

namespace ratsub {

struct TransducerEdge {
    std::uint32_t src;
    Label input;  // letter of the input alphabet, or kEpsilon
    Word output;  // word over the output alphabet (any length)
    std::uint32_t dst;

    friend auto operator<=>(const TransducerEdge&, const TransducerEdge&) = default;
};

/// Finite transducer: an automaton over pairs (input word, output word).
/// Input labels are normalized to length ≤ 1 at construction.
class Transducer {
public:
    Transducer(Alphabet input, Alphabet output, std::uint32_t num_states, std::uint32_t initial,
               std::set<std::uint32_t> finals, std::set<TransducerEdge> edges);

    const Alphabet& input() const { return input_; }
    const Alphabet& output() const { return output_; }
    std::uint32_t num_states() const { return num_states_; }
    std::uint32_t initial() const { return initial_; }
    const std::set<std::uint32_t>& finals() const { return finals_; }
    const std::set<TransducerEdge>& edges() const { return edges_; }

private:
    Alphabet input_;
    Alphabet output_;
    std::uint32_t num_states_;
    std::uint32_t initial_;
    std::set<std::uint32_t> finals_;
    std::set<TransducerEdge> edges_;
};

/// { v : (u,v) ∈ rel(t), u ∈ L(m) }.
Nfa transducer_image(const Transducer& t, const Nfa& m);

/// { u : (u,v) ∈ rel(t), v ∈ L(m) }.
Nfa transducer_preimage(const Transducer& t, const Nfa& m);

} // namespace ratsub

#endif
