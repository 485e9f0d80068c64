#include "ratsub/transducer.hpp"

namespace ratsub {

Transducer::Transducer(Alphabet input, Alphabet output, std::uint32_t num_states,
                       std::uint32_t initial, std::set<std::uint32_t> finals,
                       std::set<TransducerEdge> edges)
    : input_(std::move(input)),
      output_(std::move(output)),
      num_states_(num_states),
      initial_(initial),
      finals_(std::move(finals)),
      edges_(std::move(edges)) {
    if (num_states_ == 0) throw validation_error("transducer needs at least one state");
    if (initial_ >= num_states_) throw validation_error("initial state out of range");
    for (auto f : finals_)
        if (f >= num_states_) throw validation_error("final state out of range");
    for (const auto& e : edges_) {
        if (e.src >= num_states_ || e.dst >= num_states_)
            throw validation_error("edge endpoint out of range");
        if (e.input != kEpsilon &&
            (e.input < 0 || static_cast<std::size_t>(e.input) >= input_.size()))
            throw validation_error("input label outside the input alphabet");
        for (Letter x : e.output)
            if (x >= output_.size())
                throw validation_error("output label outside the output alphabet");
    }
}

Nfa transducer_image(const Transducer& t, const Nfa& m) {
    if (!(m.alphabet() == t.input()))
        throw alphabet_mismatch("transducer_image: automaton is not over the input alphabet");
    const std::uint32_t nt = t.num_states();
    auto pair_id = [nt](std::uint32_t p, std::uint32_t s) { return p * nt + s; };
    std::uint32_t num = m.num_states() * nt;
    std::uint32_t next = num;
    std::set<Edge> edges;
    auto add_output_path = [&](std::uint32_t from, const Word& out, std::uint32_t to) {
        if (out.empty()) {
            edges.insert(Edge{from, kEpsilon, to});
        } else {
            std::uint32_t cur = from;
            for (std::size_t i = 0; i + 1 < out.size(); ++i) {
                edges.insert(Edge{cur, static_cast<Label>(out[i]), next});
                cur = next++;
            }
            edges.insert(Edge{cur, static_cast<Label>(out.back()), to});
        }
    };
    // m's epsilon edges advance the m-side only
    for (const auto& e : m.edges())
        if (e.label == kEpsilon)
            for (std::uint32_t s = 0; s < nt; ++s)
                edges.insert(Edge{pair_id(e.src, s), kEpsilon, pair_id(e.dst, s)});
    for (const auto& te : t.edges()) {
        if (te.input == kEpsilon) {
            for (std::uint32_t p = 0; p < m.num_states(); ++p)
                add_output_path(pair_id(p, te.src), te.output, pair_id(p, te.dst));
        } else {
            for (const auto& e : m.edges())
                if (e.label == te.input)
                    add_output_path(pair_id(e.src, te.src), te.output, pair_id(e.dst, te.dst));
        }
    }
    std::set<std::uint32_t> finals;
    for (auto f : m.finals())
        for (auto g : t.finals()) finals.insert(pair_id(f, g));
    return trim(Nfa(t.output(), next, pair_id(m.initial(), t.initial()), std::move(finals),
                    std::move(edges)));
}

Nfa transducer_preimage(const Transducer& t, const Nfa& m) {
    if (!(m.alphabet() == t.output()))
        throw alphabet_mismatch("transducer_preimage: automaton is not over the output alphabet");
    // product states (t state, set-free: single m state); an edge consumes the
    // whole output word of the transducer edge inside m.
    const std::uint32_t nm = m.num_states();
    auto pair_id = [nm](std::uint32_t s, std::uint32_t p) { return s * nm + p; };
    std::set<Edge> edges;
    for (const auto& te : t.edges()) {
        for (std::uint32_t p = 0; p < nm; ++p) {
            auto reached = step_word(m, {p}, te.output);
            for (auto q : reached)
                edges.insert(Edge{pair_id(te.src, p), te.input, pair_id(te.dst, q)});
        }
    }
    std::set<std::uint32_t> finals;
    for (auto g : t.finals())
        for (auto f : m.finals()) finals.insert(pair_id(g, f));
    // seed the m side at every state reachable from the initial by epsilon;
    // step_word from each p already closes under epsilon on both ends, but the
    // very first transducer edge must start from m's initial closure.
    auto init_close = epsilon_closure(m, {m.initial()});
    const std::uint32_t root = t.num_states() * nm;
    for (auto p : init_close) edges.insert(Edge{root, kEpsilon, pair_id(t.initial(), p)});
    return trim(
        Nfa(t.input(), root + 1, root, std::move(finals), std::move(edges)));
}

} // namespace ratsub
