#include "ratsub/automaton_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace ratsub {

Nfa read_nfa(std::istream& in) {
    std::optional<Alphabet> alphabet;
    std::optional<std::uint32_t> num_states;
    std::optional<std::uint32_t> initial;
    std::set<std::uint32_t> finals;
    struct RawEdge {
        std::uint32_t src;
        std::string label;
        std::uint32_t dst;
    };
    std::vector<RawEdge> raw_edges;

    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& what) -> void {
        throw parse_error("automaton line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "alphabet:") {
            Alphabet a;
            std::string n;
            while (ls >> n) a.add(n);
            alphabet = std::move(a);
        } else if (head == "states:") {
            std::uint32_t n;
            if (!(ls >> n)) fail("expected state count");
            num_states = n;
        } else if (head == "initial:") {
            std::uint32_t i;
            if (!(ls >> i)) fail("expected initial state");
            initial = i;
        } else if (head == "finals:") {
            std::uint32_t f;
            while (ls >> f) finals.insert(f);
        } else if (head == "edge:") {
            RawEdge e;
            if (!(ls >> e.src >> e.label >> e.dst)) fail("expected 'edge: src label dst'");
            raw_edges.push_back(std::move(e));
        } else {
            fail("unknown directive '" + head + "'");
        }
    }
    if (!alphabet) throw parse_error("automaton: missing 'alphabet:' line");
    if (!num_states) throw parse_error("automaton: missing 'states:' line");
    if (!initial) throw parse_error("automaton: missing 'initial:' line");
    std::set<Edge> edges;
    for (const auto& e : raw_edges) {
        Label l = kEpsilon;
        if (e.label != "1") l = static_cast<Label>(alphabet->require(e.label));
        edges.insert(Edge{e.src, l, e.dst});
    }
    return Nfa(std::move(*alphabet), *num_states, *initial, std::move(finals), std::move(edges));
}

Nfa read_nfa_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open automaton file '" + path + "'");
    return read_nfa(in);
}

void write_nfa(std::ostream& out, const Nfa& m) {
    out << "alphabet:";
    for (const auto& n : m.alphabet().names()) out << ' ' << n;
    out << '\n';
    out << "states: " << m.num_states() << '\n';
    out << "initial: " << m.initial() << '\n';
    out << "finals:";
    for (auto f : m.finals()) out << ' ' << f;
    out << '\n';
    for (const auto& e : m.edges()) {
        out << "edge: " << e.src << ' '
            << (e.label == kEpsilon ? std::string("1") : m.alphabet().name(e.label)) << ' '
            << e.dst << '\n';
    }
}

void write_dot(std::ostream& out, const Nfa& m) {
    out << "digraph nfa {\n  rankdir=LR;\n  node [shape=circle];\n";
    out << "  start [shape=point];\n  start -> s" << m.initial() << ";\n";
    for (auto f : m.finals()) out << "  s" << f << " [shape=doublecircle];\n";
    for (const auto& e : m.edges()) {
        out << "  s" << e.src << " -> s" << e.dst << " [label=\""
            << (e.label == kEpsilon ? std::string("&epsilon;") : m.alphabet().name(e.label))
            << "\"];\n";
    }
    out << "}\n";
}

} // namespace ratsub
