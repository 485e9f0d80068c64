#include "ratsub/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace ratsub {

Nfa::Nfa(Alphabet alphabet, std::uint32_t num_states, std::uint32_t initial,
         std::set<std::uint32_t> finals, std::set<Edge> edges)
    : alphabet_(std::move(alphabet)),
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
        if (e.label != kEpsilon &&
            (e.label < 0 || static_cast<std::size_t>(e.label) >= alphabet_.size()))
            throw validation_error("edge label outside the alphabet");
    }
}

Nfa Nfa::rerooted(std::uint32_t initial, std::set<std::uint32_t> finals) const {
    return Nfa(alphabet_, num_states_, initial, std::move(finals), edges_);
}

Nfa Nfa::with_edge(Edge e) const {
    auto edges = edges_;
    edges.insert(e);
    return Nfa(alphabet_, num_states_, initial_, finals_, std::move(edges));
}

std::string Nfa::key() const {
    std::ostringstream out;
    for (const auto& n : alphabet_.names()) out << n << ' ';
    out << '#' << num_states_ << '#' << initial_ << '#';
    for (auto f : finals_) out << f << ',';
    out << '#';
    for (const auto& e : edges_) out << e.src << ':' << e.label << ':' << e.dst << ';';
    return out.str();
}

Nfa nfa_empty(const Alphabet& a) { return Nfa(a, 1, 0, {}, {}); }

Nfa nfa_for_words(const Alphabet& a, const std::vector<Word>& words) {
    std::set<Edge> edges;
    std::set<std::uint32_t> finals;
    std::uint32_t next = 1;
    for (const auto& w : words) {
        std::uint32_t cur = 0;
        for (Letter x : w) {
            edges.insert(Edge{cur, static_cast<Label>(x), next});
            cur = next++;
        }
        finals.insert(cur);
    }
    return Nfa(a, next, 0, std::move(finals), std::move(edges));
}

namespace {

// Adjacency indexed by source state.
std::vector<std::vector<Edge>> out_edges(const Nfa& m) {
    std::vector<std::vector<Edge>> out(m.num_states());
    for (const auto& e : m.edges()) out[e.src].push_back(e);
    return out;
}

} // namespace

std::set<std::uint32_t> epsilon_closure(const Nfa& m, const std::set<std::uint32_t>& from) {
    auto adj = out_edges(m);
    std::set<std::uint32_t> seen = from;
    std::deque<std::uint32_t> work(from.begin(), from.end());
    while (!work.empty()) {
        auto s = work.front();
        work.pop_front();
        for (const auto& e : adj[s])
            if (e.label == kEpsilon && seen.insert(e.dst).second) work.push_back(e.dst);
    }
    return seen;
}

std::set<std::uint32_t> step_word(const Nfa& m, const std::set<std::uint32_t>& from, const Word& w) {
    auto adj = out_edges(m);
    auto close = [&](std::set<std::uint32_t> s) {
        std::deque<std::uint32_t> work(s.begin(), s.end());
        while (!work.empty()) {
            auto p = work.front();
            work.pop_front();
            for (const auto& e : adj[p])
                if (e.label == kEpsilon && s.insert(e.dst).second) work.push_back(e.dst);
        }
        return s;
    };
    auto cur = close(from);
    for (Letter x : w) {
        std::set<std::uint32_t> next;
        for (auto p : cur)
            for (const auto& e : adj[p])
                if (e.label == static_cast<Label>(x)) next.insert(e.dst);
        cur = close(std::move(next));
        if (cur.empty()) break;
    }
    return cur;
}

bool accepts(const Nfa& m, const Word& w) {
    auto reached = step_word(m, {m.initial()}, w);
    for (auto s : reached)
        if (m.finals().count(s)) return true;
    return false;
}

bool is_empty(const Nfa& m) {
    auto adj = out_edges(m);
    std::vector<char> seen(m.num_states(), 0);
    std::deque<std::uint32_t> work{m.initial()};
    seen[m.initial()] = 1;
    while (!work.empty()) {
        auto s = work.front();
        work.pop_front();
        if (m.finals().count(s)) return false;
        for (const auto& e : adj[s])
            if (!seen[e.dst]) {
                seen[e.dst] = 1;
                work.push_back(e.dst);
            }
    }
    return true;
}

namespace {
void check_same_alphabet(const Nfa& m1, const Nfa& m2) {
    if (!(m1.alphabet() == m2.alphabet()))
        throw alphabet_mismatch("automata are over different alphabets");
}
} // namespace

Nfa intersect(const Nfa& m1, const Nfa& m2) {
    check_same_alphabet(m1, m2);
    const std::uint32_t n2 = m2.num_states();
    auto pair_id = [n2](std::uint32_t p, std::uint32_t q) { return p * n2 + q; };
    std::set<Edge> edges;
    for (const auto& e1 : m1.edges()) {
        if (e1.label == kEpsilon) {
            for (std::uint32_t q = 0; q < n2; ++q)
                edges.insert(Edge{pair_id(e1.src, q), kEpsilon, pair_id(e1.dst, q)});
        } else {
            for (const auto& e2 : m2.edges())
                if (e2.label == e1.label)
                    edges.insert(Edge{pair_id(e1.src, e2.src), e1.label, pair_id(e1.dst, e2.dst)});
        }
    }
    for (const auto& e2 : m2.edges())
        if (e2.label == kEpsilon)
            for (std::uint32_t p = 0; p < m1.num_states(); ++p)
                edges.insert(Edge{pair_id(p, e2.src), kEpsilon, pair_id(p, e2.dst)});
    std::set<std::uint32_t> finals;
    for (auto f1 : m1.finals())
        for (auto f2 : m2.finals()) finals.insert(pair_id(f1, f2));
    return trim(Nfa(m1.alphabet(), m1.num_states() * n2, pair_id(m1.initial(), m2.initial()),
                    std::move(finals), std::move(edges)));
}

Nfa nfa_union(const Nfa& m1, const Nfa& m2) {
    check_same_alphabet(m1, m2);
    // fresh root 0, m1 shifted by 1, m2 shifted by 1 + |m1|
    const std::uint32_t o1 = 1, o2 = 1 + m1.num_states();
    std::set<Edge> edges;
    for (const auto& e : m1.edges()) edges.insert(Edge{e.src + o1, e.label, e.dst + o1});
    for (const auto& e : m2.edges()) edges.insert(Edge{e.src + o2, e.label, e.dst + o2});
    edges.insert(Edge{0, kEpsilon, m1.initial() + o1});
    edges.insert(Edge{0, kEpsilon, m2.initial() + o2});
    std::set<std::uint32_t> finals;
    for (auto f : m1.finals()) finals.insert(f + o1);
    for (auto f : m2.finals()) finals.insert(f + o2);
    return Nfa(m1.alphabet(), o2 + m2.num_states(), 0, std::move(finals), std::move(edges));
}

Nfa concat(const Nfa& m1, const Nfa& m2) {
    check_same_alphabet(m1, m2);
    const std::uint32_t o2 = m1.num_states();
    std::set<Edge> edges = m1.edges();
    for (const auto& e : m2.edges()) edges.insert(Edge{e.src + o2, e.label, e.dst + o2});
    for (auto f : m1.finals()) edges.insert(Edge{f, kEpsilon, m2.initial() + o2});
    std::set<std::uint32_t> finals;
    for (auto f : m2.finals()) finals.insert(f + o2);
    return Nfa(m1.alphabet(), o2 + m2.num_states(), m1.initial(), std::move(finals),
               std::move(edges));
}

Nfa star(const Nfa& m) {
    // fresh root, both initial and final
    const std::uint32_t o = 1;
    std::set<Edge> edges;
    for (const auto& e : m.edges()) edges.insert(Edge{e.src + o, e.label, e.dst + o});
    edges.insert(Edge{0, kEpsilon, m.initial() + o});
    for (auto f : m.finals()) edges.insert(Edge{f + o, kEpsilon, 0});
    return Nfa(m.alphabet(), m.num_states() + o, 0, {0}, std::move(edges));
}

Nfa left_translate(const Word& w, const Nfa& m) {
    // path spelling w, then an epsilon edge into m's initial
    const std::uint32_t o = static_cast<std::uint32_t>(w.size()) + 1;
    std::set<Edge> edges;
    for (std::uint32_t i = 0; i < w.size(); ++i)
        edges.insert(Edge{i, static_cast<Label>(w[i]), i + 1});
    edges.insert(Edge{static_cast<std::uint32_t>(w.size()), kEpsilon, m.initial() + o});
    for (const auto& e : m.edges()) edges.insert(Edge{e.src + o, e.label, e.dst + o});
    std::set<std::uint32_t> finals;
    for (auto f : m.finals()) finals.insert(f + o);
    return Nfa(m.alphabet(), m.num_states() + o, 0, std::move(finals), std::move(edges));
}

Nfa right_translate(const Nfa& m, const Word& w) {
    const std::uint32_t o = m.num_states();
    std::set<Edge> edges = m.edges();
    for (auto f : m.finals()) edges.insert(Edge{f, kEpsilon, o});
    for (std::uint32_t i = 0; i < w.size(); ++i)
        edges.insert(Edge{o + i, static_cast<Label>(w[i]), o + i + 1});
    return Nfa(m.alphabet(), o + static_cast<std::uint32_t>(w.size()) + 1, m.initial(),
               {o + static_cast<std::uint32_t>(w.size())}, std::move(edges));
}

Nfa reverse(const Nfa& m) {
    // fresh root with epsilon edges to the old finals; old initial becomes final
    const std::uint32_t o = 1;
    std::set<Edge> edges;
    for (const auto& e : m.edges()) edges.insert(Edge{e.dst + o, e.label, e.src + o});
    for (auto f : m.finals()) edges.insert(Edge{0, kEpsilon, f + o});
    return Nfa(m.alphabet(), m.num_states() + o, 0, {m.initial() + o}, std::move(edges));
}

Nfa quotient(const Nfa& m, const Word& prefix, const Word& suffix) {
    auto new_initials = step_word(m, {m.initial()}, prefix);
    // new finals: states from which reading suffix reaches an old final
    std::set<std::uint32_t> new_finals;
    for (std::uint32_t s = 0; s < m.num_states(); ++s) {
        auto reached = step_word(m, {s}, suffix);
        for (auto r : reached)
            if (m.finals().count(r)) {
                new_finals.insert(s);
                break;
            }
    }
    // collapse multiple initials with a fresh epsilon-root
    const std::uint32_t o = 1;
    std::set<Edge> edges;
    for (const auto& e : m.edges()) edges.insert(Edge{e.src + o, e.label, e.dst + o});
    for (auto i : new_initials) edges.insert(Edge{0, kEpsilon, i + o});
    std::set<std::uint32_t> finals;
    for (auto f : new_finals) finals.insert(f + o);
    return Nfa(m.alphabet(), m.num_states() + o, 0, std::move(finals), std::move(edges));
}

Nfa relabel(const Nfa& m, const Morphism& h) {
    if (!(m.alphabet() == h.source))
        throw alphabet_mismatch("relabel: automaton alphabet differs from morphism source");
    std::set<Edge> edges;
    std::uint32_t next = m.num_states();
    for (const auto& e : m.edges()) {
        if (e.label == kEpsilon) {
            edges.insert(e);
            continue;
        }
        const Word& im = h.images.at(static_cast<Letter>(e.label));
        if (im.empty()) {
            edges.insert(Edge{e.src, kEpsilon, e.dst});
        } else if (im.size() == 1) {
            edges.insert(Edge{e.src, static_cast<Label>(im[0]), e.dst});
        } else {
            std::uint32_t cur = e.src;
            for (std::size_t i = 0; i + 1 < im.size(); ++i) {
                edges.insert(Edge{cur, static_cast<Label>(im[i]), next});
                cur = next++;
            }
            edges.insert(Edge{cur, static_cast<Label>(im.back()), e.dst});
        }
    }
    return Nfa(h.target, next, m.initial(), m.finals(), std::move(edges));
}

Nfa restrict_letters(const Nfa& m, const Alphabet& target, const std::vector<Label>& keep) {
    std::set<Edge> edges;
    for (const auto& e : m.edges()) {
        if (e.label == kEpsilon) {
            edges.insert(e);
        } else {
            Label t = keep.at(static_cast<Letter>(e.label));
            if (t != kEpsilon) edges.insert(Edge{e.src, t, e.dst});
        }
    }
    return Nfa(target, m.num_states(), m.initial(), m.finals(), std::move(edges));
}

Nfa trim(const Nfa& m) {
    auto adj = out_edges(m);
    std::vector<std::vector<std::uint32_t>> radj(m.num_states());
    for (const auto& e : m.edges()) radj[e.dst].push_back(e.src);

    std::vector<char> fwd(m.num_states(), 0);
    std::deque<std::uint32_t> work{m.initial()};
    fwd[m.initial()] = 1;
    while (!work.empty()) {
        auto s = work.front();
        work.pop_front();
        for (const auto& e : adj[s])
            if (!fwd[e.dst]) {
                fwd[e.dst] = 1;
                work.push_back(e.dst);
            }
    }
    std::vector<char> bwd(m.num_states(), 0);
    for (auto f : m.finals())
        if (!bwd[f]) {
            bwd[f] = 1;
            work.push_back(f);
        }
    while (!work.empty()) {
        auto s = work.front();
        work.pop_front();
        for (auto p : radj[s])
            if (!bwd[p]) {
                bwd[p] = 1;
                work.push_back(p);
            }
    }
    std::vector<std::uint32_t> remap(m.num_states(), UINT32_MAX);
    std::uint32_t next = 0;
    for (std::uint32_t s = 0; s < m.num_states(); ++s)
        if (fwd[s] && bwd[s]) remap[s] = next++;
    if (remap[m.initial()] == UINT32_MAX) {
        // no accepting path at all; keep just the initial state
        return Nfa(m.alphabet(), 1, 0, {}, {});
    }
    std::set<Edge> edges;
    for (const auto& e : m.edges())
        if (remap[e.src] != UINT32_MAX && remap[e.dst] != UINT32_MAX)
            edges.insert(Edge{remap[e.src], e.label, remap[e.dst]});
    std::set<std::uint32_t> finals;
    for (auto f : m.finals())
        if (remap[f] != UINT32_MAX) finals.insert(remap[f]);
    return Nfa(m.alphabet(), next, remap[m.initial()], std::move(finals), std::move(edges));
}

} // namespace ratsub
