#ifndef RATSUB_TEST_UTIL_HPP
#define RATSUB_TEST_UTIL_HPP

#include <random>
#include <set>
#include <vector>

#include "ratsub/nfa.hpp"
#include "ratsub/regex.hpp"
#include "ratsub/words.hpp"

namespace testutil {

using namespace ratsub;

inline Word w(const Alphabet& a, const std::string& text) { return parse_word(a, text); }

/// All words over `a` of length ≤ max_len, shortest first.
inline std::vector<Word> all_words(const Alphabet& a, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (Letter x = 0; x < a.size(); ++x) {
                Word v = out[i];
                v.push_back(x);
                out.push_back(std::move(v));
            }
        begin = end;
    }
    return out;
}

inline Nfa random_nfa(const Alphabet& a, std::uint32_t max_states, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> nstates(1, max_states);
    std::uint32_t n = nstates(rng);
    std::uniform_int_distribution<std::uint32_t> st(0, n - 1);
    std::uniform_int_distribution<std::size_t> lab(0, a.size() - 1);
    std::uniform_int_distribution<std::size_t> nedges(1, 2 * n + 2);
    std::set<Edge> edges;
    std::size_t m = nedges(rng);
    for (std::size_t i = 0; i < m; ++i)
        edges.insert({st(rng), static_cast<Label>(lab(rng)), st(rng)});
    std::set<std::uint32_t> finals{st(rng)};
    if (rng() % 3 == 0) finals.insert(st(rng));
    return Nfa(a, n, st(rng), finals, edges);
}

/// Accepted words of length ≤ max_len, by prefix search over reachable
/// state sets (dead prefixes pruned).
inline std::vector<Word> accepted_words(const Nfa& m, std::size_t max_len) {
    std::vector<Word> out;
    struct Item {
        Word w;
        std::set<std::uint32_t> states;
    };
    std::vector<Item> layer{{Word{}, epsilon_closure(m, {m.initial()})}};
    auto is_final = [&](const std::set<std::uint32_t>& s) {
        for (auto q : s)
            if (m.finals().count(q)) return true;
        return false;
    };
    for (std::size_t len = 0; len <= max_len; ++len) {
        std::vector<Item> next;
        for (auto& it : layer) {
            if (is_final(it.states)) out.push_back(it.w);
            if (len == max_len) continue;
            for (Letter x = 0; x < m.alphabet().size(); ++x) {
                auto s = step_word(m, it.states, {x});
                if (s.empty()) continue;
                Word v = it.w;
                v.push_back(x);
                next.push_back({std::move(v), std::move(s)});
            }
        }
        layer = std::move(next);
    }
    return out;
}

/// A deterministic pool of small automata for decider agreement checks:
/// a few fixed shapes plus seeded random ones, `count` in total.
inline std::vector<Nfa> automaton_pool(const Alphabet& a, std::size_t count, std::uint64_t seed) {
    std::vector<Nfa> pool;
    pool.push_back(compile(a, "1"));
    std::string l0 = a.name(0), l1 = a.name(a.size() > 2 ? 2 : a.size() - 1);
    pool.push_back(compile(a, l0));
    pool.push_back(compile(a, "(" + l0 + ")*"));
    pool.push_back(compile(a, "(" + l0 + " " + l1 + ")*"));
    std::mt19937_64 rng(seed);
    while (pool.size() < count) pool.push_back(random_nfa(a, 4, rng));
    return pool;
}

} // namespace testutil

#endif
