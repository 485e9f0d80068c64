#include "ratsub/finite_group.hpp"

#include <deque>

namespace ratsub {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::uint32_t>> table)
    : table_(std::move(table)) {
    const std::uint32_t n = static_cast<std::uint32_t>(table_.size());
    if (n == 0) throw validation_error("finite group needs at least the identity");
    for (const auto& row : table_) {
        if (row.size() != n) throw validation_error("multiplication table is not square");
        for (auto v : row)
            if (v >= n) throw validation_error("multiplication table entry out of range");
    }
    for (std::uint32_t a = 0; a < n; ++a)
        if (table_[0][a] != a || table_[a][0] != a)
            throw validation_error("element 0 is not an identity");
    inverse_.assign(n, n);
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b)
            if (table_[a][b] == 0 && table_[b][a] == 0) inverse_[a] = b;
        if (inverse_[a] == n) throw validation_error("element without a two-sided inverse");
    }
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw validation_error("multiplication table is not associative");
}

std::uint32_t FiniteGroup::eval(const std::vector<std::uint32_t>& letter_elem,
                                const Word& w) const {
    std::uint32_t acc = 0;
    for (Letter x : w) acc = mul(acc, letter_elem.at(x));
    return acc;
}

FiniteGroup FiniteGroup::cyclic(std::uint32_t n) {
    std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t));
}

GroupDecider finite_group_decider(const FiniteGroup& g, const InvolutiveAlphabet& gens,
                                  const std::vector<std::uint32_t>& letter_elem) {
    if (letter_elem.size() != gens.size())
        throw validation_error("finite_group_decider: one element per letter required");
    for (Letter x = 0; x < gens.size(); ++x) {
        if (letter_elem[x] >= g.order())
            throw validation_error("finite_group_decider: assigned element out of range");
        if (letter_elem[gens.inverse(x)] != g.inv(letter_elem[x]))
            throw validation_error(
                "finite_group_decider: inverse letter not assigned the inverse element");
    }
    std::vector<bool> generated(g.order(), false);
    generated[0] = true;
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
        std::uint32_t e = queue.front();
        queue.pop_front();
        for (Letter x = 0; x < gens.size(); ++x) {
            std::uint32_t f = g.mul(e, letter_elem[x]);
            if (!generated[f]) {
                generated[f] = true;
                queue.push_back(f);
            }
        }
    }
    for (std::uint32_t e = 0; e < g.order(); ++e)
        if (!generated[e])
            throw validation_error("finite_group_decider: letters do not generate the group");

    return GroupDecider{
        gens,
        [g, letter_elem](const Nfa& r, const Word& w) {
            std::uint32_t target = g.eval(letter_elem, w);
            // elements readable at each state, by fixpoint over (state, element)
            std::vector<std::vector<bool>> seen(r.num_states(),
                                                std::vector<bool>(g.order(), false));
            std::deque<std::pair<std::uint32_t, std::uint32_t>> queue;
            seen[r.initial()][0] = true;
            queue.push_back({r.initial(), 0});
            while (!queue.empty()) {
                auto [s, e] = queue.front();
                queue.pop_front();
                for (const auto& edge : r.edges()) {
                    if (edge.src != s) continue;
                    std::uint32_t f = edge.label == kEpsilon
                                          ? e
                                          : g.mul(e, letter_elem[static_cast<Letter>(edge.label)]);
                    if (!seen[edge.dst][f]) {
                        seen[edge.dst][f] = true;
                        queue.push_back({edge.dst, f});
                    }
                }
            }
            for (auto f : r.finals())
                if (seen[f][target]) return true;
            return false;
        },
        "finite(" + std::to_string(g.order()) + ")"};
}

} // namespace ratsub
