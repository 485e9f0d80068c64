#include "ratsub/oracle/bfs.hpp"

#include <deque>
#include <map>
#include <optional>
#include <set>

namespace ratsub::oracle {

namespace {

struct Config {
    std::uint32_t state;
    Rep rep;
};

std::string config_key(std::uint32_t state, const Rep& rep) {
    return std::to_string(state) + "|" + show(rep);
}

/// Expands a (state, value) set across epsilon edges (value unchanged).
void epsilon_expand(const Nfa& r, std::map<std::string, Config>* layer) {
    std::deque<Config> queue;
    for (const auto& [_, c] : *layer) queue.push_back(c);
    while (!queue.empty()) {
        Config c = queue.front();
        queue.pop_front();
        for (const auto& e : r.edges()) {
            if (e.src != c.state || e.label != kEpsilon) continue;
            std::string key = config_key(e.dst, c.rep);
            if (layer->count(key)) continue;
            layer->emplace(key, Config{e.dst, c.rep});
            queue.push_back({e.dst, c.rep});
        }
    }
}

std::size_t rep_size(const Rep& r) {
    if (auto* f = std::get_if<FreeRep>(&r)) return f->w.size();
    if (auto* a = std::get_if<AbelianRep>(&r)) {
        std::size_t n = 0;
        for (auto v : a->free) n += static_cast<std::size_t>(v < 0 ? -v : v);
        return n;
    }
    if (std::holds_alternative<FiniteRep>(r)) return 0;
    if (auto* s = std::get_if<SyllableRep>(&r)) return s->syll.size();
    if (auto* m = std::get_if<MonoidRep>(&r)) return m->w.size();
    const auto& p = std::get<ProductRep>(r);
    return rep_size(Rep{p.left}) + rep_size(Rep{p.ab}) + p.mon.w.size();
}

/// Exact reachable (state, value) set, or nullopt when it does not close
/// within the size and count caps.
std::optional<std::map<std::string, Config>> closed_configs(const Nfa& r, const Kind& k,
                                                            std::size_t size_cap,
                                                            std::size_t count_cap) {
    std::map<std::string, Config> seen;
    std::deque<Config> queue;
    Config init{r.initial(), identity(k)};
    seen.emplace(config_key(init.state, init.rep), init);
    queue.push_back(init);
    while (!queue.empty()) {
        Config c = queue.front();
        queue.pop_front();
        for (const auto& e : r.edges()) {
            if (e.src != c.state) continue;
            Rep next = c.rep;
            if (e.label != kEpsilon)
                next = rep_product(k, c.rep,
                                   evaluate(k, Word{static_cast<Letter>(e.label)}));
            if (rep_size(next) > size_cap) return std::nullopt;
            std::string key = config_key(e.dst, next);
            if (seen.count(key)) continue;
            if (seen.size() >= count_cap) return std::nullopt;
            seen.emplace(key, Config{e.dst, next});
            queue.push_back({e.dst, next});
        }
    }
    return seen;
}

/// Letters that occur on some edge of r.
std::vector<bool> used_letters(const Nfa& r, std::size_t n) {
    std::vector<bool> used(n, false);
    for (const auto& e : r.edges())
        if (e.label != kEpsilon && static_cast<std::size_t>(e.label) < n) used[e.label] = true;
    return used;
}

bool abelian_cone_certificate(const AbelianKind& k, const std::vector<bool>& used,
                              const AbelianRep& target, std::size_t letter_offset) {
    for (std::size_t i = 0; i < k.free_rank; ++i) {
        bool inc = used[letter_offset + 2 * i];
        bool dec = used[letter_offset + 2 * i + 1];
        if (target.free[i] > 0 && !inc) return true;
        if (target.free[i] < 0 && !dec) return true;
    }
    for (std::size_t j = 0; j < k.torsion.size(); ++j) {
        std::size_t base = letter_offset + 2 * k.free_rank + 2 * j;
        if (target.torsion[j] != 0 && !used[base] && !used[base + 1]) return true;
    }
    return false;
}

bool free_letter_certificate(const std::vector<bool>& used, const Word& target,
                             std::size_t letter_offset) {
    for (Letter x : target) {
        std::size_t base = letter_offset + 2 * (x / 2);
        if (!used[base] && !used[base + 1]) return true;
    }
    return false;
}

bool closure_certificate(const Nfa& r, const Kind& k, const Rep& target) {
    std::size_t size_cap = rep_size(target) + 2 * r.num_states() + 8;
    auto configs = closed_configs(r, k, size_cap, 50000);
    if (!configs) return false;
    for (const auto& [_, c] : *configs)
        if (r.finals().count(c.state) && c.rep == target) return false; // member
    return true;
}

} // namespace

std::vector<Rep> bfs_members(const Nfa& r, const Kind& k, std::size_t max_len) {
    std::map<std::string, Config> layer;
    layer.emplace(config_key(r.initial(), identity(k)), Config{r.initial(), identity(k)});
    epsilon_expand(r, &layer);

    std::set<std::string> out_keys;
    std::vector<Rep> out;
    auto collect = [&](const std::map<std::string, Config>& l) {
        for (const auto& [_, c] : l) {
            if (!r.finals().count(c.state)) continue;
            if (out_keys.insert(show(c.rep)).second) out.push_back(c.rep);
        }
    };
    collect(layer);
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::map<std::string, Config> next;
        for (const auto& [_, c] : layer) {
            for (const auto& e : r.edges()) {
                if (e.src != c.state || e.label == kEpsilon) continue;
                Rep rep = rep_product(k, c.rep, evaluate(k, Word{static_cast<Letter>(e.label)}));
                next.emplace(config_key(e.dst, rep), Config{e.dst, rep});
            }
        }
        epsilon_expand(r, &next);
        collect(next);
        layer = std::move(next);
    }
    return out;
}

std::optional<std::vector<Rep>> closed_members(const Nfa& r, const Kind& k,
                                               std::size_t size_cap, std::size_t count_cap) {
    auto configs = closed_configs(r, k, size_cap, count_cap);
    if (!configs) return std::nullopt;
    std::set<std::string> keys;
    std::vector<Rep> out;
    for (const auto& [_, c] : *configs) {
        if (!r.finals().count(c.state)) continue;
        if (keys.insert(show(c.rep)).second) out.push_back(c.rep);
    }
    return out;
}

bool certified_nonmember(const Nfa& r, const Kind& k, const Rep& target) {
    Nfa t = trim(r);
    if (is_empty(t)) return true;
    std::vector<bool> used = used_letters(t, kind_letters(k));

    if (std::holds_alternative<FiniteKind>(k)) {
        auto configs = closed_configs(t, k, 0, 1u << 20);
        if (!configs) return false;
        for (const auto& [_, c] : *configs)
            if (t.finals().count(c.state) && c.rep == target) return false;
        return true;
    }
    if (std::holds_alternative<FreeKind>(k)) {
        const Word& w = std::get<FreeRep>(target).w;
        if (free_letter_certificate(used, w, 0)) return true;
        return closure_certificate(t, k, target);
    }
    if (auto* a = std::get_if<AbelianKind>(&k)) {
        if (abelian_cone_certificate(*a, used, std::get<AbelianRep>(target), 0)) return true;
        return closure_certificate(t, k, target);
    }
    if (std::holds_alternative<SyllableKind>(k)) {
        const auto& s = std::get<SyllableKind>(k);
        const auto& syll = std::get<SyllableRep>(target).syll;
        std::size_t offset = 0;
        for (std::uint32_t factor = 0; factor < s.factors.size(); ++factor) {
            std::size_t nl = s.factors[factor].letter_elem.size();
            bool any = false;
            for (std::size_t i = 0; i < nl; ++i) any = any || used[offset + i];
            if (!any)
                for (const auto& [sf, _] : syll)
                    if (sf == factor) return true;
            offset += nl;
        }
        return closure_certificate(t, k, target);
    }
    if (std::holds_alternative<MonoidKind>(k))
        return !accepts(t, std::get<MonoidRep>(target).w); // exact regular membership
    const auto& p = std::get<ProductKind>(k);
    const auto& pt = std::get<ProductRep>(target);
    if (free_letter_certificate(used, pt.left.w, 0)) return true;
    if (!p.monoid_partner &&
        abelian_cone_certificate(p.abelian, used, pt.ab, 2 * p.free_rank))
        return true;
    if (p.monoid_partner) {
        // partner projection: erase free letters, compare as a regular language
        std::set<Edge> edges;
        for (const auto& e : t.edges()) {
            Label l = e.label;
            if (l != kEpsilon) {
                if (static_cast<std::size_t>(l) < 2 * p.free_rank)
                    l = kEpsilon;
                else
                    l = l - static_cast<Label>(2 * p.free_rank);
            }
            edges.insert({e.src, l, e.dst});
        }
        Alphabet letters;
        for (std::size_t i = 0; i < p.monoid.letters; ++i)
            letters.add("m" + std::to_string(i));
        Nfa proj(letters, t.num_states(), t.initial(), t.finals(), edges);
        if (!accepts(proj, pt.mon.w)) return true;
    }
    return closure_certificate(t, k, target);
}

} // namespace ratsub::oracle
