#include "ratsub/graph_of_groups.hpp"

#include <deque>
#include <map>
#include <mutex>

#include "ratsub/rewriting.hpp"

namespace ratsub {

GraphOfGroups::GraphOfGroups(std::vector<GogVertex> vertices, std::vector<GogEdge> edges,
                             std::uint32_t base_vertex)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), base_(base_vertex) {
    if (vertices_.empty()) throw validation_error("graph of groups needs at least one vertex");
    if (base_ >= vertices_.size()) throw validation_error("base vertex out of range");
    for (std::uint32_t e = 0; e < edges_.size(); ++e) {
        const auto& ed = edges_[e];
        if (ed.alpha >= vertices_.size()) throw validation_error("edge endpoint out of range");
        if (ed.reverse >= edges_.size() || ed.reverse == e ||
            edges_[ed.reverse].reverse != e)
            throw validation_error("edge reversal is not a fixed-point-free involution");
        if (!ed.group || ed.group != edges_[ed.reverse].group)
            throw validation_error("matched edges must share one edge group");
        if (ed.alpha_images.size() != ed.group->order())
            throw validation_error("embedding must map every edge-group element");
        if (!ed.alpha_images[0].empty())
            throw validation_error("the identity embeds as the empty word");
        for (const auto& im : ed.alpha_images)
            for (Letter x : im)
                if (x >= vertices_[ed.alpha].decider.generators.size())
                    throw validation_error("embedding word uses an unknown vertex letter");
    }
    // connectivity
    std::vector<bool> seen(vertices_.size(), false);
    std::deque<std::uint32_t> queue{base_};
    seen[base_] = true;
    while (!queue.empty()) {
        std::uint32_t v = queue.front();
        queue.pop_front();
        for (std::uint32_t e = 0; e < edges_.size(); ++e) {
            if (edges_[e].alpha != v) continue;
            std::uint32_t w = omega(e);
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    for (bool s : seen)
        if (!s) throw validation_error("graph of groups must be connected");
    // embeddings are injective homomorphisms, checked with the vertex deciders
    for (const auto& ed : edges_) {
        const GroupDecider& d = vertices_[ed.alpha].decider;
        Nfa identity_only = nfa_for_words(d.generators.alphabet(), {Word{}});
        std::uint32_t order = ed.group->order();
        for (std::uint32_t g = 1; g < order; ++g)
            if (d.member(identity_only, ed.alpha_images[g]))
                throw validation_error("embedding is not injective on " + vertices_[ed.alpha].name);
        for (std::uint32_t g = 0; g < order; ++g)
            for (std::uint32_t h = 0; h < order; ++h) {
                Word probe = ed.alpha_images[g];
                const Word& wh = ed.alpha_images[h];
                probe.insert(probe.end(), wh.begin(), wh.end());
                Word back = invert_word(d.generators, ed.alpha_images[ed.group->mul(g, h)]);
                probe.insert(probe.end(), back.begin(), back.end());
                if (!d.member(identity_only, probe))
                    throw validation_error("embedding into " + vertices_[ed.alpha].name +
                                           " is not a homomorphism");
            }
    }
}

namespace {

/// Extended vertex deciders plus the combined cycle-word alphabet B.
struct Assembly {
    std::vector<GroupDecider> ext;                // per vertex, extended decider
    InvolutiveAlphabet b;                         // ⊎ extended X_v ⊎ edge letters
    std::vector<std::uint32_t> offset;            // per vertex, offset of X_v in b
    std::vector<Letter> edge_letter;              // per directed edge, letter in b
    std::vector<std::vector<Letter>> elem_letter; // [edge][element≥1], local in ext[alpha]
    std::vector<std::vector<Label>> keep;         // per vertex, restriction map b → X_v
};

Assembly assemble(const GraphOfGroups& gog) {
    Assembly a;
    const auto& vs = gog.vertices();
    const auto& es = gog.edges();
    a.elem_letter.resize(es.size());
    for (std::uint32_t v = 0; v < vs.size(); ++v) {
        std::vector<std::pair<std::string, Word>> fresh;
        Letter next = static_cast<Letter>(vs[v].decider.generators.size());
        for (std::uint32_t e = 0; e < es.size(); ++e) {
            if (es[e].alpha != v) continue;
            a.elem_letter[e].assign(es[e].group->order(), 0);
            for (std::uint32_t g = 1; g < es[e].group->order(); ++g) {
                fresh.push_back({"h" + std::to_string(e) + "_" + std::to_string(g),
                                 es[e].alpha_images[g]});
                a.elem_letter[e][g] = next;
                next += 2; // extend_generators adds the letter and its inverse
            }
        }
        a.ext.push_back(extend_generators(vs[v].decider, fresh));
    }
    std::vector<std::string> names;
    std::vector<Letter> inv;
    for (std::uint32_t v = 0; v < vs.size(); ++v) {
        a.offset.push_back(static_cast<std::uint32_t>(names.size()));
        const InvolutiveAlphabet& xv = a.ext[v].generators;
        for (Letter x = 0; x < xv.size(); ++x) {
            names.push_back(xv.alphabet().name(x));
            inv.push_back(a.offset[v] + xv.inverse(x));
        }
    }
    std::uint32_t edge_base = static_cast<std::uint32_t>(names.size());
    for (std::uint32_t e = 0; e < es.size(); ++e) {
        a.edge_letter.push_back(edge_base + e);
        names.push_back(es[e].name);
        inv.push_back(edge_base + es[e].reverse);
    }
    a.b = InvolutiveAlphabet(Alphabet(names), inv); // ctor rejects name clashes
    for (std::uint32_t v = 0; v < vs.size(); ++v) {
        std::vector<Label> keep(a.b.size(), -1);
        for (Letter x = 0; x < a.ext[v].generators.size(); ++x)
            keep[a.offset[v] + x] = static_cast<Label>(x);
        a.keep.push_back(std::move(keep));
    }
    return a;
}

MonadicSystem build_rules(const GraphOfGroups& gog, const Assembly& a) {
    MonadicSystem gamma(a.b.alphabet());
    const auto& es = gog.edges();
    // matched edge letters cancel
    if (!es.empty()) {
        std::vector<Word> pairs;
        for (std::uint32_t e = 0; e < es.size(); ++e)
            pairs.push_back(Word{a.edge_letter[e], a.edge_letter[es[e].reverse]});
        gamma.add_rule_set(kEpsilon, rid_regular(nfa_for_words(a.b.alphabet(), pairs)));
    }
    // vertex relators: words over X_v representing the vertex identity
    for (std::uint32_t v = 0; v < gog.vertices().size(); ++v) {
        GroupDecider d = a.ext[v];
        Alphabet target = d.generators.alphabet();
        std::vector<Label> keep = a.keep[v];
        gamma.add_rule_set(
            kEpsilon,
            RidLanguage(
                a.b.alphabet(),
                [d, target, keep](const Nfa& r) {
                    return d.member(restrict_letters(r, target, keep), Word{});
                },
                "wp(" + gog.vertices()[v].name + ")"));
    }
    // edge relations y·w·ȳ → h for w representing the element on the far side
    for (std::uint32_t e = 0; e < es.size(); ++e) {
        std::uint32_t rev = es[e].reverse;
        std::uint32_t om = gog.omega(e);
        for (std::uint32_t g = 1; g < es[e].group->order(); ++g) {
            Letter h = a.offset[es[e].alpha] + a.elem_letter[e][g];
            Word far{a.elem_letter[rev][g]};
            GroupDecider d = a.ext[om];
            Alphabet target = d.generators.alphabet();
            std::vector<Label> keep = a.keep[om];
            Word prefix{a.edge_letter[e]};
            Word suffix{a.edge_letter[rev]};
            gamma.add_rule_set(
                static_cast<Label>(h),
                RidLanguage(
                    a.b.alphabet(),
                    [d, target, keep, prefix, suffix, far](const Nfa& r) {
                        Nfa inner = quotient(r, prefix, suffix);
                        return d.member(restrict_letters(inner, target, keep), far);
                    },
                    "edge(" + es[e].name + ")"));
        }
    }
    return gamma;
}

struct Tree {
    std::vector<bool> edge_in_tree;   // per directed edge (either direction)
    std::vector<Word> path;           // per vertex, edge-letter word base→v over b
};

Tree spanning_tree(const GraphOfGroups& gog, const Assembly& a) {
    Tree t;
    const auto& es = gog.edges();
    t.edge_in_tree.assign(es.size(), false);
    t.path.assign(gog.vertices().size(), Word{});
    std::vector<bool> seen(gog.vertices().size(), false);
    seen[gog.base_vertex()] = true;
    std::deque<std::uint32_t> queue{gog.base_vertex()};
    while (!queue.empty()) {
        std::uint32_t v = queue.front();
        queue.pop_front();
        for (std::uint32_t e = 0; e < es.size(); ++e) {
            if (es[e].alpha != v) continue;
            std::uint32_t w = gog.omega(e);
            if (seen[w]) continue;
            seen[w] = true;
            t.edge_in_tree[e] = true;
            t.edge_in_tree[es[e].reverse] = true;
            t.path[w] = t.path[v];
            t.path[w].push_back(a.edge_letter[e]);
            queue.push_back(w);
        }
    }
    return t;
}

} // namespace

FundamentalGenerators fundamental_generators(const GraphOfGroups& gog) {
    Assembly a = assemble(gog);
    Tree tree = spanning_tree(gog, a);
    const auto& es = gog.edges();

    std::vector<std::string> names;
    std::vector<Letter> inv;
    std::vector<Word> images;
    auto conjugated = [&](const Word& t_in, Letter mid, const Word& t_out) {
        Word w = t_in;
        w.push_back(mid);
        Word back = invert_word(a.b, t_out);
        w.insert(w.end(), back.begin(), back.end());
        return w;
    };
    for (std::uint32_t v = 0; v < gog.vertices().size(); ++v) {
        const InvolutiveAlphabet& xv = a.ext[v].generators;
        std::uint32_t off = static_cast<std::uint32_t>(names.size());
        for (Letter x = 0; x < xv.size(); ++x) {
            names.push_back(xv.alphabet().name(x));
            inv.push_back(off + xv.inverse(x));
            images.push_back(conjugated(tree.path[v], a.offset[v] + x, tree.path[v]));
        }
    }
    std::vector<std::uint32_t> pos(es.size(), UINT32_MAX);
    for (std::uint32_t e = 0; e < es.size(); ++e) {
        if (tree.edge_in_tree[e]) continue;
        pos[e] = static_cast<std::uint32_t>(names.size());
        names.push_back(es[e].name);
        inv.push_back(0); // fixed below, once the partner's position is known
        images.push_back(
            conjugated(tree.path[es[e].alpha], a.edge_letter[e], tree.path[gog.omega(e)]));
    }
    for (std::uint32_t e = 0; e < es.size(); ++e)
        if (pos[e] != UINT32_MAX) inv[pos[e]] = pos[es[e].reverse];

    InvolutiveAlphabet f(Alphabet(names), inv);
    return FundamentalGenerators{f, Morphism{f.alphabet(), a.b.alphabet(), images}};
}

GroupDecider graph_of_groups_decider(const GraphOfGroups& gog) {
    auto a = std::make_shared<Assembly>(assemble(gog));
    auto gamma = std::make_shared<MonadicSystem>(build_rules(gog, *a));
    FundamentalGenerators fund = fundamental_generators(gog);
    InvolutiveAlphabet f = fund.alphabet;
    Morphism rho = fund.rho;

    struct Cache {
        std::mutex mu;
        std::map<std::string, Nfa> saturated;
    };
    auto cache = std::make_shared<Cache>();

    return GroupDecider{
        f,
        [a, gamma, rho, cache](const Nfa& r, const Word& w) {
            std::string key = r.key();
            std::optional<Nfa> sat;
            {
                std::lock_guard lock(cache->mu);
                auto it = cache->saturated.find(key);
                if (it != cache->saturated.end()) sat = it->second;
            }
            if (!sat) {
                sat = saturate(trim(relabel(r, rho)), *gamma);
                std::lock_guard lock(cache->mu);
                cache->saturated.emplace(std::move(key), *sat);
            }
            Word u = invert_word(a->b, rho.apply(w));
            if (u.empty()) return accepts(*sat, Word{});
            // graft the path for u in front of the saturated automaton and
            // re-saturate from the new states only
            std::uint32_t n = sat->num_states();
            std::uint32_t k = static_cast<std::uint32_t>(u.size());
            std::set<Edge> edges = sat->edges();
            for (std::uint32_t i = 0; i < k; ++i)
                edges.insert(Edge{n + i, static_cast<Label>(u[i]),
                                  (i + 1 == k) ? sat->initial() : n + i + 1});
            Nfa combined(sat->alphabet(), n + k, n, sat->finals(), std::move(edges));
            std::vector<std::uint32_t> sources;
            for (std::uint32_t i = 0; i < k; ++i) sources.push_back(n + i);
            return accepts(saturate_from(combined, *gamma, sources), Word{});
        },
        "fundamental-group"};
}

GroupDecider hnn_decider(const GroupDecider& base, const FiniteGroup& assoc,
                         const std::vector<Word>& phi_in, const std::vector<Word>& phi_out,
                         const std::string& stable_name) {
    auto group = std::make_shared<const FiniteGroup>(assoc);
    std::vector<GogVertex> vs{{"base", base}};
    std::vector<GogEdge> es{{stable_name, 0, 1, group, phi_in},
                            {stable_name + "'", 0, 0, group, phi_out}};
    GroupDecider d = graph_of_groups_decider(GraphOfGroups(std::move(vs), std::move(es), 0));
    d.description = "hnn(" + base.description + ")";
    return d;
}

GroupDecider amalgam_decider(const GroupDecider& left, const GroupDecider& right,
                             const FiniteGroup& sub, const std::vector<Word>& phi_l,
                             const std::vector<Word>& phi_r) {
    auto group = std::make_shared<const FiniteGroup>(sub);
    auto fresh = [&](const std::string& want) {
        std::string name = want;
        while (left.generators.alphabet().contains(name) ||
               left.generators.alphabet().contains(name + "'") ||
               right.generators.alphabet().contains(name) ||
               right.generators.alphabet().contains(name + "'"))
            name += "e";
        return name;
    };
    std::string e = fresh("e");
    std::vector<GogVertex> vs{{"left", left}, {"right", right}};
    std::vector<GogEdge> es{{e, 0, 1, group, phi_l}, {e + "'", 1, 0, group, phi_r}};
    GroupDecider d = graph_of_groups_decider(GraphOfGroups(std::move(vs), std::move(es), 0));
    d.description = "amalgam(" + left.description + ", " + right.description + ")";
    return d;
}

} // namespace ratsub
