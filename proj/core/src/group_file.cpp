#include "ratsub/group_file.hpp"

#include <map>
#include <memory>
#include <sstream>

#include "ratsub/abelian.hpp"
#include "ratsub/coset.hpp"
#include "ratsub/finite_group.hpp"
#include "ratsub/free_group.hpp"
#include "ratsub/graph_of_groups.hpp"
#include "ratsub/product.hpp"

namespace ratsub {

namespace {

struct Line {
    int no = 0;
    std::vector<std::string> t;
};

struct Def {
    int no = 0;
    std::string name;
    std::string kind;
    std::vector<Line> lines;
};

[[noreturn]] void fail_at(int no, const std::string& msg) {
    throw parse_error("line " + std::to_string(no) + ": " + msg);
}

std::uint32_t to_u32(const std::string& s, int no) {
    try {
        std::size_t pos = 0;
        unsigned long v = std::stoul(s, &pos);
        if (pos != s.size() || v > 0xffffffffUL) throw std::invalid_argument(s);
        return static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
        fail_at(no, "expected a number, got '" + s + "'");
    }
}

Word word_tokens(const Alphabet& a, const Line& ln, std::size_t from) {
    if (ln.t.size() <= from) fail_at(ln.no, "missing word (spell the empty word as 1)");
    Word w;
    if (ln.t.size() == from + 1 && ln.t[from] == "1") return w;
    for (std::size_t i = from; i < ln.t.size(); ++i) {
        auto l = a.find(ln.t[i]);
        if (!l) fail_at(ln.no, "unknown letter '" + ln.t[i] + "'");
        w.push_back(*l);
    }
    return w;
}

std::vector<Line> parse_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        Line ln{no, {}};
        std::istringstream ts(raw);
        std::string tok;
        while (ts >> tok) ln.t.push_back(tok);
        if (!ln.t.empty()) out.push_back(std::move(ln));
    }
    return out;
}

/// Built definitions available for later references.
struct Ctx {
    std::map<std::string, GroupDecider> groups;
    std::map<std::string, MonoidDecider> monoids;
    std::map<std::string, std::shared_ptr<const FiniteGroup>> finites;
};

const GroupDecider& group_ref(const Ctx& ctx, const Line& ln, const std::string& name) {
    auto it = ctx.groups.find(name);
    if (it == ctx.groups.end())
        fail_at(ln.no, "'" + name + "' is not a previously declared group");
    return it->second;
}

std::shared_ptr<const FiniteGroup> finite_ref(const Ctx& ctx, const Line& ln,
                                              const std::string& name) {
    auto it = ctx.finites.find(name);
    if (it == ctx.finites.end())
        fail_at(ln.no, "'" + name + "' is not a previously declared finite group");
    return it->second;
}

const Line* find_line(const Def& d, const std::string& key) {
    for (const auto& ln : d.lines)
        if (ln.t[0] == key) return &ln;
    return nullptr;
}

const Line& need_line(const Def& d, const std::string& key) {
    const Line* ln = find_line(d, key);
    if (!ln) fail_at(d.no, "definition '" + d.name + "' needs a '" + key + "' line");
    return *ln;
}

std::vector<std::string> name_list(const Def& d, const std::string& key) {
    std::vector<std::string> out;
    for (const auto& ln : d.lines)
        if (ln.t[0] == key) out.insert(out.end(), ln.t.begin() + 1, ln.t.end());
    return out;
}

GroupDecider build_free(const Def& d) {
    return free_group_decider(InvolutiveAlphabet::with_inverses(name_list(d, "generators")));
}

GroupDecider build_abelian(const Def& d) {
    std::uint32_t rank = 0;
    if (const Line* ln = find_line(d, "free_rank")) rank = to_u32(ln->t.at(1), ln->no);
    std::vector<std::uint32_t> torsion;
    for (const auto& ln : d.lines)
        if (ln.t[0] == "torsion")
            for (std::size_t i = 1; i < ln.t.size(); ++i) torsion.push_back(to_u32(ln.t[i], ln.no));
    return abelian_group_decider(rank, torsion);
}

void build_finite(const Def& d, Ctx* ctx, GroupFile* out,
                  const std::function<bool(const std::string&, std::function<void()>)>& check) {
    std::vector<std::vector<std::uint32_t>> table;
    for (const auto& ln : d.lines) {
        if (ln.t[0] != "row") continue;
        std::vector<std::uint32_t> row;
        for (std::size_t i = 1; i < ln.t.size(); ++i) row.push_back(to_u32(ln.t[i], ln.no));
        table.push_back(std::move(row));
    }
    if (table.empty()) fail_at(d.no, "finite definition '" + d.name + "' has no 'row' lines");
    std::shared_ptr<const FiniteGroup> g;
    if (!check(d.name + ": multiplication table group laws",
               [&] { g = std::make_shared<FiniteGroup>(std::move(table)); }))
        return;
    ctx->finites.emplace(d.name, g);

    std::vector<std::string> names;
    std::vector<std::uint32_t> base_elem;
    for (const auto& ln : d.lines) {
        if (ln.t[0] != "generator") continue;
        if (ln.t.size() != 3) fail_at(ln.no, "expected: generator <letter> <element>");
        names.push_back(ln.t[1]);
        base_elem.push_back(to_u32(ln.t[2], ln.no));
    }
    if (names.empty() && g->order() > 1) return; // table-only definition (edge group use)
    check(d.name + ": generator assignment generates the group", [&] {
        InvolutiveAlphabet gens = InvolutiveAlphabet::with_inverses(names);
        std::vector<std::uint32_t> letter_elem;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (base_elem[i] >= g->order()) fail_at(d.no, "generator element out of range");
            letter_elem.push_back(base_elem[i]);
            letter_elem.push_back(g->inv(base_elem[i]));
        }
        ctx->groups.emplace(d.name, finite_group_decider(*g, gens, letter_elem));
    });
    (void)out;
}

void build_overgroup(const Def& d, Ctx* ctx,
                     const std::function<bool(const std::string&, std::function<void()>)>& check) {
    const GroupDecider& sub = group_ref(*ctx, need_line(d, "subgroup"), need_line(d, "subgroup").t.at(1));
    InvolutiveAlphabet over = InvolutiveAlphabet::with_inverses(name_list(d, "generators"));
    const Line& nc = need_line(d, "cosets");
    std::uint32_t n = to_u32(nc.t.at(1), nc.no);
    if (n == 0) fail_at(nc.no, "need at least one coset");

    std::vector<Word> reps(n);
    for (const auto& ln : d.lines) {
        if (ln.t[0] != "rep") continue;
        std::uint32_t i = to_u32(ln.t.at(1), ln.no);
        if (i >= n) fail_at(ln.no, "coset index out of range");
        reps[i] = word_tokens(over.alphabet(), ln, 2);
    }
    if (!reps[0].empty()) fail_at(d.no, "the representative of coset 0 must be the empty word");

    const std::size_t nl = over.size();
    std::vector<std::vector<std::uint32_t>> action(n, std::vector<std::uint32_t>(nl, UINT32_MAX));
    std::vector<std::vector<Word>> rewrite(n, std::vector<Word>(nl));
    for (const auto& ln : d.lines) {
        if (ln.t[0] != "entry") continue;
        if (ln.t.size() < 5) fail_at(ln.no, "expected: entry <coset> <letter> <target> <word>");
        std::uint32_t i = to_u32(ln.t.at(1), ln.no);
        Letter x = over.alphabet().find(ln.t.at(2))
                       ? *over.alphabet().find(ln.t.at(2))
                       : (fail_at(ln.no, "unknown letter '" + ln.t.at(2) + "'"), 0);
        std::uint32_t j = to_u32(ln.t.at(3), ln.no);
        if (i >= n || j >= n) fail_at(ln.no, "coset index out of range");
        action[i][x] = j;
        rewrite[i][x] = word_tokens(sub.generators.alphabet(), ln, 4);
    }
    for (std::uint32_t i = 0; i < n; ++i)
        for (Letter x = 0; x < nl; ++x)
            if (action[i][x] == UINT32_MAX)
                fail_at(d.no, "missing entry for coset " + std::to_string(i) + ", letter " +
                                  over.alphabet().name(x));

    std::optional<CosetTable> table;
    if (!check(d.name + ": coset table well-formedness (action bijections)", [&] {
            table.emplace(sub.generators, over, std::move(reps), std::move(action),
                          std::move(rewrite));
        }))
        return;
    if (!check(d.name + ": coset table coherence", [&] { table->check_coherence(sub); })) return;
    ctx->groups.emplace(d.name, overgroup_decider(sub, *table));
}

std::vector<Word> embed_images(const Def& d, const std::string& key, const FiniteGroup& g,
                               const Alphabet& target, std::size_t skip = 0) {
    std::vector<Word> images(g.order());
    std::vector<bool> seen(g.order(), false);
    seen[0] = true;
    for (const auto& ln : d.lines) {
        if (ln.t[0] != key) continue;
        std::uint32_t e = to_u32(ln.t.at(1 + skip), ln.no);
        if (e == 0 || e >= g.order()) fail_at(ln.no, "element index out of range (1.." +
                                                         std::to_string(g.order() - 1) + ")");
        images[e] = word_tokens(target, ln, 2 + skip);
        seen[e] = true;
    }
    for (std::uint32_t e = 0; e < g.order(); ++e)
        if (!seen[e])
            fail_at(d.no, "missing '" + key + "' image for element " + std::to_string(e));
    return images;
}

void build_hnn(const Def& d, Ctx* ctx,
               const std::function<bool(const std::string&, std::function<void()>)>& check) {
    const GroupDecider& base = group_ref(*ctx, need_line(d, "base"), need_line(d, "base").t.at(1));
    auto g = finite_ref(*ctx, need_line(d, "edge_group"), need_line(d, "edge_group").t.at(1));
    std::string stable = need_line(d, "stable").t.at(1);
    std::vector<Word> in = embed_images(d, "embed_in", *g, base.generators.alphabet());
    std::vector<Word> out = embed_images(d, "embed_out", *g, base.generators.alphabet());
    check(d.name + ": HNN invariants (embeddings injective and homomorphic)", [&] {
        ctx->groups.emplace(d.name, hnn_decider(base, *g, in, out, stable));
    });
}

void build_amalgam(const Def& d, Ctx* ctx,
                   const std::function<bool(const std::string&, std::function<void()>)>& check) {
    const GroupDecider& left = group_ref(*ctx, need_line(d, "left"), need_line(d, "left").t.at(1));
    const GroupDecider& right =
        group_ref(*ctx, need_line(d, "right"), need_line(d, "right").t.at(1));
    auto g = finite_ref(*ctx, need_line(d, "edge_group"), need_line(d, "edge_group").t.at(1));
    std::vector<Word> pl = embed_images(d, "embed_left", *g, left.generators.alphabet());
    std::vector<Word> pr = embed_images(d, "embed_right", *g, right.generators.alphabet());
    check(d.name + ": amalgam invariants (embeddings injective and homomorphic)", [&] {
        ctx->groups.emplace(d.name, amalgam_decider(left, right, *g, pl, pr));
    });
}

void build_gog(const Def& d, Ctx* ctx,
               const std::function<bool(const std::string&, std::function<void()>)>& check) {
    std::vector<GogVertex> vertices;
    std::map<std::string, std::uint32_t> vidx;
    for (const auto& ln : d.lines) {
        if (ln.t[0] != "vertex") continue;
        if (ln.t.size() != 3) fail_at(ln.no, "expected: vertex <name> <group>");
        if (!vidx.emplace(ln.t[1], vertices.size()).second)
            fail_at(ln.no, "duplicate vertex '" + ln.t[1] + "'");
        vertices.push_back({ln.t[1], group_ref(*ctx, ln, ln.t[2])});
    }
    if (vertices.empty()) fail_at(d.no, "graph_of_groups needs at least one vertex");
    const Line& bl = need_line(d, "base");
    auto bit = vidx.find(bl.t.at(1));
    if (bit == vidx.end()) fail_at(bl.no, "unknown base vertex '" + bl.t.at(1) + "'");

    std::vector<GogEdge> edges;
    for (const auto& ln : d.lines) {
        if (ln.t[0] != "edge") continue;
        if (ln.t.size() != 5) fail_at(ln.no, "expected: edge <name> <from> <to> <group>");
        auto fi = vidx.find(ln.t[2]), ti = vidx.find(ln.t[3]);
        if (fi == vidx.end() || ti == vidx.end()) fail_at(ln.no, "unknown vertex in edge");
        if (fi == ti)
            fail_at(ln.no, "self-loop edges are not supported here; use kind hnn");
        auto g = finite_ref(*ctx, ln, ln.t[4]);

        // per-direction embeddings: embed <edge> <vertex> <element> <word>
        auto images_at = [&](std::uint32_t v) {
            std::vector<Word> images(g->order());
            std::vector<bool> seen(g->order(), false);
            seen[0] = true;
            for (const auto& el : d.lines) {
                if (el.t[0] != "embed" || el.t.size() < 5) continue;
                if (el.t[1] != ln.t[1]) continue;
                auto wi = vidx.find(el.t[2]);
                if (wi == vidx.end()) fail_at(el.no, "unknown vertex '" + el.t[2] + "'");
                if (wi->second != v) continue;
                std::uint32_t e = to_u32(el.t[3], el.no);
                if (e == 0 || e >= g->order()) fail_at(el.no, "element index out of range");
                images[e] = word_tokens(vertices[v].decider.generators.alphabet(), el, 4);
                seen[e] = true;
            }
            for (std::uint32_t e = 0; e < g->order(); ++e)
                if (!seen[e])
                    fail_at(ln.no, "missing embed image for edge '" + ln.t[1] + "' at vertex '" +
                                       vertices[v].name + "', element " + std::to_string(e));
            return images;
        };
        std::uint32_t k = static_cast<std::uint32_t>(edges.size());
        edges.push_back({ln.t[1], fi->second, k + 1, g, images_at(fi->second)});
        edges.push_back({ln.t[1] + "'", ti->second, k, g, images_at(ti->second)});
    }

    check(d.name + ": graph-of-groups invariants (edge reversal, connectivity, "
                   "embedding injectivity and homomorphism)",
          [&] {
              GraphOfGroups gog(std::move(vertices), std::move(edges), bit->second);
              ctx->groups.emplace(d.name, graph_of_groups_decider(gog));
          });
}

void build_product(const Def& d, Ctx* ctx, GroupFile* out,
                   const std::function<bool(const std::string&, std::function<void()>)>& check) {
    std::vector<std::string> free_names = name_list(d, "generators");
    std::string partner = need_line(d, "partner").t.at(1);
    const std::string desc = d.name + ": product composition";

    if (partner == "abelian") {
        ProductSpec spec;
        spec.free_part = InvolutiveAlphabet::with_inverses(free_names);
        spec.partner = ProductSpec::Partner::abelian;
        if (const Line* ln = find_line(d, "partner_free_rank"))
            spec.abelian_rank = to_u32(ln->t.at(1), ln->no);
        for (const auto& ln : d.lines)
            if (ln.t[0] == "partner_torsion")
                for (std::size_t i = 1; i < ln.t.size(); ++i)
                    spec.torsion.push_back(to_u32(ln.t[i], ln.no));
        check(desc, [&] { ctx->groups.emplace(d.name, product_group_decider(spec)); });
        return;
    }

    if (partner == "free") {
        std::vector<std::string> partner_names = name_list(d, "partner_generators");
        const std::size_t f = free_names.size(), k = partner_names.size();
        if (f >= 2 && k >= 2)
            throw unsupported_composition(
                "line " + std::to_string(d.no) +
                ": the direct product of two nonabelian free groups has an undecidable "
                "rational-subset membership problem");
        check(desc, [&] {
            if (k == 0) {
                ctx->groups.emplace(d.name,
                                    free_group_decider(InvolutiveAlphabet::with_inverses(free_names)));
                return;
            }
            if (f == 0) {
                ctx->groups.emplace(
                    d.name, free_group_decider(InvolutiveAlphabet::with_inverses(partner_names)));
                return;
            }
            // one factor is infinite cyclic: treat it as the abelian partner
            bool swap = (k >= 2); // then f == 1: the free factor is the cyclic one
            ProductSpec spec;
            spec.free_part = InvolutiveAlphabet::with_inverses(swap ? partner_names : free_names);
            spec.partner = ProductSpec::Partner::abelian;
            spec.abelian_rank = 1;
            GroupDecider inner = product_group_decider(spec);
            // present the user's letters in declaration order
            std::vector<std::string> names;
            for (const auto& n : free_names) { names.push_back(n); names.push_back(n + "'"); }
            for (const auto& n : partner_names) { names.push_back(n); names.push_back(n + "'"); }
            std::vector<Letter> inv;
            for (Letter x = 0; x < names.size(); x += 2) { inv.push_back(x + 1); inv.push_back(x); }
            InvolutiveAlphabet gens(Alphabet(names), inv);
            if (!swap) {
                // same letter order as inner; names differ only on the partner pair
                ctx->groups.emplace(d.name, GroupDecider{gens, inner.member, inner.description});
                return;
            }
            Alphabet inner_alpha = inner.generators.alphabet();
            const Letter shift = static_cast<Letter>(2 * k);
            auto pi = [shift](Letter x) { return x < 2 ? shift + x : x - 2; };
            auto member = [inner, inner_alpha, pi](const Nfa& r, const Word& w) {
                std::set<Edge> edges;
                for (const auto& e : r.edges())
                    edges.insert({e.src,
                                  e.label == kEpsilon ? kEpsilon : static_cast<Label>(pi(e.label)),
                                  e.dst});
                Nfa rr(inner_alpha, r.num_states(), r.initial(), r.finals(), edges);
                Word ww;
                for (Letter x : w) ww.push_back(pi(x));
                return inner.member(rr, ww);
            };
            ctx->groups.emplace(d.name, GroupDecider{gens, member, inner.description});
        });
        return;
    }

    ProductSpec spec;
    spec.free_part = InvolutiveAlphabet::with_inverses(free_names);
    if (partner == "free_commutative_monoid") {
        spec.partner = ProductSpec::Partner::free_commutative_monoid;
        const Line& ln = need_line(d, "partner_rank");
        spec.commutative_rank = to_u32(ln.t.at(1), ln.no);
    } else if (partner == "free_monoid") {
        spec.partner = ProductSpec::Partner::free_monoid;
        spec.monoid_letters = Alphabet(name_list(d, "partner_letters"));
    } else {
        fail_at(need_line(d, "partner").no, "unknown partner kind '" + partner + "'");
    }
    check(desc, [&] { ctx->monoids.emplace(d.name, product_monoid_decider(spec)); });
    (void)out;
}

GroupFile build(const std::string& text, bool collect) {
    std::vector<Line> lines = parse_lines(text);
    std::vector<Def> defs;
    std::string root;
    int root_no = 0;
    for (std::size_t i = 0; i < lines.size();) {
        const Line& ln = lines[i];
        if (ln.t[0] == "root") {
            if (ln.t.size() != 2) fail_at(ln.no, "expected: root <name>");
            if (!root.empty()) fail_at(ln.no, "duplicate root directive");
            root = ln.t[1];
            root_no = ln.no;
            ++i;
            continue;
        }
        if (ln.t[0] != "group" || ln.t.size() != 3 || ln.t[2] != "{")
            fail_at(ln.no, "expected 'group <name> {' or 'root <name>'");
        Def d;
        d.no = ln.no;
        d.name = ln.t[1];
        for (const auto& e : defs)
            if (e.name == d.name) fail_at(ln.no, "duplicate definition '" + d.name + "'");
        ++i;
        while (i < lines.size() && !(lines[i].t.size() == 1 && lines[i].t[0] == "}"))
            d.lines.push_back(lines[i++]);
        if (i == lines.size()) fail_at(ln.no, "unterminated block (missing '}')");
        ++i;
        const Line* kind = nullptr;
        for (const auto& bl : d.lines)
            if (bl.t[0] == "kind") kind = &bl;
        if (!kind || kind->t.size() != 2) fail_at(d.no, "definition needs a 'kind <k>' line");
        d.kind = kind->t[1];
        defs.push_back(std::move(d));
    }
    if (defs.empty()) throw parse_error("no group definitions found");
    if (root.empty()) {
        if (defs.size() == 1)
            root = defs[0].name;
        else
            throw parse_error("multiple definitions but no 'root <name>' directive");
    }

    GroupFile out;
    out.root = root;
    Ctx ctx;
    bool failed = false;
    auto check = [&](const std::string& desc, std::function<void()> fn) {
        try {
            fn();
            out.checks.emplace_back(desc, "pass");
            return true;
        } catch (const validation_error& e) {
            out.checks.emplace_back(desc, std::string("fail: ") + e.what());
            if (!collect) throw;
            failed = true;
            return false;
        } catch (const alphabet_mismatch& e) {
            out.checks.emplace_back(desc, std::string("fail: ") + e.what());
            if (!collect) throw;
            failed = true;
            return false;
        }
    };

    for (const auto& d : defs) {
        if (failed) break;
        if (d.kind == "free")
            check(d.name + ": free group construction",
                  [&] { ctx.groups.emplace(d.name, build_free(d)); });
        else if (d.kind == "abelian")
            check(d.name + ": abelian group construction",
                  [&] { ctx.groups.emplace(d.name, build_abelian(d)); });
        else if (d.kind == "finite")
            build_finite(d, &ctx, &out, check);
        else if (d.kind == "overgroup")
            build_overgroup(d, &ctx, check);
        else if (d.kind == "hnn")
            build_hnn(d, &ctx, check);
        else if (d.kind == "amalgam")
            build_amalgam(d, &ctx, check);
        else if (d.kind == "graph_of_groups")
            build_gog(d, &ctx, check);
        else if (d.kind == "product")
            build_product(d, &ctx, &out, check);
        else
            fail_at(d.no, "unknown kind '" + d.kind + "'");
    }

    if (failed) return out;
    if (auto it = ctx.groups.find(root); it != ctx.groups.end()) {
        out.is_group = true;
        out.group = it->second;
    } else if (auto mit = ctx.monoids.find(root); mit != ctx.monoids.end()) {
        out.is_group = false;
        out.monoid = mit->second;
    } else {
        fail_at(root_no == 0 ? defs[0].no : root_no,
                "root '" + root + "' does not name a usable definition");
    }
    return out;
}

} // namespace

GroupFile parse_group_file(const std::string& text) { return build(text, false); }

GroupFile validate_group_file(const std::string& text) { return build(text, true); }

} // namespace ratsub
