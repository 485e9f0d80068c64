#include <doctest.h>

#include <set>

#include "ratsub/budget.hpp"
#include "ratsub/cfg.hpp"
#include "ratsub/regex.hpp"
#include "ratsub/rewriting.hpp"
#include "test_util.hpp"

using namespace ratsub;
using testutil::accepted_words;
using testutil::all_words;

namespace {
const InvolutiveAlphabet f2 = InvolutiveAlphabet::with_inverses({"a", "b"});
const Alphabet& f2a = f2.alphabet();
Word w(const std::string& t) { return parse_word(f2a, t); }

/// Depth-bounded descendants of the given words under free reduction
/// (deleting one adjacent x·inv(x) factor per step).
std::set<Word> reduction_descendants(const std::vector<Word>& from, std::size_t depth) {
    std::set<Word> seen(from.begin(), from.end());
    std::vector<Word> layer(from.begin(), from.end());
    for (std::size_t d = 0; d < depth && !layer.empty(); ++d) {
        std::vector<Word> next;
        for (const Word& u : layer)
            for (std::size_t i = 0; i + 1 < u.size(); ++i) {
                if (f2.inverse(u[i]) != u[i + 1]) continue;
                Word v(u.begin(), u.begin() + i);
                v.insert(v.end(), u.begin() + i + 2, u.end());
                if (seen.insert(v).second) next.push_back(std::move(v));
            }
        layer = std::move(next);
    }
    return seen;
}

/// Independent grammar route: u is a free-reduction descendant of L(m0)
/// exactly when m0 meets the context-free ancestor language
/// T·u₁·T·…·u_n·T with T = { w : w deletes to ε }.
bool grammar_says_descendant(const Nfa& m0, const Word& u) {
    Cfg t = free_word_problem_cfg(f2);
    std::vector<Cfg::Production> prods = t.productions();
    std::vector<std::string> nts = t.nonterminals();
    std::uint32_t start = static_cast<std::uint32_t>(nts.size());
    nts.push_back("Anc");
    std::vector<Cfg::Sym> rhs{Cfg::nt(t.start())};
    for (Letter x : u) {
        rhs.push_back(Cfg::t(x));
        rhs.push_back(Cfg::nt(t.start()));
    }
    prods.push_back({start, rhs});
    Cfg anc(f2a, nts, start, prods);
    return !cfg_empty(cfg_intersect_nfa(anc, m0));
}

MonadicSystem single_eps_rule(const std::string& expr) {
    MonadicSystem g(f2a);
    g.add_rule_set(kEpsilon, rid_regular(compile(f2a, expr)));
    return g;
}
} // namespace

TEST_SUITE("rewriting") {

TEST_CASE("saturate adds licensed edges") {
    Nfa m0 = compile(f2a, "a a'");
    Nfa sat = saturate(m0, single_eps_rule("a a'"));
    CHECK(sat.num_states() == m0.num_states());
    CHECK(accepts(sat, Word{}));
    CHECK(accepts(sat, w("a a'")));
    CHECK(!accepts(sat, w("a")));
}

TEST_CASE("empty system changes nothing") {
    MonadicSystem g(f2a);
    Nfa m0 = compile(f2a, "(a b)*");
    Nfa sat = saturate(m0, g);
    for (const Word& u : all_words(f2a, 4)) CHECK(accepts(sat, u) == accepts(m0, u));
}

TEST_CASE("two-step derivation") {
    Nfa sat = saturate(compile(f2a, "a b b' a'"), single_eps_rule("a a' | b b'"));
    CHECK(accepts(sat, Word{}));
}

TEST_CASE("descendants_contains") {
    CHECK(descendants_contains(compile(f2a, "a a'"), single_eps_rule("a a'"), Word{}));
    CHECK(descendants_contains(compile(f2a, "a"), single_eps_rule("a a'"), w("a")));
    CHECK(!descendants_contains(compile(f2a, "a b"), single_eps_rule("a a'"), w("b")));
}

TEST_CASE("letter-producing rules") {
    // b b → a
    MonadicSystem g(f2a);
    g.add_rule_set(0, rid_regular(compile(f2a, "b b")));
    Nfa sat = saturate(compile(f2a, "b b b"), g);
    CHECK(accepts(sat, w("a b")));
    CHECK(accepts(sat, w("b a")));
    CHECK(!accepts(sat, w("a a")));
}

TEST_CASE("ancestors_rid") {
    MonadicSystem fr = MonadicSystem::free_reduction(f2);
    RidLanguage anc = ancestors_rid(rid_singleton_epsilon(f2a), fr);
    CHECK(anc.intersects(compile(f2a, "a b b' a'")));
    CHECK(!anc.intersects(compile(f2a, "a b")));

    MonadicSystem empty(f2a);
    RidLanguage l = rid_regular(compile(f2a, "(a b)*"));
    RidLanguage anc2 = ancestors_rid(l, empty);
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        Nfa r = testutil::random_nfa(f2a, 4, rng);
        CHECK(anc2.intersects(r) == l.intersects(r));
    }
}

TEST_CASE("saturation fixpoint properties") {
    MonadicSystem fr = MonadicSystem::free_reduction(f2);
    std::mt19937_64 rng(37);
    for (int i = 0; i < 25; ++i) {
        Nfa m0 = testutil::random_nfa(f2a, 5, rng);
        Nfa sat = saturate(m0, fr);
        CHECK(sat.num_states() == m0.num_states());
        CHECK(sat.initial() == m0.initial());
        for (const Edge& e : m0.edges()) CHECK(sat.edges().count(e) == 1);
        Nfa sat2 = saturate(sat, fr);
        CHECK(sat2.edges() == sat.edges());
        for (const Word& u : all_words(f2a, 4))
            if (accepts(m0, u)) CHECK(accepts(sat, u));
    }
}

TEST_CASE("descendants match bounded derivation search") {
    MonadicSystem fr = MonadicSystem::free_reduction(f2);
    std::mt19937_64 rng(41);
    for (int i = 0; i < 15; ++i) {
        Nfa m0 = testutil::random_nfa(f2a, 4, rng);
        Nfa sat = saturate(m0, fr);
        std::set<Word> derived = reduction_descendants(accepted_words(m0, 6), 6);
        for (const Word& u : all_words(f2a, 6)) {
            if (derived.count(u)) CHECK(accepts(sat, u));
            // descendants the bounded search misses come only from longer
            // sources; the grammar route arbitrates those exactly
            if (accepts(sat, u) && !derived.count(u)) CHECK(grammar_says_descendant(m0, u));
            if (!accepts(sat, u) && u.size() <= 4) CHECK(!grammar_says_descendant(m0, u));
        }
    }
}

TEST_CASE("saturate_from agrees on grafted word paths") {
    MonadicSystem fr = MonadicSystem::free_reduction(f2);
    std::mt19937_64 rng(43);
    for (int i = 0; i < 10; ++i) {
        Nfa base = saturate(testutil::random_nfa(f2a, 4, rng), fr);
        Word u = all_words(f2a, 3)[rng() % 85];
        Nfa grafted = left_translate(u, base);
        std::vector<std::uint32_t> fresh;
        for (std::uint32_t s = 0; s < grafted.num_states(); ++s)
            fresh.push_back(s);
        Nfa quick = saturate_from(grafted, fr, fresh);
        Nfa full = saturate(grafted, fr);
        for (const Word& x : all_words(f2a, 4)) CHECK(accepts(quick, x) == accepts(full, x));
    }
}

TEST_CASE("oracle budget turns long runs into errors") {
    budget::set_oracle_limit(3);
    budget::reset_counters();
    MonadicSystem fr = MonadicSystem::free_reduction(f2);
    CHECK_THROWS_AS(saturate(compile(f2a, "a b b' a'"), fr), budget_exhausted);
    budget::set_oracle_limit(-1);
    budget::reset_counters();
}

} // TEST_SUITE
