#include <doctest.h>

#include "ratsub/abelian.hpp"
#include "ratsub/coset.hpp"
#include "ratsub/decider.hpp"
#include "ratsub/finite_group.hpp"
#include "ratsub/free_group.hpp"
#include "ratsub/graph_of_groups.hpp"
#include "ratsub/product.hpp"
#include "ratsub/regex.hpp"
#include "test_util.hpp"

using namespace ratsub;
using testutil::all_words;
using testutil::automaton_pool;

namespace {
const InvolutiveAlphabet f2 = InvolutiveAlphabet::with_inverses({"a", "b"});
const Alphabet& f2a = f2.alphabet();
Word w(const std::string& t) { return parse_word(f2a, t); }

/// ℤ ≥ 2ℤ: cosets {H, Ht}, subgroup generator u = t².
CosetTable z_over_2z() {
    InvolutiveAlphabet ys = InvolutiveAlphabet::with_inverses({"u"});
    InvolutiveAlphabet xs = InvolutiveAlphabet::with_inverses({"t"});
    const Alphabet& y = ys.alphabet();
    const Alphabet& x = xs.alphabet();
    std::vector<Word> reps{Word{}, parse_word(x, "t")};
    std::vector<std::vector<std::uint32_t>> action{{1, 1}, {0, 0}};
    std::vector<std::vector<Word>> rewrite{
        {Word{}, parse_word(y, "u'")},
        {parse_word(y, "u"), Word{}},
    };
    return CosetTable(ys, xs, reps, action, rewrite);
}

GroupDecider two_z() {
    // 2ℤ presented on the single generator u (so ℤ again, but as the subgroup)
    GroupDecider d = abelian_group_decider(1, {});
    InvolutiveAlphabet ys = InvolutiveAlphabet::with_inverses({"u"});
    return GroupDecider{ys, d.member, "2Z"};
}
} // namespace

TEST_SUITE("groups") {

TEST_CASE("wp_rid of the free group") {
    RidLanguage wp = wp_rid(free_group_decider(f2));
    CHECK(wp.intersects(compile(f2a, "a a'")));
    CHECK(!wp.intersects(compile(f2a, "a b")));
    CHECK(wp.intersects(compile(f2a, "1")));
}

TEST_CASE("decider_from_wp_rid") {
    MonadicSystem fr = MonadicSystem::free_reduction(f2);
    RidLanguage anc = ancestors_rid(rid_singleton_epsilon(f2a), fr);
    GroupDecider d = decider_from_wp_rid(anc, f2);
    CHECK(d.member(compile(f2a, "a"), w("a")));
    CHECK(!d.member(compile(f2a, "a"), w("b")));
    CHECK(d.member(compile(f2a, "1"), Word{}));
}

TEST_CASE("free group decider") {
    GroupDecider d = free_group_decider(f2);
    CHECK(d.member(compile(f2a, "(a b)*"), w("a b a b")));

    Nfa h = compile(f2a, "(a a | a b | b' a' | a' a')*");
    CHECK(d.member(h, w("a b")));
    CHECK(!d.member(h, w("b")));
    CHECK(!d.member(h, w("a")));

    CHECK(!d.member(compile(f2a, "a*"), w("a'")));
    CHECK(d.member(compile(f2a, "a b a' b'"), w("a b a' b'")));
    CHECK(!d.member(compile(f2a, "a b a' b'"), Word{}));
}

TEST_CASE("free decider agrees with the two-route construction") {
    GroupDecider fast = free_group_decider(f2);
    MonadicSystem fr = MonadicSystem::free_reduction(f2);
    GroupDecider slow = decider_from_wp_rid(ancestors_rid(rid_singleton_epsilon(f2a), fr), f2);
    std::mt19937_64 rng(47);
    for (int i = 0; i < 10; ++i) {
        Nfa r = testutil::random_nfa(f2a, 4, rng);
        for (const Word& u : all_words(f2a, 4)) CHECK(fast.member(r, u) == slow.member(r, u));
    }
}

TEST_CASE("finite group decider") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    InvolutiveAlphabet sg = InvolutiveAlphabet::with_inverses({"s"});
    GroupDecider d2 = finite_group_decider(z2, sg, {1, 1});
    CHECK(d2.member(compile(sg.alphabet(), "s s"), Word{}));
    CHECK(!d2.member(compile(sg.alphabet(), "s"), Word{}));

    FiniteGroup z3 = FiniteGroup::cyclic(3);
    InvolutiveAlphabet tg = InvolutiveAlphabet::with_inverses({"t"});
    GroupDecider d3 = finite_group_decider(z3, tg, {1, 2});
    CHECK(d3.member(compile(tg.alphabet(), "t t"), parse_word(tg.alphabet(), "t'")));

    // non-generating assignment is a construction error
    FiniteGroup z4 = FiniteGroup::cyclic(4);
    InvolutiveAlphabet pg = InvolutiveAlphabet::with_inverses({"p"});
    CHECK_THROWS_AS(finite_group_decider(z4, pg, {2, 2}), validation_error);
}

TEST_CASE("finite group laws are validated") {
    CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), validation_error); // no inverse for 1
    CHECK_THROWS_AS(FiniteGroup({{1, 0}, {0, 1}}), validation_error); // 0 not identity
    FiniteGroup z2({{0, 1}, {1, 0}});
    CHECK(z2.mul(1, 1) == 0);
    CHECK(z2.inv(1) == 1);
}

TEST_CASE("abelian group decider") {
    GroupDecider z2d = abelian_group_decider(2, {});
    const Alphabet& e = z2d.generators.alphabet();
    CHECK(z2d.member(compile(e, "(e1|e2)*"), parse_word(e, "e1 e2 e1")));
    CHECK(!z2d.member(compile(e, "(e1|e2)*"), parse_word(e, "e1'")));

    GroupDecider mixed = abelian_group_decider(1, {2});
    const Alphabet& m = mixed.generators.alphabet();
    CHECK(mixed.member(compile(m, "(e1 f1)*"), parse_word(m, "e1 e1")));
    CHECK(!mixed.member(compile(m, "(e1 f1)*"), parse_word(m, "e1 f1 e1")));
    CHECK(mixed.member(compile(m, "(e1 f1)*"), parse_word(m, "f1 e1")));

    CHECK_THROWS_AS(abelian_group_decider(1, {1}), validation_error);
}

TEST_CASE("abelian decider answers depend only on the element") {
    GroupDecider d = abelian_group_decider(1, {});
    const Alphabet& e = d.generators.alphabet();
    Nfa r = compile(e, "(e1 e1)*");
    // e1·e1 and e1·e1·e1·e1' spell the same element
    CHECK(d.member(r, parse_word(e, "e1 e1")) ==
          d.member(r, parse_word(e, "e1 e1 e1 e1'")));
    // two automata for the same language answer alike
    Nfa r2 = compile(e, "1 | e1 e1 (e1 e1)*");
    for (const Word& u : all_words(e, 4)) CHECK(d.member(r, u) == d.member(r2, u));
}

TEST_CASE("coset transducer for 2Z in Z") {
    Transducer sigma = coset_transducer(z_over_2z());
    const Alphabet& x = sigma.output();
    const Alphabet& y = sigma.input();
    CHECK(accepts(transducer_image(sigma, nfa_for_words(y, {Word{}})), parse_word(x, "t t'")));
    CHECK(accepts(transducer_image(sigma, nfa_for_words(y, {parse_word(y, "u")})),
                  parse_word(x, "t t")));

    // index-1 table: the transducer relates (recoded w, w); (ε, ε) included
    InvolutiveAlphabet ys = InvolutiveAlphabet::with_inverses({"u"});
    InvolutiveAlphabet xs = InvolutiveAlphabet::with_inverses({"t"});
    CosetTable idx1(ys, xs, {Word{}}, {{0, 0}},
                    {{parse_word(ys.alphabet(), "u"), parse_word(ys.alphabet(), "u'")}});
    Transducer s1 = coset_transducer(idx1);
    CHECK(accepts(transducer_image(s1, nfa_for_words(ys.alphabet(), {Word{}})), Word{}));
    CHECK(accepts(transducer_image(s1, nfa_for_words(ys.alphabet(), {parse_word(ys.alphabet(), "u")})),
                  parse_word(xs.alphabet(), "t")));
}

TEST_CASE("overgroup decider: Z from 2Z") {
    GroupDecider g = overgroup_decider(two_z(), z_over_2z());
    const Alphabet& x = g.generators.alphabet();
    CHECK(g.member(compile(x, "t t"), parse_word(x, "t t")));
    CHECK(!g.member(compile(x, "(t t)*"), parse_word(x, "t")));
    CHECK(g.member(compile(x, "(t t)*"), parse_word(x, "t t t t")));
    CHECK(!g.member(compile(x, "(t t)*"), parse_word(x, "t'")));
}

TEST_CASE("coset table validation") {
    InvolutiveAlphabet ys = InvolutiveAlphabet::with_inverses({"u"});
    InvolutiveAlphabet xs = InvolutiveAlphabet::with_inverses({"t"});
    const Alphabet& y = ys.alphabet();
    // action not a bijection per letter
    CHECK_THROWS_AS(CosetTable(ys, xs, {Word{}, parse_word(xs.alphabet(), "t")},
                               {{1, 1}, {1, 0}},
                               {{Word{}, Word{}}, {Word{}, Word{}}}),
                    validation_error);
    // incoherent rewrite words are caught against the subgroup decider
    CosetTable bad(ys, xs, {Word{}, parse_word(xs.alphabet(), "t")}, {{1, 1}, {0, 0}},
                   {{Word{}, parse_word(y, "u")}, {parse_word(y, "u"), Word{}}});
    CHECK_THROWS_AS(bad.check_coherence(two_z()), validation_error);
    z_over_2z().check_coherence(two_z()); // the good table passes
}

TEST_CASE("extend_generators") {
    InvolutiveAlphabet f1 = InvolutiveAlphabet::with_inverses({"t"});
    GroupDecider d = free_group_decider(f1);
    GroupDecider ext = extend_generators(d, {{"h", parse_word(f1.alphabet(), "t t")}});
    const Alphabet& ea = ext.generators.alphabet();
    CHECK(ext.member(compile(ea, "h"), parse_word(ea, "t t")));
    CHECK(!ext.member(compile(ea, "h*"), parse_word(ea, "t")));
    CHECK(ext.member(compile(ea, "h t'"), parse_word(ea, "t")));

    GroupDecider same = extend_generators(d, {});
    for (const Word& u : all_words(f1.alphabet(), 3))
        CHECK(same.member(compile(f1.alphabet(), "(t t)*"), u) ==
              d.member(compile(f1.alphabet(), "(t t)*"), u));

    CHECK_THROWS_AS(extend_generators(d, {{"t", parse_word(f1.alphabet(), "t t")}}), error);
}

TEST_CASE("fundamental_generators shapes") {
    InvolutiveAlphabet f1 = InvolutiveAlphabet::with_inverses({"t"});
    GogVertex v{"v", free_group_decider(f1)};

    GraphOfGroups lone({v}, {}, 0);
    FundamentalGenerators fg = fundamental_generators(lone);
    CHECK(fg.alphabet.size() == 2);
    CHECK(fg.rho.apply(Word{0}).size() == 1);

    auto triv = std::make_shared<const FiniteGroup>(FiniteGroup::trivial());
    GraphOfGroups loop({v},
                       {{"y", 0, 1, triv, {Word{}}}, {"y'", 0, 0, triv, {Word{}}}}, 0);
    FundamentalGenerators fgl = fundamental_generators(loop);
    CHECK(fgl.alphabet.size() == 4); // t, t', y, y'
}

TEST_CASE("graph of groups: trivial graph is the vertex group") {
    InvolutiveAlphabet f1 = InvolutiveAlphabet::with_inverses({"t"});
    GroupDecider vg = free_group_decider(f1);
    GraphOfGroups lone({{"v", vg}}, {}, 0);
    GroupDecider d = graph_of_groups_decider(lone);
    const Alphabet& a = d.generators.alphabet();
    CHECK(d.member(compile(a, "t*"), parse_word(a, "t t")));
    std::mt19937_64 rng(53);
    for (int i = 0; i < 8; ++i) {
        Nfa r = testutil::random_nfa(a, 4, rng);
        for (const Word& u : all_words(a, 4)) CHECK(d.member(r, u) == vg.member(r, u));
    }
}

TEST_CASE("amalgam: Z/2 * Z/3") {
    InvolutiveAlphabet sg = InvolutiveAlphabet::with_inverses({"s"});
    InvolutiveAlphabet tg = InvolutiveAlphabet::with_inverses({"t"});
    GroupDecider left = finite_group_decider(FiniteGroup::cyclic(2), sg, {1, 1});
    GroupDecider right = finite_group_decider(FiniteGroup::cyclic(3), tg, {1, 2});
    GroupDecider d = amalgam_decider(left, right, FiniteGroup::trivial(), {Word{}}, {Word{}});
    const Alphabet& a = d.generators.alphabet();
    CHECK(d.member(compile(a, "(s t)*"), parse_word(a, "s t s t")));
    CHECK(!d.member(compile(a, "(s t)*"), parse_word(a, "t s")));
    CHECK(d.member(compile(a, "(s t)*"), Word{}));

    CHECK(element_order(d, parse_word(a, "s")) == 2);
    CHECK(element_order(d, parse_word(a, "t")) == 3);
    CHECK(!element_order(d, parse_word(a, "s t")).has_value());
}

TEST_CASE("hnn deciders") {
    InvolutiveAlphabet tr = InvolutiveAlphabet::with_inverses({"e"});
    GroupDecider trivial_base =
        finite_group_decider(FiniteGroup::trivial(), tr, {0, 0});
    GroupDecider z = hnn_decider(trivial_base, FiniteGroup::trivial(), {Word{}}, {Word{}});
    const Alphabet& za = z.generators.alphabet();
    CHECK(z.member(compile(za, "y*"), parse_word(za, "y y")));
    CHECK(!z.member(compile(za, "(y y)*"), parse_word(za, "y")));

    InvolutiveAlphabet sg = InvolutiveAlphabet::with_inverses({"s"});
    GroupDecider z2 = finite_group_decider(FiniteGroup::cyclic(2), sg, {1, 1});
    GroupDecider d = hnn_decider(z2, FiniteGroup::trivial(), {Word{}}, {Word{}});
    const Alphabet& a = d.generators.alphabet();
    CHECK(d.member(compile(a, "s y"), parse_word(a, "s y")));
    CHECK(!d.member(compile(a, "(s y)*"), parse_word(a, "y s")));
}

TEST_CASE("amalgam over a nontrivial finite subgroup") {
    // Z/4 *_{Z/2} Z/4: the squares of the two generators are identified
    InvolutiveAlphabet pg = InvolutiveAlphabet::with_inverses({"p"});
    InvolutiveAlphabet qg = InvolutiveAlphabet::with_inverses({"q"});
    GroupDecider left = finite_group_decider(FiniteGroup::cyclic(4), pg, {1, 3});
    GroupDecider right = finite_group_decider(FiniteGroup::cyclic(4), qg, {1, 3});
    GroupDecider d =
        amalgam_decider(left, right, FiniteGroup::cyclic(2),
                        {Word{}, parse_word(pg.alphabet(), "p p")},
                        {Word{}, parse_word(qg.alphabet(), "q q")});
    const Alphabet& a = d.generators.alphabet();
    CHECK(d.member(compile(a, "p p"), parse_word(a, "q q")));
    CHECK(!d.member(compile(a, "p"), parse_word(a, "q")));
}

TEST_CASE("embedding validation failures") {
    InvolutiveAlphabet pg = InvolutiveAlphabet::with_inverses({"p"});
    GroupDecider base = finite_group_decider(FiniteGroup::cyclic(4), pg, {1, 3});
    // non-injective: the Z/2 generator sent to the identity word
    CHECK_THROWS_AS(hnn_decider(base, FiniteGroup::cyclic(2), {Word{}, Word{}},
                                {Word{}, parse_word(pg.alphabet(), "p p")}),
                    validation_error);
    // not a homomorphism: image element of order 4, edge element of order 2
    CHECK_THROWS_AS(hnn_decider(base, FiniteGroup::cyclic(2),
                                {Word{}, parse_word(pg.alphabet(), "p")},
                                {Word{}, parse_word(pg.alphabet(), "p p")}),
                    validation_error);
}

TEST_CASE("product with an abelian partner") {
    ProductSpec spec;
    spec.free_part = InvolutiveAlphabet::with_inverses({"a"});
    spec.partner = ProductSpec::Partner::abelian;
    spec.abelian_rank = 1;
    GroupDecider d = product_group_decider(spec);
    const Alphabet& a = d.generators.alphabet();
    CHECK(d.member(compile(a, "(a e1)*"), parse_word(a, "a a e1 e1")));
    CHECK(!d.member(compile(a, "(a e1)*"), parse_word(a, "a e1 e1")));
    CHECK(d.member(compile(a, "(a e1)*"), parse_word(a, "e1 a"))); // factors commute
}

TEST_CASE("product with a free-monoid partner") {
    ProductSpec spec;
    spec.free_part = f2;
    spec.partner = ProductSpec::Partner::free_monoid;
    spec.monoid_letters = Alphabet({"x"});
    MonoidDecider d = product_monoid_decider(spec);
    const Alphabet& a = d.generators;
    CHECK(d.member(compile(a, "(a x)(a' x)"), parse_word(a, "x x")));
    CHECK(!d.member(compile(a, "(a x)(a' x)"), parse_word(a, "x")));
}

TEST_CASE("subgroup_member") {
    GroupDecider d = free_group_decider(f2);
    std::vector<Word> h{w("a a"), w("a b")};
    CHECK(subgroup_member(d, h, w("a b")));
    CHECK(!subgroup_member(d, h, w("b")));
    CHECK(subgroup_member(d, {}, Word{}));
    CHECK(!subgroup_member(d, {}, w("a")));
}

TEST_CASE("element_order") {
    InvolutiveAlphabet tg = InvolutiveAlphabet::with_inverses({"t"});
    GroupDecider z3 = finite_group_decider(FiniteGroup::cyclic(3), tg, {1, 2});
    CHECK(element_order(z3, parse_word(tg.alphabet(), "t")) == 3);
    CHECK(element_order(z3, Word{}) == 1);

    GroupDecider fr = free_group_decider(f2);
    CHECK(!element_order(fr, w("a")).has_value());
    CHECK(element_order(fr, w("a b b' a'")) == 1);
}

TEST_CASE("generator independence under recoding") {
    // doubling recoding on Z: y ↦ t t inside the same decider
    GroupDecider z = abelian_group_decider(1, {});
    const Alphabet& e = z.generators.alphabet();
    // w and its recoded double spell different elements, but conjugation-free
    // insertions of e1 e1' preserve the element
    std::mt19937_64 rng(59);
    for (int i = 0; i < 10; ++i) {
        Nfa r = testutil::random_nfa(e, 3, rng);
        for (const Word& u : all_words(e, 3)) {
            Word padded;
            padded.push_back(0);
            padded.push_back(1);
            padded.insert(padded.end(), u.begin(), u.end());
            CHECK(z.member(r, u) == z.member(r, padded));
        }
    }
}

TEST_CASE("wp round trip") {
    GroupDecider d = free_group_decider(f2);
    RidLanguage wp = wp_rid(d);
    GroupDecider back = decider_from_wp_rid(wp, f2);
    RidLanguage wp2 = wp_rid(back);
    std::mt19937_64 rng(61);
    for (int i = 0; i < 10; ++i) {
        Nfa r = testutil::random_nfa(f2a, 3, rng);
        CHECK(wp.intersects(r) == wp2.intersects(r));
    }
}

} // TEST_SUITE
