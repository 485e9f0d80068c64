#include <doctest.h>

#include <sstream>

#include "ratsub/automaton_io.hpp"
#include "ratsub/nfa.hpp"
#include "ratsub/regex.hpp"
#include "ratsub/transducer.hpp"
#include "test_util.hpp"

using namespace ratsub;
using testutil::all_words;
using testutil::random_nfa;

namespace {
const InvolutiveAlphabet f2 = InvolutiveAlphabet::with_inverses({"a", "b"});
const Alphabet& f2a = f2.alphabet();
Word w(const std::string& t) { return parse_word(f2a, t); }

std::vector<Word> language(const Nfa& m, std::size_t max_len) {
    std::vector<Word> out;
    for (const Word& u : all_words(m.alphabet(), max_len))
        if (accepts(m, u)) out.push_back(u);
    return out;
}
} // namespace

TEST_SUITE("automata") {

TEST_CASE("compile and accepts") {
    Nfa m = compile(f2a, "(a b)*");
    CHECK(accepts(m, Word{}));
    CHECK(accepts(m, w("a b")));
    CHECK(accepts(m, w("a b a b")));
    CHECK(!accepts(m, w("b a")));
    CHECK(!accepts(m, w("a")));

    Nfa eps = compile(f2a, "1");
    CHECK(language(eps, 2) == std::vector<Word>{Word{}});

    Nfa u = compile(f2a, "a | b b");
    CHECK(accepts(u, w("b b")));
    CHECK(accepts(u, w("a")));
    CHECK(!accepts(u, w("a b")));
    CHECK(!accepts(u, Word{}));

    CHECK_THROWS_AS(compile(f2a, "a ("), parse_error);
    CHECK_THROWS_AS(compile(f2a, "c"), parse_error);
}

TEST_CASE("is_empty") {
    CHECK(!is_empty(compile(f2a, "a")));
    CHECK(is_empty(Nfa(f2a, 1, 0, {}, {})));
    CHECK(is_empty(Nfa(f2a, 2, 0, {1}, {}))); // final unreachable
    CHECK(is_empty(nfa_empty(f2a)));
}

TEST_CASE("is_empty matches the pumping bound") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Nfa m = random_nfa(f2a, 3, rng);
        bool short_word = !language(m, m.num_states()).empty();
        CHECK(is_empty(m) == !short_word);
    }
}

TEST_CASE("intersect") {
    Nfa m = intersect(compile(f2a, "(a b)*"), compile(f2a, "a b"));
    CHECK(language(m, 4) == std::vector<Word>{w("a b")});

    Nfa m2 = intersect(compile(f2a, "(a b)*"), compile(f2a, "1"));
    CHECK(language(m2, 3) == std::vector<Word>{Word{}});

    Nfa m3 = intersect(compile(f2a, "(a|b)*"), compile(f2a, "a* b a*"));
    for (const Word& u : all_words(f2a, 4)) {
        std::size_t bs = 0;
        bool pure = true;
        for (Letter x : u) {
            if (x == 2) ++bs;
            if (x == 1 || x == 3) pure = false;
        }
        CHECK(accepts(m3, u) == (pure && bs == 1));
    }

    Alphabet other({"z"});
    CHECK_THROWS_AS(intersect(compile(f2a, "a"), compile(other, "z")), alphabet_mismatch);
}

TEST_CASE("intersect agrees with conjunction exhaustively") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        Nfa m1 = random_nfa(f2a, 3, rng);
        Nfa m2 = random_nfa(f2a, 3, rng);
        Nfa both = intersect(m1, m2);
        for (const Word& u : all_words(f2a, 4))
            CHECK(accepts(both, u) == (accepts(m1, u) && accepts(m2, u)));
    }
}

TEST_CASE("rational operations") {
    Nfa u = nfa_union(compile(f2a, "a"), compile(f2a, "b"));
    CHECK(accepts(u, w("a")));
    CHECK(accepts(u, w("b")));
    CHECK(!accepts(u, Word{}));

    Nfa lt = left_translate(w("a b'"), compile(f2a, "1"));
    CHECK(language(lt, 3) == std::vector<Word>{w("a b'")});

    Nfa st = star(compile(f2a, "a a"));
    CHECK(accepts(st, w("a a a a")));
    CHECK(!accepts(st, w("a a a")));
    CHECK(accepts(st, Word{}));

    Nfa cc = concat(compile(f2a, "a"), compile(f2a, "b*"));
    CHECK(accepts(cc, w("a b b")));
    CHECK(!accepts(cc, w("b")));

    Nfa rt = right_translate(compile(f2a, "a*"), w("b"));
    CHECK(accepts(rt, w("a a b")));
    CHECK(!accepts(rt, w("a a")));

    Nfa rv = reverse(compile(f2a, "a b"));
    CHECK(language(rv, 3) == std::vector<Word>{w("b a")});
}

TEST_CASE("quotient") {
    InvolutiveAlphabet ya = InvolutiveAlphabet::with_inverses({"y", "a", "b"});
    const Alphabet& y = ya.alphabet();
    Nfa q1 = quotient(compile(y, "y a y'"), parse_word(y, "y"), parse_word(y, "y'"));
    CHECK(language(q1, 3) == std::vector<Word>{parse_word(y, "a")});

    Nfa m = compile(f2a, "(a b)*");
    Nfa q2 = quotient(m, Word{}, Word{});
    for (const Word& u : all_words(f2a, 4)) CHECK(accepts(q2, u) == accepts(m, u));

    Nfa q3 = quotient(compile(y, "y (a|b b) y'"), parse_word(y, "y"), parse_word(y, "y'"));
    std::vector<Word> got = language(q3, 3);
    CHECK(got == std::vector<Word>{parse_word(y, "a"), parse_word(y, "b b")});
}

TEST_CASE("quotient agrees with wrapping exhaustively") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 20; ++i) {
        Nfa m = random_nfa(f2a, 4, rng);
        Word p = all_words(f2a, 2)[rng() % 21];
        Word s = all_words(f2a, 2)[rng() % 21];
        Nfa q = quotient(m, p, s);
        for (const Word& u : all_words(f2a, 4)) {
            Word pws = p;
            pws.insert(pws.end(), u.begin(), u.end());
            pws.insert(pws.end(), s.begin(), s.end());
            CHECK(accepts(q, u) == accepts(m, pws));
        }
    }
}

TEST_CASE("relabel") {
    Alphabet ya({"y"});
    Alphabet ta({"t"});
    Morphism rec{ya, ta, {parse_word(ta, "t t")}};
    Nfa m = relabel(compile(ya, "y"), rec);
    CHECK(language(m, 3) == std::vector<Word>{parse_word(ta, "t t")});

    Nfa m2 = relabel(compile(f2a, "(a b)*"), Morphism::identity(f2a));
    for (const Word& u : all_words(f2a, 4))
        CHECK(accepts(m2, u) == accepts(compile(f2a, "(a b)*"), u));

    Nfa m3 = relabel(compile(ya, "y*"), rec);
    for (const Word& u : all_words(ta, 6))
        CHECK(accepts(m3, u) == (u.size() % 2 == 0));
}

TEST_CASE("restrict_letters") {
    Alphabet ab({"a", "b"});
    Alphabet xa({"x"});
    // keep a as x, drop b: (a* | a b) ∩ a* = a*, re-spelled x*
    Nfa m = restrict_letters(compile(ab, "a* | a b"), xa, {0, kEpsilon});
    CHECK(accepts(m, Word{}));
    CHECK(accepts(m, parse_word(xa, "x x")));
    CHECK(accepts(m, parse_word(xa, "x x x")));
}

TEST_CASE("transducer image and preimage") {
    Alphabet in({"a"});
    Alphabet out({"x"});
    Transducer t(in, out, 2, 0, {1}, {{0, 0, parse_word(out, "x x"), 1}});

    Nfa img = transducer_image(t, compile(in, "a"));
    CHECK(accepts(img, parse_word(out, "x x")));
    CHECK(!accepts(img, parse_word(out, "x")));

    CHECK(is_empty(transducer_image(t, nfa_empty(in))));

    Nfa pre = transducer_preimage(t, compile(out, "x x"));
    CHECK(accepts(pre, parse_word(in, "a")));
    CHECK(!accepts(pre, Word{}));
    CHECK(is_empty(transducer_preimage(t, compile(out, "x"))));

    Transducer t1(in, out, 1, 0, {0}, {{0, 0, parse_word(out, "x"), 0}});
    Nfa round = transducer_image(t1, transducer_preimage(t1, compile(out, "x")));
    CHECK(accepts(round, parse_word(out, "x")));
}

TEST_CASE("coset-style transducer composition") {
    // index-2 structure: states 0,1; reading the subgroup letter u advances a
    // t-pair, crossing the nontrivial coset in between
    InvolutiveAlphabet ys = InvolutiveAlphabet::with_inverses({"u"});
    InvolutiveAlphabet xs = InvolutiveAlphabet::with_inverses({"t"});
    const Alphabet& y = ys.alphabet();
    const Alphabet& x = xs.alphabet();
    std::set<TransducerEdge> edges{
        {0, kEpsilon, parse_word(x, "t"), 1},
        {1, 0, parse_word(x, "t"), 0},
        {0, 1, parse_word(x, "t'"), 1},
        {1, kEpsilon, parse_word(x, "t'"), 0},
    };
    Transducer sigma(y, x, 2, 0, {0}, edges);
    Nfa img = transducer_image(sigma, compile(y, "u u'"));
    CHECK(accepts(img, parse_word(x, "t t t' t'")));
}

TEST_CASE("image and preimage are adjoint on tests") {
    Alphabet in({"a", "b"});
    Alphabet out({"x", "y"});
    std::set<TransducerEdge> edges{
        {0, 0, parse_word(out, "x x"), 0},
        {0, 1, parse_word(out, "y"), 1},
        {1, 0, Word{}, 1},
    };
    Transducer t(in, out, 2, 0, {0, 1}, edges);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 10; ++i) {
        Nfa m = random_nfa(in, 3, rng);
        Nfa img = transducer_image(t, m);
        for (const Word& v : all_words(out, 4)) {
            Nfa single = nfa_for_words(out, {v});
            bool via_pre = !is_empty(intersect(transducer_preimage(t, single), m));
            CHECK(accepts(img, v) == via_pre);
        }
    }
}

TEST_CASE("text format round trip") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 10; ++i) {
        Nfa m = random_nfa(f2a, 4, rng);
        std::ostringstream os;
        write_nfa(os, m);
        std::istringstream is(os.str());
        Nfa back = read_nfa(is);
        CHECK(m == back);
    }
    std::istringstream bad("alphabet: a\nstates: zero\n");
    CHECK_THROWS_AS(read_nfa(bad), parse_error);
}

TEST_CASE("trim preserves the language") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 20; ++i) {
        Nfa m = random_nfa(f2a, 4, rng);
        Nfa t = trim(m);
        for (const Word& u : all_words(f2a, 4)) CHECK(accepts(t, u) == accepts(m, u));
    }
}

} // TEST_SUITE
