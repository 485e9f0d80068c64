#include <doctest.h>

#include "ratsub/words.hpp"
#include "test_util.hpp"

using namespace ratsub;
using testutil::all_words;

namespace {
const InvolutiveAlphabet f2 = InvolutiveAlphabet::with_inverses({"a", "b"});
const Alphabet& f2a = f2.alphabet();
Word w(const std::string& t) { return parse_word(f2a, t); }
} // namespace

TEST_SUITE("words") {

TEST_CASE("alphabet basics") {
    Alphabet a({"x", "y"});
    CHECK(a.size() == 2);
    CHECK(a.name(0) == "x");
    CHECK(a.require("y") == 1);
    CHECK(!a.contains("z"));
    CHECK_THROWS_AS(Alphabet({"x", "x"}), error);
    CHECK(!Alphabet::valid_name("a b"));
    CHECK(!Alphabet::valid_name("a*"));
    CHECK(!Alphabet::valid_name("(a"));
    CHECK(!Alphabet::valid_name(""));
    CHECK(Alphabet::valid_name("e1"));
}

TEST_CASE("involutive alphabet") {
    CHECK(f2.size() == 4);
    CHECK(f2a.name(0) == "a");
    CHECK(f2a.name(1) == "a'");
    CHECK(f2.inverse(0) == 1);
    CHECK(f2.inverse(1) == 0);
    CHECK(f2.inverse(f2.inverse(2)) == 2);
    CHECK(f2.fixed_point_free());
}

TEST_CASE("word parsing and formatting") {
    CHECK(w("1") == Word{});
    CHECK(w("a b' a") == Word{0, 3, 0});
    CHECK(format_word(f2a, Word{}) == "1");
    CHECK(format_word(f2a, Word{0, 3}) == "a b'");
    CHECK_THROWS_AS(parse_word(f2a, "a c"), error);
}

TEST_CASE("free_reduce") {
    CHECK(free_reduce(f2, w("a a' b")) == w("b"));
    CHECK(free_reduce(f2, Word{}) == Word{});
    CHECK(free_reduce(f2, w("a b b' a'")) == Word{});
    CHECK(free_reduce(f2, w("a' a b")) == w("b"));
}

TEST_CASE("invert_word") {
    CHECK(invert_word(f2, w("a b")) == w("b' a'"));
    CHECK(invert_word(f2, Word{}) == Word{});
    CHECK(invert_word(f2, invert_word(f2, w("a b' a"))) == w("a b' a"));
}

TEST_CASE("apply_morphism") {
    Alphabet ab({"a", "b"});
    Alphabet xy({"x", "y"});
    Morphism m{ab, xy, {parse_word(xy, "x y"), Word{}}};
    CHECK(apply_morphism(m, parse_word(ab, "a b a")) == parse_word(xy, "x y x y"));

    Morphism id = Morphism::identity(f2a);
    CHECK(apply_morphism(id, w("a b' a")) == w("a b' a"));

    Alphabet ya({"y"});
    Alphabet ta({"t"});
    Morphism rec{ya, ta, {parse_word(ta, "t t")}};
    CHECK(apply_morphism(rec, parse_word(ya, "y y")) == parse_word(ta, "t t t t"));
}

TEST_CASE("free reduction properties") {
    for (const Word& u : all_words(f2a, 5)) {
        Word r = free_reduce(f2, u);
        CHECK(free_reduce(f2, r) == r);
        Word ui = u;
        Word inv = invert_word(f2, u);
        ui.insert(ui.end(), inv.begin(), inv.end());
        CHECK(free_reduce(f2, ui) == Word{});
    }
}

TEST_CASE("morphism distributes over concatenation") {
    Alphabet ab({"a", "b"});
    Alphabet xy({"x", "y"});
    Morphism m{ab, xy, {parse_word(xy, "x y"), parse_word(xy, "y")}};
    for (const Word& u : all_words(ab, 3))
        for (const Word& v : all_words(ab, 3)) {
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            Word mu = m.apply(u), mv = m.apply(v);
            mu.insert(mu.end(), mv.begin(), mv.end());
            CHECK(m.apply(uv) == mu);
        }
}

} // TEST_SUITE
