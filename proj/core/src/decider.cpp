#include "ratsub/decider.hpp"

namespace ratsub {

RidLanguage wp_rid(const GroupDecider& d) {
    return RidLanguage(
        d.generators.alphabet(),
        [d](const Nfa& r) { return d.member(r, Word{}); },
        "word-problem(" + d.description + ")");
}

GroupDecider decider_from_wp_rid(const RidLanguage& wp, const InvolutiveAlphabet& gens) {
    if (!(wp.alphabet() == gens.alphabet()))
        throw alphabet_mismatch("decider_from_wp_rid: alphabets differ");
    return GroupDecider{
        gens,
        [wp, gens](const Nfa& r, const Word& w) {
            return wp.intersects(left_translate(invert_word(gens, w), r));
        },
        "from(" + wp.description() + ")"};
}

GroupDecider extend_generators(const GroupDecider& d,
                               const std::vector<std::pair<std::string, Word>>& new_letters) {
    const Alphabet& old_alpha = d.generators.alphabet();
    std::vector<std::string> names = old_alpha.names();
    std::vector<Letter> inv;
    for (Letter x = 0; x < d.generators.size(); ++x) inv.push_back(d.generators.inverse(x));
    std::vector<Word> images;
    for (Letter x = 0; x < d.generators.size(); ++x) images.push_back(Word{x});

    for (const auto& [name, word] : new_letters) {
        for (Letter x : word)
            if (x >= d.generators.size())
                throw validation_error("extend_generators: image letter out of range");
        std::string primed = name + "'";
        if (old_alpha.contains(name) || old_alpha.contains(primed))
            throw validation_error("extend_generators: letter name collision: " + name);
        Letter a = static_cast<Letter>(names.size());
        names.push_back(name);
        names.push_back(primed);
        inv.push_back(a + 1);
        inv.push_back(a);
        images.push_back(word);
        images.push_back(invert_word(d.generators, word));
    }
    InvolutiveAlphabet ext(Alphabet(names), inv);
    Morphism expand{ext.alphabet(), old_alpha, images};
    return GroupDecider{
        ext,
        [d, expand](const Nfa& r, const Word& w) {
            return d.member(relabel(r, expand), expand.apply(w));
        },
        "extended(" + d.description + ")"};
}

bool subgroup_member(const GroupDecider& d, const std::vector<Word>& subgens, const Word& w) {
    std::vector<Word> closed;
    for (const auto& u : subgens) {
        closed.push_back(u);
        closed.push_back(invert_word(d.generators, u));
    }
    return d.member(star(nfa_for_words(d.generators.alphabet(), closed)), w);
}

std::optional<std::uint64_t> element_order(const GroupDecider& d, const Word& w) {
    const Alphabet& a = d.generators.alphabet();
    Nfa pow = nfa_for_words(a, {w});
    // identity in the subsemigroup { w^n : n ≥ 1 } iff the order is finite
    if (!d.member(concat(pow, star(pow)), Word{})) return std::nullopt;
    Nfa identity_only = nfa_for_words(a, {Word{}});
    Word cur;
    for (std::uint64_t n = 1;; ++n) {
        cur.insert(cur.end(), w.begin(), w.end());
        if (d.member(identity_only, cur)) return n;
    }
}

} // namespace ratsub
