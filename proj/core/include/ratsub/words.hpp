#ifndef RATSUB_WORDS_HPP
#define RATSUB_WORDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ratsub/errors.hpp"

namespace ratsub {

using Letter = std::uint32_t;

/// A finite ordered set of letter names. Iteration order is insertion order.
/// Names are printable, contain no whitespace and none of the reserved
/// characters  ( ) | * ' ,  except that inverse letters end in a single
/// apostrophe (see InvolutiveAlphabet).
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    Letter add(const std::string& name);

    std::size_t size() const { return names_.size(); }
    const std::string& name(Letter a) const { return names_.at(a); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<Letter> find(const std::string& name) const;
    Letter require(const std::string& name) const;
    bool contains(const std::string& name) const { return find(name).has_value(); }

    friend bool operator==(const Alphabet& x, const Alphabet& y) {
        return x.names_ == y.names_;
    }

    static bool valid_name(const std::string& name, bool allow_prime_suffix = true);

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Letter> index_;
};

/// A word is a sequence of letters of some (externally known) alphabet.
/// The empty word is spelled `1` in text form.
using Word = std::vector<Letter>;

/// An alphabet together with a total involution on its letters.  For group
/// generating alphabets the involution is fixed-point free and the inverse of
/// letter x is spelled x'.
class InvolutiveAlphabet {
public:
    InvolutiveAlphabet() = default;
    InvolutiveAlphabet(Alphabet base, std::vector<Letter> inv);

    /// Builds the symmetric alphabet a a' b b' ... from base names a b ...
    static InvolutiveAlphabet with_inverses(const std::vector<std::string>& base_names);

    const Alphabet& alphabet() const { return base_; }
    std::size_t size() const { return base_.size(); }
    Letter inverse(Letter a) const { return inv_.at(a); }
    bool fixed_point_free() const;

    friend bool operator==(const InvolutiveAlphabet& x, const InvolutiveAlphabet& y) {
        return x.base_ == y.base_ && x.inv_ == y.inv_;
    }

private:
    Alphabet base_;
    std::vector<Letter> inv_;
};

/// A monoid morphism between free monoids, given by its values on letters.
struct Morphism {
    Alphabet source;
    Alphabet target;
    std::vector<Word> images; // one entry per source letter

    Word apply(const Word& w) const;

    static Morphism identity(const Alphabet& a);
};

Word parse_word(const Alphabet& a, const std::string& text);
std::string format_word(const Alphabet& a, const Word& w);

/// Removes all factors x·x' by a single left-to-right stack pass.
Word free_reduce(const InvolutiveAlphabet& a, const Word& w);

/// Reverse of w with every letter replaced by its involution partner.
Word invert_word(const InvolutiveAlphabet& a, const Word& w);

inline Word apply_morphism(const Morphism& m, const Word& w) { return m.apply(w); }

} // namespace ratsub

#endif
