#ifndef RATSUB_ORACLE_REP_HPP
#define RATSUB_ORACLE_REP_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ratsub/words.hpp"

namespace ratsub::oracle {

/// Reference normal forms for test comparisons.  This module deliberately
/// shares no reduction or decision logic with the deciders it checks; letters
/// are interpreted directly from the kind descriptors below.

/// Freely reduced word; generator i is letter 2i, its inverse 2i+1.
struct FreeRep {
    Word w;
    friend auto operator<=>(const FreeRep&, const FreeRep&) = default;
};

/// Integer vector plus torsion residues in [0, m_j).
struct AbelianRep {
    std::vector<std::int64_t> free;
    std::vector<std::uint32_t> torsion;
    friend auto operator<=>(const AbelianRep&, const AbelianRep&) = default;
};

struct FiniteRep {
    std::uint32_t e = 0;
    friend auto operator<=>(const FiniteRep&, const FiniteRep&) = default;
};

/// Alternating nonidentity syllables (factor index, element) of a free
/// product of finite groups.
struct SyllableRep {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> syll;
    friend auto operator<=>(const SyllableRep&, const SyllableRep&) = default;
};

/// Plain word of a free monoid.
struct MonoidRep {
    Word w;
    friend auto operator<=>(const MonoidRep&, const MonoidRep&) = default;
};

/// Pair (free component, partner component); the partner is abelian or a
/// free monoid depending on the kind.
struct ProductRep {
    FreeRep left;
    AbelianRep ab;
    MonoidRep mon;
    friend auto operator<=>(const ProductRep&, const ProductRep&) = default;
};

using Rep = std::variant<FreeRep, AbelianRep, FiniteRep, SyllableRep, MonoidRep, ProductRep>;

struct FreeKind {
    std::size_t rank = 0; // letters 0..2·rank-1
};

struct AbelianKind {
    std::size_t free_rank = 0;                // letters 2i / 2i+1
    std::vector<std::uint32_t> torsion;       // then letter pairs per residue
};

struct FiniteKind {
    std::vector<std::vector<std::uint32_t>> table; // element 0 = identity
    std::vector<std::uint32_t> letter_elem;        // one element per letter
};

/// Letters are the factors' letters concatenated in order.
struct SyllableKind {
    std::vector<FiniteKind> factors;
};

struct MonoidKind {
    std::size_t letters = 0;
};

/// Free-part letters first, then the partner's letters.  Exactly one of the
/// partner descriptors is active.
struct ProductKind {
    std::size_t free_rank = 0;
    bool monoid_partner = false;
    AbelianKind abelian;  // when !monoid_partner
    MonoidKind monoid;    // when monoid_partner
};

using Kind = std::variant<FreeKind, AbelianKind, FiniteKind, SyllableKind, MonoidKind, ProductKind>;

std::size_t kind_letters(const Kind& k);
Rep identity(const Kind& k);
Rep evaluate(const Kind& k, const Word& w);
Rep rep_product(const Kind& k, const Rep& x, const Rep& y);
std::string show(const Rep& r);

} // namespace ratsub::oracle

#endif
