#ifndef RATSUB_PRODUCT_HPP
#define RATSUB_PRODUCT_HPP

#include "ratsub/decider.hpp"

namespace ratsub {

/// Direct product of a free group with a partner factor.  The partner kinds
/// are exactly the decidable ones; in particular no free-group partner can be
/// expressed, so products of two nonabelian free groups are unrepresentable.
struct ProductSpec {
    InvolutiveAlphabet free_part; // rank ≥ 0

    enum class Partner { abelian, free_commutative_monoid, free_monoid };
    Partner partner = Partner::abelian;

    // abelian: ℤ^rank × ℤ/m₁ × … (generators e1.., f1.. with inverses)
    std::uint32_t abelian_rank = 0;
    std::vector<std::uint32_t> torsion;

    // free commutative monoid ℕ^rank (generators x1..)
    std::uint32_t commutative_rank = 0;

    // free monoid over the given letters
    Alphabet monoid_letters;
};

/// Group decider for F × A (partner must be abelian).  Generators are the
/// free letters followed by the partner letters; input words may interleave
/// the factors arbitrarily.
GroupDecider product_group_decider(const ProductSpec& spec);

/// Monoid decider for F × ℕ^k or F × X* (monoid partners).
MonoidDecider product_monoid_decider(const ProductSpec& spec);

} // namespace ratsub

#endif
