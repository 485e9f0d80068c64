#ifndef RATSUB_DECIDER_HPP
#define RATSUB_DECIDER_HPP

#include <functional>
#include <optional>

#include "ratsub/rid.hpp"

namespace ratsub {

/// A group with solvable rational-subset membership, packaged as the decision
/// procedure itself: member(R, w) answers whether the element spelled by w
/// lies in the subset spelled by R.  Answers depend only on L(R) and on the
/// group element of w.
struct GroupDecider {
    InvolutiveAlphabet generators;
    std::function<bool(const Nfa&, const Word&)> member;
    std::string description;
};

/// Monoid counterpart (no involution on the generators).
struct MonoidDecider {
    Alphabet generators;
    std::function<bool(const Nfa&, const Word&)> member;
    std::string description;
};

/// RID handle for the word problem language { w : w =_G 1 }.
RidLanguage wp_rid(const GroupDecider& d);

/// Inverse direction: a decider whose member(R, w) asks whether the word
/// problem language meets w⁻¹·L(R).
GroupDecider decider_from_wp_rid(const RidLanguage& wp, const InvolutiveAlphabet& gens);

/// Decider over d.generators plus fresh letter pairs name/name' standing for
/// the given words (and their inverses).  Queries are answered by expanding
/// the new letters back into old-generator words.
GroupDecider extend_generators(const GroupDecider& d,
                               const std::vector<std::pair<std::string, Word>>& new_letters);

/// Membership in the subgroup generated by the given words.
bool subgroup_member(const GroupDecider& d, const std::vector<Word>& subgens, const Word& w);

/// Order of the element spelled by w; nullopt means infinite.
std::optional<std::uint64_t> element_order(const GroupDecider& d, const Word& w);

} // namespace ratsub

#endif
