#ifndef RATSUB_FREE_GROUP_HPP
#define RATSUB_FREE_GROUP_HPP

#include "ratsub/decider.hpp"
#include "ratsub/rewriting.hpp"

namespace ratsub {

/// Rational-subset membership in the free group on the given involutive
/// alphabet, by free-reduction saturation of the query automaton.
GroupDecider free_group_decider(const InvolutiveAlphabet& gens);

} // namespace ratsub

#endif
