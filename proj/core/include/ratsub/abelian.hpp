#ifndef RATSUB_ABELIAN_HPP
#define RATSUB_ABELIAN_HPP

#include "ratsub/decider.hpp"

namespace ratsub {

/// Finitely generated abelian group ℤ^r × ℤ/m₁ × … × ℤ/m_k with generators
/// e1,e1',…,er,er' (free part) and f1,f1',…,fk,fk' (torsion part).
/// Membership is decided by integer-programming feasibility over edge-usage
/// counts of the query automaton.
GroupDecider abelian_group_decider(std::uint32_t free_rank,
                                   const std::vector<std::uint32_t>& torsion);

} // namespace ratsub

#endif
