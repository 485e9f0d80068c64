#ifndef RATSUB_ORACLE_BFS_HPP
#define RATSUB_ORACLE_BFS_HPP

#include <optional>

#include "ratsub/nfa.hpp"
#include "ratsub/oracle/rep.hpp"

namespace ratsub::oracle {

/// Normal forms of all accepted words of length ≤ max_len, by path
/// enumeration with per-layer (state, value) deduplication.
std::vector<Rep> bfs_members(const Nfa& r, const Kind& k, std::size_t max_len);

/// The exact set of normal forms of L(R) whenever the reachable
/// (state, value) graph closes within the given value-size and count caps;
/// nullopt when it does not (no finite argument at these caps).
std::optional<std::vector<Rep>> closed_members(const Nfa& r, const Kind& k,
                                               std::size_t size_cap, std::size_t count_cap);

/// True only when a finite argument certifies that no accepted word evaluates
/// to target: exact (state, value) fixpoints when they close below a cap,
/// letter-content invariants, coordinate sign cones, and exact regular
/// membership for free monoids.  False means unknown, never "member".
bool certified_nonmember(const Nfa& r, const Kind& k, const Rep& target);

} // namespace ratsub::oracle

#endif
