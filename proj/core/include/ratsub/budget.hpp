#ifndef RATSUB_BUDGET_HPP
#define RATSUB_BUDGET_HPP

#include <atomic>
#include <cstdint>

namespace ratsub::budget {

/// Process-wide resource caps.  A negative limit means unlimited (the library
/// default); the CLI installs finite limits so that runaway constructions fail
/// with budget_exhausted instead of hanging.

void set_oracle_limit(std::int64_t limit);
void set_ilp_node_limit(std::int64_t limit);

void reset_counters();
std::int64_t oracle_calls();
std::int64_t ilp_nodes();

/// Consume one unit; throws budget_exhausted when the cap is hit.
void tick_oracle();
void tick_ilp_node();

} // namespace ratsub::budget

#endif
