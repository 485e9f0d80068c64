#ifndef RATSUB_ILP_HPP
#define RATSUB_ILP_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ratsub/errors.hpp"

namespace ratsub {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// One linear constraint over nonnegative integer variables.
struct IlpRow {
    enum class Rel { eq, le, ge };
    std::vector<std::pair<std::uint32_t, Rational>> coeffs; // sparse, by variable id
    Rel rel = Rel::eq;
    Rational rhs = 0;
};

/// Feasibility instance: nonnegative integer variables, linear rows, optional
/// per-variable upper bounds, and implication side conditions
/// x_a ≥ 1 ⇒ x_b ≥ 1 (handled exactly, without big-M constants).
struct IlpInstance {
    std::uint32_t num_vars = 0;
    std::vector<IlpRow> rows;
    std::vector<std::optional<Integer>> upper; // one entry per variable
    std::vector<std::pair<std::uint32_t, std::uint32_t>> implications;

    std::uint32_t add_var(std::optional<Integer> ub = std::nullopt) {
        upper.push_back(std::move(ub));
        return num_vars++;
    }
    void add_row(IlpRow row) { rows.push_back(std::move(row)); }
    void add_implication(std::uint32_t a, std::uint32_t b) { implications.emplace_back(a, b); }
};

/// Exact feasibility check (rational simplex relaxations inside a
/// branch-and-bound search); returns a witness assignment if one exists.
/// Each explored node counts against the global ilp node budget.
std::optional<std::vector<Integer>> ilp_solve(const IlpInstance& inst);

inline bool ilp_feasible(const IlpInstance& inst) { return ilp_solve(inst).has_value(); }

} // namespace ratsub

#endif
