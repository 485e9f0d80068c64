#ifndef RATSUB_PARIKH_HPP
#define RATSUB_PARIKH_HPP

#include "ratsub/cfg.hpp"
#include "ratsub/ilp.hpp"

namespace ratsub {

/// c + ℕ-span of the period vectors; all vectors of one dimension.
struct LinearSet {
    std::vector<Integer> constant;
    std::vector<std::vector<Integer>> periods;
};

struct SemilinearSet {
    std::size_t dimension = 0;
    std::vector<LinearSet> components;
};

bool semilinear_member(const SemilinearSet& s, const std::vector<Integer>& v);

/// ILP whose solutions project to the Parikh images of L(g): production-count
/// variables with flow balance per nonterminal, plus distance-variable
/// connectivity constraints tying every used production to the start symbol.
/// terminal_vars[a] is a variable equal to the count of terminal a.
struct ParikhSystem {
    IlpInstance ilp;
    std::vector<std::uint32_t> terminal_vars;
};

ParikhSystem parikh_system(const Cfg& g);

/// Reusable Parikh-image membership for one grammar.  Queries are linear
/// conditions on the terminal counts.  A flow-only relaxation is tried first:
/// its infeasibility refutes, and a witness whose used productions are all
/// reachable from the start certifies; otherwise the full connectivity
/// encoding decides.
class ParikhMembership {
public:
    explicit ParikhMembership(const Cfg& g);

    struct CountRow {
        std::vector<std::pair<std::uint32_t, Rational>> terms; // (terminal, coeff)
        IlpRow::Rel rel = IlpRow::Rel::eq;
        Rational rhs = 0;
        Integer modulus = 0; // if > 0: Σ terms ≡ rhs (mod modulus); rel ignored
    };

    bool satisfiable(const std::vector<CountRow>& rows) const;

private:
    Cfg pruned_;
    ParikhSystem full_;
    ParikhSystem light_; // flow balance and counters only, no connectivity
    std::vector<std::uint32_t> light_y_;
};

/// True iff some word of L(g) has exactly target[a] occurrences of each
/// terminal a.
bool parikh_member(const Cfg& g, const std::vector<Integer>& target);

} // namespace ratsub

#endif
