#ifndef RATSUB_REWRITING_HPP
#define RATSUB_REWRITING_HPP

#include <map>
#include <optional>

#include "ratsub/rid.hpp"

namespace ratsub {

/// Monadic rewriting system: rules w → x with |x| ≤ 1 and each rule set
/// Γ_x = { w : (w → x) ∈ Γ } given as a RID language over the system alphabet.
/// Absent entries mean Γ_x = ∅.
class MonadicSystem {
public:
    explicit MonadicSystem(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    const Alphabet& alphabet() const { return alphabet_; }
    const std::map<Label, RidLanguage>& rules() const { return rules_; }

    /// Sets or extends Γ_x (x = kEpsilon for ε-rules); merging is by union.
    void add_rule_set(Label x, RidLanguage gamma);

    /// Free-reduction system over an involutive alphabet:
    /// Γ_ε = ⋃_x { x·inv(x) }.
    static MonadicSystem free_reduction(const InvolutiveAlphabet& a);

private:
    Alphabet alphabet_;
    std::map<Label, RidLanguage> rules_;
};

struct SaturationStats {
    int rounds = 0;
    int edges_added = 0;
};

/// Adds an edge p →x→ q whenever Γ_x meets the p→q path language, to a
/// fixpoint.  The state set of the result equals the state set of m0;
/// L(result) is the set of descendants of L(m0) under the system.
Nfa saturate(const Nfa& m0, const MonadicSystem& g, SaturationStats* stats = nullptr);

/// Saturation restricted to edges leaving the given source states.  Sound as
/// a full saturation when every path from a state outside `sources` avoids
/// `sources` and the sub-automaton on those states is already saturated
/// (e.g. a fresh word-path grafted in front of a saturated automaton).
Nfa saturate_from(const Nfa& m0, const MonadicSystem& g,
                  const std::vector<std::uint32_t>& sources, SaturationStats* stats = nullptr);

bool descendants_contains(const Nfa& m0, const MonadicSystem& g, const Word& w);

/// RID handle for the ancestor set LΓ⁻¹ of the language of l.
RidLanguage ancestors_rid(const RidLanguage& l, const MonadicSystem& g);

} // namespace ratsub

#endif
