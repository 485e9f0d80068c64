#ifndef RATSUB_COSET_HPP
#define RATSUB_COSET_HPP

#include "ratsub/decider.hpp"
#include "ratsub/transducer.hpp"

namespace ratsub {

/// Right-coset structure of a finite-index subgroup H ≤ G: representatives
/// g_1..g_n (words over the G generators X, g_1 = ε), the right action of X
/// letters on cosets, and rewrite words w_{i,x} over the H generators Y with
/// g_i·x = w_{i,x}·g_j for j = action(i,x).  Cosets are indexed from 0.
class CosetTable {
public:
    CosetTable(InvolutiveAlphabet sub_gens, InvolutiveAlphabet over_gens,
               std::vector<Word> representatives,
               std::vector<std::vector<std::uint32_t>> action, // [coset][letter]
               std::vector<std::vector<Word>> rewrite);        // [coset][letter], over Y

    const InvolutiveAlphabet& sub_gens() const { return sub_; }
    const InvolutiveAlphabet& over_gens() const { return over_; }
    std::uint32_t index() const { return static_cast<std::uint32_t>(reps_.size()); }
    const std::vector<Word>& representatives() const { return reps_; }
    std::uint32_t action(std::uint32_t coset, Letter x) const { return action_.at(coset).at(x); }
    const Word& rewrite(std::uint32_t coset, Letter x) const { return rewrite_.at(coset).at(x); }

    /// Checks w_{i,x}·w_{action(i,x),inv(x)} =_H 1 for all entries, using the
    /// subgroup's own word problem.
    void check_coherence(const GroupDecider& sub) const;

private:
    InvolutiveAlphabet sub_;
    InvolutiveAlphabet over_;
    std::vector<Word> reps_;
    std::vector<std::vector<std::uint32_t>> action_;
    std::vector<std::vector<Word>> rewrite_;
};

/// Rational relation σ ⊆ Y* × X* with W_X(G) = W_Y(H)σ: states are cosets,
/// initial = final = the trivial coset, and each (coset, letter) entry yields
/// an edge reading w_{i,x} and writing x.
Transducer coset_transducer(const CosetTable& t);

/// Rational-subset decider for G from one for the finite-index subgroup H.
GroupDecider overgroup_decider(const GroupDecider& sub, const CosetTable& t);

} // namespace ratsub

#endif
