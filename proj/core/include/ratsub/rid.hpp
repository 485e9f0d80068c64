#ifndef RATSUB_RID_HPP
#define RATSUB_RID_HPP

#include <functional>
#include <string>

#include "ratsub/nfa.hpp"
#include "ratsub/transducer.hpp"

namespace ratsub {

/// A language L presented as an oracle for its regular-intersection problem:
/// given an automaton R, does L(R) intersect L?  Handles are immutable and
/// reentrant; the oracle must answer as a pure function of L(R).
class RidLanguage {
public:
    using Oracle = std::function<bool(const Nfa&)>;

    RidLanguage(Alphabet alphabet, Oracle oracle, std::string description);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::string& description() const { return description_; }

    /// Answers "does L(query) intersect this language?".
    bool intersects(const Nfa& query) const;

private:
    Alphabet alphabet_;
    Oracle oracle_;
    std::string description_;
};

/// RID handle for the regular language L(m).
RidLanguage rid_regular(const Nfa& m);

/// RID handle for {ε}.
RidLanguage rid_singleton_epsilon(const Alphabet& a);

RidLanguage rid_union(const RidLanguage& l1, const RidLanguage& l2);

/// Image language L·t over t's output alphabet.
RidLanguage rid_transduction(const RidLanguage& l, const Transducer& t);

/// Inverse image h⁻¹(L) over h's source alphabet.
RidLanguage rid_relabel_inverse(const RidLanguage& l, const Morphism& h);

/// left·L·right.
RidLanguage rid_translate(const RidLanguage& l, const Word& left, const Word& right);

} // namespace ratsub

#endif
