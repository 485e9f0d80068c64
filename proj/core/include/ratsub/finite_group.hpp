#ifndef RATSUB_FINITE_GROUP_HPP
#define RATSUB_FINITE_GROUP_HPP

#include "ratsub/decider.hpp"

namespace ratsub {

/// Finite group by multiplication table; element 0 is the identity.  The
/// group laws are verified on the full table at construction.
class FiniteGroup {
public:
    explicit FiniteGroup(std::vector<std::vector<std::uint32_t>> table);

    std::uint32_t order() const { return static_cast<std::uint32_t>(table_.size()); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_.at(a).at(b); }
    std::uint32_t inv(std::uint32_t a) const { return inverse_.at(a); }

    std::uint32_t eval(const std::vector<std::uint32_t>& letter_elem, const Word& w) const;

    static FiniteGroup cyclic(std::uint32_t n);
    static FiniteGroup trivial() { return cyclic(1); }

private:
    std::vector<std::vector<std::uint32_t>> table_;
    std::vector<std::uint32_t> inverse_;
};

/// letter_elem assigns an element to every letter of gens; inverse letters
/// must be assigned inverse elements, and the image must generate the group.
GroupDecider finite_group_decider(const FiniteGroup& g, const InvolutiveAlphabet& gens,
                                  const std::vector<std::uint32_t>& letter_elem);

} // namespace ratsub

#endif
