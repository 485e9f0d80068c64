#ifndef RATSUB_ORACLE_STALLINGS_HPP
#define RATSUB_ORACLE_STALLINGS_HPP

#include "ratsub/words.hpp"

namespace ratsub::oracle {

/// Membership of w in the subgroup of the free group of the given rank
/// generated by subgens, by graph folding.  Letters: generator i is 2i, its
/// inverse 2i+1.
bool stallings_member(std::size_t rank, const std::vector<Word>& subgens, const Word& w);

} // namespace ratsub::oracle

#endif
