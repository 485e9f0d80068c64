#ifndef RATSUB_REGEX_HPP
#define RATSUB_REGEX_HPP

#include <memory>
#include <string>
#include <vector>

#include "ratsub/nfa.hpp"

namespace ratsub {

/// Abstract syntax of rational expressions: letters, `1` (the empty word),
/// juxtaposition or `.` for concatenation, `|` for union, `*` for star,
/// parentheses for grouping.
struct RationalExpression {
    enum class Kind { Letter, Epsilon, Concat, Union, Star };
    Kind kind;
    Letter letter = 0;                                          // Kind::Letter
    std::vector<std::shared_ptr<RationalExpression>> children;  // Concat/Union/Star

    static std::shared_ptr<RationalExpression> parse(const Alphabet& a, const std::string& text);
};

Nfa compile(const RationalExpression& e, const Alphabet& a);
Nfa compile(const Alphabet& a, const std::string& expression);

} // namespace ratsub

#endif
