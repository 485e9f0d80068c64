#ifndef RATSUB_AUTOMATON_IO_HPP
#define RATSUB_AUTOMATON_IO_HPP

#include <iosfwd>
#include <string>

#include "ratsub/nfa.hpp"

namespace ratsub {

/// Text format, one item per line:
///   alphabet: a a' b b'
///   states: N
///   initial: i
///   finals: i j k
///   edge: src label dst       (label is a letter name or `1` for epsilon)
Nfa read_nfa(std::istream& in);
Nfa read_nfa_file(const std::string& path);
void write_nfa(std::ostream& out, const Nfa& m);

void write_dot(std::ostream& out, const Nfa& m);

} // namespace ratsub

#endif
