#ifndef RATSUB_CFG_HPP
#define RATSUB_CFG_HPP

#include <array>
#include <string>
#include <vector>

#include "ratsub/nfa.hpp"
#include "ratsub/rid.hpp"

namespace ratsub {

/// Context-free grammar over a terminal alphabet.
class Cfg {
public:
    struct Sym {
        bool terminal;
        std::uint32_t id;
        friend auto operator<=>(const Sym&, const Sym&) = default;
    };
    struct Production {
        std::uint32_t lhs;
        std::vector<Sym> rhs;
        friend auto operator<=>(const Production&, const Production&) = default;
    };

    Cfg(Alphabet terminals, std::vector<std::string> nonterminals, std::uint32_t start,
        std::vector<Production> productions);

    const Alphabet& terminals() const { return terminals_; }
    const std::vector<std::string>& nonterminals() const { return nonterminals_; }
    std::uint32_t start() const { return start_; }
    const std::vector<Production>& productions() const { return productions_; }

    static Sym t(std::uint32_t id) { return Sym{true, id}; }
    static Sym nt(std::uint32_t id) { return Sym{false, id}; }

private:
    Alphabet terminals_;
    std::vector<std::string> nonterminals_;
    std::uint32_t start_;
    std::vector<Production> productions_;
};

bool cfg_member(const Cfg& g, const Word& w);
bool cfg_empty(const Cfg& g);

/// Binary normal form of a grammar, compiled once for repeated membership
/// queries (cubic dynamic programming per query).
class CompiledCfg {
public:
    explicit CompiledCfg(const Cfg& g);
    bool member(const Word& w) const;

private:
    std::size_t num_terminals_;
    std::size_t num_nts_;
    std::uint32_t start_;
    std::vector<std::array<std::uint32_t, 3>> binary_; // lhs, first, second
    std::vector<std::pair<std::uint32_t, std::uint32_t>> term_; // lhs, terminal
    bool start_nullable_;
};

/// Bar-Hillel triple construction; L(result) = L(g) ∩ L(m).
Cfg cfg_intersect_nfa(const Cfg& g, const Nfa& m);

/// RID handle for L(g).
RidLanguage rid_cfg(const Cfg& g);

/// Grammar S → ε | S S | x S inv(x) for the words freely reducing to ε.
Cfg free_word_problem_cfg(const InvolutiveAlphabet& a);

/// Nonterminals with no derivation to a terminal word, and nonterminals not
/// reachable from the start, removed.  Language preserved.
Cfg cfg_prune(const Cfg& g);

/// Nullable nonterminals (A ⇒* ε).
std::vector<bool> cfg_nullable(const Cfg& g);

/// Text format:
///   terminals: a b
///   nonterminals: S T
///   start: S
///   prod: S -> a S b
///   prod: S -> 1
Cfg read_cfg(std::istream& in);
void write_cfg(std::ostream& out, const Cfg& g);

} // namespace ratsub

#endif
