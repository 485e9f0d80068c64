#include "ratsub/cfg.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace ratsub {

Cfg::Cfg(Alphabet terminals, std::vector<std::string> nonterminals, std::uint32_t start,
         std::vector<Production> productions)
    : terminals_(std::move(terminals)),
      nonterminals_(std::move(nonterminals)),
      start_(start),
      productions_(std::move(productions)) {
    if (start_ >= nonterminals_.size()) throw validation_error("start symbol not declared");
    std::set<Production> seen;
    for (const auto& p : productions_) {
        if (p.lhs >= nonterminals_.size())
            throw validation_error("production head not declared");
        for (const auto& s : p.rhs) {
            if (s.terminal && s.id >= terminals_.size())
                throw validation_error("undeclared terminal in production");
            if (!s.terminal && s.id >= nonterminals_.size())
                throw validation_error("undeclared nonterminal in production");
        }
        if (!seen.insert(p).second) throw validation_error("duplicate production");
    }
}

std::vector<bool> cfg_nullable(const Cfg& g) {
    std::vector<bool> nullable(g.nonterminals().size(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.productions()) {
            if (nullable[p.lhs]) continue;
            bool all = true;
            for (const auto& s : p.rhs)
                if (s.terminal || !nullable[s.id]) {
                    all = false;
                    break;
                }
            if (all) {
                nullable[p.lhs] = true;
                changed = true;
            }
        }
    }
    return nullable;
}

bool cfg_empty(const Cfg& g) {
    std::vector<bool> productive(g.nonterminals().size(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.productions()) {
            if (productive[p.lhs]) continue;
            bool all = true;
            for (const auto& s : p.rhs)
                if (!s.terminal && !productive[s.id]) {
                    all = false;
                    break;
                }
            if (all) {
                productive[p.lhs] = true;
                changed = true;
            }
        }
    }
    return !productive[g.start()];
}

Cfg cfg_prune(const Cfg& g) {
    std::vector<bool> productive(g.nonterminals().size(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.productions()) {
            if (productive[p.lhs]) continue;
            bool all = true;
            for (const auto& s : p.rhs)
                if (!s.terminal && !productive[s.id]) {
                    all = false;
                    break;
                }
            if (all) {
                productive[p.lhs] = true;
                changed = true;
            }
        }
    }
    // reachability through productive productions only
    std::vector<bool> reach(g.nonterminals().size(), false);
    reach[g.start()] = true;
    changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.productions()) {
            if (!reach[p.lhs] || !productive[p.lhs]) continue;
            bool usable = true;
            for (const auto& s : p.rhs)
                if (!s.terminal && !productive[s.id]) {
                    usable = false;
                    break;
                }
            if (!usable) continue;
            for (const auto& s : p.rhs)
                if (!s.terminal && !reach[s.id]) {
                    reach[s.id] = true;
                    changed = true;
                }
        }
    }
    std::vector<std::uint32_t> remap(g.nonterminals().size(), UINT32_MAX);
    std::vector<std::string> names;
    for (std::uint32_t a = 0; a < g.nonterminals().size(); ++a)
        if ((reach[a] && productive[a]) || a == g.start()) {
            remap[a] = static_cast<std::uint32_t>(names.size());
            names.push_back(g.nonterminals()[a]);
        }
    std::vector<Cfg::Production> prods;
    for (const auto& p : g.productions()) {
        if (remap[p.lhs] == UINT32_MAX || !productive[p.lhs] || !reach[p.lhs]) continue;
        bool usable = true;
        std::vector<Cfg::Sym> rhs;
        for (const auto& s : p.rhs) {
            if (!s.terminal && (remap[s.id] == UINT32_MAX || !productive[s.id])) {
                usable = false;
                break;
            }
            rhs.push_back(s.terminal ? s : Cfg::nt(remap[s.id]));
        }
        if (usable) prods.push_back({remap[p.lhs], std::move(rhs)});
    }
    return Cfg(g.terminals(), std::move(names), remap[g.start()], std::move(prods));
}

namespace {

// Binarized view: every production has rhs length ≤ 2 and terminals appear
// only in rhs of length 1.  Used by both CYK and the Bar-Hillel construction.
Cfg binarize(const Cfg& g) {
    std::vector<std::string> names = g.nonterminals();
    std::vector<Cfg::Production> prods;
    std::map<std::uint32_t, std::uint32_t> term_nt; // terminal -> wrapper nonterminal
    auto wrap_terminal = [&](std::uint32_t t) {
        auto it = term_nt.find(t);
        if (it != term_nt.end()) return it->second;
        std::uint32_t id = static_cast<std::uint32_t>(names.size());
        names.push_back("<t:" + g.terminals().name(t) + ">");
        prods.push_back({id, {Cfg::t(t)}});
        term_nt.emplace(t, id);
        return id;
    };
    int fresh = 0;
    for (const auto& p : g.productions()) {
        if (p.rhs.size() <= 1) {
            prods.push_back(p);
            continue;
        }
        std::vector<Cfg::Sym> syms;
        for (const auto& s : p.rhs)
            syms.push_back(s.terminal ? Cfg::nt(wrap_terminal(s.id)) : s);
        std::uint32_t head = p.lhs;
        for (std::size_t i = 0; i + 2 < syms.size(); ++i) {
            std::uint32_t mid = static_cast<std::uint32_t>(names.size());
            names.push_back("<b" + std::to_string(fresh++) + ">");
            prods.push_back({head, {syms[i], Cfg::nt(mid)}});
            head = mid;
        }
        prods.push_back({head, {syms[syms.size() - 2], syms[syms.size() - 1]}});
    }
    return Cfg(g.terminals(), std::move(names), g.start(), std::move(prods));
}

// Chomsky-ish normal form: A → B C, A → a; plus a flag for ε ∈ L.
struct Cnf {
    std::size_t num_nts;
    std::uint32_t start;
    std::vector<std::array<std::uint32_t, 3>> binary;        // lhs, B, C
    std::vector<std::pair<std::uint32_t, std::uint32_t>> term; // lhs, terminal
    bool start_nullable;
};

Cnf to_cnf(const Cfg& g0) {
    Cfg g = binarize(g0);
    auto nullable = cfg_nullable(g);

    // after DEL: collect binary/unary productions without ε
    std::set<std::array<std::uint32_t, 3>> binary;
    std::set<std::pair<std::uint32_t, std::uint32_t>> term;
    std::set<std::pair<std::uint32_t, std::uint32_t>> unit;
    for (const auto& p : g.productions()) {
        if (p.rhs.empty()) continue;
        if (p.rhs.size() == 1) {
            if (p.rhs[0].terminal)
                term.insert({p.lhs, p.rhs[0].id});
            else
                unit.insert({p.lhs, p.rhs[0].id});
        } else {
            const auto& b = p.rhs[0];
            const auto& c = p.rhs[1];
            // binarize() guarantees both are nonterminals
            binary.insert({p.lhs, b.id, c.id});
            if (nullable[b.id]) unit.insert({p.lhs, c.id});
            if (nullable[c.id]) unit.insert({p.lhs, b.id});
        }
    }
    // unit closure
    bool changed = true;
    while (changed) {
        changed = false;
        std::set<std::pair<std::uint32_t, std::uint32_t>> new_unit;
        for (const auto& [a, b] : unit) {
            for (const auto& [c, d] : unit)
                if (b == c && a != d && !unit.count({a, d})) new_unit.insert({a, d});
        }
        for (const auto& u : new_unit)
            if (unit.insert(u).second) changed = true;
    }
    std::set<std::array<std::uint32_t, 3>> binary2 = binary;
    std::set<std::pair<std::uint32_t, std::uint32_t>> term2 = term;
    for (const auto& [a, b] : unit) {
        for (const auto& bp : binary)
            if (bp[0] == b) binary2.insert({a, bp[1], bp[2]});
        for (const auto& tp : term)
            if (tp.first == b) term2.insert({a, tp.second});
    }
    Cnf out;
    out.num_nts = g.nonterminals().size();
    out.start = g.start();
    out.binary.assign(binary2.begin(), binary2.end());
    out.term.assign(term2.begin(), term2.end());
    out.start_nullable = nullable[g.start()];
    return out;
}

} // namespace

CompiledCfg::CompiledCfg(const Cfg& g) {
    Cnf cnf = to_cnf(g);
    num_terminals_ = g.terminals().size();
    num_nts_ = cnf.num_nts;
    start_ = cnf.start;
    binary_ = std::move(cnf.binary);
    term_ = std::move(cnf.term);
    start_nullable_ = cnf.start_nullable;
}

bool CompiledCfg::member(const Word& w) const {
    for (Letter x : w)
        if (x >= num_terminals_)
            throw alphabet_mismatch("cfg_member: word letter outside the terminal alphabet");
    if (w.empty()) return start_nullable_;
    const std::size_t n = w.size();
    // table[i][j] = set of nonterminals deriving w[i..i+j-1]
    std::vector<std::vector<std::vector<bool>>> table(
        n, std::vector<std::vector<bool>>(n + 1, std::vector<bool>(num_nts_, false)));
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [a, t] : term_)
            if (t == w[i]) table[i][1][a] = true;
    for (std::size_t len = 2; len <= n; ++len)
        for (std::size_t i = 0; i + len <= n; ++i)
            for (std::size_t k = 1; k < len; ++k)
                for (const auto& bp : binary_)
                    if (!table[i][len][bp[0]] && table[i][k][bp[1]] && table[i + k][len - k][bp[2]])
                        table[i][len][bp[0]] = true;
    return table[0][n][start_];
}

bool cfg_member(const Cfg& g, const Word& w) { return CompiledCfg(g).member(w); }

Cfg cfg_intersect_nfa(const Cfg& g0, const Nfa& m) {
    if (!(g0.terminals() == m.alphabet()))
        throw alphabet_mismatch("cfg_intersect_nfa: alphabets differ");
    Cfg g = binarize(g0);
    const std::uint32_t n = m.num_states();

    // epsilon-free view of m
    std::vector<std::set<std::uint32_t>> closure(n);
    for (std::uint32_t s = 0; s < n; ++s) closure[s] = epsilon_closure(m, {s});
    std::set<Edge> letter_edges;
    for (std::uint32_t s = 0; s < n; ++s)
        for (auto r : closure[s])
            for (const auto& e : m.edges())
                if (e.src == r && e.label != kEpsilon)
                    letter_edges.insert(Edge{s, e.label, e.dst});
    std::set<std::uint32_t> finals;
    for (std::uint32_t s = 0; s < n; ++s)
        for (auto r : closure[s])
            if (m.finals().count(r)) {
                finals.insert(s);
                break;
            }

    auto triple = [&](std::uint32_t p, std::uint32_t a, std::uint32_t q) {
        return (p * g.nonterminals().size() + a) * n + q;
    };
    std::size_t base = static_cast<std::size_t>(n) * g.nonterminals().size() * n;
    std::vector<std::string> names(base + 1);
    for (std::uint32_t p = 0; p < n; ++p)
        for (std::uint32_t a = 0; a < g.nonterminals().size(); ++a)
            for (std::uint32_t q = 0; q < n; ++q)
                names[triple(p, a, q)] = "<" + std::to_string(p) + "," + g.nonterminals()[a] +
                                         "," + std::to_string(q) + ">";
    std::uint32_t start = static_cast<std::uint32_t>(base);
    names[start] = "<start>";

    std::vector<Cfg::Production> prods;
    for (auto f : finals)
        prods.push_back({start, {Cfg::nt(triple(m.initial(), g.start(), f))}});
    for (const auto& p : g.productions()) {
        if (p.rhs.empty()) {
            for (std::uint32_t s = 0; s < n; ++s)
                prods.push_back({static_cast<std::uint32_t>(triple(s, p.lhs, s)), {}});
        } else if (p.rhs.size() == 1 && p.rhs[0].terminal) {
            for (const auto& e : letter_edges)
                if (e.label == static_cast<Label>(p.rhs[0].id))
                    prods.push_back({static_cast<std::uint32_t>(triple(e.src, p.lhs, e.dst)),
                                     {Cfg::t(p.rhs[0].id)}});
        } else if (p.rhs.size() == 1) {
            for (std::uint32_t s = 0; s < n; ++s)
                for (std::uint32_t q = 0; q < n; ++q)
                    prods.push_back({static_cast<std::uint32_t>(triple(s, p.lhs, q)),
                                     {Cfg::nt(triple(s, p.rhs[0].id, q))}});
        } else {
            for (std::uint32_t s = 0; s < n; ++s)
                for (std::uint32_t r = 0; r < n; ++r)
                    for (std::uint32_t q = 0; q < n; ++q)
                        prods.push_back({static_cast<std::uint32_t>(triple(s, p.lhs, q)),
                                         {Cfg::nt(triple(s, p.rhs[0].id, r)),
                                          Cfg::nt(triple(r, p.rhs[1].id, q))}});
        }
    }
    std::sort(prods.begin(), prods.end());
    prods.erase(std::unique(prods.begin(), prods.end()), prods.end());
    return cfg_prune(Cfg(g.terminals(), std::move(names), start, std::move(prods)));
}

RidLanguage rid_cfg(const Cfg& g) {
    return RidLanguage(g.terminals(),
                       [g](const Nfa& r) { return !cfg_empty(cfg_intersect_nfa(g, r)); },
                       "context-free");
}

Cfg free_word_problem_cfg(const InvolutiveAlphabet& a) {
    if (!a.fixed_point_free())
        throw validation_error("free word problem grammar needs a fixed-point-free involution");
    std::vector<Cfg::Production> prods;
    prods.push_back({0, {}});
    prods.push_back({0, {Cfg::nt(0), Cfg::nt(0)}});
    for (Letter x = 0; x < a.size(); ++x)
        prods.push_back({0, {Cfg::t(x), Cfg::nt(0), Cfg::t(a.inverse(x))}});
    return Cfg(a.alphabet(), {"S"}, 0, std::move(prods));
}

Cfg read_cfg(std::istream& in) {
    Alphabet terminals;
    std::vector<std::string> nts;
    std::map<std::string, std::uint32_t> nt_index;
    std::string start_name;
    struct RawProd {
        std::string lhs;
        std::vector<std::string> rhs;
    };
    std::vector<RawProd> raw;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "terminals:") {
            std::string t;
            while (ls >> t) terminals.add(t);
        } else if (head == "nonterminals:") {
            std::string t;
            while (ls >> t) {
                if (nt_index.count(t))
                    throw parse_error("grammar line " + std::to_string(lineno) +
                                      ": duplicate nonterminal " + t);
                nt_index[t] = static_cast<std::uint32_t>(nts.size());
                nts.push_back(t);
            }
        } else if (head == "start:") {
            ls >> start_name;
        } else if (head == "prod:") {
            RawProd p;
            std::string tok;
            ls >> p.lhs >> tok;
            if (tok != "->")
                throw parse_error("grammar line " + std::to_string(lineno) + ": expected '->'");
            while (ls >> tok) p.rhs.push_back(tok);
            raw.push_back(std::move(p));
        } else {
            throw parse_error("grammar line " + std::to_string(lineno) +
                              ": unknown directive '" + head + "'");
        }
    }
    if (!nt_index.count(start_name)) throw parse_error("grammar: start symbol not declared");
    std::vector<Cfg::Production> prods;
    for (const auto& p : raw) {
        auto it = nt_index.find(p.lhs);
        if (it == nt_index.end())
            throw parse_error("grammar: production head '" + p.lhs + "' not declared");
        Cfg::Production out{it->second, {}};
        if (!(p.rhs.size() == 1 && p.rhs[0] == "1")) {
            for (const auto& s : p.rhs) {
                auto nt = nt_index.find(s);
                if (nt != nt_index.end()) {
                    out.rhs.push_back(Cfg::nt(nt->second));
                } else {
                    out.rhs.push_back(Cfg::t(terminals.require(s)));
                }
            }
        }
        prods.push_back(std::move(out));
    }
    return Cfg(std::move(terminals), std::move(nts), nt_index[start_name], std::move(prods));
}

void write_cfg(std::ostream& out, const Cfg& g) {
    out << "terminals:";
    for (const auto& t : g.terminals().names()) out << ' ' << t;
    out << "\nnonterminals:";
    for (const auto& n : g.nonterminals()) out << ' ' << n;
    out << "\nstart: " << g.nonterminals()[g.start()] << '\n';
    for (const auto& p : g.productions()) {
        out << "prod: " << g.nonterminals()[p.lhs] << " ->";
        if (p.rhs.empty()) {
            out << " 1";
        } else {
            for (const auto& s : p.rhs)
                out << ' ' << (s.terminal ? g.terminals().name(s.id) : g.nonterminals()[s.id]);
        }
        out << '\n';
    }
}

} // namespace ratsub
