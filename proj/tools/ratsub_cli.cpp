#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ratsub/automaton_io.hpp"
#include "ratsub/budget.hpp"
#include "ratsub/decider.hpp"
#include "ratsub/group_file.hpp"
#include "ratsub/oracle/rep.hpp"
#include "ratsub/regex.hpp"
#include "ratsub/rewriting.hpp"

namespace {

using namespace ratsub;

struct CommonOpts {
    std::string group_path;
    std::string subset;
    std::string subset_file;
    std::string word;
    std::int64_t oracle_budget = 1000000;
    std::int64_t ilp_budget = 100000;
    bool explain = false;
};

void add_common(CLI::App* cmd, CommonOpts* o, bool needs_subset) {
    cmd->add_option("--group", o->group_path, "group definition file")->required();
    if (needs_subset) {
        cmd->add_option("--subset", o->subset, "rational expression over the generators");
        cmd->add_option("--subset-file", o->subset_file, "automaton file (text format)");
    }
    cmd->add_option("--word", o->word, "word over the generators (1 = empty)")->required();
    cmd->add_option("--oracle-budget", o->oracle_budget,
                    "max rewriting-oracle calls (negative = unlimited)");
    cmd->add_option("--ilp-budget", o->ilp_budget,
                    "max branch-and-bound nodes (negative = unlimited)");
    cmd->add_flag("--explain", o->explain, "print diagnostics after the verdict");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot read file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

GroupFile load(const CommonOpts& o) {
    budget::set_oracle_limit(o.oracle_budget);
    budget::set_ilp_node_limit(o.ilp_budget);
    budget::reset_counters();
    return parse_group_file(slurp(o.group_path));
}

const Alphabet& generators(const GroupFile& gf) {
    return gf.is_group ? gf.group->generators.alphabet() : gf.monoid->generators;
}

Nfa load_subset(const GroupFile& gf, const CommonOpts& o) {
    if (!o.subset.empty() && !o.subset_file.empty())
        throw parse_error("give --subset or --subset-file, not both");
    if (!o.subset.empty()) return compile(generators(gf), o.subset);
    if (!o.subset_file.empty()) return read_nfa_file(o.subset_file);
    throw parse_error("a subset is required (--subset or --subset-file)");
}

void explain(const CommonOpts& o, const GroupFile& gf) {
    if (!o.explain) return;
    std::cout << "# group: " << (gf.is_group ? gf.group->description : gf.monoid->description)
              << "\n";
    for (const auto& [desc, verdict] : gf.checks)
        std::cout << "# check: " << desc << ": " << verdict << "\n";
    std::cout << "# oracle calls: " << budget::oracle_calls() << "\n";
    std::cout << "# ilp nodes: " << budget::ilp_nodes() << "\n";
}

int run_check(const CommonOpts& o, bool wordproblem_default) {
    GroupFile gf = load(o);
    const Alphabet& gens = generators(gf);
    Word w = parse_word(gens, o.word);
    Nfa subset = (o.subset.empty() && o.subset_file.empty() && wordproblem_default)
                     ? nfa_for_words(gens, {Word{}})
                     : load_subset(gf, o);
    bool member =
        gf.is_group ? gf.group->member(subset, w) : gf.monoid->member(subset, w);
    std::cout << (member ? "MEMBER" : "NON-MEMBER") << "\n";
    explain(o, gf);
    return 0;
}

int run_order(const CommonOpts& o) {
    GroupFile gf = load(o);
    if (!gf.is_group) throw parse_error("order queries need a group, not a monoid");
    Word w = parse_word(gf.group->generators.alphabet(), o.word);
    auto n = element_order(*gf.group, w);
    if (n)
        std::cout << "ORDER " << *n << "\n";
    else
        std::cout << "ORDER INFINITE\n";
    explain(o, gf);
    return 0;
}

int run_subgroup(const CommonOpts& o, const std::vector<std::string>& gens_text) {
    GroupFile gf = load(o);
    if (!gf.is_group) throw parse_error("subgroup queries need a group, not a monoid");
    const Alphabet& gens = gf.group->generators.alphabet();
    std::vector<Word> subgens;
    for (const auto& t : gens_text) subgens.push_back(parse_word(gens, t));
    bool member = subgroup_member(*gf.group, subgens, parse_word(gens, o.word));
    std::cout << (member ? "MEMBER" : "NON-MEMBER") << "\n";
    explain(o, gf);
    return 0;
}

int run_saturate(const CommonOpts& o, const std::string& dot_path) {
    budget::set_oracle_limit(o.oracle_budget);
    budget::set_ilp_node_limit(o.ilp_budget);
    budget::reset_counters();
    GroupFile gf = parse_group_file(slurp(o.group_path));
    if (!gf.is_group) throw parse_error("saturation needs a group root");
    Nfa subset = load_subset(gf, o);
    MonadicSystem sys = MonadicSystem::free_reduction(gf.group->generators);
    SaturationStats stats;
    Nfa sat = saturate(subset, sys, &stats);
    if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) throw parse_error("cannot write file: " + dot_path);
        write_dot(out, sat);
    }
    write_nfa(std::cout, sat);
    if (o.explain) {
        std::cout << "# saturation rounds: " << stats.rounds << "\n";
        std::cout << "# edges added: " << stats.edges_added << "\n";
        std::cout << "# oracle calls: " << budget::oracle_calls() << "\n";
    }
    return 0;
}

int run_validate(const std::string& group_path) {
    GroupFile gf = validate_group_file(slurp(group_path));
    bool ok = true;
    for (const auto& [desc, verdict] : gf.checks) {
        std::cout << desc << ": " << verdict << "\n";
        if (verdict != "pass") ok = false;
    }
    return ok ? 0 : 2;
}

oracle::Kind parse_kind(const std::string& text) {
    std::vector<std::string> parts;
    std::istringstream in(text);
    std::string p;
    while (std::getline(in, p, ':')) parts.push_back(p);
    if (parts.empty()) throw parse_error("empty oracle kind");
    auto nums = [&](const std::string& s) {
        std::vector<std::uint32_t> out;
        std::istringstream ns(s);
        std::string t;
        while (std::getline(ns, t, ',')) out.push_back(static_cast<std::uint32_t>(std::stoul(t)));
        return out;
    };
    if (parts[0] == "free") return oracle::FreeKind{std::stoul(parts.at(1))};
    if (parts[0] == "abelian") {
        oracle::AbelianKind k;
        k.free_rank = std::stoul(parts.at(1));
        if (parts.size() > 2) k.torsion = nums(parts[2]);
        return k;
    }
    if (parts[0] == "monoid") return oracle::MonoidKind{std::stoul(parts.at(1))};
    throw parse_error("unknown oracle kind: " + parts[0]);
}

int run_oracle_eval(const std::string& kind_text, const std::string& word_text) {
    oracle::Kind kind = parse_kind(kind_text);
    Word w;
    std::istringstream in(word_text);
    std::string t;
    while (in >> t) w.push_back(static_cast<Letter>(std::stoul(t)));
    std::cout << oracle::show(oracle::evaluate(kind, w)) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rational-subset membership toolkit"};
    app.require_subcommand(1);

    CommonOpts check_o, order_o, subgroup_o, saturate_o;
    std::vector<std::string> subgroup_gens;
    std::string validate_path, dot_path, oracle_kind, oracle_word;

    CLI::App* check = app.add_subcommand("check", "decide rational-subset membership");
    add_common(check, &check_o, true);
    check->get_option("--word"); // word required; subset optional -> word problem

    CLI::App* order = app.add_subcommand("order", "order of the element spelled by a word");
    add_common(order, &order_o, false);

    CLI::App* subgroup = app.add_subcommand("subgroup", "finitely generated subgroup membership");
    add_common(subgroup, &subgroup_o, false);
    subgroup->add_option("--gens", subgroup_gens, "subgroup generator words")->required();

    CLI::App* saturate_cmd = app.add_subcommand("saturate", "free-reduction saturation of a subset");
    saturate_cmd->add_option("--group", saturate_o.group_path, "group definition file")->required();
    saturate_cmd->add_option("--subset", saturate_o.subset, "rational expression");
    saturate_cmd->add_option("--subset-file", saturate_o.subset_file, "automaton file");
    saturate_cmd->add_option("--oracle-budget", saturate_o.oracle_budget, "max oracle calls");
    saturate_cmd->add_option("--ilp-budget", saturate_o.ilp_budget, "max solver nodes");
    saturate_cmd->add_flag("--explain", saturate_o.explain, "print statistics");
    saturate_cmd->add_option("--dot", dot_path, "also write the result in DOT format");

    CLI::App* validate = app.add_subcommand("validate", "run construction-time checks");
    validate->add_option("--group", validate_path, "group definition file")->required();

    CLI::App* oracle_eval = app.add_subcommand("oracle-eval", "evaluate a word in a reference kind");
    oracle_eval->group(""); // hidden
    oracle_eval->add_option("--kind", oracle_kind, "free:N | abelian:R[:m1,m2] | monoid:N")
        ->required();
    oracle_eval->add_option("--word", oracle_word, "space-separated letter indices")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(check_o, true);
        if (order->parsed()) return run_order(order_o);
        if (subgroup->parsed()) return run_subgroup(subgroup_o, subgroup_gens);
        if (saturate_cmd->parsed()) return run_saturate(saturate_o, dot_path);
        if (validate->parsed()) return run_validate(validate_path);
        if (oracle_eval->parsed()) return run_oracle_eval(oracle_kind, oracle_word);
    } catch (const budget_exhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
