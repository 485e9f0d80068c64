#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ratsub/group_file.hpp"
#include "ratsub/regex.hpp"

using namespace ratsub;

namespace {

const char* kFree2 =
    "group F2 {\n"
    "  kind free\n"
    "  generators a b\n"
    "}\n"
    "root F2\n";

const char* kCyclic2 =
    "group C2 {\n"
    "  kind finite\n"
    "  row 0 1\n"
    "  row 1 0\n"
    "  generator s 1\n"
    "}\n"
    "root C2\n";

const char* kBothFree =
    "group P {\n"
    "  kind product\n"
    "  generators a b\n"
    "  partner free\n"
    "  partner_generators c d\n"
    "}\n"
    "root P\n";

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream out(p);
    out << text;
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(RATSUB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 256> buf;
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string first_line(const std::string& s) {
    return s.substr(0, s.find('\n'));
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("group file parsing and root selection") {
    GroupFile gf = parse_group_file(kFree2);
    REQUIRE(gf.is_group);
    CHECK(gf.root == "F2");
    const Alphabet& gens = gf.group->generators.alphabet();
    CHECK(gf.group->member(compile(gens, "a*"), parse_word(gens, "a a")));
    CHECK(!gf.group->member(compile(gens, "a*"), parse_word(gens, "b")));

    // root picks among several definitions
    GroupFile multi = parse_group_file(
        "group F2 {\n  kind free\n  generators a b\n}\n"
        "group Z {\n  kind abelian\n  free_rank 1\n}\nroot Z\n");
    CHECK(multi.root == "Z");
    CHECK(multi.group->generators.alphabet().size() == 2); // e1, e1'
}

TEST_CASE("group file errors") {
    CHECK_THROWS_AS(parse_group_file("group A {\n  kind mystery\n}\nroot A\n"), parse_error);
    CHECK_THROWS_AS(parse_group_file("group A {\n  kind free\n  generators a\n}\n"
                                     "group B {\n  kind abelian\n  free_rank 1\n}\n"),
                    parse_error); // several definitions but no root
    CHECK_THROWS_AS(parse_group_file("root A\n"), parse_error); // undeclared name
    CHECK_THROWS_AS(parse_group_file(std::string(kFree2) + "root F2\n"),
                    parse_error); // duplicate root directive
    CHECK_THROWS_AS(
        parse_group_file("group A {\n  kind hnn\n  base B\n  stable t\n  edge_group B\n}\nroot A\n"),
        parse_error); // base never declared
    CHECK_THROWS_AS(parse_group_file(kBothFree), unsupported_composition);
}

TEST_CASE("validate_group_file reports failed checks without throwing") {
    // non-bijective letter action: both rows send everything to 0
    GroupFile gf = validate_group_file(
        "group B {\n  kind finite\n  row 0 0\n  row 0 0\n  generator s 1\n}\nroot B\n");
    bool failed = false;
    for (const auto& [desc, verdict] : gf.checks) failed = failed || verdict != "pass";
    CHECK(failed);
    CHECK(!gf.group.has_value());

    GroupFile ok = validate_group_file(kCyclic2);
    for (const auto& [desc, verdict] : ok.checks) CHECK(verdict == "pass");
    CHECK(ok.group.has_value());
}

TEST_CASE("check verdicts agree with the library") {
    auto grp = write_temp("cli_f2.grp", kFree2);
    GroupFile gf = parse_group_file(kFree2);
    const Alphabet& gens = gf.group->generators.alphabet();

    std::vector<std::pair<std::string, std::string>> queries{
        {"(a b)*", "a b"}, {"(a b)*", "b"}, {"a* b a'*", "b"}, {"a a'", "1"}};
    for (const auto& [subset, word] : queries) {
        RunResult r = run_cli("check --group " + grp.string() + " --subset \"" + subset +
                              "\" --word \"" + word + "\"");
        CHECK(r.exit_code == 0);
        bool lib = gf.group->member(compile(gens, subset), parse_word(gens, word));
        CHECK(first_line(r.out) == (lib ? "MEMBER" : "NON-MEMBER"));
    }
}

TEST_CASE("check without a subset answers the word problem") {
    auto grp = write_temp("cli_f2.grp", kFree2);
    RunResult yes = run_cli("check --group " + grp.string() + " --word \"a a'\"");
    CHECK(yes.exit_code == 0);
    CHECK(first_line(yes.out) == "MEMBER");
    RunResult no = run_cli("check --group " + grp.string() + " --word \"a\"");
    CHECK(no.exit_code == 0);
    CHECK(first_line(no.out) == "NON-MEMBER");
}

TEST_CASE("order subcommand") {
    auto c2 = write_temp("cli_c2.grp", kCyclic2);
    RunResult two = run_cli("order --group " + c2.string() + " --word s");
    CHECK(two.exit_code == 0);
    CHECK(first_line(two.out) == "ORDER 2");
    RunResult one = run_cli("order --group " + c2.string() + " --word \"s s\"");
    CHECK(first_line(one.out) == "ORDER 1");

    auto f2 = write_temp("cli_f2.grp", kFree2);
    RunResult inf = run_cli("order --group " + f2.string() + " --word a");
    CHECK(inf.exit_code == 0);
    CHECK(first_line(inf.out) == "ORDER INFINITE");
}

TEST_CASE("subgroup subcommand") {
    auto f2 = write_temp("cli_f2.grp", kFree2);
    RunResult in = run_cli("subgroup --group " + f2.string() +
                           " --gens \"a a\" --gens \"a b\" --word \"b' a\"");
    CHECK(in.exit_code == 0);
    CHECK(first_line(in.out) == "MEMBER");
    RunResult out = run_cli("subgroup --group " + f2.string() +
                            " --gens \"a a\" --gens \"a b\" --word a");
    CHECK(out.exit_code == 0);
    CHECK(first_line(out.out) == "NON-MEMBER");
}

TEST_CASE("saturate subcommand emits an automaton") {
    auto f2 = write_temp("cli_f2.grp", kFree2);
    RunResult r = run_cli("saturate --group " + f2.string() + " --subset \"a b b' a'\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("states:") != std::string::npos);
}

TEST_CASE("validate subcommand") {
    auto good = write_temp("cli_c2.grp", kCyclic2);
    RunResult ok = run_cli("validate --group " + good.string());
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("pass") != std::string::npos);

    auto bad = write_temp("cli_bad.grp",
                          "group B {\n  kind finite\n  row 0 0\n  row 0 0\n"
                          "  generator s 1\n}\nroot B\n");
    RunResult fail = run_cli("validate --group " + bad.string());
    CHECK(fail.exit_code == 2);
    CHECK(fail.out.find("fail") != std::string::npos);
}

TEST_CASE("input errors exit with 2") {
    auto f2 = write_temp("cli_f2.grp", kFree2);
    CHECK(run_cli("check --group /nonexistent.grp --word a").exit_code == 2);
    CHECK(run_cli("check --group " + f2.string() + " --subset \"a (\" --word a").exit_code == 2);
    CHECK(run_cli("check --group " + f2.string() + " --subset a* --word zz").exit_code == 2);
    auto both = write_temp("cli_both.grp", kBothFree);
    CHECK(run_cli("check --group " + both.string() + " --word a").exit_code == 2);
}

TEST_CASE("budget exhaustion exits with 3") {
    auto f2 = write_temp("cli_f2.grp", kFree2);
    RunResult r = run_cli("check --group " + f2.string() +
                          " --subset \"a b b' a'\" --word 1 --oracle-budget 2");
    CHECK(r.exit_code == 3);
}

TEST_CASE("hidden oracle-eval subcommand") {
    RunResult r = run_cli("oracle-eval --kind free:1 --word \"0 1 0\"");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "free[0 ]");
    RunResult ab = run_cli("oracle-eval --kind abelian:2 --word \"0 2 0\"");
    CHECK(first_line(ab.out) == "ab(2 1 |)");
}

} // TEST_SUITE
