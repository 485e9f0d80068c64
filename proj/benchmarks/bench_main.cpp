#include <benchmark/benchmark.h>

#include <random>

#include "ratsub/free_group.hpp"
#include "ratsub/ilp.hpp"
#include "ratsub/nfa.hpp"
#include "ratsub/rewriting.hpp"

namespace {

using namespace ratsub;

Nfa random_nfa(const Alphabet& a, std::uint32_t states, std::size_t edges, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> st(0, states - 1);
    std::uniform_int_distribution<std::size_t> lab(0, a.size() - 1);
    std::set<Edge> es;
    while (es.size() < edges)
        es.insert({st(rng), static_cast<Label>(lab(rng)), st(rng)});
    return Nfa(a, states, 0, {states - 1}, es);
}

void bm_nfa_product(benchmark::State& state) {
    InvolutiveAlphabet f2 = InvolutiveAlphabet::with_inverses({"a", "b"});
    Nfa m1 = random_nfa(f2.alphabet(), 12, 40, 1);
    Nfa m2 = random_nfa(f2.alphabet(), 12, 40, 2);
    for (auto _ : state) benchmark::DoNotOptimize(intersect(m1, m2));
}
BENCHMARK(bm_nfa_product);

void bm_saturation(benchmark::State& state) {
    InvolutiveAlphabet f2 = InvolutiveAlphabet::with_inverses({"a", "b"});
    MonadicSystem sys = MonadicSystem::free_reduction(f2);
    Nfa m = random_nfa(f2.alphabet(), 8, 24, 3);
    for (auto _ : state) benchmark::DoNotOptimize(saturate(m, sys));
}
BENCHMARK(bm_saturation);

void bm_ilp(benchmark::State& state) {
    IlpInstance inst;
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int i = 0; i < 8; ++i) inst.add_var();
    for (int r = 0; r < 6; ++r) {
        IlpRow row;
        for (std::uint32_t v = 0; v < 8; ++v) row.coeffs.push_back({v, Rational(c(rng))});
        row.rel = IlpRow::Rel::eq;
        row.rhs = Rational(c(rng));
        inst.add_row(std::move(row));
    }
    for (auto _ : state) benchmark::DoNotOptimize(ilp_feasible(inst));
}
BENCHMARK(bm_ilp);

} // namespace

BENCHMARK_MAIN();
