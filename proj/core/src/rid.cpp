#include "ratsub/rid.hpp"

#include "ratsub/budget.hpp"
#include "ratsub/errors.hpp"

namespace ratsub {

namespace budget {

namespace {
std::atomic<std::int64_t> g_oracle_limit{-1};
std::atomic<std::int64_t> g_ilp_limit{-1};
std::atomic<std::int64_t> g_oracle_calls{0};
std::atomic<std::int64_t> g_ilp_nodes{0};
} // namespace

void set_oracle_limit(std::int64_t limit) { g_oracle_limit = limit; }
void set_ilp_node_limit(std::int64_t limit) { g_ilp_limit = limit; }
void reset_counters() {
    g_oracle_calls = 0;
    g_ilp_nodes = 0;
}
std::int64_t oracle_calls() { return g_oracle_calls; }
std::int64_t ilp_nodes() { return g_ilp_nodes; }

void tick_oracle() {
    auto used = ++g_oracle_calls;
    auto limit = g_oracle_limit.load();
    if (limit >= 0 && used > limit)
        throw budget_exhausted("oracle-call budget exhausted (" + std::to_string(limit) + ")");
}

void tick_ilp_node() {
    auto used = ++g_ilp_nodes;
    auto limit = g_ilp_limit.load();
    if (limit >= 0 && used > limit)
        throw budget_exhausted("ilp node budget exhausted (" + std::to_string(limit) + ")");
}

} // namespace budget

RidLanguage::RidLanguage(Alphabet alphabet, Oracle oracle, std::string description)
    : alphabet_(std::move(alphabet)),
      oracle_(std::move(oracle)),
      description_(std::move(description)) {}

bool RidLanguage::intersects(const Nfa& query) const {
    if (!(query.alphabet() == alphabet_))
        throw alphabet_mismatch("RID query over a different alphabet than the language (" +
                                description_ + ")");
    return oracle_(query);
}

RidLanguage rid_regular(const Nfa& m) {
    return RidLanguage(m.alphabet(),
                       [m](const Nfa& r) { return !is_empty(intersect(r, m)); },
                       "regular");
}

RidLanguage rid_singleton_epsilon(const Alphabet& a) {
    return RidLanguage(a, [](const Nfa& r) { return accepts(r, Word{}); }, "{epsilon}");
}

RidLanguage rid_union(const RidLanguage& l1, const RidLanguage& l2) {
    if (!(l1.alphabet() == l2.alphabet()))
        throw alphabet_mismatch("rid_union over different alphabets");
    return RidLanguage(
        l1.alphabet(),
        [l1, l2](const Nfa& r) { return l1.intersects(r) || l2.intersects(r); },
        "union(" + l1.description() + ", " + l2.description() + ")");
}

RidLanguage rid_transduction(const RidLanguage& l, const Transducer& t) {
    if (!(l.alphabet() == t.input()))
        throw alphabet_mismatch("rid_transduction: language alphabet differs from input alphabet");
    return RidLanguage(
        t.output(),
        [l, t](const Nfa& q) { return l.intersects(transducer_preimage(t, q)); },
        "transduction(" + l.description() + ")");
}

RidLanguage rid_relabel_inverse(const RidLanguage& l, const Morphism& h) {
    if (!(h.target == l.alphabet()))
        throw alphabet_mismatch("rid_relabel_inverse: morphism target differs from alphabet");
    return RidLanguage(h.source,
                       [l, h](const Nfa& r) { return l.intersects(relabel(r, h)); },
                       "inverse-morphism(" + l.description() + ")");
}

RidLanguage rid_translate(const RidLanguage& l, const Word& left, const Word& right) {
    return RidLanguage(
        l.alphabet(),
        [l, left, right](const Nfa& r) { return l.intersects(quotient(r, left, right)); },
        "translate(" + l.description() + ")");
}

} // namespace ratsub
