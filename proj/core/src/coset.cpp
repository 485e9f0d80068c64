#include "ratsub/coset.hpp"

namespace ratsub {

CosetTable::CosetTable(InvolutiveAlphabet sub_gens, InvolutiveAlphabet over_gens,
                       std::vector<Word> representatives,
                       std::vector<std::vector<std::uint32_t>> action,
                       std::vector<std::vector<Word>> rewrite)
    : sub_(std::move(sub_gens)),
      over_(std::move(over_gens)),
      reps_(std::move(representatives)),
      action_(std::move(action)),
      rewrite_(std::move(rewrite)) {
    const std::size_t n = reps_.size();
    if (n == 0) throw validation_error("coset table needs at least one coset");
    if (!reps_[0].empty())
        throw validation_error("first coset representative must be the empty word");
    for (const auto& g : reps_)
        for (Letter x : g)
            if (x >= over_.size())
                throw validation_error("coset representative uses an unknown letter");
    if (action_.size() != n || rewrite_.size() != n)
        throw validation_error("coset table row count mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (action_[i].size() != over_.size() || rewrite_[i].size() != over_.size())
            throw validation_error("coset table column count mismatch");
        for (Letter x = 0; x < over_.size(); ++x) {
            if (action_[i][x] >= n) throw validation_error("coset action target out of range");
            for (Letter y : rewrite_[i][x])
                if (y >= sub_.size())
                    throw validation_error("coset rewrite word uses an unknown letter");
        }
    }
    for (Letter x = 0; x < over_.size(); ++x) {
        std::vector<bool> hit(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint32_t j = action_[i][x];
            if (hit[j]) throw validation_error("coset action is not a bijection");
            hit[j] = true;
            if (action_[j][over_.inverse(x)] != i)
                throw validation_error("coset action of an inverse letter is not the inverse map");
        }
    }
}

void CosetTable::check_coherence(const GroupDecider& sub) const {
    Nfa identity_only = nfa_for_words(sub.generators.alphabet(), {Word{}});
    for (std::uint32_t i = 0; i < index(); ++i) {
        for (Letter x = 0; x < over_.size(); ++x) {
            std::uint32_t j = action_[i][x];
            Word loop = rewrite_[i][x];
            const Word& back = rewrite_[j][over_.inverse(x)];
            loop.insert(loop.end(), back.begin(), back.end());
            if (!sub.member(identity_only, loop))
                throw validation_error("coset table incoherent at coset " + std::to_string(i) +
                                       ", letter " + over_.alphabet().name(x));
        }
    }
}

Transducer coset_transducer(const CosetTable& t) {
    std::uint32_t next = t.index();
    std::set<TransducerEdge> edges;
    for (std::uint32_t i = 0; i < t.index(); ++i) {
        for (Letter x = 0; x < t.over_gens().size(); ++x) {
            const Word& in = t.rewrite(i, x);
            std::uint32_t j = t.action(i, x);
            if (in.empty()) {
                edges.insert({i, kEpsilon, Word{x}, j});
            } else {
                // read w_{i,x} letter by letter, write x on the last step
                std::uint32_t prev = i;
                for (std::size_t k = 0; k < in.size(); ++k) {
                    std::uint32_t dst = (k + 1 == in.size()) ? j : next++;
                    Word out = (k + 1 == in.size()) ? Word{x} : Word{};
                    edges.insert({prev, static_cast<Label>(in[k]), std::move(out), dst});
                    prev = dst;
                }
            }
        }
    }
    return Transducer(t.sub_gens().alphabet(), t.over_gens().alphabet(), next, 0, {0},
                      std::move(edges));
}

GroupDecider overgroup_decider(const GroupDecider& sub, const CosetTable& t) {
    if (!(sub.generators == t.sub_gens()))
        throw alphabet_mismatch("overgroup_decider: subgroup generators differ from the table");
    t.check_coherence(sub);
    RidLanguage wp_over = rid_transduction(wp_rid(sub), coset_transducer(t));
    GroupDecider d = decider_from_wp_rid(wp_over, t.over_gens());
    d.description = "overgroup(" + sub.description + ", index " + std::to_string(t.index()) + ")";
    return d;
}

} // namespace ratsub
