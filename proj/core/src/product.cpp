#include "ratsub/product.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "ratsub/abelian.hpp"
#include "ratsub/fautomaton.hpp"
#include "ratsub/parikh.hpp"

namespace ratsub {

namespace {

std::string word_key(const Word& w) {
    std::ostringstream out;
    for (Letter x : w) out << x << ',';
    return out.str();
}

/// Grammar of the partner words m with (g, m) ∈ [R]: shift by g⁻¹, view the
/// automaton with free letters as group labels and partner letters as
/// outputs, and keep the outputs of the group-trivial accepting paths.
Cfg output_grammar(const InvolutiveAlphabet& free_alpha, const Alphabet& partner_alpha,
                   const Nfa& r, const Word& g) {
    const std::size_t free_size = free_alpha.size();
    Nfa shifted = trim(left_translate(invert_word(free_alpha, g), r));
    std::vector<FAutomaton::FEdge> fedges;
    for (const auto& e : shifted.edges()) {
        if (e.label == kEpsilon)
            fedges.push_back({e.src, {}, {}, e.dst});
        else if (static_cast<std::size_t>(e.label) < free_size)
            fedges.push_back({e.src, Word{static_cast<Letter>(e.label)}, {}, e.dst});
        else
            fedges.push_back(
                {e.src, {}, Word{static_cast<Letter>(e.label - free_size)}, e.dst});
    }
    FAutomaton fa(free_alpha, partner_alpha, shifted.num_states(), shifted.initial(),
                  shifted.finals(), std::move(fedges));
    return fautomaton_to_cfg(fa);
}

void split_word(std::size_t free_size, const Word& w, Word* free_part, Word* partner_part) {
    for (Letter x : w) {
        if (x < free_size)
            free_part->push_back(x);
        else
            partner_part->push_back(x - static_cast<Letter>(free_size));
    }
}

} // namespace

GroupDecider product_group_decider(const ProductSpec& spec) {
    if (spec.partner != ProductSpec::Partner::abelian)
        throw validation_error("product_group_decider: partner must be an abelian group");
    for (auto m : spec.torsion)
        if (m < 2) throw validation_error("torsion orders must be ≥ 2");
    const std::uint32_t rank = spec.abelian_rank;
    const std::uint32_t nt = static_cast<std::uint32_t>(spec.torsion.size());
    std::vector<std::string> partner_base;
    for (std::uint32_t i = 1; i <= rank; ++i) partner_base.push_back("e" + std::to_string(i));
    for (std::uint32_t j = 1; j <= nt; ++j) partner_base.push_back("f" + std::to_string(j));
    InvolutiveAlphabet partner = InvolutiveAlphabet::with_inverses(partner_base);

    const std::size_t free_size = spec.free_part.size();
    std::vector<std::string> names = spec.free_part.alphabet().names();
    std::vector<Letter> inv;
    for (Letter x = 0; x < free_size; ++x) inv.push_back(spec.free_part.inverse(x));
    for (Letter x = 0; x < partner.size(); ++x) {
        names.push_back(partner.alphabet().name(x));
        inv.push_back(static_cast<Letter>(free_size) + partner.inverse(x));
    }
    InvolutiveAlphabet combined(Alphabet(names), inv);
    const std::size_t dim = rank + nt;
    std::vector<std::uint32_t> torsion = spec.torsion;

    auto canonical = [=](const Word& partner_word, const Word& free_word) {
        std::vector<Integer> t(dim, 0);
        for (Letter x : partner_word) t[x / 2] += (x % 2 == 0) ? 1 : -1;
        for (std::size_t j = 0; j < nt; ++j) {
            Integer m(torsion[j]);
            t[rank + j] = ((t[rank + j] % m) + m) % m;
        }
        (void)free_word;
        return t;
    };

    if (free_size <= 2) {
        // F₀ or F₁ make the whole group abelian: reuse the walk encoding
        GroupDecider inner =
            abelian_group_decider(free_size / 2 + rank, torsion);
        InvolutiveAlphabet inner_gens = inner.generators;
        struct Cache {
            std::mutex mu;
            std::map<std::string, bool> answers;
        };
        auto cache = std::make_shared<Cache>();
        return GroupDecider{
            combined,
            [=](const Nfa& r, const Word& w) {
                std::vector<Integer> t(inner_gens.size() / 2, 0);
                for (Letter x : w) t[x / 2] += (x % 2 == 0) ? 1 : -1;
                std::uint32_t off = static_cast<std::uint32_t>(free_size / 2 + rank);
                for (std::size_t j = 0; j < torsion.size(); ++j) {
                    Integer m(torsion[j]);
                    t[off + j] = ((t[off + j] % m) + m) % m;
                }
                std::ostringstream key;
                key << r.key() << '#';
                for (const auto& c : t) key << c << ',';
                {
                    std::lock_guard lock(cache->mu);
                    auto it = cache->answers.find(key.str());
                    if (it != cache->answers.end()) return it->second;
                }
                Nfa recoded(inner_gens.alphabet(), r.num_states(), r.initial(), r.finals(),
                            r.edges());
                Word canonical_word;
                for (std::uint32_t c = 0; c < t.size(); ++c) {
                    Integer v = t[c];
                    Letter pos = 2 * c, neg = 2 * c + 1;
                    for (Integer i = 0; i < boost::multiprecision::abs(v); ++i)
                        canonical_word.push_back(v > 0 ? pos : neg);
                }
                bool ans = inner.member(recoded, canonical_word);
                std::lock_guard lock(cache->mu);
                cache->answers.emplace(key.str(), ans);
                return ans;
            },
            "product(free " + std::to_string(free_size / 2) + ", abelian)"};
    }

    struct Cache {
        std::mutex mu;
        std::map<std::string, std::shared_ptr<ParikhMembership>> grammars;
        std::map<std::string, bool> answers;
    };
    auto cache = std::make_shared<Cache>();
    InvolutiveAlphabet free_alpha = spec.free_part;
    Alphabet partner_alpha = partner.alphabet();

    return GroupDecider{
        combined,
        [=](const Nfa& r, const Word& w) {
            Word wf, wp;
            split_word(free_size, w, &wf, &wp);
            Word g = free_reduce(free_alpha, wf);
            std::vector<Integer> t = canonical(wp, g);
            std::string gkey = r.key() + "#" + word_key(g);
            std::ostringstream akey;
            akey << gkey << '#';
            for (const auto& c : t) akey << c << ',';
            std::shared_ptr<ParikhMembership> pm;
            {
                std::lock_guard lock(cache->mu);
                auto hit = cache->answers.find(akey.str());
                if (hit != cache->answers.end()) return hit->second;
                auto it = cache->grammars.find(gkey);
                if (it != cache->grammars.end()) pm = it->second;
            }
            if (!pm) {
                pm = std::make_shared<ParikhMembership>(
                    output_grammar(free_alpha, partner_alpha, r, g));
                std::lock_guard lock(cache->mu);
                cache->grammars.emplace(gkey, pm);
            }
            std::vector<ParikhMembership::CountRow> rows;
            for (std::uint32_t i = 0; i < rank; ++i)
                rows.push_back({{{2 * i, Rational(1)}, {2 * i + 1, Rational(-1)}},
                                IlpRow::Rel::eq,
                                Rational(t[i]),
                                0});
            for (std::uint32_t j = 0; j < nt; ++j)
                rows.push_back({{{2 * (rank + j), Rational(1)}, {2 * (rank + j) + 1, Rational(-1)}},
                                IlpRow::Rel::eq,
                                Rational(t[rank + j]),
                                Integer(torsion[j])});
            bool ans = pm->satisfiable(rows);
            std::lock_guard lock(cache->mu);
            cache->answers.emplace(akey.str(), ans);
            return ans;
        },
        "product(free " + std::to_string(free_size / 2) + ", abelian)"};
}

MonoidDecider product_monoid_decider(const ProductSpec& spec) {
    const std::size_t free_size = spec.free_part.size();
    Alphabet partner_alpha;
    if (spec.partner == ProductSpec::Partner::free_monoid) {
        partner_alpha = spec.monoid_letters;
    } else if (spec.partner == ProductSpec::Partner::free_commutative_monoid) {
        for (std::uint32_t i = 1; i <= spec.commutative_rank; ++i)
            partner_alpha.add("x" + std::to_string(i));
    } else {
        throw validation_error("product_monoid_decider: partner must be a monoid kind");
    }
    std::vector<std::string> names = spec.free_part.alphabet().names();
    for (const auto& n : partner_alpha.names()) names.push_back(n);
    Alphabet combined(names);
    InvolutiveAlphabet free_alpha = spec.free_part;
    bool commutative = spec.partner == ProductSpec::Partner::free_commutative_monoid;

    struct Cache {
        std::mutex mu;
        std::map<std::string, std::shared_ptr<CompiledCfg>> compiled;
        std::map<std::string, std::shared_ptr<ParikhMembership>> grammars;
        std::map<std::string, bool> answers;
    };
    auto cache = std::make_shared<Cache>();

    return MonoidDecider{
        combined,
        [=](const Nfa& r, const Word& w) {
            Word wf, wp;
            split_word(free_size, w, &wf, &wp);
            Word g = free_reduce(free_alpha, wf);
            std::string gkey = r.key() + "#" + word_key(g);
            if (!commutative) {
                std::shared_ptr<CompiledCfg> cc;
                {
                    std::lock_guard lock(cache->mu);
                    auto it = cache->compiled.find(gkey);
                    if (it != cache->compiled.end()) cc = it->second;
                }
                if (!cc) {
                    cc = std::make_shared<CompiledCfg>(
                        output_grammar(free_alpha, partner_alpha, r, g));
                    std::lock_guard lock(cache->mu);
                    cache->compiled.emplace(gkey, cc);
                }
                return cc->member(wp);
            }
            std::vector<Integer> t(partner_alpha.size(), 0);
            for (Letter x : wp) t[x] += 1;
            std::ostringstream akey;
            akey << gkey << '#';
            for (const auto& c : t) akey << c << ',';
            std::shared_ptr<ParikhMembership> pm;
            {
                std::lock_guard lock(cache->mu);
                auto hit = cache->answers.find(akey.str());
                if (hit != cache->answers.end()) return hit->second;
                auto it = cache->grammars.find(gkey);
                if (it != cache->grammars.end()) pm = it->second;
            }
            if (!pm) {
                pm = std::make_shared<ParikhMembership>(
                    output_grammar(free_alpha, partner_alpha, r, g));
                std::lock_guard lock(cache->mu);
                cache->grammars.emplace(gkey, pm);
            }
            std::vector<ParikhMembership::CountRow> rows;
            for (std::uint32_t i = 0; i < partner_alpha.size(); ++i)
                rows.push_back({{{i, Rational(1)}}, IlpRow::Rel::eq, Rational(t[i]), 0});
            bool ans = pm->satisfiable(rows);
            std::lock_guard lock(cache->mu);
            cache->answers.emplace(akey.str(), ans);
            return ans;
        },
        spec.partner == ProductSpec::Partner::free_monoid
            ? "product(free " + std::to_string(free_size / 2) + ", free monoid)"
            : "product(free " + std::to_string(free_size / 2) + ", free commutative)"};
}

} // namespace ratsub
