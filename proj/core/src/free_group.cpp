#include "ratsub/free_group.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace ratsub {

GroupDecider free_group_decider(const InvolutiveAlphabet& gens) {
    if (!gens.fixed_point_free())
        throw validation_error("free_group_decider: involution must be fixed-point free");
    MonadicSystem sys = MonadicSystem::free_reduction(gens);
    // member(R, w) ⟺ the reduced form of w is a descendant of L(R) under free
    // reduction; saturating R once serves every query word, so cache it.
    struct Cache {
        std::mutex mu;
        std::map<std::string, Nfa> saturated;
    };
    auto cache = std::make_shared<Cache>();
    return GroupDecider{
        gens,
        [gens, sys, cache](const Nfa& r, const Word& w) {
            std::string key = r.key();
            {
                std::lock_guard lock(cache->mu);
                auto it = cache->saturated.find(key);
                if (it != cache->saturated.end())
                    return accepts(it->second, free_reduce(gens, w));
            }
            Nfa sat = saturate(r, sys);
            bool ans = accepts(sat, free_reduce(gens, w));
            std::lock_guard lock(cache->mu);
            cache->saturated.emplace(std::move(key), std::move(sat));
            return ans;
        },
        "free(" + std::to_string(gens.size() / 2) + ")"};
}

} // namespace ratsub
