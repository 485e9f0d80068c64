#include "ratsub/oracle/stallings.hpp"

#include <map>
#include <numeric>

namespace ratsub::oracle {

namespace {

struct Graph {
    std::vector<std::uint32_t> parent;
    // directed edges labelled by base generator g: (src, g) -> dst
    std::vector<std::map<std::uint32_t, std::vector<std::uint32_t>>> out;

    std::uint32_t find(std::uint32_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    std::uint32_t fresh() {
        std::uint32_t v = static_cast<std::uint32_t>(parent.size());
        parent.push_back(v);
        out.emplace_back();
        return v;
    }
};

Word reduce(const Word& w) {
    Word r;
    for (Letter x : w) {
        if (!r.empty() && (r.back() ^ 1u) == x)
            r.pop_back();
        else
            r.push_back(x);
    }
    return r;
}

void fold(Graph* g) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint32_t v = 0; v < g->parent.size(); ++v) {
            if (g->find(v) != v) continue;
            // gather edges of the class representative
            std::map<std::uint32_t, std::vector<std::uint32_t>> merged;
            for (std::uint32_t u = 0; u < g->parent.size(); ++u) {
                if (g->find(u) != v) continue;
                for (const auto& [lab, ds] : g->out[u])
                    for (std::uint32_t d : ds) merged[lab].push_back(g->find(d));
            }
            for (auto& [lab, ds] : merged) {
                for (std::size_t i = 1; i < ds.size(); ++i) {
                    std::uint32_t a = g->find(ds[0]), b = g->find(ds[i]);
                    if (a != b) {
                        g->parent[b] = a;
                        changed = true;
                    }
                }
            }
        }
    }
}

} // namespace

bool stallings_member(std::size_t rank, const std::vector<Word>& subgens, const Word& w) {
    (void)rank;
    Graph g;
    std::uint32_t base = g.fresh();
    for (const Word& sg : subgens) {
        Word r = reduce(sg);
        std::uint32_t cur = base;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint32_t next = (i + 1 == r.size()) ? base : g.fresh();
            Letter x = r[i];
            if (x % 2 == 0)
                g.out[cur][x / 2].push_back(next);
            else
                g.out[next][x / 2].push_back(cur);
            cur = next;
        }
    }
    fold(&g);

    // deterministic transition lookup on the folded graph
    auto step = [&](std::uint32_t v, Letter x) -> std::int64_t {
        std::uint32_t gen = x / 2;
        bool forward = (x % 2 == 0);
        for (std::uint32_t u = 0; u < g.parent.size(); ++u) {
            auto it = g.out[u].find(gen);
            if (it == g.out[u].end()) continue;
            for (std::uint32_t d : it->second) {
                std::uint32_t src = g.find(u), dst = g.find(d);
                if (forward && src == v) return dst;
                if (!forward && dst == v) return src;
            }
        }
        return -1;
    };

    std::uint32_t cur = g.find(base);
    for (Letter x : reduce(w)) {
        std::int64_t next = step(cur, x);
        if (next < 0) return false;
        cur = static_cast<std::uint32_t>(next);
    }
    return cur == g.find(base);
}

} // namespace ratsub::oracle
