#include "ratsub/oracle/rep.hpp"

#include <sstream>

namespace ratsub::oracle {

namespace {

void free_push(Word* w, Letter x) {
    if (!w->empty() && (w->back() ^ 1u) == x)
        w->pop_back();
    else
        w->push_back(x);
}

std::uint32_t finite_inv(const FiniteKind& k, std::uint32_t a) {
    for (std::uint32_t b = 0; b < k.table.size(); ++b)
        if (k.table[a][b] == 0) return b;
    throw validation_error("oracle: element without inverse");
}

void syll_push(const SyllableKind& k, std::vector<std::pair<std::uint32_t, std::uint32_t>>* s,
               std::uint32_t factor, std::uint32_t elem) {
    if (elem == 0) return;
    if (!s->empty() && s->back().first == factor) {
        std::uint32_t m = k.factors[factor].table[s->back().second][elem];
        s->pop_back();
        if (m != 0) s->push_back({factor, m});
    } else {
        s->push_back({factor, elem});
    }
}

void abelian_apply(const AbelianKind& k, AbelianRep* r, Letter x) {
    std::size_t free_letters = 2 * k.free_rank;
    if (x < free_letters) {
        r->free[x / 2] += (x % 2 == 0) ? 1 : -1;
    } else {
        std::size_t j = (x - free_letters) / 2;
        std::uint32_t m = k.torsion.at(j);
        std::int64_t d = ((x - free_letters) % 2 == 0) ? 1 : m - 1;
        r->torsion[j] = static_cast<std::uint32_t>((r->torsion[j] + d) % m);
    }
}

} // namespace

std::size_t kind_letters(const Kind& k) {
    if (auto* f = std::get_if<FreeKind>(&k)) return 2 * f->rank;
    if (auto* a = std::get_if<AbelianKind>(&k)) return 2 * (a->free_rank + a->torsion.size());
    if (auto* g = std::get_if<FiniteKind>(&k)) return g->letter_elem.size();
    if (auto* s = std::get_if<SyllableKind>(&k)) {
        std::size_t n = 0;
        for (const auto& f : s->factors) n += f.letter_elem.size();
        return n;
    }
    if (auto* m = std::get_if<MonoidKind>(&k)) return m->letters;
    const auto& p = std::get<ProductKind>(k);
    return 2 * p.free_rank +
           (p.monoid_partner ? p.monoid.letters
                             : 2 * (p.abelian.free_rank + p.abelian.torsion.size()));
}

Rep identity(const Kind& k) {
    if (std::holds_alternative<FreeKind>(k)) return FreeRep{};
    if (auto* a = std::get_if<AbelianKind>(&k))
        return AbelianRep{std::vector<std::int64_t>(a->free_rank, 0),
                          std::vector<std::uint32_t>(a->torsion.size(), 0)};
    if (std::holds_alternative<FiniteKind>(k)) return FiniteRep{};
    if (std::holds_alternative<SyllableKind>(k)) return SyllableRep{};
    if (std::holds_alternative<MonoidKind>(k)) return MonoidRep{};
    const auto& p = std::get<ProductKind>(k);
    ProductRep r;
    if (!p.monoid_partner) r.ab = std::get<AbelianRep>(identity(Kind{p.abelian}));
    return r;
}

Rep evaluate(const Kind& k, const Word& w) {
    for (Letter x : w)
        if (x >= kind_letters(k)) throw validation_error("oracle: uninterpretable letter");
    if (std::holds_alternative<FreeKind>(k)) {
        FreeRep r;
        for (Letter x : w) free_push(&r.w, x);
        return r;
    }
    if (auto* a = std::get_if<AbelianKind>(&k)) {
        AbelianRep r = std::get<AbelianRep>(identity(k));
        for (Letter x : w) abelian_apply(*a, &r, x);
        return r;
    }
    if (auto* g = std::get_if<FiniteKind>(&k)) {
        FiniteRep r;
        for (Letter x : w) r.e = g->table[r.e][g->letter_elem[x]];
        return r;
    }
    if (auto* s = std::get_if<SyllableKind>(&k)) {
        SyllableRep r;
        for (Letter x : w) {
            std::uint32_t factor = 0;
            Letter local = x;
            while (local >= s->factors[factor].letter_elem.size()) {
                local -= static_cast<Letter>(s->factors[factor].letter_elem.size());
                ++factor;
            }
            syll_push(*s, &r.syll, factor, s->factors[factor].letter_elem[local]);
        }
        return r;
    }
    if (std::holds_alternative<MonoidKind>(k)) return MonoidRep{w};
    const auto& p = std::get<ProductKind>(k);
    ProductRep r = std::get<ProductRep>(identity(k));
    const Letter free_letters = static_cast<Letter>(2 * p.free_rank);
    for (Letter x : w) {
        if (x < free_letters)
            free_push(&r.left.w, x);
        else if (p.monoid_partner)
            r.mon.w.push_back(x - free_letters);
        else
            abelian_apply(p.abelian, &r.ab, x - free_letters);
    }
    return r;
}

Rep rep_product(const Kind& k, const Rep& x, const Rep& y) {
    if (std::holds_alternative<FreeKind>(k)) {
        FreeRep r = std::get<FreeRep>(x);
        for (Letter l : std::get<FreeRep>(y).w) free_push(&r.w, l);
        return r;
    }
    if (auto* a = std::get_if<AbelianKind>(&k)) {
        AbelianRep r = std::get<AbelianRep>(x);
        const AbelianRep& s = std::get<AbelianRep>(y);
        for (std::size_t i = 0; i < r.free.size(); ++i) r.free[i] += s.free[i];
        for (std::size_t j = 0; j < r.torsion.size(); ++j)
            r.torsion[j] = (r.torsion[j] + s.torsion[j]) % a->torsion[j];
        return r;
    }
    if (auto* g = std::get_if<FiniteKind>(&k))
        return FiniteRep{g->table[std::get<FiniteRep>(x).e][std::get<FiniteRep>(y).e]};
    if (auto* s = std::get_if<SyllableKind>(&k)) {
        SyllableRep r = std::get<SyllableRep>(x);
        for (const auto& [f, e] : std::get<SyllableRep>(y).syll) syll_push(*s, &r.syll, f, e);
        return r;
    }
    if (std::holds_alternative<MonoidKind>(k)) {
        MonoidRep r = std::get<MonoidRep>(x);
        const auto& s = std::get<MonoidRep>(y);
        r.w.insert(r.w.end(), s.w.begin(), s.w.end());
        return r;
    }
    const auto& p = std::get<ProductKind>(k);
    ProductRep r = std::get<ProductRep>(x);
    const ProductRep& s = std::get<ProductRep>(y);
    r.left = std::get<FreeRep>(rep_product(Kind{FreeKind{p.free_rank}}, r.left, s.left));
    if (p.monoid_partner)
        r.mon = std::get<MonoidRep>(rep_product(Kind{p.monoid}, r.mon, s.mon));
    else
        r.ab = std::get<AbelianRep>(rep_product(Kind{p.abelian}, r.ab, s.ab));
    return r;
}

std::string show(const Rep& r) {
    std::ostringstream out;
    if (auto* f = std::get_if<FreeRep>(&r)) {
        out << "free[";
        for (Letter x : f->w) out << x << ' ';
        out << ']';
    } else if (auto* a = std::get_if<AbelianRep>(&r)) {
        out << "ab(";
        for (auto v : a->free) out << v << ' ';
        out << '|';
        for (auto v : a->torsion) out << ' ' << v;
        out << ')';
    } else if (auto* g = std::get_if<FiniteRep>(&r)) {
        out << "fin(" << g->e << ')';
    } else if (auto* s = std::get_if<SyllableRep>(&r)) {
        out << "syll[";
        for (const auto& [f, e] : s->syll) out << f << ':' << e << ' ';
        out << ']';
    } else if (auto* m = std::get_if<MonoidRep>(&r)) {
        out << "mon[";
        for (Letter x : m->w) out << x << ' ';
        out << ']';
    } else {
        const auto& p = std::get<ProductRep>(r);
        out << "pair(" << show(p.left) << ", " << show(p.ab) << ", " << show(p.mon) << ')';
    }
    return out.str();
}

} // namespace ratsub::oracle
