#include "ratsub/parikh.hpp"

namespace ratsub {

bool semilinear_member(const SemilinearSet& s, const std::vector<Integer>& v) {
    if (v.size() != s.dimension)
        throw validation_error("semilinear_member: dimension mismatch");
    for (const auto& lin : s.components) {
        if (lin.constant.size() != s.dimension)
            throw validation_error("semilinear_member: component dimension mismatch");
        IlpInstance inst;
        std::vector<std::uint32_t> lambda;
        for (const auto& p : lin.periods) {
            if (p.size() != s.dimension)
                throw validation_error("semilinear_member: period dimension mismatch");
            lambda.push_back(inst.add_var());
        }
        for (std::size_t i = 0; i < s.dimension; ++i) {
            IlpRow row;
            for (std::size_t k = 0; k < lin.periods.size(); ++k)
                if (lin.periods[k][i] != 0) row.coeffs.push_back({lambda[k], Rational(lin.periods[k][i])});
            row.rel = IlpRow::Rel::eq;
            row.rhs = Rational(v[i] - lin.constant[i]);
            inst.add_row(std::move(row));
        }
        if (ilp_feasible(inst)) return true;
    }
    return false;
}

namespace {

ParikhSystem build_system(const Cfg& g, bool connectivity, std::vector<std::uint32_t>* y_out) {
    const auto& prods = g.productions();
    const std::size_t np = prods.size();
    const std::size_t nn = g.nonterminals().size();
    Integer dist_cap = Integer(nn); // distances live in [0, #nonterminals]

    ParikhSystem out;
    IlpInstance& ilp = out.ilp;

    std::vector<std::uint32_t> y(np), s(np), z(nn);
    for (std::size_t p = 0; p < np; ++p) y[p] = ilp.add_var();
    if (y_out) *y_out = y;
    if (connectivity) {
        for (std::size_t p = 0; p < np; ++p) s[p] = ilp.add_var(Integer(1));
        for (std::size_t a = 0; a < nn; ++a)
            z[a] = ilp.add_var(a == g.start() ? Integer(1) : dist_cap);
    }

    // flow balance: uses of A as a head = occurrences of A generated (+1 for S)
    for (std::size_t a = 0; a < nn; ++a) {
        IlpRow row;
        std::vector<Rational> coeff(np, 0);
        for (std::size_t p = 0; p < np; ++p) {
            if (prods[p].lhs == a) coeff[p] += 1;
            for (const auto& sym : prods[p].rhs)
                if (!sym.terminal && sym.id == a) coeff[p] -= 1;
        }
        for (std::size_t p = 0; p < np; ++p)
            if (coeff[p] != 0) row.coeffs.push_back({y[p], coeff[p]});
        row.rel = IlpRow::Rel::eq;
        row.rhs = (a == g.start()) ? 1 : 0;
        ilp.add_row(std::move(row));
    }

    // support: s_p = 1 exactly when production p is used
    for (std::size_t p = 0; connectivity && p < np; ++p) {
        ilp.add_row({{{s[p], 1}, {y[p], -1}}, IlpRow::Rel::le, 0}); // s_p ≤ y_p
        ilp.add_implication(y[p], s[p]);                            // y_p ≥ 1 ⇒ s_p ≥ 1
        ilp.add_row({{{z[prods[p].lhs], 1}, {s[p], -1}}, IlpRow::Rel::ge, 0}); // head active
    }

    // justification: an active nonterminal other than S is generated by a used
    // production whose head is active at a strictly smaller distance
    for (std::size_t a = 0; connectivity && a < nn; ++a) {
        if (a == g.start()) continue;
        std::vector<std::uint32_t> w; // one selector per production mentioning a
        IlpRow cap;                   // z_a ≤ dist_cap · Σ w
        cap.coeffs.push_back({z[a], 1});
        for (std::size_t p = 0; p < np; ++p) {
            bool occurs = false;
            for (const auto& sym : prods[p].rhs)
                if (!sym.terminal && sym.id == a) occurs = true;
            if (!occurs) continue;
            std::uint32_t wv = ilp.add_var(Integer(1));
            w.push_back(wv);
            cap.coeffs.push_back({wv, -Rational(dist_cap)});
            ilp.add_row({{{wv, 1}, {s[p], -1}}, IlpRow::Rel::le, 0}); // w ≤ s_p
            ilp.add_row({{{z[prods[p].lhs], 1}, {wv, -1}}, IlpRow::Rel::ge, 0});
            // z_a ≥ z_head + 1 − (cap+1)(1−w)
            ilp.add_row({{{z[a], 1},
                          {z[prods[p].lhs], -1},
                          {wv, -(Rational(dist_cap) + 1)}},
                         IlpRow::Rel::ge,
                         -Rational(dist_cap)});
        }
        cap.rel = IlpRow::Rel::le;
        cap.rhs = 0;
        ilp.add_row(std::move(cap));
    }

    // terminal counters
    out.terminal_vars.resize(g.terminals().size());
    for (std::size_t t = 0; t < g.terminals().size(); ++t) {
        std::uint32_t tv = ilp.add_var();
        out.terminal_vars[t] = tv;
        IlpRow row;
        row.coeffs.push_back({tv, 1});
        std::vector<Rational> coeff(np, 0);
        for (std::size_t p = 0; p < np; ++p)
            for (const auto& sym : prods[p].rhs)
                if (sym.terminal && sym.id == t) coeff[p] -= 1;
        for (std::size_t p = 0; p < np; ++p)
            if (coeff[p] != 0) row.coeffs.push_back({y[p], coeff[p]});
        row.rel = IlpRow::Rel::eq;
        row.rhs = 0;
        ilp.add_row(std::move(row));
    }
    return out;
}

} // namespace

ParikhSystem parikh_system(const Cfg& g) {
    return build_system(cfg_prune(g), /*connectivity=*/true, nullptr);
}

ParikhMembership::ParikhMembership(const Cfg& g) : pruned_(cfg_prune(g)) {
    full_ = build_system(pruned_, /*connectivity=*/true, nullptr);
    light_ = build_system(pruned_, /*connectivity=*/false, &light_y_);
}

bool ParikhMembership::satisfiable(const std::vector<CountRow>& rows) const {
    auto instantiate = [&](const ParikhSystem& sys) {
        IlpInstance ilp = sys.ilp;
        for (const auto& row : rows) {
            IlpRow r;
            for (const auto& [t, c] : row.terms) {
                if (t >= sys.terminal_vars.size())
                    throw validation_error("parikh query references an unknown terminal");
                r.coeffs.push_back({sys.terminal_vars[t], c});
            }
            if (row.modulus > 0) {
                r.coeffs.push_back({ilp.add_var(), -Rational(row.modulus)});
                r.coeffs.push_back({ilp.add_var(), Rational(row.modulus)});
                r.rel = IlpRow::Rel::eq;
            } else {
                r.rel = row.rel;
            }
            r.rhs = row.rhs;
            ilp.add_row(std::move(r));
        }
        return ilp;
    };

    auto witness = ilp_solve(instantiate(light_));
    if (!witness) return false;
    // connected support certifies without the full encoding
    const auto& prods = pruned_.productions();
    std::vector<bool> used(prods.size());
    for (std::size_t p = 0; p < prods.size(); ++p) used[p] = (*witness)[light_y_[p]] > 0;
    std::vector<bool> reach(pruned_.nonterminals().size(), false);
    reach[pruned_.start()] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t p = 0; p < prods.size(); ++p) {
            if (!used[p] || !reach[prods[p].lhs]) continue;
            for (const auto& s : prods[p].rhs)
                if (!s.terminal && !reach[s.id]) {
                    reach[s.id] = true;
                    grew = true;
                }
        }
    }
    bool connected = true;
    for (std::size_t p = 0; p < prods.size(); ++p)
        if (used[p] && !reach[prods[p].lhs]) connected = false;
    if (connected) return true;

    return ilp_feasible(instantiate(full_));
}

bool parikh_member(const Cfg& g, const std::vector<Integer>& target) {
    if (target.size() != g.terminals().size())
        throw validation_error("parikh_member: target dimension mismatch");
    for (const auto& t : target)
        if (t < 0) return false;
    ParikhMembership pm(g);
    std::vector<ParikhMembership::CountRow> rows;
    for (std::uint32_t t = 0; t < target.size(); ++t)
        rows.push_back({{{t, Rational(1)}}, IlpRow::Rel::eq, Rational(target[t]), 0});
    return pm.satisfiable(rows);
}

} // namespace ratsub
