#include "ratsub/ilp.hpp"

#include <deque>

#include "ratsub/budget.hpp"

namespace ratsub {

namespace {

Integer floor_rational(const Rational& r) {
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r); // > 0
    Integer q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

bool is_integral(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

/// Phase-1 simplex with Bland's rule on the system A y {≤,=,≥} b, y ≥ 0.
/// Returns a feasible vertex (values of the structural variables) or nullopt.
std::optional<std::vector<Rational>>
lp_feasible(std::size_t n, const std::vector<IlpRow>& rows) {
    const std::size_t m = rows.size();
    // columns: structural 0..n-1 | slack/surplus | artificial | rhs
    std::size_t num_slack = 0;
    for (const auto& r : rows)
        if (r.rel != IlpRow::Rel::eq) ++num_slack;
    std::size_t cols = n + num_slack + m; // at most one artificial per row
    std::vector<std::vector<Rational>> a(m + 1, std::vector<Rational>(cols + 1, 0));
    std::vector<std::size_t> basis(m);
    std::vector<bool> is_artificial(cols, false);

    std::size_t slack_at = n;
    std::size_t art_at = n + num_slack;
    std::size_t used_arts = 0;
    for (std::size_t i = 0; i < m; ++i) {
        Rational sign = 1;
        if (rows[i].rhs < 0) sign = -1; // normalize rhs ≥ 0
        for (const auto& [v, c] : rows[i].coeffs) a[i][v] += sign * c;
        a[i][cols] = sign * rows[i].rhs;
        IlpRow::Rel rel = rows[i].rel;
        if (sign < 0) {
            if (rel == IlpRow::Rel::le)
                rel = IlpRow::Rel::ge;
            else if (rel == IlpRow::Rel::ge)
                rel = IlpRow::Rel::le;
        }
        if (rel == IlpRow::Rel::le) {
            a[i][slack_at] = 1;
            basis[i] = slack_at++;
        } else {
            if (rel == IlpRow::Rel::ge) a[i][slack_at++] = -1;
            std::size_t art = art_at + used_arts++;
            a[i][art] = 1;
            is_artificial[art] = true;
            basis[i] = art;
        }
    }
    // objective: minimize sum of artificials; reduced-cost row in a[m],
    // starting from the cost vector (1 on artificial columns) and cancelling
    // the rows whose basis column is artificial
    for (std::size_t j = 0; j < cols; ++j)
        if (is_artificial[j]) a[m][j] = 1;
    for (std::size_t i = 0; i < m; ++i)
        if (is_artificial[basis[i]])
            for (std::size_t j = 0; j <= cols; ++j) a[m][j] -= a[i][j];

    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (a[m][j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;
        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (a[i][enter] <= 0) continue;
            if (leave == m) {
                leave = i;
                continue;
            }
            Rational cur = a[i][cols] / a[i][enter];
            Rational best = a[leave][cols] / a[leave][enter];
            if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
        }
        if (leave == m) break; // unbounded (cannot occur: objective ≥ 0)
        Rational piv = a[leave][enter];
        for (std::size_t j = 0; j <= cols; ++j) a[leave][j] /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || a[i][enter] == 0) continue;
            Rational f = a[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) a[i][j] -= f * a[leave][j];
        }
        basis[leave] = enter;
    }
    if (a[m][cols] != 0) return std::nullopt; // Σ artificials > 0
    std::vector<Rational> y(n, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) y[basis[i]] = a[i][cols];
    return y;
}

struct Node {
    std::vector<Integer> lo;
    std::vector<std::optional<Integer>> hi;
};

/// Every feasible instance has a solution with coordinates below this bound
/// (Cramer-style estimate on the integerized system), so branches raising a
/// lower bound past it can be pruned without losing completeness.
Integer root_bound(const IlpInstance& inst) {
    Integer amax = 1;
    for (const auto& row : inst.rows) {
        Integer l = 1;
        for (const auto& [v, c] : row.coeffs)
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
        l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(row.rhs));
        for (const auto& [v, c] : row.coeffs) {
            Integer x = boost::multiprecision::abs(
                boost::multiprecision::numerator(c) * (l / boost::multiprecision::denominator(c)));
            if (x > amax) amax = x;
        }
        Integer r = boost::multiprecision::abs(
            boost::multiprecision::numerator(row.rhs) *
            (l / boost::multiprecision::denominator(row.rhs)));
        if (r > amax) amax = r;
    }
    std::size_t nb = 0;
    for (const auto& u : inst.upper) {
        if (u) {
            ++nb;
            if (*u > amax) amax = *u;
        }
    }
    std::size_t m = inst.rows.size() + nb + 1;
    std::size_t n = inst.num_vars + m + 2;
    return Integer(n) * boost::multiprecision::pow(Integer(m + 1) * (amax + 1),
                                                   static_cast<unsigned>(2 * m + 3));
}

/// Exact integer solvability of the equality rows alone (nonnegativity and
/// inequality rows ignored): Euclidean variable elimination over ℤ.  Catches
/// divisibility obstructions (e.g. torsion residues) that no LP relaxation
/// ever refutes.
bool equalities_integer_solvable(const IlpInstance& inst) {
    using SparseRow = std::map<std::uint32_t, Integer>;
    std::vector<SparseRow> rows;
    std::vector<Integer> rhs;
    for (const auto& row : inst.rows) {
        if (row.rel != IlpRow::Rel::eq) continue;
        Integer l = boost::multiprecision::denominator(row.rhs);
        for (const auto& [v, c] : row.coeffs)
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
        SparseRow r;
        for (const auto& [v, c] : row.coeffs) {
            Integer x = boost::multiprecision::numerator(c) *
                        (l / boost::multiprecision::denominator(c));
            if (x != 0) r[v] += x;
        }
        for (auto it = r.begin(); it != r.end();)
            it = (it->second == 0) ? r.erase(it) : std::next(it);
        rows.push_back(std::move(r));
        rhs.push_back(boost::multiprecision::numerator(row.rhs) *
                      (l / boost::multiprecision::denominator(row.rhs)));
    }

    while (!rows.empty()) {
        // normalize by gcd; empty rows must have zero right-hand side
        for (std::size_t i = 0; i < rows.size();) {
            if (rows[i].empty()) {
                if (rhs[i] != 0) return false;
                rows.erase(rows.begin() + i);
                rhs.erase(rhs.begin() + i);
                continue;
            }
            Integer g = 0;
            for (const auto& [v, c] : rows[i]) g = boost::multiprecision::gcd(g, c);
            if (rhs[i] % g != 0) return false;
            if (g > 1) {
                for (auto& [v, c] : rows[i]) c /= g;
                rhs[i] /= g;
            }
            ++i;
        }
        if (rows.empty()) break;

        // substitute out a variable with a ±1 coefficient if one exists
        std::size_t pr = rows.size();
        std::uint32_t pv = 0;
        for (std::size_t i = 0; i < rows.size() && pr == rows.size(); ++i)
            for (const auto& [v, c] : rows[i])
                if (c == 1 || c == -1) {
                    pr = i;
                    pv = v;
                    break;
                }
        if (pr < rows.size()) {
            Integer p = rows[pr][pv];
            SparseRow pivot = rows[pr];
            Integer prhs = rhs[pr];
            rows.erase(rows.begin() + pr);
            rhs.erase(rhs.begin() + pr);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                auto it = rows[i].find(pv);
                if (it == rows[i].end()) continue;
                Integer f = it->second * p; // = coeff / p since p = ±1
                for (const auto& [v, c] : pivot) {
                    rows[i][v] -= f * c;
                    if (rows[i][v] == 0) rows[i].erase(v);
                }
                rhs[i] -= f * prhs;
            }
            continue;
        }

        // no unit pivot: Euclid step inside the first row (gcd is 1, so some
        // column operation x_j := x_j + q·x_i eventually produces a ±1)
        const SparseRow& r0 = rows[0];
        auto jt = r0.begin();
        for (auto it = r0.begin(); it != r0.end(); ++it)
            if (boost::multiprecision::abs(it->second) <
                boost::multiprecision::abs(jt->second))
                jt = it;
        auto it = r0.begin();
        if (it == jt) ++it;
        std::uint32_t vi = it->first, vj = jt->first;
        Integer q = it->second / jt->second; // truncated: leaves a remainder on vi
        for (auto& row : rows) {
            Integer cj = row.count(vj) ? row[vj] : Integer(0);
            if (cj == 0) continue;
            row[vi] -= q * cj;
            if (row[vi] == 0) row.erase(vi);
        }
    }
    return true;
}

struct BbOutcome {
    bool decided = false;
    std::optional<std::vector<Integer>> witness;
};

BbOutcome bb_search(const IlpInstance& inst, const Integer& cap, std::int64_t node_limit) {
    const std::size_t n = inst.num_vars;
    std::deque<Node> work;
    work.push_back({std::vector<Integer>(n, 0), inst.upper});

    while (!work.empty()) {
        if (node_limit >= 0 && node_limit-- == 0) return {false, std::nullopt};
        budget::tick_ilp_node();
        Node node = std::move(work.back());
        work.pop_back();

        bool dead = false;
        for (std::size_t j = 0; j < n && !dead; ++j) {
            if (node.hi[j] && node.lo[j] > *node.hi[j]) dead = true;
            if (node.lo[j] > cap) dead = true;
        }
        if (dead) continue;

        // shift x = lo + y, and turn finite upper bounds into extra rows
        std::vector<IlpRow> rows;
        for (const auto& row : inst.rows) {
            IlpRow r = row;
            for (const auto& [v, c] : row.coeffs) r.rhs -= c * Rational(node.lo[v]);
            rows.push_back(std::move(r));
        }
        for (std::size_t j = 0; j < n; ++j)
            if (node.hi[j])
                rows.push_back(IlpRow{{{static_cast<std::uint32_t>(j), Rational(1)}},
                                      IlpRow::Rel::le,
                                      Rational(*node.hi[j] - node.lo[j])});

        auto y = lp_feasible(n, rows);
        if (!y) continue;

        std::vector<Rational> x(n);
        for (std::size_t j = 0; j < n; ++j) x[j] = Rational(node.lo[j]) + (*y)[j];

        std::size_t frac = n;
        for (std::size_t j = 0; j < n; ++j)
            if (!is_integral(x[j])) {
                frac = j;
                break;
            }
        if (frac < n) {
            Integer f = floor_rational(x[frac]);
            Node below = node, above = node;
            below.hi[frac] = f;
            above.lo[frac] = f + 1;
            // explore the bounded branch first
            work.push_back(std::move(above));
            work.push_back(std::move(below));
            continue;
        }

        std::size_t viol = inst.implications.size();
        for (std::size_t k = 0; k < inst.implications.size(); ++k) {
            auto [a, b] = inst.implications[k];
            if (x[a] >= 1 && x[b] == 0) {
                viol = k;
                break;
            }
        }
        if (viol == inst.implications.size()) {
            std::vector<Integer> sol(n);
            for (std::size_t j = 0; j < n; ++j)
                sol[j] = boost::multiprecision::numerator(x[j]);
            return {true, sol};
        }
        auto [a, b] = inst.implications[viol];
        if (!node.hi[b] || *node.hi[b] >= 1) { // branch x_b ≥ 1
            Node on = node;
            if (on.lo[b] < 1) on.lo[b] = 1;
            work.push_back(std::move(on));
        }
        if (node.lo[a] < 1) { // branch x_a = 0, explored first
            Node off = node;
            off.hi[a] = 0;
            work.push_back(std::move(off));
        }
    }
    return {true, std::nullopt};
}

} // namespace

std::optional<std::vector<Integer>> ilp_solve(const IlpInstance& inst) {
    for (const auto& row : inst.rows)
        for (const auto& [v, c] : row.coeffs)
            if (v >= inst.num_vars) throw validation_error("ilp row references unknown variable");
    for (const auto& [a, b] : inst.implications)
        if (a >= inst.num_vars || b >= inst.num_vars)
            throw validation_error("ilp implication references unknown variable");
    if (inst.upper.size() != inst.num_vars)
        throw validation_error("ilp upper bound list has wrong length");

    const Integer cap = root_bound(inst);
    BbOutcome quick = bb_search(inst, cap, 256);
    if (quick.decided) return quick.witness;
    // undecided: rule out lattice obstructions exactly, then search without a
    // node limit (the process-wide budget still applies)
    if (!equalities_integer_solvable(inst)) return std::nullopt;
    return bb_search(inst, cap, -1).witness;
}

} // namespace ratsub
