#include "setcong/lp.hpp"

#include <algorithm>
#include <cassert>

namespace setcong {

namespace {

// Tableau with rows = basic constraints, columns = all variables plus rhs.
// Basis column indices kept in `basis`. Bland's rule throughout, so cycling
// is impossible and every pivot is exact.
struct Tableau {
    std::vector<std::vector<Rational>> t; // m rows, n+1 cols (last = rhs)
    std::vector<Rational> cost;           // n entries (phase objective, minimize)
    Rational cost_rhs = 0;
    std::vector<int> basis;

    int rows() const { return static_cast<int>(t.size()); }
    int cols() const { return static_cast<int>(t.empty() ? 0 : t.front().size() - 1); }

    void pivot(int pr, int pc) {
        Rational p = t[pr][pc];
        for (auto& v : t[pr]) v /= p;
        for (int i = 0; i < rows(); ++i) {
            if (i == pr || t[i][pc] == 0) continue;
            Rational f = t[i][pc];
            for (int j = 0; j <= cols(); ++j) t[i][j] -= f * t[pr][j];
        }
        if (cost[pc] != 0) {
            Rational f = cost[pc];
            for (int j = 0; j < cols(); ++j) cost[j] -= f * t[pr][j];
            cost_rhs -= f * t[pr][cols()];
        }
        basis[pr] = pc;
    }

    // Minimize `cost`; returns false on unbounded.
    bool run() {
        for (;;) {
            int pc = -1;
            for (int j = 0; j < cols(); ++j)
                if (cost[j] < 0) { pc = j; break; } // Bland: first improving column
            if (pc < 0) return true;
            int pr = -1;
            for (int i = 0; i < rows(); ++i) {
                if (t[i][pc] <= 0) continue;
                if (pr < 0) { pr = i; continue; }
                Rational cur = t[i][cols()] / t[i][pc];
                Rational best = t[pr][cols()] / t[pr][pc];
                if (cur < best || (cur == best && basis[i] < basis[pr])) pr = i;
            }
            if (pr < 0) return false;
            pivot(pr, pc);
        }
    }
};

} // namespace

std::optional<std::vector<Rational>> solve_lp_max(const LinearProgram& lp) {
    const int m = static_cast<int>(lp.coeffs.size());
    const int n = static_cast<int>(lp.objective.size());

    int slacks = 0;
    for (char eq : lp.is_equality)
        if (!eq) ++slacks;

    const int total = n + slacks + m; // structural + slack + artificial
    Tableau tab;
    tab.t.assign(m, std::vector<Rational>(total + 1, Rational(0)));
    tab.basis.assign(m, -1);

    int slack_at = n;
    for (int i = 0; i < m; ++i) {
        assert(static_cast<int>(lp.coeffs[i].size()) == n);
        bool flip = lp.rhs[i] < 0;
        for (int j = 0; j < n; ++j)
            tab.t[i][j] = flip ? -lp.coeffs[i][j] : lp.coeffs[i][j];
        tab.t[i][total] = flip ? -lp.rhs[i] : lp.rhs[i];
        if (!lp.is_equality[i]) {
            tab.t[i][slack_at] = flip ? Rational(-1) : Rational(1);
            ++slack_at;
        }
        tab.t[i][n + slacks + i] = 1; // artificial
        tab.basis[i] = n + slacks + i;
    }

    // Phase 1: minimize the artificial sum.
    tab.cost.assign(total, Rational(0));
    for (int i = 0; i < m; ++i) tab.cost[n + slacks + i] = 1;
    for (int i = 0; i < m; ++i) { // price out the starting basis
        for (int j = 0; j < total; ++j) tab.cost[j] -= tab.t[i][j];
        tab.cost_rhs -= tab.t[i][total];
    }
    if (!tab.run()) return std::nullopt;
    if (tab.cost_rhs != 0) return std::nullopt; // positive artificial residue

    // Drive artificials out of the basis where possible; rows where it is not
    // possible are redundant (all zeros outside the artificial block) and get
    // dropped along with the artificial columns.
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < n + slacks) continue;
        for (int j = 0; j < n + slacks; ++j)
            if (tab.t[i][j] != 0) { tab.pivot(i, j); break; }
    }
    Tableau ph2;
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] >= n + slacks) continue;
        std::vector<Rational> row(tab.t[i].begin(), tab.t[i].begin() + (n + slacks));
        row.push_back(tab.t[i][total]);
        ph2.t.push_back(std::move(row));
        ph2.basis.push_back(tab.basis[i]);
    }

    // Phase 2: minimize -objective.
    ph2.cost.assign(n + slacks, Rational(0));
    for (int j = 0; j < n; ++j) ph2.cost[j] = -lp.objective[j];
    for (int i = 0; i < ph2.rows(); ++i) {
        int b = ph2.basis[i];
        if (ph2.cost[b] == 0) continue;
        Rational f = ph2.cost[b];
        for (int j = 0; j < ph2.cols(); ++j) ph2.cost[j] -= f * ph2.t[i][j];
        ph2.cost_rhs -= f * ph2.t[i][ph2.cols()];
    }
    if (!ph2.run()) throw Error("LP unbounded");

    std::vector<Rational> x(n, Rational(0));
    for (int i = 0; i < ph2.rows(); ++i)
        if (ph2.basis[i] < n) x[ph2.basis[i]] = ph2.t[i][ph2.cols()];
    return x;
}

bool valid_numeric_witness(const CongruenceSystem& sys, const std::vector<Rational>& mu) {
    if (static_cast<int>(mu.size()) != sys.r) return false;
    for (const Rational& q : mu)
        if (q <= 0) return false;
    for (const Statement& st : sys.statements) {
        Rational left = 0, right = 0;
        for (int k = 1; k <= sys.r; ++k) {
            if (contains(st.left, k)) left += mu[k - 1];
            if (contains(st.right, k)) right += mu[k - 1];
        }
        if (st.kind == StatementKind::congruence ? (left != right) : (left > right))
            return false;
    }
    return true;
}

std::optional<NumericWitness> numeric_consistency(const CongruenceSystem& sys) {
    sys.check_well_formed();
    const int r = sys.r;
    // Variables: mu_1..mu_r, d+, d-. Constraints: sum(mu) = 1, balance rows,
    // and mu_k - d+ + d- >= 0 written as -mu_k + d+ - d- <= 0.
    const int n = r + 2;
    LinearProgram lp;

    std::vector<Rational> row(n, Rational(0));
    for (int k = 0; k < r; ++k) row[k] = 1;
    lp.coeffs.push_back(row);
    lp.rhs.push_back(1);
    lp.is_equality.push_back(true);

    for (const Statement& st : sys.statements) {
        std::vector<Rational> balance(n, Rational(0));
        for (int k = 1; k <= r; ++k) {
            if (contains(st.left, k)) balance[k - 1] += 1;
            if (contains(st.right, k)) balance[k - 1] -= 1;
        }
        lp.coeffs.push_back(balance);
        lp.rhs.push_back(0);
        lp.is_equality.push_back(st.kind == StatementKind::congruence);
    }

    for (int k = 0; k < r; ++k) {
        std::vector<Rational> floor(n, Rational(0));
        floor[k] = -1;
        floor[r] = 1;
        floor[r + 1] = -1;
        lp.coeffs.push_back(floor);
        lp.rhs.push_back(0);
        lp.is_equality.push_back(false);
    }

    lp.objective.assign(n, Rational(0));
    lp.objective[r] = 1;
    lp.objective[r + 1] = -1;

    auto solution = solve_lp_max(lp);
    if (!solution) return std::nullopt;
    Rational d = (*solution)[r] - (*solution)[r + 1];
    if (d <= 0) return std::nullopt;

    NumericWitness witness;
    witness.mu.assign(solution->begin(), solution->begin() + r);
    assert(valid_numeric_witness(sys, witness.mu));
    return witness;
}

std::vector<Integer> integerize(const NumericWitness& witness) {
    Integer common_den = 1;
    for (const Rational& q : witness.mu)
        common_den = boost::multiprecision::lcm(common_den, rat_den(q));
    std::vector<Integer> scaled;
    scaled.reserve(witness.mu.size());
    Integer g = 0;
    for (const Rational& q : witness.mu) {
        Integer v = rat_num(q) * (common_den / rat_den(q));
        g = boost::multiprecision::gcd(g, v);
        scaled.push_back(v);
    }
    if (g > 1)
        for (Integer& v : scaled) v /= g;
    return scaled;
}

} // namespace setcong
