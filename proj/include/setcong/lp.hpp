#pragma once

#include <optional>
#include <vector>

#include "setcong/rational.hpp"
#include "setcong/system.hpp"

namespace setcong {

/// Strictly positive weights equalizing every congruence (and respecting
/// every subcongruence as <=). Normalized so the weights sum to 1.
struct NumericWitness {
    std::vector<Rational> mu;
};

/// Whether the weights satisfy the system's balance conditions with all
/// entries strictly positive.
bool valid_numeric_witness(const CongruenceSystem& sys, const std::vector<Rational>& mu);

/// Exact LP: maximize d subject to sum(mu) = 1, mu_k >= d, the congruence
/// equalities and subcongruence inequalities. Feasible with optimum d > 0
/// iff numerically consistent. Systems with subcongruence statements get the
/// extended notion (the inequality constraints); callers can flag reports.
std::optional<NumericWitness> numeric_consistency(const CongruenceSystem& sys);

/// Positive integers proportional to mu with overall gcd 1.
std::vector<Integer> integerize(const NumericWitness& witness);

/// Dense exact simplex, two-phase, Bland's rule. Solves
///   maximize c.x  subject to  A x (= or <=) b,  x >= 0.
/// Returns nullopt when infeasible; throws on unbounded (callers here always
/// have bounded objectives).
struct LinearProgram {
    std::vector<std::vector<Rational>> coeffs; // one row per constraint
    std::vector<Rational> rhs;
    std::vector<char> is_equality; // per row; false means <=
    std::vector<Rational> objective;
};

std::optional<std::vector<Rational>> solve_lp_max(const LinearProgram& lp);

} // namespace setcong
