#pragma once

#include <optional>

#include "setcong/family.hpp"

namespace setcong {

/// Result of the bounded fixed-witness search. A Sat answer is always a
/// verified family. An unsat answer only certifies that no not-all-empty
/// family whose elements all have length <= radius satisfies the system with
/// the given witnesses; it is a proof of unsatisfiability only when the
/// radius reaches the theoretical word-length bound (reported when it is
/// small enough to evaluate).
struct SearchOutcome {
    bool sat = false;
    FiniteFamily family; // meaningful iff sat
    int radius = 0;
    std::optional<Integer> completeness_bound; // absent when too large to evaluate
    bool complete = false;                     // radius covers the bound
    long long nodes = 0;                       // explored assignments, for diagnostics
};

/// Backtracking with arc-consistency propagation over the labeled ball of
/// radius radius + max witness length. Variable order is length-lex, values
/// ascend, and the not-all-empty requirement is enforced by seeding the first
/// nonzero position; the first solution found is therefore deterministic.
SearchOutcome search_family(const CongruenceSystem& sys, const WitnessAssignment& wit,
                            int radius, int m = 0);

/// Post-hoc minimality audit: true when no two distinct final segments of the
/// longest family word look identical to every witness-length prefix (if two
/// do, a shorter satisfying family exists by splicing them together).
bool cut_splice_minimal(const FiniteFamily& fam, const WitnessAssignment& wit);

} // namespace setcong
