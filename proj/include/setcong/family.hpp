#pragma once

#include <string>
#include <variant>
#include <vector>

#include "setcong/coset.hpp"
#include "setcong/rational.hpp"
#include "setcong/system.hpp"
#include "setcong/word.hpp"

namespace setcong {

struct GroupSpace {
    int m = 1;
    bool operator==(const GroupSpace&) const = default;
};

using FamilySpace = std::variant<GroupSpace, CosetSpace>;

/// r pairwise-disjoint finite sets of group elements (group mode) or of
/// canonical coset representatives (coset mode).
struct FiniteFamily {
    FamilySpace space = GroupSpace{};
    std::vector<std::vector<Word>> sets; // each sorted length-lex, no duplicates

    int r() const { return static_cast<int>(sets.size()); }
    bool all_empty() const;
    std::vector<Word> set_union() const;
    void check_invariants() const; // disjointness; canonicity in coset mode
};

FiniteFamily make_group_family(int m, std::vector<std::vector<Word>> sets);
FiniteFamily make_coset_family(const CosetSpace& space, std::vector<std::vector<Word>> sets);

using WitnessAssignment = std::vector<Word>;

struct StatementDiagnostic {
    int statement = 0; // 1-based
    bool holds = false;
    std::string detail;
};

struct VerifyResult {
    bool ok = false;
    std::vector<StatementDiagnostic> diagnostics;
};

/// Per statement i: witness g_i maps the union over the left side exactly
/// onto the union over the right side (inclusion only, for subcongruences).
/// Action is left multiplication in group mode, the coset action otherwise.
VerifyResult verify_family(const FiniteFamily& fam, const WitnessAssignment& wit,
                           const CongruenceSystem& sys);

/// Right-translate the family so the identity appears in some set (by the
/// length-lex least element); satisfaction under the same witnesses is
/// preserved since right translation commutes with the left action.
FiniteFamily normalize_family(const FiniteFamily& fam);

/// Exact word-length bound for the fixed-witness decision procedure:
/// N = 1 + 2m + (2m)^2 + ... + (2m)^L and the family bound (r+1)^N.
struct DecisionBound {
    Integer n;
    Integer word_length_bound;
};
DecisionBound theoretical_bound(int m, int max_witness_len, int r);

/// Structural fact for the two-statement system rho(A1) = A3,
/// sigma(A1 u A3) = A1 u A2 (checked as preconditions): any satisfying finite
/// family also has sigma(A3) = A1 and sigma(A1) = A2.
bool forced_shift_holds(const FiniteFamily& fam, const Word& rho, const Word& sigma);

} // namespace setcong
