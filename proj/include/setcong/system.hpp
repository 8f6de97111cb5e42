#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "setcong/error.hpp"

namespace setcong {

/// Subset of {1..r} as a bitmask; bit k-1 stands for index k.
using IndexSet = std::uint32_t;

/// Largest r for which the subset lattice 2^{1..r} is enumerated explicitly.
inline constexpr int kClosureLimit = 20;

inline IndexSet full_set(int r) { return (r >= 32) ? ~IndexSet{0} : ((IndexSet{1} << r) - 1); }
inline IndexSet complement_in(IndexSet s, int r) { return full_set(r) & ~s; }
inline bool subset_of(IndexSet a, IndexSet b) { return (a & ~b) == 0; }
inline int set_size(IndexSet s) { return __builtin_popcount(s); }
inline bool contains(IndexSet s, int k) { return (s >> (k - 1)) & 1u; }

/// Members of an index set in increasing order (1-based).
std::vector<int> set_members(IndexSet s);
std::string set_to_string(IndexSet s);

enum class StatementKind { congruence, subcongruence };

/// One statement U_{k in left} A_k ~ U_{k in right} A_k (or the one-sided
/// variant for subcongruences); sides may be improper, properness is a query.
struct Statement {
    StatementKind kind = StatementKind::congruence;
    IndexSet left = 0;
    IndexSet right = 0;

    bool operator==(const Statement&) const = default;
};

/// Whether both sides are nonempty proper subsets of {1..r}.
bool is_proper(const Statement& stmt, int r);

enum class Mode { partition, family };

/// System of congruence/subcongruence statements over r set variables.
/// Statement order matters: statement i is the one witnessed by the i'th
/// designated group element wherever witnesses appear.
struct CongruenceSystem {
    int r = 1;
    Mode mode = Mode::partition;
    std::vector<Statement> statements;

    void check_well_formed() const;
    bool all_proper() const;
};

CongruenceSystem make_system(int r, std::initializer_list<Statement> stmts,
                             Mode mode = Mode::partition);

/// The universal system on s sets: any two unions of equally many sets are
/// congruent. One orientation per unordered pair, enumerated by size then
/// bitmask order.
CongruenceSystem make_unc(int s, int limit = kClosureLimit);

/// The |L| = |R| = 2 restriction of make_unc.
CongruenceSystem make_cp(int r, int limit = kClosureLimit);

} // namespace setcong
