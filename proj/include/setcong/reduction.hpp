#pragma once

#include <optional>
#include <vector>

#include "setcong/lp.hpp"
#include "setcong/system.hpp"

namespace setcong {

/// Index map pi: {1..s} -> {1..r} transporting solutions of the target
/// system back to the source system.
struct ReductionMap {
    long long s = 0;
    std::vector<int> pi; // pi[j-1] in {1..r}

    bool onto(int r) const;
};

/// Image of L under the map: {j : pi(j) in L}, as a bitmask only when s fits;
/// callers with large s use the size/emptiness queries below.
struct ReductionImage {
    long long size = 0;
    bool full = false;
    std::vector<char> members; // s entries
};

ReductionImage reduction_image(const ReductionMap& map, IndexSet side);

/// Every congruence of sys1 must map to a statement of sys2
/// (orientation-insensitive membership over sys2's statement set).
bool check_reduction(const CongruenceSystem& sys1, const CongruenceSystem& sys2,
                     const ReductionMap& map);

/// Same check against the universal system on s sets without materializing
/// it: the image pair must consist of two distinct nonempty proper subsets of
/// equal size.
bool check_reduction_to_unc(const CongruenceSystem& sys1, long long s, const ReductionMap& map);

/// Prop-style reduction: integerized weights give block sizes of pi, in index
/// order; s is the weight total. nullopt when the system is not numerically
/// consistent.
std::optional<ReductionMap> reduce_to_unc(const CongruenceSystem& sys);

} // namespace setcong
