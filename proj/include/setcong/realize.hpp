#pragma once

#include <map>
#include <optional>

#include "setcong/family.hpp"
#include "setcong/rotation.hpp"

namespace setcong {

/// Exact point placement of a finite family on the sphere: orthogonal images
/// of one unnormalized base vector, pairwise squared chordal distance
/// > 4 * epsilon_sq, so caps of squared radius epsilon_sq are disjoint.
struct SphereRealization {
    Vec3 base_point{0, 0, 0};
    std::vector<std::vector<std::pair<Word, Vec3>>> points; // per set, aligned with the family
    std::optional<Rational> epsilon_sq;                     // absent for empty families
    std::vector<RotMat> generators;
};

/// Default base points tried in order for group-mode families; coset-mode
/// families use the fixed axis of the subgroup generator's rotation.
extern const std::vector<Vec3> kBasePointFallbacks;

SphereRealization realize(const FiniteFamily& fam, const WitnessAssignment& wit,
                          const CongruenceSystem& sys);

/// The witness matrices map the point sets of each statement's left union
/// exactly onto (or into, for subcongruences) the right union's points, and
/// the separation invariant still holds. All comparisons exact.
bool verify_realization(const SphereRealization& real, const WitnessAssignment& wit,
                        const CongruenceSystem& sys);

std::string realization_to_json(const SphereRealization& real);

} // namespace setcong
