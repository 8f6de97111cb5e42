#pragma once

#include <array>
#include <vector>

#include "setcong/rational.hpp"
#include "setcong/word.hpp"

namespace setcong {

using Vec3 = std::array<Rational, 3>;

/// 3x3 exact rational rotation matrix (orthogonal, determinant one; both are
/// checked identities, never approximations).
struct RotMat {
    std::array<std::array<Rational, 3>, 3> a;

    static RotMat identity();
    bool operator==(const RotMat&) const = default;
};

RotMat matmul(const RotMat& x, const RotMat& y);
RotMat transpose(const RotMat& x);
Vec3 apply(const RotMat& x, const Vec3& v);
bool is_rotation(const RotMat& x);

/// The classical rational free pair: rotation about the z axis with
/// cosine 3/5, sine 4/5, and the same angle about the x axis. Freeness is
/// defended by bounded testing, not certified.
std::pair<RotMat, RotMat> standard_free_rotations();

/// Homomorphic evaluation; gens[i] realizes generator i+1.
RotMat word_to_matrix(const Word& w, const std::vector<RotMat>& gens);

/// Nonzero rational vector spanning ker(M - I), first nonzero coordinate
/// positive. Throws IdentityInput on M = I.
Vec3 fixed_axis(const RotMat& m);

/// No nonempty reduced word of length <= radius evaluates to the identity.
bool free_up_to(const std::vector<RotMat>& gens, int radius);

Rational dot(const Vec3& u, const Vec3& v);
Rational squared_distance(const Vec3& u, const Vec3& v);

} // namespace setcong
