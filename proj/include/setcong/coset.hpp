#pragma once

#include "setcong/word.hpp"

namespace setcong {

/// Left coset space F_m / <w>. The subgroup generator must not be a proper
/// power (rejected at construction); w may be the identity, in which case the
/// space is F_m itself.
struct CosetSpace {
    int m = 1;
    Word w;
    Word core; // cyclically reduced core of w, for the length bound

    bool operator==(const CosetSpace&) const = default;
};

CosetSpace make_coset_space(int m, const Word& w);

/// Canonical representative of g<w>: length-minimal element of {g w^k},
/// ties broken by length-lex order. Idempotent and constant on cosets.
Word coset_rep(const CosetSpace& space, const Word& g);

/// coset_rep(g * c) for a canonical representative c.
Word coset_action(const CosetSpace& space, const Word& g, const Word& c);

bool is_canonical_rep(const CosetSpace& space, const Word& c);

} // namespace setcong
