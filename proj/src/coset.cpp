#include "setcong/coset.hpp"

namespace setcong {

CosetSpace make_coset_space(int m, const Word& w) {
    if (m < 1) throw Error("coset space needs at least one generator");
    if (w.max_generator() > m) throw Error("subgroup generator uses letters beyond m");
    if (is_proper_power(w))
        throw Error("subgroup generator must not be a proper power");
    CosetSpace space;
    space.m = m;
    space.w = w;
    space.core = cyclically_reduce(w).core;
    return space;
}

Word coset_rep(const CosetSpace& space, const Word& g) {
    if (space.w.empty()) return g; // trivial subgroup
    // |g w^k| >= |k| |core| - 2|g|, so exponents beyond the bound cannot beat
    // the k = 0 candidate.
    const int bound = 2 * g.length() / std::max(1, space.core.length()) + 1;
    Word best = g;
    Word winv = invert(space.w);
    Word up = g, down = g;
    for (int k = 1; k <= bound; ++k) {
        up = multiply(up, space.w);
        down = multiply(down, winv);
        if (length_lex_less(up, best)) best = up;
        if (length_lex_less(down, best)) best = down;
    }
    return best;
}

Word coset_action(const CosetSpace& space, const Word& g, const Word& c) {
    return coset_rep(space, multiply(g, c));
}

bool is_canonical_rep(const CosetSpace& space, const Word& c) {
    return coset_rep(space, c) == c;
}

} // namespace setcong
