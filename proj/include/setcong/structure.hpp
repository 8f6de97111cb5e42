#pragma once

#include <cstdint>
#include <vector>

#include "setcong/word.hpp"

namespace setcong {

/// Finite subsets of a free group, with the graph structure induced by left
/// multiplication by generators (edges x -- f_i x).

/// All group elements on the tree geodesic between members stay inside;
/// equivalently the induced subgraph is connected.
bool is_connected(const std::vector<Word>& p);

/// Maximal runs {g^j x} inside p in the direction of g; each run sorted by
/// exponent.
std::vector<std::vector<Word>> lines(const std::vector<Word>& p, const Word& direction);

/// Per generator direction, the line cardinalities have gcd 1.
bool is_prime(const std::vector<Word>& p, int m = 0);

/// Same with the direction ranging over every group element; only directions
/// of the form s t^-1 (s, t distinct members) can carry a line of length two
/// or more, so the check is finite.
bool is_strongly_prime(const std::vector<Word>& p);

/// Equivalent tiling form of primality, by brute force: is p a disjoint union
/// f_i^0 T, ..., f_i^{k-1} T for some k >= 2? Exponential in |p|; test oracle.
bool has_translation_tiling(const std::vector<Word>& p, int m);

/// All connected subsets of F_m of size <= max_size containing the identity,
/// enumerated deterministically (every connected set is a right translate of
/// one of these, and the predicates here are right-translation invariant).
std::vector<std::vector<Word>> enumerate_connected_sets(int m, int max_size);

/// Random connected set containing the identity, grown frontier-by-frontier.
std::vector<Word> random_connected_set(int m, int size, std::uint64_t seed);

} // namespace setcong
