#pragma once

#include <cstdint>
#include <vector>

#include "setcong/word.hpp"

namespace setcong {

/// Labeled digraph on the nonempty proper subsets of a finite base set
/// P in F_m. For a signed generator rho, the successor of S is
///   S' = rho(S \ E(rho)) u E',  E' = E(rho^-1) if E(rho) subseteq S else {},
/// with an edge S -> S' present iff S' is nonempty. The edge is good when
/// E(rho) is inside S or disjoint from it (good edges pair up with their
/// reverses and preserve |S|; bad edges strictly shrink).
struct SetGraphEdge {
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    int label = 0; // signed generator
    bool good = false;
};

struct SetGraph {
    std::vector<Word> base; // indexed listing of P
    int m = 1;
    std::vector<SetGraphEdge> edges;
    std::vector<std::vector<int>> out_edges; // per vertex mask, indices into edges

    int vertex_count() const { return (1 << base.size()) - 2; }
};

/// E(rho) = {p in P : rho p not in P}, as a bitmask over the indexed base.
std::uint32_t ends_mask(const std::vector<Word>& base, int rho);
std::vector<Word> ends(const std::vector<Word>& p, int rho);

SetGraph build_setgraph(const std::vector<Word>& p, int limit = 12);

/// No strongly connected component contains a bad edge.
bool no_bad_edge_in_cycle(const SetGraph& g);

/// The undirected graph formed by merging oppositely-directed good edge
/// pairs is acyclic (parallel edges between the same pair count as a cycle).
bool good_graph_acyclic(const SetGraph& g);

/// Every directed walk with `length` edges uses a pair of consecutive edges
/// with mutually inverse labels. With length = 2^|P| this is the full
/// backtracking property; smaller lengths are partial checks.
bool paths_must_backtrack(const SetGraph& g, long long length,
                          long long budget = 200'000'000);

} // namespace setcong
