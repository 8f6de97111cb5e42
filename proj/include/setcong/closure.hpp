#pragma once

#include <vector>

#include "setcong/system.hpp"

namespace setcong {

/// Equivalence closure of the congruence statements over all 2^r index sets
/// (reflexive/symmetric/transitive, optionally the partition complementation
/// rule). Subcongruence statements contribute nothing here.
class CongruenceClosure {
public:
    CongruenceClosure(const CongruenceSystem& sys, bool use_complementation,
                      int limit = kClosureLimit);

    IndexSet find(IndexSet s) const;
    bool equivalent(IndexSet a, IndexSet b) const { return find(a) == find(b); }

    /// All classes, each sorted by bitmask; classes ordered by their minimum.
    std::vector<std::vector<IndexSet>> classes() const;

    int r() const { return r_; }

private:
    int r_;
    mutable std::vector<IndexSet> parent_;

    void link(IndexSet a, IndexSet b);
};

/// No self-complementary congruence L ~ L^c is deducible (complementation is
/// always part of the rule set for this notion).
bool is_weak(const CongruenceSystem& sys, int limit = kClosureLimit);

/// Preorder generated by the inclusion rule, both directions of every
/// congruence, the stated direction of every subcongruence, and (optionally)
/// the contravariant complementation rule. Inclusion edges are generated as
/// covering steps S -> S+{k}; transitivity supplies the rest.
class SubcongruenceClosure {
public:
    SubcongruenceClosure(const CongruenceSystem& sys, bool use_complementation,
                         int limit = kClosureLimit);

    /// Is U_lhs <= U_rhs deducible?
    bool deducible(IndexSet lhs, IndexSet rhs) const;

    int scc_of(IndexSet s) const { return scc_[s]; }
    int scc_count() const { return scc_count_; }
    int r() const { return r_; }

private:
    int r_;
    std::vector<std::vector<IndexSet>> statement_edges_; // per node, excludes covering edges
    std::vector<int> scc_;
    int scc_count_ = 0;

    template <typename Fn> void for_each_neighbor(IndexSet s, Fn&& fn) const;
    void compute_sccs();
};

/// No strict pair L > R with U_L <= U_R deducible. Complementation is used
/// exactly when sys.mode == partition.
bool is_consistent(const CongruenceSystem& sys, int limit = kClosureLimit);

} // namespace setcong
