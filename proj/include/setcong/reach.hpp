#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "setcong/closure.hpp"
#include "setcong/system.hpp"
#include "setcong/word.hpp"

namespace setcong {

/// Possible labels at g for a point labeled j at the identity, in the
/// recursively labeled model over F x N. Statement i is tied to generator i;
/// generators past the statement list behave as the trivial statement
/// A1 ~ A1. Labels live in {1..r} (partition) or {1..r+1} (family mode,
/// where r+1 is the outside label).
struct ReachSet {
    Word g;
    int universe_size = 0;             // r or r+1
    std::vector<IndexSet> per_label;   // per j in {1..universe}, each nonempty
};

class ReachCache {
public:
    ReachCache(CongruenceSystem sys, Mode mode, int m = 0);

    const ReachSet& at(const Word& g);

    /// Derived view: nonempty proper L(g), R(g) with per-label sets equal to
    /// R(g) or the universe on L(g) and to the complement of R(g) or the
    /// universe off it. Exists for every nonidentity g; nullopt only for e.
    struct SplitView {
        IndexSet left;
        IndexSet right;
    };
    std::optional<SplitView> split_view(const Word& g);

    int r() const { return sys_.r; }
    int universe_size() const { return universe_size_; }
    int m() const { return m_; }
    const CongruenceSystem& system() const { return sys_; }
    Mode mode() const { return mode_; }

private:
    CongruenceSystem sys_;
    Mode mode_;
    int m_;
    int universe_size_;
    IndexSet universe_;
    std::unordered_map<Word, ReachSet, WordHash> memo_;

    IndexSet step(IndexSet prev, int letter) const;
};

/// Pairs (L, R) over {1..r} with g mapping the left union exactly onto the
/// right union in the labeled model: every left label lands inside R and no
/// other label touches R.
std::vector<std::pair<IndexSet, IndexSet>> witnessed_congruences(ReachCache& cache,
                                                                 const Word& g);

/// Pairs with the left union mapped into the right union.
std::vector<std::pair<IndexSet, IndexSet>> witnessed_subcongruences(ReachCache& cache,
                                                                    const Word& g);

struct CompletenessReport {
    bool complete = true;
    Word counterexample_g;
    std::pair<IndexSet, IndexSet> counterexample_pair{0, 0};
    bool counterexample_is_subcongruence = false;
    long long pairs_checked = 0;
};

/// Every witnessed (sub)congruence for every reduced g with |g| <= depth is
/// deducible by the closure rules (complementation iff partition mode). A
/// failure would contradict the underlying completeness theorems and
/// signals an implementation bug. Improper statements are rejected unless
/// allow_improper is set (no guarantee then holds).
CompletenessReport completeness_check(const CongruenceSystem& sys, int depth, Mode mode,
                                      bool allow_improper = false);

struct SampleReport {
    bool witnesses_ok = true;       // designated statements hold on the sample
    bool labels_within_reach = true; // observed labels within the reach sets
    long long points = 0;
};

/// Randomized labeling of (ball x fibers) by the recursive rule; uniform
/// independent choices, reproducible from the seed.
SampleReport sample_labeling(const CongruenceSystem& sys, int depth, int fibers,
                             std::uint64_t seed, Mode mode);

} // namespace setcong
