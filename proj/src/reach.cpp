#include "setcong/reach.hpp"

#include <algorithm>
#include <random>

namespace setcong {

namespace {

Statement statement_for(const CongruenceSystem& sys, int generator) {
    if (generator <= static_cast<int>(sys.statements.size()))
        return sys.statements[generator - 1];
    return {StatementKind::congruence, 1, 1}; // trivial padding statement A1 ~ A1
}

} // namespace

ReachCache::ReachCache(CongruenceSystem sys, Mode mode, int m)
    : sys_(std::move(sys)), mode_(mode), m_(m) {
    sys_.check_well_formed();
    if (m_ == 0) m_ = std::max<std::size_t>(1, sys_.statements.size());
    if (static_cast<int>(sys_.statements.size()) > m_)
        throw TooManyStatements("need one generator per statement");
    universe_size_ = sys_.r + (mode_ == Mode::family ? 1 : 0);
    if (universe_size_ > 31) throw LimitExceeded("universe too wide");
    universe_ = full_set(universe_size_);
}

IndexSet ReachCache::step(IndexSet prev, int letter) const {
    const int gen = std::abs(letter);
    const Statement st = statement_for(sys_, gen);
    if (st.kind == StatementKind::congruence) {
        IndexSet l = st.left, r = st.right;
        if (letter < 0) std::swap(l, r);
        if (subset_of(prev, l)) return r;
        if ((prev & l) == 0) return universe_ & ~r;
        return universe_;
    }
    if (letter > 0) {
        if (subset_of(prev, st.left)) return st.right;
        return universe_;
    }
    if ((prev & st.right) == 0) return universe_ & ~st.left;
    return universe_;
}

const ReachSet& ReachCache::at(const Word& g) {
    auto it = memo_.find(g);
    if (it != memo_.end()) return it->second;

    ReachSet rs;
    rs.g = g;
    rs.universe_size = universe_size_;
    if (g.empty()) {
        for (int j = 1; j <= universe_size_; ++j) rs.per_label.push_back(IndexSet{1} << (j - 1));
    } else {
        // g = letter * suffix; recurse on the shorter suffix.
        std::vector<int> tail(g.letters().begin() + 1, g.letters().end());
        const ReachSet& prev = at(Word(tail));
        const int letter = g.at(0);
        for (int j = 1; j <= universe_size_; ++j)
            rs.per_label.push_back(step(prev.per_label[j - 1], letter));
    }
    for (IndexSet s : rs.per_label)
        if (s == 0) throw Error("reach set became empty"); // cannot happen for proper systems
    return memo_.emplace(g, std::move(rs)).first->second;
}

std::optional<ReachCache::SplitView> ReachCache::split_view(const Word& g) {
    if (g.empty()) return std::nullopt;
    const ReachSet& rs = at(g);
    // Candidate right sides: the non-universe values among the per-label
    // sets (at most two, complementary), or anything when all are universal.
    std::vector<IndexSet> values;
    for (IndexSet s : rs.per_label)
        if (s != universe_ && std::find(values.begin(), values.end(), s) == values.end())
            values.push_back(s);
    std::vector<IndexSet> candidates;
    for (IndexSet v : values) {
        candidates.push_back(v);
        candidates.push_back(universe_ & ~v);
    }
    if (values.empty()) candidates.push_back(1); // degenerate: any proper nonempty works

    for (IndexSet right : candidates) {
        if (right == 0 || right == universe_) continue;
        IndexSet forced_in = 0, forced_out = 0, free_labels = 0;
        bool feasible = true;
        for (int j = 1; j <= universe_size_ && feasible; ++j) {
            IndexSet s = rs.per_label[j - 1];
            bool can_in = (s == right) || (s == universe_);
            bool can_out = (s == (universe_ & ~right)) || (s == universe_);
            if (can_in && can_out)
                free_labels |= IndexSet{1} << (j - 1);
            else if (can_in)
                forced_in |= IndexSet{1} << (j - 1);
            else if (can_out)
                forced_out |= IndexSet{1} << (j - 1);
            else
                feasible = false;
        }
        if (!feasible) continue;
        IndexSet left = forced_in;
        if (left == 0) {
            if (free_labels == 0) continue;
            left = free_labels & (~free_labels + 1); // take one free label
        }
        if (left != 0 && left != universe_ && (left | forced_out | free_labels) == universe_)
            return SplitView{left, right};
    }
    return std::nullopt;
}

namespace {

std::vector<std::pair<IndexSet, IndexSet>> witnessed_pairs(ReachCache& cache, const Word& g,
                                                           bool exact) {
    const ReachSet& rs = cache.at(g);
    const int r = cache.r();
    const IndexSet sets_mask = full_set(r);
    std::vector<std::pair<IndexSet, IndexSet>> out;
    for (IndexSet left = 0; left <= sets_mask; ++left) {
        IndexSet required = 0;
        IndexSet forbidden = 0;
        for (int j = 1; j <= cache.universe_size(); ++j) {
            if (contains(left, j))
                required |= rs.per_label[j - 1];
            else
                forbidden |= rs.per_label[j - 1];
        }
        if (required & ~sets_mask) continue; // some left label escapes the r sets
        for (IndexSet right = 0; right <= sets_mask; ++right) {
            if (!subset_of(required, right)) continue;
            if (exact && (right & forbidden)) continue;
            out.emplace_back(left, right);
        }
    }
    return out;
}

} // namespace

std::vector<std::pair<IndexSet, IndexSet>> witnessed_congruences(ReachCache& cache,
                                                                 const Word& g) {
    return witnessed_pairs(cache, g, /*exact=*/true);
}

std::vector<std::pair<IndexSet, IndexSet>> witnessed_subcongruences(ReachCache& cache,
                                                                    const Word& g) {
    return witnessed_pairs(cache, g, /*exact=*/false);
}

CompletenessReport completeness_check(const CongruenceSystem& sys, int depth, Mode mode,
                                      bool allow_improper) {
    if (!allow_improper && !sys.all_proper())
        throw PreconditionFailed(
            "completeness holds only for proper statements; improper ones (like A1 ~ {}) "
            "admit consequences the rules cannot derive");

    ReachCache cache(sys, mode);
    const bool complementation = mode == Mode::partition;
    CongruenceClosure cong(sys, complementation);
    SubcongruenceClosure sub(sys, complementation);

    CompletenessReport report;
    for (const Word& g : ball(cache.m(), depth)) {
        for (const auto& [l, r] : witnessed_congruences(cache, g)) {
            ++report.pairs_checked;
            if (!cong.equivalent(l, r)) {
                report.complete = false;
                report.counterexample_g = g;
                report.counterexample_pair = {l, r};
                report.counterexample_is_subcongruence = false;
                return report;
            }
        }
        for (const auto& [l, r] : witnessed_subcongruences(cache, g)) {
            ++report.pairs_checked;
            if (!sub.deducible(l, r)) {
                report.complete = false;
                report.counterexample_g = g;
                report.counterexample_pair = {l, r};
                report.counterexample_is_subcongruence = true;
                return report;
            }
        }
    }
    return report;
}

SampleReport sample_labeling(const CongruenceSystem& sys, int depth, int fibers,
                             std::uint64_t seed, Mode mode) {
    ReachCache cache(sys, mode);
    const int m = cache.m();
    const int universe = cache.universe_size();
    std::mt19937_64 rng(seed);

    const std::vector<Word> words = ball(m, depth);
    std::unordered_map<Word, int, WordHash> index;
    for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], static_cast<int>(i));

    auto pick = [&](IndexSet options) {
        std::vector<int> members = set_members(options);
        std::uniform_int_distribution<std::size_t> d(0, members.size() - 1);
        return members[d(rng)];
    };

    // labels[x][n]: the ball is filled in length order so the shorter suffix
    // is always labeled first.
    std::vector<std::vector<int>> labels(words.size(), std::vector<int>(fibers, 0));
    for (std::size_t x = 0; x < words.size(); ++x) {
        const Word& g = words[x];
        if (g.empty()) {
            for (int n = 0; n < fibers; ++n) labels[x][n] = pick(full_set(universe));
            continue;
        }
        std::vector<int> tail(g.letters().begin() + 1, g.letters().end());
        const int suffix = index.at(Word(tail));
        const int letter = g.at(0);
        const int gen = std::abs(letter);
        const Statement st = gen <= static_cast<int>(sys.statements.size())
                                 ? sys.statements[gen - 1]
                                 : Statement{StatementKind::congruence, 1, 1};
        for (int n = 0; n < fibers; ++n) {
            const int prev = labels[suffix][n];
            IndexSet options;
            if (st.kind == StatementKind::congruence) {
                IndexSet l = st.left, r = st.right;
                if (letter < 0) std::swap(l, r);
                options = contains(l, prev) ? r : (full_set(universe) & ~r);
            } else if (letter > 0) {
                options = contains(st.left, prev) ? st.right : full_set(universe);
            } else {
                options = contains(st.right, prev) ? full_set(universe)
                                                   : (full_set(universe) & ~st.left);
            }
            labels[x][n] = pick(options);
        }
    }

    SampleReport report;
    report.points = static_cast<long long>(words.size()) * fibers;

    // (a) each statement is witnessed by its designated generator on the
    // sampled region (pairs whose image stays inside the ball).
    for (std::size_t i = 0; i < sys.statements.size(); ++i) {
        const Statement& st = sys.statements[i];
        const Word gen = Word::letter(static_cast<int>(i) + 1);
        for (std::size_t x = 0; x < words.size() && report.witnesses_ok; ++x) {
            auto it = index.find(multiply(gen, words[x]));
            if (it == index.end()) continue;
            for (int n = 0; n < fibers; ++n) {
                bool in_left = contains(st.left, labels[x][n]);
                bool in_right = contains(st.right, labels[it->second][n]);
                bool ok = st.kind == StatementKind::congruence ? (in_left == in_right)
                                                               : (!in_left || in_right);
                if (!ok) {
                    report.witnesses_ok = false;
                    break;
                }
            }
        }
    }

    // (b) observed labels stay inside the reach sets.
    const int e_index = index.at(Word{});
    for (std::size_t x = 0; x < words.size() && report.labels_within_reach; ++x) {
        const ReachSet& rs = cache.at(words[x]);
        for (int n = 0; n < fibers; ++n) {
            const int j = labels[e_index][n];
            if (!contains(rs.per_label[j - 1], labels[x][n])) {
                report.labels_within_reach = false;
                break;
            }
        }
    }
    return report;
}

} // namespace setcong
