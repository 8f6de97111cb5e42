#include "setcong/closure.hpp"

#include <algorithm>
#include <map>

namespace setcong {

namespace {

void check_limit(const CongruenceSystem& sys, int limit) {
    sys.check_well_formed();
    if (sys.r > limit) throw LimitExceeded("r exceeds closure limit");
}

} // namespace

CongruenceClosure::CongruenceClosure(const CongruenceSystem& sys, bool use_complementation,
                                     int limit)
    : r_(sys.r) {
    check_limit(sys, limit);
    const std::size_t n = std::size_t{1} << r_;
    parent_.resize(n);
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<IndexSet>(i);

    // The generating pair set is made complementation-closed up front; the
    // equivalence generated by a complement-invariant relation is itself
    // complement-invariant.
    for (const Statement& st : sys.statements) {
        if (st.kind != StatementKind::congruence) continue;
        link(st.left, st.right);
        if (use_complementation)
            link(complement_in(st.left, r_), complement_in(st.right, r_));
    }
}

IndexSet CongruenceClosure::find(IndexSet s) const {
    IndexSet root = s;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[s] != root) {
        IndexSet next = parent_[s];
        parent_[s] = root;
        s = next;
    }
    return root;
}

void CongruenceClosure::link(IndexSet a, IndexSet b) {
    IndexSet ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (ra > rb) std::swap(ra, rb);
    parent_[rb] = ra; // smaller bitmask becomes the representative
}

std::vector<std::vector<IndexSet>> CongruenceClosure::classes() const {
    std::map<IndexSet, std::vector<IndexSet>> by_root;
    const std::size_t n = std::size_t{1} << r_;
    for (std::size_t i = 0; i < n; ++i)
        by_root[find(static_cast<IndexSet>(i))].push_back(static_cast<IndexSet>(i));
    std::vector<std::vector<IndexSet>> out;
    out.reserve(by_root.size());
    for (auto& [root, members] : by_root) out.push_back(std::move(members));
    return out;
}

bool is_weak(const CongruenceSystem& sys, int limit) {
    CongruenceClosure cl(sys, /*use_complementation=*/true, limit);
    const IndexSet n = full_set(sys.r);
    for (IndexSet s = 0; s <= n; ++s)
        if (cl.equivalent(s, complement_in(s, sys.r))) return false;
    return true;
}

SubcongruenceClosure::SubcongruenceClosure(const CongruenceSystem& sys,
                                           bool use_complementation, int limit)
    : r_(sys.r) {
    check_limit(sys, limit);
    const std::size_t n = std::size_t{1} << r_;
    statement_edges_.resize(n);

    auto add_edge = [&](IndexSet from, IndexSet to) {
        statement_edges_[from].push_back(to);
        if (use_complementation)
            statement_edges_[complement_in(to, r_)].push_back(complement_in(from, r_));
    };
    // Complements of covering edges are covering edges, so only statement
    // edges need explicit complement images.
    for (const Statement& st : sys.statements) {
        add_edge(st.left, st.right);
        if (st.kind == StatementKind::congruence) add_edge(st.right, st.left);
    }
    compute_sccs();
}

template <typename Fn>
void SubcongruenceClosure::for_each_neighbor(IndexSet s, Fn&& fn) const {
    IndexSet missing = complement_in(s, r_);
    while (missing) {
        IndexSet bit = missing & (~missing + 1);
        fn(s | bit);
        missing ^= bit;
    }
    for (IndexSet t : statement_edges_[s]) fn(t);
}

bool SubcongruenceClosure::deducible(IndexSet lhs, IndexSet rhs) const {
    if (lhs == rhs) return true;
    const std::size_t n = std::size_t{1} << r_;
    std::vector<char> seen(n, 0);
    std::vector<IndexSet> stack{lhs};
    seen[lhs] = 1;
    bool found = false;
    while (!stack.empty() && !found) {
        IndexSet s = stack.back();
        stack.pop_back();
        for_each_neighbor(s, [&](IndexSet t) {
            if (t == rhs) found = true;
            if (!seen[t]) {
                seen[t] = 1;
                stack.push_back(t);
            }
        });
    }
    return found;
}

void SubcongruenceClosure::compute_sccs() {
    // Iterative Tarjan over the implicit graph.
    const std::size_t n = std::size_t{1} << r_;
    scc_.assign(n, -1);
    std::vector<int> index(n, -1), lowlink(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<IndexSet> scc_stack;
    int next_index = 0;

    struct Frame {
        IndexSet node;
        std::vector<IndexSet> succ;
        std::size_t next;
    };
    std::vector<Frame> call;

    auto successors = [&](IndexSet s) {
        std::vector<IndexSet> out;
        for_each_neighbor(s, [&](IndexSet t) { out.push_back(t); });
        return out;
    };

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        call.push_back({static_cast<IndexSet>(root), successors(static_cast<IndexSet>(root)), 0});
        index[root] = lowlink[root] = next_index++;
        scc_stack.push_back(static_cast<IndexSet>(root));
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.next < f.succ.size()) {
                IndexSet w = f.succ[f.next++];
                if (index[w] < 0) {
                    index[w] = lowlink[w] = next_index++;
                    scc_stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, successors(w), 0});
                } else if (on_stack[w]) {
                    lowlink[f.node] = std::min(lowlink[f.node], index[w]);
                }
            } else {
                if (lowlink[f.node] == index[f.node]) {
                    IndexSet w;
                    do {
                        w = scc_stack.back();
                        scc_stack.pop_back();
                        on_stack[w] = 0;
                        scc_[w] = scc_count_;
                    } while (w != f.node);
                    ++scc_count_;
                }
                IndexSet done = f.node;
                call.pop_back();
                if (!call.empty())
                    lowlink[call.back().node] =
                        std::min(lowlink[call.back().node], lowlink[done]);
            }
        }
    }
}

bool is_consistent(const CongruenceSystem& sys, int limit) {
    SubcongruenceClosure cl(sys, sys.mode == Mode::partition, limit);
    // A strict pair inside one SCC always contains a covering pair inside that
    // SCC, so scanning covering pairs suffices.
    const IndexSet n = full_set(sys.r);
    for (IndexSet s = 0; s <= n; ++s) {
        IndexSet missing = complement_in(s, sys.r);
        while (missing) {
            IndexSet bit = missing & (~missing + 1);
            if (cl.scc_of(s) == cl.scc_of(s | bit)) return false;
            missing ^= bit;
        }
    }
    return true;
}

} // namespace setcong
