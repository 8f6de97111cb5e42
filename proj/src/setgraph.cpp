#include "setcong/setgraph.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace setcong {

namespace {

std::unordered_map<Word, int, WordHash> index_of(const std::vector<Word>& base) {
    std::unordered_map<Word, int, WordHash> idx;
    for (std::size_t i = 0; i < base.size(); ++i) idx.emplace(base[i], static_cast<int>(i));
    return idx;
}

} // namespace

std::uint32_t ends_mask(const std::vector<Word>& base, int rho) {
    auto idx = index_of(base);
    std::uint32_t mask = 0;
    Word r = Word::letter(rho);
    for (std::size_t i = 0; i < base.size(); ++i)
        if (!idx.count(multiply(r, base[i]))) mask |= 1u << i;
    return mask;
}

std::vector<Word> ends(const std::vector<Word>& p, int rho) {
    std::uint32_t mask = ends_mask(p, rho);
    std::vector<Word> out;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (mask & (1u << i)) out.push_back(p[i]);
    return out;
}

SetGraph build_setgraph(const std::vector<Word>& p, int limit) {
    if (p.empty()) throw Error("base set must be nonempty");
    if (static_cast<int>(p.size()) > limit)
        throw LimitExceeded("base set larger than the subset-graph limit");
    SetGraph g;
    g.base = p;
    std::sort(g.base.begin(), g.base.end(), length_lex_less);
    g.base.erase(std::unique(g.base.begin(), g.base.end()), g.base.end());
    g.m = 1;
    for (const Word& w : g.base) g.m = std::max(g.m, w.max_generator());

    const int n = static_cast<int>(g.base.size());
    const std::uint32_t full = (1u << n) - 1;
    auto idx = index_of(g.base);

    struct Direction {
        int rho;
        std::uint32_t ends;
        std::uint32_t ends_inv;
        std::vector<int> image; // index of rho * base[i], -1 outside
    };
    std::vector<Direction> dirs;
    for (int i = 1; i <= g.m; ++i)
        for (int sign : {+1, -1}) {
            Direction d;
            d.rho = sign * i;
            d.ends = ends_mask(g.base, d.rho);
            d.ends_inv = ends_mask(g.base, -d.rho);
            Word r = Word::letter(d.rho);
            for (int j = 0; j < n; ++j) {
                auto it = idx.find(multiply(r, g.base[j]));
                d.image.push_back(it == idx.end() ? -1 : it->second);
            }
            dirs.push_back(std::move(d));
        }

    g.out_edges.assign(full + 1, {});
    for (std::uint32_t s = 1; s < full; ++s) {
        for (const Direction& d : dirs) {
            std::uint32_t moved = 0;
            std::uint32_t interior = s & ~d.ends;
            for (int j = 0; j < n; ++j)
                if (interior & (1u << j)) moved |= 1u << d.image[j];
            bool ends_inside = (d.ends & ~s) == 0;
            std::uint32_t target = moved | (ends_inside ? d.ends_inv : 0u);
            if (target == 0) continue;
            SetGraphEdge e;
            e.from = s;
            e.to = target;
            e.label = d.rho;
            e.good = ends_inside || (d.ends & s) == 0;
            g.out_edges[s].push_back(static_cast<int>(g.edges.size()));
            g.edges.push_back(e);
        }
    }
    return g;
}

namespace {

// Tarjan over the masks 1..full-1 using the prebuilt edge lists.
std::vector<int> scc_ids(const SetGraph& g) {
    const std::uint32_t full = (1u << g.base.size()) - 1;
    std::vector<int> index(full + 1, -1), low(full + 1, 0), scc(full + 1, -1);
    std::vector<char> on_stack(full + 1, 0);
    std::vector<std::uint32_t> stack;
    int next = 0, count = 0;

    struct Frame {
        std::uint32_t node;
        std::size_t next_edge;
    };
    std::vector<Frame> call;
    for (std::uint32_t root = 1; root < full; ++root) {
        if (index[root] >= 0) continue;
        index[root] = low[root] = next++;
        stack.push_back(root);
        on_stack[root] = 1;
        call.push_back({root, 0});
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.next_edge < g.out_edges[f.node].size()) {
                std::uint32_t w = g.edges[g.out_edges[f.node][f.next_edge++]].to;
                if (index[w] < 0) {
                    index[w] = low[w] = next++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.node] = std::min(low[f.node], index[w]);
                }
            } else {
                if (low[f.node] == index[f.node]) {
                    std::uint32_t w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        scc[w] = count;
                    } while (w != f.node);
                    ++count;
                }
                std::uint32_t done = f.node;
                call.pop_back();
                if (!call.empty())
                    low[call.back().node] = std::min(low[call.back().node], low[done]);
            }
        }
    }
    return scc;
}

} // namespace

bool no_bad_edge_in_cycle(const SetGraph& g) {
    std::vector<int> scc = scc_ids(g);
    for (const SetGraphEdge& e : g.edges)
        if (!e.good && scc[e.from] == scc[e.to]) return false;
    return true;
}

bool good_graph_acyclic(const SetGraph& g) {
    // Each good edge pairs with its reverse (label negated); keep the
    // positive-label representative of each pair to build the undirected
    // multigraph, then union-find for cycles.
    const std::uint32_t full = (1u << g.base.size()) - 1;
    std::vector<std::uint32_t> parent(full + 1);
    for (std::uint32_t v = 0; v <= full; ++v) parent[v] = v;
    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const SetGraphEdge& e : g.edges) {
        if (!e.good || e.label < 0) continue;
        if (e.from == e.to) return false; // self-loop
        std::uint32_t a = find(e.from), b = find(e.to);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

bool paths_must_backtrack(const SetGraph& g, long long length, long long budget) {
    if (length <= 0) return true;
    if (g.edges.empty()) return true;
    // A walk avoiding inverse-label pairs exists iff the DP over states
    // (last edge) survives `length` steps.
    const std::size_t ecount = g.edges.size();
    if (static_cast<long long>(ecount) * length > budget)
        throw BudgetExceeded("walk enumeration budget exceeded");
    std::vector<char> alive(ecount, 1); // walks of length 1
    for (long long step = 2; step <= length; ++step) {
        std::vector<char> next(ecount, 0);
        bool any = false;
        for (std::size_t e = 0; e < ecount; ++e) {
            if (!alive[e]) continue;
            for (int out : g.out_edges[g.edges[e].to]) {
                if (g.edges[out].label == -g.edges[e].label) continue;
                if (!next[out]) {
                    next[out] = 1;
                    any = true;
                }
            }
        }
        if (!any) return true; // every longer walk is forced to backtrack
        alive = std::move(next);
    }
    return false; // some backtrack-free walk of the requested length exists
}

} // namespace setcong
