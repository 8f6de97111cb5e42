#include "setcong/search.hpp"

#include <algorithm>
#include <cassert>

namespace setcong {

namespace {

// Domains are bitmasks over labels {0,1..r}; label 0 means "in no set".
using Domain = std::uint32_t;

struct Csp {
    const CongruenceSystem& sys;
    int r;
    std::vector<Domain> base;             // after unary pruning + initial AC
    std::vector<std::vector<int>> fwd;    // per statement: x -> index of g_i x, -1 outside
    std::vector<std::vector<int>> bwd;    // per statement: x -> index of g_i^-1 x
    std::vector<Domain> left_mask, right_mask; // labels 1..r as bits
    long long nodes = 0;

    explicit Csp(const CongruenceSystem& s) : sys(s), r(s.r) {}

    bool propagate(std::vector<Domain>& dom, std::vector<int> queue) const {
        std::vector<char> queued(dom.size(), 0);
        for (int x : queue) queued[x] = 1;
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            queued[x] = 0;
            if (dom[x] == 0) return false;
            for (std::size_t i = 0; i < sys.statements.size(); ++i) {
                int y = fwd[i][x];
                if (y >= 0 && !revise_pair(dom, static_cast<int>(i), x, y, queue, queued))
                    return false;
                int p = bwd[i][x];
                if (p >= 0 && !revise_pair(dom, static_cast<int>(i), p, x, queue, queued))
                    return false;
            }
        }
        return true;
    }

    // Arc revision for the pair (x, y = g_i x).
    bool revise_pair(std::vector<Domain>& dom, int i, int x, int y, std::vector<int>& queue,
                     std::vector<char>& queued) const {
        const Domain l = left_mask[i], rm = right_mask[i];
        const bool congruence = sys.statements[i].kind == StatementKind::congruence;
        Domain dx = dom[x], dy = dom[y];
        Domain ndx = dx, ndy = dy;
        if ((dx & l) == 0) {
            if (congruence) ndy &= ~rm;
        } else if ((dx & ~l) == 0) {
            ndy &= rm;
        }
        if ((dy & rm) == 0) {
            ndx &= ~l;
        } else if ((dy & ~rm) == 0) {
            if (congruence) ndx &= l;
        }
        auto push = [&](int v) {
            if (!queued[v]) {
                queued[v] = 1;
                queue.push_back(v);
            }
        };
        if (ndx != dx) {
            dom[x] = ndx;
            if (ndx == 0) return false;
            push(x);
        }
        if (ndy != dy) {
            dom[y] = ndy;
            if (ndy == 0) return false;
            push(y);
        }
        return true;
    }

    bool assign(std::vector<Domain>& dom, int x, Domain value_bit) {
        ++nodes;
        dom[x] = value_bit;
        return propagate(dom, {x});
    }

    // Depth-first over variables from `next` on; values ascend.
    bool solve(std::vector<Domain>& dom, int next) {
        int n = static_cast<int>(dom.size());
        int x = -1;
        for (int q = next; q < n; ++q)
            if (__builtin_popcount(dom[q]) > 1) { x = q; break; }
        if (x < 0) return true;
        Domain options = dom[x];
        while (options) {
            Domain bit = options & (~options + 1);
            options ^= bit;
            std::vector<Domain> copy = dom;
            if (assign(copy, x, bit) && solve(copy, x + 1)) {
                dom = std::move(copy);
                return true;
            }
        }
        return false;
    }
};

} // namespace

SearchOutcome search_family(const CongruenceSystem& sys, const WitnessAssignment& wit,
                            int radius, int m) {
    sys.check_well_formed();
    if (wit.size() != sys.statements.size())
        throw ArityMismatch("one witness per statement required");
    if (radius < 0) throw Error("radius must be nonnegative");
    int max_len = 0;
    for (const Word& g : wit) {
        m = std::max(m, g.max_generator());
        max_len = std::max(max_len, g.length());
    }
    m = std::max(m, 1);

    SearchOutcome out;
    out.radius = radius;
    try {
        DecisionBound bound = theoretical_bound(m, std::max(max_len, 1), sys.r);
        out.completeness_bound = bound.word_length_bound;
        out.complete = Integer(radius) >= bound.word_length_bound;
    } catch (const LimitExceeded&) {
        out.completeness_bound = std::nullopt;
        out.complete = false;
    }

    CayleyBall ballv(m, radius + max_len);
    const int n = static_cast<int>(ballv.words.size());

    Csp csp(sys);
    csp.fwd.assign(sys.statements.size(), std::vector<int>(n, -1));
    csp.bwd.assign(sys.statements.size(), std::vector<int>(n, -1));
    for (std::size_t i = 0; i < sys.statements.size(); ++i) {
        Word inv = invert(wit[i]);
        for (int x = 0; x < n; ++x) {
            csp.fwd[i][x] = ballv.find(multiply(wit[i], ballv.words[x]));
            csp.bwd[i][x] = ballv.find(multiply(inv, ballv.words[x]));
        }
        csp.left_mask.push_back(static_cast<Domain>(sys.statements[i].left) << 1);
        csp.right_mask.push_back(static_cast<Domain>(sys.statements[i].right) << 1);
    }

    // Unary pruning at the ball boundary: a point labeled on the left side
    // needs its witness image inside the ball, and (for congruences) a point
    // labeled on the right side needs its preimage inside.
    csp.base.assign(n, (Domain{1} << (sys.r + 1)) - 1);
    for (std::size_t i = 0; i < sys.statements.size(); ++i) {
        const bool congruence = sys.statements[i].kind == StatementKind::congruence;
        for (int x = 0; x < n; ++x) {
            if (csp.fwd[i][x] < 0) csp.base[x] &= ~csp.left_mask[i];
            if (congruence && csp.bwd[i][x] < 0) csp.base[x] &= ~csp.right_mask[i];
        }
    }
    {
        std::vector<int> all(n);
        for (int x = 0; x < n; ++x) all[x] = x;
        bool ok = csp.propagate(csp.base, std::move(all));
        assert(ok); // the all-zero labeling always survives
        (void)ok;
    }

    // Seed the first nonzero position; everything before it is zero. The
    // running prefix state makes each seed start from an already-propagated
    // configuration.
    std::vector<Domain> prefix = csp.base;
    for (int p = 0; p < n; ++p) {
        Domain options = prefix[p] & ~Domain{1};
        while (options) {
            Domain bit = options & (~options + 1);
            options ^= bit;
            std::vector<Domain> dom = prefix;
            if (csp.assign(dom, p, bit) && csp.solve(dom, 0)) {
                std::vector<std::vector<Word>> sets(sys.r);
                for (int x = 0; x < n; ++x) {
                    int label = __builtin_ctz(dom[x]);
                    if (label > 0) sets[label - 1].push_back(ballv.words[x]);
                }
                out.sat = true;
                out.family = make_group_family(m, std::move(sets));
                out.nodes = csp.nodes;
                VerifyResult check = verify_family(out.family, wit, sys);
                if (!check.ok) throw Error("search produced an invalid family");
                return out;
            }
        }
        if ((prefix[p] & 1) == 0) break; // no solution can be zero here; seeds beyond are moot
        std::vector<Domain> next = prefix;
        if (!csp.assign(next, p, 1)) break;
        prefix = std::move(next);
    }
    out.sat = false;
    out.nodes = csp.nodes;
    return out;
}

bool cut_splice_minimal(const FiniteFamily& fam, const WitnessAssignment& wit) {
    if (!std::holds_alternative<GroupSpace>(fam.space))
        throw PreconditionFailed("audit applies to group-mode families");
    std::vector<Word> u = fam.set_union();
    if (u.empty()) return true;
    const Word& longest = u.back();
    int max_len = 1;
    for (const Word& g : wit) max_len = std::max(max_len, g.length());
    const int m = std::max(1, std::get<GroupSpace>(fam.space).m);

    auto label_of = [&](const Word& x) {
        for (int k = 0; k < fam.r(); ++k)
            if (std::binary_search(fam.sets[k].begin(), fam.sets[k].end(), x, length_lex_less))
                return k + 1;
        return 0;
    };

    // Profile of a final segment v: the labels of z * v for all |z| <= L.
    std::vector<Word> prefixes = ball(m, max_len);
    std::vector<std::vector<int>> profiles;
    for (int start = 0; start <= longest.length(); ++start) {
        std::vector<int> tail(longest.letters().begin() + start, longest.letters().end());
        Word v(tail);
        std::vector<int> profile;
        profile.reserve(prefixes.size());
        for (const Word& z : prefixes) profile.push_back(label_of(multiply(z, v)));
        profiles.push_back(std::move(profile));
    }
    for (std::size_t a = 0; a < profiles.size(); ++a)
        for (std::size_t b = a + 1; b < profiles.size(); ++b)
            if (profiles[a] == profiles[b]) return false;
    return true;
}

} // namespace setcong
