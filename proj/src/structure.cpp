#include "setcong/structure.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

namespace setcong {

namespace {

using WordSet = std::unordered_set<Word, WordHash>;

WordSet to_set(const std::vector<Word>& p) { return WordSet(p.begin(), p.end()); }

int max_generator_of(const std::vector<Word>& p) {
    int m = 1;
    for (const Word& w : p) m = std::max(m, w.max_generator());
    return m;
}

} // namespace

bool is_connected(const std::vector<Word>& p) {
    if (p.size() <= 1) return true;
    WordSet present = to_set(p);
    const int m = max_generator_of(p);
    // The Cayley graph is a tree, so an induced connected subgraph is exactly
    // a geodesically closed subset.
    std::vector<Word> stack{p.front()};
    WordSet seen{p.front()};
    while (!stack.empty()) {
        Word x = stack.back();
        stack.pop_back();
        for (int i = 1; i <= m; ++i)
            for (int sign : {+1, -1}) {
                Word y = multiply(Word::letter(sign * i), x);
                if (present.count(y) && !seen.count(y)) {
                    seen.insert(y);
                    stack.push_back(y);
                }
            }
    }
    return seen.size() == p.size();
}

std::vector<std::vector<Word>> lines(const std::vector<Word>& p, const Word& direction) {
    std::vector<std::vector<Word>> out;
    if (direction.empty()) { // every point is its own run
        for (const Word& x : p) out.push_back({x});
        return out;
    }
    WordSet present = to_set(p);
    Word inv = invert(direction);
    for (const Word& x : p) {
        if (present.count(multiply(inv, x))) continue; // not a run start
        std::vector<Word> run;
        Word cur = x;
        while (present.count(cur)) {
            run.push_back(cur);
            cur = multiply(direction, cur);
        }
        out.push_back(std::move(run));
    }
    return out;
}

bool is_prime(const std::vector<Word>& p, int m) {
    if (p.empty()) return true;
    if (m == 0) m = max_generator_of(p);
    for (int i = 1; i <= m; ++i) {
        int g = 0;
        for (const auto& run : lines(p, Word::letter(i)))
            g = std::gcd(g, static_cast<int>(run.size()));
        if (g != 1) return false;
    }
    return true;
}

bool is_strongly_prime(const std::vector<Word>& p) {
    if (p.size() <= 1) return true;
    // Directions with every line a singleton pass trivially; the rest arrive
    // as quotients of two distinct members.
    std::set<std::vector<Letter>> tried;
    for (const Word& s : p)
        for (const Word& t : p) {
            if (s == t) continue;
            Word g = multiply(s, invert(t));
            if (!tried.insert(g.letters()).second) continue;
            int gc = 0;
            for (const auto& run : lines(p, g)) gc = std::gcd(gc, static_cast<int>(run.size()));
            if (gc != 1) return false;
        }
    return true;
}

bool has_translation_tiling(const std::vector<Word>& p, int m) {
    const int n = static_cast<int>(p.size());
    if (n == 0) return false;
    std::vector<Word> sorted = p;
    std::sort(sorted.begin(), sorted.end(), length_lex_less);
    for (int i = 1; i <= m; ++i) {
        Word f = Word::letter(i);
        for (int k = 2; k <= n; ++k) {
            if (n % k != 0) continue;
            const int tile = n / k;
            // T must be a subset of p of size n/k.
            std::vector<int> pick(tile);
            std::iota(pick.begin(), pick.end(), 0);
            // enumerate combinations
            for (;;) {
                std::vector<Word> cover;
                for (int idx : pick) {
                    Word base = sorted[idx];
                    for (int j = 0; j < k; ++j) {
                        cover.push_back(base);
                        base = multiply(f, base);
                    }
                }
                std::sort(cover.begin(), cover.end(), length_lex_less);
                cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
                if (cover == sorted) return true;
                // next combination
                int pos = tile - 1;
                while (pos >= 0 && pick[pos] == n - tile + pos) --pos;
                if (pos < 0) break;
                ++pick[pos];
                for (int q = pos + 1; q < tile; ++q) pick[q] = pick[q - 1] + 1;
            }
        }
    }
    return false;
}

namespace {

std::vector<Word> neighbors_of(const Word& x, int m) {
    std::vector<Word> out;
    out.reserve(2 * m);
    for (int i = 1; i <= m; ++i)
        for (int sign : {+1, -1}) out.push_back(multiply(Word::letter(sign * i), x));
    return out;
}

void enumerate_rec(int m, int max_size, std::vector<Word>& current, WordSet& in_current,
                   const std::vector<Word>& candidates, WordSet& forbidden,
                   std::vector<std::vector<Word>>& out) {
    out.push_back(current);
    if (static_cast<int>(current.size()) == max_size) return;
    std::vector<Word> locally_forbidden;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const Word& v = candidates[i];
        std::vector<Word> extended(candidates.begin() + i + 1, candidates.end());
        for (const Word& nb : neighbors_of(v, m))
            if (!in_current.count(nb) && !forbidden.count(nb) &&
                std::find(extended.begin(), extended.end(), nb) == extended.end() &&
                std::find(candidates.begin(), candidates.begin() + i + 1, nb) ==
                    candidates.begin() + i + 1)
                extended.push_back(nb);
        current.push_back(v);
        in_current.insert(v);
        enumerate_rec(m, max_size, current, in_current, extended, forbidden, out);
        in_current.erase(v);
        current.pop_back();
        forbidden.insert(v);
        locally_forbidden.push_back(v);
    }
    for (const Word& v : locally_forbidden) forbidden.erase(v);
}

} // namespace

std::vector<std::vector<Word>> enumerate_connected_sets(int m, int max_size) {
    std::vector<std::vector<Word>> out;
    if (max_size < 1) return out;
    std::vector<Word> current{Word{}};
    WordSet in_current{Word{}};
    WordSet forbidden;
    enumerate_rec(m, max_size, current, in_current, neighbors_of(Word{}, m), forbidden, out);
    return out;
}

std::vector<Word> random_connected_set(int m, int size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Word> current{Word{}};
    WordSet in_current{Word{}};
    std::vector<Word> frontier = neighbors_of(Word{}, m);
    while (static_cast<int>(current.size()) < size && !frontier.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
        std::size_t at = pick(rng);
        Word v = frontier[at];
        frontier.erase(frontier.begin() + static_cast<long>(at));
        if (in_current.count(v)) continue;
        current.push_back(v);
        in_current.insert(v);
        for (const Word& nb : neighbors_of(v, m))
            if (!in_current.count(nb)) frontier.push_back(nb);
    }
    std::sort(current.begin(), current.end(), length_lex_less);
    return current;
}

} // namespace setcong
