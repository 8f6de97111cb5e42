#include "setcong/word.hpp"

#include <algorithm>
#include <cassert>

namespace setcong {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
    if (!out.empty() && out.back() == -l)
        out.pop_back();
    else
        out.push_back(l);
}

} // namespace

Word::Word(std::span<const int> raw) {
    for (int l : raw) {
        if (l == 0 || l > 26 || l < -26) throw Error("generator index out of range");
        push_reduced(letters_, static_cast<Letter>(l));
    }
}

Word Word::letter(int signed_index) {
    int raw[] = {signed_index};
    return Word(raw);
}

Word Word::power(int signed_index, int exponent) {
    Word w;
    int l = exponent >= 0 ? signed_index : -signed_index;
    for (int i = 0; i < std::abs(exponent); ++i) w.letters_.push_back(static_cast<Letter>(l));
    return w;
}

int Word::max_generator() const {
    int m = 0;
    for (Letter l : letters_) m = std::max(m, std::abs(static_cast<int>(l)));
    return m;
}

Word multiply(const Word& u, const Word& v) {
    Word out;
    out.letters_ = u.letters_;
    out.letters_.reserve(u.letters_.size() + v.letters_.size());
    for (Letter l : v.letters_) push_reduced(out.letters_, l);
    return out;
}

Word invert(const Word& u) {
    Word out;
    out.letters_.reserve(u.letters_.size());
    for (auto it = u.letters_.rbegin(); it != u.letters_.rend(); ++it)
        out.letters_.push_back(static_cast<Letter>(-*it));
    return out;
}

Word word_pow(const Word& u, int k) {
    Word base = k >= 0 ? u : invert(u);
    Word out;
    for (int i = 0; i < std::abs(k); ++i) out = multiply(out, base);
    return out;
}

int letter_rank(Letter l) {
    int i = std::abs(static_cast<int>(l));
    return (i - 1) * 2 + (l < 0 ? 1 : 0);
}

bool length_lex_less(const Word& a, const Word& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    for (int i = 0; i < a.length(); ++i)
        if (a.at(i) != b.at(i)) return letter_rank(a.at(i)) < letter_rank(b.at(i));
    return false;
}

std::size_t WordHash::operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Letter l : w.letters()) {
        h ^= static_cast<std::size_t>(static_cast<unsigned char>(l));
        h *= 1099511628211ull;
    }
    return h;
}

CyclicForm cyclically_reduce(const Word& u) {
    int lo = 0, hi = u.length();
    while (hi - lo >= 2 && u.at(lo) == -u.at(hi - 1)) {
        ++lo;
        --hi;
    }
    CyclicForm form;
    std::vector<int> conj(u.letters().begin(), u.letters().begin() + lo);
    std::vector<int> core(u.letters().begin() + lo, u.letters().begin() + hi);
    form.conjugator = Word(conj);
    form.core = Word(core);
    return form;
}

std::optional<PowerForm> is_proper_power(const Word& u) {
    CyclicForm form = cyclically_reduce(u);
    const int n = form.core.length();
    if (n == 0) return std::nullopt; // identity
    for (int d = 1; d <= n / 2; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (int i = d; i < n && periodic; ++i)
            periodic = form.core.at(i) == form.core.at(i % d);
        if (!periodic) continue;
        std::vector<int> head(form.core.letters().begin(), form.core.letters().begin() + d);
        Word root = multiply(multiply(form.conjugator, Word(head)), invert(form.conjugator));
        return PowerForm{root, n / d};
    }
    return std::nullopt;
}

bool commute(const Word& u, const Word& v) {
    return multiply(u, v) == multiply(v, u);
}

std::vector<Word> ball(int m, int radius) {
    if (m < 1) throw Error("ball needs at least one generator");
    if (radius < 0) throw Error("ball radius must be nonnegative");
    std::vector<Letter> alphabet;
    for (int i = 1; i <= m; ++i) {
        alphabet.push_back(static_cast<Letter>(i));
        alphabet.push_back(static_cast<Letter>(-i));
    }
    std::vector<Word> out{Word{}};
    std::size_t level_begin = 0;
    for (int len = 1; len <= radius; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (Letter l : alphabet) {
                const Word& w = out[i];
                if (w.length() > 0 && w.at(w.length() - 1) == -l) continue;
                std::vector<int> raw(w.letters().begin(), w.letters().end());
                raw.push_back(l);
                out.push_back(Word(raw));
            }
        level_begin = level_end;
    }
    return out;
}

CayleyBall::CayleyBall(int m_, int radius_) : m(m_), radius(radius_), words(ball(m_, radius_)) {
    index.reserve(words.size() * 2);
    for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], static_cast<int>(i));
}

int CayleyBall::find(const Word& w) const {
    auto it = index.find(w);
    return it == index.end() ? -1 : it->second;
}

std::string word_to_string(const Word& w) {
    if (w.empty()) return "e";
    std::string out;
    for (Letter l : w.letters())
        out += static_cast<char>(l > 0 ? 'a' + l - 1 : 'A' - l - 1);
    return out;
}

} // namespace setcong
