#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "setcong/error.hpp"

namespace setcong {

/// Signed generator index: +i for the i'th generator, -i for its inverse.
using Letter = std::int8_t;

/// Reduced word over free generators; empty means the identity. The reduced
/// invariant is maintained by every constructor and operation.
class Word {
public:
    Word() = default;
    explicit Word(std::span<const int> raw); // frees callers from pre-reducing

    static Word letter(int signed_index);
    static Word power(int signed_index, int exponent);

    bool empty() const { return letters_.empty(); }
    int length() const { return static_cast<int>(letters_.size()); }
    Letter at(int i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }

    int max_generator() const;

    bool operator==(const Word&) const = default;

private:
    std::vector<Letter> letters_;
    friend Word multiply(const Word&, const Word&);
    friend Word invert(const Word&);
};

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
Word word_pow(const Word& u, int k);

/// Letter rank a < a^-1 < b < b^-1 < ...; orders words by length then rank.
int letter_rank(Letter l);
bool length_lex_less(const Word& a, const Word& b);

struct WordHash {
    std::size_t operator()(const Word& w) const;
};

/// u = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicForm {
    Word conjugator;
    Word core;
};
CyclicForm cyclically_reduce(const Word& u);

/// Some(root, k >= 2) with u = root^k and root itself not a proper power;
/// none for the identity.
struct PowerForm {
    Word root;
    int exponent;
};
std::optional<PowerForm> is_proper_power(const Word& u);

bool commute(const Word& u, const Word& v);

/// All reduced words of length <= radius over m generators, in
/// length-then-rank order.
std::vector<Word> ball(int m, int radius);

/// Indexed ball with O(1) membership lookups.
struct CayleyBall {
    int m = 1;
    int radius = 0;
    std::vector<Word> words;
    std::unordered_map<Word, int, WordHash> index;

    CayleyBall(int m, int radius);
    int find(const Word& w) const; // -1 when outside
};

std::string word_to_string(const Word& w); // CLI alphabet (a..z, A..Z, e)

} // namespace setcong
