#pragma once

#include <string>

#include "setcong/family.hpp"
#include "setcong/lattice.hpp"
#include "setcong/system.hpp"
#include "setcong/word.hpp"

namespace setcong {

/// Text format:
///   sets <r>
///   mode partition|family     (optional; default partition)
///   A1 A2 ~ A1 A3             (congruence; indices as A<k> or bare integers)
///   A1 < A2                   (subcongruence)
///   # comment
CongruenceSystem parse_system(const std::string& text);
std::string render_system(const CongruenceSystem& sys);

/// Words: letters a..z are generators 1..26, A..Z their inverses; the
/// standalone token "e" is the identity. Whitespace between letters is
/// optional ("a B a" and "aBa" agree).
Word parse_word(const std::string& text);

std::string render_report(const CongruenceSystem& sys, const PropertyReport& report);

/// Family JSON: {"m": 2, "coset": "a" (optional), "sets": [["e","ab"], ...]}.
FiniteFamily parse_family_json(const std::string& text);
std::string render_family_json(const FiniteFamily& fam);

} // namespace setcong
