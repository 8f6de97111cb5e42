#include "setcong/family.hpp"

#include <algorithm>
#include <set>

namespace setcong {

namespace {

std::vector<Word> sorted_unique(std::vector<Word> v) {
    std::sort(v.begin(), v.end(), length_lex_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Word apply_action(const FamilySpace& space, const Word& g, const Word& x) {
    if (std::holds_alternative<GroupSpace>(space)) return multiply(g, x);
    return coset_action(std::get<CosetSpace>(space), g, x);
}

} // namespace

bool FiniteFamily::all_empty() const {
    return std::all_of(sets.begin(), sets.end(),
                       [](const std::vector<Word>& s) { return s.empty(); });
}

std::vector<Word> FiniteFamily::set_union() const {
    std::vector<Word> u;
    for (const auto& s : sets) u.insert(u.end(), s.begin(), s.end());
    return sorted_unique(std::move(u));
}

void FiniteFamily::check_invariants() const {
    std::size_t total = 0;
    for (const auto& s : sets) total += s.size();
    if (set_union().size() != total) throw Error("family sets are not pairwise disjoint");
    if (const auto* coset = std::get_if<CosetSpace>(&space)) {
        for (const auto& s : sets)
            for (const Word& c : s)
                if (!is_canonical_rep(*coset, c))
                    throw NonCanonicalElement("non-canonical coset representative: " +
                                              word_to_string(c));
    }
}

FiniteFamily make_group_family(int m, std::vector<std::vector<Word>> sets) {
    FiniteFamily fam;
    fam.space = GroupSpace{m};
    for (auto& s : sets) fam.sets.push_back(sorted_unique(std::move(s)));
    fam.check_invariants();
    return fam;
}

FiniteFamily make_coset_family(const CosetSpace& space, std::vector<std::vector<Word>> sets) {
    FiniteFamily fam;
    fam.space = space;
    for (auto& s : sets) fam.sets.push_back(sorted_unique(std::move(s)));
    fam.check_invariants();
    return fam;
}

namespace {

std::vector<Word> side_union(const FiniteFamily& fam, IndexSet side) {
    std::vector<Word> u;
    for (int k = 1; k <= fam.r(); ++k)
        if (contains(side, k))
            u.insert(u.end(), fam.sets[k - 1].begin(), fam.sets[k - 1].end());
    std::sort(u.begin(), u.end(), length_lex_less);
    return u;
}

} // namespace

VerifyResult verify_family(const FiniteFamily& fam, const WitnessAssignment& wit,
                           const CongruenceSystem& sys) {
    if (fam.r() != sys.r) throw ArityMismatch("family arity differs from system");
    if (wit.size() != sys.statements.size())
        throw ArityMismatch("one witness per statement required");
    fam.check_invariants();

    VerifyResult result;
    result.ok = true;
    for (std::size_t i = 0; i < sys.statements.size(); ++i) {
        const Statement& st = sys.statements[i];
        std::vector<Word> image;
        for (const Word& x : side_union(fam, st.left))
            image.push_back(apply_action(fam.space, wit[i], x));
        std::sort(image.begin(), image.end(), length_lex_less);
        std::vector<Word> target = side_union(fam, st.right);

        bool holds;
        if (st.kind == StatementKind::congruence) {
            holds = image == target;
        } else {
            holds = std::includes(target.begin(), target.end(), image.begin(), image.end(),
                                  length_lex_less);
        }
        StatementDiagnostic diag;
        diag.statement = static_cast<int>(i + 1);
        diag.holds = holds;
        if (!holds) {
            diag.detail = "witness " + word_to_string(wit[i]) + " does not map " +
                          set_to_string(st.left) +
                          (st.kind == StatementKind::congruence ? " onto " : " into ") +
                          set_to_string(st.right);
            result.ok = false;
        }
        result.diagnostics.push_back(std::move(diag));
    }
    return result;
}

FiniteFamily normalize_family(const FiniteFamily& fam) {
    if (!std::holds_alternative<GroupSpace>(fam.space))
        throw PreconditionFailed("normalization applies to group-mode families");
    std::vector<Word> u = fam.set_union();
    if (u.empty()) throw EmptyFamily("cannot normalize an all-empty family");
    Word h = u.front(); // length-lex least
    Word hinv = invert(h);
    FiniteFamily out;
    out.space = fam.space;
    for (const auto& s : fam.sets) {
        std::vector<Word> moved;
        moved.reserve(s.size());
        for (const Word& x : s) moved.push_back(multiply(x, hinv));
        std::sort(moved.begin(), moved.end(), length_lex_less);
        out.sets.push_back(std::move(moved));
    }
    return out;
}

DecisionBound theoretical_bound(int m, int max_witness_len, int r) {
    if (m < 1 || max_witness_len < 0 || r < 1)
        throw Error("theoretical_bound needs m >= 1, L >= 0, r >= 1");
    Integer n = 0;
    Integer term = 1;
    for (int l = 0; l <= max_witness_len; ++l) {
        n += term;
        term *= 2 * m;
    }
    // (r+1)^n explodes beyond representability quite quickly; refuse rather
    // than exhaust memory.
    if (n * (msb(Integer(r) + 1) + 1) > 8'000'000)
        throw LimitExceeded("decision bound too large to evaluate exactly");
    Integer bound = boost::multiprecision::pow(Integer(r) + 1, n.convert_to<unsigned>());
    return DecisionBound{n, bound};
}

bool forced_shift_holds(const FiniteFamily& fam, const Word& rho, const Word& sigma) {
    if (fam.r() != 3) throw PreconditionFailed("requires exactly three sets");
    if (!std::holds_alternative<GroupSpace>(fam.space))
        throw PreconditionFailed("requires a group-mode family");
    fam.check_invariants();

    CongruenceSystem pre;
    pre.r = 3;
    pre.statements = {{StatementKind::congruence, 0b001, 0b100},  // rho(A1) = A3
                      {StatementKind::congruence, 0b101, 0b011}}; // sigma(A1 u A3) = A1 u A2
    VerifyResult check = verify_family(fam, {rho, sigma}, pre);
    if (!check.ok) {
        for (const auto& d : check.diagnostics)
            if (!d.holds) throw PreconditionFailed(d.detail);
    }

    auto image = [&](const std::vector<Word>& s) {
        std::vector<Word> out;
        out.reserve(s.size());
        for (const Word& x : s) out.push_back(multiply(sigma, x));
        std::sort(out.begin(), out.end(), length_lex_less);
        return out;
    };
    return image(fam.sets[2]) == fam.sets[0] && image(fam.sets[0]) == fam.sets[1];
}

} // namespace setcong
