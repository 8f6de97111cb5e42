#include "setcong/realize.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace setcong {

const std::vector<Vec3> kBasePointFallbacks = {
    {3, 4, 12}, {1, 2, 2}, {2, 3, 6}, {1, 4, 8}, {12, 15, 16}, {2, 6, 9}, {1, 1, 1},
};

namespace {

int family_generator_count(const FiniteFamily& fam) {
    int m = std::holds_alternative<GroupSpace>(fam.space)
                ? std::get<GroupSpace>(fam.space).m
                : std::get<CosetSpace>(fam.space).m;
    for (const auto& s : fam.sets)
        for (const Word& x : s) m = std::max(m, x.max_generator());
    return std::max(1, m);
}

std::vector<RotMat> default_generators(int m) {
    auto [sigma, rho] = standard_free_rotations();
    std::vector<RotMat> gens{sigma, rho};
    // Further generators as conjugates keeps everything exact; bounded
    // freeness testing still applies downstream.
    while (static_cast<int>(gens.size()) < m) {
        RotMat prev = gens.back();
        gens.push_back(matmul(matmul(sigma, prev), transpose(sigma)));
    }
    gens.resize(static_cast<std::size_t>(m));
    return gens;
}

// All words whose images must stay distinct: family members plus all witness
// images of left-side members.
std::vector<Word> relevant_words(const FiniteFamily& fam, const WitnessAssignment& wit,
                                 const CongruenceSystem& sys) {
    std::vector<Word> out = fam.set_union();
    for (std::size_t i = 0; i < sys.statements.size(); ++i)
        for (int k = 1; k <= sys.r; ++k)
            if (contains(sys.statements[i].left, k))
                for (const Word& x : fam.sets[k - 1]) {
                    if (std::holds_alternative<CosetSpace>(fam.space))
                        out.push_back(coset_action(std::get<CosetSpace>(fam.space), wit[i], x));
                    else
                        out.push_back(multiply(wit[i], x));
                }
    std::sort(out.begin(), out.end(), length_lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool injective_on(const std::vector<Word>& words, const std::vector<RotMat>& gens,
                  const Vec3& base) {
    std::vector<Vec3> pts;
    pts.reserve(words.size());
    for (const Word& w : words) pts.push_back(apply(word_to_matrix(w, gens), base));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) return false;
    return true;
}

} // namespace

SphereRealization realize(const FiniteFamily& fam, const WitnessAssignment& wit,
                          const CongruenceSystem& sys) {
    VerifyResult check = verify_family(fam, wit, sys);
    if (!check.ok) throw PreconditionFailed("family does not satisfy the system");

    SphereRealization real;
    const int m = family_generator_count(fam);
    real.generators = default_generators(m);

    const std::vector<Word> relevant = relevant_words(fam, wit, sys);

    if (std::holds_alternative<CosetSpace>(fam.space)) {
        const CosetSpace& space = std::get<CosetSpace>(fam.space);
        if (space.w.empty()) {
            real.base_point = kBasePointFallbacks.front();
        } else {
            RotMat wm = word_to_matrix(space.w, real.generators);
            real.base_point = fixed_axis(wm); // rep choice is immaterial at a w-fixed point
        }
        if (!injective_on(relevant, real.generators, real.base_point))
            throw PointCollision("coset base point identified two relevant elements");
    } else {
        bool placed = false;
        for (const Vec3& candidate : kBasePointFallbacks) {
            if (injective_on(relevant, real.generators, candidate)) {
                real.base_point = candidate;
                placed = true;
                break;
            }
        }
        if (!placed) throw FallbacksExhausted("no fallback base point was injective");
    }

    real.points.resize(fam.sets.size());
    std::vector<Vec3> all;
    for (std::size_t k = 0; k < fam.sets.size(); ++k)
        for (const Word& x : fam.sets[k]) {
            Vec3 pt = apply(word_to_matrix(x, real.generators), real.base_point);
            real.points[k].emplace_back(x, pt);
            all.push_back(pt);
        }

    if (all.size() >= 2) {
        Rational min_sq;
        bool first = true;
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                Rational d = squared_distance(all[i], all[j]);
                if (first || d < min_sq) {
                    min_sq = d;
                    first = false;
                }
            }
        real.epsilon_sq = min_sq / 5; // anything below min/4 separates the caps
    } else if (all.size() == 1) {
        real.epsilon_sq = Rational(1);
    }
    return real;
}

bool verify_realization(const SphereRealization& real, const WitnessAssignment& wit,
                        const CongruenceSystem& sys) {
    if (wit.size() != sys.statements.size())
        throw ArityMismatch("one witness per statement required");
    if (static_cast<int>(real.points.size()) != sys.r)
        throw ArityMismatch("realization arity differs from system");

    auto side_points = [&](IndexSet side) {
        std::vector<Vec3> pts;
        for (int k = 1; k <= sys.r; ++k)
            if (contains(side, k))
                for (const auto& [w, pt] : real.points[k - 1]) pts.push_back(pt);
        std::sort(pts.begin(), pts.end());
        return pts;
    };

    for (std::size_t i = 0; i < sys.statements.size(); ++i) {
        const Statement& st = sys.statements[i];
        RotMat mat = word_to_matrix(wit[i], real.generators);
        std::vector<Vec3> image;
        for (const Vec3& pt : side_points(st.left)) image.push_back(apply(mat, pt));
        std::sort(image.begin(), image.end());
        std::vector<Vec3> target = side_points(st.right);
        if (st.kind == StatementKind::congruence) {
            if (image != target) return false;
        } else if (!std::includes(target.begin(), target.end(), image.begin(), image.end())) {
            return false;
        }
    }

    if (real.epsilon_sq) {
        if (*real.epsilon_sq <= 0) return false;
        std::vector<Vec3> all;
        for (const auto& set : real.points)
            for (const auto& [w, pt] : set) all.push_back(pt);
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                if (squared_distance(all[i], all[j]) <= 4 * *real.epsilon_sq) return false;
    }
    return true;
}

std::string realization_to_json(const SphereRealization& real) {
    nlohmann::ordered_json j;
    auto rat = [](const Rational& q) { return q.str(); };
    j["base_point"] = {rat(real.base_point[0]), rat(real.base_point[1]), rat(real.base_point[2])};
    j["epsilon_sq"] = real.epsilon_sq ? nlohmann::ordered_json(rat(*real.epsilon_sq))
                                      : nlohmann::ordered_json(nullptr);
    nlohmann::ordered_json sets = nlohmann::ordered_json::array();
    for (const auto& set : real.points) {
        nlohmann::ordered_json entries = nlohmann::ordered_json::array();
        for (const auto& [w, pt] : set)
            entries.push_back({{"element", word_to_string(w)},
                               {"point", {rat(pt[0]), rat(pt[1]), rat(pt[2])}}});
        sets.push_back(entries);
    }
    j["sets"] = sets;
    return j.dump(2);
}

} // namespace setcong
