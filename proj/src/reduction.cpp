#include "setcong/reduction.hpp"

#include <algorithm>

namespace setcong {

bool ReductionMap::onto(int r) const {
    std::vector<char> hit(static_cast<std::size_t>(r) + 1, 0);
    for (int k : pi) {
        if (k < 1 || k > r) return false;
        hit[k] = 1;
    }
    return std::all_of(hit.begin() + 1, hit.end(), [](char c) { return c != 0; });
}

ReductionImage reduction_image(const ReductionMap& map, IndexSet side) {
    ReductionImage img;
    img.members.assign(map.pi.size(), 0);
    for (std::size_t j = 0; j < map.pi.size(); ++j) {
        if (contains(side, map.pi[j])) {
            img.members[j] = 1;
            ++img.size;
        }
    }
    img.full = img.size == static_cast<long long>(map.pi.size());
    return img;
}

namespace {

IndexSet image_mask(const ReductionImage& img) {
    IndexSet mask = 0;
    for (std::size_t j = 0; j < img.members.size(); ++j)
        if (img.members[j]) mask |= IndexSet{1} << j;
    return mask;
}

} // namespace

bool check_reduction(const CongruenceSystem& sys1, const CongruenceSystem& sys2,
                     const ReductionMap& map) {
    if (map.s != sys2.r) throw ArityMismatch("reduction map size differs from target arity");
    if (static_cast<long long>(map.pi.size()) != map.s)
        throw ArityMismatch("reduction map has wrong length");
    for (int k : map.pi)
        if (k < 1 || k > sys1.r) throw ArityMismatch("reduction map lands outside source indices");
    if (sys2.r > 31) throw LimitExceeded("explicit target system too wide for bitmask images");

    for (const Statement& st : sys1.statements) {
        if (st.kind != StatementKind::congruence) continue;
        IndexSet img_l = image_mask(reduction_image(map, st.left));
        IndexSet img_r = image_mask(reduction_image(map, st.right));
        if (img_l == img_r) continue; // trivial identity image
        bool found = false;
        for (const Statement& target : sys2.statements) {
            if (target.kind != StatementKind::congruence) continue;
            if ((target.left == img_l && target.right == img_r) ||
                (target.left == img_r && target.right == img_l)) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

bool check_reduction_to_unc(const CongruenceSystem& sys1, long long s, const ReductionMap& map) {
    if (map.s != s || static_cast<long long>(map.pi.size()) != s)
        throw ArityMismatch("reduction map size differs from target arity");
    for (const Statement& st : sys1.statements) {
        if (st.kind != StatementKind::congruence) continue;
        ReductionImage img_l = reduction_image(map, st.left);
        ReductionImage img_r = reduction_image(map, st.right);
        if (img_l.members == img_r.members) continue; // trivial identity image
        if (img_l.size != img_r.size) return false;
        if (img_l.size == 0 || img_l.full || img_r.full) return false;
    }
    return true;
}

std::optional<ReductionMap> reduce_to_unc(const CongruenceSystem& sys) {
    auto witness = numeric_consistency(sys);
    if (!witness) return std::nullopt;
    std::vector<Integer> weights = integerize(*witness);

    ReductionMap map;
    for (int k = 1; k <= sys.r; ++k) {
        long long block = weights[k - 1].convert_to<long long>();
        for (long long j = 0; j < block; ++j) map.pi.push_back(k);
    }
    map.s = static_cast<long long>(map.pi.size());
    if (!check_reduction_to_unc(sys, map.s, map))
        throw Error("integerized weights failed the reduction check"); // unreachable for valid witnesses
    return map;
}

} // namespace setcong
