#include "setcong/system.hpp"

#include <algorithm>

namespace setcong {

std::vector<int> set_members(IndexSet s) {
    std::vector<int> out;
    for (int k = 1; s; ++k, s >>= 1)
        if (s & 1u) out.push_back(k);
    return out;
}

std::string set_to_string(IndexSet s) {
    std::string out = "{";
    bool first = true;
    for (int k : set_members(s)) {
        if (!first) out += ",";
        out += std::to_string(k);
        first = false;
    }
    return out + "}";
}

bool is_proper(const Statement& stmt, int r) {
    const IndexSet full = full_set(r);
    return stmt.left != 0 && stmt.right != 0 && stmt.left != full && stmt.right != full;
}

void CongruenceSystem::check_well_formed() const {
    if (r < 1) throw Error("system needs at least one set variable");
    if (r > 31) throw LimitExceeded("r exceeds bitmask width");
    const IndexSet full = full_set(r);
    for (const Statement& st : statements)
        if ((st.left & ~full) || (st.right & ~full))
            throw Error("statement index set outside {1..r}");
}

bool CongruenceSystem::all_proper() const {
    return std::all_of(statements.begin(), statements.end(),
                       [&](const Statement& st) { return is_proper(st, r); });
}

CongruenceSystem make_system(int r, std::initializer_list<Statement> stmts, Mode mode) {
    CongruenceSystem sys;
    sys.r = r;
    sys.mode = mode;
    sys.statements.assign(stmts);
    sys.check_well_formed();
    return sys;
}

namespace {

std::vector<IndexSet> subsets_of_size(int s, int size) {
    std::vector<IndexSet> out;
    for (IndexSet mask = 0; mask < (IndexSet{1} << s); ++mask)
        if (set_size(mask) == size) out.push_back(mask);
    return out; // already in increasing bitmask order
}

} // namespace

CongruenceSystem make_unc(int s, int limit) {
    if (s < 1 || s > limit) throw LimitExceeded("make_unc: s outside configured limit");
    CongruenceSystem sys;
    sys.r = s;
    for (int size = 1; size <= s - 1; ++size) {
        const auto subs = subsets_of_size(s, size);
        for (std::size_t i = 0; i < subs.size(); ++i)
            for (std::size_t j = i + 1; j < subs.size(); ++j)
                sys.statements.push_back({StatementKind::congruence, subs[i], subs[j]});
    }
    return sys;
}

CongruenceSystem make_cp(int r, int limit) {
    if (r < 1 || r > limit) throw LimitExceeded("make_cp: r outside configured limit");
    CongruenceSystem sys;
    sys.r = r;
    if (r < 2) return sys;
    const auto subs = subsets_of_size(r, 2);
    for (std::size_t i = 0; i < subs.size(); ++i)
        for (std::size_t j = i + 1; j < subs.size(); ++j)
            sys.statements.push_back({StatementKind::congruence, subs[i], subs[j]});
    return sys;
}

} // namespace setcong
