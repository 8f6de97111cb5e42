#include "setcong/lattice.hpp"

#include <algorithm>

#include "setcong/closure.hpp"
#include "setcong/lp.hpp"
#include "setcong/search.hpp"
#include "setcong/structure.hpp"

namespace setcong {

const std::array<PropertyNode, kPropertyCount>& all_property_nodes() {
    static const std::array<PropertyNode, kPropertyCount> nodes = {
        PropertyNode::OSF, PropertyNode::FSF, PropertyNode::DSF, PropertyNode::OSI,
        PropertyNode::FSI, PropertyNode::DSI, PropertyNode::OPS, PropertyNode::FPS,
        PropertyNode::DPS, PropertyNode::FFG, PropertyNode::PFG, PropertyNode::FFQ,
        PropertyNode::w,   PropertyNode::nc,  PropertyNode::c};
    return nodes;
}

std::string property_name(PropertyNode n) {
    switch (n) {
        case PropertyNode::OSF: return "OSF";
        case PropertyNode::FSF: return "FSF";
        case PropertyNode::DSF: return "DSF";
        case PropertyNode::OSI: return "OSI";
        case PropertyNode::FSI: return "FSI";
        case PropertyNode::DSI: return "DSI";
        case PropertyNode::OPS: return "OPS";
        case PropertyNode::FPS: return "FPS";
        case PropertyNode::DPS: return "DPS";
        case PropertyNode::FFG: return "FFG";
        case PropertyNode::PFG: return "PFG";
        case PropertyNode::FFQ: return "FFQ";
        case PropertyNode::w: return "w";
        case PropertyNode::nc: return "nc";
        case PropertyNode::c: return "c";
    }
    return "?";
}

std::optional<PropertyNode> property_from_name(const std::string& name) {
    for (PropertyNode n : all_property_nodes())
        if (property_name(n) == name) return n;
    return std::nullopt;
}

const std::vector<ImplicationEdge>& implication_edges() {
    using P = PropertyNode;
    static const std::vector<ImplicationEdge> edges = {
        {P::PFG, P::FFG, true}, {P::PFG, P::DPS, true}, {P::FFG, P::FPS, true},
        {P::FPS, P::FFG, true}, {P::FFG, P::FFQ, true}, {P::DPS, P::OPS, true},
        {P::FPS, P::OPS, true}, {P::DPS, P::DSF, true}, {P::OPS, P::OSF, true},
        {P::FPS, P::FSF, true}, {P::DSF, P::w, true},   {P::DSF, P::OSF, true},
        {P::FSF, P::OSF, true}, {P::FFQ, P::FSF, true}, {P::DSF, P::DSI, true},
        {P::OSF, P::OSI, true}, {P::FSF, P::FSI, true}, {P::DSI, P::OSI, true},
        {P::FSI, P::OSI, true}, {P::OSI, P::nc, true},  {P::nc, P::c, true},
        // Open-to-finite directions only preserve "not all empty".
        {P::OSF, P::FSF, false}, {P::FSF, P::FFQ, false}, {P::OSI, P::FSI, false},
    };
    return edges;
}

std::string implication_dot() {
    std::string out = "digraph properties {\n";
    for (const ImplicationEdge& e : implication_edges()) {
        out += "  " + property_name(e.from) + " -> " + property_name(e.to);
        if (!e.preserves_all_nonempty) out += " [style=dashed]";
        out += ";\n";
    }
    return out + "}\n";
}

void set_status(PropertyReport& report, PropertyNode node, Status value, ProvenanceKind kind,
                const std::string& detail) {
    NodeStatus& cur = report.at(node);
    if (cur.status == value) return;
    if (cur.status != Status::unknown)
        throw InconsistentEvidence("conflicting evidence for " + property_name(node) + ": " +
                                   cur.detail + " vs " + detail);
    cur.status = value;
    cur.provenance = kind;
    cur.detail = detail;
    if (value == Status::yes) {
        for (const ImplicationEdge& e : implication_edges())
            if (e.from == node)
                set_status(report, e.to, Status::yes, ProvenanceKind::implied,
                           "implied by " + property_name(node));
    } else if (value == Status::no) {
        for (const ImplicationEdge& e : implication_edges())
            if (e.to == node)
                set_status(report, e.from, Status::no, ProvenanceKind::contrapositive,
                           "contrapositive of " + property_name(e.from) + " -> " +
                               property_name(node));
    }
}

namespace {

std::vector<WitnessAssignment> bounded_tuples(int count, int m, int max_len,
                                              long long max_tuples) {
    std::vector<Word> pool = ball(m, max_len);
    std::vector<WitnessAssignment> tuples;
    WitnessAssignment current(count);
    long long total = 1;
    for (int i = 0; i < count; ++i) {
        total *= static_cast<long long>(pool.size());
        if (total > max_tuples) return tuples; // enumeration too large; skip search
    }
    std::vector<std::size_t> idx(count, 0);
    for (;;) {
        for (int i = 0; i < count; ++i) current[i] = pool[idx[i]];
        tuples.push_back(current);
        int pos = count - 1;
        while (pos >= 0 && ++idx[pos] == pool.size()) idx[pos--] = 0;
        if (pos < 0) break;
    }
    return tuples;
}

} // namespace

PropertyReport classify(const CongruenceSystem& sys, const ClassifyBudget& budget) {
    sys.check_well_formed();
    PropertyReport report;
    report.extended_nc = std::any_of(
        sys.statements.begin(), sys.statements.end(),
        [](const Statement& st) { return st.kind == StatementKind::subcongruence; });

    bool weak = is_weak(sys);
    set_status(report, PropertyNode::w, weak ? Status::yes : Status::no, ProvenanceKind::checked,
               "checked(is_weak)");
    report.checks.push_back(std::string("is_weak: ") + (weak ? "true" : "false"));

    bool consistent = is_consistent(sys);
    set_status(report, PropertyNode::c, consistent ? Status::yes : Status::no,
               ProvenanceKind::checked, "checked(is_consistent)");
    report.checks.push_back(std::string("is_consistent: ") + (consistent ? "true" : "false"));

    auto witness = numeric_consistency(sys);
    set_status(report, PropertyNode::nc, witness ? Status::yes : Status::no,
               ProvenanceKind::checked,
               report.extended_nc ? "checked(numeric_consistency, extended-nc)"
                                  : "checked(numeric_consistency)");
    report.checks.push_back(std::string("numeric_consistency: ") +
                            (witness ? "witness found" : "infeasible"));

    // A bounded search only ever adds positive evidence.
    if (witness && !sys.statements.empty() &&
        report.at(PropertyNode::FFG).status == Status::unknown) {
        auto tuples = bounded_tuples(static_cast<int>(sys.statements.size()),
                                     budget.witness_generators, budget.witness_length,
                                     budget.max_tuples);
        for (const WitnessAssignment& wit : tuples) {
            SearchOutcome outcome =
                search_family(sys, wit, budget.radius, budget.witness_generators);
            if (!outcome.sat) continue;
            std::string wit_text;
            for (const Word& g : wit) wit_text += word_to_string(g) + " ";
            set_status(report, PropertyNode::FFG, Status::yes, ProvenanceKind::checked,
                       "checked(search_family, witnesses " + wit_text + ")");
            report.checks.push_back("search_family: satisfying family with witnesses " +
                                    wit_text);
            std::vector<Word> u = outcome.family.set_union();
            if (is_connected(u) && is_prime(u, budget.witness_generators)) {
                set_status(report, PropertyNode::PFG, Status::yes, ProvenanceKind::checked,
                           "checked(search_family; union connected and prime)");
                report.checks.push_back("family union is connected and prime");
            }
            break;
        }
        if (report.at(PropertyNode::FFG).status == Status::unknown)
            report.checks.push_back("search_family: exhausted witness budget without a family");
    }
    return report;
}

void apply_expectations(PropertyReport& report, const std::vector<ExpectedStatus>& expected) {
    for (const ExpectedStatus& e : expected)
        set_status(report, e.node, e.value ? Status::yes : Status::no, ProvenanceKind::fixture,
                   "fixture");
}

namespace {

Statement cong(IndexSet l, IndexSet r) { return {StatementKind::congruence, l, r}; }

} // namespace

std::vector<Fixture> fixture_catalog() {
    using P = PropertyNode;
    std::vector<Fixture> out;

    // Weak but inconsistent.
    out.push_back({"robinson-wagon",
                   make_system(4, {cong(0b0001, 0b1101), cong(0b0100, 0b0111)}),
                   {{P::w, true}, {P::c, false}},
                   {}});

    // Weak, consistent, not numerically consistent.
    out.push_back({"five-sets",
                   make_system(5, {cong(0b00001, 0b00010), cong(0b00010, 0b00100),
                                   cong(0b00100, 0b01000), cong(0b01000, 0b10000),
                                   cong(0b00011, 0b01101)}),
                   {{P::w, true}, {P::c, true}, {P::nc, false}},
                   {}});

    // Not weak, yet two singletons satisfy it in a free group.
    out.push_back({"two-sets",
                   make_system(2, {cong(0b01, 0b10)}),
                   {{P::w, false}, {P::FFG, true}},
                   {}});

    // Pairwise-union system on three sets: fine with arbitrary isometries,
    // impossible with open sets under free rotations.
    out.push_back({"pairwise-three",
                   make_cp(3),
                   {{P::w, true}, {P::FSI, true}, {P::DSI, true}, {P::OSF, false}},
                   {}});

    // Satisfiable by finite free-group families but never with dense union.
    out.push_back({"chain-three",
                   make_system(3, {cong(0b001, 0b010), cong(0b010, 0b100), cong(0b011, 0b101)}),
                   {{P::w, true}, {P::FFG, true}, {P::DSF, false}},
                   {}});

    // Dense-union satisfiable, but no connected prime finite family exists.
    out.push_back({"shift-three",
                   make_system(3, {cong(0b001, 0b100), cong(0b011, 0b101)}),
                   {{P::DSF, true}, {P::FFG, true}, {P::PFG, false}},
                   {P::DPS}});

    // Dense-union satisfiable, finitely unsatisfiable in a free group.
    out.push_back({"shift-four",
                   make_system(4, {cong(0b0001, 0b0100), cong(0b0011, 0b0101),
                                   cong(0b0101, 0b1001)}),
                   {{P::DSF, true}, {P::FFG, false}},
                   {P::DPS, P::OPS}});

    // The classical three-piece system; not even consistent.
    out.push_back({"hausdorff",
                   make_system(3, {cong(0b001, 0b010), cong(0b010, 0b100), cong(0b100, 0b110)}),
                   {{P::c, false}},
                   {}});

    return out;
}

} // namespace setcong
