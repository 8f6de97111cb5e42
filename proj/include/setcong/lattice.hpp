#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "setcong/family.hpp"
#include "setcong/system.hpp"

namespace setcong {

/// Satisfiability contexts plus the three structural properties.
enum class PropertyNode {
    OSF, FSF, DSF, OSI, FSI, DSI, OPS, FPS, DPS, FFG, PFG, FFQ, w, nc, c
};
inline constexpr int kPropertyCount = 15;

const std::array<PropertyNode, kPropertyCount>& all_property_nodes();
std::string property_name(PropertyNode n);
std::optional<PropertyNode> property_from_name(const std::string& name);

struct ImplicationEdge {
    PropertyNode from;
    PropertyNode to;
    bool preserves_all_nonempty; // light arrows do not
};

/// The fixed implication digraph between the properties.
const std::vector<ImplicationEdge>& implication_edges();

std::string implication_dot();

enum class Status { unknown, yes, no };

enum class ProvenanceKind { none, checked, implied, contrapositive, fixture };

struct NodeStatus {
    Status status = Status::unknown;
    ProvenanceKind provenance = ProvenanceKind::none;
    std::string detail;
};

struct PropertyReport {
    std::array<NodeStatus, kPropertyCount> nodes;
    std::vector<std::string> checks; // human-readable check log
    bool extended_nc = false;        // system had subcongruences; nc is the extended notion

    NodeStatus& at(PropertyNode n) { return nodes[static_cast<int>(n)]; }
    const NodeStatus& at(PropertyNode n) const { return nodes[static_cast<int>(n)]; }
};

/// Set a status and propagate yes forward / no backward along the edges.
/// Throws InconsistentEvidence on conflict.
void set_status(PropertyReport& report, PropertyNode node, Status value,
                ProvenanceKind kind, const std::string& detail);

struct ClassifyBudget {
    int witness_length = 2;
    int radius = 3;
    int witness_generators = 2;
    long long max_tuples = 200000;
};

/// Run the decidable checks (weak, consistent, numerically consistent, and a
/// bounded witness-tuple search for finite free-group families), then
/// propagate. Searches that find nothing leave the node unknown.
PropertyReport classify(const CongruenceSystem& sys, const ClassifyBudget& budget = {});

/// Merge externally known statuses (from the catalog) into a report.
struct ExpectedStatus {
    PropertyNode node;
    bool value;
};
void apply_expectations(PropertyReport& report, const std::vector<ExpectedStatus>& expected);

struct Fixture {
    std::string name;
    CongruenceSystem system;
    std::vector<ExpectedStatus> expected;
    std::vector<PropertyNode> open_nodes; // recorded as open, never guessed
};

/// Built-in example systems with their established statuses.
std::vector<Fixture> fixture_catalog();

} // namespace setcong
