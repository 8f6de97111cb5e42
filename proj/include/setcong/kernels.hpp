#pragma once

#include <cstdint>
#include <vector>

#include "setcong/reach.hpp"
#include "setcong/search.hpp"
#include "setcong/setgraph.hpp"
#include "setcong/structure.hpp"
#include "setcong/system.hpp"

namespace setcong {

/// Data-parallel sweeps over independent work items. Each kernel takes a
/// `parallel` switch; with it off the loop body runs serially in item order,
/// which is the reference the tests compare against. Results are identical
/// either way because items never share state.

/// Cartesian power of the ball: all witness tuples with words of length
/// <= max_len over m generators, one word per statement.
std::vector<WitnessAssignment> witness_tuples(int m, int max_len, int statements);

struct SweepSearchResult {
    long long sat = 0;
    long long unsat = 0;
    std::vector<std::uint8_t> sat_flags; // per tuple
};

SweepSearchResult sweep_search(const CongruenceSystem& sys,
                               const std::vector<WitnessAssignment>& tuples, int radius, int m,
                               bool parallel);

/// Per input set: the three subset-graph checks (cycle-freeness of bad edges
/// inside components, acyclicity of the merged good graph, forced
/// backtracking at walk length 2^|P|).
struct SetChecks {
    std::uint8_t no_bad_cycle = 0;
    std::uint8_t good_acyclic = 0;
    std::uint8_t backtrack = 0;
};

std::vector<SetChecks> sweep_set_checks(const std::vector<std::vector<Word>>& sets,
                                        bool with_backtrack, bool parallel);

/// Per input set: connected, prime, strongly prime.
struct StructureChecks {
    std::uint8_t connected = 0;
    std::uint8_t prime = 0;
    std::uint8_t strongly_prime = 0;
};

std::vector<StructureChecks> sweep_structure(const std::vector<std::vector<Word>>& sets, int m,
                                             bool parallel);

/// Witnessed-pair deducibility over every reduced word of length <= depth;
/// computes the same answer as completeness_check (which is the serial
/// reference) but precomputes deducibility tables and splits the ball across
/// threads.
bool completeness_sweep(const CongruenceSystem& sys, int depth, Mode mode, bool parallel);

} // namespace setcong
