#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "vlink/moves.hpp"

namespace vlink {

struct SearchResult {
    bool found = false;
    std::vector<MoveInstance> path;  // moves from the start state's representative
    int visited = 0;
    bool exhausted = false;  // the reachable space within bounds was fully explored
};

// Breadth-first search over diagram states (identified up to rotation and
// relabelling) from `from` to `to`, applying the given move kinds. Additions
// are pruned above max_chords; the search stops after visiting max_states.
// Each path step applies to the canonical representative of its state.
SearchResult bfs_connect(const GaussDiagram& from, const GaussDiagram& to,
                         const std::set<MoveKind>& kinds, int max_chords, int max_states);

struct ScrambleResult {
    GaussDiagram diagram;
    std::vector<MoveInstance> applied;
};

// Applies `steps` uniformly chosen legal moves with a deterministic seed.
// Steps with no legal move are skipped.
ScrambleResult random_scramble(const GaussDiagram& d, int steps, std::uint64_t seed,
                               const std::set<MoveKind>& kinds, int max_chords);

struct CensusGroup {
    std::string profile;                       // rendered invariant profile
    int member_count = 0;
    int connected_pairs = 0;                   // pairs joined within budget
    int unresolved_pairs = 0;                  // pairs where the search gave out
    std::map<int, int> path_length_histogram;  // length -> pair count
};

struct CensusReport {
    int diagram_count = 0;
    std::vector<CensusGroup> groups;
};

// Enumerates all two-circle diagrams with at most max_chords chords (up to
// rotation and relabelling), groups them by invariant profile, and checks
// pairwise connectivity inside each group by bounded search.
CensusReport census(int max_chords, int add_budget, int max_states);

std::string census_to_json(const CensusReport& r);

}  // namespace vlink
