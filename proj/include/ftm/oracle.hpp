// oracle.hpp - brute-force path enumeration used to cross-check the engine.
// Shares only MachineSpec and the degree algebra with the engine; stepping
// and aggregation are reimplemented from the definitions, with no pruning
// beyond stopping at accepting/rejecting configurations and no level bound.
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ftm/machine.hpp"

namespace ftm {

struct PathRecord {
    std::vector<std::string> ids;  // canonical IDs, root first; degrees.size() + 1 entries
    std::vector<Degree> degrees;   // edge degrees along the path
    Degree composed;               // fold of degrees under the machine's t-norm
};

inline constexpr std::uint64_t kOraclePathLimit = 10'000'000;

// Every maximal computation-tree path of length <= depth, depth first in
// canonical transition order. A path ends at an accepting or rejecting
// configuration, at a configuration with no successors, or at the depth
// limit. Throws std::length_error when more than max_paths paths exist.
std::vector<PathRecord> enumerate(const MachineSpec& spec, std::span<const std::string> input,
                                  std::uint64_t depth,
                                  std::uint64_t max_paths = kOraclePathLimit);

struct OracleDegrees {
    Degree accept_degree;  // max over accepting IDs of the conorm over their paths
    Degree reject_degree;
    // Per indeterminacy ID, the least path degree observed at this depth; an
    // upper bound on the true infimum.
    std::map<std::string, Degree> indeterminacy_candidates;
};

OracleDegrees oracle_degrees(const std::vector<PathRecord>& paths, const MachineSpec& spec);

}  // namespace ftm
