// engine.hpp - level-by-level search computing accepting, rejecting and
// indeterminacy degrees of an input.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ftm/configuration.hpp"
#include "ftm/machine.hpp"

namespace ftm {

struct SearchBudget {
    std::uint64_t max_levels = 10'000;
    std::uint64_t max_configurations = 1'000'000;
};

enum class RunStatus { Complete, BoundApplied, BudgetExhausted };
enum class SearchSide { Accept, Reject };

std::string to_string(RunStatus status);
std::string to_string(SearchSide side);

struct BoundEvent {
    SearchSide side = SearchSide::Accept;
    std::uint64_t level = 0;
    std::optional<std::uint64_t> bound;  // empty: bound unavailable, budget applies

    friend bool operator==(const BoundEvent&, const BoundEvent&) = default;
};

struct RunOptions {
    // Expand each level's frontier with OpenMP. Reports are byte-identical
    // to the serial reference either way.
    bool parallel = false;
    // Drop a child that repeats an ancestor's configuration at an unchanged
    // path degree. Keeps silent round-trips through indeterminacy states
    // from spawning endless equal-degree paths.
    bool cycle_pruning = true;
};

struct RunReport {
    Degree accept_degree;         // e
    Degree reject_degree;         // e'
    Degree indeterminacy_degree;  // e''
    RunStatus status = RunStatus::Complete;
    std::uint64_t levels_explored = 0;
    std::uint64_t configurations_expanded = 0;
    std::vector<BoundEvent> bound_events;
    MachineKind machine_kind = MachineKind::Gftm;
    TNormKind tnorm = TNormKind::Product;
    std::string input;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

// The number of further levels that may still produce a relevant accepting
// (or rejecting) configuration once one of degree d has been found: the
// largest min_power_steps over the degrees of the other configurations on
// that level. Empty frontier needs 0 further levels; an unavailable member
// (or missing k) makes the whole bound unavailable.
std::optional<std::uint64_t> level_bound(const DegreeAlgebra& alg, Degree d,
                                         std::span<const Degree> other_level_degrees,
                                         std::optional<Degree> k, std::uint64_t cap);

// Splits a CLI-style input string into symbol tokens: whitespace-separated
// tokens when any whitespace is present, the whole string when it names a
// single input symbol, one token per character otherwise.
std::vector<std::string> tokenize_input(const MachineSpec& spec, std::string_view text);

RunReport run(const MachineSpec& spec, std::span<const std::string> input,
              const SearchBudget& budget = {}, const RunOptions& options = {});

// The e'' component alone, over the same exploration as run.
Degree indeterminacy_degree(const MachineSpec& spec, std::span<const std::string> input,
                            const SearchBudget& budget = {});

}  // namespace ftm
