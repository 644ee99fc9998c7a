// configuration.hpp - instantaneous descriptions and single-step semantics.
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ftm/machine.hpp"

namespace ftm {

// An instantaneous description in canonical form: tape left of the head
// (leftmost first, no leading blanks), current state, and the tape from the
// head rightwards (no trailing blanks; empty means the head reads blank).
// Two configurations are equal exactly when their canonical forms are.
struct Configuration {
    std::int32_t state = -1;
    std::vector<std::int32_t> left;
    std::vector<std::int32_t> right;

    auto operator<=>(const Configuration&) const = default;
};

// Interned view of a machine: state/symbol indices and per-(state, symbol)
// transition lists in canonical tuple order.
class MachineIndex {
public:
    explicit MachineIndex(const MachineSpec& spec);

    const MachineSpec& spec() const { return *spec_; }
    int state_count() const { return static_cast<int>(spec_->states.size()); }
    int symbol_count() const { return static_cast<int>(spec_->tape_alphabet.size()); }
    int blank() const { return blank_; }
    int start_state() const { return start_; }

    int state_index(std::string_view name) const;    // -1 when unknown
    int symbol_index(std::string_view token) const;  // -1 when unknown
    StateKind kind_of(int state) const { return spec_->states[state].kind; }
    const std::string& state_name(int state) const { return spec_->states[state].name; }
    const std::string& symbol_token(int sym) const { return spec_->tape_alphabet[sym]; }

    std::span<const std::int32_t> matching(int state, int symbol) const;
    const Transition& transition(std::int32_t index) const { return spec_->transitions[index]; }

    // Largest degree over transitions whose endpoints are both outside the
    // indeterminacy states; this is the k of the level bound. Empty when no
    // such transition exists.
    std::optional<Degree> max_plain_degree() const { return max_plain_degree_; }

private:
    const MachineSpec* spec_;
    int blank_ = -1;
    int start_ = -1;
    std::optional<Degree> max_plain_degree_;
    std::vector<std::vector<std::int32_t>> by_state_symbol_;  // state * symbols + symbol
    std::vector<std::pair<std::int32_t, std::int32_t>> step_cache_;  // (to, write) per transition
    std::vector<MoveDir> move_cache_;

    friend Configuration apply_transition(const MachineIndex&, const Configuration&, std::int32_t);
};

Configuration initial_configuration(const MachineIndex& index,
                                    std::span<const std::string> input);

int head_symbol(const MachineIndex& index, const Configuration& cfg);

// All one-step successors of cfg with their transition degrees, ordered by
// canonical transition tuple order. Accepting or rejecting configurations
// still have successors here; the search decides not to expand them.
std::vector<std::pair<Configuration, Degree>> successors(const MachineIndex& index,
                                                         const Configuration& cfg);

// Canonical ID rendering: "u[q]v" with the u and v symbol tokens separated
// by single spaces. Injective for distinct canonical configurations.
std::string id_string(const MachineIndex& index, const Configuration& cfg);

}  // namespace ftm
