// machine.hpp - machine definitions (FTM / GFTM / EFTM) and their validation.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "ftm/degree.hpp"

namespace ftm {

enum class MachineKind { Ftm, Gftm, Eftm };
enum class StateKind { Start, Plain, Accept, Reject, Indeterminacy };
enum class MoveDir { Left, Right, Stay };

std::string to_string(MachineKind kind);
std::optional<MachineKind> machine_kind_from_string(std::string_view name);
char to_char(MoveDir move);
std::optional<MoveDir> move_from_char(char c);

struct StateDecl {
    std::string name;
    StateKind kind = StateKind::Plain;
    // Aggregation group for accept/reject states; empty for the default
    // group. Degrees of distinct groups combine by the t-conorm instead of
    // the plain maximum, which is what the side-tagged union relies on.
    std::string group;

    friend bool operator==(const StateDecl&, const StateDecl&) = default;
};

struct Transition {
    std::string from;
    std::string read;
    std::string to;
    std::string write;
    MoveDir move = MoveDir::Stay;
    Degree degree;

    // Identity of a transition inside the (crisp) transition set; the degree
    // is a function of this tuple, not part of it.
    auto tuple() const { return std::tie(from, read, to, write, move); }

    friend bool operator==(const Transition&, const Transition&) = default;
};

bool transition_tuple_less(const Transition& a, const Transition& b);

struct MachineSpec {
    MachineKind kind = MachineKind::Gftm;
    TNormKind tnorm = TNormKind::Product;
    std::string blank;
    std::vector<StateDecl> states;
    std::string start;
    std::vector<std::string> input_alphabet;
    std::vector<std::string> tape_alphabet;
    std::vector<Transition> transitions;

    DegreeAlgebra algebra() const { return DegreeAlgebra(tnorm); }
    const StateDecl* find_state(std::string_view name) const;
    bool has_tape_symbol(std::string_view sym) const;
    bool has_input_symbol(std::string_view sym) const;

    friend bool operator==(const MachineSpec&, const MachineSpec&) = default;
};

// Structural problems: missing or dangling references, duplicate names or
// transition tuples, a malformed start state. Deterministic order.
std::vector<std::string> structural_errors(const MachineSpec& spec);

// Sorts states, alphabets and transitions into canonical order and checks
// structure; throws std::invalid_argument on any structural error. All
// machines produced programmatically go through this.
MachineSpec canonicalized(MachineSpec spec);

struct Violation {
    std::string subject;  // state name or rendered transition
    std::string clause;   // stable identifier of the violated rule
    std::string message;

    friend bool operator==(const Violation&, const Violation&) = default;
};

std::string to_string(const Transition& t);

// Kind-specific validation. For an EFTM: indeterminacy transitions are
// silent; degree 1 exactly on transitions touching an indeterminacy state;
// degree 0 only on start -> accept/reject. For an FTM: moves L/R only and
// no reject states. Structure is assumed sound (see structural_errors).
// Returns violations ordered by (state name, transition tuple).
std::vector<Violation> validate(const MachineSpec& spec);

// True when the machine is a plain nondeterministic TM in this format:
// every degree equals 1 and there is no indeterminacy state. Inputs of the
// lift constructions must satisfy this.
bool is_classical(const MachineSpec& spec);

}  // namespace ftm
