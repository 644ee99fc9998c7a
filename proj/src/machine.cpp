#include "ftm/machine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ftm {

std::string to_string(MachineKind kind) {
    switch (kind) {
        case MachineKind::Ftm: return "ftm";
        case MachineKind::Gftm: return "gftm";
        case MachineKind::Eftm: return "eftm";
    }
    return "?";
}

std::optional<MachineKind> machine_kind_from_string(std::string_view name) {
    if (name == "ftm") return MachineKind::Ftm;
    if (name == "gftm") return MachineKind::Gftm;
    if (name == "eftm") return MachineKind::Eftm;
    return std::nullopt;
}

char to_char(MoveDir move) {
    switch (move) {
        case MoveDir::Left: return 'L';
        case MoveDir::Right: return 'R';
        case MoveDir::Stay: return 'S';
    }
    return '?';
}

std::optional<MoveDir> move_from_char(char c) {
    if (c == 'L') return MoveDir::Left;
    if (c == 'R') return MoveDir::Right;
    if (c == 'S') return MoveDir::Stay;
    return std::nullopt;
}

bool transition_tuple_less(const Transition& a, const Transition& b) {
    return a.tuple() < b.tuple();
}

std::string to_string(const Transition& t) {
    std::string s = t.from;
    s += ' ';
    s += t.read;
    s += " -> ";
    s += t.to;
    s += ' ';
    s += t.write;
    s += ' ';
    s += to_char(t.move);
    return s;
}

const StateDecl* MachineSpec::find_state(std::string_view name) const {
    for (const StateDecl& st : states)
        if (st.name == name) return &st;
    return nullptr;
}

bool MachineSpec::has_tape_symbol(std::string_view sym) const {
    return std::find(tape_alphabet.begin(), tape_alphabet.end(), sym) != tape_alphabet.end();
}

bool MachineSpec::has_input_symbol(std::string_view sym) const {
    return std::find(input_alphabet.begin(), input_alphabet.end(), sym) != input_alphabet.end();
}

std::vector<std::string> structural_errors(const MachineSpec& spec) {
    std::vector<std::string> errs;
    auto err = [&errs](std::string m) { errs.push_back(std::move(m)); };

    std::set<std::string> state_names;
    int start_count = 0;
    for (const StateDecl& st : spec.states) {
        if (st.name.empty()) err("state with empty name");
        if (!state_names.insert(st.name).second) err("duplicate state name: " + st.name);
        if (st.kind == StateKind::Start) ++start_count;
        if (!st.group.empty() && st.kind != StateKind::Accept && st.kind != StateKind::Reject)
            err("state " + st.name + ": aggregation groups apply to accept/reject states only");
    }
    if (start_count != 1) err("machine must declare exactly one start state");
    const StateDecl* start = spec.find_state(spec.start);
    if (!start)
        err("start state not declared: " + spec.start);
    else if (start->kind != StateKind::Start)
        err("start state " + spec.start + " must carry no accept/reject/indeterminacy marker");

    std::set<std::string> tape(spec.tape_alphabet.begin(), spec.tape_alphabet.end());
    if (tape.size() != spec.tape_alphabet.size()) err("duplicate tape symbol");
    std::set<std::string> input(spec.input_alphabet.begin(), spec.input_alphabet.end());
    if (input.size() != spec.input_alphabet.size()) err("duplicate input symbol");
    if (spec.blank.empty()) err("blank symbol missing");
    if (!tape.count(spec.blank)) err("blank symbol must be in the tape alphabet");
    if (input.count(spec.blank)) err("blank symbol must not be in the input alphabet");
    for (const std::string& s : spec.input_alphabet)
        if (!tape.count(s)) err("input symbol not in tape alphabet: " + s);

    std::set<std::tuple<std::string, std::string, std::string, std::string, MoveDir>> tuples;
    for (const Transition& t : spec.transitions) {
        if (!state_names.count(t.from)) err("transition references undeclared state: " + t.from);
        if (!state_names.count(t.to)) err("transition references undeclared state: " + t.to);
        if (!tape.count(t.read)) err("transition references undeclared symbol: " + t.read);
        if (!tape.count(t.write)) err("transition references undeclared symbol: " + t.write);
        if (!tuples.insert({t.from, t.read, t.to, t.write, t.move}).second)
            err("duplicate transition (the transition set is crisp): " + to_string(t));
    }
    return errs;
}

MachineSpec canonicalized(MachineSpec spec) {
    std::sort(spec.states.begin(), spec.states.end(),
              [](const StateDecl& a, const StateDecl& b) { return a.name < b.name; });
    std::sort(spec.input_alphabet.begin(), spec.input_alphabet.end());
    std::sort(spec.tape_alphabet.begin(), spec.tape_alphabet.end());
    std::sort(spec.transitions.begin(), spec.transitions.end(), transition_tuple_less);
    std::vector<std::string> errs = structural_errors(spec);
    if (!errs.empty()) throw std::invalid_argument("malformed machine: " + errs.front());
    return spec;
}

namespace {

bool touches_indeterminacy(const MachineSpec& spec, const Transition& t) {
    const StateDecl* from = spec.find_state(t.from);
    const StateDecl* to = spec.find_state(t.to);
    return (from && from->kind == StateKind::Indeterminacy) ||
           (to && to->kind == StateKind::Indeterminacy);
}

}  // namespace

std::vector<Violation> validate(const MachineSpec& spec) {
    std::vector<Violation> state_level;
    std::vector<Violation> transition_level;

    if (spec.kind != MachineKind::Eftm) {
        for (const StateDecl& st : spec.states)
            if (st.kind == StateKind::Indeterminacy)
                state_level.push_back({st.name, "kind.indeterminacy-state",
                                       "indeterminacy states require an eftm machine"});
    }
    if (spec.kind == MachineKind::Ftm) {
        for (const StateDecl& st : spec.states)
            if (st.kind == StateKind::Reject)
                state_level.push_back(
                    {st.name, "ftm.no-reject", "an ftm machine has accept-only final states"});
    }

    for (const Transition& t : spec.transitions) {
        const std::string subject = to_string(t);
        if (spec.kind == MachineKind::Ftm && t.move == MoveDir::Stay)
            transition_level.push_back(
                {subject, "ftm.move-set", "an ftm machine moves the head L or R on every step"});
        if (spec.kind != MachineKind::Eftm) continue;

        const StateDecl* from = spec.find_state(t.from);
        const StateDecl* to = spec.find_state(t.to);
        const bool indet = touches_indeterminacy(spec, t);
        if (indet && (t.read != t.write || t.move != MoveDir::Stay))
            transition_level.push_back({subject, "eftm.silent",
                                        "transitions touching an indeterminacy state must keep "
                                        "the tape and head unchanged"});
        if (indet && t.degree != Degree::one())
            transition_level.push_back({subject, "eftm.unit-degree",
                                        "transitions touching an indeterminacy state must carry "
                                        "degree 1"});
        if (!indet && t.degree == Degree::one())
            transition_level.push_back({subject, "eftm.unit-degree",
                                        "degree 1 is reserved for transitions touching an "
                                        "indeterminacy state"});
        const bool start_to_final =
            from && from->kind == StateKind::Start && to &&
            (to->kind == StateKind::Accept || to->kind == StateKind::Reject);
        if (t.degree == Degree::zero() && !start_to_final)
            transition_level.push_back({subject, "eftm.zero-degree",
                                        "degree 0 is allowed only on transitions from the start "
                                        "state to an accept or reject state"});
    }

    std::sort(state_level.begin(), state_level.end(),
              [](const Violation& a, const Violation& b) {
                  return std::tie(a.subject, a.clause) < std::tie(b.subject, b.clause);
              });
    std::sort(transition_level.begin(), transition_level.end(),
              [](const Violation& a, const Violation& b) {
                  return std::tie(a.subject, a.clause) < std::tie(b.subject, b.clause);
              });
    state_level.insert(state_level.end(), transition_level.begin(), transition_level.end());
    return state_level;
}

bool is_classical(const MachineSpec& spec) {
    for (const StateDecl& st : spec.states)
        if (st.kind == StateKind::Indeterminacy) return false;
    for (const Transition& t : spec.transitions)
        if (t.degree != Degree::one()) return false;
    return true;
}

}  // namespace ftm
