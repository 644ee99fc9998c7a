#include "ftm/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ftm {

namespace {

void require(bool cond, const std::string& message) {
    if (!cond) throw std::invalid_argument(message);
}

std::string fresh_name(const std::set<std::string>& taken, const std::string& base) {
    if (!taken.count(base)) return base;
    for (int i = 2;; ++i) {
        std::string candidate = base + "_" + std::to_string(i);
        if (!taken.count(candidate)) return candidate;
    }
}

std::set<std::string> state_names(const MachineSpec& m) {
    std::set<std::string> names;
    for (const StateDecl& st : m.states) names.insert(st.name);
    return names;
}

void wire_hub(MachineSpec& spec, const std::string& hub,
              const std::vector<std::string>& peers) {
    for (const std::string& peer : peers) {
        for (const std::string& sym : spec.tape_alphabet) {
            spec.transitions.push_back({peer, sym, hub, sym, MoveDir::Stay, Degree::one()});
            spec.transitions.push_back({hub, sym, peer, sym, MoveDir::Stay, Degree::one()});
        }
    }
}

void require_classical_acceptor(const MachineSpec& m, const char* op) {
    require(validate(m).empty(), std::string(op) + ": input machine fails validation");
    require(is_classical(m), std::string(op) + ": input machine must be classical "
                                               "(all degrees 1, no indeterminacy states)");
    for (const StateDecl& st : m.states)
        require(st.kind != StateKind::Reject,
                std::string(op) + ": input machine must have accept-only final states");
}

// Common body of the two recognizer lifts; flip_finals turns the original
// accepting states into rejecting ones and makes the degree-0 branch target
// an accepting state instead.
MachineSpec lift_recognizer(const MachineSpec& m, Degree t, bool flip_finals, const char* op) {
    require_classical_acceptor(m, op);
    require(t > Degree::zero() && t < Degree::one(),
            std::string(op) + ": degree must lie strictly between 0 and 1");

    MachineSpec out = m;
    out.kind = MachineKind::Eftm;

    std::set<std::string> taken = state_names(m);
    const std::string new_start = fresh_name(taken, "qs");
    taken.insert(new_start);
    const std::string zero_target = fresh_name(taken, flip_finals ? "qacc" : "qrej");
    taken.insert(zero_target);
    const std::string hub = fresh_name(taken, "qI");
    taken.insert(hub);

    std::vector<std::string> hub_peers;  // the demoted machine's non-final states
    for (StateDecl& st : out.states) {
        if (st.kind == StateKind::Start) st.kind = StateKind::Plain;
        if (flip_finals && st.kind == StateKind::Accept) st.kind = StateKind::Reject;
        if (st.kind == StateKind::Plain) hub_peers.push_back(st.name);
    }
    out.states.push_back({new_start, StateKind::Start, ""});
    out.states.push_back(
        {zero_target, flip_finals ? StateKind::Accept : StateKind::Reject, ""});
    out.states.push_back({hub, StateKind::Indeterminacy, ""});
    out.start = new_start;

    for (Transition& tr : out.transitions) tr.degree = t;
    const std::string demoted = m.start;
    for (const std::string& sym : out.tape_alphabet) {
        out.transitions.push_back({new_start, sym, demoted, sym, MoveDir::Stay, t});
        out.transitions.push_back(
            {new_start, sym, zero_target, sym, MoveDir::Stay, Degree::zero()});
    }
    wire_hub(out, hub, hub_peers);
    return canonicalized(std::move(out));
}

}  // namespace

MachineSpec lift_loop_catcher(const MachineSpec& m, const LiftParams& params) {
    require(validate(m).empty(), "lift_loop_catcher: input machine fails validation");
    require(is_classical(m), "lift_loop_catcher: input machine must be classical "
                             "(all degrees 1, no indeterminacy states)");
    require(params.uniform_degree > Degree::zero() && params.uniform_degree < Degree::one(),
            "lift_loop_catcher: uniform degree must lie strictly between 0 and 1");

    MachineSpec out = m;
    out.kind = MachineKind::Eftm;
    for (Transition& tr : out.transitions) tr.degree = params.uniform_degree;

    const std::string hub = fresh_name(state_names(m), params.hub_name);
    out.states.push_back({hub, StateKind::Indeterminacy, ""});
    std::vector<std::string> peers;
    for (const StateDecl& st : m.states)
        if (st.kind != StateKind::Accept && st.kind != StateKind::Reject)
            peers.push_back(st.name);
    wire_hub(out, hub, peers);
    return canonicalized(std::move(out));
}

MachineSpec lift_re(const MachineSpec& m, Degree t) {
    return lift_recognizer(m, t, /*flip_finals=*/false, "lift_re");
}

MachineSpec lift_core(const MachineSpec& m, Degree s) {
    return lift_recognizer(m, s, /*flip_finals=*/true, "lift_core");
}

MachineSpec swap_roles(const MachineSpec& e) {
    require(validate(e).empty(), "swap_roles: input machine fails validation");
    require(e.kind == MachineKind::Gftm || e.kind == MachineKind::Eftm,
            "swap_roles: machine kind must be gftm or eftm");
    MachineSpec out = e;
    for (StateDecl& st : out.states) {
        if (st.kind == StateKind::Accept)
            st.kind = StateKind::Reject;
        else if (st.kind == StateKind::Reject)
            st.kind = StateKind::Accept;
    }
    return canonicalized(std::move(out));
}

MachineSpec union_conorm(const MachineSpec& e1, const MachineSpec& e2) {
    require(validate(e1).empty(), "union_conorm: first machine fails validation");
    require(validate(e2).empty(), "union_conorm: second machine fails validation");
    require(e1.kind == MachineKind::Gftm && e2.kind == MachineKind::Gftm,
            "union_conorm: both machines must have kind gftm");
    require(e1.tnorm == e2.tnorm, "union_conorm: machines use different t-norms");
    require(e1.blank == e2.blank, "union_conorm: machines use different blank symbols");
    {
        std::set<std::string> s1(e1.input_alphabet.begin(), e1.input_alphabet.end());
        std::set<std::string> s2(e2.input_alphabet.begin(), e2.input_alphabet.end());
        require(s1 == s2, "union_conorm: machines use different input alphabets");
    }

    MachineSpec out;
    out.kind = MachineKind::Gftm;
    out.tnorm = e1.tnorm;
    out.blank = e1.blank;
    out.input_alphabet = e1.input_alphabet;
    {
        std::set<std::string> tape(e1.tape_alphabet.begin(), e1.tape_alphabet.end());
        tape.insert(e2.tape_alphabet.begin(), e2.tape_alphabet.end());
        out.tape_alphabet.assign(tape.begin(), tape.end());
    }

    auto side_group = [](const std::string& side, const std::string& group) {
        return group.empty() ? side : side + "." + group;
    };

    std::set<std::string> taken;
    std::map<std::string, std::string> rename1, rename2;
    auto add_side = [&](const MachineSpec& src, const std::string& side,
                        std::map<std::string, std::string>& rename) {
        for (const StateDecl& st : src.states) {
            const std::string name = fresh_name(taken, st.name);
            taken.insert(name);
            rename[st.name] = name;
            StateDecl decl{name, st.kind == StateKind::Start ? StateKind::Plain : st.kind, ""};
            if (decl.kind == StateKind::Accept) decl.group = side_group(side, st.group);
            out.states.push_back(decl);
        }
        for (const Transition& tr : src.transitions)
            out.transitions.push_back(
                {rename[tr.from], tr.read, rename[tr.to], tr.write, tr.move, tr.degree});
    };
    add_side(e1, "1", rename1);
    add_side(e2, "2", rename2);

    const std::string new_start = fresh_name(taken, "qs");
    out.states.push_back({new_start, StateKind::Start, ""});
    out.start = new_start;
    for (const std::string& sym : out.tape_alphabet) {
        out.transitions.push_back(
            {new_start, sym, rename1[e1.start], sym, MoveDir::Stay, Degree::one()});
        out.transitions.push_back(
            {new_start, sym, rename2[e2.start], sym, MoveDir::Stay, Degree::one()});
    }
    return canonicalized(std::move(out));
}

}  // namespace ftm
