// support.hpp - machine builders and deterministic generators shared by the
// unit and acceptance suites.
#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ftm/constructions.hpp"
#include "ftm/engine.hpp"
#include "ftm/machine.hpp"

namespace ftm::testing {

inline MachineSpec basic_spec(MachineKind kind, TNormKind tnorm) {
    MachineSpec spec;
    spec.kind = kind;
    spec.tnorm = tnorm;
    spec.blank = "_";
    spec.input_alphabet = {"0", "1"};
    spec.tape_alphabet = {"_", "0", "1"};
    return spec;
}

inline Transition tr(std::string from, std::string read, std::string to, std::string write,
                     MoveDir move, double degree) {
    return {std::move(from), std::move(read), std::move(to), std::move(write), move,
            Degree(degree)};
}

// qs --0/0,R @0.2--> q1 --_/_,S @0.7--> qa ; accepts "0" at 0.14 under product.
inline MachineSpec chain_machine(TNormKind tnorm = TNormKind::Product) {
    MachineSpec spec = basic_spec(MachineKind::Gftm, tnorm);
    spec.states = {{"qs", StateKind::Start, ""},
                   {"q1", StateKind::Plain, ""},
                   {"qa", StateKind::Accept, ""}};
    spec.start = "qs";
    spec.transitions = {tr("qs", "0", "q1", "0", MoveDir::Right, 0.2),
                        tr("q1", "_", "qa", "_", MoveDir::Stay, 0.7)};
    return canonicalized(std::move(spec));
}

// Reconstruction of the worked example machine: accepts "0" at 0.2*0.7,
// and on "01" a 0.5 self-loop feeds the indeterminacy hub, so the hub IDs
// have walk infimum 0 under product.
inline MachineSpec figure_machine() {
    MachineSpec spec = basic_spec(MachineKind::Eftm, TNormKind::Product);
    spec.states = {{"qs", StateKind::Start, ""},
                   {"q1", StateKind::Plain, ""},
                   {"qI", StateKind::Indeterminacy, ""},
                   {"qa", StateKind::Accept, ""}};
    spec.start = "qs";
    spec.transitions = {tr("qs", "0", "q1", "0", MoveDir::Right, 0.2),
                        tr("q1", "1", "q1", "1", MoveDir::Stay, 0.5),
                        tr("q1", "_", "qa", "_", MoveDir::Stay, 0.7)};
    for (const std::string& q : {std::string("qs"), std::string("q1")})
        for (const std::string& a : spec.tape_alphabet) {
            spec.transitions.push_back(tr(q, a, "qI", a, MoveDir::Stay, 1.0));
            spec.transitions.push_back(tr("qI", a, q, a, MoveDir::Stay, 1.0));
        }
    return canonicalized(std::move(spec));
}

// Classical recognizer of 1*: scan right over 1s, accept at the blank.
// Stalls on the first 0, so nothing past it is ever reachable.
inline MachineSpec ones_recognizer() {
    MachineSpec spec = basic_spec(MachineKind::Gftm, TNormKind::Product);
    spec.states = {{"s0", StateKind::Start, ""}, {"acc", StateKind::Accept, ""}};
    spec.start = "s0";
    spec.transitions = {tr("s0", "1", "s0", "1", MoveDir::Right, 1.0),
                        tr("s0", "_", "acc", "_", MoveDir::Stay, 1.0)};
    return canonicalized(std::move(spec));
}

// Classical recognizer of strings containing a 0: scan right over 1s,
// accept on the first 0, stall at the blank.
inline MachineSpec zero_recognizer() {
    MachineSpec spec = basic_spec(MachineKind::Gftm, TNormKind::Product);
    spec.states = {{"c0", StateKind::Start, ""}, {"acc", StateKind::Accept, ""}};
    spec.start = "c0";
    spec.transitions = {tr("c0", "1", "c0", "1", MoveDir::Right, 1.0),
                        tr("c0", "0", "acc", "0", MoveDir::Stay, 1.0)};
    return canonicalized(std::move(spec));
}

inline std::vector<std::string> symbols_of(std::string_view text) {
    std::vector<std::string> out;
    for (char c : text) out.emplace_back(1, c);
    return out;
}

// All inputs over {0,1} of length <= max_len, shortest first.
inline std::vector<std::string> binary_inputs(int max_len) {
    std::vector<std::string> out{""};
    std::vector<std::string> frontier{""};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::string> next;
        for (const std::string& w : frontier)
            for (char c : {'0', '1'}) {
                next.push_back(w + c);
                out.push_back(w + c);
            }
        frontier = std::move(next);
    }
    return out;
}

// Random machine whose state index strictly increases along transitions, so
// every computation path ends within state_count steps.
inline MachineSpec random_layered_machine(std::mt19937_64& rng, TNormKind tnorm) {
    std::uniform_int_distribution<int> plain_count_dist(2, 5);
    std::uniform_real_distribution<double> degree_dist(0.1, 0.95);

    const int plains = plain_count_dist(rng);
    MachineSpec spec = basic_spec(MachineKind::Gftm, tnorm);
    for (int i = 0; i < plains; ++i)
        spec.states.push_back({"q" + std::to_string(i),
                               i == 0 ? StateKind::Start : StateKind::Plain, ""});
    spec.states.push_back({"qa", StateKind::Accept, ""});
    spec.states.push_back({"qr", StateKind::Reject, ""});
    spec.start = "q0";

    std::uniform_int_distribution<int> move_dist(0, 2);
    std::uniform_int_distribution<int> fanout_dist(1, 3);
    std::set<std::tuple<std::string, std::string, std::string, std::string, MoveDir>> used;
    for (int i = 0; i < plains; ++i) {
        for (const std::string& sym : spec.tape_alphabet) {
            const int fanout = fanout_dist(rng);
            for (int f = 0; f < fanout; ++f) {
                std::uniform_int_distribution<int> to_dist(i + 1, plains + 1);
                const int target = to_dist(rng);
                std::string to = target < plains ? "q" + std::to_string(target)
                                 : target == plains ? "qa"
                                                    : "qr";
                const std::string write = spec.tape_alphabet[static_cast<std::size_t>(
                    std::uniform_int_distribution<int>(0, 2)(rng))];
                const MoveDir move = *move_from_char("LRS"[move_dist(rng)]);
                if (!used.insert({("q" + std::to_string(i)), sym, to, write, move}).second)
                    continue;
                spec.transitions.push_back(
                    tr("q" + std::to_string(i), sym, to, write, move, degree_dist(rng)));
            }
        }
    }
    return canonicalized(std::move(spec));
}

// Random input of length 0..3 over {0,1}.
inline std::vector<std::string> random_input(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len_dist(0, 3);
    std::uniform_int_distribution<int> bit(0, 1);
    std::vector<std::string> input;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) input.emplace_back(1, static_cast<char>('0' + bit(rng)));
    return input;
}

}  // namespace ftm::testing
