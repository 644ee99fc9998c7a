// constructions.hpp - machine-to-machine transforms: the loop-catcher lift,
// the recognizer lifts for a language and for a complement, the accept /
// reject role swap, and the side-tagged union.
#pragma once

#include <string>

#include "ftm/machine.hpp"

namespace ftm {

struct LiftParams {
    Degree uniform_degree;          // must lie strictly between 0 and 1
    std::string hub_name = "qI";    // base name for the indeterminacy hub
};

// Wraps a classical machine into an eftm that catches cyclic loops: every
// original transition gets the uniform degree and an indeterminacy hub is
// wired silently, both directions, to every non-accept, non-reject state.
// A cyclic loop then shows up as indeterminacy degree 0.
MachineSpec lift_loop_catcher(const MachineSpec& m, const LiftParams& params);

// Lifts a classical recognizer of a language into an eftm whose accepted
// inputs carry a positive accepting degree, rejecting degree 0 (through a
// degree-0 start transition into a fresh reject state) and an indeterminacy
// degree above the accepting one. The original start is demoted to a plain
// state reached through a silent bridge of degree t. The hub is wired to the
// demoted machine's non-final states; wiring it to the fresh start would
// close a silent degree-t cycle through the bridge and pin the indeterminacy
// degree at 0.
MachineSpec lift_re(const MachineSpec& m, Degree t);

// Mirror of lift_re for a recognizer of the complement: its accepting states
// become rejecting and the degree-0 branch targets a fresh accepting state.
MachineSpec lift_core(const MachineSpec& m, Degree s);

// Exchanges accept and reject kinds; everything else, groups included, is
// untouched. Involutive.
MachineSpec swap_roles(const MachineSpec& e);

// Disjoint union behind a fresh start with silent degree-1 branches to both
// halves. Accepting states are tagged by side so the accepting degree of the
// union is the t-conorm of the halves' degrees rather than their maximum.
// Both inputs must be gftm machines over the same algebra, input alphabet
// and blank.
MachineSpec union_conorm(const MachineSpec& e1, const MachineSpec& e2);

}  // namespace ftm
