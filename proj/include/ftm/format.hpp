// format.hpp - the .ftm machine file format and run-report rendering.
//
// The format is line oriented; '#' starts a comment. Directives:
//
//   kind: ftm|gftm|eftm
//   tnorm: product|goedel|lukasiewicz
//   blank: <sym>
//   states: <name>[:accept[@<group>]|:reject[@<group>]|:indet] ...
//   start: <name>
//   input_alphabet: [<sym> ...]
//   tape_alphabet: <sym> ...
//   trans: <q> <a> -> <p> <b> <L|R|S> @ <degree>
//
// Names and symbols use characters [A-Za-z0-9_.-]. The list directives may
// repeat and accumulate; the others appear exactly once. Serialization is
// canonical: directives in the order above, states and transitions sorted,
// so parse . serialize is the identity on canonical files.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ftm/engine.hpp"
#include "ftm/machine.hpp"

namespace ftm {

struct Diagnostic {
    int line = 0;    // 1-based; 0 for file-level problems
    int column = 0;  // 1-based; 0 when not tied to a token
    std::string message;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct ParseResult {
    std::optional<MachineSpec> spec;  // set exactly when diagnostics is empty
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return spec.has_value(); }
};

ParseResult parse(std::string_view text);

std::string serialize(const MachineSpec& spec);

enum class ReportFormat { Text, Json };

// Text: one line "e=... e'=... e''=... [status]". Json: one object with
// fixed key order (accept_degree, reject_degree, indeterminacy_degree,
// status, levels_explored, configurations_expanded, bound_events,
// machine_kind, tnorm, input); numbers carry 12 significant digits.
std::string report_emit(const RunReport& report, ReportFormat format);

}  // namespace ftm
