#include "ftm/format.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

namespace ftm {

namespace {

bool valid_token_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '.' || c == '-';
}

bool valid_token(std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
        if (!valid_token_char(c)) return false;
    return true;
}

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize_line(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' &&
               line[j] != '#')
            ++j;
        out.push_back({std::string(line.substr(i, j - i)), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

std::string format_degree(Degree d) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), d.value());
    (void)ec;
    return std::string(buf, end);
}

struct Parser {
    std::vector<Diagnostic> diags;
    MachineSpec spec;
    std::set<std::string> seen_directives;
    std::set<std::string> state_names;
    std::set<std::tuple<std::string, std::string, std::string, std::string, MoveDir>> tuples;
    int states_line = 0, input_line = 0, tape_line = 0, blank_line = 0, start_line = 0;
    int start_column = 0;
    std::string start_name;
    bool have_kind = false, have_tnorm = false, have_blank = false, have_start = false;
    bool have_states = false, have_input = false, have_tape = false;

    void error(int line, int column, std::string message) {
        diags.push_back({line, column, std::move(message)});
    }

    void once(const std::string& directive, int line, int column) {
        if (!seen_directives.insert(directive).second)
            error(line, column, "duplicate directive: " + directive);
    }

    bool check_token(const Token& t, int line, const char* what) {
        if (!valid_token(t.text)) {
            error(line, t.column, std::string("invalid ") + what + " token: " + t.text);
            return false;
        }
        return true;
    }

    void parse_states(const std::vector<Token>& toks, int line) {
        have_states = true;
        if (!states_line) states_line = line;
        for (std::size_t i = 1; i < toks.size(); ++i) {
            std::string_view decl = toks[i].text;
            std::string name, tag, group;
            const std::size_t colon = decl.find(':');
            name = std::string(decl.substr(0, colon == std::string_view::npos ? decl.size() : colon));
            if (colon != std::string_view::npos) {
                std::string_view rest = decl.substr(colon + 1);
                const std::size_t at = rest.find('@');
                tag = std::string(rest.substr(0, at == std::string_view::npos ? rest.size() : at));
                if (at != std::string_view::npos) group = std::string(rest.substr(at + 1));
            }
            if (!valid_token(name)) {
                error(line, toks[i].column, "invalid state name: " + std::string(decl));
                continue;
            }
            StateKind kind = StateKind::Plain;
            if (tag == "accept")
                kind = StateKind::Accept;
            else if (tag == "reject")
                kind = StateKind::Reject;
            else if (tag == "indet")
                kind = StateKind::Indeterminacy;
            else if (!tag.empty()) {
                error(line, toks[i].column, "unknown state marker :" + tag);
                continue;
            }
            if (!group.empty() && !valid_token(group)) {
                error(line, toks[i].column, "invalid group tag: " + group);
                continue;
            }
            if (!group.empty() && kind != StateKind::Accept && kind != StateKind::Reject) {
                error(line, toks[i].column,
                      "group tags apply to accept and reject states only");
                continue;
            }
            if (!state_names.insert(name).second) {
                error(line, toks[i].column, "duplicate state name: " + name);
                continue;
            }
            spec.states.push_back({name, kind, group});
        }
    }

    void parse_symbols(const std::vector<Token>& toks, int line, std::vector<std::string>& dst,
                       const char* what) {
        for (std::size_t i = 1; i < toks.size(); ++i) {
            if (!check_token(toks[i], line, what)) continue;
            if (std::find(dst.begin(), dst.end(), toks[i].text) != dst.end()) {
                error(line, toks[i].column,
                      std::string("duplicate ") + what + ": " + toks[i].text);
                continue;
            }
            dst.push_back(toks[i].text);
        }
    }

    void parse_trans(const std::vector<Token>& toks, int line) {
        if (toks.size() != 9 || toks[3].text != "->" || toks[7].text != "@") {
            error(line, toks[0].column,
                  "transition syntax: trans: <q> <a> -> <p> <b> <L|R|S> @ <degree>");
            return;
        }
        Transition t;
        if (!check_token(toks[1], line, "state")) return;
        if (!check_token(toks[2], line, "symbol")) return;
        if (!check_token(toks[4], line, "state")) return;
        if (!check_token(toks[5], line, "symbol")) return;
        t.from = toks[1].text;
        t.read = toks[2].text;
        t.to = toks[4].text;
        t.write = toks[5].text;
        const std::string& mv = toks[6].text;
        auto move = mv.size() == 1 ? move_from_char(mv[0]) : std::nullopt;
        if (!move) {
            error(line, toks[6].column, "move must be one of L, R, S: " + mv);
            return;
        }
        t.move = *move;
        double value = 0.0;
        const std::string& dtext = toks[8].text;
        auto [ptr, ec] = std::from_chars(dtext.data(), dtext.data() + dtext.size(), value);
        if (ec != std::errc() || ptr != dtext.data() + dtext.size()) {
            error(line, toks[8].column, "malformed degree: " + dtext);
            return;
        }
        if (!(value >= 0.0 && value <= 1.0)) {
            error(line, toks[8].column, "degree outside [0,1]: " + dtext);
            return;
        }
        t.degree = Degree(value);
        if (!tuples.insert({t.from, t.read, t.to, t.write, t.move}).second) {
            error(line, toks[0].column,
                  "duplicate transition (the transition set is crisp; each tuple may appear "
                  "once): " + to_string(t));
            return;
        }
        spec.transitions.push_back(std::move(t));
    }

    void parse_line(std::string_view text, int line) {
        const std::vector<Token> toks = tokenize_line(text);
        if (toks.empty()) return;
        const std::string& head = toks[0].text;
        auto single_value = [&](bool& have, int& where) -> const Token* {
            once(head, line, toks[0].column);
            have = true;
            where = line;
            if (toks.size() != 2) {
                error(line, toks[0].column, head + " takes exactly one value");
                return nullptr;
            }
            return &toks[1];
        };
        if (head == "kind:") {
            int dummy = 0;
            if (const Token* v = single_value(have_kind, dummy)) {
                auto kind = machine_kind_from_string(v->text);
                if (!kind)
                    error(line, v->column, "unknown machine kind: " + v->text);
                else
                    spec.kind = *kind;
            }
        } else if (head == "tnorm:") {
            int dummy = 0;
            if (const Token* v = single_value(have_tnorm, dummy)) {
                auto tn = tnorm_from_string(v->text);
                if (!tn)
                    error(line, v->column, "unknown t-norm: " + v->text);
                else
                    spec.tnorm = *tn;
            }
        } else if (head == "blank:") {
            if (const Token* v = single_value(have_blank, blank_line)) {
                if (check_token(*v, line, "symbol")) spec.blank = v->text;
            }
        } else if (head == "start:") {
            if (const Token* v = single_value(have_start, start_line)) {
                if (check_token(*v, line, "state")) {
                    start_name = v->text;
                    start_column = v->column;
                }
            }
        } else if (head == "states:") {
            parse_states(toks, line);
        } else if (head == "input_alphabet:") {
            have_input = true;
            if (!input_line) input_line = line;
            parse_symbols(toks, line, spec.input_alphabet, "input symbol");
        } else if (head == "tape_alphabet:") {
            have_tape = true;
            if (!tape_line) tape_line = line;
            parse_symbols(toks, line, spec.tape_alphabet, "tape symbol");
        } else if (head == "trans:") {
            parse_trans(toks, line);
        } else {
            error(line, toks[0].column, "unknown directive: " + head);
        }
    }

    void finish() {
        if (!have_kind) error(0, 0, "missing directive: kind:");
        if (!have_tnorm) error(0, 0, "missing directive: tnorm:");
        if (!have_blank) error(0, 0, "missing directive: blank:");
        if (!have_states) error(0, 0, "missing directive: states:");
        if (!have_start) error(0, 0, "missing directive: start:");
        if (!have_input) error(0, 0, "missing directive: input_alphabet:");
        if (!have_tape) error(0, 0, "missing directive: tape_alphabet:");
        if (!diags.empty()) return;

        if (!state_names.count(start_name)) {
            error(start_line, start_column, "start state not declared: " + start_name);
        } else {
            for (StateDecl& st : spec.states) {
                if (st.name != start_name) continue;
                if (st.kind != StateKind::Plain)
                    error(start_line, start_column,
                          "start state " + start_name +
                              " must carry no accept/reject/indeterminacy marker");
                else
                    st.kind = StateKind::Start;
            }
            spec.start = start_name;
        }

        std::set<std::string> tape(spec.tape_alphabet.begin(), spec.tape_alphabet.end());
        if (spec.tape_alphabet.empty())
            error(tape_line, 0, "tape alphabet must not be empty");
        if (!spec.blank.empty() && !tape.count(spec.blank))
            error(blank_line, 0, "blank symbol must be in the tape alphabet: " + spec.blank);
        for (const std::string& s : spec.input_alphabet) {
            if (s == spec.blank)
                error(input_line, 0, "blank symbol must not be in the input alphabet");
            if (!tape.count(s))
                error(input_line, 0, "input symbol not in tape alphabet: " + s);
        }
        for (const Transition& t : spec.transitions) {
            if (!state_names.count(t.from))
                error(0, 0, "transition references undeclared state: " + t.from);
            if (!state_names.count(t.to))
                error(0, 0, "transition references undeclared state: " + t.to);
            if (!tape.count(t.read))
                error(0, 0, "transition references undeclared symbol: " + t.read);
            if (!tape.count(t.write))
                error(0, 0, "transition references undeclared symbol: " + t.write);
        }
    }
};

void json_escape_into(std::string& out, std::string_view s) {
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
}

std::string sig12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

ParseResult parse(std::string_view text) {
    Parser p;
    int line = 1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        p.parse_line(raw, line);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
        ++line;
    }
    p.finish();

    ParseResult result;
    result.diagnostics = std::move(p.diags);
    std::sort(result.diagnostics.begin(), result.diagnostics.end(),
              [](const Diagnostic& a, const Diagnostic& b) {
                  return std::tie(a.line, a.column, a.message) <
                         std::tie(b.line, b.column, b.message);
              });
    if (result.diagnostics.empty()) {
        try {
            result.spec = canonicalized(std::move(p.spec));
        } catch (const std::invalid_argument& ex) {
            result.diagnostics.push_back({0, 0, ex.what()});
        }
    }
    return result;
}

std::string serialize(const MachineSpec& spec) {
    MachineSpec canonical = canonicalized(spec);
    std::string out;
    out += "kind: " + to_string(canonical.kind) + "\n";
    out += "tnorm: " + to_string(canonical.tnorm) + "\n";
    out += "blank: " + canonical.blank + "\n";
    out += "states:";
    for (const StateDecl& st : canonical.states) {
        out += ' ';
        out += st.name;
        switch (st.kind) {
            case StateKind::Accept: out += ":accept"; break;
            case StateKind::Reject: out += ":reject"; break;
            case StateKind::Indeterminacy: out += ":indet"; break;
            default: break;
        }
        if (!st.group.empty()) {
            out += '@';
            out += st.group;
        }
    }
    out += '\n';
    out += "start: " + canonical.start + "\n";
    out += "input_alphabet:";
    for (const std::string& s : canonical.input_alphabet) {
        out += ' ';
        out += s;
    }
    out += '\n';
    out += "tape_alphabet:";
    for (const std::string& s : canonical.tape_alphabet) {
        out += ' ';
        out += s;
    }
    out += '\n';
    for (const Transition& t : canonical.transitions) {
        out += "trans: " + t.from + ' ' + t.read + " -> " + t.to + ' ' + t.write + ' ';
        out += to_char(t.move);
        out += " @ " + format_degree(t.degree) + "\n";
    }
    return out;
}

std::string report_emit(const RunReport& report, ReportFormat format) {
    if (format == ReportFormat::Text) {
        std::string out = "e=" + sig12(report.accept_degree.value());
        out += " e'=" + sig12(report.reject_degree.value());
        out += " e''=" + sig12(report.indeterminacy_degree.value());
        out += " [" + to_string(report.status) + "]";
        return out;
    }
    std::string out = "{\"accept_degree\":" + sig12(report.accept_degree.value());
    out += ",\"reject_degree\":" + sig12(report.reject_degree.value());
    out += ",\"indeterminacy_degree\":" + sig12(report.indeterminacy_degree.value());
    out += ",\"status\":\"" + to_string(report.status) + "\"";
    out += ",\"levels_explored\":" + std::to_string(report.levels_explored);
    out += ",\"configurations_expanded\":" + std::to_string(report.configurations_expanded);
    out += ",\"bound_events\":[";
    for (std::size_t i = 0; i < report.bound_events.size(); ++i) {
        const BoundEvent& ev = report.bound_events[i];
        if (i) out += ',';
        out += "{\"side\":\"" + to_string(ev.side) + "\"";
        out += ",\"level\":" + std::to_string(ev.level);
        out += ",\"bound\":";
        out += ev.bound ? std::to_string(*ev.bound) : std::string("\"unavailable\"");
        out += '}';
    }
    out += "],\"machine_kind\":\"" + to_string(report.machine_kind) + "\"";
    out += ",\"tnorm\":\"" + to_string(report.tnorm) + "\"";
    out += ",\"input\":\"";
    json_escape_into(out, report.input);
    out += "\"}";
    return out;
}

}  // namespace ftm
