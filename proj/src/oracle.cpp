#include "ftm/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace ftm {

namespace {

// Token-level tape state, kept separate from the engine's interned form on
// purpose.
struct Tape {
    std::vector<std::string> left;   // leftmost first, no leading blanks
    std::vector<std::string> right;  // head first, no trailing blanks
    std::string state;
};

void trim(const MachineSpec& spec, Tape& t) {
    while (!t.right.empty() && t.right.back() == spec.blank) t.right.pop_back();
    std::size_t lead = 0;
    while (lead < t.left.size() && t.left[lead] == spec.blank) ++lead;
    if (lead) t.left.erase(t.left.begin(), t.left.begin() + lead);
}

std::string render_id(const Tape& t) {
    std::string s;
    for (std::size_t i = 0; i < t.left.size(); ++i) {
        if (i) s += ' ';
        s += t.left[i];
    }
    s += '[';
    s += t.state;
    s += ']';
    for (std::size_t i = 0; i < t.right.size(); ++i) {
        if (i) s += ' ';
        s += t.right[i];
    }
    return s;
}

StateKind kind_of(const MachineSpec& spec, const std::string& state) {
    const StateDecl* st = spec.find_state(state);
    if (!st) throw std::logic_error("oracle met an undeclared state: " + state);
    return st->kind;
}

Tape step(const MachineSpec& spec, const Tape& t, const Transition& tr) {
    Tape next = t;
    next.state = tr.to;
    if (next.right.empty())
        next.right.push_back(tr.write);
    else
        next.right.front() = tr.write;
    switch (tr.move) {
        case MoveDir::Stay:
            break;
        case MoveDir::Right:
            next.left.push_back(next.right.front());
            next.right.erase(next.right.begin());
            break;
        case MoveDir::Left:
            next.right.insert(next.right.begin(),
                              next.left.empty() ? spec.blank : next.left.back());
            if (!next.left.empty()) next.left.pop_back();
            break;
    }
    trim(spec, next);
    return next;
}

struct Enumerator {
    const MachineSpec& spec;
    std::uint64_t depth;
    std::uint64_t max_paths;
    std::vector<PathRecord> paths;
    std::vector<std::string> ids;
    std::vector<Degree> degrees;

    void emit() {
        if (paths.size() >= max_paths)
            throw std::length_error("oracle path count exceeds the limit of " +
                                    std::to_string(max_paths) + " paths");
        PathRecord rec;
        rec.ids = ids;
        rec.degrees = degrees;
        rec.composed = spec.algebra().fold_tnorm(degrees);
        paths.push_back(std::move(rec));
    }

    void visit(const Tape& t, std::uint64_t remaining) {
        ids.push_back(render_id(t));
        const StateKind kind = kind_of(spec, t.state);
        const bool final_state = kind == StateKind::Accept || kind == StateKind::Reject;
        bool extended = false;
        if (!final_state && remaining > 0) {
            const std::string& head = t.right.empty() ? spec.blank : t.right.front();
            for (const Transition& tr : spec.transitions) {
                if (tr.from != t.state || tr.read != head) continue;
                extended = true;
                degrees.push_back(tr.degree);
                visit(step(spec, t, tr), remaining - 1);
                degrees.pop_back();
            }
        }
        if (!extended) emit();
        ids.pop_back();
    }
};

}  // namespace

std::vector<PathRecord> enumerate(const MachineSpec& spec, std::span<const std::string> input,
                                  std::uint64_t depth, std::uint64_t max_paths) {
    {
        const std::vector<Violation> violations = validate(spec);
        if (!violations.empty())
            throw std::invalid_argument("machine fails validation: " + violations.front().message);
    }
    Tape root;
    root.state = spec.start;
    for (const std::string& tok : input) {
        if (!spec.has_input_symbol(tok))
            throw std::invalid_argument("input symbol outside the input alphabet: " + tok);
        root.right.push_back(tok);
    }
    trim(spec, root);

    Enumerator e{spec, depth, max_paths, {}, {}, {}};
    e.visit(root, depth);
    return e.paths;
}

OracleDegrees oracle_degrees(const std::vector<PathRecord>& paths, const MachineSpec& spec) {
    const DegreeAlgebra alg = spec.algebra();
    OracleDegrees out;

    std::map<std::string, Degree> accept_by_id, reject_by_id;
    auto state_of_id = [](const std::string& id) {
        const std::size_t open = id.find('[');
        const std::size_t close = id.rfind(']');
        return id.substr(open + 1, close - open - 1);
    };
    for (const PathRecord& p : paths) {
        // indeterminacy visits can occur anywhere along a path
        Degree prefix = Degree::one();
        for (std::size_t i = 0; i < p.ids.size(); ++i) {
            if (i > 0) prefix = alg.tnorm(prefix, p.degrees[i - 1]);
            const StateDecl* st = spec.find_state(state_of_id(p.ids[i]));
            if (st && st->kind == StateKind::Indeterminacy) {
                auto [it, inserted] = out.indeterminacy_candidates.try_emplace(p.ids[i], prefix);
                if (!inserted && prefix < it->second) it->second = prefix;
            }
        }
        const StateDecl* terminal = spec.find_state(state_of_id(p.ids.back()));
        if (!terminal) continue;
        if (terminal->kind == StateKind::Accept || terminal->kind == StateKind::Reject) {
            auto& by_id = terminal->kind == StateKind::Accept ? accept_by_id : reject_by_id;
            auto [it, inserted] = by_id.try_emplace(p.ids.back(), p.composed);
            if (!inserted) it->second = alg.tconorm(it->second, p.composed);
        }
    }

    for (const auto& [id, d] : accept_by_id)
        if (d > out.accept_degree) out.accept_degree = d;
    for (const auto& [id, d] : reject_by_id)
        if (d > out.reject_degree) out.reject_degree = d;
    return out;
}

}  // namespace ftm
