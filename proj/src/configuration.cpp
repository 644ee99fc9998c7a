#include "ftm/configuration.hpp"

#include <algorithm>
#include <stdexcept>

namespace ftm {

MachineIndex::MachineIndex(const MachineSpec& spec) : spec_(&spec) {
    blank_ = symbol_index(spec.blank);
    start_ = state_index(spec.start);
    if (blank_ < 0 || start_ < 0)
        throw std::invalid_argument("machine index over a structurally unsound machine");

    const int symbols = symbol_count();
    by_state_symbol_.resize(static_cast<std::size_t>(state_count()) * symbols);
    step_cache_.reserve(spec.transitions.size());
    move_cache_.reserve(spec.transitions.size());
    for (std::size_t i = 0; i < spec.transitions.size(); ++i) {
        const Transition& t = spec.transitions[i];
        const int from = state_index(t.from);
        const int read = symbol_index(t.read);
        const int to = state_index(t.to);
        const int write = symbol_index(t.write);
        if (from < 0 || read < 0 || to < 0 || write < 0)
            throw std::invalid_argument("transition references undeclared state or symbol");
        by_state_symbol_[static_cast<std::size_t>(from) * symbols + read].push_back(
            static_cast<std::int32_t>(i));
        step_cache_.emplace_back(to, write);
        move_cache_.push_back(t.move);
        const bool indet = spec.states[from].kind == StateKind::Indeterminacy ||
                           spec.states[to].kind == StateKind::Indeterminacy;
        if (!indet && (!max_plain_degree_ || t.degree > *max_plain_degree_))
            max_plain_degree_ = t.degree;
    }
}

int MachineIndex::state_index(std::string_view name) const {
    const auto& states = spec_->states;
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i].name == name) return static_cast<int>(i);
    return -1;
}

int MachineIndex::symbol_index(std::string_view token) const {
    const auto& tape = spec_->tape_alphabet;
    for (std::size_t i = 0; i < tape.size(); ++i)
        if (tape[i] == token) return static_cast<int>(i);
    return -1;
}

std::span<const std::int32_t> MachineIndex::matching(int state, int symbol) const {
    return by_state_symbol_[static_cast<std::size_t>(state) * symbol_count() + symbol];
}

Configuration initial_configuration(const MachineIndex& index,
                                    std::span<const std::string> input) {
    Configuration cfg;
    cfg.state = index.start_state();
    cfg.right.reserve(input.size());
    for (const std::string& tok : input) {
        const int sym = index.symbol_index(tok);
        if (sym < 0 || !index.spec().has_input_symbol(tok))
            throw std::invalid_argument("input symbol outside the input alphabet: " + tok);
        cfg.right.push_back(sym);
    }
    while (!cfg.right.empty() && cfg.right.back() == index.blank()) cfg.right.pop_back();
    return cfg;
}

int head_symbol(const MachineIndex& index, const Configuration& cfg) {
    return cfg.right.empty() ? index.blank() : cfg.right.front();
}

namespace {

void canonicalize_tape(const MachineIndex& index, Configuration& cfg) {
    const int blank = index.blank();
    while (!cfg.right.empty() && cfg.right.back() == blank) cfg.right.pop_back();
    std::size_t lead = 0;
    while (lead < cfg.left.size() && cfg.left[lead] == blank) ++lead;
    if (lead > 0) cfg.left.erase(cfg.left.begin(), cfg.left.begin() + lead);
}

}  // namespace

Configuration apply_transition(const MachineIndex& index, const Configuration& cfg,
                               std::int32_t ti) {
    Configuration next = cfg;
    const auto [to, write] = index.step_cache_[ti];
    next.state = to;
    if (next.right.empty())
        next.right.push_back(write);
    else
        next.right.front() = write;
    switch (index.move_cache_[ti]) {
        case MoveDir::Stay:
            break;
        case MoveDir::Right:
            next.left.push_back(next.right.front());
            next.right.erase(next.right.begin());
            break;
        case MoveDir::Left:
            next.right.insert(next.right.begin(),
                              next.left.empty() ? index.blank() : next.left.back());
            if (!next.left.empty()) next.left.pop_back();
            break;
    }
    canonicalize_tape(index, next);
    return next;
}

std::vector<std::pair<Configuration, Degree>> successors(const MachineIndex& index,
                                                         const Configuration& cfg) {
    std::vector<std::pair<Configuration, Degree>> out;
    const int sym = head_symbol(index, cfg);
    for (std::int32_t ti : index.matching(cfg.state, sym))
        out.emplace_back(apply_transition(index, cfg, ti), index.transition(ti).degree);
    return out;
}

std::string id_string(const MachineIndex& index, const Configuration& cfg) {
    std::string s;
    for (std::size_t i = 0; i < cfg.left.size(); ++i) {
        if (i) s += ' ';
        s += index.symbol_token(cfg.left[i]);
    }
    s += '[';
    s += index.state_name(cfg.state);
    s += ']';
    for (std::size_t i = 0; i < cfg.right.size(); ++i) {
        if (i) s += ' ';
        s += index.symbol_token(cfg.right[i]);
    }
    return s;
}

}  // namespace ftm
