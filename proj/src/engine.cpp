#include "ftm/engine.hpp"

#include <cassert>
#include <map>
#include <stdexcept>

namespace ftm {

std::string to_string(RunStatus status) {
    switch (status) {
        case RunStatus::Complete: return "complete";
        case RunStatus::BoundApplied: return "bound-applied";
        case RunStatus::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

std::string to_string(SearchSide side) {
    return side == SearchSide::Accept ? "accept" : "reject";
}

std::optional<std::uint64_t> level_bound(const DegreeAlgebra& alg, Degree d,
                                         std::span<const Degree> other_level_degrees,
                                         std::optional<Degree> k, std::uint64_t cap) {
    if (other_level_degrees.empty()) return 0;
    if (!k) return std::nullopt;
    std::uint64_t t = 0;
    for (Degree d_prime : other_level_degrees) {
        auto steps = alg.min_power_steps(d_prime, *k, d, cap);
        if (!steps) return std::nullopt;
        t = std::max(t, *steps);
    }
    return t;
}

std::vector<std::string> tokenize_input(const MachineSpec& spec, std::string_view text) {
    std::vector<std::string> out;
    if (text.empty()) return out;
    if (text.find_first_of(" \t") != std::string_view::npos) {
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
            std::size_t j = i;
            while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
            if (j > i) out.emplace_back(text.substr(i, j - i));
            i = j;
        }
        return out;
    }
    if (spec.has_input_symbol(text)) {
        out.emplace_back(text);
        return out;
    }
    for (char c : text) out.emplace_back(1, c);
    return out;
}

namespace {

struct TreeNode {
    Configuration cfg;
    Degree degree;
    std::int64_t parent;
};

struct SideState {
    bool live = false;
    bool closed = false;
    bool counting = false;
    std::uint64_t close_at = 0;
    bool saw_leaf = false;       // scratch, per level
    Degree min_leaf;             // scratch, per level
};

// Configuration graph accumulated by the search: every materialized ID is a
// node; the full successor list of every expanded ID is its edge list.
struct ExploredGraph {
    std::map<Configuration, int> id_of;
    std::vector<char> expanded;
    std::vector<char> indet;
    std::vector<std::vector<std::pair<int, Degree>>> out;

    int ensure(const MachineIndex& idx, const Configuration& cfg) {
        auto [it, inserted] = id_of.try_emplace(cfg, static_cast<int>(out.size()));
        if (inserted) {
            expanded.push_back(0);
            indet.push_back(idx.kind_of(cfg.state) == StateKind::Indeterminacy ? 1 : 0);
            out.emplace_back();
        }
        return it->second;
    }
};

struct ChildRecord {
    Configuration cfg;
    Degree degree;
    StateKind kind;
    bool pruned;
};

struct Expansion {
    std::vector<std::pair<Configuration, Degree>> succ;
    std::vector<ChildRecord> children;
};

void expand_one(const MachineIndex& idx, const std::vector<TreeNode>& arena,
                std::int64_t node_id, bool cycle_pruning, Expansion& out) {
    const DegreeAlgebra alg = idx.spec().algebra();
    const TreeNode& node = arena[node_id];
    out.succ = successors(idx, node.cfg);
    out.children.reserve(out.succ.size());
    for (const auto& [cfg, w] : out.succ) {
        const Degree child_degree = alg.tnorm(node.degree, w);
        assert(child_degree <= node.degree);
        const StateKind kind = idx.kind_of(cfg.state);
        bool pruned = false;
        if (cycle_pruning && kind != StateKind::Accept && kind != StateKind::Reject) {
            for (std::int64_t p = node_id; p >= 0; p = arena[p].parent) {
                if (arena[p].degree == child_degree && arena[p].cfg == cfg) {
                    pruned = true;
                    break;
                }
                // degrees only decrease along a path; once past the child's
                // degree no ancestor can match it
                if (arena[p].degree > child_degree) break;
            }
        }
        out.children.push_back({cfg, child_degree, kind, pruned});
    }
}

Degree grouped_degree(const MachineSpec& spec, const DegreeAlgebra& alg,
                      const std::map<Configuration, Degree>& per_id) {
    std::map<std::string, Degree> group_max;
    for (const auto& [cfg, d] : per_id) {
        const std::string& group = spec.states[cfg.state].group;
        auto [it, inserted] = group_max.try_emplace(group, d);
        if (!inserted && d > it->second) it->second = d;
    }
    Degree e = Degree::zero();
    for (const auto& [group, m] : group_max) e = alg.tconorm(e, m);
    return e;
}

// Least walk degree from the root to each node by synchronous relaxation.
// Labels above 1.0 mean unreached. A cycle that keeps lowering labels after
// node-count rounds drives everything it feeds to 0 under product or
// Lukasiewicz; under the minimum t-norm relaxation runs to its fixpoint.
Degree relax_indeterminacy(const ExploredGraph& g, const DegreeAlgebra& alg, int root,
                           bool parallel) {
    const int n = static_cast<int>(g.out.size());
    bool any_indet = false;
    for (int v = 0; v < n; ++v) any_indet = any_indet || g.indet[v];
    if (!any_indet) return Degree::zero();

    std::vector<std::vector<std::pair<int, Degree>>> in(n);
    for (int u = 0; u < n; ++u)
        for (const auto& [v, w] : g.out[u]) in[v].emplace_back(u, w);

    constexpr double kUnreached = 2.0;
    std::vector<double> label(n, kUnreached), next(n);
    label[root] = 1.0;

    auto round = [&]() {
        bool changed = false;
#ifdef FTM_HAVE_OPENMP
#pragma omp parallel for schedule(static) if (parallel && n > 256)
#endif
        for (int v = 0; v < n; ++v) {
            double best = label[v];
            for (const auto& [u, w] : in[v]) {
                if (label[u] > 1.0) continue;
                const double cand = alg.tnorm(Degree(label[u]), w).value();
                if (cand < best) best = cand;
            }
            next[v] = best;
        }
        for (int v = 0; v < n; ++v)
            if (next[v] != label[v]) changed = true;
        label.swap(next);
        return changed;
    };

    bool changed = true;
    for (int r = 0; changed && r < n; ++r) changed = round();
    if (changed) {
        if (alg.kind() == TNormKind::Goedel) {
            // finitely many label values under min-composition; terminates
            while (changed) changed = round();
        } else {
            // A pumping cycle improves at least one of its nodes every
            // further round, so one probe round finds a node on every such
            // cycle; the forward closure covers the rest.
            std::vector<char> affected(n, 0);
            std::vector<double> before = label;
            round();
            for (int v = 0; v < n; ++v)
                if (label[v] != before[v]) affected[v] = 1;
            std::vector<int> stack;
            for (int v = 0; v < n; ++v)
                if (affected[v]) stack.push_back(v);
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (const auto& [v, w] : g.out[u]) {
                    (void)w;
                    if (!affected[v]) {
                        affected[v] = 1;
                        stack.push_back(v);
                    }
                }
            }
            for (int v = 0; v < n; ++v)
                if (affected[v] && label[v] <= 1.0) label[v] = 0.0;
        }
    }

    double best = kUnreached;
    for (int v = 0; v < n; ++v)
        if (g.indet[v] && label[v] < best) best = label[v];
    return best <= 1.0 ? Degree(best) : Degree::zero();
}

std::string join_tokens(std::span<const std::string> input) {
    std::string s;
    for (std::size_t i = 0; i < input.size(); ++i) {
        if (i) s += ' ';
        s += input[i];
    }
    return s;
}

}  // namespace

RunReport run(const MachineSpec& spec, std::span<const std::string> input,
              const SearchBudget& budget, const RunOptions& options) {
    if (budget.max_levels < 1 || budget.max_configurations < 1)
        throw std::invalid_argument("search budget fields must be at least 1");
    {
        const std::vector<Violation> violations = validate(spec);
        if (!violations.empty())
            throw std::invalid_argument("machine fails validation: " + violations.front().message);
    }

    const MachineIndex idx(spec);
    const DegreeAlgebra alg = spec.algebra();

    RunReport rep;
    rep.machine_kind = spec.kind;
    rep.tnorm = spec.tnorm;
    rep.input = join_tokens(input);

    std::vector<TreeNode> arena;
    arena.push_back({initial_configuration(idx, input), Degree::one(), -1});
    std::vector<std::int64_t> frontier{0};

    ExploredGraph graph;
    const int root_graph_id = graph.ensure(idx, arena[0].cfg);

    SideState accept_side, reject_side;
    for (const StateDecl& st : spec.states) {
        if (st.kind == StateKind::Accept) accept_side.live = true;
        if (st.kind == StateKind::Reject) reject_side.live = true;
    }
    accept_side.closed = !accept_side.live;
    reject_side.closed = !reject_side.live;

    std::map<Configuration, Degree> accept_agg, reject_agg;

    std::uint64_t level = 0;
    RunStatus status;
    std::vector<Expansion> expansions;
    std::vector<std::int64_t> next_frontier;
    for (;;) {
        if (frontier.empty()) {
            status = RunStatus::Complete;
            break;
        }
        if ((accept_side.live || reject_side.live) && accept_side.closed && reject_side.closed) {
            status = RunStatus::BoundApplied;
            break;
        }
        if (level + 1 > budget.max_levels ||
            rep.configurations_expanded + frontier.size() > budget.max_configurations) {
            status = RunStatus::BudgetExhausted;
            break;
        }

        expansions.assign(frontier.size(), {});
        const std::int64_t frontier_size = static_cast<std::int64_t>(frontier.size());
#ifdef FTM_HAVE_OPENMP
#pragma omp parallel for schedule(static) if (options.parallel && frontier_size > 64)
#endif
        for (std::int64_t i = 0; i < frontier_size; ++i)
            expand_one(idx, arena, frontier[i], options.cycle_pruning, expansions[i]);

        accept_side.saw_leaf = reject_side.saw_leaf = false;
        next_frontier.clear();
        for (std::int64_t i = 0; i < frontier_size; ++i) {
            const std::int64_t parent_id = frontier[i];
            const int parent_graph = graph.ensure(idx, arena[parent_id].cfg);
            if (!graph.expanded[parent_graph]) {
                graph.expanded[parent_graph] = 1;
                for (const auto& [cfg, w] : expansions[i].succ) {
                    const int child_id = graph.ensure(idx, cfg);  // may grow graph.out
                    graph.out[parent_graph].emplace_back(child_id, w);
                }
            }
            for (ChildRecord& child : expansions[i].children) {
                if (child.kind == StateKind::Accept || child.kind == StateKind::Reject) {
                    SideState& side =
                        child.kind == StateKind::Accept ? accept_side : reject_side;
                    auto& agg = child.kind == StateKind::Accept ? accept_agg : reject_agg;
                    if (!side.closed) {
                        if (!side.saw_leaf || child.degree < side.min_leaf)
                            side.min_leaf = child.degree;
                        side.saw_leaf = true;
                        auto [it, inserted] = agg.try_emplace(child.cfg, child.degree);
                        if (!inserted) it->second = alg.tconorm(it->second, child.degree);
                    }
                    continue;
                }
                if (child.pruned) continue;
                arena.push_back({std::move(child.cfg), child.degree, parent_id});
                next_frontier.push_back(static_cast<std::int64_t>(arena.size()) - 1);
            }
            ++rep.configurations_expanded;
        }

        const std::uint64_t child_level = level + 1;
        rep.levels_explored = child_level;

        for (SideState* side : {&accept_side, &reject_side}) {
            if (!side->live || side->closed) continue;
            if (side->saw_leaf) {
                std::vector<Degree> others;
                others.reserve(next_frontier.size());
                for (std::int64_t n : next_frontier) others.push_back(arena[n].degree);
                const auto bound = level_bound(alg, side->min_leaf, others,
                                               idx.max_plain_degree(), budget.max_levels);
                rep.bound_events.push_back(
                    {side == &accept_side ? SearchSide::Accept : SearchSide::Reject,
                     child_level, bound});
                if (bound) {
                    side->counting = true;
                    side->close_at = child_level + *bound;
                    if (child_level >= side->close_at) side->closed = true;
                } else {
                    side->counting = false;  // only the budget can end this side now
                }
            } else if (side->counting && child_level >= side->close_at) {
                side->closed = true;
            }
        }

        frontier.swap(next_frontier);
        ++level;
    }

    rep.status = status;
    rep.accept_degree = grouped_degree(spec, alg, accept_agg);
    rep.reject_degree = grouped_degree(spec, alg, reject_agg);
    rep.indeterminacy_degree = relax_indeterminacy(graph, alg, root_graph_id, options.parallel);
    return rep;
}

Degree indeterminacy_degree(const MachineSpec& spec, std::span<const std::string> input,
                            const SearchBudget& budget) {
    return run(spec, input, budget).indeterminacy_degree;
}

}  // namespace ftm
