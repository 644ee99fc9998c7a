#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "ftm/engine.hpp"
#include "ftm/format.hpp"
#include "ftm/oracle.hpp"
#include "support.hpp"

using namespace ftm;
using namespace ftm::testing;

namespace {
constexpr double kTol = 1e-12;

RunReport run_str(const MachineSpec& spec, std::string_view input,
                  const SearchBudget& budget = {}, const RunOptions& options = {}) {
    const std::vector<std::string> toks = tokenize_input(spec, input);
    return run(spec, toks, budget, options);
}
}  // namespace

TEST_CASE("successor step semantics") {
    MachineSpec spec = basic_spec(MachineKind::Gftm, TNormKind::Product);
    spec.states = {{"q", StateKind::Start, ""}, {"p", StateKind::Plain, ""}};
    spec.start = "q";
    spec.transitions = {tr("q", "0", "p", "1", MoveDir::Right, 0.7)};
    spec = canonicalized(std::move(spec));
    const MachineIndex idx(spec);

    const std::vector<std::string> input{"0"};
    const Configuration root = initial_configuration(idx, input);
    auto succ = successors(idx, root);
    REQUIRE(succ.size() == 1);
    CHECK(succ[0].second.value() == 0.7);
    CHECK(id_string(idx, succ[0].first) == "1[p]");

    // moving left off the tape edge extends with a blank
    spec.transitions = {tr("q", "0", "p", "1", MoveDir::Left, 0.7)};
    spec = canonicalized(std::move(spec));
    const MachineIndex idx2(spec);
    auto succ2 = successors(idx2, initial_configuration(idx2, input));
    REQUIRE(succ2.size() == 1);
    CHECK(id_string(idx2, succ2[0].first) == "[p]_ 1");

    // no matching transition: a halting dead end
    const std::vector<std::string> one{"1"};
    CHECK(successors(idx2, initial_configuration(idx2, one)).empty());
}

TEST_CASE("successors are ordered by transition tuple") {
    MachineSpec spec = basic_spec(MachineKind::Gftm, TNormKind::Product);
    spec.states = {{"q", StateKind::Start, ""}, {"a", StateKind::Plain, ""},
                   {"b", StateKind::Plain, ""}};
    spec.start = "q";
    spec.transitions = {tr("q", "0", "b", "0", MoveDir::Stay, 0.3),
                        tr("q", "0", "a", "1", MoveDir::Stay, 0.6),
                        tr("q", "0", "a", "0", MoveDir::Stay, 0.5)};
    spec = canonicalized(std::move(spec));
    const MachineIndex idx(spec);
    const std::vector<std::string> input{"0"};
    auto succ = successors(idx, initial_configuration(idx, input));
    REQUIRE(succ.size() == 3);
    CHECK(succ[0].second.value() == 0.5);  // (q,0,a,0,S)
    CHECK(succ[1].second.value() == 0.6);  // (q,0,a,1,S)
    CHECK(succ[2].second.value() == 0.3);  // (q,0,b,0,S)
}

TEST_CASE("accepting configurations are leaves even when they have successors") {
    MachineSpec spec = basic_spec(MachineKind::Gftm, TNormKind::Product);
    spec.states = {{"qs", StateKind::Start, ""}, {"qa", StateKind::Accept, ""}};
    spec.start = "qs";
    spec.transitions = {tr("qs", "0", "qa", "0", MoveDir::Stay, 0.5),
                        tr("qa", "0", "qa", "0", MoveDir::Stay, 0.9)};
    spec = canonicalized(std::move(spec));

    const MachineIndex idx(spec);
    Configuration accepting;
    accepting.state = idx.state_index("qa");
    accepting.right = {idx.symbol_index("0")};
    CHECK(successors(idx, accepting).size() == 1);

    const RunReport rep = run_str(spec, "0");
    CHECK(rep.status == RunStatus::Complete);
    CHECK(rep.accept_degree.value() == 0.5);
    CHECK(rep.configurations_expanded == 1);  // only the root was expanded
}

TEST_CASE("chain machine") {
    const MachineSpec spec = chain_machine();
    const RunReport rep = run_str(spec, "0");
    CHECK(rep.accept_degree.value() == doctest::Approx(0.14).epsilon(kTol));
    CHECK(rep.reject_degree.value() == 0.0);
    CHECK(rep.indeterminacy_degree.value() == 0.0);
    CHECK(rep.status == RunStatus::Complete);

    const auto paths = enumerate(spec, tokenize_input(spec, "0"), 8);
    const auto od = oracle_degrees(paths, spec);
    CHECK(rep.accept_degree.value() ==
          doctest::Approx(od.accept_degree.value()).epsilon(kTol));
}

TEST_CASE("reject-only machine") {
    MachineSpec spec = basic_spec(MachineKind::Gftm, TNormKind::Product);
    spec.states = {{"qs", StateKind::Start, ""}, {"qr", StateKind::Reject, ""}};
    spec.start = "qs";
    spec.transitions = {tr("qs", "0", "qr", "0", MoveDir::Right, 0.6),
                        tr("qs", "1", "qr", "1", MoveDir::Right, 0.6)};
    spec = canonicalized(std::move(spec));
    const RunReport rep = run_str(spec, "0");
    CHECK(rep.accept_degree.value() == 0.0);
    CHECK(rep.reject_degree.value() == 0.6);
    const auto od = oracle_degrees(enumerate(spec, tokenize_input(spec, "0"), 8), spec);
    CHECK(od.reject_degree.value() == 0.6);
    CHECK(od.accept_degree.value() == 0.0);
}

TEST_CASE("worked example machine") {
    const MachineSpec fig = figure_machine();
    REQUIRE(validate(fig).empty());

    const RunReport on_zero = run_str(fig, "0");
    CHECK(on_zero.accept_degree.value() == doctest::Approx(0.14).epsilon(1e-9));
    CHECK(on_zero.status == RunStatus::Complete);
    // the level bound uses the largest non-hub degree (0.7), not the hub's 1
    REQUIRE(on_zero.bound_events.size() == 1);
    CHECK(on_zero.bound_events[0].side == SearchSide::Accept);
    CHECK(on_zero.bound_events[0].level == 2);
    CHECK(on_zero.bound_events[0].bound == 6);
    CHECK(on_zero.indeterminacy_degree.value() == doctest::Approx(0.2).epsilon(kTol));

    const RunReport on_01 = run_str(fig, "01");
    CHECK(on_01.accept_degree.value() == 0.0);
    CHECK(on_01.indeterminacy_degree.value() == 0.0);  // 0.5-cycle feeds the hub
}

TEST_CASE("indeterminacy degree of the worked example is budget-stable") {
    const MachineSpec fig = figure_machine();
    SearchBudget small;
    small.max_levels = 40;
    const RunReport rep = run_str(fig, "01", small);
    CHECK(rep.status == RunStatus::BudgetExhausted);
    CHECK(rep.indeterminacy_degree.value() == 0.0);
}

TEST_CASE("level_bound") {
    const DegreeAlgebra product(TNormKind::Product);
    const DegreeAlgebra goedel(TNormKind::Goedel);
    const Degree others[] = {Degree(0.9)};
    CHECK(level_bound(product, Degree(0.5), others, Degree(0.8), 10'000) == 3);
    CHECK(level_bound(product, Degree(0.5), {}, Degree(0.8), 10'000) == 0);
    CHECK(!level_bound(goedel, Degree(0.5), others, Degree(0.8), 10'000).has_value());
    CHECK(!level_bound(product, Degree(0.5), others, std::nullopt, 10'000).has_value());
}

TEST_CASE("unavailable bound falls back to the budget") {
    MachineSpec spec = basic_spec(MachineKind::Gftm, TNormKind::Goedel);
    spec.states = {{"qs", StateKind::Start, ""}, {"q1", StateKind::Plain, ""},
                   {"qa", StateKind::Accept, ""}};
    spec.start = "qs";
    spec.transitions = {tr("qs", "0", "qa", "0", MoveDir::Right, 0.5),
                        tr("qs", "0", "q1", "0", MoveDir::Stay, 0.9),
                        tr("q1", "0", "q1", "1", MoveDir::Stay, 0.9),
                        tr("q1", "1", "q1", "0", MoveDir::Stay, 0.9)};
    spec = canonicalized(std::move(spec));
    const RunReport rep = run_str(spec, "0");
    CHECK(rep.accept_degree.value() == 0.5);
    REQUIRE(!rep.bound_events.empty());
    CHECK(!rep.bound_events[0].bound.has_value());
    // under the minimum t-norm every cycle eventually repeats a degree, so
    // pruning still drains the frontier
    CHECK(rep.status == RunStatus::Complete);
}

TEST_CASE("configuration expansion exhausts the budget") {
    MachineSpec spec = basic_spec(MachineKind::Gftm, TNormKind::Product);
    spec.states = {{"qs", StateKind::Start, ""}, {"qa", StateKind::Accept, ""}};
    spec.start = "qs";
    spec.transitions = {tr("qs", "0", "qs", "0", MoveDir::Right, 0.9),
                        tr("qs", "_", "qs", "0", MoveDir::Right, 0.9)};
    spec = canonicalized(std::move(spec));
    SearchBudget budget;
    budget.max_levels = 100;
    const RunReport rep = run_str(spec, "0", budget);
    CHECK(rep.status == RunStatus::BudgetExhausted);
    CHECK(rep.levels_explored == 100);
    CHECK(rep.accept_degree.value() == 0.0);
}

TEST_CASE("single acyclic path to an indeterminacy state") {
    MachineSpec spec = basic_spec(MachineKind::Eftm, TNormKind::Product);
    spec.states = {{"qs", StateKind::Start, ""}, {"q1", StateKind::Plain, ""},
                   {"qI", StateKind::Indeterminacy, ""}};
    spec.start = "qs";
    spec.transitions = {tr("qs", "0", "q1", "0", MoveDir::Right, 0.5),
                        tr("q1", "_", "qI", "_", MoveDir::Stay, 1.0)};
    spec = canonicalized(std::move(spec));
    const RunReport rep = run_str(spec, "0");
    CHECK(rep.indeterminacy_degree.value() == 0.5);
    CHECK(indeterminacy_degree(spec, tokenize_input(spec, "0")).value() == 0.5);
}

TEST_CASE("minimum-kind cycle stabilizes instead of pumping") {
    MachineSpec spec = basic_spec(MachineKind::Eftm, TNormKind::Goedel);
    spec.states = {{"qs", StateKind::Start, ""}, {"q1", StateKind::Plain, ""},
                   {"qI", StateKind::Indeterminacy, ""}};
    spec.start = "qs";
    spec.transitions = {tr("qs", "_", "q1", "_", MoveDir::Stay, 0.8),
                        tr("q1", "_", "q1", "_", MoveDir::Stay, 0.4),
                        tr("q1", "_", "qI", "_", MoveDir::Stay, 1.0)};
    spec = canonicalized(std::move(spec));
    const RunReport rep = run_str(spec, "");
    CHECK(rep.indeterminacy_degree.value() == 0.4);
}

TEST_CASE("deterministic machines never report bound-applied") {
    const RunReport chain = run_str(chain_machine(), "0");
    CHECK(chain.status == RunStatus::Complete);
    CHECK(chain.accept_degree.value() == doctest::Approx(0.2 * 0.7).epsilon(kTol));

    MachineSpec looper = basic_spec(MachineKind::Gftm, TNormKind::Product);
    looper.states = {{"qs", StateKind::Start, ""}, {"qa", StateKind::Accept, ""}};
    looper.start = "qs";
    looper.transitions = {tr("qs", "_", "qs", "_", MoveDir::Right, 0.5)};
    looper = canonicalized(std::move(looper));
    SearchBudget budget;
    budget.max_levels = 50;
    const RunReport rep = run_str(looper, "", budget);
    CHECK(rep.status == RunStatus::BudgetExhausted);
}

TEST_CASE("reports are byte-identical across runs") {
    for (std::string_view input : {"0", "01", "1"}) {
        RunReport a = run_str(figure_machine(), input);
        RunReport b = run_str(figure_machine(), input);
        CHECK(a == b);
        CHECK(report_emit(a, ReportFormat::Json) == report_emit(b, ReportFormat::Json));
    }
}

TEST_CASE("engine matches the oracle on random loop-free machines") {
    std::mt19937_64 rng(20260810);
    const TNormKind kinds[] = {TNormKind::Product, TNormKind::Goedel, TNormKind::Lukasiewicz};
    for (int i = 0; i < 40; ++i) {
        const MachineSpec spec = random_layered_machine(rng, kinds[i % 3]);
        const std::vector<std::string> input = random_input(rng);
        const RunReport rep = run(spec, input);
        CHECK(rep.status == RunStatus::Complete);
        const auto od = oracle_degrees(enumerate(spec, input, 8), spec);
        CHECK(rep.accept_degree.value() ==
              doctest::Approx(od.accept_degree.value()).epsilon(kTol));
        CHECK(rep.reject_degree.value() ==
              doctest::Approx(od.reject_degree.value()).epsilon(kTol));
        CHECK(rep.indeterminacy_degree.value() == 0.0);
    }
}

TEST_CASE("cycle pruning does not change loop-free results") {
    std::mt19937_64 rng(99);
    RunOptions no_pruning;
    no_pruning.cycle_pruning = false;
    for (int i = 0; i < 25; ++i) {
        const MachineSpec spec = random_layered_machine(rng, TNormKind::Product);
        const std::vector<std::string> input = random_input(rng);
        const RunReport with = run(spec, input);
        const RunReport without = run(spec, input, {}, no_pruning);
        CHECK(with == without);
    }
}

TEST_CASE("run rejects bad inputs up front") {
    const MachineSpec spec = chain_machine();
    const std::vector<std::string> bad{"2"};
    CHECK_THROWS_AS(run(spec, bad), std::invalid_argument);

    MachineSpec invalid = basic_spec(MachineKind::Eftm, TNormKind::Product);
    invalid.states = {{"qs", StateKind::Start, ""}, {"qI", StateKind::Indeterminacy, ""}};
    invalid.start = "qs";
    invalid.transitions = {tr("qs", "0", "qI", "0", MoveDir::Stay, 0.9)};
    invalid = canonicalized(std::move(invalid));
    const std::vector<std::string> input{"0"};
    CHECK_THROWS_AS(run(invalid, input), std::invalid_argument);
}

TEST_CASE("budget fields must be positive") {
    SearchBudget bad;
    bad.max_levels = 0;
    const std::vector<std::string> input{"0"};
    CHECK_THROWS_AS(run(chain_machine(), input, bad), std::invalid_argument);
}
