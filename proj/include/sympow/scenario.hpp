#pragma once

#include <optional>
#include <string>

#include "sympow/cremona.hpp"

namespace sympow {

// The seven tasks a scenario file can request. The cremona pair maps to the
// nested `cremona verify` / `cremona probe` command-line forms.
enum class TaskKind {
    Profile,
    Resolve,
    Compare,
    Scan,
    Classify,
    CremonaVerify,
    CremonaProbe,
};

std::string task_kind_str(TaskKind t);
std::optional<TaskKind> task_kind_from_str(const std::string& s);

// One parsed scenario file: a ring, the objects the task consumes, and the
// resource guards. Fields irrelevant to the task stay unset; the parser
// rejects files that set them anyway.
struct Scenario {
    Ring ring;
    std::optional<Ideal> ideal;
    std::optional<CremonaMap> map_f;
    std::optional<CremonaMap> map_g;
    TaskKind task = TaskKind::Profile;
    int n = 0;           // compare
    int n_max = 0;       // scan
    int check_up_to = 0; // cremona-probe
    std::optional<SymbolicStrategy> strategy;
    GuardLimits guard;
};

// Flat key-value grammar, one `key = value` per line, '#' comments, blank
// lines ignored. Keys: ring, ideal, task, n, n_max, check_up_to, strategy,
// justification, f, map_f, map_g, guard_degree, guard_seconds. `ring` must
// precede every polynomial-valued key. Grammar violations raise ParseError
// with the line and column; semantic ones (missing or extraneous keys for
// the declared task) raise DomainError.
Scenario parse_scenario(const std::string& text);

// Outcome of executing a scenario: a versioned JSON document, a plain-text
// table for the console, and the process exit code (0 done, 2 when a
// resource guard cut the computation short; input errors never reach this
// struct, they throw before execution starts).
struct ScenarioOutcome {
    int exit_code = 0;
    std::string json;
    std::string table;
};

ScenarioOutcome run_scenario(const Scenario& s);

} // namespace sympow
