#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "sympow/error.hpp"
#include "sympow/repro.hpp"
#include "sympow/scenario.hpp"

namespace {

struct Options {
    std::string scenario_path;
    std::string json_path;
    std::uint32_t guard_degree = 0;
    double guard_seconds = 0.0;
};

void add_common(CLI::App* cmd, Options& opt)
{
    cmd->add_option("scenario", opt.scenario_path, "scenario file to run")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--json", opt.json_path, "write the JSON report to this path");
    cmd->add_option("--guard-degree", opt.guard_degree,
                    "override the total-degree guard from the scenario");
    cmd->add_option("--guard-seconds", opt.guard_seconds,
                    "override the soft time budget from the scenario");
}

int write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return 1;
    }
    return 0;
}

int run_task(const std::string& command, sympow::TaskKind expected, const Options& opt,
             const CLI::App* cmd)
{
    std::ifstream in(opt.scenario_path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    if (!in) {
        std::cerr << "error: cannot read " << opt.scenario_path << "\n";
        return 1;
    }

    sympow::Scenario s = sympow::parse_scenario(buf.str());
    if (s.task != expected) {
        std::cerr << "error: scenario declares task '" << sympow::task_kind_str(s.task)
                  << "' but was invoked as '" << command << "'\n";
        return 1;
    }
    if (cmd->count("--guard-degree") > 0)
        s.guard.max_degree = opt.guard_degree;
    if (cmd->count("--guard-seconds") > 0)
        s.guard.soft_seconds = opt.guard_seconds;

    sympow::ScenarioOutcome outcome = sympow::run_scenario(s);
    std::cout << outcome.table;
    if (!opt.json_path.empty() && write_file(opt.json_path, outcome.json) != 0)
        return 1;
    return outcome.exit_code;
}

int run_repro_cmd(const std::string& id, const std::string& json_path)
{
    std::vector<sympow::ReproResult> results =
        id == "all" ? sympow::run_repro_all()
                    : std::vector<sympow::ReproResult>{sympow::run_repro(id)};
    std::cout << sympow::repro_table(results);
    if (!json_path.empty() && write_file(json_path, sympow::repro_json(results)) != 0)
        return 1;
    for (const sympow::ReproResult& r : results)
        if (!r.pass)
            return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact comparison of symbolic and ordinary powers of polynomial ideals"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* profile = app.add_subcommand("profile", "homological profile of a quotient ring");
    CLI::App* resolve = app.add_subcommand("resolve", "minimal free resolution and Betti table");
    CLI::App* compare = app.add_subcommand("compare", "I^n versus I^(n) at one exponent");
    CLI::App* scan = app.add_subcommand("scan", "compare all exponents up to n_max");
    CLI::App* classify = app.add_subcommand("classify", "four-variable graph classifier");
    CLI::App* cremona = app.add_subcommand("cremona", "inverse map pairs and their base ideals");
    cremona->require_subcommand(1);
    CLI::App* cverify = cremona->add_subcommand("verify", "check that two maps invert each other");
    CLI::App* cprobe = cremona->add_subcommand("probe", "drive the predicted rigidity failure");
    for (CLI::App* cmd : {profile, resolve, compare, scan, classify, cverify, cprobe})
        add_common(cmd, opt);

    CLI::App* repro = app.add_subcommand("repro", "built-in reproduction suite");
    std::string repro_id;
    std::string repro_json_path;
    repro->add_option("id", repro_id, "case id, or 'all'")->required();
    repro->add_option("--json", repro_json_path, "write the JSON report to this path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (repro->parsed())
            return run_repro_cmd(repro_id, repro_json_path);
        if (profile->parsed())
            return run_task("profile", sympow::TaskKind::Profile, opt, profile);
        if (resolve->parsed())
            return run_task("resolve", sympow::TaskKind::Resolve, opt, resolve);
        if (compare->parsed())
            return run_task("compare", sympow::TaskKind::Compare, opt, compare);
        if (scan->parsed())
            return run_task("scan", sympow::TaskKind::Scan, opt, scan);
        if (classify->parsed())
            return run_task("classify", sympow::TaskKind::Classify, opt, classify);
        if (cverify->parsed())
            return run_task("cremona verify", sympow::TaskKind::CremonaVerify, opt, cverify);
        if (cprobe->parsed())
            return run_task("cremona probe", sympow::TaskKind::CremonaProbe, opt, cprobe);
    } catch (const sympow::GuardAbort& e) {
        std::cerr << "aborted: " << e.what() << "\n";
        return 2;
    } catch (const sympow::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
