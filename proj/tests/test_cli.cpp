#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <sys/wait.h>

#include "sympow/repro.hpp"
#include "sympow/scenario.hpp"

using namespace sympow;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const char* kTriangleCompare = "# symbolic-vs-ordinary comparison\n"
                               "ring = QQ[x,y,z]\n"
                               "ideal = x*y, x*z, y*z\n"
                               "task = compare\n"
                               "n = 2\n"
                               "strategy = minimal-prime-intersection\n";

std::string parse_error_of(const char* text)
{
    try {
        parse_scenario(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

fs::path scratch_dir()
{
    fs::path dir = fs::temp_directory_path() / "sympow_cli_scratch";
    fs::create_directories(dir);
    return dir;
}

std::string write_scratch(const char* name, const std::string& content)
{
    fs::path p = scratch_dir() / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    REQUIRE(out.good());
    return p.string();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run_cli(const std::string& args)
{
    std::string out_path = (scratch_dir() / "stdout.txt").string();
    std::string err_path = (scratch_dir() / "stderr.txt").string();
    std::string cmd = std::string(SYMPOW_CLI_PATH) + " " + args + " > \"" + out_path + "\" 2> \""
                      + err_path + "\"";
    int rc = std::system(cmd.c_str());
    CliRun r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = read_file(out_path);
    return r;
}

} // namespace

TEST_CASE("scenario files parse to tasks")
{
    Scenario cmp = parse_scenario("# comment only\n"
                                  "\n"
                                  "ring = QQ[x,y,z]\n"
                                  "ideal = x*y, x*z, y*z   # trailing comment\n"
                                  "task = compare\n"
                                  "n = 2\n"
                                  "strategy = minimal-prime-intersection\n"
                                  "guard_degree = 40\n"
                                  "guard_seconds = 5.5\n");
    CHECK(cmp.task == TaskKind::Compare);
    CHECK(cmp.n == 2);
    CHECK(cmp.ideal.has_value());
    CHECK(cmp.ideal->gens().size() == 3);
    CHECK(cmp.guard.max_degree == 40);
    CHECK(cmp.guard.soft_seconds == 5.5);
    REQUIRE(cmp.strategy.has_value());
    CHECK(cmp.strategy->kind == StrategyKind::MinimalPrimeIntersection);
    CHECK(cmp.strategy->justification == Justification::UserOverride);

    Scenario scan = parse_scenario("ring = QQ[x,y,z]\n"
                                   "ideal = x*y, x*z, y*z\n"
                                   "task = scan\n"
                                   "n_max = 2\n"
                                   "strategy = user-element-saturation\n"
                                   "f = x + y + z\n");
    CHECK(scan.task == TaskKind::Scan);
    CHECK(scan.n_max == 2);
    REQUIRE(scan.strategy.has_value());
    CHECK(scan.strategy->kind == StrategyKind::UserElementSaturation);
    CHECK(!scan.strategy->user_f.is_zero());

    Scenario probe = parse_scenario("ring = QQ[x,y,z]\n"
                                    "map_f = x^2, x*y, y*z\n"
                                    "map_g = x*y, y^2, x*z\n"
                                    "task = cremona-probe\n"
                                    "check_up_to = 2\n"
                                    "strategy = saturation-at-irrelevant\n"
                                    "justification = user-override\n");
    CHECK(probe.task == TaskKind::CremonaProbe);
    CHECK(probe.check_up_to == 2);
    REQUIRE(probe.map_f.has_value());
    REQUIRE(probe.map_g.has_value());
    CHECK(probe.map_f->degree == 2);
    CHECK(probe.strategy->justification == Justification::UserOverride);

    CHECK(task_kind_from_str("classify") == TaskKind::Classify);
    CHECK(task_kind_str(TaskKind::CremonaVerify) == "cremona-verify");
    CHECK(!task_kind_from_str("fit").has_value());
}

TEST_CASE("scenario grammar violations are located")
{
    std::string msg = parse_error_of("ring = QQ[x]\nfoo = 1\n");
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("unknown key 'foo'") != std::string::npos);

    msg = parse_error_of("ring QQ[x]\n");
    CHECK(msg.find("expected '='") != std::string::npos);

    msg = parse_error_of("ring = QQ[x]\nring = QQ[y]\n");
    CHECK(msg.find("duplicate key 'ring'") != std::string::npos);

    msg = parse_error_of("ring = QQ[x]\nn =\n");
    CHECK(msg.find("empty value") != std::string::npos);

    msg = parse_error_of("ideal = x\n");
    CHECK(msg.find("'ideal' needs 'ring'") != std::string::npos);

    msg = parse_error_of("ring = QQ[x]\ntask = fit\n");
    CHECK(msg.find("unknown task 'fit'") != std::string::npos);

    msg = parse_error_of("ring = QQ[x]\nn = 0\n");
    CHECK(msg.find("positive integer") != std::string::npos);

    msg = parse_error_of("ring = QQ[x]\nstrategy = byhand\n");
    CHECK(msg.find("unknown strategy") != std::string::npos);

    msg = parse_error_of("ring = QQ[x]\njustification = trust-me\n");
    CHECK(msg.find("unknown justification") != std::string::npos);

    // A malformed polynomial is pinned to its scenario line.
    msg = parse_error_of("ring = QQ[x,y]\nideal = x +* y\ntask = profile\n");
    CHECK(msg.find("line 2") != std::string::npos);

    // Semantic violations: wrong or missing keys for the declared task.
    CHECK_THROWS_AS(parse_scenario("ring = QQ[x]\nideal = x\n"), DomainError);
    CHECK_THROWS_AS(parse_scenario("task = profile\n"), DomainError);
    CHECK_THROWS_AS(parse_scenario("ring = QQ[x]\nideal = x\ntask = profile\nn = 2\n"),
                    DomainError);
    CHECK_THROWS_AS(parse_scenario("ring = QQ[x]\nideal = x\ntask = compare\nn = 2\n"),
                    DomainError);
    CHECK_THROWS_AS(
        parse_scenario("ring = QQ[x]\nideal = x\ntask = profile\njustification = locally-CI\n"),
        DomainError);
    CHECK_THROWS_AS(parse_scenario("ring = QQ[x,y,z]\nideal = x*y, x*z, y*z\ntask = scan\n"
                                   "n_max = 2\nstrategy = user-element-saturation\n"),
                    DomainError);
    CHECK_THROWS_AS(parse_scenario("ring = QQ[x,y,z]\nideal = x*y, x*z, y*z\ntask = scan\n"
                                   "n_max = 2\nstrategy = saturation-at-irrelevant\nf = x\n"),
                    DomainError);
    CHECK_THROWS_AS(parse_scenario("ring = QQ[x,y,z]\ntask = cremona-verify\nmap_f = x, y, z\n"
                                   "map_g = x, y, z\n"),
                    DomainError);
}

TEST_CASE("scenario execution is deterministic and versioned")
{
    Scenario cmp = parse_scenario(kTriangleCompare);
    ScenarioOutcome a = run_scenario(cmp);
    ScenarioOutcome b = run_scenario(cmp);
    CHECK(a.exit_code == 0);
    CHECK(a.json == b.json);
    CHECK(a.table == b.table);

    json j = json::parse(a.json);
    CHECK(j["schema"] == "sympow/1");
    CHECK(j["task"] == "compare");
    CHECK(j["status"] == "ok");
    CHECK(j["ideal"].size() == 3);
    CHECK(j["result"]["n"] == 2);
    CHECK(j["result"]["equal"] == false);
    CHECK(j["result"]["witness"] == "x*y*z");
    CHECK(j["result"]["sat_exponent"] == 1);
    CHECK(j["result"]["depth_positive"] == false);
    CHECK(j["result"]["strategy"] == "minimal-prime-intersection");
    CHECK(j["result"]["justification"] == "user-override");
    CHECK(a.table.find("witness") != std::string::npos);

    Scenario prof = parse_scenario("ring = QQ[x,y,z,w]\n"
                                   "ideal = x*z - y^2, x*w - y*z, y*w - z^2\n"
                                   "task = profile\n");
    json p = json::parse(run_scenario(prof).json);
    CHECK(p["result"]["height"] == 2);
    CHECK(p["result"]["mu"] == 3);
    CHECK(p["result"]["perfect"] == true);
    CHECK(p["result"]["strongly_cm"] == "yes-by-criterion-i");

    Scenario res = parse_scenario("ring = QQ[x1,x2,x3,x4,x5]\n"
                                  "ideal = x1*x3, x1*x4, x2*x4, x2*x5, x3*x5\n"
                                  "task = resolve\n");
    json rr = json::parse(run_scenario(res).json);
    CHECK(rr["result"]["pd"] == 3);
    CHECK(rr["result"]["depth"] == 2);
    CHECK(rr["result"]["ranks"] == json::array({1, 5, 5, 1}));
    CHECK(rr["result"]["betti"]["1"]["2"] == 5);
    CHECK(rr["result"]["betti"]["3"]["5"] == 1);

    Scenario cls = parse_scenario("ring = QQ[x1,x2,x3,x4]\n"
                                  "ideal = x1*x3, x1*x4, x2*x4\n"
                                  "task = classify\n");
    json cj = json::parse(run_scenario(cls).json);
    CHECK(cj["result"]["shape"] == "path4");
    CHECK(cj["result"]["rigid_candidate"] == true);
    CHECK(cj["result"]["locally_ci"] == true);

    Scenario ver = parse_scenario("ring = QQ[x,y,z]\n"
                                  "map_f = y*z, x*z, x*y\n"
                                  "map_g = y*z, x*z, x*y\n"
                                  "task = cremona-verify\n");
    json vj = json::parse(run_scenario(ver).json);
    CHECK(vj["result"]["verified"] == true);
    CHECK(vj["result"]["D"] == "x*y*z");
    CHECK(vj["result"]["predicted_failure"] == 2);

    Scenario prb = parse_scenario("ring = QQ[x,y,z]\n"
                                  "map_f = x^2, x*y, y*z\n"
                                  "map_g = x*y, y^2, x*z\n"
                                  "task = cremona-probe\n"
                                  "check_up_to = 2\n"
                                  "strategy = saturation-at-irrelevant\n");
    json pj = json::parse(run_scenario(prb).json);
    CHECK(pj["result"]["check"]["verified"] == true);
    CHECK(pj["result"]["observed_failure"] == 2);
    CHECK(pj["result"]["prediction_matched"] == true);
    CHECK(pj["result"]["hypothesis_i"] == "checked");
}

TEST_CASE("guard aborts keep partial results and exit two")
{
    Scenario scan = parse_scenario("ring = QQ[x1,x2,x3,x4,x5]\n"
                                   "ideal = x1*x3, x1*x4, x2*x4, x2*x5, x3*x5\n"
                                   "task = scan\n"
                                   "n_max = 3\n"
                                   "strategy = minimal-prime-intersection\n"
                                   "guard_degree = 5\n");
    ScenarioOutcome so = run_scenario(scan);
    CHECK(so.exit_code == 2);
    json sj = json::parse(so.json);
    CHECK(sj["status"] == "guard-abort");
    REQUIRE(!sj["result"].is_null());
    REQUIRE(sj["result"]["reports"].size() == 3);
    CHECK(sj["result"]["reports"][2].contains("aborted"));

    Scenario cmp = parse_scenario("ring = QQ[x1,x2,x3,x4,x5]\n"
                                  "ideal = x1*x3, x1*x4, x2*x4, x2*x5, x3*x5\n"
                                  "task = compare\n"
                                  "n = 3\n"
                                  "strategy = minimal-prime-intersection\n"
                                  "guard_degree = 5\n");
    ScenarioOutcome co = run_scenario(cmp);
    CHECK(co.exit_code == 2);
    json cj = json::parse(co.json);
    CHECK(cj["status"] == "guard-abort");
    CHECK(cj["result"].is_null());
    CHECK(cj["aborted"].get<std::string>().find("degree guard") != std::string::npos);
}

TEST_CASE("repro cases recompute their claims")
{
    CHECK(repro_ids().size() == 10);
    CHECK_THROWS_AS(run_repro("ex9.9"), DomainError);

    std::vector<ReproResult> all = run_repro_all();
    REQUIRE(all.size() == 10);
    for (const ReproResult& r : all) {
        INFO(r.id, ": ", repro_table({r}));
        CHECK(r.pass);
    }

    std::string table = repro_table(all);
    CHECK(table.find("ex3.8  PASS") != std::string::npos);
    CHECK(table.find("passed 10 of 10") != std::string::npos);

    json j = json::parse(repro_json(all));
    CHECK(j["schema"] == "sympow/1");
    CHECK(j["passed"] == 10);
    CHECK(j["failed"] == 0);
    CHECK(j["cases"].size() == 10);
    CHECK(j["cases"][0]["id"] == "ex3.1");
}

TEST_CASE("command line smoke tests")
{
    std::string cmp = write_scratch("compare.txt", kTriangleCompare);
    std::string out1 = (scratch_dir() / "out1.json").string();
    std::string out2 = (scratch_dir() / "out2.json").string();

    CliRun r = run_cli("compare \"" + cmp + "\" --json \"" + out1 + "\"");
    CHECK(r.code == 0);
    CHECK(r.out.find("witness") != std::string::npos);
    CliRun r2 = run_cli("compare \"" + cmp + "\" --json \"" + out2 + "\"");
    CHECK(r2.code == 0);
    std::string j1 = read_file(out1);
    CHECK(!j1.empty());
    CHECK(j1 == read_file(out2));

    // Scenario task and subcommand must agree.
    CHECK(run_cli("scan \"" + cmp + "\"").code == 1);

    // Broken scenario files are input errors.
    std::string bad = write_scratch("bad.txt", "ring = QQ[x]\ntask = fit\n");
    CHECK(run_cli("profile \"" + bad + "\"").code == 1);

    // Guard overrides from the command line can trip the degree guard.
    std::string heavy = write_scratch("heavy.txt",
                                      "ring = QQ[x1,x2,x3,x4,x5]\n"
                                      "ideal = x1*x3, x1*x4, x2*x4, x2*x5, x3*x5\n"
                                      "task = compare\n"
                                      "n = 3\n"
                                      "strategy = minimal-prime-intersection\n");
    CHECK(run_cli("compare \"" + heavy + "\"").code == 0);
    CHECK(run_cli("compare \"" + heavy + "\" --guard-degree 5").code == 2);

    std::string cv = write_scratch("verify.txt", "ring = QQ[x,y,z]\n"
                                                 "map_f = y*z, x*z, x*y\n"
                                                 "map_g = y*z, x*z, x*y\n"
                                                 "task = cremona-verify\n");
    CliRun v = run_cli("cremona verify \"" + cv + "\"");
    CHECK(v.code == 0);
    CHECK(v.out.find("x*y*z") != std::string::npos);

    std::string rj = (scratch_dir() / "repro.json").string();
    CliRun rep = run_cli("repro ex5.6 --json \"" + rj + "\"");
    CHECK(rep.code == 0);
    CHECK(rep.out.find("PASS") != std::string::npos);
    json rjson = json::parse(read_file(rj));
    CHECK(rjson["passed"] == 1);

    CHECK(run_cli("").code != 0);
    CHECK(run_cli("repro no-such-case").code == 1);
}
