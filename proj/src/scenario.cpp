#include "sympow/scenario.hpp"

#include <cctype>
#include <charconv>
#include <json.hpp>
#include <map>
#include <sstream>

#include "sympow/error.hpp"
#include "sympow/monomial_ideal.hpp"
#include "sympow/parse.hpp"
#include "sympow/resolution.hpp"

using ordered_json = nlohmann::ordered_json;

namespace sympow {

std::string task_kind_str(TaskKind t)
{
    switch (t) {
    case TaskKind::Profile: return "profile";
    case TaskKind::Resolve: return "resolve";
    case TaskKind::Compare: return "compare";
    case TaskKind::Scan: return "scan";
    case TaskKind::Classify: return "classify";
    case TaskKind::CremonaVerify: return "cremona-verify";
    case TaskKind::CremonaProbe: return "cremona-probe";
    }
    return "profile";
}

std::optional<TaskKind> task_kind_from_str(const std::string& s)
{
    if (s == "profile") return TaskKind::Profile;
    if (s == "resolve") return TaskKind::Resolve;
    if (s == "compare") return TaskKind::Compare;
    if (s == "scan") return TaskKind::Scan;
    if (s == "classify") return TaskKind::Classify;
    if (s == "cremona-verify") return TaskKind::CremonaVerify;
    if (s == "cremona-probe") return TaskKind::CremonaProbe;
    return std::nullopt;
}

namespace {

[[noreturn]] void fail_at(int line, int col, std::size_t off, const std::string& msg)
{
    throw ParseError("scenario line " + std::to_string(line) + ", column " + std::to_string(col)
                         + ": " + msg,
                     off);
}

bool known_key(const std::string& k)
{
    static const char* keys[] = {"ring",          "ideal",    "task",         "n",
                                 "n_max",         "check_up_to", "strategy",  "justification",
                                 "f",             "map_f",    "map_g",        "guard_degree",
                                 "guard_seconds"};
    for (const char* key : keys)
        if (k == key)
            return true;
    return false;
}

long parse_positive_int(const std::string& v, int line, int col, std::size_t off,
                        const std::string& key)
{
    long out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size() || out < 1)
        fail_at(line, col, off, "value of '" + key + "' must be a positive integer, got '" + v
                                    + "'");
    return out;
}

// Tracks which keys appeared so the per-task requirements can be enforced
// after the whole file is read.
struct SeenKeys {
    std::map<std::string, int> line_of;

    bool has(const std::string& k) const { return line_of.count(k) != 0; }
};

void require_key(const SeenKeys& seen, TaskKind task, const std::string& key)
{
    if (!seen.has(key))
        throw DomainError("scenario: task '" + task_kind_str(task) + "' needs key '" + key + "'");
}

void forbid_key(const SeenKeys& seen, TaskKind task, const std::string& key)
{
    if (seen.has(key))
        throw DomainError("scenario: key '" + key + "' (line "
                          + std::to_string(seen.line_of.at(key)) + ") is not used by task '"
                          + task_kind_str(task) + "'");
}

} // namespace

Scenario parse_scenario(const std::string& text)
{
    Scenario s;
    SeenKeys seen;
    std::optional<TaskKind> task;
    std::optional<StrategyKind> strat_kind;
    std::optional<Justification> just;
    std::optional<Poly> user_f;
    bool have_ring = false;

    int line_no = 0;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        ++line_no;
        std::size_t eol = text.find('\n', line_start);
        if (eol == std::string::npos)
            eol = text.size();
        std::string line = text.substr(line_start, eol - line_start);
        std::size_t off0 = line_start;
        line_start = eol + 1;

        if (std::size_t hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos)
            continue;

        std::size_t key_start = i;
        while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_'))
            ++i;
        std::string key = line.substr(key_start, i - key_start);
        int key_col = static_cast<int>(key_start) + 1;
        if (key.empty())
            fail_at(line_no, key_col, off0 + key_start, "expected a key name");
        if (!known_key(key))
            fail_at(line_no, key_col, off0 + key_start, "unknown key '" + key + "'");
        if (seen.has(key))
            fail_at(line_no, key_col, off0 + key_start,
                    "duplicate key '" + key + "' (first set on line "
                        + std::to_string(seen.line_of.at(key)) + ")");

        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        if (i >= line.size() || line[i] != '=')
            fail_at(line_no, static_cast<int>(i) + 1, off0 + i, "expected '=' after key '" + key + "'");
        ++i;
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t val_end = line.find_last_not_of(" \t\r");
        std::string value = val_end == std::string::npos || val_end < i
                                ? std::string()
                                : line.substr(i, val_end - i + 1);
        int val_col = static_cast<int>(i) + 1;
        std::size_t val_off = off0 + i;
        if (value.empty())
            fail_at(line_no, val_col, val_off, "empty value for key '" + key + "'");

        seen.line_of[key] = line_no;

        auto need_ring = [&] {
            if (!have_ring)
                fail_at(line_no, key_col, off0 + key_start,
                        "'" + key + "' needs 'ring' declared on an earlier line");
        };
        auto reparse = [&](const ParseError& e) -> ParseError {
            return ParseError("scenario line " + std::to_string(line_no) + ", column "
                                  + std::to_string(val_col + static_cast<int>(e.pos())) + ": "
                                  + e.what(),
                              val_off + e.pos());
        };

        try {
            if (key == "ring") {
                s.ring = parse_ring(value);
                have_ring = true;
            } else if (key == "task") {
                task = task_kind_from_str(value);
                if (!task)
                    fail_at(line_no, val_col, val_off,
                            "unknown task '" + value
                                + "' (expected profile, resolve, compare, scan, classify, "
                                  "cremona-verify, or cremona-probe)");
            } else if (key == "ideal") {
                need_ring();
                s.ideal = Ideal::make(s.ring, parse_poly_list(s.ring, value));
            } else if (key == "f") {
                need_ring();
                user_f = parse_poly(s.ring, value);
            } else if (key == "map_f") {
                need_ring();
                s.map_f = make_cremona_map(s.ring, parse_poly_list(s.ring, value));
            } else if (key == "map_g") {
                need_ring();
                s.map_g = make_cremona_map(s.ring, parse_poly_list(s.ring, value));
            } else if (key == "n") {
                s.n = static_cast<int>(parse_positive_int(value, line_no, val_col, val_off, key));
            } else if (key == "n_max") {
                s.n_max =
                    static_cast<int>(parse_positive_int(value, line_no, val_col, val_off, key));
            } else if (key == "check_up_to") {
                s.check_up_to =
                    static_cast<int>(parse_positive_int(value, line_no, val_col, val_off, key));
            } else if (key == "guard_degree") {
                s.guard.max_degree = static_cast<std::uint32_t>(
                    parse_positive_int(value, line_no, val_col, val_off, key));
            } else if (key == "guard_seconds") {
                std::size_t used = 0;
                double sec = 0.0;
                try {
                    sec = std::stod(value, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != value.size() || sec <= 0.0)
                    fail_at(line_no, val_col, val_off,
                            "value of 'guard_seconds' must be a positive number, got '" + value
                                + "'");
                s.guard.soft_seconds = sec;
            } else if (key == "strategy") {
                strat_kind = strategy_kind_from_str(value);
                if (!strat_kind)
                    fail_at(line_no, val_col, val_off,
                            "unknown strategy '" + value
                                + "' (expected saturation-at-irrelevant, "
                                  "minimal-prime-intersection, or user-element-saturation)");
            } else if (key == "justification") {
                just = justification_from_str(value);
                if (!just)
                    fail_at(line_no, val_col, val_off,
                            "unknown justification '" + value
                                + "' (expected dim1-radical, locally-CI, "
                                  "unique-minimal-prime-dim1-homogeneous, or user-override)");
            }
        } catch (const ParseError& e) {
            if (std::string(e.what()).rfind("scenario line", 0) == 0)
                throw;
            throw reparse(e);
        }
    }

    if (!seen.has("task"))
        throw DomainError("scenario: missing key 'task'");
    if (!have_ring)
        throw DomainError("scenario: missing key 'ring'");
    s.task = *task;

    if (strat_kind) {
        if (*strat_kind == StrategyKind::UserElementSaturation && !user_f)
            throw DomainError(
                "scenario: strategy 'user-element-saturation' needs key 'f'");
        if (*strat_kind != StrategyKind::UserElementSaturation && user_f)
            throw DomainError(
                "scenario: key 'f' is only used by the user-element-saturation strategy");
        s.strategy = SymbolicStrategy{*strat_kind, just.value_or(Justification::UserOverride),
                                      user_f.value_or(Poly{}), ""};
    } else if (just || user_f) {
        throw DomainError("scenario: keys 'justification' and 'f' need key 'strategy'");
    }

    switch (s.task) {
    case TaskKind::Profile:
    case TaskKind::Resolve:
    case TaskKind::Classify:
        require_key(seen, s.task, "ideal");
        for (const char* k : {"n", "n_max", "check_up_to", "strategy", "map_f", "map_g"})
            forbid_key(seen, s.task, k);
        break;
    case TaskKind::Compare:
        require_key(seen, s.task, "ideal");
        require_key(seen, s.task, "n");
        require_key(seen, s.task, "strategy");
        for (const char* k : {"n_max", "check_up_to", "map_f", "map_g"})
            forbid_key(seen, s.task, k);
        break;
    case TaskKind::Scan:
        require_key(seen, s.task, "ideal");
        require_key(seen, s.task, "n_max");
        require_key(seen, s.task, "strategy");
        for (const char* k : {"n", "check_up_to", "map_f", "map_g"})
            forbid_key(seen, s.task, k);
        break;
    case TaskKind::CremonaVerify:
        require_key(seen, s.task, "map_f");
        require_key(seen, s.task, "map_g");
        for (const char* k : {"ideal", "n", "n_max", "check_up_to", "strategy"})
            forbid_key(seen, s.task, k);
        break;
    case TaskKind::CremonaProbe:
        require_key(seen, s.task, "map_f");
        require_key(seen, s.task, "map_g");
        require_key(seen, s.task, "check_up_to");
        require_key(seen, s.task, "strategy");
        for (const char* k : {"ideal", "n", "n_max"})
            forbid_key(seen, s.task, k);
        break;
    }
    return s;
}

namespace {

std::string yn(bool b)
{
    return b ? "yes" : "no";
}

std::string gens_str(const std::vector<Poly>& gens)
{
    std::string out;
    for (const Poly& g : gens) {
        if (!out.empty())
            out += ", ";
        out += g.str();
    }
    return out;
}

ordered_json gens_json(const std::vector<Poly>& gens)
{
    ordered_json arr = ordered_json::array();
    for (const Poly& g : gens)
        arr.push_back(g.str());
    return arr;
}

void row(std::ostringstream& os, const std::string& label, const std::string& value)
{
    os << "  " << label;
    for (std::size_t i = label.size(); i < 22; ++i)
        os << ' ';
    os << value << "\n";
}

// The wire form of one per-exponent report: exactly {n, equal, witness,
// sat_exponent, depth_positive, strategy, justification}, or {n, aborted}
// when a guard cut that exponent short.
ordered_json report_json(const SymbolicReport& r)
{
    ordered_json j;
    j["n"] = r.n;
    if (!r.aborted.empty()) {
        j["aborted"] = r.aborted;
        return j;
    }
    j["equal"] = r.equal;
    if (r.witness)
        j["witness"] = r.witness->str();
    else
        j["witness"] = nullptr;
    j["sat_exponent"] = r.sat_exponent;
    j["depth_positive"] = r.depth_positive;
    j["strategy"] = strategy_kind_str(r.strategy.kind);
    j["justification"] = justification_str(r.strategy.justification);
    return j;
}

std::string report_line(const SymbolicReport& r)
{
    std::string out = "n=" + std::to_string(r.n);
    if (!r.aborted.empty())
        return out + "  aborted: " + r.aborted;
    out += r.equal ? "  equal" : "  unequal";
    if (r.witness)
        out += "  witness " + r.witness->str();
    out += "  sat-exponent " + std::to_string(r.sat_exponent);
    out += "  depth-positive " + yn(r.depth_positive);
    return out;
}

ordered_json check_json(const CremonaCheck& c)
{
    ordered_json j;
    j["verified"] = c.verified;
    j["d"] = c.d;
    j["d_prime"] = c.d_prime;
    j["gabber_ok"] = c.gabber_ok;
    j["predicted_failure"] = c.predicted_failure;
    if (c.verified)
        j["D"] = c.D.str();
    else
        j["D"] = nullptr;
    j["diagnostic"] = c.diagnostic;
    return j;
}

void check_table(std::ostringstream& os, const CremonaCheck& c)
{
    row(os, "verified", yn(c.verified));
    row(os, "d", std::to_string(c.d));
    row(os, "d'", std::to_string(c.d_prime));
    row(os, "gabber-bound-ok", yn(c.gabber_ok));
    if (c.verified) {
        row(os, "D", c.D.str());
        row(os, "predicted-failure", std::to_string(c.predicted_failure));
    } else {
        row(os, "diagnostic", c.diagnostic);
    }
}

} // namespace

ScenarioOutcome run_scenario(const Scenario& s)
{
    ordered_json env;
    env["schema"] = "sympow/1";
    env["task"] = task_kind_str(s.task);
    env["ring"] = s.ring.str();
    if (s.ideal)
        env["ideal"] = gens_json(s.ideal->gens());
    if (s.map_f)
        env["map_f"] = gens_json(s.map_f->forms);
    if (s.map_g)
        env["map_g"] = gens_json(s.map_g->forms);
    env["guard"] = ordered_json{{"max_degree", s.guard.max_degree},
                                {"soft_seconds", s.guard.soft_seconds}};

    std::ostringstream head;
    row(head, "task", task_kind_str(s.task));
    row(head, "ring", s.ring.str());
    if (s.ideal)
        row(head, "ideal", gens_str(s.ideal->gens()));
    if (s.map_f)
        row(head, "map_f", gens_str(s.map_f->forms));
    if (s.map_g)
        row(head, "map_g", gens_str(s.map_g->forms));
    std::ostringstream sec;
    sec << s.guard.soft_seconds;
    row(head, "guard",
        "degree " + std::to_string(s.guard.max_degree) + ", " + sec.str() + "s soft");

    ScenarioOutcome out;
    ordered_json result;
    std::ostringstream body;
    std::string aborted;

    try {
        switch (s.task) {
        case TaskKind::Profile: {
            PredicateSet p = predicates(*s.ideal, s.guard);
            result["dim"] = p.dim;
            result["height"] = p.height;
            result["mu"] = p.mu;
            result["pd"] = p.pd;
            result["depth"] = p.depth;
            result["perfect"] = p.perfect;
            result["cohen_macaulay"] = p.cohen_macaulay;
            result["complete_intersection"] = p.complete_intersection;
            result["almost_complete_intersection"] = p.almost_complete_intersection;
            result["strongly_cm"] = strongly_cm_str(p.strongly_cm);
            row(body, "dim", std::to_string(p.dim));
            row(body, "height", std::to_string(p.height));
            row(body, "mu", std::to_string(p.mu));
            row(body, "pd", std::to_string(p.pd));
            row(body, "depth", std::to_string(p.depth));
            row(body, "perfect", yn(p.perfect));
            row(body, "cohen-macaulay", yn(p.cohen_macaulay));
            row(body, "complete-intersection", yn(p.complete_intersection));
            row(body, "almost-ci", yn(p.almost_complete_intersection));
            row(body, "strongly-cm", strongly_cm_str(p.strongly_cm));
            break;
        }
        case TaskKind::Resolve: {
            Resolution res = resolve(*s.ideal, s.guard);
            int dep = static_cast<int>(s.ring.nvars()) - res.pd;
            result["pd"] = res.pd;
            result["depth"] = dep;
            result["ranks"] = res.ranks;
            ordered_json betti;
            for (std::size_t l = 0; l < res.betti.rows.size(); ++l) {
                ordered_json level;
                for (const auto& [deg, count] : res.betti.rows[l])
                    level[std::to_string(deg)] = count;
                betti[std::to_string(l)] = std::move(level);
            }
            result["betti"] = std::move(betti);
            row(body, "pd", std::to_string(res.pd));
            row(body, "depth", std::to_string(dep));
            std::string ranks;
            for (std::size_t r : res.ranks)
                ranks += (ranks.empty() ? "" : " ") + std::to_string(r);
            row(body, "ranks", ranks);
            std::istringstream lines(res.betti.str());
            bool first = true;
            for (std::string l; std::getline(lines, l); first = false)
                row(body, first ? "betti" : "", l);
            break;
        }
        case TaskKind::Compare: {
            SymbolicReport rep = compare(*s.ideal, s.n, *s.strategy, s.guard);
            result = report_json(rep);
            row(body, "n", std::to_string(rep.n));
            row(body, "equal", yn(rep.equal));
            row(body, "witness", rep.witness ? rep.witness->str() : "(none)");
            row(body, "sat-exponent", std::to_string(rep.sat_exponent));
            row(body, "depth-positive", yn(rep.depth_positive));
            row(body, "strategy", strategy_kind_str(rep.strategy.kind));
            row(body, "justification", justification_str(rep.strategy.justification));
            row(body, "note", rep.strategy.validity_note);
            break;
        }
        case TaskKind::Scan: {
            ScanResult sr = rigidity_scan(*s.ideal, s.n_max, *s.strategy, s.guard);
            ordered_json reports = ordered_json::array();
            for (const SymbolicReport& rep : sr.reports) {
                reports.push_back(report_json(rep));
                body << "  " << report_line(rep) << "\n";
                if (aborted.empty() && !rep.aborted.empty())
                    aborted = rep.aborted;
            }
            result["reports"] = std::move(reports);
            result["first_failure"] = sr.first_failure;
            result["summary"] = sr.summary;
            row(body, "first-failure", std::to_string(sr.first_failure));
            row(body, "summary", sr.summary);
            if (!aborted.empty())
                out.exit_code = 2;
            break;
        }
        case TaskKind::Classify: {
            auto M = MonomialIdeal::from_ideal(*s.ideal);
            if (!M)
                throw DomainError("classify: the ideal is not a monomial ideal");
            GraphClass g = classify_graph(*M);
            result["edges"] = g.edges_str();
            result["shape"] = graph_shape_str(g.shape);
            result["class"] = g.name;
            result["rigid_candidate"] = g.rigid_candidate;
            result["locally_ci"] = g.locally_ci;
            result["verdict"] = g.verdict;
            row(body, "edges", g.edges_str());
            row(body, "shape", graph_shape_str(g.shape));
            row(body, "class", g.name);
            row(body, "rigid-candidate", yn(g.rigid_candidate));
            row(body, "locally-ci", yn(g.locally_ci));
            row(body, "verdict", g.verdict);
            break;
        }
        case TaskKind::CremonaVerify: {
            CremonaCheck c = verify_inverse(*s.map_f, *s.map_g);
            result = check_json(c);
            check_table(body, c);
            break;
        }
        case TaskKind::CremonaProbe: {
            ProbeReport p =
                nonrigidity_probe(*s.map_f, *s.map_g, *s.strategy, s.check_up_to, s.guard);
            result["check"] = check_json(p.check);
            result["depth_positive"] = p.depth_positive;
            result["hypothesis_i"] = hypothesis_status_str(p.hypothesis_i);
            result["hypothesis_ii"] = hypothesis_status_str(p.hypothesis_ii);
            result["hypothesis_note"] = p.hypothesis_note;
            ordered_json reports = ordered_json::array();
            for (const SymbolicReport& rep : p.reports)
                reports.push_back(report_json(rep));
            result["reports"] = std::move(reports);
            result["observed_failure"] = p.observed_failure;
            result["membership_checked"] = p.membership_checked;
            result["d_in_symbolic"] = p.d_in_symbolic;
            result["d_not_in_ordinary"] = p.d_not_in_ordinary;
            result["prediction_matched"] = p.prediction_matched;
            result["summary"] = p.summary;
            check_table(body, p.check);
            row(body, "depth-positive", yn(p.depth_positive));
            row(body, "hypothesis-i", hypothesis_status_str(p.hypothesis_i));
            row(body, "hypothesis-ii", hypothesis_status_str(p.hypothesis_ii));
            row(body, "note", p.hypothesis_note);
            for (const SymbolicReport& rep : p.reports)
                body << "  " << report_line(rep) << "\n";
            row(body, "observed-failure", std::to_string(p.observed_failure));
            if (p.membership_checked) {
                row(body, "d-in-symbolic", yn(p.d_in_symbolic));
                row(body, "d-not-in-ordinary", yn(p.d_not_in_ordinary));
                row(body, "prediction-matched", yn(p.prediction_matched));
            }
            row(body, "summary", p.summary);
            break;
        }
        }
    } catch (const GuardAbort& e) {
        aborted = e.what();
        result = nullptr;
        out.exit_code = 2;
        body << "  aborted: " << aborted << "\n";
    }

    env["status"] = out.exit_code == 2 ? "guard-abort" : "ok";
    if (out.exit_code == 2)
        env["aborted"] = aborted;
    env["result"] = std::move(result);

    out.json = env.dump(2) + "\n";
    out.table = head.str() + "\n" + body.str();
    return out;
}

} // namespace sympow
