#pragma once

#include <string>
#include <vector>

namespace sympow {

// One finished built-in reproduction case: the fixed id, a one-line
// description of what the case recomputes, the overall verdict, and the
// per-claim lines ("ok: ...", "FAIL: ... (got ...)", "note: ...").
// Witnesses are always re-verified by raw membership against freshly
// built ideals, never trusted from the report that produced them.
struct ReproResult {
    std::string id;
    std::string description;
    bool pass = true;
    std::vector<std::string> checks;
};

// The fixed census, in execution order.
std::vector<std::string> repro_ids();

// Runs one case; throws DomainError for an unknown id.
ReproResult run_repro(const std::string& id);

std::vector<ReproResult> run_repro_all();

// Console and JSON renderings of a batch (JSON schema sympow/1).
std::string repro_table(const std::vector<ReproResult>& results);
std::string repro_json(const std::vector<ReproResult>& results);

} // namespace sympow
