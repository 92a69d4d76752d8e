#pragma once

#include <scrollulrich/claims.hpp>
#include <scrollulrich/version.hpp>

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace scrollulrich {

struct ReportDocument {
    std::string engine_version = kEngineVersion;
    GridSpec grid;
    std::vector<ClaimResult> results;
    std::size_t pass = 0, fail = 0, undecided = 0;
};

inline ReportDocument make_report(const Registry& reg, const GridSpec& grid,
                                  const std::vector<std::string>& filter = {}) {
    ReportDocument doc;
    doc.grid = grid;
    doc.results = verify_claims(reg, grid, filter);
    for (const ClaimResult& r : doc.results) {
        switch (r.status) {
            case ClaimStatus::Pass: ++doc.pass; break;
            case ClaimStatus::Fail: ++doc.fail; break;
            case ClaimStatus::Undecided: ++doc.undecided; break;
        }
    }
    return doc;
}

// Claims whose FAIL rows are expected and documented; the default baseline
// tolerates them so the exit code highlights only new breakage. --strict
// empties the list.
inline const std::vector<std::string>& default_fail_whitelist() {
    static const std::vector<std::string> wl = {"C1-MIXED"};
    return wl;
}

inline std::size_t unexpected_failures(const ReportDocument& doc, bool strict) {
    std::size_t n = 0;
    for (const ClaimResult& r : doc.results) {
        if (r.status != ClaimStatus::Fail) continue;
        if (strict) {
            ++n;
            continue;
        }
        const auto& wl = default_fail_whitelist();
        bool whitelisted = false;
        for (const auto& w : wl)
            if (claim_family(r.claim_id) == w) {
                whitelisted = true;
                break;
            }
        if (!whitelisted) ++n;
    }
    return n;
}

// TSV: fixed columns claim_id, t, r, expected, computed, status; r printed as
// "-" for claims with no rank parameter. Output is canonical: same inputs give
// byte-identical text, independent of thread count.
inline std::string to_tsv(const ReportDocument& doc) {
    std::string out = "claim_id\tt\tr\texpected\tcomputed\tstatus\n";
    for (const ClaimResult& r : doc.results) {
        out += r.claim_id;
        out += '\t';
        out += std::to_string(r.t);
        out += '\t';
        out += r.r ? std::to_string(*r.r) : std::string("-");
        out += '\t';
        out += r.expected;
        out += '\t';
        out += r.computed;
        out += '\t';
        out += to_string(r.status);
        out += '\n';
    }
    return out;
}

inline std::string to_json(const ReportDocument& doc) {
    nlohmann::ordered_json j;
    j["engine"] = {{"name", kEngineName}, {"version", doc.engine_version}};
    j["grid"] = {{"t", {doc.grid.t_lo, doc.grid.t_hi}}, {"r", {doc.grid.r_lo, doc.grid.r_hi}}};
    j["results"] = nlohmann::ordered_json::array();
    for (const ClaimResult& r : doc.results) {
        nlohmann::ordered_json row;
        row["claim_id"] = r.claim_id;
        row["t"] = r.t;
        if (r.r)
            row["r"] = *r.r;
        else
            row["r"] = nullptr;
        row["expected"] = r.expected;
        row["computed"] = r.computed;
        row["status"] = std::string(to_string(r.status));
        j["results"].push_back(std::move(row));
    }
    j["summary"] = {{"pass", doc.pass}, {"fail", doc.fail}, {"undecided", doc.undecided}};
    return j.dump(2) + "\n";
}

}  // namespace scrollulrich
