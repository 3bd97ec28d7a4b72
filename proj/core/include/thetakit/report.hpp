#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "thetakit/cocycle.hpp"
#include "thetakit/obstruction.hpp"

namespace thetakit {

using Json = nlohmann::json; // object keys serialize in sorted order

struct Verdict {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// The document every experiment run produces: metadata, experiment-specific
/// rows, and the named invariant checks the run touched.  Serialization is
/// deterministic for a fixed config once the timestamp is suppressed.
struct ReportDocument {
    std::string experiment;
    std::map<std::string, std::string> parameters;
    std::string version;
    std::optional<std::string> timestamp;
    Json rows = Json::array();
    std::vector<Verdict> verdicts;

    bool all_pass() const;
    Json to_json() const;
    static ReportDocument from_json(const Json& j);
    std::string to_json_text() const;

    void verdict(const std::string& name, bool pass, const std::string& detail = "");
};

// JSON shapes for the library types (dlog tables inline).
Json group_to_json(const FiniteGroup& g);
Json abelian_to_json(const FiniteAbelianGroup& m);
Json module_to_json(const GammaModule& m);
Json cocycle1_to_json(const Cocycle1& c);
Json cocycle2_to_json(const Cocycle2& c);
Json obstruction_record_to_json(const ObstructionRecord& rec);

} // namespace thetakit
