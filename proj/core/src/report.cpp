#include "thetakit/report.hpp"

#include "thetakit/guard.hpp"

namespace thetakit {

bool ReportDocument::all_pass() const {
    for (const auto& v : verdicts)
        if (!v.pass) return false;
    return true;
}

void ReportDocument::verdict(const std::string& name, bool pass, const std::string& detail) {
    verdicts.push_back({name, pass, detail});
}

Json ReportDocument::to_json() const {
    Json j;
    j["experiment"] = experiment;
    j["parameters"] = parameters;
    j["version"] = version;
    if (timestamp) j["timestamp"] = *timestamp;
    j["rows"] = rows;
    Json vs = Json::array();
    for (const auto& v : verdicts)
        vs.push_back(Json{{"detail", v.detail}, {"name", v.name}, {"pass", v.pass}});
    j["verdicts"] = vs;
    return j;
}

ReportDocument ReportDocument::from_json(const Json& j) {
    ReportDocument doc;
    doc.experiment = j.at("experiment").get<std::string>();
    doc.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
    doc.version = j.at("version").get<std::string>();
    if (j.contains("timestamp")) doc.timestamp = j.at("timestamp").get<std::string>();
    doc.rows = j.at("rows");
    for (const auto& v : j.at("verdicts"))
        doc.verdicts.push_back({v.at("name").get<std::string>(), v.at("pass").get<bool>(),
                                v.at("detail").get<std::string>()});
    return doc;
}

std::string ReportDocument::to_json_text() const { return to_json().dump(2) + "\n"; }

Json group_to_json(const FiniteGroup& g) {
    Json j;
    j["name"] = g.name();
    j["order"] = g.order();
    Json table = Json::array();
    for (int a = 0; a < g.order(); ++a) {
        Json row = Json::array();
        for (int b = 0; b < g.order(); ++b) row.push_back(g.compose(a, b));
        table.push_back(row);
    }
    j["table"] = table;
    return j;
}

Json abelian_to_json(const FiniteAbelianGroup& m) {
    Json j;
    j["divisors"] = m.divisors();
    j["order"] = m.size();
    j["exponent"] = m.exponent();
    return j;
}

Json module_to_json(const GammaModule& m) {
    Json j;
    j["name"] = m.name();
    j["group"] = m.group()->name();
    j["module"] = abelian_to_json(m.module());
    Json action = Json::array();
    for (int s = 0; s < m.group()->order(); ++s) action.push_back(m.action_table(s));
    j["action"] = action;
    return j;
}

Json cocycle1_to_json(const Cocycle1& c) { return Json(c.values()); }

Json cocycle2_to_json(const Cocycle2& c) {
    int n = c.module()->group()->order();
    Json rows = Json::array();
    for (int s = 0; s < n; ++s) {
        Json row = Json::array();
        for (int t = 0; t < n; ++t) row.push_back(c.value(s, t));
        rows.push_back(row);
    }
    return rows;
}

Json obstruction_record_to_json(const ObstructionRecord& rec) {
    Json j;
    j["input"] = cocycle1_to_json(rec.input);
    j["delta"] = cocycle2_to_json(rec.delta);
    j["delta_class"] = rec.delta_class.representative();
    j["linear_part"] = cocycle2_to_json(rec.linear_part);
    j["quadratic_part"] = cocycle2_to_json(rec.quadratic_part);
    return j;
}

} // namespace thetakit
