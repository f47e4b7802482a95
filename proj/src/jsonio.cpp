#include "loopnt/jsonio.hpp"

namespace loopnt {

using nlohmann::json;

json json_scalar_pair(const QuadVec2& v) {
    return json::array({v.x1.str(), v.x2.str()});
}

json to_json(const NTSet& s) {
    json j;
    switch (s.kind()) {
    case NTSet::Kind::Empty:
        j["kind"] = "empty";
        break;
    case NTSet::Kind::Ray:
        j["kind"] = "ray";
        j["dir"] = json_scalar_pair(s.dir());
        break;
    case NTSet::Kind::Sector:
        j["kind"] = "sector";
        j["right"] = json_scalar_pair(s.right());
        j["left"] = json_scalar_pair(s.left());
        j["right_closed"] = s.right_closed();
        j["left_closed"] = s.left_closed();
        j["half_plane"] = s.is_half_plane();
        break;
    }
    return j;
}

json to_json(const AnalysisReport& r) {
    json j = to_json(r.nt);
    j["case"] = to_string(r.tag);
    if (r.eigen.values)
        j["eigenvalues"] = json::array({r.eigen.values->first.str(), r.eigen.values->second.str()});
    else
        j["eigenvalues"] = nullptr;
    json w = json::object();
    for (const auto& [name, vec] : r.witnesses)
        w[name] = json_scalar_pair(vec);
    j["witnesses"] = w;
    return j;
}

json to_json(const LoopAnalysis& a) {
    if (a.rows.size() == 1)
        return to_json(a.rows[0]);
    json j = to_json(a.nt);
    j["case"] = "Intersection";
    j["eigenvalues"] =
        a.rows.empty() ? json(nullptr) : to_json(a.rows[0])["eigenvalues"];
    j["witnesses"] = json::object();
    json rows = json::array();
    for (const auto& r : a.rows)
        rows.push_back(to_json(r));
    j["rows"] = rows;
    return j;
}

json to_json(const SimResult& r) {
    json j;
    j["outcome"] = r.terminated() ? "terminated" : "survived";
    j["steps"] = r.steps;
    if (!r.terminated())
        j["note"] = "inconclusive: the step budget was exhausted with the guard still holding";
    return j;
}

json to_json(const FuzzReport& r) {
    json j;
    j["trials"] = r.trials;
    j["loops_generated"] = r.loops_generated;
    j["points_checked"] = r.points_checked;
    j["seed"] = r.seed;
    j["passed"] = r.passed();
    json v = json::array();
    for (const auto& viol : r.violations)
        v.push_back({{"loop", viol.loop},
                     {"point", viol.point},
                     {"claim", viol.claim},
                     {"simulation", viol.sim}});
    j["violations"] = v;
    return j;
}

json to_json(const BoundaryCheck& c, std::size_t preview) {
    json j;
    j["base_on_guard_line"] = c.base_on_guard_line;
    j["all_positive"] = c.all_positive;
    j["checked_k"] = c.values.size();
    json head = json::array();
    for (std::size_t i = 0; i < c.values.size() && i < preview; ++i)
        head.push_back(c.values[i].str());
    j["first_values"] = head;
    if (!c.values.empty())
        j["last_value_digits"] = c.values.back().str().size();
    return j;
}

} // namespace loopnt
