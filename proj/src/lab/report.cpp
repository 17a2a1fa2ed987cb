#include <json.hpp>
#include <sstream>

#include "extlat/lab.hpp"

namespace extlat {

namespace {

std::string join(const std::vector<int>& v, int offset) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i] + offset;
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::ordered_json report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["check_id"] = r.check_id;
  j["instance"] = r.instance;
  j["lhs"] = to_string(r.lhs);
  j["rhs"] = to_string(r.rhs);
  j["holds"] = r.holds;
  j["equality"] = r.equality;
  if (r.predicted_equality) j["predicted_equality"] = *r.predicted_equality;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace

std::string Instance::describe() const {
  std::ostringstream os;
  if (!perm.empty()) os << "sigma=" << join(perm, 1);
  else os << "P=" << extlat::describe(poset);
  if (!perm2.empty()) os << ";pi=" << join(perm2, 1);
  if (other) os << ";Q=" << extlat::describe(*other);
  if (x >= 0) os << ";x=" << x + 1;
  if (y >= 0) os << ";y=" << y + 1;
  if (a > 0) os << ";a=" << a;
  if (!extra.u.empty()) os << ";z=" << join(extra.u, 1) << ";c=" << join(extra.a, 0);
  if (subset) {
    std::vector<int> elems;
    for (Mask m = subset; m; m &= m - 1) elems.push_back(std::countr_zero(m));
    os << ";A=" << join(elems, 1);
  }
  if (t > 0) os << ";t=" << t;
  if (k > 0) os << ";k=" << k;
  if (q != 0) os << ";q=" << q.get_str();
  if (degree > 0) os << ";N=" << degree;
  return os.str();
}

std::string to_string(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, QPoly>) return x.to_string();
        else return x.get_str();
      },
      v);
}

std::string to_string(CheckKind k) {
  switch (k) {
    case CheckKind::Theorem: return "theorem";
    case CheckKind::Conjecture: return "conjecture";
    case CheckKind::Conditional: return "conditional";
  }
  return "unknown";
}

std::string to_json(const VerificationReport& r) { return report_json(r).dump(); }

std::string csv_header() { return "check_id,instance,lhs,rhs,holds,equality"; }

std::string to_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << csv_field(r.check_id) << ',' << csv_field(r.instance) << ',' << csv_field(to_string(r.lhs)) << ','
     << csv_field(to_string(r.rhs)) << ',' << (r.holds ? "true" : "false") << ',' << (r.equality ? "true" : "false");
  return os.str();
}

std::string SweepSummary::to_json() const {
  nlohmann::ordered_json j;
  j["check_id"] = check_id;
  j["family"] = family;
  j["status"] = status;
  j["units"] = units;
  j["instances_run"] = instances_run;
  j["equalities"] = equalities;
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& r : violations) j["violations"].push_back(report_json(r));
  j["equality_mismatches"] = nlohmann::ordered_json::array();
  for (const auto& r : equality_mismatches) j["equality_mismatches"].push_back(report_json(r));
  if (!reports.empty()) {
    j["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) j["reports"].push_back(report_json(r));
  }
  return j.dump();
}

}  // namespace extlat
