#include "spectree/report.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace spectree {

namespace {

std::vector<std::string> columns(const CampaignReport& r) {
  std::vector<std::string> cols;
  for (const auto& row : r.rows)
    for (auto it = row.begin(); it != row.end(); ++it)
      if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
  return cols;
}

std::string cell(const Json& row, const std::string& key) {
  if (!row.contains(key)) return "";
  const Json& v = row.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_array()) {
    std::string out;
    for (const auto& x : v) {
      if (!out.empty()) out += ' ';
      out += x.is_string() ? x.get<std::string>() : x.dump();
    }
    return out;
  }
  if (v.is_number_float()) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(6);
    s << v.get<double>();
    return s.str();
  }
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const CampaignReport& r, const ReportFormat& fmt) {
  Json out;
  out["campaign"] = r.campaign;
  out["params"] = r.params;
  out["rows"] = Json::array();
  for (const auto& row : r.rows) out["rows"].push_back(row);
  out["checks"] = Json::array();
  for (const auto& c : r.checks) out["checks"].push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  out["passed"] = r.passed();
  if (fmt.timing) out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

std::string to_json_text(const CampaignReport& r, const ReportFormat& fmt) { return to_json(r, fmt).dump(2) + "\n"; }

std::string to_csv(const CampaignReport& r, const ReportFormat& fmt) {
  std::ostringstream out;
  const auto cols = columns(r);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_escape(cols[i]);
  if (!cols.empty()) out << "\n";
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_escape(cell(row, cols[i]));
    out << "\n";
  }
  out << "\ncheck,passed,detail\n";
  for (const auto& c : r.checks) out << csv_escape(c.name) << "," << (c.passed ? "true" : "false") << "," << csv_escape(c.detail) << "\n";
  if (fmt.timing) out << "\nelapsed_ms," << r.elapsed_ms << "\n";
  return out.str();
}

std::string to_text(const CampaignReport& r, const ReportFormat& fmt) {
  std::ostringstream out;
  out << r.campaign;
  if (!r.params.empty()) out << "  " << r.params.dump();
  out << "\n\n";
  const auto cols = columns(r);
  if (!cols.empty()) {
    std::vector<std::size_t> width(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) {
      width[i] = cols[i].size();
      for (const auto& row : r.rows) width[i] = std::max(width[i], cell(row, cols[i]).size());
    }
    auto line = [&](auto get) {
      for (std::size_t i = 0; i < cols.size(); ++i) {
        std::string v = get(i);
        out << (i ? "  " : "") << v;
        if (i + 1 < cols.size()) out << std::string(width[i] - v.size(), ' ');
      }
      out << "\n";
    };
    line([&](std::size_t i) { return cols[i]; });
    line([&](std::size_t i) { return std::string(width[i], '-'); });
    for (const auto& row : r.rows) line([&](std::size_t i) { return cell(row, cols[i]); });
    out << "\n";
  }
  for (const auto& c : r.checks) {
    out << (c.passed ? "PASS  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  out << "\n" << (r.passed() ? "all checks passed" : std::to_string(r.failures().size()) + " check(s) failed");
  if (fmt.timing) {
    std::ostringstream ms;
    ms.setf(std::ios::fixed);
    ms.precision(1);
    ms << r.elapsed_ms;
    out << " in " << ms.str() << " ms";
  }
  out << "\n";
  return out.str();
}

}  // namespace spectree
