#include "gmloci/report.hpp"

#include <cmath>
#include <cstdio>

namespace gmloci {

namespace {

using json = nlohmann::ordered_json;

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  return buf;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& x : v) {
      if (!out.empty()) out += " ";
      out += scalar_text(x);
    }
    return out;
  }
  return v.dump();
}

// Keys shown in text mode, in this order.
constexpr const char* kTextKeys[] = {"failed", "witness", "verdict", "expected", "form", "reason", "message", "notes"};

}  // namespace

json to_json(const VerificationReport& report, bool timings) {
  json out = json::object();
  if (!report.input.empty()) out["input"] = report.input;
  json results = json::array();
  for (const auto& e : report.results) {
    results.push_back(json{{"op", e.op}, {"status", std::string(to_string(e.status))}, {"detail", e.detail}});
  }
  out["results"] = std::move(results);
  if (timings) {
    json t = json::object();
    for (const auto& e : report.results) t[e.op] = std::round(e.elapsed_ms * 1000) / 1000;
    t["total"] = std::round(report.total_ms * 1000) / 1000;
    out["timings_ms"] = std::move(t);
  }
  return out;
}

std::string render(const VerificationReport& report, const RenderOptions& options) {
  if (options.format == Format::Json) return to_json(report, options.timings).dump() + "\n";

  std::string out;
  if (!report.input.empty()) out += "input: " + report.input + "\n";
  std::size_t counts[5] = {0, 0, 0, 0, 0};
  for (const auto& e : report.results) {
    ++counts[static_cast<int>(e.status)];
    std::string status(to_string(e.status));
    status.resize(std::max<std::size_t>(status.size(), 15), ' ');
    out += status + e.op;
    if (options.timings) out += " (" + format_ms(e.elapsed_ms) + " ms)";
    out += "\n";
    for (const char* key : kTextKeys) {
      if (e.detail.contains(key)) out += "    " + std::string(key) + ": " + scalar_text(e.detail[key]) + "\n";
    }
    if (e.detail.contains("counts")) {
      for (const auto& [p, c] : e.detail["counts"].items()) {
        out += "    counts F" + p + ": " + scalar_text(c) + "\n";
      }
    }
  }
  const std::size_t n = report.results.size();
  if (counts[static_cast<int>(Status::Pass)] == n) {
    out += "all " + std::to_string(n) + " properties passed";
  } else {
    out += std::to_string(n) + (n == 1 ? " property: " : " properties: ");
    bool first = true;
    for (auto s : {Status::Pass, Status::Fail, Status::Skipped, Status::ResourceLimit, Status::Error}) {
      if (!counts[static_cast<int>(s)]) continue;
      if (!first) out += ", ";
      first = false;
      out += std::to_string(counts[static_cast<int>(s)]) + " " + std::string(to_string(s));
    }
  }
  if (options.timings) out += " in " + format_ms(report.total_ms) + " ms";
  return out + "\n";
}

}  // namespace gmloci
