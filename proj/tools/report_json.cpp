#include "report_json.hpp"

#include <ctime>
#include <stdexcept>
#include <variant>

#include <json.hpp>

namespace fibdual::cli {

using json = nlohmann::ordered_json;

namespace {

json quat_json(const Quaternion<BigInt>& q) {
  return json{{"w", q.w.str()}, {"x", q.x.str()}, {"y", q.y.str()}, {"z", q.z.str()}};
}

json value_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, BigInt>) {
          return json(x.str());
        } else if constexpr (std::is_same_v<T, Dual<BigInt>>) {
          return json{{"re", x.re.str()}, {"du", x.du.str()}};
        } else if constexpr (std::is_same_v<T, Quaternion<BigInt>>) {
          return quat_json(x);
        } else {
          return json{{"real", quat_json(x.real)}, {"dual", quat_json(x.dual)}};
        }
      },
      v);
}

Quaternion<BigInt> quat_from_json(const json& j) {
  return Quaternion<BigInt>(
      BigInt::from_string(j.at("w").get<std::string>()),
      BigInt::from_string(j.at("x").get<std::string>()),
      BigInt::from_string(j.at("y").get<std::string>()),
      BigInt::from_string(j.at("z").get<std::string>()));
}

Value value_from_json(const json& j) {
  if (j.is_string()) return BigInt::from_string(j.get<std::string>());
  if (!j.is_object()) throw std::invalid_argument("report: malformed value");
  if (j.contains("re")) {
    return Dual<BigInt>(BigInt::from_string(j.at("re").get<std::string>()),
                        BigInt::from_string(j.at("du").get<std::string>()));
  }
  if (j.contains("real")) {
    return DualQuaternion<BigInt>(quat_from_json(j.at("real")), quat_from_json(j.at("dual")));
  }
  return quat_from_json(j);
}

json range_json(const IndexRanges& r) {
  json out;
  out["n"] = json::array({r.n.lo, r.n.hi});
  if (r.m) out["m"] = json::array({r.m->lo, r.m->hi});
  if (r.p) out["p"] = json::array({r.p->lo, r.p->hi});
  return out;
}

IndexRanges ranges_from_json(const json& j) {
  IndexRanges r;
  r.n = {j.at("n").at(0).get<std::int64_t>(), j.at("n").at(1).get<std::int64_t>()};
  if (j.contains("m")) r.m = IndexRange{j.at("m").at(0).get<std::int64_t>(),
                                        j.at("m").at(1).get<std::int64_t>()};
  if (j.contains("p")) r.p = IndexRange{j.at("p").at(0).get<std::int64_t>(),
                                        j.at("p").at(1).get<std::int64_t>()};
  return r;
}

}  // namespace

std::string current_timestamp_utc() {
  std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::string emit_report_json(const ReportDocument& doc) {
  json out;
  out["version"] = doc.version;
  if (doc.generated_at) out["generated_at"] = *doc.generated_at;
  out["results"] = json::array();
  for (const ReportEntry& entry : doc.results) {
    const CheckReport& rep = entry.report;
    json r;
    r["id"] = rep.id;
    r["paper_ref"] = entry.paper_ref;
    r["range"] = range_json(rep.range);
    r["status"] = std::string(to_string(rep.status));
    r["instances"] = rep.instances_checked;
    if (rep.counterexample) {
      const Counterexample& cex = *rep.counterexample;
      json c;
      c["n"] = cex.at.n;
      if (rep.range.m) c["m"] = cex.at.m;
      if (rep.range.p) c["p"] = cex.at.p;
      c["lhs"] = value_json(cex.lhs);
      c["rhs"] = value_json(cex.rhs);
      c["delta"] = value_json(cex.delta);
      r["counterexample"] = c;
    }
    out["results"].push_back(std::move(r));
  }
  return out.dump();
}

ReportDocument parse_report_json(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("report: not valid JSON: ") + e.what());
  }
  try {
    ReportDocument doc;
    doc.version = in.at("version").get<std::string>();
    if (in.contains("generated_at")) doc.generated_at = in.at("generated_at").get<std::string>();
    for (const json& r : in.at("results")) {
      ReportEntry entry;
      CheckReport& rep = entry.report;
      rep.id = r.at("id").get<std::string>();
      entry.paper_ref = r.at("paper_ref").get<std::string>();
      rep.range = ranges_from_json(r.at("range"));
      std::string status = r.at("status").get<std::string>();
      if (status == "verified") {
        rep.status = CheckStatus::Verified;
      } else if (status == "refuted") {
        rep.status = CheckStatus::Refuted;
      } else {
        throw std::invalid_argument("report: unknown status " + status);
      }
      rep.instances_checked = r.at("instances").get<std::uint64_t>();
      if (r.contains("counterexample")) {
        const json& c = r.at("counterexample");
        Counterexample cex;
        cex.at.n = c.at("n").get<std::int64_t>();
        if (c.contains("m")) cex.at.m = c.at("m").get<std::int64_t>();
        if (c.contains("p")) cex.at.p = c.at("p").get<std::int64_t>();
        cex.lhs = value_from_json(c.at("lhs"));
        cex.rhs = value_from_json(c.at("rhs"));
        cex.delta = value_from_json(c.at("delta"));
        rep.counterexample = std::move(cex);
      }
      doc.results.push_back(std::move(entry));
    }
    return doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report: missing or mistyped field: ") + e.what());
  }
}

}  // namespace fibdual::cli
