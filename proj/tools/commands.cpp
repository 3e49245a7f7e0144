#include "commands.hpp"

#include <ostream>
#include <vector>

#include <json.hpp>

#include "fibdual/binet.hpp"
#include "fibdual/identities.hpp"
#include "fibdual/sequences.hpp"
#include "fibdual/version.hpp"
#include "report_json.hpp"

namespace fibdual::cli {

using json = nlohmann::ordered_json;

namespace {

bool parse_kind(const std::string& text, SeqKind& kind) {
  if (text == "fib") {
    kind = SeqKind::Fibonacci;
    return true;
  }
  if (text == "lucas") {
    kind = SeqKind::Lucas;
    return true;
  }
  return false;
}

// RFC 4180: quote fields containing commas, quotes or newlines.
std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

json quat_json(const Quaternion<BigInt>& q) {
  return json{{"w", q.w.str()}, {"x", q.x.str()}, {"y", q.y.str()}, {"z", q.z.str()}};
}

json quadquat_json(const Quaternion<QuadRat>& q) {
  return json{{"w", q.w.str()}, {"x", q.x.str()}, {"y", q.y.str()}, {"z", q.z.str()}};
}

std::string quat_text(const Quaternion<QuadRat>& q) {
  return "w=" + q.w.str() + " x=" + q.x.str() + " y=" + q.y.str() + " z=" + q.z.str();
}

void print_value_text(std::ostream& out, const Value& v, const char* label) {
  out << "      " << label << " = " << value_str(v) << "\n";
}

}  // namespace

int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err) {
  SeqKind kind;
  if (!parse_kind(args.kind, kind)) {
    err << "table: unknown kind '" << args.kind << "' (expected fib or lucas)\n";
    return kExitUsage;
  }
  if (args.format != "csv" && args.format != "json") {
    err << "table: unknown format '" << args.format << "' (expected csv or json)\n";
    return kExitUsage;
  }
  if (args.from > args.to) {
    err << "table: empty range, --from " << args.from << " > --to " << args.to << "\n";
    return kExitUsage;
  }

  const bool csv = args.format == "csv";
  if (args.object == "number") {
    if (csv) out << "n,value\n";
    for (std::int64_t n = args.from; n <= args.to; ++n) {
      BigInt v = kind == SeqKind::Fibonacci ? fib(n) : lucas(n);
      if (csv) {
        out << n << "," << csv_field(v.str()) << "\n";
      } else {
        out << json{{"n", n}, {"value", v.str()}}.dump() << "\n";
      }
    }
  } else if (args.object == "dual") {
    if (csv) out << "n,re,du\n";
    for (std::int64_t n = args.from; n <= args.to; ++n) {
      Dual<BigInt> v = dual_number(kind, n);
      if (csv) {
        out << n << "," << v.re.str() << "," << v.du.str() << "\n";
      } else {
        out << json{{"n", n}, {"re", v.re.str()}, {"du", v.du.str()}}.dump() << "\n";
      }
    }
  } else if (args.object == "quat") {
    if (csv) out << "n,w,x,y,z\n";
    for (std::int64_t n = args.from; n <= args.to; ++n) {
      Quaternion<BigInt> v = quat(kind, n);
      if (csv) {
        out << n << "," << v.w.str() << "," << v.x.str() << "," << v.y.str() << ","
            << v.z.str() << "\n";
      } else {
        json row{{"n", n}};
        row.update(quat_json(v));
        out << row.dump() << "\n";
      }
    }
  } else if (args.object == "dualquat") {
    if (csv) out << "n,real_w,real_x,real_y,real_z,dual_w,dual_x,dual_y,dual_z\n";
    for (std::int64_t n = args.from; n <= args.to; ++n) {
      DualQuaternion<BigInt> v = dual_quat(kind, n);
      if (csv) {
        out << n << "," << v.real.w.str() << "," << v.real.x.str() << "," << v.real.y.str()
            << "," << v.real.z.str() << "," << v.dual.w.str() << "," << v.dual.x.str() << ","
            << v.dual.y.str() << "," << v.dual.z.str() << "\n";
      } else {
        out << json{{"n", n}, {"real", quat_json(v.real)}, {"dual", quat_json(v.dual)}}.dump()
            << "\n";
      }
    }
  } else {
    err << "table: unknown object '" << args.object
        << "' (expected number, dual, quat or dualquat)\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  if (args.format != "json" && args.format != "text") {
    err << "check: unknown format '" << args.format << "' (expected json or text)\n";
    return kExitUsage;
  }

  std::vector<const IdentityRecord*> selected;
  if (args.identity == "all") {
    for (const IdentityRecord& rec : catalog()) selected.push_back(&rec);
  } else {
    const IdentityRecord* rec = find_identity(args.identity);
    if (!rec) {
      err << "check: unknown identity '" << args.identity << "'\n";
      return kExitUsage;
    }
    selected.push_back(rec);
  }

  ReportDocument doc;
  doc.version = kVersion;
  if (!args.no_timestamp) doc.generated_at = current_timestamp_utc();

  CheckOptions options;
  options.execution = Execution::Parallel;
  options.cross_check = true;

  bool any_refuted = false;
  for (const IdentityRecord* rec : selected) {
    IndexRanges ranges = default_ranges(*rec);
    if (args.n_from) ranges.n.lo = *args.n_from;
    if (args.n_to) ranges.n.hi = *args.n_to;
    if (ranges.m) {
      if (args.m_from) ranges.m->lo = *args.m_from;
      if (args.m_to) ranges.m->hi = *args.m_to;
    }
    if (ranges.p) {
      if (args.p_from) ranges.p->lo = *args.p_from;
      if (args.p_to) ranges.p->hi = *args.p_to;
    }
    CheckReport report;
    try {
      report = check_range(*rec, ranges, options);
    } catch (const EmptyRange& e) {
      err << "check: " << e.what() << "\n";
      return kExitUsage;
    }
    any_refuted = any_refuted || report.status == CheckStatus::Refuted;
    doc.results.push_back(ReportEntry{std::move(report), rec->paper_ref});
  }

  if (args.format == "json") {
    out << emit_report_json(doc) << "\n";
  } else {
    if (doc.generated_at) out << "generated at " << *doc.generated_at << "\n";
    for (const ReportEntry& entry : doc.results) {
      const CheckReport& rep = entry.report;
      const IdentityRecord* rec = find_identity(rep.id);
      out << rep.id << "  " << to_string(rep.status) << "  instances=" << rep.instances_checked
          << "  n=[" << rep.range.n.lo << "," << rep.range.n.hi << "]";
      if (rep.range.m) out << " m=[" << rep.range.m->lo << "," << rep.range.m->hi << "]";
      if (rep.range.p) out << " p=[" << rep.range.p->lo << "," << rep.range.p->hi << "]";
      out << "\n";
      if (rec) out << "    " << rec->description << "\n";
      if (rep.counterexample) {
        const Counterexample& cex = *rep.counterexample;
        out << "    counterexample at n=" << cex.at.n;
        if (rep.range.m) out << ", m=" << cex.at.m;
        if (rep.range.p) out << ", p=" << cex.at.p;
        out << ":\n";
        print_value_text(out, cex.lhs, "lhs  ");
        print_value_text(out, cex.rhs, "rhs  ");
        print_value_text(out, cex.delta, "delta");
      }
      if (rec && !rec->note.empty()) out << "    note: " << rec->note << "\n";
    }
  }
  if (args.expect_verified && any_refuted) return kExitExpectation;
  return kExitOk;
}

int cmd_binet(const BinetArgs& args, std::ostream& out, std::ostream& err) {
  SeqKind kind;
  if (!parse_kind(args.kind, kind)) {
    err << "binet: unknown kind '" << args.kind << "' (expected fib or lucas)\n";
    return kExitUsage;
  }
  if (args.format != "text" && args.format != "json") {
    err << "binet: unknown format '" << args.format << "' (expected text or json)\n";
    return kExitUsage;
  }
  if (args.n < 0) {
    err << "binet: index must be >= 0, got " << args.n << "\n";
    return kExitUsage;
  }

  DualQuaternion<QuadRat> closed = binet_dual_quat(kind, args.n);
  bool equal = true;
  DualQuaternion<QuadRat> lifted;
  if (args.compare) {
    lifted = lift_dual_quat(dual_quat(kind, args.n));
    equal = closed == lifted;
  }

  if (args.format == "json") {
    json doc{{"kind", std::string(to_string(kind))},
             {"n", args.n},
             {"binet", json{{"real", quadquat_json(closed.real)},
                            {"dual", quadquat_json(closed.dual)}}}};
    if (args.compare) {
      doc["recurrence"] = json{{"real", quadquat_json(lifted.real)},
                               {"dual", quadquat_json(lifted.dual)}};
      doc["equal"] = equal;
    }
    out << doc.dump() << "\n";
  } else {
    out << "kind: " << to_string(kind) << "\n";
    out << "n: " << args.n << "\n";
    out << "binet: real(" << quat_text(closed.real) << ") dual(" << quat_text(closed.dual)
        << ")\n";
    if (args.compare) {
      out << "recurrence: real(" << quat_text(lifted.real) << ") dual("
          << quat_text(lifted.dual) << ")\n";
      out << "equal: " << (equal ? "true" : "false") << "\n";
    }
  }
  return args.compare && !equal ? kExitExpectation : kExitOk;
}

}  // namespace fibdual::cli
