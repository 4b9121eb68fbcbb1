#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <ostream>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "humplab/combinat.hpp"
#include "humplab/errors.hpp"
#include "humplab/formulas.hpp"
#include "humplab/partitions.hpp"
#include "humplab/paths.hpp"
#include "humplab/verify.hpp"

namespace humplab::cli {
namespace {

using nlohmann::ordered_json;

// Hook sums by partition enumeration; p(n) grows too fast to go much higher
// for general (k, l).
constexpr int kPartitionCap = 60;
constexpr int kDefaultVerifyTo = 200;
constexpr int kDefaultVerifyEnum = 12;

enum class Format { Csv, Json, Table };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "table") return Format::Table;
  throw UsageError("unknown format '" + name + "' (expected csv, json or table)");
}

// --max-enum-n, else HUMPLAB_MAX_ENUM_N, else nothing.
std::optional<int> enum_cap_override(const std::optional<int>& flag) {
  if (flag) {
    if (*flag < 0) throw UsageError("--max-enum-n must be nonnegative");
    return flag;
  }
  const char* env = std::getenv(kMaxEnumEnv);
  if (env == nullptr || *env == '\0') return std::nullopt;
  int value = 0;
  const std::string_view text(env);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
    throw UsageError(std::string(kMaxEnumEnv) + " must be a nonnegative integer, got '" + env + "'");
  }
  return value;
}

paths::EnumerationCaps enumeration_caps(const std::optional<int>& flag) {
  const auto cap = enum_cap_override(flag);
  return cap ? paths::EnumerationCaps::uniform(*cap) : paths::EnumerationCaps{};
}

// Right-aligned columns, two spaces apart.
void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out << "  ";
      out << std::setw(static_cast<int>(width[c])) << cells[c];
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

// ---------------------------------------------------------------------------
// seq
// ---------------------------------------------------------------------------
struct SeqOptions {
  std::string name;
  std::vector<int> params;
  std::optional<int> from;
  int to = 0;
  std::string route;
  std::string format = "csv";
  std::optional<int> max_enum_n;
};

struct SequencePlan {
  std::function<Nat(int)> term;
  int first = 0;
  int cap = 0;
};

SequencePlan plan_hook_sum(const SeqOptions& o, const std::string& route) {
  if (o.params.size() != 2) throw UsageError("seq S needs two parameters: k l");
  const int k = o.params[0];
  const int l = o.params[1];
  if (k < 0 || l < 0) throw UsageError("seq S: k and l must be nonnegative");
  if (route.empty() || route == "enum") {
    return {[k, l](int n) { return partitions::hook_sum({k, l}, n); }, 0, kPartitionCap};
  }
  if (route != "closed") throw UsageError("seq S: unknown route '" + route + "' (expected enum or closed)");
  if (l == 0 && k >= 2 && k <= 5) {
    return {[k](int n) { return partitions::strip_sum_closed(k, n); }, 0, verify::kFormulaCap};
  }
  if (k == 1 && l == 1) return {partitions::s11_closed, 1, verify::kFormulaCap};
  // S(2,1;n) = S(1,2;n) by conjugation.
  if ((k == 2 && l == 1) || (k == 1 && l == 2)) return {partitions::s21_closed, 2, verify::kFormulaCap};
  throw UsageError("seq S " + std::to_string(k) + " " + std::to_string(l) + ": no closed form; use --route enum");
}

SequencePlan plan_counting(const SeqOptions& o, const paths::EnumerationCaps& caps) {
  using paths::FamilyKind;
  const std::string route = o.route.empty() ? "closed" : o.route;
  const bool is_catalan = o.name == "catalan";
  const FamilyKind family = is_catalan ? FamilyKind::Dyck : FamilyKind::Motzkin;
  if (route == "enum") {
    return {[family, caps](int n) { return paths::count_enumerated({family, n}, caps); }, 0,
            caps.for_family(family)};
  }
  if (route == "closed") {
    if (is_catalan) return {combinat::catalan, 0, verify::kFormulaCap};
    return {[](int n) { return partitions::strip_sum_closed(3, n); }, 0, verify::kFormulaCap};
  }
  if (route == "rec") {
    if (!is_catalan) return {combinat::motzkin, 0, verify::kFormulaCap};
    return {[](int n) {
              Nat v = n == 0 ? Nat(1) : Nat(0);
              for (int j = 1; j <= n; ++j) v += combinat::catalan(j - 1) * combinat::catalan(n - j);
              return v;
            },
            0, verify::kFormulaCap};
  }
  throw UsageError("seq " + o.name + ": unknown route '" + route + "' (expected closed, rec or enum)");
}

SequencePlan plan_sequence(const SeqOptions& o, const paths::EnumerationCaps& caps) {
  if (o.name == "S") return plan_hook_sum(o, o.route);
  if (!o.params.empty()) throw UsageError("seq " + o.name + " takes no parameters");
  if (o.name == "catalan" || o.name == "motzkin") return plan_counting(o, caps);

  const auto name = formulas::parse_sequence(o.name);
  if (!name) {
    throw UsageError("unknown sequence '" + o.name + "' (expected HC, HM, SD, SM, HS40, B, catalan, motzkin, S)");
  }
  formulas::SequenceSpec spec{*name, formulas::routes_for(*name).front()};
  if (!o.route.empty()) {
    const auto route = formulas::parse_route(o.route);
    if (!route || !formulas::has_route({*name, *route})) {
      std::string known;
      for (auto r : formulas::routes_for(*name)) known += (known.empty() ? "" : ", ") + std::string(formulas::route_name(r));
      throw UsageError("seq " + o.name + ": route '" + o.route + "' not available (routes: " + known + ")");
    }
    spec.route = *route;
  }
  int cap = verify::kFormulaCap;
  if (spec.route == formulas::Route::Enumeration) {
    switch (spec.name) {
      case formulas::Sequence::HC: cap = caps.dyck; break;
      case formulas::Sequence::HM: cap = caps.motzkin; break;
      case formulas::Sequence::SD: cap = caps.super_dyck; break;
      case formulas::Sequence::SM: cap = caps.super_motzkin; break;
      case formulas::Sequence::HS40: cap = caps.double_dyck; break;
      case formulas::Sequence::B: break;
    }
  }
  return {[spec, caps](int n) { return formulas::evaluate(spec, n, caps); }, formulas::first_index(spec), cap};
}

int cmd_seq(const SeqOptions& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  const auto caps = enumeration_caps(o.max_enum_n);
  const SequencePlan plan = plan_sequence(o, caps);
  const int from = o.from.value_or(plan.first);
  if (from < plan.first) {
    throw UsageError("seq " + o.name + ": --from " + std::to_string(from) + " is below the first index " +
                     std::to_string(plan.first) + " of this route");
  }
  if (o.to < from) throw UsageError("seq: --to must be >= --from");
  if (o.to > plan.cap) {
    throw CapExceeded("seq " + o.name + ": --to " + std::to_string(o.to) + " exceeds the cap " +
                      std::to_string(plan.cap) + " for this route");
  }

  std::vector<std::pair<int, Nat>> records;
  for (int n = from; n <= o.to; ++n) records.emplace_back(n, plan.term(n));

  switch (format) {
    case Format::Csv:
      out << "n,value\n";
      for (const auto& [n, v] : records) out << n << ',' << v << '\n';
      break;
    case Format::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& [n, v] : records) arr.push_back({{"n", n}, {"value", v.to_string()}});
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::Table: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& [n, v] : records) rows.push_back({std::to_string(n), v.to_string()});
      write_table(out, {"n", "value"}, rows);
      break;
    }
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------
struct VerifyOptions {
  std::string target;
  std::optional<int> from;
  std::optional<int> to;
  std::string format = "table";
  std::optional<int> max_enum_n;
  bool timing = false;
};

void write_reports(const std::vector<verify::IdentityReport>& reports, Format format, bool timing,
                   std::ostream& out) {
  switch (format) {
    case Format::Json:
      out << verify::to_json(reports, 2) << '\n';
      return;
    case Format::Csv:
      out << "id,lo,hi,pass,failures\n";
      for (const auto& r : reports) {
        out << r.id << ',' << r.lo << ',' << r.hi << ',' << (r.pass() ? "true" : "false") << ','
            << r.failures.size() << '\n';
      }
      break;
    case Format::Table: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : reports) {
        std::vector<std::string> row{r.pass() ? "PASS" : "FAIL", r.id,
                                     "[" + std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]",
                                     std::to_string(r.failures.size())};
        if (timing) {
          std::ostringstream ms;
          ms << std::fixed << std::setprecision(1) << r.elapsed.count();
          row.push_back(ms.str());
        }
        rows.push_back(std::move(row));
      }
      std::vector<std::string> header{"status", "id", "range", "failures"};
      if (timing) header.emplace_back("ms");
      write_table(out, header, rows);
      break;
    }
  }
  for (const auto& r : reports) {
    for (const auto& m : r.failures) {
      out << "mismatch " << r.id << " n=" << m.n << " lhs=" << m.lhs << " rhs=" << m.rhs << '\n';
    }
  }
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  const auto enum_cap = enum_cap_override(o.max_enum_n);
  std::vector<verify::IdentityReport> reports;

  if (o.target == "all") {
    const int hi_formula = o.to.value_or(kDefaultVerifyTo);
    const int hi_enum = enum_cap.value_or(kDefaultVerifyEnum);
    std::vector<verify::Identity> selected = verify::registry();
    if (o.from) {
      for (auto& id : selected) id.valid_from = std::max(id.valid_from, *o.from);
    }
    reports = verify::check_all(selected, hi_formula, std::min(hi_enum, hi_formula));
  } else {
    const verify::Identity* identity = verify::find(o.target);
    if (identity == nullptr) throw verify::UnknownIdentity("unknown identity '" + o.target + "'");
    const int lo = o.from.value_or(identity->valid_from);
    int hi = 0;
    if (o.to) {
      hi = *o.to;
    } else if (identity->kind == verify::RouteKind::Enumeration) {
      hi = std::min(identity->max_n, enum_cap.value_or(identity->max_n));
    } else {
      hi = std::min(identity->max_n, kDefaultVerifyTo);
    }
    reports.push_back(verify::check(*identity, lo, hi));
  }

  write_reports(reports, format, o.timing, out);
  const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass(); });
  return all_pass ? kSuccess : kIdentityViolation;
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------
struct EnumerateOptions {
  std::string family;
  int n = 0;
  bool with_humps = false;
  std::string format = "csv";
  std::optional<int> max_enum_n;
};

int cmd_enumerate(const EnumerateOptions& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  const auto kind = paths::parse_family(o.family);
  if (!kind) {
    throw UsageError("unknown family '" + o.family +
                     "' (expected dyck, motzkin, super-dyck, super-motzkin, double-dyck)");
  }
  const paths::PathFamily family{*kind, o.n};
  if (o.n < 0) throw UsageError("enumerate: n must be nonnegative");
  const auto caps = enumeration_caps(o.max_enum_n);
  if (o.n > caps.for_family(*kind)) {
    throw CapExceeded("enumerate: " + o.family + " n = " + std::to_string(o.n) + " exceeds the cap " +
                      std::to_string(caps.for_family(*kind)) + " (raise it with --max-enum-n)");
  }
  const bool humps_defined = !family.is_super();
  if (o.with_humps && !humps_defined) {
    throw UsageError("enumerate: humps are not defined for " + o.family + " paths");
  }

  std::uint64_t count = 0;
  std::uint64_t humps = 0;
  ordered_json json_paths = ordered_json::array();
  std::vector<std::vector<std::string>> rows;
  if (format == Format::Csv) out << (o.with_humps ? "path,humps\n" : "path\n");

  for (const paths::LatticePath& p : paths::enumerate(family)) {
    ++count;
    const std::size_t h = humps_defined ? paths::hump_count(p) : 0;
    humps += h;
    const std::string text = p.to_string();
    switch (format) {
      case Format::Csv:
        out << text;
        if (o.with_humps) out << ',' << h;
        out << '\n';
        break;
      case Format::Json: {
        ordered_json rec{{"path", text}};
        if (o.with_humps) rec["humps"] = h;
        json_paths.push_back(std::move(rec));
        break;
      }
      case Format::Table: {
        std::vector<std::string> row{text.empty() ? "(empty)" : text};
        if (o.with_humps) row.push_back(std::to_string(h));
        rows.push_back(std::move(row));
        break;
      }
    }
  }

  switch (format) {
    case Format::Csv:
      out << "# total paths=" << count;
      if (humps_defined) out << " humps=" << humps;
      out << '\n';
      break;
    case Format::Json: {
      ordered_json doc{{"family", o.family}, {"n", o.n}, {"paths", std::move(json_paths)},
                       {"total_paths", std::to_string(count)}};
      if (humps_defined) doc["total_humps"] = std::to_string(humps);
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Table: {
      std::vector<std::string> header{"path"};
      if (o.with_humps) header.emplace_back("humps");
      write_table(out, header, rows);
      out << "total: " << count << " paths";
      if (humps_defined) out << ", " << humps << " humps";
      out << '\n';
      break;
    }
  }
  return kSuccess;
}

int cmd_identities(std::ostream& out) {
  for (const auto& id : verify::registry()) {
    out << id.id << "  (n >= " << id.valid_from << ", cap " << id.max_n << ")  " << id.description << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"humplab: hump statistics of lattice paths and hook sums of standard Young tableaux"};
  app.name("humplab");
  app.require_subcommand(1);

  SeqOptions seq;
  auto* seq_cmd = app.add_subcommand("seq", "Print a sequence over a range of n");
  seq_cmd->add_option("name", seq.name, "HC, HM, SD, SM, HS40, B, catalan, motzkin or S")->required();
  seq_cmd->add_option("params", seq.params, "k l for S");
  seq_cmd->add_option("--from", seq.from, "First n (default: first valid index)");
  seq_cmd->add_option("--to", seq.to, "Last n")->required();
  seq_cmd->add_option("--route", seq.route, "closed, rec, enum (HS40 also: product)");
  seq_cmd->add_option("--format", seq.format, "csv, json or table")->capture_default_str();
  seq_cmd->add_option("--max-enum-n", seq.max_enum_n, "Enumeration cap for every family");

  VerifyOptions ver;
  auto* verify_cmd = app.add_subcommand("verify", "Check identities exactly over a range of n");
  verify_cmd->add_option("target", ver.target, "Identity id or 'all'")->required();
  verify_cmd->add_option("--from", ver.from, "First n (default: the identity's first valid index)");
  verify_cmd->add_option("--to", ver.to, "Last n (default 200, or the enumeration cap)");
  verify_cmd->add_option("--format", ver.format, "table, csv or json")->capture_default_str();
  verify_cmd->add_option("--max-enum-n", ver.max_enum_n, "Upper n for enumeration-backed identities");
  verify_cmd->add_flag("--timing", ver.timing, "Show per-identity elapsed time in table output");

  EnumerateOptions en;
  auto* enum_cmd = app.add_subcommand("enumerate", "List every path of a family as U/D/F strings");
  enum_cmd->add_option("family", en.family, "dyck, motzkin, super-dyck, super-motzkin, double-dyck")->required();
  enum_cmd->add_option("n", en.n, "Size parameter")->required();
  enum_cmd->add_flag("--with-humps", en.with_humps, "Print the hump count of each path");
  enum_cmd->add_option("--format", en.format, "csv, json or table")->capture_default_str();
  enum_cmd->add_option("--max-enum-n", en.max_enum_n, "Enumeration cap for every family");

  auto* ids_cmd = app.add_subcommand("identities", "List the registered identities");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (seq_cmd->parsed()) return cmd_seq(seq, out);
    if (verify_cmd->parsed()) return cmd_verify(ver, out);
    if (enum_cmd->parsed()) return cmd_enumerate(en, out);
    if (ids_cmd->parsed()) return cmd_identities(out);
  } catch (const UsageError& e) {
    err << "humplab: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "humplab: " << e.what() << '\n';
    return kUsageError;
  } catch (const CapExceeded& e) {
    err << "humplab: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConsistencyError& e) {
    err << "humplab: internal consistency check failed: " << e.what() << '\n';
    return kIdentityViolation;
  }
  return kUsageError;
}

}  // namespace humplab::cli
