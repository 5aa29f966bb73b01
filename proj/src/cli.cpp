#include "weilsurf/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "weilsurf/cache.hpp"
#include "weilsurf/oracle.hpp"

namespace weilsurf::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

numth::PrimePower parse_q(std::int64_t q) {
  if (q < 2) throw UsageError("q must be a prime power");
  const auto pp = numth::recognize_prime_power(q);
  if (!pp) throw UsageError("q must be a prime power");
  if (pp->q > kMaxEnumerationQ) throw UsageError("q must be at most 10000");
  return *pp;
}

gf::FieldPtr oracle_field(std::int64_t q, bool allow_stretch) {
  const auto pp = parse_q(q);
  if (!oracle::is_supported(q, allow_stretch)) {
    if (oracle::is_supported(q, true))
      throw UsageError("q = " + std::to_string(q) + " is in the stretch set; pass --allow-stretch");
    throw UsageError("q = " + std::to_string(q) + " is not supported by the oracle");
  }
  return gf::Field::make(pp.p, pp.m);
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::optional<std::filesystem::path> default_cache_dir() {
  if (const char* env = std::getenv("WEILSURF_CACHE_DIR"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

std::string bool_str(bool v) { return v ? "true" : "false"; }

void print_text(std::ostream& out, const OutputRecord& r) {
  out << "polynomial   x^4 + (" << r.a << ")x^3 + (" << r.b << ")x^2 + ("
      << numth::to_string(Int(r.a) * r.q) << ")x + " << r.q * r.q << " over F_" << r.q << " (p=" << r.p << ", m=" << r.m << ")\n";
  out << "shape        " << (r.shape_ok ? "ok" : "invalid") << "\n";
  out << "surface      " << r.surface;
  if (r.not_weil_reason) out << " (" << *r.not_weil_reason << ")";
  out << "\n";
  if (r.surface == "not_weil") return;
  out << "p-rank       " << *r.p_rank << "\n";
  out << "simple       " << bool_str(*r.simple) << "\n";
  if (r.split) out << "split        (x^2 - (" << r.split->s << ")x + q)(x^2 - (" << r.split->t << ")x + q)\n";
  out << "polarizable  " << bool_str(*r.principally_polarizable) << "\n";
  out << "jacobian     " << (*r.jacobian_exists ? "exists" : "none") << " (rule " << *r.jacobian_rule << ")\n";
}

bool keep(const Classification& c, const std::string& filter) {
  if (filter == "all") return true;
  if (filter == "not-weil") return !c.surface.valid();
  if (!c.jacobian) return false;
  return filter == "jacobian" ? c.jacobian->exists : !c.jacobian->exists;
}

int cmd_classify(std::int64_t q, std::int64_t a, std::int64_t b, const std::string& format,
                 std::ostream& out) {
  const auto pp = parse_q(q);
  const OutputRecord r = make_record(classify(WeilCandidate{pp, a, b}));
  if (format == "json")
    out << to_json(r).dump() << "\n";
  else
    print_text(out, r);
  return kOk;
}

int cmd_enumerate(std::int64_t q, const std::string& filter, const std::string& format, std::ostream& out) {
  const auto pp = parse_q(q);
  json rows = json::array();
  if (format == "csv") out << csv_header() << "\n";
  for (const WeilCandidate& c : enumerate_candidates(pp)) {
    const Classification cls = classify(c);
    if (!keep(cls, filter)) continue;
    const OutputRecord r = make_record(cls);
    if (format == "csv")
      out << csv_row(r) << "\n";
    else
      rows.push_back(to_json(r));
  }
  if (format == "json") out << rows.dump() << "\n";
  return kOk;
}

int cmd_crosscheck(std::int64_t q, const std::optional<std::string>& cache_dir, unsigned jobs,
                   bool allow_stretch, std::ostream& out) {
  const gf::FieldPtr field = oracle_field(q, allow_stretch);
  oracle::OracleOptions options;
  options.jobs = jobs;
  options.allow_stretch = allow_stretch;
  options.cache_dir = cache_dir ? std::optional<std::filesystem::path>(*cache_dir) : default_cache_dir();
  oracle::OracleReport report;
  try {
    report = oracle::crosscheck(field, options);
  } catch (const std::filesystem::filesystem_error& e) {
    throw std::ios_base::failure(e.what());
  }
  out << "field                " << field->describe() << "\n";
  out << "models enumerated    " << report.models << (report.from_cache ? " (from cache)" : "") << "\n";
  out << "candidates           " << report.candidates << "\n";
  out << "realized classes     " << report.realized.size() << "\n";
  out << "classifier positive  " << report.classifier_positive << "\n";
  out << "anomalies            " << report.anomalies.size() << "\n";
  for (const oracle::Anomaly& a : report.anomalies) {
    out << "  (a, b) = (" << a.candidate.a << ", " << a.candidate.b << "): classifier "
        << (a.classifier_says_jacobian ? "jacobian" : "no jacobian") << " [" << a.verdict << "], "
        << (a.realized ? "realized by " + std::to_string(a.models) + " models" : "not realized") << "\n";
  }
  return report.anomalies.empty() ? kOk : kAnomalies;
}

int cmd_oracle(std::int64_t q, const std::string& path, unsigned jobs, bool allow_stretch, std::ostream& out) {
  const gf::FieldPtr field = oracle_field(q, allow_stretch);
  const oracle::RealizedMap realized = oracle::compute_realized(field, jobs);
  cache::store(path, *field, realized.counts);
  out << "wrote " << realized.counts.size() << " realized classes (" << realized.models << " models) to "
      << path << "\n";
  return kOk;
}

int cmd_table(std::int64_t q, std::ostream& out) {
  const auto pp = parse_q(q);
  std::map<std::string, int> by_surface;
  std::map<std::string, int> by_rule;
  int valid = 0, jacobians = 0, simple = 0, polarizable = 0;
  const auto candidates = enumerate_candidates(pp);
  for (const WeilCandidate& c : candidates) {
    const Classification cls = classify(c);
    std::string key(to_string(cls.surface.kind));
    if (cls.surface.reason) key += " (" + std::string(to_string(*cls.surface.reason)) + ")";
    ++by_surface[key];
    if (!cls.surface.valid()) continue;
    ++valid;
    if (*cls.simple) ++simple;
    if (*cls.principally_polarizable) ++polarizable;
    if (cls.jacobian->exists)
      ++jacobians;
    else
      ++by_rule[std::string(to_string(cls.jacobian->rule))];
  }
  out << "q = " << pp.q << " (p = " << pp.p << ", m = " << pp.m << ")\n";
  out << "shape-valid candidates   " << candidates.size() << "\n";
  for (const auto& [k, n] : by_surface) out << "  " << k << ": " << n << "\n";
  out << "abelian surface classes  " << valid << " (" << simple << " simple, " << valid - simple << " split)\n";
  out << "principally polarizable  " << polarizable << "\n";
  out << "containing a Jacobian    " << jacobians << "\n";
  out << "without a Jacobian       " << valid - jacobians << "\n";
  for (const auto& [rule, n] : by_rule) out << "  " << rule << ": " << n << "\n";
  return kOk;
}

}  // namespace

OutputRecord make_record(const Classification& c) {
  OutputRecord r;
  r.q = c.candidate.q();
  r.p = c.candidate.p();
  r.m = c.candidate.m();
  r.a = c.candidate.a;
  r.b = c.candidate.b;
  r.shape_ok = c.shape_ok;
  r.surface = std::string(to_string(c.surface.kind));
  if (c.surface.reason) r.not_weil_reason = std::string(to_string(*c.surface.reason));
  r.p_rank = c.p_rank;
  r.simple = c.simple;
  r.split = c.split;
  r.principally_polarizable = c.principally_polarizable;
  if (c.jacobian) {
    r.jacobian_exists = c.jacobian->exists;
    r.jacobian_rule = std::string(to_string(c.jacobian->rule));
  }
  return r;
}

json to_json(const OutputRecord& r) {
  json j;
  j["q"] = r.q;
  j["p"] = r.p;
  j["m"] = r.m;
  j["a"] = r.a;
  j["b"] = r.b;
  j["shape_ok"] = r.shape_ok;
  j["surface"] = r.surface;
  if (r.not_weil_reason) j["not_weil_reason"] = *r.not_weil_reason;
  if (r.p_rank) j["p_rank"] = *r.p_rank;
  if (r.simple) j["simple"] = *r.simple;
  if (r.split) j["split"] = {{"s", r.split->s}, {"t", r.split->t}};
  if (r.principally_polarizable) j["principally_polarizable"] = *r.principally_polarizable;
  if (r.jacobian_exists) j["jacobian"] = {{"exists", *r.jacobian_exists}, {"rule", *r.jacobian_rule}};
  return j;
}

OutputRecord record_from_json(const json& j) {
  OutputRecord r;
  r.q = j.at("q").get<std::int64_t>();
  r.p = j.at("p").get<std::int64_t>();
  r.m = j.at("m").get<int>();
  r.a = j.at("a").get<std::int64_t>();
  r.b = j.at("b").get<std::int64_t>();
  r.shape_ok = j.at("shape_ok").get<bool>();
  r.surface = j.at("surface").get<std::string>();
  if (j.contains("not_weil_reason")) r.not_weil_reason = j["not_weil_reason"].get<std::string>();
  if (j.contains("p_rank")) r.p_rank = j["p_rank"].get<int>();
  if (j.contains("simple")) r.simple = j["simple"].get<bool>();
  if (j.contains("split")) r.split = SplitPair{j["split"].at("s").get<std::int64_t>(), j["split"].at("t").get<std::int64_t>()};
  if (j.contains("principally_polarizable")) r.principally_polarizable = j["principally_polarizable"].get<bool>();
  if (j.contains("jacobian")) {
    r.jacobian_exists = j["jacobian"].at("exists").get<bool>();
    r.jacobian_rule = j["jacobian"].at("rule").get<std::string>();
  }
  return r;
}

std::string csv_header() { return "q,a,b,surface,p_rank,simple,s,t,polarizable,jacobian,rule"; }

std::string csv_row(const OutputRecord& r) {
  std::ostringstream out;
  out << r.q << "," << r.a << "," << r.b << "," << r.surface << ",";
  if (r.p_rank) out << *r.p_rank;
  out << ",";
  if (r.simple) out << bool_str(*r.simple);
  out << ",";
  if (r.split) out << r.split->s;
  out << ",";
  if (r.split) out << r.split->t;
  out << ",";
  if (r.principally_polarizable) out << bool_str(*r.principally_polarizable);
  out << ",";
  if (r.jacobian_exists) out << bool_str(*r.jacobian_exists);
  out << ",";
  if (r.jacobian_rule) out << *r.jacobian_rule;
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weil polynomials of abelian surfaces and genus-2 Jacobians over finite fields", "weilsurf"};
  app.require_subcommand(1);

  std::int64_t q = 0, a = 0, b = 0;
  std::string format = "text";
  std::string enum_format = "csv";
  std::string filter = "all";
  std::optional<std::string> cache_dir;
  std::string out_path;
  unsigned jobs = default_jobs();
  bool allow_stretch = false;

  auto* classify_cmd = app.add_subcommand("classify", "Classify one candidate (a, b) over F_q");
  classify_cmd->add_option("--q", q, "Field size")->required();
  classify_cmd->add_option("--a", a, "Coefficient of x^3")->required();
  classify_cmd->add_option("--b", b, "Coefficient of x^2")->required();
  classify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every shape-valid candidate over F_q");
  enumerate_cmd->add_option("--q", q, "Field size")->required();
  enumerate_cmd->add_option("--filter", filter)->check(CLI::IsMember({"all", "jacobian", "no-jacobian", "not-weil"}));
  enumerate_cmd->add_option("--format", enum_format)->check(CLI::IsMember({"csv", "json"}));

  auto* crosscheck_cmd = app.add_subcommand("crosscheck", "Compare the classifier with exhaustive curve enumeration");
  crosscheck_cmd->add_option("--q", q, "Field size")->required();
  crosscheck_cmd->add_option("--cache-dir", cache_dir, "Directory for realized-map caches");
  crosscheck_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  crosscheck_cmd->add_flag("--allow-stretch", allow_stretch, "Permit q in {8, 11, 13}");

  auto* oracle_cmd = app.add_subcommand("oracle", "Write the realized map of F_q as JSON");
  oracle_cmd->add_option("--q", q, "Field size")->required();
  oracle_cmd->add_option("--out", out_path, "Output file")->required();
  oracle_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  oracle_cmd->add_flag("--allow-stretch", allow_stretch, "Permit q in {8, 11, 13}");

  auto* table_cmd = app.add_subcommand("table", "Summary of the census over F_q");
  table_cmd->add_option("--q", q, "Field size")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(q, a, b, format, out);
    if (*enumerate_cmd) return cmd_enumerate(q, filter, enum_format, out);
    if (*crosscheck_cmd) return cmd_crosscheck(q, cache_dir, jobs, allow_stretch, out);
    if (*oracle_cmd) return cmd_oracle(q, out_path, jobs, allow_stretch, out);
    if (*table_cmd) return cmd_table(q, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::ios_base::failure& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const std::runtime_error& e) {
    // Inconsistent point counts: the enumeration itself is untrustworthy.
    err << "oracle failure: " << e.what() << "\n";
    return kAnomalies;
  }
  return kUsage;
}

}  // namespace weilsurf::cli
