#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <ostream>
#include <sstream>

#include "coxgrowth/catalog.hpp"
#include "coxgrowth/census.hpp"
#include "coxgrowth/classify.hpp"
#include "coxgrowth/geometric_oracle.hpp"
#include "coxgrowth/growth.hpp"
#include "coxgrowth/word_oracle.hpp"

namespace coxgrowth::cli {

namespace {

using nlohmann::ordered_json;

struct LoadedSystem {
  std::string source;
  CoxeterMatrix matrix;
};

LoadedSystem load_system(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return {arg, load_coxeter_file(arg)};
  if (const CatalogEntry* e = find_catalog_entry(arg)) return {"catalog:" + e->name, e->matrix};
  throw std::runtime_error("`" + arg + "` is neither a readable file nor a catalog name");
}

ordered_json coefficients_json(const std::vector<mpz_class>& c) {
  ordered_json a = ordered_json::array();
  // Big values become strings so no JSON reader loses precision.
  for (const auto& x : c) {
    if (x.fits_slong_p()) a.push_back(x.get_si());
    else a.push_back(x.get_str());
  }
  return a;
}

ordered_json rational_json(const RationalFunction& r) {
  return ordered_json{{"display", r.to_string()},
                      {"numerator", coefficients_json(r.numerator().coefficients())},
                      {"denominator", coefficients_json(r.denominator().coefficients())}};
}

class Report {
 public:
  Report(std::string command, const std::vector<std::string>& args) {
    doc_["tool"] = "coxgrowth";
    doc_["command"] = std::move(command);
    doc_["arguments"] = args;
  }

  void set_system(const LoadedSystem& s) {
    doc_["system"] = ordered_json{{"source", s.source},
                                  {"rank", s.matrix.rank()},
                                  {"type", classify(s.matrix, s.matrix.full_mask()).label()},
                                  {"matrix", serialize(s.matrix)}};
  }

  ordered_json& result() { return doc_["result"]; }

  void check(const std::string& name, bool passed, const std::string& detail = {}) {
    checks_.push_back(ordered_json{{"name", name}, {"passed", passed}, {"detail", detail}});
    all_passed_ = all_passed_ && passed;
    if (!passed) line("FAIL " + name + (detail.empty() ? "" : ": " + detail));
  }

  void line(const std::string& s) { text_ << s << "\n"; }

  int finish(bool json, std::ostream& out) {
    const int status = all_passed_ ? kExitPass : kExitFailure;
    doc_["checks"] = checks_;
    doc_["passed"] = all_passed_;
    doc_["exit_status"] = status;
    if (json) {
      out << doc_.dump(2) << "\n";
    } else {
      out << text_.str();
      if (!checks_.empty()) {
        std::size_t ok = 0;
        for (const auto& c : checks_) ok += c["passed"].get<bool>() ? 1 : 0;
        out << (all_passed_ ? "PASS" : "FAIL") << " (" << ok << "/" << checks_.size()
            << " checks)\n";
      }
    }
    return status;
  }

  int fail(const std::string& message, bool json, std::ostream& out, std::ostream& err) {
    doc_["error"] = message;
    doc_["checks"] = checks_;
    doc_["passed"] = false;
    doc_["exit_status"] = kExitFailure;
    if (json) out << doc_.dump(2) << "\n";
    err << "error: " << message << "\n";
    return kExitFailure;
  }

 private:
  ordered_json doc_;
  ordered_json checks_ = ordered_json::array();
  std::ostringstream text_;
  bool all_passed_ = true;
};

void cmd_growth(const LoadedSystem& sys, int series_n, Report& rep) {
  GrowthTable table(sys.matrix);
  const RationalFunction& w = table.full_series();
  rep.line("W(t) = " + w.to_string());
  rep.result()["growth"] = rational_json(w);
  if (series_n >= 0) {
    SeriesTruncation s = series_expand(w, series_n);
    rep.line("series: " + s.to_string());
    rep.result()["series"] = coefficients_json(s.coefficients);
  }
}

void cmd_verify(const LoadedSystem& sys, const std::string& which, Report& rep) {
  GrowthTable table(sys.matrix);
  std::vector<int> ids = which == "all" ? std::vector<int>{1, 2, 3, 4}
                                        : std::vector<int>{std::stoi(which)};
  ordered_json list = ordered_json::array();
  for (int id : ids) {
    IdentityReport r = verify_identity(table, id);
    ordered_json j{{"identity", id}, {"verdict", to_string(r.verdict)},
                   {"by_construction", r.by_construction}};
    std::string text = "identity " + std::to_string(id) + ": " + to_string(r.verdict);
    if (r.lhs) {
      j["lhs"] = r.lhs->to_string();
      j["rhs"] = r.rhs->to_string();
      text += "  lhs = " + r.lhs->to_string() + "  rhs = " + r.rhs->to_string();
    }
    if (r.by_construction) text += "  [by construction]";
    if (!r.note.empty()) {
      j["note"] = r.note;
      text += "  (" + r.note + ")";
    }
    rep.line(text);
    list.push_back(std::move(j));
    rep.check("identity " + std::to_string(id), r.verdict != Verdict::fails);
  }
  rep.result()["identities"] = std::move(list);
}

void cmd_chi(const LoadedSystem& sys, Report& rep) {
  const CoxeterMatrix& m = sys.matrix;
  auto spherical = spherical_subsets(m);
  ordered_json rows = ordered_json::array();
  rep.line("T\tchi_T\t1-chi(L_T)\t(-1)^|T| chi_T");
  for (SubsetMask t : spherical) {
    const long chi = chi_coefficient(spherical, t);
    const long one_minus = 1 - nerve_link(m, t).euler_characteristic();
    const long expected = sign_power(t.size()) * chi;
    rows.push_back(ordered_json{{"subset", t.to_string()},
                                {"chi_T", chi},
                                {"one_minus_link_euler", one_minus}});
    rep.line(t.to_string() + "\t" + std::to_string(chi) + "\t" + std::to_string(one_minus) +
             "\t" + std::to_string(expected));
    rep.check("link Euler characteristic " + t.to_string(), one_minus == expected);
  }
  rep.result()["spherical"] = std::move(rows);
}

SeriesTruncation expected_total(const CoxeterMatrix& m, ComplexKind kind, int n) {
  const int rank = m.rank();
  SeriesTruncation s{std::vector<mpz_class>(static_cast<std::size_t>(n) + 1)};
  if (kind == ComplexKind::tits) {
    s.coefficients[0] = sign_power(rank - 1);
    return s;
  }
  s.coefficients[0] = 1;
  FiniteTypeInfo whole = classify(m, m.full_mask());
  if (whole.finite && whole.longest_length <= n) {
    s.coefficients[static_cast<std::size_t>(whole.longest_length)] += sign_power(rank - 1);
  }
  return s;
}

void cmd_census(const LoadedSystem& sys, ComplexKind kind, int n, Report& rep) {
  const CoxeterMatrix& m = sys.matrix;
  ElementTable table = bfs_enumerate(m, n);
  auto records = enumerate_simplices(table, kind, n);
  SeriesTruncation total = chi_t_truncated(records, n);
  GrowthTable growth(m);

  rep.line(std::string(kind == ComplexKind::tits ? "chi^t" : "chi_t") + "(" + to_string(kind) +
           ") = " + total.to_string());
  rep.line("simplices: " + std::to_string(records.size()));

  ordered_json types = ordered_json::array();
  SeriesTruncation closed_sum{std::vector<mpz_class>(static_cast<std::size_t>(n) + 1)};
  for (SubsetMask t : valid_types(m, kind)) {
    TypeCensus tc = chi_t_by_type(records, growth, kind, t, n);
    for (std::size_t k = 0; k < closed_sum.coefficients.size(); ++k) {
      closed_sum.coefficients[k] += tc.closed_form.coefficients[k];
    }
    types.push_back(ordered_json{{"type", t.to_string()},
                                 {"census", coefficients_json(tc.census.coefficients)},
                                 {"closed_form", coefficients_json(tc.closed_form.coefficients)}});
    rep.check("type " + t.to_string() + " census matches closed form", tc.agrees(),
              tc.census.to_string() + " vs " + tc.closed_form.to_string());
  }
  rep.check("sum of closed forms equals census", closed_sum == total,
            closed_sum.to_string() + " vs " + total.to_string());
  SeriesTruncation expected = expected_total(m, kind, n);
  rep.check("total equals known value", total == expected,
            total.to_string() + " vs " + expected.to_string());

  rep.result()["complex"] = to_string(kind);
  rep.result()["max_length"] = n;
  rep.result()["coefficients"] = coefficients_json(total.coefficients);
  rep.result()["simplex_count"] = records.size();
  rep.result()["types"] = std::move(types);
}

void cmd_oracle(const LoadedSystem& sys, int n, bool cross, Report& rep) {
  const CoxeterMatrix& m = sys.matrix;
  ElementTable table = bfs_enumerate(m, n);
  auto sizes = table.sphere_sizes();
  std::string s = "[";
  for (std::size_t k = 0; k < sizes.size(); ++k) s += (k ? ", " : "") + std::to_string(sizes[k]);
  rep.line("spheres: " + s + "]");
  rep.result()["spheres"] = sizes;
  rep.result()["exhausted"] = table.exhausted();

  std::size_t nonspherical = 0;
  for (const auto& e : table.elements()) nonspherical += is_spherical(m, e.descents) ? 0 : 1;
  rep.check("descent sets spherical", nonspherical == 0,
            std::to_string(nonspherical) + " non-spherical");

  SeriesTruncation w = series_expand(GrowthTable(m).full_series(), n);
  bool match = true;
  for (int k = 0; k <= n; ++k) match = match && w.coefficients[static_cast<std::size_t>(k)] == sizes[static_cast<std::size_t>(k)];
  rep.check("growth series matches sphere sizes", match, w.to_string());

  if (table.exhausted()) {
    int top = n;
    while (top > 0 && sizes[static_cast<std::size_t>(top)] == 0) --top;
    bool palindrome = true;
    for (int k = 0; k <= top; ++k) {
      palindrome = palindrome && sizes[static_cast<std::size_t>(k)] == sizes[static_cast<std::size_t>(top - k)];
    }
    rep.check("histogram palindromic", palindrome);
  }
  if (cross) {
    CrossCheckReport cc = cross_check_oracles(table, n);
    std::string detail = cc.failures.empty() ? std::string() : cc.failures.front();
    rep.check("geometric representation agrees", cc.passed(), detail);
    rep.result()["geometric_spheres"] = cc.geometric_sizes;
  }
}

void cmd_catalog(bool self_test, Report& rep) {
  ordered_json list = ordered_json::array();
  for (const auto& e : catalog()) {
    std::string type = classify(e.matrix, e.matrix.full_mask()).label();
    rep.line(e.name + "\trank " + std::to_string(e.matrix.rank()) + "\t" + type + "\t" + e.description);
    list.push_back(ordered_json{{"name", e.name}, {"rank", e.matrix.rank()}, {"type", type},
                                {"description", e.description}});
    if (!self_test) continue;
    GrowthTable table(e.matrix);
    if (e.growth) {
      rep.check(e.name + " growth series", table.full_series().to_string() == *e.growth,
                table.full_series().to_string());
    }
    if (!e.spheres.empty()) {
      ElementTable oracle = bfs_enumerate(e.matrix, static_cast<int>(e.spheres.size()) - 1);
      rep.check(e.name + " sphere sizes", oracle.sphere_sizes() == e.spheres);
    }
    for (int id = 1; id <= 4; ++id) {
      rep.check(e.name + " identity " + std::to_string(id),
                verify_identity(table, id).verdict != Verdict::fails);
    }
  }
  rep.result()["entries"] = std::move(list);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact growth series of Coxeter groups and their recurrence identities",
               "coxgrowth"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit one structured JSON document");

  std::string system;
  int series_n = -1;
  auto* growth = app.add_subcommand("growth", "Growth series W(t) as a rational function");
  growth->add_option("system", system, ".cox file or catalog name")->required();
  growth->add_option("--series", series_n, "Also print the first N+1 coefficients")
      ->check(CLI::NonNegativeNumber);

  std::string identity = "all";
  auto* verify = app.add_subcommand("verify", "Check recurrence identities 1-4 exactly");
  verify->add_option("system", system, ".cox file or catalog name")->required();
  verify->add_option("--identity", identity, "1, 2, 3, 4 or all")
      ->check(CLI::IsMember({"1", "2", "3", "4", "all"}));

  auto* chi = app.add_subcommand("chi", "chi_T and link Euler characteristics per spherical T");
  chi->add_option("system", system, ".cox file or catalog name")->required();

  std::string complex_name;
  int max_length = 0;
  auto* census = app.add_subcommand("census", "Truncated Euler characteristic series of a complex");
  census->add_option("system", system, ".cox file or catalog name")->required();
  census->add_option("--complex", complex_name, "coxeter, davis or tits")
      ->required()
      ->check(CLI::IsMember({"coxeter", "davis", "tits"}));
  census->add_option("--max-length", max_length, "Truncation degree N")
      ->required()
      ->check(CLI::NonNegativeNumber);

  bool cross = false;
  auto* oracle = app.add_subcommand("oracle", "Brute-force sphere sizes by braid rewriting");
  oracle->add_option("system", system, ".cox file or catalog name")->required();
  oracle->add_option("--max-length", max_length, "Horizon N")->required()->check(CLI::NonNegativeNumber);
  oracle->add_flag("--cross-check", cross, "Compare with the numeric geometric representation");

  bool self_test = false;
  auto* cat = app.add_subcommand("catalog", "List built-in systems");
  cat->add_flag("--self-test", self_test, "Recompute and compare every stored expectation");

  std::vector<const char*> argv{"coxgrowth"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  Report rep(sub->get_name(), args);
  try {
    if (sub == cat) {
      cmd_catalog(self_test, rep);
      return rep.finish(json, out);
    }
    LoadedSystem sys = load_system(system);
    rep.set_system(sys);
    if (sub == growth) cmd_growth(sys, series_n, rep);
    else if (sub == verify) cmd_verify(sys, identity, rep);
    else if (sub == chi) cmd_chi(sys, rep);
    else if (sub == census) cmd_census(sys, parse_complex_kind(complex_name), max_length, rep);
    else if (sub == oracle) cmd_oracle(sys, max_length, cross, rep);
    return rep.finish(json, out);
  } catch (const std::exception& e) {
    return rep.fail(e.what(), json, out, err);
  }
}

}  // namespace coxgrowth::cli
