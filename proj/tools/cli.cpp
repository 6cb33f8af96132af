#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "symcheb/cltstats.hpp"
#include "symcheb/errors.hpp"
#include "symcheb/freegroup.hpp"
#include "symcheb/symcheb.hpp"

namespace symcheb::cli {
namespace {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& v) { return to_string(v); }

Json exponent_json(const ExponentVector& e) { return Json(e); }

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) throw UsageError("empty entry in list '" + text + "'");
    parts.push_back(item);
  }
  if (parts.empty()) throw UsageError("empty list");
  return parts;
}

void require_format(const std::string& format, std::initializer_list<std::string_view> allowed) {
  for (auto a : allowed) {
    if (format == a) return;
  }
  throw UsageError("unsupported --format '" + format + "' for this command");
}

std::string coeffs_report(ChebKind kind, unsigned n, const Rational& c, std::size_t k,
                          const std::string& format) {
  require_format(format, {"json", "csv", "text"});
  const LaurentPoly poly = build({kind, n, c, k});
  if (format == "text") return poly.serialize();
  if (format == "csv") {
    std::string out;
    for (std::size_t i = 0; i < k; ++i) out += "e" + std::to_string(i + 1) + ",";
    out += "coeff\n";
    for (const auto& [e, v] : poly.terms()) {
      for (int x : e) out += std::to_string(x) + ",";
      out += to_string(v) + "\n";
    }
    return out;
  }
  Json doc;
  doc["kind"] = to_string(kind);
  doc["n"] = n;
  doc["c"] = to_string(c);
  doc["k"] = k;
  Json terms = Json::array();
  for (const auto& [e, v] : poly.terms()) terms.push_back(Json{{"e", e}, {"coeff", to_string(v)}});
  doc["terms"] = std::move(terms);
  return doc.dump(2) + "\n";
}

std::string table_report(ChebKind kind, const Rational& c, unsigned n_max, const std::string& format) {
  require_format(format, {"json", "csv"});
  const UnivariateCoeffTable table = univariate_table(kind, c, n_max);
  const bool with_b = kind == ChebKind::First;
  if (format == "csv") {
    std::string out = with_b ? "n,j,a,b\n" : "n,j,a\n";
    for (long n = 0; n <= static_cast<long>(n_max); ++n) {
      for (long j = -n; j <= n; ++j) {
        out += std::to_string(n) + "," + std::to_string(j) + "," +
               to_string(UnivariateCoeffTable::at(table.a_rows, n, j));
        if (with_b) out += "," + to_string(UnivariateCoeffTable::at(table.b_rows, n, j));
        out += "\n";
      }
    }
    return out;
  }
  Json doc;
  doc["kind"] = to_string(kind);
  doc["c"] = to_string(c);
  Json rows = Json::array();
  for (std::size_t n = 0; n <= n_max; ++n) {
    Json row;
    row["n"] = n;
    Json a = Json::array();
    for (const auto& v : table.a_rows[n]) a.push_back(to_string(v));
    row["a"] = std::move(a);
    if (with_b) {
      Json b = Json::array();
      for (const auto& v : table.b_rows[n]) b.push_back(to_string(v));
      row["b"] = std::move(b);
    }
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string positivity_json(const PositivityReport& report) {
  Json doc;
  doc["all_nonnegative"] = report.all_nonnegative;
  doc["pattern_ok"] = report.pattern_ok ? Json(*report.pattern_ok) : Json(nullptr);
  doc["min_coefficient"] = rational_json(report.min_coefficient);
  doc["witness"] = report.witness ? exponent_json(*report.witness) : Json(nullptr);
  return doc.dump(2) + "\n";
}

std::string survey_report(const std::vector<SurveyRow>& rows, const std::string& format) {
  require_format(format, {"json", "csv"});
  if (format == "csv") {
    std::string out = "c,classification,witness_n,witness_exponent,witness_value\n";
    for (const auto& row : rows) {
      out += to_string(row.c) + "," + std::string(to_string(row.classification)) + ",";
      if (row.witness) {
        out += std::to_string(row.witness->n) + ",\"" + format_exponent(row.witness->exponent) + "\"," +
               to_string(row.witness->value);
      } else {
        out += ",,";
      }
      out += "\n";
    }
    return out;
  }
  Json doc = Json::array();
  for (const auto& row : rows) {
    Json item;
    item["c"] = to_string(row.c);
    item["classification"] = to_string(row.classification);
    if (row.witness) {
      item["witness"] = Json{{"n", row.witness->n},
                             {"exponent", row.witness->exponent},
                             {"value", to_string(row.witness->value)}};
    } else {
      item["witness"] = nullptr;
    }
    doc.push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

std::string fgverify_report(int r, int n) {
  const HomologyCountTable formula = counts_by_formula(r, n);
  const HomologyCountTable oracle = enumerate_counts(r, n, enumeration_budget_from_env());
  std::map<HomologyClass, std::pair<Integer, Integer>> diff;
  for (const auto& [e, v] : formula.counts) diff[e].first = v;
  for (const auto& [e, v] : oracle.counts) diff[e].second = v;
  std::string mismatches;
  for (const auto& [e, pair] : diff) {
    if (pair.first == pair.second) continue;
    mismatches += mismatches.empty() ? "\n" : ",\n";
    mismatches += "    {\"e\": " + format_exponent(e) + ", \"formula\": " + pair.first.get_str() +
                  ", \"oracle\": " + pair.second.get_str() + "}";
  }
  std::string out = "{\n  \"r\": " + std::to_string(r) + ",\n  \"n\": " + std::to_string(n) +
                    ",\n  \"status\": \"" + (formula == oracle ? "MATCH" : "MISMATCH") +
                    "\",\n  \"formula_total\": " + formula.total().get_str() +
                    ",\n  \"oracle_total\": " + oracle.total().get_str() +
                    ",\n  \"classes\": " + std::to_string(formula.counts.size()) +
                    ",\n  \"mismatches\": [" + mismatches + (mismatches.empty() ? "]" : "\n  ]") + "\n}\n";
  return out;
}

std::string convergence_json(const std::vector<ConvergenceRow>& rows) {
  Json doc = Json::array();
  for (const auto& row : rows) {
    Json item;
    item["n"] = row.n;
    item["m2_over_n"] = row.m2_over_n;
    item["kurtosis"] = row.kurtosis;
    item["max_offdiag"] = row.max_offdiag;
    item["dist_paper"] = row.dist_paper;
    item["dist_rederived"] = row.dist_rederived;
    if (row.exact_m2_over_n) item["exact_m2_over_n"] = to_string(*row.exact_m2_over_n);
    doc.push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

struct Options {
  std::string kind = "T";
  std::string c;
  std::string c_list;
  std::string n_list;
  std::string mode = "exact";
  std::string format;
  std::string out_path;
  unsigned n = 0;
  unsigned n_max = 0;
  std::size_t k = 1;
  int r = 2;
  int fg_r = 0;
  unsigned exact_cap = 0;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetrized Chebyshev polynomials: exact coefficients, sign structure, "
               "free-group word counts and coefficient distributions"};
  app.require_subcommand(1);
  Options opt;
  std::function<std::string()> action;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format (json, or csv for clt)");
    sub->add_option("--out", opt.out_path, "Write the report to PATH instead of stdout");
  };

  auto* coeffs = app.add_subcommand("coeffs", "Term list of R_n (kind T) or S_n (kind U)");
  coeffs->add_option("--kind", opt.kind, "T or U")->capture_default_str();
  coeffs->add_option("--n", opt.n, "Degree")->required();
  coeffs->add_option("--c", opt.c, "Parameter, p/q or integer")->required();
  coeffs->add_option("--k", opt.k, "Number of variables")->capture_default_str();
  coeffs->callback([&] {
    action = [&] { return coeffs_report(parse_cheb_kind(opt.kind), opt.n, parse_rational(opt.c), opt.k, opt.format); };
  });

  auto* table = app.add_subcommand("table", "Univariate coefficient table rows a_n^j (and b_n^j for T)");
  table->add_option("--kind", opt.kind, "T or U")->capture_default_str();
  table->add_option("--c", opt.c, "Parameter, p/q or integer")->required();
  table->add_option("--n-max", opt.n_max, "Last row")->required();
  table->callback([&] {
    action = [&] { return table_report(parse_cheb_kind(opt.kind), parse_rational(opt.c), opt.n_max, opt.format); };
  });

  auto* positivity = app.add_subcommand("positivity", "Sign scan of one R_n / S_n");
  positivity->add_option("--kind", opt.kind, "T or U")->capture_default_str();
  positivity->add_option("--n", opt.n, "Degree")->required();
  positivity->add_option("--c", opt.c, "Parameter, p/q or integer")->required();
  positivity->add_option("--k", opt.k, "Number of variables")->capture_default_str();
  positivity->callback([&] {
    action = [&] {
      require_format(opt.format, {"json"});
      return positivity_json(positivity_report({parse_cheb_kind(opt.kind), opt.n, parse_rational(opt.c), opt.k}));
    };
  });

  auto* survey = app.add_subcommand("sign-survey", "Classify coefficient signs over a grid of c");
  survey->add_option("--kind", opt.kind, "T or U")->capture_default_str();
  survey->add_option("--k", opt.k, "Number of variables")->capture_default_str();
  survey->add_option("--n-max", opt.n_max, "Largest degree scanned")->required();
  survey->add_option("--c", opt.c_list, "Comma-separated list of p/q values")->required();
  survey->callback([&] {
    action = [&] {
      std::vector<Rational> grid;
      for (const auto& item : split_list(opt.c_list)) grid.push_back(parse_rational(item));
      return survey_report(sign_survey(parse_cheb_kind(opt.kind), opt.k, opt.n_max, grid), opt.format);
    };
  });

  auto* fgcount = app.add_subcommand("fgcount", "Homology count table of cyclically reduced words (formula)");
  fgcount->add_option("--r", opt.r, "Rank of the free group")->required();
  fgcount->add_option("--n", opt.n, "Word length")->required();
  fgcount->callback([&] {
    action = [&] {
      require_format(opt.format, {"json"});
      return to_json(counts_by_formula(opt.r, static_cast<int>(opt.n))) + "\n";
    };
  });

  auto* fgverify = app.add_subcommand("fgverify", "Compare the formula table with brute-force enumeration");
  fgverify->add_option("--r", opt.r, "Rank of the free group")->required();
  fgverify->add_option("--n", opt.n, "Word length")->required();
  fgverify->callback([&] {
    action = [&] {
      require_format(opt.format, {"json"});
      return fgverify_report(opt.r, static_cast<int>(opt.n));
    };
  });

  auto* clt = app.add_subcommand("clt", "Variance and kurtosis of the coefficient distributions");
  clt->add_option("--c", opt.c, "Parameter; decimals accepted in float mode");
  clt->add_option("--k", opt.k, "Number of variables")->capture_default_str();
  clt->add_option("--fg-r", opt.fg_r, "Use the free-group count tables of rank R instead of --c/--k");
  clt->add_option("--n-list", opt.n_list, "Comma-separated increasing degrees")->required();
  clt->add_option("--mode", opt.mode, "exact or float")->capture_default_str();
  clt->add_option("--exact-cap", opt.exact_cap, "Raise the exact-mode ceiling on n");
  clt->callback([&] {
    action = [&] {
      require_format(opt.format, {"csv", "json"});
      ConvergenceMode mode;
      if (opt.mode == "exact") {
        mode = ConvergenceMode::Exact;
      } else if (opt.mode == "float") {
        mode = ConvergenceMode::FloatNormalized;
      } else {
        throw UsageError("--mode must be exact or float");
      }
      std::vector<unsigned> ns;
      for (const auto& item : split_list(opt.n_list)) {
        try {
          std::size_t used = 0;
          const long value = std::stol(item, &used);
          if (used != item.size() || value <= 0) throw std::invalid_argument(item);
          ns.push_back(static_cast<unsigned>(value));
        } catch (const std::logic_error&) {
          throw UsageError("bad entry in --n-list: '" + item + "'");
        }
      }
      ConvergenceOptions caps;
      if (opt.exact_cap) caps.exact_cap_k1 = caps.exact_cap_k2 = caps.exact_cap_higher = opt.exact_cap;
      std::vector<ConvergenceRow> rows;
      if (opt.fg_r) {
        rows = freegroup_convergence(opt.fg_r, ns, mode, caps);
      } else {
        if (opt.c.empty()) throw UsageError("clt requires --c (or --fg-r)");
        const Rational c = mode == ConvergenceMode::Exact ? parse_rational(opt.c)
                                                          : parse_rational_or_decimal(opt.c);
        rows = convergence_report(c, opt.k, ns, mode, caps);
      }
      return opt.format == "csv" ? to_csv(rows) : convergence_json(rows);
    };
  });

  for (auto* sub : {coeffs, table, positivity, survey, fgcount, fgverify, clt}) add_format(sub);

  std::vector<std::string> argv_storage{"symcheb_cli"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    if (opt.format.empty()) opt.format = clt->parsed() ? "csv" : "json";
    const std::string report = action();
    if (opt.out_path.empty()) {
      out << report;
    } else {
      std::ofstream file(opt.out_path, std::ios::binary);
      if (!file) throw UsageError("cannot open --out path '" + opt.out_path + "'");
      file << report;
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return kResourceError;
  }
}

}  // namespace symcheb::cli
