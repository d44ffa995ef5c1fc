#include "lojinf/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "detail/seed.hpp"
#include "lojinf/analysis.hpp"
#include "lojinf/errors.hpp"
#include "lojinf/macaulay.hpp"
#include "lojinf/numeric.hpp"
#include "lojinf/parser.hpp"
#include "lojinf/pgcurve.hpp"
#include "lojinf/report.hpp"

namespace lojinf::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

AnalysisOptions analysis_options(const RunConfig& config) {
  AnalysisOptions options;
  options.seed = config.seed;
  options.pg.certificate_attempts = config.certificate_attempts;
  options.pg.resultant.max_matrix_size = config.matrix_size_cap;
  options.pg.grid_cap = config.grid_cap;
  return options;
}

std::vector<Rational> parse_rational_csv(const std::string& csv) {
  std::vector<Rational> values;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty entry in --w");
    Rational q;
    if (q.set_str(item.substr(b, e - b + 1), 10) != 0 || q.get_den() == 0)
      throw std::invalid_argument("invalid rational '" + item + "' in --w");
    q.canonicalize();
    values.push_back(q);
  }
  return values;
}

/// Wraps a command body, mapping exceptions to exit code 1.
template <typename Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

void print_json(std::ostream& out, const nlohmann::ordered_json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int cmd_analyze(const std::string& path, const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const PolyMap f = parse_system(read_file(path));
    const AnalysisReport report = analyze(f, analysis_options(config));
    if (config.format == OutputFormat::json)
      print_json(out, to_json(report));
    else
      out << to_text(report);
    if (!report.hypothesis_certified) {
      err << "hypothesis not certified: " << report.diagnostic << '\n';
      return static_cast<int>(kNotCertified);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_resultant(const std::string& path, const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SystemFile file = parse_system_file(read_file(path));
    if (file.polynomials.size() != file.variables.size())
      throw ArityError("a resultant needs as many forms as variables (" +
                       std::to_string(file.polynomials.size()) + " forms, " +
                       std::to_string(file.variables.size()) + " variables)");
    for (std::size_t i = 0; i < file.polynomials.size(); ++i) {
      const MultiPoly& p = file.polynomials[i];
      if (p.is_zero()) throw std::invalid_argument("form '" + file.names[i] + "' is zero");
      const unsigned d = p.total_degree().value();
      if (d == 0) throw std::invalid_argument("form '" + file.names[i] + "' is constant");
      for (const auto& [e, c] : p.terms()) {
        if (e.total_degree() == d) continue;
        const MultiPoly term = MultiPoly::monomial(e, c);
        throw std::invalid_argument("form '" + file.names[i] + "' is not homogeneous: term '" +
                                    to_string(term, file.variables) + "' has degree " +
                                    std::to_string(e.total_degree()) + ", expected " +
                                    std::to_string(d));
      }
    }
    ResultantOptions options;
    options.max_matrix_size = config.matrix_size_cap;
    const ResultantValue r = resultant(FormSystem(file.polynomials), options);
    if (config.format == OutputFormat::json) {
      nlohmann::ordered_json j;
      j["resultant"] = r.value.get_str();
      j["method"] = to_string(r.method);
      print_json(out, j);
    } else {
      out << "resultant: " << r.value.get_str() << '\n';
      out << "method:    " << to_string(r.method) << '\n';
    }
    return static_cast<int>(kOk);
  });
}

int cmd_verify(const std::string& path, const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const PolyMap f = parse_system(read_file(path));
    const AnalysisOptions options = analysis_options(config);
    const AnalysisReport report = analyze(f, options);
    if (!report.hypothesis_certified) {
      if (config.format == OutputFormat::json)
        print_json(out, {{"analysis", to_json(report)}});
      else
        out << to_text(report);
      err << "hypothesis not certified: " << report.diagnostic << '\n';
      return static_cast<int>(kNotCertified);
    }

    GrowthCheckOptions growth_options;
    growth_options.search.budget = config.samples_per_radius;
    const GrowthVerdict growth = verify_growth(f, report, config.radii, config.seed, std::nullopt,
                                               growth_options);

    RootEscapeVerdict escape;
    if (report.delta0 == 0) {
      escape.verdict = Verdict::skipped;
      escape.note = "delta0 = 0";
    } else if (pg_full_grid_size(f) > options.pg.grid_cap) {
      escape.verdict = Verdict::skipped;
      escape.delta = report.delta0;
      escape.note = "P_G interpolation grid above the cap";
    } else {
      const PGFull full = pg_full(f, report.certificate->g, options.pg);
      escape = verify_root_escape(full.poly, report.delta0, config.seed);
    }

    const bool ok = growth.verdict != Verdict::fail && escape.verdict != Verdict::fail;
    if (config.format == OutputFormat::json) {
      nlohmann::ordered_json j;
      j["analysis"] = to_json(report);
      j["growth"] = to_json(growth);
      j["root_escape"] = to_json(escape);
      j["ok"] = ok;
      print_json(out, j);
    } else {
      out << to_text(report);
      out << "growth:  " << to_string(growth.verdict) << " slope " << growth.profile.fitted_exponent
          << " (thm11 " << growth.thm11_bound << ", thm12 " << growth.thm12_bound
          << ", empirical C " << growth.profile.empirical_c << ")\n";
      out << "root escape: " << to_string(escape.verdict);
      if (escape.verdict != Verdict::skipped) out << " slope " << escape.profile.fitted_exponent;
      out << " (delta " << escape.delta << ")";
      if (!escape.note.empty()) out << " " << escape.note;
      out << '\n';
    }
    return static_cast<int>(ok ? kOk : kVerificationFailed);
  });
}

int cmd_pg(const std::string& path, const std::string& w_csv, const RunConfig& config,
           std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const PolyMap f = parse_system(read_file(path));
    const std::vector<Rational> w = parse_rational_csv(w_csv);
    if (w.size() != f.n())
      throw ArityError("--w has " + std::to_string(w.size()) + " entries, expected " +
                       std::to_string(f.n()));
    const AnalysisOptions options = analysis_options(config);
    std::optional<StarCertificate> cert;
    try {
      cert = choose_g(f, detail::mix_seed(config.seed, 1), options.pg);
    } catch (const CertificationError& e) {
      err << "hypothesis not certified: " << e.what() << '\n';
      return static_cast<int>(kNotCertified);
    }
    const PGSlice slice = pg_slice(f, cert->g, w, options.pg.resultant);
    if (config.format == OutputFormat::json) {
      nlohmann::ordered_json j = to_json(slice);
      j["certificate"] = to_json(*cert);
      print_json(out, j);
    } else {
      const std::vector<std::string> t{"T"};
      out << "G:     " << to_string(cert->g) << '\n';
      out << "P_G:   " << to_string(slice.poly_in_t, t) << '\n';
      out << "deg_T: " << to_string(slice.degree()) << '\n';
    }
    return static_cast<int>(kOk);
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric degree, zero-fiber multiplicity and growth exponents at infinity of polynomial maps"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "text";
  std::string file;
  std::string w_csv;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "system file")->required();
    sub->add_option("--seed", config.seed, "master seed for every random draw");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--attempts", config.certificate_attempts, "certificate draws per linear form")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-matrix", config.matrix_size_cap, "Macaulay matrix column limit")
        ->check(CLI::PositiveNumber);
    sub->add_option("--grid-cap", config.grid_cap, "P_G interpolation grid limit")
        ->check(CLI::PositiveNumber);
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "compute d(F), mu, delta0 and exponent bounds");
  add_common(analyze_cmd);
  auto* resultant_cmd = app.add_subcommand("resultant", "exact resultant of m forms in m variables");
  add_common(resultant_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "numeric growth and root-escape checks");
  add_common(verify_cmd);
  verify_cmd->add_option("--radii", config.radii, "sphere radii")->delimiter(',');
  verify_cmd->add_option("--samples", config.samples_per_radius, "samples per radius")
      ->check(CLI::PositiveNumber);
  auto* pg_cmd = app.add_subcommand("pg", "exact slice T -> P_G(w, T)");
  add_common(pg_cmd);
  pg_cmd->add_option("--w", w_csv, "comma-separated rationals")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? static_cast<int>(kOk) : static_cast<int>(kError);
  }
  config.format = format == "json" ? OutputFormat::json : OutputFormat::text;

  if (*analyze_cmd) return cmd_analyze(file, config, out, err);
  if (*resultant_cmd) return cmd_resultant(file, config, out, err);
  if (*verify_cmd) return cmd_verify(file, config, out, err);
  return cmd_pg(file, w_csv, config, out, err);
}

}  // namespace lojinf::cli
