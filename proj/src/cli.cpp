#include "confarea/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "confarea/area.hpp"
#include "confarea/chebyshev.hpp"
#include "confarea/error.hpp"
#include "confarea/interpolation.hpp"
#include "confarea/json_io.hpp"
#include "confarea/regions.hpp"
#include "confarea/verify.hpp"

namespace confarea {

namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;
constexpr const char* kOutputDirEnv = "CONFAREA_OUTPUT_DIR";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0' && p.is_relative()) {
    p = std::filesystem::path(dir) / p;
  }
  return p;
}

// Writes `body` to --output when given, otherwise to `out`.
void emit(const RunConfig& config, const std::string& body, std::ostream& out) {
  if (!config.output_path) {
    out << body;
    return;
  }
  const auto path = resolve_output(*config.output_path);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write output file '" + path.string() + "'");
  file << body;
}

// Table in csv mode goes to the output; the JSON summary goes to --summary,
// else next to the output file, else to the diagnostic stream.
void emit_table_and_summary(const RunConfig& config, const std::string& csv, const json& summary,
                            const std::optional<std::string>& summary_path, std::ostream& out,
                            std::ostream& err) {
  emit(config, csv, out);
  const std::string text = summary.dump(2) + "\n";
  std::optional<std::string> target = summary_path;
  if (!target && config.output_path) target = *config.output_path + ".json";
  if (!target) {
    err << text;
    return;
  }
  const auto path = resolve_output(*target);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write summary file '" + path.string() + "'");
  file << text;
}

json config_json(const RunConfig& config) {
  json params = json::object();
  for (const auto& [k, v] : config.params) params[k] = v;
  return {{"command", config.command},
          {"params", params},
          {"format", config.output_format == OutputFormat::csv ? "csv" : "json"}};
}

// ---------------------------------------------------------------- area

struct AreaOptions {
  std::string region;
  double r = 1.0;
  std::optional<double> c;
  int m = 2;
  std::string tail_path;
  int trunc = 200;
  int order = 64;
  int nodes = 512;
  bool oracle = false;
};

int cmd_area(const AreaOptions& o, RunConfig config, std::ostream& out, std::ostream& err) {
  std::vector<AreaReport> reports;
  std::string params;
  auto fmt_param = [](const char* name, double v) { return std::string(name) + "=" + format_double(v); };

  if (o.region == "circle" || o.region == "ellipse" || o.region == "custom-tail") {
    if (o.region == "ellipse" && o.c) {
      const auto geom = EllipseGeometry::from_c(*o.c);
      params = fmt_param("c", *o.c);
      AreaReport closed{kPi * geom.a() * geom.b(), AreaMethod::closed_form, 0, 0.0, {}};
      reports.push_back(closed);
      if (o.oracle) {
        const std::vector<FormalSeries::Term> one{{0, Complex{1.0, 0.0}}};
        const auto f = FormalSeries::make(one, 0, 0);
        const int order = std::max(o.order, 8);
        const double q = bergman_inner_product(f, f, geom, order).real();
        reports.push_back({q, AreaMethod::quadrature, order, std::abs(q - closed.value), {}});
      }
    } else {
      if (!(o.r > 0.0)) throw UsageError("--r must be positive");
      LaurentTail tail;
      if (o.region == "circle") {
        tail = LaurentTail({0.0});
      } else if (o.region == "ellipse") {
        tail = LaurentTail({0.0, 1.0});
      } else {
        if (o.tail_path.empty()) throw UsageError("custom-tail requires --tail <file>");
        tail = read_tail_file(o.tail_path);
        params = "tail=" + o.tail_path + ";";
      }
      params += fmt_param("r", o.r);
      reports.push_back(gronwall_area(tail, o.r));
      if (o.region == "circle") {
        reports.push_back({kPi * o.r * o.r, AreaMethod::closed_form, 0, 0.0, {}});
      } else if (o.region == "ellipse") {
        const double a = o.r + 1.0 / o.r;
        const double b = o.r - 1.0 / o.r;
        reports.push_back({kPi * a * b, AreaMethod::closed_form, 0, 0.0, {}});
      }
      if (o.oracle) reports.push_back(gronwall_area_quadrature(tail, o.r, o.nodes));
    }
  } else if (o.region == "cardioid") {
    params = "scale=0.5";
    reports.push_back({3.0 * kPi / 8.0, AreaMethod::closed_form, 0, 0.0, {}});
    reports.push_back(cardioid_area(std::max(o.order, 8)));
  } else if (o.region == "lemniscate") {
    if (o.m < 1) throw UsageError("--m must be >= 1");
    if (o.trunc < 1) throw UsageError("--trunc must be >= 1");
    params = "m=" + std::to_string(o.m) + ";trunc=" + std::to_string(o.trunc);
    reports.push_back(lemniscate_area_series(o.m, o.trunc));
    reports.push_back(lemniscate_area_closed(o.m));
    if (o.oracle) reports.push_back(lemniscate_area_polar(o.m, std::max(o.order, 16)));
  }

  std::vector<double> max_dev(reports.size(), 0.0);
  json deviations = json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    for (std::size_t j = i + 1; j < reports.size(); ++j) {
      const double d = std::abs(reports[i].value - reports[j].value);
      max_dev[i] = std::max(max_dev[i], d);
      max_dev[j] = std::max(max_dev[j], d);
      deviations.push_back({{"a", to_string(reports[i].method)},
                            {"b", to_string(reports[j].method)},
                            {"abs", d}});
    }
  }

  if (config.output_format == OutputFormat::csv) {
    std::ostringstream csv;
    csv << "region,params,method,value,est_error,order,max_deviation\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      csv << o.region << ',' << csv_field(params) << ',' << to_string(reports[i].method) << ','
          << format_double(reports[i].value) << ',' << format_double(reports[i].est_error) << ','
          << reports[i].order << ',' << format_double(max_dev[i]) << '\n';
    }
    emit(config, csv.str(), out);
  } else {
    json doc = config_json(config);
    doc["region"] = o.region;
    doc["defaults"] = {{"trunc", o.trunc}, {"order", o.order}, {"nodes", o.nodes}, {"r", o.r}, {"m", o.m}};
    doc["reports"] = json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      json r = to_json(reports[i]);
      r["max_deviation"] = max_dev[i];
      doc["reports"].push_back(r);
    }
    doc["deviations"] = deviations;
    emit(config, doc.dump(2) + "\n", out);
  }
  for (const auto& r : reports) {
    for (const auto& w : r.warnings) err << "warning: " << w << '\n';
  }
  return exit_code::success;
}

// --------------------------------------------------------------- ortho

struct OrthoOptions {
  double c = 0.0;
  int nmax = 6;
  int order = 32;
  std::string family = "U";
  std::optional<std::string> summary;
};

int cmd_ortho(const OrthoOptions& o, RunConfig config, std::ostream& out, std::ostream& err) {
  if (!(o.c > 0.0)) throw UsageError("--c must be positive");
  if (o.nmax < 0 || o.nmax > 12) throw UsageError("--nmax must lie in [0, 12]");
  if (o.order < 8) throw UsageError("--order must be >= 8");
  const auto geom = EllipseGeometry::from_c(o.c);
  const auto family = o.family == "P" ? ChebyshevFamily::P : ChebyshevFamily::U;
  const auto gram = gram_matrix(family, o.nmax, geom, o.order);

  double max_off = 0.0;
  double max_off_rel = 0.0;
  double max_imag = 0.0;
  json diag_err = json::array();
  double max_diag_err = 0.0;
  for (int i = 0; i <= o.nmax; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const double gii = gram[ui][ui].real();
    const double expected = family == ChebyshevFamily::U ? bergman_norm_U(i, geom) : 1.0;
    const double e = std::abs(gii - expected) / expected;
    diag_err.push_back(e);
    max_diag_err = std::max(max_diag_err, e);
    for (int j = 0; j <= o.nmax; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      max_imag = std::max(max_imag, std::abs(gram[ui][uj].imag()));
      if (i == j) continue;
      max_off = std::max(max_off, std::abs(gram[ui][uj]));
      max_off_rel = std::max(max_off_rel,
                             std::abs(gram[ui][uj]) / std::sqrt(gii * gram[uj][uj].real()));
    }
  }
  json summary = config_json(config);
  summary["c"] = o.c;
  summary["nmax"] = o.nmax;
  summary["order"] = o.order;
  summary["family"] = o.family;
  summary["max_offdiag"] = max_off;
  summary["max_offdiag_relative"] = max_off_rel;
  summary["diag_rel_errors"] = diag_err;
  summary["max_diag_rel_error"] = max_diag_err;
  summary["max_imag"] = max_imag;

  if (config.output_format == OutputFormat::csv) {
    std::ostringstream csv;
    csv << "n";
    for (int j = 0; j <= o.nmax; ++j) csv << ',' << j;
    csv << '\n';
    for (int i = 0; i <= o.nmax; ++i) {
      csv << i;
      for (int j = 0; j <= o.nmax; ++j) {
        csv << ',' << format_double(gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].real());
      }
      csv << '\n';
    }
    emit_table_and_summary(config, csv.str(), summary, o.summary, out, err);
  } else {
    json matrix = json::array();
    for (const auto& row : gram) {
      json r = json::array();
      for (const auto& v : row) r.push_back(v.real());
      matrix.push_back(r);
    }
    summary["gram"] = matrix;
    emit(config, summary.dump(2) + "\n", out);
  }
  return exit_code::success;
}

// -------------------------------------------------------------- interp

struct InterpOptions {
  std::string func;
  int nmax = 24;
  int nmin = 4;
  std::string interval = "interior";
  std::optional<std::string> summary;
};

int cmd_interp(const InterpOptions& o, RunConfig config, std::ostream& out, std::ostream& err) {
  if (o.nmax < 6) throw UsageError("--nmax must be >= 6");
  if (o.nmin < 1 || o.nmin > o.nmax) throw UsageError("--nmin must lie in [1, nmax]");

  std::function<Complex(Complex)> fn;
  std::optional<Complex> singularity;
  if (o.func == "runge") {
    fn = [](Complex x) { return 1.0 / (x * x + 1.0); };
    singularity = Complex{0.0, 1.0};
  } else if (o.func == "inv-shift") {
    fn = [](Complex x) { return 1.0 / (x - 2.0); };
    singularity = Complex{2.0, 0.0};
  } else {
    fn = [](Complex x) { return std::exp(x); };
  }
  const double expected = singularity ? expected_log_R(*singularity) : INFINITY;
  // Entire functions are analytic inside every E_R; any R > 1 is valid metadata.
  const AnalyticSampler f(fn, singularity ? std::exp(expected) : 1e3);

  std::vector<double> pts;
  if (o.interval == "full") {
    for (int i = -100; i <= 100; ++i) pts.push_back(i / 100.0);
  } else {
    pts = default_eval_points();
  }
  std::vector<int> ns;
  for (int n = o.nmin; n <= o.nmax; ++n) ns.push_back(n);
  const auto curve = interpolation_error_curve(f, ns, pts);

  json summary = config_json(config);
  summary["func"] = o.func;
  summary["nmin"] = o.nmin;
  summary["nmax"] = o.nmax;
  summary["eval_points"] = {{"count", pts.size()}, {"lo", pts.front()}, {"hi", pts.back()}};
  summary["expected_logR"] = finite_or_null(expected);
  try {
    const auto fit = convergence_rate(curve);
    summary["fitted_logR"] = fit.log_R;
    summary["points_used"] = fit.points_used;
    summary["rel_dev"] =
        singularity ? json(std::abs(fit.log_R - expected) / expected) : json(nullptr);
  } catch (const InsufficientDataError&) {
    summary["fitted_logR"] = nullptr;
    summary["points_used"] = 0;
    summary["rel_dev"] = nullptr;
  }
  summary["final_error"] = curve.back().max_error;

  if (config.output_format == OutputFormat::csv) {
    std::ostringstream csv;
    csv << "n,max_error\n";
    for (const auto& p : curve) csv << p.n << ',' << format_double(p.max_error) << '\n';
    emit_table_and_summary(config, csv.str(), summary, o.summary, out, err);
  } else {
    summary["curve"] = json::array();
    for (const auto& p : curve) summary["curve"].push_back({{"n", p.n}, {"max_error", p.max_error}});
    emit(config, summary.dump(2) + "\n", out);
  }
  return exit_code::success;
}

// -------------------------------------------------------------- verify

int cmd_verify(const std::string& suite, const std::string& tail_path, RunConfig config,
               std::ostream& out) {
  std::optional<LaurentTail> tail;
  if (!tail_path.empty()) tail = read_tail_file(tail_path);
  const auto results = run_suite(suite, tail);
  bool all_pass = true;
  for (const auto& r : results) all_pass = all_pass && r.pass;

  if (config.output_format == OutputFormat::csv) {
    std::ostringstream csv;
    csv << "suite,check,residual,tolerance,pass\n";
    for (const auto& r : results) {
      csv << r.suite << ',' << csv_field(r.name) << ',' << format_double(r.residual) << ','
          << format_double(r.tolerance) << ',' << (r.pass ? "true" : "false") << '\n';
    }
    emit(config, csv.str(), out);
  } else {
    json doc = config_json(config);
    doc["suite"] = suite;
    doc["pass"] = all_pass;
    doc["checks"] = json::array();
    for (const auto& r : results) {
      doc["checks"].push_back({{"suite", r.suite},
                               {"name", r.name},
                               {"residual", finite_or_null(r.residual)},
                               {"tolerance", r.tolerance},
                               {"pass", r.pass}});
    }
    emit(config, doc.dump(2) + "\n", out);
  }
  return all_pass ? exit_code::success : exit_code::verification_failure;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conformal-area toolkit: closed forms cross-checked against quadrature", "confarea"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string output;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", output, "Write results to this path (default: stdout)");
  };

  AreaOptions area;
  auto* area_cmd = app.add_subcommand("area", "Area of a named region by every available method");
  area_cmd->add_option("--region", area.region, "Region name")
      ->required()
      ->check(CLI::IsMember({"circle", "ellipse", "cardioid", "lemniscate", "custom-tail"}));
  area_cmd->add_option("--r", area.r, "Radius of the circle |z| = r mapped by the exterior map");
  auto* c_opt = area_cmd->add_option("--c", "Ellipse with semi-axes cosh c, sinh c");
  area_cmd->add_option("--m", area.m, "Lemniscate leaf count");
  area_cmd->add_option("--tail", area.tail_path, "Laurent tail JSON file (custom-tail)");
  area_cmd->add_option("--trunc", area.trunc, "Series truncation");
  area_cmd->add_option("--order", area.order, "Quadrature order");
  area_cmd->add_option("--nodes", area.nodes, "Boundary samples for the Gronwall oracle");
  area_cmd->add_flag("--oracle", area.oracle, "Add the quadrature oracle row");

  OrthoOptions ortho;
  std::string ortho_summary;
  auto* ortho_cmd = app.add_subcommand("ortho", "Bergman Gram matrix of Chebyshev U_n on an ellipse");
  ortho_cmd->add_option("--c", ortho.c, "Ellipse parameter c > 0")->required();
  ortho_cmd->add_option("--nmax", ortho.nmax, "Largest degree (0..12)");
  ortho_cmd->add_option("--order", ortho.order, "Quadrature order (v nodes; u uses twice as many)");
  ortho_cmd->add_option("--family", ortho.family, "U or orthonormal P")->check(CLI::IsMember({"U", "P"}));
  ortho_cmd->add_option("--summary", ortho_summary, "JSON summary path in csv mode");

  InterpOptions interp;
  std::string interp_summary;
  auto* interp_cmd = app.add_subcommand("interp", "Interpolation error curve at the zeros of U_n");
  interp_cmd->add_option("--func", interp.func, "Test function")
      ->required()
      ->check(CLI::IsMember({"runge", "inv-shift", "exp"}));
  interp_cmd->add_option("--nmax", interp.nmax, "Largest node count (>= 6)");
  interp_cmd->add_option("--nmin", interp.nmin, "Smallest node count");
  interp_cmd->add_option("--interval", interp.interval, "Evaluation points")
      ->check(CLI::IsMember({"interior", "full"}));
  interp_cmd->add_option("--summary", interp_summary, "JSON summary path in csv mode");

  std::string suite;
  std::string verify_tail;
  auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite");
  verify_cmd->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--tail", verify_tail, "Laurent tail JSON file checked by the gronwall suite");

  // Only one subcommand parses, so the shared strings are unambiguous.
  for (auto* sub : {area_cmd, ortho_cmd, interp_cmd, verify_cmd}) add_common(sub);

  std::vector<std::string> storage{"confarea"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  format = "";
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::success : exit_code::usage;
  }

  RunConfig config;
  if (*area_cmd) config.command = "area";
  if (*ortho_cmd) config.command = "ortho";
  if (*interp_cmd) config.command = "interp";
  if (*verify_cmd) config.command = "verify";
  if (format.empty()) format = config.command == "verify" ? "json" : "csv";
  config.output_format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  if (!output.empty()) config.output_path = output;
  auto* selected = app.get_subcommands().front();
  for (const auto* opt : selected->get_options()) {
    if (opt->count() > 0 && opt->get_name() != "--help" && opt->get_name() != "--format" &&
        opt->get_name() != "--output") {
      config.params[opt->get_name()] = opt->as<std::string>();
    }
  }

  try {
    if (config.command == "area") {
      if (c_opt->count() > 0) area.c = c_opt->as<double>();
      return cmd_area(area, config, out, err);
    }
    if (config.command == "ortho") {
      if (!ortho_summary.empty()) ortho.summary = ortho_summary;
      return cmd_ortho(ortho, config, out, err);
    }
    if (config.command == "interp") {
      if (!interp_summary.empty()) interp.summary = interp_summary;
      return cmd_interp(interp, config, out, err);
    }
    return cmd_verify(suite, verify_tail, config, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_code::parse;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::usage;
  }
}

}  // namespace confarea
