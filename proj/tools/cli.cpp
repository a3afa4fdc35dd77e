#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fstefan/errors.hpp"
#include "fstefan/halfline.hpp"
#include "fstefan/residual.hpp"
#include "fstefan/serialization.hpp"
#include "fstefan/special_functions.hpp"
#include "fstefan/stefan_solver.hpp"

namespace fstefan::cli {
namespace {

using nlohmann::json;

struct HelpRequested {
  std::string text;
  int status;
};

struct NumberOption {
  std::string name;
  bool required = false;
  std::optional<double> fallback;
};

struct CommandDef {
  Command command;
  std::string name;
  std::string description;
  std::vector<NumberOption> numbers;
  std::vector<std::string> lists;
  std::vector<std::pair<std::string, std::string>> choices;  // name, default
};

NumberOption req(std::string name) { return {std::move(name), true, std::nullopt}; }
NumberOption opt(std::string name) { return {std::move(name), false, std::nullopt}; }
NumberOption def(std::string name, double value) { return {std::move(name), false, value}; }

const std::vector<CommandDef>& command_defs() {
  static const std::vector<CommandDef> defs = {
      {Command::eval_wright, "eval-wright", "Evaluate W(z, rho, beta) at a list of z", {req("rho"), req("beta")}, {"z"}, {}},
      {Command::eval_mainardi, "eval-mainardi", "Evaluate M_nu(x) at a list of x", {req("nu")}, {"x"}, {}},
      {Command::solve_st1,
       "solve-st1",
       "Solve the temperature (u(0,t)=B) problem",
       {req("alpha"), req("B"), req("C"), def("lambda", 1.0), def("k", 1.0), def("t-lo", 0.1), def("t-hi", 2.0),
        def("nx", 101), def("nt", 101)},
       {},
       {}},
      {Command::solve_st2,
       "solve-st2",
       "Solve the flux (u_x(0,t)=-q t^(-alpha/2)) problem",
       {req("alpha"), req("q"), req("C"), def("lambda", 1.0), def("k", 1.0), def("t-lo", 0.1), def("t-hi", 2.0),
        def("nx", 101), def("nt", 101)},
       {},
       {}},
      {Command::equivalence,
       "equivalence",
       "Build the equivalent temperature problem for a flux problem and compare the solutions",
       {req("alpha"), req("q"), req("C"), def("lambda", 1.0), def("k", 1.0), def("nx", 50), def("nt", 10),
        def("t-lo", 0.1), def("t-hi", 2.0)},
       {},
       {}},
      {Command::sweep_alpha,
       "sweep-alpha",
       "Front coefficient versus alpha against the classical Neumann coefficient",
       {opt("B"), opt("q"), req("C"), def("lambda", 1.0), def("k", 1.0)},
       {"alphas"},
       {}},
      {Command::residual,
       "residual",
       "Grid residual of the governing equation for a solved problem",
       {req("alpha"), opt("B"), opt("q"), req("C"), def("lambda", 1.0), def("k", 1.0), def("nx", 32), def("nt", 32),
        def("t-lo", 0.1), def("t-hi", 2.0)},
       {},
       {{"problem", "st1"}}},
      {Command::greens_profile,
       "greens-profile",
       "Profiles of the fundamental solution and the half-line closed forms",
       {req("alpha"), def("lambda", 1.0), def("t", 1.0), def("f0", 1.0), opt("x-min"), opt("x-max"), def("n", 101)},
       {},
       {{"kind", "fundamental"}}},
  };
  return defs;
}

// ---- parameter access -------------------------------------------------------

double number(const RunConfig& config, const std::string& name) {
  const auto it = config.parameters.find(name);
  if (it == config.parameters.end()) {
    throw ValidationError("missing required parameter --" + name);
  }
  return it->second;
}

bool has(const RunConfig& config, const std::string& name) { return config.parameters.count(name) > 0; }

int count(const RunConfig& config, const std::string& name) {
  const double v = number(config, name);
  if (!(v >= 1.0) || v != std::floor(v) || v > 1e7) {
    throw ValidationError("--" + name + " must be a positive integer");
  }
  return static_cast<int>(v);
}

const std::vector<double>& list(const RunConfig& config, const std::string& name) {
  const auto it = config.lists.find(name);
  if (it == config.lists.end() || it->second.empty()) {
    throw ValidationError("missing required list --" + name);
  }
  return it->second;
}

std::string choice(const RunConfig& config, const std::string& name) {
  const auto it = config.choices.find(name);
  if (it == config.choices.end()) {
    throw ValidationError("missing --" + name);
  }
  return it->second;
}

special::SeriesSettings settings_for(const RunConfig& config) {
  special::SeriesSettings s = special::SeriesSettings::from_environment();
  if (config.tol_abs) {
    if (!(*config.tol_abs >= 0.0)) {
      throw ValidationError("--tol-abs must be non-negative");
    }
    s.tol_abs = *config.tol_abs;
  }
  if (config.tol_rel) {
    if (!(*config.tol_rel > 0.0 && *config.tol_rel < 1.0)) {
      throw ValidationError("--tol-rel must lie in (0, 1)");
    }
    s.tol_rel = *config.tol_rel;
  }
  if (config.max_terms) {
    if (*config.max_terms < 1) {
      throw ValidationError("--max-terms must be positive");
    }
    s.max_terms = *config.max_terms;
  }
  return s;
}

stefan::TemperatureProblem temperature_problem(const RunConfig& c) {
  return {FractionalOrder(number(c, "alpha")), number(c, "lambda"), number(c, "B"), number(c, "C"), number(c, "k")};
}

stefan::FluxProblem flux_problem(const RunConfig& c) {
  return {FractionalOrder(number(c, "alpha")), number(c, "lambda"), number(c, "q"), number(c, "C"), number(c, "k")};
}

// ---- command bodies ---------------------------------------------------------

json series_json(const special::SeriesValue& v) {
  return {{"value", v.value},
          {"abs_error_estimate", v.abs_error_estimate},
          {"rounding_error_estimate", v.rounding_error_estimate},
          {"terms_used", v.terms_used},
          {"converged", v.converged},
          {"method", v.method == special::Method::series ? "series" : "integral"}};
}

std::string series_table(const std::string& arg_name, const std::vector<double>& args, OutputFormat format,
                         const std::vector<std::pair<std::string, double>>& context,
                         const std::function<special::SeriesValue(double)>& eval) {
  json document = json::object();
  std::vector<std::string> header;
  for (const auto& [key, value] : context) {
    document[key] = value;
    header.push_back(key);
  }
  header.insert(header.end(), {arg_name, "value", "abs_error_estimate", "rounding_error_estimate", "terms_used",
                               "converged", "method"});
  io::CsvWriter csv(header);
  json points = json::array();
  for (const double a : args) {
    const special::SeriesValue v = eval(a);
    json p = series_json(v);
    p[arg_name] = a;
    points.push_back(p);
    std::vector<io::CsvWriter::Field> fields;
    for (const auto& [key, value] : context) {
      fields.emplace_back(value);
    }
    fields.emplace_back(a);
    fields.emplace_back(v.value);
    fields.emplace_back(v.abs_error_estimate);
    fields.emplace_back(v.rounding_error_estimate);
    fields.emplace_back(static_cast<long long>(v.terms_used));
    fields.emplace_back(static_cast<long long>(v.converged ? 1 : 0));
    fields.emplace_back(std::string(v.method == special::Method::series ? "series" : "integral"));
    csv.row(fields);
  }
  if (format == OutputFormat::csv) {
    return csv.str();
  }
  document["points"] = points;
  return document.dump(2) + "\n";
}

// 101 x 101 style dump of u over [0, s(t_hi)] x [t_lo, t_hi].
std::string profile_csv(const stefan::SimilaritySolution& sol, const RunConfig& c,
                        const special::SeriesSettings& settings) {
  const double t_lo = number(c, "t-lo");
  const double t_hi = number(c, "t-hi");
  const int nx = count(c, "nx");
  const int nt = count(c, "nt");
  if (!(t_lo > 0.0 && t_hi > t_lo) || nx < 2 || nt < 2) {
    throw ValidationError("profile grid needs 0 < t-lo < t-hi and nx, nt >= 2");
  }
  const double s_hi = stefan::front(sol, t_hi);
  io::CsvWriter csv({"t", "x", "s", "u", "in_domain"});
  for (int m = 0; m < nt; ++m) {
    const double t = t_lo + (t_hi - t_lo) * m / (nt - 1);
    const double s = stefan::front(sol, t);
    for (int i = 0; i < nx; ++i) {
      const double x = s_hi * i / (nx - 1);
      csv.row({t, x, s, stefan::evaluate_u(sol, x, t, settings), static_cast<long long>(x <= s ? 1 : 0)});
    }
  }
  return csv.str();
}

std::string single_row_csv(const json& object) {
  std::vector<std::string> header;
  std::vector<io::CsvWriter::Field> fields;
  for (const auto& [key, value] : object.items()) {
    if (value.is_structured()) {
      continue;
    }
    header.push_back(key);
    if (value.is_number_float()) {
      fields.emplace_back(value.get<double>());
    } else if (value.is_number_integer()) {
      fields.emplace_back(value.get<long long>());
    } else if (value.is_boolean()) {
      fields.emplace_back(static_cast<long long>(value.get<bool>() ? 1 : 0));
    } else {
      fields.emplace_back(value.is_string() ? value.get<std::string>() : value.dump());
    }
  }
  io::CsvWriter csv(header);
  csv.row(fields);
  return csv.str();
}

std::string greens_profile(const RunConfig& c, OutputFormat format, const special::SeriesSettings& settings) {
  const FractionalOrder alpha(number(c, "alpha"));
  const double lambda = number(c, "lambda");
  const double t = number(c, "t");
  const double f0 = number(c, "f0");
  const int n = count(c, "n");
  const std::string kind = choice(c, "kind");
  const double scale = lambda * std::pow(t, alpha.half());
  const bool whole_line = kind == "fundamental";
  const double x_max = has(c, "x-max") ? number(c, "x-max") : 5.0 * scale;
  const double x_min = has(c, "x-min") ? number(c, "x-min") : (whole_line ? -x_max : 0.0);
  if (!(x_max > x_min) || n < 2) {
    throw ValidationError("greens-profile needs x-max > x-min and n >= 2");
  }

  std::function<double(double)> value;
  std::function<double(double)> closed_form;
  if (kind == "fundamental") {
    value = [&](double x) { return halfline::fundamental_solution(x, t, alpha, lambda, settings); };
  } else if (kind == "zero-initial") {
    value = [&](double x) { return halfline::dirichlet_zero_constant_initial(f0, x, t, alpha, lambda, settings); };
  } else if (kind == "step-boundary") {
    value = [&](double x) { return halfline::dirichlet_step_boundary(f0, x, t, alpha, lambda, settings); };
  } else if (kind == "convolution") {
    const halfline::InitialData data = halfline::odd_step(f0);
    value = [&, data](double x) { return halfline::convolve_initial_data(data, x, t, alpha, lambda, {}, settings); };
    closed_form = [&](double x) {
      return halfline::dirichlet_zero_constant_initial(f0, x, t, alpha, lambda, settings);
    };
  } else {
    throw ValidationError("unknown --kind '" + kind + "' (fundamental, zero-initial, step-boundary, convolution)");
  }

  json points = json::array();
  std::vector<std::string> header{"x", "value"};
  if (closed_form) {
    header.insert(header.end(), {"closed_form", "abs_diff"});
  }
  io::CsvWriter csv(header);
  for (int i = 0; i < n; ++i) {
    const double x = x_min + (x_max - x_min) * i / (n - 1);
    const double v = value(x);
    if (closed_form) {
      const double ref = closed_form(x);
      csv.row({x, v, ref, std::abs(v - ref)});
      points.push_back({{"x", x}, {"value", v}, {"closed_form", ref}, {"abs_diff", std::abs(v - ref)}});
    } else {
      csv.row({x, v});
      points.push_back({{"x", x}, {"value", v}});
    }
  }
  if (format == OutputFormat::csv) {
    return csv.str();
  }
  return json{{"kind", kind}, {"alpha", alpha.value()}, {"lambda", lambda}, {"t", t}, {"points", points}}.dump(2) +
         "\n";
}

std::string execute(const RunConfig& c) {
  const special::SeriesSettings settings = settings_for(c);
  const bool table_command = c.command == Command::sweep_alpha || c.command == Command::greens_profile;
  const OutputFormat format = c.output_format.value_or(table_command ? OutputFormat::csv : OutputFormat::json);

  switch (c.command) {
    case Command::eval_wright: {
      const double rho = number(c, "rho");
      const double beta = number(c, "beta");
      return series_table("z", list(c, "z"), format, {{"rho", rho}, {"beta", beta}},
                          [&](double z) { return special::wright({z, rho, beta}, settings); });
    }
    case Command::eval_mainardi: {
      const double nu = number(c, "nu");
      return series_table("x", list(c, "x"), format, {{"nu", nu}},
                          [&](double x) { return special::mainardi(nu, x, settings); });
    }
    case Command::solve_st1:
    case Command::solve_st2: {
      const stefan::SimilaritySolution sol = c.command == Command::solve_st1
                                                 ? stefan::solve_st1(temperature_problem(c), settings)
                                                 : stefan::solve_st2(flux_problem(c), settings);
      if (format == OutputFormat::csv) {
        return profile_csv(sol, c, settings);
      }
      return io::to_json(sol).dump(2) + "\n";
    }
    case Command::equivalence: {
      const auto report = stefan::check_equivalence(flux_problem(c), count(c, "nx"), count(c, "nt"),
                                                    number(c, "t-lo"), number(c, "t-hi"), settings);
      const json j = io::to_json(report);
      return format == OutputFormat::csv ? single_row_csv(j) : j.dump(2) + "\n";
    }
    case Command::sweep_alpha: {
      const auto& alphas = list(c, "alphas");
      if (has(c, "B") == has(c, "q")) {
        throw ValidationError("sweep-alpha needs exactly one of --B (temperature) or --q (flux)");
      }
      // alpha in the base problem is a placeholder; every row overrides it.
      const FractionalOrder base(0.5);
      const stefan::SweepTable table =
          has(c, "B") ? stefan::alpha_sweep(stefan::TemperatureProblem{base, number(c, "lambda"), number(c, "B"),
                                                                       number(c, "C"), number(c, "k")},
                                            alphas, settings)
                      : stefan::alpha_sweep(stefan::FluxProblem{base, number(c, "lambda"), number(c, "q"),
                                                                number(c, "C"), number(c, "k")},
                                            alphas, settings);
      return format == OutputFormat::csv ? io::sweep_csv(table) : io::to_json(table).dump(2) + "\n";
    }
    case Command::residual: {
      const std::string problem = choice(c, "problem");
      stefan::SimilaritySolution sol;
      if (problem == "st1") {
        sol = stefan::solve_st1(temperature_problem(c), settings);
      } else if (problem == "st2") {
        sol = stefan::solve_st2(flux_problem(c), settings);
      } else {
        throw ValidationError("--problem must be st1 or st2");
      }
      const auto report = fractional::diffusion_residual(sol, count(c, "nx"), count(c, "nt"), number(c, "t-lo"),
                                                         number(c, "t-hi"), sol.lambda, settings);
      const json j = io::to_json(report);
      return format == OutputFormat::csv ? single_row_csv(j) : j.dump(2) + "\n";
    }
    case Command::greens_profile:
      return greens_profile(c, format, settings);
  }
  throw ValidationError("unhandled command");
}

void report_error(std::ostream& err, int status, const std::string& type, const std::string& message) {
  err << json{{"error", {{"status", status}, {"type", type}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

RunConfig parse_arguments(int argc, const char* const* argv) {
  CLI::App app{"Closed-form fractional Stefan problem solvers"};
  app.require_subcommand(1);

  std::string format_name;
  std::string output_path;
  double tol_abs = 0.0;
  double tol_rel = 0.0;
  int max_terms = 0;
  auto* format_opt = app.add_option("--format", format_name, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  auto* output_opt = app.add_option("--output,-o", output_path, "Write the artifact here instead of stdout");
  auto* tol_abs_opt = app.add_option("--tol-abs", tol_abs, "Series absolute tolerance");
  auto* tol_rel_opt = app.add_option("--tol-rel", tol_rel, "Series relative tolerance (overrides FRAC_STEFAN_TOL)");
  auto* max_terms_opt = app.add_option("--max-terms", max_terms, "Series hard term cap");

  struct Bound {
    const CommandDef* def;
    CLI::App* sub;
    std::map<std::string, double> numbers;
    std::map<std::string, CLI::Option*> number_opts;
    std::map<std::string, std::vector<double>> lists;
    std::map<std::string, std::string> choices;
  };
  std::vector<std::unique_ptr<Bound>> bound;
  for (const auto& def : command_defs()) {
    auto b = std::make_unique<Bound>();
    b->def = &def;
    b->sub = app.add_subcommand(def.name, def.description);
    b->sub->fallthrough();
    for (const auto& n : def.numbers) {
      auto* o = b->sub->add_option("--" + n.name, b->numbers[n.name]);
      if (n.required) {
        o->required();
      }
      if (n.fallback) {
        o->default_str(io::format_double(*n.fallback));
      }
      b->number_opts[n.name] = o;
    }
    for (const auto& l : def.lists) {
      b->sub->add_option("--" + l, b->lists[l], "comma-separated values")->delimiter(',')->required();
    }
    for (const auto& [name, fallback] : def.choices) {
      b->choices[name] = fallback;
      b->sub->add_option("--" + name, b->choices[name])->capture_default_str();
    }
    bound.push_back(std::move(b));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream help;
    app.exit(e, help, help);
    throw HelpRequested{help.str(), kExitOk};
  } catch (const CLI::ParseError& e) {
    throw ValidationError(e.what());
  }

  RunConfig config;
  for (const auto& b : bound) {
    if (!b->sub->parsed()) {
      continue;
    }
    config.command = b->def->command;
    for (const auto& n : b->def->numbers) {
      if (b->number_opts.at(n.name)->count() > 0) {
        config.parameters[n.name] = b->numbers.at(n.name);
      } else if (n.fallback) {
        config.parameters[n.name] = *n.fallback;
      }
    }
    config.lists = b->lists;
    config.choices = b->choices;
  }
  if (format_opt->count() > 0) {
    config.output_format = format_name == "csv" ? OutputFormat::csv : OutputFormat::json;
  }
  if (output_opt->count() > 0) {
    config.output_path = output_path;
  }
  if (tol_abs_opt->count() > 0) {
    config.tol_abs = tol_abs;
  }
  if (tol_rel_opt->count() > 0) {
    config.tol_rel = tol_rel;
  }
  if (max_terms_opt->count() > 0) {
    config.max_terms = max_terms;
  }
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const std::string artifact = execute(config);
    if (config.output_path) {
      std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
      if (!file || !(file << artifact) || !file.flush()) {
        report_error(err, kExitInternal, "io", "cannot write " + *config.output_path);
        return kExitInternal;
      }
    } else {
      out << artifact;
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    report_error(err, kExitValidation, "validation", e.what());
    return kExitValidation;
  } catch (const NumericalError& e) {
    report_error(err, kExitNumerical, "numerical", e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    report_error(err, kExitInternal, "internal", e.what());
    return kExitInternal;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_arguments(argc, argv);
  } catch (const HelpRequested& help) {
    out << help.text;
    return help.status;
  } catch (const ValidationError& e) {
    report_error(err, kExitValidation, "validation", e.what());
    return kExitValidation;
  }
  return run(config, out, err);
}

}  // namespace fstefan::cli
