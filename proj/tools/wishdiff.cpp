// Command-line driver. Data goes to --output as CSV (always with a header
// row) or JSON; optional JSON summaries go to --summary. Exit codes: 0 ok,
// 2 invalid arguments, 3 unsupported parameters, 4 internal failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wishdiff/asymptotic.hpp"
#include "wishdiff/errors.hpp"
#include "wishdiff/exact_spectral.hpp"
#include "wishdiff/helstrom.hpp"
#include "wishdiff/json_io.hpp"
#include "wishdiff/montecarlo.hpp"
#include "wishdiff/oracle.hpp"
#include "wishdiff/positivity.hpp"
#include "wishdiff/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace wishdiff;

// ---------------------------------------------------------------- output

struct OutputArgs {
  std::string path = "-";
  std::string format = "csv";
  std::string summary;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_number_float()) return format_number(v.get<double>());
  if (v.is_number()) return v.dump();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.get<std::string>();
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open output file '" + path + "'");
  out << text;
}

std::string render_csv(const Table& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << '\n';
  }
  return os.str();
}

json table_json(const Table& t) {
  json rows = json::array();
  for (const auto& r : t.rows) rows.push_back(r);
  return {{"columns", t.columns}, {"rows", rows}};
}

// Tabular commands: CSV data plus an optional summary file, or a single
// JSON document holding both.
void emit_table(const OutputArgs& o, const std::string& command, const json& parameters, const Table& t,
                const json& summary) {
  if (o.format == "json") {
    json doc = {{"command", command}, {"parameters", parameters}};
    doc.update(table_json(t));
    doc["summary"] = summary;
    write_text(o.path, doc.dump(2) + "\n");
  } else {
    write_text(o.path, render_csv(t));
  }
  if (!o.summary.empty()) write_text(o.summary, summary.dump(2) + "\n");
}

// Record-style commands: the JSON document is primary, CSV is a
// (quantity, exact, decimal) listing.
void emit_record(const OutputArgs& o, const json& doc, const Table& t) {
  if (o.format == "json") {
    write_text(o.path, doc.dump(2) + "\n");
  } else {
    write_text(o.path, render_csv(t));
  }
}

void add_output(CLI::App* sub, OutputArgs& o, const std::string& default_format) {
  o.format = default_format;
  sub->add_option("-o,--output", o.path, "Output path, '-' for stdout")->capture_default_str();
  sub->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void add_summary(CLI::App* sub, OutputArgs& o) {
  sub->add_option("--summary", o.summary, "Also write the JSON summary to this path");
}

void warn(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

json exact_value(const Rational& q) { return format_rational(q); }

// ---------------------------------------------------------------- arguments

struct EnsembleArgs {
  int n = 0;
  int n1 = 0;
  int n2 = 0;
  std::string a1 = "1";
  std::string a2 = "1";

  EnsembleParams params() const {
    EnsembleParams p{n, n1, n2, parse_rational(a1), parse_rational(a2)};
    p.validate();
    return p;
  }
};

void add_ensemble(CLI::App* sub, EnsembleArgs& e, bool required = true) {
  auto* n = sub->add_option("--n", e.n, "Matrix dimension");
  auto* n1 = sub->add_option("--n1", e.n1, "Degrees of freedom of W1");
  auto* n2 = sub->add_option("--n2", e.n2, "Degrees of freedom of W2");
  if (required) {
    n->required();
    n1->required();
    n2->required();
  }
  sub->add_option("--a1", e.a1, "Weight of W1 (p/q or integer)")->capture_default_str();
  sub->add_option("--a2", e.a2, "Weight of W2 (p/q or integer)")->capture_default_str();
}

json params_json(const EnsembleParams& p) {
  return {{"n", p.n}, {"n1", p.n1}, {"n2", p.n2}, {"a1", format_rational(p.a1)}, {"a2", format_rational(p.a2)}};
}

struct Grid {
  Rational lo;
  Rational hi;
  int steps = 0;
  std::vector<Rational> points() const {
    std::vector<Rational> out;
    out.reserve(steps);
    const Rational h = (hi - lo) / (steps - 1);
    for (int i = 0; i < steps; ++i) out.push_back(lo + i * h);
    return out;
  }
};

// "lo:hi:steps" with rational endpoints and steps >= 2 points.
Grid parse_grid(const std::string& spec) {
  const auto a = spec.find(':');
  const auto b = a == std::string::npos ? a : spec.find(':', a + 1);
  if (b == std::string::npos || spec.find(':', b + 1) != std::string::npos)
    throw DomainError("grid '" + spec + "' must have the form lo:hi:steps");
  Grid g{parse_rational(spec.substr(0, a)), parse_rational(spec.substr(a + 1, b - a - 1)), 0};
  const Rational steps = parse_rational(spec.substr(b + 1));
  if (steps.get_den() != 1 || steps < 2 || steps > 1000000)
    throw DomainError("grid steps must be an integer between 2 and 1000000");
  if (!(g.lo < g.hi)) throw DomainError("grid needs lo < hi");
  g.steps = static_cast<int>(steps.get_num().get_si());
  return g;
}

Grid grid_around(double lo, double hi, int steps) {
  const double pad = 0.05 * (hi - lo);
  return {to_rational(lo - pad), to_rational(hi + pad), steps};
}

Grid grid_or(const std::string& spec, double lo, double hi) {
  return spec.empty() ? grid_around(lo, hi, 201) : parse_grid(spec);
}

std::vector<Rational> parse_points(const std::string& list) {
  std::vector<Rational> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw DomainError("--points needs at least one value");
  return out;
}

int default_workers() {
  if (const char* env = std::getenv("WISHDIFF_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
    throw DomainError("WISHDIFF_WORKERS must be a positive integer");
  }
  return 1;
}

struct SimArgs {
  long long samples = 10000;
  std::uint64_t seed = 0;
  int bins = 40;
  int workers = 0;

  mc::SimulationOptions options() const {
    if (samples < 1) throw DomainError("--samples must be at least 1");
    if (bins < 1) throw DomainError("--bins must be at least 1");
    if (workers < 0) throw DomainError("--workers must be positive");
    mc::SimulationOptions o;
    o.matrices = static_cast<std::size_t>(samples);
    o.seed = seed;
    o.workers = workers > 0 ? workers : default_workers();
    return o;
  }
};

void add_sim(CLI::App* sub, SimArgs& s, bool samples_flag = true) {
  if (samples_flag) sub->add_option("--samples", s.samples, "Number of sampled matrices")->capture_default_str();
  sub->add_option("--seed", s.seed, "Random seed")->capture_default_str();
  sub->add_option("--bins", s.bins, "Histogram bins")->capture_default_str();
  sub->add_option("--workers", s.workers, "Worker threads (default: WISHDIFF_WORKERS or 1)");
}

// ---------------------------------------------------------------- helpers

Table histogram_table(const mc::Histogram& h) {
  Table t{{"lo", "hi", "count", "density"}, {}};
  for (std::size_t i = 0; i < h.counts.size(); ++i)
    t.rows.push_back({h.edges[i], h.edges[i + 1], h.counts[i], h.density(i)});
  return t;
}

// CDF of the asymptotic density by piecewise quadrature on a fixed node
// set, linearly interpolated in between.
std::function<double(double)> asymptotic_cdf(const AsymptoticModel& m) {
  const auto [lo, hi] = m.support();
  constexpr int kNodes = 400;
  auto xs = std::make_shared<std::vector<double>>(kNodes + 1);
  auto fs = std::make_shared<std::vector<double>>(kNodes + 1, 0.0);
  for (int i = 0; i <= kNodes; ++i) (*xs)[i] = lo + (hi - lo) * i / kNodes;
  for (int i = 1; i <= kNodes; ++i) (*fs)[i] = (*fs)[i - 1] + m.mass((*xs)[i - 1], (*xs)[i]);
  const double total = fs->back();
  return [xs, fs, total, lo, hi](double x) {
    if (x <= lo) return 0.0;
    if (x >= hi) return 1.0;
    const double u = (x - lo) / (hi - lo) * kNodes;
    const int i = std::min(static_cast<int>(u), kNodes - 1);
    const double t = u - i;
    return ((1 - t) * (*fs)[i] + t * (*fs)[i + 1]) / total;
  };
}

json asymptotic_summary(const AsymptoticModel& m) {
  return {{"support", {m.support().lo, m.support().hi}},
          {"quartic_roots", m.quartic_roots()},
          {"warnings", m.warnings()},
          {"c1", format_rational(m.c1())},
          {"c2", format_rational(m.c2())},
          {"alpha1", format_rational(m.alpha1())},
          {"alpha2", format_rational(m.alpha2())}};
}

Table asymptotic_table(const AsymptoticModel& m, const Grid& g) {
  Table t{{"x", "density"}, {}};
  for (const auto& x : g.points()) t.rows.push_back({to_double(x), to_double(m.density(to_bigfloat(x)))});
  return t;
}

// ---------------------------------------------------------------- commands

struct DensityArgs {
  EnsembleArgs e;
  std::string grid;
  bool oracle = false;
  bool exact_form = false;
  OutputArgs out;
};

void run_density(const DensityArgs& a) {
  const EnsembleParams p = a.e.params();
  const ExactEnsemble ens = ExactEnsemble::build(p);
  if (a.exact_form) {
    write_text(a.out.path, json({{"parameters", params_json(p)}, {"density", json_io::to_json(ens.density)}}).dump(2) +
                               "\n");
    return;
  }
  const auto support = exppoly::effective_support(ens.density, 1e-6);
  const Grid g = grid_or(a.grid, support.lo, support.hi);
  std::optional<QuadratureOracle> oracle;
  if (a.oracle) oracle.emplace(p);
  Table t{{"x", "density"}, {}};
  if (oracle) {
    t.columns.push_back("oracle");
    t.columns.push_back("rel_diff");
  }
  for (const auto& x : g.points()) {
    const BigFloat v = exppoly::evaluate(ens.density, x);
    std::vector<json> row{to_double(x), to_double(v)};
    if (oracle) {
      const BigFloat o = oracle->density(to_bigfloat(x));
      row.push_back(to_double(o));
      row.push_back(v == 0 ? to_double(abs(o)) : to_double(abs(o - v) / abs(v)));
    }
    t.rows.push_back(std::move(row));
  }
  const Rational pp = positivity::frac_positive(ens);
  json summary = {{"p_plus", exact_value(pp)}, {"p_minus", exact_value(1 - pp)}};
  emit_table(a.out, "density", params_json(p), t, summary);
}

struct WlawArgs {
  int n1 = 0;
  int n2 = 0;
  std::string a1 = "1";
  std::string a2 = "1";
  int deriv = 0;
  std::string grid;
  bool exact_form = false;
  OutputArgs out;
};

void run_wlaw(const WlawArgs& a) {
  EnsembleParams p{1, a.n1, a.n2, parse_rational(a.a1), parse_rational(a.a2)};
  p.validate();
  if (a.deriv < 0) throw DomainError("--deriv must be nonnegative");
  const int j = a.deriv + 1;
  const auto f = diagonal_law::build_ftilde(p, j);
  json parameters = {{"n1", p.n1}, {"n2", p.n2}, {"a1", format_rational(p.a1)}, {"a2", format_rational(p.a2)},
                     {"deriv", a.deriv}};
  if (a.exact_form) {
    write_text(a.out.path, json({{"parameters", parameters}, {"function", json_io::to_json(f)}}).dump(2) + "\n");
    return;
  }
  const auto support = exppoly::effective_support(diagonal_law::build_w(p), 1e-6);
  const Grid g = grid_or(a.grid, support.lo, support.hi);
  Table t{{"x", "value"}, {}};
  for (const auto& x : g.points()) t.rows.push_back({to_double(x), to_double(exppoly::evaluate(f, x))});
  json summary = {{"value_at_zero", exact_value(f.at_zero)}};
  if (j >= 2) summary["continuous_at_zero"] = diagonal_law::check_smoothness(p, j);
  emit_table(a.out, "wlaw", parameters, t, summary);
}

struct CorrelateArgs {
  EnsembleArgs e;
  std::string points;
  OutputArgs out;
};

void run_correlate(const CorrelateArgs& a) {
  const EnsembleParams p = a.e.params();
  const auto pts = parse_points(a.points);
  const SpectralKernel k = exact::build_kernel(p);
  std::vector<BigFloat> xs;
  json listed = json::array();
  for (const auto& x : pts) {
    xs.push_back(to_bigfloat(x));
    listed.push_back(format_rational(x));
  }
  const BigFloat r = exact::correlation(k, xs);
  Table t{{"r", "correlation"}, {{static_cast<int>(xs.size()), to_double(r)}}};
  emit_table(a.out, "correlate", params_json(p), t, {{"points", listed}, {"correlation", format_decimal(r)}});
}

struct AsymptoticArgs {
  EnsembleArgs e;
  std::string c1, c2, alpha1, alpha2;
  std::string grid;
  OutputArgs out;
};

void run_asymptotic(const AsymptoticArgs& a) {
  const bool scaled = !a.c1.empty() || !a.c2.empty() || !a.alpha1.empty() || !a.alpha2.empty();
  std::optional<AsymptoticModel> model;
  json parameters;
  if (scaled) {
    if (a.c1.empty() || a.c2.empty() || a.alpha1.empty() || a.alpha2.empty())
      throw DomainError("--c1, --c2, --alpha1 and --alpha2 must be given together");
    if (a.e.n != 0 || a.e.n1 != 0 || a.e.n2 != 0)
      throw DomainError("give either --n/--n1/--n2 or --c1/--c2/--alpha1/--alpha2, not both");
    model.emplace(parse_rational(a.c1), parse_rational(a.c2), parse_rational(a.alpha1), parse_rational(a.alpha2));
    parameters = {{"c1", a.c1}, {"c2", a.c2}, {"alpha1", a.alpha1}, {"alpha2", a.alpha2}};
  } else {
    const EnsembleParams p = a.e.params();
    model.emplace(AsymptoticModel::from_unscaled(p));
    parameters = params_json(p);
  }
  warn(model->warnings());
  const Grid g = grid_or(a.grid, model->support().lo, model->support().hi);
  emit_table(a.out, "asymptotic", parameters, asymptotic_table(*model, g), asymptotic_summary(*model));
}

struct SimulateArgs {
  EnsembleArgs e;
  SimArgs sim;
  bool density_matrices = false;
  OutputArgs out;
};

void run_simulate(const SimulateArgs& a) {
  const mc::SimulationOptions opt = a.sim.options();
  json parameters;
  json summary;
  std::optional<mc::EmpiricalSpectrum> spectrum;
  std::optional<AsymptoticModel> model;
  std::vector<std::string> warnings;
  json ks_exact = nullptr;

  if (a.density_matrices) {
    const int n = a.e.n, n1 = a.e.n1, n2 = a.e.n2;
    if (n < 1 || n1 < n || n2 < n) throw DomainError("need 1 <= n <= n1, n2");
    parameters = {{"n", n}, {"n1", n1}, {"n2", n2}, {"density_matrices", true}};
    spectrum.emplace(mc::simulate_helstrom(n, n1, n2, opt));
    if (helstrom::find_fixture(n, std::min(n1, n2), std::max(n1, n2)) != nullptr)
      ks_exact = mc::ks_distance(*spectrum, [&](double x) { return helstrom::fixture_cdf(n, n1, n2, x); });
    try {
      auto mapped = helstrom::helstrom_asymptotic(n, n1, n2);
      warnings = mapped.warnings;
      model.emplace(std::move(mapped.model));
    } catch (const DomainError& e) {
      warnings.push_back(std::string("no asymptotic comparison: ") + e.what());
    }
  } else {
    const EnsembleParams p = a.e.params();
    parameters = params_json(p);
    spectrum.emplace(mc::simulate_wishart_diff(p, opt));
    if (p.n <= 6) {
      const exppoly::CumulativeEvaluator cdf(exact::density(p));
      ks_exact = mc::ks_distance(*spectrum, [&](double x) { return cdf(x); });
    }
    try {
      model.emplace(AsymptoticModel::from_unscaled(p));
      warnings = model->warnings();
    } catch (const DomainError& e) {
      warnings.push_back(std::string("no asymptotic comparison: ") + e.what());
    }
  }
  warn(warnings);
  parameters["samples"] = a.sim.samples;
  parameters["seed"] = a.sim.seed;
  parameters["bins"] = a.sim.bins;

  summary = {{"matrices", a.sim.samples},
             {"eigenvalues", spectrum->size()},
             {"mean", spectrum->mean()},
             {"variance", spectrum->size() > 1 ? json(spectrum->variance()) : json(nullptr)},
             {"ks_vs_exact", ks_exact},
             {"ks_vs_asymptotic", model ? json(mc::ks_distance(*spectrum, asymptotic_cdf(*model))) : json(nullptr)}};
  emit_table(a.out, "simulate", parameters, histogram_table(spectrum->histogram(a.sim.bins)), summary);
}

struct RecordArgs {
  EnsembleArgs e;
  int gamma_max = 2;
  OutputArgs out;
};

void run_positivity(const RecordArgs& a) {
  const EnsembleParams p = a.e.params();
  const PositivityReport r = positivity::report(p);
  const std::pair<const char*, const Rational*> items[] = {
      {"P_plus", &r.p_all_pos}, {"P_minus", &r.p_all_neg}, {"p_plus", &r.frac_pos}, {"p_minus", &r.frac_neg}};
  json doc = {{"command", "positivity"}, {"parameters", params_json(p)}};
  json decimal = json::object();
  Table t{{"quantity", "exact", "decimal"}, {}};
  for (const auto& [name, value] : items) {
    doc[name] = format_rational(*value);
    decimal[name] = format_decimal(*value);
    t.rows.push_back({name, format_rational(*value), format_decimal(*value)});
  }
  doc["decimal"] = decimal;
  emit_record(a.out, doc, t);
}

void run_moments(const RecordArgs& a) {
  const EnsembleParams p = a.e.params();
  if (a.gamma_max < 1 || a.gamma_max > positivity::kDefaultGammaCap)
    throw DomainError("--gamma-max must be between 1 and " + std::to_string(positivity::kDefaultGammaCap));
  const ExactEnsemble e = ExactEnsemble::build(p, a.gamma_max);
  json list = json::array();
  Table t{{"gamma", "moment", "moment_decimal", "abs_moment", "abs_moment_decimal"}, {}};
  for (int g = 1; g <= a.gamma_max; ++g) {
    const Rational m = positivity::moment(e, g);
    const Rational am = positivity::abs_moment(e, g);
    list.push_back({{"gamma", g},
                    {"moment", format_rational(m)},
                    {"moment_decimal", format_decimal(m)},
                    {"abs_moment", format_rational(am)},
                    {"abs_moment_decimal", format_decimal(am)}});
    t.rows.push_back({g, format_rational(m), format_decimal(m), format_rational(am), format_decimal(am)});
  }
  emit_record(a.out, {{"command", "moments"}, {"parameters", params_json(p)}, {"moments", list}}, t);
}

struct HelstromArgs {
  int n = 0, n1 = 0, n2 = 0;
  std::string grid;
  long long simulate = 0;
  bool asymptotic = false;
  SimArgs sim;
  OutputArgs out;
};

void run_helstrom(const HelstromArgs& a) {
  if (a.n < 1 || a.n1 < a.n || a.n2 < a.n) throw DomainError("need 1 <= n <= n1, n2");
  json parameters = {{"n", a.n}, {"n1", a.n1}, {"n2", a.n2}};
  const bool tabulated = helstrom::find_fixture(a.n, std::min(a.n1, a.n2), std::max(a.n1, a.n2)) != nullptr;
  const json abs_mean = tabulated ? json(format_rational(helstrom::abs_mean(a.n, a.n1, a.n2))) : json(nullptr);

  if (a.simulate > 0) {
    SimArgs s = a.sim;
    s.samples = a.simulate;
    const auto spectrum = mc::simulate_helstrom(a.n, a.n1, a.n2, s.options());
    double abs_sum = 0;
    for (double x : spectrum.samples()) abs_sum += std::abs(x);
    json summary = {{"backend", "mc"},
                    {"abs_mean", abs_mean},
                    {"abs_mean_estimate", abs_sum / static_cast<double>(spectrum.size())},
                    {"mean", spectrum.mean()},
                    {"eigenvalues", spectrum.size()}};
    if (tabulated)
      summary["ks_vs_exact"] =
          mc::ks_distance(spectrum, [&](double x) { return helstrom::fixture_cdf(a.n, a.n1, a.n2, x); });
    parameters["samples"] = a.simulate;
    parameters["seed"] = a.sim.seed;
    emit_table(a.out, "helstrom", parameters, histogram_table(spectrum.histogram(a.sim.bins, -1, 1)), summary);
    return;
  }
  if (a.asymptotic) {
    const auto mapped = helstrom::helstrom_asymptotic(a.n, a.n1, a.n2);
    warn(mapped.warnings);
    const Grid g = grid_or(a.grid, mapped.model.support().lo, mapped.model.support().hi);
    json summary = asymptotic_summary(mapped.model);
    summary["backend"] = "asymptotic";
    summary["abs_mean"] = abs_mean;
    summary["warnings"] = mapped.warnings;
    emit_table(a.out, "helstrom", parameters, asymptotic_table(mapped.model, g), summary);
    return;
  }
  if (!tabulated) {
    throw UnsupportedParameters("no exact density for (n, n1, n2) = (" + std::to_string(a.n) + ", " +
                                std::to_string(a.n1) + ", " + std::to_string(a.n2) +
                                "); use --simulate N or --asymptotic");
  }
  const Grid g = a.grid.empty() ? Grid{-1, 1, 201} : parse_grid(a.grid);
  Table t{{"x", "density"}, {}};
  for (const auto& x : g.points())
    t.rows.push_back({to_double(x), to_double(helstrom::fixture_density(a.n, a.n1, a.n2, x))});
  const Rational pp = helstrom::positivity_fraction_sigma(a.n, a.n1, a.n2);
  json summary = {{"backend", "fixture"}, {"abs_mean", abs_mean}, {"p_plus", format_rational(pp)}};
  emit_table(a.out, "helstrom", parameters, t, summary);
}

struct VerifyArgs {
  EnsembleArgs e;
  OutputArgs out;
};

// Returns false when any identity fails.
bool run_verify(const VerifyArgs& a) {
  const EnsembleParams p = a.e.params();
  auto checks = verify::ensemble_identities(p);
  for (auto& c : verify::global_identities()) checks.push_back(std::move(c));
  bool all = true;
  for (const auto& c : checks) all = all && c.pass;
  if (a.out.format == "json") {
    json list = json::array();
    for (const auto& c : checks) list.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    write_text(a.out.path, json({{"command", "verify"}, {"parameters", params_json(p)}, {"checks", list},
                                 {"all_pass", all}})
                                   .dump(2) +
                               "\n");
  } else {
    std::ostringstream os;
    for (const auto& c : checks) {
      os << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.pass) os << ": " << c.detail;
      os << '\n';
    }
    write_text(a.out.path, os.str());
  }
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral statistics of weighted Wishart differences and random Helstrom matrices"};
  app.require_subcommand(1);

  DensityArgs density;
  auto* c_density = app.add_subcommand("density", "Exact finite-n eigenvalue density");
  add_ensemble(c_density, density.e);
  c_density->add_option("--grid", density.grid, "lo:hi:steps");
  c_density->add_flag("--oracle", density.oracle, "Add the independent floating-point oracle column");
  c_density->add_flag("--exact-form", density.exact_form, "Emit the density as exact exp-polynomial JSON");
  add_output(c_density, density.out, "csv");
  add_summary(c_density, density.out);

  WlawArgs wlaw;
  auto* c_wlaw = app.add_subcommand("wlaw", "Law of a diagonal element and its derivatives");
  c_wlaw->add_option("--n1", wlaw.n1)->required();
  c_wlaw->add_option("--n2", wlaw.n2)->required();
  c_wlaw->add_option("--a1", wlaw.a1)->capture_default_str();
  c_wlaw->add_option("--a2", wlaw.a2)->capture_default_str();
  c_wlaw->add_option("--deriv", wlaw.deriv, "Derivative order (0 = the law itself)")->capture_default_str();
  c_wlaw->add_option("--grid", wlaw.grid, "lo:hi:steps");
  c_wlaw->add_flag("--exact-form", wlaw.exact_form, "Emit exact exp-polynomial JSON");
  add_output(c_wlaw, wlaw.out, "csv");
  add_summary(c_wlaw, wlaw.out);

  CorrelateArgs corr;
  auto* c_corr = app.add_subcommand("correlate", "r-point correlation function");
  add_ensemble(c_corr, corr.e);
  c_corr->add_option("--points", corr.points, "Comma-separated rationals")->required();
  add_output(c_corr, corr.out, "csv");
  add_summary(c_corr, corr.out);

  AsymptoticArgs asym;
  auto* c_asym = app.add_subcommand("asymptotic", "Large-n limiting density");
  add_ensemble(c_asym, asym.e, false);
  c_asym->add_option("--c1", asym.c1);
  c_asym->add_option("--c2", asym.c2);
  c_asym->add_option("--alpha1", asym.alpha1);
  c_asym->add_option("--alpha2", asym.alpha2);
  c_asym->add_option("--grid", asym.grid, "lo:hi:steps");
  add_output(c_asym, asym.out, "csv");
  add_summary(c_asym, asym.out);

  SimulateArgs sim;
  auto* c_sim = app.add_subcommand("simulate", "Monte Carlo eigenvalue histogram");
  add_ensemble(c_sim, sim.e);
  add_sim(c_sim, sim.sim);
  c_sim->add_flag("--density-matrices", sim.density_matrices, "Sample rho1 - rho2 instead (uses n, n1, n2)");
  add_output(c_sim, sim.out, "csv");
  add_summary(c_sim, sim.out);

  RecordArgs pos;
  auto* c_pos = app.add_subcommand("positivity", "Exact sign probabilities");
  add_ensemble(c_pos, pos.e);
  add_output(c_pos, pos.out, "json");

  RecordArgs mom;
  auto* c_mom = app.add_subcommand("moments", "Exact spectral moments");
  add_ensemble(c_mom, mom.e);
  c_mom->add_option("--gamma-max", mom.gamma_max, "Highest moment order")->capture_default_str();
  add_output(c_mom, mom.out, "json");

  HelstromArgs hel;
  auto* c_hel = app.add_subcommand("helstrom", "Spectrum of the difference of two random density matrices");
  c_hel->add_option("--n", hel.n)->required();
  c_hel->add_option("--n1", hel.n1)->required();
  c_hel->add_option("--n2", hel.n2)->required();
  c_hel->add_option("--grid", hel.grid, "lo:hi:steps");
  auto* o_sim = c_hel->add_option("--simulate", hel.simulate, "Monte Carlo with N sampled pairs");
  auto* o_asym = c_hel->add_flag("--asymptotic", hel.asymptotic, "Large-n model instead of the exact density");
  o_sim->excludes(o_asym);
  add_sim(c_hel, hel.sim, false);
  add_output(c_hel, hel.out, "csv");
  add_summary(c_hel, hel.out);

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "Run the exact identity suite; PASS/FAIL per identity");
  add_ensemble(c_ver, ver.e);
  add_output(c_ver, ver.out, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_density->parsed()) run_density(density);
    if (c_wlaw->parsed()) run_wlaw(wlaw);
    if (c_corr->parsed()) run_correlate(corr);
    if (c_asym->parsed()) run_asymptotic(asym);
    if (c_sim->parsed()) run_simulate(sim);
    if (c_pos->parsed()) run_positivity(pos);
    if (c_mom->parsed()) run_moments(mom);
    if (c_hel->parsed()) run_helstrom(hel);
    if (c_ver->parsed() && !run_verify(ver)) return 4;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const UnsupportedParameters& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return 3;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return 4;
  } catch (const NumericError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
