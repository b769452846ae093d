#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "deform/bounds.hpp"
#include "deform/deformation.hpp"
#include "deform/errors.hpp"
#include "deform/hydrogen.hpp"
#include "deform/oracle.hpp"
#include "deform/spectrum.hpp"
#include "deform/units.hpp"
#include "json.hpp"

#ifndef DEFORM_VERSION
#define DEFORM_VERSION "0.0.0"
#endif

namespace deform::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { CSV, JSON };

Format parse_format(const std::string& s, Format fallback) {
  if (s.empty()) return fallback;
  std::string lower = s;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "csv") return Format::CSV;
  if (lower == "json") return Format::JSON;
  throw UsageError("--format must be csv or json");
}

// Accepts plain decimals and simple fractions such as "1/3".
double parse_number(const std::string& raw, const std::string& what) {
  std::string text = raw;
  text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }), text.end());
  auto parse_plain = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw UsageError("cannot parse " + what + " value '" + raw + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw UsageError("cannot parse " + what + " value '" + raw + "'");
    return v;
  };
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const double num = parse_plain(text.substr(0, slash));
    const double den = parse_plain(text.substr(slash + 1));
    if (den == 0.0) throw UsageError(what + " has a zero denominator");
    return num / den;
  }
  return parse_plain(text);
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(parse_number(item, what));
  }
  return out;
}

std::vector<double> linspace(double start, double stop, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[i] = start + (stop - start) * i / (count - 1);
  out.front() = start;
  out.back() = stop;
  return out;
}

// The file appears complete or not at all.
void emit(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) {
      f.close();
      std::filesystem::remove(tmp);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, target);
}

std::string header_comment(const std::string& command) { return "# deform " DEFORM_VERSION " " + command + "\n"; }

struct CorrectionArgs {
  int n = 1, l = 0, D = 3;
  std::string xi, eta, beta, beta_prime;
  std::string units = "hartree";
  std::string method = "auto";
  std::string out, format;
};

int cmd_correction(const CorrectionArgs& a, std::ostream& out) {
  const bool xe = !a.xi.empty() || !a.eta.empty();
  const bool bb = !a.beta.empty() || !a.beta_prime.empty();
  if (xe == bb) throw UsageError("supply exactly one of (--xi, --eta) or (--beta, --beta-prime)");
  if (xe && (a.xi.empty() || a.eta.empty())) throw UsageError("--xi and --eta must be given together");
  if (bb && (a.beta.empty() || a.beta_prime.empty())) throw UsageError("--beta and --beta-prime must be given together");

  const EnergyUnit unit = parse_unit(a.units);
  const Format format = parse_format(a.format, Format::JSON);
  const auto level = QuantumLevel::make(a.n, a.l, a.D);
  const auto params = xe ? DeformationParams::from_xi_eta(parse_number(a.xi, "--xi"), parse_number(a.eta, "--eta"))
                         : DeformationParams::from_beta(parse_number(a.beta, "--beta"),
                                                        parse_number(a.beta_prime, "--beta-prime"));

  const bool modified_level = level.D == 3 && level.l == 0 && (level.n == 1 || level.n == 2);
  spectrum::Method method;
  if (a.method == "auto")
    method = modified_level ? spectrum::Method::Modified : spectrum::Method::Ordinal;
  else if (a.method == "modified")
    method = spectrum::Method::Modified;
  else if (a.method == "ordinal")
    method = spectrum::Method::Ordinal;
  else
    throw UsageError("--method must be auto, modified or ordinal");

  std::vector<std::string> warnings;
  spectrum::CorrectionResult result;
  if (method == spectrum::Method::Modified) {
    if (!modified_level) throw OutOfDomain("the modified theory is implemented for the 1s and 2s levels in D = 3 only");
    result = level.n == 1 ? spectrum::correction_1s(params) : spectrum::correction_2s(params);
    if (params.log_weight() == 0.0 && !params.undeformed())
      warnings.emplace_back("beta' = 2 beta: logarithmic terms vanish (continuous limit)");
  } else {
    if (level.D == 3 && level.l == 0 && level.n > 2)
      throw DivergentLevel("ordinary perturbation theory diverges for 3D s-levels and the modified theory covers 1s, 2s only");
    result = spectrum::correction_ordinal(level, params);
    if (result.as_printed) warnings.emplace_back("D != 3: prefactor 1/n^3 evaluated as printed, not 1/n_bar^3");
  }

  const EnergyValue value = convert(result.value, unit);
  const auto eta = params.eta();
  std::string text;
  if (format == Format::JSON) {
    json j;
    j["command"] = "correction";
    j["method"] = spectrum::to_string(result.method);
    j["level"] = {{"n", level.n}, {"l", level.l}, {"D", level.D}};
    j["params"] = {{"beta", params.beta()},
                   {"beta_prime", params.beta_prime()},
                   {"xi", params.xi()},
                   {"eta", eta ? json(*eta) : json(nullptr)}};
    j["value"] = value.magnitude;
    j["units"] = std::string(to_string(unit));
    j["as_printed"] = result.as_printed;
    j["warnings"] = warnings;
    text = j.dump() + "\n";
  } else {
    std::ostringstream os;
    os << header_comment("correction");
    for (const auto& w : warnings) os << "# warning: " << w << "\n";
    os << "method,n,l,D,beta,beta_prime,xi,eta,value,units\n";
    os << spectrum::to_string(result.method) << ',' << level.n << ',' << level.l << ',' << level.D << ','
       << format_double(params.beta()) << ',' << format_double(params.beta_prime()) << ','
       << format_double(params.xi()) << ',' << (eta ? format_double(*eta) : std::string()) << ','
       << format_double(value.magnitude) << ',' << to_string(unit) << "\n";
    text = os.str();
  }
  emit(text, a.out, out);
  return kOk;
}

struct FigureArgs {
  std::string which = "1s";
  std::string xi_min = "0", xi_max = "0.1";
  int xi_steps = 101;
  std::string eta_list = "1/3,1";
  std::string out, format;
};

int cmd_figure(const FigureArgs& a, std::ostream& out) {
  if (a.which != "1s" && a.which != "2s") throw UsageError("--which must be 1s or 2s");
  const Format format = parse_format(a.format, Format::CSV);
  if (a.xi_steps < 2) throw UsageError("--xi-steps must be at least 2");
  const double xi_min = parse_number(a.xi_min, "--xi-min");
  const double xi_max = parse_number(a.xi_max, "--xi-max");
  if (!(xi_max > xi_min)) throw UsageError("--xi-max must exceed --xi-min");
  std::vector<double> etas = parse_list(a.eta_list, "--eta-list");
  if (etas.empty()) throw UsageError("--eta-list must name at least one eta");
  std::sort(etas.begin(), etas.end());
  etas.erase(std::unique(etas.begin(), etas.end()), etas.end());

  const auto xis = linspace(xi_min, xi_max, a.xi_steps);
  const auto eval = a.which == "1s" ? spectrum::correction_1s_xi_eta : spectrum::correction_2s_xi_eta;

  struct Row {
    double xi, eta, value;
  };
  std::vector<Row> rows;
  rows.reserve(etas.size() * xis.size());
  for (double eta : etas)
    for (double xi : xis) rows.push_back({xi, eta, convert(eval(xi, eta), EnergyUnit::E0Relative).magnitude});

  std::string text;
  if (format == Format::JSON) {
    json j;
    j["command"] = "figure";
    j["which"] = a.which;
    j["rows"] = json::array();
    for (const auto& r : rows) j["rows"].push_back({{"xi", r.xi}, {"eta", r.eta}, {"delta_e_over_e0", r.value}});
    text = j.dump() + "\n";
  } else {
    std::ostringstream os;
    os << header_comment("figure");
    os << "# level=" << a.which << " unit=E0=e^2/2a xi=dx_min/a\n";
    os << "# xi_min=" << format_double(xi_min) << " xi_max=" << format_double(xi_max) << " xi_steps=" << a.xi_steps
       << "\n";
    os << "xi,eta,delta_e_over_e0\n";
    for (const auto& r : rows)
      os << format_double(r.xi) << ',' << format_double(r.eta) << ',' << format_double(r.value) << "\n";
    text = os.str();
  }
  emit(text, a.out, out);
  return kOk;
}

struct BoundArgs {
  std::string eta_min = "1/3", eta_max = "1";
  int eta_steps = 101;
  std::string eta_list;
  std::string lamb_exp, lamb_theor;
  std::string out, format;
};

int cmd_bound(const BoundArgs& a, std::ostream& out) {
  const Format format = parse_format(a.format, Format::CSV);
  std::vector<double> grid;
  if (!a.eta_list.empty()) {
    grid = parse_list(a.eta_list, "--eta-list");
    if (grid.empty()) throw UsageError("--eta-list must name at least one eta");
  } else {
    if (a.eta_steps < 2) throw UsageError("--eta-steps must be at least 2");
    const double lo = parse_number(a.eta_min, "--eta-min");
    const double hi = parse_number(a.eta_max, "--eta-max");
    if (!(hi > lo)) throw UsageError("--eta-max must exceed --eta-min");
    grid = linspace(lo, hi, a.eta_steps);
  }
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw UsageError("eta grid must be strictly increasing");

  bounds::LambData data;
  if (!a.lamb_exp.empty()) data.L_exp_MHz = parse_number(a.lamb_exp, "--lamb-exp");
  if (!a.lamb_theor.empty()) data.L_theor_MHz = parse_number(a.lamb_theor, "--lamb-theor");
  const double discrepancy = bounds::lamb_discrepancy(data);
  const auto nodes = bounds::bound_curve(grid, data);
  const auto c = constants();

  std::string text;
  if (format == Format::JSON) {
    json j;
    j["command"] = "bound";
    j["lamb"] = {{"L_exp_MHz", data.L_exp_MHz},
                 {"L_theor_MHz", data.L_theor_MHz},
                 {"L_exp_sigma_MHz", data.L_exp_sigma_MHz},
                 {"L_theor_sigma_MHz", data.L_theor_sigma_MHz},
                 {"discrepancy_MHz", discrepancy}};
    j["points"] = json::array();
    for (const auto& n : nodes) {
      json row{{"eta", n.eta}};
      if (n.point) {
        row["xi"] = n.point->xi;
        row["dx_min_m"] = n.point->dx_min_m;
      } else {
        row["error"] = n.error;
      }
      j["points"].push_back(row);
    }
    text = j.dump() + "\n";
  } else {
    std::ostringstream os;
    os << header_comment("bound");
    os << "# lamb_exp_MHz=" << format_double(data.L_exp_MHz) << " +- " << format_double(data.L_exp_sigma_MHz) << "\n";
    os << "# lamb_theor_MHz=" << format_double(data.L_theor_MHz) << " +- " << format_double(data.L_theor_sigma_MHz)
       << "\n";
    os << "# discrepancy_MHz=" << format_double(discrepancy) << " hartree_MHz=" << format_double(c.hartree_MHz)
       << " bohr_radius_m=" << format_double(c.bohr_radius_m) << "\n";
    os << "# cut-off method reference (annotation only): eta=1/3 -> "
       << format_double(bounds::kCutoffBoundEtaThird_m) << " m, eta=1 -> "
       << format_double(bounds::kCutoffBoundEtaOne_m) << " m\n";
    os << "eta,xi,dx_min_m,error\n";
    for (const auto& n : nodes) {
      os << format_double(n.eta) << ',';
      if (n.point)
        os << format_double(n.point->xi) << ',' << format_double(n.point->dx_min_m) << ",\n";
      else
        os << ",,\"" << n.error << "\"\n";
    }
    text = os.str();
  }
  emit(text, a.out, out);
  return kOk;
}

struct VerifyArgs {
  double rel_tol = 1e-12;
  bool printed_prefactor = false;
  std::string out;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  oracle::SuiteOptions options;
  options.rel_tol = a.rel_tol;
  if (a.printed_prefactor) options.smeared_prefactor = spectrum::kSmearedPrefactorPrinted;
  const auto report = oracle::run_suite(options);
  json j = report;
  j["rel_tol"] = a.rel_tol;
  emit(j.dump(2) + "\n", a.out, out);
  return report.overall_pass() ? kOk : kVerifyFailed;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal-length corrections to the hydrogen spectrum", "deform"};
  app.set_version_flag("--version", DEFORM_VERSION);
  app.require_subcommand(1);

  CorrectionArgs ca;
  auto* corr = app.add_subcommand("correction", "First-order energy correction for one level");
  corr->add_option("--n", ca.n, "Principal quantum number")->capture_default_str();
  corr->add_option("--l", ca.l, "Orbital quantum number")->capture_default_str();
  corr->add_option("--D", ca.D, "Space dimension")->capture_default_str();
  corr->add_option("--xi", ca.xi, "Minimal length in Bohr radii");
  corr->add_option("--eta", ca.eta, "beta / (beta + beta'), fractions like 1/3 accepted");
  corr->add_option("--beta", ca.beta, "beta in atomic units");
  corr->add_option("--beta-prime", ca.beta_prime, "beta' in atomic units");
  corr->add_option("--units", ca.units, "hartree | MHz | eV | E0")->capture_default_str();
  corr->add_option("--method", ca.method, "auto | modified | ordinal")->capture_default_str();
  corr->add_option("--out", ca.out, "Output file (default stdout)");
  corr->add_option("--format", ca.format, "json (default) | csv");

  FigureArgs fa;
  auto* fig = app.add_subcommand("figure", "Tabulate an s-level correction over xi, in units of E0");
  fig->add_option("--which", fa.which, "1s | 2s")->capture_default_str();
  fig->add_option("--xi-min", fa.xi_min)->capture_default_str();
  fig->add_option("--xi-max", fa.xi_max)->capture_default_str();
  fig->add_option("--xi-steps", fa.xi_steps)->capture_default_str();
  fig->add_option("--eta-list", fa.eta_list, "Comma-separated eta values")->capture_default_str();
  fig->add_option("--out", fa.out, "Output file (default stdout)");
  fig->add_option("--format", fa.format, "csv (default) | json");

  BoundArgs ba;
  auto* bnd = app.add_subcommand("bound", "Upper bound on the minimal length from the 1s Lamb shift");
  bnd->add_option("--eta-min", ba.eta_min)->capture_default_str();
  bnd->add_option("--eta-max", ba.eta_max)->capture_default_str();
  bnd->add_option("--eta-steps", ba.eta_steps)->capture_default_str();
  bnd->add_option("--eta-list", ba.eta_list, "Explicit increasing eta grid (overrides min/max/steps)");
  bnd->add_option("--lamb-exp", ba.lamb_exp, "Measured 1s Lamb shift, MHz")->envname("DEFORM_LAMB_EXP_MHZ");
  bnd->add_option("--lamb-theor", ba.lamb_theor, "Predicted 1s Lamb shift, MHz")->envname("DEFORM_LAMB_THEOR_MHZ");
  bnd->add_option("--out", ba.out, "Output file (default stdout)");
  bnd->add_option("--format", ba.format, "csv (default) | json");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Check every closed form against the quadrature oracle");
  ver->add_option("--rel-tol", va.rel_tol, "Quadrature relative tolerance")->capture_default_str();
  ver->add_option("--out", va.out, "Report file (default stdout)");
  ver->add_flag("--inject-printed-prefactor", va.printed_prefactor,
                "Use the misprinted smeared-Coulomb prefactor (suite sensitivity check)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << DEFORM_VERSION << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "deform: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (corr->parsed()) return cmd_correction(ca, out);
    if (fig->parsed()) return cmd_figure(fa, out);
    if (bnd->parsed()) return cmd_bound(ba, out);
    if (ver->parsed()) return cmd_verify(va, out);
  } catch (const UsageError& e) {
    err << "deform: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "deform: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    err << "deform: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace deform::cli
