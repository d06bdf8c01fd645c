// hcizlab command-line driver. Every subcommand writes its result to stdout
// (or --out) and a JSON run manifest next to it.

#include "hcizlab/error.hpp"
#include "hcizlab/genfun.hpp"
#include "hcizlab/hciz_model.hpp"
#include "hcizlab/monotone_hurwitz.hpp"
#include "hcizlab/parallel.hpp"
#include "hcizlab/verify.hpp"
#include "hcizlab/weingarten.hpp"
#include "hcizlab/zeros.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#ifndef HCIZLAB_VERSION
#define HCIZLAB_VERSION "0.0.0"
#endif

using namespace hcizlab;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::usage:
    case ErrorCode::domain:
      return kExitUsage;
    case ErrorCode::capacity:
      return kExitCapacity;
    case ErrorCode::numerical:
      return kExitVerification;
  }
  return kExitUsage;
}

void report_error(const std::string& code, const std::string& module, const std::string& message) {
  std::cerr << json{{"error", {{"code", code}, {"module", module}, {"message", message}}}}.dump() << '\n';
}

// ------------------------------------------------------------- parsing --

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string token;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!token.empty()) out.push_back(token);
      token.clear();
    } else {
      token += c;
    }
  }
  if (!token.empty()) out.push_back(token);
  return out;
}

// Exact value of "3", "-1/4", "0.125" or "2.5e-3".
Rational parse_rational(const std::string& token) {
  const auto bad = [&] { return UsageError("cli", "cannot parse number '" + token + "'"); };
  if (const auto slash = token.find('/'); slash != std::string::npos) {
    try {
      const BigInt num(token.substr(0, slash)), den(token.substr(slash + 1));
      if (den == 0) throw bad();
      return Rational(num, den);
    } catch (const std::runtime_error&) {
      throw bad();
    }
  }
  std::size_t i = 0;
  bool negative = false;
  if (i < token.size() && (token[i] == '-' || token[i] == '+')) negative = token[i++] == '-';
  std::string digits;
  int scale = 0;
  bool seen_point = false, seen_digit = false;
  for (; i < token.size() && token[i] != 'e' && token[i] != 'E'; ++i) {
    if (token[i] == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(token[i]))) {
      digits += token[i];
      seen_digit = true;
      if (seen_point) ++scale;
    } else {
      throw bad();
    }
  }
  if (!seen_digit) throw bad();
  int exponent = 0;
  if (i < token.size()) {
    try {
      std::size_t used = 0;
      exponent = std::stoi(token.substr(i + 1), &used);
      if (used != token.size() - i - 1) throw bad();
    } catch (const std::logic_error&) {
      throw bad();
    }
  }
  Rational value{BigInt(digits)};
  const int shift = exponent - scale;
  if (shift >= 0)
    value *= Rational(ipow(BigInt(10), shift));
  else
    value /= Rational(ipow(BigInt(10), -shift));
  return negative ? Rational(-value) : value;
}

double parse_double(const std::string& token) { return parse_rational(token).convert_to<double>(); }

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& t : split_list(text)) out.push_back(parse_rational(t));
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  for (const auto& t : split_list(text)) out.push_back(parse_double(t));
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& t : split_list(text)) {
    const Rational q = parse_rational(t);
    if (denominator(q) != 1) throw UsageError("cli", "expected an integer, got '" + t + "'");
    out.push_back(numerator(q).convert_to<int>());
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cli", "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// One side of a spectrum pair: exact when given as rationals.
struct Side {
  std::optional<std::vector<Rational>> exact;
  std::vector<double> values;
};

Side exact_side(std::vector<Rational> q) {
  Side s;
  for (const auto& v : q) s.values.push_back(v.convert_to<double>());
  s.exact = std::move(q);
  return s;
}

int family_size(const std::string& text, std::size_t colon) {
  const auto n = parse_ints(text.substr(colon + 1));
  if (n.size() != 1 || n[0] < 1) throw UsageError("cli", "family size must be a positive integer in '" + text + "'");
  return n[0];
}

std::vector<double> cauchy_locations(int N) {
  std::vector<double> out;
  for (int k = 1; k <= N; ++k) out.push_back(std::tan(std::numbers::pi * (static_cast<double>(k) / (N + 1) - 0.5)));
  return out;
}

// "uniform:N", "cauchy:N", "@path" or an inline list.
Side parse_side(const std::string& text, const Rational& M) {
  if (text.rfind("uniform:", 0) == 0) return exact_side(uniform_classical_locations(family_size(text, 7), M));
  if (text.rfind("cauchy:", 0) == 0) return Side{std::nullopt, cauchy_locations(family_size(text, 6))};
  if (!text.empty() && text[0] == '@') return exact_side(parse_rationals(read_file(text.substr(1))));
  return exact_side(parse_rationals(text));
}

SpectrumPair make_spectra(const Side& a, const Side& b) {
  if (a.values.size() != b.values.size())
    throw UsageError("cli", "spectra have different sizes (" + std::to_string(a.values.size()) + " and " +
                                std::to_string(b.values.size()) + ")");
  if (a.values.empty()) throw UsageError("cli", "spectra must be nonempty");
  if (a.exact && b.exact) return SpectrumPair::from_rational(*a.exact, *b.exact);
  return SpectrumPair::from_real(a.values, b.values);
}

struct SpectraOptions {
  std::string family;  // both sides
  std::string a, b;
  std::string file;  // JSON {"a": [...], "b": [...]}
  std::string M = "1";

  void add(CLI::App* app) {
    app->add_option("--spectra", family, "family for both sides: uniform:N, or cauchy:N (uniform A, Cauchy B)");
    app->add_option("--a", a, "A's eigenvalues: list, uniform:N, cauchy:N or @file");
    app->add_option("--b", b, "B's eigenvalues: list, uniform:N, cauchy:N or @file");
    app->add_option("--spectra-file", file, "JSON file with arrays a and b");
    app->add_option("--M", M, "support [-M, M] of the uniform family")->capture_default_str();
  }

  SpectrumPair resolve() const {
    const Rational bound = parse_rational(M);
    if (!(bound > 0)) throw UsageError("cli", "--M must be positive");
    const int given = !family.empty() + !file.empty() + (!a.empty() || !b.empty());
    if (given != 1) throw UsageError("cli", "give exactly one of --spectra, --spectra-file, or --a with --b");
    if (!family.empty()) {
      const Side uniform = family.rfind("uniform:", 0) == 0 || family.rfind("cauchy:", 0) == 0
                               ? exact_side(uniform_classical_locations(family_size(family, family.find(':')), bound))
                               : throw UsageError("cli", "unknown family '" + family + "'");
      return make_spectra(uniform, family[0] == 'u' ? uniform : parse_side(family, bound));
    }
    if (!file.empty()) {
      json doc;
      try {
        doc = json::parse(read_file(file));
      } catch (const json::exception& e) {
        throw UsageError("cli", "invalid spectra file: " + std::string(e.what()));
      }
      auto side = [&](const char* key) {
        if (!doc.contains(key) || !doc[key].is_array()) throw UsageError("cli", std::string("spectra file lacks array '") + key + "'");
        std::vector<Rational> out;
        for (const auto& v : doc[key])
          out.push_back(parse_rational(v.is_string() ? v.get<std::string>() : v.dump()));
        return exact_side(out);
      };
      return make_spectra(side("a"), side("b"));
    }
    if (a.empty() || b.empty()) throw UsageError("cli", "--a and --b go together");
    return make_spectra(parse_side(a, bound), parse_side(b, bound));
  }
};

// -------------------------------------------------------------- output --

enum class Format { json, csv, text };

std::string complex_str(Complex z) {
  std::ostringstream os;
  os << std::setprecision(17) << z.real() << ',' << z.imag();
  return os.str();
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json rational_json(const Rational& q) { return to_string(q); }

struct Csv {
  std::ostringstream os;
  Csv() { os << std::setprecision(17); }
};

// ------------------------------------------------------------- commands --

struct Common {
  std::string format;  // json, csv; text for verify (its default)
  std::string out;
  std::string manifest;
  std::uint64_t seed = 1;
};

struct Result {
  std::string body;
  int exit = kExitOk;
};

std::string render(const json& j) { return j.dump(2) + "\n"; }

struct HurwitzArgs {
  int d = 0, g = 0;
  std::string alpha, beta, method = "character";
};

Result cmd_hurwitz(const HurwitzArgs& args, Format format) {
  if (args.d < 1) throw UsageError("cli", "--d must be at least 1");
  if (args.g < 0) throw UsageError("cli", "--g must be nonnegative");
  if (args.method != "character" && args.method != "brute_force" && args.method != "closed_form")
    throw UsageError("cli", "--method must be character, brute_force or closed_form");
  auto choices = [&](const std::string& given) {
    if (given.empty()) return enumerate_partitions(args.d);
    const auto p = Partition::parse(given);
    if (p.size() != args.d) throw UsageError("cli", "partition " + given + " is not of " + std::to_string(args.d));
    return std::vector<Partition>{p};
  };
  const auto alphas = choices(args.alpha), betas = choices(args.beta);
  if (args.method == "closed_form") {
    if (args.g != 0) throw UsageError("monotone_hurwitz", "the closed form covers genus zero only");
    for (const auto& b : betas)
      if (b != Partition::ones(args.d)) throw UsageError("monotone_hurwitz", "the closed form needs beta = 1^d");
  }
  json rows = json::array();
  Csv csv;
  csv.os << "alpha,beta,g,value,method\n";
  for (const auto& a : alphas)
    for (const auto& b : betas) {
      BigInt value(0);
      if (args.method == "character") {
        value = connected_double(a, b, args.g);
      } else if (args.method == "closed_form") {
        value = genus_zero_closed_form(a);
      } else {
        const int r = ray_count(a, b, args.g);
        if (r >= 0) value = brute_force_count(a, b, r, true);
      }
      rows.push_back({{"alpha", a.parts()}, {"beta", b.parts()}, {"g", args.g}, {"value", value.str()}, {"method", args.method}});
      csv.os << '"' << a.str() << "\",\"" << b.str() << "\"," << args.g << ',' << value.str() << ',' << args.method << '\n';
    }
  return {format == Format::csv ? csv.os.str() : render({{"d", args.d}, {"g", args.g}, {"rows", rows}})};
}

Result cmd_weingarten(int d, int N, int series_order, Format format) {
  if (d < 1 || N < 1) throw UsageError("cli", "--d and --N must be positive");
  const auto table = weingarten_table(d, N);
  json out = to_json(*table);
  Csv csv;
  if (table->range == WeingartenRange::stable) {
    csv.os << "class,value\n";
    for (std::size_t m = 0; m < table->classes.size(); ++m)
      csv.os << '"' << table->classes[m].str() << "\"," << to_string(table->class_values[m]) << '\n';
  } else {
    csv.os << "rho,sigma,value\n";
    const auto basis = table->index_set();
    for (const auto& r : basis)
      for (const auto& s : basis) {
        auto line = [](const Permutation& p) {
          std::string text;
          for (int v : p.one_line()) text += (text.empty() ? "" : " ") + std::to_string(v);
          return text;
        };
        csv.os << '"' << line(r) << "\",\"" << line(s) << "\"," << to_string(table->value(r, s)) << '\n';
      }
  }
  if (series_order >= 0) {
    const auto series = weingarten_series(d, N, series_order);
    json partial = json::array();
    for (std::size_t m = 0; m < series.classes.size(); ++m)
      partial.push_back({{"class", series.classes[m].parts()}, {"partial_sum", to_string(series.partial_sums[m])}});
    out["series"] = {{"order", series_order}, {"tail_bound", series.tail_bound}, {"partial_sums", partial}};
    if (table->range == WeingartenRange::stable && series_order >= 2)
      out["series"]["observed_ratio"] = observed_convergence_ratio(series, *table);
  }
  return {format == Format::csv ? csv.os.str() : render(out)};
}

struct HcizArgs {
  SpectraOptions spectra;
  std::string z = "0.1", z_im = "0";
  bool eval = false, free_energy = false, convergence = false;
  int derivatives = -1;
  int genus = 2;
  long long monte_carlo = 0;
  std::string Ns = "8,16,32,64";
  int d_trunc = 12;
};

Result cmd_hciz(const HcizArgs& args, Format format, int digits, std::uint64_t seed) {
  const Complex z(parse_double(args.z), parse_double(args.z_im));
  const int modes = args.eval + args.free_energy + args.convergence + (args.derivatives >= 0) + (args.monte_carlo > 0);
  if (modes > 1) throw UsageError("cli", "choose one of --eval, --free-energy, --derivatives, --monte-carlo, --convergence");
  if (args.convergence) {
    const auto result = convergence_experiment(z, parse_ints(args.Ns), parse_rational(args.spectra.M), args.d_trunc, digits);
    return {format == Format::csv ? result.to_csv() : render(result.to_json())};
  }
  const auto spec = args.spectra.resolve();
  Csv csv;
  json out{{"z", complex_json(z)}, {"spectra", spec.to_json()}};
  if (args.derivatives >= 0) {
    const int D = args.derivatives;
    const auto partition = partition_derivatives(D, spec);
    const auto free = free_energy_derivatives(partition, spec.N());
    json rows = json::array();
    csv.os << "d,I_derivative,F_derivative,genus_partial_sum,tail_bound\n";
    for (int d = 0; d <= D; ++d) {
      json row{{"d", d}, {"I_derivative", rational_json(partition[static_cast<std::size_t>(d)])},
               {"F_derivative", rational_json(free[static_cast<std::size_t>(d)])}};
      std::string partial, tail;
      if (d >= 1) {
        const auto series = leading_derivative_series(d, spec, args.genus);
        json coefficients = json::array();
        for (const auto& c : series.coefficients) coefficients.push_back(rational_json(c));
        row["genus_coefficients"] = coefficients;
        row["genus_partial_sum"] = rational_json(series.partial_sum());
        row["tail_bound"] = series.tail_bound;
        partial = to_string(series.partial_sum());
        std::ostringstream t;
        t << std::setprecision(17) << series.tail_bound;
        tail = t.str();
      }
      rows.push_back(row);
      csv.os << d << ',' << to_string(partition[static_cast<std::size_t>(d)]) << ','
             << to_string(free[static_cast<std::size_t>(d)]) << ',' << partial << ',' << tail << '\n';
    }
    out["genus_max"] = args.genus;
    out["derivatives"] = rows;
  } else if (args.free_energy) {
    const Complex F = free_energy(z, spec, 16, digits);
    out["free_energy"] = complex_json(F);
    csv.os << "z_re,z_im,F_re,F_im\n" << complex_str(z) << ',' << complex_str(F) << '\n';
  } else if (args.monte_carlo > 0) {
    const auto est = hciz_monte_carlo(z, spec, args.monte_carlo, seed);
    out["monte_carlo"] = {{"mean", complex_json(est.mean)}, {"se_re", est.se_re}, {"se_im", est.se_im}, {"samples", est.samples}};
    csv.os << "z_re,z_im,mean_re,mean_im,se_re,se_im,samples\n"
           << complex_str(z) << ',' << complex_str(est.mean) << ',' << est.se_re << ',' << est.se_im << ',' << est.samples << '\n';
  } else {
    const auto value = hciz_determinant(z, spec, digits);
    out["value"] = complex_json(value.to_complex());
    out["value_digits"] = {{"re", value.value.re.str(digits)}, {"im", value.value.im.str(digits)}};
    out["relative_error"] = value.relative_error;
    out["method"] = value.method;
    out["working_digits"] = value.digits;
    csv.os << "z_re,z_im,I_re,I_im,relative_error,method\n"
           << complex_str(z) << ',' << complex_str(value.to_complex()) << ',' << value.relative_error << ',' << value.method << '\n';
  }
  return {format == Format::csv ? csv.os.str() : render(out)};
}

struct GenfunArgs {
  std::string series = "s";
  int order = 20, g = 0;
  std::string M = "1";
  bool radius = false;
};

Result cmd_genfun(const GenfunArgs& args, Format format) {
  if (args.order < 1) throw UsageError("cli", "--order must be positive");
  TruncatedSeries series;
  if (args.series == "s")
    series = s_coefficients(args.order);
  else if (args.series == "s_prime")
    series = s_prime_coefficients(args.order);
  else if (args.series == "all_ones")
    series = genus_series_all_ones(args.g, args.order);
  else if (args.series == "c_g") {
    const auto moments = uniform_moments(parse_rational(args.M), args.order);
    series = c_g_series(args.g, moments, moments, args.order);
  } else {
    throw UsageError("cli", "--series must be s, s_prime, all_ones or c_g");
  }
  json coefficients = json::array();
  Csv csv;
  csv.os << "n,coefficient\n";
  for (int n = 0; n <= series.order(); ++n) {
    coefficients.push_back(rational_json(series[n]));
    csv.os << n << ',' << to_string(series[n]) << '\n';
  }
  json out{{"series", args.series}, {"order", args.order}, {"coefficients", coefficients}};
  if (args.series == "all_ones" || args.series == "c_g") out["g"] = args.g;
  if (args.radius) {
    const auto est = radius_estimate(series, RadiusMethod::domb_sykes);
    out["radius"] = {{"method", to_string(est.method)}, {"radius", est.radius}, {"growth", est.growth},
                     {"critical_point", kCriticalPoint}};
  }
  return {format == Format::csv ? csv.os.str() : render(out)};
}

struct ZerosArgs {
  bool predict = false, uniform_bound = false, cauchy = false, verify = false;
  int N = 0, window = kDefaultZeroWindow;
  std::string hbar = "1", a1 = "0", b, M = "1";
};

Result cmd_zeros(const ZerosArgs& args, Format format, int digits) {
  if (args.predict + args.uniform_bound + args.cauchy != 1)
    throw UsageError("cli", "choose one of --predict, --uniform-bound, --cauchy");
  if (args.cauchy) {
    const auto ex = cauchy_counterexample(args.N, parse_double(args.M));
    Csv csv;
    csv.os << "N,smallest\n" << ex.N << ',' << ex.smallest << '\n';
    return {format == Format::csv ? csv.os.str() : render({{"N", ex.N}, {"b", ex.b}, {"smallest", ex.smallest}})};
  }
  const auto b = parse_doubles(args.b);
  if (args.uniform_bound) {
    const auto r = smallest_zero_bound_uniform(parse_double(args.M), b);
    Csv csv;
    csv.os << "smallest,bound,holds,beyond_critical\n"
           << r.smallest << ',' << r.bound << ',' << r.holds << ',' << r.beyond_critical << '\n';
    return {format == Format::csv ? csv.os.str()
                                  : render({{"smallest", r.smallest},
                                            {"bound", r.bound},
                                            {"holds", r.holds},
                                            {"beyond_critical", r.beyond_critical}})};
  }
  if (args.N != 0 && args.N != static_cast<int>(b.size()))
    throw UsageError("cli", "--N is " + std::to_string(args.N) + " but --b has " + std::to_string(b.size()) + " values");
  const auto p = predicted_zeros(parse_double(args.a1), parse_double(args.hbar), b, args.window);
  std::vector<double> residuals;
  if (args.verify)
    for (const auto& z : p.zeros) residuals.push_back(verify_zero(z.z(), p.spectra(), digits));
  if (format == Format::csv) return {zero_atlas_csv(p, residuals)};
  json out = to_json(p);
  for (std::size_t n = 0; n < residuals.size(); ++n) out["zeros"][n]["residual"] = residuals[n];
  return {render(out)};
}

struct VerifyArgs {
  std::string profile = "quick";
  std::vector<std::string> modules;
  std::string inject_fault;
};

Result cmd_verify(const VerifyArgs& args, Format format, std::uint64_t seed, bool seed_given) {
  VerifyContext context;
  context.profile = parse_profile(args.profile);
  if (seed_given) context.seed = seed;
  if (args.inject_fault == "character-table") {
    context.character_table = [](int d) { return d == 4 ? corrupted_character_table(4) : CharacterTable::get(d); };
  } else if (!args.inject_fault.empty()) {
    throw UsageError("cli", "unknown fault '" + args.inject_fault + "' (known: character-table)");
  }
  const auto report = run_verification(context, args.modules);
  std::string body;
  if (format == Format::json) {
    body = render(report.to_json());
  } else if (format == Format::csv) {
    Csv csv;
    csv.os << "name,module,passed,seconds,detail\n";
    for (const auto& r : report.results)
      csv.os << r.name << ',' << r.module << ',' << r.passed << ',' << r.seconds << ",\"" << r.detail << "\"\n";
    body = csv.os.str();
  } else {
    body = report.to_text();
  }
  return {body, report.passed() ? kExitOk : kExitVerification};
}

int resolve_from_env(int flag, const char* env, int fallback) {
  if (flag > 0) return flag;
  if (const char* v = std::getenv(env)) {
    try {
      const int n = std::stoi(v);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
    throw UsageError("cli", std::string(env) + " must be a positive integer");
  }
  return fallback;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monotone Hurwitz numbers, Weingarten calculus and the HCIZ integral"};
  app.set_version_flag("--version", HCIZLAB_VERSION);
  app.require_subcommand(1);

  Common common;
  int threads = 0, precision = 0;
  app.add_option("--threads", threads, "worker threads (env HCIZ_THREADS, default 1)");
  app.add_option("--precision", precision, "decimal digits for multiprecision work (env HCIZ_PRECISION, default 50)");

  auto add_common = [&](CLI::App* sub, const std::string& default_format) {
    sub->add_option("--format", common.format, "output format: json or csv" + std::string(default_format == "text" ? " or text" : ""));
    sub->add_option("--out", common.out, "write the result here instead of stdout");
    sub->add_option("--manifest", common.manifest, "manifest path (default: <out>.manifest.json or hcizlab-<command>.manifest.json)");
    sub->add_option("--seed", common.seed, "Monte Carlo seed")->capture_default_str();
    sub->add_option("--threads", threads, "worker threads (env HCIZ_THREADS, default 1)");
    sub->add_option("--precision", precision, "decimal digits (env HCIZ_PRECISION, default 50)");
  };

  HurwitzArgs hurwitz;
  auto* hurwitz_cmd = app.add_subcommand("hurwitz", "connected monotone double Hurwitz numbers");
  hurwitz_cmd->add_option("--d", hurwitz.d, "degree")->required();
  hurwitz_cmd->add_option("--g", hurwitz.g, "genus")->required();
  hurwitz_cmd->add_option("--alpha", hurwitz.alpha, "first partition, e.g. 2,1 (default: all)");
  hurwitz_cmd->add_option("--beta", hurwitz.beta, "second partition (default: all)");
  hurwitz_cmd->add_option("--method", hurwitz.method, "character, brute_force or closed_form")->capture_default_str();

  int wg_d = 0, wg_N = 0, wg_series = -1;
  auto* weingarten_cmd = app.add_subcommand("weingarten", "exact Weingarten function");
  weingarten_cmd->add_option("--d", wg_d, "degree")->required();
  weingarten_cmd->add_option("--N", wg_N, "matrix dimension")->required();
  weingarten_cmd->add_option("--series", wg_series, "also report the 1/N expansion to this order");

  HcizArgs hciz;
  auto* hciz_cmd = app.add_subcommand("hciz", "HCIZ integral, free energy, derivatives, convergence");
  hciz.spectra.add(hciz_cmd);
  hciz_cmd->add_flag("--eval", hciz.eval, "evaluate I_N(z) (default)");
  hciz_cmd->add_flag("--free-energy", hciz.free_energy, "evaluate F_N(z) = log(I_N) / N^2 by continuation");
  hciz_cmd->add_option("--derivatives", hciz.derivatives, "exact derivatives at 0 through this order");
  hciz_cmd->add_option("--genus", hciz.genus, "genus truncation for --derivatives")->capture_default_str();
  hciz_cmd->add_option("--monte-carlo", hciz.monte_carlo, "Haar Monte Carlo with this many samples");
  hciz_cmd->add_flag("--convergence", hciz.convergence, "F_N(z) against the genus-zero limit over --Ns");
  hciz_cmd->add_option("--Ns", hciz.Ns, "dimensions for --convergence")->capture_default_str();
  hciz_cmd->add_option("--d-trunc", hciz.d_trunc, "genus-zero truncation for --convergence")->capture_default_str();
  hciz_cmd->add_option("--z", hciz.z, "real part of z")->capture_default_str();
  hciz_cmd->add_option("--z-im", hciz.z_im, "imaginary part of z")->capture_default_str();

  GenfunArgs genfun;
  auto* genfun_cmd = app.add_subcommand("genfun", "generating-function coefficients");
  genfun_cmd->add_option("--series", genfun.series, "s, s_prime, all_ones or c_g")->capture_default_str();
  genfun_cmd->add_option("--order", genfun.order, "highest coefficient")->capture_default_str();
  genfun_cmd->add_option("--g", genfun.g, "genus for all_ones and c_g")->capture_default_str();
  genfun_cmd->add_option("--M", genfun.M, "uniform moments on [-M, M] for c_g")->capture_default_str();
  genfun_cmd->add_flag("--radius", genfun.radius, "Domb-Sykes radius estimate");

  ZerosArgs zeros;
  auto* zeros_cmd = app.add_subcommand("zeros", "zeros for arithmetic-progression spectra");
  zeros_cmd->add_flag("--predict", zeros.predict, "list the predicted zeros");
  zeros_cmd->add_flag("--verify", zeros.verify, "attach the normalized determinant residual to each zero");
  zeros_cmd->add_flag("--uniform-bound", zeros.uniform_bound, "smallest zero for uniform classical locations");
  zeros_cmd->add_flag("--cauchy", zeros.cauchy, "smallest zero for Cauchy quantiles against uniform A");
  zeros_cmd->add_option("--N", zeros.N, "dimension (checked against --b)");
  zeros_cmd->add_option("--hbar", zeros.hbar, "spacing of A's spectrum")->capture_default_str();
  zeros_cmd->add_option("--a1", zeros.a1, "first eigenvalue of A")->capture_default_str();
  zeros_cmd->add_option("--b", zeros.b, "B's eigenvalues, increasing");
  zeros_cmd->add_option("--window", zeros.window, "|k| range")->capture_default_str();
  zeros_cmd->add_option("--M", zeros.M, "spectral bound")->capture_default_str();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");
  verify_cmd->add_option("--profile", verify.profile, "quick or full")->capture_default_str();
  verify_cmd->add_option("--module", verify.modules, "restrict to these modules (repeatable)");
  verify_cmd->add_option("--inject-fault", verify.inject_fault, "negative control: character-table");

  add_common(hurwitz_cmd, "json");
  add_common(weingarten_cmd, "json");
  add_common(hciz_cmd, "json");
  add_common(genfun_cmd, "json");
  add_common(zeros_cmd, "json");
  add_common(verify_cmd, "text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("usage", "cli", e.what());
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    const int thread_total = resolve_from_env(threads, "HCIZ_THREADS", 1);
    const int digits = resolve_from_env(precision, "HCIZ_PRECISION", 50);
    if (digits < 10) throw UsageError("cli", "precision must be at least 10 digits");
    set_thread_count(thread_total);
    // Library defaults read the same variable; keep them in step with the flag.
    setenv("HCIZ_PRECISION", std::to_string(digits).c_str(), 1);

    if (common.format.empty()) common.format = command == "verify" ? "text" : "json";
    Format format;
    if (common.format == "json")
      format = Format::json;
    else if (common.format == "csv")
      format = Format::csv;
    else if (common.format == "text" && command == "verify")
      format = Format::text;
    else
      throw UsageError("cli", "unsupported format '" + common.format + "'");

    const bool seed_given = sub->count("--seed") > 0;
    Result result;
    if (command == "hurwitz")
      result = cmd_hurwitz(hurwitz, format);
    else if (command == "weingarten")
      result = cmd_weingarten(wg_d, wg_N, wg_series, format);
    else if (command == "hciz")
      result = cmd_hciz(hciz, format, digits, common.seed);
    else if (command == "genfun")
      result = cmd_genfun(genfun, format);
    else if (command == "zeros")
      result = cmd_zeros(zeros, format, digits);
    else
      result = cmd_verify(verify, format, common.seed, seed_given);

    if (common.out.empty()) {
      std::cout << result.body << std::flush;
    } else {
      std::ofstream out(common.out);
      if (!out) throw UsageError("cli", "cannot write '" + common.out + "'");
      out << result.body;
    }

    json parameters = json::object();
    for (const auto* opt : sub->get_options()) {
      const std::string name = opt->get_name();
      if (opt->count() == 0 || name == "--help") continue;
      const auto values = opt->results();
      parameters[name.substr(name.find_first_not_of('-'))] =
          opt->get_expected_max() == 0 ? json(true) : (values.size() == 1 ? json(values[0]) : json(values));
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const json manifest{{"command", command},
                        {"parameters", parameters},
                        {"seed", command == "verify" && !seed_given ? VerifyContext{}.seed : common.seed},
                        {"precision_digits", digits},
                        {"threads", thread_total},
                        {"version", HCIZLAB_VERSION},
                        {"wall_time_seconds", seconds},
                        {"exit_code", result.exit}};
    const std::string manifest_path = !common.manifest.empty() ? common.manifest
                                      : !common.out.empty()    ? common.out + ".manifest.json"
                                                               : "hcizlab-" + command + ".manifest.json";
    std::ofstream(manifest_path) << manifest.dump(2) << '\n';
    return result.exit;
  } catch (const Error& e) {
    report_error(to_string(e.code()), e.module(), e.what());
    return exit_code(e.code());
  } catch (const std::exception& e) {
    report_error("internal", command, e.what());
    return kExitVerification;
  }
}
