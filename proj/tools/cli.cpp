#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "sixj/asymptotics.hpp"
#include "sixj/error.hpp"
#include "sixj/geometry.hpp"
#include "sixj/io.hpp"
#include "sixj/penrose.hpp"
#include "sixj/recoupling.hpp"
#include "sixj/regge.hpp"

namespace sixj::cli {

namespace {

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::int64_t parse_natural(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw BadInput("expected a natural number, got '" + s + "'");
  try {
    return std::stoll(s);
  } catch (const std::out_of_range&) {
    throw BadInput("label out of range: " + s);
  }
}

std::vector<std::int64_t> parse_naturals(const std::string& s, std::size_t n_min, std::size_t n_max) {
  const auto parts = split(s, ',');
  if (parts.size() < n_min || parts.size() > n_max)
    throw BadInput(fmt::format("expected {} comma-separated labels, got '{}'",
                               n_min == n_max ? std::to_string(n_min) : fmt::format("{} or {}", n_min, n_max), s));
  std::vector<std::int64_t> out;
  for (const auto& p : parts) out.push_back(parse_natural(p));
  return out;
}

LabelSextuple parse_sextuple(const std::string& s) {
  const auto v = parse_naturals(s, 6, 6);
  LabelSextuple l;
  for (int i = 0; i < 6; ++i) l[i] = v[static_cast<std::size_t>(i)];
  return l;
}

// "7", "3/2" or "0.125", exactly.
mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  const auto dot = s.find('.');
  if (dot == std::string::npos) {
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw BadInput("malformed rational '" + s + "'");
    q.canonicalize();
  } else {
    const std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    auto digits = [](const std::string& t) {
      return std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    if ((whole.empty() && frac.empty()) || !digits(whole) || !digits(frac)) throw BadInput("malformed decimal '" + s + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    q = mpq_class(mpz_class(whole.empty() ? "0" : whole) * scale + mpz_class(frac.empty() ? "0" : frac), scale);
    q.canonicalize();
  }
  if (q < 0) throw BadInput("lengths must be nonnegative: '" + s + "'");
  return q;
}

std::string json_str(const std::string& s) { return nlohmann::json(s).dump(); }

std::string json_num(std::optional<double> x) { return x ? format_double(*x) : "null"; }

std::string json_labels(const LabelSextuple& l) { return "[" + to_string(l) + "]"; }

std::string exact_fields(const ExactValue& v) {
  return fmt::format("\"sign\":{},\"radicand_num\":{},\"radicand_den\":{},\"value\":{}", v.sign,
                     json_str(v.radicand.get_num().get_str()), json_str(v.radicand.get_den().get_str()),
                     format_double(v.to_double()));
}

// Renders to a string first so a failed open leaves no partial file.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoFailure("cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) throw IoFailure("failed writing '" + path + "'");
}

int cmd_exact(const std::string& labels_arg, std::ostream& out) {
  const auto labels = parse_sextuple(labels_arg);
  const bool admissible = is_admissible_sextuple(labels);
  const auto v = sixj_exact(labels);
  out << "{\"labels\":" << json_labels(labels) << ",\"admissible\":" << (admissible ? "true" : "false") << ","
      << exact_fields(v) << "}\n";
  return kOk;
}

int cmd_oracle(const std::string& labels_arg, int cap, std::ostream& out) {
  if (cap < 0) throw BadInput("oracle cap must be nonnegative");
  const auto v = parse_naturals(labels_arg, 3, 6);
  if (v.size() != 3 && v.size() != 6) throw BadInput("oracle takes 3 (theta) or 6 (tetrahedral) labels");
  mpq_class oracle, closed;
  std::string net;
  if (v.size() == 3) {
    net = "theta";
    oracle = penrose_evaluate(theta_net(v[0], v[1], v[2]), cap);
    closed = theta_exact(v[0], v[1], v[2]);
  } else {
    net = "tetrahedral";
    LabelSextuple l;
    for (int i = 0; i < 6; ++i) l[i] = v[static_cast<std::size_t>(i)];
    oracle = penrose_evaluate(mercedes_net(l), cap);
    closed = tet_exact(l);
  }
  std::string labels = "[";
  for (std::size_t i = 0; i < v.size(); ++i) labels += (i ? "," : "") + std::to_string(v[i]);
  labels += "]";
  out << fmt::format(
      "{{\"net\":\"{}\",\"labels\":{},\"oracle_num\":{},\"oracle_den\":{},\"closed_num\":{},\"closed_den\":{},\"agree\":{}}}\n",
      net, labels, json_str(oracle.get_num().get_str()), json_str(oracle.get_den().get_str()),
      json_str(closed.get_num().get_str()), json_str(closed.get_den().get_str()), oracle == closed ? "true" : "false");
  return kOk;
}

int cmd_series(const std::string& labels_arg, std::int64_t k_min, std::int64_t k_max, const std::string& format,
               const std::string& out_path, const std::string& cache_path, std::ostream& out, std::ostream& err) {
  const auto labels = parse_sextuple(labels_arg);
  if (k_min < 1 || k_max < k_min) throw BadInput("need 1 <= k-min <= k-max");

  std::optional<SixjCache> cache;
  std::vector<AsymptoticSample> rows;
  if (!cache_path.empty()) {
    cache.emplace(cache_path);
    cache->load();
    rows = series_compare(labels, k_min, k_max, [&](const LabelSextuple& l) { return cache->get_or_compute(l); });
    if (const auto bad = cache->spot_check(0.05); !bad.empty()) {
      for (const auto& b : bad) err << "cache record for " << to_string(b) << " does not match recomputation\n";
      throw IoFailure("cache '" + cache_path + "' is inconsistent");
    }
    if (!cache->flush()) throw IoFailure("cannot append to cache '" + cache_path + "'");
  } else {
    rows = series_compare(labels, k_min, k_max);
  }

  std::ostringstream text;
  if (format == "jsonl")
    write_series_jsonl(text, rows);
  else
    write_series_csv(text, rows);
  emit(text.str(), out_path, out);
  return kOk;
}

int cmd_geom(const std::string& labels_arg, std::ostream& out) {
  const auto parts = split(labels_arg, ',');
  if (parts.size() != 6) throw BadInput("expected 6 comma-separated lengths, got '" + labels_arg + "'");
  std::array<mpq_class, 6> v;
  for (std::size_t i = 0; i < 6; ++i) v[i] = parse_rational(parts[i]);
  const EdgeLengths lengths(v);
  const auto m = measure(lengths);

  std::string angles = "null", hadwiger = "null";
  if (m.cls == TetClass::Euclidean) {
    const auto& th = *m.exterior_angles;
    angles = fmt::format("{{\"a\":{},\"b\":{},\"c\":{},\"d\":{},\"e\":{},\"f\":{}}}", format_double(th[0]),
                         format_double(th[1]), format_double(th[2]), format_double(th[3]), format_double(th[4]),
                         format_double(th[5]));
    const auto h = hadwiger_measures(lengths);
    hadwiger = fmt::format("{{\"mu0\":{},\"mu1\":{},\"mu2\":{},\"mu3\":{}}}", format_double(h.mu0),
                           format_double(h.mu1), format_double(h.mu2), format_double(h.mu3));
  }
  std::string shown = "[";
  for (std::size_t i = 0; i < 6; ++i) shown += (i ? "," : "") + json_str(v[i].get_str());
  shown += "]";
  out << "{\"lengths\":" << shown << ",\"classification\":\"" << to_string(m.cls)
      << "\",\"gram_determinant\":" << json_str(gram_determinant(lengths).get_str())
      << ",\"cayley_menger\":" << json_str(cayley_menger_det(lengths).get_str()) << ",\"volume\":" << json_num(m.volume)
      << ",\"exterior_angles\":" << angles << ",\"hadwiger\":" << hadwiger << "}\n";
  return kOk;
}

int cmd_regge(const std::string& labels_arg, const std::string& format, std::ostream& out) {
  const auto labels = parse_sextuple(labels_arg);
  const auto orbit = orbit_congruence_classes(labels);
  const bool euclidean = std::all_of(orbit.classes.begin(), orbit.classes.end(),
                                     [](const OrbitClass& c) { return c.cls == TetClass::Euclidean; });
  std::optional<InvarianceReport> inv;
  if (euclidean) inv = invariance_report(labels);

  const bool csv = format != "jsonl";
  if (csv) out << "class,classification,volume,mu1,mu2,total_length,sixj_sign,sixj_radicand,sixj_value\n";
  for (const auto& c : orbit.classes) {
    const auto v = sixj_exact(c.canonical);
    if (csv) {
      out << '"' << to_string(c.canonical) << "\"," << to_string(c.cls) << ','
          << (c.volume ? format_double(*c.volume) : "") << ',' << (c.mu1 ? format_double(*c.mu1) : "") << ','
          << (c.mu2 ? format_double(*c.mu2) : "") << ',' << c.total_length << ',' << v.sign << ',' << v.radicand.get_str()
          << ',' << format_double(v.to_double()) << '\n';
    } else {
      out << "{\"class\":" << json_labels(c.canonical) << ",\"classification\":\"" << to_string(c.cls)
          << "\",\"volume\":" << json_num(c.volume) << ",\"mu1\":" << json_num(c.mu1) << ",\"mu2\":" << json_num(c.mu2)
          << ",\"total_length\":" << c.total_length << "," << exact_fields(v) << "}\n";
    }
  }

  auto flag = [&](bool InvarianceReport::*field) -> std::string {
    if (!inv) return "null";
    return (*inv).*field ? "true" : "false";
  };
  std::string transport = "null";
  if (euclidean) {
    transport = "{";
    for (auto pair : kOppositePairs) {
      if (transport.size() > 1) transport += ",";
      const auto t = angle_transport_check(labels, pair);
      transport += fmt::format("\"{}\":{}", to_string(pair), t.ok ? "true" : "false");
    }
    transport += "}";
  }
  const std::string verdict = !inv ? "not-applicable" : (inv->holds() ? "holds" : "violated");
  const std::string summary = fmt::format(
      "{{\"summary\":{{\"labels\":{},\"classes\":{},\"mirror_classes\":{},\"euclidean\":{},\"volume_constant\":{},"
      "\"mu1_constant\":{},\"total_length_constant\":{},\"sixj_constant\":{},\"mu2_constant\":{},\"angle_transport\":{},"
      "\"invariance\":\"{}\"}}}}",
      json_labels(labels), orbit.classes.size(), orbit.mirror_class_count, euclidean ? "true" : "false",
      flag(&InvarianceReport::volume_constant), flag(&InvarianceReport::mu1_constant),
      flag(&InvarianceReport::length_constant), flag(&InvarianceReport::sixj_constant),
      flag(&InvarianceReport::mu2_constant), transport, verdict);
  out << (csv ? "# " : "") << summary << '\n';
  return kOk;
}

int cmd_wigner(std::int64_t k, double beta, std::ostream& out) {
  if (k < 0) throw BadInput("k must be nonnegative");
  if (!(beta >= 0 && beta <= std::numbers::pi)) throw BadInput("beta must lie in [0, pi]");
  std::optional<double> oracle, asymptotic;
  if (k <= kRotationOracleCap) oracle = rotation_rep_oracle(k, beta);
  if (k >= 1 && beta > 0 && beta < std::numbers::pi) asymptotic = rotation_asymptotic(k, beta);
  out << "{\"k\":" << k << ",\"beta\":" << format_double(beta) << ",\"exact\":" << format_double(rotation_exact(k, beta))
      << ",\"oracle\":" << json_num(oracle) << ",\"asymptotic\":" << json_num(asymptotic) << "}\n";
  return kOk;
}

int cmd_norm_demo(std::int64_t k, std::ostream& out) {
  if (k < 1) throw BadInput("k must be at least 1");
  const auto exact = section_norm_exact(k);
  std::optional<double> quad;
  if (k <= kQuadratureCap) quad = section_norm_quadrature(k);
  // log of exact * 4^k / sqrt(pi k), via mpz sizes to survive large k
  long en = 0, ed = 0;
  const double mn = mpz_get_d_2exp(&en, exact.get_num().get_mpz_t());
  const double md = mpz_get_d_2exp(&ed, exact.get_den().get_mpz_t());
  const double log2_ratio = std::log2(mn / md) + static_cast<double>(en - ed) + 2.0 * static_cast<double>(k) -
                            0.5 * std::log2(std::numbers::pi * static_cast<double>(k));
  const double asymptotic = std::ldexp(std::sqrt(std::numbers::pi * static_cast<double>(k)), static_cast<int>(-2 * k));
  out << "{\"k\":" << k << ",\"exact_num\":" << json_str(exact.get_num().get_str())
      << ",\"exact_den\":" << json_str(exact.get_den().get_str()) << ",\"exact\":" << format_double(exact.get_d())
      << ",\"quadrature\":" << json_num(quad) << ",\"asymptotic\":" << format_double(asymptotic)
      << ",\"exact_over_asymptotic\":" << format_double(std::exp2(log2_ratio)) << "}\n";
  return kOk;
}

int cmd_plotscript(const std::string& csv_path, const std::string& labels_arg, const std::string& out_path,
                   std::ostream& out) {
  const auto labels = parse_sextuple(labels_arg);
  std::ifstream in(csv_path);
  if (!in) throw IoFailure("cannot read '" + csv_path + "'");
  try {
    read_series_csv(in);
  } catch (const std::exception& e) {
    throw BadInput(std::string("not a series CSV: ") + e.what());
  }
  const auto lengths = EdgeLengths::from_labels(labels);
  if (classify(lengths) != TetClass::Euclidean) throw Error(ErrorKind::NotEuclidean, "envelope needs a Euclidean tetrahedron");
  emit(plot_script(csv_path, labels, volume(lengths)), out_path, out);
  return kOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FaceViolation:
    case ErrorKind::NotEuclidean:
    case ErrorKind::FlatUnsupported:
    case ErrorKind::StepLeavesEuclideanRegion: return kGeometryFailure;
    default: return kBadInput;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact 6j-symbols, tetrahedron geometry and asymptotic checks"};
  app.require_subcommand(1);

  std::string labels, out_path, cache_path, format = "csv", csv_path;
  std::int64_t k_min = 1, k_max = 20, k = 10;
  double beta = 1.0;
  int oracle_cap = kDefaultOracleCap;

  auto* exact = app.add_subcommand("exact", "Exact 6j-symbol of six labels");
  exact->add_option("--labels", labels, "A,B,C,D,E,F")->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force spin-network evaluation (3 labels: theta, 6: tetrahedral)");
  oracle->add_option("--labels", labels, "A,B,C or A,B,C,D,E,F")->required();
  oracle->add_option("--oracle-cap", oracle_cap, "Largest label the oracle accepts")->envname("SIXJ_ORACLE_CAP");

  auto* series = app.add_subcommand("series", "Exact values against both asymptotic formulas for k in a range");
  series->add_option("--labels", labels, "A,B,C,D,E,F")->required();
  series->add_option("--k-min", k_min);
  series->add_option("--k-max", k_max);
  series->add_option("--out", out_path, "Output file (default stdout)");
  series->add_option("--cache", cache_path, "JSONL cache of exact values")->envname("SIXJ_CACHE");
  series->add_option("--format", format)->check(CLI::IsMember({"csv", "jsonl"}));

  auto* geom = app.add_subcommand("geom", "Classification, volume, angles and Hadwiger measures of a tetrahedron");
  geom->add_option("--labels", labels, "six lengths: integers, p/q or decimals")->required();

  auto* regge = app.add_subcommand("regge", "Congruence classes of the 144-element symmetry orbit");
  regge->add_option("--labels", labels, "A,B,C,D,E,F")->required();
  regge->add_option("--format", format)->check(CLI::IsMember({"csv", "jsonl"}));

  auto* wigner = app.add_subcommand("wigner", "Zero-weight rotation matrix element, exact and asymptotic");
  wigner->add_option("--k", k)->required();
  wigner->add_option("--beta", beta)->required();

  auto* norm = app.add_subcommand("norm-demo", "Norm of the invariant section: exact, quadrature, asymptotic");
  norm->add_option("--k", k)->required();

  auto* plot = app.add_subcommand("plotscript", "Write a matplotlib script for a series CSV");
  plot->add_option("csv", csv_path, "Series CSV")->required();
  plot->add_option("--labels", labels, "Base labels of the series")->required();
  plot->add_option("--out", out_path, "Script path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*exact) return cmd_exact(labels, out);
    if (*oracle) return cmd_oracle(labels, oracle_cap, out);
    if (*series) return cmd_series(labels, k_min, k_max, format, out_path, cache_path, out, err);
    if (*geom) return cmd_geom(labels, out);
    if (*regge) return cmd_regge(labels, format, out);
    if (*wigner) return cmd_wigner(k, beta, out);
    if (*norm) return cmd_norm_demo(k, out);
    if (*plot) return cmd_plotscript(csv_path, labels, out_path, out);
  } catch (const BadInput& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kBadInput;
}

}  // namespace sixj::cli
