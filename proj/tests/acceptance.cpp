// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "oracles.hpp"
#include "sixj/asymptotics.hpp"
#include "sixj/error.hpp"
#include "sixj/geometry.hpp"
#include "sixj/penrose.hpp"
#include "sixj/recoupling.hpp"
#include "sixj/regge.hpp"

using namespace sixj;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

const LabelSextuple kTwos{{2, 2, 2, 2, 2, 2}};
const LabelSextuple kGeneric{{4, 6, 8, 10, 6, 8}};
const LabelSextuple kMink{{10, 6, 6, 10, 6, 6}};

bool is_euclidean(const LabelSextuple& l) {
  try {
    return classify(EdgeLengths::from_labels(l)) == TetClass::Euclidean;
  } catch (const Error&) {
    return false;
  }
}

double norm(const std::array<double, 6>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

struct LineFit {
  double intercept, slope, rss, r2;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  double rss = 0, tss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - intercept - slope * x[i];
    rss += r * r;
    tss += (y[i] - sy / n) * (y[i] - sy / n);
  }
  return {intercept, slope, rss, 1 - rss / tss};
}

Outcome oracle_equivalence() {
  int tets = 0, thetas = 0, bad = 0;
  LabelSextuple l;
  for (l[0] = 0; l[0] <= 3; ++l[0])
    for (l[1] = 0; l[1] <= 3; ++l[1])
      for (l[2] = 0; l[2] <= 3; ++l[2])
        for (l[3] = 0; l[3] <= 3; ++l[3])
          for (l[4] = 0; l[4] <= 3; ++l[4])
            for (l[5] = 0; l[5] <= 3; ++l[5]) {
              if (!is_admissible_sextuple(l)) continue;
              ++tets;
              if (tet_exact(l) != penrose_evaluate(mercedes_net(l))) ++bad;
            }
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = 0; c <= 6; ++c) {
        if (!is_admissible_triple(a, b, c)) continue;
        ++thetas;
        if (theta_exact(a, b, c) != penrose_evaluate(theta_net(a, b, c))) ++bad;
      }
  return {bad == 0, fmt::format("{} tetrahedral nets, {} theta nets, {} mismatches", tets, thetas, bad)};
}

Outcome regge_algebraic() {
  std::mt19937_64 rng(1001);
  std::vector<LabelSextuple> inputs{kGeneric};
  for (int i = 0; i < 20; ++i) inputs.push_back(oracle::random_admissible(rng, 12));
  int bad = 0, images = 0;
  for (const auto& l : inputs) {
    const auto v = sixj_exact(l);
    for (const auto& g : symmetry_group()) {
      ++images;
      if (!sixj_exact(g.apply(l)).same_value(v)) ++bad;
    }
  }
  return {bad == 0 && symmetry_group().size() == 144,
          fmt::format("{} orbits x {} elements = {} images, {} mismatches", inputs.size(), symmetry_group().size(),
                      images, bad)};
}

Outcome orbit_classes() {
  const auto orbit = orbit_congruence_classes(kGeneric);
  bool all_euclidean = true;
  for (const auto& c : orbit.classes) all_euclidean = all_euclidean && c.cls == TetClass::Euclidean;
  const auto rep = invariance_report(kGeneric);
  const bool count_ok = orbit.classes.size() == 12;
  const bool pass = count_ok && all_euclidean && rep.volume_constant && rep.mu1_constant && rep.length_constant &&
                    !rep.mu2_constant;
  return {pass, fmt::format("classes={} (need 12; {} up to mirror images), all Euclidean={}, V const={}, mu1 const={}, "
                            "sum l const={}, mu2 non-constant={}",
                            orbit.classes.size(), orbit.mirror_class_count, all_euclidean, rep.volume_constant,
                            rep.mu1_constant, rep.length_constant, !rep.mu2_constant)};
}

Outcome dehn_surrogate() {
  std::mt19937_64 rng(2002);
  std::vector<LabelSextuple> inputs{kGeneric};
  while (inputs.size() < 21) {
    const auto l = oracle::random_admissible(rng, 20);
    bool ok = is_euclidean(l);
    for (auto p : kOppositePairs) ok = ok && is_euclidean(regge_transform(l, p));
    if (ok) inputs.push_back(l);
  }
  int bad = 0;
  double worst = 0;
  for (const auto& l : inputs)
    for (auto p : kOppositePairs) {
      const auto t = angle_transport_check(l, p, 1e-9);
      if (!t.ok) ++bad;
      for (double r : t.residuals) worst = std::max(worst, r);
    }
  return {bad == 0, fmt::format("{} sextuples x 3 pairs, {} failures, worst residual {:.2e}", inputs.size(), bad, worst)};
}

Outcome euclidean_windows() {
  const auto rows = series_compare(kTwos, 30, 100);
  double lo = 1e300, hi = -1e300;
  for (std::size_t start = 0; start + 20 <= rows.size(); ++start) {
    double se = 0, st = 0;
    for (std::size_t i = start; i < start + 20; ++i) {
      se += rows[i].exact * rows[i].exact;
      st += *rows[i].pr_theorem * *rows[i].pr_theorem;
    }
    const double ratio = std::sqrt(se / st);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  return {lo >= 0.95 && hi <= 1.05, fmt::format("52 windows, RMS ratio in [{:.4f}, {:.4f}]", lo, hi)};
}

Outcome wigner_mean() {
  const double v = volume(EdgeLengths::from_labels(kTwos));
  const auto rows = series_compare(kTwos, 40, 100);
  double sum = 0;
  for (const auto& r : rows) sum += r.exact * r.exact * 3 * pi * v * std::pow(static_cast<double>(r.k), 3);
  const double mean = sum / static_cast<double>(rows.size());
  return {mean >= 0.90 && mean <= 1.10, fmt::format("mean of exact^2 * 3 pi V k^3 over k=40..100 is {:.4f}", mean)};
}

Outcome minkowskian_decay() {
  std::vector<double> k, logk, y;
  for (std::int64_t i = 2; i <= 16; ++i) {
    k.push_back(static_cast<double>(i));
    logk.push_back(std::log(static_cast<double>(i)));
    y.push_back(sixj_exact(scale_labels(kMink, i)).log_abs());
  }
  const auto exp_fit = fit_line(k, y);
  // log|6j| = c - p log k with p <= 5
  auto power = fit_line(logk, y);
  double p = -power.slope;
  if (p > 5) {
    p = 5;
    double c = 0;
    for (std::size_t i = 0; i < y.size(); ++i) c += y[i] + p * logk[i];
    c /= static_cast<double>(y.size());
    double rss = 0;
    for (std::size_t i = 0; i < y.size(); ++i) rss += (y[i] - c + p * logk[i]) * (y[i] - c + p * logk[i]);
    power.rss = rss;
  }
  const bool pass = exp_fit.slope < 0 && exp_fit.r2 >= 0.9 && exp_fit.rss < power.rss;
  return {pass, fmt::format("slope {:.4f}/k, R^2 {:.5f}, RSS exponential {:.3e} vs power (p={:.2f}) {:.3e}",
                            exp_fit.slope, exp_fit.r2, exp_fit.rss, p, power.rss)};
}

Outcome schlafli_consistency() {
  // envelope of |theorem - original| k^{3/2} over windows of ten k
  std::vector<double> centers, envelope;
  for (std::int64_t start = 10; start < 100; start += 10) {
    double m = 0;
    for (std::int64_t k = start; k < start + 10; ++k)
      m = std::max(m, std::abs(pr_theorem_estimate(kTwos, k) - pr_original_estimate(kTwos, k)) * std::pow(k, 1.5));
    centers.push_back(std::log(static_cast<double>(start) + 4.5));
    envelope.push_back(std::log(m));
  }
  const auto trend = fit_line(centers, envelope);
  const bool decreasing = trend.slope < 0 && envelope.back() < envelope.front();

  std::mt19937_64 rng(3003);
  std::normal_distribution<double> n(0, 1);
  int samples = 0, bad = 0;
  double worst = 0;
  while (samples < 100) {
    const auto raw = oracle::random_tetrahedron(rng);
    const auto l = EdgeLengths::from_doubles(raw);
    const double nl = norm(raw);
    if (classify(l) != TetClass::Euclidean || gram_determinant(l).get_d() / std::pow(nl, 6) < 1e-4) continue;
    std::array<double, 6> v{};
    for (auto& x : v) x = n(rng);
    const double nv = norm(v);
    const double r = std::abs(schlafli_residual(l, v));
    worst = std::max(worst, r / (nl * nv));
    if (r > 1e-6 * nl * nv) ++bad;
    ++samples;
  }
  return {decreasing && bad == 0,
          fmt::format("envelope {:.3e} -> {:.3e}, log-log slope {:.2f}; Schlafli {} samples, {} over bound, worst "
                      "|r|/(|l||v|) {:.2e}",
                      std::exp(envelope.front()), std::exp(envelope.back()), trend.slope, samples, bad, worst)};
}

Outcome rotation_warmup() {
  double worst_ratio = 0;
  for (double beta : {pi / 4, pi / 3, pi / 2, 2 * pi / 3}) {
    const double bound = 0.05 * std::sqrt(2 / (50 * pi * std::sin(beta)));
    worst_ratio = std::max(worst_ratio, std::abs(rotation_exact(50, beta) - rotation_asymptotic(50, beta)) / bound);
  }
  double worst_oracle = 0;
  for (double beta : {0.0, 0.3, 1.0, pi / 2, 2.0, 2.8, pi})
    for (std::int64_t k = 0; k <= 20; ++k)
      worst_oracle = std::max(worst_oracle, std::abs(rotation_exact(k, beta) - rotation_rep_oracle(k, beta)));
  return {worst_ratio <= 1 && worst_oracle <= 1e-9,
          fmt::format("k=50 error at most {:.3f} of the bound; recurrence vs matrix oracle (k<=20) {:.2e}", worst_ratio,
                      worst_oracle)};
}

Outcome section_norm() {
  int exact_bad = 0;
  for (unsigned long k = 1; k <= 400; ++k) {
    mpz_class fk, f2k1;
    mpz_fac_ui(fk.get_mpz_t(), k);
    mpz_fac_ui(f2k1.get_mpz_t(), 2 * k + 1);
    mpq_class want(mpz_class(2 * k) * fk * fk, f2k1);
    want.canonicalize();
    if (section_norm_exact(static_cast<std::int64_t>(k)) != want) ++exact_bad;
  }
  double worst = 0;
  for (std::int64_t k = 1; k <= 100; ++k) {
    const double exact = mpf_class(section_norm_exact(k), 256).get_d();
    worst = std::max(worst, std::abs(section_norm_quadrature(k) - exact) / exact);
  }
  mpf_class scaled(section_norm_exact(200), 256);
  mpf_mul_2exp(scaled.get_mpf_t(), scaled.get_mpf_t(), 400);
  const double ratio = scaled.get_d() / std::sqrt(pi * 200);
  return {exact_bad == 0 && worst <= 1e-8 && std::abs(ratio - 1) <= 0.01,
          fmt::format("closed form k=1..400 mismatches {}; quadrature worst rel err {:.2e} (k<=100); ratio at k=200 "
                      "{:.6f}",
                      exact_bad, worst, ratio)};
}

Outcome geometry_cross_check() {
  std::mt19937_64 rng(4004);
  std::uniform_int_distribution<int> num(0, 60), den(1, 12);
  int samples = 0, sign_bad = 0, vol_bad = 0, euclid = 0, mink = 0, flat = 0;
  while (samples < 1000) {
    std::array<mpq_class, 6> v;
    for (auto& x : v) {
      x = mpq_class(num(rng), den(rng));
      x.canonicalize();
    }
    std::optional<EdgeLengths> l;
    try {
      l.emplace(v);
    } catch (const Error&) {
      continue;
    }
    ++samples;
    const auto g = gram_determinant(*l);
    const auto cm = cayley_menger_det(*l);
    if (sgn(g) != sgn(cm)) ++sign_bad;
    if (sgn(g) > 0) {
      ++euclid;
      const double vol = volume(*l);
      if (!oracle::rel_close(288 * vol * vol, cm.get_d(), 1e-10)) ++vol_bad;
    } else if (sgn(g) < 0) {
      ++mink;
    } else {
      ++flat;
    }
  }
  return {sign_bad == 0 && vol_bad == 0,
          fmt::format("{} samples ({} Euclidean, {} Minkowskian, {} flat): {} sign mismatches, {} volume mismatches",
                      samples, euclid, mink, flat, sign_bad, vol_bad)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "oracle equivalence", oracle_equivalence},
      {2, "Regge algebraic invariance", regge_algebraic},
      {3, "congruence classes of (4,6,8,10,6,8)", orbit_classes},
      {4, "angle transport", dehn_surrogate},
      {5, "Euclidean asymptotics, sliding RMS", euclidean_windows},
      {6, "mean square", wigner_mean},
      {7, "Minkowskian decay", minkowskian_decay},
      {8, "theorem vs shifted formula; Schlafli", schlafli_consistency},
      {9, "rotation warm-up", rotation_warmup},
      {10, "invariant section norm", section_norm},
      {11, "Gram vs Cayley-Menger", geometry_cross_check},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }

  // context for criterion 3: an orbit without extra symmetry
  const auto generic = orbit_congruence_classes(LabelSextuple{{22, 20, 16, 29, 25, 19}});
  std::printf("[INFO] orbit of (22,20,16,29,25,19): %zu classes, %zu up to mirror images\n", generic.classes.size(),
              generic.mirror_class_count);

  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
