#include "sixj/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>
#include <thread>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "sixj/error.hpp"
#include "sixj/geometry.hpp"

namespace sixj {

namespace {

using std::numbers::pi;

struct EuclideanData {
  double volume;
  std::array<double, 6> angles;
};

EuclideanData euclidean_data(const EdgeLengths& l, bool flat_is_error_kind_flat) {
  switch (classify(l)) {
    case TetClass::Euclidean: break;
    case TetClass::Flat:
      if (flat_is_error_kind_flat) throw Error(ErrorKind::FlatUnsupported, "flat tetrahedron is not covered by the formula");
      throw Error(ErrorKind::NotEuclidean, "flat tetrahedron");
    case TetClass::Minkowskian: throw Error(ErrorKind::NotEuclidean, "Minkowskian tetrahedron");
  }
  return {volume(l), exterior_dihedral_angles(l)};
}

EdgeLengths shifted_lengths(const LabelSextuple& labels, std::int64_t k) {
  LabelSextuple s;
  for (int i = 0; i < 6; ++i) s[i] = k * labels[i] + 1;
  return EdgeLengths::from_labels(s);
}

double phase(const LabelSextuple& labels, std::int64_t k, const std::array<double, 6>& angles) {
  double sum = 0;
  for (int i = 0; i < 6; ++i)
    sum += static_cast<double>(k * labels[i] + 1) * angles[static_cast<std::size_t>(i)] / 2;
  return sum + pi / 4;
}

void require_positive_k(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("scale k must be at least 1");
}

}  // namespace

double pr_theorem_estimate(const LabelSextuple& labels, std::int64_t k) {
  require_positive_k(k);
  const auto geo = euclidean_data(EdgeLengths::from_labels(labels), true);
  const double k3 = std::pow(static_cast<double>(k), 3);
  return std::sqrt(2 / (3 * pi * geo.volume * k3)) * std::cos(phase(labels, k, geo.angles));
}

double pr_original_estimate(const LabelSextuple& labels, std::int64_t k) {
  require_positive_k(k);
  const auto geo = euclidean_data(shifted_lengths(labels, k), false);
  return std::sqrt(2 / (3 * pi * geo.volume)) * std::cos(phase(labels, k, geo.angles));
}

double wigner_mean_square(const LabelSextuple& labels, std::int64_t k) {
  require_positive_k(k);
  const auto geo = euclidean_data(EdgeLengths::from_labels(labels), false);
  return 1 / (3 * pi * geo.volume * std::pow(static_cast<double>(k), 3));
}

double phase_mismatch(const LabelSextuple& labels, std::int64_t k) {
  require_positive_k(k);
  const auto scaled = euclidean_data(EdgeLengths::from_labels(labels), false);
  const auto shifted = euclidean_data(shifted_lengths(labels, k), false);
  double sum = 0;
  for (std::size_t i = 0; i < 6; ++i)
    sum += static_cast<double>(k * labels[static_cast<int>(i)] + 1) * (shifted.angles[i] - scaled.angles[i]);
  return sum;
}

std::vector<AsymptoticSample> series_compare(const LabelSextuple& labels, std::int64_t k_min, std::int64_t k_max,
                                             const ExactProvider& exact) {
  require_positive_k(k_min);
  if (k_max < k_min) return {};
  const auto count = static_cast<std::size_t>(k_max - k_min + 1);
  std::vector<AsymptoticSample> rows(count);

  auto fill = [&](std::size_t idx) {
    auto& row = rows[idx];
    row.k = k_min + static_cast<std::int64_t>(idx);
    row.exact = exact(scale_labels(labels, row.k)).to_double();
    try {
      row.pr_theorem = pr_theorem_estimate(labels, row.k);
      row.abs_err_theorem = std::abs(row.exact - *row.pr_theorem);
    } catch (const Error&) {
    }
    try {
      row.pr_original = pr_original_estimate(labels, row.k);
      row.abs_err_original = std::abs(row.exact - *row.pr_original);
    } catch (const Error&) {
    }
  };

  // Workers take interleaved indices; each row is written by exactly one worker.
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, count);
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t idx = w; idx < count; idx += workers) fill(idx);
    }));
  for (auto& j : jobs) j.get();
  return rows;
}

double rotation_exact(std::int64_t k, double beta) {
  const double x = std::cos(beta);
  double prev = 1.0, cur = x;
  if (k == 0) return prev;
  for (std::int64_t n = 1; n < k; ++n) {
    const double next = ((2 * n + 1) * x * cur - n * prev) / static_cast<double>(n + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

double rotation_rep_oracle(std::int64_t k, double beta) {
  if (k < 0) throw std::invalid_argument("negative k");
  if (k > kRotationOracleCap) throw Error(ErrorKind::CapExceeded, "rotation oracle is limited to k <= 30");
  using real = long double;
  const int n = static_cast<int>(2 * k);
  const real c = std::cos(static_cast<real>(beta) / 2), s = std::sin(static_cast<real>(beta) / 2);

  std::vector<std::vector<real>> binom(static_cast<std::size_t>(n + 1), std::vector<real>(static_cast<std::size_t>(n + 1), 0));
  for (int i = 0; i <= n; ++i) {
    binom[static_cast<std::size_t>(i)][0] = 1;
    for (int j = 1; j <= i; ++j)
      binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          (j < i ? binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] : 0);
  }
  auto C = [&](int a, int b) { return binom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };

  // Column j: image of Z^(n-j) W^j under Z -> cZ - sW, W -> sZ + cW,
  // rescaled to the orthonormal basis sqrt(C(n,j)) Z^(n-j) W^j.
  std::vector<std::vector<real>> m(static_cast<std::size_t>(n + 1), std::vector<real>(static_cast<std::size_t>(n + 1), 0));
  for (int j = 0; j <= n; ++j) {
    std::vector<real> coeff(static_cast<std::size_t>(n + 1), 0);  // by power of W
    for (int t = 0; t <= n - j; ++t)
      for (int u = 0; u <= j; ++u)
        coeff[static_cast<std::size_t>(t + u)] += C(n - j, t) * std::pow(c, n - j - t) * std::pow(-s, t) * C(j, u) *
                                                  std::pow(s, j - u) * std::pow(c, u);
    for (int i = 0; i <= n; ++i)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          coeff[static_cast<std::size_t>(i)] * std::sqrt(C(n, j) / C(n, i));
  }
  return static_cast<double>(m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)]);
}

double rotation_asymptotic(std::int64_t k, double beta) {
  if (!(beta > 0 && beta < pi)) throw Error(ErrorKind::DegenerateAngle, "beta must lie strictly between 0 and pi");
  require_positive_k(k);
  const double kd = static_cast<double>(k);
  return std::sqrt(2 / (pi * kd * std::sin(beta))) * std::cos((2 * kd + 1) * beta / 2 + pi / 4);
}

mpq_class section_norm_exact(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("negative k");
  mpz_class fk, f2k1;
  mpz_fac_ui(fk.get_mpz_t(), static_cast<unsigned long>(k));
  mpz_fac_ui(f2k1.get_mpz_t(), static_cast<unsigned long>(2 * k + 1));
  mpq_class r(2 * mpz_class(static_cast<long>(k)) * fk * fk, f2k1);
  r.canonicalize();
  return r;
}

double section_norm_quadrature(std::int64_t k, QuadratureRange range) {
  if (k < 0) throw std::invalid_argument("negative k");
  if (k > kQuadratureCap) throw Error(ErrorKind::CapExceeded, "quadrature is limited to k <= 500");
  using real = long double;
  // The 4^-k factor is applied afterwards so the integrand stays O(1).
  auto f = [k](real z) { return std::pow(1 - z * z, static_cast<real>(k)); };
  using Quad = boost::math::quadrature::gauss_kronrod<real, 61>;
  const real integral = range == QuadratureRange::Full ? Quad::integrate(f, -1.0L, 1.0L, 15, 1e-15L)
                                                       : 2 * Quad::integrate(f, 0.0L, 1.0L, 15, 1e-15L);
  return static_cast<double>(std::ldexp(static_cast<real>(k) * integral, static_cast<int>(-2 * k)));
}

}  // namespace sixj
