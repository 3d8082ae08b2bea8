#include "sixj/recoupling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sixj/error.hpp"

namespace sixj {

namespace {

mpz_class factorial(std::int64_t n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// sqrt(n/d) as mantissa * 2^exp with a >= 128-bit integer square root.
struct ScaledRoot {
  mpz_class root;
  long shift = 0;
};

ScaledRoot scaled_sqrt(const mpq_class& r) {
  const mpz_class& n = r.get_num();
  const mpz_class& d = r.get_den();
  const long excess = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) -
                      static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
  const long shift = std::max(0L, (256 - excess) / 2 + 1);
  mpz_class q = n;
  q <<= static_cast<mp_bitcnt_t>(2 * shift);
  q /= d;
  ScaledRoot out;
  mpz_sqrt(out.root.get_mpz_t(), q.get_mpz_t());
  out.shift = shift;
  return out;
}

}  // namespace

double ExactValue::to_double() const {
  if (sign == 0 || radicand == 0) return 0.0;
  const auto s = scaled_sqrt(radicand);
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, s.root.get_mpz_t());
  return sign * std::ldexp(mant, static_cast<int>(exp - s.shift));
}

double ExactValue::log_abs() const {
  if (sign == 0 || radicand == 0) return -std::numeric_limits<double>::infinity();
  const auto s = scaled_sqrt(radicand);
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, s.root.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp - s.shift) * std::log(2.0);
}

mpq_class theta_exact(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (!is_admissible_triple(a, b, c)) throw Error(ErrorKind::Inadmissible, "theta triple");
  const auto i = (b + c - a) / 2, j = (a + c - b) / 2, k = (a + b - c) / 2;
  mpz_class num = factorial(i + j + k + 1) * factorial(i) * factorial(j) * factorial(k);
  if ((i + j + k) % 2) num = -num;
  mpq_class r(num, factorial(a) * factorial(b) * factorial(c));
  r.canonicalize();
  return r;
}

// Alternating single sum over s in [max face half-sum, min opposite-pair
// half-sum].  Terms are scaled to integers by the largest factorials of the
// range so the sum accumulates in mpz and each step is one exact division.
mpq_class tet_exact(const LabelSextuple& l) {
  if (!is_admissible_sextuple(l)) throw Error(ErrorKind::Inadmissible, "tetrahedral labels " + to_string(l));

  std::array<std::int64_t, 4> face{};
  for (std::size_t f = 0; f < 4; ++f) face[f] = (l[kFaces[f][0]] + l[kFaces[f][1]] + l[kFaces[f][2]]) / 2;
  const std::array<std::int64_t, 3> pair{
      (l[kA] + l[kD] + l[kB] + l[kE]) / 2,
      (l[kA] + l[kD] + l[kC] + l[kF]) / 2,
      (l[kB] + l[kE] + l[kC] + l[kF]) / 2,
  };
  const auto lo = *std::max_element(face.begin(), face.end());
  const auto hi = *std::min_element(pair.begin(), pair.end());

  // term(s) * scale with scale = prod_i (hi - face_i)! prod_j (pair_j - lo)!
  mpz_class term = factorial(lo + 1);
  for (auto fi : face) term = term * factorial(hi - fi) / factorial(lo - fi);
  if (lo % 2) term = -term;

  mpz_class sum = 0;
  for (auto s = lo; s <= hi; ++s) {
    sum += term;
    if (s == hi) break;
    term *= -(s + 2);
    for (auto pj : pair) term *= pj - s;
    for (auto fi : face) mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(s + 1 - fi));
  }

  mpz_class scale = 1;
  for (auto fi : face) scale *= factorial(hi - fi);
  for (auto pj : pair) scale *= factorial(pj - lo);

  mpz_class internal = 1;
  for (auto pj : pair)
    for (auto fi : face) internal *= factorial(pj - fi);
  mpz_class edges = 1;
  for (int e = 0; e < 6; ++e) edges *= factorial(l[e]);

  mpq_class r(internal * sum, edges * scale);
  r.canonicalize();
  return r;
}

ExactValue sixj_exact(const LabelSextuple& labels) {
  ExactValue v;
  if (!is_admissible_sextuple(labels)) return v;
  mpq_class norm = 1;
  for (std::size_t f = 0; f < 4; ++f) {
    v.thetas[f] = theta_exact(labels[kFaces[f][0]], labels[kFaces[f][1]], labels[kFaces[f][2]]);
    norm *= abs(v.thetas[f]);
  }
  v.tet = tet_exact(labels);
  v.radicand = v.tet * v.tet / norm;
  v.sign = sgn(v.tet);
  return v;
}

}  // namespace sixj
