#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "sixj/labels.hpp"
#include "sixj/recoupling.hpp"

namespace sixj {

/// sqrt(2 / (3 pi V k^3)) cos(sum (k l + 1) theta / 2 + pi / 4) with V and
/// theta taken from the unscaled tetrahedron.
/// Throws Error{NotEuclidean} for Minkowskian, Error{FlatUnsupported} for flat labels.
double pr_theorem_estimate(const LabelSextuple& labels, std::int64_t k);

/// Same form evaluated on the shifted tetrahedron with edges k l + 1.
/// Throws Error{NotEuclidean} unless the shifted tetrahedron is Euclidean.
double pr_original_estimate(const LabelSextuple& labels, std::int64_t k);

/// Local mean of the squared symbol, 1 / (3 pi V k^3).
double wigner_mean_square(const LabelSextuple& labels, std::int64_t k);

/// sum (k l + 1)(theta'_l - theta_l): phase gap between the shifted and
/// the scaled tetrahedron.  Both must be Euclidean.
double phase_mismatch(const LabelSextuple& labels, std::int64_t k);

struct AsymptoticSample {
  std::int64_t k = 0;
  double exact = 0.0;
  std::optional<double> pr_theorem;
  std::optional<double> pr_original;
  std::optional<double> abs_err_theorem;
  std::optional<double> abs_err_original;
};

using ExactProvider = std::function<ExactValue(const LabelSextuple&)>;

/// One row per k in [k_min, k_max], ordered by k.  Estimates whose
/// precondition fails are left empty.  Rows are computed on a small worker
/// pool; `exact` must be safe to call concurrently.
std::vector<AsymptoticSample> series_compare(const LabelSextuple& labels, std::int64_t k_min, std::int64_t k_max,
                                             const ExactProvider& exact = sixj_exact);

/// Zero-weight diagonal element of a rotation by beta in the (2k+1)-dim
/// irreducible, i.e. P_k(cos beta) by the three-term recurrence.
double rotation_exact(std::int64_t k, double beta);

inline constexpr std::int64_t kRotationOracleCap = 30;

/// Central entry of the rotation matrix on degree-2k binary forms in the
/// orthonormal monomial basis.  Throws Error{CapExceeded} for k > 30.
double rotation_rep_oracle(std::int64_t k, double beta);

/// sqrt(2 / (pi k sin beta)) cos((2k + 1) beta / 2 + pi / 4).
/// Throws Error{DegenerateAngle} unless 0 < beta < pi.
double rotation_asymptotic(std::int64_t k, double beta);

/// 2k (k!)^2 / (2k+1)!
mpq_class section_norm_exact(std::int64_t k);

enum class QuadratureRange { Full, HalfDoubled };

inline constexpr std::int64_t kQuadratureCap = 500;

/// Adaptive Gauss-Kronrod evaluation of 2k int_{-1}^{1} ((1-z^2)/4)^k dz/2.
/// Throws Error{CapExceeded} for k > 500.
double section_norm_quadrature(std::int64_t k, QuadratureRange range = QuadratureRange::Full);

}  // namespace sixj
