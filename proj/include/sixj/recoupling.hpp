#pragma once

// Closed-form theta and tetrahedral net evaluations and the normalised
// 6j-symbol, all in exact big-rational arithmetic.

#include <array>
#include <cstdint>

#include <gmpxx.h>

#include "sixj/labels.hpp"

namespace sixj {

/// A 6j-symbol stored as sign * sqrt(radicand).  The unnormalised net
/// values are kept alongside so callers can audit the normalisation.
struct ExactValue {
  int sign = 0;
  mpq_class radicand = 0;
  mpq_class tet = 0;
  std::array<mpq_class, 4> thetas{};

  /// sign * sqrt(radicand) rounded to double, relative error far below 1e-12.
  double to_double() const;

  /// log|value|; -inf for the zero value.  Safe where to_double underflows.
  double log_abs() const;

  bool same_value(const ExactValue& other) const { return sign == other.sign && radicand == other.radicand; }
};

/// Throws Error{Inadmissible}.
mpq_class theta_exact(std::int64_t a, std::int64_t b, std::int64_t c);

/// Throws Error{Inadmissible}.
mpq_class tet_exact(const LabelSextuple& labels);

/// Zero for inadmissible labels, never throws on valid (nonnegative) input.
ExactValue sixj_exact(const LabelSextuple& labels);

}  // namespace sixj
