#pragma once

// Metric tetrahedra from six edge lengths.  Edges follow the slot layout of
// labels.hpp.  With edge vectors A, C, E at a common vertex the tetrahedron
// has vertices {0, A, -C, -E}, so that
//   |A| = a, |C| = c, |E| = e, |A + C| = b, |C - E| = d, |A + E| = f.

#include <array>
#include <optional>

#include <gmpxx.h>

#include "sixj/labels.hpp"

namespace sixj {

/// Exact rational lengths.  Lengths built from doubles keep their exact
/// binary value but are flagged inexact, which switches flat detection to a
/// relative tolerance.
class EdgeLengths {
 public:
  /// Throws Error{FaceViolation} if a face breaks the triangle inequality
  /// or a length is negative.
  explicit EdgeLengths(const std::array<mpq_class, 6>& lengths, bool exact = true);

  static EdgeLengths from_labels(const LabelSextuple& labels);
  static EdgeLengths from_doubles(const std::array<double, 6>& lengths);

  const mpq_class& operator[](int edge) const { return v_[static_cast<std::size_t>(edge)]; }
  std::array<double, 6> to_doubles() const;
  bool exact() const noexcept { return exact_; }

 private:
  std::array<mpq_class, 6> v_;
  bool exact_ = true;
};

using GramMatrix = std::array<std::array<mpq_class, 3>, 3>;
using Vec3 = std::array<double, 3>;

enum class TetClass { Euclidean, Flat, Minkowskian };

const char* to_string(TetClass c) noexcept;

struct Embedding {
  Vec3 a{}, c{}, e{};

  /// The four vertices {0, A, -C, -E}.
  std::array<Vec3, 4> vertices() const;
};

struct HadwigerMeasures {
  double mu0 = 1.0;
  double mu1 = 0.0;  // sum of length * exterior dihedral angle
  double mu2 = 0.0;  // half the surface area
  double mu3 = 0.0;  // volume
};

struct TetMetric {
  EdgeLengths lengths;
  TetClass cls;
  std::optional<double> volume;                        // Euclidean or Flat
  std::optional<std::array<double, 6>> exterior_angles;  // Euclidean only
  std::optional<Embedding> embedding;                  // Euclidean only
};

GramMatrix gram_matrix(const EdgeLengths& lengths);
mpq_class gram_determinant(const EdgeLengths& lengths);
TetClass classify(const EdgeLengths& lengths);

/// Cholesky factor of the Gram matrix.  Throws Error{NotEuclidean}.
Embedding embed(const EdgeLengths& lengths);

/// sqrt(det Gram) / 6, zero when flat.  Throws Error{NotEuclidean} for
/// Minkowskian input.
double volume(const EdgeLengths& lengths);

/// Angle between the outward normals of the two faces meeting at each edge,
/// indexed by edge slot.  Throws Error{NotEuclidean}.
std::array<double, 6> exterior_dihedral_angles(const EdgeLengths& lengths);

HadwigerMeasures hadwiger_measures(const EdgeLengths& lengths);

/// Half the total face area via Heron; defined for any valid lengths.
double half_surface_area(const EdgeLengths& lengths);

inline constexpr double kSchlafliDetTolerance = 1e-10;

/// Central-difference residual of sum_i l_i dtheta_i along `direction`,
/// step 1e-5 * |l|.  `det_tolerance` bounds det(Gram) / |l|^6 away from 0.
double schlafli_residual(const EdgeLengths& lengths, const std::array<double, 6>& direction,
                         double det_tolerance = kSchlafliDetTolerance);

/// 5x5 Cayley-Menger determinant in squared lengths; equals 288 V^2.
mpq_class cayley_menger_det(const EdgeLengths& lengths);

TetMetric measure(const EdgeLengths& lengths);

}  // namespace sixj
