#include "sixj/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sixj/error.hpp"

namespace sixj {

namespace {

// Vertex pair of each edge slot for the vertex set {0, A, -C, -E}.
constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{{
    {0, 1},  // a
    {1, 2},  // b
    {0, 2},  // c
    {2, 3},  // d
    {0, 3},  // e
    {1, 3},  // f
}};

Vec3 sub(const Vec3& x, const Vec3& y) { return {x[0] - y[0], x[1] - y[1], x[2] - y[2]}; }
double dot(const Vec3& x, const Vec3& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }
Vec3 cross(const Vec3& x, const Vec3& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}
double norm(const Vec3& x) { return std::sqrt(dot(x, x)); }

mpq_class determinant(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const mpq_class factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

// 16 * area^2 of a triangle with sides x, y, z.
mpq_class heron16(const mpq_class& x, const mpq_class& y, const mpq_class& z) {
  const mpq_class x2 = x * x, y2 = y * y, z2 = z * z;
  return 2 * (x2 * y2 + y2 * z2 + z2 * x2) - x2 * x2 - y2 * y2 - z2 * z2;
}

void require_euclidean(const EdgeLengths& l, const char* what) {
  if (classify(l) != TetClass::Euclidean) throw Error(ErrorKind::NotEuclidean, what);
}

double vector_norm(const std::array<double, 6>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

const char* to_string(TetClass c) noexcept {
  switch (c) {
    case TetClass::Euclidean: return "Euclidean";
    case TetClass::Flat: return "Flat";
    case TetClass::Minkowskian: return "Minkowskian";
  }
  return "Unknown";
}

EdgeLengths::EdgeLengths(const std::array<mpq_class, 6>& lengths, bool exact) : v_(lengths), exact_(exact) {
  for (const auto& x : v_)
    if (x < 0) throw Error(ErrorKind::FaceViolation, "negative edge length");
  for (const auto& f : kFaces) {
    const auto &x = (*this)[f[0]], &y = (*this)[f[1]], &z = (*this)[f[2]];
    if (x > y + z || y > z + x || z > x + y) throw Error(ErrorKind::FaceViolation, "face breaks the triangle inequality");
  }
}

EdgeLengths EdgeLengths::from_labels(const LabelSextuple& labels) {
  std::array<mpq_class, 6> v;
  for (int i = 0; i < 6; ++i) v[static_cast<std::size_t>(i)] = mpq_class(mpz_class(std::to_string(labels[i])));
  return EdgeLengths(v, true);
}

EdgeLengths EdgeLengths::from_doubles(const std::array<double, 6>& lengths) {
  std::array<mpq_class, 6> v;
  for (std::size_t i = 0; i < 6; ++i) {
    if (!std::isfinite(lengths[i])) throw Error(ErrorKind::FaceViolation, "non-finite edge length");
    v[i] = lengths[i];
  }
  return EdgeLengths(v, false);
}

std::array<double, 6> EdgeLengths::to_doubles() const {
  std::array<double, 6> out{};
  for (std::size_t i = 0; i < 6; ++i) out[i] = v_[i].get_d();
  return out;
}

std::array<Vec3, 4> Embedding::vertices() const {
  return {Vec3{0, 0, 0}, a, Vec3{-c[0], -c[1], -c[2]}, Vec3{-e[0], -e[1], -e[2]}};
}

GramMatrix gram_matrix(const EdgeLengths& l) {
  const mpq_class a2 = l[kA] * l[kA], b2 = l[kB] * l[kB], c2 = l[kC] * l[kC];
  const mpq_class d2 = l[kD] * l[kD], e2 = l[kE] * l[kE], f2 = l[kF] * l[kF];
  const mpq_class ac = (b2 - a2 - c2) / 2;
  const mpq_class ce = (c2 + e2 - d2) / 2;
  const mpq_class ae = (f2 - a2 - e2) / 2;
  return {{{a2, ac, ae}, {ac, c2, ce}, {ae, ce, e2}}};
}

mpq_class gram_determinant(const EdgeLengths& l) {
  const auto g = gram_matrix(l);
  return g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
         g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
}

TetClass classify(const EdgeLengths& l) {
  const mpq_class det = gram_determinant(l);
  if (!l.exact()) {
    const auto g = gram_matrix(l);
    double scale = 0;
    for (const auto& row : g)
      for (const auto& x : row) scale = std::max(scale, std::abs(x.get_d()));
    if (std::abs(det.get_d()) <= 1e-10 * scale * scale * scale) return TetClass::Flat;
  }
  const int s = sgn(det);
  return s > 0 ? TetClass::Euclidean : s == 0 ? TetClass::Flat : TetClass::Minkowskian;
}

Embedding embed(const EdgeLengths& l) {
  require_euclidean(l, "embedding needs a Euclidean tetrahedron");
  const auto g = gram_matrix(l);
  std::array<std::array<long double, 3>, 3> m{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = g[i][j].get_d();
  // Lower-triangular L with L L^T = Gram; row i is the i-th edge vector.
  std::array<std::array<long double, 3>, 3> low{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      long double s = m[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= low[i][k] * low[j][k];
      if (i == j)
        low[i][i] = std::sqrt(std::max(s, 0.0L));
      else
        low[i][j] = low[j][j] > 0 ? s / low[j][j] : 0.0L;
    }
  }
  auto row = [&](std::size_t i) {
    return Vec3{static_cast<double>(low[i][0]), static_cast<double>(low[i][1]), static_cast<double>(low[i][2])};
  };
  return Embedding{row(0), row(1), row(2)};
}

double volume(const EdgeLengths& l) {
  switch (classify(l)) {
    case TetClass::Flat: return 0.0;
    case TetClass::Minkowskian: throw Error(ErrorKind::NotEuclidean, "Minkowskian tetrahedron has no Euclidean volume");
    case TetClass::Euclidean: break;
  }
  return std::sqrt(gram_determinant(l).get_d()) / 6.0;
}

std::array<double, 6> exterior_dihedral_angles(const EdgeLengths& l) {
  const auto p = embed(l).vertices();
  Vec3 centroid{};
  for (const auto& v : p)
    for (std::size_t i = 0; i < 3; ++i) centroid[i] += v[i] / 4;

  auto outward_normal = [&](int i, int j, int k) {
    Vec3 n = cross(sub(p[static_cast<std::size_t>(j)], p[static_cast<std::size_t>(i)]),
                   sub(p[static_cast<std::size_t>(k)], p[static_cast<std::size_t>(i)]));
    Vec3 face_centre{};
    for (std::size_t t = 0; t < 3; ++t)
      face_centre[t] = (p[static_cast<std::size_t>(i)][t] + p[static_cast<std::size_t>(j)][t] + p[static_cast<std::size_t>(k)][t]) / 3;
    if (dot(n, sub(face_centre, centroid)) < 0) n = {-n[0], -n[1], -n[2]};
    return n;
  };

  std::array<double, 6> out{};
  for (std::size_t edge = 0; edge < 6; ++edge) {
    const int i = kEdgeVertices[edge][0], j = kEdgeVertices[edge][1];
    int others[2], n = 0;
    for (int v = 0; v < 4; ++v)
      if (v != i && v != j) others[n++] = v;
    const Vec3 n1 = outward_normal(i, j, others[0]);
    const Vec3 n2 = outward_normal(i, j, others[1]);
    out[edge] = std::atan2(norm(cross(n1, n2)), dot(n1, n2));
  }
  return out;
}

double half_surface_area(const EdgeLengths& l) {
  double total = 0;
  for (const auto& f : kFaces) {
    const mpq_class h = heron16(l[f[0]], l[f[1]], l[f[2]]);
    total += std::sqrt(std::max(h.get_d(), 0.0)) / 4;
  }
  return total / 2;
}

HadwigerMeasures hadwiger_measures(const EdgeLengths& l) {
  require_euclidean(l, "Hadwiger measures need a Euclidean tetrahedron");
  const auto theta = exterior_dihedral_angles(l);
  const auto len = l.to_doubles();
  HadwigerMeasures h;
  for (std::size_t i = 0; i < 6; ++i) h.mu1 += len[i] * theta[i];
  h.mu2 = half_surface_area(l);
  h.mu3 = volume(l);
  return h;
}

double schlafli_residual(const EdgeLengths& l, const std::array<double, 6>& direction, double det_tolerance) {
  if (vector_norm(direction) == 0) return 0.0;
  const auto len = l.to_doubles();
  const double scale = vector_norm(len);
  auto interior = [&](const EdgeLengths& x) {
    if (classify(x) != TetClass::Euclidean) return false;
    const double s6 = std::pow(vector_norm(x.to_doubles()), 6);
    return gram_determinant(x).get_d() / s6 > det_tolerance;
  };
  if (!interior(l)) throw Error(ErrorKind::NotEuclidean, "Schlafli residual needs a strictly Euclidean base point");

  const double delta = 1e-5 * scale;
  std::array<double, 6> plus{}, minus{};
  for (std::size_t i = 0; i < 6; ++i) {
    plus[i] = len[i] + delta * direction[i];
    minus[i] = len[i] - delta * direction[i];
  }
  auto stepped = [&](const std::array<double, 6>& x) {
    try {
      auto e = EdgeLengths::from_doubles(x);
      if (!interior(e)) throw Error(ErrorKind::StepLeavesEuclideanRegion, "finite-difference step left the Euclidean region");
      return exterior_dihedral_angles(e);
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::FaceViolation)
        throw Error(ErrorKind::StepLeavesEuclideanRegion, "finite-difference step broke a face");
      throw;
    }
  };
  const auto tp = stepped(plus);
  const auto tm = stepped(minus);
  double residual = 0;
  for (std::size_t i = 0; i < 6; ++i) residual += len[i] * (tp[i] - tm[i]) / (2 * delta);
  return residual;
}

mpq_class cayley_menger_det(const EdgeLengths& l) {
  std::vector<std::vector<mpq_class>> m(5, std::vector<mpq_class>(5, 1));
  m[0][0] = 0;
  for (int i = 1; i < 5; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
  for (int edge = 0; edge < 6; ++edge) {
    const auto i = static_cast<std::size_t>(kEdgeVertices[static_cast<std::size_t>(edge)][0] + 1);
    const auto j = static_cast<std::size_t>(kEdgeVertices[static_cast<std::size_t>(edge)][1] + 1);
    m[i][j] = m[j][i] = l[edge] * l[edge];
  }
  return determinant(std::move(m));
}

TetMetric measure(const EdgeLengths& l) {
  TetMetric m{l, classify(l), std::nullopt, std::nullopt, std::nullopt};
  if (m.cls != TetClass::Minkowskian) m.volume = volume(l);
  if (m.cls == TetClass::Euclidean) {
    m.embedding = embed(l);
    m.exterior_angles = exterior_dihedral_angles(l);
  }
  return m;
}

}  // namespace sixj
