#pragma once

// Regge symmetry, the tetrahedral relabelings and the 144-element group
// they generate, plus orbit/invariance reports over that group.

#include <array>
#include <optional>
#include <vector>

#include "sixj/geometry.hpp"
#include "sixj/labels.hpp"
#include "sixj/recoupling.hpp"

namespace sixj {

enum class OppositePair { AD, BE, CF };

inline constexpr std::array<OppositePair, 3> kOppositePairs{OppositePair::AD, OppositePair::BE, OppositePair::CF};

const char* to_string(OppositePair p) noexcept;

/// Fixes the chosen opposite pair and reflects the other four labels about
/// their mean: x -> s - x with s half their sum.  Throws
/// Error{HalfIntegerResult} when that sum is odd.
LabelSextuple regge_transform(const LabelSextuple& labels, OppositePair pair);

/// out[i] = labels[perm[i]]
using Relabeling = std::array<int, 6>;

LabelSextuple relabel(const Relabeling& perm, const LabelSextuple& labels);

/// The 24 permutations of edge slots that map the face set onto itself.
const std::vector<Relabeling>& tetrahedral_relabelings();

/// Rational linear map on sextuples, stored as twice its matrix.
struct LinearMap {
  std::array<std::array<int, 6>, 6> twice{};

  static LinearMap identity();
  static LinearMap from_relabeling(const Relabeling& perm);
  static LinearMap from_regge(OppositePair pair);

  /// this after other
  LinearMap compose(const LinearMap& other) const;
  LabelSextuple apply(const LabelSextuple& labels) const;

  friend auto operator<=>(const LinearMap&, const LinearMap&) = default;
};

/// Closure of `generators` under composition.
std::vector<LinearMap> group_closure(const std::vector<LinearMap>& generators);

/// A symmetry written as relabeling after an element of regge_subgroup().
struct ReggeElement {
  Relabeling relabeling{};
  std::size_t regge_part = 0;  // index into regge_subgroup()
  LinearMap map;

  LabelSextuple apply(const LabelSextuple& labels) const { return map.apply(labels); }
};

/// Closure of the three Regge involutions on their own: 24 maps, four of
/// which are plain relabelings.
const std::vector<LinearMap>& regge_involution_closure();

/// The order-6 normal subgroup meeting the relabelings only in the
/// identity.  Each involution is a relabeling composed with one of these.
const std::vector<LinearMap>& regge_subgroup();

/// All 144 symmetries, from the closure of relabelings and involutions.
const std::vector<ReggeElement>& symmetry_group();

/// The 12 relabelings induced by orientation-preserving symmetries of the
/// tetrahedron (even permutations of its faces).
const std::vector<Relabeling>& proper_relabelings();

bool is_proper(const Relabeling& perm);

/// Lexicographic minimum over the 24 relabelings.  Identifies mirror images.
LabelSextuple canonical_form(const LabelSextuple& labels);

/// Lexicographic minimum over the 12 proper relabelings: equal iff the
/// positively oriented realisations are congruent.
LabelSextuple proper_canonical_form(const LabelSextuple& labels);

struct OrbitClass {
  LabelSextuple canonical;
  TetClass cls = TetClass::Flat;
  std::optional<double> volume;
  std::optional<double> mu1;
  std::optional<double> mu2;
  std::int64_t total_length = 0;
  std::optional<std::array<double, 6>> sorted_angles;
};

struct OrbitReport {
  std::vector<OrbitClass> classes;  // one per proper congruence class, sorted
  std::size_t mirror_class_count = 0;  // classes when mirror images are identified
  ExactValue sixj;
};

/// Images under all 144 symmetries, grouped up to orientation-preserving
/// congruence.  Throws Error{Inadmissible}.
OrbitReport orbit_congruence_classes(const LabelSextuple& labels);

struct InvarianceRow {
  LabelSextuple canonical;
  double volume = 0;
  double mu1 = 0;
  double mu2 = 0;
  std::int64_t total_length = 0;
  ExactValue sixj;
};

struct InvarianceReport {
  std::vector<InvarianceRow> rows;
  bool volume_constant = false;
  bool mu1_constant = false;
  bool length_constant = false;
  bool sixj_constant = false;
  bool mu2_constant = false;

  bool holds() const { return volume_constant && mu1_constant && length_constant && sixj_constant; }
};

inline constexpr double kInvarianceRelTol = 1e-9;

/// Throws Error{Inadmissible} or Error{NotEuclidean}.
InvarianceReport invariance_report(const LabelSextuple& labels);

struct AngleTransport {
  bool ok = false;
  std::array<double, 6> residuals{};  // |theta'_i - predicted_i| per edge slot
};

inline constexpr double kAngleTransportTol = 1e-9;

/// Checks that the exterior angles of the Regge image are the angles of the
/// original reflected about their mean on the moved edges, and fixed on the
/// chosen pair.  Throws Error{NotEuclidean} unless both are Euclidean.
AngleTransport angle_transport_check(const LabelSextuple& labels, OppositePair pair, double tol = kAngleTransportTol);

}  // namespace sixj
