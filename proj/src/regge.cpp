#include "sixj/regge.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sixj/error.hpp"

namespace sixj {

namespace {

int fixed_slot(OppositePair p) {
  switch (p) {
    case OppositePair::AD: return kA;
    case OppositePair::BE: return kB;
    case OppositePair::CF: return kC;
  }
  return kA;
}

bool moved(OppositePair p, int slot) { return slot != fixed_slot(p) && slot != opposite(fixed_slot(p)); }

std::set<std::array<int, 3>> face_set(const Relabeling& perm) {
  std::set<std::array<int, 3>> out;
  for (const auto& f : kFaces) {
    std::array<int, 3> img{perm[static_cast<std::size_t>(f[0])], perm[static_cast<std::size_t>(f[1])],
                           perm[static_cast<std::size_t>(f[2])]};
    std::sort(img.begin(), img.end());
    out.insert(img);
  }
  return out;
}

bool relatively_equal(double x, double y, double tol) {
  return std::abs(x - y) <= tol * std::max(std::abs(x), std::abs(y));
}

template <class Get>
bool constant_over(const std::vector<InvarianceRow>& rows, Get get, double tol) {
  for (const auto& r : rows)
    if (!relatively_equal(get(r), get(rows.front()), tol)) return false;
  return true;
}

}  // namespace

const char* to_string(OppositePair p) noexcept {
  switch (p) {
    case OppositePair::AD: return "ad";
    case OppositePair::BE: return "be";
    case OppositePair::CF: return "cf";
  }
  return "?";
}

LabelSextuple regge_transform(const LabelSextuple& labels, OppositePair pair) {
  std::int64_t sum = 0;
  for (int i = 0; i < 6; ++i)
    if (moved(pair, i)) sum += labels[i];
  if (sum % 2) throw Error(ErrorKind::HalfIntegerResult, "moved labels of " + to_string(labels) + " have odd sum");
  const auto s = sum / 2;
  LabelSextuple out = labels;
  for (int i = 0; i < 6; ++i)
    if (moved(pair, i)) out[i] = s - labels[i];
  return out;
}

LabelSextuple relabel(const Relabeling& perm, const LabelSextuple& labels) {
  LabelSextuple out;
  for (int i = 0; i < 6; ++i) out[i] = labels[perm[static_cast<std::size_t>(i)]];
  return out;
}

const std::vector<Relabeling>& tetrahedral_relabelings() {
  static const std::vector<Relabeling> all = [] {
    std::vector<Relabeling> out;
    Relabeling p{0, 1, 2, 3, 4, 5};
    const auto faces = face_set(p);
    do {
      if (face_set(p) == faces) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return all;
}

LinearMap LinearMap::identity() {
  LinearMap m;
  for (std::size_t i = 0; i < 6; ++i) m.twice[i][i] = 2;
  return m;
}

LinearMap LinearMap::from_relabeling(const Relabeling& perm) {
  LinearMap m;
  for (std::size_t i = 0; i < 6; ++i) m.twice[i][static_cast<std::size_t>(perm[i])] = 2;
  return m;
}

LinearMap LinearMap::from_regge(OppositePair pair) {
  LinearMap m;
  for (int i = 0; i < 6; ++i) {
    const auto r = static_cast<std::size_t>(i);
    if (!moved(pair, i)) {
      m.twice[r][r] = 2;
      continue;
    }
    for (int j = 0; j < 6; ++j)
      if (moved(pair, j)) m.twice[r][static_cast<std::size_t>(j)] = (i == j) ? -1 : 1;
  }
  return m;
}

LinearMap LinearMap::compose(const LinearMap& other) const {
  LinearMap out;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      int s = 0;
      for (std::size_t k = 0; k < 6; ++k) s += twice[i][k] * other.twice[k][j];
      if (s % 2) throw Error(ErrorKind::HalfIntegerResult, "composition left the half-integer lattice");
      out.twice[i][j] = s / 2;
    }
  return out;
}

LabelSextuple LinearMap::apply(const LabelSextuple& labels) const {
  LabelSextuple out;
  for (std::size_t i = 0; i < 6; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < 6; ++j) s += twice[i][j] * labels[static_cast<int>(j)];
    if (s % 2) throw Error(ErrorKind::HalfIntegerResult, "image of " + to_string(labels) + " is not integral");
    out[static_cast<int>(i)] = s / 2;
  }
  return out;
}

std::vector<LinearMap> group_closure(const std::vector<LinearMap>& generators) {
  std::set<LinearMap> seen{LinearMap::identity()};
  std::vector<LinearMap> frontier{LinearMap::identity()};
  while (!frontier.empty()) {
    std::vector<LinearMap> next;
    for (const auto& g : frontier)
      for (const auto& h : generators) {
        auto gh = g.compose(h);
        if (seen.insert(gh).second) next.push_back(gh);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

const std::vector<LinearMap>& regge_involution_closure() {
  static const std::vector<LinearMap> group = group_closure(
      {LinearMap::from_regge(OppositePair::AD), LinearMap::from_regge(OppositePair::BE), LinearMap::from_regge(OppositePair::CF)});
  return group;
}

const std::vector<LinearMap>& regge_subgroup() {
  // The bare involutions also generate a Klein group of relabelings and do
  // not commute with the rest, so the S3 factor is found as the unique
  // order-6 normal subgroup meeting the relabelings only in the identity.
  static const std::vector<LinearMap> group = [] {
    std::vector<LinearMap> generators;
    std::set<LinearMap> relabelings;
    for (const auto& p : tetrahedral_relabelings()) {
      generators.push_back(LinearMap::from_relabeling(p));
      relabelings.insert(generators.back());
    }
    for (auto pair : kOppositePairs) generators.push_back(LinearMap::from_regge(pair));
    const auto full = group_closure(generators);

    const auto& pool = regge_involution_closure();
    for (const auto& x : pool)
      for (const auto& y : pool) {
        auto h = group_closure({x, y});
        if (h.size() != 6) continue;
        const std::set<LinearMap> hs(h.begin(), h.end());
        const bool trivial_meet = std::count_if(h.begin(), h.end(), [&](const LinearMap& m) { return relabelings.count(m) > 0; }) == 1;
        if (!trivial_meet) continue;
        // left and right cosets coincide
        const bool normal = std::all_of(full.begin(), full.end(), [&](const LinearMap& g) {
          std::set<LinearMap> left, right;
          for (const auto& m : h) {
            left.insert(g.compose(m));
            right.insert(m.compose(g));
          }
          return left == right;
        });
        if (normal) return h;
      }
    throw std::logic_error("no normal S3 complement to the relabelings");
  }();
  return group;
}

const std::vector<ReggeElement>& symmetry_group() {
  static const std::vector<ReggeElement> group = [] {
    std::vector<LinearMap> generators;
    for (const auto& p : tetrahedral_relabelings()) generators.push_back(LinearMap::from_relabeling(p));
    for (auto pair : kOppositePairs) generators.push_back(LinearMap::from_regge(pair));
    const auto& regge = regge_subgroup();

    std::vector<ReggeElement> out;
    for (const auto& g : group_closure(generators)) {
      ReggeElement el;
      el.map = g;
      bool found = false;
      for (const auto& p : tetrahedral_relabelings()) {
        for (std::size_t r = 0; r < regge.size() && !found; ++r)
          if (LinearMap::from_relabeling(p).compose(regge[r]) == g) {
            el.relabeling = p;
            el.regge_part = r;
            found = true;
          }
        if (found) break;
      }
      if (!found) throw std::logic_error("symmetry does not factor as relabeling after Regge element");
      out.push_back(el);
    }
    return out;
  }();
  return group;
}

bool is_proper(const Relabeling& perm) {
  // Induced permutation of the four faces; its parity is the orientation.
  std::array<int, 4> image{};
  for (std::size_t f = 0; f < 4; ++f) {
    std::array<int, 3> old{perm[static_cast<std::size_t>(kFaces[f][0])], perm[static_cast<std::size_t>(kFaces[f][1])],
                           perm[static_cast<std::size_t>(kFaces[f][2])]};
    std::sort(old.begin(), old.end());
    for (std::size_t g = 0; g < 4; ++g) {
      auto face = kFaces[g];
      std::sort(face.begin(), face.end());
      if (face == old) image[f] = static_cast<int>(g);
    }
  }
  int inversions = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (image[i] > image[j]) ++inversions;
  return inversions % 2 == 0;
}

const std::vector<Relabeling>& proper_relabelings() {
  static const std::vector<Relabeling> proper = [] {
    std::vector<Relabeling> out;
    for (const auto& p : tetrahedral_relabelings())
      if (is_proper(p)) out.push_back(p);
    return out;
  }();
  return proper;
}

LabelSextuple canonical_form(const LabelSextuple& labels) {
  LabelSextuple best = labels;
  for (const auto& p : tetrahedral_relabelings()) best = std::min(best, relabel(p, labels));
  return best;
}

LabelSextuple proper_canonical_form(const LabelSextuple& labels) {
  LabelSextuple best = labels;
  for (const auto& p : proper_relabelings()) best = std::min(best, relabel(p, labels));
  return best;
}

OrbitReport orbit_congruence_classes(const LabelSextuple& labels) {
  if (!is_admissible_sextuple(labels)) throw Error(ErrorKind::Inadmissible, to_string(labels));
  std::set<LabelSextuple> classes, mirror_classes;
  for (const auto& g : symmetry_group()) {
    const auto image = g.apply(labels);
    classes.insert(proper_canonical_form(image));
    mirror_classes.insert(canonical_form(image));
  }

  OrbitReport report;
  report.mirror_class_count = mirror_classes.size();
  report.sixj = sixj_exact(labels);
  for (const auto& c : classes) {
    const auto lengths = EdgeLengths::from_labels(c);
    OrbitClass oc;
    oc.canonical = c;
    oc.cls = classify(lengths);
    oc.total_length = c.sum();
    if (oc.cls != TetClass::Minkowskian) oc.volume = volume(lengths);
    oc.mu2 = half_surface_area(lengths);
    if (oc.cls == TetClass::Euclidean) {
      oc.mu1 = hadwiger_measures(lengths).mu1;
      auto angles = exterior_dihedral_angles(lengths);
      std::sort(angles.begin(), angles.end());
      oc.sorted_angles = angles;
    }
    report.classes.push_back(oc);
  }
  return report;
}

InvarianceReport invariance_report(const LabelSextuple& labels) {
  const auto orbit = orbit_congruence_classes(labels);
  InvarianceReport rep;
  for (const auto& c : orbit.classes) {
    if (c.cls != TetClass::Euclidean)
      throw Error(ErrorKind::NotEuclidean, "orbit class " + to_string(c.canonical) + " is " + to_string(c.cls));
    rep.rows.push_back({c.canonical, *c.volume, *c.mu1, *c.mu2, c.total_length, sixj_exact(c.canonical)});
  }
  rep.volume_constant = constant_over(rep.rows, [](const InvarianceRow& r) { return r.volume; }, kInvarianceRelTol);
  rep.mu1_constant = constant_over(rep.rows, [](const InvarianceRow& r) { return r.mu1; }, kInvarianceRelTol);
  rep.mu2_constant = constant_over(rep.rows, [](const InvarianceRow& r) { return r.mu2; }, kInvarianceRelTol);
  rep.length_constant = std::all_of(rep.rows.begin(), rep.rows.end(),
                                    [&](const InvarianceRow& r) { return r.total_length == rep.rows.front().total_length; });
  rep.sixj_constant = std::all_of(rep.rows.begin(), rep.rows.end(),
                                  [&](const InvarianceRow& r) { return r.sixj.same_value(rep.rows.front().sixj); });
  return rep;
}

AngleTransport angle_transport_check(const LabelSextuple& labels, OppositePair pair, double tol) {
  const auto before = EdgeLengths::from_labels(labels);
  const auto after = EdgeLengths::from_labels(regge_transform(labels, pair));
  if (classify(before) != TetClass::Euclidean || classify(after) != TetClass::Euclidean)
    throw Error(ErrorKind::NotEuclidean, "angle transport needs both tetrahedra Euclidean");
  const auto theta = exterior_dihedral_angles(before);
  const auto theta_after = exterior_dihedral_angles(after);

  double sigma = 0;
  for (int i = 0; i < 6; ++i)
    if (moved(pair, i)) sigma += theta[static_cast<std::size_t>(i)];
  sigma /= 2;

  AngleTransport out;
  out.ok = true;
  for (int i = 0; i < 6; ++i) {
    const auto s = static_cast<std::size_t>(i);
    const double predicted = moved(pair, i) ? sigma - theta[s] : theta[s];
    out.residuals[s] = std::abs(theta_after[s] - predicted);
    if (out.residuals[s] > tol) out.ok = false;
  }
  return out;
}

}  // namespace sixj
