#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "sixj/error.hpp"
#include "sixj/regge.hpp"

using namespace sixj;

namespace {

const LabelSextuple kGeneric{{4, 6, 8, 10, 6, 8}};
const LabelSextuple kFours{{4, 4, 4, 4, 4, 4}};

bool euclidean(const LabelSextuple& l) {
  try {
    return classify(EdgeLengths::from_labels(l)) == TetClass::Euclidean;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

TEST_CASE("regge_transform examples") {
  CHECK(regge_transform(kFours, OppositePair::AD) == kFours);
  CHECK(regge_transform(kGeneric, OppositePair::AD) == LabelSextuple{{4, 8, 6, 10, 8, 6}});
  for (auto p : kOppositePairs) CHECK(regge_transform(regge_transform(kGeneric, p), p) == kGeneric);
  try {
    regge_transform(LabelSextuple{{0, 1, 0, 0, 0, 0}}, OppositePair::AD);
    FAIL("expected HalfIntegerResult");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HalfIntegerResult);
  }
}

TEST_CASE("regge_transform agrees with the slot-free reference") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const auto l = oracle::random_admissible(rng, 15);
    for (int p = 0; p < 3; ++p) {
      const auto img = regge_transform(l, kOppositePairs[static_cast<std::size_t>(p)]);
      REQUIRE(img == oracle::regge(l, p));
      REQUIRE(regge_transform(img, kOppositePairs[static_cast<std::size_t>(p)]) == l);
      REQUIRE(is_admissible_sextuple(img));
      REQUIRE(img.sum() == l.sum());
    }
  }
}

TEST_CASE("tetrahedral relabelings") {
  const auto& rel = tetrahedral_relabelings();
  REQUIRE(rel.size() == 24);
  CHECK(std::find(rel.begin(), rel.end(), Relabeling{0, 1, 2, 3, 4, 5}) != rel.end());
  for (const auto& p : rel)
    for (int i = 0; i < 6; ++i) CHECK(p[static_cast<std::size_t>(opposite(i))] == opposite(p[static_cast<std::size_t>(i)]));

  // same set as the one induced by permuting vertices
  const std::set<Relabeling> mine(rel.begin(), rel.end());
  const auto from_vertices = oracle::vertex_relabelings(false);
  CHECK(mine == std::set<Relabeling>(from_vertices.begin(), from_vertices.end()));

  const auto& proper = proper_relabelings();
  CHECK(proper.size() == 12);
  const auto rotations = oracle::vertex_relabelings(true);
  CHECK(std::set<Relabeling>(proper.begin(), proper.end()) == std::set<Relabeling>(rotations.begin(), rotations.end()));
}

TEST_CASE("groups generated by the involutions") {
  // words in the three reference reflections, tracked on a generic
  // admissible sextuple so that distinct maps give distinct images
  const LabelSextuple probe{{22, 20, 16, 29, 25, 19}};
  std::set<LabelSextuple> images{probe};
  std::vector<LabelSextuple> frontier{probe};
  while (!frontier.empty()) {
    std::vector<LabelSextuple> next;
    for (const auto& x : frontier)
      for (int p = 0; p < 3; ++p) {
        const auto y = oracle::regge(x, p);
        if (images.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  CHECK(images.size() == 24);
  CHECK(regge_involution_closure().size() == 24);

  std::set<LinearMap> relabelings;
  for (const auto& p : tetrahedral_relabelings()) relabelings.insert(LinearMap::from_relabeling(p));
  int pure = 0;
  for (const auto& m : regge_involution_closure()) pure += relabelings.count(m) ? 1 : 0;
  CHECK(pure == 4);

  const auto& s3 = regge_subgroup();
  REQUIRE(s3.size() == 6);
  const std::set<LinearMap> s3_set(s3.begin(), s3.end());
  for (const auto& x : s3) {
    for (const auto& y : s3) REQUIRE(s3_set.count(x.compose(y)) == 1);
  }
  // normal in the full group, and only the identity is a relabeling
  int shared = 0;
  for (const auto& x : s3) shared += relabelings.count(x) ? 1 : 0;
  CHECK(shared == 1);
  for (const auto& e : symmetry_group()) {
    std::set<LinearMap> left, right;
    for (const auto& x : s3) {
      left.insert(e.map.compose(x));
      right.insert(x.compose(e.map));
    }
    REQUIRE(left == right);
  }
  // not abelian
  bool commutes = true;
  for (const auto& x : s3)
    for (const auto& y : s3) commutes = commutes && x.compose(y) == y.compose(x);
  CHECK_FALSE(commutes);
  // every involution is a relabeling after an element of the factor
  for (auto pair : kOppositePairs) {
    bool found = false;
    for (const auto& r : relabelings)
      for (const auto& x : s3) found = found || r.compose(x) == LinearMap::from_regge(pair);
    CHECK(found);
  }
}

TEST_CASE("symmetry group") {
  const auto& g = symmetry_group();
  REQUIRE(g.size() == 144);

  std::set<LinearMap> maps;
  for (const auto& e : g) maps.insert(e.map);
  CHECK(maps.size() == 144);
  // one more round of composition finds nothing new
  for (const auto& x : g)
    for (const auto& y : g) REQUIRE(maps.count(x.map.compose(y.map)) == 1);
  CHECK(maps.count(LinearMap::identity()) == 1);

  // each element is its relabeling after its Regge part
  for (const auto& e : g)
    REQUIRE(LinearMap::from_relabeling(e.relabeling).compose(regge_subgroup()[e.regge_part]) == e.map);
}

TEST_CASE("orbits match a breadth-first reference") {
  std::mt19937_64 rng(17);
  std::vector<LabelSextuple> inputs{kGeneric, kFours, LabelSextuple{{22, 20, 16, 29, 25, 19}}};
  for (int i = 0; i < 20; ++i) inputs.push_back(oracle::random_admissible(rng, 12));
  for (const auto& l : inputs) {
    std::set<LabelSextuple> mine;
    for (const auto& e : symmetry_group()) mine.insert(e.apply(l));
    const auto ref = oracle::orbit(l);
    REQUIRE(mine == ref);
    const auto report = orbit_congruence_classes(l);
    CHECK(report.classes.size() == oracle::class_count(ref, true));
    CHECK(report.mirror_class_count == oracle::class_count(ref, false));
  }
}

TEST_CASE("orbit_congruence_classes") {
  const auto regular = orbit_congruence_classes(kFours);
  CHECK(regular.classes.size() == 1);

  const auto r = orbit_congruence_classes(kGeneric);
  // b = e and c = f make this orbit smaller than a generic one
  CHECK(r.classes.size() == 6);
  CHECK(r.mirror_class_count == 3);
  for (const auto& c : r.classes) {
    CHECK(c.cls == TetClass::Euclidean);
    CHECK(proper_canonical_form(c.canonical) == c.canonical);
    CHECK(c.total_length == kGeneric.sum());
    REQUIRE(c.sorted_angles);
    CHECK(std::is_sorted(c.sorted_angles->begin(), c.sorted_angles->end()));
  }
  CHECK(r.sixj.same_value(sixj_exact(kGeneric)));

  const auto generic = orbit_congruence_classes(LabelSextuple{{22, 20, 16, 29, 25, 19}});
  CHECK(generic.classes.size() == 12);
  CHECK(generic.mirror_class_count == 6);

  CHECK_THROWS_AS(orbit_congruence_classes(LabelSextuple{{1, 1, 1, 1, 1, 1}}), Error);
}

TEST_CASE("exact 6j is constant on every orbit") {
  std::mt19937_64 rng(99);
  std::vector<LabelSextuple> inputs{kGeneric};
  for (int i = 0; i < 20; ++i) inputs.push_back(oracle::random_admissible(rng, 12));
  for (const auto& l : inputs) {
    const auto v = sixj_exact(l);
    for (const auto& e : symmetry_group()) {
      const auto img = e.apply(l);
      REQUIRE(img.sum() == l.sum());
      REQUIRE(sixj_exact(img).same_value(v));
    }
  }
}

TEST_CASE("invariance_report") {
  const auto rep = invariance_report(kGeneric);
  CHECK(rep.rows.size() == 6);
  CHECK(rep.volume_constant);
  CHECK(rep.mu1_constant);
  CHECK(rep.length_constant);
  CHECK(rep.sixj_constant);
  CHECK_FALSE(rep.mu2_constant);
  CHECK(rep.holds());

  // interior-angle variant of mu1 is constant as well, since sum of lengths is
  double first = 0;
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const double interior = std::numbers::pi * static_cast<double>(rep.rows[i].total_length) - rep.rows[i].mu1;
    if (i == 0) first = interior;
    CHECK(oracle::rel_close(interior, first, 1e-9));
  }

  try {
    invariance_report(LabelSextuple{{10, 6, 6, 10, 6, 6}});
    FAIL("expected NotEuclidean");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotEuclidean);
  }
}

TEST_CASE("Euclidean orbits: every image Euclidean, volume and mu1 constant") {
  std::mt19937_64 rng(41);
  int done = 0;
  while (done < 20) {
    const auto l = oracle::random_admissible(rng, 20);
    if (!euclidean(l)) continue;
    ++done;
    const auto r = orbit_congruence_classes(l);
    for (const auto& c : r.classes) REQUIRE(c.cls == TetClass::Euclidean);
    const auto rep = invariance_report(l);
    CHECK(rep.holds());
  }
}

TEST_CASE("angle transport") {
  for (auto p : kOppositePairs) {
    const auto t = angle_transport_check(kFours, p);
    CHECK(t.ok);
    const auto g = angle_transport_check(kGeneric, p);
    CHECK(g.ok);
    for (double r : g.residuals) CHECK(r <= 1e-9);
  }
  // an absurd tolerance must flag and report residuals
  const auto strict = angle_transport_check(kGeneric, OppositePair::AD, -1.0);
  CHECK_FALSE(strict.ok);
  CHECK(std::all_of(strict.residuals.begin(), strict.residuals.end(), [](double r) { return r >= 0; }));

  CHECK_THROWS_AS(angle_transport_check(LabelSextuple{{10, 6, 6, 10, 6, 6}}, OppositePair::AD), Error);

  std::mt19937_64 rng(8);
  int done = 0;
  while (done < 20) {
    const auto l = oracle::random_admissible(rng, 20);
    bool ok = euclidean(l);
    for (auto p : kOppositePairs) ok = ok && euclidean(regge_transform(l, p));
    if (!ok) continue;
    ++done;
    for (auto p : kOppositePairs) REQUIRE(angle_transport_check(l, p).ok);
  }
}

TEST_CASE("canonical forms") {
  for (const auto& p : tetrahedral_relabelings()) {
    CHECK(canonical_form(relabel(p, kGeneric)) == canonical_form(kGeneric));
    if (is_proper(p)) CHECK(proper_canonical_form(relabel(p, kGeneric)) == proper_canonical_form(kGeneric));
  }
  CHECK(canonical_form(kGeneric) <= kGeneric);
}
