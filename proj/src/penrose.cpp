#include "sixj/penrose.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "sixj/error.hpp"

namespace sixj {

namespace {

struct EdgeEnd {
  int edge;
  int side;  // 0: the vertex is edge.from, 1: the vertex is edge.to
};

using Rotation = std::vector<std::array<EdgeEnd, 3>>;

std::vector<std::array<EdgeEnd, 3>> incident_ends(const TrivalentNet& net) {
  std::vector<std::vector<EdgeEnd>> ends(static_cast<std::size_t>(net.vertex_count));
  for (int e = 0; e < static_cast<int>(net.edges.size()); ++e) {
    const auto& edge = net.edges[static_cast<std::size_t>(e)];
    if (edge.from == edge.to) throw Error(ErrorKind::Inadmissible, "self-loop edges are not supported");
    ends.at(static_cast<std::size_t>(edge.from)).push_back({e, 0});
    ends.at(static_cast<std::size_t>(edge.to)).push_back({e, 1});
  }
  std::vector<std::array<EdgeEnd, 3>> out;
  for (const auto& v : ends) {
    if (v.size() != 3) throw Error(ErrorKind::Inadmissible, "net is not trivalent");
    out.push_back({v[0], v[1], v[2]});
  }
  return out;
}

int count_faces(const TrivalentNet& net, const Rotation& rot) {
  const int darts = 2 * static_cast<int>(net.edges.size());
  std::vector<char> seen(static_cast<std::size_t>(darts), 0);
  auto head_vertex = [&](int e, int s) {
    const auto& edge = net.edges[static_cast<std::size_t>(e)];
    return s == 0 ? edge.to : edge.from;
  };
  int faces = 0;
  for (int d0 = 0; d0 < darts; ++d0) {
    if (seen[static_cast<std::size_t>(d0)]) continue;
    ++faces;
    int d = d0;
    while (!seen[static_cast<std::size_t>(d)]) {
      seen[static_cast<std::size_t>(d)] = 1;
      const int e = d / 2, s = d % 2;
      const auto& r = rot[static_cast<std::size_t>(head_vertex(e, s))];
      int pos = 0;
      while (!(r[static_cast<std::size_t>(pos)].edge == e && r[static_cast<std::size_t>(pos)].side == 1 - s)) ++pos;
      const EdgeEnd next = r[static_cast<std::size_t>((pos + 1) % 3)];
      d = 2 * next.edge + next.side;
    }
  }
  return faces;
}

// Tries both cyclic orders at every vertex and keeps the first rotation
// system satisfying Euler's formula V - E + F = 2.
Rotation planar_rotation(const TrivalentNet& net) {
  const auto ends = incident_ends(net);
  const int target = static_cast<int>(net.edges.size()) - net.vertex_count + 2;
  const unsigned combos = 1u << net.vertex_count;
  for (unsigned mask = 0; mask < combos; ++mask) {
    Rotation rot = ends;
    for (int v = 0; v < net.vertex_count; ++v)
      if (mask & (1u << v)) std::swap(rot[static_cast<std::size_t>(v)][1], rot[static_cast<std::size_t>(v)][2]);
    if (count_faces(net, rot) == target) return rot;
  }
  throw Error(ErrorKind::Inadmissible, "net has no planar embedding");
}

struct PermTable {
  std::vector<std::vector<int>> perms;
  std::vector<int> sign;  // (-1)^inversions
};

PermTable all_permutations(int n) {
  PermTable t;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inv;
    t.perms.push_back(p);
    t.sign.push_back(inv % 2 ? -1 : 1);
  } while (std::next_permutation(p.begin(), p.end()));
  return t;
}

// Strand endpoints are numbered node(e, side, i); i counts strands from the
// left when travelling from edge.from to edge.to.
class StrandDiagram {
 public:
  explicit StrandDiagram(const TrivalentNet& net) : net_(net) {
    offset_.resize(net.edges.size() + 1, 0);
    for (std::size_t e = 0; e < net.edges.size(); ++e)
      offset_[e + 1] = offset_[e] + 2 * static_cast<int>(net.edges[e].label);
    vertex_link_.assign(static_cast<std::size_t>(offset_.back()), -1);
    edge_link_.assign(static_cast<std::size_t>(offset_.back()), -1);

    for (const auto& ends : planar_rotation(net)) {
      for (int j = 0; j < 3; ++j) {
        const EdgeEnd x = ends[static_cast<std::size_t>(j)];
        const EdgeEnd y = ends[static_cast<std::size_t>((j + 1) % 3)];
        const EdgeEnd z = ends[static_cast<std::size_t>((j + 2) % 3)];
        const auto nx = label(x.edge), ny = label(y.edge), nz = label(z.edge);
        const auto shared = (nx + ny - nz) / 2;
        // Left strands of x (seen outward) nest against the right strands of y.
        for (std::int64_t t = 0; t < shared; ++t) {
          const int u = outward(x, t);
          const int w = outward(y, ny - 1 - t);
          vertex_link_[static_cast<std::size_t>(u)] = w;
          vertex_link_[static_cast<std::size_t>(w)] = u;
        }
      }
    }
  }

  int node(int e, int side, std::int64_t i) const {
    return offset_[static_cast<std::size_t>(e)] + side * static_cast<int>(label(e)) + static_cast<int>(i);
  }

  std::int64_t label(int e) const { return net_.edges[static_cast<std::size_t>(e)].label; }
  int node_count() const { return offset_.back(); }

  void set_permutation(int e, const std::vector<int>& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      const int u = node(e, 0, static_cast<std::int64_t>(i));
      const int w = node(e, 1, p[i]);
      edge_link_[static_cast<std::size_t>(u)] = w;
      edge_link_[static_cast<std::size_t>(w)] = u;
    }
  }

  // With every edge but `open` wired, returns the loops that avoid `open`
  // and fills `pairing` with how the endpoints of `open` are joined.
  int trace(int open, std::vector<int>& pairing) const {
    const int n = static_cast<int>(label(open));
    const int base = node(open, 0, 0);
    std::vector<char> seen(static_cast<std::size_t>(node_count()), 0);
    pairing.assign(static_cast<std::size_t>(2 * n), -1);
    for (int k = 0; k < 2 * n; ++k) {
      if (pairing[static_cast<std::size_t>(k)] >= 0) continue;
      int cur = base + k;
      seen[static_cast<std::size_t>(cur)] = 1;
      while (true) {
        cur = vertex_link_[static_cast<std::size_t>(cur)];
        seen[static_cast<std::size_t>(cur)] = 1;
        if (cur >= base && cur < base + 2 * n) break;
        cur = edge_link_[static_cast<std::size_t>(cur)];
        seen[static_cast<std::size_t>(cur)] = 1;
      }
      pairing[static_cast<std::size_t>(k)] = cur - base;
      pairing[static_cast<std::size_t>(cur - base)] = k;
    }
    int loops = 0;
    for (int start = 0; start < node_count(); ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      ++loops;
      int cur = start;
      do {
        seen[static_cast<std::size_t>(cur)] = 1;
        cur = vertex_link_[static_cast<std::size_t>(cur)];
        seen[static_cast<std::size_t>(cur)] = 1;
        cur = edge_link_[static_cast<std::size_t>(cur)];
      } while (cur != start);
    }
    return loops;
  }

 private:
  // Strand seen from the vertex at end `x`, counted from the left when
  // looking outward along the edge.
  int outward(EdgeEnd x, std::int64_t p) const {
    const auto n = label(x.edge);
    return x.side == 0 ? node(x.edge, 0, p) : node(x.edge, 1, n - 1 - p);
  }

  const TrivalentNet& net_;
  std::vector<int> offset_;
  std::vector<int> vertex_link_;
  std::vector<int> edge_link_;
};

// Sum over permutations of the open edge, given how its endpoints are
// already joined.  Endpoints 0..n-1 are the from-side, n..2n-1 the to-side.
std::int64_t close_open_edge(const std::vector<int>& pairing, const PermTable& table, int n) {
  std::int64_t total = 0;
  std::vector<char> seen(static_cast<std::size_t>(2 * n));
  for (std::size_t idx = 0; idx < table.perms.size(); ++idx) {
    const auto& p = table.perms[idx];
    std::vector<int> across(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
      across[static_cast<std::size_t>(i)] = n + p[static_cast<std::size_t>(i)];
      across[static_cast<std::size_t>(n + p[static_cast<std::size_t>(i)])] = i;
    }
    std::fill(seen.begin(), seen.end(), 0);
    int loops = 0;
    for (int s = 0; s < 2 * n; ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      ++loops;
      int cur = s;
      do {
        seen[static_cast<std::size_t>(cur)] = 1;
        cur = across[static_cast<std::size_t>(cur)];
        seen[static_cast<std::size_t>(cur)] = 1;
        cur = pairing[static_cast<std::size_t>(cur)];
      } while (cur != s);
    }
    std::int64_t term = table.sign[idx];
    for (int l = 0; l < loops; ++l) term *= -2;
    total += term;
  }
  return total;
}

}  // namespace

TrivalentNet theta_net(std::int64_t a, std::int64_t b, std::int64_t c) {
  return TrivalentNet{2, {{0, 1, a}, {0, 1, b}, {0, 1, c}}};
}

TrivalentNet mercedes_net(const LabelSextuple& l) {
  // Net vertex i sits on tetrahedron face kFaces[i]; each net edge joins
  // the two faces sharing that tetrahedron edge.
  TrivalentNet net{4, {}};
  for (int edge = 0; edge < 6; ++edge) {
    int ends[2];
    int found = 0;
    for (int f = 0; f < 4; ++f)
      for (int slot : kFaces[static_cast<std::size_t>(f)])
        if (slot == edge) ends[found++] = f;
    net.edges.push_back({ends[0], ends[1], l[edge]});
  }
  return net;
}

mpq_class penrose_evaluate(const TrivalentNet& net, int cap) {
  if (net.edges.empty()) return 1;
  for (const auto& e : net.edges) {
    if (e.label < 0) throw Error(ErrorKind::Inadmissible, "negative label");
    if (e.label > cap)
      throw Error(ErrorKind::CapExceeded,
                  "label " + std::to_string(e.label) + " above oracle cap " + std::to_string(cap));
  }
  const auto ends = incident_ends(net);
  for (const auto& v : ends) {
    const auto x = net.edges[static_cast<std::size_t>(v[0].edge)].label;
    const auto y = net.edges[static_cast<std::size_t>(v[1].edge)].label;
    const auto z = net.edges[static_cast<std::size_t>(v[2].edge)].label;
    if (!is_admissible_triple(x, y, z)) throw Error(ErrorKind::Inadmissible, "vertex triple fails admissibility");
  }

  StrandDiagram diagram(net);
  const int edge_count = static_cast<int>(net.edges.size());
  const int open = edge_count - 1;
  const int open_n = static_cast<int>(diagram.label(open));

  std::vector<PermTable> tables;
  for (int e = 0; e < edge_count; ++e) tables.push_back(all_permutations(static_cast<int>(diagram.label(e))));

  std::map<std::vector<int>, std::int64_t> closed;
  std::vector<std::size_t> odometer(static_cast<std::size_t>(open), 0);
  for (int e = 0; e < open; ++e) diagram.set_permutation(e, tables[static_cast<std::size_t>(e)].perms[0]);

  mpz_class total = 0;
  std::vector<int> pairing;
  while (true) {
    int sign = 1;
    for (int e = 0; e < open; ++e) sign *= tables[static_cast<std::size_t>(e)].sign[odometer[static_cast<std::size_t>(e)]];
    const int loops = diagram.trace(open, pairing);
    auto it = closed.find(pairing);
    if (it == closed.end())
      it = closed.emplace(pairing, close_open_edge(pairing, tables[static_cast<std::size_t>(open)], open_n)).first;
    mpz_class term = it->second;
    term *= sign;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(loops));
    if (loops % 2) power = -power;
    total += term * power;

    int e = 0;
    for (; e < open; ++e) {
      auto& pos = odometer[static_cast<std::size_t>(e)];
      const auto& table = tables[static_cast<std::size_t>(e)];
      if (++pos < table.perms.size()) {
        diagram.set_permutation(e, table.perms[pos]);
        break;
      }
      pos = 0;
      diagram.set_permutation(e, table.perms[0]);
    }
    if (e == open) break;
  }

  mpz_class diagrams = 1;
  for (const auto& edge : net.edges) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(edge.label));
    diagrams *= f;
  }
  mpq_class result(total, diagrams);
  result.canonicalize();
  return result;
}

}  // namespace sixj
