#pragma once

// Checkerboard coloring of the regions, the bipartite region-adjacency
// multigraph (one edge per arc), its signed matrix and the degree vectors.

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "twocurves/arrangement.hpp"
#include "twocurves/canonical.hpp"

namespace twocurves {

enum class RegionColor : std::uint8_t { black, white };

struct RegionEdge {
  int black = 0;  // region (face) index
  int white = 0;
  Curve curve = Curve::first;
};

using SignedMatrix = std::vector<std::vector<int>>;

struct RegionGraph {
  int n_points = 0;
  std::vector<RegionColor> colors;  // per face, faces(arr) order
  std::vector<int> degrees;         // arcs on each region boundary
  std::vector<RegionEdge> edges;    // one per arc
  bool simple = true;               // no two regions share more than one arc
  std::vector<int> rows;            // black regions in matrix row order
  std::vector<int> columns;         // white regions in matrix column order
  SignedMatrix matrix;              // +1 first curve, -1 second curve, 0 not adjacent; empty unless simple

  int num_regions() const { return static_cast<int>(colors.size()); }
};

struct DefiningVectors {
  std::vector<int> black_degrees;  // descending
  std::vector<int> white_degrees;

  // The coloring is fixed only up to complement, so classes compare the
  // unordered pair.
  DefiningVectors normalized() const {
    if (black_degrees < white_degrees) return {white_degrees, black_degrees};
    return *this;
  }

  friend bool operator==(const DefiningVectors&, const DefiningVectors&) = default;
  friend auto operator<=>(const DefiningVectors&, const DefiningVectors&) = default;
};

inline bool same_vectors(const DefiningVectors& a, const DefiningVectors& b) { return a.normalized() == b.normalized(); }

// Black goes to the region containing dart 0.
inline std::vector<RegionColor> two_coloring(const Arrangement& arr) {
  require_valid(arr);
  const auto face = face_of_darts(arr);
  const int f = 1 + *std::max_element(face.begin(), face.end());
  std::vector<std::vector<int>> adj(f);
  for (Dart d = 0; d < arr.num_darts(); ++d) adj[face[d]].push_back(face[arr.arc_mate(d)]);

  std::vector<int> color(f, -1);
  std::vector<int> stack{face[0]};
  color[face[0]] = 0;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (color[v] < 0) {
        color[v] = 1 - color[u];
        stack.push_back(v);
      } else if (color[v] == color[u]) {
        throw Error(ErrorKind::InvalidArrangement, "regions admit no checkerboard coloring");
      }
    }
  }
  std::vector<RegionColor> out(f);
  for (int i = 0; i < f; ++i) out[i] = color[i] == 0 ? RegionColor::black : RegionColor::white;
  return out;
}

inline RegionGraph region_graph(const Arrangement& arr) {
  RegionGraph g;
  g.colors = two_coloring(arr);
  g.n_points = arr.num_points();
  const auto face = face_of_darts(arr);
  const int f = g.num_regions();
  g.degrees.assign(f, 0);
  for (Dart d = 0; d < arr.num_darts(); ++d) ++g.degrees[face[d]];

  std::vector<std::vector<int>> shared(f, std::vector<int>(f, 0));
  for (Dart d = 0; d < arr.num_darts(); ++d) {
    if (d > arr.arc_mate(d)) continue;
    int u = face[d], v = face[arr.arc_mate(d)];
    if (g.colors[u] == RegionColor::white) std::swap(u, v);
    g.edges.push_back({u, v, arr.color(d)});
    if (++shared[u][v] > 1) g.simple = false;
  }

  // Rows and columns: degree descending, then first visit in a canonical traversal.
  const auto label = canonical_labels(arr);
  std::vector<int> first_visit(f, arr.num_darts());
  for (Dart d = 0; d < arr.num_darts(); ++d) first_visit[face[d]] = std::min(first_visit[face[d]], label[d]);
  std::vector<int> order(f);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::make_tuple(-g.degrees[x], first_visit[x]) < std::make_tuple(-g.degrees[y], first_visit[y]);
  });
  for (int r : order) (g.colors[r] == RegionColor::black ? g.rows : g.columns).push_back(r);

  if (g.simple) {
    std::vector<int> row_of(f, -1), col_of(f, -1);
    for (int i = 0; i < static_cast<int>(g.rows.size()); ++i) row_of[g.rows[i]] = i;
    for (int j = 0; j < static_cast<int>(g.columns.size()); ++j) col_of[g.columns[j]] = j;
    g.matrix.assign(g.rows.size(), std::vector<int>(g.columns.size(), 0));
    for (const auto& e : g.edges) g.matrix[row_of[e.black]][col_of[e.white]] = e.curve == Curve::first ? 1 : -1;
  }
  return g;
}

inline DefiningVectors defining_vectors(const RegionGraph& g) {
  DefiningVectors v;
  for (int r = 0; r < g.num_regions(); ++r)
    (g.colors[r] == RegionColor::black ? v.black_degrees : v.white_degrees).push_back(g.degrees[r]);
  std::sort(v.black_degrees.rbegin(), v.black_degrees.rend());
  std::sort(v.white_degrees.rbegin(), v.white_degrees.rend());
  return v;
}

inline std::string to_string(const DefiningVectors& v) {
  auto list = [](const std::vector<int>& xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + ")";
  };
  return list(v.black_degrees) + "/" + list(v.white_degrees);
}

// ---------------------------------------------------------------------------
// Matrix-level curve-exchange test: is -M equal to M up to row and column
// permutations and transposition?

namespace detail {

inline SignedMatrix transpose(const SignedMatrix& m) {
  if (m.empty()) return {};
  SignedMatrix t(m[0].size(), std::vector<int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

// Smallest column-sorted form over all row permutations, always permuting the
// shorter side.
inline SignedMatrix permutation_canonical(const SignedMatrix& m) {
  if (m.empty()) return {};
  const bool flip = m.size() > m[0].size();
  const SignedMatrix a = flip ? transpose(m) : m;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::vector<int> perm(rows);
  std::iota(perm.begin(), perm.end(), 0);
  SignedMatrix best;
  do {
    SignedMatrix columns(cols, std::vector<int>(rows));
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t i = 0; i < rows; ++i) columns[j][i] = a[perm[i]][j];
    std::sort(columns.begin(), columns.end());
    if (best.empty() || columns < best) best = std::move(columns);
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (flip) best.insert(best.begin(), std::vector<int>{});  // keep shapes distinguishable
  return best;
}

}  // namespace detail

inline bool matrix_swap_symmetric(const SignedMatrix& m) {
  SignedMatrix neg = m;
  for (auto& row : neg)
    for (int& x : row) x = -x;
  const auto target = detail::permutation_canonical(neg);
  return target == detail::permutation_canonical(m) || target == detail::permutation_canonical(detail::transpose(m));
}

}  // namespace twocurves
