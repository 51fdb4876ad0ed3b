#pragma once

// Level-by-level enumeration of arrangement classes by the crossing
// operation: inside a face, an arc of the first curve is pushed across an arc
// of the second curve bounding the same face. The move adds two points, four
// arcs and two faces, one of which is a new bigon.

#include <algorithm>
#include <map>
#include <optional>
#include <thread>
#include <tuple>
#include <vector>

#include "twocurves/arrangement.hpp"
#include "twocurves/canonical.hpp"

namespace twocurves {

struct CrossingSite {
  int face = 0;      // index into faces(arr)
  Dart dart_a = 0;   // first-curve dart on the face walk
  Dart dart_b = 0;   // second-curve dart on the same walk

  friend auto operator<=>(const CrossingSite&, const CrossingSite&) = default;
};

inline std::vector<CrossingSite> crossing_sites(const Arrangement& arr) {
  std::vector<CrossingSite> out;
  const auto walks = faces(arr);
  for (int f = 0; f < static_cast<int>(walks.size()); ++f) {
    std::vector<Dart> sorted = walks[f];
    std::sort(sorted.begin(), sorted.end());
    for (Dart a : sorted) {
      if (arr.color(a) != Curve::first) continue;
      for (Dart b : sorted)
        if (arr.color(b) == Curve::second) out.push_back({f, a, b});
    }
  }
  return out;
}

// The pushed arc runs P -> Q along dart_a, the crossed arc R -> S along
// dart_b, with the face to the right of both. The new points X1, X2 appear in
// the order P, X1, X2, Q on the first curve and R, X2, X1, S on the second.
// New darts (N = old dart count):
//   X1: N+0 toward P, N+1 toward X2 (first curve), N+2 toward X2, N+3 toward S
//   X2: N+4 toward Q, N+5 toward X1 (first curve), N+6 toward R, N+7 toward X1
inline Arrangement crossing(const Arrangement& arr, CrossingSite site) {
  require_valid(arr);
  const auto walks = faces(arr);
  if (site.face < 0 || site.face >= static_cast<int>(walks.size()))
    throw Error(ErrorKind::InvalidSite, "face index out of range");
  const auto& walk = walks[site.face];
  auto on_face = [&](Dart d) { return std::find(walk.begin(), walk.end(), d) != walk.end(); };
  if (!on_face(site.dart_a) || !on_face(site.dart_b))
    throw Error(ErrorKind::InvalidSite, "site darts do not lie on the face");
  if (arr.color(site.dart_a) != Curve::first || arr.color(site.dart_b) != Curve::second)
    throw Error(ErrorKind::InvalidSite, "dart_a must lie on the first curve and dart_b on the second");

  const int n = arr.num_darts();
  std::vector<Dart> rot = arr.rotations();
  std::vector<Dart> mate = arr.arc_mates();
  std::vector<Curve> color = arr.colors();
  rot.resize(n + 8);
  mate.resize(n + 8);
  color.resize(n + 8);

  const Dart a = site.dart_a, a_end = arr.arc_mate(a);
  const Dart b = site.dart_b, b_end = arr.arc_mate(b);
  const Dart x1 = n, x2 = n + 4;

  // counterclockwise: east (second curve toward X2 / R), north, west, south
  rot[x1 + 2] = x1 + 0;
  rot[x1 + 0] = x1 + 3;
  rot[x1 + 3] = x1 + 1;
  rot[x1 + 1] = x1 + 2;
  rot[x2 + 2] = x2 + 0;
  rot[x2 + 0] = x2 + 3;
  rot[x2 + 3] = x2 + 1;
  rot[x2 + 1] = x2 + 2;

  auto link = [&](Dart u, Dart v) {
    mate[u] = v;
    mate[v] = u;
  };
  link(a, x1 + 0);
  link(x1 + 1, x2 + 1);
  link(x2 + 0, a_end);
  link(b, x2 + 2);
  link(x2 + 3, x1 + 2);
  link(x1 + 3, b_end);

  for (Dart d : {x1 + 0, x1 + 1, x2 + 0, x2 + 1}) color[d] = Curve::first;
  for (Dart d : {x1 + 2, x1 + 3, x2 + 2, x2 + 3}) color[d] = Curve::second;
  return Arrangement(std::move(rot), std::move(mate), std::move(color));
}

// ---------------------------------------------------------------------------
// Levels

struct Provenance {
  CanonicalKey parent;
  CrossingSite site;
};

struct LevelClass {
  CanonicalKey config_key;  // key under the enumeration mode (configuration mode by default)
  CanonicalKey flow_key;
  GaussPairCode representative;
  SymmetryReport symmetry;
  std::optional<Provenance> provenance;  // empty for the seed level
};

struct Level {
  int n_points = 0;
  std::vector<LevelClass> classes;  // sorted by configuration key

  int symmetric_count() const {
    return static_cast<int>(std::count_if(classes.begin(), classes.end(),
                                          [](const LevelClass& c) { return c.symmetry.symmetric(); }));
  }
  int asymmetric_count() const { return static_cast<int>(classes.size()) - symmetric_count(); }
  int flow_count() const { return symmetric_count() + 2 * asymmetric_count(); }
};

// One crossing result, before deduplication.
struct Member {
  CanonicalKey key;
  GaussPairCode code;
  int parent_index = 0;
  CrossingSite site;
};

namespace detail {

inline LevelClass make_class(const Arrangement& arr, GaussPairCode rep, std::optional<Provenance> prov,
                             EquivalenceMode mode) {
  LevelClass cls;
  cls.config_key = canonical_key(arr, mode);
  cls.flow_key = canonical_key(arr, {false, mode.allow_reflection});
  cls.representative = std::move(rep);
  cls.symmetry = symmetry(arr, mode.allow_reflection);
  cls.provenance = std::move(prov);
  return cls;
}

inline bool member_less(const Member& x, const Member& y) {
  return std::tie(x.code, x.parent_index, x.site) < std::tie(y.code, y.parent_index, y.site);
}

template <typename Fn>
void parallel_for(int count, int jobs, Fn fn) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) fn(i, 0);
    return;
  }
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([=] {
      for (int i = w; i < count; i += jobs) fn(i, w);
    });
  for (auto& t : workers) t.join();
}

}  // namespace detail

inline Level seed_level(EquivalenceMode mode = EquivalenceMode::configuration()) {
  GaussPairCode lens{2, {1, 2}, {Sign::plus, Sign::minus}};
  Arrangement arr = decode(lens);
  return Level{2, {detail::make_class(arr, encode(arr), std::nullopt, mode)}};
}

// Every crossing of every class representative in `prev`.
inline std::vector<Member> expand(const Level& prev, EquivalenceMode mode = EquivalenceMode::configuration(),
                                  int jobs = 1) {
  std::vector<std::vector<Member>> per_parent(prev.classes.size());
  detail::parallel_for(static_cast<int>(prev.classes.size()), jobs, [&](int i, int) {
    const Arrangement parent = decode(prev.classes[i].representative);
    for (const auto& site : crossing_sites(parent)) {
      Arrangement child = crossing(parent, site);
      per_parent[i].push_back(Member{canonical_key(child, mode), encode(child), i, site});
    }
  });
  std::vector<Member> out;
  for (auto& v : per_parent)
    for (auto& m : v) out.push_back(std::move(m));
  return out;
}

// Keeps, per key, the member with the smallest GP1 code; ties go to the
// earliest parent and site, so the result does not depend on `jobs`.
inline std::vector<Member> deduplicate(const std::vector<Member>& members) {
  std::map<std::vector<std::uint8_t>, const Member*> best;
  for (const auto& m : members) {
    auto [it, inserted] = best.try_emplace(m.key.bytes, &m);
    if (!inserted && detail::member_less(m, *it->second)) it->second = &m;
  }
  std::vector<Member> out;
  out.reserve(best.size());
  for (const auto& [key, m] : best) out.push_back(*m);
  return out;
}

inline Level enumerate_level(const Level& prev, EquivalenceMode mode = EquivalenceMode::configuration(),
                             int jobs = 1) {
  const auto members = deduplicate(expand(prev, mode, jobs));
  Level level;
  level.n_points = prev.n_points + 2;
  level.classes.resize(members.size());
  detail::parallel_for(static_cast<int>(members.size()), jobs, [&](int i, int) {
    const Member& m = members[i];
    level.classes[i] = detail::make_class(decode(m.code), m.code,
                                          Provenance{prev.classes[m.parent_index].config_key, m.site}, mode);
  });
  return level;
}

inline std::vector<Level> enumerate_up_to(int max_points, EquivalenceMode mode = EquivalenceMode::configuration(),
                                          int jobs = 1) {
  if (max_points < 2 || max_points % 2 != 0)
    throw Error(ErrorKind::MalformedCode, "max_points must be even and at least 2");
  std::vector<Level> levels{seed_level(mode)};
  while (levels.back().n_points < max_points) levels.push_back(enumerate_level(levels.back(), mode, jobs));
  return levels;
}

}  // namespace twocurves
