#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "twocurves/twocurves.hpp"

namespace support {

// Same map under a random renaming of the darts.
inline twocurves::Arrangement relabel(const twocurves::Arrangement& arr, std::mt19937& rng) {
  const int n = arr.num_darts();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> rot(n), mate(n);
  std::vector<twocurves::Curve> color(n);
  for (int d = 0; d < n; ++d) {
    rot[perm[d]] = perm[arr.rotation(d)];
    mate[perm[d]] = perm[arr.arc_mate(d)];
    color[perm[d]] = arr.color(d);
  }
  return twocurves::Arrangement(rot, mate, color);
}

// Reverses every rotation: the mirror image.
inline twocurves::Arrangement mirror(const twocurves::Arrangement& arr) {
  const int n = arr.num_darts();
  std::vector<int> rot(n);
  for (int d = 0; d < n; ++d) rot[arr.rotation(d)] = d;
  return twocurves::Arrangement(rot, arr.arc_mates(), arr.colors());
}

inline twocurves::Arrangement recolor(const twocurves::Arrangement& arr) {
  std::vector<twocurves::Curve> color(arr.colors());
  for (auto& c : color) c = twocurves::other(c);
  return twocurves::Arrangement(arr.rotations(), arr.arc_mates(), color);
}

// Face count by walking sigma after alpha directly over the vectors.
inline int count_faces(const twocurves::Arrangement& arr) {
  std::vector<char> seen(arr.num_darts(), 0);
  int faces = 0;
  for (int s = 0; s < arr.num_darts(); ++s) {
    if (seen[s]) continue;
    ++faces;
    for (int d = s; !seen[d]; d = arr.rotations()[arr.arc_mates()[d]]) seen[d] = 1;
  }
  return faces;
}

inline const std::vector<twocurves::Level>& levels() {
  static const auto all = twocurves::enumerate_up_to(10);
  return all;
}

}  // namespace support
