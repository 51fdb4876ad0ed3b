#pragma once

// Canonical labelling of arrangements.
//
// A seed is a start dart together with a choice of orientation (rotation or
// its inverse) and curve naming (identity or exchanged). From a seed, a
// breadth-first traversal numbers darts in first-visit order, visiting the
// rotation neighbour before the arc mate, and emits one triple
// (label of rotation neighbour, label of mate, curve) per dart. Since the map
// is connected, the code determines the map up to relabelling, so the
// lexicographically smallest code over all admissible seeds is a complete
// invariant for the chosen equivalence.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twocurves/arrangement.hpp"

namespace twocurves {

struct EquivalenceMode {
  bool allow_swap = true;
  bool allow_reflection = true;

  // Homeomorphisms of the sphere that may exchange the curves.
  static constexpr EquivalenceMode configuration() { return {true, true}; }
  // Curves keep their roles (index-1 vs index-2 saddle).
  static constexpr EquivalenceMode flow() { return {false, true}; }

  friend auto operator<=>(const EquivalenceMode&, const EquivalenceMode&) = default;
};

struct CanonicalKey {
  std::vector<std::uint8_t> bytes;
  EquivalenceMode mode;

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
      out += digits[b >> 4];
      out += digits[b & 0xf];
    }
    return out;
  }

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

inline std::vector<std::uint8_t> bytes_from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  if (hex.size() % 2 != 0) throw Error(ErrorKind::MalformedCode, "odd-length hex key");
  std::vector<std::uint8_t> out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) throw Error(ErrorKind::MalformedCode, "bad hex key character");
    out.push_back(static_cast<std::uint8_t>(hi * 16 + lo));
  }
  return out;
}

struct Seed {
  Dart start = 0;
  bool reflect = false;
  bool swap = false;

  friend auto operator<=>(const Seed&, const Seed&) = default;
};

struct Variant {
  bool reflect = false;
  bool swap = false;
};

struct SymmetryReport {
  bool has_swap_automorphism = false;
  bool has_reflection_automorphism = false;
  int automorphism_count = 0;

  bool symmetric() const { return has_swap_automorphism; }
};

namespace detail {

inline std::vector<Variant> variants_for(EquivalenceMode mode) {
  std::vector<Variant> out{{false, false}};
  if (mode.allow_reflection) out.push_back({true, false});
  if (mode.allow_swap) {
    out.push_back({false, true});
    if (mode.allow_reflection) out.push_back({true, true});
  }
  return out;
}

struct MinimalCode {
  std::vector<std::uint8_t> code;
  Seed seed;           // first seed (in iteration order) reaching the minimum
  int seed_count = 0;  // number of seeds reaching the minimum
};

// Minimum traversal code over all start darts of the given variants. The
// traversal stops as soon as its prefix exceeds the best code so far.
inline MinimalCode minimal_code(const Arrangement& arr, std::span<const Variant> variants) {
  const int n = arr.num_darts();
  if (n > 255) throw Error(ErrorKind::InvalidArrangement, "too many darts for byte codes");
  std::vector<Dart> inverse(n);
  for (Dart d = 0; d < n; ++d) inverse[arr.rotation(d)] = d;

  MinimalCode best;
  std::vector<std::uint8_t> buf(3 * n);
  std::vector<int> label(n);
  std::vector<Dart> queue(n);

  for (const Variant& v : variants) {
    const auto& turn = v.reflect ? inverse : arr.rotations();
    for (Dart start = 0; start < n; ++start) {
      std::fill(label.begin(), label.end(), -1);
      label[start] = 0;
      queue[0] = start;
      int tail = 1;
      // 0: equal so far, -1: already smaller, +1: larger (abandon)
      int cmp = best.code.empty() ? -1 : 0;
      std::size_t pos = 0;
      auto emit = [&](std::uint8_t byte) {
        if (cmp == 0) {
          const auto ref = best.code[pos];
          if (byte < ref)
            cmp = -1;
          else if (byte > ref)
            cmp = 1;
        }
        buf[pos++] = byte;
      };
      for (int head = 0; head < n && cmp <= 0; ++head) {
        const Dart x = queue[head];
        const Dart r = turn[x];
        if (label[r] < 0) {
          label[r] = tail;
          queue[tail++] = r;
        }
        const Dart m = arr.arc_mate(x);
        if (label[m] < 0) {
          label[m] = tail;
          queue[tail++] = m;
        }
        emit(static_cast<std::uint8_t>(label[r]));
        emit(static_cast<std::uint8_t>(label[m]));
        const Curve c = v.swap ? other(arr.color(x)) : arr.color(x);
        emit(static_cast<std::uint8_t>(index(c)));
      }
      if (cmp < 0) {
        best.code.assign(buf.begin(), buf.end());
        best.seed = Seed{start, v.reflect, v.swap};
        best.seed_count = 1;
      } else if (cmp == 0) {
        ++best.seed_count;
      }
    }
  }
  return best;
}

// Dart labels produced by the traversal from `seed`.
inline std::vector<int> traversal_labels(const Arrangement& arr, Seed seed) {
  const int n = arr.num_darts();
  std::vector<Dart> inverse(n);
  for (Dart d = 0; d < n; ++d) inverse[arr.rotation(d)] = d;
  std::vector<int> label(n, -1);
  std::vector<Dart> queue{seed.start};
  label[seed.start] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Dart x = queue[head];
    for (Dart y : {seed.reflect ? inverse[x] : arr.rotation(x), arr.arc_mate(x)}) {
      if (label[y] < 0) {
        label[y] = static_cast<int>(queue.size());
        queue.push_back(y);
      }
    }
  }
  return label;
}

}  // namespace detail

inline CanonicalKey canonical_key(const Arrangement& arr, EquivalenceMode mode = EquivalenceMode::configuration()) {
  require_valid(arr);
  const auto variants = detail::variants_for(mode);
  return CanonicalKey{detail::minimal_code(arr, variants).code, mode};
}

// Dart labels of a canonical traversal (first minimal seed).
inline std::vector<int> canonical_labels(const Arrangement& arr, EquivalenceMode mode = EquivalenceMode::configuration()) {
  require_valid(arr);
  const auto variants = detail::variants_for(mode);
  return detail::traversal_labels(arr, detail::minimal_code(arr, variants).seed);
}

inline bool are_equivalent(const Arrangement& a, const Arrangement& b,
                           EquivalenceMode mode = EquivalenceMode::configuration()) {
  if (a.num_darts() != b.num_darts()) {
    require_valid(a);
    require_valid(b);
    return false;
  }
  return canonical_key(a, mode) == canonical_key(b, mode);
}

// With allow_reflection, the curve-exchange test admits orientation-reversing
// homeomorphisms; automorphism_count counts every seed that reaches the
// overall minimal code under the same group.
inline SymmetryReport symmetry(const Arrangement& arr, bool allow_reflection = true) {
  require_valid(arr);
  using detail::minimal_code;
  const std::array<Variant, 1> plain{{{false, false}}};
  const std::array<Variant, 1> mirrored{{{true, false}}};

  const auto same = detail::variants_for({false, allow_reflection});
  std::vector<Variant> swapped;
  for (auto v : same) swapped.push_back({v.reflect, true});

  SymmetryReport report;
  report.has_swap_automorphism = minimal_code(arr, same).code == minimal_code(arr, swapped).code;
  report.has_reflection_automorphism = minimal_code(arr, plain).code == minimal_code(arr, mirrored).code;
  report.automorphism_count = minimal_code(arr, detail::variants_for({true, allow_reflection})).seed_count;
  return report;
}

}  // namespace twocurves
