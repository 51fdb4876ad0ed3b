#pragma once

// Two circles meeting transversally on the oriented 2-sphere, stored as an
// edge-colored combinatorial map.
//
// Every intersection point carries four darts (arc ends). The map is given by
//   rotation  sigma : next dart counterclockwise around the same point,
//   arc_mate  alpha : the dart at the other end of the same arc,
//   color           : which curve (first / second) the dart's arc lies on.
// Faces are the orbits of sigma o alpha (apply alpha, then sigma); the face of
// a dart lies to the right of the arc traversed from that dart to its mate.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twocurves/error.hpp"

namespace twocurves {

using Dart = int;

enum class Curve : std::uint8_t { first = 1, second = 2 };

constexpr Curve other(Curve c) { return c == Curve::first ? Curve::second : Curve::first; }
constexpr int index(Curve c) { return static_cast<int>(c); }

// Crossing sign at a point. `plus` iff the frame (first-curve direction,
// second-curve direction) is positively oriented, i.e. the second curve passes
// from the right of the first curve to its left.
enum class Sign : std::uint8_t { plus, minus };

constexpr int value(Sign s) { return s == Sign::plus ? 1 : -1; }
constexpr Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr char symbol(Sign s) { return s == Sign::plus ? '+' : '-'; }

class Arrangement {
 public:
  Arrangement() = default;

  // Sizes and dart ranges are checked here; the topological invariants are
  // left to validate().
  Arrangement(std::vector<Dart> rotation, std::vector<Dart> arc_mate, std::vector<Curve> color)
      : rotation_(std::move(rotation)), arc_mate_(std::move(arc_mate)), color_(std::move(color)) {
    const auto n = rotation_.size();
    if (arc_mate_.size() != n || color_.size() != n)
      throw Error(ErrorKind::InvalidArrangement, "rotation, arc_mate and color sizes differ");
    auto in_range = [n](Dart d) { return d >= 0 && static_cast<std::size_t>(d) < n; };
    if (!std::all_of(rotation_.begin(), rotation_.end(), in_range) ||
        !std::all_of(arc_mate_.begin(), arc_mate_.end(), in_range))
      throw Error(ErrorKind::InvalidArrangement, "dart id out of range");
    for (Curve c : color_)
      if (c != Curve::first && c != Curve::second)
        throw Error(ErrorKind::InvalidArrangement, "dart color must be 1 or 2");
  }

  int num_darts() const { return static_cast<int>(rotation_.size()); }
  int num_points() const { return num_darts() / 4; }
  int num_arcs() const { return num_darts() / 2; }

  Dart rotation(Dart d) const { return rotation_[d]; }
  Dart arc_mate(Dart d) const { return arc_mate_[d]; }
  Curve color(Dart d) const { return color_[d]; }

  // Continue straight through the next point along the same curve.
  Dart straight(Dart d) const { return rotation_[rotation_[arc_mate_[d]]]; }
  Dart face_next(Dart d) const { return rotation_[arc_mate_[d]]; }

  const std::vector<Dart>& rotations() const { return rotation_; }
  const std::vector<Dart>& arc_mates() const { return arc_mate_; }
  const std::vector<Curve>& colors() const { return color_; }

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  std::vector<Dart> rotation_;
  std::vector<Dart> arc_mate_;
  std::vector<Curve> color_;
};

// Serialization: points are labelled 1..2n in the order the first curve visits
// them; `order` is the cyclic order in which the second curve visits them.
struct GaussPairCode {
  int n_points = 0;
  std::vector<int> order;
  std::vector<Sign> signs;

  friend auto operator<=>(const GaussPairCode&, const GaussPairCode&) = default;
};

namespace detail {

// Orbits of `next` in order of their smallest dart, each starting there.
// Stops early on darts already seen, so non-permutations terminate.
template <typename Next>
std::vector<std::vector<Dart>> orbits(int n, Next next) {
  std::vector<std::vector<Dart>> out;
  std::vector<char> seen(n, 0);
  for (Dart start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Dart> cycle;
    for (Dart d = start; !seen[d]; d = next(d)) {
      seen[d] = 1;
      cycle.push_back(d);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

template <typename Next>
std::vector<int> orbit_index(int n, Next next) {
  std::vector<int> idx(n, -1);
  int count = 0;
  for (Dart start = 0; start < n; ++start) {
    if (idx[start] >= 0) continue;
    for (Dart d = start; idx[d] < 0; d = next(d)) idx[d] = count;
    ++count;
  }
  return idx;
}

inline bool is_permutation(const std::vector<Dart>& p) {
  std::vector<char> hit(p.size(), 0);
  for (Dart d : p) {
    if (hit[d]) return false;
    hit[d] = 1;
  }
  return true;
}

}  // namespace detail

inline std::vector<std::vector<Dart>> faces(const Arrangement& arr) {
  return detail::orbits(arr.num_darts(), [&](Dart d) { return arr.face_next(d); });
}

inline std::vector<int> face_of_darts(const Arrangement& arr) {
  return detail::orbit_index(arr.num_darts(), [&](Dart d) { return arr.face_next(d); });
}

inline std::vector<std::vector<Dart>> vertices(const Arrangement& arr) {
  return detail::orbits(arr.num_darts(), [&](Dart d) { return arr.rotation(d); });
}

inline std::vector<int> vertex_of_darts(const Arrangement& arr) {
  return detail::orbit_index(arr.num_darts(), [&](Dart d) { return arr.rotation(d); });
}

inline bool is_connected(const Arrangement& arr) {
  const int n = arr.num_darts();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<Dart> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Dart d = stack.back();
    stack.pop_back();
    for (Dart e : {arr.rotation(d), arr.arc_mate(d)}) {
      if (!seen[e]) {
        seen[e] = 1;
        ++reached;
        stack.push_back(e);
      }
    }
  }
  return reached == n;
}

// Requires rotation to be a permutation and arc_mate an involution.
inline int genus(const Arrangement& arr) {
  if (!is_connected(arr)) throw Error(ErrorKind::Disconnected, "map is not connected");
  const int v = static_cast<int>(vertices(arr).size());
  const int e = arr.num_darts() / 2;
  const int f = static_cast<int>(faces(arr).size());
  return (2 - v + e - f) / 2;
}

// ---------------------------------------------------------------------------
// Validation

enum class CheckStatus { passed, failed, skipped };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string detail;
};

struct ValidationReport {
  std::vector<Check> checks;

  bool ok() const {
    // A skipped check always follows a failed prerequisite.
    return !checks.empty() &&
           std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::failed; });
  }

  const Check* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  bool passed(std::string_view name) const {
    const Check* c = find(name);
    return c != nullptr && c->status == CheckStatus::passed;
  }

  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (c.status == CheckStatus::failed) out.push_back(c.name);
    return out;
  }
};

namespace checks {
inline constexpr std::string_view dart_count = "dart count";
inline constexpr std::string_view rotation_permutation = "rotation is a permutation";
inline constexpr std::string_view mate_involution = "arc mate is a fixed-point-free involution";
inline constexpr std::string_view four_per_vertex = "4 darts per vertex";
inline constexpr std::string_view colors_alternate = "colors alternate around vertices";
inline constexpr std::string_view mate_color = "arc mate preserves color";
inline constexpr std::string_view connected = "connected";
inline constexpr std::string_view straight_cycles = "straight-ahead cycles";
inline constexpr std::string_view genus_zero = "genus 0";
inline constexpr std::string_view sign_sum = "sign sum zero";
}  // namespace checks

namespace detail {

// Marks the darts on each curve's straight-ahead cycle through its lowest dart.
inline std::vector<char> forward_darts(const Arrangement& arr) {
  std::vector<char> fwd(arr.num_darts(), 0);
  for (Curve c : {Curve::first, Curve::second}) {
    Dart start = -1;
    for (Dart d = 0; d < arr.num_darts(); ++d)
      if (arr.color(d) == c) {
        start = d;
        break;
      }
    if (start < 0) continue;
    Dart d = start;
    do {
      fwd[d] = 1;
      d = arr.straight(d);
    } while (d != start && !fwd[d]);
  }
  return fwd;
}

// Sum of crossing signs with each curve oriented along the straight-ahead
// cycle through its lowest dart. Requires a structurally valid map.
inline int sign_sum(const Arrangement& arr) {
  const auto fwd = forward_darts(arr);
  int sum = 0;
  for (const auto& vertex : vertices(arr)) {
    Dart f1 = -1, f2 = -1;
    for (Dart d : vertex) {
      if (!fwd[d]) continue;
      (arr.color(d) == Curve::first ? f1 : f2) = d;
    }
    if (f1 < 0 || f2 < 0) continue;
    sum += arr.rotation(f1) == f2 ? 1 : -1;
  }
  return sum;
}

}  // namespace detail

inline ValidationReport validate(const Arrangement& arr) {
  ValidationReport report;
  auto add = [&](std::string_view name, CheckStatus status, std::string detail = {}) {
    report.checks.push_back(Check{std::string(name), status, std::move(detail)});
    return status == CheckStatus::passed;
  };
  auto test = [&](std::string_view name, bool ok, std::string detail = {}) {
    return add(name, ok ? CheckStatus::passed : CheckStatus::failed, ok ? std::string{} : std::move(detail));
  };
  const int n = arr.num_darts();

  const bool count_ok = test(checks::dart_count, n >= 8 && n % 8 == 0,
                             "expected a positive multiple of 8 darts, got " + std::to_string(n));
  const bool rot_ok = test(checks::rotation_permutation, detail::is_permutation(arr.rotations()));
  bool mate_ok = true;
  for (Dart d = 0; d < n && mate_ok; ++d)
    mate_ok = arr.arc_mate(d) != d && arr.arc_mate(arr.arc_mate(d)) == d;
  test(checks::mate_involution, mate_ok);

  bool four_ok = false;
  if (rot_ok) {
    std::string bad;
    four_ok = true;
    for (const auto& v : vertices(arr))
      if (v.size() != 4) {
        four_ok = false;
        bad = "vertex at dart " + std::to_string(v.front()) + " has " + std::to_string(v.size()) + " darts";
        break;
      }
    test(checks::four_per_vertex, four_ok, bad);
  } else {
    add(checks::four_per_vertex, CheckStatus::skipped);
  }

  bool alt_ok = false;
  if (four_ok) {
    alt_ok = true;
    for (Dart d = 0; d < n && alt_ok; ++d) alt_ok = arr.color(arr.rotation(d)) != arr.color(d);
    test(checks::colors_alternate, alt_ok);
  } else {
    add(checks::colors_alternate, CheckStatus::skipped);
  }

  bool mate_color_ok = false;
  if (mate_ok) {
    mate_color_ok = true;
    for (Dart d = 0; d < n && mate_color_ok; ++d) mate_color_ok = arr.color(arr.arc_mate(d)) == arr.color(d);
    test(checks::mate_color, mate_color_ok);
  } else {
    add(checks::mate_color, CheckStatus::skipped);
  }

  bool conn_ok = false;
  if (rot_ok && mate_ok) {
    conn_ok = test(checks::connected, is_connected(arr));
  } else {
    add(checks::connected, CheckStatus::skipped);
  }

  bool straight_ok = false;
  if (count_ok && four_ok && alt_ok && mate_color_ok) {
    const int points = n / 4;
    const auto vertex = vertex_of_darts(arr);
    const auto cycle = detail::orbit_index(n, [&](Dart d) { return arr.straight(d); });
    std::string bad;
    straight_ok = true;
    for (Curve c : {Curve::first, Curve::second}) {
      std::vector<int> ids;
      for (Dart d = 0; d < n; ++d)
        if (arr.color(d) == c) ids.push_back(cycle[d]);
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      if (ids.size() != 2) {
        straight_ok = false;
        bad = "curve " + std::to_string(index(c)) + " has " + std::to_string(ids.size()) + " straight-ahead cycles";
        break;
      }
      for (Dart d = 0; d < n && straight_ok; ++d) {
        if (arr.color(d) != c) continue;
        if (cycle[d] == cycle[arr.rotation(arr.rotation(d))]) {
          straight_ok = false;
          bad = "curve " + std::to_string(index(c)) + " turns back on itself";
        }
      }
      for (int id : ids) {
        if (!straight_ok) break;
        std::vector<char> visited(points, 0);
        int length = 0;
        for (Dart d = 0; d < n; ++d) {
          if (cycle[d] != id) continue;
          ++length;
          if (visited[vertex[d]]) {
            straight_ok = false;
            bad = "curve " + std::to_string(index(c)) + " passes a point twice";
          }
          visited[vertex[d]] = 1;
        }
        if (straight_ok && length != points) {
          straight_ok = false;
          bad = "curve " + std::to_string(index(c)) + " visits " + std::to_string(length) + " of " +
                std::to_string(points) + " points";
        }
      }
    }
    test(checks::straight_cycles, straight_ok, bad);
  } else {
    add(checks::straight_cycles, CheckStatus::skipped);
  }

  bool genus_ok = false;
  if (conn_ok) {
    const int g = genus(arr);
    genus_ok = test(checks::genus_zero, g == 0, "genus " + std::to_string(g));
  } else {
    add(checks::genus_zero, CheckStatus::skipped);
  }

  if (straight_ok && genus_ok) {
    const int s = detail::sign_sum(arr);
    test(checks::sign_sum, s == 0, "sign sum " + std::to_string(s));
  } else {
    add(checks::sign_sum, CheckStatus::skipped);
  }
  return report;
}

inline void require_valid(const Arrangement& arr) {
  const auto report = validate(arr);
  if (!report.ok()) {
    std::string msg = "failed checks:";
    for (const auto& name : report.failures()) msg += " [" + name + "]";
    throw Error(ErrorKind::InvalidArrangement, msg);
  }
}

// ---------------------------------------------------------------------------
// Gauss-pair codec

namespace detail {

// Dart layout used by decode: point i (0-based along curve 1) owns darts
// 4i + {0: curve 1 forward, 1: curve 2 forward, 2: curve 1 backward,
// 3: curve 2 backward}.
inline void check_code_shape(const GaussPairCode& code) {
  const int n = code.n_points;
  if (n < 2 || n % 2 != 0)
    throw Error(ErrorKind::MalformedCode, "point count must be even and at least 2, got " + std::to_string(n));
  if (static_cast<int>(code.order.size()) != n)
    throw Error(ErrorKind::MalformedCode, "order has " + std::to_string(code.order.size()) + " entries, expected " +
                                              std::to_string(n));
  if (static_cast<int>(code.signs.size()) != n)
    throw Error(ErrorKind::MalformedCode, "signs has " + std::to_string(code.signs.size()) + " entries, expected " +
                                              std::to_string(n));
  std::vector<char> hit(n + 1, 0);
  for (int p : code.order) {
    if (p < 1 || p > n || hit[p]) throw Error(ErrorKind::MalformedCode, "order is not a permutation of 1.." + std::to_string(n));
    hit[p] = 1;
  }
}

inline Arrangement build_map(const GaussPairCode& code) {
  const int n = code.n_points;
  std::vector<Dart> rot(4 * n), mate(4 * n);
  std::vector<Curve> color(4 * n);
  for (int i = 0; i < n; ++i) {
    const Dart b = 4 * i;
    if (code.signs[i] == Sign::plus) {
      rot[b + 0] = b + 1;
      rot[b + 1] = b + 2;
      rot[b + 2] = b + 3;
      rot[b + 3] = b + 0;
    } else {
      rot[b + 0] = b + 3;
      rot[b + 3] = b + 2;
      rot[b + 2] = b + 1;
      rot[b + 1] = b + 0;
    }
    color[b + 0] = color[b + 2] = Curve::first;
    color[b + 1] = color[b + 3] = Curve::second;
    const Dart next = 4 * ((i + 1) % n);
    mate[b + 0] = next + 2;
    mate[next + 2] = b + 0;
  }
  for (int j = 0; j < n; ++j) {
    const Dart from = 4 * (code.order[j] - 1) + 1;
    const Dart to = 4 * (code.order[(j + 1) % n] - 1) + 3;
    mate[from] = to;
    mate[to] = from;
  }
  return Arrangement(std::move(rot), std::move(mate), std::move(color));
}

}  // namespace detail

inline Arrangement decode(const GaussPairCode& code) {
  detail::check_code_shape(code);
  Arrangement arr = detail::build_map(code);
  const auto report = validate(arr);
  if (report.ok()) return arr;
  if (report.find(checks::genus_zero)->status == CheckStatus::failed)
    throw Error(ErrorKind::NotSpherical, report.find(checks::genus_zero)->detail);
  std::string msg = "decoded map fails:";
  for (const auto& name : report.failures()) msg += " [" + name + "]";
  throw Error(ErrorKind::NotTransversal, msg);
}

// Starts at the lowest dart of the first curve and follows it straight ahead;
// the second curve starts at the same point, leaving counterclockwise next to
// the first curve, so the first sign is always `plus`.
inline GaussPairCode encode(const Arrangement& arr) {
  require_valid(arr);
  const int n = arr.num_points();
  const auto vertex = vertex_of_darts(arr);
  Dart d0 = 0;
  while (arr.color(d0) != Curve::first) ++d0;

  std::vector<int> label(n, 0);
  std::vector<Dart> forward1(n, -1);
  Dart d = d0;
  for (int k = 0; k < n; ++k) {
    label[vertex[d]] = k + 1;
    forward1[k] = d;
    d = arr.straight(d);
  }

  GaussPairCode code;
  code.n_points = n;
  code.order.reserve(n);
  code.signs.assign(n, Sign::plus);
  std::vector<Dart> forward2(n + 1, -1);
  Dart e = arr.rotation(d0);
  for (int k = 0; k < n; ++k) {
    code.order.push_back(label[vertex[e]]);
    forward2[label[vertex[e]]] = e;
    e = arr.straight(e);
  }
  for (int k = 0; k < n; ++k)
    code.signs[k] = arr.rotation(forward1[k]) == forward2[k + 1] ? Sign::plus : Sign::minus;
  return code;
}

// ---------------------------------------------------------------------------
// GP1 text lines

inline std::string to_gp1(const GaussPairCode& code) {
  std::string out = "GP1 " + std::to_string(code.n_points);
  for (int p : code.order) out += ' ' + std::to_string(p);
  for (Sign s : code.signs) {
    out += ' ';
    out += symbol(s);
  }
  return out;
}

inline GaussPairCode parse_gp1(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string tag;
  if (!(in >> tag) || tag != "GP1") throw Error(ErrorKind::MalformedCode, "line does not start with GP1");
  auto read_int = [&](const char* what) {
    std::string tok;
    if (!(in >> tok)) throw Error(ErrorKind::MalformedCode, std::string("missing ") + what);
    if (tok.empty() || tok.size() > 6 || !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw Error(ErrorKind::MalformedCode, std::string("bad ") + what + " '" + tok + "'");
    return std::stoi(tok);
  };
  GaussPairCode code;
  code.n_points = read_int("point count");
  if (code.n_points < 2 || code.n_points % 2 != 0 || code.n_points > 1000)
    throw Error(ErrorKind::MalformedCode, "point count must be even and at least 2");
  for (int i = 0; i < code.n_points; ++i) code.order.push_back(read_int("label"));
  for (int i = 0; i < code.n_points; ++i) {
    std::string tok;
    if (!(in >> tok)) throw Error(ErrorKind::MalformedCode, "missing sign");
    if (tok == "+")
      code.signs.push_back(Sign::plus);
    else if (tok == "-")
      code.signs.push_back(Sign::minus);
    else
      throw Error(ErrorKind::MalformedCode, "bad sign '" + tok + "'");
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorKind::MalformedCode, "trailing token '" + extra + "'");
  detail::check_code_shape(code);
  return code;
}

inline Arrangement parse_arrangement(std::string_view gp1_line) { return decode(parse_gp1(gp1_line)); }

// Mirror image of the sphere: labels and curve directions are kept, every
// crossing frame changes orientation.
inline GaussPairCode reflect(const GaussPairCode& code) {
  GaussPairCode out = code;
  for (Sign& s : out.signs) s = flip(s);
  return out;
}

// Exchange of the two curves: the second curve's visiting order becomes the
// labelling. Crossing signs flip because the frame is transposed.
inline GaussPairCode swap_curves(const GaussPairCode& code) {
  GaussPairCode out;
  const int n = code.n_points;
  out.n_points = n;
  std::vector<int> new_label(n + 1, 0);
  for (int j = 0; j < n; ++j) new_label[code.order[j]] = j + 1;
  out.order.resize(n);
  out.signs.resize(n);
  for (int p = 1; p <= n; ++p) out.order[p - 1] = new_label[p];
  for (int j = 0; j < n; ++j) out.signs[j] = flip(code.signs[code.order[j] - 1]);
  return out;
}

}  // namespace twocurves
