#pragma once

// Brute-force enumeration over Gauss-pair codes: every visiting order of the
// second curve and every sign vector is decoded, and the spherical ones are
// collected by configuration key. Independent of the crossing generator and of
// region invariants.

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <vector>

#include "twocurves/arrangement.hpp"
#include "twocurves/canonical.hpp"

namespace twocurves {

enum class LimitMode {
  full,               // all (2n)! visiting orders
  symmetric_reduced,  // visiting order starts at point 1 (cyclic rotations are the same curve)
};

struct OracleOptions {
  LimitMode limit = LimitMode::symmetric_reduced;
  int jobs = 1;
  // Skip sign vectors whose sum is nonzero without decoding them.
  bool prune_sign_sum = false;
};

struct OracleResult {
  int n_points = 0;
  std::set<std::vector<std::uint8_t>> class_keys;             // configuration mode
  std::map<std::vector<std::uint8_t>, GaussPairCode> representatives;  // smallest accepted code per key
  std::int64_t examined = 0;          // codes whose face structure was traced
  std::int64_t raw_accepted = 0;      // codes decoding to a spherical arrangement
  std::int64_t accepted_nonzero_sign_sum = 0;
  std::chrono::duration<double> elapsed{};
};

namespace detail {

constexpr int oracle_max_points = 10;

// Face count of the decoded map, with the dart layout of build_map.
class FaceCounter {
 public:
  explicit FaceCounter(int points) : n_(points) {
    for (int i = 0; i < n_; ++i) {
      const int next = 4 * ((i + 1) % n_);
      mate_[4 * i] = next + 2;
      mate_[next + 2] = 4 * i;
    }
  }

  void set_order(const int* order) {
    for (int j = 0; j < n_; ++j) {
      const int from = 4 * (order[j] - 1) + 1;
      const int to = 4 * (order[(j + 1) % n_] - 1) + 3;
      mate_[from] = to;
      mate_[to] = from;
    }
  }

  // Bit i of `mask` set means point i has sign minus.
  int count(std::uint32_t mask) {
    for (int i = 0; i < n_; ++i) {
      const int b = 4 * i;
      if (mask >> i & 1u) {
        rot_[b] = b + 3, rot_[b + 3] = b + 2, rot_[b + 2] = b + 1, rot_[b + 1] = b;
      } else {
        rot_[b] = b + 1, rot_[b + 1] = b + 2, rot_[b + 2] = b + 3, rot_[b + 3] = b;
      }
    }
    std::uint64_t seen = 0;
    const int darts = 4 * n_;
    int faces = 0;
    for (int s = 0; s < darts; ++s) {
      if (seen >> s & 1u) continue;
      ++faces;
      for (int d = s; !(seen >> d & 1u); d = rot_[mate_[d]]) seen |= std::uint64_t{1} << d;
    }
    return faces;
  }

 private:
  int n_;
  std::array<int, 4 * oracle_max_points> rot_{};
  std::array<int, 4 * oracle_max_points> mate_{};
};

}  // namespace detail

inline OracleResult brute_force(int points, OracleOptions options = {}) {
  if (points < 2 || points % 2 != 0 || points > detail::oracle_max_points)
    throw Error(ErrorKind::MalformedCode, "oracle supports an even point count in [2, 10]");
  const auto t0 = std::chrono::steady_clock::now();
  OracleResult result;
  result.n_points = points;

  // Work items: the first two entries of the visiting order.
  std::vector<std::pair<int, int>> prefixes;
  for (int first = 1; first <= points; ++first) {
    if (options.limit == LimitMode::symmetric_reduced && first != 1) break;
    for (int second = 1; second <= points; ++second)
      if (second != first) prefixes.emplace_back(first, second);
  }

  std::mutex merge_mutex;
  auto work = [&](std::size_t task) {
    const auto [first, second] = prefixes[task];
    OracleResult local;
    detail::FaceCounter counter(points);
    std::vector<int> order{first, second};
    for (int p = 1; p <= points; ++p)
      if (p != first && p != second) order.push_back(p);
    const std::uint32_t masks = std::uint32_t{1} << points;
    do {
      counter.set_order(order.data());
      for (std::uint32_t mask = 0; mask < masks; ++mask) {
        const int minus = std::popcount(mask);
        if (options.prune_sign_sum && 2 * minus != points) continue;
        ++local.examined;
        if (counter.count(mask) != points + 2) continue;
        ++local.raw_accepted;
        if (2 * minus != points) ++local.accepted_nonzero_sign_sum;
        GaussPairCode code{points, order, std::vector<Sign>(points)};
        for (int i = 0; i < points; ++i) code.signs[i] = (mask >> i & 1u) ? Sign::minus : Sign::plus;
        auto key = canonical_key(decode(code), EquivalenceMode::configuration()).bytes;
        auto [it, inserted] = local.representatives.try_emplace(key, code);
        if (!inserted && code < it->second) it->second = code;
      }
    } while (std::next_permutation(order.begin() + 2, order.end()));

    std::lock_guard lock(merge_mutex);
    result.examined += local.examined;
    result.raw_accepted += local.raw_accepted;
    result.accepted_nonzero_sign_sum += local.accepted_nonzero_sign_sum;
    for (auto& [key, code] : local.representatives) {
      auto [it, inserted] = result.representatives.try_emplace(key, code);
      if (!inserted && code < it->second) it->second = code;
    }
  };

  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(prefixes.size())));
  if (jobs == 1) {
    for (std::size_t t = 0; t < prefixes.size(); ++t) work(t);
  } else {
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w)
      workers.emplace_back([&, w] {
        for (std::size_t t = w; t < prefixes.size(); t += jobs) work(t);
      });
    for (auto& t : workers) t.join();
  }

  for (const auto& [key, code] : result.representatives) result.class_keys.insert(key);
  result.elapsed = std::chrono::steady_clock::now() - t0;
  return result;
}

struct CountRow {
  int n_points = 0;
  int configurations = 0;
  int symmetric = 0;
  int asymmetric = 0;
  int flows = 0;  // symmetric + 2 * asymmetric
};

inline CountRow count_row(const OracleResult& r) {
  CountRow row;
  row.n_points = r.n_points;
  row.configurations = static_cast<int>(r.class_keys.size());
  for (const auto& [key, code] : r.representatives) {
    if (symmetry(decode(code)).symmetric())
      ++row.symmetric;
    else
      ++row.asymmetric;
  }
  row.flows = row.symmetric + 2 * row.asymmetric;
  return row;
}

inline std::vector<CountRow> count_table(int max_points, OracleOptions options = {}) {
  std::vector<CountRow> rows;
  for (int p = 2; p <= max_points; p += 2) rows.push_back(count_row(brute_force(p, options)));
  return rows;
}

}  // namespace twocurves
