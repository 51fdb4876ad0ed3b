#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "support.hpp"

using namespace twocurves;

TEST_CASE("keys are invariant under dart relabeling") {
  std::mt19937 rng(12345);
  for (const auto& level : support::levels()) {
    for (const auto& cls : level.classes) {
      const auto arr = decode(cls.representative);
      for (auto mode : {EquivalenceMode::configuration(), EquivalenceMode::flow()}) {
        const auto key = canonical_key(arr, mode);
        for (int k = 0; k < 100; ++k) REQUIRE(canonical_key(support::relabel(arr, rng), mode) == key);
      }
    }
  }
}

TEST_CASE("key matches after an encode round trip") {
  for (const auto& level : support::levels())
    for (const auto& cls : level.classes) {
      const auto arr = decode(cls.representative);
      CHECK(canonical_key(decode(encode(arr))) == canonical_key(arr));
    }
}

TEST_CASE("lens reflection has the same key") {
  const auto lens = parse_gp1("GP1 2 1 2 + -");
  // Flip every sign and reverse the visiting order.
  auto image = lens;
  for (auto& s : image.signs) s = flip(s);
  std::reverse(image.order.begin(), image.order.end());
  CHECK(canonical_key(decode(image)) == canonical_key(decode(lens)));
  CHECK(canonical_key(decode(reflect(lens))) == canonical_key(decode(lens)));
  CHECK(symmetry(decode(lens)).has_reflection_automorphism);
}

TEST_CASE("reflection and swap images land in the same class") {
  for (const auto& level : support::levels()) {
    for (const auto& cls : level.classes) {
      const auto arr = decode(cls.representative);
      const auto key = canonical_key(arr);
      CHECK(canonical_key(support::mirror(arr)) == key);
      CHECK(canonical_key(support::recolor(arr)) == key);
      CHECK(canonical_key(decode(reflect(cls.representative))) == key);
      CHECK(canonical_key(decode(swap_curves(cls.representative))) == key);
    }
  }
}

TEST_CASE("the two six-point classes differ in both modes") {
  const auto& six = support::levels()[2];
  REQUIRE(six.classes.size() == 2);
  const auto a = decode(six.classes[0].representative);
  const auto b = decode(six.classes[1].representative);
  CHECK_FALSE(are_equivalent(a, b, EquivalenceMode::configuration()));
  CHECK_FALSE(are_equivalent(a, b, EquivalenceMode::flow()));
  CHECK(are_equivalent(a, a));
}

TEST_CASE("flow equivalence refines configuration equivalence") {
  std::vector<Arrangement> all;
  for (const auto& level : support::levels())
    for (const auto& cls : level.classes) {
      all.push_back(decode(cls.representative));
      all.push_back(decode(swap_curves(cls.representative)));
      all.push_back(decode(reflect(cls.representative)));
    }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j)
      if (canonical_key(all[i], EquivalenceMode::flow()) == canonical_key(all[j], EquivalenceMode::flow()))
        CHECK(canonical_key(all[i]) == canonical_key(all[j]));
}

TEST_CASE("configuration count equals flow-mode count minus asymmetric classes") {
  for (const auto& level : support::levels()) {
    std::set<std::vector<std::uint8_t>> flow_keys;
    for (const auto& cls : level.classes) {
      flow_keys.insert(canonical_key(decode(cls.representative), EquivalenceMode::flow()).bytes);
      flow_keys.insert(canonical_key(decode(swap_curves(cls.representative)), EquivalenceMode::flow()).bytes);
    }
    CHECK(static_cast<int>(level.classes.size()) ==
          static_cast<int>(flow_keys.size()) - level.asymmetric_count());
  }
}

TEST_CASE("symmetry report") {
  const auto& levels = support::levels();
  for (int i = 0; i < 4; ++i)
    for (const auto& cls : levels[i].classes) CHECK(symmetry(decode(cls.representative)).has_swap_automorphism);
  int asymmetric = 0;
  for (const auto& cls : levels[4].classes) asymmetric += !symmetry(decode(cls.representative)).has_swap_automorphism;
  CHECK(asymmetric == 1);

  for (const auto& level : levels)
    for (const auto& cls : level.classes) {
      const auto arr = decode(cls.representative);
      const auto report = symmetry(arr);
      CHECK(report.automorphism_count >= 1);
      // Seeds are darts x orientation x color map; the minimal ones form a coset.
      CHECK((arr.num_darts() * 4) % report.automorphism_count == 0);
      // Swap test stated directly through keys with a forced color map.
      const auto same = canonical_key(arr, EquivalenceMode::flow());
      const auto swapped = canonical_key(support::recolor(arr), EquivalenceMode::flow());
      CHECK(report.has_swap_automorphism == (same == swapped));
    }
}

TEST_CASE("hex round trip") {
  const auto key = canonical_key(parse_arrangement("GP1 4 1 2 3 4 + - + -"));
  CHECK(bytes_from_hex(key.hex()) == key.bytes);
  CHECK(key.hex().find_first_not_of("0123456789abcdef") == std::string::npos);
}

TEST_CASE("canonical labels are a permutation") {
  const auto arr = parse_arrangement("GP1 4 1 2 3 4 + - + -");
  auto labels = canonical_labels(arr);
  std::sort(labels.begin(), labels.end());
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) CHECK(labels[i] == i);
}
