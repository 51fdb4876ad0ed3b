// Acceptance run: one PASS/FAIL line per criterion. `--long` adds the
// ten-point brute-force comparison to criterion 3.

#include <chrono>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "cli.hpp"
#include "support.hpp"

using namespace twocurves;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct CliResult {
  int code = 0;
  std::string out;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "twocurves");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in;
  std::ostringstream out, err;
  CliResult r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  r.out = out.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome configuration_counts(const fs::path& dir) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = cli({"enumerate", "--max-points", "10", "--out", (dir / "catalogs").string(), "--force"});
  const double t = seconds_since(t0);
  if (r.code != 0) o.fail("exit code " + std::to_string(r.code));
  if (r.out.find("counts: 1 1 2 4 13\n") == std::string::npos) o.fail("output was: " + r.out);
  if (t >= 10) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) o.detail = "counts 1 1 2 4 13 in " + std::to_string(t) + " s";
  return o;
}

Outcome flow_counts() {
  Outcome o;
  const auto r = cli({"count", "--max-points", "10"});
  if (r.code != 0) o.fail("exit code " + std::to_string(r.code));
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  const std::vector<std::array<int, 5>> expect{
      {2, 1, 1, 0, 1}, {4, 1, 1, 0, 1}, {6, 2, 2, 0, 2}, {8, 4, 4, 0, 4}, {10, 13, 12, 1, 14}};
  for (const auto& row : expect) {
    std::array<int, 5> got{};
    for (int& x : got) lines >> x;
    if (got != row) o.fail("row for 2n=" + std::to_string(row[0]) + " differs");
  }
  if (o.pass) o.detail = "flows 1 1 2 4 14, one asymmetric class at 2n=10";
  return o;
}

Outcome oracle_equivalence(bool long_run) {
  Outcome o;
  const auto& levels = support::levels();
  const auto t0 = std::chrono::steady_clock::now();
  const int last = long_run ? 10 : 8;
  for (int p = 2; p <= last; p += 2) {
    OracleOptions options;
    options.prune_sign_sum = p == 10;
    options.jobs = p == 10 ? std::max(1u, std::thread::hardware_concurrency()) : 1;
    const auto result = brute_force(p, options);
    std::set<std::vector<std::uint8_t>> generated;
    for (const auto& cls : levels[p / 2 - 1].classes) generated.insert(cls.config_key.bytes);
    if (result.class_keys != generated) o.fail("key sets differ at 2n=" + std::to_string(p));
    if (result.accepted_nonzero_sign_sum != 0) o.fail("accepted nonzero sign sum at 2n=" + std::to_string(p));
  }
  const double t = seconds_since(t0);
  if (!long_run && t >= 60) o.fail("took " + std::to_string(t) + " s");
  if (o.pass)
    o.detail = std::string("key sets equal for 2n=2..") + std::to_string(last) + " in " + std::to_string(t) + " s" +
               (long_run ? "" : " (2n=10 runs under --long)");
  return o;
}

Outcome structural_invariants() {
  Outcome o;
  int checked = 0;
  for (const auto& level : support::levels()) {
    const int n2 = level.n_points;
    for (const auto& cls : level.classes) {
      const auto arr = decode(cls.representative);
      const std::string tag = " for " + to_gp1(cls.representative);
      if (static_cast<int>(vertices(arr).size()) != n2) o.fail("V" + tag);
      if (arr.num_arcs() != 2 * n2) o.fail("E" + tag);
      if (support::count_faces(arr) != n2 + 2) o.fail("F" + tag);
      for (const auto& v : vertices(arr)) {
        if (v.size() != 4) o.fail("vertex degree" + tag);
        for (Dart d : v)
          if (arr.color(d) == arr.color(arr.rotation(d))) o.fail("rotation alternation" + tag);
      }
      // Straight-ahead cycles: one per color, length 2n.
      std::vector<char> seen(arr.num_darts(), 0);
      std::map<Curve, int> cycles;
      for (Dart s = 0; s < arr.num_darts(); ++s) {
        if (seen[s] || seen[arr.arc_mate(s)]) continue;
        int len = 0;
        Dart d = s;
        do {
          seen[d] = 1;
          ++len;
          d = arr.straight(d);
        } while (d != s);
        if (len != n2) o.fail("cycle length" + tag);
        ++cycles[arr.color(s)];
      }
      if (cycles[Curve::first] != 1 || cycles[Curve::second] != 1) o.fail("cycle count" + tag);
      int sum = 0;
      for (Sign s : cls.representative.signs) sum += value(s);
      if (sum != 0) o.fail("sign sum" + tag);
      const auto walks = faces(arr);
      if (std::none_of(walks.begin(), walks.end(), [](const auto& w) { return w.size() == 2; })) o.fail("bigon" + tag);

      const auto g = region_graph(arr);
      std::vector<int> balance(g.num_regions(), 0);
      for (const auto& e : g.edges) {
        if (g.colors[e.black] == g.colors[e.white]) o.fail("bipartite" + tag);
        balance[e.black] += e.curve == Curve::first ? 1 : -1;
        balance[e.white] += e.curve == Curve::first ? 1 : -1;
      }
      for (int r = 0; r < g.num_regions(); ++r)
        if (g.degrees[r] % 2 != 0 || balance[r] != 0) o.fail("region degree" + tag);
      if (g.simple) {
        for (const auto& row : g.matrix)
          if (std::accumulate(row.begin(), row.end(), 0) != 0) o.fail("row sum" + tag);
        for (std::size_t j = 0; j < g.columns.size(); ++j) {
          int s = 0;
          for (const auto& row : g.matrix) s += row[j];
          if (s != 0) o.fail("column sum" + tag);
        }
      }
      ++checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " classes, zero violations";
  return o;
}

Outcome canonical_soundness() {
  Outcome o;
  std::mt19937 rng(20241016u);
  int relabelings = 0;
  for (const auto& level : support::levels()) {
    std::set<std::vector<std::uint8_t>> keys;
    for (const auto& cls : level.classes) keys.insert(cls.config_key.bytes);
    for (const auto& cls : level.classes) {
      const auto arr = decode(cls.representative);
      const std::string tag = " for " + to_gp1(cls.representative);
      const auto key = canonical_key(arr);
      const auto vectors = defining_vectors(region_graph(arr));
      for (int k = 0; k < 100; ++k) {
        const auto image = support::relabel(arr, rng);
        if (canonical_key(image) != key) o.fail("relabeling changed the key" + tag);
        if (!same_vectors(defining_vectors(region_graph(image)), vectors)) o.fail("relabeling changed vectors" + tag);
        ++relabelings;
      }
      for (const auto& image : {support::mirror(arr), support::recolor(arr), decode(reflect(cls.representative)),
                                decode(swap_curves(cls.representative))}) {
        const auto k = canonical_key(image);
        if (!keys.count(k.bytes)) o.fail("image outside the catalog" + tag);
        if (k != key) o.fail("image in another class" + tag);
        if (!same_vectors(defining_vectors(region_graph(image)), vectors)) o.fail("image changed vectors" + tag);
      }
    }
  }
  if (o.pass) o.detail = std::to_string(relabelings) + " relabelings plus reflection and swap images, zero violations";
  return o;
}

Outcome merge_structure() {
  Outcome o;
  const auto members = expand(support::levels()[3]);
  std::map<std::vector<std::uint8_t>, DefiningVectors> vector_of_key;
  std::map<DefiningVectors, std::set<std::vector<std::uint8_t>>> groups;
  for (const auto& m : members) {
    const auto v = defining_vectors(region_graph(decode(m.code))).normalized();
    auto [it, inserted] = vector_of_key.try_emplace(m.key.bytes, v);
    if (!inserted && it->second != v) o.fail("one class spans two vector groups");
    groups[v].insert(m.key.bytes);
  }
  std::size_t total = 0;
  for (const auto& [v, keys] : groups) total += keys.size();
  if (total != 13) o.fail("classes after grouping: " + std::to_string(total));
  if (vector_of_key.size() != 13) o.fail("classes without grouping: " + std::to_string(vector_of_key.size()));
  if (o.pass)
    o.detail = std::to_string(members.size()) + " crossings, " + std::to_string(groups.size()) +
               " vector groups, 13 classes with or without the pre-filter";
  return o;
}

Outcome rendering(const fs::path& dir) {
  Outcome o;
  std::vector<std::string> args{"render", "--out", (dir / "svg").string(), "--force"};
  for (int p = 2; p <= 10; p += 2) {
    char name[32];
    std::snprintf(name, sizeof name, "catalog-%02d.txt", p);
    args.push_back((dir / "catalogs" / name).string());
  }
  int drawn = 0;
  for (const auto& level : support::levels())
    for (const auto& cls : level.classes) {
      const auto arr = decode(cls.representative);
      const auto check = check_layout(arr, layout(arr));
      if (check.improper_intersections != 0) o.fail("intersections for " + to_gp1(cls.representative));
      if (check.drawn_faces != level.n_points + 2) o.fail("face count for " + to_gp1(cls.representative));
      ++drawn;
    }
  if (cli(args).code != 0) return o.fail("first render failed"), o;
  std::map<std::string, std::string> first;
  for (const auto& e : fs::directory_iterator(dir / "svg")) first[e.path().filename().string()] = slurp(e.path());
  if (cli(args).code != 0) return o.fail("second render failed"), o;
  for (const auto& [name, bytes] : first)
    if (slurp(dir / "svg" / name) != bytes) o.fail(name + " changed on re-run");
  if (first.size() != 21) o.fail(std::to_string(first.size()) + " files written");
  if (o.pass) o.detail = std::to_string(drawn) + " drawings valid, byte-identical on re-run";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const bool long_run = argc > 1 && std::strcmp(argv[1], "--long") == 0;
  const fs::path dir = fs::temp_directory_path() / "twocurves-acceptance";
  fs::remove_all(dir);

  std::vector<std::pair<std::string, Outcome>> results;
  auto record = [&](std::string name, auto fn) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << results.size() + 1 << ". " << name << ": " << o.detail
              << std::endl;
    results.emplace_back(std::move(name), std::move(o));
  };

  record("configuration counts", [&] { return configuration_counts(dir); });
  record("flow counts", [] { return flow_counts(); });
  record("oracle equivalence", [&] { return oracle_equivalence(long_run); });
  record("structural invariants", [] { return structural_invariants(); });
  record("canonical key soundness", [] { return canonical_soundness(); });
  record("vector groups and merges", [] { return merge_structure(); });
  record("rendering", [&] { return rendering(dir); });

  fs::remove_all(dir);
  const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.second.pass; });
  return all ? 0 : 1;
}
