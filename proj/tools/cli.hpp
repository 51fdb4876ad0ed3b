#pragma once

// Command-line front end. Exit codes: 0 success, 1 usage, 2 malformed input
// or I/O failure, 3 internal invariant violation.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "twocurves/twocurves.hpp"

namespace twocurves::cli {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_input = 2, exit_internal = 3 };

inline constexpr const char* output_dir_env = "TWOCURVES_OUTPUT_DIR";

// Raised when a computed result violates one of its own postconditions.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  int max_points = 0;
  int points = 0;
  bool allow_swap = true;
  bool allow_reflection = true;
  bool allow_long = false;
  bool full = false;
  bool force = false;
  int jobs = 1;
  std::string out_dir;
  std::string format = "text";
  std::vector<std::string> inputs;
  std::optional<int> outer_face;
  SvgStyle style;

  EquivalenceMode mode() const { return {allow_swap, allow_reflection}; }
};

namespace detail {

inline std::string default_out_dir(const char* fallback) {
  const char* env = std::getenv(output_dir_env);
  return env != nullptr && *env != '\0' ? env : fallback;
}

inline std::string pad(int points) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02d", points);
  return buf;
}

inline void write_file(const std::filesystem::path& path, const std::string& content, bool force) {
  std::error_code ec;
  if (std::filesystem::exists(path, ec) && !force)
    throw UsageError("refusing to overwrite " + path.string() + " (pass --force)");
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + path.string());
  f << content;
  if (!f) throw IoError("write failed for " + path.string());
}

inline std::vector<InputArrangement> read_inputs(const RunConfig& cfg, std::istream& stdin_stream) {
  std::vector<InputArrangement> out;
  auto read = [&](std::istream& in, const std::string& name) {
    for (auto& item : read_arrangements(in, name)) {
      try {
        decode(item.code);
      } catch (const Error& e) {
        throw Error(ErrorKind::MalformedCode, name + ":" + std::to_string(item.line) + ": " + e.what());
      }
      out.push_back(std::move(item));
    }
  };
  if (cfg.inputs.empty()) {
    read(stdin_stream, "<stdin>");
    return out;
  }
  for (const auto& path : cfg.inputs) {
    if (path == "-") {
      read(stdin_stream, "<stdin>");
      continue;
    }
    std::ifstream f(path);
    if (!f) throw IoError("cannot read " + path);
    read(f, path);
  }
  return out;
}

// Postconditions of an enumerated level.
inline void check_level(const Level& level) {
  std::set<std::vector<std::uint8_t>> keys;
  for (const auto& cls : level.classes) {
    const Arrangement arr = decode(cls.representative);
    if (arr.num_points() != level.n_points) throw InternalError("representative has the wrong point count");
    if (genus(arr) != 0) throw InternalError("representative is not spherical");
    if (!keys.insert(cls.config_key.bytes).second) throw InternalError("duplicate class key");
  }
}

inline void print_count_header(std::ostream& out) {
  out << "  2n  configurations  symmetric  asymmetric  flows\n";
}

inline void print_count_row(std::ostream& out, int points, int configs, int sym, int asym, int flows) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%4d  %14d  %9d  %10d  %5d\n", points, configs, sym, asym, flows);
  out << buf;
}

}  // namespace detail

inline int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const auto levels = enumerate_up_to(cfg.max_points, cfg.mode(), cfg.jobs);
  std::string counts;
  for (const auto& level : levels) {
    detail::check_level(level);
    if (!cfg.out_dir.empty()) {
      std::ostringstream text;
      write_catalog(text, level, cfg.mode());
      detail::write_file(std::filesystem::path(cfg.out_dir) / ("catalog-" + detail::pad(level.n_points) + ".txt"),
                         text.str(), cfg.force);
    }
    out << "2n=" << level.n_points << " classes=" << level.classes.size() << '\n';
    counts += (counts.empty() ? "" : " ") + std::to_string(level.classes.size());
  }
  out << "counts: " << counts << '\n';
  return exit_ok;
}

inline int cmd_count(const RunConfig& cfg, std::ostream& out) {
  const auto levels = enumerate_up_to(cfg.max_points, {true, cfg.allow_reflection}, cfg.jobs);
  detail::print_count_header(out);
  for (const auto& level : levels) {
    detail::check_level(level);
    const int configs = static_cast<int>(level.classes.size());
    const int flows = level.flow_count();
    if (flows < configs) throw InternalError("flow count below configuration count");
    detail::print_count_row(out, level.n_points, configs, level.symmetric_count(), level.asymmetric_count(), flows);
  }
  return exit_ok;
}

inline int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<int> points;
  if (cfg.points > 0)
    points.push_back(cfg.points);
  else
    for (int p = 2; p <= cfg.max_points; p += 2) points.push_back(p);
  for (int p : points) {
    if (p >= 10 && !cfg.allow_long) throw UsageError("the oracle at 2n=10 is a long run; pass --allow-long");
    if (p >= 10 && cfg.full) throw UsageError("--full is limited to 2n <= 8");
  }

  detail::print_count_header(out);
  for (int p : points) {
    OracleOptions options;
    options.limit = cfg.full ? LimitMode::full : LimitMode::symmetric_reduced;
    options.jobs = cfg.jobs;
    options.prune_sign_sum = p >= 10;
    const auto result = brute_force(p, options);
    if (result.accepted_nonzero_sign_sum != 0) throw InternalError("accepted code with nonzero sign sum");
    const auto row = count_row(result);
    detail::print_count_row(out, row.n_points, row.configurations, row.symmetric, row.asymmetric, row.flows);
    err << "oracle 2n=" << p << ": examined " << result.examined << " codes, accepted " << result.raw_accepted << " in "
        << result.elapsed.count() << " s\n";

    if (!cfg.out_dir.empty()) {
      std::vector<CatalogEntry> entries;
      for (const auto& [key, code] : result.representatives) {
        const Arrangement arr = decode(code);
        CatalogEntry e;
        e.config_key = CanonicalKey{key, EquivalenceMode::configuration()}.hex();
        e.flow_key = canonical_key(arr, EquivalenceMode::flow()).hex();
        e.symmetric = symmetry(arr).symmetric();
        e.code = code;
        entries.push_back(std::move(e));
      }
      std::ostringstream text;
      write_catalog(text, p, entries, EquivalenceMode::configuration(), "oracle");
      detail::write_file(std::filesystem::path(cfg.out_dir) / ("catalog-" + detail::pad(p) + ".txt"), text.str(),
                         cfg.force);
    }
  }
  return exit_ok;
}

inline void print_invariants_text(std::ostream& out, const GaussPairCode& code, const RegionGraph& g) {
  const auto v = defining_vectors(g);
  out << to_gp1(code) << '\n';
  out << "  points: " << g.n_points << "  regions: " << g.num_regions() << "  arcs: " << g.edges.size() << '\n';
  out << "  vectors: " << to_string(v) << '\n';
  if (!g.simple) {
    out << "  matrix: withheld (some regions share more than one arc)\n";
    return;
  }
  out << "  matrix:\n";
  for (const auto& row : g.matrix) {
    out << "   ";
    for (int x : row) out << (x > 0 ? " +1" : x < 0 ? " -1" : "  0");
    out << '\n';
  }
}

inline void print_invariants_kv(std::ostream& out, const GaussPairCode& code, const RegionGraph& g) {
  const auto v = defining_vectors(g);
  auto join = [](const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
  };
  out << "code=" << to_gp1(code) << '\n';
  out << "points=" << g.n_points << '\n';
  out << "regions=" << g.num_regions() << '\n';
  out << "arcs=" << g.edges.size() << '\n';
  out << "black_degrees=" << join(v.black_degrees) << '\n';
  out << "white_degrees=" << join(v.white_degrees) << '\n';
  out << "simple=" << (g.simple ? "true" : "false") << '\n';
  if (g.simple) {
    out << "matrix_rows=" << g.matrix.size() << '\n';
    out << "matrix_cols=" << (g.matrix.empty() ? 0 : g.matrix[0].size()) << '\n';
    std::string m;
    for (std::size_t i = 0; i < g.matrix.size(); ++i) m += (i ? ";" : "") + join(g.matrix[i]);
    out << "matrix=" << m << '\n';
  }
  out << '\n';
}

inline int cmd_invariants(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  for (const auto& item : detail::read_inputs(cfg, in)) {
    const auto g = region_graph(decode(item.code));
    if (cfg.format == "kv")
      print_invariants_kv(out, item.code, g);
    else
      print_invariants_text(out, item.code, g);
  }
  return exit_ok;
}

inline int cmd_symmetry(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  int sym = 0, asym = 0;
  for (const auto& item : detail::read_inputs(cfg, in)) {
    const auto report = symmetry(decode(item.code), cfg.allow_reflection);
    (report.symmetric() ? sym : asym) += 1;
    out << (report.symmetric() ? 'S' : 'A') << " aut=" << report.automorphism_count
        << " reflection=" << (report.has_reflection_automorphism ? "yes" : "no") << ' ' << to_gp1(item.code) << '\n';
  }
  out << "symmetric=" << sym << " asymmetric=" << asym << '\n';
  return exit_ok;
}

inline int cmd_render(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  std::map<int, int> index_per_level;
  for (const auto& item : detail::read_inputs(cfg, in)) {
    const Arrangement arr = decode(item.code);
    const auto report = symmetry(arr);
    if (cfg.outer_face && (*cfg.outer_face < 0 || *cfg.outer_face >= arr.num_points() + 2))
      throw UsageError("--outer-face must lie in [0, " + std::to_string(arr.num_points() + 1) + "] for " +
                       to_gp1(item.code));
    const auto lay = layout(arr, cfg.outer_face);
    if (!check_layout(arr, lay).ok(arr.num_points())) throw InternalError("layout failed validation");
    const int idx = ++index_per_level[arr.num_points()];
    const std::string name =
        std::to_string(arr.num_points()) + "-" + std::to_string(idx) + "-" + (report.symmetric() ? "S" : "A") + ".svg";
    const auto path = std::filesystem::path(cfg.out_dir) / name;
    detail::write_file(path, to_svg(arr, lay, cfg.style), cfg.force);
    out << path.string() << '\n';
  }
  return exit_ok;
}

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two circles on the sphere: enumeration, invariants and drawings", "twocurves"};
  app.set_version_flag("--version", std::string(tool_version));
  app.require_subcommand(1);
  RunConfig cfg;

  auto even_points = CLI::Validator(
      [](std::string& s) -> std::string {
        const int v = std::stoi(s);
        if (v < 2 || v > 10 || v % 2 != 0) return "must be an even number between 2 and 10";
        return {};
      },
      "EVEN in [2,10]");
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs,-j", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  };
  auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("inputs", cfg.inputs, "GP1 or catalog files ('-' or none for stdin)");
  };

  auto* enumerate = app.add_subcommand("enumerate", "enumerate classes level by level and write catalogs");
  enumerate->add_option("--max-points", cfg.max_points, "largest point count")->required()->check(even_points);
  enumerate->add_option("--out", cfg.out_dir, std::string("catalog directory (default $") + output_dir_env + " or ./catalogs)");
  enumerate->add_flag("--force", cfg.force, "overwrite existing catalogs");
  enumerate->add_flag("!--no-swap", cfg.allow_swap, "do not identify arrangements that exchange the curves");
  enumerate->add_flag("!--no-reflection", cfg.allow_reflection, "orientation-preserving homeomorphisms only");
  add_jobs(enumerate);

  auto* count = app.add_subcommand("count", "configuration and flow counts per level");
  count->add_option("--max-points", cfg.max_points, "largest point count")->required()->check(even_points);
  count->add_flag("!--no-reflection", cfg.allow_reflection, "orientation-preserving homeomorphisms only");
  add_jobs(count);

  auto* oracle = app.add_subcommand("oracle", "brute-force enumeration over Gauss-pair codes");
  auto* opt_points = oracle->add_option("--points", cfg.points, "single point count")->check(even_points);
  auto* opt_max = oracle->add_option("--max-points", cfg.max_points, "all levels up to this count")->check(even_points);
  opt_points->excludes(opt_max);
  oracle->add_flag("--allow-long", cfg.allow_long, "permit 2n = 10");
  oracle->add_flag("--full", cfg.full, "do not fix the first visited point");
  oracle->add_option("--out", cfg.out_dir, "also write catalogs to this directory");
  oracle->add_flag("--force", cfg.force, "overwrite existing catalogs");
  add_jobs(oracle);

  auto* invariants = app.add_subcommand("invariants", "region coloring, degree vectors and signed matrices");
  invariants->add_option("--format", cfg.format, "text or kv")->check(CLI::IsMember({"text", "kv"}));
  add_inputs(invariants);

  auto* sym = app.add_subcommand("symmetry", "curve-exchange symmetry of each arrangement");
  sym->add_flag("!--no-reflection", cfg.allow_reflection, "orientation-preserving homeomorphisms only");
  add_inputs(sym);

  auto* render = app.add_subcommand("render", "SVG drawings named <2n>-<index>-<S|A>.svg");
  render->add_option("--out", cfg.out_dir, std::string("output directory (default $") + output_dir_env + " or ./drawings)");
  render->add_flag("--force", cfg.force, "overwrite existing files");
  render->add_option("--outer-face", cfg.outer_face, "face index placed at infinity (default: largest face)");
  render->add_option("--stroke1", cfg.style.stroke_first, "stroke color of the first curve");
  render->add_option("--stroke2", cfg.style.stroke_second, "stroke color of the second curve");
  render->add_option("--stroke-width", cfg.style.stroke_width, "stroke width in pixels")->check(CLI::PositiveNumber);
  render->add_option("--size", cfg.style.canvas, "canvas size in pixels")->check(CLI::Range(16, 10000));
  add_jobs(render);
  add_inputs(render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return exit_ok;
    }
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return exit_usage;
  }

  try {
    if (*enumerate) {
      if (cfg.out_dir.empty()) cfg.out_dir = detail::default_out_dir("catalogs");
      return cmd_enumerate(cfg, out);
    }
    if (*count) return cmd_count(cfg, out);
    if (*oracle) {
      if (cfg.points == 0 && cfg.max_points == 0) throw UsageError("oracle needs --points or --max-points");
      return cmd_oracle(cfg, out, err);
    }
    if (*invariants) return cmd_invariants(cfg, in, out);
    if (*sym) return cmd_symmetry(cfg, in, out);
    if (*render) {
      if (cfg.out_dir.empty()) cfg.out_dir = detail::default_out_dir("drawings");
      return cmd_render(cfg, in, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::MalformedCode:
      case ErrorKind::NotSpherical:
      case ErrorKind::NotTransversal:
        err << "error: " << e.what() << '\n';
        return exit_input;
      default:
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
  }
  return exit_usage;
}

}  // namespace twocurves::cli
