#pragma once

// Catalog files: one class per line,
//   <config key hex> <flow key hex> <S|A> <GP1 line> # parent=<key hex> site=<face>,<dart_a>,<dart_b>
// with `#` header lines. Seed and oracle entries write `parent=- site=-`.

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "twocurves/arrangement.hpp"
#include "twocurves/canonical.hpp"
#include "twocurves/generator.hpp"

namespace twocurves {

inline constexpr std::string_view tool_version = "1.0.0";

struct CatalogEntry {
  std::string config_key;  // hex
  std::string flow_key;    // hex
  bool symmetric = true;
  GaussPairCode code;
  std::string parent = "-";
  std::optional<CrossingSite> site;
};

inline std::string format_entry(const CatalogEntry& e) {
  std::string line = e.config_key + ' ' + e.flow_key + ' ' + (e.symmetric ? 'S' : 'A') + ' ' + to_gp1(e.code) +
                     " # parent=" + e.parent + " site=";
  if (e.site)
    line += std::to_string(e.site->face) + ',' + std::to_string(e.site->dart_a) + ',' + std::to_string(e.site->dart_b);
  else
    line += '-';
  return line;
}

inline CatalogEntry entry_for(const LevelClass& cls) {
  CatalogEntry e;
  e.config_key = cls.config_key.hex();
  e.flow_key = cls.flow_key.hex();
  e.symmetric = cls.symmetry.symmetric();
  e.code = cls.representative;
  if (cls.provenance) {
    e.parent = cls.provenance->parent.hex();
    e.site = cls.provenance->site;
  }
  return e;
}

inline void write_catalog(std::ostream& out, int n_points, const std::vector<CatalogEntry>& entries,
                          EquivalenceMode mode, std::string_view source) {
  out << "# twocurves " << tool_version << '\n';
  out << "# source=" << source << " points=" << n_points << " classes=" << entries.size()
      << " allow_swap=" << (mode.allow_swap ? 1 : 0) << " allow_reflection=" << (mode.allow_reflection ? 1 : 0)
      << '\n';
  for (const auto& e : entries) out << format_entry(e) << '\n';
}

inline void write_catalog(std::ostream& out, const Level& level, EquivalenceMode mode) {
  std::vector<CatalogEntry> entries;
  for (const auto& cls : level.classes) entries.push_back(entry_for(cls));
  write_catalog(out, level.n_points, entries, mode, "generator");
}

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline bool is_hex(std::string_view s) {
  return !s.empty() && s.find_first_not_of("0123456789abcdef") == std::string_view::npos;
}

}  // namespace detail

inline CatalogEntry parse_entry(std::string_view line) {
  const auto hash = line.find('#');
  if (hash == std::string_view::npos) throw Error(ErrorKind::MalformedCode, "catalog line lacks provenance comment");
  std::istringstream head{std::string(line.substr(0, hash))};
  CatalogEntry e;
  std::string flag;
  if (!(head >> e.config_key >> e.flow_key >> flag) || !detail::is_hex(e.config_key) || !detail::is_hex(e.flow_key))
    throw Error(ErrorKind::MalformedCode, "catalog line must start with two hex keys");
  if (flag != "S" && flag != "A") throw Error(ErrorKind::MalformedCode, "symmetry flag must be S or A");
  e.symmetric = flag == "S";
  std::string rest;
  std::getline(head, rest);
  e.code = parse_gp1(detail::trim(rest));

  std::istringstream tail{std::string(line.substr(hash + 1))};
  std::string tok;
  while (tail >> tok) {
    if (tok.rfind("parent=", 0) == 0) {
      e.parent = tok.substr(7);
    } else if (tok.rfind("site=", 0) == 0) {
      const std::string v = tok.substr(5);
      if (v != "-") {
        CrossingSite s;
        char c1 = 0, c2 = 0;
        std::istringstream sv(v);
        if (!(sv >> s.face >> c1 >> s.dart_a >> c2 >> s.dart_b) || c1 != ',' || c2 != ',')
          throw Error(ErrorKind::MalformedCode, "bad site '" + v + "'");
        e.site = s;
      }
    }
  }
  return e;
}

struct InputArrangement {
  int line = 0;
  GaussPairCode code;
};

// Reads GP1 lines or catalog lines; blank lines and `#` lines are skipped.
// Errors carry the 1-based line number.
inline std::vector<InputArrangement> read_arrangements(std::istream& in, std::string_view name = "<input>") {
  std::vector<InputArrangement> out;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    try {
      GaussPairCode code;
      if (line.rfind("GP1", 0) == 0)
        code = parse_gp1(detail::trim(line.substr(0, line.find('#'))));
      else
        code = parse_entry(line).code;
      out.push_back({line_no, std::move(code)});
    } catch (const Error& e) {
      throw Error(ErrorKind::MalformedCode, std::string(name) + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

inline std::vector<CatalogEntry> read_catalog(std::istream& in, std::string_view name = "<catalog>") {
  std::vector<CatalogEntry> out;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    try {
      out.push_back(parse_entry(line));
    } catch (const Error& e) {
      throw Error(ErrorKind::MalformedCode, std::string(name) + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace twocurves
