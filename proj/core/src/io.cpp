#include "fintop/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace fintop::io {

namespace {

struct Line {
  std::size_t number = 0;
  std::string key;
  std::vector<std::string> args;
};

[[noreturn]] void fail(std::string_view source, std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, std::string(source) + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokens(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(std::move(t));
  return out;
}

bool is_blank_or_comment(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

std::vector<std::pair<std::size_t, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream in{std::string(text)};
  std::size_t number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    if (!is_blank_or_comment(line)) out.emplace_back(number, std::move(line));
  }
  return out;
}

std::vector<Line> keyed_lines(std::string_view text, std::string_view source) {
  std::vector<Line> out;
  for (auto& [number, raw] : content_lines(text)) {
    const auto colon = raw.find(':');
    if (colon == std::string::npos) fail(source, number, "expected 'key: value'");
    auto key = tokens(std::string_view(raw).substr(0, colon));
    if (key.size() != 1) fail(source, number, "malformed key");
    out.push_back({number, std::move(key[0]), tokens(std::string_view(raw).substr(colon + 1))});
  }
  return out;
}

template <class Fn>
auto with_context(std::string_view source, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(e.code(), std::string(source) + ": " + e.what());
  }
}

Point lookup(const FiniteSpace& space, const std::string& name, std::string_view source,
             std::size_t line) {
  auto p = space.find(name);
  if (!p) fail(source, line, "unknown point '" + name + "'");
  return *p;
}

}  // namespace

// ---------------------------------------------------------------------------

FiniteSpace parse_space(std::string_view text, std::string_view source) {
  std::optional<std::vector<std::string>> points;
  std::size_t points_line = 0;
  std::vector<std::pair<std::string, std::string>> le;
  std::vector<std::size_t> le_lines;
  std::vector<std::vector<std::string>> opens;
  std::size_t first_le = 0, first_open = 0;

  for (auto& line : keyed_lines(text, source)) {
    if (line.key == "points") {
      if (points) fail(source, line.number, "duplicate points: line (first on line " +
                                                std::to_string(points_line) + ")");
      points = std::move(line.args);
      points_line = line.number;
    } else if (line.key == "le") {
      if (line.args.size() != 2) fail(source, line.number, "le: takes exactly two points");
      if (!first_le) first_le = line.number;
      le.emplace_back(line.args[0], line.args[1]);
      le_lines.push_back(line.number);
    } else if (line.key == "open") {
      if (!first_open) first_open = line.number;
      opens.push_back(std::move(line.args));
    } else {
      fail(source, line.number, "unknown key '" + line.key + "'");
    }
    if (first_le && first_open)
      fail(source, std::max(first_le, first_open),
           "le: and open: styles are mutually exclusive (le: on line " + std::to_string(first_le) +
               ", open: on line " + std::to_string(first_open) + ")");
  }
  if (!points) fail(source, 0, "missing points: line");

  if (first_open)
    return with_context(source, [&] { return from_opens(*points, opens); });

  std::map<std::string, Point, std::less<>> index;
  for (Point i = 0; i < points->size(); ++i)
    if (!index.emplace((*points)[i], i).second)
      throw Error(ErrorCode::DuplicateLabel,
                  std::string(source) + ":" + std::to_string(points_line) + ": " + (*points)[i]);
  std::vector<std::pair<Point, Point>> pairs;
  for (std::size_t i = 0; i < le.size(); ++i) {
    auto x = index.find(le[i].first), y = index.find(le[i].second);
    if (x == index.end()) fail(source, le_lines[i], "unknown point '" + le[i].first + "'");
    if (y == index.end()) fail(source, le_lines[i], "unknown point '" + le[i].second + "'");
    pairs.emplace_back(x->second, y->second);
  }
  return with_context(source, [&] { return from_preorder(points->size(), pairs, *points); });
}

std::string format_space(const FiniteSpace& space) {
  std::ostringstream out;
  out << "points:";
  for (const auto& l : space.labels()) out << ' ' << l;
  out << '\n';
  const bool t0 = is_t0(space);
  for (Point x = 0; x < space.size(); ++x)
    for (Point y = 0; y < space.size(); ++y) {
      if (x == y || !space.leq(x, y)) continue;
      if (t0) {
        // Skip pairs with a point strictly between them.
        PointSet between = space.up_set(x) & space.down_set(y);
        between.reset(x);
        between.reset(y);
        if (between.any()) continue;
      }
      out << "le: " << space.label(x) << ' ' << space.label(y) << '\n';
    }
  return out.str();
}

SimplicialComplex parse_complex(std::string_view text, std::string_view source) {
  std::vector<Simplex> simplices;
  for (auto& [number, raw] : content_lines(text)) {
    Simplex s;
    for (const auto& t : tokens(raw)) {
      std::uint32_t v = 0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc{} || ptr != t.data() + t.size())
        fail(source, number, "expected a vertex index, got '" + t + "'");
      s.push_back(v);
    }
    simplices.push_back(std::move(s));
  }
  return with_context(source, [&] { return SimplicialComplex::from_simplices(std::move(simplices)); });
}

std::string format_complex(const SimplicialComplex& complex) {
  std::ostringstream out;
  for (const auto& s : complex.all_simplices()) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
  return out.str();
}

bool looks_like_space(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) return false;
  auto t = tokens(lines.front().second);
  return !t.empty() && t.front().rfind("points:", 0) == 0;
}

MapHeader parse_map_header(std::string_view text, std::string_view source) {
  for (auto& line : keyed_lines(text, source)) {
    if (line.key != "map") continue;
    if (line.args.size() != 3 || line.args[1] != "->")
      fail(source, line.number, "expected 'map: <domain-file> -> <codomain-file>'");
    return {line.args[0], line.args[2]};
  }
  fail(source, 0, "missing map: header");
}

PointMap parse_map(std::string_view text, const FiniteSpace& dom, const FiniteSpace& cod,
                   std::string_view source) {
  std::vector<Point> images(dom.size(), cod.size());
  bool header = false;
  for (auto& line : keyed_lines(text, source)) {
    if (line.key == "map") {
      if (header) fail(source, line.number, "duplicate map: header");
      header = true;
    } else if (line.key == "send") {
      if (line.args.size() != 2) fail(source, line.number, "send: takes exactly two points");
      const Point x = lookup(dom, line.args[0], source, line.number);
      const Point y = lookup(cod, line.args[1], source, line.number);
      if (images[x] != cod.size()) fail(source, line.number, "point '" + line.args[0] + "' sent twice");
      images[x] = y;
    } else {
      fail(source, line.number, "unknown key '" + line.key + "'");
    }
  }
  if (!header) fail(source, 0, "missing map: header");
  for (Point x = 0; x < dom.size(); ++x)
    if (images[x] == cod.size()) fail(source, 0, "point '" + dom.label(x) + "' has no image");
  return PointMap{dom, cod, std::move(images)};
}

std::string format_map(const PointMap& map, std::string_view dom_file, std::string_view cod_file) {
  std::ostringstream out;
  out << "map: " << dom_file << " -> " << cod_file << '\n';
  for (Point x = 0; x < map.dom.size(); ++x)
    out << "send: " << map.dom.label(x) << ' ' << map.cod.label(map.images.at(x)) << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, path.string() + ": cannot write file");
  out << contents;
}

FiniteSpace read_space(const std::filesystem::path& path) {
  return parse_space(read_file(path), path.string());
}

SimplicialComplex read_complex(const std::filesystem::path& path) {
  return parse_complex(read_file(path), path.string());
}

InverseSequence read_sequence(const std::filesystem::path& manifest) {
  const auto source = manifest.string();
  const auto dir = manifest.parent_path();
  std::vector<std::string> space_files, bond_files;
  std::vector<std::size_t> bond_lines;
  for (auto& line : keyed_lines(read_file(manifest), source)) {
    if (line.args.size() != 1) fail(source, line.number, "expected exactly one file name");
    if (line.key == "space") {
      space_files.push_back(line.args[0]);
    } else if (line.key == "bond") {
      bond_files.push_back(line.args[0]);
      bond_lines.push_back(line.number);
    } else {
      fail(source, line.number, "unknown key '" + line.key + "'");
    }
  }
  const std::size_t expected = space_files.empty() ? 0 : space_files.size() - 1;
  if (bond_files.size() != expected)
    fail(source, 0, std::to_string(space_files.size()) + " spaces need " + std::to_string(expected) +
                        " bonds, manifest lists " + std::to_string(bond_files.size()));

  InverseSequence seq;
  for (const auto& f : space_files) seq.spaces.push_back(read_space(dir / f));
  for (std::size_t n = 0; n < bond_files.size(); ++n) {
    const auto path = dir / bond_files[n];
    const auto text = read_file(path);
    const auto header = parse_map_header(text, path.string());
    if (header.dom_file != space_files[n + 1] || header.cod_file != space_files[n])
      fail(source, bond_lines[n], "bond " + std::to_string(n) + " must map " + space_files[n + 1] +
                                      " -> " + space_files[n] + ", file says " + header.dom_file +
                                      " -> " + header.cod_file);
    seq.bonds.push_back(parse_map(text, seq.spaces[n + 1], seq.spaces[n], path.string()));
  }
  return seq;
}

std::vector<std::filesystem::path> sequence_files(const std::filesystem::path& manifest) {
  std::vector<std::filesystem::path> out;
  for (auto& line : keyed_lines(read_file(manifest), manifest.string()))
    for (const auto& f : line.args) out.push_back(manifest.parent_path() / f);
  return out;
}

WrittenSequence write_sequence(const InverseSequence& seq, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  WrittenSequence out;
  std::ostringstream manifest;
  manifest << "# inverse sequence, coarsest stage first\n";
  auto stage_name = [](std::size_t n) { return "stage" + std::to_string(n) + ".space"; };
  for (std::size_t n = 0; n < seq.spaces.size(); ++n) {
    const auto path = dir / stage_name(n);
    write_file(path, format_space(seq.spaces[n]));
    out.files.push_back(path);
    manifest << "space: " << stage_name(n) << '\n';
  }
  for (std::size_t n = 0; n < seq.bonds.size(); ++n) {
    const std::string name = "bond" + std::to_string(n) + ".map";
    const auto path = dir / name;
    write_file(path, format_map(seq.bonds[n], stage_name(n + 1), stage_name(n)));
    out.files.push_back(path);
    manifest << "bond: " << name << '\n';
  }
  out.manifest = dir / "manifest";
  write_file(out.manifest, manifest.str());
  return out;
}

}  // namespace fintop::io
