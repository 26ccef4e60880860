#include "fintop/doubled.hpp"

#include <algorithm>
#include <set>

namespace fintop::doubled {

namespace {

void check_twins(const DoubledSpace& space) {
  const std::size_t v = space.base.vertex_count();
  std::set<std::uint32_t> seen;
  for (auto t : space.twins) {
    if (t >= v) throw Error(ErrorCode::IndexOutOfRange, "twin " + std::to_string(t));
    if (!seen.insert(t).second)
      throw Error(ErrorCode::InvariantViolation, "twin " + std::to_string(t) + " listed twice");
    const auto& edges = space.base.simplices(1);
    const bool on_edge = std::any_of(edges.begin(), edges.end(), [&](const Simplex& e) {
      return e[0] == t || e[1] == t;
    });
    if (!on_edge) throw Error(ErrorCode::IsolatedTwin, "twin " + std::to_string(t) + " lies on no edge");
  }
}

}  // namespace

std::vector<std::vector<Point>> RClasses::nontrivial_classes() const {
  std::vector<std::vector<Point>> out;
  for (const auto& b : r3.blocks())
    if (b.size() > 1) out.push_back(b);
  return out;
}

RClasses r_classes(const DoubledSpace& space) {
  check_twins(space);
  const std::size_t v = space.base.vertex_count();
  const std::size_t n = v + space.twins.size();

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < v; ++i) labels.push_back(std::to_string(i));
  for (auto t : space.twins) labels.push_back(std::to_string(t) + "'");

  std::vector<PointSet> rows(n, PointSet(n));
  for (Point x = 0; x < n; ++x) rows[x].set(x);
  std::vector<std::size_t> ids(n);
  for (Point x = 0; x < n; ++x) ids[x] = x;
  for (std::size_t i = 0; i < space.twins.size(); ++i) {
    const Point original = space.twins[i], copy = v + i;
    rows[original].set(copy);
    rows[copy].set(original);
    ids[copy] = original;
  }
  RelationMatrix r1(std::move(rows));
  auto r2 = Partition::from_block_ids(ids);
  auto r3 = r2;
  return RClasses{std::move(labels), std::move(r1), std::move(r2), std::move(r3)};
}

SimplicialComplex doubled_complex(const DoubledSpace& space) {
  check_twins(space);
  const std::size_t v = space.base.vertex_count();
  std::vector<std::uint32_t> copy_of(v, 0);
  std::vector<bool> is_twin(v, false);
  for (std::size_t i = 0; i < space.twins.size(); ++i) {
    is_twin[space.twins[i]] = true;
    copy_of[space.twins[i]] = static_cast<std::uint32_t>(v + i);
  }
  std::vector<Simplex> simplices;
  for (const auto& s : space.base.all_simplices()) {
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (is_twin[s[i]]) slots.push_back(i);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
      Simplex t = s;
      for (std::size_t b = 0; b < slots.size(); ++b)
        if (mask >> b & 1) t[slots[b]] = copy_of[s[slots[b]]];
      std::sort(t.begin(), t.end());
      simplices.push_back(std::move(t));
    }
  }
  return SimplicialComplex::from_simplices(std::move(simplices));
}

SimplicialComplex reflection(const DoubledSpace& space) {
  const auto classes = r_classes(space);
  const auto doubled = doubled_complex(space);
  std::vector<Simplex> image;
  for (const auto& s : doubled.all_simplices()) {
    Simplex t;
    for (auto x : s) t.push_back(static_cast<std::uint32_t>(classes.r3.block_of(x)));
    image.push_back(std::move(t));
  }
  return SimplicialComplex::from_facets(classes.r3.block_count(), std::move(image));
}

SimplicialComplex polygon(std::size_t vertices) {
  std::vector<Simplex> edges;
  for (std::uint32_t i = 0; i < vertices; ++i)
    edges.push_back({i, static_cast<std::uint32_t>((i + 1) % vertices)});
  return SimplicialComplex::from_facets(vertices, std::move(edges));
}

SimplicialComplex path(std::size_t vertices) {
  std::vector<Simplex> edges;
  for (std::uint32_t i = 0; i + 1 < vertices; ++i) edges.push_back({i, i + 1});
  return SimplicialComplex::from_facets(vertices, std::move(edges));
}

DoubledSpace punctured_circle() { return {polygon(6), {0}, "punctured-circle"}; }

DoubledSpace two_origin_line() { return {path(3), {1}, "two-origin-line"}; }

std::optional<DoubledSpace> named_example(std::string_view name) {
  if (name == "punctured-circle") return punctured_circle();
  if (name == "two-origin-line") return two_origin_line();
  return std::nullopt;
}

}  // namespace fintop::doubled
