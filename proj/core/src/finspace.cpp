#include "fintop/finspace.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include <boost/pending/disjoint_sets.hpp>

namespace fintop {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

std::vector<PointSet> transpose(const std::vector<PointSet>& rows) {
  const std::size_t n = rows.size();
  std::vector<PointSet> cols(n, PointSet(n));
  for (std::size_t y = 0; y < n; ++y)
    for (auto x = rows[y].find_first(); x != PointSet::npos; x = rows[y].find_next(x))
      cols[x].set(y);
  return cols;
}

// Warshall closure where rows[y] holds everything below y.
void close_transitively(std::vector<PointSet>& rows) {
  const std::size_t n = rows.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t y = 0; y < n; ++y)
      if (rows[y][k]) rows[y] |= rows[k];
}

std::string block_label(const FiniteSpace& space, const std::vector<Point>& block) {
  if (block.size() == 1) return space.label(block.front());
  std::string out = "[";
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i) out += ',';
    out += space.label(block[i]);
  }
  return out + "]";
}

bool is_down_set(const FiniteSpace& space, const PointSet& set) {
  for (auto y = set.find_first(); y != PointSet::npos; y = set.find_next(y))
    if (!space.down_set(y).is_subset_of(set)) return false;
  return true;
}

constexpr std::size_t kExhaustiveQuotientCheck = 12;

// Compares the closure-formula quotient order against the definition of the
// quotient topology.
void verify_quotient(const FiniteSpace& space, const Partition& partition,
                     const std::vector<PointSet>& block_down) {
  const std::size_t n = space.size();
  const std::size_t k = partition.block_count();
  std::vector<PointSet> block_points(k, PointSet(n));
  for (std::size_t b = 0; b < k; ++b)
    for (Point x : partition.block(b)) block_points[b].set(x);

  auto mismatch = [&](std::size_t b) {
    throw Error(ErrorCode::QuotientMismatch,
                "closure order disagrees with quotient topology at block " + std::to_string(b));
  };

  if (k <= kExhaustiveQuotientCheck) {
    // Every open set of blocks, then U_c as the intersection of those containing c.
    std::vector<PointSet> expected(k, PointSet(k));
    for (auto& row : expected) row.set();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      PointSet pts(n);
      PointSet blocks(k);
      for (std::size_t b = 0; b < k; ++b)
        if (mask >> b & 1) {
          pts |= block_points[b];
          blocks.set(b);
        }
      if (!is_down_set(space, pts)) continue;
      for (std::size_t c = 0; c < k; ++c)
        if (blocks[c]) expected[c] &= blocks;
    }
    for (std::size_t c = 0; c < k; ++c)
      if (expected[c] != block_down[c]) mismatch(c);
    return;
  }

  // Larger quotients: smallest saturated down-set containing each block.
  for (std::size_t c = 0; c < k; ++c) {
    PointSet pts = block_points[c];
    for (bool grew = true; grew;) {
      PointSet next = pts;
      for (auto y = pts.find_first(); y != PointSet::npos; y = pts.find_next(y))
        next |= space.down_set(y);
      for (auto y = next.find_first(); y != PointSet::npos; y = next.find_next(y))
        next |= block_points[partition.block_of(y)];
      grew = next != pts;
      pts = std::move(next);
    }
    PointSet blocks(k);
    for (auto y = pts.find_first(); y != PointSet::npos; y = pts.find_next(y))
      blocks.set(partition.block_of(y));
    if (blocks != block_down[c]) mismatch(c);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteSpace

FiniteSpace::FiniteSpace() : data_(std::make_shared<const Data>()) {}

FiniteSpace FiniteSpace::from_down_sets(std::vector<PointSet> down,
                                        std::vector<std::string> labels) {
  const std::size_t n = down.size();
  for (std::size_t y = 0; y < n; ++y) {
    if (down[y].size() != n)
      throw Error(ErrorCode::IndexOutOfRange, "relation row has wrong width");
    if (!down[y][y]) throw Error(ErrorCode::NotATopology, "relation is not reflexive");
  }
  for (std::size_t y = 0; y < n; ++y)
    for (auto x = down[y].find_first(); x != PointSet::npos; x = down[y].find_next(x))
      if (!down[x].is_subset_of(down[y]))
        throw Error(ErrorCode::NotATopology, "relation is not transitive");

  if (labels.empty()) labels = default_labels(n);
  if (labels.size() != n)
    throw Error(ErrorCode::IndexOutOfRange, "label count does not match point count");
  std::set<std::string_view> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw Error(ErrorCode::DuplicateLabel, l);

  auto data = std::make_shared<Data>();
  data->up = transpose(down);
  data->down = std::move(down);
  data->labels = std::move(labels);
  return FiniteSpace(std::move(data));
}

std::optional<Point> FiniteSpace::find(std::string_view label) const {
  const auto& ls = data_->labels;
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) return std::nullopt;
  return static_cast<Point>(it - ls.begin());
}

bool FiniteSpace::is_discrete() const {
  return std::all_of(data_->down.begin(), data_->down.end(),
                     [](const PointSet& s) { return s.count() == 1; });
}

bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
  return a.data_ == b.data_ || a.data_->down == b.data_->down;
}

// ---------------------------------------------------------------------------
// Maps

void PointMap::check_total() const {
  if (images.size() != dom.size())
    throw Error(ErrorCode::IndexOutOfRange, "map is not defined on every point");
  for (Point y : images)
    if (y >= cod.size()) throw Error(ErrorCode::IndexOutOfRange, "image outside codomain");
}

bool PointMap::is_continuous() const {
  check_total();
  for (Point y = 0; y < dom.size(); ++y) {
    const auto& below = dom.down_set(y);
    for (auto x = below.find_first(); x != PointSet::npos; x = below.find_next(x))
      if (!cod.leq(images[x], images[y])) return false;
  }
  return true;
}

ContinuousMap::ContinuousMap(PointMap map) : map_(std::move(map)) {
  if (!map_.is_continuous())
    throw Error(ErrorCode::NotContinuous, "map is not order-preserving");
}

ContinuousMap ContinuousMap::identity(const FiniteSpace& space) {
  std::vector<Point> images(space.size());
  std::iota(images.begin(), images.end(), Point{0});
  return ContinuousMap(space, space, std::move(images));
}

bool ContinuousMap::is_surjective() const {
  PointSet hit(cod().size());
  for (Point y : images()) hit.set(y);
  return hit.all();
}

bool ContinuousMap::is_bijective() const {
  return dom().size() == cod().size() && is_surjective();
}

ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f) {
  if (!(f.cod() == g.dom()) || f.cod().size() != g.dom().size())
    throw Error(ErrorCode::DomainMismatch, "codomain of f is not the domain of g");
  std::vector<Point> images(f.dom().size());
  for (Point x = 0; x < images.size(); ++x) images[x] = g(f(x));
  return ContinuousMap(f.dom(), g.cod(), std::move(images));
}

// ---------------------------------------------------------------------------
// Partition

Partition Partition::from_block_ids(std::span<const std::size_t> ids) {
  Partition p;
  p.block_of_.resize(ids.size());
  std::unordered_map<std::size_t, std::size_t> renumber;
  for (Point x = 0; x < ids.size(); ++x) {
    auto [it, fresh] = renumber.try_emplace(ids[x], p.blocks_.size());
    if (fresh) p.blocks_.emplace_back();
    p.blocks_[it->second].push_back(x);
    p.block_of_[x] = it->second;
  }
  return p;
}

Partition Partition::from_blocks(std::size_t n, std::vector<std::vector<Point>> blocks) {
  std::vector<std::size_t> ids(n, n);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error(ErrorCode::InvalidPartition, "empty block");
    for (Point x : blocks[b]) {
      if (x >= n) throw Error(ErrorCode::InvalidPartition, "point out of range");
      if (ids[x] != n) throw Error(ErrorCode::InvalidPartition, "blocks overlap");
      ids[x] = b;
    }
  }
  if (std::find(ids.begin(), ids.end(), n) != ids.end())
    throw Error(ErrorCode::InvalidPartition, "blocks do not cover every point");
  return from_block_ids(ids);
}

Partition Partition::singletons(std::size_t n) {
  std::vector<std::size_t> ids(n);
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  return from_block_ids(ids);
}

Partition Partition::whole(std::size_t n) {
  std::vector<std::size_t> ids(n, 0);
  return from_block_ids(ids);
}

// ---------------------------------------------------------------------------
// Constructors

FiniteSpace from_opens(std::span<const std::string> points,
                       std::span<const std::vector<std::string>> opens) {
  const std::size_t n = points.size();
  std::map<std::string, Point, std::less<>> index;
  for (Point i = 0; i < n; ++i)
    if (!index.emplace(points[i], i).second) throw Error(ErrorCode::DuplicateLabel, points[i]);

  std::set<PointSet> family;
  for (const auto& open : opens) {
    PointSet s(n);
    for (const auto& name : open) {
      auto it = index.find(name);
      if (it == index.end()) throw Error(ErrorCode::UnknownLabel, name);
      s.set(it->second);
    }
    family.insert(std::move(s));
  }

  PointSet none(n), all(n);
  all.set();
  if (!family.count(none)) throw Error(ErrorCode::NotATopology, "empty set is not open");
  if (!family.count(all)) throw Error(ErrorCode::NotATopology, "whole space is not open");
  for (auto a = family.begin(); a != family.end(); ++a)
    for (auto b = std::next(a); b != family.end(); ++b) {
      if (!family.count(*a | *b))
        throw Error(ErrorCode::NotATopology, "opens not closed under union");
      if (!family.count(*a & *b))
        throw Error(ErrorCode::NotATopology, "opens not closed under intersection");
    }

  std::vector<PointSet> down(n, all);
  for (const auto& open : family)
    for (auto y = open.find_first(); y != PointSet::npos; y = open.find_next(y))
      down[y] &= open;
  return FiniteSpace::from_down_sets(std::move(down), {points.begin(), points.end()});
}

FiniteSpace from_preorder(std::size_t n, std::span<const std::pair<Point, Point>> pairs,
                          std::vector<std::string> labels) {
  std::vector<PointSet> down(n, PointSet(n));
  for (Point y = 0; y < n; ++y) down[y].set(y);
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n)
      throw Error(ErrorCode::IndexOutOfRange,
                  "pair (" + std::to_string(x) + "," + std::to_string(y) + ")");
    down[y].set(x);
  }
  close_transitively(down);
  return FiniteSpace::from_down_sets(std::move(down), std::move(labels));
}

PointSet minimal_open(const FiniteSpace& space, Point x) {
  if (x >= space.size()) throw Error(ErrorCode::IndexOutOfRange, "point " + std::to_string(x));
  return space.down_set(x);
}

bool is_t0(const FiniteSpace& space) {
  for (Point y = 0; y < space.size(); ++y) {
    const auto& below = space.down_set(y);
    for (auto x = below.find_first(); x != PointSet::npos; x = below.find_next(x))
      if (x != y && space.leq(y, x)) return false;
  }
  return true;
}

Quotient kolmogorov_quotient(const FiniteSpace& space) {
  std::map<PointSet, std::size_t> classes;
  std::vector<std::size_t> ids(space.size());
  for (Point x = 0; x < space.size(); ++x)
    ids[x] = classes.try_emplace(space.down_set(x), classes.size()).first->second;
  return quotient(space, Partition::from_block_ids(ids));
}

Quotient quotient(const FiniteSpace& space, const Partition& partition) {
  const std::size_t n = space.size();
  if (partition.point_count() != n)
    throw Error(ErrorCode::InvalidPartition, "partition is over a different point count");
  const std::size_t k = partition.block_count();

  std::vector<PointSet> block_down(k, PointSet(k));
  for (std::size_t c = 0; c < k; ++c)
    for (Point y : partition.block(c)) {
      const auto& below = space.down_set(y);
      for (auto x = below.find_first(); x != PointSet::npos; x = below.find_next(x))
        block_down[c].set(partition.block_of(x));
    }
  close_transitively(block_down);
  verify_quotient(space, partition, block_down);

  std::vector<std::string> labels(k);
  for (std::size_t b = 0; b < k; ++b) labels[b] = block_label(space, partition.block(b));
  auto qspace = FiniteSpace::from_down_sets(std::move(block_down), std::move(labels));

  std::vector<Point> images(n);
  for (Point x = 0; x < n; ++x) images[x] = partition.block_of(x);
  ContinuousMap projection(space, qspace, std::move(images));
  return Quotient{std::move(qspace), std::move(projection), partition};
}

FiniteSpace product(const FiniteSpace& x, const FiniteSpace& y) {
  const std::size_t nx = x.size(), ny = y.size(), n = nx * ny;
  std::vector<PointSet> down(n, PointSet(n));
  std::vector<std::string> labels(n);
  for (Point a = 0; a < nx; ++a)
    for (Point b = 0; b < ny; ++b) {
      const Point p = a * ny + b;
      labels[p] = "(" + x.label(a) + "," + y.label(b) + ")";
      const auto& da = x.down_set(a);
      const auto& db = y.down_set(b);
      for (auto u = da.find_first(); u != PointSet::npos; u = da.find_next(u))
        for (auto v = db.find_first(); v != PointSet::npos; v = db.find_next(v))
          down[p].set(u * ny + v);
    }
  return FiniteSpace::from_down_sets(std::move(down), std::move(labels));
}

FiniteSpace disjoint_union(const FiniteSpace& x, const FiniteSpace& y) {
  const std::size_t nx = x.size(), n = nx + y.size();
  std::vector<PointSet> down(n, PointSet(n));
  std::vector<std::string> labels;
  labels.reserve(n);
  std::set<std::string> used(x.labels().begin(), x.labels().end());
  for (Point a = 0; a < nx; ++a) {
    const auto& d = x.down_set(a);
    for (auto u = d.find_first(); u != PointSet::npos; u = d.find_next(u)) down[a].set(u);
    labels.push_back(x.label(a));
  }
  for (Point b = 0; b < y.size(); ++b) {
    const auto& d = y.down_set(b);
    for (auto v = d.find_first(); v != PointSet::npos; v = d.find_next(v)) down[nx + b].set(nx + v);
    std::string l = y.label(b);
    while (used.count(l)) l += "'";
    used.insert(l);
    labels.push_back(std::move(l));
  }
  return FiniteSpace::from_down_sets(std::move(down), std::move(labels));
}

FiniteSpace order_dual(const FiniteSpace& space) {
  std::vector<PointSet> down(space.size());
  for (Point x = 0; x < space.size(); ++x) down[x] = space.up_set(x);
  return FiniteSpace::from_down_sets(std::move(down), space.labels());
}

Partition connected_components(const FiniteSpace& space) {
  const std::size_t n = space.size();
  boost::disjoint_sets_with_storage<> sets(n);
  for (Point y = 0; y < n; ++y) {
    const auto& below = space.down_set(y);
    for (auto x = below.find_first(); x != PointSet::npos; x = below.find_next(x))
      sets.union_set(x, y);
  }
  std::vector<std::size_t> ids(n);
  for (Point x = 0; x < n; ++x) ids[x] = sets.find_set(x);
  return Partition::from_block_ids(ids);
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

// Colour refinement run jointly on both spaces so colours are comparable.
// Initial colour: sizes of the down-set and up-set.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colours(
    const FiniteSpace& x, const FiniteSpace& y) {
  using Signature = std::vector<std::size_t>;
  std::vector<std::size_t> cx(x.size()), cy(y.size());
  auto initial = [](const FiniteSpace& s, Point p) {
    return Signature{s.down_set(p).count(), s.up_set(p).count()};
  };
  auto refined = [](const FiniteSpace& s, const std::vector<std::size_t>& c, Point p) {
    Signature below, above;
    const auto& d = s.down_set(p);
    for (auto q = d.find_first(); q != PointSet::npos; q = d.find_next(q))
      if (q != p) below.push_back(c[q]);
    const auto& u = s.up_set(p);
    for (auto q = u.find_first(); q != PointSet::npos; q = u.find_next(q))
      if (q != p) above.push_back(c[q]);
    std::sort(below.begin(), below.end());
    std::sort(above.begin(), above.end());
    Signature sig{c[p], below.size()};
    sig.insert(sig.end(), below.begin(), below.end());
    sig.insert(sig.end(), above.begin(), above.end());
    return sig;
  };

  std::size_t classes = 0;
  for (int round = 0;; ++round) {
    std::vector<Signature> sx(x.size()), sy(y.size());
    for (Point p = 0; p < x.size(); ++p) sx[p] = round == 0 ? initial(x, p) : refined(x, cx, p);
    for (Point p = 0; p < y.size(); ++p) sy[p] = round == 0 ? initial(y, p) : refined(y, cy, p);
    std::map<Signature, std::size_t> ids;
    for (const auto& s : sx) ids.emplace(s, 0);
    for (const auto& s : sy) ids.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (Point p = 0; p < x.size(); ++p) cx[p] = ids[sx[p]];
    for (Point p = 0; p < y.size(); ++p) cy[p] = ids[sy[p]];
    if (round > 0 && ids.size() == classes) break;
    classes = ids.size();
  }
  return {std::move(cx), std::move(cy)};
}

}  // namespace

std::optional<std::vector<Point>> is_homeomorphic(const FiniteSpace& x, const FiniteSpace& y) {
  const std::size_t n = x.size();
  if (n != y.size()) return std::nullopt;
  if (n == 0) return std::vector<Point>{};

  auto [cx, cy] = refine_colours(x, y);
  {
    auto hx = cx, hy = cy;
    std::sort(hx.begin(), hx.end());
    std::sort(hy.begin(), hy.end());
    if (hx != hy) return std::nullopt;
  }

  // Search order: breadth-first over comparability, seeded at the rarest colour,
  // so each new point is constrained by an already placed neighbour.
  std::map<std::size_t, std::size_t> freq;
  for (auto c : cx) ++freq[c];
  std::vector<Point> order;
  order.reserve(n);
  PointSet placed(n);
  while (order.size() < n) {
    Point seed = n;
    for (Point p = 0; p < n; ++p)
      if (!placed[p] && (seed == n || freq[cx[p]] < freq[cx[seed]])) seed = p;
    placed.set(seed);
    std::size_t tail = order.size();
    order.push_back(seed);
    for (; tail < order.size(); ++tail) {
      const Point p = order[tail];
      const PointSet nbrs = x.down_set(p) | x.up_set(p);
      for (auto q = nbrs.find_first(); q != PointSet::npos; q = nbrs.find_next(q))
        if (!placed[q]) {
          placed.set(q);
          order.push_back(q);
        }
    }
  }

  std::vector<Point> image(n, n);
  PointSet used(n);
  auto consistent = [&](std::size_t depth, Point cand) {
    const Point p = order[depth];
    for (std::size_t j = 0; j < depth; ++j) {
      const Point q = order[j];
      if (x.leq(q, p) != y.leq(image[q], cand)) return false;
      if (x.leq(p, q) != y.leq(cand, image[q])) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const Point p = order[depth];
    for (Point cand = 0; cand < n; ++cand) {
      if (used[cand] || cy[cand] != cx[p] || !consistent(depth, cand)) continue;
      image[p] = cand;
      used.set(cand);
      if (self(self, depth + 1)) return true;
      used.reset(cand);
    }
    image[p] = n;
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return image;
}

// ---------------------------------------------------------------------------

namespace spaces {

FiniteSpace discrete(std::size_t n) { return from_preorder(n, {}); }

FiniteSpace indiscrete(std::size_t n) {
  std::vector<PointSet> down(n, PointSet(n));
  for (auto& row : down) row.set();
  return FiniteSpace::from_down_sets(std::move(down));
}

FiniteSpace point() { return discrete(1); }

FiniteSpace sierpinski() {
  const std::vector<std::pair<Point, Point>> pairs{{0, 1}};
  return from_preorder(2, pairs, {"a", "b"});
}

FiniteSpace pseudocircle() {
  const std::vector<std::pair<Point, Point>> pairs{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  return from_preorder(4, pairs, {"a", "b", "c", "d"});
}

}  // namespace spaces

}  // namespace fintop
