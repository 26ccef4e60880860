#pragma once

// Finite topological spaces stored as their specialization preorders.
//
// A finite topology is an Alexandroff topology, so it is determined by the
// preorder x <= y  <=>  x lies in every open set containing y, i.e.
// U_x is a subset of U_y where U_x is the minimal open neighborhood of x.
// Open sets are exactly the down-sets of this preorder. The open-set family is
// never materialized outside of verification code.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "fintop/error.hpp"

namespace fintop {

using Point = std::size_t;
using PointSet = boost::dynamic_bitset<>;

class FiniteSpace {
 public:
  /// The empty space.
  FiniteSpace();

  /// Builds a space from its minimal open sets: down[y] = U_y = {x : x <= y}.
  /// Throws NotATopology when the relation is not reflexive and transitive.
  /// Missing labels default to the decimal point index.
  static FiniteSpace from_down_sets(std::vector<PointSet> down,
                                    std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return data_->down.size(); }
  bool empty() const noexcept { return size() == 0; }

  bool leq(Point x, Point y) const { return data_->down[y][x]; }

  /// U_y, the points below y.
  const PointSet& down_set(Point y) const { return data_->down.at(y); }
  /// Points above x (the minimal closed set of x).
  const PointSet& up_set(Point x) const { return data_->up.at(x); }

  const std::vector<std::string>& labels() const noexcept { return data_->labels; }
  const std::string& label(Point x) const { return data_->labels.at(x); }
  std::optional<Point> find(std::string_view label) const;

  bool is_discrete() const;

  /// Structural equality of the topologies; labels are ignored.
  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b);

 private:
  struct Data {
    std::vector<PointSet> down;
    std::vector<PointSet> up;
    std::vector<std::string> labels;
  };
  explicit FiniteSpace(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// An arbitrary total function between the point sets of two spaces.
struct PointMap {
  FiniteSpace dom;
  FiniteSpace cod;
  std::vector<Point> images;

  /// Order preservation, which is continuity for finite spaces.
  bool is_continuous() const;
  /// Throws IndexOutOfRange if images is not a total function dom -> cod.
  void check_total() const;
};

/// A PointMap known to be continuous.
class ContinuousMap {
 public:
  /// Throws NotContinuous (or IndexOutOfRange) when the map is not monotone.
  explicit ContinuousMap(PointMap map);
  ContinuousMap(FiniteSpace dom, FiniteSpace cod, std::vector<Point> images)
      : ContinuousMap(PointMap{std::move(dom), std::move(cod), std::move(images)}) {}

  static ContinuousMap identity(const FiniteSpace& space);

  const FiniteSpace& dom() const noexcept { return map_.dom; }
  const FiniteSpace& cod() const noexcept { return map_.cod; }
  const std::vector<Point>& images() const noexcept { return map_.images; }
  Point operator()(Point x) const { return map_.images.at(x); }

  bool is_surjective() const;
  bool is_bijective() const;

  operator const PointMap&() const noexcept { return map_; }

 private:
  PointMap map_;
};

/// g after f. Throws DomainMismatch when cod(f) != dom(g).
ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f);

/// Equivalence relation on 0..n-1. Blocks are sorted ascending and ordered by
/// their smallest element, which is the block representative.
class Partition {
 public:
  Partition() = default;

  /// Normalizes arbitrary block ids (one per point).
  static Partition from_block_ids(std::span<const std::size_t> ids);
  /// Throws InvalidPartition unless blocks are nonempty, disjoint and cover 0..n-1.
  static Partition from_blocks(std::size_t n, std::vector<std::vector<Point>> blocks);
  static Partition singletons(std::size_t n);
  static Partition whole(std::size_t n);

  std::size_t point_count() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<Point>>& blocks() const noexcept { return blocks_; }
  const std::vector<Point>& block(std::size_t b) const { return blocks_.at(b); }
  std::size_t block_of(Point x) const { return block_of_.at(x); }
  Point representative(std::size_t b) const { return blocks_.at(b).front(); }
  bool same_block(Point x, Point y) const { return block_of(x) == block_of(y); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::vector<Point>> blocks_;
  std::vector<std::size_t> block_of_;
};

/// A quotient space together with its projection and the identifying partition.
struct Quotient {
  FiniteSpace space;
  ContinuousMap projection;
  Partition classes;
};

FiniteSpace from_opens(std::span<const std::string> points,
                       std::span<const std::vector<std::string>> opens);

/// Reflexive-transitive closure of the generating pairs (x, y) meaning x <= y.
FiniteSpace from_preorder(std::size_t n, std::span<const std::pair<Point, Point>> pairs,
                          std::vector<std::string> labels = {});

PointSet minimal_open(const FiniteSpace& space, Point x);

bool is_t0(const FiniteSpace& space);

/// Identifies topologically indistinguishable points (x <= y <= x).
Quotient kolmogorov_quotient(const FiniteSpace& space);

/// Quotient topology on the blocks of a partition.
///
/// The preorder is the transitive closure of [x] <= [y] whenever some member of
/// [x] is below some member of [y]. The result is checked against the openness
/// definition (a set of blocks is open iff its union is a down-set); a
/// disagreement throws QuotientMismatch.
Quotient quotient(const FiniteSpace& space, const Partition& partition);

/// Product topology; point (x, y) has index x * |Y| + y.
FiniteSpace product(const FiniteSpace& x, const FiniteSpace& y);

/// Coproduct; points of y are shifted by |x|.
FiniteSpace disjoint_union(const FiniteSpace& x, const FiniteSpace& y);

/// Same points, reversed order (opens become closed sets).
FiniteSpace order_dual(const FiniteSpace& space);

/// Components of the comparability graph of the preorder.
Partition connected_components(const FiniteSpace& space);

/// Exact search for an order isomorphism. Returns the image of each point of x.
std::optional<std::vector<Point>> is_homeomorphic(const FiniteSpace& x, const FiniteSpace& y);

namespace spaces {
FiniteSpace discrete(std::size_t n);
FiniteSpace indiscrete(std::size_t n);
FiniteSpace point();
/// {a, b} with opens {}, {a}, {a, b}.
FiniteSpace sierpinski();
/// a, b minimal; c, d maximal; both c and d above both a and b.
FiniteSpace pseudocircle();
}  // namespace spaces

}  // namespace fintop
