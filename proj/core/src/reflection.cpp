#include "fintop/reflection.hpp"

#include <algorithm>
#include <numeric>

#include <boost/pending/disjoint_sets.hpp>

namespace fintop {

namespace {

// Odometer over all functions {0..n-1} -> {0..m-1}.
class FunctionOdometer {
 public:
  FunctionOdometer(std::size_t n, std::size_t m) : values_(n, 0), m_(m) {}
  const std::vector<Point>& values() const noexcept { return values_; }
  bool next() {
    for (auto& v : values_) {
      if (++v < m_) return true;
      v = 0;
    }
    return false;
  }

 private:
  std::vector<Point> values_;
  std::size_t m_;
};

bool constant_on_comparable(const FiniteSpace& space, const std::vector<Point>& f) {
  for (Point y = 0; y < space.size(); ++y) {
    const auto& below = space.down_set(y);
    for (auto x = below.find_first(); x != PointSet::npos; x = below.find_next(x))
      if (f[x] != f[y]) return false;
  }
  return true;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

Partition r3_oracle(const FiniteSpace& space) {
  const std::size_t n = space.size();
  std::vector<PointSet> same(n, PointSet(n));
  for (auto& row : same) row.set();
  for (std::size_t m = 1; m <= n; ++m) {
    FunctionOdometer f(n, m);
    do {
      const auto& v = f.values();
      if (!constant_on_comparable(space, v)) continue;
      for (Point x = 0; x < n; ++x)
        for (Point y = 0; y < n; ++y)
          if (v[x] != v[y]) same[x].reset(y);
    } while (f.next());
  }
  std::vector<std::size_t> ids(n);
  for (Point x = 0; x < n; ++x) ids[x] = n == 0 ? 0 : same[x].find_first();
  return Partition::from_block_ids(ids);
}

}  // namespace

RelationMatrix::RelationMatrix(std::vector<PointSet> rows) : rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  for (Point x = 0; x < n; ++x) {
    if (rows_[x].size() != n || !rows_[x][x])
      throw Error(ErrorCode::InvariantViolation, "relation is not reflexive");
    for (auto y = rows_[x].find_first(); y != PointSet::npos; y = rows_[x].find_next(y))
      if (!rows_[y][x]) throw Error(ErrorCode::InvariantViolation, "relation is not symmetric");
  }
}

RelationMatrix r1(const FiniteSpace& space) {
  const std::size_t n = space.size();
  std::vector<PointSet> rows(n, PointSet(n));
  for (Point x = 0; x < n; ++x)
    for (Point y = x; y < n; ++y)
      if (space.down_set(x).intersects(space.down_set(y))) {
        rows[x].set(y);
        rows[y].set(x);
      }
  return RelationMatrix(std::move(rows));
}

Partition r2(const FiniteSpace& space) {
  const auto rel = r1(space);
  const std::size_t n = space.size();
  boost::disjoint_sets_with_storage<> sets(n);
  for (Point x = 0; x < n; ++x)
    for (auto y = rel.row(x).find_next(x); y != PointSet::npos; y = rel.row(x).find_next(y))
      sets.union_set(x, y);
  std::vector<std::size_t> ids(n);
  for (Point x = 0; x < n; ++x) ids[x] = sets.find_set(x);
  auto classes = Partition::from_block_ids(ids);
  if (!(classes == connected_components(space)))
    throw Error(ErrorCode::InvariantViolation, "R2 classes differ from connected components");
  return classes;
}

Partition r3(const FiniteSpace& space, R3Mode mode) {
  if (mode == R3Mode::fast) return r2(space);
  if (space.size() > kR3OracleMaxPoints)
    throw Error(ErrorCode::OracleTooLarge,
                std::to_string(space.size()) + " points; oracle handles at most " +
                    std::to_string(kR3OracleMaxPoints));
  return r3_oracle(space);
}

Reflection hausdorff_reflection(const FiniteSpace& space) {
  auto q = quotient(space, r3(space));
  if (!q.space.is_discrete())
    throw Error(ErrorCode::InvariantViolation, "reflection is not discrete");
  if (!q.projection.is_surjective())
    throw Error(ErrorCode::InvariantViolation, "reflection map is not surjective");
  return Reflection{std::move(q.space), std::move(q.projection), std::move(q.classes)};
}

ContinuousMap factor_through(const PointMap& f, const Reflection& refl) {
  if (!f.is_continuous()) throw Error(ErrorCode::NotContinuous, "f is not continuous");
  if (!f.cod.is_discrete())
    throw Error(ErrorCode::NotDiscreteCodomain, "factorization needs a discrete codomain");
  if (!(f.dom == refl.projection.dom()))
    throw Error(ErrorCode::DomainMismatch, "f and the reflection have different domains");

  const auto& classes = refl.classes;
  std::vector<Point> g(classes.block_count());
  for (std::size_t c = 0; c < g.size(); ++c) g[c] = f.images[classes.representative(c)];
  for (Point x = 0; x < f.dom.size(); ++x)
    if (g[refl.projection(x)] != f.images[x])
      throw Error(ErrorCode::NotConstantOnClasses,
                  "f separates point " + std::to_string(x) + " from its class representative");
  return ContinuousMap(refl.space, f.cod, std::move(g));
}

UniversalPropertyReport verify_universal_property(const FiniteSpace& space,
                                                  std::size_t max_target) {
  const std::size_t n = space.size();
  if (checked_power(max_target, n, kMaxEnumeratedMaps) > kMaxEnumeratedMaps)
    throw Error(ErrorCode::SearchSpaceTooLarge,
                std::to_string(max_target) + "^" + std::to_string(n) + " exceeds 10^6 maps");

  const auto refl = hausdorff_reflection(space);
  UniversalPropertyReport report;
  report.n = n;
  report.classes = refl.classes.block_count();
  report.max_target = max_target;

  for (std::size_t m = 1; m <= max_target; ++m) {
    const auto target = spaces::discrete(m);
    std::uint64_t enumerated = 0, continuous = 0;
    FunctionOdometer f(n, m);
    do {
      ++enumerated;
      PointMap map{space, target, f.values()};
      if (!map.is_continuous()) continue;
      ++continuous;
      try {
        const auto g = factor_through(map, refl);
        bool commutes = true;
        for (Point x = 0; x < n; ++x) commutes = commutes && g(refl.projection(x)) == map.images[x];
        // Count factorizations: a class can take value v only if every point
        // of its fibre maps to v. mu is surjective so fibres are nonempty.
        std::uint64_t factorizations = 1;
        for (const auto& block : refl.classes.blocks()) {
          std::uint64_t choices = 0;
          for (Point v = 0; v < m; ++v)
            choices += std::all_of(block.begin(), block.end(),
                                   [&](Point x) { return map.images[x] == v; });
          factorizations *= choices;
        }
        if (commutes && factorizations == 1)
          ++report.verified_maps;
        else
          ++report.failures;
      } catch (const Error&) {
        ++report.failures;
      }
    } while (f.next());
    report.maps_enumerated.push_back(enumerated);
    report.continuous_maps.push_back(continuous);
  }
  return report;
}

ProductCommutation compare_reflection_of_product(const FiniteSpace& x, const FiniteSpace& y) {
  auto lhs = hausdorff_reflection(product(x, y)).space;
  auto rhs = product(hausdorff_reflection(x).space, hausdorff_reflection(y).space);
  auto witness = is_homeomorphic(lhs, rhs);
  return ProductCommutation{std::move(lhs), std::move(rhs), std::move(witness)};
}

bool reflection_commutes_with_product(const FiniteSpace& x, const FiniteSpace& y) {
  return compare_reflection_of_product(x, y).holds();
}

}  // namespace fintop
