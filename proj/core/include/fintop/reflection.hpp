#pragma once

// The R1 -> R2 -> R3 relation tower and the Hausdorff reflection of finite spaces.
//
//   x R1 y  iff every neighborhood of x meets every neighborhood of y.
//   R2      is the chain closure of R1.
//   x R3 y  iff f(x) = f(y) for every continuous f into a Hausdorff space.
//
// The reflection X_H is the quotient X / R3 with projection mu.
//
// Finite case. Every neighborhood of x contains the minimal open set U_x, so
// x R1 y iff U_x and U_y meet, i.e. x and y have a common lower bound. Chains
// of R1 therefore stay inside a connected component and walk across it, so R2
// is the partition into components. The quotient X / R2 is discrete: each
// component is open (a union of minimal opens) and closed (its complement is
// a union of components). A finite Hausdorff space is discrete, and a
// continuous map into a discrete space is constant on components. Hence every
// map to a Hausdorff space is constant on R2 classes and X / R2 is itself
// Hausdorff, which gives R3 = R2. The oracle mode recomputes R3 from the
// definition: any map into a Hausdorff space factors through its image, a
// finite discrete space with at most n points, so it suffices to intersect the
// kernels of all continuous maps into discrete spaces of size <= n.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fintop/finspace.hpp"

namespace fintop {

/// Reflexive symmetric relation on 0..n-1.
class RelationMatrix {
 public:
  /// Throws InvariantViolation unless rows is reflexive and symmetric.
  explicit RelationMatrix(std::vector<PointSet> rows);

  std::size_t size() const noexcept { return rows_.size(); }
  bool related(Point x, Point y) const { return rows_.at(x)[y]; }
  const PointSet& row(Point x) const { return rows_.at(x); }

  friend bool operator==(const RelationMatrix&, const RelationMatrix&) = default;

 private:
  std::vector<PointSet> rows_;
};

enum class R3Mode { fast, oracle };

inline constexpr std::size_t kR3OracleMaxPoints = 6;

RelationMatrix r1(const FiniteSpace& space);
/// Chain closure of r1; post-checked against connected_components.
Partition r2(const FiniteSpace& space);
/// Throws OracleTooLarge for oracle mode with more than 6 points.
Partition r3(const FiniteSpace& space, R3Mode mode = R3Mode::fast);

struct Reflection {
  FiniteSpace space;
  ContinuousMap projection;
  Partition classes;
};

Reflection hausdorff_reflection(const FiniteSpace& space);

/// The unique g with g . mu = f, read off class representatives.
///
/// Throws NotContinuous, NotDiscreteCodomain, DomainMismatch on bad input and
/// NotConstantOnClasses if f separates two points of one class.
ContinuousMap factor_through(const PointMap& f, const Reflection& refl);

struct UniversalPropertyReport {
  std::size_t n = 0;
  std::size_t classes = 0;
  std::size_t max_target = 0;
  /// Index m - 1 holds counts for maps into the discrete space with m points.
  std::vector<std::uint64_t> maps_enumerated;
  std::vector<std::uint64_t> continuous_maps;
  std::uint64_t verified_maps = 0;
  std::uint64_t failures = 0;

  bool passed() const noexcept { return failures == 0; }
};

inline constexpr std::uint64_t kMaxEnumeratedMaps = 1'000'000;

/// Enumerates every continuous map into discrete spaces with 1..max_target
/// points and checks each factors through the reflection in exactly one way.
/// Throws SearchSpaceTooLarge when max_target^n exceeds 10^6.
UniversalPropertyReport verify_universal_property(const FiniteSpace& space,
                                                  std::size_t max_target);

struct ProductCommutation {
  FiniteSpace reflection_of_product;
  FiniteSpace product_of_reflections;
  std::optional<std::vector<Point>> witness;

  bool holds() const noexcept { return witness.has_value(); }
};

/// Compares (X x Y)_H against X_H x Y_H.
ProductCommutation compare_reflection_of_product(const FiniteSpace& x, const FiniteSpace& y);
bool reflection_commutes_with_product(const FiniteSpace& x, const FiniteSpace& y);

}  // namespace fintop
