#pragma once

// Non-Hausdorff gluings: a Hausdorff base polyhedron in which some vertices
// ("twins") carry a second copy, glued to the original everywhere except at
// the point itself. The punctured circle is a polygon with one twin; the line
// with two origins is a segment with one interior twin.
//
// Classification of the R relations on the marked points (base vertices and
// twin copies). Every neighbourhood of a twin v or of its copy v' contains a
// punctured neighbourhood of v along each incident edge, and those punctured
// pieces are shared by the two copies, so any two neighbourhoods of v and v'
// meet: v R1 v'. This needs v to lie on an edge; an isolated twin has the
// singleton {v} as a neighbourhood and would be separated from v'. Distinct
// base positions are separated by disjoint neighbourhoods in the Hausdorff
// base. So R1 is the diagonal plus the twin pairs, which is already an
// equivalence relation: R2 = R1, and the quotient by it is the base, which is
// Hausdorff, giving R3 = R2. The reflection collapses each copy onto its
// original.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fintop/finspace.hpp"
#include "fintop/homology.hpp"
#include "fintop/reflection.hpp"

namespace fintop::doubled {

struct DoubledSpace {
  SimplicialComplex base;
  std::vector<std::uint32_t> twins;
  std::string name;
};

/// Relations on the marked points: base vertices 0..V-1, then the copy of
/// twins[i] at V + i.
struct RClasses {
  std::vector<std::string> labels;
  RelationMatrix r1;
  Partition r2;
  Partition r3;

  /// Classes with more than one point.
  std::vector<std::vector<Point>> nontrivial_classes() const;
};

/// Throws IsolatedTwin for a twin on no edge, IndexOutOfRange or
/// InvariantViolation for a twin outside the base or listed twice.
RClasses r_classes(const DoubledSpace& space);

/// Combinatorial double: the base plus, for every simplex through twins, its
/// copies with any of those twins replaced by their copy vertex V + i.
SimplicialComplex doubled_complex(const DoubledSpace& space);

/// The Hausdorff reflection: the image of the doubled complex under the
/// collapse of each R3 class onto its representative.
SimplicialComplex reflection(const DoubledSpace& space);

SimplicialComplex polygon(std::size_t vertices);
SimplicialComplex path(std::size_t vertices);

DoubledSpace punctured_circle();
DoubledSpace two_origin_line();
/// "punctured-circle" or "two-origin-line".
std::optional<DoubledSpace> named_example(std::string_view name);

}  // namespace fintop::doubled
