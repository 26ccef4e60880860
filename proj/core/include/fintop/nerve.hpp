#pragma once

// Finite T0 models of simple polyhedra: nerves of overlapping covers, their
// face posets, and towers of refinements joined by bonding maps.
//
// Cover geometry uses exact rational positions, as fractions of a full turn
// for circles and of the unit segment for the interval.
//
//   circle(n):   n open arcs, arc j centred at j/n turns with width 2/n.
//   interval(n): n relatively open pieces of [0, 1] centred at j/(n-1) with
//                half-width 1/(n-1).
//   wedge2(n):   two circles glued at angle 0, n arcs per circle; the two arcs
//                through the wedge point form a single element (index 0),
//                followed by arcs 1..n-1 of each circle. 2n - 1 elements.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "fintop/finspace.hpp"
#include "fintop/homology.hpp"
#include "fintop/invsys.hpp"

namespace fintop {

enum class CoverModel { circle, interval, wedge2 };

std::string_view to_string(CoverModel model) noexcept;
std::optional<CoverModel> parse_cover_model(std::string_view name) noexcept;
std::size_t min_resolution(CoverModel model) noexcept;

struct CoverSpec {
  CoverModel model = CoverModel::circle;
  std::size_t resolution = 0;
};

/// Number of cover elements, i.e. nerve vertices.
std::size_t cover_size(const CoverSpec& spec);

/// One simplex per subfamily with nonempty common intersection.
/// Throws ResolutionTooSmall.
SimplicialComplex nerve(const CoverSpec& spec);

/// Simplices ordered by inclusion, indexed as in all_simplices().
FiniteSpace face_poset(const SimplicialComplex& complex);

/// Sends each element of the finer cover to the smallest-index element of the
/// coarser cover containing it. Throws BondNotWellDefined if there is none.
std::vector<std::uint32_t> refinement_map(const CoverSpec& fine, const CoverSpec& coarse);

/// Face posets of nerves at resolutions base, 2 base, ..., base 2^(depth-1),
/// coarsest first, with bonds induced by refinement_map.
InverseSequence build_tower(CoverModel model, std::size_t base_resolution, std::size_t depth);

}  // namespace fintop
