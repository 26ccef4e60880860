#pragma once

// Order complexes of finite T0 spaces and their simplicial homology.
//
// For a finite T0 space X the order complex K(X) (chains of the partial order)
// is weakly homotopy equivalent to X, so its homology is the homology of X.
// Homology here is unreduced: H_0 counts connected components.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fintop/finspace.hpp"
#include "fintop/linalg.hpp"

namespace fintop {

/// Strictly ascending vertex indices.
using Simplex = std::vector<std::uint32_t>;

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Face closure of the given simplices plus a 0-simplex for each of the
  /// vertex_count vertices.
  static SimplicialComplex from_facets(std::size_t vertex_count, std::vector<Simplex> facets);
  /// Throws NotFaceClosed when a face of some simplex is missing, and
  /// IndexOutOfRange when vertex ids are not exactly 0..V-1.
  static SimplicialComplex from_simplices(std::vector<Simplex> simplices);

  std::size_t vertex_count() const noexcept { return by_dim_.empty() ? 0 : by_dim_[0].size(); }
  /// -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
  /// k-simplices in lexicographic order; empty beyond the dimension.
  const std::vector<Simplex>& simplices(std::size_t k) const;
  std::size_t count(std::size_t k) const { return simplices(k).size(); }
  std::size_t total_count() const;
  /// All simplices, by dimension then lexicographically.
  std::vector<Simplex> all_simplices() const;
  /// Position of s among simplices(s.size() - 1).
  std::optional<std::size_t> index_of(const Simplex& s) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::vector<Simplex>> by_dim_;
};

struct DegreeHomology {
  std::size_t betti = 0;
  /// Elementary divisors > 1, each dividing the next. Integer coefficients only.
  std::vector<Integer> torsion;

  friend bool operator==(const DegreeHomology&, const DegreeHomology&) = default;
};

struct HomologyResult {
  Coefficients coefficients = Coefficients::integers();
  /// Degrees 0..dim(K).
  std::vector<DegreeHomology> degrees;

  std::size_t betti(std::size_t k) const { return k < degrees.size() ? degrees[k].betti : 0; }
  std::vector<std::size_t> betti_numbers() const;
  bool has_torsion() const;
};

/// Per degree, the matrix of H_k(dom) -> H_k(cod) in the computed bases.
struct LinearMapOnHomology {
  Coefficients coefficients = Coefficients::rationals();
  std::vector<FieldMatrix> degrees;

  /// The zero map (or an empty matrix) past the stored degrees.
  const FieldMatrix& degree(std::size_t k) const;
};

/// Simplices are the nonempty chains. Throws NotT0.
SimplicialComplex order_complex(const FiniteSpace& space);

/// Simplicial homology. Z via Smith normal form with exact integers, fields
/// via sparse column reduction.
HomologyResult homology(const SimplicialComplex& complex, const Coefficients& coeff);

/// Alternating count of simplices.
long long euler_characteristic(const SimplicialComplex& complex);

/// Homology over a field of the simplicial map on order complexes induced by a
/// monotone map. Throws NotT0, NotContinuous, UnsupportedCoefficients.
LinearMapOnHomology induced_map(const PointMap& f, const Coefficients& coeff);

}  // namespace fintop
