#pragma once

// Finite prefixes of inverse sequences X_0 <- X_1 <- ... <- X_m of finite T0
// spaces, and the Cech-style homology of the tower: the inverse limit of the
// stage homologies along the induced maps. All conclusions hold up to the
// tested depth only.

#include <cstddef>
#include <optional>
#include <vector>

#include "fintop/finspace.hpp"
#include "fintop/homology.hpp"

namespace fintop {

struct InverseSequence {
  std::vector<FiniteSpace> spaces;
  /// bonds[n] : spaces[n + 1] -> spaces[n].
  std::vector<PointMap> bonds;

  std::size_t length() const noexcept { return spaces.size(); }
};

struct SequenceValidation {
  std::size_t stages = 0;
  std::vector<std::size_t> sizes;
};

/// Throws NotT0 or NotContinuous naming the offending stage, DomainMismatch
/// when a bond does not connect consecutive stages.
SequenceValidation validate(const InverseSequence& seq);

struct StagewiseReflection {
  std::vector<FiniteSpace> spaces;
  /// Induced bonds between consecutive reflections.
  std::vector<ContinuousMap> bonds;
};

StagewiseReflection stagewise_reflection(const InverseSequence& seq);

struct LimitBracket {
  std::size_t lower = 0;
  std::size_t upper = 0;
};

struct CechReport {
  std::size_t degree = 0;
  Coefficients coefficients = Coefficients::rationals();
  std::size_t window = 0;
  std::vector<std::size_t> stage_betti;
  /// image_ranks[n][w - 1] = rank(H_k(X_{n+w}) -> H_k(X_n)) for each w <= window
  /// with n + w inside the sequence.
  std::vector<std::vector<std::size_t>> image_ranks;
  bool stabilized = false;
  /// Whether the stabilized images form a tower of isomorphisms.
  bool mittag_leffler = false;
  /// Exact when stabilized and Mittag-Leffler within the window.
  std::optional<std::size_t> limit_dim;
  /// Reported otherwise.
  std::optional<LimitBracket> limit_bracket;
};

inline constexpr std::size_t kDefaultWindow = 2;

/// Throws WindowTooLarge when the sequence has fewer than window + 1 stages,
/// UnsupportedCoefficients for Z.
CechReport cech_homology(const InverseSequence& seq, std::size_t degree, const Coefficients& coeff,
                         std::size_t window = kDefaultWindow);

}  // namespace fintop
