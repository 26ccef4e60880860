#include "fintop/invsys.hpp"

#include <algorithm>

#include "fintop/reflection.hpp"

namespace fintop {

SequenceValidation validate(const InverseSequence& seq) {
  const std::size_t stages = seq.spaces.size();
  const std::size_t expected_bonds = stages == 0 ? 0 : stages - 1;
  if (seq.bonds.size() != expected_bonds)
    throw Error(ErrorCode::DomainMismatch, std::to_string(stages) + " stages need " +
                                               std::to_string(expected_bonds) + " bonds, got " +
                                               std::to_string(seq.bonds.size()));
  SequenceValidation report;
  report.stages = stages;
  for (std::size_t n = 0; n < stages; ++n) {
    if (!is_t0(seq.spaces[n]))
      throw Error(ErrorCode::NotT0, "stage " + std::to_string(n) + " is not T0");
    report.sizes.push_back(seq.spaces[n].size());
  }
  for (std::size_t n = 0; n < seq.bonds.size(); ++n) {
    const auto& bond = seq.bonds[n];
    if (!(bond.dom == seq.spaces[n + 1]) || !(bond.cod == seq.spaces[n]))
      throw Error(ErrorCode::DomainMismatch,
                  "bond " + std::to_string(n) + " does not map stage " + std::to_string(n + 1) +
                      " to stage " + std::to_string(n));
    bool continuous = false;
    try {
      continuous = bond.is_continuous();
    } catch (const Error& e) {
      throw Error(e.code(), "bond " + std::to_string(n) + ": " + e.what());
    }
    if (!continuous)
      throw Error(ErrorCode::NotContinuous, "bond " + std::to_string(n) + " (stage " +
                                                std::to_string(n + 1) + " -> " +
                                                std::to_string(n) + ") is not continuous");
  }
  return report;
}

StagewiseReflection stagewise_reflection(const InverseSequence& seq) {
  validate(seq);
  std::vector<Reflection> reflections;
  for (const auto& space : seq.spaces) reflections.push_back(hausdorff_reflection(space));

  StagewiseReflection out;
  for (const auto& r : reflections) out.spaces.push_back(r.space);
  for (std::size_t n = 0; n < seq.bonds.size(); ++n) {
    const auto& fine = reflections[n + 1];
    const auto& coarse = reflections[n];
    std::vector<Point> images(fine.classes.block_count());
    for (std::size_t c = 0; c < images.size(); ++c)
      images[c] = coarse.projection(seq.bonds[n].images[fine.classes.representative(c)]);
    out.bonds.emplace_back(fine.space, coarse.space, std::move(images));
  }
  return out;
}

CechReport cech_homology(const InverseSequence& seq, std::size_t degree, const Coefficients& coeff,
                         std::size_t window) {
  if (!coeff.is_field())
    throw Error(ErrorCode::UnsupportedCoefficients, "tower limits are computed over fields");
  if (window == 0) throw Error(ErrorCode::WindowTooLarge, "window must be at least 1");
  if (seq.length() < window + 1)
    throw Error(ErrorCode::WindowTooLarge, "window " + std::to_string(window) + " needs " +
                                               std::to_string(window + 1) + " stages, sequence has " +
                                               std::to_string(seq.length()));
  validate(seq);

  CechReport report;
  report.degree = degree;
  report.coefficients = coeff;
  report.window = window;

  const std::size_t last = seq.length() - 1;
  for (const auto& space : seq.spaces)
    report.stage_betti.push_back(homology(order_complex(space), coeff).betti(degree));

  // bond_maps[n] : H_k(X_{n+1}) -> H_k(X_n)
  std::vector<FieldMatrix> bond_maps;
  for (std::size_t n = 0; n < seq.bonds.size(); ++n) {
    auto m = induced_map(seq.bonds[n], coeff).degree(degree);
    if (m.rows() != report.stage_betti[n] || m.cols() != report.stage_betti[n + 1]) {
      // Degrees past both complexes' dimensions come back empty.
      if (report.stage_betti[n] != 0 || report.stage_betti[n + 1] != 0)
        throw Error(ErrorCode::InvariantViolation, "induced map shape disagrees with Betti numbers");
      m = FieldMatrix(0, 0);
    }
    bond_maps.push_back(std::move(m));
  }

  // composite(n, w) : H_k(X_{n+w}) -> H_k(X_n)
  auto composite = [&](std::size_t n, std::size_t w) {
    FieldMatrix c = FieldMatrix::identity(report.stage_betti[n]);
    for (std::size_t i = 0; i < w; ++i) c = multiply(c, bond_maps[n + i], coeff);
    return c;
  };

  report.image_ranks.resize(seq.length());
  for (std::size_t n = 0; n <= last; ++n)
    for (std::size_t w = 1; w <= window && n + w <= last; ++w)
      report.image_ranks[n].push_back(rank(composite(n, w), coeff));

  auto rank_at = [&](std::size_t n, std::size_t w) {
    return w == 0 ? report.stage_betti[n] : report.image_ranks[n][w - 1];
  };

  // Stages far enough from the end to see a full window.
  const std::size_t full = last - window + 1;
  report.stabilized = true;
  for (std::size_t n = 0; n < full; ++n)
    report.stabilized = report.stabilized && rank_at(n, window) == rank_at(n, window - 1);

  // Stabilized images I_n = im(composite(n, window)). Mittag-Leffler within the
  // window: each bond carries I_{n+1} isomorphically onto I_n.
  report.mittag_leffler = true;
  for (std::size_t n = 0; n + 1 < full; ++n) {
    const std::size_t image_here = rank_at(n, window);
    const std::size_t image_next = rank_at(n + 1, window);
    const std::size_t pushed = rank(multiply(bond_maps[n], composite(n + 1, window), coeff), coeff);
    report.mittag_leffler = report.mittag_leffler && pushed == image_here && image_next == image_here;
  }

  if (report.stabilized && report.mittag_leffler) {
    report.limit_dim = rank_at(0, window);
  } else {
    LimitBracket bracket{rank_at(0, window), 0};
    for (std::size_t n = 0; n < full; ++n) bracket.lower = std::min(bracket.lower, rank_at(n, window));
    bracket.upper = *std::max_element(report.stage_betti.begin(), report.stage_betti.end());
    report.limit_bracket = bracket;
  }
  return report;
}

}  // namespace fintop
