#include "fintop/linalg.hpp"

#include <algorithm>
#include <charconv>

#include "field.hpp"

namespace fintop {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

template <class F>
std::vector<typename F::Scalar> to_field(const FieldMatrix& m, const F& field) {
  std::vector<typename F::Scalar> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(field.from_rational(m(r, c)));
  return out;
}

}  // namespace

Coefficients Coefficients::mod(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw Error(ErrorCode::UnsupportedPrime, std::to_string(p) + " is not a supported prime");
  return Coefficients(Kind::mod_p, static_cast<std::uint32_t>(p));
}

Coefficients Coefficients::parse(std::string_view text) {
  if (text == "z" || text == "Z") return integers();
  if (text == "q" || text == "Q") return rationals();
  if (text.size() > 1 && (text[0] == 'z' || text[0] == 'Z')) {
    std::uint64_t p = 0;
    auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc{} && ptr == digits.data() + digits.size()) return mod(p);
  }
  throw Error(ErrorCode::ParseError, "coefficients must be z, q or z<p>, got '" + std::string(text) + "'");
}

std::string Coefficients::name() const {
  switch (kind_) {
    case Kind::integers: return "z";
    case Kind::rationals: return "q";
    case Kind::mod_p: return "z" + std::to_string(p_);
  }
  return "?";
}

std::size_t rank(const FieldMatrix& m, const Coefficients& coeff) {
  return detail::with_field(coeff, [&](const auto& field) -> std::size_t {
    auto a = to_field(m, field);
    const std::size_t rows = m.rows(), cols = m.cols();
    auto at = [&](std::size_t r, std::size_t c) -> auto& { return a[r * cols + c]; };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
      std::size_t pivot = rank;
      while (pivot < rows && field.is_zero(at(pivot, c))) ++pivot;
      if (pivot == rows) continue;
      for (std::size_t k = c; k < cols; ++k) std::swap(at(pivot, k), at(rank, k));
      for (std::size_t r = rank + 1; r < rows; ++r) {
        if (field.is_zero(at(r, c))) continue;
        const auto factor = field.div(at(r, c), at(rank, c));
        for (std::size_t k = c; k < cols; ++k)
          at(r, k) = field.sub(at(r, k), field.mul(factor, at(rank, k)));
      }
      ++rank;
    }
    return rank;
  });
}

FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b, const Coefficients& coeff) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DomainMismatch, "matrix shapes do not compose");
  return detail::with_field(coeff, [&](const auto& field) {
    const auto fa = to_field(a, field);
    const auto fb = to_field(b, field);
    FieldMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) {
        auto sum = field.zero();
        for (std::size_t k = 0; k < a.cols(); ++k)
          sum = field.add(sum, field.mul(fa[r * a.cols() + k], fb[k * b.cols() + c]));
        out(r, c) = field.to_rational(sum);
      }
    return out;
  });
}

std::vector<Integer> smith_invariants(Matrix<Integer> a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<Integer> diagonal;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a(r, c) != 0 && (pr == rows || abs(a(r, c)) < abs(a(pr, pc)))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) return diagonal;
      a.swap_rows(t, pr);
      a.swap_cols(t, pc);
      const Integer pivot = a(t, t);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) == 0) continue;
        const Integer q = a(r, t) / pivot;
        for (std::size_t c = t; c < cols; ++c)
          if (a(t, c) != 0) a(r, c) -= q * a(t, c);
        clean = clean && a(r, t) == 0;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) == 0) continue;
        const Integer q = a(t, c) / pivot;
        for (std::size_t r = t; r < rows; ++r)
          if (a(r, t) != 0) a(r, c) -= q * a(r, t);
        clean = clean && a(t, c) == 0;
      }
      if (!clean) continue;

      // The pivot must divide the rest of the block; otherwise fold the
      // offending row into the pivot row and reduce again.
      std::size_t bad = rows;
      for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a(r, c) % pivot != 0) {
            bad = r;
            break;
          }
      if (bad == rows) break;
      for (std::size_t c = t; c < cols; ++c) a(t, c) += a(bad, c);
    }
    diagonal.push_back(abs(a(t, t)));
  }
  return diagonal;
}

}  // namespace fintop
