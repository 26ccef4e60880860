#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fintop {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Coefficient ring for homology: Z, Q or Z/p.
class Coefficients {
 public:
  enum class Kind { integers, rationals, mod_p };

  static Coefficients integers() { return Coefficients(Kind::integers, 0); }
  static Coefficients rationals() { return Coefficients(Kind::rationals, 0); }
  /// Throws UnsupportedPrime unless p is a prime below 2^31.
  static Coefficients mod(std::uint64_t p);
  /// "z", "q" or "z<p>" (e.g. "z2").
  static Coefficients parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t prime() const noexcept { return p_; }
  bool is_field() const noexcept { return kind_ != Kind::integers; }
  std::string name() const;

  friend bool operator==(const Coefficients&, const Coefficients&) = default;

 private:
  Coefficients(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Field-valued matrix. Entries over Z/p are stored as integers in [0, p).
using FieldMatrix = Matrix<Rational>;

/// Rank over a field. Throws UnsupportedCoefficients for Z.
std::size_t rank(const FieldMatrix& m, const Coefficients& field);
/// a * b over a field.
FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b, const Coefficients& field);

/// Nonzero diagonal of the Smith normal form, each dividing the next, all
/// positive. The count is the rank over Z (and over Q).
std::vector<Integer> smith_invariants(Matrix<Integer> m);

}  // namespace fintop
