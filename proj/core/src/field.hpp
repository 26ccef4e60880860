#pragma once

// Concrete field arithmetic behind the runtime Coefficients value.

#include <cstdint>
#include <utility>

#include "fintop/error.hpp"
#include "fintop/linalg.hpp"

namespace fintop::detail {

struct RationalField {
  using Scalar = Rational;

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  Scalar from_int(long long v) const { return v; }
  Scalar from_rational(const Rational& r) const { return r; }
  Rational to_rational(const Scalar& s) const { return s; }
  bool is_zero(const Scalar& s) const { return s == 0; }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar div(const Scalar& a, const Scalar& b) const { return a / b; }
};

struct PrimeField {
  using Scalar = std::uint64_t;
  std::uint64_t p;

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  Scalar from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    return static_cast<Scalar>(r < 0 ? r + static_cast<long long>(p) : r);
  }
  Scalar reduce(const Integer& v) const {
    Integer r = v % p;
    if (r < 0) r += p;
    return static_cast<Scalar>(r);
  }
  Scalar from_rational(const Rational& r) const {
    const Scalar den = reduce(boost::multiprecision::denominator(r));
    if (den == 0) throw Error(ErrorCode::UnsupportedCoefficients, "denominator divisible by p");
    return mul(reduce(boost::multiprecision::numerator(r)), inverse(den));
  }
  Rational to_rational(const Scalar& s) const { return Rational(s); }
  bool is_zero(const Scalar& s) const { return s == 0; }
  Scalar add(Scalar a, Scalar b) const { return (a + b) % p; }
  Scalar sub(Scalar a, Scalar b) const { return (a + p - b) % p; }
  Scalar mul(Scalar a, Scalar b) const { return a * b % p; }
  Scalar inverse(Scalar a) const {
    Scalar result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  Scalar div(Scalar a, Scalar b) const { return mul(a, inverse(b)); }
};

template <class Fn>
decltype(auto) with_field(const Coefficients& coeff, Fn&& fn) {
  switch (coeff.kind()) {
    case Coefficients::Kind::rationals:
      return std::forward<Fn>(fn)(RationalField{});
    case Coefficients::Kind::mod_p:
      return std::forward<Fn>(fn)(PrimeField{coeff.prime()});
    case Coefficients::Kind::integers:
      break;
  }
  throw Error(ErrorCode::UnsupportedCoefficients, "a field is required, got Z");
}

}  // namespace fintop::detail
