#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kdual/errors.hpp"

namespace kdual {

using Rational = boost::multiprecision::mpq_rational;

class Scalar;

// Ground field: the rationals (characteristic 0) or F_p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(uint32_t p);
  // Accepts "Q" or "Fp:<p>".
  static Field parse(std::string_view spec);

  uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(int64_t n) const;
  Scalar from_rational(const Rational& q) const;
  // Exact scalar strings: "3", "-3/7". Decimal points are rejected.
  Scalar parse_scalar(std::string_view text) const;
  // All field elements, F_p only.
  std::vector<Scalar> elements() const;

  std::string to_string() const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(uint32_t p) : p_(p) {}
  uint32_t p_ = 0;
};

class Scalar {
 public:
  Scalar() : p_(0), v_(Rational(0)) {}

  uint32_t characteristic() const { return p_; }
  Field field() const;

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Residue in [0,p) for F_p; numerator/denominator otherwise.
  int64_t residue() const;
  const Rational& rational() const;

  std::string to_string() const;

 private:
  friend class Field;
  Scalar(uint32_t p, int64_t r) : p_(p), v_(r) {}
  Scalar(Rational q) : p_(0), v_(std::move(q)) {}
  void check(const Scalar& o) const;

  uint32_t p_;
  std::variant<int64_t, Rational> v_;
};

inline bool is_odd(long long n) { return (n & 1) != 0; }

// (-1)^e as a field element.
inline Scalar sign(const Field& f, long long e) {
  return is_odd(e) ? -f.one() : f.one();
}

}  // namespace kdual
