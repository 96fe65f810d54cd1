#include "kdual/scalar.hpp"

#include <charconv>

namespace kdual {

namespace {

bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int64_t mod(int64_t a, uint32_t p) {
  int64_t r = a % static_cast<int64_t>(p);
  return r < 0 ? r + p : r;
}

int64_t mod_pow(int64_t b, uint64_t e, uint32_t p) {
  int64_t r = 1;
  b = mod(b, p);
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

int64_t residue_of(const Rational& q, uint32_t p) {
  using boost::multiprecision::mpz_int;
  mpz_int num = boost::multiprecision::numerator(q);
  mpz_int den = boost::multiprecision::denominator(q);
  int64_t n = static_cast<int64_t>(mpz_int(num % p).convert_to<long long>());
  int64_t d = static_cast<int64_t>(mpz_int(den % p).convert_to<long long>());
  n = mod(n, p);
  d = mod(d, p);
  if (d == 0) throw CharacteristicError("denominator divisible by " + std::to_string(p));
  return n * mod_pow(d, p - 2, p) % p;
}

}  // namespace

Field Field::prime(uint32_t p) {
  if (!is_prime(p)) throw PreconditionError("not a prime: " + std::to_string(p));
  if (p > (1u << 30)) throw Unsupported("prime too large");
  return Field(p);
}

Field Field::parse(std::string_view spec) {
  if (spec == "Q") return rationals();
  if (spec.substr(0, 3) == "Fp:") {
    uint32_t p = 0;
    auto body = spec.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec != std::errc() || ptr != body.data() + body.size())
      throw ParseError("bad field spec: " + std::string(spec));
    return prime(p);
  }
  throw ParseError("bad field spec: " + std::string(spec));
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(int64_t n) const {
  if (p_ == 0) return Scalar(Rational(n));
  return Scalar(p_, mod(n, p_));
}

Scalar Field::from_rational(const Rational& q) const {
  if (p_ == 0) return Scalar(q);
  return Scalar(p_, residue_of(q, p_));
}

Scalar Field::parse_scalar(std::string_view text) const {
  if (text.empty()) throw ParseError("empty scalar");
  for (char c : text)
    if (c == '.' || c == 'e' || c == 'E') throw ParseError("decimal scalar not allowed: " + std::string(text));
  Rational q;
  try {
    q = Rational(std::string(text));
  } catch (const std::exception&) {
    throw ParseError("bad scalar: " + std::string(text));
  }
  return from_rational(q);
}

std::vector<Scalar> Field::elements() const {
  if (p_ == 0) throw Unsupported("cannot enumerate the rationals");
  std::vector<Scalar> out;
  out.reserve(p_);
  for (uint32_t i = 0; i < p_; ++i) out.push_back(Scalar(p_, i));
  return out;
}

std::string Field::to_string() const {
  return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_);
}

Field Scalar::field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }

void Scalar::check(const Scalar& o) const {
  if (p_ != o.p_) throw FieldMismatch("scalar field mismatch");
}

bool Scalar::is_zero() const {
  return p_ ? std::get<int64_t>(v_) == 0 : std::get<Rational>(v_) == 0;
}

bool Scalar::is_one() const {
  return p_ ? std::get<int64_t>(v_) == 1 : std::get<Rational>(v_) == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  if (p_) return Scalar(p_, (std::get<int64_t>(v_) + std::get<int64_t>(o.v_)) % p_);
  return Scalar(Rational(std::get<Rational>(v_) + std::get<Rational>(o.v_)));
}

Scalar Scalar::operator-(const Scalar& o) const {
  check(o);
  if (p_) return Scalar(p_, mod(std::get<int64_t>(v_) - std::get<int64_t>(o.v_), p_));
  return Scalar(Rational(std::get<Rational>(v_) - std::get<Rational>(o.v_)));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  if (p_) return Scalar(p_, std::get<int64_t>(v_) * std::get<int64_t>(o.v_) % p_);
  return Scalar(Rational(std::get<Rational>(v_) * std::get<Rational>(o.v_)));
}

Scalar Scalar::operator-() const {
  if (p_) return Scalar(p_, mod(-std::get<int64_t>(v_), p_));
  return Scalar(Rational(-std::get<Rational>(v_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  if (p_) return Scalar(p_, mod_pow(std::get<int64_t>(v_), p_ - 2, p_));
  return Scalar(Rational(1 / std::get<Rational>(v_)));
}

Scalar Scalar::operator/(const Scalar& o) const {
  check(o);
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  check(o);
  if (p_) return std::get<int64_t>(v_) == std::get<int64_t>(o.v_);
  return std::get<Rational>(v_) == std::get<Rational>(o.v_);
}

int64_t Scalar::residue() const {
  if (!p_) throw Unsupported("residue of a rational");
  return std::get<int64_t>(v_);
}

const Rational& Scalar::rational() const {
  if (p_) throw Unsupported("rational view of a residue");
  return std::get<Rational>(v_);
}

std::string Scalar::to_string() const {
  if (p_) return std::to_string(std::get<int64_t>(v_));
  return std::get<Rational>(v_).str();
}

}  // namespace kdual
