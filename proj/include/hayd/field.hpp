#pragma once

// Exact scalar fields: the rationals (GMP) and prime fields F_p.
//
// Generic code is written against a field object `K` exposing
//   value_type, zero(), one(), from_int(), is_zero(), try_inv(), inv(),
//   to_string(), parse(), name()
// and the usual arithmetic operators on value_type.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace hayd {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Malformed input (shapes, schema, non-prime characteristic ...), as
/// opposed to a well-formed structure that fails an axiom.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Residue in [0, p).  Carries its modulus so that the arithmetic operators
/// are self-contained.
struct Fp {
  std::uint32_t v = 0;
  std::uint32_t p = 0;

  friend Fp operator+(Fp a, Fp b) {
    std::uint64_t s = std::uint64_t{a.v} + b.v;
    return {static_cast<std::uint32_t>(s >= a.p ? s - a.p : s), a.p};
  }
  friend Fp operator-(Fp a, Fp b) {
    return {a.v >= b.v ? a.v - b.v : a.v + a.p - b.v, a.p};
  }
  friend Fp operator-(Fp a) { return {a.v == 0 ? 0u : a.p - a.v, a.p}; }
  friend Fp operator*(Fp a, Fp b) {
    return {static_cast<std::uint32_t>(std::uint64_t{a.v} * b.v % a.p), a.p};
  }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v && a.p == b.p; }
};

class PrimeField {
 public:
  using value_type = Fp;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) throw InputError("characteristic too large");
  }

  std::uint32_t characteristic() const { return p_; }
  std::string name() const { return "F" + std::to_string(p_); }

  Fp zero() const { return {0, p_}; }
  Fp one() const { return {1 % p_, p_}; }
  Fp from_int(long long x) const {
    long long r = x % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r), p_};
  }
  bool is_zero(const Fp& a) const { return a.v == 0; }

  std::optional<Fp> try_inv(const Fp& a) const {
    if (a.v == 0) return std::nullopt;
    // Fermat: a^(p-2)
    std::uint64_t base = a.v, e = p_ - 2, r = 1;
    while (e) {
      if (e & 1) r = r * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return Fp{static_cast<std::uint32_t>(r), p_};
  }
  Fp inv(const Fp& a) const {
    auto r = try_inv(a);
    if (!r) throw DivisionByZero();
    return *r;
  }

  std::string to_string(const Fp& a) const { return std::to_string(a.v); }
  Fp parse(std::string_view text) const {
    try {
      std::size_t used = 0;
      long long x = std::stoll(std::string(text), &used);
      if (used != text.size()) throw InputError("bad scalar '" + std::string(text) + "'");
      return from_int(x);
    } catch (const std::logic_error&) {
      throw InputError("bad scalar '" + std::string(text) + "'");
    }
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using value_type = mpq_class;

  std::string name() const { return "Q"; }
  mpq_class zero() const { return mpq_class(0); }
  mpq_class one() const { return mpq_class(1); }
  mpq_class from_int(long long x) const { return mpq_class(static_cast<long>(x)); }
  bool is_zero(const mpq_class& a) const { return sgn(a) == 0; }

  std::optional<mpq_class> try_inv(const mpq_class& a) const {
    if (sgn(a) == 0) return std::nullopt;
    return mpq_class(1 / a);
  }
  mpq_class inv(const mpq_class& a) const {
    auto r = try_inv(a);
    if (!r) throw DivisionByZero();
    return *r;
  }

  std::string to_string(const mpq_class& a) const { return a.get_str(); }
  mpq_class parse(std::string_view text) const {
    mpq_class q;
    if (text.empty() || q.set_str(std::string(text), 10) != 0)
      throw InputError("bad rational '" + std::string(text) + "'");
    if (q.get_den() == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
  }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Runtime description of a ground field, used at the I/O boundary.
using FieldSpec = std::variant<RationalField, PrimeField>;

inline std::string field_name(const FieldSpec& f) {
  return std::visit([](const auto& k) { return k.name(); }, f);
}

}  // namespace hayd
