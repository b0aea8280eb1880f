#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace kleinrr {

using Integer = mpz_class;

/// Exact rational number in canonical form: gcd(|num|, den) = 1 and den > 0.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline and
/// operated on with overflow-checked machine arithmetic; anything larger lives
/// in a GMP mpq. The two forms never overlap (a value that fits is always
/// stored inline), so equality is a field comparison.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : num_(v) {}        // NOLINT(google-explicit-constructor)
  Rational(long v) : num_(v) {}       // NOLINT(google-explicit-constructor)
  Rational(long long v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v);         // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  Rational(long long num, long long den);
  Rational(int num, int den) : Rational(static_cast<long long>(num), static_cast<long long>(den)) {}

  Rational(const Rational& o) : num_(o.num_), den_(o.den_), big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  /// Parses "p", "-p", "p/q" (surrounding whitespace allowed).
  static Rational parse(std::string_view text);

  Integer numerator() const;
  Integer denominator() const;
  mpq_class to_mpq() const;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  int sign() const;

  /// "p/q" in lowest terms, or "p" when q = 1.
  std::string str() const;
  std::size_t hash() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  /// this += a * b
  void add_product(const Rational& a, const Rational& b);
  /// this -= a * b
  void sub_product(const Rational& a, const Rational& b);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void assign_mpq(mpq_class q);  // canonical q; demotes when it fits

  long long num_ = 0;
  long long den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

struct RationalHash {
  std::size_t operator()(const Rational& r) const { return r.hash(); }
};

}  // namespace kleinrr
