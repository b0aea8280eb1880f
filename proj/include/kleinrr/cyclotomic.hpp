#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kleinrr/rational.hpp"

namespace kleinrr {

/// Integer polynomial, coefficient of x^k at index k.
using IntPoly = std::vector<Integer>;

/// The N-th cyclotomic polynomial Φ_N, obtained by exact division of x^N − 1
/// by Φ_d for every proper divisor d of N. Throws InputError for N < 1.
IntPoly cyclotomic_polynomial(int n);

long euler_phi(long n);
long lcm_conductor(long a, long b);

namespace detail {

struct CyclotomicField {
  int conductor = 1;
  int degree = 1;
  std::vector<Rational> modulus;              // Φ_N, monic, length degree + 1
  std::vector<std::vector<Rational>> powers;  // reduced ζ_N^e for e in [0, N); empty for large fields
  std::vector<long> traces;                   // Tr_{Q(ζ_N)/Q}(ζ_N^e) for e in [0, N)
};

/// Memoized field data. Entries are immutable once published.
const CyclotomicField& field_for(int conductor);

}  // namespace detail

/// Exact element of Q(ζ_N), stored as the reduced representative
/// Σ c_k ζ_N^k (0 ≤ k < φ(N)) of Q[x]/(Φ_N).
///
/// Operands of different conductors are promoted to the lcm by ζ_N = ζ_M^{M/N}.
/// Elements may also carry a sparse presentation Σ c_e ζ_N^e (e in [0, N))
/// that is shorter than the reduced form; products and Galois actions then cost
/// O(terms · φ(N)) instead of O(φ(N)^2). The reduced form stays authoritative for
/// equality and hashing.
///
/// No conductor descent happens: a rational value computed in Q(ζ_24) keeps
/// conductor 24, and comparisons promote instead.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(const Rational& r);  // NOLINT(google-explicit-constructor)
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  /// coeffs.size() must equal φ(conductor).
  Cyclotomic(int conductor, std::vector<Rational> coeffs);

  /// ζ_N^(k mod N).
  static Cyclotomic root_of_unity(int n, long k);

  /// Inverse of str(): a sum of "c", "c*zN^k" or "zN^k" terms.
  static Cyclotomic parse(std::string_view text);

  int conductor() const { return field_->conductor; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// True iff every non-constant basis coefficient vanishes.
  bool is_rational() const;
  /// Constant coefficient; ContractError unless is_rational().
  Rational to_rational() const;

  /// Same value represented in Q(ζ_M); M must be a multiple of conductor().
  Cyclotomic promoted(int m) const;
  /// Complex conjugation ζ^k ↦ ζ^{−k}.
  Cyclotomic conjugate() const;
  /// Multiplicative inverse via extended Euclid against Φ_N. Throws DivisionByZero.
  Cyclotomic inverse() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic dot(std::span<const Cyclotomic> a, std::span<const Cyclotomic> b);

  /// Debug/serialization form, e.g. "1 + z8^1 - 1/2*z8^3"; rational values print as "p/q".
  std::string str() const;
  /// Hash of the coefficient vector; consistent with == only at a fixed conductor.
  std::size_t hash() const;

  /// Calls fn(e, c) for the non-zero terms c ζ_N^e of the shortest stored form.
  template <class Fn>
  void for_each_term(Fn&& fn) const {
    if (!terms_.empty()) {
      for (const auto& t : terms_) fn(t.exponent, t.coeff);
      return;
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (!coeffs_[k].is_zero()) fn(static_cast<int>(k), coeffs_[k]);
    }
  }

 private:
  struct Term {
    int exponent;
    Rational coeff;
  };

  Cyclotomic(const detail::CyclotomicField* field, std::vector<Rational> coeffs)
      : field_(field), coeffs_(std::move(coeffs)) {}
  static Cyclotomic from_exponents(const detail::CyclotomicField& field, std::vector<Rational> by_exponent);
  /// Builds the element Σ c ζ^e of `field` from terms with exponents in [0, N).
  static Cyclotomic from_terms(const detail::CyclotomicField& field, std::vector<Term> terms);
  std::vector<Term> presentation() const;
  std::size_t presentation_size() const;
  void keep_terms_if_shorter(std::vector<Term> terms);

  const detail::CyclotomicField* field_;
  std::vector<Rational> coeffs_;
  std::vector<Term> terms_;  // sorted, merged, non-zero; empty when the reduced form is the presentation
};

inline Cyclotomic root_of_unity(int n, long k) { return Cyclotomic::root_of_unity(n, k); }

/// Σ_k a[k] b[k], accumulated unreduced in exponent space and reduced once.
/// Throws InputError on length mismatch.
Cyclotomic dot(std::span<const Cyclotomic> a, std::span<const Cyclotomic> b);

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z);

}  // namespace kleinrr
