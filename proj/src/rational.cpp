#include "kleinrr/rational.hpp"

#include <climits>
#include <numeric>
#include <ostream>

#include "kleinrr/errors.hpp"

namespace kleinrr {

namespace {

static_assert(sizeof(long) == sizeof(long long), "LP64 data model expected");

mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }

// |v| for v != LLONG_MIN
long long abs_ll(long long v) { return v < 0 ? -v : v; }

}  // namespace

Rational::Rational(const Integer& v) { assign_mpq(mpq_class(v)); }

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero();
  mpq_class q(num, den);
  q.canonicalize();
  assign_mpq(std::move(q));
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw DivisionByZero();
  if (num == LLONG_MIN || den == LLONG_MIN) {
    *this = Rational(to_mpz(num), to_mpz(den));
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(abs_ll(num), den);
  num_ = num / g;
  den_ = den / g;
}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
  return *this;
}

void Rational::assign_mpq(mpq_class q) {
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() && q.get_num() != LONG_MIN) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
  }
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(to_mpz(num_), to_mpz(den_));
  return q;
}

Integer Rational::numerator() const { return big_ ? Integer(big_->get_num()) : to_mpz(num_); }
Integer Rational::denominator() const { return big_ ? Integer(big_->get_den()) : to_mpz(den_); }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) throw InputError("empty rational literal");
  auto parse_int = [&](std::string_view part) {
    std::string s(part);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    const std::size_t first = !s.empty() && s.front() == '-' ? 1 : 0;
    if (s.size() <= first || s.find_first_not_of("0123456789", first) != std::string::npos) {
      throw InputError("malformed rational literal '" + std::string(text) + "'");
    }
    return Integer(s);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::str() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::hash() const {
  if (!big_) return std::hash<long long>{}(num_) * 31u + std::hash<long long>{}(den_);
  std::size_t h = 0;
  for (mpz_srcptr z : {big_->get_num_mpz_t(), big_->get_den_mpz_t()}) {
    h = h * 31u + static_cast<std::size_t>(mpz_sgn(z));
    for (std::size_t i = 0; i < mpz_size(z); ++i) {
      h ^= static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
  }
  return h;
}

Rational Rational::operator-() const {
  Rational r;
  if (big_ || num_ == LLONG_MIN) {
    r.assign_mpq(-to_mpq());
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    long long num;
    if (den_ == 1 && o.den_ == 1) {
      if (!__builtin_add_overflow(num_, o.num_, &num)) {
        num_ = num;
        return *this;
      }
    } else {
      // Henrici: with g = gcd(d1, d2), the result's reducing factor divides g.
      const long long g = std::gcd(den_, o.den_);
      const long long d1g = den_ / g;
      const long long d2g = o.den_ / g;
      long long a, b, den;
      if (!__builtin_mul_overflow(num_, d2g, &a) && !__builtin_mul_overflow(o.num_, d1g, &b) &&
          !__builtin_add_overflow(a, b, &num) && !__builtin_mul_overflow(den_, d2g, &den) && num != LLONG_MIN) {
        const long long g2 = std::gcd(abs_ll(num), g);
        num_ = num / g2;
        den_ = den / g2;
        if (num_ == 0) den_ = 1;
        return *this;
      }
    }
  }
  assign_mpq(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (num_ != LLONG_MIN && o.num_ != LLONG_MIN) {
      const long long g1 = std::gcd(abs_ll(num_), o.den_);
      const long long g2 = std::gcd(abs_ll(o.num_), den_);
      long long num, den;
      if (!__builtin_mul_overflow(num_ / g1, o.num_ / g2, &num) &&
          !__builtin_mul_overflow(den_ / g2, o.den_ / g1, &den)) {
        num_ = num;
        den_ = den;
        return *this;
      }
    }
  }
  assign_mpq(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (!o.big_ && o.num_ != LLONG_MIN) {
    Rational inv;
    inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
    inv.den_ = abs_ll(o.num_);
    return *this *= inv;
  }
  assign_mpq(to_mpq() / o.to_mpq());
  return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
    long long p, sum;
    if (!__builtin_mul_overflow(a.num_, b.num_, &p) && !__builtin_add_overflow(num_, p, &sum)) {
      num_ = sum;
      return;
    }
  }
  *this += a * b;
}

void Rational::sub_product(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  *this -= a * b;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace kleinrr
