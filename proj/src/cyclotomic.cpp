#include "kleinrr/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <shared_mutex>

#include "kleinrr/errors.hpp"

namespace kleinrr {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Exact quotient of integer polynomials; the divisor must be monic.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const Integer c = num[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (std::size_t t = 0; t <= dd; ++t) num[i - dd + t] -= c * den[t];
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (num[i] != 0) throw IntegrityError("cyclotomic division left a remainder");
  }
  return quot;
}

// In-place reduction of p (any length) modulo the monic field modulus.
void reduce(RatPoly& p, const detail::CyclotomicField& f) {
  const std::size_t d = static_cast<std::size_t>(f.degree);
  for (std::size_t i = p.size(); i-- > d;) {
    if (p[i].is_zero()) continue;
    const Rational c = p[i];
    for (std::size_t t = 0; t < d; ++t) {
      if (!f.modulus[t].is_zero()) p[i - d + t].sub_product(c, f.modulus[t]);
    }
    p[i] = Rational();
  }
  p.resize(d);
}

// Quotient and remainder over Q; b must be non-zero and trimmed.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {RatPoly{}, a};
  RatPoly q(a.size() - b.size() + 1);
  const Rational lead_inv = Rational(1) / b.back();
  for (std::size_t i = a.size(); i > b.size() - 1;) {
    --i;
    if (a[i].is_zero()) continue;
    const Rational c = a[i] * lead_inv;
    const std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t t = 0; t < b.size(); ++t) a[shift + t].sub_product(c, b[t]);
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) out[i + j].add_product(a[i], b[j]);
    }
  }
  return out;
}

RatPoly poly_sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

int moebius(long n) {
  int sign = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

long mod(long a, long n) {
  const long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

long euler_phi(long n) {
  if (n < 1) throw InputError("euler_phi requires n >= 1");
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

long lcm_conductor(long a, long b) { return std::lcm(a, b); }

IntPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw InputError("cyclotomic_polynomial requires N >= 1, got " + std::to_string(n));
  // Φ_d for every divisor d of n in increasing order, each one dividing
  // x^d − 1 by the already computed Φ_e, e | d, e < d.
  std::vector<int> divisors;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) divisors.push_back(d);
  }
  std::map<int, IntPoly> phi;
  for (int d : divisors) {
    IntPoly num(static_cast<std::size_t>(d) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(d)] = 1;
    for (const auto& [e, p] : phi) {
      if (d % e == 0) num = divide_exact(std::move(num), p);
    }
    phi.emplace(d, std::move(num));
  }
  return phi.at(n);
}

namespace detail {

const CyclotomicField& field_for(int conductor) {
  if (conductor < 1) throw InputError("conductor must be >= 1, got " + std::to_string(conductor));
  static std::shared_mutex mutex;
  static std::map<int, std::unique_ptr<const CyclotomicField>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(conductor); it != cache.end()) return *it->second;
  }
  auto field = std::make_unique<CyclotomicField>();
  field->conductor = conductor;
  const IntPoly phi = cyclotomic_polynomial(conductor);
  field->degree = static_cast<int>(phi.size()) - 1;
  field->modulus.reserve(phi.size());
  for (const auto& c : phi) field->modulus.emplace_back(c);
  const std::size_t d = static_cast<std::size_t>(field->degree);
  std::vector<Rational> x(d + 1);
  x[0] = 1;
  // The power table costs conductor × degree rationals; large fields reduce
  // exponent vectors on demand instead.
  constexpr std::size_t kPowerTableBudget = std::size_t{1} << 20;
  const std::size_t table_size = static_cast<std::size_t>(conductor) * d;
  const int tabulated = table_size <= kPowerTableBudget ? conductor : 0;
  field->powers.reserve(static_cast<std::size_t>(tabulated));
  for (int e = 0; e < tabulated; ++e) {
    x.resize(d);
    field->powers.push_back(x);
    x.insert(x.begin(), Rational());
    const Rational lead = x[d];
    if (!lead.is_zero()) {
      for (std::size_t t = 0; t < d; ++t) x[t].sub_product(lead, field->modulus[t]);
    }
  }
  // Tr(ζ_N^e) is the Ramanujan sum c_N(e) = μ(N/g) φ(N)/φ(N/g), g = gcd(e, N).
  field->traces.reserve(static_cast<std::size_t>(conductor));
  for (int e = 0; e < conductor; ++e) {
    const long q = conductor / std::gcd(e, conductor);
    field->traces.push_back(moebius(q) * (field->degree / euler_phi(q)));
  }
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.emplace(conductor, std::move(field));
  return *it->second;
}

}  // namespace detail

Cyclotomic::Cyclotomic() : field_(&detail::field_for(1)), coeffs_(1) {}

Cyclotomic::Cyclotomic(const Rational& r) : field_(&detail::field_for(1)), coeffs_{r} {}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs)
    : field_(&detail::field_for(conductor)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(field_->degree)) {
    throw InputError("conductor " + std::to_string(conductor) + " needs " + std::to_string(field_->degree) +
                     " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

Cyclotomic Cyclotomic::from_exponents(const detail::CyclotomicField& field, std::vector<Rational> by_exponent) {
  reduce(by_exponent, field);
  return Cyclotomic(&field, std::move(by_exponent));
}

std::vector<Cyclotomic::Term> Cyclotomic::presentation() const {
  if (!terms_.empty()) return terms_;
  std::vector<Term> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) out.push_back({static_cast<int>(k), coeffs_[k]});
  }
  return out;
}

std::size_t Cyclotomic::presentation_size() const {
  if (!terms_.empty()) return terms_.size();
  std::size_t n = 0;
  for (const auto& c : coeffs_) n += c.is_zero() ? 0 : 1;
  return n;
}

void Cyclotomic::keep_terms_if_shorter(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  std::vector<Term> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().exponent == t.exponent) {
      merged.back().coeff += t.coeff;
      if (merged.back().coeff.is_zero()) merged.pop_back();
    } else if (!t.coeff.is_zero()) {
      merged.push_back(std::move(t));
    }
  }
  terms_.clear();
  std::size_t nnz = 0;
  for (const auto& c : coeffs_) nnz += c.is_zero() ? 0 : 1;
  if (merged.size() < nnz) terms_ = std::move(merged);
}

Cyclotomic Cyclotomic::from_terms(const detail::CyclotomicField& field, std::vector<Term> terms) {
  if (field.powers.empty()) {
    std::vector<Rational> by_exponent(static_cast<std::size_t>(field.conductor));
    for (const auto& t : terms) by_exponent[static_cast<std::size_t>(t.exponent)] += t.coeff;
    Cyclotomic out = from_exponents(field, std::move(by_exponent));
    out.keep_terms_if_shorter(std::move(terms));
    return out;
  }
  std::vector<Rational> c(static_cast<std::size_t>(field.degree));
  for (const auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    const auto& row = field.powers[static_cast<std::size_t>(t.exponent)];
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (!row[k].is_zero()) c[k].add_product(t.coeff, row[k]);
    }
  }
  Cyclotomic out(&field, std::move(c));
  out.keep_terms_if_shorter(std::move(terms));
  return out;
}

Cyclotomic Cyclotomic::root_of_unity(int n, long k) {
  const auto& f = detail::field_for(n);
  return from_terms(f, {{static_cast<int>(mod(k, n)), Rational(1)}});
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return false;
  }
  return true;
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw ContractError("to_rational on irrational element " + str());
  return coeffs_[0];
}

Cyclotomic Cyclotomic::promoted(int m) const {
  const int n = conductor();
  if (m == n) return *this;
  if (m % n != 0) {
    throw ContractError("cannot promote conductor " + std::to_string(n) + " to " + std::to_string(m));
  }
  const auto& f = detail::field_for(m);
  if (is_rational()) {
    std::vector<Rational> c(static_cast<std::size_t>(f.degree));
    c[0] = coeffs_[0];
    return Cyclotomic(&f, std::move(c));
  }
  std::vector<Term> terms = presentation();
  for (auto& t : terms) t.exponent *= m / n;
  return from_terms(f, std::move(terms));
}

Cyclotomic Cyclotomic::conjugate() const {
  if (is_rational()) return *this;
  const int n = conductor();
  std::vector<Term> terms = presentation();
  for (auto& t : terms) t.exponent = static_cast<int>(mod(-static_cast<long>(t.exponent), n));
  return from_terms(*field_, std::move(terms));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) {
    std::vector<Rational> c(coeffs_.size());
    c[0] = Rational(1) / coeffs_[0];
    return Cyclotomic(field_, std::move(c));
  }
  // Extended Euclid: keep s_i with s_i * a ≡ r_i (mod Φ).
  RatPoly r0(field_->modulus.begin(), field_->modulus.end());
  RatPoly r1 = coeffs_;
  trim(r1);
  RatPoly s0;
  RatPoly s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw IntegrityError("element shares a factor with the cyclotomic modulus");
  const Rational scale = Rational(1) / r1[0];
  for (auto& c : s1) c *= scale;
  return from_exponents(*field_, std::move(s1));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.conductor() != conductor()) {
    const int m = static_cast<int>(lcm_conductor(conductor(), o.conductor()));
    *this = promoted(m);
    return *this += o.promoted(m);
  }
  // Dense accumulators are not worth tracking; short presentations are merged.
  const bool sparse = (!terms_.empty() || !o.terms_.empty()) &&
                      presentation_size() + o.presentation_size() < coeffs_.size();
  std::vector<Term> terms;
  if (sparse) {
    terms = presentation();
    o.for_each_term([&](int e, const Rational& c) { terms.push_back({e, c}); });
  }
  terms_.clear();
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  if (sparse) keep_terms_if_shorter(std::move(terms));
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.conductor() != conductor()) {
    const int m = static_cast<int>(lcm_conductor(conductor(), o.conductor()));
    *this = promoted(m);
    return *this -= o.promoted(m);
  }
  return *this += -o;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  if (r.is_zero()) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= r;
  }
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor()) {
    if (b.is_rational()) return a * b.coeffs_[0];
    if (a.is_rational()) return b * a.coeffs_[0];
    const int m = static_cast<int>(lcm_conductor(a.conductor(), b.conductor()));
    return a.promoted(m) * b.promoted(m);
  }
  if (b.is_rational()) return a * b.coeffs_[0];
  if (a.is_rational()) return b * a.coeffs_[0];
  const std::size_t na = a.presentation_size();
  const std::size_t nb = b.presentation_size();
  if (na * nb <= a.coeffs_.size()) {
    const int n = a.conductor();
    std::vector<Cyclotomic::Term> terms;
    terms.reserve(na * nb);
    const auto pa = a.presentation();
    const auto pb = b.presentation();
    for (const auto& x : pa) {
      for (const auto& y : pb) terms.push_back({(x.exponent + y.exponent) % n, x.coeff * y.coeff});
    }
    return Cyclotomic::from_terms(*a.field_, std::move(terms));
  }
  return Cyclotomic::from_exponents(*a.field_, poly_mul(a.coeffs_, b.coeffs_));
}

Cyclotomic dot(std::span<const Cyclotomic> a, std::span<const Cyclotomic> b) {
  if (a.size() != b.size()) throw InputError("dot product of vectors with different lengths");
  long m = 1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].is_zero() || b[k].is_zero()) continue;
    if (!a[k].is_rational()) m = lcm_conductor(m, a[k].conductor());
    if (!b[k].is_rational()) m = lcm_conductor(m, b[k].conductor());
  }
  const auto& field = detail::field_for(static_cast<int>(m));
  std::vector<Rational> by_exponent(static_cast<std::size_t>(m));
  std::optional<Cyclotomic> promoted_x, promoted_y;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].is_zero() || b[k].is_zero()) continue;
    const Cyclotomic* x = &a[k];
    const Cyclotomic* y = &b[k];
    if (!x->is_rational() && x->conductor() != m) x = &promoted_x.emplace(x->promoted(static_cast<int>(m)));
    if (!y->is_rational() && y->conductor() != m) y = &promoted_y.emplace(y->promoted(static_cast<int>(m)));
    // Reduction is deferred, so this never costs more than a dense product.
    // Rational operands only contribute exponent 0, whatever their conductor.
    x->for_each_term([&](int ex, const Rational& cx) {
      y->for_each_term([&](int ey, const Rational& cy) {
        by_exponent[static_cast<std::size_t>((ex + ey) % m)].add_product(cx, cy);
      });
    });
  }
  std::vector<Cyclotomic::Term> terms;
  for (std::size_t e = 0; e < by_exponent.size(); ++e) {
    if (!by_exponent[e].is_zero()) terms.push_back({static_cast<int>(e), std::move(by_exponent[e])});
  }
  return Cyclotomic::from_terms(field, std::move(terms));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() == b.conductor()) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  const int m = static_cast<int>(lcm_conductor(a.conductor(), b.conductor()));
  return a.promoted(m).coeffs_ == b.promoted(m).coeffs_;
}

std::string Cyclotomic::str() const {
  if (is_rational()) return coeffs_[0].str();
  std::string out;
  const std::string z = "z" + std::to_string(conductor()) + "^";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const Rational mag = c.sign() < 0 ? -c : c;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.str();
    } else {
      if (mag != Rational(1)) out += mag.str() + "*";
      out += z + std::to_string(k);
    }
  }
  return out;
}

Cyclotomic Cyclotomic::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') s += ch;
  }
  if (s.empty()) throw InputError("empty cyclotomic literal");
  Cyclotomic total;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t end = s.find_first_of("+-", pos);
    // A '-' directly after '^' belongs to a negative exponent.
    while (end != std::string::npos && end > 0 && s[end - 1] == '^') end = s.find_first_of("+-", end + 1);
    const std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (term.empty()) throw InputError("malformed cyclotomic literal '" + std::string(text) + "'");
    Rational coeff = 1;
    std::string root = term;
    if (const auto star = term.find('*'); star != std::string::npos) {
      coeff = Rational::parse(term.substr(0, star));
      root = term.substr(star + 1);
    } else if (term.front() != 'z') {
      coeff = Rational::parse(term);
      root.clear();
    }
    if (sign < 0) coeff = -coeff;
    if (root.empty()) {
      total += Cyclotomic(coeff);
    } else {
      const auto caret = root.find('^');
      if (root.front() != 'z' || caret == std::string::npos || caret == 1) {
        throw InputError("malformed root of unity '" + root + "'");
      }
      try {
        const int n = std::stoi(root.substr(1, caret - 1));
        const long k = std::stol(root.substr(caret + 1));
        total += root_of_unity(n, k) * coeff;
      } catch (const std::logic_error&) {
        throw InputError("malformed root of unity '" + root + "'");
      }
    }
    pos = end == std::string::npos ? s.size() : end;
  }
  return total;
}

std::size_t Cyclotomic::hash() const {
  std::size_t h = static_cast<std::size_t>(conductor());
  for (const auto& c : coeffs_) h = h * 1000003u ^ c.hash();
  return h;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z) { return os << z.str(); }

}  // namespace kleinrr
