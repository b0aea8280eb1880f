#include "kleinrr/matgroup.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

#include "kleinrr/errors.hpp"

namespace kleinrr {

// ---------------------------------------------------------------- GroupSpec

GroupSpec GroupSpec::cyclic(int n) {
  if (n < 1) throw InputError("cyclic group order must be >= 1, got " + std::to_string(n));
  return {Family::Cyclic, n};
}

GroupSpec GroupSpec::binary_dihedral(int n) {
  if (n < 1) throw InputError("binary dihedral parameter must be >= 1, got " + std::to_string(n));
  return {Family::BinaryDihedral, n};
}

namespace {

int parse_positive(std::string_view digits, std::string_view whole) {
  if (digits.empty() || digits.size() > 6 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw InputError("bad group spec '" + std::string(whole) + "'");
  }
  return std::stoi(std::string(digits));
}

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  const std::string_view s = lower;
  if (s.starts_with("cyclic:")) return cyclic(parse_positive(s.substr(7), text));
  if (s.starts_with("dic:")) return binary_dihedral(parse_positive(s.substr(4), text));
  if (s == "e6") return binary_tetrahedral();
  if (s == "e7") return binary_octahedral();
  if (s == "e8") return binary_icosahedral();
  if (s.size() >= 2 && s[0] == 'a') {
    const int k = parse_positive(s.substr(1), text);
    if (k < 1) throw InputError("Dynkin type A<k> needs k >= 1, got '" + std::string(text) + "'");
    return cyclic(k + 1);
  }
  if (s.size() >= 2 && s[0] == 'd') {
    const int k = parse_positive(s.substr(1), text);
    if (k < 3) throw InputError("Dynkin type D<k> needs k >= 3, got '" + std::string(text) + "'");
    return binary_dihedral(k - 2);
  }
  throw InputError("bad group spec '" + std::string(text) + "' (expected A<k>, D<k>, E6, E7, E8, cyclic:<N>, dic:<n>)");
}

std::string GroupSpec::label() const {
  switch (family) {
    case Family::Cyclic:
      return param == 1 ? "cyclic:1" : "A" + std::to_string(param - 1);
    case Family::BinaryDihedral:
      return "D" + std::to_string(param + 2);
    case Family::BinaryTetrahedral:
      return "E6";
    case Family::BinaryOctahedral:
      return "E7";
    case Family::BinaryIcosahedral:
      return "E8";
  }
  return "?";
}

std::string GroupSpec::description() const {
  switch (family) {
    case Family::Cyclic:
      return "cyclic group mu_" + std::to_string(param);
    case Family::BinaryDihedral:
      return "binary dihedral group Dic_" + std::to_string(param);
    case Family::BinaryTetrahedral:
      return "binary tetrahedral group 2T";
    case Family::BinaryOctahedral:
      return "binary octahedral group 2O";
    case Family::BinaryIcosahedral:
      return "binary icosahedral group 2I";
  }
  return "?";
}

std::uint64_t GroupSpec::expected_order() const {
  switch (family) {
    case Family::Cyclic:
      return static_cast<std::uint64_t>(param);
    case Family::BinaryDihedral:
      return 4 * static_cast<std::uint64_t>(param);
    case Family::BinaryTetrahedral:
      return 24;
    case Family::BinaryOctahedral:
      return 48;
    case Family::BinaryIcosahedral:
      return 120;
  }
  return 0;
}

int GroupSpec::ambient_conductor() const {
  switch (family) {
    case Family::Cyclic:
      return param;
    case Family::BinaryDihedral:
      return 2 * param;
    case Family::BinaryTetrahedral:
    case Family::BinaryOctahedral:
      return 8;
    case Family::BinaryIcosahedral:
      return 10;
  }
  return 1;
}

// --------------------------------------------------------------------- Mat2

Mat2::Mat2() : e_{Cyclotomic(1), Cyclotomic(0), Cyclotomic(0), Cyclotomic(1)} {}

Mat2 Mat2::operator*(const Mat2& o) const {
  return Mat2(e_[0] * o.e_[0] + e_[1] * o.e_[2], e_[0] * o.e_[1] + e_[1] * o.e_[3],
              e_[2] * o.e_[0] + e_[3] * o.e_[2], e_[2] * o.e_[1] + e_[3] * o.e_[3]);
}

Mat2& Mat2::operator*=(const Rational& r) {
  for (auto& x : e_) x *= r;
  return *this;
}

Mat2 Mat2::operator-() const { return Mat2(-e_[0], -e_[1], -e_[2], -e_[3]); }

Cyclotomic Mat2::trace() const { return e_[0] + e_[3]; }

Cyclotomic Mat2::det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

Mat2 Mat2::inverse() const {
  const Cyclotomic d = det();
  const Cyclotomic inv = d.inverse();
  Mat2 adj(e_[3], -e_[1], -e_[2], e_[0]);
  if (d == Cyclotomic(1)) return adj;
  return Mat2(adj.e_[0] * inv, adj.e_[1] * inv, adj.e_[2] * inv, adj.e_[3] * inv);
}

Mat2 Mat2::promoted(int conductor) const {
  return Mat2(e_[0].promoted(conductor), e_[1].promoted(conductor), e_[2].promoted(conductor),
              e_[3].promoted(conductor));
}

bool operator==(const Mat2& a, const Mat2& b) { return a.e_ == b.e_; }

std::size_t Mat2::hash() const {
  std::size_t h = 0;
  for (const auto& x : e_) h = h * 0x100000001b3ULL ^ x.hash();
  return h;
}

std::string Mat2::str() const {
  return "[[" + e_[0].str() + ", " + e_[1].str() + "], [" + e_[2].str() + ", " + e_[3].str() + "]]";
}

// ------------------------------------------------------------------ closure

namespace {

struct Closure {
  std::vector<Mat2> elements;
  std::vector<std::vector<int>> words;
  std::unordered_map<Mat2, std::size_t, Mat2Hash> index;
};

Closure bfs_closure(std::span<const Mat2> generators, int conductor, std::size_t cap) {
  Closure out;
  std::vector<Mat2> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(g.promoted(conductor));
  const Mat2 id = Mat2::identity().promoted(conductor);
  out.elements.push_back(id);
  out.words.emplace_back();
  out.index.emplace(id, 0);
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Mat2 p = out.elements[head] * gens[gi];
      if (out.index.contains(p)) continue;
      if (out.elements.size() >= cap) {
        throw ConfigError("group closure exceeded " + std::to_string(cap) + " elements; generators are not of finite small order");
      }
      std::vector<int> w = out.words[head];
      w.push_back(static_cast<int>(gi));
      out.index.emplace(p, out.elements.size());
      out.elements.push_back(std::move(p));
      out.words.push_back(std::move(w));
    }
  }
  return out;
}

Cyclotomic promote_to(const Cyclotomic& z, int conductor) {
  return z.conductor() == conductor ? z : z.promoted(conductor);
}

}  // namespace

std::vector<Mat2> close_under_products(std::span<const Mat2> generators, int conductor, std::size_t cap) {
  return bfs_closure(generators, conductor, cap).elements;
}

std::vector<Generator> standard_generators(const GroupSpec& spec) {
  const int m = spec.ambient_conductor();
  auto z = [m](int n, long k) { return promote_to(root_of_unity(n, k), m); };
  std::vector<Generator> gens;
  switch (spec.family) {
    case Family::Cyclic: {
      gens.push_back({"g", "g", Mat2::diagonal(z(spec.param, 1), z(spec.param, -1))});
      break;
    }
    case Family::BinaryDihedral: {
      const int n2 = 2 * spec.param;
      gens.push_back({"a", "a", Mat2::diagonal(z(n2, 1), z(n2, -1))});
      gens.push_back({"x", "x", Mat2(0, -1, 1, 0)});
      break;
    }
    case Family::BinaryTetrahedral:
    case Family::BinaryOctahedral: {
      auto eps = [&](long k) { return z(8, k); };
      const Cyclotomic inv_sqrt2 = (eps(1) + eps(7)) * Rational(1, 2);
      gens.push_back({"sigma", "σ", Mat2::diagonal(eps(2), eps(6))});
      gens.push_back({"tau", "τ", Mat2(0, 1, -1, 0)});
      Mat2 mu(eps(7), eps(7), eps(5), eps(1));
      mu = Mat2(mu(0, 0) * inv_sqrt2, mu(0, 1) * inv_sqrt2, mu(1, 0) * inv_sqrt2, mu(1, 1) * inv_sqrt2);
      gens.push_back({"mu", "μ", mu});
      if (spec.family == Family::BinaryOctahedral) {
        gens.push_back({"kappa", "κ", Mat2::diagonal(eps(1), eps(7))});
      }
      break;
    }
    case Family::BinaryIcosahedral: {
      auto eps = [&](long k) { return z(5, k); };
      const Cyclotomic sqrt5 = eps(1) - eps(2) - eps(3) + eps(4);
      const Cyclotomic inv_sqrt5 = sqrt5 * Rational(1, 5);
      gens.push_back({"sigma", "σ", -Mat2::diagonal(eps(3), eps(2))});
      const Cyclotomic p = eps(1) - eps(4);
      const Cyclotomic q = eps(2) - eps(3);
      gens.push_back({"tau", "τ", Mat2(-p * inv_sqrt5, q * inv_sqrt5, q * inv_sqrt5, p * inv_sqrt5)});
      break;
    }
  }
  for (auto& g : gens) g.matrix = g.matrix.promoted(m);
  return gens;
}

Group build_group(const GroupSpec& spec, std::size_t cap) {
  Group g;
  g.spec_ = spec;
  g.conductor_ = spec.ambient_conductor();
  g.generators_ = standard_generators(spec);
  std::vector<Mat2> mats;
  for (const auto& gen : g.generators_) mats.push_back(gen.matrix);
  Closure c = bfs_closure(mats, g.conductor_, cap);
  g.elements_ = std::move(c.elements);
  g.words_ = std::move(c.words);
  g.index_ = std::move(c.index);
  return g;
}

std::optional<std::size_t> Group::index_of(const Mat2& m) const {
  auto it = index_.find(m.promoted(conductor_));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string Group::word_of(std::size_t i) const {
  const auto& w = words_.at(i);
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size();) {
    std::size_t run = 1;
    while (k + run < w.size() && w[k + run] == w[k]) ++run;
    if (!out.empty()) out += ' ';
    out += generators_[static_cast<std::size_t>(w[k])].name;
    if (run > 1) out += "^" + std::to_string(run);
    k += run;
  }
  return out;
}

// --------------------------------------------------------- conjugacy classes

std::vector<ConjClass> conjugacy_classes(const Group& g) {
  std::vector<Mat2> gens;
  std::vector<Mat2> gens_inv;
  for (const auto& gen : g.generators()) {
    gens.push_back(gen.matrix);
    gens_inv.push_back(gen.matrix.inverse().promoted(g.conductor()));
  }
  const std::size_t order = g.order();
  std::vector<bool> seen(order, false);
  std::vector<ConjClass> classes;
  for (std::size_t start = 0; start < order; ++start) {
    if (seen[start]) continue;
    ConjClass cls;
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      cls.members.push_back(cur);
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const auto idx = g.index_of(gens_inv[k] * g.element(cur) * gens[k]);
        if (!idx) throw IntegrityError("conjugate left the group; closure is inconsistent");
        if (!seen[*idx]) {
          seen[*idx] = true;
          queue.push_back(*idx);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative_index = cls.members.front();
    cls.representative = g.element(cls.representative_index);
    cls.size = cls.members.size();
    cls.centralizer_order = order / cls.size;
    cls.is_identity = cls.representative_index == 0;
    classes.push_back(std::move(cls));
  }
  std::stable_sort(classes.begin(), classes.end(), [](const ConjClass& a, const ConjClass& b) {
    if (a.is_identity != b.is_identity) return a.is_identity;
    if (a.size != b.size) return a.size < b.size;
    return a.representative_index < b.representative_index;
  });
  return classes;
}

std::vector<std::size_t> class_index_map(const Group& g, std::span<const ConjClass> classes) {
  std::vector<std::size_t> map(g.order(), 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (std::size_t m : classes[c].members) map[m] = c;
  }
  return map;
}

// -------------------------------------------------------------------- words

namespace {

struct Token {
  std::string text;
  int generator;  // -1 identity, -2 central -I
};

}  // namespace

Mat2 evaluate_word(const Group& g, std::string_view word) {
  std::vector<Token> tokens;
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    tokens.push_back({g.generators()[i].name, static_cast<int>(i)});
    if (g.generators()[i].symbol != g.generators()[i].name) tokens.push_back({g.generators()[i].symbol, static_cast<int>(i)});
  }
  tokens.push_back({"-1", -2});
  tokens.push_back({"−1", -2});
  tokens.push_back({"1", -1});
  std::stable_sort(tokens.begin(), tokens.end(), [](const Token& a, const Token& b) { return a.text.size() > b.text.size(); });

  const int m = g.conductor();
  Mat2 result = Mat2::identity().promoted(m);
  std::size_t pos = 0;
  auto skip_separators = [&] {
    while (pos < word.size() && (word[pos] == ' ' || word[pos] == '*' || word[pos] == '\t')) ++pos;
    if (word.substr(pos).starts_with("·")) pos += 2;  // middle dot
  };
  skip_separators();
  while (pos < word.size()) {
    const Token* hit = nullptr;
    for (const auto& t : tokens) {
      if (word.substr(pos).starts_with(t.text)) {
        hit = &t;
        break;
      }
    }
    if (!hit) throw InputError("unknown symbol in word '" + std::string(word) + "' at offset " + std::to_string(pos));
    pos += hit->text.size();
    long exponent = 1;
    if (pos < word.size() && word[pos] == '^') {
      ++pos;
      const bool braced = pos < word.size() && word[pos] == '{';
      if (braced) ++pos;
      bool negative = false;
      if (pos < word.size() && word[pos] == '-') {
        negative = true;
        ++pos;
      } else if (word.substr(pos).starts_with("−")) {
        negative = true;
        pos += 3;
      }
      const std::size_t begin = pos;
      while (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos]))) ++pos;
      if (pos == begin || pos - begin > 9) throw InputError("bad exponent in word '" + std::string(word) + "'");
      exponent = std::stol(std::string(word.substr(begin, pos - begin)));
      if (negative) exponent = -exponent;
      if (braced) {
        if (pos >= word.size() || word[pos] != '}') throw InputError("unclosed exponent in word '" + std::string(word) + "'");
        ++pos;
      }
    }
    Mat2 base;
    if (hit->generator == -1) {
      base = Mat2::identity().promoted(m);
    } else if (hit->generator == -2) {
      base = (-Mat2::identity()).promoted(m);
      if (!g.index_of(base)) throw InputError("-1 is not an element of " + g.spec().label());
    } else {
      base = g.generators()[static_cast<std::size_t>(hit->generator)].matrix;
    }
    if (exponent < 0) {
      base = base.inverse().promoted(m);
      exponent = -exponent;
    }
    // Square-and-multiply; exponents are reduced by the group order first.
    exponent %= static_cast<long>(g.order());
    Mat2 power = Mat2::identity().promoted(m);
    while (exponent > 0) {
      if (exponent & 1) power = power * base;
      base = base * base;
      exponent >>= 1;
    }
    result = result * power;
    skip_separators();
  }
  if (!g.index_of(result)) throw IntegrityError("word '" + std::string(word) + "' evaluated outside the group");
  return result;
}

std::vector<Cyclotomic> natural_character([[maybe_unused]] const Group& g, std::span<const ConjClass> classes) {
  std::vector<Cyclotomic> chi;
  chi.reserve(classes.size());
  for (const auto& c : classes) chi.push_back(c.representative.trace());
  return chi;
}

}  // namespace kleinrr
