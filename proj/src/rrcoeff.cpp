#include "kleinrr/rrcoeff.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "kleinrr/errors.hpp"

namespace kleinrr {

namespace {

using Matrix = AdjacencyMatrix;

std::size_t identity_class(const CharacterTable& t) {
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    if (t.classes[c].is_identity) return c;
  }
  throw IntegrityError(t.group->spec().label() + ": no identity class");
}

RRCoefficients certify(const CharacterTable& t, const std::vector<Cyclotomic>& sums, const char* what) {
  RRCoefficients out{t.group->spec(), {}};
  out.values.reserve(sums.size());
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (!sums[i].is_rational()) {
      throw IntegrityError(t.group->spec().label() + ": " + what + " for " + t.irreps[i].name +
                           " is not rational: " + sums[i].str());
    }
    out.values.push_back(sums[i].to_rational());
  }
  return out;
}

// 1 / (scale · (2 − trace)); IntegrityError when the trace is 2.
Cyclotomic twisted_weight(const Cyclotomic& trace, long scale, const std::string& where) {
  const Cyclotomic gap = Cyclotomic(2) - trace;
  if (gap.is_zero()) throw IntegrityError(where + ": 2 - chi_V vanishes off the identity");
  return (gap * Rational(scale)).inverse();
}

Rational one_over(long long n) { return Rational(1LL, n); }

int sign_pow(long e) { return e % 2 == 0 ? 1 : -1; }

// Rank of an integer matrix over Q.
std::size_t rank(const Matrix& m) {
  std::vector<std::vector<Rational>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j].sub_product(f, a[r][j]);
    }
    ++r;
  }
  return r;
}

// Positive definite iff elimination without pivoting meets only positive pivots.
bool positive_definite(const Matrix& m) {
  std::vector<std::vector<Rational>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (a[c][c].sign() <= 0) return false;
    for (std::size_t i = c + 1; i < a.size(); ++i) {
      if (a[i][c].is_zero()) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < a.size(); ++j) a[i][j].sub_product(f, a[c][j]);
    }
  }
  return true;
}

std::vector<std::int64_t> degrees(const Matrix& a) {
  std::vector<std::int64_t> d;
  for (const auto& row : a) d.push_back(std::accumulate(row.begin(), row.end(), std::int64_t{0}));
  return d;
}

bool connected(const Matrix& a) {
  if (a.empty()) return true;
  std::vector<bool> seen(a.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < a.size(); ++w) {
      if (a[v][w] != 0 && !seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == a.size();
}

std::int64_t edge_count(const Matrix& a) {
  std::int64_t e = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) e += a[i][j];
  }
  return e;
}

// Sorted arm lengths (nodes per arm) of a tree with a single trivalent node.
std::vector<int> arm_lengths(const Matrix& a, std::size_t center) {
  std::vector<int> arms;
  for (std::size_t start = 0; start < a.size(); ++start) {
    if (a[center][start] == 0) continue;
    int len = 0;
    std::size_t prev = center;
    std::size_t cur = start;
    while (true) {
      ++len;
      std::size_t next = a.size();
      for (std::size_t w = 0; w < a.size(); ++w) {
        if (w != prev && a[cur][w] != 0) next = w;
      }
      if (next == a.size()) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  return arms;
}

std::size_t count_of(const std::vector<std::int64_t>& v, std::int64_t x) {
  return static_cast<std::size_t>(std::count(v.begin(), v.end(), x));
}

std::string dynkin_type(const GroupSpec& s) {
  switch (s.family) {
    case Family::Cyclic:
      return "A" + std::to_string(s.param - 1);
    case Family::BinaryDihedral:
      return "D" + std::to_string(s.param + 2);
    case Family::BinaryTetrahedral:
      return "E6";
    case Family::BinaryOctahedral:
      return "E7";
    case Family::BinaryIcosahedral:
      return "E8";
  }
  return "?";
}

}  // namespace

RRCoefficients rr_coefficients(const CharacterTable& t) {
  const std::size_t id = identity_class(t);
  std::vector<Cyclotomic> weights(t.classes.size());
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    if (c == id) continue;
    weights[c] = twisted_weight(t.natural[c], static_cast<long>(t.classes[c].centralizer_order),
                                t.group->spec().label() + " class " + t.class_words[c]);
  }
  std::vector<Cyclotomic> sums;
  sums.reserve(t.irreps.size());
  for (const auto& r : t.irreps) sums.push_back(dot(r.values, weights));
  return certify(t, sums, "class sum");
}

RRCoefficients element_sum_coefficients(const CharacterTable& t) {
  const Group& g = *t.group;
  const auto cls = class_index_map(g, t.classes);
  const auto order = static_cast<long>(g.order());
  std::vector<Cyclotomic> weights;
  std::vector<std::size_t> members;
  for (std::size_t e = 0; e < g.order(); ++e) {
    if (t.classes[cls[e]].is_identity) continue;
    weights.push_back(twisted_weight(g.element(e).trace(), order, g.spec().label() + " element " + g.word_of(e)));
    members.push_back(cls[e]);
  }
  std::vector<Cyclotomic> sums;
  sums.reserve(t.irreps.size());
  std::vector<Cyclotomic> values(members.size());
  for (const auto& r : t.irreps) {
    for (std::size_t k = 0; k < members.size(); ++k) values[k] = r.values[members[k]];
    sums.push_back(dot(values, weights));
  }
  return certify(t, sums, "element sum");
}

Rational delta(const RRCoefficients& coeffs, const KClass& k) {
  if (k.size() != coeffs.size()) {
    throw InputError("class has " + std::to_string(k.size()) + " entries, expected " + std::to_string(coeffs.size()));
  }
  Rational sum;
  for (std::size_t i = 0; i < k.size(); ++i) sum.add_product(Rational(static_cast<long>(k[i])), coeffs[i]);
  return sum;
}

KClass skyscraper_class(const CharacterTable& t, std::size_t irrep) {
  if (irrep >= t.irreps.size()) throw InputError("irrep index out of range");
  ClassFunction f;
  f.reserve(t.classes.size());
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    f.push_back((Cyclotomic(2) - t.natural[c]) * t.irreps[irrep].values[c]);
  }
  return decompose(t, f);
}

SkyscraperDelta delta_skyscraper(const CharacterTable& t, const RRCoefficients& coeffs, std::size_t irrep) {
  const auto order = static_cast<long>(t.order());
  SkyscraperDelta out;
  out.value = delta(coeffs, skyscraper_class(t, irrep));
  out.expected = irrep == 0 ? Rational(1) - one_over(order) : Rational(static_cast<long long>(-t.irreps[irrep].dim), static_cast<long long>(order));
  return out;
}

Rational closed_form_A(int n, int j) {
  if (n < 1) throw InputError("closed_form_A requires N >= 1");
  if (j < 0 || j >= n) throw InputError("closed_form_A requires 0 <= j < N");
  const Rational x(j);
  const Rational big_n(n);
  const Rational f = x * (x - big_n) / Rational(2) + (big_n * big_n - Rational(1)) / Rational(12);
  return f / big_n;
}

DicIrrep DicIrrep::parse(std::string_view name) {
  const std::string_view head = name.substr(0, name.find('('));
  if (head == "rho_0") return {Kind::Trivial, 0};
  if (head == "rho_a") return {Kind::SignA, 0};
  if (head == "rho_x") return {Kind::SignX, 0};
  if (head == "rho_xa") return {Kind::SignXA, 0};
  if (head.starts_with("psi_")) {
    try {
      std::size_t used = 0;
      const std::string digits(head.substr(4));
      const int l = std::stoi(digits, &used);
      if (used == digits.size() && l >= 1) return {Kind::Psi, l};
    } catch (const std::logic_error&) {
    }
  }
  throw InputError("not a binary dihedral irrep: '" + std::string(name) + "'");
}

Rational closed_form_D(int n, const DicIrrep& rep, ConstantVariant variant) {
  if (n < 1) throw InputError("closed_form_D requires n >= 1");
  const Rational nn(n);
  const Rational inv16n = one_over(16L * n);
  const Rational quarter(1, 4);
  const Rational mean_part = (nn * nn - Rational(1)) / (Rational(12) * nn);
  const bool printed = variant == ConstantVariant::Printed;
  switch (rep.kind) {
    case DicIrrep::Kind::Trivial:
      return inv16n + quarter + mean_part;
    case DicIrrep::Kind::SignX:
      return inv16n - quarter + mean_part;
    case DicIrrep::Kind::SignA:
    case DicIrrep::Kind::SignXA: {
      const Rational sum =
          Rational(1, 2) * (-(nn * nn) / Rational(2) + (Rational(4) * nn * nn - Rational(1)) / Rational(12) -
                            Rational(sign_pow(n), 4));
      const Rational constant = printed ? -inv16n : Rational(sign_pow(n)) * inv16n;
      return constant + sum / (Rational(2) * nn);
    }
    case DicIrrep::Kind::Psi: {
      if (rep.l < 1 || rep.l >= n) throw InputError("psi_l needs 1 <= l < n");
      const Rational l(rep.l);
      const Rational full = (Rational(4) * nn * nn - Rational(1)) / Rational(12);
      const Rational inv8n = one_over(8L * n);
      if (rep.l % 2 == 1) {
        const Rational sum = quarter + l * (l - Rational(2) * nn) / Rational(2) + full;  // −(−1)^l/4 = +1/4
        return -inv8n + sum / (Rational(2) * nn);
      }
      const Rational lp(rep.l / 2);
      const Rational sum = -quarter + Rational(2) * lp * (lp - nn) + full;
      return (printed ? -inv8n : inv8n) + sum / (Rational(2) * nn);
    }
  }
  throw InputError("unknown binary dihedral irrep kind");
}

DynkinData dynkin_data(const CharacterTable& t) { return dynkin_data(t, mckay_graph(t)); }

DynkinData dynkin_data(const CharacterTable& t, const AdjacencyMatrix& a) {
  Matrix reduced;
  for (std::size_t i = 1; i < a.size(); ++i) reduced.emplace_back(a[i].begin() + 1, a[i].end());
  DynkinData d;
  d.type = dynkin_type(t.group->spec());
  d.vertex_count = reduced.size();
  d.edges = static_cast<std::size_t>(edge_count(reduced));
  d.tree = reduced.empty() || (connected(reduced) && d.edges + 1 == d.vertex_count);
  if (!d.tree) throw IntegrityError(t.group->spec().label() + ": resolution graph is not a tree");
  // A tree of v rational curves has Euler characteristic 2v − (v − 1).
  d.euler_char_reduced_cycle = reduced.empty() ? 1 : 2 * static_cast<std::int64_t>(d.vertex_count) -
                                                        static_cast<std::int64_t>(d.edges);
  for (std::size_t i = 1; i < t.irreps.size(); ++i) d.multiplicities.push_back(t.irreps[i].dim);
  return d;
}

Rational ct19_delta_O(const CharacterTable& t) { return ct19_delta_O(t, dynkin_data(t)); }

Rational ct19_delta_O(const CharacterTable& t, const DynkinData& d) {
  return (Rational(static_cast<long>(d.euler_char_reduced_cycle)) - one_over(static_cast<long>(t.order()))) /
         Rational(12);
}

Rational ct19_delta_O(const GroupSpec& spec) { return ct19_delta_O(character_table(spec)); }

AffineCheck mckay_affine_check(const CharacterTable& t) { return mckay_affine_check(t, mckay_graph(t)); }

AffineCheck mckay_affine_check(const CharacterTable& t, const AdjacencyMatrix& a) {
  const GroupSpec& spec = t.group->spec();
  const std::size_t k = a.size();
  AffineCheck out;

  out.symmetric = true;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out.symmetric = out.symmetric && a[i][j] == a[j][i];
  }
  const bool trivial_group = t.order() == 1;
  out.diagonal = true;
  for (std::size_t i = 0; i < k; ++i) out.diagonal = out.diagonal && a[i][i] == (trivial_group ? 2 : 0);

  Matrix cartan(k, std::vector<std::int64_t>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) cartan[i][j] = (i == j ? 2 : 0) - a[i][j];
  }
  out.corank_one = rank(cartan) + 1 == k;
  Matrix minor;
  for (std::size_t i = 1; i < k; ++i) minor.emplace_back(cartan[i].begin() + 1, cartan[i].end());
  // A positive-definite corank-one minor plus a singular matrix forces PSD by interlacing.
  out.positive_semidefinite = positive_definite(minor) && out.corank_one;
  out.dims_in_kernel = true;
  for (std::size_t i = 0; i < k; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < k; ++j) s += cartan[i][j] * t.irreps[j].dim;
    out.dims_in_kernel = out.dims_in_kernel && s == 0;
  }

  const auto deg = degrees(a);
  const bool tree = connected(a) && edge_count(a) + 1 == static_cast<std::int64_t>(k);
  const bool cyclic_like = spec.family == Family::Cyclic || (spec.family == Family::BinaryDihedral && spec.param == 1);
  if (trivial_group) {
    out.expected = "trivial group";
    out.degree_pattern = true;
  } else if (cyclic_like) {
    out.expected = "affine A" + std::to_string(k - 1) + " cycle";
    out.degree_pattern = connected(a) && count_of(deg, 2) == k;
  } else {
    const auto natural = t.natural_index.value_or(0);
    const bool affine_node_on_v = t.natural_index && a[0][natural] == 1 && deg[0] == 1;
    if (spec.family == Family::BinaryDihedral) {
      const int n = spec.param;
      out.expected = "affine D" + std::to_string(n + 2);
      if (n == 2) {
        out.degree_pattern = tree && count_of(deg, 4) == 1 && count_of(deg, 1) == 4;
      } else {
        out.degree_pattern = tree && count_of(deg, 3) == 2 && count_of(deg, 1) == 4 && count_of(deg, 2) == k - 6;
      }
    } else {
      const std::vector<int> arms = spec.family == Family::BinaryTetrahedral   ? std::vector<int>{2, 2, 2}
                                    : spec.family == Family::BinaryOctahedral ? std::vector<int>{1, 3, 3}
                                                                               : std::vector<int>{1, 2, 5};
      out.expected = "affine " + dynkin_type(spec);
      const bool one_branch = tree && count_of(deg, 3) == 1 && count_of(deg, 1) == 3 && count_of(deg, 2) == k - 4;
      if (one_branch) {
        const auto center = static_cast<std::size_t>(std::find(deg.begin(), deg.end(), 3) - deg.begin());
        out.degree_pattern = arm_lengths(a, center) == arms;
      }
    }
    out.degree_pattern = out.degree_pattern && affine_node_on_v;
  }

  std::string degs;
  for (auto d : deg) degs += (degs.empty() ? "" : ",") + std::to_string(d);
  out.detail = "degrees [" + degs + "], rank(2I-A) = " + std::to_string(rank(cartan)) + " of " + std::to_string(k);
  return out;
}

}  // namespace kleinrr
