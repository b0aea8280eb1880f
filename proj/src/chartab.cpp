#include "kleinrr/chartab.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "embedded_tables.hpp"
#include "kleinrr/errors.hpp"

namespace kleinrr {

namespace {

struct TokenValue {
  Cyclotomic value;
  std::string display;
};

TokenValue token_value(std::string_view tok) {
  const bool negative = tok.starts_with('-');
  const std::string_view core = negative ? tok.substr(1) : tok;
  TokenValue out;
  if (core == "w") {
    out = {root_of_unity(3, 1), "ω"};
  } else if (core == "w2") {
    out = {root_of_unity(3, 2), "ω²"};
  } else if (core == "r2") {
    out = {root_of_unity(8, 1) + root_of_unity(8, 7), "√2"};
  } else if (core == "m+" || core == "m-") {
    const Cyclotomic sqrt5 = root_of_unity(5, 1) - root_of_unity(5, 2) - root_of_unity(5, 3) + root_of_unity(5, 4);
    const Cyclotomic s = core == "m+" ? sqrt5 : -sqrt5;
    out = {(Cyclotomic(1) + s) * Rational(1, 2), core == "m+" ? "μ⁺" : "μ⁻"};
  } else {
    const Rational r = Rational::parse(core);
    out = {Cyclotomic(r), r.str()};
  }
  if (negative) {
    out.value = -out.value;
    out.display = out.display == "0" ? "0" : "-" + out.display;
  }
  return out;
}

/// Class index hit by each word; every class must be hit exactly once.
std::vector<std::size_t> locate_words(const Group& g, const std::vector<ConjClass>& classes,
                                      const std::vector<std::string>& words) {
  if (words.size() != classes.size()) {
    throw IntegrityError(g.spec().label() + ": " + std::to_string(words.size()) + " representative words for " +
                         std::to_string(classes.size()) + " classes");
  }
  const auto map = class_index_map(g, classes);
  std::vector<std::size_t> hit(words.size());
  std::vector<int> owner(classes.size(), -1);
  for (std::size_t w = 0; w < words.size(); ++w) {
    const auto idx = g.index_of(evaluate_word(g, words[w]));
    const std::size_t c = map[*idx];
    if (owner[c] >= 0) {
      throw IntegrityError(g.spec().label() + ": words '" + words[static_cast<std::size_t>(owner[c])] + "' and '" +
                           words[w] + "' land in the same conjugacy class");
    }
    owner[c] = static_cast<int>(w);
    hit[w] = c;
  }
  return hit;
}

std::string root_display(int n, long k) {
  k = ((k % n) + n) % n;
  if (k == 0) return "1";
  if (2 * k == n) return "-1";
  return "z" + std::to_string(n) + "^" + std::to_string(k);
}

std::string root_pair_display(int n, long k) {
  k = ((k % n) + n) % n;
  if (k == 0) return "2";
  if (2 * k == n) return "-2";
  return "z" + std::to_string(n) + "^" + std::to_string(k) + "+z" + std::to_string(n) + "^" + std::to_string(n - k);
}

void build_cyclic(CharacterTable& t) {
  const int n = t.group->spec().param;
  std::vector<std::string> words;
  for (int k = 0; k < n; ++k) words.push_back(k == 0 ? "1" : (k == 1 ? "g" : "g^" + std::to_string(k)));
  const auto loc = locate_words(*t.group, t.classes, words);
  t.class_words.assign(t.classes.size(), "");
  for (int k = 0; k < n; ++k) t.class_words[loc[static_cast<std::size_t>(k)]] = words[static_cast<std::size_t>(k)];
  for (int j = 0; j < n; ++j) {
    Irrep r{"chi^" + std::to_string(j), 1, ClassFunction(t.classes.size()), std::vector<std::string>(t.classes.size()), {}, {}};
    for (int k = 0; k < n; ++k) {
      const std::size_t c = loc[static_cast<std::size_t>(k)];
      r.values[c] = root_of_unity(n, static_cast<long>(j) * k);
      r.display[c] = root_display(n, static_cast<long>(j) * k);
    }
    t.irreps.push_back(std::move(r));
  }
}

void build_dicyclic(CharacterTable& t) {
  const int n = t.group->spec().param;
  const int n2 = 2 * n;
  struct ClassKind {
    bool in_x_coset;
    int k;  // a^k, or x a^k for the x-cosets
  };
  std::vector<std::string> words{"1", "-1"};
  std::vector<ClassKind> kinds{{false, 0}, {false, n}};
  for (int k = 1; k < n; ++k) {
    words.push_back(k == 1 ? "a" : "a^" + std::to_string(k));
    kinds.push_back({false, k});
  }
  words.emplace_back("x");
  kinds.push_back({true, 0});
  words.emplace_back("x a");
  kinds.push_back({true, 1});
  const auto loc = locate_words(*t.group, t.classes, words);
  t.class_words.assign(t.classes.size(), "");
  for (std::size_t w = 0; w < words.size(); ++w) t.class_words[loc[w]] = words[w];

  // Linear characters: a ↦ s_a = ±1, x ↦ s_x with s_x² = s_a^n. Ordered by the
  // branch of s_x first, then s_a, giving rho_0, rho_a, rho_x, rho_xa.
  const Cyclotomic i4 = root_of_unity(4, 1);
  struct Linear {
    const char* name;
    int a_sign;
    Cyclotomic x_image;
    std::string x_display;
  };
  auto x_root = [&](int a_sign, bool first) -> std::pair<Cyclotomic, std::string> {
    const bool square_is_one = a_sign == 1 || n % 2 == 0;
    if (square_is_one) return {Cyclotomic(first ? 1 : -1), first ? "1" : "-1"};
    return {first ? i4 : -i4, first ? "i" : "-i"};
  };
  std::vector<Linear> linear;
  for (auto [name, a_sign, first] : {std::tuple{"rho_0", 1, true}, std::tuple{"rho_a", -1, true},
                                     std::tuple{"rho_x", 1, false}, std::tuple{"rho_xa", -1, false}}) {
    auto [img, disp] = x_root(a_sign, first);
    linear.push_back({name, a_sign, img, disp});
  }
  for (const auto& lin : linear) {
    Irrep r{lin.name, 1, ClassFunction(t.classes.size()), std::vector<std::string>(t.classes.size()), {}, {}};
    for (std::size_t w = 0; w < words.size(); ++w) {
      const auto& kind = kinds[w];
      const int a_part = (lin.a_sign == -1 && kind.k % 2 != 0) ? -1 : 1;
      Cyclotomic v = Cyclotomic(a_part);
      std::string d = a_part == 1 ? "1" : "-1";
      if (kind.in_x_coset) {
        v = lin.x_image * Rational(a_part);
        d = a_part == 1 ? lin.x_display : (lin.x_display.starts_with('-') ? lin.x_display.substr(1) : "-" + lin.x_display);
      }
      r.values[loc[w]] = v;
      r.display[loc[w]] = d;
    }
    t.irreps.push_back(std::move(r));
  }
  for (int l = 1; l < n; ++l) {
    const std::string kind = l % 2 == 1 ? "quaternionic,l=" + std::to_string(l) : "dihedral,l=" + std::to_string(l / 2);
    Irrep r{"psi_" + std::to_string(l) + "(" + kind + ")", 2, ClassFunction(t.classes.size()),
            std::vector<std::string>(t.classes.size()), {}, {}};
    for (std::size_t w = 0; w < words.size(); ++w) {
      const auto& ck = kinds[w];
      if (ck.in_x_coset) {
        r.values[loc[w]] = Cyclotomic(0);
        r.display[loc[w]] = "0";
      } else {
        const long e = static_cast<long>(l) * ck.k;
        r.values[loc[w]] = root_of_unity(n2, e) + root_of_unity(n2, -e);
        r.display[loc[w]] = root_pair_display(n2, e);
      }
    }
    t.irreps.push_back(std::move(r));
  }
  if (n >= 2) t.natural_index = 4;  // psi_1; for n = 1, V = rho_a + rho_xa
}

void build_exceptional(CharacterTable& t) {
  const auto& data = detail::embedded_table(t.group->spec().family);
  const auto loc = locate_words(*t.group, t.classes, data.class_words);
  t.class_words.assign(t.classes.size(), "");
  for (std::size_t w = 0; w < data.class_words.size(); ++w) {
    const std::size_t c = loc[w];
    t.class_words[c] = data.class_words[w];
    if (t.classes[c].centralizer_order != data.centralizers[w]) {
      throw IntegrityError(t.group->spec().label() + ": class of '" + data.class_words[w] + "' has centralizer order " +
                           std::to_string(t.classes[c].centralizer_order) + ", table says " +
                           std::to_string(data.centralizers[w]));
    }
  }
  for (const auto& row : data.rows) {
    Irrep r{row.name, 0, ClassFunction(t.classes.size()), std::vector<std::string>(t.classes.size()), {}, {}};
    for (std::size_t w = 0; w < row.tokens.size(); ++w) {
      auto tv = token_value(row.tokens[w]);
      r.values[loc[w]] = std::move(tv.value);
      r.display[loc[w]] = std::move(tv.display);
    }
    r.dim = static_cast<int>(row.tokens.front() == "1" ? 1 : std::stoi(row.tokens.front()));
    t.irreps.push_back(std::move(r));
  }
  t.natural_index = data.natural_row;
  t.column_order = loc;
}

void require(const std::vector<TableCheck>& checks, const std::string& label) {
  for (const auto& c : checks) {
    if (!c.passed) throw IntegrityError(label + ": character table check '" + c.name + "' failed: " + c.detail);
  }
}

void attach_duals(CharacterTable& t) {
  int m = 1;
  for (auto& r : t.irreps) {
    r.dual.clear();
    r.dual.reserve(r.values.size());
    for (std::size_t c = 0; c < r.values.size(); ++c) {
      r.dual.push_back(r.values[c].conjugate() * Rational(static_cast<long>(t.classes[c].size)));
      m = std::lcm(m, r.values[c].conductor());
    }
  }
  t.value_conductor = m;
  const auto& field = detail::field_for(m);
  const auto mm = static_cast<std::size_t>(m);
  const Rational scale(1LL, static_cast<long long>(t.order()) * field.degree);
  for (auto& r : t.irreps) {
    r.functional.assign(t.classes.size() * mm, Rational());
    for (std::size_t c = 0; c < t.classes.size(); ++c) {
      const auto step = static_cast<std::size_t>(m / r.dual[c].conductor());
      r.dual[c].for_each_term([&](int ed, const Rational& b) {
        const Rational w = b * scale;
        for (std::size_t e = 0; e < mm; ++e) {
          const long trace = field.traces[(e + static_cast<std::size_t>(ed) * step) % mm];
          if (trace != 0) r.functional[c * mm + e].add_product(w, Rational(trace));
        }
      });
    }
  }
}

// (1/φ(M)) Tr ⟨f, χ⟩ over Q(ζ_M), which is ⟨f, χ⟩ itself when that is rational.
Rational traced_multiplicity(const CharacterTable& t, const Irrep& r, const ClassFunction& f) {
  const int m = t.value_conductor;
  bool fits = true;
  for (const auto& x : f) fits = fits && m % x.conductor() == 0;
  if (fits) {
    const auto mm = static_cast<std::size_t>(m);
    Rational acc;
    for (std::size_t c = 0; c < f.size(); ++c) {
      const auto step = static_cast<std::size_t>(m / f[c].conductor());
      f[c].for_each_term([&](int e, const Rational& a) {
        const Rational& w = r.functional[c * mm + static_cast<std::size_t>(e) * step];
        if (!w.is_zero()) acc.add_product(a, w);
      });
    }
    return acc;
  }
  // f lives in a larger field: take the trace there, term by term.
  int big = m;
  for (const auto& x : f) big = std::lcm(big, x.conductor());
  const auto& field = detail::field_for(big);
  Rational acc, term;
  for (std::size_t c = 0; c < f.size(); ++c) {
    const long sf = big / f[c].conductor();
    const long sd = big / r.dual[c].conductor();
    f[c].for_each_term([&](int ef, const Rational& a) {
      r.dual[c].for_each_term([&](int ed, const Rational& b) {
        const long trace = field.traces[static_cast<std::size_t>((ef * sf + ed * sd) % big)];
        if (trace == 0) return;
        term = b;
        term *= Rational(trace);
        acc.add_product(a, term);
      });
    });
  }
  acc /= Rational(static_cast<long long>(t.order()) * field.degree);
  return acc;
}

}  // namespace

std::size_t CharacterTable::irrep_index(std::string_view name) const {
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    if (irreps[i].name == name) return i;
  }
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    const auto& n = irreps[i].name;
    const auto paren = n.find('(');
    if (paren != std::string::npos && std::string_view(n).substr(0, paren) == name) return i;
  }
  if (name == "V" && natural_index) return *natural_index;
  if (name == "trivial") return 0;
  throw InputError("no irrep named '" + std::string(name) + "' in " + group->spec().label());
}

std::string CharacterTable::class_display(std::size_t c) const {
  std::string out;
  const std::string& w = class_words.at(c);
  std::size_t pos = 0;
  while (pos < w.size()) {
    if (w[pos] == ' ') {
      ++pos;
      continue;
    }
    bool replaced = false;
    for (const auto& gen : group->generators()) {
      if (w.compare(pos, gen.name.size(), gen.name) == 0) {
        out += gen.symbol;
        pos += gen.name.size();
        replaced = true;
        break;
      }
    }
    if (!replaced) out += w[pos++];
  }
  return out;
}

CharacterTable character_table(std::shared_ptr<const Group> g) {
  CharacterTable t;
  t.group = std::move(g);
  t.classes = conjugacy_classes(*t.group);
  t.natural = natural_character(*t.group, t.classes);
  switch (t.group->spec().family) {
    case Family::Cyclic:
      build_cyclic(t);
      break;
    case Family::BinaryDihedral:
      build_dicyclic(t);
      break;
    default:
      build_exceptional(t);
      attach_duals(t);
      // Embedded data is trusted only once every relation holds.
      require(check_table(t), t.group->spec().label());
      return t;
  }
  attach_duals(t);
  t.column_order.resize(t.classes.size());
  std::iota(t.column_order.begin(), t.column_order.end(), std::size_t{0});
  if (t.irreps.size() != t.classes.size()) {
    throw IntegrityError(t.group->spec().label() + ": irrep count differs from class count");
  }
  if (t.natural_index && t.irreps[*t.natural_index].values != t.natural) {
    throw IntegrityError(t.group->spec().label() + ": natural row disagrees with matrix traces");
  }
  return t;
}

CharacterTable character_table(const GroupSpec& spec) {
  return character_table(std::make_shared<const Group>(build_group(spec)));
}

Cyclotomic inner_product(const CharacterTable& t, const ClassFunction& f, const ClassFunction& h) {
  if (f.size() != t.classes.size() || h.size() != t.classes.size()) {
    throw InputError("class function length does not match the number of classes (" +
                     std::to_string(t.classes.size()) + ")");
  }
  ClassFunction weighted;
  weighted.reserve(h.size());
  for (std::size_t c = 0; c < h.size(); ++c) {
    weighted.push_back(h[c].conjugate() * Rational(static_cast<long>(t.classes[c].size)));
  }
  return dot(f, weighted) * Rational(1LL, static_cast<long long>(t.order()));
}

Cyclotomic multiplicity(const CharacterTable& t, const ClassFunction& f, std::size_t irrep) {
  if (irrep >= t.irreps.size()) throw InputError("irrep index out of range");
  const auto& dual = t.irreps[irrep].dual;
  if (f.size() != dual.size()) {
    throw InputError("class function length does not match the number of classes (" +
                     std::to_string(dual.size()) + ")");
  }
  return dot(f, dual) * Rational(1LL, static_cast<long long>(t.order()));
}

KClass decompose(const CharacterTable& t, const ClassFunction& f) {
  if (f.size() != t.classes.size()) {
    throw InputError("class function length does not match the number of classes (" +
                     std::to_string(t.classes.size()) + ")");
  }
  KClass k;
  k.multiplicities.reserve(t.irreps.size());
  for (std::size_t i = 0; i < t.irreps.size(); ++i) {
    const auto& r = t.irreps[i];
    const Rational value = traced_multiplicity(t, r, f);
    if (!value.is_integer()) {
      throw InputError("not a virtual character: multiplicity of " + r.name + " is " + value.str());
    }
    const Integer v = value.numerator();
    if (!v.fits_slong_p()) throw InputError("multiplicity of " + r.name + " does not fit in 64 bits");
    k.multiplicities.push_back(v.get_si());
  }
  if (class_function(t, k) != f) throw InputError("not a virtual character: decomposition does not reconstruct it");
  return k;
}

ClassFunction class_function(const CharacterTable& t, const KClass& k) {
  if (k.size() != t.irreps.size()) {
    throw InputError("class has " + std::to_string(k.size()) + " entries, table has " +
                     std::to_string(t.irreps.size()) + " irreps");
  }
  ClassFunction out(t.classes.size(), Cyclotomic(0));
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    const Rational m(static_cast<long>(k[i]));
    for (std::size_t c = 0; c < out.size(); ++c) out[c] += t.irreps[i].values[c] * m;
  }
  return out;
}

ClassFunction pointwise_product(const ClassFunction& f, const ClassFunction& h) {
  if (f.size() != h.size()) throw InputError("pointwise product of class functions with different lengths");
  ClassFunction out;
  out.reserve(f.size());
  for (std::size_t c = 0; c < f.size(); ++c) out.push_back(f[c] * h[c]);
  return out;
}

std::vector<std::vector<std::int64_t>> mckay_graph(const CharacterTable& t) {
  std::vector<std::vector<std::int64_t>> adj;
  adj.reserve(t.irreps.size());
  for (const auto& r : t.irreps) adj.push_back(decompose(t, pointwise_product(t.natural, r.values)).multiplicities);
  return adj;
}

std::vector<TableCheck> check_table(const CharacterTable& t) {
  std::vector<TableCheck> out;
  const std::size_t k = t.irreps.size();
  const std::size_t nc = t.classes.size();
  const auto order = static_cast<long>(t.order());

  out.push_back({"irrep-count", k == nc, std::to_string(k) + " irreps, " + std::to_string(nc) + " classes"});
  if (k != nc) return out;

  std::size_t identity = 0;
  while (identity < nc && !t.classes[identity].is_identity) ++identity;

  long dim_sq = 0;
  std::string bad_identity;
  for (const auto& r : t.irreps) {
    dim_sq += static_cast<long>(r.dim) * r.dim;
    if (r.values[identity] != Cyclotomic(r.dim)) bad_identity = r.name;
  }
  out.push_back({"dimension-sum", dim_sq == order, "sum dim^2 = " + std::to_string(dim_sq)});
  out.push_back({"identity-column", bad_identity.empty(), bad_identity.empty() ? "" : "row " + bad_identity});

  std::vector<ClassFunction> conj(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& v : t.irreps[i].values) conj[i].push_back(v.conjugate());
  }

  std::vector<Cyclotomic> weights;
  for (const auto& cl : t.classes) weights.emplace_back(Rational(static_cast<long>(cl.size)));
  std::string row_fail;
  for (std::size_t i = 0; i < k && row_fail.empty(); ++i) {
    ClassFunction weighted = t.irreps[i].values;
    for (std::size_t c = 0; c < nc; ++c) weighted[c] *= weights[c].to_rational();
    for (std::size_t j = i; j < k; ++j) {
      if (dot(weighted, conj[j]) != Cyclotomic(i == j ? order : 0)) {
        row_fail = t.irreps[i].name + " vs " + t.irreps[j].name;
        break;
      }
    }
  }
  out.push_back({"row-orthogonality", row_fail.empty(), row_fail});

  std::vector<ClassFunction> columns(nc), conj_columns(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t i = 0; i < k; ++i) {
      columns[c].push_back(t.irreps[i].values[c]);
      conj_columns[c].push_back(conj[i][c]);
    }
  }
  std::string col_fail;
  for (std::size_t c = 0; c < nc && col_fail.empty(); ++c) {
    for (std::size_t d = c; d < nc; ++d) {
      const long expect = c == d ? static_cast<long>(t.classes[c].centralizer_order) : 0;
      if (dot(columns[c], conj_columns[d]) != Cyclotomic(expect)) {
        col_fail = "classes " + t.class_words[c] + " / " + t.class_words[d];
        break;
      }
    }
  }
  out.push_back({"column-orthogonality", col_fail.empty(), col_fail});

  std::string reg_fail;
  for (std::size_t c = 0; c < nc; ++c) {
    if (c == identity) continue;
    std::vector<Cyclotomic> dims;
    for (const auto& r : t.irreps) dims.emplace_back(r.dim);
    if (!dot(columns[c], dims).is_zero()) reg_fail = "class " + t.class_words[c];
  }
  out.push_back({"regular-character", reg_fail.empty(), reg_fail});

  const auto traces = natural_character(*t.group, t.classes);
  bool natural_ok = traces == t.natural;
  if (t.natural_index) natural_ok = natural_ok && t.irreps[*t.natural_index].values == traces;
  out.push_back({"natural-row", natural_ok,
                 t.natural_index ? "row " + t.irreps[*t.natural_index].name : "defining representation is reducible"});
  return out;
}

}  // namespace kleinrr
