#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kleinrr/cyclotomic.hpp"
#include "kleinrr/matgroup.hpp"

namespace kleinrr {

/// A function on conjugacy classes, indexed like CharacterTable::classes.
using ClassFunction = std::vector<Cyclotomic>;

struct Irrep {
  std::string name;
  int dim = 1;
  ClassFunction values;
  std::vector<std::string> display;  // per-class rendering for aligned text tables
  ClassFunction dual;                 // |c| conj(values[c]); ⟨f, χ⟩ = Σ_c f(c) dual[c] / |G|
  /// (1/φ(M)) Tr(ζ_M^e dual[c]) / |G| at c·M + e, M = CharacterTable::value_conductor.
  std::vector<Rational> functional;
};

/// Integer multiplicity vector over the irreps of a table (a class in K(BG)).
/// Entries may be negative.
struct KClass {
  std::vector<std::int64_t> multiplicities;

  std::size_t size() const { return multiplicities.size(); }
  std::int64_t operator[](std::size_t i) const { return multiplicities[i]; }
  friend bool operator==(const KClass&, const KClass&) = default;
};

struct CharacterTable {
  std::shared_ptr<const Group> group;
  std::vector<ConjClass> classes;
  std::vector<std::string> class_words;  // representative word per class, parseable by evaluate_word
  std::vector<Irrep> irreps;
  /// Row of the defining 2-dimensional representation, when it is irreducible
  /// (binary groups). Cyclic groups have no such row.
  std::optional<std::size_t> natural_index;
  /// Trace of the defining representation on each class.
  ClassFunction natural;
  /// Class indices in presentation order for text output; the published
  /// column order for exceptional groups, the identity otherwise.
  std::vector<std::size_t> column_order;
  /// lcm of the conductors of all character values.
  int value_conductor = 1;

  std::size_t order() const { return group->order(); }
  std::size_t size() const { return irreps.size(); }

  /// Looks up an irrep by exact name, by the part before '(' (e.g. "psi_2"),
  /// "V" for the natural row, or "trivial". Throws InputError.
  std::size_t irrep_index(std::string_view name) const;
  /// Display form of a representative word, e.g. "σ^6τ".
  std::string class_display(std::size_t c) const;
};

/// Irreducible characters of g.
///
/// Cyclic groups: χ^j(g^k) = ζ_N^{jk}, j = 0..N-1. Binary dihedral groups: four
/// linear characters rho_0, rho_a, rho_x, rho_xa fixed by the images of a and x,
/// then psi_l (l = 1..n-1) with psi_l(a^k) = ζ^{lk} + ζ^{-lk} and zero on the
/// x-classes. Exceptional groups: embedded tables, whose columns are located by
/// evaluating representative words. Embedded tables are rejected with an
/// IntegrityError unless all orthogonality relations hold.
CharacterTable character_table(std::shared_ptr<const Group> g);
CharacterTable character_table(const GroupSpec& spec);

/// (1/|G|) Σ_c |c| f(c) conj(h(c)). Throws InputError on length mismatch.
Cyclotomic inner_product(const CharacterTable& t, const ClassFunction& f, const ClassFunction& h);

/// ⟨f, χ_irrep⟩ using the table's precomputed duals.
Cyclotomic multiplicity(const CharacterTable& t, const ClassFunction& f, std::size_t irrep);

/// Multiplicities ⟨f, χ_i⟩; InputError unless f is a virtual character.
///
/// Candidates are (1/φ(M)) Tr ⟨f, χ_i⟩, which equals ⟨f, χ_i⟩ whenever that is
/// rational; they are certified by exact reconstruction Σ m_i χ_i = f, which
/// by linear independence of the irreducible characters pins down every one.
KClass decompose(const CharacterTable& t, const ClassFunction& f);

/// Σ m_i χ_i.
ClassFunction class_function(const CharacterTable& t, const KClass& k);

ClassFunction pointwise_product(const ClassFunction& f, const ClassFunction& h);

/// A[i][j] = ⟨χ_V χ_i, χ_j⟩.
std::vector<std::vector<std::int64_t>> mckay_graph(const CharacterTable& t);

struct TableCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Structural checks: irrep count, Σ dim² = |G|, row and column orthogonality,
/// vanishing of the regular character off the identity, identity column = dim,
/// and agreement of the natural row with matrix traces.
std::vector<TableCheck> check_table(const CharacterTable& t);

}  // namespace kleinrr
