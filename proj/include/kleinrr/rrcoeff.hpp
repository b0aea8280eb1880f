#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kleinrr/chartab.hpp"
#include "kleinrr/matgroup.hpp"
#include "kleinrr/rational.hpp"

namespace kleinrr {

/// T_i per irrep, positionally aligned with the table's irreps.
struct RRCoefficients {
  GroupSpec group;
  std::vector<Rational> values;

  std::size_t size() const { return values.size(); }
  const Rational& operator[](std::size_t i) const { return values[i]; }
};

/// T_i = Σ_{c ≠ 1} χ_i(c) / (|C_G(c)| (2 − χ_V(c))), evaluated exactly and
/// certified rational. IntegrityError if some 2 − χ_V(c) vanishes off the
/// identity or a sum fails to be rational.
RRCoefficients rr_coefficients(const CharacterTable& t);

/// Element-wise oracle: Σ_{g ≠ 1} χ_i(g) / (|G| (2 − tr g)), one inverse per
/// group element, character values looked up through each element's class.
RRCoefficients element_sum_coefficients(const CharacterTable& t);

/// Σ a_i T_i. InputError on length mismatch.
Rational delta(const RRCoefficients& coeffs, const KClass& k);

/// Class of the derived fibre of O_p ⊗ ρ_i: decompose(2 χ_i − χ_V χ_i).
KClass skyscraper_class(const CharacterTable& t, std::size_t irrep);

struct SkyscraperDelta {
  Rational value;
  Rational expected;  // 1 − 1/|G| for the trivial irrep, −dim/|G| otherwise
  bool holds() const { return value == expected; }
};

SkyscraperDelta delta_skyscraper(const CharacterTable& t, const RRCoefficients& coeffs, std::size_t irrep);

/// f(j)/N with f(x) = x(x − N)/2 + (N² − 1)/12. InputError unless 0 ≤ j < N.
Rational closed_form_A(int n, int j);

/// Irrep of Dic_n in table order: rho_0, rho_a, rho_x, rho_xa, then psi_l.
struct DicIrrep {
  enum class Kind { Trivial, SignA, SignX, SignXA, Psi };
  Kind kind = Kind::Trivial;
  int l = 0;  // psi index, 1..n−1

  /// Accepts "rho_0", "rho_a", "rho_x", "rho_xa", "psi_<l>" and full table names.
  static DicIrrep parse(std::string_view name);
  /// Quaternionic for odd l, dihedral with index l/2 for even l.
  bool dihedral() const { return kind == Kind::Psi && l % 2 == 0; }
};

enum class ConstantVariant { Corrected, Printed };

/// Closed form for T of a Dic_n irrep. The corrected variant uses the
/// constants χ(−I)/(16n) for every irrep; the printed variant reproduces the
/// published constants −1/(16n) for rho_a, rho_xa and −1/(8n) for dihedral psi.
/// InputError when n < 1 or l is out of range.
Rational closed_form_D(int n, const DicIrrep& rep, ConstantVariant variant = ConstantVariant::Corrected);

/// Dynkin data of the resolution graph: the McKay graph without the trivial vertex.
struct DynkinData {
  std::string type;  // e.g. "A3", "D4", "E8"
  std::size_t vertex_count = 0;
  std::size_t edges = 0;     // with multiplicity
  bool tree = false;         // connected and edges = vertex_count − 1 (vacuous when empty)
  std::int64_t euler_char_reduced_cycle = 1;  // vertex_count + 1
  std::vector<int> multiplicities;            // dim ρ_i of the non-trivial irreps
};

using AdjacencyMatrix = std::vector<std::vector<std::int64_t>>;

DynkinData dynkin_data(const CharacterTable& t);
/// As above with a precomputed mckay_graph(t).
DynkinData dynkin_data(const CharacterTable& t, const AdjacencyMatrix& mckay);

/// (1/12)(χ_top(C_red) − 1/|G|), with χ_top from the McKay graph.
Rational ct19_delta_O(const CharacterTable& t);
Rational ct19_delta_O(const CharacterTable& t, const DynkinData& d);
Rational ct19_delta_O(const GroupSpec& spec);

/// Structural check that the McKay graph is the expected affine ADE diagram.
struct AffineCheck {
  bool symmetric = false;
  bool diagonal = false;          // zero, or [2] for the trivial group
  bool corank_one = false;        // 2I − A singular of corank 1
  bool positive_semidefinite = false;
  bool dims_in_kernel = false;    // (2I − A) · dims = 0
  bool degree_pattern = false;    // degrees and branch lengths of the expected diagram
  std::string expected;           // e.g. "affine E8"
  std::string detail;

  bool passed() const {
    return symmetric && diagonal && corank_one && positive_semidefinite && dims_in_kernel && degree_pattern;
  }
};

/// The trivial group is degenerate: χ_V = 2·trivial, so A = [2] and the
/// degree pattern is vacuous.
AffineCheck mckay_affine_check(const CharacterTable& t);
AffineCheck mckay_affine_check(const CharacterTable& t, const AdjacencyMatrix& mckay);

}  // namespace kleinrr
