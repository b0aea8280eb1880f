#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kleinrr/cyclotomic.hpp"

namespace kleinrr {

enum class Family { Cyclic, BinaryDihedral, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral };

/// Names one of the finite subgroups of SL(2) handled here.
///
/// Accepted spellings: Dynkin labels "A<k>" (cyclic of order k+1), "D<k>" with
/// k >= 3 (binary dihedral Dic_{k-2}), "E6", "E7", "E8", and the raw forms
/// "cyclic:<N>" and "dic:<n>".
struct GroupSpec {
  Family family = Family::Cyclic;
  int param = 1;  // N for Cyclic, n for BinaryDihedral; 0 for the exceptional groups

  static GroupSpec cyclic(int n);
  static GroupSpec binary_dihedral(int n);
  static GroupSpec binary_tetrahedral() { return {Family::BinaryTetrahedral, 0}; }
  static GroupSpec binary_octahedral() { return {Family::BinaryOctahedral, 0}; }
  static GroupSpec binary_icosahedral() { return {Family::BinaryIcosahedral, 0}; }

  static GroupSpec parse(std::string_view text);

  /// Dynkin label ("A2", "D4", "E8"); the trivial group prints as "cyclic:1".
  std::string label() const;
  /// Human-readable group name, e.g. "binary dihedral Dic_2".
  std::string description() const;
  std::uint64_t expected_order() const;
  /// Conductor of the field all matrix entries are represented in.
  int ambient_conductor() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// 2x2 matrix over cyclotomic numbers.
class Mat2 {
 public:
  Mat2();
  Mat2(Cyclotomic a, Cyclotomic b, Cyclotomic c, Cyclotomic d) : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static Mat2 identity() { return Mat2(); }
  static Mat2 diagonal(Cyclotomic a, Cyclotomic d) { return Mat2(std::move(a), 0, 0, std::move(d)); }

  const Cyclotomic& operator()(int row, int col) const { return e_[static_cast<std::size_t>(2 * row + col)]; }

  Mat2 operator*(const Mat2& o) const;
  Mat2& operator*=(const Rational& r);
  Mat2 operator-() const;
  Cyclotomic trace() const;
  Cyclotomic det() const;
  /// adj(M) / det(M). Throws DivisionByZero for singular matrices.
  Mat2 inverse() const;
  Mat2 promoted(int conductor) const;

  friend bool operator==(const Mat2& a, const Mat2& b);
  std::size_t hash() const;
  std::string str() const;

 private:
  std::array<Cyclotomic, 4> e_;
};

struct Mat2Hash {
  std::size_t operator()(const Mat2& m) const { return m.hash(); }
};

struct Generator {
  std::string name;    // ASCII symbol used in words, e.g. "sigma"
  std::string symbol;  // display symbol, e.g. "σ"
  Mat2 matrix;
};

/// Finite matrix group given as the closure of its generators.
///
/// Elements are listed in breadth-first generation order starting from the
/// identity (index 0), each stored at the group's ambient conductor.
class Group {
 public:
  const GroupSpec& spec() const { return spec_; }
  std::size_t order() const { return elements_.size(); }
  int conductor() const { return conductor_; }
  const std::vector<Mat2>& elements() const { return elements_; }
  const Mat2& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Generator>& generators() const { return generators_; }

  std::optional<std::size_t> index_of(const Mat2& m) const;
  /// Breadth-first word reaching element i, e.g. "a^2 x"; "1" for the identity.
  std::string word_of(std::size_t i) const;

 private:
  friend Group build_group(const GroupSpec& spec, std::size_t cap);

  GroupSpec spec_;
  int conductor_ = 1;
  std::vector<Generator> generators_;
  std::vector<Mat2> elements_;
  std::vector<std::vector<int>> words_;
  std::unordered_map<Mat2, std::size_t, Mat2Hash> index_;
};

inline constexpr std::size_t kDefaultClosureCap = 10000;

/// Breadth-first closure of a generator set under right multiplication.
/// Throws ConfigError once more than `cap` elements appear.
std::vector<Mat2> close_under_products(std::span<const Mat2> generators, int conductor,
                                       std::size_t cap = kDefaultClosureCap);

/// Generators for spec: diag(ζ_N, ζ_N^{-1}) for cyclic; a = diag(ζ_2n, ζ_2n^{-1}),
/// x = [[0,-1],[1,0]] for Dic_n; σ, τ, μ (and κ) for 2T/2O; σ, τ for 2I.
std::vector<Generator> standard_generators(const GroupSpec& spec);

Group build_group(const GroupSpec& spec, std::size_t cap = kDefaultClosureCap);

struct ConjClass {
  Mat2 representative;
  std::size_t representative_index = 0;
  std::vector<std::size_t> members;  // ascending element indices
  std::size_t size = 0;
  std::uint64_t centralizer_order = 0;
  bool is_identity = false;
};

/// Conjugacy classes: identity first, then by (size, representative index).
std::vector<ConjClass> conjugacy_classes(const Group& g);

/// element index -> class index
std::vector<std::size_t> class_index_map(const Group& g, std::span<const ConjClass> classes);

/// Product of a word such as "sigma^7 tau", "x a", "μ^5", "kappa^-1", "-1".
/// Generator names are matched greedily (ASCII or Greek); "1" is the identity and
/// "-1" the central element −I. Throws InputError on unknown symbols.
Mat2 evaluate_word(const Group& g, std::string_view word);

/// Trace of each class representative, i.e. the character of the defining representation.
std::vector<Cyclotomic> natural_character(const Group& g, std::span<const ConjClass> classes);

}  // namespace kleinrr
