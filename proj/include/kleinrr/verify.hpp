#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kleinrr/matgroup.hpp"
#include "kleinrr/rational.hpp"

namespace kleinrr {

enum class Source { PaperTable, ClosedForm, Identity, Oracle };
enum class Verdict { Match, Mismatch, PaperErratum };

std::string_view to_string(Source s);
std::string_view to_string(Verdict v);
/// InputError on unknown names.
Source parse_source(std::string_view s);
Verdict parse_verdict(std::string_view s);

struct CheckResult {
  std::string name;      // e.g. "element-oracle"
  std::string group;     // GroupSpec label
  std::string subject;   // irrep name, class word, or "*" for whole-group checks
  std::string computed;  // exact rendering, fractions as p/q
  std::string expected;
  Source source = Source::Identity;
  Verdict verdict = Verdict::Match;
  std::string erratum;   // id of the documented erratum behind a paper-erratum verdict
  std::string note;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct Report {
  std::vector<std::string> groups;
  std::vector<CheckResult> checks;

  std::size_t count(Verdict v) const;
  /// No verdict is a mismatch; documented errata do not count as failures.
  bool ok() const { return count(Verdict::Mismatch) == 0; }

  friend bool operator==(const Report&, const Report&) = default;
};

/// A documented slip in the published formulas or tables.
struct Erratum {
  std::string id;
  std::string description;
};

const std::vector<Erratum>& known_errata();

/// Id of the documented erratum for a published table entry, or empty.
std::string table_erratum(const GroupSpec& spec, std::string_view irrep);

struct PrintedCoefficient {
  std::string irrep;
  Rational value;
  std::string literal;  // as published, e.g. "-26/288"
};

/// Published coefficients of the exceptional groups in table row order;
/// empty for the other families.
std::vector<PrintedCoefficient> printed_coefficients(const GroupSpec& spec);

/// Every cross-check for one group. Failures are itemized; only an internal
/// inconsistency (for instance an irrational coefficient) throws.
Report verify_group(const GroupSpec& spec);

struct SweepBounds {
  int max_cyclic = 50;    // Cyclic(N) for 1 ≤ N ≤ max_cyclic
  int max_dicyclic = 25;  // Dic_n for 1 ≤ n ≤ max_dicyclic
};

/// Cyclic groups, then binary dihedral groups, then E6, E7, E8, each in
/// increasing order. Errata are merged by id: the first witness is kept and
/// later witnesses are listed in its note.
Report verify_all(const SweepBounds& bounds = {});

/// Keeps the first paper-erratum entry per erratum id; later ones are folded
/// into its note. Order of the remaining checks is preserved.
void merge_errata(Report& report);

}  // namespace kleinrr
