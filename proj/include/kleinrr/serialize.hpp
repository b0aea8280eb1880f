#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kleinrr/chartab.hpp"
#include "kleinrr/rrcoeff.hpp"
#include "kleinrr/verify.hpp"

namespace kleinrr {

enum class Format { Text, Json, Csv };

/// "text", "json" or "csv"; InputError otherwise.
Format parse_format(std::string_view s);

/// Plain-data view of a character table; values are Cyclotomic::str() strings.
struct TableRecord {
  struct ClassRow {
    std::string rep_word;
    std::uint64_t size = 0;
    std::uint64_t centralizer_order = 0;
    friend bool operator==(const ClassRow&, const ClassRow&) = default;
  };
  struct IrrepRow {
    std::string name;
    int dim = 0;
    std::vector<std::string> values;
    friend bool operator==(const IrrepRow&, const IrrepRow&) = default;
  };
  std::string group;
  std::uint64_t order = 0;
  std::vector<ClassRow> classes;
  std::vector<IrrepRow> irreps;

  friend bool operator==(const TableRecord&, const TableRecord&) = default;
};

TableRecord to_record(const CharacterTable& t);

/// T_i per irrep, with the published value where it differs from the computed one.
struct RRRecord {
  struct Row {
    std::string irrep;
    int dim = 0;
    Rational value;
    std::optional<Rational> printed;  // only when it differs
    std::string printed_as;           // the published literal, possibly unreduced
    std::string erratum;              // documented erratum id, if any
    friend bool operator==(const Row&, const Row&) = default;
  };
  std::string group;
  std::uint64_t order = 0;
  std::vector<Row> rows;

  friend bool operator==(const RRRecord&, const RRRecord&) = default;
};

RRRecord to_record(const CharacterTable& t, const RRCoefficients& rr);

/// JSON is emitted with two-space indentation and a fixed key order.
std::string to_json(const TableRecord& r);
std::string to_json(const RRRecord& r);
std::string to_json(const Report& r);

/// Inverse of to_json; InputError on malformed or incomplete documents.
TableRecord table_from_json(std::string_view text);
RRRecord rr_from_json(std::string_view text);
Report report_from_json(std::string_view text);

/// Aligned table in the layout of the published tables, with ω, √2, μ± symbols.
std::string render_text(const CharacterTable& t);
std::string render_text(const RRRecord& r);
std::string render_text(const Report& r);

std::string render_csv(const TableRecord& r);
std::string render_csv(const RRRecord& r);
std::string render_csv(const Report& r);

}  // namespace kleinrr
