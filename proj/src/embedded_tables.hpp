#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kleinrr/matgroup.hpp"

namespace kleinrr::detail {

struct EmbeddedRow {
  std::string name;
  std::vector<std::string> tokens;
};

/// Character table of an exceptional group as printed, one token per entry.
/// Tokens: integers, "w"/"w2" (ω, ω²), "r2" (√2), "m+"/"m-" ((1 ± √5)/2), each
/// optionally negated.
struct EmbeddedTable {
  std::vector<std::string> class_words;
  std::vector<std::uint64_t> centralizers;
  std::vector<EmbeddedRow> rows;
  std::size_t natural_row = 1;
};

const EmbeddedTable& embedded_table(Family family);

}  // namespace kleinrr::detail
