#include "embedded_tables.hpp"

#include "kleinrr/errors.hpp"

namespace kleinrr::detail {

namespace {

// Binary tetrahedral group 2T, rows in the order of the published table.
const EmbeddedTable kTetrahedral{
    {"1", "-1", "tau", "mu", "mu^2", "mu^4", "mu^5"},
    {24, 24, 4, 6, 6, 6, 6},
    {
        {"rho_0", {"1", "1", "1", "1", "1", "1", "1"}},
        {"rho_2", {"2", "-2", "0", "1", "-1", "-1", "1"}},
        {"rho_3", {"3", "3", "-1", "0", "0", "0", "0"}},
        {"rho_2'", {"2", "-2", "0", "w2", "-w", "-w2", "w"}},
        {"rho_1'", {"1", "1", "1", "w2", "w", "w2", "w"}},
        {"rho_2''", {"2", "-2", "0", "w", "-w2", "-w", "w2"}},
        {"rho_1''", {"1", "1", "1", "w", "w2", "w", "w2"}},
    },
    1};

const EmbeddedTable kOctahedral{
    {"1", "-1", "mu", "mu^2", "tau", "kappa", "tau kappa", "kappa^3"},
    {48, 48, 6, 6, 8, 8, 4, 8},
    {
        {"rho_0", {"1", "1", "1", "1", "1", "1", "1", "1"}},
        {"rho_2", {"2", "-2", "1", "-1", "0", "r2", "0", "-r2"}},
        {"rho_3", {"3", "3", "0", "0", "-1", "1", "-1", "1"}},
        {"rho_4", {"4", "-4", "-1", "1", "0", "0", "0", "0"}},
        {"rho_3'", {"3", "3", "0", "0", "-1", "-1", "1", "-1"}},
        {"rho_2'", {"2", "-2", "1", "-1", "0", "-r2", "0", "r2"}},
        {"rho_1'", {"1", "1", "1", "1", "1", "-1", "-1", "-1"}},
        {"rho_2''", {"2", "2", "-1", "-1", "2", "0", "0", "0"}},
    },
    1};

// The last two columns are printed as σ²τ and σ⁷τ; with the generators used
// here those words are order-10 elements, so the columns (|C| = 6, natural
// trace -1 and 1) are located by σ^6τ and στ instead.
const EmbeddedTable kIcosahedral{
    {"1", "-1", "sigma", "sigma^2", "sigma^3", "sigma^4", "tau", "sigma^6 tau", "sigma tau"},
    {120, 120, 10, 10, 10, 10, 4, 6, 6},
    {
        {"rho_0", {"1", "1", "1", "1", "1", "1", "1", "1", "1"}},
        {"rho_2", {"2", "-2", "m+", "-m-", "m-", "-m+", "0", "-1", "1"}},
        {"rho_3", {"3", "3", "m+", "m-", "m-", "m+", "-1", "0", "0"}},
        {"rho_4", {"4", "-4", "1", "-1", "1", "-1", "0", "1", "-1"}},
        {"rho_5", {"5", "5", "0", "0", "0", "0", "1", "-1", "-1"}},
        {"rho_6", {"6", "-6", "-1", "1", "-1", "1", "0", "0", "0"}},
        {"rho_4'", {"4", "4", "-1", "-1", "-1", "-1", "0", "1", "1"}},
        {"rho_2'", {"2", "-2", "m-", "-m+", "m+", "-m-", "0", "-1", "1"}},
        {"rho_3''", {"3", "3", "m-", "m+", "m+", "m-", "-1", "0", "0"}},
    },
    1};

}  // namespace

const EmbeddedTable& embedded_table(Family family) {
  switch (family) {
    case Family::BinaryTetrahedral:
      return kTetrahedral;
    case Family::BinaryOctahedral:
      return kOctahedral;
    case Family::BinaryIcosahedral:
      return kIcosahedral;
    default:
      throw ContractError("no embedded character table for this family");
  }
}

}  // namespace kleinrr::detail
