// kleinrr: character tables, Riemann–Roch coefficients and δ for ADE groups.
//
// Exit codes: 0 ok, 1 verification mismatch or internal inconsistency,
// 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "kleinrr/chartab.hpp"
#include "kleinrr/errors.hpp"
#include "kleinrr/rrcoeff.hpp"
#include "kleinrr/serialize.hpp"
#include "kleinrr/verify.hpp"

namespace {

using namespace kleinrr;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string group;
  std::string format = "text";
  std::string a;
  std::string klass;
  bool all = false;
  int max_a = 50;
  int max_d = 25;
};

std::vector<std::int64_t> parse_csv_ints(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string item = text.substr(pos, comma - pos);
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("--a expects comma-separated integers, got '" + item + "'");
    }
    pos = comma + 1;
  }
  return out;
}

int cmd_chartab(const Options& o) {
  const CharacterTable t = character_table(GroupSpec::parse(o.group));
  switch (parse_format(o.format)) {
    case Format::Text:
      std::cout << render_text(t);
      break;
    case Format::Json:
      std::cout << to_json(to_record(t));
      break;
    case Format::Csv:
      std::cout << render_csv(to_record(t));
      break;
  }
  return 0;
}

int cmd_rr(const Options& o) {
  const Format f = parse_format(o.format);
  const CharacterTable t = character_table(GroupSpec::parse(o.group));
  const RRRecord r = to_record(t, rr_coefficients(t));
  std::cout << (f == Format::Text ? render_text(r) : f == Format::Json ? to_json(r) : render_csv(r));
  return 0;
}

int cmd_delta(const Options& o) {
  const Format f = parse_format(o.format);
  if (o.a.empty() == o.klass.empty()) throw InputError("delta needs exactly one of --a or --class");
  const CharacterTable t = character_table(GroupSpec::parse(o.group));
  const RRCoefficients rr = rr_coefficients(t);
  KClass k;
  if (!o.a.empty()) {
    k.multiplicities = parse_csv_ints(o.a);
    if (k.size() != t.size()) {
      throw InputError("--a has " + std::to_string(k.size()) + " entries; " + t.group->spec().label() + " has " +
                       std::to_string(t.size()) + " irreps");
    }
  } else {
    constexpr std::string_view prefix = "skyscraper:";
    if (!o.klass.starts_with(prefix)) throw InputError("--class expects skyscraper:<irrep>");
    k = skyscraper_class(t, t.irrep_index(std::string_view(o.klass).substr(prefix.size())));
  }
  const Rational d = delta(rr, k);
  const std::string label = t.group->spec().label();
  if (f == Format::Json) {
    nlohmann::ordered_json j{{"group", label}, {"class", k.multiplicities}, {"delta", d.str()}};
    std::cout << j.dump(2) << "\n";
  } else if (f == Format::Csv) {
    std::cout << "group,delta\n" << label << "," << d.str() << "\n";
  } else {
    std::cout << d.str() << "\n";
  }
  return 0;
}

int cmd_verify(const Options& o) {
  const Format f = parse_format(o.format);
  if (o.all == !o.group.empty()) throw InputError("verify needs exactly one of --group or --all");
  const Report r = o.all ? verify_all({o.max_a, o.max_d}) : verify_group(GroupSpec::parse(o.group));
  std::cout << (f == Format::Text ? render_text(r) : f == Format::Json ? to_json(r) : render_csv(r));
  return r.ok() ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Riemann-Roch coefficients for Kleinian orbisurface stabilizers"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool group_required) {
    auto* g = sub->add_option("-g,--group", o.group, "A<k>, D<k>, E6, E7, E8, cyclic:<N> or dic:<n>");
    if (group_required) g->required();
    sub->add_option("-f,--format", o.format, "text, json or csv")->capture_default_str();
  };

  auto* chartab = app.add_subcommand("chartab", "print the character table");
  add_common(chartab, true);
  auto* rr = app.add_subcommand("rr", "print the Riemann-Roch coefficients T_i");
  add_common(rr, true);
  auto* delta = app.add_subcommand("delta", "evaluate delta = sum a_i T_i");
  add_common(delta, true);
  delta->add_option("--a", o.a, "comma-separated multiplicities, e.g. --a=2,0,0,0,-1");
  delta->add_option("--class", o.klass, "named class, skyscraper:<irrep>");
  auto* verify = app.add_subcommand("verify", "run every cross-check");
  add_common(verify, false);
  verify->add_flag("--all", o.all, "sweep every family");
  verify->add_option("--max-a", o.max_a, "largest cyclic order N in the sweep")->capture_default_str();
  verify->add_option("--max-d", o.max_d, "largest binary dihedral index n in the sweep")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (chartab->parsed()) return cmd_chartab(o);
    if (rr->parsed()) return cmd_rr(o);
    if (delta->parsed()) return cmd_delta(o);
    return cmd_verify(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitMismatch;
  }
}
