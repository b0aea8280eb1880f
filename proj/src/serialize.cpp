#include "kleinrr/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "kleinrr/errors.hpp"

namespace kleinrr {

namespace {

using Json = nlohmann::ordered_json;

// Terminal columns occupied by a UTF-8 string; every symbol used here is single-width.
std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

std::string pad_left(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return w >= width ? s : std::string(width - w, ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
  return out + "\n";
}

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

template <class T>
T field(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw InputError(std::string("JSON field '") + key + "': " + e.what());
  }
}

std::string header(const GroupSpec& spec, std::uint64_t order) {
  return spec.label() + " (" + spec.description() + ", order " + std::to_string(order) + ")\n";
}

}  // namespace

Format parse_format(std::string_view s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw InputError("unknown format '" + std::string(s) + "' (expected text, json or csv)");
}

TableRecord to_record(const CharacterTable& t) {
  TableRecord r;
  r.group = t.group->spec().label();
  r.order = t.order();
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    r.classes.push_back({t.class_words[c], t.classes[c].size, t.classes[c].centralizer_order});
  }
  for (const auto& irrep : t.irreps) {
    TableRecord::IrrepRow row{irrep.name, irrep.dim, {}};
    for (const auto& v : irrep.values) row.values.push_back(v.str());
    r.irreps.push_back(std::move(row));
  }
  return r;
}

RRRecord to_record(const CharacterTable& t, const RRCoefficients& rr) {
  RRRecord r;
  r.group = t.group->spec().label();
  r.order = t.order();
  const auto printed = printed_coefficients(t.group->spec());
  for (std::size_t i = 0; i < t.size(); ++i) {
    RRRecord::Row row{t.irreps[i].name, t.irreps[i].dim, rr[i], std::nullopt, {}, {}};
    if (i < printed.size() && printed[i].value != rr[i]) {
      row.printed = printed[i].value;
      row.printed_as = printed[i].literal;
      row.erratum = table_erratum(t.group->spec(), t.irreps[i].name);
    }
    r.rows.push_back(std::move(row));
  }
  return r;
}

std::string to_json(const TableRecord& r) {
  Json j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["classes"] = Json::array();
  for (const auto& c : r.classes) {
    j["classes"].push_back({{"rep_word", c.rep_word}, {"size", c.size}, {"centralizer_order", c.centralizer_order}});
  }
  j["irreps"] = Json::array();
  for (const auto& i : r.irreps) j["irreps"].push_back({{"name", i.name}, {"dim", i.dim}, {"values", i.values}});
  return j.dump(2) + "\n";
}

TableRecord table_from_json(std::string_view text) {
  const Json j = parse_document(text);
  TableRecord r;
  r.group = field<std::string>(j, "group");
  r.order = field<std::uint64_t>(j, "order");
  for (const auto& c : field<Json>(j, "classes")) {
    r.classes.push_back({field<std::string>(c, "rep_word"), field<std::uint64_t>(c, "size"),
                         field<std::uint64_t>(c, "centralizer_order")});
  }
  for (const auto& i : field<Json>(j, "irreps")) {
    r.irreps.push_back({field<std::string>(i, "name"), field<int>(i, "dim"),
                        field<std::vector<std::string>>(i, "values")});
  }
  return r;
}

std::string to_json(const RRRecord& r) {
  Json j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["coefficients"] = Json::array();
  for (const auto& row : r.rows) {
    Json e{{"irrep", row.irrep}, {"dim", row.dim}, {"T", row.value.str()}};
    if (row.printed) e["printed"] = row.printed->str();
    if (!row.printed_as.empty()) e["printed_as"] = row.printed_as;
    if (!row.erratum.empty()) e["erratum"] = row.erratum;
    j["coefficients"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

RRRecord rr_from_json(std::string_view text) {
  const Json j = parse_document(text);
  RRRecord r;
  r.group = field<std::string>(j, "group");
  r.order = field<std::uint64_t>(j, "order");
  for (const auto& e : field<Json>(j, "coefficients")) {
    RRRecord::Row row{field<std::string>(e, "irrep"), field<int>(e, "dim"),
                      Rational::parse(field<std::string>(e, "T")), std::nullopt, {}, {}};
    if (e.contains("printed")) row.printed = Rational::parse(field<std::string>(e, "printed"));
    if (e.contains("printed_as")) row.printed_as = field<std::string>(e, "printed_as");
    if (e.contains("erratum")) row.erratum = field<std::string>(e, "erratum");
    r.rows.push_back(std::move(row));
  }
  return r;
}

std::string to_json(const Report& r) {
  Json j;
  j["groups"] = r.groups;
  j["summary"] = {{"checks", r.checks.size()},
                  {"match", r.count(Verdict::Match)},
                  {"mismatch", r.count(Verdict::Mismatch)},
                  {"paper-erratum", r.count(Verdict::PaperErratum)}};
  j["checks"] = Json::array();
  for (const auto& c : r.checks) {
    Json e{{"name", c.name},         {"group", c.group},
           {"subject", c.subject},   {"computed", c.computed},
           {"expected", c.expected}, {"source", std::string(to_string(c.source))},
           {"verdict", std::string(to_string(c.verdict))}};
    if (!c.erratum.empty()) e["erratum"] = c.erratum;
    if (!c.note.empty()) e["note"] = c.note;
    j["checks"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

Report report_from_json(std::string_view text) {
  const Json j = parse_document(text);
  Report r;
  r.groups = field<std::vector<std::string>>(j, "groups");
  for (const auto& e : field<Json>(j, "checks")) {
    CheckResult c;
    c.name = field<std::string>(e, "name");
    c.group = field<std::string>(e, "group");
    c.subject = field<std::string>(e, "subject");
    c.computed = field<std::string>(e, "computed");
    c.expected = field<std::string>(e, "expected");
    c.source = parse_source(field<std::string>(e, "source"));
    c.verdict = parse_verdict(field<std::string>(e, "verdict"));
    if (e.contains("erratum")) c.erratum = field<std::string>(e, "erratum");
    if (e.contains("note")) c.note = field<std::string>(e, "note");
    r.checks.push_back(std::move(c));
  }
  return r;
}

std::string render_text(const CharacterTable& t) {
  const std::size_t nc = t.classes.size();
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{""};
  std::vector<std::string> sizes{"|class|"};
  std::vector<std::string> cent{"|C_G(g)|"};
  for (const std::size_t c : t.column_order) {
    head.push_back(t.class_display(c));
    sizes.push_back(std::to_string(t.classes[c].size));
    cent.push_back(std::to_string(t.classes[c].centralizer_order));
  }
  grid.push_back(head);
  grid.push_back(sizes);
  grid.push_back(cent);
  for (const auto& r : t.irreps) {
    std::vector<std::string> row{r.name};
    for (const std::size_t c : t.column_order) {
      const Cyclotomic& v = r.values[c];
      row.push_back(v.is_rational() || r.display[c].empty() ? v.str() : r.display[c]);
    }
    grid.push_back(std::move(row));
  }
  std::vector<std::size_t> width(nc + 1, 0);
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], display_width(row[c]));
  }
  std::string out = header(t.group->spec(), t.order());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::string line = pad_right(grid[i][0], width[0]);
    for (std::size_t c = 1; c < grid[i].size(); ++c) line += "  " + pad_left(grid[i][c], width[c]);
    out += line + "\n";
    if (i == 2) out += std::string(display_width(line), '-') + "\n";
  }
  return out;
}

std::string render_text(const RRRecord& r) {
  std::size_t name_w = 5;
  std::size_t value_w = 1;
  for (const auto& row : r.rows) {
    name_w = std::max(name_w, display_width(row.irrep));
    value_w = std::max(value_w, row.value.str().size());
  }
  std::string out = header(GroupSpec::parse(r.group), r.order);
  out += pad_right("irrep", name_w) + "  dim  " + "T\n";
  for (const auto& row : r.rows) {
    std::string line = pad_right(row.irrep, name_w) + "  " + pad_left(std::to_string(row.dim), 3) + "  " +
                       pad_right(row.value.str(), value_w);
    if (row.printed) {
      line += row.erratum.empty() ? "  mismatch: printed " : "  paper-erratum: printed ";
      line += row.printed_as.empty() ? row.printed->str() : row.printed_as;
    } else {
      while (!line.empty() && line.back() == ' ') line.pop_back();
    }
    out += line + "\n";
  }
  return out;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << "[" << to_string(c.verdict) << "] " << c.group << " " << c.name;
    if (c.subject != "*") out << " " << c.subject;
    out << ": " << c.computed;
    if (c.computed != c.expected) out << " (expected " << c.expected << ")";
    if (c.verdict != Verdict::Match && !c.note.empty()) out << " -- " << c.note;
    out << "\n";
  }
  out << r.groups.size() << " group(s), " << r.checks.size() << " checks: " << r.count(Verdict::Match)
      << " match, " << r.count(Verdict::Mismatch) << " mismatch, " << r.count(Verdict::PaperErratum)
      << " paper-erratum\n";
  return out.str();
}

std::string render_csv(const TableRecord& r) {
  std::vector<std::string> head{"irrep", "dim"};
  std::vector<std::string> sizes{"#size", ""};
  std::vector<std::string> cent{"#centralizer_order", ""};
  for (const auto& c : r.classes) {
    head.push_back(c.rep_word);
    sizes.push_back(std::to_string(c.size));
    cent.push_back(std::to_string(c.centralizer_order));
  }
  std::string out = csv_line(head) + csv_line(sizes) + csv_line(cent);
  for (const auto& i : r.irreps) {
    std::vector<std::string> row{i.name, std::to_string(i.dim)};
    row.insert(row.end(), i.values.begin(), i.values.end());
    out += csv_line(row);
  }
  return out;
}

std::string render_csv(const RRRecord& r) {
  std::string out = csv_line({"group", "irrep", "dim", "T", "printed", "erratum"});
  for (const auto& row : r.rows) {
    out += csv_line({r.group, row.irrep, std::to_string(row.dim), row.value.str(),
                     row.printed ? row.printed->str() : "", row.erratum});
  }
  return out;
}

std::string render_csv(const Report& r) {
  std::string out = csv_line({"name", "group", "subject", "computed", "expected", "source", "verdict", "erratum", "note"});
  for (const auto& c : r.checks) {
    out += csv_line({c.name, c.group, c.subject, c.computed, c.expected, std::string(to_string(c.source)),
                     std::string(to_string(c.verdict)), c.erratum, c.note});
  }
  return out;
}

}  // namespace kleinrr
