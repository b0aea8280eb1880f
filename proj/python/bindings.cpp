#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "kleinrr/chartab.hpp"
#include "kleinrr/errors.hpp"
#include "kleinrr/rrcoeff.hpp"
#include "kleinrr/serialize.hpp"
#include "kleinrr/verify.hpp"

namespace py = pybind11;
using namespace kleinrr;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python layer turns them into Fractions.
std::vector<std::string> strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

// A character table together with its coefficients, computed once.
class Table {
 public:
  explicit Table(const std::string& spec)
      : table_(character_table(GroupSpec::parse(spec))), rr_(rr_coefficients(table_)) {}

  std::string group() const { return table_.group->spec().label(); }
  std::size_t order() const { return table_.order(); }
  std::vector<std::string> irreps() const {
    std::vector<std::string> out;
    for (const auto& r : table_.irreps) out.push_back(r.name);
    return out;
  }
  std::vector<int> dims() const {
    std::vector<int> out;
    for (const auto& r : table_.irreps) out.push_back(r.dim);
    return out;
  }
  std::vector<std::string> class_words() const { return table_.class_words; }
  std::vector<std::uint64_t> centralizer_orders() const {
    std::vector<std::uint64_t> out;
    for (const auto& c : table_.classes) out.push_back(c.centralizer_order);
    return out;
  }
  std::vector<std::vector<std::string>> values() const {
    std::vector<std::vector<std::string>> out;
    for (const auto& r : table_.irreps) {
      auto& row = out.emplace_back();
      for (const auto& v : r.values) row.push_back(v.str());
    }
    return out;
  }
  std::vector<std::string> rr() const { return strings(rr_.values); }
  std::vector<std::string> element_sum() const { return strings(element_sum_coefficients(table_).values); }
  std::string delta(const std::vector<std::int64_t>& a) const { return kleinrr::delta(rr_, KClass{a}).str(); }
  std::vector<std::int64_t> skyscraper(const std::variant<std::size_t, std::string>& irrep) const {
    return skyscraper_class(table_, index(irrep)).multiplicities;
  }
  std::vector<std::int64_t> decompose(const std::vector<std::string>& values) const {
    ClassFunction f;
    for (const auto& v : values) f.push_back(Cyclotomic::parse(v));
    return kleinrr::decompose(table_, f).multiplicities;
  }
  AdjacencyMatrix mckay() const { return mckay_graph(table_); }
  std::string ct19() const { return ct19_delta_O(table_).str(); }
  std::string json() const { return to_json(to_record(table_)); }
  std::string rr_json() const { return to_json(to_record(table_, rr_)); }
  std::string text() const { return render_text(table_); }

 private:
  std::size_t index(const std::variant<std::size_t, std::string>& irrep) const {
    if (const auto* i = std::get_if<std::size_t>(&irrep)) {
      if (*i >= table_.size()) throw InputError("irrep index out of range");
      return *i;
    }
    return table_.irrep_index(std::get<std::string>(irrep));
  }

  CharacterTable table_;
  RRCoefficients rr_;
};

}  // namespace

PYBIND11_MODULE(_kleinrr, m) {
  m.doc() = "Exact Riemann-Roch coefficients of the finite subgroups of SL(2)";

  // Translators run newest first, so the subclass goes last.
  const auto& base = py::register_exception<Error>(m, "KleinrrError", PyExc_RuntimeError);
  // Bad input is both a library error and a ValueError.
  py::register_exception<InputError>(m, "InputError",
                                     py::make_tuple(base, py::handle(PyExc_ValueError)).ptr());

  py::class_<Table>(m, "Table")
      .def(py::init<const std::string&>(), py::arg("spec"))
      .def_property_readonly("group", &Table::group)
      .def_property_readonly("order", &Table::order)
      .def_property_readonly("irreps", &Table::irreps)
      .def_property_readonly("dims", &Table::dims)
      .def_property_readonly("class_words", &Table::class_words)
      .def_property_readonly("centralizer_orders", &Table::centralizer_orders)
      .def("values", &Table::values)
      .def("rr_coefficients", &Table::rr)
      .def("element_sum_coefficients", &Table::element_sum)
      .def("delta", &Table::delta, py::arg("a"))
      .def("skyscraper_class", &Table::skyscraper, py::arg("irrep"))
      .def("decompose", &Table::decompose, py::arg("values"))
      .def("mckay_graph", &Table::mckay)
      .def("ct19_delta_O", &Table::ct19)
      .def("to_json", &Table::json)
      .def("rr_json", &Table::rr_json)
      .def("render_text", &Table::text);

  m.def("closed_form_A", [](int n, int j) { return closed_form_A(n, j).str(); }, py::arg("n"), py::arg("j"));
  m.def(
      "closed_form_D",
      [](int n, const std::string& irrep, bool printed) {
        return closed_form_D(n, DicIrrep::parse(irrep), printed ? ConstantVariant::Printed : ConstantVariant::Corrected)
            .str();
      },
      py::arg("n"), py::arg("irrep"), py::arg("printed") = false);
  m.def("verify_group", [](const std::string& spec) { return to_json(verify_group(GroupSpec::parse(spec))); },
        py::arg("spec"));
  m.def(
      "verify_all", [](int max_a, int max_d) { return to_json(verify_all({max_a, max_d})); },
      py::arg("max_a") = 50, py::arg("max_d") = 25);
}
