#include "schurkit/cli/output.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace schurkit::cli {

using nlohmann::ordered_json;

namespace {

std::string flavor_tag(Flavor f) { return f == Flavor::FHE ? "fhe" : "ehf"; }

}  // namespace

void write_table_json(std::ostream& os, const StructureTable& table) {
  ordered_json doc;
  doc["d"] = table.d;
  doc["flavor"] = flavor_tag(table.flavor);
  ordered_json basis = ordered_json::array();
  for (const auto& m : table.basis) basis.push_back({{"a", m.a}, {"b", m.b}, {"c", m.c}});
  doc["basis"] = std::move(basis);

  ordered_json products = ordered_json::array();
  const std::size_t n = table.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ordered_json terms = ordered_json::array();
      for (const auto& [k, coeff] : table.product(i, j)) {
        terms.push_back({{"k", k}, {"num", coeff.get_num().get_str()}, {"den", coeff.get_den().get_str()}});
      }
      products.push_back({{"i", i}, {"j", j}, {"terms", std::move(terms)}});
    }
  }
  doc["products"] = std::move(products);
  os << doc.dump(1) << '\n';
}

void write_table_csv(std::ostream& os, const StructureTable& table) {
  os << "# d=" << table.d << " flavor=" << flavor_tag(table.flavor) << '\n';
  os << "index,a,b,c\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& m = table.basis[i];
    os << i << ',' << m.a << ',' << m.b << ',' << m.c << '\n';
  }
  os << "i,j,k,num,den\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table.size(); ++j) {
      for (const auto& [k, coeff] : table.product(i, j)) {
        os << i << ',' << j << ',' << k << ',' << coeff.get_num().get_str() << ',' << coeff.get_den().get_str() << '\n';
      }
    }
  }
}

void write_report_text(std::ostream& os, const VerifyReport& report) {
  os << "d = " << report.d << '\n';
  for (const auto& c : report.checks) {
    const char* status = c.skipped ? "SKIP" : c.passed ? "PASS" : "FAIL";
    os << status << "  [" << c.oracle << "] " << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ')';
    os << '\n';
  }
  os << (report.all_passed() ? "all checks passed" : "some checks FAILED") << '\n';
}

void write_report_json(std::ostream& os, const VerifyReport& report) {
  ordered_json doc;
  doc["d"] = report.d;
  doc["passed"] = report.all_passed();
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"oracle", c.oracle},
                      {"passed", c.passed},
                      {"skipped", c.skipped},
                      {"detail", c.detail}});
  }
  doc["checks"] = std::move(checks);
  os << doc.dump(2) << '\n';
}

}  // namespace schurkit::cli
