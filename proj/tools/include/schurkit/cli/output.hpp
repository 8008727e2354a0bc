#pragma once

#include "schurkit/oracle.hpp"
#include "schurkit/schur.hpp"

#include <ostream>

namespace schurkit::cli {

/// {"d", "flavor", "basis": [{"a","b","c"}], "products": [{"i","j","terms":
/// [{"k","num","den"}]}]}; num and den are decimal strings.
void write_table_json(std::ostream& os, const StructureTable& table);

/// A comment line, the basis as "index,a,b,c" rows, then one "i,j,k,num,den"
/// row per nonzero product coefficient.
void write_table_csv(std::ostream& os, const StructureTable& table);

void write_report_text(std::ostream& os, const VerifyReport& report);
void write_report_json(std::ostream& os, const VerifyReport& report);

}  // namespace schurkit::cli
