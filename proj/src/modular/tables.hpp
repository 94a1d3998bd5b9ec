#pragma once

#include <string>
#include <vector>

#include "ring/qseries.hpp"

namespace refsev {

enum class Table { kB1, kB2, kB1Bar, kB2Bar, kFhatC3, kFhatC4 };

std::vector<Table> all_tables();
std::string table_name(Table t);

// Reference series with their trusted truncation (B1, B2 below q^18;
// B1bar, B2bar below q^31; F^_c3 below q^6; F^_c4 below q^5). B2 includes its
// prefactor 1/((1 - yq)(1 - q/y)).
QSeries embedded_table(Table t);

// Table text: one line per q-order, "n | dexp:coeff dexp:coeff ...", listing
// only terms with dexp >= 0; the y -> 1/y mirror images are filled in.
QSeries parse_table_text(const std::string& text);
std::string table_text(Table t);

}  // namespace refsev
