#pragma once

#include <string>

#include <json.hpp>

#include "octoforms/exterior.hpp"
#include "octoforms/matrix.hpp"

namespace octoforms {

/// {"n": .., "grade": .., "terms": [{"blade": [..], "coeff": "p/q"}, ..]},
/// blades in lexicographic order. Grade is -1 for mixed or empty forms.
nlohmann::json form_to_json(const Multivector& f);
Multivector form_from_json(const nlohmann::json& j);

/// "blade;coeff" header, then one row per term, blade as dash-joined indices.
std::string form_to_csv(const Multivector& f);

/// Rows of rational strings.
nlohmann::json matrix_to_json(const Matrix& m);
/// {"rows", "cols", "entries": [[row, col, "value"], ..]}, 0-based.
nlohmann::json sparse_to_json(const SparseMatrix& m);

/// [{"i", "j", "product": [coefficient strings]}] over all unit pairs.
nlohmann::json cd_table_json(unsigned level);

/// Decimal with 17 significant digits.
std::string format_double(double x);

} // namespace octoforms
