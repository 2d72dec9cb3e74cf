#include "octoforms/export.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "octoforms/cayley_dickson.hpp"

namespace octoforms {

nlohmann::json form_to_json(const Multivector& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mask, c] : f.lex_terms()) terms.push_back({{"blade", blade_indices(mask)}, {"coeff", c.str()}});
    return {{"n", f.n()}, {"grade", f.grade()}, {"terms", std::move(terms)}};
}

Multivector form_from_json(const nlohmann::json& j) {
    const std::size_t n = j.at("n").get<std::size_t>();
    std::vector<Multivector::Term> terms;
    for (const auto& t : j.at("terms")) {
        auto idx = t.at("blade").get<std::vector<std::size_t>>();
        for (std::size_t i : idx)
            if (i == 0 || i > n) throw std::invalid_argument("form_from_json: blade index out of range");
        terms.emplace_back(blade_mask(idx), Rational::parse(t.at("coeff").get<std::string>()));
    }
    return Multivector::from_terms(n, std::move(terms));
}

std::string form_to_csv(const Multivector& f) {
    std::ostringstream os;
    os << "blade;coeff\n";
    for (const auto& [mask, c] : f.lex_terms()) {
        bool first = true;
        for (std::size_t i : blade_indices(mask)) {
            os << (first ? "" : "-") << i;
            first = false;
        }
        os << ';' << c.str() << '\n';
    }
    return os.str();
}

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json sparse_to_json(const SparseMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r)) entries.push_back({r, c, v.str()});
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

nlohmann::json cd_table_json(unsigned level) {
    const std::size_t d = std::size_t{1} << level;
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            CDElement p = CDElement::unit(level, i) * CDElement::unit(level, j);
            nlohmann::json coeffs = nlohmann::json::array();
            for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
            out.push_back({{"i", i}, {"j", j}, {"product", std::move(coeffs)}});
        }
    return out;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace octoforms
