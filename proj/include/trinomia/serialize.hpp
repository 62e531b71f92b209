#pragma once

#include <string>
#include <vector>

#include "trinomia/bipoly.hpp"
#include "trinomia/report.hpp"
#include "trinomia/unipoly.hpp"

namespace trinomia {

std::string dec(const Integer& z);
std::string dec(const Rational& q);

// {"terms": [[i, j, "coeff"], ...]} in the ring's own graded-lex order.
// Coefficients ride as decimal strings; they outgrow 64 bits routinely.
template <class Tag>
Json poly_terms_json(const Poly2<Tag>& p) {
    Json terms = Json::array();
    for (const auto& [e, coeff] : p.terms())
        terms.push_back(Json::array({e.first, e.second, coeff.get_str()}));
    return Json{{"terms", terms}};
}

// {"coeffs": ["a0", "a1", ...]} lowest degree first.
Json unipoly_json(const UniPoly& f);

std::string csv_line(const std::vector<Rational>& row);
std::string csv_lines(const std::vector<std::vector<Rational>>& rows);

// Rendered report, stable byte-for-byte for identical content.
std::string report_text(const Report& r);

// stdout when path is empty
void emit_output(const std::string& text, const std::string& out_path);

}  // namespace trinomia
