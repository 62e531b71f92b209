#include "trinomia/serialize.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

namespace trinomia {

std::string dec(const Integer& z) { return z.get_str(); }

std::string dec(const Rational& q) { return q.get_str(); }

Json unipoly_json(const UniPoly& f) {
    Json coeffs = Json::array();
    for (const Rational& q : f.coeffs()) coeffs.push_back(dec(q));
    return Json{{"coeffs", coeffs}};
}

std::string csv_line(const std::vector<Rational>& row) {
    std::string out;
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (k) out += ',';
        out += dec(row[k]);
    }
    return out;
}

std::string csv_lines(const std::vector<std::vector<Rational>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        out += csv_line(row);
        out += '\n';
    }
    return out;
}

std::string report_text(const Report& r) { return to_json(r).dump(2) + "\n"; }

void emit_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output path: " + out_path);
    f << text;
}

}  // namespace trinomia
