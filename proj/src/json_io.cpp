#include "curvcert/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace curvcert {

namespace {

using nlohmann::json;

json readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return j;
}

json parseText(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("json parse error: ") + e.what());
    }
}

RealMat matrixField(const json& j, const std::string& key, int dim) {
    if (!j.contains(key)) throw std::runtime_error("missing field \"" + key + "\"");
    const json& m = j.at(key);
    if (!m.is_array() || static_cast<int>(m.size()) != dim)
        throw std::runtime_error("field \"" + key + "\" must be a " + std::to_string(dim) +
                                 "x" + std::to_string(dim) + " array of rows");
    RealMat r(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const json& row = m.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw std::runtime_error("field \"" + key + "\", row " + std::to_string(i) +
                                     ": expected " + std::to_string(dim) + " numbers");
        for (int k = 0; k < dim; ++k) {
            if (!row.at(k).is_number())
                throw std::runtime_error("field \"" + key + "\", entry (" +
                                         std::to_string(i) + "," + std::to_string(k) +
                                         "): expected a number");
            r(i, k) = row.at(k).get<double>();
        }
    }
    return r;
}

double numberField(const json& j, const std::string& key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw std::runtime_error("missing or non-numeric field \"" + key + "\"");
    return j.at(key).get<double>();
}

CurvatureOperator curvatureFromJson(const json& j) {
    std::string basis = "K";
    if (j.contains("basis")) basis = j.at("basis").get<std::string>();
    if (basis != "K" && basis != "SDASD")
        throw std::runtime_error("field \"basis\" must be \"K\" or \"SDASD\"");
    RealMat m = matrixField(j, "matrix", 6);
    if (basis == "SDASD") {
        const RealMat p = change_of_basis_sdasd();
        m = p * m * p.transpose();
    }
    try {
        return CurvatureOperator(m);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("invalid curvature matrix: ") + e.what());
    }
}

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

CurvatureOperator load_curvature_json(const std::string& path) {
    return curvatureFromJson(readFile(path));
}

CurvatureOperator parse_curvature_json(const std::string& text) {
    return curvatureFromJson(parseText(text));
}

std::string curvature_to_json(const CurvatureOperator& R, const std::string& label) {
    // Hand-rolled emission so numbers always carry 17 significant digits.
    std::ostringstream out;
    out << "{\n";
    if (!label.empty()) out << "  \"label\": \"" << label << "\",\n";
    out << "  \"basis\": \"K\",\n  \"matrix\": [\n";
    for (int i = 0; i < 6; ++i) {
        out << "    [";
        for (int j = 0; j < 6; ++j)
            out << format_double(R.matrix()(i, j)) << (j < 5 ? ", " : "");
        out << (i < 5 ? "],\n" : "]\n");
    }
    out << "  ]\n}\n";
    return out.str();
}

ExtremalPointData load_extremal_json(const std::string& path) {
    const json j = readFile(path);
    if (!j.contains("R_M")) throw std::runtime_error("missing field \"R_M\"");
    return {curvatureFromJson(j.at("R_M")), numberField(j, "tau"), numberField(j, "scal_N"),
            matrixField(j, "l", 4)};
}

ExtremalPointData parse_extremal_json(const std::string& text) {
    const json j = parseText(text);
    if (!j.contains("R_M")) throw std::runtime_error("missing field \"R_M\"");
    return {curvatureFromJson(j.at("R_M")), numberField(j, "tau"), numberField(j, "scal_N"),
            matrixField(j, "l", 4)};
}

namespace {

BoundaryData boundaryFromJson(const json& j) {
    BoundaryData bd;
    bd.secondFundamentalForm = matrixField(j, "II", 3);
    bd.frame = BoundaryData::defaultFrame();
    bd.meanCurvatureN = numberField(j, "H_N");
    return bd;
}

}  // namespace

BoundaryData load_boundary_json(const std::string& path) {
    return boundaryFromJson(readFile(path));
}

BoundaryData parse_boundary_json(const std::string& text) {
    return boundaryFromJson(parseText(text));
}

}  // namespace curvcert
