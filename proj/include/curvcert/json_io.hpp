#pragma once

#include <string>

#include "curvcert/boundary.hpp"
#include "curvcert/exterior.hpp"

namespace curvcert {

/// Curvature operator file format:
///   {"basis": "K" | "SDASD", "matrix": [[6x6 reals]]}
/// SDASD input is converted to the K basis on load; symmetry and the
/// Bianchi identity are validated either way. Throws std::runtime_error
/// with a field diagnostic on malformed input.
CurvatureOperator load_curvature_json(const std::string& path);
CurvatureOperator parse_curvature_json(const std::string& text);
std::string curvature_to_json(const CurvatureOperator& R, const std::string& label = "");

/// Point data for the extremality certificate:
///   {"R_M": <curvature document>, "tau": real, "scal_N": real,
///    "l": [[4x4 reals]]}
struct ExtremalPointData {
    CurvatureOperator R_M;
    double tau;
    double scal_N;
    RealMat l;
};
ExtremalPointData load_extremal_json(const std::string& path);
ExtremalPointData parse_extremal_json(const std::string& text);

/// Boundary data: {"II": [[3x3 reals]], "H_N": real}
BoundaryData load_boundary_json(const std::string& path);
BoundaryData parse_boundary_json(const std::string& text);

/// Shortest decimal that round-trips (up to 17 significant digits).
std::string format_double(double x);

}  // namespace curvcert
