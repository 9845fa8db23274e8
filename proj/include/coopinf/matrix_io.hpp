#pragma once

#include <iosfwd>
#include <string>

#include "coopinf/matrix.hpp"

namespace coopinf {

enum class MatrixFormat { Csv, Json };

// Parses a matrix and validates the joint-distribution invariants.
// Throws ParseError on malformed input and the validate_joint() errors
// on invariant violations.
Matrix read_matrix(std::istream& in, MatrixFormat format);
Matrix read_matrix_string(const std::string& text, MatrixFormat format);

// Loads from a file path; format deduced from extension (.json vs CSV).
Matrix read_matrix_file(const std::string& path);

// Parse without the joint-distribution validation (cost matrices may hold
// +inf and negative entries; marginal vectors are not matrices).
Matrix read_matrix_raw(std::istream& in, MatrixFormat format);
Matrix read_matrix_raw_file(const std::string& path);

std::string write_matrix_csv(const Matrix& m);
std::string write_matrix_json(const Matrix& m);

}  // namespace coopinf
