#include "coopinf/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace coopinf {

namespace {

Matrix parse_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      std::size_t pos = 0;
      double v;
      try {
        v = std::stod(cell, &pos);
      } catch (const std::exception&) {
        throw ParseError("bad CSV cell '" + cell + "'");
      }
      if (cell.find_first_not_of(" \t\r", pos) != std::string::npos)
        throw ParseError("trailing garbage in CSV cell '" + cell + "'");
      row.push_back(v);
    }
    if (row.empty()) throw ParseError("empty CSV row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty CSV input");
  const std::size_t cols = rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("ragged CSV rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix parse_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw ParseError("JSON matrix needs rows, cols, entries");
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  const auto& entries = j["entries"];
  if (!entries.is_array() || entries.size() != rows * cols)
    throw DimensionMismatch("entries length does not match rows*cols");
  Matrix m(rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (!entries[k].is_number()) throw ParseError("non-numeric entry");
    m.data()[k] = entries[k].get<double>();
  }
  return m;
}

}  // namespace

Matrix read_matrix_raw(std::istream& in, MatrixFormat format) {
  return format == MatrixFormat::Csv ? parse_csv(in) : parse_json(in);
}

Matrix read_matrix_raw_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  return read_matrix_raw(in, json ? MatrixFormat::Json : MatrixFormat::Csv);
}

Matrix read_matrix(std::istream& in, MatrixFormat format) {
  Matrix m = read_matrix_raw(in, format);
  validate_joint(m);
  return m;
}

Matrix read_matrix_string(const std::string& text, MatrixFormat format) {
  std::istringstream in(text);
  return read_matrix(in, format);
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  return read_matrix(in, json ? MatrixFormat::Json : MatrixFormat::Csv);
}

std::string write_matrix_csv(const Matrix& m) {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << m(i, j);
    }
    out << '\n';
  }
  return out.str();
}

std::string write_matrix_json(const Matrix& m) {
  nlohmann::json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = m.data();
  return j.dump();
}

}  // namespace coopinf
