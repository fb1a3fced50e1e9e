#include "frameforge/manifest.hpp"

#include <fstream>
#include <iostream>

namespace frameforge {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Eigen::Index read_count(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0) {
    parse_fail(std::string("missing or invalid \"") + key + "\"");
  }
  return static_cast<Eigen::Index>(j[key].get<long long>());
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    parse_fail("complex scalar must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json vector_to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

ComplexVector vector_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("vector must be an array of [re, im] pairs");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

Json frame_to_json(const Frame& f) {
  Json vectors = Json::array();
  for (Eigen::Index n = 0; n < f.size(); ++n) vectors.push_back(vector_to_json(f.vector(n)));
  return Json{{"dim", f.dim()}, {"vectors", std::move(vectors)}};
}

Frame frame_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("frame manifest must be an object");
  const Eigen::Index dim = read_count(j, "dim");
  if (!j.contains("vectors") || !j["vectors"].is_array()) parse_fail("missing \"vectors\" array");
  std::vector<ComplexVector> vectors;
  vectors.reserve(j["vectors"].size());
  for (const Json& v : j["vectors"]) vectors.push_back(vector_from_json(v));
  try {
    return Frame(dim, vectors);
  } catch (const Error& e) {
    parse_fail(e.what());
  }
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) entries.push_back(complex_to_json(m(i, k)));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("matrix must be an object");
  const Eigen::Index rows = read_count(j, "rows");
  const Eigen::Index cols = read_count(j, "cols");
  if (!j.contains("entries") || !j["entries"].is_array()) parse_fail("missing \"entries\" array");
  const Json& entries = j["entries"];
  if (static_cast<Eigen::Index>(entries.size()) != rows * cols) {
    parse_fail("entries has " + std::to_string(entries.size()) + " elements, expected rows*cols = " +
               std::to_string(rows * cols));
  }
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(entries[static_cast<std::size_t>(i * cols + k)]);
  }
  if (!all_finite(m)) parse_fail("matrix has non-finite entries");
  return m;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    parse_fail(path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path.string());
  out << text;
}

}  // namespace frameforge
