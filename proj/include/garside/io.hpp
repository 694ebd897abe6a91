// Copyright 2026 The garside-spectra authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GARSIDE_IO_HPP
#define GARSIDE_IO_HPP

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "garside/coxeter.hpp"
#include "garside/matrix.hpp"
#include "garside/polynomial.hpp"
#include "garside/rational_function.hpp"

namespace garside {

// All JSON output uses insertion order and decimal strings for integers, so
// a document is a pure function of its mathematical content: byte-identical
// across runs and machines.
using Json = nlohmann::ordered_json;

inline Json json_of(const Integer& v) { return v.get_str(); }

inline Integer integer_of(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("expected integer string");
  return Integer(j.get<std::string>());
}

inline Json json_of(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(json_of(x));
  return a;
}

inline std::vector<Integer> integer_vector_of(const Json& j) {
  std::vector<Integer> v;
  for (const auto& x : j) v.push_back(integer_of(x));
  return v;
}

// Polynomials serialize as ascending coefficient lists.
inline Json json_of(const IntPolynomial& p) {
  Json o;
  o["coeffs"] = json_of(p.coeffs());
  return o;
}

inline IntPolynomial polynomial_of(const Json& j) {
  return IntPolynomial(integer_vector_of(j.at("coeffs")));
}

inline Json json_of(const RationalFunction& f) {
  Json o;
  o["num"] = json_of(f.num.coeffs());
  o["den"] = json_of(f.den.coeffs());
  return o;
}

inline Json json_of(const IntMatrix& m) {
  Json o;
  o["rows"] = m.rows();
  o["cols"] = m.cols();
  Json data = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(json_of(m.at(i, j)));
    data.push_back(std::move(row));
  }
  o["data"] = std::move(data);
  return o;
}

inline IntMatrix matrix_of(const Json& j) {
  IntMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
  const Json& data = j.at("data");
  for (int i = 0; i < m.rows(); ++i)
    for (int c = 0; c < m.cols(); ++c)
      m.at(i, c) = integer_of(data.at(i).at(c));
  return m;
}

// Envelope for every emitted document: schema tag, what it describes, and
// the payload. No timestamps or host data, by design.
inline Json output_document(const std::string& kind, const TypeTag& tag,
                            Json payload) {
  Json o;
  o["schema"] = "garside-spectra/1";
  o["kind"] = kind;
  o["type"] = tag.str();
  o["rank"] = tag.rank();
  o["payload"] = std::move(payload);
  return o;
}

inline std::string render(const Json& j) { return j.dump(2) + "\n"; }

// ---- cache ----

inline std::filesystem::path cache_directory() {
  if (const char* env = std::getenv("GARSIDE_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  return std::filesystem::current_path() / ".garside-cache";
}

inline std::filesystem::path cache_file_path(const TypeTag& tag) {
  return cache_directory() / ("adjp-" + tag.str() + ".json");
}

inline void write_file(const std::filesystem::path& p,
                       const std::string& bytes) {
  std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << bytes;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// The exact bytes cached for a descent-class matrix; recomputation must
// reproduce them verbatim.
inline std::string cache_document(const TypeTag& tag, const IntMatrix& adjp) {
  return render(output_document("descent-class-matrix", tag, json_of(adjp)));
}

// Returns the matrix, serving from the cache when a valid entry exists and
// writing one otherwise. A stale or corrupt entry fails loudly.
inline IntMatrix cached_descent_class_matrix(
    const TypeTag& tag, const std::function<IntMatrix()>& compute) {
  auto path = cache_file_path(tag);
  if (std::filesystem::exists(path)) {
    Json doc = Json::parse(read_file(path));
    return matrix_of(doc.at("payload"));
  }
  IntMatrix m = compute();
  write_file(path, cache_document(tag, m));
  return m;
}

}  // namespace garside

#endif  // GARSIDE_IO_HPP
