// Complex interchange format: {"n": <int>, "facets": [[v, ...], ...]} with 1-based vertices.
#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "toric/complex.hpp"
#include "toric/integer.hpp"

namespace toric {

/// Throws `ParseError` on malformed JSON or schema mismatch, and the
/// validation errors of `validate` on bad vertex data.
SimplicialComplex parse_complex(const std::string& text);
SimplicialComplex read_complex(const std::string& path);

nlohmann::ordered_json to_json(const SimplicialComplex& c);
nlohmann::ordered_json face_json(Face f);
nlohmann::ordered_json faces_json(const std::vector<Face>& faces);

/// Machine integers as numbers, larger values as decimal strings.
nlohmann::ordered_json int_json(const Integer& x);
nlohmann::ordered_json integers_json(const std::vector<Integer>& xs);

template <typename Derived>
nlohmann::ordered_json vector_json(const Eigen::MatrixBase<Derived>& v) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if constexpr (std::is_same_v<typename Derived::Scalar, Integer>)
      out.push_back(int_json(v(i)));
    else
      out.push_back(v(i));
  }
  return out;
}

/// One line, canonical key order.
std::string dump_complex(const SimplicialComplex& c);

}  // namespace toric
