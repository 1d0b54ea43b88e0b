#include "toric/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace toric {

SimplicialComplex parse_complex(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("facets"))
    throw Error(ErrorCode::ParseError, "expected an object with keys \"n\" and \"facets\"");
  if (!j["n"].is_number_integer()) throw Error(ErrorCode::ParseError, "\"n\" must be an integer");
  if (!j["facets"].is_array()) throw Error(ErrorCode::ParseError, "\"facets\" must be an array");
  const auto n = j["n"].get<long long>();
  if (n < 1) throw Error(ErrorCode::EmptyInput, "n must be positive");
  if (n > kMaxVertices) throw Error(ErrorCode::VertexOutOfRange, "n exceeds " + std::to_string(kMaxVertices));
  std::vector<std::vector<int>> facets;
  for (const auto& f : j["facets"]) {
    if (!f.is_array()) throw Error(ErrorCode::ParseError, "each facet must be an array");
    std::vector<int> vs;
    for (const auto& v : f) {
      if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, "vertices must be integers");
      const auto x = v.get<long long>();
      if (x < 1 || x > n) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(x) + " outside [n]");
      vs.push_back(static_cast<int>(x));
    }
    facets.push_back(std::move(vs));
  }
  return validate(facets, static_cast<int>(n));
}

SimplicialComplex read_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str());
}

nlohmann::ordered_json face_json(Face f) { return f.vertices(); }

nlohmann::ordered_json faces_json(const std::vector<Face>& faces) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (Face f : faces) out.push_back(face_json(f));
  return out;
}

nlohmann::ordered_json int_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

nlohmann::ordered_json integers_json(const std::vector<Integer>& xs) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& x : xs) out.push_back(int_json(x));
  return out;
}

nlohmann::ordered_json to_json(const SimplicialComplex& c) {
  nlohmann::ordered_json j;
  j["n"] = c.n();
  j["facets"] = nlohmann::ordered_json::array();
  for (Face f : c.facets()) j["facets"].push_back(face_json(f));
  return j;
}

std::string dump_complex(const SimplicialComplex& c) { return to_json(c).dump(); }

}  // namespace toric
