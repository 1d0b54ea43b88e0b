// Named complexes used throughout the tests, the acceptance run and the CLI.
#pragma once

#include <string>
#include <vector>

#include "toric/complex.hpp"

namespace toric::fixtures {

/// A single edge on [2].
inline SimplicialComplex e1() { return validate(std::vector<std::vector<int>>{{1, 2}}, 2); }

/// Boundary of a triangle on [3].
inline SimplicialComplex e2() { return validate(std::vector<std::vector<int>>{{1, 2}, {2, 3}, {1, 3}}, 3); }

/// Path 1-2-3.
inline SimplicialComplex e3() { return validate(std::vector<std::vector<int>>{{1, 2}, {2, 3}}, 3); }

/// The six edges of two disjoint triangles on [6].
inline SimplicialComplex t2() {
  return validate(std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}}, 6);
}

/// Three triangles each joined to vertex 10 by an edge. Flag, chordal skeleton.
inline SimplicialComplex d1() {
  return validate(std::vector<std::vector<int>>{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {3, 10}, {6, 10}, {9, 10}}, 10);
}

/// D1 with the triangle {1,2,3} replaced by its boundary edges.
inline SimplicialComplex d2() {
  return validate(
      std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}, {4, 5, 6}, {7, 8, 9}, {3, 10}, {6, 10}, {9, 10}}, 10);
}

/// D2 with {4,5,6} also replaced by its boundary edges.
inline SimplicialComplex d3() {
  return validate(std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {7, 8, 9}, {3, 10},
                                                {6, 10}, {9, 10}},
                  10);
}

/// All three triangles of D1 replaced by their boundary edges.
inline SimplicialComplex d4() {
  return validate(std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {7, 8}, {7, 9},
                                                {8, 9}, {3, 10}, {6, 10}, {9, 10}},
                  10);
}

struct Named {
  std::string name;
  SimplicialComplex complex;
};

inline std::vector<Named> all() {
  return {{"E1", e1()}, {"E2", e2()}, {"E3", e3()}, {"T2", t2()},
          {"D1", d1()}, {"D2", d2()}, {"D3", d3()}, {"D4", d4()}};
}

}  // namespace toric::fixtures
