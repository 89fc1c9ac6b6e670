// Copyright 2026 The lexdom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Named graphs used across the tests.

#ifndef LEXDOM_TESTS_FIXTURES_HPP_
#define LEXDOM_TESTS_FIXTURES_HPP_

#include <vector>

#include "lexdom/graph.hpp"
#include "lexdom/graph_io.hpp"

namespace fixtures {

using lexdom::Graph;

inline Graph family(const char* spec) {
  return lexdom::generate(lexdom::parse_family_spec(spec));
}

// a1=0, a2=1, a3=2, a4=3, a11=4, a12=5.
inline Graph figure1() {
  return lexdom::build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}});
}

// Triangle a1=0, a2=1, a3=2; a12=3 ~ a1,a2; a13=4 ~ a1,a3; a23=5 ~ a2,a3;
// the pendants of a_i are 6+3i, 7+3i, 8+3i.
inline Graph figure2() {
  std::vector<lexdom::Edge> edges{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3},
                                  {0, 4}, {2, 4}, {1, 5}, {2, 5}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) edges.push_back({i, 6 + 3 * i + j});
  }
  return lexdom::build_graph(15, edges);
}

}  // namespace fixtures

#endif  // LEXDOM_TESTS_FIXTURES_HPP_
