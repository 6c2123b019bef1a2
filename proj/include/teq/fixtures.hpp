// Copyright 2026 The teq Authors
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
#ifndef TEQ_FIXTURES_HPP_
#define TEQ_FIXTURES_HPP_

#include "teq/matrix.hpp"

// Named matrices shared by tests and the CLI. The same data ships as text
// files under fixtures/.
namespace teq::fixtures {

inline Matrix figure1() {
  return {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1},
          {1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}};
}

inline Matrix conjecture4() {
  return {{1, 1, 1, 1}, {1, -1, -1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}};
}

inline Matrix conjecture6() {
  return {{1, 1, 1, 1, 1, 1},   {1, 1, 1, 1, -1, -1}, {1, 1, 1, -1, -1, 1},
          {1, 1, -1, -1, 1, 1}, {1, -1, -1, 1, 1, 1}, {1, -1, 1, 1, 1, -1}};
}

inline Matrix min_non_tu2() { return {{1, 1}, {-1, 1}}; }

inline Matrix min_non_tu3() { return {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}; }

}  // namespace teq::fixtures

#endif  // TEQ_FIXTURES_HPP_
