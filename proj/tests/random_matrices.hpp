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
#ifndef TEQ_TESTS_RANDOM_MATRICES_HPP_
#define TEQ_TESTS_RANDOM_MATRICES_HPP_

#include <algorithm>
#include <random>

#include "teq/calculus.hpp"
#include "teq/matrix.hpp"

namespace teq::testing {

inline Matrix random_matrix(std::mt19937_64& rng, Index rows, Index cols,
                            long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<Rat> entries;
  for (Index k = 0; k < rows * cols; ++k) entries.emplace_back(dist(rng));
  return Matrix(rows, cols, std::move(entries));
}

inline Matrix random_pm1(std::mt19937_64& rng, Index rows, Index cols) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Rat> entries;
  for (Index k = 0; k < rows * cols; ++k) entries.emplace_back(coin(rng) ? 1 : -1);
  return Matrix(rows, cols, std::move(entries));
}

inline Matrix random_zero_one(std::mt19937_64& rng, Index rows, Index cols) {
  return random_matrix(rng, rows, cols, 0, 1);
}

inline Signs random_signs(std::mt19937_64& rng, Index n) {
  std::bernoulli_distribution coin(0.5);
  Signs s(n);
  for (auto& x : s) x = coin(rng) ? 1 : -1;
  return s;
}

inline IndexList random_permutation(std::mt19937_64& rng, Index n) {
  IndexList p(n);
  for (Index i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Signed row/column permutation of a matrix.
inline Matrix scramble(std::mt19937_64& rng, const Matrix& a) {
  const IndexList rp = random_permutation(rng, a.rows());
  const IndexList cp = random_permutation(rng, a.cols());
  return resign(a.submatrix(rp, cp), random_signs(rng, a.rows()),
                random_signs(rng, a.cols()));
}

}  // namespace teq::testing

#endif  // TEQ_TESTS_RANDOM_MATRICES_HPP_
