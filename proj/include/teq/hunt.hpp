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
#ifndef TEQ_HUNT_HPP_
#define TEQ_HUNT_HPP_

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "teq/matrix.hpp"

namespace teq {

// Representative of a +-1 square matrix under resigning and row/column
// permutation: all-ones first row and column, with the smallest core key.
struct CanonicalForm {
  Matrix matrix;
  std::string key;

  bool operator==(const CanonicalForm& other) const { return key == other.key; }
  bool operator<(const CanonicalForm& other) const { return key < other.key; }
};

// Sorted row and column sums of every core, a cheap equivalence invariant.
std::string canonical_invariant(const Matrix& a);

// Throws DomainError unless a is square with +-1 entries.
CanonicalForm canonical_form(const Matrix& a);

bool equivalent(const Matrix& a, const Matrix& b);

// k x k 0/1 minimally non-totally-unimodular matrices, one per class under
// row and column permutation, ordered by key. Throws DomainError for even k
// (such matrices are cores only of odd-sized thick interlaces, which do not
// exist) and UnsupportedError above k = 9.
std::vector<Matrix> enumerate_min_non_tu_cores(Index k, unsigned jobs = 1);

struct SearchReport {
  Index size = 0;
  std::vector<CanonicalForm> representatives;
  std::size_t candidates_examined = 0;
  std::size_t core_classes_examined = 0;
  std::size_t shards = 0;
  std::size_t shards_resumed = 0;
  std::chrono::duration<double> elapsed{};
};

struct HuntOptions {
  unsigned jobs = 1;
  // Newline-delimited JSON; finished shards found here are skipped and new
  // ones are appended.
  std::optional<std::string> checkpoint;
};

// Thick te-interlaces of size n up to resigning and permutation. Throws
// DomainError for odd n and UnsupportedError above n = 8.
SearchReport enumerate_thick_interlaces(Index n, const HuntOptions& options = {});

// Brute force over all (n-1)^2-bit cores; for cross-checking, n <= 5.
std::vector<CanonicalForm> raw_thick_interlaces(Index n);

}  // namespace teq

#endif  // TEQ_HUNT_HPP_
