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
#include "teq/detail/int_kernel.hpp"

#include <cstdlib>

namespace teq::detail {

namespace {

constexpr std::int64_t kEntryBound = std::int64_t{1} << 20;
constexpr __int128 kSafeBound = static_cast<__int128>(1) << 62;

}  // namespace

std::optional<SmallIntMatrix> to_small_int(const Matrix& m) {
  SmallIntMatrix out;
  out.rows = static_cast<int>(m.rows());
  out.cols = static_cast<int>(m.cols());
  out.a.reserve(m.entries().size());
  for (const auto& x : m.entries()) {
    if (!is_integer(x) || !x.get_num().fits_slong_p()) return std::nullopt;
    const long v = x.get_num().get_si();
    if (std::labs(v) > kEntryBound) return std::nullopt;
    out.a.push_back(v);
  }
  return out;
}

Matrix clear_row_denominators(const Matrix& m) {
  std::vector<Rat> entries;
  entries.reserve(m.entries().size());
  for (Index i = 0; i < m.rows(); ++i) {
    Integer scale = 1;
    for (const auto& x : m.row_view(i)) scale = lcm(scale, x.get_den());
    for (const auto& x : m.row_view(i)) entries.emplace_back(x * scale);
  }
  return Matrix(m.rows(), m.cols(), std::move(entries));
}

bool small_det(std::int64_t* buf, int k, std::int64_t& out) {
  if (k == 0) {
    out = 1;
    return true;
  }
  int sign = 1;
  std::int64_t prev = 1;
  for (int p = 0; p < k - 1; ++p) {
    if (buf[p * k + p] == 0) {
      int swap = -1;
      for (int r = p + 1; r < k; ++r) {
        if (buf[r * k + p] != 0) {
          swap = r;
          break;
        }
      }
      if (swap < 0) {
        out = 0;
        return true;
      }
      for (int c = 0; c < k; ++c) std::swap(buf[p * k + c], buf[swap * k + c]);
      sign = -sign;
    }
    const std::int64_t pivot = buf[p * k + p];
    for (int r = p + 1; r < k; ++r) {
      for (int c = p + 1; c < k; ++c) {
        const __int128 v = static_cast<__int128>(buf[r * k + c]) * pivot -
                           static_cast<__int128>(buf[r * k + p]) *
                               buf[p * k + c];
        const __int128 q = v / prev;
        if (q >= kSafeBound || q <= -kSafeBound) return false;
        buf[r * k + c] = static_cast<std::int64_t>(q);
      }
      buf[r * k + p] = 0;
    }
    prev = pivot;
  }
  out = sign * buf[(k - 1) * k + (k - 1)];
  return true;
}

Integer integer_det(const Matrix& m) {
  const Index k = m.rows();
  if (k == 0) return 1;
  std::vector<Integer> a;
  a.reserve(k * k);
  for (const auto& x : m.entries()) a.push_back(x.get_num());
  int sign = 1;
  Integer prev = 1;
  for (Index p = 0; p + 1 < k; ++p) {
    if (a[p * k + p] == 0) {
      Index swap = k;
      for (Index r = p + 1; r < k; ++r) {
        if (a[r * k + p] != 0) {
          swap = r;
          break;
        }
      }
      if (swap == k) return 0;
      for (Index c = 0; c < k; ++c) std::swap(a[p * k + c], a[swap * k + c]);
      sign = -sign;
    }
    for (Index r = p + 1; r < k; ++r) {
      for (Index c = p + 1; c < k; ++c) {
        Integer v = a[r * k + c] * a[p * k + p] - a[r * k + p] * a[p * k + c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[r * k + c] = std::move(v);
      }
      a[r * k + p] = 0;
    }
    prev = a[p * k + p];
  }
  Integer d = a[k * k - 1];
  return sign < 0 ? Integer(-d) : d;
}

Integer minor(const SmallIntMatrix& m, std::span<const Index> rows,
              std::span<const Index> cols) {
  const int k = static_cast<int>(rows.size());
  std::int64_t buf[16 * 16];
  std::vector<std::int64_t> heap;
  std::int64_t* data = buf;
  if (k > 16) {
    heap.resize(static_cast<std::size_t>(k) * k);
    data = heap.data();
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      data[i * k + j] = m(static_cast<int>(rows[i]), static_cast<int>(cols[j]));
    }
  }
  std::int64_t out = 0;
  if (small_det(data, k, out)) return Integer(static_cast<long>(out));
  std::vector<Rat> entries;
  entries.reserve(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      entries.emplace_back(static_cast<long>(
          m(static_cast<int>(rows[i]), static_cast<int>(cols[j]))));
    }
  }
  return integer_det(Matrix(k, k, std::move(entries)));
}

}  // namespace teq::detail
