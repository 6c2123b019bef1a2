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
#include "teq/hunt.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "json.hpp"
#include "teq/calculus.hpp"
#include "teq/classify.hpp"
#include "teq/detail/int_kernel.hpp"
#include "teq/errors.hpp"
#include "teq/parallel.hpp"

namespace teq {

namespace {

// A 0/1 row with column c stored at bit (k - 1 - c), so integer order is
// lexicographic order.
using Row = std::uint16_t;
using Rows = std::vector<Row>;

constexpr Index kMaxCore = 9;

bool bit(Row r, Index k, Index c) { return (r >> (k - 1 - c)) & 1U; }

Rows to_rows(const Matrix& b) {
  Rows out;
  for (Index i = 0; i < b.rows(); ++i) {
    Row r = 0;
    for (Index j = 0; j < b.cols(); ++j) {
      if (b(i, j) != 0) r |= Row(1U << (b.cols() - 1 - j));
    }
    out.push_back(r);
  }
  return out;
}

Matrix to_matrix(const Rows& rows, Index k) {
  std::vector<IntVector> out;
  for (Row r : rows) {
    IntVector v(k);
    for (Index c = 0; c < k; ++c) v[c] = bit(r, k, c) ? 1 : 0;
    out.push_back(v);
  }
  return Matrix::from_int_rows(out, k);
}

std::string encode(const Rows& rows, Index k) {
  std::string s;
  for (Index i = 0; i < rows.size(); ++i) {
    if (i > 0) s += ',';
    for (Index c = 0; c < k; ++c) s += bit(rows[i], k, c) ? '1' : '0';
  }
  return s;
}

Rows decode(const std::string& s, Index k) {
  Rows out;
  Row r = 0;
  Index c = 0;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(r);
      r = 0;
      c = 0;
      continue;
    }
    if ((ch != '0' && ch != '1') || c >= k) throw ParseError("bad core encoding", 1, 1);
    if (ch == '1') r |= Row(1U << (k - 1 - c));
    ++c;
  }
  if (!s.empty()) out.push_back(r);
  return out;
}

// Smallest sorted row list over all column orders.
Rows bit_canonical(const Rows& rows, Index k) {
  std::vector<Index> perm(k);
  std::iota(perm.begin(), perm.end(), Index{0});
  Rows best;
  Rows cur(rows.size());
  do {
    for (Index i = 0; i < rows.size(); ++i) {
      Row r = 0;
      for (Index c = 0; c < k; ++c) {
        if (bit(rows[i], k, perm[c])) r |= Row(1U << (k - 1 - c));
      }
      cur[i] = r;
    }
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string class_key(const Rows& rows, Index k) { return encode(bit_canonical(rows, k), k); }

// Depth-first search over k x k 0/1 matrices with strictly decreasing
// even-weight rows, lexicographically non-increasing columns, and a last
// row forced to make every column sum even. Every tracked matrix keeps a
// table of all its square minors; a proper minor outside {0, 1, -1} or a
// full determinant other than +-2 prunes the branch. With the orbit
// enabled, every complement of the matrix is tracked as well.
class CoreSearch {
 public:
  CoreSearch(Index k, bool orbit)
      : k_(k), orbit_(orbit), full_(Row((1U << k) - 1)), by_size_(k + 1) {
    for (unsigned c = 0; c < (1U << k); ++c) by_size_[std::popcount(c)].push_back(c);
    const Index members = orbit ? (k + 1) * (k + 1) : 1;
    tables_.assign(members, std::vector<std::int16_t>(std::size_t(1) << (2 * k), 0));
    for (auto& t : tables_) t[0] = 1;
    ties_.push_back(k > 0 ? (1U << (k - 1)) - 1 : 0);
  }

  const Rows& rows() const { return rows_; }

  bool push(Row v) {
    const Index d = rows_.size();
    if (d >= k_) return false;
    if (d > 0 && v >= rows_.back()) return false;
    if (v == 0 || std::popcount(unsigned(v)) % 2 != 0) return false;
    unsigned ties = ties_.back();
    for (Index c = 0; c + 1 < k_; ++c) {
      if (!((ties >> c) & 1U)) continue;
      const bool left = bit(v, k_, c);
      const bool right = bit(v, k_, c + 1);
      if (!left && right) return false;
      if (left != right) ties &= ~(1U << c);
    }
    rows_.push_back(v);
    if (!extend_members(d)) {
      rows_.pop_back();
      return false;
    }
    ties_.push_back(ties);
    return true;
  }

  void pop() {
    rows_.pop_back();
    ties_.pop_back();
  }

  Row forced_last() const {
    Row x = 0;
    for (Row r : rows_) x ^= r;
    return x;
  }

  template <class Emit>
  void descend(Emit&& emit) {
    const Index d = rows_.size();
    if (d + 1 == k_) {
      if (push(forced_last())) {
        emit(rows_);
        pop();
      }
      return;
    }
    const Row top = d == 0 ? full_ : Row(rows_.back() - 1);
    for (Row v = top; v > 0; --v) {
      if (push(v)) {
        descend(emit);
        pop();
      }
    }
  }

 private:
  Row member_row(Index r, int i, int j) const {
    Row u = rows_[r];
    if (i >= 0 && Index(i) != r) u ^= rows_[i];
    if (j >= 0 && bit(u, k_, j)) u ^= Row(full_ ^ (1U << (k_ - 1 - j)));
    return u;
  }

  // Adds the row at position d to a member's minor table.
  bool add_row(std::vector<std::int16_t>& t, Index d, Row u) {
    const unsigned below = (1U << d) - 1;
    const std::size_t width = std::size_t(1) << k_;
    for (unsigned s = below;; s = (s - 1) & below) {
      const Index size = std::popcount(s);
      if (size + 1 <= k_) {
        for (unsigned cols : by_size_[size + 1]) {
          int det = 0;
          Index t_index = 0;
          for (Index c = 0; c < k_; ++c) {
            if (!((cols >> c) & 1U)) continue;
            if (bit(u, k_, c)) {
              const int minor = t[s * width + (cols & ~(1U << c))];
              det += ((size + t_index) % 2 == 0) ? minor : -minor;
            }
            ++t_index;
          }
          t[(s | (1U << d)) * width + cols] = std::int16_t(det);
          if (size + 1 < k_ ? (det > 1 || det < -1) : (det != 2 && det != -2)) return false;
        }
      }
      if (s == 0) break;
    }
    return true;
  }

  bool extend_members(Index d) {
    const int side = int(k_) + 1;
    auto table = [&](int i, int j) -> std::vector<std::int16_t>& { return tables_[(i + 1) * side + (j + 1)]; };
    if (!add_row(table(-1, -1), d, member_row(d, -1, -1))) return false;
    if (!orbit_) return true;
    for (int i = -1; i < int(d); ++i) {
      for (int j = -1; j < int(k_); ++j) {
        if (i == -1 && j == -1) continue;
        if (!add_row(table(i, j), d, member_row(d, i, j))) return false;
      }
    }
    for (int j = -1; j < int(k_); ++j) {
      auto& t = table(int(d), j);
      for (Index r = 0; r <= d; ++r) {
        if (!add_row(t, r, member_row(r, int(d), j))) return false;
      }
    }
    return true;
  }

  Index k_;
  bool orbit_;
  Row full_;
  std::vector<std::vector<unsigned>> by_size_;
  std::vector<std::vector<std::int16_t>> tables_;
  Rows rows_;
  std::vector<unsigned> ties_;
};

std::vector<Rows> shard_prefixes(Index k, bool orbit) {
  std::vector<Rows> out;
  CoreSearch search(k, orbit);
  const Row full = Row((1U << k) - 1);
  for (Row a = full; a > 0; --a) {
    if (!search.push(a)) continue;
    for (Row b = Row(a - 1); b > 0; --b) {
      if (!search.push(b)) continue;
      out.push_back(search.rows());
      search.pop();
    }
    search.pop();
  }
  return out;
}

struct ShardResult {
  Rows prefix;
  std::size_t candidates = 0;
  std::set<std::string> core_keys;
  std::set<std::string> found;  // class keys of cores passing the final test
};

ShardResult run_shard(Index k, bool orbit, const Rows& prefix) {
  ShardResult r;
  r.prefix = prefix;
  CoreSearch search(k, orbit);
  for (Row v : prefix) {
    if (!search.push(v)) return r;
  }
  search.descend([&](const Rows& rows) {
    ++r.candidates;
    const std::string key = class_key(rows, k);
    r.core_keys.insert(key);
    if (r.found.count(key) != 0) return;
    const Matrix b = to_matrix(rows, k);
    if (orbit ? is_complement_min_non_tu(b) : is_min_non_tu(b)) r.found.insert(key);
  });
  return r;
}

// Cores too small for a two-row prefix.
ShardResult run_small(Index k, bool orbit) {
  ShardResult r;
  CoreSearch search(k, orbit);
  search.descend([&](const Rows& rows) {
    ++r.candidates;
    const std::string key = class_key(rows, k);
    r.core_keys.insert(key);
    const Matrix b = to_matrix(rows, k);
    if (orbit ? is_complement_min_non_tu(b) : is_min_non_tu(b)) r.found.insert(key);
  });
  return r;
}

std::vector<ShardResult> run_all(Index k, bool orbit, unsigned jobs,
                                 const std::optional<std::string>& checkpoint, Index size,
                                 std::size_t& resumed) {
  if (k < 3) return {run_small(k, orbit)};
  const std::vector<Rows> prefixes = shard_prefixes(k, orbit);
  std::vector<std::optional<ShardResult>> results(prefixes.size());
  std::map<Rows, Index> where;
  for (Index s = 0; s < prefixes.size(); ++s) where[prefixes[s]] = s;

  using nlohmann::ordered_json;
  if (checkpoint) {
    std::ifstream in(*checkpoint);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (line.empty()) continue;
      ordered_json rec = ordered_json::parse(line, nullptr, false);
      if (rec.is_discarded()) {
        if (in.peek() == EOF) break;  // torn final record
        throw ParseError("malformed checkpoint record", number, 1);
      }
      if (rec.value("size", 0) != int(size)) throw ParseError("checkpoint is for another size", number, 1);
      if (rec.value("status", "") != "done") continue;
      Rows prefix;
      for (const auto& v : rec.at("shardPrefix")) prefix.push_back(Row(v.get<unsigned>()));
      auto it = where.find(prefix);
      if (it == where.end()) throw ParseError("unknown shard prefix", number, 1);
      ShardResult r;
      r.prefix = prefix;
      r.candidates = rec.at("candidates").get<std::size_t>();
      for (const auto& key : rec.at("coreKeys")) r.core_keys.insert(key.get<std::string>());
      for (const auto& key : rec.at("found")) r.found.insert(key.get<std::string>());
      if (!results[it->second]) ++resumed;
      results[it->second] = std::move(r);
    }
  }

  std::vector<Index> todo;
  for (Index s = 0; s < prefixes.size(); ++s) {
    if (!results[s]) todo.push_back(s);
  }
  std::mutex mu;
  std::ofstream out;
  if (checkpoint) out.open(*checkpoint, std::ios::app);
  parallel_for(todo.size(), jobs, [&](std::size_t t) {
    const Index s = todo[t];
    ShardResult r = run_shard(k, orbit, prefixes[s]);
    std::lock_guard<std::mutex> lock(mu);
    if (out.is_open()) {
      ordered_json rec;
      rec["size"] = size;
      rec["shardPrefix"] = r.prefix;
      rec["status"] = "done";
      rec["candidates"] = r.candidates;
      rec["coreKeys"] = r.core_keys;
      rec["found"] = r.found;
      out << rec.dump() << '\n';
      out.flush();
    }
    results[s] = std::move(r);
  });
  std::vector<ShardResult> all;
  for (auto& r : results) all.push_back(std::move(*r));
  return all;
}

void require_pm1_square(const Matrix& a) {
  if (!a.is_square() || a.rows() == 0) throw DomainError("expected a nonempty square matrix");
  for (const auto& e : a.entries()) {
    if (e != 1 && e != -1) throw DomainError("expected +-1 entries");
  }
}

}  // namespace

std::string canonical_invariant(const Matrix& a) {
  require_pm1_square(a);
  const Index n = a.rows();
  std::vector<std::string> parts;
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      const Rows rows = to_rows(core_of(a, r, c).core);
      std::vector<int> row_sums;
      std::vector<int> col_sums(n - 1, 0);
      for (Row v : rows) {
        row_sums.push_back(std::popcount(unsigned(v)));
        for (Index j = 0; j + 1 < n; ++j) col_sums[j] += bit(v, n - 1, j);
      }
      std::sort(row_sums.begin(), row_sums.end());
      std::sort(col_sums.begin(), col_sums.end());
      std::string s;
      for (int x : row_sums) s += std::to_string(x) + ' ';
      s += '|';
      for (int x : col_sums) s += ' ' + std::to_string(x);
      parts.push_back(s);
    }
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += p + ';';
  return out;
}

CanonicalForm canonical_form(const Matrix& a) {
  require_pm1_square(a);
  const Index n = a.rows();
  if (n - 1 > kMaxCore) throw UnsupportedError("canonical forms are limited to size 10");
  std::optional<Rows> best;
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      Rows rows = bit_canonical(to_rows(core_of(a, r, c).core), n - 1);
      if (!best || rows < *best) best = std::move(rows);
    }
  }
  CanonicalForm out;
  out.matrix = from_core(to_matrix(*best, n - 1));
  out.key = std::to_string(n) + ":" + encode(*best, n - 1);
  return out;
}

bool equivalent(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (canonical_invariant(a) != canonical_invariant(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Matrix> enumerate_min_non_tu_cores(Index k, unsigned jobs) {
  if (k % 2 == 0) {
    throw DomainError("cores of thick interlaces have odd size; even sizes are not enumerated");
  }
  if (k > kMaxCore) throw UnsupportedError("core enumeration is limited to size 9");
  std::size_t resumed = 0;
  std::set<std::string> keys;
  for (const auto& r : run_all(k, false, jobs, std::nullopt, k, resumed)) {
    keys.insert(r.found.begin(), r.found.end());
  }
  std::vector<Matrix> out;
  for (const auto& key : keys) out.push_back(to_matrix(decode(key, k), k));
  return out;
}

SearchReport enumerate_thick_interlaces(Index n, const HuntOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (n % 2 != 0) {
    throw DomainError("thick interlaces have even size: their cores must have odd size");
  }
  if (n > 8) throw UnsupportedError("thick interlace search is limited to size 8");
  SearchReport report;
  report.size = n;
  if (n == 0) return report;
  const Index k = n - 1;
  std::vector<ShardResult> shards =
      run_all(k, true, options.jobs, options.checkpoint, n, report.shards_resumed);
  report.shards = shards.size();
  std::set<std::string> core_keys;
  std::set<std::string> found;
  for (const auto& s : shards) {
    report.candidates_examined += s.candidates;
    core_keys.insert(s.core_keys.begin(), s.core_keys.end());
    found.insert(s.found.begin(), s.found.end());
  }
  report.core_classes_examined = core_keys.size();
  std::set<CanonicalForm> reps;
  for (const auto& key : found) {
    const Matrix b = to_matrix(decode(key, k), k);
    if (!is_complement_min_non_tu(b)) throw ConstructionError("checkpoint lists a core that fails");
    const Matrix a = from_core(b);
    const auto type = brick_type(a);
    if (!type || type->tag != BrickTag::ThickInterlace) {
      throw ConstructionError("lifted core is not a thick te-interlace");
    }
    reps.insert(canonical_form(a));
  }
  report.representatives.assign(reps.begin(), reps.end());
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<CanonicalForm> raw_thick_interlaces(Index n) {
  if (n == 0 || n > 5) throw UnsupportedError("raw enumeration is limited to sizes 1 through 5");
  const Index k = n - 1;
  const std::uint64_t total = std::uint64_t(1) << (k * k);
  std::set<CanonicalForm> reps;
  const Integer target = Integer(1) << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Rows rows(k);
    for (Index i = 0; i < k; ++i) rows[i] = Row((bits >> (i * k)) & ((1U << k) - 1));
    const Matrix a = from_core(to_matrix(rows, k));
    if (abs(det(a)) != Rat(target)) continue;
    const auto type = brick_type(a);
    if (type && type->tag == BrickTag::ThickInterlace) reps.insert(canonical_form(a));
  }
  return {reps.begin(), reps.end()};
}

}  // namespace teq
