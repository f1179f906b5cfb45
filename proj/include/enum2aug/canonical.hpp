// Copyright 2026 The enum2aug Authors
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

#ifndef ENUM2AUG_CANONICAL_HPP_
#define ENUM2AUG_CANONICAL_HPP_

#include <algorithm>
#include <numeric>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "enum2aug/graph.hpp"

namespace enum2aug {

// Sequence element over colors and non-negative integers.
struct Symbol {
  enum class Kind { kColor, kInteger };
  Kind kind = Kind::kInteger;
  int value = 0;

  static Symbol Col(int c) { return {Kind::kColor, c}; }
  static Symbol Int(int k) { return {Kind::kInteger, k}; }
  bool operator==(const Symbol&) const = default;
};

// Lexicographic order; a proper prefix is smaller. Colors compare by order
// index. Comparing a color against an integer is an error.
inline std::strong_ordering lex_compare(std::span<const Symbol> a,
                                        std::span<const Symbol> b) {
  size_t k = std::min(a.size(), b.size());
  for (size_t i = 0; i < k; ++i) {
    if (a[i].kind != b[i].kind) {
      throw TypeMismatch("color compared against an integer");
    }
    if (auto c = a[i].value <=> b[i].value; c != 0) return c;
  }
  return a.size() <=> b.size();
}

// Stable ascending order of integer sequences by bucket passes from the last
// position to the first. Values must lie in [0, alphabet_size).
inline std::vector<int> lex_sort(const std::vector<std::vector<int>>& seqs,
                                 int alphabet_size) {
  const int count = static_cast<int>(seqs.size());
  size_t max_len = 0;
  for (const auto& s : seqs) max_len = std::max(max_len, s.size());
  std::vector<std::vector<int>> by_length(max_len + 1);
  for (int i = 0; i < count; ++i) by_length[seqs[i].size()].push_back(i);

  std::vector<int> queue;
  std::vector<std::vector<int>> buckets(alphabet_size);
  for (size_t pos = max_len; pos-- > 0;) {
    std::vector<int> pass = by_length[pos + 1];
    pass.insert(pass.end(), queue.begin(), queue.end());
    for (int i : pass) {
      int c = seqs[i][pos];
      if (c < 0 || c >= alphabet_size) {
        throw IndexOutOfRange("symbol outside the sort alphabet");
      }
      buckets[c].push_back(i);
    }
    queue.clear();
    for (auto& b : buckets) {
      queue.insert(queue.end(), b.begin(), b.end());
      b.clear();
    }
  }
  std::vector<int> out = by_length[0];
  out.insert(out.end(), queue.begin(), queue.end());
  return out;
}

// Color-depth sequence c0 d0 c1 d1 ... paired with the multiplicity sequence
// of a left-heavy ordered tree.
struct Signature {
  std::vector<int> delta;
  std::vector<int> mult;

  int size() const { return static_cast<int>(delta.size()) / 2; }
  auto operator<=>(const Signature&) const = default;
  bool operator==(const Signature&) const = default;
};

struct SignatureHash {
  size_t operator()(const Signature& s) const {
    size_t h = 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](int v) {
      h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (int v : s.delta) mix(v);
    mix(-1);
    for (int v : s.mult) mix(v);
    return h;
  }
};

// Adds k to every depth entry.
inline std::vector<int> k_shift(const std::vector<int>& delta, int k) {
  std::vector<int> out = delta;
  for (size_t i = 1; i < out.size(); i += 2) out[i] += k;
  return out;
}

// Sort key with the pair order built in: delta, separator, multiplicities.
// Every symbol is shifted up by one so the separator is the least symbol.
inline std::vector<int> signature_key(const std::vector<int>& delta,
                                      const std::vector<int>& mult) {
  std::vector<int> key;
  key.reserve(delta.size() + mult.size() + 1);
  for (int v : delta) key.push_back(v + 1);
  key.push_back(0);
  for (int v : mult) key.push_back(v + 1);
  return key;
}

inline int key_alphabet(const std::vector<std::vector<int>>& keys) {
  int top = 0;
  for (const auto& k : keys) {
    for (int v : k) top = std::max(top, v);
  }
  return top + 1;
}

namespace internal {

// a + b > b + a, without building either sequence.
inline bool concat_before(const std::vector<int>& a,
                          const std::vector<int>& b) {
  const size_t total = a.size() + b.size();
  auto at = [](const std::vector<int>& x, const std::vector<int>& y,
               size_t i) { return i < x.size() ? x[i] : y[i - x.size()]; };
  for (size_t i = 0; i < total; ++i) {
    int l = at(a, b, i);
    int r = at(b, a, i);
    if (l != r) return l > r;
  }
  return false;
}

}  // namespace internal

struct SubtreeSignatures {
  std::vector<Signature> sig;                    // per node
  std::vector<std::vector<int>> ordered_children;  // left-heavy order
  std::vector<int> size;                         // nodes in each subtree

  // Preorder of the left-heavy ordering.
  std::vector<int> canonical_preorder(int root = 0) const {
    std::vector<int> out;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      out.push_back(a);
      const auto& ch = ordered_children[a];
      for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }
    return out;
  }

  // Signature of the subtree at `node` with the child subtree at `skip`
  // removed. The remaining children stay left-heavy, so the result is the
  // canonical form of the smaller tree.
  Signature without_child(const RootedTree& t, int node, int skip) const {
    Signature s;
    s.delta = {t.color[node], 0};
    for (int c : ordered_children[node]) {
      if (c == skip) continue;
      std::vector<int> d = k_shift(sig[c].delta, 1);
      s.delta.insert(s.delta.end(), d.begin(), d.end());
      s.mult.push_back(t.parent_mult[c]);
      s.mult.insert(s.mult.end(), sig[c].mult.begin(), sig[c].mult.end());
    }
    return s;
  }
};

// Left-heavy signatures of every subtree, computed bottom-up. Child a goes
// before child b when delta_a + delta_b beats delta_b + delta_a, so the
// concatenation is maximal even when one delta is a prefix of another; equal
// deltas fall back to the multiplicity sequences. Both descending.
inline SubtreeSignatures subtree_signatures(const RootedTree& t) {
  const int n = t.size();
  SubtreeSignatures out;
  out.sig.resize(n);
  out.ordered_children.resize(n);
  out.size.assign(n, 1);
  for (int u = n - 1; u >= 0; --u) {
    const auto& ch = t.children[u];
    std::vector<std::vector<int>> shifted(ch.size());
    std::vector<std::vector<int>> mults(ch.size());
    for (size_t i = 0; i < ch.size(); ++i) {
      int c = ch[i];
      shifted[i] = k_shift(out.sig[c].delta, 1);
      mults[i].push_back(t.parent_mult[c]);
      mults[i].insert(mults[i].end(), out.sig[c].mult.begin(),
                      out.sig[c].mult.end());
      out.size[u] += out.size[c];
    }
    std::vector<int> order(ch.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      if (shifted[a] == shifted[b]) return mults[a] > mults[b];
      return internal::concat_before(shifted[a], shifted[b]);
    });
    Signature& s = out.sig[u];
    s.delta = {t.color[u], 0};
    for (int i : order) {
      out.ordered_children[u].push_back(ch[i]);
      s.delta.insert(s.delta.end(), shifted[i].begin(), shifted[i].end());
      s.mult.insert(s.mult.end(), mults[i].begin(), mults[i].end());
    }
  }
  return out;
}

inline Signature tree_signature(const RootedTree& t) {
  return subtree_signatures(t).sig[0];
}

// Dense ranks 1..size() of a set of signatures, increasing with the
// signature order.
class RankTable {
 public:
  RankTable() = default;

  explicit RankTable(std::vector<Signature> sigs) {
    std::vector<std::vector<int>> keys;
    keys.reserve(sigs.size());
    for (const auto& s : sigs) keys.push_back(signature_key(s.delta, s.mult));
    std::vector<int> order = lex_sort(keys, key_alphabet(keys));
    int rank = 0;
    const std::vector<int>* last = nullptr;
    for (int i : order) {
      if (last == nullptr || keys[i] != *last) ++rank;
      last = &keys[i];
      rank_of_.emplace(std::move(sigs[i]), rank);
    }
    size_ = rank;
  }

  int size() const { return size_; }
  bool contains(const Signature& s) const { return rank_of_.count(s) != 0; }
  int rank(const Signature& s) const {
    auto it = rank_of_.find(s);
    if (it == rank_of_.end()) throw Error("signature outside the ranked set");
    return it->second;
  }

 private:
  std::unordered_map<Signature, int, SignatureHash> rank_of_;
  int size_ = 0;
};

struct TreeRanking {
  RankTable table;
  std::vector<std::vector<int>> node_rank;  // per tree, per node
  std::vector<SubtreeSignatures> signatures;
};

// Ranks every subtree of every given tree in one shared order.
inline TreeRanking tree_ranking(std::span<const RootedTree> trees) {
  TreeRanking out;
  std::vector<Signature> all;
  for (const RootedTree& t : trees) {
    out.signatures.push_back(subtree_signatures(t));
    const auto& s = out.signatures.back().sig;
    all.insert(all.end(), s.begin(), s.end());
  }
  out.table = RankTable(std::move(all));
  for (const auto& ss : out.signatures) {
    std::vector<int> r;
    r.reserve(ss.sig.size());
    for (const auto& s : ss.sig) r.push_back(out.table.rank(s));
    out.node_rank.push_back(std::move(r));
  }
  return out;
}

}  // namespace enum2aug

#endif  // ENUM2AUG_CANONICAL_HPP_
