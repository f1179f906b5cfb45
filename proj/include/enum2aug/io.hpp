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

#ifndef ENUM2AUG_IO_HPP_
#define ENUM2AUG_IO_HPP_

#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "enum2aug/enumerator.hpp"
#include "enum2aug/feature.hpp"
#include "enum2aug/graph.hpp"

namespace enum2aug {

namespace internal {

inline std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline long to_long(const std::string& s, int line) {
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
}

inline std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return in;
}

}  // namespace internal

// Graph files ------------------------------------------------------------------

// Reads concatenated graph records. Multiplicities above d are rejected.
inline std::vector<ChemicalGraph> parse_graphs(
    std::istream& in, std::shared_ptr<const Alphabet> alphabet, int d) {
  std::vector<ChemicalGraph> out;
  std::string raw;
  int line = 0;
  // Next non-comment, non-blank line split into words.
  auto next = [&](std::vector<std::string>& words) {
    while (std::getline(in, raw)) {
      ++line;
      if (!raw.empty() && raw.back() == '\r') {
        throw ParseError(line, "CR line ending");
      }
      if (!raw.empty() && raw[0] == '#') continue;
      words = internal::split(raw);
      if (!words.empty()) return true;
    }
    return false;
  };
  std::vector<std::string> w;
  while (next(w)) {
    if (w.size() != 3 || w[0] != "graph") {
      throw ParseError(line, "expected 'graph <n> <m>'");
    }
    const long n = internal::to_long(w[1], line);
    const long m = internal::to_long(w[2], line);
    if (n < 0 || m < 0 || n > 255) throw ParseError(line, "bad graph size");
    std::vector<int> colors;
    for (long i = 0; i < n; ++i) {
      if (!next(w)) throw ParseError(line, "missing vertex line");
      if (w.size() != 2) throw ParseError(line, "expected '<index> <color>'");
      if (internal::to_long(w[0], line) != i) {
        throw ParseError(line, "vertex indices must be 0..n-1 in order");
      }
      std::optional<int> c = alphabet->find(w[1]);
      if (!c) throw ParseError(line, "unknown color '" + w[1] + "'");
      colors.push_back(*c);
    }
    ChemicalGraph g(alphabet, colors, d);
    std::vector<Edge> edges;
    for (long i = 0; i < m; ++i) {
      if (!next(w)) throw ParseError(line, "missing edge line");
      if (w.size() != 3) throw ParseError(line, "expected '<u> <v> <mult>'");
      long u = internal::to_long(w[0], line);
      long v = internal::to_long(w[1], line);
      long k = internal::to_long(w[2], line);
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw IndexOutOfRange("line " + std::to_string(line) +
                              ": vertex index out of range");
      }
      if (u >= v) throw ParseError(line, "edge endpoints must satisfy u < v");
      if (k < 1 || k > d) throw ParseError(line, "multiplicity outside [1, d]");
      for (const Edge& e : edges) {
        if (e.u == u && e.v == v) {
          throw DuplicateEdge("line " + std::to_string(line) +
                              ": duplicate edge");
        }
      }
      edges.push_back({static_cast<int>(u), static_cast<int>(v),
                       static_cast<int>(k)});
    }
    out.push_back(ChemicalGraph::FromEdges(alphabet, colors, edges, d));
  }
  return out;
}

inline std::vector<ChemicalGraph> parse_graph_file(
    const std::string& path, std::shared_ptr<const Alphabet> alphabet,
    int d) {
  std::ifstream in = internal::open_in(path);
  return parse_graphs(in, std::move(alphabet), d);
}

inline void write_graph(std::ostream& out, const ChemicalGraph& g) {
  std::vector<Edge> edges = g.edges();
  out << "graph " << g.n() << ' ' << edges.size() << '\n';
  for (Vertex v = 0; v < g.n(); ++v) {
    out << v << ' ' << g.alphabet()->symbol(g.color(v)) << '\n';
  }
  for (const Edge& e : edges) {
    out << e.u << ' ' << e.v << ' ' << e.mult << '\n';
  }
}

// Bounds files and instances ---------------------------------------------------

struct InstanceSpec {
  FeatureBounds bounds;  // carries the alphabet, K and d
  int L = 1;
  ClosureMode mode = ClosureMode::kA;
  int slack = 0;

  void validate() const {
    bounds.validate();
    if (L < 0 || L > bounds.max_len) throw BoundsViolation("L outside [0, K]");
    if (slack < 0) throw BoundsViolation("negative slack");
  }
};

inline InstanceSpec parse_bounds(std::istream& in) {
  InstanceSpec spec;
  std::vector<std::string> symbols;
  std::map<std::string, int> valence;
  std::optional<int> d;
  std::optional<int> K;
  struct RawSeq {
    int line;
    std::vector<std::string> words;
  };
  std::vector<RawSeq> seqs;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw[0] == '#') continue;
    std::vector<std::string> w = internal::split(raw);
    if (w.empty()) continue;
    if (w[0] == "sigma") {
      if (w.size() < 2) throw ParseError(line, "empty sigma");
      symbols.assign(w.begin() + 1, w.end());
    } else if (w[0] == "valence") {
      if (w.size() != 2) throw ParseError(line, "expected 'valence <c>=<v>'");
      size_t eq = w[1].find('=');
      if (eq == std::string::npos) {
        throw ParseError(line, "expected 'valence <c>=<v>'");
      }
      valence[w[1].substr(0, eq)] =
          static_cast<int>(internal::to_long(w[1].substr(eq + 1), line));
    } else if (w[0] == "maxmult") {
      if (w.size() != 2) throw ParseError(line, "expected 'maxmult <d>'");
      d = static_cast<int>(internal::to_long(w[1], line));
    } else if (w[0] == "maxlen") {
      if (w.size() != 2) throw ParseError(line, "expected 'maxlen <K>'");
      K = static_cast<int>(internal::to_long(w[1], line));
    } else if (w[0] == "seq") {
      if (w.size() < 4 || w.size() % 2 != 0) {
        throw ParseError(line, "expected 'seq <c0> [<m> <c>]... <lo> <hi>'");
      }
      seqs.push_back({line, std::vector<std::string>(w.begin() + 1, w.end())});
    } else {
      throw ParseError(line, "unknown directive '" + w[0] + "'");
    }
  }
  if (symbols.empty()) throw ParseError(line, "missing sigma line");
  if (!d) throw ParseError(line, "missing maxmult line");
  if (!K) throw ParseError(line, "missing maxlen line");
  std::vector<int> vals;
  for (const auto& s : symbols) {
    auto it = valence.find(s);
    if (it == valence.end()) throw ParseError(line, "no valence for " + s);
    vals.push_back(it->second);
  }
  try {
    spec.bounds.alphabet = std::make_shared<const Alphabet>(symbols, vals);
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
  if (*d < 1 || *K < 0) throw ParseError(line, "maxmult or maxlen out of range");
  spec.bounds.max_mult = *d;
  spec.bounds.max_len = *K;
  for (const RawSeq& s : seqs) {
    ColoredSequence t;
    const size_t body = s.words.size() - 2;
    for (size_t i = 0; i < body; ++i) {
      if (i % 2 == 0) {
        std::optional<int> c = spec.bounds.alphabet->find(s.words[i]);
        if (!c) throw ParseError(s.line, "unknown color '" + s.words[i] + "'");
        t.items.push_back(*c);
      } else {
        long m = internal::to_long(s.words[i], s.line);
        if (m < 1 || m > *d) {
          throw ParseError(s.line, "multiplicity outside [1, d]");
        }
        t.items.push_back(static_cast<int>(m));
      }
    }
    FeatureRange r{internal::to_long(s.words[body], s.line),
                   internal::to_long(s.words[body + 1], s.line)};
    if (spec.bounds.ranges.count(t)) {
      throw ParseError(s.line, "sequence declared twice");
    }
    spec.bounds.ranges[t] = r;
  }
  spec.bounds.validate();
  return spec;
}

inline InstanceSpec parse_bounds_file(const std::string& path) {
  std::ifstream in = internal::open_in(path);
  return parse_bounds(in);
}

inline void write_bounds(std::ostream& out, const FeatureBounds& b) {
  const Alphabet& a = *b.alphabet;
  out << "sigma";
  for (int c = 0; c < a.size(); ++c) out << ' ' << a.symbol(c);
  out << '\n';
  for (int c = 0; c < a.size(); ++c) {
    out << "valence " << a.symbol(c) << '=' << a.valence(c) << '\n';
  }
  out << "maxmult " << b.max_mult << '\n';
  out << "maxlen " << b.max_len << '\n';
  for (const auto& [t, r] : b.ranges) {
    out << "seq " << to_string(t, a) << ' ' << r.lower << ' ' << r.upper
        << '\n';
  }
}

// Same graph over the alphabet of the colors it uses, in the original order.
inline ChemicalGraph restrict_to_used_colors(const ChemicalGraph& g) {
  const Alphabet& a = *g.alphabet();
  std::vector<int> remap(a.size(), -1);
  std::vector<std::string> symbols;
  std::vector<int> vals;
  for (int c = 0; c < a.size(); ++c) {
    bool used = false;
    for (int x : g.colors()) used = used || x == c;
    if (!used) continue;
    remap[c] = static_cast<int>(symbols.size());
    symbols.push_back(a.symbol(c));
    vals.push_back(a.valence(c));
  }
  auto sub = std::make_shared<const Alphabet>(symbols, vals);
  std::vector<int> colors;
  for (int x : g.colors()) colors.push_back(remap[x]);
  std::vector<Edge> edges = g.edges();
  return ChemicalGraph::FromEdges(sub, colors, edges, g.max_mult());
}

// Bounds from a target graph: the support is every sequence of length at
// most K in the target, over the target's own colors. Length-0 counts are
// pinned; other entries get [max(0, f - s), f + s]. d defaults to the
// target's largest multiplicity.
inline InstanceSpec make_instance_from_target(const ChemicalGraph& target,
                                              int K, int L, int s,
                                              ClosureMode mode, int d = 0) {
  if (s < 0) throw BoundsViolation("negative slack");
  ChemicalGraph g = restrict_to_used_colors(target);
  int top = 1;
  for (const Edge& e : g.edges()) top = std::max(top, e.mult);
  InstanceSpec spec;
  spec.bounds.alphabet = g.alphabet();
  spec.bounds.max_len = K;
  spec.bounds.max_mult = d > 0 ? d : top;
  spec.L = L;
  spec.mode = mode;
  spec.slack = s;
  const FeatureVector f = frequency_vector(g, K);
  for (const auto& [t, k] : f.entries()) {
    FeatureRange r = t.length() == 0 ? FeatureRange{k, k}
                                     : FeatureRange{std::max(0L, k - s), k + s};
    spec.bounds.ranges[t] = r;
  }
  spec.validate();
  return spec;
}

// Results --------------------------------------------------------------------

struct ResultsHeader {
  std::string instance_id;
  int K = 0;
  int L = 0;
  int s = 0;
  ClosureMode mode = ClosureMode::kA;
};

inline char mode_letter(ClosureMode m) { return m == ClosureMode::kA ? 'a' : 'p'; }

inline void write_results_header(std::ostream& out, const ResultsHeader& h) {
  out << "# enum2aug results\n";
  out << "# instance " << (h.instance_id.empty() ? "-" : h.instance_id)
      << " K " << h.K << " L " << h.L << " s " << h.s << " mode "
      << mode_letter(h.mode) << '\n';
}

inline void write_record(std::ostream& out, const ChildRecord& r) {
  out << "# seed " << r.provenance.seed << " pair " << r.provenance.x << ','
      << r.provenance.y << " p " << r.provenance.p << '\n';
  write_graph(out, r.graph);
}

inline void write_results_footer(std::ostream& out, int seeds, long count) {
  out << "# summary seeds " << seeds << " count " << count << '\n';
}

struct StatsRow {
  std::string instance_id;
  int K = 0;
  int L = 0;
  int s = 0;
  char mode = 'a';
  long count = 0;
  int seeds = 0;
  std::optional<double> millis;
};

// Reads the header and summary comments of a results file. Graph records
// are counted and must agree with the summary.
inline StatsRow read_results_summary(std::istream& in) {
  StatsRow row;
  bool have_header = false;
  bool have_summary = false;
  long records = 0;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::vector<std::string> w = internal::split(raw);
    if (w.empty()) continue;
    if (w[0] == "graph") ++records;
    if (w[0] != "#" || w.size() < 2) continue;
    if (w[1] == "instance" && w.size() == 11) {
      row.instance_id = w[2];
      row.K = static_cast<int>(internal::to_long(w[4], line));
      row.L = static_cast<int>(internal::to_long(w[6], line));
      row.s = static_cast<int>(internal::to_long(w[8], line));
      if (w[10] != "a" && w[10] != "p") throw ParseError(line, "bad mode");
      row.mode = w[10][0];
      have_header = true;
    } else if (w[1] == "summary" && w.size() == 6) {
      row.seeds = static_cast<int>(internal::to_long(w[3], line));
      row.count = internal::to_long(w[5], line);
      have_summary = true;
    } else if (w[1] == "millis" && w.size() == 3) {
      try {
        row.millis = std::stod(w[2]);
      } catch (const std::exception&) {
        throw ParseError(line, "bad millis value");
      }
    }
  }
  if (!have_header) throw ParseError(line, "missing instance header");
  if (!have_summary) throw ParseError(line, "missing summary line");
  if (records != row.count) {
    throw ParseError(line, "summary count disagrees with graph records");
  }
  return row;
}

inline void write_stats_csv(std::ostream& out,
                            const std::vector<StatsRow>& rows) {
  out << "instance_id,K,L,s,mode,count,seeds,millis\n";
  for (const StatsRow& r : rows) {
    out << r.instance_id << ',' << r.K << ',' << r.L << ',' << r.s << ','
        << r.mode << ',' << r.count << ',' << r.seeds << ',';
    if (r.millis) {
      std::ostringstream ms;
      ms.setf(std::ios::fixed);
      ms.precision(1);
      ms << *r.millis;
      out << ms.str();
    }
    out << '\n';
  }
}

}  // namespace enum2aug

#endif  // ENUM2AUG_IO_HPP_
