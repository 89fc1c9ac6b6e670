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

#include "lexdom/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "lexdom/errors.hpp"

namespace lexdom {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void malformed(const std::string& why, std::size_t offset) {
  throw ParseError("malformed graph6 at byte " + std::to_string(offset) + ": " + why,
                   offset);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim_line_end(text);
  std::size_t pos = 0;
  if (text.starts_with(kGraph6Header)) pos = kGraph6Header.size();

  auto sextet = [&](std::size_t at) -> int {
    if (at >= text.size()) malformed("truncated input", at);
    const auto c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) {
      malformed("byte value " + std::to_string(c) + " outside [63,126]", at);
    }
    return c - 63;
  };

  long n = sextet(pos);
  if (n == 63) {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      throw CapacityError("graph6 8-byte size form exceeds vertex capacity");
    }
    n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | sextet(pos + i);
    pos += 4;
  } else {
    pos += 1;
  }
  if (n < 1) throw ParseError("graph6 graph with no vertices", pos);
  if (n > kMaxVertices) {
    throw CapacityError("graph6 order " + std::to_string(n) + " exceeds capacity " +
                        std::to_string(kMaxVertices));
  }
  const int order = static_cast<int>(n);
  const std::size_t nbits = static_cast<std::size_t>(order) * (order - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;

  std::vector<Bits> rows(order, 0);
  std::size_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int value = sextet(pos + k / 6);
      if ((value >> (5 - k % 6)) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  if (nbytes > 0 && nbits % 6 != 0) {
    const int last = sextet(pos + nbytes - 1);
    const int pad = static_cast<int>(6 - nbits % 6);
    if ((last & ((1 << pad) - 1)) != 0) malformed("nonzero padding bits", pos + nbytes - 1);
  }
  if (pos + nbytes != text.size()) malformed("trailing bytes after payload", pos + nbytes);
  return Graph::from_rows(order, std::move(rows));
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;

  auto next_fields = [&](long& a, long& b) {
    while (std::getline(in, line)) {
      ++lineno;
      std::istringstream fields(line);
      std::string extra;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (!(fields >> a >> b) || (fields >> extra)) {
        throw ParseError("edge list line " + std::to_string(lineno) +
                             ": expected two integers",
                         lineno);
      }
      return true;
    }
    return false;
  };

  long n = 0, m = 0;
  if (!next_fields(n, m)) throw ParseError("edge list is empty", 1);
  if (n < 1 || m < 0) {
    throw ParseError("edge list header must be \"n m\" with n >= 1, m >= 0", lineno);
  }
  if (n > kMaxVertices) {
    throw CapacityError("edge list order " + std::to_string(n) + " exceeds capacity");
  }
  std::vector<Edge> edges;
  for (long i = 0; i < m; ++i) {
    long u = 0, v = 0;
    if (!next_fields(u, v)) {
      throw ParseError("edge list ends after " + std::to_string(i) + " of " +
                           std::to_string(m) + " edges",
                       lineno + 1);
    }
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw ParseError("edge list line " + std::to_string(lineno) + ": invalid edge " +
                           std::to_string(u) + " " + std::to_string(v),
                       lineno);
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  long u = 0, v = 0;
  if (next_fields(u, v)) {
    throw ParseError("edge list line " + std::to_string(lineno) +
                         ": more edges than the header declares",
                     lineno);
  }
  return build_graph(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  const auto edges = g.edges();
  std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (auto [u, v] : edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph parse_graph(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) throw ParseError("empty graph input", 0);
  const auto rest = text.substr(start);
  const auto first_line = rest.substr(0, rest.find('\n'));
  if (first_line.find_first_of(" \t") != std::string_view::npos) {
    return parse_edge_list(text);
  }
  return parse_graph6(rest);
}

std::vector<Graph> parse_corpus(std::string_view text) {
  std::vector<Graph> out;
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    const auto eol = text.find('\n');
    auto line = trim_line_end(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), lineno);
    } catch (const CapacityError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), lineno);
    }
  }
  return out;
}

std::vector<Graph> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open corpus file " + path.string(), 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

// Family specs

namespace {

using Family = GraphFamilySpec::Family;

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr FamilyName kFamilyNames[] = {
    {Family::kPath, "path"},   {Family::kCycle, "cycle"}, {Family::kComplete, "complete"},
    {Family::kEmpty, "empty"}, {Family::kStar, "star"},   {Family::kUnion, "union"},
    {Family::kCorona, "corona"},
};

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GraphFamilySpec parse() {
    GraphFamilySpec spec = parse_spec();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("family spec at offset " + std::to_string(pos_) + ": " + why, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int parse_int() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) fail("expected a small non-negative integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  GraphFamilySpec parse_spec() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const auto name = text_.substr(start, pos_ - start);
    const FamilyName* found = nullptr;
    for (const auto& f : kFamilyNames) {
      if (f.name == name) found = &f;
    }
    if (found == nullptr) fail("unknown family '" + std::string(name) + "'");
    GraphFamilySpec spec{found->family, {}, {}};
    expect('(');
    switch (spec.family) {
      case Family::kUnion:
        spec.parts.push_back(parse_spec());
        expect(',');
        spec.parts.push_back(parse_spec());
        break;
      case Family::kCorona:
        spec.parts.push_back(parse_spec());
        expect(',');
        spec.params.push_back(parse_int());
        break;
      default:
        spec.params.push_back(parse_int());
    }
    expect(')');
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view family_name(Family f) {
  for (const auto& entry : kFamilyNames) {
    if (entry.family == f) return entry.name;
  }
  return "?";
}

[[noreturn]] void invalid(const GraphFamilySpec& spec, const std::string& why) {
  throw PreconditionError("invalid family spec " + to_string(spec) + ": " + why);
}

}  // namespace

GraphFamilySpec parse_family_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string to_string(const GraphFamilySpec& spec) {
  std::string out(family_name(spec.family));
  out += '(';
  bool first = true;
  auto sep = [&] {
    if (!first) out += ',';
    first = false;
  };
  for (const auto& part : spec.parts) {
    sep();
    out += to_string(part);
  }
  for (int p : spec.params) {
    sep();
    out += std::to_string(p);
  }
  out += ')';
  return out;
}

Graph generate(const GraphFamilySpec& spec) {
  const bool composite = spec.family == Family::kUnion || spec.family == Family::kCorona;
  const std::size_t want_parts = spec.family == Family::kUnion    ? 2
                                 : spec.family == Family::kCorona ? 1
                                                                  : 0;
  const std::size_t want_params = spec.family == Family::kUnion ? 0 : 1;
  if (spec.parts.size() != want_parts || spec.params.size() != want_params) {
    invalid(spec, "wrong number of arguments");
  }
  if (composite && spec.family == Family::kUnion) {
    return disjoint_union(generate(spec.parts[0]), generate(spec.parts[1]));
  }
  const int p = spec.params[0];
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::kPath:
      if (p < 1) invalid(spec, "path order must be at least 1");
      for (int v = 0; v + 1 < p; ++v) edges.emplace_back(v, v + 1);
      return build_graph(p, edges);
    case Family::kCycle:
      if (p < 3) invalid(spec, "cycle order must be at least 3");
      for (int v = 0; v < p; ++v) edges.emplace_back(v, (v + 1) % p);
      return build_graph(p, edges);
    case Family::kComplete:
      if (p < 1) invalid(spec, "complete graph order must be at least 1");
      for (int u = 0; u < p; ++u) {
        for (int v = u + 1; v < p; ++v) edges.emplace_back(u, v);
      }
      return build_graph(p, edges);
    case Family::kEmpty:
      if (p < 1) invalid(spec, "empty graph order must be at least 1");
      return build_graph(p, edges);
    case Family::kStar:
      if (p < 1) invalid(spec, "star needs at least one leaf");
      for (int v = 1; v <= p; ++v) edges.emplace_back(0, v);
      return build_graph(p + 1, edges);
    case Family::kCorona: {
      if (p < 1) invalid(spec, "corona needs k >= 1");
      const Graph base = generate(spec.parts[0]);
      const int nb = base.order();
      edges = base.edges();
      for (int v = 0; v < nb; ++v) {
        for (int i = 0; i < p; ++i) edges.emplace_back(v, nb + v * p + i);
      }
      return build_graph(nb * (p + 1), edges);
    }
    case Family::kUnion:
      break;
  }
  invalid(spec, "unhandled family");
}

}  // namespace lexdom
