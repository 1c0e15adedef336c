#include "stdiam/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace stdiam {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) tokens.push_back(std::move(tok));
  return tokens;
}

bool skippable(const std::vector<std::string>& tokens) {
  return tokens.empty() || tokens[0][0] == 'c' || tokens[0][0] == '#';
}

/// Parses a signed decimal integer occupying the whole token.
bool parse_int(const std::string& tok, long long& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

const char* to_string(ParseErrorKind kind) noexcept {
  switch (kind) {
    case ParseErrorKind::malformed_header:
      return "malformed_header";
    case ParseErrorKind::vertex_out_of_range:
      return "vertex_out_of_range";
    case ParseErrorKind::negative_weight:
      return "negative_weight";
    case ParseErrorKind::weight_in_unweighted:
      return "weight_in_unweighted";
    case ParseErrorKind::missing_weight:
      return "missing_weight";
    case ParseErrorKind::malformed_line:
      return "malformed_line";
    case ParseErrorKind::edge_count_mismatch:
      return "edge_count_mismatch";
    case ParseErrorKind::malformed_sets:
      return "malformed_sets";
  }
  return "?";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line,
                       const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) +
                         (line ? " at line " + std::to_string(line) : "") +
                         ": " + what),
      kind_(kind),
      line_(line) {}

Graph load_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  bool directed = false;
  bool weighted = false;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = split(line);
    if (skippable(tok)) continue;
    if (!have_header) {
      long long d = 0;
      long long w = 0;
      if (tok.size() != 5 || tok[0] != "p" || !parse_int(tok[1], n) ||
          !parse_int(tok[2], m) || !parse_int(tok[3], d) ||
          !parse_int(tok[4], w) || n < 0 || m < 0 || (d != 0 && d != 1) ||
          (w != 0 && w != 1) ||
          n > static_cast<long long>(std::numeric_limits<Vertex>::max())) {
        throw ParseError(ParseErrorKind::malformed_header, lineno,
                         "expected 'p <n> <m> <0|1> <0|1>'");
      }
      directed = d == 1;
      weighted = w == 1;
      have_header = true;
      edges.reserve(static_cast<std::size_t>(std::min<long long>(m, 1 << 24)));
      continue;
    }
    if (tok[0] != "e" || tok.size() < 3 || tok.size() > 4) {
      throw ParseError(ParseErrorKind::malformed_line, lineno,
                       "expected 'e <u> <v> [<w>]'");
    }
    long long u = 0;
    long long v = 0;
    if (!parse_int(tok[1], u) || !parse_int(tok[2], v)) {
      throw ParseError(ParseErrorKind::malformed_line, lineno,
                       "non-integer endpoint");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError(ParseErrorKind::vertex_out_of_range, lineno,
                       "endpoint not in [0, " + std::to_string(n) + ")");
    }
    long long w = 1;
    if (tok.size() == 4) {
      if (!parse_int(tok[3], w)) {
        throw ParseError(ParseErrorKind::malformed_line, lineno,
                         "non-integer weight");
      }
      if (w < 0) {
        throw ParseError(ParseErrorKind::negative_weight, lineno,
                         "weight " + tok[3]);
      }
      if (!weighted) {
        throw ParseError(ParseErrorKind::weight_in_unweighted, lineno,
                         "graph declared unweighted");
      }
      if (w > static_cast<long long>(std::numeric_limits<Weight>::max())) {
        throw ParseError(ParseErrorKind::malformed_line, lineno,
                         "weight too large");
      }
    } else if (weighted) {
      throw ParseError(ParseErrorKind::missing_weight, lineno,
                       "graph declared weighted");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v),
                     static_cast<Weight>(w)});
  }
  if (!have_header) {
    throw ParseError(ParseErrorKind::malformed_header, 0, "missing header");
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(ParseErrorKind::edge_count_mismatch, 0,
                     "header says " + std::to_string(m) + ", found " +
                         std::to_string(edges.size()));
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges), directed,
               weighted);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << ' '
      << (g.directed() ? 1 : 0) << ' ' << (g.weighted() ? 1 : 0) << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.u << ' ' << e.v;
    if (g.weighted()) out << ' ' << e.w;
    out << '\n';
  }
}

PartitionSpec load_partition(std::istream& in, std::size_t vertex_count) {
  std::string line;
  std::size_t lineno = 0;
  std::string mode;
  std::vector<Vertex> s;
  std::vector<Vertex> t;
  bool have_s = false;
  bool have_t = false;

  auto read_ids = [&](const std::vector<std::string>& tok,
                      std::vector<Vertex>& out) {
    for (std::size_t i = 1; i < tok.size(); ++i) {
      long long v = 0;
      if (!parse_int(tok[i], v)) {
        throw ParseError(ParseErrorKind::malformed_sets, lineno,
                         "non-integer id '" + tok[i] + "'");
      }
      if (v < 0 || static_cast<unsigned long long>(v) >= vertex_count) {
        throw ParseError(ParseErrorKind::vertex_out_of_range, lineno,
                         "id " + tok[i]);
      }
      out.push_back(static_cast<Vertex>(v));
    }
  };

  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = split(line);
    if (tok.empty() || tok[0][0] == '#' || tok[0] == "c") continue;
    if (tok[0] == "mode") {
      if (tok.size() != 2 || !mode.empty()) {
        throw ParseError(ParseErrorKind::malformed_sets, lineno, "bad mode");
      }
      mode = tok[1];
      if (mode != "bichromatic" && mode != "st" && mode != "subset") {
        throw ParseError(ParseErrorKind::malformed_sets, lineno,
                         "unknown mode '" + mode + "'");
      }
    } else if (tok[0] == "S" && !have_s) {
      have_s = true;
      read_ids(tok, s);
    } else if (tok[0] == "T" && !have_t) {
      have_t = true;
      read_ids(tok, t);
    } else {
      throw ParseError(ParseErrorKind::malformed_sets, lineno,
                       "unexpected line");
    }
  }
  if (!have_s) throw ParseError(ParseErrorKind::malformed_sets, 0, "no S line");

  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());

  auto is_complement = [&] {
    if (s.size() + t.size() != vertex_count) return false;
    std::vector<Vertex> both;
    std::set_intersection(s.begin(), s.end(), t.begin(), t.end(),
                          std::back_inserter(both));
    return both.empty();
  };

  if (mode.empty()) {
    if (!have_t || is_complement()) {
      mode = "bichromatic";
    } else if (s == t) {
      mode = "subset";
    } else {
      mode = "st";
    }
  }

  try {
    if (mode == "bichromatic") {
      if (have_t && !is_complement()) {
        throw ParseError(ParseErrorKind::malformed_sets, 0,
                         "bichromatic T must be the complement of S");
      }
      return PartitionSpec::bichromatic(vertex_count, std::move(s));
    }
    if (mode == "subset") {
      if (have_t && t != s) {
        throw ParseError(ParseErrorKind::malformed_sets, 0,
                         "subset mode requires T = S");
      }
      return PartitionSpec::subset(vertex_count, std::move(s));
    }
    if (!have_t) {
      throw ParseError(ParseErrorKind::malformed_sets, 0, "st mode needs T");
    }
    return PartitionSpec::st(vertex_count, std::move(s), std::move(t));
  } catch (const std::invalid_argument& e) {
    throw ParseError(ParseErrorKind::malformed_sets, 0, e.what());
  }
}

void write_partition(std::ostream& out, const PartitionSpec& p) {
  out << "mode " << to_string(p.mode()) << "\nS";
  for (Vertex v : p.s()) out << ' ' << v;
  out << '\n';
  if (p.mode() == PartitionMode::st) {
    out << 'T';
    for (Vertex v : p.t()) out << ' ' << v;
    out << '\n';
  }
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return load_graph(in);
}

PartitionSpec load_partition_file(const std::string& path,
                                  std::size_t vertex_count) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return load_partition(in, vertex_count);
}

}  // namespace stdiam
