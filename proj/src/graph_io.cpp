#include "sfl/graph_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace sfl {

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

std::string strip(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  Graph g;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = strip(line);
    if (body.empty()) continue;
    std::istringstream fields(body);
    if (n < 0) {
      if (!(fields >> n) || n < 0 || n > kMaxVertices) {
        throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                    ": expected vertex count in [0, 64]");
      }
      std::string extra;
      if (fields >> extra) {
        throw std::invalid_argument("edge list header must be a single integer");
      }
      g = Graph(n);
      continue;
    }
    int u = 0;
    int v = 0;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) {
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": expected 'u v'");
    }
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": vertex out of range");
    }
    if (u == v) {
      throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": self-loop");
    }
    if (g.has_edge(u, v)) {
      throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": duplicate edge");
    }
    g.add_edge(u, v);
  }
  if (n < 0) throw std::invalid_argument("empty edge list input");
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.has_edge(u, v)) out << u << ' ' << v << '\n';
    }
  }
  return out.str();
}

Graph parse_graph6(const std::string& text) {
  std::string s = strip(text);
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  if (s.empty()) throw std::invalid_argument("empty graph6 input");
  if (s[0] == ':' || s[0] == ';' || s[0] == '&') {
    throw std::invalid_argument("sparse6/digraph6 input not supported");
  }
  const int first = static_cast<unsigned char>(s[0]);
  if (first == kG6Hi) throw std::invalid_argument("graph6 orders above 62 not supported");
  if (first < kG6Lo || first > kG6Hi) throw std::invalid_argument("invalid graph6 byte");
  const int n = first - kG6Lo;
  const int bits = pair_count(n);
  const std::size_t want = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - 1 != want) {
    throw std::invalid_argument("graph6 body has wrong length for order " + std::to_string(n));
  }
  Graph g(n);
  int bit = 0;
  for (std::size_t pos = 1; pos < s.size(); ++pos) {
    const int c = static_cast<unsigned char>(s[pos]);
    if (c < kG6Lo || c > kG6Hi) throw std::invalid_argument("invalid graph6 byte");
    const int group = c - kG6Lo;
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool set = (group >> k) & 1;
      if (bit >= bits) {
        if (set) throw std::invalid_argument("nonzero graph6 padding");
        continue;
      }
      if (set) {
        // Column-major upper triangle: bit index runs j = 1..n-1, i = 0..j-1.
        int b = bit;
        int j = 1;
        while (b >= j) {
          b -= j;
          ++j;
        }
        g.add_edge(b, j);
      }
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw std::invalid_argument("graph6 output only supports n <= 62");
  std::string s;
  s.push_back(static_cast<char>(n + kG6Lo));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        s.push_back(static_cast<char>(group + kG6Lo));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    group <<= (6 - filled);
    s.push_back(static_cast<char>(group + kG6Lo));
  }
  return s;
}

GraphFormat detect_format(const std::string& text) {
  const std::string s = strip(text);
  if (s.empty()) throw std::invalid_argument("empty graph input");
  if (s.rfind(">>graph6<<", 0) == 0) return GraphFormat::graph6;
  const int c = static_cast<unsigned char>(s[0]);
  if (std::isdigit(c)) return GraphFormat::edge_list;
  return GraphFormat::graph6;
}

Graph parse_graph_auto(const std::string& text) {
  return detect_format(text) == GraphFormat::edge_list ? parse_edge_list(text)
                                                       : parse_graph6(text);
}

}  // namespace sfl
