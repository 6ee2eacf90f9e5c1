#include "lorentz/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

namespace lorentz {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::string_view text;  // comment stripped
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    ++number;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) out.push_back({number, line});
    pos = end + 1;
  }
  return out;
}

std::vector<Token> split(std::string_view line, std::size_t offset = 0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), offset + i + 1});
    i = j;
  }
  return out;
}

std::uint64_t parse_unsigned(const Token& tok, std::size_t line, const char* what) {
  if (tok.text.empty()) throw ParseError(line, tok.column, std::string("expected ") + what);
  std::uint64_t v = 0;
  for (char c : tok.text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(line, tok.column,
                       std::string("expected ") + what + ", found '" + std::string(tok.text) + "'");
    }
    if (v > (std::numeric_limits<std::uint32_t>::max() - 9) / 10) {
      throw ParseError(line, tok.column, std::string(what) + " is too large");
    }
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

// Parses a `<keyword> <count>` header from the first significant line.
std::uint64_t parse_header(const std::vector<Line>& lines, std::string_view keyword) {
  if (lines.empty()) {
    throw ParseError(1, 1, "missing '" + std::string(keyword) + " <count>' header");
  }
  const Line& h = lines.front();
  auto toks = split(h.text);
  if (toks.size() != 2 || toks[0].text != keyword) {
    throw ParseError(h.number, toks.empty() ? 1 : toks[0].column,
                     "expected '" + std::string(keyword) + " <count>' header");
  }
  return parse_unsigned(toks[1], h.number, "count");
}

Rational parse_rational_token(const Token& tok, std::size_t line) {
  try {
    return parse_rational(tok.text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, tok.column, e.what());
  }
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  const auto lines = significant_lines(text);
  const std::uint64_t n = parse_header(lines, "vars");
  if (n == 0) throw ParseError(lines.front().number, 1, "vars must be positive");
  Polynomial f(n);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const auto semi = line.text.find(';');
    if (semi == std::string_view::npos) {
      throw ParseError(line.number, line.text.size() + 1, "expected ';' after the coefficient");
    }
    auto coeff_toks = split(line.text.substr(0, semi));
    if (coeff_toks.size() != 1) {
      throw ParseError(line.number, coeff_toks.empty() ? 1 : coeff_toks.back().column,
                       "expected exactly one coefficient before ';'");
    }
    const Rational c = parse_rational_token(coeff_toks[0], line.number);
    std::vector<Monomial::Factor> factors;
    for (const Token& tok : split(line.text.substr(semi + 1), semi + 1)) {
      if (tok.text.size() < 2 || tok.text[0] != 'x') {
        throw ParseError(line.number, tok.column,
                         "expected a variable like x0^2, found '" + std::string(tok.text) + "'");
      }
      std::string_view body = tok.text.substr(1);
      std::string_view exp_text = "1";
      std::size_t exp_col = tok.column;
      if (auto caret = body.find('^'); caret != std::string_view::npos) {
        exp_text = body.substr(caret + 1);
        exp_col = tok.column + 1 + caret + 1;
        body = body.substr(0, caret);
      }
      const auto var = parse_unsigned({body, tok.column + 1}, line.number, "variable index");
      if (var >= n) {
        throw ParseError(line.number, tok.column,
                         "variable x" + std::to_string(var) + " out of range for vars " +
                             std::to_string(n));
      }
      const auto e = parse_unsigned({exp_text, exp_col}, line.number, "exponent");
      if (e == 0) throw ParseError(line.number, exp_col, "exponent must be positive");
      factors.emplace_back(static_cast<std::uint32_t>(var), static_cast<std::uint32_t>(e));
    }
    f.add_term(Monomial::from_factors(std::move(factors)), c);
  }
  return f;
}

std::string format_polynomial(const Polynomial& f) {
  std::string out = "vars " + std::to_string(f.num_vars()) + "\n";
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    out += to_string(it->second);
    out += " ;";
    const std::string mono = it->first.to_string();
    if (!mono.empty()) out += " " + mono;
    out += "\n";
  }
  return out;
}

Graph parse_graph(std::string_view text) {
  const auto lines = significant_lines(text);
  const std::uint64_t n = parse_header(lines, "n");
  std::vector<Graph::Edge> edges;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    auto toks = split(line.text);
    if (toks.size() != 3 || toks[0].text != "e") {
      throw ParseError(line.number, toks.empty() ? 1 : toks[0].column, "expected 'e <i> <j>'");
    }
    const auto a = parse_unsigned(toks[1], line.number, "vertex");
    const auto b = parse_unsigned(toks[2], line.number, "vertex");
    if (a >= n || b >= n) {
      throw ParseError(line.number, (a >= n ? toks[1] : toks[2]).column,
                       "vertex out of range for n " + std::to_string(n));
    }
    if (a == b) throw ParseError(line.number, toks[1].column, "self-loop");
    const Graph::Edge e{static_cast<std::uint32_t>(std::min(a, b)),
                        static_cast<std::uint32_t>(std::max(a, b))};
    for (const auto& prior : edges) {
      if (prior == e) throw ParseError(line.number, toks[0].column, "duplicate edge");
    }
    edges.push_back(e);
  }
  return Graph(static_cast<std::uint32_t>(n), std::move(edges));
}

std::string format_graph(const Graph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& [a, b] : g.edges()) {
    out += "e " + std::to_string(a) + " " + std::to_string(b) + "\n";
  }
  return out;
}

SymMatrix parse_matrix(std::string_view text) {
  const auto lines = significant_lines(text);
  const std::uint64_t n = parse_header(lines, "n");
  if (lines.size() - 1 != n) {
    throw ParseError(lines.back().number, 1,
                     "expected " + std::to_string(n) + " matrix rows, found " +
                         std::to_string(lines.size() - 1));
  }
  std::vector<RationalVector> rows;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    auto toks = split(lines[li].text);
    if (toks.size() != n) {
      throw ParseError(lines[li].number, 1,
                       "expected " + std::to_string(n) + " entries, found " +
                           std::to_string(toks.size()));
    }
    RationalVector row;
    for (const auto& t : toks) row.push_back(parse_rational_token(t, lines[li].number));
    rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rows[i][j] != rows[j][i]) {
        throw ParseError(lines[i + 1].number, 1,
                         "matrix is not symmetric at (" + std::to_string(i) + ", " +
                             std::to_string(j) + ")");
      }
  return SymMatrix::from_rows(rows);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace lorentz
