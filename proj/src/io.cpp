#include "lpst/io.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "lpst/errors.hpp"

namespace lpst {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Non-blank, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    std::size_t first = text.find_first_not_of(" \t");
    if (first == std::string::npos || text[first] == '#') continue;
    std::istringstream ss(text);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    lines.push_back(std::move(line));
  }
  if (in.bad()) throw ParseError("read error");
  return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw ParseError("line " + std::to_string(line.number) + ": " + what);
}

// Exact value of a decimal literal, as digits * 10^exponent.
struct Decimal {
  mpz_class digits;
  long exponent = 0;
};

bool parse_decimal(const std::string& s, Decimal& out) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  std::string digits;
  long exponent = 0;
  bool any = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    digits += s[i++];
    any = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i++];
      --exponent;
      any = true;
    }
  }
  if (!any) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    long e = 0;
    const char* begin = s.data() + i;
    const char* end = s.data() + s.size();
    if (begin != end && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, e);
    if (ec != std::errc() || ptr != end || e < -1000 || e > 1000) return false;
    exponent += e;
    i = s.size();
  }
  if (i != s.size()) return false;
  out.digits = mpz_class(digits, 10);
  if (neg) out.digits = -out.digits;
  out.exponent = exponent;
  return true;
}

double parse_coordinate(const Line& line, const std::string& tok, Decimal& exact) {
  if (!parse_decimal(tok, exact)) fail(line, "not a decimal number: '" + tok + "'");
  double v = 0;
  auto [ptr, ec] = std::from_chars(tok.data() + (tok[0] == '+'), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v))
    fail(line, "number out of range: '" + tok + "'");
  return v;
}

std::int64_t parse_int(const Line& line, const std::string& tok) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data() + (tok[0] == '+'), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(line, "not an integer: '" + tok + "'");
  return v;
}

mpz_class pow10(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

// Exact check on integer coordinates: duplicates by sorting, collinear
// triples by sorting directions around each point.
void check_general_position_exact(const std::vector<Decimal>& xs, const std::vector<Decimal>& ys) {
  const int n = static_cast<int>(xs.size());
  long lowest = 0;
  for (int i = 0; i < n; ++i) lowest = std::min({lowest, xs[i].exponent, ys[i].exponent});
  std::vector<mpz_class> x(n), y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = xs[i].digits * pow10(xs[i].exponent - lowest);
    y[i] = ys[i].digits * pow10(ys[i].exponent - lowest);
  }
  auto reject = [](GeneralPositionViolation v) {
    throw PreconditionError("point set not in general position: " + v.describe());
  };
  using K = GeneralPositionViolation::Kind;

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (x[a] != x[b]) return x[a] < x[b];
    if (y[a] != y[b]) return y[a] < y[b];
    return a < b;
  });
  for (int k = 0; k + 1 < n; ++k)
    if (x[idx[k]] == x[idx[k + 1]] && y[idx[k]] == y[idx[k + 1]])
      reject({K::Duplicate, std::min(idx[k], idx[k + 1]), std::max(idx[k], idx[k + 1]), -1});

  struct Dir {
    mpz_class dx, dy;
    int j;
  };
  for (int i = 0; i < n; ++i) {
    std::vector<Dir> dirs;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      Dir d{x[j] - x[i], y[j] - y[i], j};
      // fold opposite directions together
      if (d.dy < 0 || (d.dy == 0 && d.dx < 0)) {
        d.dx = -d.dx;
        d.dy = -d.dy;
      }
      dirs.push_back(std::move(d));
    }
    auto cross = [](const Dir& a, const Dir& b) { return sgn(mpz_class(a.dx * b.dy - a.dy * b.dx)); };
    std::sort(dirs.begin(), dirs.end(), [&](const Dir& a, const Dir& b) {
      const int c = cross(a, b);
      return c != 0 ? c > 0 : a.j < b.j;
    });
    for (std::size_t k = 0; k + 1 < dirs.size(); ++k)
      if (cross(dirs[k], dirs[k + 1]) == 0) {
        int t[3] = {i, dirs[k].j, dirs[k + 1].j};
        std::sort(t, t + 3);
        reject({K::Collinear, t[0], t[1], t[2]});
      }
  }
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

PointSet read_points(std::istream& in) {
  std::vector<Point> pts;
  std::vector<Decimal> xs, ys;
  for (const Line& line : tokenize(in)) {
    if (line.tokens.size() != 2) fail(line, "expected two numbers");
    Decimal ex, ey;
    const double x = parse_coordinate(line, line.tokens[0], ex);
    const double y = parse_coordinate(line, line.tokens[1], ey);
    pts.push_back({x, y});
    xs.push_back(std::move(ex));
    ys.push_back(std::move(ey));
  }
  check_general_position_exact(xs, ys);
  return PointSet(std::move(pts));
}

void write_points(std::ostream& out, const PointSet& ps) {
  for (int i = 0; i < ps.n(); ++i) out << format_double(ps[i].x) << ' ' << format_double(ps[i].y) << '\n';
}

SpanningTree read_tree(std::istream& in, int n) {
  EdgeList edges;
  for (const Line& line : tokenize(in)) {
    if (line.tokens.size() != 2) fail(line, "expected two vertex indices");
    const auto u = parse_int(line, line.tokens[0]);
    const auto v = parse_int(line, line.tokens[1]);
    if (u < 0 || v < 0 || u > std::numeric_limits<int>::max() || v > std::numeric_limits<int>::max())
      fail(line, "vertex index out of range");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) n = static_cast<int>(edges.size()) + 1;
  return SpanningTree(n, std::move(edges));
}

void write_tree(std::ostream& out, const SpanningTree& t) {
  for (const Edge& e : t.edges()) out << e.u << ' ' << e.v << '\n';
}

FlatConvexSet read_flat(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw ParseError("empty flat set file");
  const Line& head = lines.front();
  if (head.tokens.size() != 1 || (head.tokens[0] != "arc" && head.tokens[0] != "twin"))
    fail(head, "expected header 'arc' or 'twin'");
  const auto kind = head.tokens[0] == "arc" ? FlatConvexSet::Kind::Arc : FlatConvexSet::Kind::Twin;
  std::vector<std::int64_t> xs;
  std::vector<Side> sides;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens.size() > 2) fail(line, "expected 'x [top|bottom]'");
    xs.push_back(parse_int(line, line.tokens[0]));
    Side side = Side::Top;
    if (line.tokens.size() == 2) {
      if (line.tokens[1] == "bottom")
        side = Side::Bottom;
      else if (line.tokens[1] != "top")
        fail(line, "side must be 'top' or 'bottom'");
    }
    sides.push_back(side);
  }
  return FlatConvexSet::from_sides(kind, std::move(xs), std::move(sides));
}

void write_flat(std::ostream& out, const FlatConvexSet& f) {
  const bool twin = f.kind() == FlatConvexSet::Kind::Twin;
  out << (twin ? "twin" : "arc") << '\n';
  for (int i = 0; i < f.n(); ++i) {
    out << f.xs()[i];
    if (twin) out << (f.sides()[i] == Side::Top ? " top" : " bottom");
    out << '\n';
  }
}

std::vector<int> read_caterpillar(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.size() != 1) throw ParseError("caterpillar file needs exactly one 'spine' line");
  const Line& line = lines.front();
  if (line.tokens[0] != "spine") fail(line, "expected 'spine k1 ... ks'");
  std::vector<int> counts;
  for (std::size_t k = 1; k < line.tokens.size(); ++k) {
    const auto v = parse_int(line, line.tokens[k]);
    if (v < 0 || v > std::numeric_limits<int>::max()) fail(line, "leaf count out of range");
    counts.push_back(static_cast<int>(v));
  }
  return counts;
}

void write_caterpillar(std::ostream& out, const std::vector<int>& spine_leaves) {
  out << "spine";
  for (int k : spine_leaves) out << ' ' << k;
  out << '\n';
}

Instance read_instance(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::istringstream probe(text);
  const auto lines = tokenize(probe);
  std::istringstream again(text);
  if (!lines.empty() && (lines[0].tokens[0] == "arc" || lines[0].tokens[0] == "twin"))
    return read_flat(again);
  return read_points(again);
}

PointSet read_points_file(const std::string& path) {
  std::istringstream in(slurp(path));
  return read_points(in);
}

SpanningTree read_tree_file(const std::string& path, int n) {
  std::istringstream in(slurp(path));
  return read_tree(in, n);
}

FlatConvexSet read_flat_file(const std::string& path) {
  std::istringstream in(slurp(path));
  return read_flat(in);
}

Instance read_instance_file(const std::string& path) {
  std::istringstream in(slurp(path));
  return read_instance(in);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw PreconditionError("cannot write " + path);
  f << text;
  if (!f) throw PreconditionError("write failed: " + path);
}

}  // namespace lpst
