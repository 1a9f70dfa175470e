#include "arena/game.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "arena/text_io.hpp"

namespace arena {

Strategy uniform_strategy(int n) {
  return Strategy(static_cast<std::size_t>(n), 1.0 / n);
}

Strategy pure_strategy(int n, int action) {
  Strategy s(static_cast<std::size_t>(n), 0.0);
  s[static_cast<std::size_t>(action)] = 1.0;
  return s;
}

bool is_strategy(const Strategy& s, double tol) {
  if (s.empty()) return false;
  double sum = 0.0;
  for (double p : s) {
    if (!(p >= 0.0)) return false;
    sum += p;
  }
  return std::abs(sum - 1.0) <= tol;
}

namespace {

Matrix normalize_matrix(const Matrix& raw) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < raw.rows(); ++i)
    for (int j = 0; j < raw.cols(); ++j) {
      const double x = raw(i, j);
      if (!std::isfinite(x)) throw InvalidInputError("non-finite payoff entry");
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  Matrix out(raw.rows(), raw.cols());
  if (hi == lo) {
    for (int i = 0; i < raw.rows(); ++i)
      for (int j = 0; j < raw.cols(); ++j) out(i, j) = 0.5;
    return out;
  }
  const double span = hi - lo;
  for (int i = 0; i < raw.rows(); ++i)
    for (int j = 0; j < raw.cols(); ++j) out(i, j) = (raw(i, j) - lo) / span;
  return out;
}

}  // namespace

Game normalize_game(const Matrix& raw_u1, const Matrix& raw_u2) {
  if (raw_u1.rows() != raw_u2.rows() || raw_u1.cols() != raw_u2.cols())
    throw InvalidInputError("payoff matrices differ in shape");
  if (raw_u1.rows() < 1 || raw_u1.cols() < 1)
    throw InvalidInputError("empty payoff matrix");
  Game g;
  g.rows = raw_u1.rows();
  g.cols = raw_u1.cols();
  g.u1 = normalize_matrix(raw_u1);
  g.u2 = normalize_matrix(raw_u2);
  return g;
}

double expected_payoff(const Game& g, int player, const Strategy& s1, const Strategy& s2) {
  if (static_cast<int>(s1.size()) != g.rows || static_cast<int>(s2.size()) != g.cols)
    throw InvalidInputError("strategy length does not match game dimensions");
  const Matrix& u = g.payoffs(player);
  double total = 0.0;
  for (int i = 0; i < g.rows; ++i) {
    if (s1[i] == 0.0) continue;
    double row = 0.0;
    for (int j = 0; j < g.cols; ++j) row += u(i, j) * s2[j];
    total += s1[i] * row;
  }
  return total;
}

std::vector<double> action_payoffs(const Matrix& u, const Strategy& opponent) {
  std::vector<double> out(static_cast<std::size_t>(u.rows()), 0.0);
  for (int i = 0; i < u.rows(); ++i) {
    double acc = 0.0;
    for (int j = 0; j < u.cols(); ++j) acc += u(i, j) * opponent[j];
    out[i] = acc;
  }
  return out;
}

void write_game(const Game& g, std::ostream& out) {
  out << "actions: " << g.rows << ' ' << g.cols << '\n';
  out << "generator: " << g.generator_id << '\n';
  out << "seed: " << g.instance_seed << '\n';
  for (int i = 0; i < g.rows; ++i) {
    for (int j = 0; j < g.cols; ++j) {
      if (j) out << ' ';
      out << format_double(g.u1(i, j));
    }
    out << '\n';
  }
  out << '\n';
  for (int i = 0; i < g.rows; ++i) {
    for (int j = 0; j < g.cols; ++j) {
      if (j) out << ' ';
      out << format_double(g.u2(i, j));
    }
    out << '\n';
  }
}

Game read_game(std::istream& in) {
  Game g;
  std::string line;
  auto expect_line = [&](const char* what) {
    if (!std::getline(in, line)) throw InvalidInputError(std::string("game file truncated at ") + what);
  };
  expect_line("actions");
  if (std::sscanf(line.c_str(), "actions: %d %d", &g.rows, &g.cols) != 2)
    throw InvalidInputError("bad actions line: " + line);
  if (g.rows < 1 || g.cols < 1) throw InvalidInputError("bad game dimensions");
  expect_line("generator");
  if (line.rfind("generator: ", 0) != 0) throw InvalidInputError("bad generator line: " + line);
  g.generator_id = line.substr(11);
  expect_line("seed");
  if (std::sscanf(line.c_str(), "seed: %llu",
                  reinterpret_cast<unsigned long long*>(&g.instance_seed)) != 1)
    throw InvalidInputError("bad seed line: " + line);

  auto read_matrix = [&](Matrix& m) {
    m = Matrix(g.rows, g.cols);
    for (int i = 0; i < g.rows; ++i) {
      expect_line("payoff row");
      const auto vals = parse_doubles(line, ' ');
      if (static_cast<int>(vals.size()) != g.cols)
        throw InvalidInputError("payoff row has wrong width: " + line);
      for (int j = 0; j < g.cols; ++j) m(i, j) = vals[j];
    }
  };
  read_matrix(g.u1);
  expect_line("separator");
  if (!line.empty()) throw InvalidInputError("expected blank line between payoff matrices");
  read_matrix(g.u2);
  return g;
}

void save_game(const Game& g, const std::string& path) {
  std::ostringstream ss;
  write_game(g, ss);
  write_text_file(path, ss.str());
}

Game load_game(const std::string& path) {
  std::istringstream ss(read_text_file(path));
  return read_game(ss);
}

}  // namespace arena
