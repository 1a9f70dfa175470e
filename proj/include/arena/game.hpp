#ifndef ARENA_GAME_HPP_
#define ARENA_GAME_HPP_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "arena/matrix.hpp"

namespace arena {

struct InvalidInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mixed strategy is a probability vector over one player's actions:
// entries >= 0, summing to 1 within 1e-9.
using Strategy = std::vector<double>;

inline constexpr double kStrategySumTolerance = 1e-9;

Strategy uniform_strategy(int n);
Strategy pure_strategy(int n, int action);
bool is_strategy(const Strategy& s, double tol = kStrategySumTolerance);

struct ActionProfile {
  int a1 = 0;  // row action
  int a2 = 0;  // column action
};

// Two-player normal-form game with payoffs normalized to [0,1] per player,
// plus the provenance needed to regenerate it.
struct Game {
  int rows = 0;
  int cols = 0;
  Matrix u1;  // row player payoffs, rows x cols
  Matrix u2;  // column player payoffs, rows x cols
  std::string generator_id;
  std::uint64_t instance_seed = 0;

  int actions(int player) const { return player == 1 ? rows : cols; }
  const Matrix& payoffs(int player) const { return player == 1 ? u1 : u2; }
};

// Rescales each player's payoffs independently to [0,1] by x -> (x-min)/(max-min);
// a constant payoff matrix maps to 0.5 everywhere. Throws InvalidInputError on
// non-finite entries or mismatched shapes.
Game normalize_game(const Matrix& raw_u1, const Matrix& raw_u2);

// s1' U s2 for the given player's payoff matrix.
double expected_payoff(const Game& g, int player, const Strategy& s1, const Strategy& s2);

// Expected payoff of each own action against an opponent mixed strategy, with
// `own` as the row index of `u`. For the column player pass u2 transposed.
std::vector<double> action_payoffs(const Matrix& u, const Strategy& opponent);

// Game instance generation: thirteen generator families D1..D13. Output is a
// deterministic function of (generator_id, size, seed) and already normalized.
Game generate(const std::string& generator_id, int rows, int cols, std::uint64_t seed);

const std::vector<std::string>& generator_ids();

// Text format: "actions: m n", "generator: id", "seed: u64", then the payoff
// rows of u1, a blank line, and the payoff rows of u2.
void write_game(const Game& g, std::ostream& out);
Game read_game(std::istream& in);
void save_game(const Game& g, const std::string& path);
Game load_game(const std::string& path);

}  // namespace arena

#endif  // ARENA_GAME_HPP_
