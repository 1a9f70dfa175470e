#ifndef ARENA_GT_HPP_
#define ARENA_GT_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "arena/game.hpp"

namespace arena {

struct DegenerateGameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kNashEpsilon = 1e-9;
inline constexpr double kEquilibriumDedupTolerance = 1e-7;

// l2-nearest point of the probability simplex (sort-and-threshold). Idempotent.
Strategy project_to_simplex(const std::vector<double>& v);

// Clip negatives to zero and rescale by the sum; a zero sum gives uniform.
Strategy normalize_to_simplex(const std::vector<double>& v);

struct MaxminSolution {
  Strategy strategy;
  double value = 0.0;
};

// Maxmin value and strategy of the given player, solved with exact rational
// pivoting so that e.g. matching pennies yields value 0.5 exactly.
MaxminSolution solve_maxmin(const Game& g, int player);

// Floating-point variant for per-iteration use on learned payoff matrices
// (rows = own actions, cols = opponent actions). Feasibility tolerance 1e-9.
MaxminSolution solve_maxmin_fast(const Matrix& own_payoffs);

// Iterated removal of pure actions strictly dominated by mixed strategies
// (margin 1e-9, tested by LP). Scans player 1 then player 2, lowest index
// first, removing one action at a time until a fixed point.
struct IdrResult {
  Game reduced;
  std::vector<int> removed_rows, removed_cols;  // original indices, removal order
  std::vector<int> row_map, col_map;            // reduced index -> original index
};
IdrResult iterated_dominance_removal(const Game& g);

// Same reduction on an arbitrary payoff pair; used on learned zero-sum games.
void idr_surviving(const Matrix& u1, const Matrix& u2,
                   std::vector<int>& surviving_rows, std::vector<int>& surviving_cols);

struct EquilibriumProfile {
  Strategy s1, s2;
  double payoff1 = 0.0, payoff2 = 0.0;
  bool pareto_optimal = false;  // within the enumerated set
};

struct EquilibriumSet {
  std::vector<EquilibriumProfile> profiles;
  bool possibly_incomplete = false;
};

// One Nash equilibrium by Lemke-Howson path-following with exact rational
// (integer) pivoting. initial_label in [0, rows+cols): first the row actions,
// then the column actions. The label-0 run defines the "first found"
// equilibrium used for coordination everywhere. Throws DegenerateGameError
// when the pivot bound is exceeded.
EquilibriumProfile lemke_howson(const Game& g, int initial_label);

// Union of Lemke-Howson over all starting labels, deduplicated at l-inf
// tolerance 1e-7, augmented by full support enumeration when both players
// have at most 6 actions (complete for small nondegenerate games). On
// Lemke-Howson degeneracy: small games switch wholly to support enumeration;
// larger games return the reachable subset flagged possibly_incomplete.
EquilibriumSet enumerate_equilibria(const Game& g);

// Index of the equilibrium maximizing own payoff; ties by opponent payoff,
// then by enumeration order. Throws InvalidInputError on an empty set.
int select_determined_equilibrium(const EquilibriumSet& eqs, int player);

// True when no pure deviation improves either player by more than eps.
bool is_epsilon_nash(const Game& g, const Strategy& s1, const Strategy& s2,
                     double eps = kNashEpsilon);

// Solution file: "maxmin <player> <value> <probs...>" for both players, then
// "eq <s1...> | <s2...> <pay1> <pay2> <pareto>" lines in enumeration order,
// plus "incomplete 1" when the set may be incomplete.
struct SolutionFile {
  MaxminSolution maxmin1, maxmin2;
  EquilibriumSet equilibria;
};

SolutionFile solve_game(const Game& g);

void write_solution(const SolutionFile& s, std::ostream& out);
SolutionFile read_solution(std::istream& in);
void save_solution(const SolutionFile& s, const std::string& path);
SolutionFile load_solution(const std::string& path);

}  // namespace arena

#endif  // ARENA_GT_HPP_
