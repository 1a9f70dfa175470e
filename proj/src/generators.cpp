#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "arena/game.hpp"
#include "arena/rng.hpp"

// The thirteen instance generators, D1..D13. Formulas are documented-compatible
// analogues of the usual families; every payoff below is pre-normalization.
// Draw order from the instance stream is fixed per family and must not change:
// it is part of the reproducibility contract.

namespace arena {

namespace {

using rng::Stream;

Stream instance_stream(const std::string& id, int m, int n, std::uint64_t seed) {
  char label[64];
  std::snprintf(label, sizeof(label), "gen/%s/%dx%d", id.c_str(), m, n);
  return Stream(rng::derive_seed(seed, label));
}

// D1: per-cell payoff pairs from a bivariate normal, mean 0, unit variance,
// correlation rho drawn once per instance from U[-0.9, 0.9].
void normal_covariant(int m, Matrix& u1, Matrix& u2, Stream& rng) {
  const double rho = rng.uniform(-0.9, 0.9);
  const double mix = std::sqrt(1.0 - rho * rho);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double z1 = rng.normal();
      const double z2 = rng.normal();
      u1(i, j) = z1;
      u2(i, j) = rho * z1 + mix * z2;
    }
}

// D2: prices p in {1..m}, demand m+1-p, unit cost 1. Lowest price takes the
// whole profit (p-1)(m+1-p); ties split it; the loser sells nothing.
void bertrand(int m, Matrix& u1, Matrix& u2) {
  auto profit = [m](int p) { return static_cast<double>((p - 1) * (m + 1 - p)); };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int p1 = i + 1, p2 = j + 1;
      if (p1 < p2) {
        u1(i, j) = profit(p1);
        u2(i, j) = 0.0;
      } else if (p2 < p1) {
        u1(i, j) = 0.0;
        u2(i, j) = profit(p2);
      } else {
        u1(i, j) = u2(i, j) = profit(p1) / 2.0;
      }
    }
}

// D3: quantities q in {1..m}, price max(0, 2m - q1 - q2), unit cost 1.
void cournot(int m, Matrix& u1, Matrix& u2) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int q1 = i + 1, q2 = j + 1;
      const double price = std::max(0, 2 * m - q1 - q2);
      u1(i, j) = q1 * (price - 1.0);
      u2(i, j) = q2 * (price - 1.0);
    }
}

// D4: both players are rewarded for miscoordinating.
void dispersion(int m, Matrix& u1, Matrix& u2) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) u1(i, j) = u2(i, j) = (i != j) ? 1.0 : 0.0;
}

// D5: actions are grab times. The earlier grabber gets the dollar, the other
// half of it; a simultaneous grab destroys it. The last index counts as a grab,
// so waiting forever is not an outcome.
void grab_the_dollar(int m, Matrix& u1, Matrix& u2) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) {
        u1(i, j) = u2(i, j) = 0.0;
      } else if (i < j) {
        u1(i, j) = 1.0;
        u2(i, j) = 0.5;
      } else {
        u1(i, j) = 0.5;
        u2(i, j) = 1.0;
      }
    }
}

// D6: numbers 1..m; whoever is closest to two thirds of the mean wins the
// unit prize, split on ties.
void guess_two_thirds(int m, Matrix& u1, Matrix& u2) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double n1 = i + 1, n2 = j + 1;
      const double target = 2.0 / 3.0 * (n1 + n2) / 2.0;
      const double d1 = std::abs(n1 - target), d2 = std::abs(n2 - target);
      if (d1 < d2) {
        u1(i, j) = 1.0;
        u2(i, j) = 0.0;
      } else if (d2 < d1) {
        u1(i, j) = 0.0;
        u2(i, j) = 1.0;
      } else {
        u1(i, j) = u2(i, j) = 0.5;
      }
    }
}

// D7: actions are candidates; each voter has private i.i.d. U[0,1] utilities.
// With two voters the winner is the lexicographically smallest most-voted
// candidate, i.e. the common vote if they agree and min(a1,a2) otherwise.
void majority_voting(int m, Matrix& u1, Matrix& u2, Stream& rng) {
  std::vector<double> util1(m), util2(m);
  for (int c = 0; c < m; ++c) util1[c] = rng.uniform();
  for (int c = 0; c < m; ++c) util2[c] = rng.uniform();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int winner = std::min(i, j);
      u1(i, j) = util1[winner];
      u2(i, j) = util2[winner];
    }
}

// D8: effort levels 1..m; reward grows with the joint minimum, effort costs.
void minimum_effort(int m, Matrix& u1, Matrix& u2) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double joint = std::min(i, j) + 1;
      u1(i, j) = 0.2 + 0.2 * joint - 0.1 * (i + 1);
      u2(i, j) = 0.2 + 0.2 * joint - 0.1 * (j + 1);
    }
}

// D9: random symmetric bimatrix game, u2 = u1 transposed, entries i.i.d.
// uniform. Substitute for an action-graph family whose structure is not
// pinned down; see the README note on generator provenance.
void random_symmetric(int m, Matrix& u1, Matrix& u2, Stream& rng) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) u1(i, j) = rng.uniform();
  u2 = u1.transposed();
}

// D10: claims 1..m; both receive the lower claim, with a +/-2 transfer from
// the higher claimant to the lower one when they differ.
void travelers_dilemma(int m, Matrix& u1, Matrix& u2) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int c1 = i + 1, c2 = j + 1;
      const double base = std::min(c1, c2);
      if (c1 < c2) {
        u1(i, j) = base + 2.0;
        u2(i, j) = base - 2.0;
      } else if (c2 < c1) {
        u1(i, j) = base - 2.0;
        u2(i, j) = base + 2.0;
      } else {
        u1(i, j) = u2(i, j) = base;
      }
    }
}

// D11: arms levels 1..m; relative advantage minus a quadratic building cost.
void arms_race(int m, Matrix& u1, Matrix& u2) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double a1 = i + 1, a2 = j + 1;
      u1(i, j) = (a1 - a2) - 0.05 * a1 * a1;
      u2(i, j) = (a2 - a1) - 0.05 * a2 * a2;
    }
}

// D12: quit times 0..m-1, private prizes v ~ U[m/2, m]. The war lasts until
// the first quit; the quitter pays the elapsed time, the winner collects the
// prize minus it, and a simultaneous quit splits the prize.
void war_of_attrition(int m, Matrix& u1, Matrix& u2, Stream& rng) {
  const double v1 = rng.uniform(m / 2.0, m);
  const double v2 = rng.uniform(m / 2.0, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double elapsed = std::min(i, j);
      if (i < j) {
        u1(i, j) = -elapsed;
        u2(i, j) = v2 - elapsed;
      } else if (j < i) {
        u1(i, j) = v1 - elapsed;
        u2(i, j) = -elapsed;
      } else {
        u1(i, j) = v1 / 2.0 - elapsed;
        u2(i, j) = v2 / 2.0 - elapsed;
      }
    }
}

// D13: 2x2 games with each player's payoff rank order drawn uniformly from
// the 4! strict orderings, ranks mapped onto {0, 1/3, 2/3, 1}. Covers all
// strict-ordinal 2x2 games; strategic classes are not deduplicated.
void two_by_two(Matrix& u1, Matrix& u2, Stream& rng) {
  auto fill = [&rng](Matrix& u) {
    std::array<double, 4> ranks = {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0};
    for (int i = 3; i > 0; --i)
      std::swap(ranks[i], ranks[rng.uniform_int(static_cast<std::uint64_t>(i) + 1)]);
    u(0, 0) = ranks[0];
    u(0, 1) = ranks[1];
    u(1, 0) = ranks[2];
    u(1, 1) = ranks[3];
  };
  fill(u1);
  fill(u2);
}

}  // namespace

const std::vector<std::string>& generator_ids() {
  static const std::vector<std::string> ids = {"D1", "D2",  "D3",  "D4",  "D5",
                                               "D6", "D7",  "D8",  "D9",  "D10",
                                               "D11", "D12", "D13"};
  return ids;
}

Game generate(const std::string& generator_id, int rows, int cols, std::uint64_t seed) {
  if (rows != cols || rows < 1)
    throw InvalidInputError("generators produce square games; got " + std::to_string(rows) +
                            "x" + std::to_string(cols));
  if (generator_id == "D13" && rows != 2)
    throw InvalidInputError("D13 generates 2x2 games only");

  const int m = rows;
  Matrix u1(m, m), u2(m, m);
  Stream rng = instance_stream(generator_id, m, m, seed);

  if (generator_id == "D1") {
    normal_covariant(m, u1, u2, rng);
  } else if (generator_id == "D2") {
    bertrand(m, u1, u2);
  } else if (generator_id == "D3") {
    cournot(m, u1, u2);
  } else if (generator_id == "D4") {
    dispersion(m, u1, u2);
  } else if (generator_id == "D5") {
    grab_the_dollar(m, u1, u2);
  } else if (generator_id == "D6") {
    guess_two_thirds(m, u1, u2);
  } else if (generator_id == "D7") {
    majority_voting(m, u1, u2, rng);
  } else if (generator_id == "D8") {
    minimum_effort(m, u1, u2);
  } else if (generator_id == "D9") {
    random_symmetric(m, u1, u2, rng);
  } else if (generator_id == "D10") {
    travelers_dilemma(m, u1, u2);
  } else if (generator_id == "D11") {
    arms_race(m, u1, u2);
  } else if (generator_id == "D12") {
    war_of_attrition(m, u1, u2, rng);
  } else if (generator_id == "D13") {
    two_by_two(u1, u2, rng);
  } else {
    throw InvalidInputError("unknown generator id: " + generator_id);
  }

  Game g = normalize_game(u1, u2);
  g.generator_id = generator_id;
  g.instance_seed = seed;
  return g;
}

}  // namespace arena
