#include "linearr/random_arrangement.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace linearr {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

std::int64_t uniform_between(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

Arrangement random_arrangement(int lines, double density, std::mt19937_64& rng) {
  if (lines < 3) throw std::invalid_argument("random arrangements need at least 3 lines");
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in [0, 1]");

  const auto n = static_cast<std::size_t>(lines);
  std::vector<bool> covered(n * n, false);
  std::vector<std::vector<int>> points;
  std::vector<int> order(n);

  for (int attempt = 0; attempt < lines; ++attempt) {
    if (!(uniform_unit(rng) < density)) continue;
    const auto target = static_cast<std::size_t>(uniform_between(rng, 3, std::max(3, lines / 2 + 1)));
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[uniform_below(rng, i + 1)]);

    std::vector<int> candidate;
    for (int line : order) {
      if (candidate.size() == target) break;
      bool fresh = true;
      for (int member : candidate) {
        if (covered[line * n + member]) {
          fresh = false;
          break;
        }
      }
      if (fresh) candidate.push_back(line);
    }
    if (candidate.size() < 3) continue;
    for (int a : candidate)
      for (int b : candidate)
        if (a != b) covered[a * n + b] = true;
    points.push_back(std::move(candidate));
  }
  return Arrangement::validate(lines, points);
}

std::vector<Arrangement> random_arrangements(int lines, double density, std::uint64_t seed, int count) {
  std::vector<Arrangement> out;
  std::mt19937_64 rng = trial_engine(seed, 0);
  for (int i = 0; i < count; ++i) out.push_back(random_arrangement(lines, density, rng));
  return out;
}

}  // namespace linearr
