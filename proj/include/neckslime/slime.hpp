#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "neckslime/code.hpp"

namespace neckslime {

// Positions start, start+1, ..., start+length-1 (mod n); length >= 2.
struct CyclicInterval {
  std::size_t start = 0;
  std::size_t length = 0;

  friend bool operator==(const CyclicInterval&, const CyclicInterval&) = default;
};

// Slimes are the maximal cyclic runs on which every adjacent pair sums to
// the largest adjacent sum m. A code whose adjacent sums are all equal has
// no cutoff anywhere and is invalid; it gets no slime list and no weight.
struct SlimeDecomposition {
  Entry max_pair_sum = 0;
  std::vector<CyclicInterval> slimes;  // pairwise disjoint, sorted by start
  bool valid = false;
  std::optional<std::int64_t> weight;  // sum of floor(length / 2), set iff valid
};

// Largest f[j] + f[j+1] over all cyclic positions.
Entry max_adjacent_sum(const Code& f);

SlimeDecomposition decompose(const Code& f);

// False iff every adjacent sum is equal.
bool is_valid(const Code& f);

// Throws InvalidCodeError on invalid codes.
std::int64_t weight(const Code& f);

// Simultaneous forward (resp. backward) move on every slime. Both throw
// InvalidCodeError on invalid input.
Code migrate_forward(const Code& f);
Code migrate_backward(const Code& f);

// Inverse of a modulo n via the extended Euclidean algorithm, in [0, n).
// Throws NotCoprimeError when gcd(a, n) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t n);

// phi(f) applies i(f) forward migrations, where i(f) is the inverse of the
// weight modulo n; this raises the weighted sum by exactly one.
// Throws InvalidCodeError, or NotCoprimeError when gcd(weight, n) != 1.
Code phi(const Code& f);
Code phi_inverse(const Code& f);

}  // namespace neckslime
