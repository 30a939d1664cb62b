#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "neckslime/code.hpp"

namespace neckslime {

using BigInt = boost::multiprecision::cpp_int;

// Binary necklace with n black and k white beads, stored as the
// lexicographically least rotation of its gap code.
class Necklace {
 public:
  explicit Necklace(const Code& any_rotation);

  const Code& canonical() const noexcept { return canonical_; }
  std::size_t n() const noexcept { return canonical_.size(); }
  Entry k() const noexcept { return canonical_.total(); }

  friend bool operator==(const Necklace&, const Necklace&) = default;
  friend std::strong_ordering operator<=>(const Necklace& a, const Necklace& b) noexcept {
    return a.canonical_ <=> b.canonical_;
  }

 private:
  Code canonical_;
};

// A cyclic string over {B, W} containing at least one B.
class BeadWord {
 public:
  explicit BeadWord(std::string word);

  const std::string& str() const noexcept { return word_; }
  std::size_t black_count() const noexcept;

  friend bool operator==(const BeadWord&, const BeadWord&) = default;

 private:
  std::string word_;
};

// Index of the lexicographically least rotation (Booth's algorithm, linear time).
std::size_t least_rotation(std::span<const Entry> s);

Necklace canonicalize(const Code& f);

// "B" followed by f[j] copies of "W", for each j.
BeadWord code_to_word(const Code& f);

// White-bead gaps after each B, starting from the first B of the string.
BeadWord parse_word(std::string_view text);
Code word_to_code(const BeadWord& w);

// Each rotation class once, in increasing canonical order.
std::vector<Necklace> enumerate_necklaces(std::size_t n, Entry k, bool full_period_only = false);

// (1 / (n + k)) * sum over m | gcd(n, k) of totient(m) * C((n + k) / m, n / m).
BigInt count_necklaces(std::size_t n, Entry k);

std::int64_t euler_phi(std::int64_t m);
BigInt binomial(std::int64_t a, std::int64_t b);

}  // namespace neckslime
