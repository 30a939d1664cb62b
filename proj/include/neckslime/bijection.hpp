#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "neckslime/code.hpp"
#include "neckslime/necklace.hpp"

namespace neckslime {

bool is_prime(std::int64_t n);

// The rotation orbit of a full-period code inside its weighted-sum class:
// {f, c^q(f), c^{2q}(f), ...} with stride q = n / gcd(n, k).
struct NeckClass {
  std::size_t q = 0;
  Code representative;        // lexicographically least member
  std::vector<Code> members;  // members[i] = rotate(representative, i * q)
};

// Throws PreconditionError if period(f) < n.
NeckClass neck_class(const Code& f);

// An invertible map on full-period (n, k)-codes. It is a riwi-map when it is
// bijective, commutes with rotation, and raises the weighted sum by one;
// verify_riwi() checks those properties, construction does not.
class RiwiMap {
 public:
  using Transform = std::function<Code(const Code&)>;

  RiwiMap(std::string descriptor, Transform apply, Transform invert)
      : descriptor_(std::move(descriptor)), apply_(std::move(apply)), invert_(std::move(invert)) {}

  Code apply(const Code& f) const { return apply_(f); }
  Code invert(const Code& f) const { return invert_(f); }
  const std::string& descriptor() const noexcept { return descriptor_; }

 private:
  std::string descriptor_;
  Transform apply_;
  Transform invert_;
};

// c^j with j = -k^{-1} mod n, so each application raises the weighted sum by
// one. Requires gcd(n, k) == 1 (NotCoprimeError otherwise).
RiwiMap riwi_coprime(std::size_t n, Entry k);

// Slime migration phi / phi^{-1}. Requires n to be an odd prime.
RiwiMap riwi_slime(std::size_t n, Entry k);

// Explicit table of code -> code pairs. Throws DomainError on repeated
// sources or targets; apply/invert throw DomainError outside the table.
RiwiMap riwi_from_pairs(std::string name, std::span<const std::pair<Code, Code>> pairs);

enum class Chooser { kLexMin, kLexMax };
std::string_view chooser_name(Chooser c);

struct BijectionPair {
  Code code;
  Necklace necklace;
};

// Code -> necklace table, sorted by code.
struct BijectionTable {
  std::size_t n = 0;
  Entry k = 0;
  std::vector<BijectionPair> pairs;
  std::string riwi;
  std::string chooser;
};

// sigma_chi: for every neck-class of full-period codes with weighted sum 0 and
// chosen representative f, sends rotate(f, i*q) to the necklace of chi^i(f).
BijectionTable build_sigma(std::size_t n, Entry k, const RiwiMap& chi, Chooser chooser = Chooser::kLexMin);

enum class PrimeRiwi { kSlime, kRotation };

// Total bijection F_{n,k,0} -> N_{n,k} for prime n. Odd n uses sigma over the
// selected riwi-map plus constant code -> constant necklace. n == 2 uses the
// parity rule for even k and the rotation map for odd k.
// Throws PreconditionError for composite n, NotCoprimeError when the rotation
// map is requested with gcd(n, k) != 1.
BijectionTable prime_bijection(std::size_t n, Entry k, PrimeRiwi riwi = PrimeRiwi::kSlime,
                               Chooser chooser = Chooser::kLexMin);

struct Counterexample {
  std::string property;
  std::string detail;
};

struct RiwiReport {
  std::size_t n = 0;
  Entry k = 0;
  std::string descriptor;
  std::uint64_t examined = 0;
  std::uint64_t bijectivity_failures = 0;
  std::uint64_t rotation_failures = 0;
  std::uint64_t weighted_sum_failures = 0;
  std::vector<Counterexample> counterexamples;  // truncated; failure counters are exact

  bool pass() const noexcept {
    return bijectivity_failures == 0 && rotation_failures == 0 && weighted_sum_failures == 0;
  }
};

// Exhaustive check of the three riwi properties over every full-period (n, k)-code.
RiwiReport verify_riwi(const RiwiMap& chi, std::size_t n, Entry k);

struct TableAudit {
  std::uint64_t pairs = 0;
  std::uint64_t expected_codes = 0;
  std::uint64_t expected_necklaces = 0;
  std::uint64_t failures = 0;
  std::vector<Counterexample> counterexamples;

  bool pass() const noexcept { return failures == 0; }
};

// Injectivity and surjectivity of the table against brute-force enumeration
// of the weighted-sum-0 codes and of the necklaces (full-period only if asked).
TableAudit certify_table(const BijectionTable& table, bool full_period_only = false);

inline constexpr std::size_t kMaxCounterexamples = 16;

}  // namespace neckslime
