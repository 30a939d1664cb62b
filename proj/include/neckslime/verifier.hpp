#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "neckslime/bijection.hpp"
#include "neckslime/code.hpp"

namespace neckslime {

struct Envelope {
  std::size_t n_min = 0, n_max = 0;
  Entry k_min = 0, k_max = 0;
};

// Outcome of one brute-force check. A failing certificate always carries at
// least one counterexample. wall_ms is metadata and excluded from equality of
// payloads.
struct Certificate {
  std::string check;
  Envelope envelope;
  bool pass = true;
  std::uint64_t failures = 0;
  std::vector<Counterexample> counterexamples;
  std::map<std::string, std::uint64_t> counts;
  std::map<std::string, std::string> notes;  // informational, never affects the verdict
  double wall_ms = 0.0;

  void fail(std::string property, std::string detail);
};

// Invalid <=> constant, for odd n. PreconditionError on even n.
Certificate check_odd_invalidity(std::size_t n, Entry k);

// Round trips, conservation of weight / m / slime count / validity, the
// weighted-sum shift by the weight, and rotation equivariance, over every
// valid (n, k)-code.
Certificate check_migration_laws(std::size_t n, Entry k);
// Same laws restricted to the given codes (which must share n).
Certificate check_migration_laws_on(std::span<const Code> codes);

// 1 <= weight <= floor(n / 2) on every valid (n, k)-code.
Certificate check_weight_bounds(std::size_t n, Entry k);

// prime_bijection is injective, surjective and the right size. n must be prime.
Certificate check_prime_bijection(std::size_t n, Entry k);

// Divisor-sum formula against enumerated necklaces (asserted) and against
// |F_{n,k,0}| (asserted for odd n, recorded for even n).
Certificate check_count_identity(std::size_t n, Entry k);

// verify_riwi on the slime map (odd prime n) or the rotation map (gcd(n,k)=1).
Certificate check_riwi_slime(std::size_t n, Entry k);
Certificate check_riwi_coprime(std::size_t n, Entry k);

// Odd prime n with gcd(n, k) = 1: counts pairs where the rotation and slime
// sigma tables disagree. Informational; always passes.
Certificate check_sigma_agreement(std::size_t n, Entry k);

// Check names accepted by run_check().
const std::vector<std::string>& check_names();
// Names whose preconditions hold for (n, k).
std::vector<std::string> applicable_checks(std::size_t n, Entry k);
// Throws DomainError for an unknown name.
Certificate run_check(std::string_view name, std::size_t n, Entry k);

struct SweepConfig {
  std::size_t grid_n_max = 8;
  Entry grid_k_max = 8;
  std::vector<std::size_t> primes{2, 3, 5, 7, 11};
  // Largest |F_{n,k}| = C(n+k-1, n-1) examined per prime cell.
  std::uint64_t max_codes = 500000;
  // Upper bound on k for prime cells; only n = 2 is limited by it at the defaults.
  Entry k_cap = 1000;
};

// k = 0, 1, ... while C(n+k-1, n-1) <= max_codes and k <= k_cap.
std::vector<Entry> prime_envelope(const SweepConfig& cfg, std::size_t n);

// Every applicable check on the grid n <= grid_n_max, k <= grid_k_max, then
// the bijection, riwi and weight checks on the prime envelope. One merged
// certificate per (check, n); output order is fixed.
std::vector<Certificate> run_sweep(const SweepConfig& cfg,
                                   const std::function<void(const Certificate&)>& on_done = {});

}  // namespace neckslime
