#include "doctest.h"
#include "neckslime/error.hpp"
#include "neckslime/json_io.hpp"
#include "neckslime/verifier.hpp"

using namespace neckslime;

TEST_CASE("every check passes on a small prime case") {
  for (const auto& name : applicable_checks(5, 4)) {
    const auto cert = run_check(name, 5, 4);
    INFO(name);
    CHECK(cert.pass);
    CHECK(cert.failures == 0);
    CHECK(cert.envelope.n_min == 5);
    CHECK(cert.envelope.k_max == 4);
  }
  CHECK(check_names().size() == 8);
  CHECK_THROWS_AS(run_check("nope", 3, 3), DomainError);
}

TEST_CASE("prime bijection sizes") {
  CHECK(check_prime_bijection(5, 10).counts.at("pairs") == 201);
  CHECK(check_prime_bijection(2, 6).counts.at("pairs") == 4);
  CHECK(check_prime_bijection(3, 3).counts.at("pairs") == 4);
}

TEST_CASE("odd-length invalidity needs odd n") {
  CHECK(check_odd_invalidity(7, 7).pass);
  CHECK_THROWS_AS(check_odd_invalidity(4, 2), PreconditionError);
}

TEST_CASE("migration laws on a hand-picked chain") {
  const std::vector<Code> chain{Code{1, 1, 2, 1, 0, 1, 0, 3, 0, 0, 2}, Code{2, 1, 1, 2, 0, 1, 0, 2, 1, 0, 1},
                                Code{1, 2, 0, 3, 0, 1, 0, 1, 2, 0, 1}};
  const auto cert = check_migration_laws_on(chain);
  CHECK(cert.pass);
  CHECK(weighted_sum(chain[0]) == 10);
  CHECK(weighted_sum(chain[1]) == 2);
  CHECK(weighted_sum(chain[2]) == 5);
}

TEST_CASE("count identity on even n is recorded, not asserted") {
  const auto cert = check_count_identity(4, 4);
  CHECK(cert.pass);
  REQUIRE(cert.notes.size() >= 1);
  bool found = false;
  for (const auto& [key, value] : cert.notes) found = found || key.starts_with("even_n_ws0_equals_formula");
  CHECK(found);
}

TEST_CASE("certificates serialize") {
  auto cert = check_weight_bounds(3, 4);
  cert.fail("demo", "synthetic failure");
  CHECK_FALSE(cert.pass);
  const auto j = to_json(cert, false);
  CHECK(j["check"] == "weight-bounds");
  CHECK(j["verdict"] == "fail");
  CHECK(j["failures"] == 1);
  CHECK(j["counterexamples"][0]["property"] == "demo");
  CHECK_FALSE(j.contains("meta"));
}

TEST_CASE("sweep envelope") {
  SweepConfig cfg;
  cfg.grid_n_max = 3;
  cfg.grid_k_max = 3;
  cfg.primes = {2, 3};
  cfg.max_codes = 50;
  cfg.k_cap = 1000;
  CHECK(prime_envelope(cfg, 2).back() == 49);
  CHECK(prime_envelope(cfg, 3).back() == 8);
  std::size_t seen = 0;
  const auto certs = run_sweep(cfg, [&](const Certificate&) { ++seen; });
  CHECK(seen == certs.size());
  for (const auto& c : certs) CHECK(c.pass);
}
