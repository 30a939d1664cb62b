#include <numeric>
#include <set>

#include "doctest.h"
#include "neckslime/bijection.hpp"
#include "neckslime/error.hpp"
#include "neckslime/necklace.hpp"
#include "neckslime/slime.hpp"

using namespace neckslime;

namespace {

std::set<Code> necklace_set(const BijectionTable& t) {
  std::set<Code> out;
  for (const auto& p : t.pairs) out.insert(p.necklace.canonical());
  return out;
}

}  // namespace

TEST_CASE("primality") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(11));
  CHECK_FALSE(is_prime(9));
}

TEST_CASE("neck classes") {
  const auto cls = neck_class(Code{2, 0, 1, 0, 1, 0});
  CHECK(cls.q == 3);
  CHECK(cls.members.size() == 2);
  CHECK(cls.representative == Code{0, 1, 0, 2, 0, 1});
  CHECK(neck_class(Code{0, 1, 3}).members.size() == 1);
  CHECK_THROWS_AS(neck_class(Code{1, 0, 1, 0}), PreconditionError);
}

TEST_CASE("table for (3,3)") {
  const auto t = prime_bijection(3, 3);
  REQUIRE(t.pairs.size() == 4);
  CHECK(t.riwi == "slime");
  CHECK(t.pairs[0].code == Code{0, 0, 3});
  CHECK(t.pairs[0].necklace.canonical() == Code{0, 0, 3});
  CHECK(t.pairs[1].code == Code{0, 3, 0});
  CHECK(t.pairs[1].necklace.canonical() == Code{0, 2, 1});
  CHECK(t.pairs[2].code == Code{1, 1, 1});
  CHECK(t.pairs[2].necklace.canonical() == Code{1, 1, 1});
  CHECK(t.pairs[3].code == Code{3, 0, 0});
  CHECK(t.pairs[3].necklace.canonical() == Code{0, 1, 2});
  CHECK(certify_table(t).pass());
}

TEST_CASE("table for (2,4)") {
  const auto t = prime_bijection(2, 4);
  REQUIRE(t.pairs.size() == 3);
  CHECK(t.riwi == "custom:n2-parity");
  CHECK(t.pairs[0].necklace.canonical() == Code{1, 3});
  CHECK(t.pairs[1].necklace.canonical() == Code{2, 2});
  CHECK(t.pairs[2].necklace.canonical() == Code{0, 4});
  CHECK(certify_table(t).pass());
}

TEST_CASE("prime bijections certify on small cases") {
  for (std::size_t n : {2, 3, 5, 7}) {
    for (Entry k = 0; k <= 8; ++k) {
      const auto t = prime_bijection(n, k);
      const auto audit = certify_table(t);
      INFO("n=" << n << " k=" << k);
      REQUIRE(audit.pass());
      REQUIRE(t.pairs.size() == count_necklaces(n, k));
    }
  }
  CHECK_THROWS_AS(prime_bijection(4, 4), PreconditionError);
  CHECK_THROWS_AS(prime_bijection(1, 4), PreconditionError);
}

TEST_CASE("rotation riwi on coprime parameters") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (Entry k = 1; k <= 7; ++k) {
      if (std::gcd<std::int64_t, std::int64_t>(static_cast<std::int64_t>(n), k) != 1) continue;
      REQUIRE(verify_riwi(riwi_coprime(n, k), n, k).pass());
    }
  }
  CHECK_THROWS(riwi_coprime(4, 2));
}

TEST_CASE("slime riwi") {
  for (std::size_t n : {3, 5, 7}) {
    for (Entry k = 0; k <= 7; ++k) REQUIRE(verify_riwi(riwi_slime(n, k), n, k).pass());
  }
  CHECK_THROWS(riwi_slime(4, 3));
}

TEST_CASE("the identity is not a riwi-map") {
  const RiwiMap id("identity", [](const Code& f) { return f; }, [](const Code& f) { return f; });
  const auto report = verify_riwi(id, 3, 4);
  CHECK_FALSE(report.pass());
  CHECK(report.weighted_sum_failures == report.examined);
  CHECK(report.bijectivity_failures == 0);
  CHECK(report.rotation_failures == 0);
  CHECK_FALSE(report.counterexamples.empty());
}

TEST_CASE("a map that breaks rotation invariance is caught") {
  // A permutation of the (2,3)-codes that ignores weighted sums.
  std::vector<std::pair<Code, Code>> pairs{{Code{0, 3}, Code{2, 1}}, {Code{1, 2}, Code{0, 3}},
                                           {Code{2, 1}, Code{3, 0}}, {Code{3, 0}, Code{1, 2}}};
  const auto report = verify_riwi(riwi_from_pairs("swap", pairs), 2, 3);
  CHECK(report.descriptor == "custom:swap");
  CHECK(report.bijectivity_failures == 0);
  CHECK_FALSE(report.pass());
}

TEST_CASE("custom maps reject duplicates") {
  std::vector<std::pair<Code, Code>> pairs{{Code{0, 3}, Code{1, 2}}, {Code{0, 3}, Code{2, 1}}};
  CHECK_THROWS_AS(riwi_from_pairs("dup", pairs), DomainError);
}

TEST_CASE("both choosers give bijections") {
  for (std::size_t n : {3, 5}) {
    for (Entry k = 0; k <= 7; ++k) {
      const auto lo = prime_bijection(n, k, PrimeRiwi::kSlime, Chooser::kLexMin);
      const auto hi = prime_bijection(n, k, PrimeRiwi::kSlime, Chooser::kLexMax);
      CHECK(hi.chooser == "lexmax");
      REQUIRE(certify_table(hi).pass());
      CHECK(necklace_set(lo) == necklace_set(hi));
    }
  }
}

TEST_CASE("custom riwi gives a table on composite n") {
  // For gcd(n, k) = 1 the rotation riwi exists for any n; feed it in as a
  // custom map to exercise the general construction.
  const std::size_t n = 4;
  const Entry k = 3;
  const auto rot = riwi_coprime(n, k);
  std::vector<std::pair<Code, Code>> pairs;
  for_each_code(n, k, {.residue = std::nullopt, .full_period_only = true},
                [&](const Code& f) { pairs.emplace_back(f, rot.apply(f)); });
  const auto chi = riwi_from_pairs("rot4", pairs);
  REQUIRE(verify_riwi(chi, n, k).pass());
  const auto t = build_sigma(n, k, chi);
  CHECK(t.pairs.size() == count_necklaces(n, k));
  CHECK(certify_table(t, true).pass());
}
