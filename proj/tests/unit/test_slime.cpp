#include <numeric>

#include "doctest.h"
#include "neckslime/code.hpp"
#include "neckslime/error.hpp"
#include "neckslime/slime.hpp"
#include "../oracle.hpp"

using namespace neckslime;

namespace {

oracle::Vec to_vec(const Code& f) { return {f.entries().begin(), f.entries().end()}; }

Code from_vec(const oracle::Vec& v) {
  std::vector<Entry> e(v.begin(), v.end());
  return Code(std::span<const Entry>(e));
}

}  // namespace

TEST_CASE("decomposition of the eleven-bead example") {
  const Code f{1, 1, 2, 1, 0, 1, 0, 3, 0, 0, 2};
  const auto d = decompose(f);
  CHECK(d.valid);
  CHECK(d.max_pair_sum == 3);
  CHECK(d.weight == 3);
  const std::vector<CyclicInterval> expected{{1, 3}, {6, 3}, {10, 2}};
  CHECK(d.slimes == expected);

  const Code g{2, 1, 1, 2, 0, 1, 0, 2, 1, 0, 1};
  const Code h{1, 2, 0, 3, 0, 1, 0, 1, 2, 0, 1};
  CHECK(migrate_forward(f) == g);
  CHECK(migrate_forward(g) == h);
  CHECK(migrate_backward(h) == g);
  CHECK(migrate_backward(g) == f);
  CHECK(weighted_sum(f) == 10);
  CHECK(weighted_sum(g) == 2);
  CHECK(weighted_sum(h) == 5);
}

TEST_CASE("invalid codes") {
  CHECK_FALSE(is_valid(Code{1, 1, 1}));
  CHECK_FALSE(is_valid(Code{2, 0, 2, 0}));
  CHECK_FALSE(is_valid(Code{5}));
  const auto d = decompose(Code{2, 0, 2, 0});
  CHECK_FALSE(d.valid);
  CHECK_FALSE(d.weight.has_value());
  CHECK(d.slimes.empty());
  CHECK_THROWS_AS(migrate_forward(Code{1, 1, 1}), InvalidCodeError);
  CHECK_THROWS_AS(migrate_backward(Code{1, 1, 1}), InvalidCodeError);
  CHECK_THROWS_AS(weight(Code{1, 1, 1}), InvalidCodeError);
  CHECK_THROWS_AS(phi(Code{3, 3, 3}), InvalidCodeError);
}

TEST_CASE("phi chain and inverse") {
  CHECK(phi(Code{3, 0, 0}) == Code{2, 1, 0});
  CHECK(phi(Code{2, 1, 0}) == Code{1, 2, 0});
  CHECK(phi(Code{0, 0, 3}) == Code{1, 0, 2});
  CHECK(phi_inverse(Code{1, 0, 2}) == Code{0, 0, 3});
  CHECK_THROWS_AS(phi(Code{2, 0, 0, 2, 0, 0}), NotCoprimeError);
}

TEST_CASE("inverse_mod") {
  CHECK(inverse_mod(3, 7) == 5);
  CHECK(inverse_mod(1, 1) == 0);
  CHECK(inverse_mod(-1, 5) == 4);
  CHECK_THROWS_AS(inverse_mod(2, 4), NotCoprimeError);
}

TEST_CASE("slimes and migrations agree with the definitions") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (Entry k = 0; k <= 6; ++k) {
      for (const auto& v : oracle::compositions(n, k)) {
        const Code f = from_vec(v);
        const auto d = decompose(f);
        REQUIRE(d.valid == !oracle::invalid(v));
        REQUIRE(d.max_pair_sum == oracle::max_pair(v));
        if (!d.valid) continue;
        const auto expected = oracle::slimes(v);
        REQUIRE(d.slimes.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) {
          REQUIRE(d.slimes[i].start == expected[i].start);
          REQUIRE(d.slimes[i].length == expected[i].length);
        }
        REQUIRE(*d.weight == oracle::weight(v));
        REQUIRE(to_vec(migrate_forward(f)) == oracle::migrate(v, true));
        REQUIRE(to_vec(migrate_backward(f)) == oracle::migrate(v, false));
        if (std::gcd(*d.weight, static_cast<std::int64_t>(n)) == 1) {
          REQUIRE(to_vec(phi(f)) == oracle::phi(v));
          REQUIRE(phi_inverse(phi(f)) == f);
        }
      }
    }
  }
}
