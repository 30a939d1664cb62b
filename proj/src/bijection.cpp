#include "neckslime/bijection.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>

#include "neckslime/error.hpp"
#include "neckslime/slime.hpp"

namespace neckslime {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

void require_shape(const Code& f, std::size_t n, Entry k, std::string_view who) {
  if (f.size() != n || f.total() != k) {
    throw DomainError(std::string(who) + ": code " + f.to_string() + " is not an (" + std::to_string(n) + "," +
                      std::to_string(k) + ")-code");
  }
}

std::size_t stride(std::size_t n, Entry k) {
  return n / static_cast<std::size_t>(std::gcd(static_cast<std::int64_t>(n), k));
}

void note(std::vector<Counterexample>& out, std::string property, std::string detail) {
  if (out.size() < kMaxCounterexamples) out.push_back({std::move(property), std::move(detail)});
}

// Sorting through an index permutation avoids moving codes around.
void sort_by_code(std::vector<BijectionPair>& pairs) {
  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pairs[a].code < pairs[b].code; });
  std::vector<BijectionPair> sorted;
  sorted.reserve(pairs.size());
  for (std::size_t i : order) sorted.push_back(std::move(pairs[i]));
  pairs = std::move(sorted);
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

NeckClass neck_class(const Code& f) {
  const std::size_t n = f.size();
  if (period(f) != n) {
    throw PreconditionError("neck-class needs a full-period code, got " + f.to_string());
  }
  const std::size_t q = stride(n, f.total());
  const std::size_t count = n / q;

  Code rep = f;
  for (std::size_t i = 1; i < count; ++i) {
    Code member = rotate(f, static_cast<std::int64_t>(i * q));
    if (member < rep) rep = std::move(member);
  }
  NeckClass out{q, rep, {}};
  out.members.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.members.push_back(rotate(rep, static_cast<std::int64_t>(i * q)));
  return out;
}

RiwiMap riwi_coprime(std::size_t n, Entry k) {
  if (n == 0) throw DomainError("n must be positive");
  const auto nn = static_cast<std::int64_t>(n);
  if (std::gcd(nn, k) != 1) {
    throw NotCoprimeError("rotation riwi-map needs gcd(n, k) = 1, got n = " + std::to_string(n) +
                          ", k = " + std::to_string(k));
  }
  // ws(c(f)) = ws(f) - k, so c^j raises ws by one when j = -k^{-1} (mod n).
  const std::int64_t steps = mod(-inverse_mod(k, nn), nn);

  RiwiMap chi(
      "rotation",
      [=](const Code& f) {
        require_shape(f, n, k, "rotation riwi-map");
        return rotate(f, steps);
      },
      [=](const Code& f) {
        require_shape(f, n, k, "rotation riwi-map");
        return rotate(f, -steps);
      });

  // Self-check on the lexicographically first code.
  const Code probe = CodeEnumerator(n, k).next().value();
  if (weighted_sum(chi.apply(probe)) != mod(weighted_sum(probe) + 1, nn)) {
    throw std::logic_error("rotation riwi-map does not raise the weighted sum by one");
  }
  return chi;
}

RiwiMap riwi_slime(std::size_t n, Entry k) {
  if (n % 2 == 0 || !is_prime(static_cast<std::int64_t>(n))) {
    throw PreconditionError("slime riwi-map needs n to be an odd prime, got n = " + std::to_string(n));
  }
  return RiwiMap(
      "slime",
      [=](const Code& f) {
        require_shape(f, n, k, "slime riwi-map");
        return phi(f);
      },
      [=](const Code& f) {
        require_shape(f, n, k, "slime riwi-map");
        return phi_inverse(f);
      });
}

RiwiMap riwi_from_pairs(std::string name, std::span<const std::pair<Code, Code>> pairs) {
  auto forward = std::make_shared<std::map<Code, Code>>();
  auto backward = std::make_shared<std::map<Code, Code>>();
  for (const auto& [from, to] : pairs) {
    if (!forward->emplace(from, to).second) throw DomainError("map lists source " + from.to_string() + " twice");
    if (!backward->emplace(to, from).second) throw DomainError("map lists target " + to.to_string() + " twice");
  }
  auto lookup = [](const std::shared_ptr<std::map<Code, Code>>& table, const char* what) {
    return [table, what](const Code& f) {
      auto it = table->find(f);
      if (it == table->end()) throw DomainError(std::string(what) + " of " + f.to_string() + " is not in the map");
      return it->second;
    };
  };
  return RiwiMap("custom:" + name, lookup(forward, "image"), lookup(backward, "preimage"));
}

std::string_view chooser_name(Chooser c) { return c == Chooser::kLexMin ? "lexmin" : "lexmax"; }

BijectionTable build_sigma(std::size_t n, Entry k, const RiwiMap& chi, Chooser chooser) {
  BijectionTable table{n, k, {}, chi.descriptor(), std::string(chooser_name(chooser))};
  const std::size_t q = stride(n, k);
  const std::size_t class_size = n / q;

  for_each_code(n, k, {.residue = 0, .full_period_only = true}, [&](const Code& f) {
    // Visit each neck-class once, through its lexicographically least member.
    NeckClass cls = neck_class(f);
    if (cls.representative != f) return;
    const Code& rep = chooser == Chooser::kLexMin
                          ? cls.representative
                          : *std::max_element(cls.members.begin(), cls.members.end());
    Code image = rep;
    for (std::size_t i = 0; i < class_size; ++i) {
      if (i > 0) image = chi.apply(image);
      table.pairs.push_back({rotate(rep, static_cast<std::int64_t>(i * q)), Necklace(image)});
    }
  });

  sort_by_code(table.pairs);
  return table;
}

namespace {

// Inverts the rule "necklace {a, b} with a >= b goes to (a, b) if b is even,
// otherwise to (b - 1, a + 1)". Codes (x, y) with y even split into x >= y
// (first case) and x < y (second case, so a = y - 1, b = x + 1).
BijectionTable two_bead_parity_table(Entry k, Chooser chooser) {
  BijectionTable table{2, k, {}, "custom:n2-parity", std::string(chooser_name(chooser))};
  for_each_code(2, k, {.residue = 0}, [&](const Code& f) {
    const Entry x = f[0], y = f[1];
    const Code gaps = x >= y ? Code{x, y} : Code{y - 1, x + 1};
    table.pairs.push_back({f, Necklace(gaps)});
  });
  return table;
}

}  // namespace

BijectionTable prime_bijection(std::size_t n, Entry k, PrimeRiwi riwi, Chooser chooser) {
  const auto nn = static_cast<std::int64_t>(n);
  if (!is_prime(nn)) {
    throw PreconditionError("the prime bijection needs prime n, got n = " + std::to_string(n) +
                            "; composite n requires a riwi-map (see --map)");
  }
  if (k < 0) throw DomainError("k must be nonnegative");
  const bool coprime = std::gcd(nn, k) == 1;

  if (riwi == PrimeRiwi::kRotation || (n == 2 && coprime)) {
    return build_sigma(n, k, riwi_coprime(n, k), chooser);
  }
  if (n == 2) return two_bead_parity_table(k, chooser);

  BijectionTable table = build_sigma(n, k, riwi_slime(n, k), chooser);
  if (k % nn == 0) {
    Code::Storage flat(n, k / nn);
    Code constant(std::move(flat));
    table.pairs.push_back({constant, Necklace(constant)});
    sort_by_code(table.pairs);
  }
  return table;
}

RiwiReport verify_riwi(const RiwiMap& chi, std::size_t n, Entry k) {
  RiwiReport report;
  report.n = n;
  report.k = k;
  report.descriptor = chi.descriptor();
  const auto nn = static_cast<std::int64_t>(n);

  // Everything is tracked by rank among all (n, k)-codes; the domain is the
  // full-period ones.
  const CompositionIndex index(n, k);
  constexpr std::int64_t kNone = -1;
  const auto size = static_cast<std::size_t>(index.size());
  std::vector<char> in_domain(size, 0);
  std::vector<std::int64_t> image(size, kNone);          // rank of apply(f)
  std::vector<std::int64_t> rotated(size, kNone);        // rank of c(f)
  std::vector<std::int64_t> rotated_image(size, kNone);  // rank of c(apply(f))
  std::vector<std::uint32_t> hits(size, 0);

  auto rank_in_domain = [&](const Code& g) -> std::optional<std::size_t> {
    if (g.size() != n || g.total() != k || period(g) != n) return std::nullopt;
    return static_cast<std::size_t>(index.rank(g));
  };

  for_each_code(n, k, {.residue = std::nullopt, .full_period_only = true}, [&](const Code& f) {
    const auto r = static_cast<std::size_t>(index.rank(f));
    in_domain[r] = 1;
    ++report.examined;
    rotated[r] = static_cast<std::int64_t>(index.rank(rotate(f, 1)));

    std::optional<Code> g;
    try {
      g = chi.apply(f);
    } catch (const Error& e) {
      ++report.bijectivity_failures;
      note(report.counterexamples, "bijective", "apply(" + f.to_string() + ") failed: " + e.what());
      return;
    }
    const auto j = rank_in_domain(*g);
    if (!j) {
      ++report.bijectivity_failures;
      note(report.counterexamples, "bijective",
           "apply(" + f.to_string() + ") = " + g->to_string() + " leaves the domain");
      return;
    }
    image[r] = static_cast<std::int64_t>(*j);
    rotated_image[r] = static_cast<std::int64_t>(index.rank(rotate(*g, 1)));
    ++hits[*j];

    if (weighted_sum(*g) != mod(weighted_sum(f) + 1, nn)) {
      ++report.weighted_sum_failures;
      note(report.counterexamples, "weighted-sum",
           "ws(" + f.to_string() + ") = " + std::to_string(weighted_sum(f)) + " but ws(apply) = " +
               std::to_string(weighted_sum(*g)));
    }
    try {
      if (chi.invert(*g) != f) {
        ++report.bijectivity_failures;
        note(report.counterexamples, "bijective", "invert(apply(" + f.to_string() + ")) != " + f.to_string());
      }
    } catch (const Error& e) {
      ++report.bijectivity_failures;
      note(report.counterexamples, "bijective", "invert(apply(" + f.to_string() + ")) failed: " + e.what());
    }
  });

  for (std::size_t r = 0; r < size; ++r) {
    if (!in_domain[r]) continue;
    // c maps the domain onto itself, so apply(c(f)) is already tabulated.
    const auto rr = static_cast<std::size_t>(rotated[r]);
    if (image[r] != kNone && image[rr] != kNone && image[rr] != rotated_image[r]) {
      ++report.rotation_failures;
      note(report.counterexamples, "rotation-invariant",
           "apply(c(" + index.unrank(r).to_string() + ")) = " +
               index.unrank(static_cast<std::uint64_t>(image[rr])).to_string() + " but c(apply) = " +
               index.unrank(static_cast<std::uint64_t>(rotated_image[r])).to_string());
    }
    // Distinct images inside a finite domain of equal size cover it; together
    // with invert(apply(f)) == f this makes invert the two-sided inverse.
    if (hits[r] > 1) {
      report.bijectivity_failures += hits[r] - 1;
      note(report.counterexamples, "bijective",
           "image " + index.unrank(r).to_string() + " is hit " + std::to_string(hits[r]) + " times");
    } else if (hits[r] == 0) {
      ++report.bijectivity_failures;
      note(report.counterexamples, "bijective", index.unrank(r).to_string() + " is not in the image");
    }
  }
  return report;
}

TableAudit certify_table(const BijectionTable& table, bool full_period_only) {
  TableAudit audit;
  audit.pairs = table.pairs.size();
  const std::size_t n = table.n;
  const Entry k = table.k;

  // Expected sides as rank bitmaps: weighted-sum-0 codes, and canonical
  // necklace representatives.
  const CompositionIndex index(n, k);
  const auto size = static_cast<std::size_t>(index.size());
  std::vector<char> is_code(size, 0), is_necklace(size, 0);
  for_each_code(n, k, {}, [&](const Code& f) {
    if (full_period_only && period(f) != n) return;
    const auto r = static_cast<std::size_t>(index.rank(f));
    if (weighted_sum(f) == 0) {
      is_code[r] = 1;
      ++audit.expected_codes;
    }
    if (Necklace(f).canonical() == f) {
      is_necklace[r] = 1;
      ++audit.expected_necklaces;
    }
  });

  auto rank_of = [&](const Code& f) -> std::optional<std::size_t> {
    if (f.size() != n || f.total() != k) return std::nullopt;
    return static_cast<std::size_t>(index.rank(f));
  };

  std::vector<std::uint32_t> code_hits(size, 0), necklace_hits(size, 0);
  for (const auto& p : table.pairs) {
    const auto rc = rank_of(p.code);
    if (rc && is_code[*rc]) {
      ++code_hits[*rc];
    } else {
      ++audit.failures;
      note(audit.counterexamples, "domain", "code " + p.code.to_string() + " is outside the domain");
    }
    const auto rn = rank_of(p.necklace.canonical());
    if (rn && is_necklace[*rn]) {
      ++necklace_hits[*rn];
    } else {
      ++audit.failures;
      note(audit.counterexamples, "codomain",
           "necklace " + p.necklace.canonical().to_string() + " is outside the codomain");
    }
  }
  for (std::size_t r = 0; r < size; ++r) {
    if (is_code[r] && code_hits[r] != 1) {
      ++audit.failures;
      note(audit.counterexamples, code_hits[r] == 0 ? "total" : "well-defined",
           "code " + index.unrank(r).to_string() + " appears " + std::to_string(code_hits[r]) + " times");
    }
    if (is_necklace[r] && necklace_hits[r] != 1) {
      ++audit.failures;
      note(audit.counterexamples, necklace_hits[r] == 0 ? "surjective" : "injective",
           "necklace " + index.unrank(r).to_string() + " is hit " + std::to_string(necklace_hits[r]) + " times");
    }
  }
  return audit;
}

}  // namespace neckslime
