#include "neckslime/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>

#include "neckslime/error.hpp"
#include "neckslime/necklace.hpp"
#include "neckslime/slime.hpp"

namespace neckslime {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

 private:
  Clock::time_point start_ = Clock::now();
};

Certificate start(std::string name, std::size_t n, Entry k) {
  Certificate c;
  c.check = std::move(name);
  c.envelope = {n, n, k, k};
  return c;
}

std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

std::string cell(std::size_t n, Entry k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

void absorb(Certificate& acc, const Certificate& part) {
  if (acc.check.empty()) {
    acc = part;
    return;
  }
  acc.envelope.n_min = std::min(acc.envelope.n_min, part.envelope.n_min);
  acc.envelope.n_max = std::max(acc.envelope.n_max, part.envelope.n_max);
  acc.envelope.k_min = std::min(acc.envelope.k_min, part.envelope.k_min);
  acc.envelope.k_max = std::max(acc.envelope.k_max, part.envelope.k_max);
  acc.pass = acc.pass && part.pass;
  acc.failures += part.failures;
  for (const auto& ce : part.counterexamples) {
    if (acc.counterexamples.size() < kMaxCounterexamples) acc.counterexamples.push_back(ce);
  }
  for (const auto& [key, value] : part.counts) acc.counts[key] += value;
  for (const auto& [key, value] : part.notes) acc.notes[key] = value;
  acc.wall_ms += part.wall_ms;
}

// The migration laws for one valid code; returns false on the first breach.
void migration_laws(Certificate& cert, const Code& f) {
  auto fs = [&f] { return f.to_string(); };
  const auto n = static_cast<std::int64_t>(f.size());
  const SlimeDecomposition d = decompose(f);
  const std::int64_t w = *d.weight;

  // Structure: sorted, disjoint, alternating with pair sums m.
  std::size_t covered = 0;
  for (std::size_t i = 0; i < d.slimes.size(); ++i) {
    const auto& s = d.slimes[i];
    covered += s.length;
    if (s.length < 2 || (i > 0 && d.slimes[i - 1].start + d.slimes[i - 1].length > s.start)) {
      cert.fail("slime-structure", "overlapping or short slime in " + fs());
    }
    for (std::size_t j = 0; j + 1 < s.length; ++j) {
      const auto p = static_cast<std::int64_t>(s.start + j);
      if (f.cyclic(p) + f.cyclic(p + 1) != d.max_pair_sum) cert.fail("slime-structure", "broken slime in " + fs());
    }
  }
  if (covered > f.size()) cert.fail("slime-structure", "slimes of " + fs() + " cover more than n positions");

  const Code fwd = migrate_forward(f);
  const Code bwd = migrate_backward(f);
  if (!is_valid(fwd)) {
    cert.fail("validity", "forward migration of " + fs() + " is invalid");
    return;
  }
  if (!is_valid(bwd)) {
    cert.fail("validity", "backward migration of " + fs() + " is invalid");
    return;
  }
  if (migrate_backward(fwd) != f) cert.fail("round-trip", "backward(forward(" + fs() + ")) != " + fs());
  if (migrate_forward(bwd) != f) cert.fail("round-trip", "forward(backward(" + fs() + ")) != " + fs());

  const SlimeDecomposition df = decompose(fwd);
  const SlimeDecomposition db = decompose(bwd);
  if (*df.weight != w || *db.weight != w) cert.fail("weight", "migration changes the weight of " + fs());
  if (df.slimes.size() != d.slimes.size() || db.slimes.size() != d.slimes.size()) {
    cert.fail("slime-count", "migration changes the slime count of " + fs());
  }
  if (df.max_pair_sum != d.max_pair_sum || db.max_pair_sum != d.max_pair_sum) {
    cert.fail("max-pair-sum", "migration changes m of " + fs());
  }
  if (weighted_sum(fwd) != mod(weighted_sum(f) + w, n)) {
    cert.fail("weighted-sum-shift", "ws(forward(" + fs() + ")) != ws + " + std::to_string(w));
  }
  if (weighted_sum(bwd) != mod(weighted_sum(f) - w, n)) {
    cert.fail("weighted-sum-shift", "ws(backward(" + fs() + ")) != ws - " + std::to_string(w));
  }
  // Equivariance under c implies it under every power of c.
  if (migrate_forward(rotate(f, 1)) != rotate(fwd, 1)) {
    cert.fail("rotation-equivariance", "forward(c(" + fs() + ")) != c(forward(" + fs() + "))");
  }
}

void riwi_into(Certificate& cert, const RiwiReport& report) {
  cert.counts["codes"] = report.examined;
  cert.counts["bijectivity_failures"] = report.bijectivity_failures;
  cert.counts["rotation_failures"] = report.rotation_failures;
  cert.counts["weighted_sum_failures"] = report.weighted_sum_failures;
  cert.failures = report.bijectivity_failures + report.rotation_failures + report.weighted_sum_failures;
  cert.pass = report.pass();
  for (const auto& ce : report.counterexamples) cert.counterexamples.push_back(ce);
  if (!cert.pass && cert.counterexamples.empty()) {
    cert.counterexamples.push_back({"riwi", "failure counters nonzero for " + cell(report.n, report.k)});
  }
}

}  // namespace

void Certificate::fail(std::string property, std::string detail) {
  pass = false;
  ++failures;
  if (counterexamples.size() < kMaxCounterexamples) {
    counterexamples.push_back({std::move(property), std::move(detail)});
  }
}

Certificate check_odd_invalidity(std::size_t n, Entry k) {
  if (n % 2 == 0) throw PreconditionError("invalid <=> constant holds only for odd n, got " + std::to_string(n));
  Stopwatch clock;
  Certificate cert = start("oddinv", n, k);
  std::uint64_t codes = 0, invalid = 0;
  for_each_code(n, k, {}, [&](const Code& f) {
    ++codes;
    const bool valid = is_valid(f);
    if (!valid) ++invalid;
    if (valid == is_constant(f)) {
      cert.fail("invalid-iff-constant", f.to_string() + (valid ? " is constant but valid" : " is invalid but not constant"));
    }
  });
  cert.counts["codes"] = codes;
  cert.counts["invalid"] = invalid;
  cert.wall_ms = clock.elapsed_ms();
  return cert;
}

Certificate check_migration_laws(std::size_t n, Entry k) {
  Stopwatch clock;
  Certificate cert = start("migration", n, k);
  std::uint64_t codes = 0, valid = 0;
  for_each_code(n, k, {}, [&](const Code& f) {
    ++codes;
    if (!is_valid(f)) return;
    ++valid;
    migration_laws(cert, f);
  });
  cert.counts["codes"] = codes;
  cert.counts["valid"] = valid;
  cert.wall_ms = clock.elapsed_ms();
  return cert;
}

Certificate check_migration_laws_on(std::span<const Code> codes) {
  Stopwatch clock;
  if (codes.empty()) throw DomainError("no codes to check");
  Certificate cert = start("migration", codes.front().size(), codes.front().total());
  std::uint64_t valid = 0;
  for (const Code& f : codes) {
    if (f.size() != codes.front().size()) throw DomainError("codes must share n");
    cert.envelope.k_min = std::min(cert.envelope.k_min, f.total());
    cert.envelope.k_max = std::max(cert.envelope.k_max, f.total());
    if (!is_valid(f)) {
      cert.fail("validity", f.to_string() + " is invalid");
      continue;
    }
    ++valid;
    migration_laws(cert, f);
  }
  cert.counts["codes"] = codes.size();
  cert.counts["valid"] = valid;
  cert.wall_ms = clock.elapsed_ms();
  return cert;
}

Certificate check_weight_bounds(std::size_t n, Entry k) {
  Stopwatch clock;
  Certificate cert = start("weight-bounds", n, k);
  const auto upper = static_cast<std::int64_t>(n / 2);
  std::uint64_t valid = 0;
  for_each_code(n, k, {}, [&](const Code& f) {
    if (!is_valid(f)) return;
    ++valid;
    const std::int64_t w = weight(f);
    if (w < 1 || w > upper) {
      cert.fail("weight-bounds", "weight(" + f.to_string() + ") = " + std::to_string(w));
    }
  });
  cert.counts["valid"] = valid;
  cert.wall_ms = clock.elapsed_ms();
  return cert;
}

Certificate check_prime_bijection(std::size_t n, Entry k) {
  Stopwatch clock;
  Certificate cert = start("prime-bijection", n, k);
  const BijectionTable table = prime_bijection(n, k);
  const TableAudit audit = certify_table(table);
  const BigInt formula = count_necklaces(n, k);
  cert.counts["pairs"] = audit.pairs;
  cert.counts["codes"] = audit.expected_codes;
  cert.counts["necklaces"] = audit.expected_necklaces;
  cert.counts["tables_riwi:" + table.riwi] += 1;
  for (const auto& ce : audit.counterexamples) cert.fail(ce.property, ce.detail);
  // Counterexample lists are truncated; keep the exact failure count.
  cert.failures = std::max<std::uint64_t>(cert.failures, audit.failures);
  if (BigInt(audit.pairs) != formula) {
    cert.fail("size", cell(n, k) + ": " + std::to_string(audit.pairs) + " pairs but the formula gives " +
                          formula.str());
  }
  cert.wall_ms = clock.elapsed_ms();
  return cert;
}

Certificate check_count_identity(std::size_t n, Entry k) {
  Stopwatch clock;
  Certificate cert = start("count", n, k);
  const BigInt formula = count_necklaces(n, k);
  const std::uint64_t necklaces = enumerate_necklaces(n, k).size();
  std::uint64_t residue_zero = 0;
  for_each_code(n, k, {.residue = 0}, [&](const Code&) { ++residue_zero; });
  cert.counts["necklaces"] = necklaces;
  cert.counts["codes_ws0"] = residue_zero;
  if (formula <= std::numeric_limits<std::uint64_t>::max()) {
    cert.counts["formula"] = formula.convert_to<std::uint64_t>();
  } else {
    cert.notes["formula" + cell(n, k)] = formula.str();
  }

  if (BigInt(necklaces) != formula) {
    cert.fail("formula", cell(n, k) + ": formula " + formula.str() + " vs " + std::to_string(necklaces) +
                             " enumerated necklaces");
  }
  const bool equal = BigInt(residue_zero) == formula;
  if (n % 2 == 1) {
    if (!equal) {
      cert.fail("codes-ws0", cell(n, k) + ": |F_0| = " + std::to_string(residue_zero) + " vs formula " +
                                 formula.str());
    }
  } else {
    cert.notes["even_n_ws0_equals_formula" + cell(n, k)] = equal ? "true" : "false";
  }
  cert.wall_ms = clock.elapsed_ms();
  return cert;
}

Certificate check_riwi_slime(std::size_t n, Entry k) {
  Stopwatch clock;
  Certificate cert = start("riwi-slime", n, k);
  riwi_into(cert, verify_riwi(riwi_slime(n, k), n, k));
  cert.wall_ms = clock.elapsed_ms();
  return cert;
}

Certificate check_riwi_coprime(std::size_t n, Entry k) {
  Stopwatch clock;
  Certificate cert = start("riwi-coprime", n, k);
  const RiwiMap chi = riwi_coprime(n, k);
  riwi_into(cert, verify_riwi(chi, n, k));

  cert.wall_ms = clock.elapsed_ms();
  return cert;
}

Certificate check_sigma_agreement(std::size_t n, Entry k) {
  Stopwatch clock;
  Certificate cert = start("sigma-agreement", n, k);
  const BijectionTable by_rotation = build_sigma(n, k, riwi_coprime(n, k));
  const BijectionTable by_slime = build_sigma(n, k, riwi_slime(n, k));
  std::uint64_t differ = 0;
  for (std::size_t i = 0; i < by_rotation.pairs.size(); ++i) {
    if (by_rotation.pairs[i].necklace != by_slime.pairs[i].necklace) ++differ;
  }
  cert.counts["pairs"] = by_rotation.pairs.size();
  cert.counts["pairs_differing"] = differ;
  cert.wall_ms = clock.elapsed_ms();
  return cert;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"oddinv",     "migration",   "weight-bounds", "count",
                                              "prime-bijection", "riwi-slime", "riwi-coprime", "sigma-agreement"};
  return names;
}

std::vector<std::string> applicable_checks(std::size_t n, Entry k) {
  const auto nn = static_cast<std::int64_t>(n);
  const bool odd = n % 2 == 1;
  const bool prime = is_prime(nn);
  std::vector<std::string> out;
  if (odd) out.push_back("oddinv");
  out.push_back("migration");
  out.push_back("weight-bounds");
  out.push_back("count");
  if (prime) out.push_back("prime-bijection");
  if (prime && odd) out.push_back("riwi-slime");
  if (std::gcd(nn, k) == 1) out.push_back("riwi-coprime");
  if (prime && odd && std::gcd(nn, k) == 1) out.push_back("sigma-agreement");
  return out;
}

Certificate run_check(std::string_view name, std::size_t n, Entry k) {
  if (n == 0) throw DomainError("n must be positive");
  if (k < 0) throw DomainError("k must be nonnegative");
  if (name == "oddinv") return check_odd_invalidity(n, k);
  if (name == "migration") return check_migration_laws(n, k);
  if (name == "weight-bounds") return check_weight_bounds(n, k);
  if (name == "count") return check_count_identity(n, k);
  if (name == "prime-bijection") return check_prime_bijection(n, k);
  if (name == "riwi-slime") return check_riwi_slime(n, k);
  if (name == "riwi-coprime") return check_riwi_coprime(n, k);
  if (name == "sigma-agreement") return check_sigma_agreement(n, k);
  throw DomainError("unknown check '" + std::string(name) + "'");
}

std::vector<Entry> prime_envelope(const SweepConfig& cfg, std::size_t n) {
  std::vector<Entry> ks;
  const auto nn = static_cast<std::int64_t>(n);
  for (Entry k = 0; k <= cfg.k_cap; ++k) {
    if (binomial(nn + k - 1, nn - 1) > cfg.max_codes) break;
    ks.push_back(k);
  }
  return ks;
}

std::vector<Certificate> run_sweep(const SweepConfig& cfg, const std::function<void(const Certificate&)>& on_done) {
  std::vector<Certificate> out;
  auto emit = [&](Certificate c) {
    if (on_done) on_done(c);
    out.push_back(std::move(c));
  };

  for (std::size_t n = 1; n <= cfg.grid_n_max; ++n) {
    for (const std::string& name : check_names()) {
      Certificate merged;
      for (Entry k = 0; k <= cfg.grid_k_max; ++k) {
        const auto names = applicable_checks(n, k);
        if (std::find(names.begin(), names.end(), name) == names.end()) continue;
        absorb(merged, run_check(name, n, k));
      }
      if (!merged.check.empty()) emit(std::move(merged));
    }
  }

  static const char* const kPrimeChecks[] = {"weight-bounds", "count", "prime-bijection", "riwi-slime",
                                             "riwi-coprime"};
  for (std::size_t n : cfg.primes) {
    const std::vector<Entry> ks = prime_envelope(cfg, n);
    for (const char* name : kPrimeChecks) {
      Certificate merged;
      for (Entry k : ks) {
        const auto names = applicable_checks(n, k);
        if (std::find(names.begin(), names.end(), name) == names.end()) continue;
        absorb(merged, run_check(name, n, k));
      }
      if (!merged.check.empty()) emit(std::move(merged));
    }
  }
  return out;
}

}  // namespace neckslime
