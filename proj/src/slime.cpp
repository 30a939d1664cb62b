#include "neckslime/slime.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/container/small_vector.hpp>

#include "neckslime/error.hpp"

namespace neckslime {

namespace {

enum class Direction { kForward, kBackward };

struct SlimeScan {
  Entry m = 0;
  bool valid = false;
  std::int64_t weight = 0;
  boost::container::small_vector<CyclicInterval, 8> slimes;  // cyclic order from the first cutoff
};

SlimeScan scan_slimes(const Code& f) {
  const std::size_t n = f.size();
  SlimeScan out;
  auto pair_sum = [&](std::size_t j) { return f[j] + f[j + 1 == n ? 0 : j + 1]; };
  const Entry first = pair_sum(0);
  out.m = first;
  bool all_equal = true;
  for (std::size_t j = 1; j < n; ++j) {
    const Entry s = pair_sum(j);
    all_equal = all_equal && s == first;
    out.m = std::max(out.m, s);
  }
  if (all_equal) return out;
  out.valid = true;

  std::size_t cutoff = 0;
  while (pair_sum(cutoff) == out.m) ++cutoff;

  // Walk the n pairs after the cutoff; each run of r pairs equal to m is a
  // slime of r + 1 positions.
  std::size_t run_start = 0;
  std::size_t run_pairs = 0;
  std::size_t j = cutoff;
  for (std::size_t step = 1; step <= n; ++step) {
    if (++j == n) j = 0;
    if (pair_sum(j) == out.m) {
      if (run_pairs == 0) run_start = j;
      ++run_pairs;
    } else if (run_pairs > 0) {
      out.slimes.push_back({run_start, run_pairs + 1});
      out.weight += static_cast<std::int64_t>((run_pairs + 1) / 2);
      run_pairs = 0;
    }
  }
  return out;
}

void require_nonnegative(Entry value, const Code& f) {
  if (value < 0) {
    throw std::logic_error("slime move produced a negative entry on " + f.to_string());
  }
}

Code apply_moves(const Code& f, const SlimeScan& scan, Direction dir) {
  const std::size_t n = f.size();
  Code::Storage out(f.entries().begin(), f.entries().end());
  for (const CyclicInterval& slime : scan.slimes) {
    const std::size_t start = slime.start;
    const std::size_t length = slime.length;
    const Entry a = f[start];
    const Entry b = f[start + 1 == n ? 0 : start + 1];
    const bool odd = length % 2 == 1;
    std::size_t pos = start;
    for (std::size_t i = 0; i < length; ++i, pos = pos + 1 == n ? 0 : pos + 1) {
      const bool on_a = i % 2 == 0;
      Entry value;
      if (dir == Direction::kForward) {
        if (odd) {
          // a, b-1, a+1, b-1, ..., a+1: the leftmost entry is cut off.
          value = i == 0 ? a : (on_a ? a + 1 : b - 1);
        } else {
          value = on_a ? a - 1 : b + 1;
        }
      } else {
        if (odd) {
          // a+1, b-1, ..., a+1, b-1, a: the rightmost entry is cut off.
          value = i + 1 == length ? a : (on_a ? a + 1 : b - 1);
        } else {
          value = on_a ? a + 1 : b - 1;
        }
      }
      require_nonnegative(value, f);
      out[pos] = value;
    }
  }
  return Code(std::move(out));
}

SlimeScan valid_scan(const Code& f, const char* what) {
  SlimeScan scan = scan_slimes(f);
  if (!scan.valid) throw InvalidCodeError(std::string(what) + " is undefined on invalid code " + f.to_string());
  return scan;
}

std::int64_t migration_count(const Code& f, std::int64_t w) {
  const auto n = static_cast<std::int64_t>(f.size());
  try {
    return inverse_mod(w, n);
  } catch (const NotCoprimeError&) {
    throw NotCoprimeError("weight " + std::to_string(w) + " of " + f.to_string() +
                          " is not coprime with n = " + std::to_string(n));
  }
}

Code iterate(const Code& f, Direction dir) {
  const SlimeScan scan = valid_scan(f, "phi");
  const std::int64_t steps = migration_count(f, scan.weight);
  if (steps == 0) return f;
  Code g = apply_moves(f, scan, dir);
  for (std::int64_t s = 1; s < steps; ++s) g = apply_moves(g, valid_scan(g, "migration"), dir);
  return g;
}

}  // namespace

Entry max_adjacent_sum(const Code& f) {
  const std::size_t n = f.size();
  Entry m = f[0] + f[n == 1 ? 0 : 1];
  for (std::size_t j = 1; j < n; ++j) m = std::max(m, f[j] + f[(j + 1) % n]);
  return m;
}

SlimeDecomposition decompose(const Code& f) {
  const SlimeScan scan = scan_slimes(f);
  SlimeDecomposition d;
  d.max_pair_sum = scan.m;
  d.valid = scan.valid;
  if (d.valid) {
    d.slimes.assign(scan.slimes.begin(), scan.slimes.end());
    std::sort(d.slimes.begin(), d.slimes.end(),
              [](const CyclicInterval& x, const CyclicInterval& y) { return x.start < y.start; });
    d.weight = scan.weight;
  }
  return d;
}

bool is_valid(const Code& f) {
  const std::size_t n = f.size();
  const Entry first = f[0] + f[n == 1 ? 0 : 1];
  for (std::size_t j = 1; j < n; ++j) {
    if (f[j] + f[(j + 1) % n] != first) return true;
  }
  return false;
}

std::int64_t weight(const Code& f) { return valid_scan(f, "weight").weight; }

Code migrate_forward(const Code& f) { return apply_moves(f, valid_scan(f, "migration"), Direction::kForward); }

Code migrate_backward(const Code& f) { return apply_moves(f, valid_scan(f, "migration"), Direction::kBackward); }

std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  if (n <= 0) throw DomainError("modulus must be positive");
  std::int64_t r0 = n, r1 = ((a % n) + n) % n;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0 != 1) {
    // n == 1 leaves r0 == 1 with a == 0; anything else shares a factor.
    throw NotCoprimeError(std::to_string(a) + " has no inverse modulo " + std::to_string(n));
  }
  return ((t0 % n) + n) % n;
}

Code phi(const Code& f) { return iterate(f, Direction::kForward); }

Code phi_inverse(const Code& f) { return iterate(f, Direction::kBackward); }

}  // namespace neckslime
