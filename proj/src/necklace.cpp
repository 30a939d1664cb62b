#include "neckslime/necklace.hpp"

#include <algorithm>
#include <numeric>

#include "neckslime/error.hpp"

namespace neckslime {

Necklace::Necklace(const Code& any_rotation)
    : canonical_(rotate(any_rotation, static_cast<std::int64_t>(least_rotation(any_rotation.entries())))) {}

BeadWord::BeadWord(std::string word) : word_(std::move(word)) {
  for (char c : word_) {
    if (c != 'B' && c != 'W') throw DomainError("bead word may only contain B and W: '" + word_ + "'");
  }
  if (black_count() == 0) throw DomainError("bead word needs at least one B");
}

std::size_t BeadWord::black_count() const noexcept {
  return static_cast<std::size_t>(std::count(word_.begin(), word_.end(), 'B'));
}

std::size_t least_rotation(std::span<const Entry> s) {
  const std::size_t n = s.size();
  if (n <= 1) return 0;
  // Failure function over the doubled string.
  boost::container::small_vector<std::ptrdiff_t, 32> fail(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const Entry sj = s[j % n];
    std::ptrdiff_t i = fail[j - k - 1];
    while (i != -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j - static_cast<std::size_t>(i) - 1;
      i = fail[static_cast<std::size_t>(i)];
    }
    if (sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {  // i == -1
      if (sj < s[k % n]) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k % n;
}

Necklace canonicalize(const Code& f) { return Necklace(f); }

BeadWord code_to_word(const Code& f) {
  std::string out;
  out.reserve(f.size() + static_cast<std::size_t>(f.total()));
  for (Entry e : f.entries()) {
    out += 'B';
    out.append(static_cast<std::size_t>(e), 'W');
  }
  return BeadWord(std::move(out));
}

BeadWord parse_word(std::string_view text) { return BeadWord(std::string(text)); }

Code word_to_code(const BeadWord& w) {
  const std::string& s = w.str();
  const std::size_t first = s.find('B');
  const std::size_t len = s.size();
  Code::Storage gaps;
  for (std::size_t step = 0; step < len; ++step) {
    const char c = s[(first + step) % len];
    if (c == 'B') {
      gaps.push_back(0);
    } else {
      ++gaps.back();
    }
  }
  return Code(std::move(gaps));
}

std::vector<Necklace> enumerate_necklaces(std::size_t n, Entry k, bool full_period_only) {
  std::vector<Necklace> out;
  for_each_code(n, k, {}, [&](const Code& f) {
    Necklace neck(f);
    if (neck.canonical() != f) return;
    if (full_period_only && period(f) != n) return;
    out.push_back(std::move(neck));
  });
  return out;
}

std::int64_t euler_phi(std::int64_t m) {
  if (m < 1) throw DomainError("totient needs m >= 1");
  std::int64_t result = m;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) throw DomainError("binomial needs 0 <= b <= a");
  b = std::min(b, a - b);
  BigInt acc = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    acc *= a - b + i;
    acc /= i;
  }
  return acc;
}

BigInt count_necklaces(std::size_t n, Entry k) {
  if (n == 0) throw DomainError("necklace needs at least one black bead");
  if (k < 0) throw DomainError("white bead count must be nonnegative");
  const auto nn = static_cast<std::int64_t>(n);
  const std::int64_t total = nn + k;
  const std::int64_t g = std::gcd(nn, k);
  BigInt sum = 0;
  for (std::int64_t m = 1; m <= g; ++m) {
    if (g % m != 0) continue;
    sum += euler_phi(m) * binomial(total / m, nn / m);
  }
  return sum / total;
}

}  // namespace neckslime
