#include "neckslime/code.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "neckslime/error.hpp"

namespace neckslime {

namespace {

Entry checked_total(std::span<const Entry> entries) {
  if (entries.empty()) throw DomainError("code must have at least one entry");
  std::int64_t total = 0;
  for (Entry e : entries) {
    if (e < 0) throw DomainError("code entries must be nonnegative");
    total += e;
  }
  if (total > std::numeric_limits<Entry>::max()) throw DomainError("code sum overflows");
  return static_cast<Entry>(total);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Code::Code(std::span<const Entry> entries)
    : entries_(entries.begin(), entries.end()), total_(checked_total(entries)) {}

Code::Code(std::initializer_list<Entry> entries)
    : Code(std::span<const Entry>(entries.begin(), entries.size())) {}

Code::Code(Storage entries) : entries_(std::move(entries)) {
  total_ = checked_total({entries_.data(), entries_.size()});
}

Code Code::parse(std::string_view literal) {
  Storage out;
  std::string_view rest = literal;
  while (true) {
    auto comma = rest.find(',');
    std::string_view field = trim(rest.substr(0, comma));
    Entry value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw DomainError("bad code literal '" + std::string(literal) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return Code(std::move(out));
}

Entry Code::cyclic(std::int64_t j) const noexcept {
  const auto n = static_cast<std::int64_t>(entries_.size());
  j %= n;
  if (j < 0) j += n;
  return entries_[static_cast<std::size_t>(j)];
}

std::string Code::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(entries_[j]);
  }
  return out;
}

bool operator==(const Code& a, const Code& b) noexcept {
  return std::equal(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end());
}

std::strong_ordering operator<=>(const Code& a, const Code& b) noexcept {
  return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                b.entries_.begin(), b.entries_.end());
}

Code rotate(const Code& f, std::int64_t steps) {
  const auto n = static_cast<std::int64_t>(f.size());
  std::int64_t s = steps % n;
  if (s < 0) s += n;
  Code::Storage out(f.size());
  for (std::int64_t j = 0; j < n; ++j) {
    out[static_cast<std::size_t>(j)] = f[static_cast<std::size_t>((j + s) % n)];
  }
  return Code(std::move(out));
}

namespace {

std::int64_t weighted_sum_of(std::span<const Entry> e) {
  const auto n = static_cast<std::int64_t>(e.size());
  std::int64_t acc = 0;
  for (std::int64_t j = 1; j < n; ++j) {
    acc = (acc + j * (static_cast<std::int64_t>(e[static_cast<std::size_t>(j)]) % n)) % n;
  }
  return acc;
}

std::size_t period_of(std::span<const Entry> e) {
  const std::size_t n = e.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t j = d; j < n && repeats; ++j) repeats = e[j] == e[j - d];
    if (repeats) return d;
  }
  return n;
}

}  // namespace

std::int64_t weighted_sum(const Code& f) { return weighted_sum_of(f.entries()); }

std::size_t period(const Code& f) { return period_of(f.entries()); }

bool is_constant(const Code& f) {
  auto e = f.entries();
  return std::adjacent_find(e.begin(), e.end(), std::not_equal_to<>()) == e.end();
}

CodeEnumerator::CodeEnumerator(std::size_t n, Entry k, CodeFilter filter)
    : n_(n), k_(k), filter_(filter) {
  if (n == 0) throw DomainError("code length must be at least 1");
  if (k < 0) throw DomainError("code sum must be nonnegative");
  if (filter_.residue) {
    const auto m = static_cast<std::int64_t>(n);
    filter_.residue = ((*filter_.residue % m) + m) % m;
  }
  current_.assign(n, 0);
  current_.back() = k;
}

bool CodeEnumerator::advance() {
  // Rightmost nonzero entry p > 0: move one unit to p - 1 and park the rest at the end.
  std::size_t p = n_;
  for (std::size_t j = n_; j-- > 1;) {
    if (current_[j] != 0) {
      p = j;
      break;
    }
  }
  if (p == n_) return false;
  const Entry rest = current_[p] - 1;
  current_[p - 1] += 1;
  for (std::size_t j = p; j < n_; ++j) current_[j] = 0;
  current_[n_ - 1] = rest;
  return true;
}

bool CodeEnumerator::accepted() const {
  if (!filter_.residue && !filter_.full_period_only) return true;
  const std::span<const Entry> e(current_.data(), current_.size());
  if (filter_.residue && weighted_sum_of(e) != *filter_.residue) return false;
  if (filter_.full_period_only && period_of(e) != n_) return false;
  return true;
}

std::optional<Code> CodeEnumerator::next() {
  while (!done_) {
    if (started_) {
      if (!advance()) {
        done_ = true;
        break;
      }
    }
    started_ = true;
    if (accepted()) return Code(current_);
  }
  return std::nullopt;
}

CompositionIndex::CompositionIndex(std::size_t n, Entry k) : n_(n), k_(k) {
  if (n == 0) throw DomainError("code length must be at least 1");
  if (k < 0) throw DomainError("code sum must be nonnegative");
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
  table_.assign(static_cast<std::size_t>(k + 1) * n, 0);
  // C(a + p, p) = C(a + p - 1, p - 1) + C(a - 1 + p, p), saturating at kLimit.
  for (Entry a = 0; a <= k; ++a) {
    for (std::size_t p = 0; p < n; ++p) {
      std::uint64_t v = 1;
      if (a > 0 && p > 0) v = std::min(kLimit, stars_and_bars(a, p - 1) + stars_and_bars(a - 1, p));
      table_[static_cast<std::size_t>(a) * n + p] = v;
    }
  }
  size_ = stars_and_bars(k, n - 1);
  if (size_ >= kLimit) throw DomainError("too many codes to index");
}

std::uint64_t CompositionIndex::rank(const Code& f) const {
  // Codes sharing the prefix f[0..i) but with a smaller entry at i come first;
  // summing C(rest - v + p, p) over v < f[i] telescopes to two table lookups.
  std::uint64_t r = 0;
  Entry rest = k_;
  for (std::size_t i = 0; i + 1 < n_; ++i) {
    const std::size_t parts_after = n_ - i - 1;
    const Entry e = f[i];
    if (e > 0) {
      r += stars_and_bars(rest, parts_after) - stars_and_bars(rest - e, parts_after);
    }
    rest -= e;
  }
  return r;
}

Code CompositionIndex::unrank(std::uint64_t r) const {
  if (r >= size_) throw DomainError("rank " + std::to_string(r) + " is out of range");
  Code::Storage out(n_, 0);
  Entry rest = k_;
  for (std::size_t i = 0; i + 1 < n_; ++i) {
    const std::size_t parts_after = n_ - i - 1;
    // Largest e with C(rest+p, p) - C(rest-e+p, p) <= r.
    Entry e = 0;
    while (e < rest && stars_and_bars(rest, parts_after) - stars_and_bars(rest - e - 1, parts_after) <= r) ++e;
    r -= stars_and_bars(rest, parts_after) - stars_and_bars(rest - e, parts_after);
    out[i] = e;
    rest -= e;
  }
  out[n_ - 1] = rest;
  return Code(std::move(out));
}

std::vector<Code> enumerate_codes(std::size_t n, Entry k, CodeFilter filter) {
  std::vector<Code> out;
  for_each_code(n, k, filter, [&](const Code& f) { out.push_back(f); });
  return out;
}

}  // namespace neckslime
