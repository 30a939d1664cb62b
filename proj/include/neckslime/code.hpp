#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace neckslime {

// Entries and sums are bounded by k, so 32 bits suffice for any code we can enumerate.
using Entry = std::int32_t;

// A cyclic sequence of n >= 1 nonnegative integers summing to k.
// Position j holds the count at cyclic position j; indices are taken mod n.
class Code {
 public:
  using Storage = boost::container::small_vector<Entry, 12>;

  explicit Code(std::span<const Entry> entries);
  Code(std::initializer_list<Entry> entries);
  explicit Code(Storage entries);

  // Parses "3,0,0". Whitespace around entries is ignored.
  static Code parse(std::string_view literal);

  std::size_t size() const noexcept { return entries_.size(); }
  Entry total() const noexcept { return total_; }

  Entry operator[](std::size_t j) const noexcept { return entries_[j]; }
  Entry cyclic(std::int64_t j) const noexcept;

  std::span<const Entry> entries() const noexcept { return {entries_.data(), entries_.size()}; }
  std::vector<Entry> to_vector() const { return {entries_.begin(), entries_.end()}; }

  // Comma-separated literal, the inverse of parse().
  std::string to_string() const;

  friend bool operator==(const Code& a, const Code& b) noexcept;
  // Lexicographic on the entry arrays.
  friend std::strong_ordering operator<=>(const Code& a, const Code& b) noexcept;

 private:
  Storage entries_;
  Entry total_ = 0;
};

// c^steps: entries shifted left by steps (mod n). rotate(f, 1) is c(f).
Code rotate(const Code& f, std::int64_t steps);

// Sum over j of j * f[j], reduced into {0, ..., n-1}.
std::int64_t weighted_sum(const Code& f);

// Smallest divisor d of n with f[j] == f[j + d] for all j.
std::size_t period(const Code& f);

bool is_constant(const Code& f);

struct CodeFilter {
  std::optional<std::int64_t> residue;  // keep only weighted_sum == residue
  bool full_period_only = false;        // keep only period == n
};

// Streams the compositions of k into n nonnegative parts in lexicographic
// order, starting at (0, ..., 0, k) and ending at (k, 0, ..., 0).
class CodeEnumerator {
 public:
  CodeEnumerator(std::size_t n, Entry k, CodeFilter filter = {});

  // Next code passing the filter, or nullopt when exhausted.
  std::optional<Code> next();

 private:
  bool advance();
  bool accepted() const;

  std::size_t n_;
  Entry k_;
  CodeFilter filter_;
  Code::Storage current_;
  bool started_ = false;
  bool done_ = false;
};

// Position of a code in the lexicographic stream of all (n, k)-codes, computed
// arithmetically. Throws DomainError if C(n+k-1, n-1) does not fit in 63 bits.
class CompositionIndex {
 public:
  CompositionIndex(std::size_t n, Entry k);

  std::uint64_t size() const noexcept { return size_; }
  // Requires f to be an (n, k)-code.
  std::uint64_t rank(const Code& f) const;
  // Inverse of rank(); requires r < size().
  Code unrank(std::uint64_t r) const;

 private:
  // C(a + p, p) for 0 <= a <= k, 0 <= p < n, row-major in a.
  std::uint64_t stars_and_bars(Entry a, std::size_t p) const {
    return table_[static_cast<std::size_t>(a) * n_ + p];
  }

  std::size_t n_;
  Entry k_;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> table_;
};

std::vector<Code> enumerate_codes(std::size_t n, Entry k, CodeFilter filter = {});

// Visits every accepted code without materializing the whole list.
template <class Visitor>
void for_each_code(std::size_t n, Entry k, CodeFilter filter, Visitor&& visit) {
  CodeEnumerator it(n, k, filter);
  while (auto f = it.next()) visit(*f);
}

}  // namespace neckslime
