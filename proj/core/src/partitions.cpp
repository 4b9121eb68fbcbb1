#include "humplab/partitions.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "humplab/combinat.hpp"
#include "humplab/errors.hpp"

namespace humplab::partitions {

using combinat::binomial;
using combinat::catalan;
using combinat::factorial;

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("Partition: parts must be positive: " + to_string());
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("Partition: parts must be weakly decreasing: " + to_string());
    }
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Reverse-lexicographic generation. Successor of a partition: find the
// rightmost part >= 2 that can be lowered by one while the freed cells still
// fit below it, then refill the tail greedily with the largest admissible
// parts. Greedy refilling uses the fewest rows, so it fails only when no
// completion exists (possible only for l = 0).
// ---------------------------------------------------------------------------
namespace {

int row_cap(const std::optional<HookConstraint>& hook, std::size_t pos, int previous) {
  if (hook && pos >= static_cast<std::size_t>(hook->k)) return std::min(previous, hook->l);
  return previous;
}

bool greedy_fill(const std::optional<HookConstraint>& hook, std::vector<int>& parts, int remainder) {
  while (remainder > 0) {
    const int previous = parts.empty() ? std::numeric_limits<int>::max() : parts.back();
    const int cap = row_cap(hook, parts.size(), previous);
    if (cap <= 0) return false;
    const int part = std::min(cap, remainder);
    parts.push_back(part);
    remainder -= part;
  }
  return true;
}

}  // namespace

PartitionRange::iterator::iterator(std::optional<HookConstraint> hook, int n) : hook_(hook) {
  if (greedy_fill(hook_, parts_, n)) current_.emplace(parts_);
}

PartitionRange::iterator& PartitionRange::iterator::operator++() {
  int tail = 0;
  for (std::size_t i = parts_.size(); i-- > 0;) {
    if (parts_[i] >= 2) {
      std::vector<int> trial(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(i));
      trial.push_back(parts_[i] - 1);
      if (greedy_fill(hook_, trial, tail + 1)) {
        parts_ = std::move(trial);
        current_.emplace(parts_);
        return *this;
      }
    }
    tail += parts_[i];
  }
  current_.reset();
  return *this;
}

PartitionRange::PartitionRange(std::optional<HookConstraint> hook, int n) : hook_(hook), n_(n) {
  if (n < 0) throw DomainError("partitions: negative n " + std::to_string(n));
  if (hook && (hook->k < 0 || hook->l < 0)) {
    throw DomainError("partitions: hook parameters must be nonnegative");
  }
}

PartitionRange generate_partitions(int n) { return PartitionRange(std::nullopt, n); }

PartitionRange generate_hook_partitions(HookConstraint hook, int n) { return PartitionRange(hook, n); }

// ---------------------------------------------------------------------------
// Hook length formula
// ---------------------------------------------------------------------------
namespace {

std::vector<int> conjugate(const Partition& shape) {
  std::vector<int> cols(static_cast<std::size_t>(shape.row(0)), 0);
  for (int r : shape.parts()) {
    for (int j = 0; j < r; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return cols;
}

}  // namespace

Nat hook_product(const Partition& shape) {
  const std::vector<int> cols = conjugate(shape);
  Nat::Rep product = 1;
  for (std::size_t i = 0; i < shape.length(); ++i) {
    const int r = shape.parts()[i];
    for (int j = 0; j < r; ++j) {
      const int arm = r - j - 1;
      const int leg = cols[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      product *= arm + leg + 1;
    }
  }
  return Nat(std::move(product));
}

Nat syt_count(const Partition& shape) {
  return exact_div(factorial(shape.weight()), hook_product(shape), "syt_count");
}

// ---------------------------------------------------------------------------
// Tableaux
// ---------------------------------------------------------------------------
Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  const auto fail = [this](const std::string& why) {
    throw DomainError("Tableau " + to_string() + " of shape " + shape_.to_string() + ": " + why);
  };
  if (rows_.size() != shape_.length()) fail("row count does not match shape");
  const int n = shape_.weight();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& row = rows_[i];
    if (static_cast<int>(row.size()) != shape_.parts()[i]) fail("row length does not match shape");
    for (std::size_t j = 0; j < row.size(); ++j) {
      const int v = row[j];
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) fail("entries must be 1..n, each once");
      seen[static_cast<std::size_t>(v)] = true;
      if (j > 0 && row[j - 1] >= v) fail("row not strictly increasing");
      if (i > 0 && rows_[i - 1][j] >= v) fail("column not strictly increasing");
    }
  }
}

std::string Tableau::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) os << '/';
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j > 0) os << ' ';
      os << rows_[i][j];
    }
  }
  return os.str();
}

namespace {

// Places entries 1..n in increasing order; entry v may go at the end of row r
// when that row still has room and the row above is strictly longer.
void place_entries(const Partition& shape, std::vector<std::vector<int>>& rows, int next,
                   std::vector<Tableau>& out) {
  if (next > shape.weight()) {
    out.emplace_back(shape, rows);
    return;
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const bool room = static_cast<int>(rows[r].size()) < shape.parts()[r];
    const bool supported = r == 0 || rows[r - 1].size() > rows[r].size();
    if (!room || !supported) continue;
    rows[r].push_back(next);
    place_entries(shape, rows, next + 1, out);
    rows[r].pop_back();
  }
}

}  // namespace

std::vector<Tableau> syt_enumerate(const Partition& shape, int cap) {
  if (shape.weight() > cap) {
    throw CapExceeded("syt_enumerate: shape " + shape.to_string() + " has weight " +
                      std::to_string(shape.weight()) + " above the cap " + std::to_string(cap) +
                      "; use syt_count instead");
  }
  std::vector<std::vector<int>> rows(shape.length());
  std::vector<Tableau> out;
  place_entries(shape, rows, 1, out);
  return out;
}

// ---------------------------------------------------------------------------
// Hook sums and closed forms
// ---------------------------------------------------------------------------
Nat hook_sum(HookConstraint hook, int n) {
  Nat total;
  for (const Partition& p : generate_hook_partitions(hook, n)) total += syt_count(p);
  return total;
}

Nat strip_sum_closed(int k, int n) {
  if (n < 0) throw DomainError("strip_sum_closed: negative n");
  switch (k) {
    case 2:
      return binomial(n, n / 2);
    case 3: {
      // (1/(j+1)) binom(2j, j) is C_j.
      Nat total;
      for (int j = 0; 2 * j <= n; ++j) total += binomial(n, 2 * j) * catalan(j);
      return total;
    }
    case 4:
      return catalan((n + 1) / 2) * catalan((n + 2) / 2);
    case 5: {
      Nat total;
      for (int j = 0; 2 * j <= n; ++j) {
        const Nat weight = exact_div(Nat(6) * catalan(j) * factorial(2 * j + 2),
                                     factorial(j + 2) * factorial(j + 3), "S(5,0) term");
        total += binomial(n, 2 * j) * weight;
      }
      return total;
    }
    default:
      throw DomainError("strip_sum_closed: k must be in 2..5, got " + std::to_string(k));
  }
}

Nat s11_closed(int n) {
  if (n < 1) throw DomainError("s11_closed: requires n >= 1, got " + std::to_string(n));
  return pow2(static_cast<unsigned>(n - 1));
}

Nat s21_closed(int n) {
  if (n < 2) {
    throw DomainError("s21_closed: the closed form holds for n >= 2 only, got " + std::to_string(n));
  }
  Nat bracket;
  for (int r = 0; r <= n - 1; ++r) bracket += binomial(n - r, (n - r) / 2) * binomial(n, r);
  const Nat n_fact = factorial(n);
  for (int k = 1; k <= n / 2 - 1; ++k) {
    const Nat multinomial =
        exact_div(n_fact, factorial(k) * factorial(k + 1) * factorial(n - 2 * k - 2), "S(2,1) term");
    bracket += exact_div(multinomial, Nat((n - k - 1) * (n - k)), "S(2,1) term");
  }
  return exact_div(bracket, Nat(4), "S(2,1) bracket") + Nat(1);
}

}  // namespace humplab::partitions
