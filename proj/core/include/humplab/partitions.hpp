#pragma once

#include <cstddef>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "humplab/nat.hpp"

namespace humplab::partitions {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Row i (0-based), or 0 past the last row.
  int row(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  /// "(3,2,1)"; the empty partition prints as "()".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// The (k, l)-hook: partitions with row k+1 of length at most l.
struct HookConstraint {
  int k = 0;
  int l = 0;

  bool admits(const Partition& p) const noexcept {
    return p.row(static_cast<std::size_t>(k)) <= l;
  }
};

/// Regenerable range over the partitions of n lying in a hook, in
/// reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
class PartitionRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Partition*;
    using reference = const Partition&;

    iterator() = default;

    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) { return !it.current_; }

   private:
    friend class PartitionRange;
    iterator(std::optional<HookConstraint> hook, int n);

    std::optional<HookConstraint> hook_;
    std::vector<int> parts_;
    std::optional<Partition> current_;
  };

  PartitionRange(std::optional<HookConstraint> hook, int n);

  iterator begin() const { return iterator(hook_, n_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  std::optional<HookConstraint> hook_;
  int n_;
};

PartitionRange generate_partitions(int n);
PartitionRange generate_hook_partitions(HookConstraint hook, int n);

/// f^lambda by the hook length formula.
Nat syt_count(const Partition& shape);

/// Product of all hook lengths of the shape.
Nat hook_product(const Partition& shape);

/// A standard Young tableau; entries 1..n, rows and columns strictly
/// increasing.
class Tableau {
 public:
  /// Throws DomainError unless rows match the shape and the filling is standard.
  Tableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

  /// Rows separated by '/', entries by ' ': "1 2/3".
  std::string to_string() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

inline constexpr int kDefaultSytEnumerationCap = 10;

/// All SYT of the shape. Refuses (CapExceeded) shapes heavier than `cap`.
/// Tableaux come in lexicographic order of their row-index words.
std::vector<Tableau> syt_enumerate(const Partition& shape, int cap = kDefaultSytEnumerationCap);

/// S(k, l; n): sum of f^lambda over the hook partitions of n.
Nat hook_sum(HookConstraint hook, int n);

/// Known closed forms for S(k, 0; n), k in 2..5.
Nat strip_sum_closed(int k, int n);

/// S(1, 1; n) = 2^{n-1}, n >= 1.
Nat s11_closed(int n);

/// Closed form for S(2, 1; n); defined for n >= 2 (the bracketed sum is not
/// divisible by 4 at n = 1).
Nat s21_closed(int n);

}  // namespace humplab::partitions
