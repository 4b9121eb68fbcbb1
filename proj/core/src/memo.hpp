#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "humplab/nat.hpp"

namespace humplab::detail {

// Thread-safe, grow-only memo for an integer sequence a_0, a_1, ... where
// a_n is computed from the already known prefix a_0..a_{n-1}.
class MemoSequence {
 public:
  using Next = std::function<Nat(std::span<const Nat> prefix)>;

  explicit MemoSequence(Next next) : next_(std::move(next)) {}

  Nat at(std::size_t n) {
    std::lock_guard lock(mutex_);
    grow(n);
    return values_[n];
  }

  std::vector<Nat> prefix(std::size_t n) {
    std::lock_guard lock(mutex_);
    grow(n);
    return {values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(n + 1)};
  }

 private:
  void grow(std::size_t n) {
    while (values_.size() <= n) {
      Nat v = next_(std::span<const Nat>(values_));
      values_.push_back(std::move(v));
    }
  }

  Next next_;
  std::mutex mutex_;
  std::vector<Nat> values_;
};

}  // namespace humplab::detail
