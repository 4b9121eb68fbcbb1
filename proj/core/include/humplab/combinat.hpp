#pragma once

#include <vector>

#include "humplab/nat.hpp"

// Exact combinatorial primitives. Sizes are plain ints; a negative size is a
// DomainError. Catalan, Motzkin and factorial values are memoized behind a
// mutex, so every function here is safe to call from several threads.
namespace humplab::combinat {

Nat factorial(int n);

/// C(n, k); zero when k < 0 or k > n. Negative n is a DomainError.
Nat binomial(int n, int k);

/// C_n = binom(2n, n) / (n + 1).
Nat catalan(int n);

/// M_n via the first-return recurrence
/// M_n = M_{n-1} + sum_{k=2..n} M_{k-2} M_{n-k}, M_0 = M_1 = 1.
Nat motzkin(int n);

/// Values for 0..n inclusive.
std::vector<Nat> catalan_table(int n);
std::vector<Nat> motzkin_table(int n);

}  // namespace humplab::combinat
