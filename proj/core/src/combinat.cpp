#include "humplab/combinat.hpp"

#include <string>

#include "memo.hpp"

namespace humplab::combinat {
namespace {

void require_nonnegative(int n, const char* op) {
  if (n < 0) throw DomainError(std::string(op) + ": negative argument " + std::to_string(n));
}

detail::MemoSequence& factorial_memo() {
  static detail::MemoSequence memo([](std::span<const Nat> prev) {
    return prev.empty() ? Nat(1) : prev.back() * Nat(prev.size());
  });
  return memo;
}

detail::MemoSequence& catalan_memo() {
  static detail::MemoSequence memo([](std::span<const Nat> prev) {
    const int n = static_cast<int>(prev.size());
    return exact_div(binomial(2 * n, n), Nat(n + 1), "catalan");
  });
  return memo;
}

detail::MemoSequence& motzkin_memo() {
  static detail::MemoSequence memo([](std::span<const Nat> m) {
    const std::size_t n = m.size();
    if (n < 2) return Nat(1);
    Nat v = m[n - 1];
    for (std::size_t k = 2; k <= n; ++k) v += m[k - 2] * m[n - k];
    return v;
  });
  return memo;
}

}  // namespace

Nat factorial(int n) {
  require_nonnegative(n, "factorial");
  return factorial_memo().at(static_cast<std::size_t>(n));
}

Nat binomial(int n, int k) {
  require_nonnegative(n, "binomial");
  if (k < 0 || k > n) return Nat(0);
  if (k > n - k) k = n - k;
  // Multiplicative form; every intermediate quotient is itself a binomial.
  Nat::Rep r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return Nat(std::move(r));
}

Nat catalan(int n) {
  require_nonnegative(n, "catalan");
  return catalan_memo().at(static_cast<std::size_t>(n));
}

Nat motzkin(int n) {
  require_nonnegative(n, "motzkin");
  return motzkin_memo().at(static_cast<std::size_t>(n));
}

std::vector<Nat> catalan_table(int n) {
  require_nonnegative(n, "catalan_table");
  return catalan_memo().prefix(static_cast<std::size_t>(n));
}

std::vector<Nat> motzkin_table(int n) {
  require_nonnegative(n, "motzkin_table");
  return motzkin_memo().prefix(static_cast<std::size_t>(n));
}

}  // namespace humplab::combinat
