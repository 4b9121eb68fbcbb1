#include "humplab/formulas.hpp"

#include <algorithm>
#include <string>

#include "humplab/combinat.hpp"
#include "humplab/errors.hpp"
#include "humplab/partitions.hpp"
#include "memo.hpp"

namespace humplab::formulas {

using combinat::binomial;
using combinat::catalan;
using combinat::motzkin;

namespace {

void require_at_least(int n, int lo, const char* op) {
  if (n < lo) {
    throw DomainError(std::string(op) + ": requires n >= " + std::to_string(lo) + ", got " + std::to_string(n));
  }
}

// sum_{j >= from} binom(n, j) binom(n-j, j); terms vanish once 2j > n.
Nat trinomial_sum(int n, int from) {
  Nat total;
  for (int j = from; 2 * j <= n; ++j) total += binomial(n, j) * binomial(n - j, j);
  return total;
}

detail::MemoSequence& hc_memo() {
  static detail::MemoSequence memo([](std::span<const Nat> hc) {
    const int n = static_cast<int>(hc.size());
    if (n < 2) return Nat(1);
    const auto c = combinat::catalan_table(n);
    Nat v = hc[static_cast<std::size_t>(n - 1)];
    for (int j = 1; j <= n - 1; ++j) {
      v += hc[static_cast<std::size_t>(j - 1)] * c[static_cast<std::size_t>(n - j)];
      v += c[static_cast<std::size_t>(j - 1)] * hc[static_cast<std::size_t>(n - j)];
    }
    return v;
  });
  return memo;
}

detail::MemoSequence& hm_memo() {
  static detail::MemoSequence memo([](std::span<const Nat> hm) {
    const int n = static_cast<int>(hm.size());
    if (n < 2) return Nat(0);
    const auto m = combinat::motzkin_table(n);
    Nat v = hm[static_cast<std::size_t>(n - 1)];
    for (int k = 2; k <= n; ++k) {
      // An arch U M' D has the humps of M', plus one when M' is all flats.
      v += (Nat(1) + hm[static_cast<std::size_t>(k - 2)]) * m[static_cast<std::size_t>(n - k)];
      v += m[static_cast<std::size_t>(k - 2)] * hm[static_cast<std::size_t>(n - k)];
    }
    return v;
  });
  return memo;
}

detail::MemoSequence& sm_memo() {
  static detail::MemoSequence memo([](std::span<const Nat> sm) {
    const int n = static_cast<int>(sm.size());
    if (n < 2) return Nat(1);
    const auto m = combinat::motzkin_table(n);
    Nat arches;
    for (int k = 2; k <= n; ++k) arches += m[static_cast<std::size_t>(k - 2)] * sm[static_cast<std::size_t>(n - k)];
    return sm[static_cast<std::size_t>(n - 1)] + Nat(2) * arches;
  });
  return memo;
}

}  // namespace

Nat hc_closed(int n) {
  require_at_least(n, 1, "hc_closed");
  return binomial(2 * n - 1, n);
}

Nat hc_recurrence(int n) {
  require_at_least(n, 0, "hc_recurrence");
  return hc_memo().at(static_cast<std::size_t>(n));
}

Nat hm_closed(int n) {
  require_at_least(n, 0, "hm_closed");
  return exact_half(trinomial_sum(n, 1), "hm_closed");
}

Nat hm_recurrence(int n) {
  require_at_least(n, 0, "hm_recurrence");
  return hm_memo().at(static_cast<std::size_t>(n));
}

Nat sd_closed(int n) {
  require_at_least(n, 1, "sd_closed");
  return binomial(2 * n, n);
}

Nat sm_recurrence(int n) {
  require_at_least(n, 0, "sm_recurrence");
  return sm_memo().at(static_cast<std::size_t>(n));
}

Nat sm_closed(int n) {
  require_at_least(n, 0, "sm_closed");
  return trinomial_sum(n, 0);
}

Nat hs40(int n) {
  require_at_least(n, 1, "hs40");
  const int a = (n + 1) / 2;
  const int b = (n + 2) / 2;
  return hc_closed(a) * catalan(b) + catalan(a) * hc_closed(b);
}

Nat hs40_closed(int n) {
  require_at_least(n, 1, "hs40_closed");
  return exact_half(Nat(n + 3) * partitions::strip_sum_closed(4, n), "hs40_closed");
}

// ---------------------------------------------------------------------------
// Sequence dispatch
// ---------------------------------------------------------------------------
std::string_view sequence_name(Sequence s) noexcept {
  switch (s) {
    case Sequence::HC: return "HC";
    case Sequence::HM: return "HM";
    case Sequence::SD: return "SD";
    case Sequence::SM: return "SM";
    case Sequence::HS40: return "HS40";
    case Sequence::B: return "B";
  }
  return "?";
}

std::optional<Sequence> parse_sequence(std::string_view name) noexcept {
  for (Sequence s : {Sequence::HC, Sequence::HM, Sequence::SD, Sequence::SM, Sequence::HS40, Sequence::B}) {
    if (sequence_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view route_name(Route r) noexcept {
  switch (r) {
    case Route::Closed: return "closed";
    case Route::Recurrence: return "rec";
    case Route::Enumeration: return "enum";
    case Route::Product: return "product";
  }
  return "?";
}

std::optional<Route> parse_route(std::string_view name) noexcept {
  for (Route r : {Route::Closed, Route::Recurrence, Route::Enumeration, Route::Product}) {
    if (route_name(r) == name) return r;
  }
  return std::nullopt;
}

std::vector<Route> routes_for(Sequence s) {
  switch (s) {
    case Sequence::HC:
    case Sequence::HM:
    case Sequence::SM: return {Route::Closed, Route::Recurrence, Route::Enumeration};
    case Sequence::SD: return {Route::Closed, Route::Enumeration};
    case Sequence::HS40: return {Route::Closed, Route::Product, Route::Enumeration};
    case Sequence::B: return {Route::Closed, Route::Recurrence};
  }
  return {};
}

bool has_route(SequenceSpec spec) noexcept {
  const auto routes = routes_for(spec.name);
  return std::find(routes.begin(), routes.end(), spec.route) != routes.end();
}

int first_index(SequenceSpec spec) noexcept {
  switch (spec.name) {
    case Sequence::HC:
    case Sequence::SD:
    case Sequence::HS40: return 1;
    case Sequence::HM:
    case Sequence::SM:
    case Sequence::B: return 0;
  }
  return 0;
}

Nat evaluate(SequenceSpec spec, int n, const paths::EnumerationCaps& caps) {
  using paths::FamilyKind;
  if (!has_route(spec)) {
    throw DomainError("sequence " + std::string(sequence_name(spec.name)) + " has no route '" +
                      std::string(route_name(spec.route)) + "'");
  }
  require_at_least(n, first_index(spec), sequence_name(spec.name).data());
  switch (spec.name) {
    case Sequence::HC:
      if (spec.route == Route::Closed) return hc_closed(n);
      if (spec.route == Route::Recurrence) return hc_recurrence(n);
      return paths::total_humps({FamilyKind::Dyck, n}, caps);
    case Sequence::HM:
      if (spec.route == Route::Closed) return hm_closed(n);
      if (spec.route == Route::Recurrence) return hm_recurrence(n);
      return paths::total_humps({FamilyKind::Motzkin, n}, caps);
    case Sequence::SD:
      if (spec.route == Route::Closed) return sd_closed(n);
      return paths::count_enumerated({FamilyKind::SuperDyck, n}, caps);
    case Sequence::SM:
      if (spec.route == Route::Closed) return sm_closed(n);
      if (spec.route == Route::Recurrence) return sm_recurrence(n);
      return paths::count_enumerated({FamilyKind::SuperMotzkin, n}, caps);
    case Sequence::HS40:
      if (spec.route == Route::Closed) return hs40_closed(n);
      if (spec.route == Route::Product) return hs40(n);
      return paths::total_humps({FamilyKind::DoubleDyck, n}, caps);
    case Sequence::B:
      if (spec.route == Route::Closed) return hm_closed(n);
      return hm_recurrence(n);
  }
  throw DomainError("unknown sequence");
}

}  // namespace humplab::formulas
