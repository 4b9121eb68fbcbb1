#include "humplab/verify.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <string>

#include <json.hpp>

#include "humplab/combinat.hpp"
#include "humplab/formulas.hpp"
#include "humplab/partitions.hpp"
#include "humplab/paths.hpp"
#include "memo.hpp"

namespace humplab::verify {
namespace {

using combinat::binomial;
using combinat::catalan;
using combinat::factorial;
using combinat::motzkin;
using partitions::HookConstraint;
using partitions::Partition;
using paths::FamilyKind;

// Caps for identities whose sides enumerate partitions. Strips with k <= 5
// and the (2,1)-hook stay polynomial in n; the full partition sum does not.
constexpr int kHookCap = 120;
constexpr int kStripCap = 60;
constexpr int kAllPartitionsCap = 40;

const paths::EnumerationCaps kEnumCaps{};

// binom(2k-1, k) extended by the recurrence convention HC_0 = 1.
Nat hc_with_seed(int k) {
  static detail::MemoSequence memo([](std::span<const Nat> prev) {
    const int k = static_cast<int>(prev.size());
    return k == 0 ? Nat(1) : binomial(2 * k - 1, k);
  });
  return memo.at(static_cast<std::size_t>(k));
}

std::vector<Nat> b_closed_table(int n) {
  static detail::MemoSequence memo(
      [](std::span<const Nat> prev) { return formulas::hm_closed(static_cast<int>(prev.size())); });
  return memo.prefix(static_cast<std::size_t>(n));
}

Nat trinomial_sum(int n, int from) {
  Nat total;
  for (int j = from; 2 * j <= n; ++j) total += binomial(n, j) * binomial(n - j, j);
  return total;
}

Nat dyck_humps_31_rhs(int n) {
  Nat v = hc_with_seed(n - 1);
  for (int j = 1; j <= n - 1; ++j) {
    v += hc_with_seed(j - 1) * catalan(n - j);
    v += catalan(j - 1) * hc_with_seed(n - j);
  }
  return v;
}

Nat b_recurrence_rhs(int n) {
  const auto b = b_closed_table(n);
  const auto m = combinat::motzkin_table(n);
  const auto at = [](const std::vector<Nat>& v, int i) -> const Nat& { return v[static_cast<std::size_t>(i)]; };
  Nat v = at(b, n - 1);
  for (int k = 2; k <= n; ++k) {
    v += (Nat(1) + at(b, k - 2)) * at(m, n - k);
    v += at(m, k - 2) * at(b, n - k);
  }
  return v;
}

Nat motzkin_path_222_rhs(int n) {
  Nat v;
  for (int r = 0; r <= n - 1; ++r) v += binomial(n - r, (n - r) / 2) * binomial(n, r);
  const Nat n_fact = factorial(n);
  for (int k = 1; k <= n / 2 - 1; ++k) {
    const Nat denominator =
        factorial(k) * factorial(k + 1) * factorial(n - 2 * k - 2) * Nat(n - k - 1) * Nat(n - k);
    v += exact_div(n_fact, denominator, "motzkin-path-222 term");
  }
  return v;
}

Nat catalan_convolution(int n) {
  Nat v;
  for (int j = 1; j <= n; ++j) v += catalan(j - 1) * catalan(n - j);
  return v;
}

Partition hook_shape(int n) {
  std::vector<int> parts(static_cast<std::size_t>(n) + 1, 1);
  parts[0] = n;
  return Partition(std::move(parts));
}

Nat sum_of_squares_of_syt(int n) {
  Nat total;
  for (const Partition& p : partitions::generate_partitions(n)) {
    const Nat f = partitions::syt_count(p);
    total += f * f;
  }
  return total;
}

constexpr std::array<std::uint64_t, 12> kListedHs40{2,     5,     12,    35,     100,    315,
                                                          980,   3234,  10584, 36036,  121968, 424710};

std::vector<Identity> build_registry() {
  using formulas::hc_closed;
  using formulas::hm_closed;
  std::vector<Identity> r;
  const auto add = [&r](std::string id, std::string description, std::string routes, RouteKind kind,
                        int valid_from, int max_n, std::function<Nat(int)> lhs, std::function<Nat(int)> rhs) {
    r.push_back(Identity{std::move(id), std::move(description), std::move(routes), kind, valid_from, max_n,
                         std::move(lhs), std::move(rhs)});
  };

  // --- Dyck humps ---------------------------------------------------------
  add("dyck-humps-31",
      "binom(2n-1,n) = binom(2n-3,n-1) + sum_{j=1}^{n-1} (binom(2j-3,j-1) C_{n-j} + C_{j-1} binom(2n-2j-1,n-j)), "
      "with binom(-1,0) = 1",
      "binomial | binomial, catalan", RouteKind::Formula, 1, kFormulaCap,
      [](int n) { return binomial(2 * n - 1, n); }, dyck_humps_31_rhs);
  add("hc-closed-equals-recurrence", "HC_n = binom(2n-1,n) agrees with the first-return recurrence",
      "formulas.hc_closed | formulas.hc_recurrence", RouteKind::Formula, 1, kFormulaCap, hc_closed,
      formulas::hc_recurrence);
  add("hc-equals-dyck-humps", "total humps over Dyck paths of length 2n equals binom(2n-1,n)",
      "paths.total_humps(dyck) | formulas.hc_closed", RouteKind::Enumeration, 1, kEnumCaps.dyck,
      [](int n) { return paths::total_humps({FamilyKind::Dyck, n}); }, hc_closed);
  add("hc-equals-syt-hook", "HC_n = f^(n,1^n)", "formulas.hc_closed | partitions.syt_count", RouteKind::Formula,
      1, kFormulaCap, hc_closed, [](int n) { return partitions::syt_count(hook_shape(n)); });
  add("half-catalan", "2 binom(2n-1,n) = (n+1) C_n", "binomial | catalan", RouteKind::Formula, 1, kFormulaCap,
      [](int n) { return Nat(2) * binomial(2 * n - 1, n); }, [](int n) { return Nat(n + 1) * catalan(n); });
  add("catalan-convolution", "C_n = sum_{j=1}^{n} C_{j-1} C_{n-j}", "catalan | catalan", RouteKind::Formula, 1,
      kFormulaCap, catalan, catalan_convolution);
  add("catalan-equals-dyck-count", "number of Dyck paths of length 2n equals C_n",
      "paths.count_enumerated(dyck) | catalan", RouteKind::Enumeration, 0, kEnumCaps.dyck,
      [](int n) { return paths::count_enumerated({FamilyKind::Dyck, n}); }, catalan);
  add("sd-equals-2hc", "SD_n = binom(2n,n) = 2 HC_n", "formulas.sd_closed | formulas.hc_closed",
      RouteKind::Formula, 1, kFormulaCap, formulas::sd_closed, [](int n) { return Nat(2) * hc_closed(n); });
  add("sd-equals-super-dyck-count", "number of super Dyck paths of length 2n equals binom(2n,n)",
      "paths.count_enumerated(super-dyck) | formulas.sd_closed", RouteKind::Enumeration, 1, kEnumCaps.super_dyck,
      [](int n) { return paths::count_enumerated({FamilyKind::SuperDyck, n}); }, formulas::sd_closed);

  // --- Motzkin humps ------------------------------------------------------
  add("hm-closed-equals-recurrence", "HM_n = (1/2) sum_{j>=1} binom(n,j) binom(n-j,j) agrees with the recurrence",
      "formulas.hm_closed | formulas.hm_recurrence", RouteKind::Formula, 0, kFormulaCap, hm_closed,
      formulas::hm_recurrence);
  add("hm-equals-motzkin-humps", "total humps over Motzkin paths of length n equals HM_n closed form",
      "paths.total_humps(motzkin) | formulas.hm_closed", RouteKind::Enumeration, 0, kEnumCaps.motzkin,
      [](int n) { return paths::total_humps({FamilyKind::Motzkin, n}); }, hm_closed);
  add("recurrence-motzkin-011",
      "B_n = B_{n-1} + sum_{k=2}^{n} ((1 + B_{k-2}) M_{n-k} + M_{k-2} B_{n-k}), B_n = (1/2) sum_{j>=1} "
      "binom(n,j) binom(n-j,j)",
      "formulas.hm_closed | formulas.hm_closed, motzkin", RouteKind::Formula, 1, kFormulaCap, hm_closed,
      b_recurrence_rhs);
  add("motzkin-path-222",
      "2 sum_{j>=1} binom(n,j) binom(n-j,j) = sum_{r=0}^{n-1} binom(n-r,floor((n-r)/2)) binom(n,r) + "
      "sum_{k=1}^{floor(n/2)-1} n!/(k! (k+1)! (n-2k-2)! (n-k-1) (n-k))",
      "binomial | binomial, factorial", RouteKind::Formula, 2, kFormulaCap,
      [](int n) { return Nat(2) * trinomial_sum(n, 1); }, motzkin_path_222_rhs);
  add("motzkin-equals-motzkin-count", "number of Motzkin paths of length n equals M_n",
      "paths.count_enumerated(motzkin) | motzkin", RouteKind::Enumeration, 0, kEnumCaps.motzkin,
      [](int n) { return paths::count_enumerated({FamilyKind::Motzkin, n}); }, motzkin);
  add("motzkin-equals-s30", "M_n = S(3,0;n)", "motzkin | partitions.hook_sum(3,0)", RouteKind::Partition, 0,
      kStripCap, motzkin, [](int n) { return partitions::hook_sum({3, 0}, n); });
  add("hm-equals-s21-minus-1", "HM_n = S(2,1;n) - 1", "formulas.hm_closed | partitions.hook_sum(2,1)",
      RouteKind::Partition, 0, kHookCap, hm_closed,
      [](int n) { return partitions::hook_sum({2, 1}, n) - Nat(1); });
  add("hm-equals-s21-closed-minus-1", "HM_n = S(2,1;n) - 1 with S(2,1;n) from its closed form",
      "formulas.hm_closed | partitions.s21_closed", RouteKind::Formula, 2, kFormulaCap, hm_closed,
      [](int n) { return partitions::s21_closed(n) - Nat(1); });
  add("s21-closed-equals-hook-sum", "closed form for S(2,1;n) agrees with the hook sum",
      "partitions.s21_closed | partitions.hook_sum(2,1)", RouteKind::Partition, 2, kHookCap,
      partitions::s21_closed, [](int n) { return partitions::hook_sum({2, 1}, n); });
  add("sm-closed-equals-recurrence", "SM_n = sum_{j>=0} binom(n,j) binom(n-j,j) agrees with the recurrence",
      "formulas.sm_closed | formulas.sm_recurrence", RouteKind::Formula, 0, kFormulaCap, formulas::sm_closed,
      formulas::sm_recurrence);
  add("sm-equals-2hm-plus-1", "SM_n = 2 HM_n + 1", "formulas.sm_closed | formulas.hm_closed", RouteKind::Formula,
      0, kFormulaCap, formulas::sm_closed, [](int n) { return Nat(2) * hm_closed(n) + Nat(1); });
  add("sm-equals-super-motzkin-count", "number of super Motzkin paths of length n equals SM_n",
      "paths.count_enumerated(super-motzkin) | formulas.sm_recurrence", RouteKind::Enumeration, 0,
      kEnumCaps.super_motzkin, [](int n) { return paths::count_enumerated({FamilyKind::SuperMotzkin, n}); },
      formulas::sm_recurrence);

  // --- Strip and hook sums ------------------------------------------------
  for (int k = 2; k <= 5; ++k) {
    add("strip-s" + std::to_string(k) + "0", "S(" + std::to_string(k) + ",0;n) equals its closed form",
        "partitions.hook_sum(" + std::to_string(k) + ",0) | partitions.strip_sum_closed", RouteKind::Partition, 0,
        kStripCap, [k](int n) { return partitions::hook_sum({k, 0}, n); },
        [k](int n) { return partitions::strip_sum_closed(k, n); });
  }
  add("s11-power-of-two", "S(1,1;n) = 2^{n-1}", "partitions.hook_sum(1,1) | partitions.s11_closed",
      RouteKind::Partition, 1, kHookCap, [](int n) { return partitions::hook_sum({1, 1}, n); },
      partitions::s11_closed);
  add("syt-square-sum", "sum over partitions of n of (f^lambda)^2 = n!", "partitions.syt_count | factorial",
      RouteKind::Partition, 0, kAllPartitionsCap, sum_of_squares_of_syt, factorial);

  // --- Double-Dyck paths --------------------------------------------------
  add("s40-equals-double-dyck-count", "number of double-Dyck paths for n equals S(4,0;n) = C_a C_b",
      "paths.count_enumerated(double-dyck) | partitions.strip_sum_closed(4)", RouteKind::Enumeration, 0,
      kEnumCaps.double_dyck, [](int n) { return paths::count_enumerated({FamilyKind::DoubleDyck, n}); },
      [](int n) { return partitions::strip_sum_closed(4, n); });
  add("hs40-product-equals-closed", "HC_a C_b + C_a HC_b = (n+3)/2 S(4,0;n)", "formulas.hs40 | formulas.hs40_closed",
      RouteKind::Formula, 1, kFormulaCap, formulas::hs40, formulas::hs40_closed);
  add("hs40-equals-double-dyck-humps", "total humps over double-Dyck paths equals HC_a C_b + C_a HC_b",
      "paths.total_humps(double-dyck) | formulas.hs40", RouteKind::Enumeration, 1, kEnumCaps.double_dyck,
      [](int n) { return paths::total_humps({FamilyKind::DoubleDyck, n}); }, formulas::hs40);
  add("hs40-listed-values", "HS(4,0;n) for n = 1..12 is 2, 5, 12, 35, 100, 315, 980, 3234, 10584, 36036, 121968, 424710",
      "formulas.hs40 | table", RouteKind::Formula, 1, static_cast<int>(kListedHs40.size()), formulas::hs40,
      [](int n) { return Nat(kListedHs40[static_cast<std::size_t>(n - 1)]); });
  return r;
}

}  // namespace

const std::vector<Identity>& registry() {
  static const std::vector<Identity> identities = build_registry();
  return identities;
}

const Identity* find(std::string_view id) {
  const auto& all = registry();
  const auto it = std::find_if(all.begin(), all.end(), [id](const Identity& i) { return i.id == id; });
  return it == all.end() ? nullptr : &*it;
}

IdentityReport check(const Identity& identity, int lo, int hi) {
  if (lo < identity.valid_from) {
    throw InvalidRange("identity " + identity.id + ": range starts at " + std::to_string(lo) +
                       ", below its first valid index " + std::to_string(identity.valid_from));
  }
  if (hi < lo) {
    throw InvalidRange("identity " + identity.id + ": empty range [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  }
  if (hi > identity.max_n) {
    throw CapExceeded("identity " + identity.id + ": n = " + std::to_string(hi) + " exceeds its cap " +
                      std::to_string(identity.max_n));
  }
  const auto start = std::chrono::steady_clock::now();
  IdentityReport report{identity.id, lo, hi, {}, {}};
  for (int n = lo; n <= hi; ++n) {
    Nat left = identity.lhs(n);
    Nat right = identity.rhs(n);
    if (left != right) report.failures.push_back({n, std::move(left), std::move(right)});
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

IdentityReport check(std::string_view id, int lo, int hi) {
  const Identity* identity = find(id);
  if (identity == nullptr) throw UnknownIdentity("unknown identity '" + std::string(id) + "'");
  return check(*identity, lo, hi);
}

std::vector<IdentityReport> check_all(std::span<const Identity> identities, int hi_formula, int hi_enum) {
  if (hi_formula < 1 || hi_enum < 1) throw DomainError("check_all: caps must be positive");
  std::vector<std::future<IdentityReport>> pending;
  pending.reserve(identities.size());
  for (const Identity& identity : identities) {
    const int cap = identity.kind == RouteKind::Enumeration ? hi_enum : hi_formula;
    const int lo = identity.valid_from;
    const int hi = std::min(cap, identity.max_n);
    pending.push_back(std::async(std::launch::async, [&identity, lo, hi] {
      if (hi < lo) return IdentityReport{identity.id, lo, hi, {}, {}};
      return check(identity, lo, hi);
    }));
  }
  std::vector<IdentityReport> reports;
  reports.reserve(pending.size());
  for (auto& f : pending) reports.push_back(f.get());
  return reports;
}

std::vector<IdentityReport> check_all(int hi_formula, int hi_enum) {
  return check_all(registry(), hi_formula, hi_enum);
}

namespace {

nlohmann::ordered_json report_json(const IdentityReport& report) {
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const Mismatch& m : report.failures) {
    failures.push_back({{"n", m.n}, {"lhs", m.lhs.to_string()}, {"rhs", m.rhs.to_string()}});
  }
  return {{"id", report.id},       {"lo", report.lo},
          {"hi", report.hi},       {"pass", report.pass()},
          {"failures", failures},  {"elapsed_ms", report.elapsed.count()}};
}

}  // namespace

std::string to_json(const IdentityReport& report, int indent) { return report_json(report).dump(indent); }

std::string to_json(std::span<const IdentityReport> reports, int indent) {
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (const auto& r : reports) all.push_back(report_json(r));
  return all.dump(indent);
}

}  // namespace humplab::verify
