#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "humplab/nat.hpp"
#include "humplab/paths.hpp"

// Hump totals and super-path counts, each with at least two independent
// routes (closed form, recurrence, exhaustive enumeration).
//
//   HC_n   total humps over Dyck paths of length 2n
//   HM_n   total humps over Motzkin paths of length n
//   SD_n   number of super Dyck paths of length 2n
//   SM_n   number of super Motzkin paths of length n
//   HS40_n total humps over the double-Dyck paths counted by S(4,0;n)
//   B_n    (1/2) sum_{j>=1} binom(n,j) binom(n-j,j), the closed form of HM_n
namespace humplab::formulas {

/// HC_n = binom(2n-1, n). Rejects n = 0: the empty path has no humps while
/// the recurrence seeds HC_0 = 1, so there is no single right answer.
Nat hc_closed(int n);

/// HC_n by the first-return recurrence, seeded HC_0 = HC_1 = 1. The value at
/// n = 0 is the recurrence convention, not a path count.
Nat hc_recurrence(int n);

/// HM_n = B_n. Throws ConsistencyError if the sum to be halved is odd.
Nat hm_closed(int n);

/// HM_n by the Motzkin first-return recurrence, HM_0 = HM_1 = 0.
Nat hm_recurrence(int n);

/// SD_n = binom(2n, n), n >= 1.
Nat sd_closed(int n);

/// SM_n = SM_{n-1} + 2 sum_{k=2..n} M_{k-2} SM_{n-k}, SM_0 = SM_1 = 1.
Nat sm_recurrence(int n);

/// SM_n = sum_{j>=0} binom(n,j) binom(n-j,j).
Nat sm_closed(int n);

/// HS(4,0;n) = HC_a C_b + C_a HC_b with a = floor((n+1)/2), b = ceil((n+1)/2).
Nat hs40(int n);

/// HS(4,0;n) = (n+3)/2 * S(4,0;n); asserts (n+3) S(4,0;n) is even.
Nat hs40_closed(int n);

enum class Sequence { HC, HM, SD, SM, HS40, B };
/// Product is the composite HC*C + C*HC form, available for HS40 only.
enum class Route { Closed, Recurrence, Enumeration, Product };

struct SequenceSpec {
  Sequence name;
  Route route;
};

std::string_view sequence_name(Sequence s) noexcept;
std::optional<Sequence> parse_sequence(std::string_view name) noexcept;
std::string_view route_name(Route r) noexcept;
std::optional<Route> parse_route(std::string_view name) noexcept;

/// Routes implemented for a sequence, the first being the default.
std::vector<Route> routes_for(Sequence s);
bool has_route(SequenceSpec spec) noexcept;

/// Smallest n at which the route is defined.
int first_index(SequenceSpec spec) noexcept;

/// Evaluates the sequence at n through the chosen route. Enumeration routes
/// honor `caps`. DomainError for an unavailable route or n out of range.
Nat evaluate(SequenceSpec spec, int n, const paths::EnumerationCaps& caps = {});

}  // namespace humplab::formulas
