#pragma once

#include <chrono>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "humplab/errors.hpp"
#include "humplab/nat.hpp"

// Exact range verification of the hump/hook-sum identities: each identity is a
// pair of functions n -> Nat that must agree for every n from its first valid
// index up to a cap that depends on how expensive its routes are.
namespace humplab::verify {

/// How the sides of an identity are computed; decides the default cap.
enum class RouteKind { Formula, Partition, Enumeration };

struct Identity {
  std::string id;
  std::string description;
  /// Operations feeding each side, "lhs-route | rhs-route".
  std::string routes;
  RouteKind kind = RouteKind::Formula;
  /// Smallest n at which the identity holds.
  int valid_from = 0;
  /// Largest n check() accepts.
  int max_n = 0;
  std::function<Nat(int)> lhs;
  std::function<Nat(int)> rhs;
};

struct Mismatch {
  int n;
  Nat lhs;
  Nat rhs;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct IdentityReport {
  std::string id;
  int lo = 0;
  int hi = -1;
  std::vector<Mismatch> failures;
  std::chrono::duration<double, std::milli> elapsed{0};

  bool pass() const noexcept { return failures.empty(); }
};

class UnknownIdentity : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidRange : public DomainError {
 public:
  using DomainError::DomainError;
};

inline constexpr int kFormulaCap = 500;

/// Every registered identity, in a fixed order.
const std::vector<Identity>& registry();

/// nullptr if the id is not registered.
const Identity* find(std::string_view id);

/// Evaluates both sides for every n in [lo, hi]. Throws InvalidRange when
/// lo < valid_from or hi < lo, CapExceeded when hi > max_n.
IdentityReport check(const Identity& identity, int lo, int hi);

/// As above, looking the id up in the registry; UnknownIdentity if absent.
IdentityReport check(std::string_view id, int lo, int hi);

/// Runs each identity over [valid_from, min(cap, max_n)] where cap is
/// hi_enum for enumeration-backed identities and hi_formula otherwise.
/// Identities run concurrently; reports come back in input order.
std::vector<IdentityReport> check_all(std::span<const Identity> identities, int hi_formula, int hi_enum);
std::vector<IdentityReport> check_all(int hi_formula, int hi_enum);

/// {id, lo, hi, pass, failures: [{n, lhs, rhs}], elapsed_ms}; big integers
/// as decimal strings.
std::string to_json(const IdentityReport& report, int indent = -1);
std::string to_json(std::span<const IdentityReport> reports, int indent = -1);

}  // namespace humplab::verify
