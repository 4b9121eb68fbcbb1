#include "humplab/paths.hpp"

#include <array>
#include <cstdlib>
#include <ostream>
#include <span>

#include "humplab/errors.hpp"

namespace humplab::paths {
namespace {

constexpr int delta(Step s) noexcept {
  switch (s) {
    case Step::Up: return 1;
    case Step::Flat: return 0;
    case Step::Down: return -1;
  }
  return 0;
}

constexpr std::array<Step, 3> kMotzkinSteps{Step::Up, Step::Flat, Step::Down};
constexpr std::array<Step, 2> kDyckSteps{Step::Up, Step::Down};

std::span<const Step> alphabet(const PathFamily& family) {
  if (family.allows_flat()) return kMotzkinSteps;
  return kDyckSteps;
}

void require_valid_family(const PathFamily& family) {
  if (family.n < 0) {
    throw DomainError(std::string(family_name(family.kind)) + ": negative size " + std::to_string(family.n));
  }
}

std::string describe(const PathFamily& family) {
  return std::string(family_name(family.kind)) + "(" + std::to_string(family.n) + ")";
}

}  // namespace

char to_char(Step s) noexcept {
  switch (s) {
    case Step::Up: return 'U';
    case Step::Flat: return 'F';
    case Step::Down: return 'D';
  }
  return '?';
}

std::string_view family_name(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::Dyck: return "dyck";
    case FamilyKind::Motzkin: return "motzkin";
    case FamilyKind::SuperDyck: return "super-dyck";
    case FamilyKind::SuperMotzkin: return "super-motzkin";
    case FamilyKind::DoubleDyck: return "double-dyck";
  }
  return "?";
}

std::optional<FamilyKind> parse_family(std::string_view name) noexcept {
  for (FamilyKind k : {FamilyKind::Dyck, FamilyKind::Motzkin, FamilyKind::SuperDyck,
                       FamilyKind::SuperMotzkin, FamilyKind::DoubleDyck}) {
    if (family_name(k) == name) return k;
  }
  return std::nullopt;
}

int PathFamily::length() const noexcept {
  switch (kind) {
    case FamilyKind::Dyck:
    case FamilyKind::SuperDyck: return 2 * n;
    case FamilyKind::Motzkin:
    case FamilyKind::SuperMotzkin: return n;
    case FamilyKind::DoubleDyck: return 2 * (n + 1);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// LatticePath
// ---------------------------------------------------------------------------
LatticePath::LatticePath(std::vector<Step> steps, PathFamily family)
    : steps_(std::move(steps)), family_(family) {
  require_valid_family(family_);
  const auto fail = [this](const std::string& why) {
    throw DomainError("path \"" + to_string() + "\" is not a " + describe(family_) + " path: " + why);
  };
  if (static_cast<int>(steps_.size()) != family_.length()) fail("wrong length");
  int height = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i] == Step::Flat && !family_.allows_flat()) fail("flat step not allowed");
    height += delta(steps_[i]);
    if (height < 0 && !family_.is_super()) fail("goes below the x-axis");
    if (family_.kind == FamilyKind::DoubleDyck && static_cast<int>(i) + 1 == family_.junction() &&
        height != 0) {
      fail("does not touch the axis at the junction");
    }
  }
  if (height != 0) fail("does not end on the x-axis");
}

LatticePath LatticePath::parse(std::string_view text, PathFamily family) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'U': steps.push_back(Step::Up); break;
      case 'F': steps.push_back(Step::Flat); break;
      case 'D': steps.push_back(Step::Down); break;
      default: throw DomainError(std::string("path: unexpected character '") + c + "'");
    }
  }
  return LatticePath(std::move(steps), family);
}

std::string LatticePath::to_string() const {
  std::string s;
  s.reserve(steps_.size());
  for (Step st : steps_) s.push_back(to_char(st));
  return s;
}

// ---------------------------------------------------------------------------
// Enumeration. The successor of a path is found by bumping the rightmost
// step that can be raised (Up -> Flat -> Down) while a completion still
// exists, then filling the tail with the smallest feasible steps.
// ---------------------------------------------------------------------------
PathRange::PathRange(PathFamily family) : family_(family) { require_valid_family(family_); }

PathRange enumerate(PathFamily family) { return PathRange(family); }

PathRange::iterator::iterator(PathFamily family)
    : family_(family),
      length_(family.length()),
      steps_(static_cast<std::size_t>(length_), Step::Up),
      heights_(static_cast<std::size_t>(length_) + 1, 0) {
  if (fill_from(0)) current_.emplace(steps_, family_);
}

bool PathRange::iterator::feasible(int pos_after, int height) const noexcept {
  if (height < 0 && !family_.is_super()) return false;
  const int remaining = length_ - pos_after;
  const int distance = std::abs(height);
  if (distance > remaining) return false;
  if (!family_.allows_flat() && (remaining - distance) % 2 != 0) return false;
  if (family_.kind == FamilyKind::DoubleDyck) {
    const int junction = family_.junction();
    if (pos_after < junction && height > junction - pos_after) return false;
    if (pos_after == junction && height != 0) return false;
  }
  return true;
}

bool PathRange::iterator::fill_from(std::size_t pos) {
  const auto steps = alphabet(family_);
  for (std::size_t p = pos; p < steps_.size(); ++p) {
    bool placed = false;
    for (Step s : steps) {
      const int h = heights_[p] + delta(s);
      if (feasible(static_cast<int>(p) + 1, h)) {
        steps_[p] = s;
        heights_[p + 1] = h;
        placed = true;
        break;
      }
    }
    if (!placed) return false;
  }
  return true;
}

PathRange::iterator& PathRange::iterator::operator++() {
  const auto steps = alphabet(family_);
  for (std::size_t i = steps_.size(); i-- > 0;) {
    for (Step s : steps) {
      if (s <= steps_[i]) continue;
      const int h = heights_[i] + delta(s);
      if (!feasible(static_cast<int>(i) + 1, h)) continue;
      steps_[i] = s;
      heights_[i + 1] = h;
      if (fill_from(i + 1)) {
        current_.emplace(steps_, family_);
        return *this;
      }
    }
  }
  current_.reset();
  return *this;
}

// ---------------------------------------------------------------------------
// Humps
// ---------------------------------------------------------------------------
std::size_t hump_count(const LatticePath& path) {
  if (path.family().is_super()) {
    throw DomainError("hump_count: humps are not defined for " + std::string(family_name(path.family().kind)) +
                      " paths");
  }
  std::size_t humps = 0;
  bool open_up = false;  // last non-flat step was Up
  for (Step s : path.steps()) {
    if (s == Step::Up) {
      open_up = true;
    } else if (s == Step::Down) {
      if (open_up) ++humps;
      open_up = false;
    }
  }
  return humps;
}

int EnumerationCaps::for_family(FamilyKind kind) const noexcept {
  switch (kind) {
    case FamilyKind::Dyck: return dyck;
    case FamilyKind::Motzkin: return motzkin;
    case FamilyKind::SuperDyck: return super_dyck;
    case FamilyKind::SuperMotzkin: return super_motzkin;
    case FamilyKind::DoubleDyck: return double_dyck;
  }
  return 0;
}

namespace {

void require_within_cap(const PathFamily& family, const EnumerationCaps& caps, const char* op) {
  require_valid_family(family);
  const int cap = caps.for_family(family.kind);
  if (family.n > cap) {
    throw CapExceeded(std::string(op) + ": " + describe(family) + " exceeds the enumeration cap n <= " +
                      std::to_string(cap) + "; use the closed forms for larger n");
  }
}

}  // namespace

Nat count_enumerated(PathFamily family, const EnumerationCaps& caps) {
  require_within_cap(family, caps, "count_enumerated");
  std::uint64_t count = 0;
  for (auto it = enumerate(family).begin(); it != std::default_sentinel; ++it) ++count;
  return Nat(count);
}

Nat total_humps(PathFamily family, const EnumerationCaps& caps) {
  if (family.is_super()) {
    throw DomainError("total_humps: humps are not defined for " + std::string(family_name(family.kind)) +
                      " paths");
  }
  require_within_cap(family, caps, "total_humps");
  std::uint64_t total = 0;
  for (const LatticePath& p : enumerate(family)) total += hump_count(p);
  return Nat(total);
}

std::pair<LatticePath, LatticePath> first_return_split(const LatticePath& path) {
  if (path.empty()) throw DomainError("first_return_split: empty path");
  if (path.family().is_super()) throw DomainError("first_return_split: super paths have no first return");
  const auto& steps = path.steps();
  std::size_t split = 0;
  int height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    height += delta(steps[i]);
    if (height == 0) {
      split = i + 1;
      break;
    }
  }
  std::vector<Step> head(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(split));
  std::vector<Step> tail(steps.begin() + static_cast<std::ptrdiff_t>(split), steps.end());
  const bool motzkin = path.family().allows_flat();
  const auto family_for = [motzkin](std::size_t len) {
    return motzkin ? PathFamily{FamilyKind::Motzkin, static_cast<int>(len)}
                   : PathFamily{FamilyKind::Dyck, static_cast<int>(len / 2)};
  };
  const std::size_t head_len = head.size();
  const std::size_t tail_len = tail.size();
  return {LatticePath(std::move(head), family_for(head_len)), LatticePath(std::move(tail), family_for(tail_len))};
}

std::uint64_t write_dump(std::ostream& os, PathFamily family, const EnumerationCaps& caps) {
  require_within_cap(family, caps, "write_dump");
  std::uint64_t lines = 0;
  for (const LatticePath& p : enumerate(family)) {
    os << p.to_string() << '\n';
    ++lines;
  }
  return lines;
}

}  // namespace humplab::paths
