#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "humplab/nat.hpp"

namespace humplab::paths {

/// Enumerator order is the enumeration order: Up < Flat < Down.
enum class Step : std::uint8_t { Up, Flat, Down };

char to_char(Step s) noexcept;

enum class FamilyKind { Dyck, Motzkin, SuperDyck, SuperMotzkin, DoubleDyck };

/// Lower-case, hyphenated: "dyck", "super-motzkin", "double-dyck".
std::string_view family_name(FamilyKind kind) noexcept;
std::optional<FamilyKind> parse_family(std::string_view name) noexcept;

/// A path family with its size parameter n.
///   Dyck, SuperDyck:      length 2n, steps U/D
///   Motzkin, SuperMotzkin: length n,  steps U/F/D
///   DoubleDyck:           length 2(n+1), a Dyck path through (2*floor((n+1)/2), 0)
struct PathFamily {
  FamilyKind kind = FamilyKind::Dyck;
  int n = 0;

  int length() const noexcept;
  bool allows_flat() const noexcept {
    return kind == FamilyKind::Motzkin || kind == FamilyKind::SuperMotzkin;
  }
  bool is_super() const noexcept {
    return kind == FamilyKind::SuperDyck || kind == FamilyKind::SuperMotzkin;
  }
  /// Position at which a DoubleDyck path must touch the axis.
  int junction() const noexcept { return 2 * ((n + 1) / 2); }

  friend bool operator==(const PathFamily&, const PathFamily&) = default;
};

/// Immutable lattice path, validated against its family on construction.
class LatticePath {
 public:
  /// Throws DomainError if the steps do not form a path of the family.
  LatticePath(std::vector<Step> steps, PathFamily family);

  /// Parses a U/D/F string.
  static LatticePath parse(std::string_view text, PathFamily family);

  const std::vector<Step>& steps() const noexcept { return steps_; }
  const PathFamily& family() const noexcept { return family_; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }

  std::string to_string() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<Step> steps_;
  PathFamily family_;
};

/// Lazily enumerates every path of a family exactly once, in lexicographic
/// order with Up < Flat < Down. Nothing is materialized beyond the current
/// path.
class PathRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = LatticePath;
    using difference_type = std::ptrdiff_t;
    using pointer = const LatticePath*;
    using reference = const LatticePath&;

    iterator() = default;

    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) { return !it.current_; }

   private:
    friend class PathRange;
    explicit iterator(PathFamily family);

    bool feasible(int pos_after, int height) const noexcept;
    bool fill_from(std::size_t pos);

    PathFamily family_;
    int length_ = 0;
    std::vector<Step> steps_;
    std::vector<int> heights_;  // heights_[i] = height after i steps
    std::optional<LatticePath> current_;
  };

  explicit PathRange(PathFamily family);

  iterator begin() const { return iterator(family_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  PathFamily family_;
};

PathRange enumerate(PathFamily family);

/// Counts humps: an Up step followed by zero or more Flat steps and then a
/// Down step. For U/D families this is the number of peaks UD. Super families
/// have no hump notion and are rejected with DomainError.
std::size_t hump_count(const LatticePath& path);

/// Per-family enumeration caps. Defaults keep exhaustive runs in the seconds.
struct EnumerationCaps {
  int dyck = 14;
  int motzkin = 16;
  int super_dyck = 12;
  int super_motzkin = 12;
  int double_dyck = 12;

  int for_family(FamilyKind kind) const noexcept;
  /// Same cap for every family.
  static EnumerationCaps uniform(int n) noexcept { return {n, n, n, n, n}; }
};

/// Number of paths produced by enumerate(family); CapExceeded past the cap.
Nat count_enumerated(PathFamily family, const EnumerationCaps& caps = {});

/// Sum of hump_count over the family; CapExceeded past the cap.
Nat total_humps(PathFamily family, const EnumerationCaps& caps = {});

/// Splits a nonempty non-super path at its first return to height 0. The
/// prefix and suffix are tagged Dyck (for U/D families) or Motzkin.
std::pair<LatticePath, LatticePath> first_return_split(const LatticePath& path);

/// One path per line as a U/D/F string; returns the number of lines written.
std::uint64_t write_dump(std::ostream& os, PathFamily family, const EnumerationCaps& caps = {});

}  // namespace humplab::paths
