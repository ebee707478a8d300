#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "hfl/grade.hpp"

namespace hfl {

/**
 * Typical hesitant fuzzy element: a nonempty finite subset of [0,1].
 *
 * Canonical representation is the strictly increasing tuple of its distinct
 * grades, so two THFEs are equal exactly when they denote the same set.
 * Values are immutable after construction.
 */
class Thfe {
 public:
  /// Sorts and deduplicates; throws EmptyHfeError on an empty input.
  static Thfe of(std::vector<Grade> grades);
  static Thfe of(std::initializer_list<double> grid_twentieths) = delete;  // no silent floats

  /// Convenience for literals given as exact decimal strings.
  static Thfe from_decimals(std::initializer_list<const char*> tokens);

  std::size_t cardinality() const { return grades_.size(); }
  const Grade& operator[](std::size_t i) const { return grades_[i]; }
  const std::vector<Grade>& grades() const { return grades_; }

  auto begin() const { return grades_.begin(); }
  auto end() const { return grades_.end(); }

  const Grade& inf() const { return grades_.front(); }
  const Grade& sup() const { return grades_.back(); }

  bool contains(const Grade& g) const;
  bool is_subset_of(const Thfe& other) const;

  /// {1 - a : a in A}.
  Thfe complement() const;

  Thfe set_union(const Thfe& other) const;
  std::optional<Thfe> set_intersection(const Thfe& other) const;
  /// this \ other; empty result is a distinguished nullopt, never a THFE.
  std::optional<Thfe> set_difference(const Thfe& other) const;

  bool operator==(const Thfe& o) const = default;

  std::string to_string(int precision = 4) const;

 private:
  explicit Thfe(std::vector<Grade> sorted) : grades_(std::move(sorted)) {}
  std::vector<Grade> grades_;
};

/// Strict domination X < Y: every element of X below every element of Y.
/// Vacuously true when either side is the empty marker.
bool strictly_below(const std::optional<Thfe>& x, const std::optional<Thfe>& y);
bool strictly_below(const Thfe& x, const Thfe& y);

}  // namespace hfl
