#include "hfl/thfe.hpp"

#include <algorithm>

#include "hfl/error.hpp"

namespace hfl {

Thfe Thfe::of(std::vector<Grade> grades) {
  if (grades.empty()) throw EmptyHfeError();
  std::sort(grades.begin(), grades.end());
  grades.erase(std::unique(grades.begin(), grades.end()), grades.end());
  return Thfe(std::move(grades));
}

Thfe Thfe::from_decimals(std::initializer_list<const char*> tokens) {
  std::vector<Grade> grades;
  grades.reserve(tokens.size());
  for (const char* t : tokens) grades.push_back(Grade::from_decimal(t));
  return of(std::move(grades));
}

bool Thfe::contains(const Grade& g) const {
  return std::binary_search(grades_.begin(), grades_.end(), g);
}

bool Thfe::is_subset_of(const Thfe& other) const {
  return std::includes(other.grades_.begin(), other.grades_.end(), grades_.begin(), grades_.end());
}

Thfe Thfe::complement() const {
  std::vector<Grade> flipped;
  flipped.reserve(grades_.size());
  for (auto it = grades_.rbegin(); it != grades_.rend(); ++it) flipped.push_back(it->complement());
  return Thfe(std::move(flipped));
}

Thfe Thfe::set_union(const Thfe& other) const {
  std::vector<Grade> out;
  out.reserve(grades_.size() + other.grades_.size());
  std::set_union(grades_.begin(), grades_.end(), other.grades_.begin(), other.grades_.end(),
                 std::back_inserter(out));
  return Thfe(std::move(out));
}

std::optional<Thfe> Thfe::set_intersection(const Thfe& other) const {
  std::vector<Grade> out;
  std::set_intersection(grades_.begin(), grades_.end(), other.grades_.begin(), other.grades_.end(),
                        std::back_inserter(out));
  if (out.empty()) return std::nullopt;
  return Thfe(std::move(out));
}

std::optional<Thfe> Thfe::set_difference(const Thfe& other) const {
  std::vector<Grade> out;
  std::set_difference(grades_.begin(), grades_.end(), other.grades_.begin(), other.grades_.end(),
                      std::back_inserter(out));
  if (out.empty()) return std::nullopt;
  return Thfe(std::move(out));
}

std::string Thfe::to_string(int precision) const {
  std::string out = "{";
  for (std::size_t i = 0; i < grades_.size(); ++i) {
    if (i > 0) out += ", ";
    out += grades_[i].to_decimal(precision);
  }
  return out + "}";
}

bool strictly_below(const Thfe& x, const Thfe& y) { return x.sup() < y.inf(); }

bool strictly_below(const std::optional<Thfe>& x, const std::optional<Thfe>& y) {
  if (!x.has_value() || !y.has_value()) return true;
  return strictly_below(*x, *y);
}

}  // namespace hfl
