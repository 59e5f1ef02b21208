#include "wittlab/sparse_vector.hpp"

#include <algorithm>
#include <ostream>

namespace wittlab {

IndexWindow hull(const IndexWindow& a, const IndexWindow& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

SparseVector::SparseVector(std::initializer_list<std::pair<Index, Rational>> entries) {
  std::vector<Entry> raw;
  raw.reserve(entries.size());
  for (const auto& [i, v] : entries) raw.push_back({i, v});
  *this = from_unsorted(std::move(raw));
}

SparseVector SparseVector::unit(Index i, Rational value) {
  SparseVector v;
  if (!value.is_zero()) v.entries_.push_back({i, std::move(value)});
  return v;
}

SparseVector SparseVector::from_unsorted(std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVector out;
  for (auto& e : entries) {
    if (!out.entries_.empty() && out.entries_.back().index == e.index) {
      out.entries_.back().value += e.value;
      if (out.entries_.back().value.is_zero()) out.entries_.pop_back();
    } else if (!e.value.is_zero()) {
      out.entries_.push_back(std::move(e));
    }
  }
  return out;
}

Rational SparseVector::get(Index i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index k) { return e.index < k; });
  if (it != entries_.end() && it->index == i) return it->value;
  return Rational(0);
}

std::optional<Index> SparseVector::leading_index() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.front().index;
}

std::optional<Index> SparseVector::trailing_index() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.back().index;
}

IndexWindow SparseVector::support_window() const {
  if (entries_.empty()) return {};
  return {entries_.front().index, entries_.back().index};
}

bool SparseVector::supported_in(const IndexWindow& w) const { return w.contains(support_window()); }

void SparseVector::set(Index i, const Rational& value) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index k) { return e.index < k; });
  const bool present = it != entries_.end() && it->index == i;
  if (value.is_zero()) {
    if (present) entries_.erase(it);
  } else if (present) {
    it->value = value;
  } else {
    entries_.insert(it, Entry{i, value});
  }
}

void SparseVector::axpy(const Rational& factor, const SparseVector& other) {
  if (factor.is_zero() || other.is_zero()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->index < b->index)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->index < a->index) {
      merged.push_back({b->index, factor * b->value});
      ++b;
    } else {
      Rational sum = a->value + factor * b->value;
      if (!sum.is_zero()) merged.push_back({a->index, std::move(sum)});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseVector::scale(const Rational& factor) {
  if (factor.is_zero()) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.value *= factor;
}

SparseVector SparseVector::shifted(Index offset) const {
  SparseVector out = *this;
  for (auto& e : out.entries_) e.index += offset;
  return out;
}

Rational SparseVector::dot(const SparseVector& other) const {
  Rational acc(0);
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->index < b->index) {
      ++a;
    } else if (b->index < a->index) {
      ++b;
    } else {
      acc += a->value * b->value;
      ++a;
      ++b;
    }
  }
  return acc;
}

SparseVector& SparseVector::operator+=(const SparseVector& rhs) {
  axpy(Rational(1), rhs);
  return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& rhs) {
  axpy(Rational(-1), rhs);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const SparseVector& v) {
  os << '{';
  bool first = true;
  for (const auto& e : v) {
    if (!first) os << ", ";
    first = false;
    os << e.index << ": " << e.value;
  }
  return os << '}';
}

}  // namespace wittlab
