#include "wittlab/linear_map_table.hpp"

#include <string>

#include "wittlab/errors.hpp"

namespace wittlab {

LinearMapTable::LinearMapTable(AlgebraKind kind, IndexWindow truncation,
                               std::map<Index, Element> images)
    : kind_(kind), truncation_(truncation), images_(std::move(images)) {
  if (truncation_.empty()) throw PreconditionError("linear map table with empty truncation");
  if (!in_domain(kind_, truncation_)) {
    throw IndexOutOfDomain("truncation starts below the index domain of " +
                           std::string(algebra_name(kind_)));
  }
  if (images_.size() != truncation_.size() || images_.begin()->first != truncation_.lo ||
      images_.rbegin()->first != truncation_.hi) {
    for (Index k = truncation_.lo; k <= truncation_.hi; ++k) {
      if (!images_.contains(k)) {
        throw PreconditionError("linear map table is missing the image of e_" + std::to_string(k));
      }
    }
    throw PreconditionError("linear map table has images outside its truncation");
  }
  for (const auto& [k, img] : images_) {
    if (img.kind() != kind_) throw MixedAlgebras("image of e_" + std::to_string(k) + " lives in another algebra");
  }
}

LinearMapTable LinearMapTable::zero(AlgebraKind kind, IndexWindow truncation) {
  return from_function(kind, truncation, [kind](Index) { return Element(kind); });
}

LinearMapTable LinearMapTable::from_function(AlgebraKind kind, IndexWindow truncation,
                                             const std::function<Element(Index)>& image_of) {
  std::map<Index, Element> images;
  for (Index k = truncation.lo; k <= truncation.hi; ++k) images.emplace(k, image_of(k));
  return LinearMapTable(kind, truncation, std::move(images));
}

const Element& LinearMapTable::image(Index k) const {
  auto it = images_.find(k);
  if (it == images_.end()) {
    throw TruncationTooSmall("e_" + std::to_string(k) + " lies outside the truncation [" +
                             std::to_string(truncation_.lo) + ", " +
                             std::to_string(truncation_.hi) + "]");
  }
  return it->second;
}

Element LinearMapTable::apply(const Element& x) const {
  if (x.kind() != kind_) throw MixedAlgebras("applying a map to an element of another algebra");
  Element out(kind_);
  for (const auto& [k, c] : x.coeffs()) out += c * image(k);
  return out;
}

LinearMapTable LinearMapTable::restricted(IndexWindow window) const {
  if (!truncation_.contains(window)) throw TruncationTooSmall("restriction window exceeds the truncation");
  return from_function(kind_, window, [this](Index k) { return images_.at(k); });
}

LinearMapTable operator-(const LinearMapTable& a, const LinearMapTable& b) {
  if (a.kind_ != b.kind_) throw MixedAlgebras("difference of maps on different algebras");
  if (a.truncation_ != b.truncation_) throw PreconditionError("difference of maps with different truncations");
  return LinearMapTable::from_function(a.kind_, a.truncation_,
                                       [&](Index k) { return a.images_.at(k) - b.images_.at(k); });
}

LinearMapTable ad(const Element& a, IndexWindow window, std::optional<AlgebraKind> acting_on) {
  const AlgebraKind target = acting_on.value_or(a.kind());
  if (target != a.kind() &&
      !(a.kind() == AlgebraKind::PositiveWittExtended && target == AlgebraKind::PositiveWitt)) {
    throw MixedAlgebras("ad: an element of " + std::string(algebra_name(a.kind())) +
                        " does not act on " + std::string(algebra_name(target)));
  }
  if (!in_domain(target, window)) {
    throw IndexOutOfDomain("ad: window starts below the index domain of " +
                           std::string(algebra_name(target)));
  }
  return LinearMapTable::from_function(target, window, [&](Index k) {
    return bracket(a, Element::basis(a.kind(), k)).as(target);
  });
}

}  // namespace wittlab
