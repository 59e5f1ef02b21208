#pragma once

#include <functional>
#include <map>
#include <optional>

#include "wittlab/algebra.hpp"

namespace wittlab {

// A linear map given by the images of the basis vectors e_k for every k in a
// truncation window. Images may be supported outside the window.
class LinearMapTable {
 public:
  // Throws PreconditionError unless `images` has exactly one entry per index
  // of the truncation, all images live in `kind`, and the truncation lies in
  // the index domain.
  LinearMapTable(AlgebraKind kind, IndexWindow truncation, std::map<Index, Element> images);

  static LinearMapTable zero(AlgebraKind kind, IndexWindow truncation);
  static LinearMapTable from_function(AlgebraKind kind, IndexWindow truncation,
                                      const std::function<Element(Index)>& image_of);

  [[nodiscard]] AlgebraKind kind() const { return kind_; }
  [[nodiscard]] const IndexWindow& truncation() const { return truncation_; }
  [[nodiscard]] const std::map<Index, Element>& images() const { return images_; }
  [[nodiscard]] bool covers(Index k) const { return truncation_.contains(k); }
  // Throws TruncationTooSmall when k is outside the truncation.
  [[nodiscard]] const Element& image(Index k) const;

  // Linear extension to an element supported in the truncation.
  [[nodiscard]] Element apply(const Element& x) const;

  [[nodiscard]] LinearMapTable restricted(IndexWindow window) const;

  friend LinearMapTable operator-(const LinearMapTable& a, const LinearMapTable& b);
  friend bool operator==(const LinearMapTable&, const LinearMapTable&) = default;

 private:
  AlgebraKind kind_;
  IndexWindow truncation_;
  std::map<Index, Element> images_;
};

// ad(a): e_k -> [a, e_k] for every k in the window. `acting_on` lets a
// PositiveWittExtended element act on PositiveWitt (W+ is an ideal of
// W+ + <e_0>); by default the map acts on a's own algebra.
LinearMapTable ad(const Element& a, IndexWindow window,
                  std::optional<AlgebraKind> acting_on = std::nullopt);

}  // namespace wittlab
