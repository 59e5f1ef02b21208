#include "wittlab/two_local.hpp"

#include <map>
#include <string>

#include "wittlab/derivations.hpp"
#include "wittlab/errors.hpp"

namespace wittlab {
namespace {

void require_rigidity_kind(AlgebraKind kind) {
  if (kind != AlgebraKind::Witt && kind != AlgebraKind::PositiveWitt) {
    throw PreconditionError("rigidity is defined for witt and wplus only");
  }
}

void require_probe(const IndexWindow& window, Index probe) {
  if (!window.contains(probe)) {
    throw WindowTooSmall("window [" + std::to_string(window.lo) + ", " + std::to_string(window.hi) +
                         "] does not contain probe e_" + std::to_string(probe));
  }
}

RigidityTrace trace_for(AlgebraKind kind, const Element& x, std::vector<Index> probes,
                        const IndexWindow& window) {
  for (Index p : probes) require_probe(window, p);
  RigidityTrace trace{x, std::move(probes), {}, Subspace{}};
  for (Index p : trace.probes) trace.forced.push_back(forced_image_space(kind, p, x, window));
  trace.intersection = trace.forced.front();
  for (std::size_t k = 1; k < trace.forced.size(); ++k) {
    trace.intersection = subspace_intersection(trace.intersection, trace.forced[k]);
  }
  return trace;
}

std::pair<Index, Index> probe_pair(AlgebraKind kind) {
  return kind == AlgebraKind::Witt ? std::pair<Index, Index>{0, 1} : std::pair<Index, Index>{1, 2};
}

}  // namespace

Element thin_delta(const Element& x) {
  if (x.kind() != AlgebraKind::Thin) throw MixedAlgebras("thin_delta acts on the thin algebra");
  const Rational x1 = x.coefficient(1);
  if (x1.is_zero()) return Element(AlgebraKind::Thin);
  return x - Element::basis(AlgebraKind::Thin, 1, x1);
}

Element apply_witness(const Witness& w, const Element& x) {
  if (const auto* inner = std::get_if<InnerWitness>(&w)) {
    return bracket(inner->a, x.as(inner->a.kind())).as(x.kind());
  }
  return std::get<LinearMapTable>(w).apply(x);
}

WitnessCertificate thin_witness(const Element& x, const Element& y, Index min_truncation) {
  const AlgebraKind kind = AlgebraKind::Thin;
  if (x.kind() != kind || y.kind() != kind) throw MixedAlgebras("thin_witness expects thin elements");
  Index n = std::max<Index>(3, min_truncation);
  if (!x.is_zero()) n = std::max(n, *x.coeffs().trailing_index());
  if (!y.is_zero()) n = std::max(n, *y.coeffs().trailing_index());

  const bool x1 = !x.coefficient(1).is_zero();
  const bool y1 = !y.coefficient(1).is_zero();
  if (!x1 && !y1) {
    return {x, y, LinearMapTable::zero(kind, {1, n}), 1, false};
  }
  if (x1 != y1) {
    const Element& lead = x1 ? x : y;
    const Rational l1 = lead.coefficient(1);
    ThinDerivationParams params;
    params.alpha.push_back(Rational(0));
    for (Index k = 2; k <= *lead.coeffs().trailing_index(); ++k) {
      params.alpha.push_back(lead.coefficient(k) / l1);
    }
    return {x, y, thin_derivation(params, n), 2, x1};
  }
  ThinDerivationParams identity_off_e1;
  identity_off_e1.beta.push_back(Rational(1));
  return {x, y, thin_derivation(identity_off_e1, n), 3, false};
}

PairVerdict verify_pair(const DeltaMap& delta, const WitnessCertificate& cert) {
  PairVerdict v{true, delta(cert.x) - apply_witness(cert.witness, cert.x),
                delta(cert.y) - apply_witness(cert.witness, cert.y)};
  v.pass = v.residual_x.is_zero() && v.residual_y.is_zero();
  return v;
}

AdditivityReport additivity_violation(const DeltaMap& delta, const Element& x, const Element& y) {
  if (x.kind() != y.kind()) throw MixedAlgebras("additivity check on different algebras");
  AdditivityReport r{delta(x), delta(y), delta(x + y), Element(x.kind())};
  r.residual = r.delta_sum - r.delta_x - r.delta_y;
  return r;
}

AlgebraKind witness_algebra(AlgebraKind kind) {
  return kind == AlgebraKind::PositiveWitt ? AlgebraKind::PositiveWittExtended : kind;
}

Subspace centralizer(AlgebraKind kind, const Element& t, IndexWindow window) {
  const AlgebraKind w = witness_algebra(kind);
  if (!in_domain(w, window)) {
    throw IndexOutOfDomain("window starts below the index domain of " +
                           std::string(algebra_name(w)));
  }
  const Element target = t.as(w);
  // Row m collects the e_m-coefficient of [a, t] as a linear form in a.
  std::map<Index, std::vector<Entry>> rows;
  for (Index i = window.lo; i <= window.hi; ++i) {
    const Element image = bracket(Element::basis(w, i), target);
    for (const auto& [m, c] : image.coeffs()) rows[m].push_back({i, c});
  }
  std::vector<SparseVector> constraints;
  constraints.reserve(rows.size());
  for (auto& [m, entries] : rows) constraints.push_back(SparseVector::from_unsorted(std::move(entries)));
  return kernel_basis(constraints, window);
}

Subspace forced_image_space(AlgebraKind kind, Index probe, const Element& x, IndexWindow window) {
  const AlgebraKind w = witness_algebra(kind);
  require_probe(window, probe);
  if (!in_domain(w, probe)) {
    throw IndexOutOfDomain("probe e_" + std::to_string(probe) + " is not a basis vector of " +
                           std::string(algebra_name(w)));
  }
  const Element target = x.as(w);
  const Subspace cent = centralizer(kind, Element::basis(w, probe), window);
  IndexWindow image_window = window;
  if (!target.is_zero()) {
    const IndexWindow xs = target.coeffs().support_window();
    image_window = {window.lo + xs.lo, window.hi + xs.hi};
  }
  std::vector<SparseVector> images;
  for (const auto& a : cent.basis()) images.push_back(bracket(Element(w, a), target).coeffs());
  return Subspace::span(image_window, images);
}

RigidityTrace rigidity_check(AlgebraKind kind, const Element& x, IndexWindow window) {
  require_rigidity_kind(kind);
  if (x.kind() != kind) throw MixedAlgebras("rigidity target must live in " + std::string(algebra_name(kind)));
  if (x.is_zero()) throw PreconditionError("rigidity_check needs a nonzero element");
  if (kind == AlgebraKind::Witt) {
    return trace_for(kind, x, {0, 2 * x.support_bound() + 1}, window);
  }
  return trace_for(kind, x, {1, 2 * *x.coeffs().trailing_index() + 1}, window);
}

RigidityTrace basis_rigidity_check(AlgebraKind kind, Index i, IndexWindow window) {
  require_rigidity_kind(kind);
  const auto [p, q] = probe_pair(kind);
  if (kind == AlgebraKind::Witt && (i == 0 || i == 1)) {
    throw PreconditionError("basis rigidity on witt needs i outside {0, 1}");
  }
  if (kind == AlgebraKind::PositiveWitt && i < 3) {
    throw PreconditionError("basis rigidity on wplus needs i >= 3");
  }
  return trace_for(kind, Element::basis(kind, i), {p, q}, window);
}

BaselineRigidity rigidity_with_baseline(AlgebraKind kind, const DeltaMap& delta,
                                        const LinearMapTable& baseline, const Element& x,
                                        IndexWindow window) {
  require_rigidity_kind(kind);
  if (baseline.kind() != kind) throw MixedAlgebras("baseline must act on " + std::string(algebra_name(kind)));
  if (const auto lr = leibniz_check(baseline, baseline.truncation().hi); !lr.pass) {
    throw PreconditionError("baseline is not a derivation: Leibniz fails at (" +
                            std::to_string(lr.pair->first) + ", " + std::to_string(lr.pair->second) +
                            ")");
  }
  const auto [p, q] = probe_pair(kind);
  for (Index probe : {p, q}) {
    const Element e = Element::basis(kind, probe);
    if (delta(e) != baseline.apply(e)) {
      throw PreconditionError("baseline disagrees with delta on probe e_" + std::to_string(probe));
    }
  }
  BaselineRigidity out{rigidity_check(kind, x, window), std::nullopt, baseline.apply(x),
                       Element(kind)};
  const Index far = out.trace.probes.back();
  if (far != p && far != q) out.probe_trace = basis_rigidity_check(kind, far, window);
  out.remainder = delta(x) - out.predicted;
  return out;
}

}  // namespace wittlab
