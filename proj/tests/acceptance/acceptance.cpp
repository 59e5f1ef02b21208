// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "cli/cli.hpp"
#include "support/oracles.hpp"

namespace {

using namespace wittlab;
using testing::Sampler;

constexpr auto kW = AlgebraKind::Witt;
constexpr auto kWp = AlgebraKind::PositiveWitt;
constexpr auto kWe = AlgebraKind::PositiveWittExtended;
constexpr auto kT = AlgebraKind::Thin;

constexpr std::uint64_t kSeed = 20261017;

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

using Clock = std::chrono::steady_clock;

// Runs a criterion; `limit_s` <= 0 means no time limit.
bool report(int id, const char* title, double limit_s, const std::function<Verdict()>& body) {
  const auto start = Clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) {
    v.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  }
  std::printf("[%s] %d. %s (%.2f s)%s%s\n", v.ok ? "PASS" : "FAIL", id, title, secs, v.ok ? "" : ": ",
              v.detail.c_str());
  std::fflush(stdout);
  return v.ok;
}

Verdict structure_sanity() {
  Verdict v;
  const std::pair<AlgebraKind, IndexWindow> cases[] = {
      {kW, {-20, 20}}, {kWp, {1, 40}}, {kWe, {0, 40}}, {kT, {1, 40}}};
  for (const auto& [kind, window] : cases) {
    const JacobiResult r = jacobi_check(kind, window);
    if (!r.pass) v.fail(std::string(algebra_name(kind)) + " violates Jacobi");
  }
  return v;
}

Verdict inner_round_trip() {
  Verdict v;
  Sampler s(kSeed);
  for (int trial = 0; trial < 200; ++trial) {
    const Element a = s.element(kWe, 0, 10);
    // [a, e_2] reaches e_12, so the table must cover e_1..e_27.
    const Element back = recover_inner_wplus(ad(a, {1, 2 * 12 + 3}, kWp));
    if (back != a) v.fail("recovered " + to_string(back) + " from ad(" + to_string(a) + ")");
  }
  return v;
}

Verdict derivation_dimensions() {
  Verdict v;
  for (Index n = 2; n <= 8; ++n) {
    const auto thin = derivation_space_basis(kT, n);
    const std::size_t oracle = testing::raw_derivation_dimension(kT, n, thin.depth);
    if (thin.space.dim() != static_cast<std::size_t>(2 * n - 1) || thin.space.dim() != oracle) {
      v.fail("thin n=" + std::to_string(n) + ": dim " + std::to_string(thin.space.dim()) + ", oracle " +
             std::to_string(oracle));
    }
    const auto wp = derivation_space_basis(kWp, n);
    const std::size_t wp_oracle = testing::raw_derivation_dimension(kWp, n, wp.depth);
    if (wp.space.dim() != static_cast<std::size_t>(n) || wp.space.dim() != wp_oracle) {
      v.fail("wplus n=" + std::to_string(n) + ": dim " + std::to_string(wp.space.dim()) + ", oracle " +
             std::to_string(wp_oracle));
    }
    for (const auto& basis_vector : wp.space.basis()) {
      const auto [g1, g2] = wp.generator_images(basis_vector);
      // D(e_2) reaches e_{n+1}; recovery verifies through 2(n+1)+3.
      const auto ext = extend_from_generators(kWp, g1, g2, 2 * (n + 1) + 3);
      if (!std::holds_alternative<LinearMapTable>(ext)) {
        v.fail("wplus n=" + std::to_string(n) + ": basis vector does not extend");
        continue;
      }
      const LinearMapTable& d = std::get<LinearMapTable>(ext);
      const Element a = recover_inner_wplus(d);  // throws NotADerivation on failure
      if (ad(a, d.truncation(), kWp) != d) v.fail("wplus n=" + std::to_string(n) + ": ad(a) != D");
    }
  }
  return v;
}

Verdict thin_formula_equivalence() {
  Verdict v;
  Sampler s(kSeed + 4);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = s.integer(1, 8);
    ThinDerivationParams p;
    for (Index i = 0; i < n; ++i) p.alpha.push_back(s.rational());
    for (Index i = 0; i + 1 < n; ++i) p.beta.push_back(s.rational());
    const auto d = thin_derivation(p, 30);
    if (!leibniz_check(d, 30).pass) v.fail("random params fail Leibniz at depth 30");
  }
  for (Index n = 1; n <= 8; ++n) {
    const auto space = derivation_space_basis(kT, n);
    for (const auto& basis_vector : space.space.basis()) {
      const auto [g1, g2] = space.generator_images(basis_vector);
      const auto ext = extend_from_generators(kT, g1, g2, 30);
      if (!std::holds_alternative<LinearMapTable>(ext)) {
        v.fail("thin n=" + std::to_string(n) + ": basis vector does not extend");
        continue;
      }
      const auto& d = std::get<LinearMapTable>(ext);
      if (thin_derivation(thin_params_from(d), 30) != d) {
        v.fail("thin n=" + std::to_string(n) + ": solution not reproduced by the closed form");
      }
    }
  }
  return v;
}

Verdict rigidity() {
  Verdict v;
  for (Index i = -20; i <= 20; ++i) {
    if (i == 0 || i == 1) continue;
    if (!basis_rigidity_check(kW, i, {-25, 25}).rigid()) v.fail("witt e_" + std::to_string(i));
  }
  for (Index i = 3; i <= 40; ++i) {
    if (!basis_rigidity_check(kWp, i, {1, 45}).rigid()) v.fail("wplus e_" + std::to_string(i));
  }
  Sampler s(kSeed + 5);
  for (int trial = 0; trial < 100; ++trial) {
    const Element x = s.nonzero_element(kW, -5, 5);
    if (!rigidity_check(kW, x, {-25, 25}).rigid()) v.fail("witt x = " + to_string(x));
    const Element y = s.nonzero_element(kWp, 1, 5);
    if (!rigidity_check(kWp, y, {1, 25}).rigid()) v.fail("wplus x = " + to_string(y));
  }
  return v;
}

Verdict centralizers() {
  Verdict v;
  auto check = [&](AlgebraKind kind, Index k, IndexWindow w) {
    const Subspace c = centralizer(kind, Element::basis(kind, k), w);
    // Brute force: one constraint row per output grade of [a, e_k].
    std::vector<SparseVector> rows;
    for (Index g = w.lo + k; g <= w.hi + k; ++g) {
      const Index i = g - k;
      if (i == k) continue;
      rows.push_back(SparseVector::unit(i, Rational(k - i)));
    }
    const Subspace brute = kernel_basis(rows, w);
    const std::vector<SparseVector> ek{SparseVector::unit(k)};
    if (c.dim() != 1 || c != brute || c != Subspace::span(w, ek)) {
      v.fail(std::string(algebra_name(kind)) + " e_" + std::to_string(k) + ": dim " + std::to_string(c.dim()));
    }
  };
  for (Index k = -10; k <= 10; ++k) check(kW, k, {-10, 10});
  for (Index k = 0; k <= 15; ++k) check(kWe, k, {0, 15});
  return v;
}

Verdict counterexample() {
  Verdict v;
  const Element x = parse_element(kT, "e_1 + e_2");
  const Element y = parse_element(kT, "-e_1 + e_2");
  const auto rep = additivity_violation(thin_delta, x, y);
  if (!rep.delta_sum.is_zero()) v.fail("delta(x+y) = " + to_string(rep.delta_sum));
  if (rep.delta_x + rep.delta_y != Element::basis(kT, 2, Rational(2))) v.fail("delta(x)+delta(y) != 2*e_2");
  if (!rep.violated()) v.fail("additivity not violated");

  std::ostringstream out, err;
  const int code = cli::run({"two-local", "additivity"}, out, err);
  if (code != 0 || out.str().find("delta(x+y) = 0\n") == std::string::npos ||
      out.str().find("delta(x)+delta(y) = 2*e_2\n") == std::string::npos ||
      out.str().find("violated = true\n") == std::string::npos) {
    v.fail("CLI additivity report");
  }

  Sampler s(kSeed + 7);
  int passed = 0;
  constexpr int kPairs = 1000;
  for (int trial = 0; trial < kPairs; ++trial) {
    Element a = s.element(kT, 1, 12, 0.4, 3, 3);
    Element b = s.element(kT, 1, 12, 0.4, 3, 3);
    if (s.coin(0.3)) a = a - Element::basis(kT, 1, a.coefficient(1));
    if (s.coin(0.3)) b = b - Element::basis(kT, 1, b.coefficient(1));
    const auto cert = thin_witness(a, b);
    const auto& d = std::get<LinearMapTable>(cert.witness);
    if (verify_pair(thin_delta, cert).pass && leibniz_check(d, d.truncation().hi).pass) ++passed;
  }
  if (passed != kPairs) v.fail(std::to_string(passed) + "/" + std::to_string(kPairs) + " pairs certified");
  return v;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict golden(const std::string& name, const std::vector<std::string>& args) {
  Verdict v;
  const std::filesystem::path dir(WITTLAB_GOLDEN_DIR);
  for (const auto& [fmt, ext] : {std::pair{"text", ".txt"}, std::pair{"json", ".json"}}) {
    std::vector<std::string> full{"--format", fmt};
    full.insert(full.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code = cli::run(full, out, err);
    if (code != 0) v.fail(name + " (" + fmt + "): exit " + std::to_string(code));
    else if (out.str() != slurp(dir / (name + ext))) v.fail(name + " (" + fmt + ") differs from golden");
  }
  return v;
}

Verdict inconsistency_detection() {
  Verdict v;
  const auto r = extend_from_generators(kWp, Element::basis(kWp, 2), Element(kWp), 10);
  if (!std::holds_alternative<InconsistencyReport>(r)) {
    v.fail("extension succeeded");
    return v;
  }
  const auto& rep = std::get<InconsistencyReport>(r);
  if (rep.i != 2 || rep.j != 3 || rep.residual != Element::basis(kWp, 6, Rational(4, 3))) {
    v.fail("unexpected report at [e_" + std::to_string(rep.i) + ", e_" + std::to_string(rep.j) + "]");
  }
  const Verdict g = golden("extend_inconsistent", {"extend", "--algebra", "wplus", "--e1", "e_2", "--e2", "0",
                                                    "--truncation", "10"});
  if (!g.ok) v.fail(g.detail);
  return v;
}

Verdict cli_goldens() {
  Verdict v;
  for (const auto& g : {golden("bracket_witt", {"bracket", "--algebra", "witt", "e_2", "e_3"}),
                        golden("additivity", {"two-local", "additivity"}),
                        golden("centralizer_witt_e0",
                               {"centralizer", "--algebra", "witt", "--element", "e_0", "--window", "-10:10"})}) {
    if (!g.ok) v.fail(g.detail);
  }
  return v;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "structure sanity: Jacobi on all four algebras", 10, structure_sanity);
  ok &= report(2, "inner round-trip on W+ + <e_0>", 5, inner_round_trip);
  ok &= report(3, "derivation-space dimensions", 30, derivation_dimensions);
  ok &= report(4, "thin closed form equals derivation space", 0, thin_formula_equivalence);
  ok &= report(5, "rigidity", 10, rigidity);
  ok &= report(6, "centralizers of basis vectors", 0, centralizers);
  ok &= report(7, "thin 2-local counterexample", 10, counterexample);
  ok &= report(8, "inconsistency detection", 0, inconsistency_detection);
  ok &= report(9, "CLI golden suite", 0, cli_goldens);
  return ok ? 0 : 1;
}
