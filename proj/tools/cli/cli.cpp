#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "wittlab/wittlab.hpp"

namespace wittlab::cli {
namespace {

enum class Format { Text, Json };

struct Options {
  std::string format = "text";
  std::string algebra;
  std::string window;
  std::string map_file;
  std::string baseline_file;
  std::string pairs_file;
  std::string element;
  std::string e1;
  std::string e2;
  std::vector<std::string> operands;
  Index depth = 0;
  Index truncation = 0;
  Index support = 0;
  std::optional<Index> der_depth;
};

// Options whose value may itself start with '-' (windows like -10:10,
// elements like -e_1 + e_2). They are glued to their value before CLI11 sees
// them so the value is never mistaken for a flag.
const std::set<std::string>& value_options() {
  static const std::set<std::string> names{
      "--algebra", "--window", "--map",     "--depth",   "--e1",     "--e2",
      "--truncation", "--support", "--element", "--baseline", "--pairs", "--format"};
  return names;
}

std::vector<std::string> glue_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (value_options().contains(args[k]) && k + 1 < args.size()) {
      out.push_back(args[k] + "=" + args[k + 1]);
      ++k;
    } else {
      out.push_back(args[k]);
    }
  }
  return out;
}

IndexWindow parse_window(const std::string& text) {
  const auto colon = text.find(':', text.empty() ? 0 : 1);
  auto as_index = [&](const std::string& s) -> Index {
    std::size_t used = 0;
    try {
      const long long v = std::stoll(s, &used);
      if (used == s.size()) return static_cast<Index>(v);
    } catch (const std::exception&) {
    }
    throw ParseError("invalid window '" + text + "' (expected a:b)");
  };
  if (colon == std::string::npos) throw ParseError("invalid window '" + text + "' (expected a:b)");
  const IndexWindow w{as_index(text.substr(0, colon)), as_index(text.substr(colon + 1))};
  if (w.empty()) throw ParseError("empty window '" + text + "'");
  return w;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json window_json(const IndexWindow& w) { return Json{{"min", w.lo}, {"max", w.hi}}; }

std::string subspace_text(const Subspace& s) {
  std::string out = "dim=" + std::to_string(s.dim()) + "; basis: ";
  if (s.is_zero()) return out + "(none)";
  for (std::size_t k = 0; k < s.dim(); ++k) {
    if (k > 0) out += ", ";
    out += to_string(s.basis()[k]);
  }
  return out;
}

Json subspace_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.basis()) basis.push_back(to_string(v));
  return Json{{"dim", s.dim()}, {"basis", std::move(basis)}};
}

void print_table_text(std::ostream& out, const LinearMapTable& d) {
  out << "algebra: " << algebra_name(d.kind()) << "\n";
  out << "truncation: " << d.truncation().lo << ":" << d.truncation().hi << "\n";
  for (const auto& [k, img] : d.images()) out << "D(e_" << k << ") = " << img << "\n";
}

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {
    format_ = opt.format == "json" ? Format::Json : Format::Text;
  }

  [[nodiscard]] AlgebraKind algebra() const { return parse_algebra(opt_.algebra); }

  void emit(const Json& j) { out_ << j.dump(2) << "\n"; }

  void bracket_cmd() {
    const AlgebraKind kind = algebra();
    if (opt_.operands.size() != 2) throw PreconditionError("bracket needs exactly two elements");
    const Element x = parse_element(kind, opt_.operands[0]);
    const Element y = parse_element(kind, opt_.operands[1]);
    const Element z = bracket(x, y);
    if (format_ == Format::Json) {
      emit(Json{{"algebra", algebra_name(kind)},
                {"x", to_string(x)},
                {"y", to_string(y)},
                {"bracket", to_string(z)}});
    } else {
      out_ << z << "\n";
    }
  }

  void jacobi_cmd() {
    const AlgebraKind kind = algebra();
    const IndexWindow w = parse_window(opt_.window);
    const JacobiResult r = jacobi_check(kind, w);
    if (format_ == Format::Json) {
      Json j{{"algebra", algebra_name(kind)}, {"window", window_json(w)}, {"pass", r.pass}};
      if (!r.pass) {
        j["triple"] = Json::array({(*r.triple)[0], (*r.triple)[1], (*r.triple)[2]});
        j["residual"] = to_string(r.residual);
      }
      emit(j);
    } else if (r.pass) {
      out_ << "jacobi: pass\n";
    } else {
      out_ << "jacobi: fail at (" << (*r.triple)[0] << ", " << (*r.triple)[1] << ", "
           << (*r.triple)[2] << "); residual = " << to_string(r.residual) << "\n";
    }
  }

  LinearMapTable load_map(const std::string& path) {
    LinearMapTable d = table_from_json(read_file(path));
    if (d.kind() != algebra()) {
      throw PreconditionError("map file describes " + std::string(algebra_name(d.kind())) +
                              ", not " + opt_.algebra);
    }
    return d;
  }

  void leibniz_cmd() {
    const LinearMapTable d = load_map(opt_.map_file);
    const LeibnizResult r = leibniz_check(d, opt_.depth);
    if (format_ == Format::Json) {
      Json j{{"algebra", algebra_name(d.kind())}, {"depth", opt_.depth}, {"pass", r.pass}};
      if (!r.pass) {
        j["pair"] = Json::array({r.pair->first, r.pair->second});
        j["residual"] = to_string(r.residual);
      }
      emit(j);
    } else if (r.pass) {
      out_ << "leibniz: pass\n";
    } else {
      out_ << "leibniz: fail at (" << r.pair->first << ", " << r.pair->second
           << "); residual = " << r.residual << "\n";
    }
  }

  void extend_cmd() {
    const AlgebraKind kind = algebra();
    const ExtensionResult r = extend_from_generators(kind, parse_element(kind, opt_.e1),
                                                     parse_element(kind, opt_.e2), opt_.truncation);
    if (const auto* bad = std::get_if<InconsistencyReport>(&r)) {
      if (format_ == Format::Json) {
        emit(Json{{"algebra", algebra_name(kind)},
                  {"inconsistent", {{"relation", Json::array({bad->i, bad->j})},
                                    {"residual", to_string(bad->residual)}}}});
      } else {
        out_ << "inconsistent at [e_" << bad->i << ", e_" << bad->j
             << "]; residual = " << bad->residual << "\n";
      }
      return;
    }
    const auto& table = std::get<LinearMapTable>(r);
    if (format_ == Format::Json) {
      emit(to_json(table));
    } else {
      print_table_text(out_, table);
    }
  }

  void der_basis_cmd() {
    const AlgebraKind kind = algebra();
    const DerivationSpace ds = derivation_space_basis(kind, opt_.support, opt_.der_depth);
    const Index width = static_cast<Index>(ds.coordinates.size());
    auto dense = [&](const SparseVector& v) {
      std::vector<std::string> row;
      for (Index c = 0; c < width; ++c) row.push_back(v.get(c).to_string());
      return row;
    };
    if (format_ == Format::Json) {
      Json basis = Json::array();
      for (const auto& v : ds.space.basis()) basis.push_back(dense(v));
      emit(Json{{"algebra", algebra_name(kind)},
                {"support", ds.support},
                {"depth", ds.depth},
                {"coordinates", ds.coordinates},
                {"dim", ds.space.dim()},
                {"basis", std::move(basis)}});
      return;
    }
    out_ << "algebra: " << algebra_name(kind) << "\n";
    out_ << "support: " << ds.support << "\n";
    out_ << "depth: " << ds.depth << "\n";
    out_ << "coordinates:";
    for (const auto& c : ds.coordinates) out_ << " " << c;
    out_ << "\ndim=" << ds.space.dim() << "\n";
    out_ << "basis:\n";
    for (const auto& v : ds.space.basis()) {
      const auto row = dense(v);
      out_ << "  (";
      for (std::size_t k = 0; k < row.size(); ++k) out_ << (k ? ", " : "") << row[k];
      out_ << ")\n";
    }
  }

  void recover_inner_cmd() {
    const LinearMapTable d = load_map(opt_.map_file);
    std::optional<Element> a;
    std::string failure;
    try {
      if (d.kind() == AlgebraKind::PositiveWitt) {
        a = recover_inner_wplus(d);
      } else if (d.kind() == AlgebraKind::Witt) {
        a = recover_inner_witt(d);
      } else {
        throw PreconditionError("recover-inner supports witt and wplus maps");
      }
    } catch (const NotADerivation& e) {
      failure = e.what();
    }
    if (format_ == Format::Json) {
      Json j{{"algebra", algebra_name(d.kind())}};
      if (a) {
        j["inner"] = to_string(*a);
        j["inner_algebra"] = algebra_name(a->kind());
      } else {
        j["not_a_derivation"] = failure;
      }
      emit(j);
    } else if (a) {
      out_ << "a = " << *a << "\n";
    } else {
      out_ << "not a derivation: " << failure << "\n";
    }
  }

  void centralizer_cmd() {
    const AlgebraKind kind = algebra();
    const IndexWindow w = parse_window(opt_.window);
    const Element t = parse_element(witness_algebra(kind), opt_.element);
    const Subspace c = centralizer(kind, t, w);
    if (format_ == Format::Json) {
      Json j{{"algebra", algebra_name(kind)}, {"element", to_string(t)}, {"window", window_json(w)}};
      j.update(subspace_json(c));
      emit(j);
    } else {
      out_ << subspace_text(c) << "\n";
    }
  }

  static Json trace_json(const RigidityTrace& t) {
    Json forced = Json::array();
    for (std::size_t k = 0; k < t.probes.size(); ++k) {
      Json f{{"probe", t.probes[k]}};
      f.update(subspace_json(t.forced[k]));
      forced.push_back(std::move(f));
    }
    return Json{{"target", to_string(t.target)},
                {"probes", t.probes},
                {"forced", std::move(forced)},
                {"intersection", subspace_json(t.intersection)},
                {"rigid", t.rigid()}};
  }

  void trace_text(const RigidityTrace& t, const std::string& indent = "") {
    out_ << indent << "target: " << t.target << "\n";
    out_ << indent << "probes: ";
    for (std::size_t k = 0; k < t.probes.size(); ++k) out_ << (k ? ", " : "") << "e_" << t.probes[k];
    out_ << "\n";
    for (std::size_t k = 0; k < t.probes.size(); ++k) {
      out_ << indent << "forced[e_" << t.probes[k] << "]: " << subspace_text(t.forced[k]) << "\n";
    }
    out_ << indent << "intersection: " << subspace_text(t.intersection) << "\n";
    out_ << indent << "rigid: " << (t.rigid() ? "true" : "false") << "\n";
  }

  void rigidity_cmd() {
    const AlgebraKind kind = algebra();
    const IndexWindow w = parse_window(opt_.window);
    const Element x = parse_element(kind, opt_.element);
    if (opt_.baseline_file.empty()) {
      const RigidityTrace t = rigidity_check(kind, x, w);
      if (format_ == Format::Json) {
        Json j{{"algebra", algebra_name(kind)}, {"window", window_json(w)}};
        j.update(trace_json(t));
        emit(j);
      } else {
        trace_text(t);
      }
      return;
    }
    // Without an explicit 2-local map on the command line the baseline plays
    // delta itself; the report shows the value rigidity forces at x.
    const LinearMapTable baseline = load_map(opt_.baseline_file);
    const DeltaMap delta = [&baseline](const Element& e) { return baseline.apply(e); };
    const BaselineRigidity r = rigidity_with_baseline(kind, delta, baseline, x, w);
    if (format_ == Format::Json) {
      Json j{{"algebra", algebra_name(kind)}, {"window", window_json(w)}};
      j.update(trace_json(r.trace));
      if (r.probe_trace) j["probe_trace"] = trace_json(*r.probe_trace);
      j["predicted"] = to_string(r.predicted);
      j["remainder"] = to_string(r.remainder);
      j["consistent"] = r.consistent();
      emit(j);
      return;
    }
    trace_text(r.trace);
    if (r.probe_trace) {
      out_ << "probe basis rigidity:\n";
      trace_text(*r.probe_trace, "  ");
    }
    out_ << "predicted: delta(x) = baseline(x) = " << r.predicted << "\n";
    out_ << "remainder: " << r.remainder << "\n";
    out_ << "consistent: " << (r.consistent() ? "true" : "false") << "\n";
  }

  void two_local_verify_cmd() {
    const PairsFile pf = pairs_from_json(read_file(opt_.pairs_file));
    if (pf.kind != AlgebraKind::Thin) throw PreconditionError("two-local verify expects thin pairs");
    std::size_t passed = 0;
    Json results = Json::array();
    std::size_t k = 0;
    for (const auto& [x, y] : pf.pairs) {
      const WitnessCertificate cert = thin_witness(x, y);
      const PairVerdict v = verify_pair(thin_delta, cert);
      passed += v.pass ? 1 : 0;
      const auto& table = std::get<LinearMapTable>(cert.witness);
      if (format_ == Format::Json) {
        Json r{{"x", to_string(x)},       {"y", to_string(y)}, {"case", *cert.thin_case},
               {"swapped", cert.swapped}, {"witness", to_json(table)}, {"pass", v.pass}};
        if (!v.pass) {
          r["residual_x"] = to_string(v.residual_x);
          r["residual_y"] = to_string(v.residual_y);
        }
        results.push_back(std::move(r));
      } else {
        out_ << "[" << k << "] x = " << x << "; y = " << y << "; case = " << *cert.thin_case
             << (cert.swapped ? " (swapped)" : "") << "; witness: D(e_1) = " << table.image(1)
             << ", D(e_2) = " << table.image(2) << "; pass = " << (v.pass ? "true" : "false")
             << "\n";
      }
      ++k;
    }
    if (format_ == Format::Json) {
      emit(Json{{"algebra", "thin"},
                {"results", std::move(results)},
                {"passed", passed},
                {"total", pf.pairs.size()}});
    } else {
      out_ << "verified " << passed << "/" << pf.pairs.size() << " pairs\n";
    }
  }

  void two_local_additivity_cmd() {
    const AlgebraKind kind = AlgebraKind::Thin;
    const Element x = parse_element(kind, "e_1 + e_2");
    const Element y = parse_element(kind, "-e_1 + e_2");
    const AdditivityReport r = additivity_violation(thin_delta, x, y);
    const Element sum = r.delta_x + r.delta_y;
    if (format_ == Format::Json) {
      emit(Json{{"algebra", "thin"},
                {"x", to_string(x)},
                {"y", to_string(y)},
                {"delta_x", to_string(r.delta_x)},
                {"delta_y", to_string(r.delta_y)},
                {"delta_x_plus_y", to_string(r.delta_sum)},
                {"delta_x_plus_delta_y", to_string(sum)},
                {"residual", to_string(r.residual)},
                {"violated", r.violated()}});
      return;
    }
    out_ << "x = " << x << "\n";
    out_ << "y = " << y << "\n";
    out_ << "delta(x) = " << r.delta_x << "\n";
    out_ << "delta(y) = " << r.delta_y << "\n";
    out_ << "delta(x+y) = " << r.delta_sum << "\n";
    out_ << "delta(x)+delta(y) = " << sum << "\n";
    out_ << "residual = " << r.residual << "\n";
    out_ << "violated = " << (r.violated() ? "true" : "false") << "\n";
  }

 private:
  const Options& opt_;
  std::ostream& out_;
  Format format_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact computations on the Witt, positive Witt and thin Lie algebras", "wittlab"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.fallthrough();

  std::function<void(Runner&)> action;
  auto sub = [&](const std::string& name, const std::string& desc, void (Runner::*fn)()) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    s->callback([&action, fn] { action = [fn](Runner& r) { (r.*fn)(); }; });
    return s;
  };
  auto algebra_opt = [&](CLI::App* s) {
    s->add_option("--algebra", opt.algebra, "witt, wplus, wplus_ext or thin")->required();
  };

  auto* br = sub("bracket", "Bracket of two elements", &Runner::bracket_cmd);
  algebra_opt(br);
  br->add_option("elements", opt.operands, "x y")->expected(2)->required();

  auto* jac = sub("jacobi", "Exhaustive Jacobi check over a window", &Runner::jacobi_cmd);
  algebra_opt(jac);
  jac->add_option("--window", opt.window, "a:b")->required();

  auto* lb = sub("leibniz", "Leibniz check of a map table", &Runner::leibniz_cmd);
  algebra_opt(lb);
  lb->add_option("--map", opt.map_file, "map JSON file")->required();
  lb->add_option("--depth", opt.depth, "degree bound")->required();

  auto* ext = sub("extend", "Extend generator images to a map table", &Runner::extend_cmd);
  algebra_opt(ext);
  ext->add_option("--e1", opt.e1, "image of e_1")->required();
  ext->add_option("--e2", opt.e2, "image of e_2")->required();
  ext->add_option("--truncation", opt.truncation, "largest basis index N")->required();

  auto* db = sub("der-basis", "Basis of the derivation space", &Runner::der_basis_cmd);
  algebra_opt(db);
  db->add_option("--support", opt.support, "support bound n")->required();
  db->add_option("--depth", opt.der_depth, "consistency depth M (default 2n+3)");

  auto* ri = sub("recover-inner", "Inner element of a derivation", &Runner::recover_inner_cmd);
  algebra_opt(ri);
  ri->add_option("--map", opt.map_file, "map JSON file")->required();

  auto* ce = sub("centralizer", "Centralizer of an element over a window", &Runner::centralizer_cmd);
  algebra_opt(ce);
  ce->add_option("--element", opt.element, "element")->required();
  ce->add_option("--window", opt.window, "a:b")->required();

  auto* rg = sub("rigidity", "Rigidity trace of a 2-local derivation at an element",
                 &Runner::rigidity_cmd);
  algebra_opt(rg);
  rg->add_option("--element", opt.element, "element")->required();
  rg->add_option("--window", opt.window, "a:b")->required();
  rg->add_option("--baseline", opt.baseline_file, "derivation agreeing with delta on the probe pair");

  CLI::App* tl = app.add_subcommand("two-local", "Thin-algebra 2-local derivation");
  tl->require_subcommand(1);
  tl->fallthrough();
  auto* tv = tl->add_subcommand("verify", "Certify pairs from a JSON file");
  tv->fallthrough();
  tv->add_option("--pairs", opt.pairs_file, "pairs JSON file")->required();
  tv->callback([&action] { action = [](Runner& r) { r.two_local_verify_cmd(); }; });
  auto* ta = tl->add_subcommand("additivity", "Show delta is not additive");
  ta->fallthrough();
  ta->callback([&action] { action = [](Runner& r) { r.two_local_additivity_cmd(); }; });

  std::vector<std::string> argv = glue_values(args);
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  Runner runner(opt, out);
  try {
    action(runner);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const NotADerivation& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  }
  return kOk;
}

}  // namespace wittlab::cli
