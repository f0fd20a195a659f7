#include "cyqw/cli.hpp"

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "cyqw/cycheck.hpp"
#include "cyqw/dimer.hpp"
#include "cyqw/json_io.hpp"
#include "cyqw/mckay.hpp"
#include "cyqw/qp.hpp"
#include "cyqw/repthy.hpp"

namespace cyqw {

std::string emit_dot(const Quiver& q) {
  auto quote = [](const std::string& s) {
    std::string o = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') o += '\\';
      o += c;
    }
    return o + "\"";
  };
  std::ostringstream os;
  os << "digraph {\n";
  for (const auto& v : q.vertices()) os << "  " << quote(v) << ";\n";
  for (const auto& a : q.arrows())
    os << "  " << quote(q.vertex_name(a.source)) << " -> " << quote(q.vertex_name(a.target)) << " [label=" << quote(std::to_string(a.degree))
       << ", id=" << quote(a.name) << "];\n";
  os << "}\n";
  return os.str();
}

namespace {

struct Input {
  std::string text;
  std::string origin;
};

Input read_input(const std::string& path) {
  Input in{"", path};
  if (path == "-") {
    in.text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    in.origin = "<stdin>";
    return in;
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "'");
  in.text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  return in;
}

std::string digest(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ','))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<int> split_ints(const std::string& s, const char* what) {
  std::vector<int> out;
  for (const auto& t : split(s)) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(t, &pos);
      if (pos != t.size()) throw std::invalid_argument(t);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError(std::string(what) + ": '" + t + "' is not an integer");
    }
  }
  return out;
}

int resolve_cap(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("CYQW_CAP")) {
    auto v = split_ints(env, "CYQW_CAP");
    if (v.size() != 1 || v[0] < 1) throw InputError("CYQW_CAP must be a positive integer");
    return v[0];
  }
  return kDefaultCap;
}

std::string tri(Finiteness::Answer a) {
  switch (a) {
    case Finiteness::Answer::yes: return "yes";
    case Finiteness::Answer::no: return "no";
    default: return "unknown";
  }
}

Json finiteness_json(const Finiteness& f) {
  Json j{{"answer", tri(f.answer)}, {"cap", f.cap}};
  if (f.answer == Finiteness::Answer::yes) j["dimension"] = f.dimension.get_str();
  return j;
}

Json hypotheses_json(const Quiver& q, const HypothesisReport& r) {
  Json j;
  j["A3"] = finiteness_json(r.a3);
  j["A4_on_algebra"] = to_string(r.a4_on_b);
  j["A4_on_opposite"] = to_string(r.a4_on_opposite);
  Json src = Json::object(), snk = Json::object();
  for (const auto& [v, b] : r.source_on_b) src[q.vertex_name(v)] = b;
  for (const auto& [v, b] : r.source_on_opposite) snk[q.vertex_name(v)] = b;
  j["source_on_algebra"] = src;
  j["source_on_opposite"] = snk;
  j["passes_on_algebra"] = r.passes_on_b();
  j["passes_on_opposite"] = r.passes_on_opposite();
  j["passes"] = r.passes();
  return j;
}

Json complex_json(const BimoduleComplex& p) {
  const Quiver& q = p.algebra().quiver();
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json gens = Json::array();
    for (const auto& g : t)
      gens.push_back(Json{{"label", g.label}, {"left", q.vertex_name(g.left)}, {"right", q.vertex_name(g.right)}, {"twist", g.twist}});
    terms.push_back(gens);
  }
  return Json{{"ranks", p.ranks()}, {"terms", terms}};
}

Json counts_json(const std::vector<std::size_t>& v) { return Json(v); }

Json complex_report_json(const ComplexReport& r, const DualityReport& dual) {
  Json pieces = Json::array();
  for (const auto& pc : r.pieces)
    pieces.push_back(Json{{"degree", pc.degree},
                          {"dims", counts_json(pc.dims)},
                          {"ranks", counts_json(pc.ranks)},
                          {"homology", counts_json(pc.homology)},
                          {"algebra_dim", pc.algebra_dim.get_str()},
                          {"ok", pc.ok}});
  Json j{{"squares_to_zero", r.squares_to_zero}, {"exact", r.exact}, {"pieces", pieces}, {"self_dual", dual.ok}};
  if (r.offending_entry) j["offending_entry"] = *r.offending_entry;
  if (!dual.mismatches.empty()) j["duality_mismatches"] = dual.mismatches;
  return j;
}

struct Outcome {
  Json result;
  bool passed = true;
  std::string raw;  // printed instead of the report when set
};

PresentedGradedAlgebra mckay_emit(const McKayInput& in, const std::string& which) {
  PresentedGradedAlgebra b = mckay_algebra(in);
  if (which == "B") return b;
  if (which == "A") return degree_zero_part_mckay(b);
  if (which == "Bbar") return stable_algebra(b);
  if (which == "Abar") return degree_zero_part_mckay(stable_algebra(b));
  throw InputError("unknown --emit value '" + which + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded Calabi-Yau algebras: construction and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string seed;
  app.add_option("--seed", seed, "seed for randomized checks");

  std::string file;
  int cap = 0;
  auto add_file = [&](CLI::App* sub) { sub->add_option("input", file, "input JSON document ('-' for stdin)")->required(); };
  auto add_cap = [&](CLI::App* sub) { sub->add_option("--cap", cap, "obstruction length cap"); };

  auto* mk = app.add_subcommand("mckay", "McKay quiver algebras and their Koszul resolution");
  int mk_n = 0;
  std::string mk_weights, mk_emit = "B", mk_format = "json";
  mk->add_option("--n", mk_n)->required();
  mk->add_option("--weights", mk_weights)->required();
  mk->add_option("--emit", mk_emit);
  mk->add_option("--format", mk_format);

  auto* gbs = app.add_subcommand("gbasis", "Groebner basis, normal words and dimensions");
  add_file(gbs);
  add_cap(gbs);
  bool emit_basis = false;
  int hilbert = 5;
  std::string corner;
  gbs->add_flag("--emit-basis", emit_basis);
  gbs->add_option("--hilbert", hilbert);
  gbs->add_option("--corner", corner);

  auto* jac = app.add_subcommand("jacobian", "Jacobian algebra of a quiver with potential");
  add_file(jac);
  add_cap(jac);
  std::string jac_cut, jac_hyp, jac_format = "json";
  bool jac_truncate = false;
  jac->add_option("--cut", jac_cut);
  jac->add_flag("--truncate", jac_truncate);
  jac->add_option("--check-hypotheses", jac_hyp);
  jac->add_option("--format", jac_format);

  auto* dm = app.add_subcommand("dimer", "Dimer models on the torus");
  add_file(dm);
  add_cap(dm);
  bool dm_dual = false, dm_match = false, dm_cons = false, dm_63 = false, dm_flip = false;
  std::string dm_cut, dm_idem;
  dm->add_flag("--dual", dm_dual);
  dm->add_flag("--matchings", dm_match);
  dm->add_flag("--consistency", dm_cons);
  dm->add_flag("--check63", dm_63);
  dm->add_flag("--flip", dm_flip);
  dm->add_option("--cut", dm_cut);
  dm->add_option("--idem", dm_idem);

  auto* cy = app.add_subcommand("cycheck", "Verify a bimodule resolution");
  add_cap(cy);
  std::string cy_source, cy_weights, cy_qp, cy_dimer, cy_cut;
  int cy_n = 0, degcap = 4;
  bool cy_flip = false;
  cy->add_option("--source", cy_source)->required();
  cy->add_option("--n", cy_n);
  cy->add_option("--weights", cy_weights);
  cy->add_option("--qp", cy_qp);
  cy->add_option("--dimer", cy_dimer);
  cy->add_option("--cut", cy_cut);
  cy->add_flag("--flip", cy_flip);
  cy->add_option("--degcap", degcap);

  auto* cox = app.add_subcommand("coxeter", "Cartan matrix and Coxeter polynomial");
  add_file(cox);
  add_cap(cox);
  auto* gld = app.add_subcommand("gldim", "Global dimension");
  add_file(gld);
  add_cap(gld);
  int rep_n = 1, rep_max = 3;
  auto* pre = app.add_subcommand("preproj", "Graded dimensions of the higher preprojective algebra");
  add_file(pre);
  add_cap(pre);
  pre->add_option("--n", rep_n);
  pre->add_option("--max", rep_max);
  auto* rin = app.add_subcommand("repinf", "Inverse Serre iterates of the algebra");
  add_file(rin);
  add_cap(rin);
  rin->add_option("--n", rep_n);
  rin->add_option("--iters", rep_max);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  auto start = std::chrono::steady_clock::now();
  Json report;
  report["command"] = args;
  Outcome oc;
  try {
    cap = resolve_cap(cap);
    Input input;
    if (!file.empty()) {
      input = read_input(file);
      report["input_digest"] = digest(input.text);
    }
    auto doc = [&]() { return parse_json_text(input.text, input.origin); };
    auto model_of = [&]() { return FiniteAlgebraModel(algebra_from_json(doc()), cap); };

    if (mk->parsed()) {
      McKayInput in{mk_n, split_ints(mk_weights, "--weights")};
      if (mk_emit == "koszul") {
        if (mk_format != "json") throw InputError("the Koszul complex is only emitted as JSON");
        oc.result = complex_json(koszul_complex(in));
      } else {
        PresentedGradedAlgebra alg = mckay_emit(in, mk_emit);
        if (mk_format == "dot")
          oc.raw = emit_dot(alg.quiver());
        else if (mk_format == "json")
          oc.raw = algebra_to_json(alg).dump(2) + "\n";
        else
          throw InputError("unknown --format '" + mk_format + "'");
      }
    } else if (gbs->parsed()) {
      PresentedGradedAlgebra alg = algebra_from_json(doc());
      GroebnerBasis gb = complete_groebner(alg, cap);
      Json r;
      r["status"] = gb.complete() ? "complete" : "truncated";
      r["cap"] = cap;
      r["size"] = gb.elements().size();
      if (gb.unresolved_degree()) r["unresolved_degree"] = *gb.unresolved_degree();
      if (emit_basis) {
        Json els = Json::array();
        for (const auto& e : gb.elements()) els.push_back(element_to_json(alg.quiver(), e));
        r["basis"] = els;
      }
      std::optional<Corner> cr;
      if (!corner.empty()) {
        auto ids = split(corner);
        if (ids.size() != 2) throw InputError("--corner expects two vertex ids i,j");
        cr = Corner{alg.quiver().vertex_index(ids[0]), alg.quiver().vertex_index(ids[1])};
        r["corner"] = ids;
      }
      Json dims = Json::array();
      for (int g = 0; g <= hilbert; ++g) {
        auto d = graded_dimension(gb, cr, g);
        dims.push_back(d ? Json(d->get_str()) : Json(nullptr));
      }
      r["dims"] = dims;
      r["finite"] = finiteness_json(is_finite_dimensional(gb));
      if (!cr) {
        HilbertSeries hs = hilbert_series(gb, hilbert);
        if (hs.rational)
          r["hilbert_rational"] = Json{{"numerator", hs.rational->first.to_string()}, {"denominator", hs.rational->second.to_string()}};
      }
      oc.result = r;
    } else if (jac->parsed()) {
      QuiverWithPotential qp = qp_from_json(doc());
      if (!jac_cut.empty()) qp.cut = arrow_set_from_names(qp.quiver, split(jac_cut));
      Json r;
      if (qp.cut) {
        CutCheck cc = is_cut(qp.potential, *qp.cut);
        r["is_cut"] = cc.ok;
        if (!cc.ok) oc.passed = false;
      }
      PresentedGradedAlgebra alg;
      if (jac_truncate) {
        if (!qp.cut) throw InputError("--truncate needs a cut");
        alg = truncated_algebra(qp.quiver, qp.potential, *qp.cut);
      } else {
        alg = jacobian_algebra(qp.quiver, qp.potential, qp.cut);
      }
      if (!jac_hyp.empty()) {
        PresentedGradedAlgebra b = jacobian_algebra(qp.quiver, qp.potential, qp.cut);
        HypothesisReport h = check_main_hypotheses(b, vertex_set_from_ids(b.quiver(), split(jac_hyp)), cap);
        r["hypotheses"] = hypotheses_json(b.quiver(), h);
        if (!h.passes()) oc.passed = false;
      }
      if (jac_format == "dot") {
        oc.raw = emit_dot(alg.quiver());
      } else {
        r["algebra"] = algebra_to_json(alg);
      }
      oc.result = r;
    } else if (dm->parsed()) {
      DimerGraph g = dimer_from_json(doc());
      DimerValidation val = validate_dimer(g);
      Json r;
      r["validation"] = Json{{"ok", val.ok()}, {"violations", val.violations}};
      if (!val.ok()) {
        report["result"] = r;
        report["passed"] = false;
        out << report.dump(2) << "\n";
        err << "error: invalid dimer: " << val.violations.front() << "\n";
        return 2;
      }
      QuiverWithPotential qp = dual_qp(g, dm_flip);
      if (dm_dual) r["dual"] = qp_to_json(qp);
      if (dm_match) {
        auto ms = perfect_matchings(g);
        Json list = Json::array();
        bool all_cuts = true;
        for (const auto& m : ms) {
          Json ids = Json::array();
          for (int e : m) ids.push_back(g.edges[e].id);
          list.push_back(ids);
          all_cuts = all_cuts && is_cut(qp.potential, matching_cut(g, qp, m)).ok;
        }
        r["matchings"] = Json{{"count", ms.size()}, {"all_cuts", all_cuts}, {"list", list}};
        if (!all_cuts) oc.passed = false;
      }
      if (dm_cons) {
        ChargeResult ch = consistency_charge(qp);
        Json c{{"feasible", ch.feasible}};
        if (ch.feasible) {
          Json rr = Json::object();
          for (std::size_t a = 0; a < ch.charge.size(); ++a) rr[qp.quiver.arrow(a).name] = to_string(ch.charge[a]);
          c["margin"] = to_string(ch.margin);
          c["charge"] = rr;
          c["verified"] = verify_charge(qp, ch.charge);
        }
        r["consistency"] = c;
        if (!ch.feasible) oc.passed = false;
      }
      if (dm_63) {
        if (dm_cut.empty() || dm_idem.empty()) throw InputError("--check63 needs --cut and --idem");
        Theorem63Report t = check_theorem_6_3(g, split(dm_cut), split(dm_idem), cap, dm_flip);
        Json tj{{"is_cut", t.is_cut},  {"degree_zero_finite", finiteness_json(t.degree_zero)},
                {"hypotheses", hypotheses_json(qp.quiver, t.hypotheses)}, {"passes", t.passes()}};
        if (t.source_on_b) tj["vertex_is_source"] = *t.source_on_b;
        if (t.source_on_opposite) tj["vertex_is_sink"] = *t.source_on_opposite;
        r["check63"] = tj;
        if (!t.passes()) oc.passed = false;
      }
      oc.result = r;
    } else if (cy->parsed()) {
      BimoduleComplex p;
      int d = 3;
      Json r;
      if (cy_source == "mckay") {
        McKayInput in{cy_n, split_ints(cy_weights, "--weights")};
        p = koszul_complex(in);
        d = static_cast<int>(in.a.size());
      } else if (cy_source == "dimer") {
        QuiverWithPotential qp;
        if (!cy_qp.empty()) {
          Input in = read_input(cy_qp);
          report["input_digest"] = digest(in.text);
          qp = qp_from_json(parse_json_text(in.text, in.origin));
          if (!cy_cut.empty()) qp.cut = arrow_set_from_names(qp.quiver, split(cy_cut));
        } else if (!cy_dimer.empty()) {
          Input in = read_input(cy_dimer);
          report["input_digest"] = digest(in.text);
          DimerGraph g = dimer_from_json(parse_json_text(in.text, in.origin));
          qp = dual_qp(g, cy_flip);
          if (!cy_cut.empty()) {
            Matching m;
            for (const auto& e : split(cy_cut)) m.push_back(g.edge_index(e));
            qp.cut = matching_cut(g, qp, m);
          }
        } else {
          throw InputError("--source dimer needs --qp or --dimer");
        }
        if (!qp.cut) throw InputError("a cut is required (in the document or via --cut)");
        if (!is_cut(qp.potential, *qp.cut).ok) throw InputError("the given arrows are not a cut");
        p = dimer_bimodule_complex(qp.quiver, qp.potential, *qp.cut);
      } else {
        throw InputError("--source must be mckay or dimer");
      }
      GroebnerBasis gb = complete_groebner(p.algebra(), cap);
      ComplexReport cr = verify_complex(p, gb, degcap);
      DualityReport dr = verify_self_duality(p, d);
      r = complex_report_json(cr, dr);
      r["ranks"] = p.ranks();
      r["degcap"] = degcap;
      oc.result = r;
      oc.passed = cr.passed() && dr.ok;
    } else if (cox->parsed()) {
      FiniteAlgebraModel m = model_of();
      Matrix c = cartan_matrix(m);
      Json rows = Json::array();
      for (std::size_t i = 0; i < c.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < c.cols(); ++j) row.push_back(c(i, j).get_num().get_si());
        rows.push_back(row);
      }
      Polynomial p = coxeter_polynomial(m);
      Json coeffs = Json::array();
      for (const auto& x : p.coeffs()) coeffs.push_back(to_string(x));
      oc.result = Json{{"vertices", m.quiver().vertices()}, {"cartan", rows}, {"polynomial", p.to_string()}, {"coefficients", coeffs}};
    } else if (gld->parsed()) {
      FiniteAlgebraModel m = model_of();
      GlobalDimension g = global_dimension(m, cap);
      oc.result = Json{{"value", g.value}, {"exact", g.exact}, {"dimension", m.dimension()}};
      oc.passed = g.exact;
    } else if (pre->parsed()) {
      FiniteAlgebraModel m = model_of();
      Json degs = Json::array();
      for (const auto& pc : preprojective_graded_dims(m, rep_n, rep_max)) {
        Json dims = Json::array();
        for (const auto& row : pc.dims) dims.push_back(row);
        degs.push_back(Json{{"degree", pc.degree}, {"total", pc.total}, {"dims", dims}});
      }
      oc.result = Json{{"n", rep_n}, {"degrees", degs}};
    } else if (rin->parsed()) {
      FiniteAlgebraModel m = model_of();
      Json its = Json::array();
      bool all = true;
      for (const auto& it : serre_inverse_iterate(m, rep_n, rep_max)) {
        Json h = Json::object();
        for (const auto& [j, dv] : it.homology) h[std::to_string(j)] = dv;
        its.push_back(Json{{"step", it.step}, {"homology", h}, {"concentrated", it.concentrated()}});
        all = all && it.concentrated();
      }
      oc.result = Json{{"n", rep_n}, {"iterates", its}, {"concentrated_through_cap", all}};
      oc.passed = all;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Refusal& e) {
    report["refused"] = e.what();
    report["passed"] = false;
    out << report.dump(2) << "\n";
    err << "refused: " << e.what() << "\n";
    return 1;
  }
  if (!oc.raw.empty()) {
    out << oc.raw;
    return oc.passed ? 0 : 1;
  }
  report["result"] = oc.result;
  report["passed"] = oc.passed;
  report["elapsed_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << report.dump(2) << "\n";
  return oc.passed ? 0 : 1;
}

}  // namespace cyqw
