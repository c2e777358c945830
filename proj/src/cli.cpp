#include "ks/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>

#include "ks/algebra.hpp"
#include "ks/ansatz.hpp"
#include "ks/determining.hpp"
#include "ks/generators.hpp"
#include "ks/parser.hpp"
#include "ks/verifier.hpp"

namespace ks::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kUsage = 2;

struct Options {
  bool json = false;
  bool reduced = false;
  std::string f, gen, gen1, gen2;
  int degree = 4;
  int scan = -1;
  int trials = 10;
  std::optional<std::uint64_t> seed;
};

json document(const std::string& command) {
  json d;
  d["command"] = command;
  d["f"] = nullptr;
  d["degree"] = nullptr;
  d["dimension"] = nullptr;
  d["generators"] = json::array();
  d["structure_constants"] = json::array();
  d["defect"] = json::array();
  return d;
}

json record(const std::string& name, const VField& S, std::optional<bool> verified) {
  json r;
  r["name"] = name;
  for (Fn f : kFns) r[fn_name(f)] = canonical_string(S[f]);
  if (verified) r["verified"] = *verified;
  else r["verified"] = nullptr;
  return r;
}

std::string field_line(const VField& S) {
  std::string s;
  for (Fn f : kFns) {
    if (!s.empty()) s += ", ";
    s += fn_name(f) + " = " + canonical_string(S[f]);
  }
  return s;
}

// c_1*A + c_2*B ... in basis names
std::string combination(const std::vector<std::pair<std::string, Rat>>& terms) {
  std::string s;
  for (const auto& [name, c] : terms) {
    if (c == 0) continue;
    Rat a = abs(c);
    if (s.empty()) s += c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    if (a != 1) s += to_string(a) + "*";
    s += name;
  }
  return s.empty() ? "0" : s;
}

void add_structure(json& doc, const StructureConstants& sc) {
  for (const auto& e : sc.entries) doc["structure_constants"].push_back({e.i, e.j, e.k, to_string(e.value)});
}

int cmd_determine(const Options& o, std::ostream& out) {
  const DetSystem nine = derive_determining();
  json doc = document(o.reduced ? "determine --reduced" : "determine");
  const DetSystem red = reduced_system();
  const DetSystem& sys = o.reduced ? red : nine;
  json eqs = json::array();
  for (const auto& [label, eq] : sys.equations) {
    eqs.push_back({{"label", label}, {"expr", eq.to_string()}});
    if (!o.json) out << label << ": " << eq.to_string() << " = 0\n";
  }
  doc["equations"] = eqs;
  if (o.reduced) {
    json der = json::array();
    for (const auto& [label, comb] : reduced_from_nine(nine)) {
      std::string text = comb ? comb->to_string() : "not found";
      der.push_back({{"label", label}, {"combination", comb ? json(text) : json(nullptr)}});
      if (!o.json) out << label << " = " << text << "\n";
    }
    doc["derivations"] = der;
  } else {
    const DependencyReport r = check_dependencies(nine);
    json dep;
    dep["relation"] = "y*E7 + x*E8 - x*E1 - y*E2";
    dep["relation_residual"] = r.relation_residual.to_string();
    dep["E9"] = r.e9_combination ? json(r.e9_combination->to_string()) : json(nullptr);
    dep["E5"] = r.e5_combination ? json(r.e5_combination->to_string()) : json(nullptr);
    dep["e5_from_e1_e2_e7_e8"] = r.e5_from_first_order_only;
    doc["dependencies"] = dep;
    if (!o.json) {
      out << "E9 - (y*E7 + x*E8 - x*E1 - y*E2) = " << r.relation_residual.to_string() << "\n";
      out << "E9 = " << (r.e9_combination ? r.e9_combination->to_string() : "not found") << "\n";
      out << "E5 = " << (r.e5_combination ? r.e5_combination->to_string() : "not found") << "\n";
    }
  }
  if (o.json) out << doc.dump(2) << "\n";
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const FCase fc = parse_fspec(o.f);
  const VField S = parse_generator(o.gen);
  const Verdict v = verify_generator(S, fc);
  json doc = document("verify");
  doc["f"] = fc.to_string();
  doc["generators"].push_back(record(o.gen, S, v.is_symmetry));
  for (const auto& e : v.certificate)
    doc["defect"].push_back({{"tag", to_string(e.tag)}, {"monomial", e.monomial.to_string()}, {"coeff", to_string(e.coeff)}});
  doc["verdict"] = v.is_symmetry;
  if (o.json) {
    out << doc.dump(2) << "\n";
  } else {
    out << "f: " << fc.to_string() << "\n" << o.gen << ": " << field_line(S) << "\n";
    out << "verdict: " << (v.is_symmetry ? "symmetry" : "not a symmetry") << "\n";
    for (const auto& e : v.certificate)
      out << "  " << to_string(e.tag) << "  " << e.monomial.to_string() << "  " << to_string(e.coeff) << "\n";
  }
  return v.is_symmetry ? 0 : 1;
}

int cmd_classify(const Options& o, std::ostream& out, bool table) {
  const FCase fc = parse_fspec(o.f);
  if (o.degree < 0) throw ParseError("degree must be non-negative", 0);
  const Classification c = classify(fc, o.degree);
  json doc = document(table ? "table" : "classify");
  doc["f"] = fc.to_string();
  doc["degree"] = o.degree;
  doc["dimension"] = c.dimension;
  for (std::size_t i = 0; i < c.basis.size(); ++i)
    doc["generators"].push_back(record(c.basis.names[i], c.basis.fields[i], c.verified[i]));

  std::optional<StructureConstants> sc;
  if (!fc.p_value() && fc.kind() == FCase::Kind::Power) {
    if (table) throw std::invalid_argument("table: the exponent must be a rational number");
  } else {
    sc = structure_constants(c.basis);
    add_structure(doc, *sc);
  }
  doc["matches_family"] = c.matches_family;
  doc["pure_beta"] = c.pure_beta;
  if (!c.branch_points.empty()) {
    json b = json::array();
    for (const auto& [r, d] : c.branch_points) b.push_back({{"p", to_string(r)}, {"dimension", d ? json(*d) : json(nullptr)}});
    doc["branch_points"] = b;
  }
  if (c.excluded_exponent) doc["excluded_exponent"] = true;
  std::optional<StabilityScan> scan;
  if (o.scan >= 0) {
    scan = stability_scan(fc, o.degree, o.scan);
    json s = json::array();
    for (const auto& [d, n] : scan->dimensions) s.push_back({{"degree", d}, {"dimension", n}});
    doc["scan"] = s;
    doc["stable"] = scan->stable;
  }
  bool jacobi = false;
  if (table) {
    jacobi = jacobi_check(c.basis);
    doc["closed"] = sc->closed;
    doc["jacobi"] = jacobi;
  }
  if (o.json) {
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "f: " << fc.to_string() << "  degree: " << o.degree << "  dimension: " << c.dimension << "\n";
  if (table) {
    out << "basis:";
    for (const auto& n : c.basis.names) out << " " << n;
    out << "\n";
    for (std::size_t i = 0; i < c.basis.size(); ++i)
      for (std::size_t j = i + 1; j < c.basis.size(); ++j) {
        std::vector<std::pair<std::string, Rat>> terms;
        for (std::size_t k = 0; k < c.basis.size(); ++k) terms.emplace_back(c.basis.names[k], sc->at(i, j, k));
        out << "[" << c.basis.names[i] << ", " << c.basis.names[j] << "] = " << combination(terms) << "\n";
      }
    for (const auto& l : sc->leaks)
      out << "[" << c.basis.names[l.i] << ", " << c.basis.names[l.j] << "] outside the span: " << field_line(l.bracket)
          << "\n";
    out << "closed: " << (sc->closed ? "yes" : "no") << "\njacobi: " << (jacobi ? "yes" : "no") << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < c.basis.size(); ++i)
    out << c.basis.names[i] << ": " << field_line(c.basis.fields[i]) << (c.verified[i] ? "  [verified]" : "  [FAILED]")
        << "\n";
  out << "matches listed generators: " << (c.matches_family ? "yes" : "no") << "\n";
  if (c.pure_beta) out << "beta-only kernel directions (not counted): " << c.pure_beta << "\n";
  for (const auto& [r, d] : c.branch_points)
    out << "branch p = " << to_string(r) << ": " << (d ? "dimension " + std::to_string(*d) : "different case") << "\n";
  if (c.excluded_exponent) out << "note: p = 2 is outside the classification proof\n";
  if (scan) {
    for (const auto& [d, n] : scan->dimensions) out << "degree " << d << ": " << n << "\n";
    out << "stable: " << (scan->stable ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_beta_kernel(const Options& o, std::ostream& out) {
  const FCase fc = parse_fspec(o.f);
  if (o.degree < 0) throw ParseError("degree must be non-negative", 0);
  const auto betas = beta_kernel(fc, o.degree);
  const FCase sc = solver_case(fc);
  json doc = document("beta-kernel");
  doc["f"] = fc.to_string();
  doc["degree"] = o.degree;
  doc["dimension"] = betas.size();
  for (std::size_t i = 0; i < betas.size(); ++i) {
    const VField W = gen::W(betas[i]);
    const bool ok = verify_generator(W, sc).is_symmetry;
    doc["generators"].push_back(record("W" + std::to_string(i + 1), W, ok));
    if (!o.json) out << "W" << i + 1 << ": beta = " << canonical_string(betas[i]) << (ok ? "  [verified]" : "  [FAILED]") << "\n";
  }
  if (o.json) out << doc.dump(2) << "\n";
  else out << "dimension: " << betas.size() << "\n";
  return 0;
}

int cmd_bracket(const Options& o, std::ostream& out) {
  const VField a = parse_generator(o.gen1), b = parse_generator(o.gen2);
  const VField c = bracket(a, b);
  const std::string name = "[" + o.gen1 + ", " + o.gen2 + "]";
  json doc = document("bracket");
  doc["generators"].push_back(record(name, c, std::nullopt));
  if (o.json) out << doc.dump(2) << "\n";
  else out << name << ": " << field_line(c) << "\n";
  return 0;
}

int cmd_spot_check(const Options& o, std::ostream& out) {
  const FCase fc = parse_fspec(o.f);
  const VField S = parse_generator(o.gen);
  if (o.trials <= 0) throw ParseError("trials must be positive", 0);
  std::uint64_t seed = 0;
  if (o.seed) {
    seed = *o.seed;
  } else if (const char* env = std::getenv("KS_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError("KS_SEED must be a non-negative integer", 0);
    }
  }
  const bool ok = numeric_spot_check(S, fc, o.trials, seed);
  json doc = document("spot-check");
  doc["f"] = fc.to_string();
  doc["generators"].push_back(record(o.gen, S, ok));
  doc["trials"] = o.trials;
  doc["seed"] = seed;
  doc["verdict"] = ok;
  if (o.json) out << doc.dump(2) << "\n";
  else out << "spot check (" << o.trials << " trials, seed " << seed << "): " << (ok ? "true" : "false") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lie point symmetries of the Kohn-Laplace equation on the Heisenberg group", "kohnsym"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "machine-readable output");

  auto* det = app.add_subcommand("determine", "determining equations and their dependencies");
  det->add_flag("--reduced", o.reduced, "the seven-equation system");

  auto* ver = app.add_subcommand("verify", "check a generator against a nonlinearity");
  ver->add_option("--f", o.f, "f-specification")->required();
  ver->add_option("--gen", o.gen, "named generator or xi,phi,tau,alpha,beta")->required();

  auto* cls = app.add_subcommand("classify", "symmetry algebra from the polynomial ansatz");
  cls->add_option("--f", o.f)->required();
  cls->add_option("--degree", o.degree, "ansatz degree")->capture_default_str();
  cls->add_option("--scan", o.scan, "also classify at every degree up to this one");

  auto* bk = app.add_subcommand("beta-kernel", "polynomial beta for the zero and linear cases");
  bk->add_option("--f", o.f)->required();
  bk->add_option("--degree", o.degree)->required();

  auto* br = app.add_subcommand("bracket", "commutator of two generators");
  br->add_option("--gen1", o.gen1)->required();
  br->add_option("--gen2", o.gen2)->required();

  auto* tab = app.add_subcommand("table", "commutator table of the classified algebra");
  tab->add_option("--f", o.f)->required();
  tab->add_option("--degree", o.degree)->capture_default_str();

  auto* sp = app.add_subcommand("spot-check", "numeric check at random points of the equation");
  sp->add_option("--f", o.f)->required();
  sp->add_option("--gen", o.gen)->required();
  sp->add_option("--trials", o.trials)->capture_default_str();
  sp->add_option("--seed", o.seed, "default 0, or KS_SEED");

  for (auto* s : app.get_subcommands({})) s->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (det->parsed()) return cmd_determine(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    if (cls->parsed()) return cmd_classify(o, out, false);
    if (tab->parsed()) return cmd_classify(o, out, true);
    if (bk->parsed()) return cmd_beta_kernel(o, out);
    if (br->parsed()) return cmd_bracket(o, out);
    if (sp->parsed()) return cmd_spot_check(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ks::cli
