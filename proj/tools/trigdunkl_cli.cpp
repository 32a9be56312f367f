// trigdunkl: compute and verify Dunkl-operator identities from the command line.
//
// Exit status: 0 success, 1 a verification verdict failed, 2 usage or domain error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trigdunkl/trigdunkl.hpp"

using namespace trigdunkl;
using io::json;

namespace {

struct Options {
  std::string type;
  int rank = 0;
  std::string k, kp, k2;
  std::string mu;
  std::string xi;
  std::string format = "json";
  std::string out;
  std::string check;     // special --verify
  std::string suite;     // verify <suite>
  int n_max = 100;       // schwarz
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

RootSystemSpec selected_type(const Options& o) {
  if (o.type.empty()) throw UsageError("--type is required");
  bool has_digits = std::any_of(o.type.begin(), o.type.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (has_digits) {
    RootSystemSpec s = parse_type(o.type);
    if (o.rank != 0 && o.rank != s.rank) throw UsageError("--rank disagrees with --type " + o.type);
    return s;
  }
  if (o.rank == 0) throw UsageError("--rank is required when --type has no rank");
  return parse_type(o.type + std::to_string(o.rank));
}

CouplingVector couplings(const Options& o, const RootSystem& rs) {
  CouplingVector kv = CouplingVector::symbolic();
  if (!o.k.empty()) kv.k = parse_ratfunc(o.k);
  if (!o.kp.empty()) kv.kp = parse_ratfunc(o.kp);
  if (!o.k2.empty()) {
    if (rs.reduced()) throw UsageError("--k2 applies to BC only");
    kv.k2 = parse_ratfunc(o.k2);
  }
  return kv;
}

Weight parse_weight(const std::string& s, int rank) {
  if (s.empty()) throw UsageError("--mu is required");
  std::vector<long> c;
  for (const auto& p : split(s)) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(p, &used);
    } catch (const std::exception&) {
      throw ParseError("weight coordinate is not an integer: " + p);
    }
    if (used != p.size()) throw ParseError("weight coordinate is not an integer: " + p);
    c.push_back(v);
  }
  if (static_cast<int>(c.size()) != rank)
    throw DomainError("--mu has " + std::to_string(c.size()) + " coordinates, rank is " + std::to_string(rank));
  return Weight(c);
}

HElement parse_xi(const std::string& s, int rank) {
  if (s.empty()) return HElement::basis(rank, 0);
  std::vector<RatFunc> c;
  for (const auto& p : split(s)) c.push_back(parse_ratfunc(p));
  if (static_cast<int>(c.size()) != rank)
    throw DomainError("--xi has " + std::to_string(c.size()) + " coordinates, rank is " + std::to_string(rank));
  return HElement(c);
}

json weight_json(const Weight& w) { return w.c; }

std::string laurent_text(const LaurentElement& f) { return f.is_zero() ? "0" : f.to_string(); }

std::string localized_text(const LocalizedElement& f) {
  std::string s = "(" + laurent_text(f.numerator()) + ")";
  const auto& m = f.denom_exponents();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) s += " / (1 - e^-a" + std::to_string(i) + ")^" + std::to_string(m[i]);
  return s;
}

struct Output {
  json doc;
  std::string text;
  int status = 0;
};

Output cmd_roots(const Options& o) {
  RootSystem rs = build_root_system(selected_type(o));
  Output out{io::to_json(rs)};
  std::ostringstream t;
  t << rs.spec().name() << ": " << rs.positive_roots().size() << " positive roots, |W| = " << rs.weyl_order()
    << ", h = " << rs.coxeter_number() << "\n";
  for (const auto& r : rs.positive_roots()) {
    t << "  ";
    for (long c : r.simple) t << c << ' ';
    t << "\n";
  }
  out.text = t.str();
  return out;
}

Output cmd_orbit(const Options& o) {
  RootSystem rs = build_root_system(selected_type(o));
  Weight mu = parse_weight(o.mu, rs.rank());
  auto orb = rs.orbit(mu);
  json list = json::array();
  std::string text;
  for (const auto& w : orb) {
    list.push_back(weight_json(w));
    text += "  " + verify::weight_string(w) + "\n";
  }
  Weight dom = rs.dominant(mu);
  return {json{{"type", rs.spec().name()}, {"mu", weight_json(mu)}, {"dominant", weight_json(dom)}, {"orbit", list}},
          "dominant " + verify::weight_string(dom) + ", " + std::to_string(orb.size()) + " weights\n" + text};
}

Output cmd_dunkl(const Options& o) {
  RootSystem rs = build_root_system(selected_type(o));
  auto f = dunkl_apply(rs, parse_xi(o.xi, rs.rank()), LaurentElement::monomial(parse_weight(o.mu, rs.rank())),
                       couplings(o, rs));
  return {io::to_json(f), laurent_text(f) + "\n"};
}

Output cmd_jacobi(const Options& o) {
  RootSystem rs = build_root_system(selected_type(o));
  auto e = jacobi(rs, parse_weight(o.mu, rs.rank()), couplings(o, rs));
  return {io::to_json(e), laurent_text(e) + "\n"};
}

Output cmd_invariant(const Options& o) {
  RootSystem rs = build_root_system(selected_type(o));
  Weight mu = rs.dominant(parse_weight(o.mu, rs.rank()));
  auto f = invariant_apply(rs, casimir(rs), orbit_sum(rs, mu), couplings(o, rs));
  return {io::to_json(f), laurent_text(f) + "\n"};
}

Output cmd_hamiltonian(const Options& o) {
  RootSystem rs = build_root_system(selected_type(o));
  auto f = hamiltonian_apply(rs, LocalizedElement(rs, LaurentElement::monomial(parse_weight(o.mu, rs.rank()))),
                             couplings(o, rs));
  return {io::to_json(f), localized_text(f) + "\n"};
}

json failure_json(const verify::SuiteResult& r) { return verify::to_json(r); }

Output special_output(const RootSystem& rs, const CouplingVector& kv, const std::vector<std::string>& checks) {
  auto rep = special_exponents(rs, kv);
  std::optional<QuadraticVerdict> quad;
  std::optional<RelationsVerdict> rel;
  Output out;
  json failures = json::array();
  for (const auto& c : checks) {
    if (c == "prop32") quad = verify_quadratic(rs, rep, kv);
    if (c == "relations") rel = consecutive_relations(rs, rep, kv);
    verify::SuiteResult r = c == "compat" ? verify::compat(rs, kv, 2, false) : verify::run(c, rs, kv);
    if (!r.passed()) failures.push_back(failure_json(r));
  }
  out.doc = io::to_json(rep, quad ? &*quad : nullptr, rel ? &*rel : nullptr);
  bool numeric = kv.k.is_constant() && kv.kp.is_constant();
  if (numeric) {
    Rational k = kv.k.constant_value(), kp = kv.kp.constant_value();
    out.doc["kplus"] = kplus_membership(rs, k, kp).inside;
    json mono = json::array();
    for (const auto& g : monodromy_spec(rs, kv))
      mono.push_back({{"node", g.node},
                      {"ones", g.ones},
                      {"rotation", io::rational_string(g.rotation)},
                      {"root_of_stated_relation", g.root_of_stated},
                      {"root_of_conjugate_relation", g.root_of_conjugate}});
    out.doc["monodromy"] = mono;
  }
  std::ostringstream t;
  t << rs.spec().name() << " special exponents (fundamental-weight coordinates)\n";
  for (std::size_t i = 0; i < rep.exponents.size(); ++i) {
    t << "  mu_" << i + 1 << " = (";
    for (std::size_t j = 0; j < rep.exponents[i].size(); ++j) t << (j ? ", " : "") << rep.exponents[i][j].to_string();
    t << ")\n";
  }
  if (rep.x) t << "  x = " << rep.x->to_string() << ", y = " << rep.y->to_string() << "\n";
  t << "  a = " << rep.a_value.to_string() << "\n";
  for (const auto& c : checks) t << "  " << c << ": " << (failures.empty() ? "verified" : "see failures") << "\n";
  if (!failures.empty()) {
    out.doc["failures"] = failures;
    out.doc["first_failure"] = failures.front()["failure"];
    t << "FAILED " << failures.front()["failure"]["identity"].get<std::string>() << "\n";
    out.status = 1;
  }
  out.text = t.str();
  return out;
}

Output cmd_special(const Options& o) {
  RootSystem rs = build_root_system(selected_type(o));
  std::vector<std::string> checks;
  if (o.check == "all")
    checks = {"prop32", "relations", "compat"};
  else if (!o.check.empty())
    checks = {o.check};
  return special_output(rs, couplings(o, rs), checks);
}

Output cmd_report(const Options& o) {
  RootSystem rs = build_root_system(selected_type(o));
  return special_output(rs, couplings(o, rs), {"prop32", "relations", "compat"});
}

Output cmd_verify(const Options& o) {
  const auto& names = verify::suite_names();
  if (std::find(names.begin(), names.end(), o.suite) == names.end()) throw UsageError("unknown suite: " + o.suite);
  std::vector<RootSystemSpec> types;
  if (o.suite != "schwarz") types = o.type.empty() ? verify::default_types(o.suite) : std::vector{selected_type(o)};
  json results = json::array();
  std::ostringstream t;
  Output out;
  auto record = [&](const verify::SuiteResult& r) {
    results.push_back(verify::to_json(r));
    t << r.suite << " " << r.type << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.cases << " cases)\n";
    if (!r.passed() && out.status == 0) {
      out.status = 1;
      t << "  identity: " << r.failure->identity << "\n  lhs: " << r.failure->lhs.dump() << "\n  rhs: " << r.failure->rhs.dump()
        << "\n";
    }
  };
  if (o.suite == "schwarz") record(verify::schwarz());
  for (const auto& spec : types) {
    RootSystem rs = build_root_system(spec);
    CouplingVector kv = verify::default_couplings(o.suite, rs);
    if (!o.k.empty() || !o.kp.empty() || !o.k2.empty()) {
      CouplingVector given = couplings(o, rs);
      if (!o.k.empty()) kv.k = given.k;
      if (!o.kp.empty()) kv.kp = given.kp;
      if (!o.k2.empty()) kv.k2 = given.k2;
    }
    record(verify::run(o.suite, rs, kv));
  }
  out.doc = json{{"suite", o.suite}, {"passed", out.status == 0}, {"results", results}};
  for (const auto& r : results)
    if (!r["passed"].get<bool>()) {
      out.doc["first_failure"] = r["failure"];
      break;
    }
  out.text = t.str();
  return out;
}

Output cmd_schwarz(const Options& o) {
  auto table = schwarz_table(o.n_max);
  std::ostringstream t;
  for (const auto& e : table) t << "n = " << e.n << ", k = " << e.k.get_str() << ", q = " << (e.q ? std::to_string(*e.q) : "infinity") << "\n";
  return {verify::to_json(table), t.str()};
}

void emit(const Options& o, const Output& out) {
  std::string body = o.format == "text" ? out.text : out.doc.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  f << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact trigonometric Dunkl operator calculus and special hypergeometric exponents"};
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&](CLI::App* sub, bool with_weight) {
    sub->add_option("--type", o.type, "root system type, e.g. A, E8, BC1");
    sub->add_option("--rank", o.rank, "rank when --type carries none");
    sub->add_option("--k", o.k, "coupling on the W-orbit of alpha_1 (exact fraction or expression in k, kp)");
    sub->add_option("--kp", o.kp, "second coupling");
    sub->add_option("--k2", o.k2, "coupling of the doubled roots (BC only)");
    if (with_weight) sub->add_option("--mu", o.mu, "weight, comma-separated fundamental-weight coordinates");
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", o.out, "write output to this file");
  };

  std::map<CLI::App*, Output (*)(const Options&)> handlers;
  auto add = [&](const char* name, const char* help, bool with_weight, Output (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub, with_weight);
    handlers[sub] = fn;
    return sub;
  };
  add("roots", "positive roots, Cartan matrix and fundamental weights", false, cmd_roots);
  add("orbit", "Weyl group orbit of a weight", true, cmd_orbit);
  add("dunkl", "apply T(xi) to e^mu", true, cmd_dunkl)->add_option("--xi", o.xi, "element of h in the coroot basis");
  add("jacobi", "nonsymmetric Jacobi polynomial E(mu)", true, cmd_jacobi);
  add("invariant", "apply D_k(C) to the orbit sum of mu", true, cmd_invariant);
  add("hamiltonian", "apply H_k to e^mu", true, cmd_hamiltonian);
  add("special", "special exponents and their parameters", false, cmd_special)
      ->add_option("--verify", o.check, "prop32, relations, compat or all")
      ->check(CLI::IsMember({"prop32", "relations", "compat", "all"}));
  add("report", "special exponents with every verdict", false, cmd_report);
  add("verify", "run a verification suite", false, cmd_verify)
      ->add_option("suite", o.suite, "suite name")
      ->required()
      ->check(CLI::IsMember(verify::suite_names()));
  add("schwarz", "A_n cases satisfying the Schwarz conditions", false, cmd_schwarz)
      ->add_option("--n-max", o.n_max, "largest n scanned");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    for (auto& [sub, fn] : handlers)
      if (sub->parsed()) {
        Output out = fn(o);
        emit(o, out);
        return out.status;
      }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
