// Command-line front end: staircase fibers, dominance posets, the spine
// graph, universal families, Macaulay matrices, per-degree matroids, the
// all-minors sweep, randomized edge probes, and the full verification suite.
//
// Exit codes: 0 success/verified, 1 a verification found a counterexample,
// 2 usage error, 3 resource guard tripped. Timings go to stderr so stdout is
// byte-stable for a fixed command line and seed.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hilbspine/dominance.hpp"
#include "hilbspine/errors.hpp"
#include "hilbspine/json_io.hpp"
#include "hilbspine/macaulay.hpp"
#include "hilbspine/specialized.hpp"
#include "hilbspine/spine.hpp"
#include "hilbspine/verify.hpp"

namespace {

using namespace hilbspine;

std::uint64_t minors_guard() {
  const char* env = std::getenv("HILB_SPINE_MAX_MINORS");
  if (!env) return 1000000;
  try {
    size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw input_error("HILB_SPINE_MAX_MINORS must be a positive integer, got '" +
                      std::string(env) + "'");
  }
}

// --prime 0 selects the rationals; any other value must be prime.
FieldSpec field_from_prime(std::int64_t prime) {
  if (prime == 0) return FieldSpec::rationals();
  if (prime < 2 || prime > 0xffffffffLL) throw input_error("--prime must be 0 or a prime");
  return FieldSpec::prime(static_cast<std::uint32_t>(prime));
}

// Split on commas at parenthesis depth zero, so "c(2,2)=1,c(1,1)=3" yields
// the two assignments.
std::vector<std::string> split_outside_parens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (const char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

FieldScalar parse_value(const std::string& tok, const FieldSpec& field) {
  try {
    if (field.kind == FieldSpec::Kind::Rationals) return FieldScalar::rational(Rational(tok));
    return FieldScalar::make(field, BigInt(tok));
  } catch (const std::exception&) {
    throw input_error("cannot parse field value '" + tok + "'");
  }
}

// "c(2,1)=1,c(4,2)=2,c(4,3)=3": every variable of `vars` must be assigned
// exactly once.
std::vector<FieldScalar> parse_point(const std::string& s, const VarTable& vars,
                                     const FieldSpec& field) {
  std::vector<FieldScalar> point(vars.size(), FieldScalar::make(field, 0));
  std::vector<bool> seen(vars.size(), false);
  for (const std::string& tok : split_outside_parens(s)) {
    int i = 0, ell = 0;
    char lpar = 0, comma = 0, rpar = 0, eq = 0;
    std::istringstream is(tok);
    if (!(is >> lpar) || lpar != 'c') throw input_error("bad assignment '" + tok + "'");
    if (!(is >> lpar >> i >> comma >> ell >> rpar >> eq) || lpar != '(' || comma != ',' ||
        rpar != ')' || eq != '=')
      throw input_error("bad assignment '" + tok + "'");
    std::string value;
    is >> value;
    const auto v = vars.index_of({i, ell});
    if (!v)
      throw input_error("c(" + std::to_string(i) + "," + std::to_string(ell) +
                        ") is not a variable of this family");
    if (seen[*v]) throw input_error("variable assigned twice in '" + s + "'");
    seen[*v] = true;
    point[*v] = parse_value(value, field);
  }
  for (int v = 0; v < vars.size(); ++v)
    if (!seen[v]) throw input_error("missing assignment for " + vars.name(v));
  return point;
}

std::string point_text(const VarTable& vars, const std::vector<FieldScalar>& point) {
  std::string s;
  for (int v = 0; v < vars.size(); ++v) {
    if (v) s += ", ";
    s += vars.name(v) + "=" + point[v].to_string();
  }
  return s.empty() ? "(no variables)" : s;
}

std::string monomial_set_text(const std::vector<Monomial>& ms) {
  std::string s = "{";
  for (size_t k = 0; k < ms.size(); ++k) {
    if (k) s += ",";
    s += to_string(ms[k]);
  }
  return s + "}";
}

std::string mask_text(std::uint32_t mask, const std::vector<Monomial>& ground) {
  std::vector<Monomial> ms;
  for (size_t k = 0; k < ground.size(); ++k)
    if (mask & (std::uint32_t{1} << k)) ms.push_back(ground[k]);
  return monomial_set_text(ms);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw input_error("cannot open '" + out_path + "' for writing");
  f << text;
}

void print_matroid_text(std::ostream& os, int d, const Matroid& m) {
  os << "degree " << d << ": rank " << m.rank() << " on " << monomial_set_text(m.ground())
     << ", " << m.bases().size() << (m.bases().size() == 1 ? " basis" : " bases") << ", "
     << (m.is_uniform() ? "uniform" : "not uniform") << "\n";
  os << "  circuits:";
  if (m.circuits().empty()) os << " none";
  for (const auto c : m.circuits()) os << " " << mask_text(c, m.ground());
  os << "\n  loops: " << (m.loops().empty() ? "none" : monomial_set_text(m.loops()))
     << "  coloops: " << (m.coloops().empty() ? "none" : monomial_set_text(m.coloops())) << "\n";
}

int cmd_spine(int colength, const std::string& format, bool edge_labels,
              const std::string& out_path) {
  const SpineGraph G = spine_graph(colength);
  std::ostringstream os;
  if (format == "dot") {
    os << spine_to_dot(G, edge_labels);
  } else if (format == "json") {
    os << spine_to_json(G).dump(2) << "\n";
  } else {
    os << "colength " << G.colength << ": " << G.vertices.size() << " vertices, "
       << G.edges.size() << " edges\n";
    for (const auto& e : G.edges) {
      os << to_string(G.vertices[e.u]) << " -- " << to_string(G.vertices[e.v]) << "  via";
      for (const auto& w : e.witnesses)
        os << " " << to_string(w.grading) << " h=" << to_string(w.hf) << ";";
      os.seekp(-1, std::ios_base::end);
      os << "\n";
    }
  }
  emit(os.str(), out_path);
  return 0;
}

int cmd_poset(const HilbertFunction& h, const Grading& g, const std::string& format,
              const std::string& out_path) {
  const DominancePoset P = poset_hasse(h, g);
  std::ostringstream os;
  if (format == "json") {
    os << poset_to_json(P).dump(2) << "\n";
  } else {
    os << "fiber of h=" << to_string(h) << " under " << to_string(g) << ": " << P.elements.size()
       << (P.elements.size() == 1 ? " ideal\n" : " ideals\n");
    for (size_t k = 0; k < P.elements.size(); ++k)
      os << "  " << k << ": " << to_string(P.elements[k]) << "\n";
    os << "min: " << to_string(P.elements[P.min_index])
       << "  max: " << to_string(P.elements[P.max_index]) << "\n";
    os << "covers:";
    if (P.covers.empty()) os << " none";
    for (const auto& [u, v] : P.covers)
      os << " " << to_string(P.elements[u]) << " < " << to_string(P.elements[v]) << ";";
    if (!P.covers.empty()) os.seekp(-1, std::ios_base::end);
    os << "\n";
  }
  emit(os.str(), out_path);
  return 0;
}

int cmd_arrows(const MonomialIdeal& M, const Grading& g, const std::string& out_path) {
  std::ostringstream os;
  os << "ideal " << to_string(M) << " under " << to_string(g) << "\n";
  os << "T+ = " << to_string(positive_arrows(M, g)) << "\n";
  os << "T- = " << to_string(negative_arrows(M, g)) << "\n";
  emit(os.str(), out_path);
  return 0;
}

int cmd_universal(const MonomialIdeal& M, const Grading& g, const std::string& out_path) {
  const UniversalFamily F = universal_generators(M, g);
  std::ostringstream os;
  os << "ideal " << to_string(M) << " under " << to_string(g) << ", T+ = "
     << to_string(positive_arrows(M, g)) << "\n";
  for (size_t i = 0; i < F.gens.size(); ++i)
    os << "f_" << i << " = " << to_string(F.gens[i], F.vars) << "\n";
  emit(os.str(), out_path);
  return 0;
}

int cmd_macaulay(const MonomialIdeal& M, const Grading& g, int degree, bool bar,
                 const std::string& format, const std::string& out_path) {
  MacaulayMatrix R = macaulay_matrix(M, g, degree);
  if (bar) R = bar_quotient(R);
  std::ostringstream os;
  if (format == "json") {
    os << macaulay_to_json(R).dump(2) << "\n";
  } else {
    os << (bar ? "bar Macaulay matrix" : "Macaulay matrix") << " of " << to_string(M)
       << " under " << to_string(g) << ", degree " << degree << "\n";
    os << to_bordered_string(R);
  }
  emit(os.str(), out_path);
  return 0;
}

int cmd_matroids(const MonomialIdeal& M, const Grading& g, int degree, bool random,
                 const std::string& point_s, std::int64_t prime, std::uint64_t seed,
                 const std::string& format, const std::string& out_path) {
  const FieldSpec field = field_from_prime(prime);
  const VarTable vars = VarTable::for_ideal(M, g);
  std::vector<FieldScalar> point;
  if (random == !point_s.empty())
    throw input_error("matroids needs exactly one of --random or --point");
  if (random) {
    std::mt19937_64 rng(seed);
    point = sample_point(vars.size(), field, rng);
  } else {
    point = parse_point(point_s, vars, field);
  }
  const SpecializedIdeal J = specialize_ideal(M, g, point, field);

  std::ostringstream os;
  std::ostringstream header;
  header << "ideal " << to_string(M) << " under " << to_string(g) << ", field " << field.name();
  if (random) header << ", rng " << kRngName << ", seed " << seed;
  header << "\npoint: " << point_text(vars, point) << "\n";

  if (format == "json") {
    Json j;
    j["ideal"] = M.partition();
    j["grading"] = {g.a(), g.b()};
    j["field"] = field.name();
    if (random) {
      j["rng"] = kRngName;
      j["seed"] = seed;
    }
    j["point"] = Json::array();
    for (const auto& v : point) j["point"].push_back(v.to_string());
    j["matroids"] = Json::array();
    if (degree >= 0) {
      Json jm = matroid_to_json(matroid_of_degree(J, degree));
      jm["degree"] = degree;
      j["matroids"].push_back(std::move(jm));
    } else {
      for (const auto& [d, m] : tropical_fingerprint(J)) {
        Json jm = matroid_to_json(m);
        jm["degree"] = d;
        j["matroids"].push_back(std::move(jm));
      }
    }
    os << j.dump(2) << "\n";
  } else {
    os << header.str();
    if (degree >= 0) {
      print_matroid_text(os, degree, matroid_of_degree(J, degree));
    } else {
      for (const auto& [d, m] : tropical_fingerprint(J)) print_matroid_text(os, d, m);
    }
  }
  emit(os.str(), out_path);
  return 0;
}

int cmd_verify_minors(int max_colength, const Grading& g, const std::string& out_path) {
  if (!g.is_standard())
    throw input_error(
        "verify-minors requires --grading 1,1: the all-minors statement assumes the standard "
        "grading, and nonstandard gradings genuinely admit vanishing minors");
  if (max_colength < 1) throw input_error("--max-colength must be >= 1");
  const std::uint64_t guard = minors_guard();
  const Grading std11(1, 1);

  std::ostringstream os;
  std::uint64_t minors = 0;
  int slices = 0;
  bool all_ok = true;
  for (int N = 1; N <= max_colength; ++N) {
    std::map<HilbertFunction, std::vector<MonomialIdeal>> fibers;
    std::vector<HilbertFunction> order;
    for (const auto& M : enumerate_ideals(N)) {
      const HilbertFunction h = graded_hilbert_function(M, std11);
      if (fibers.try_emplace(h).second) order.push_back(h);
      fibers.at(h).push_back(M);
    }
    for (const auto& h : order) {
      const auto& fiber = fibers.at(h);
      const MonomialIdeal& M = fiber[extreme_indices(fiber, std11).first];
      for (int d = 0; d <= h.dmax(); ++d) {
        if (h(d) <= 0 || h(d) >= d + 1) continue;
        const MinorReport rep = verify_minors_nonzero(M, d, guard);
        minors += rep.minor_count;
        ++slices;
        os << "M=" << to_string(rep.ideal) << " d=" << rep.degree << ": " << rep.minor_count
           << " minors, " << (rep.all_nonzero ? "all nonzero" : "ZERO MINOR FOUND") << ", "
           << (rep.all_certified ? "certified" : "CERTIFICATE FAILED") << "\n";
        if (!rep.all_nonzero || !rep.all_certified) {
          all_ok = false;
          for (const auto& rec : rep.minors)
            if (!rec.nonzero || !rec.q_coefficient_one || !rec.diagonal_leads_with_q) {
              os << "  counterexample rows {";
              for (size_t k = 0; k < rec.rows.size(); ++k)
                os << (k ? "," : "") << rec.rows[k];
              os << "}: Q=" << rec.q << "\n";
            }
        }
      }
    }
  }
  os << "checked " << slices << " degree slices, " << minors << " minors: "
     << (all_ok ? "all nonzero, all certified" : "COUNTEREXAMPLE FOUND") << "\n";
  emit(os.str(), out_path);
  return all_ok ? 0 : 1;
}

int cmd_edge_probe(const HilbertFunction& h, const Grading& g, std::int64_t prime,
                   std::uint64_t seed, int trials, const std::string& out_path) {
  const FieldSpec field = field_from_prime(prime);
  std::ostringstream os;
  os << "fiber h=" << to_string(h) << " under " << to_string(g) << ", field " << field.name()
     << ", rng " << kRngName << ", seed " << seed << ", trials " << trials << "\n";
  const auto probe = edge_probe(h, g, field, trials, seed);
  if (!probe) {
    os << "no witness found\n";
    emit(os.str(), out_path);
    return 1;
  }
  const VarTable vars = VarTable::for_ideal(probe->m_minus, g);
  os << "witness at trial " << probe->trial << ": " << point_text(vars, probe->point) << "\n";
  os << "initial ideals: " << to_string(probe->m_minus) << " (x<y) and "
     << to_string(probe->m_plus) << " (y<x)\n";
  emit(os.str(), out_path);
  return 0;
}

int cmd_verify_all(const std::string& out_path) {
  std::ostringstream os;
  bool all = true;
  for (const auto& r : run_all_criteria()) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << " — " << r.details
       << "\n";
    std::cerr << "[time] criterion " << r.id << ": " << r.seconds << "s\n";
    all = all && r.pass;
  }
  os << (all ? "all 10 criteria passed" : "CRITERIA FAILED") << "\n";
  emit(os.str(), out_path);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"staircase fibers, dominance spines, and universal-family matroids on Hilb^N(A^2)"};
  app.require_subcommand(1);

  std::string ideal_s, grading_s = "1,1", hf_s, format = "text", point_s, out_path;
  int colength = 0, degree = -1, trials = 10, max_colength = 0;
  std::int64_t prime = 32003;
  std::uint64_t seed = 0;
  bool bar = false, edge_labels = false, random = false;

  const auto add_format = [&](CLI::App* sub, const std::string& choices) {
    sub->add_option("--format", format, "output format: " + choices)->capture_default_str();
  };
  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "write output to a file instead of stdout");
  };

  CLI::App* spine = app.add_subcommand("spine", "spine graph of all colength-N ideals");
  spine->add_option("--colength", colength, "colength N >= 1")->required();
  add_format(spine, "text|dot|json");
  spine->add_flag("--edge-labels", edge_labels, "label dot edges with witness gradings");
  add_out(spine);

  CLI::App* poset = app.add_subcommand("poset", "dominance poset of one fiber");
  poset->add_option("--hf", hf_s, "Hilbert function, e.g. 1,1,2,1,1")->required();
  poset->add_option("--grading", grading_s, "grading a,b")->capture_default_str();
  add_format(poset, "text|json");
  add_out(poset);

  CLI::App* arrows = app.add_subcommand("arrows", "significant arrows T+ and T-");
  arrows->add_option("--ideal", ideal_s, "staircase partition, e.g. 6,4,2,1")->required();
  arrows->add_option("--grading", grading_s, "grading a,b")->capture_default_str();
  add_out(arrows);

  CLI::App* universal = app.add_subcommand("universal", "universal family over a cell");
  universal->add_option("--ideal", ideal_s, "staircase partition")->required();
  universal->add_option("--grading", grading_s, "grading a,b")->capture_default_str();
  add_out(universal);

  CLI::App* macaulay = app.add_subcommand("macaulay", "degree-d Macaulay matrix");
  macaulay->add_option("--ideal", ideal_s, "staircase partition")->required();
  macaulay->add_option("--grading", grading_s, "grading a,b")->capture_default_str();
  macaulay->add_option("--degree", degree, "matrix degree d >= 0")->required();
  macaulay->add_flag("--bar", bar, "apply the bar quotient (standard grading, lex-least ideal)");
  add_format(macaulay, "text|json");
  add_out(macaulay);

  CLI::App* matroids = app.add_subcommand("matroids", "per-degree matroids of a specialization");
  matroids->add_option("--ideal", ideal_s, "staircase partition")->required();
  matroids->add_option("--grading", grading_s, "grading a,b")->capture_default_str();
  matroids->add_option("--degree", degree, "one degree only (default: all up to dmax)");
  matroids->add_flag("--random", random, "sample the point with mt19937_64");
  matroids->add_option("--point", point_s, "explicit point, e.g. \"c(2,1)=1,c(4,2)=2\"");
  matroids->add_option("--prime", prime, "field: a prime modulus, or 0 for the rationals")
      ->capture_default_str();
  matroids->add_option("--seed", seed, "rng seed for --random")->capture_default_str();
  add_format(matroids, "text|json");
  add_out(matroids);

  CLI::App* verify_minors =
      app.add_subcommand("verify-minors", "exhaustive all-minors sweep (standard grading)");
  verify_minors->add_option("--max-colength", max_colength, "sweep colengths 1..N")->required();
  verify_minors->add_option("--grading", grading_s, "must be 1,1")->capture_default_str();
  add_out(verify_minors);

  CLI::App* edge_probe_cmd =
      app.add_subcommand("edge-probe", "randomized realization of a spine edge");
  edge_probe_cmd->add_option("--hf", hf_s, "Hilbert function of the fiber")->required();
  edge_probe_cmd->add_option("--grading", grading_s, "grading a,b")->capture_default_str();
  edge_probe_cmd->add_option("--prime", prime, "field: a prime modulus, or 0 for the rationals")
      ->capture_default_str();
  edge_probe_cmd->add_option("--seed", seed, "rng seed")->capture_default_str();
  edge_probe_cmd->add_option("--trials", trials, "number of sampled points")
      ->capture_default_str();
  add_out(edge_probe_cmd);

  CLI::App* verify_all = app.add_subcommand("verify-all", "run the full verification suite");
  add_out(verify_all);

  try {
    app.parse(argc, argv);

    const auto t0 = std::chrono::steady_clock::now();
    int rc = 0;
    if (*spine) {
      rc = cmd_spine(colength, format, edge_labels, out_path);
    } else if (*poset) {
      rc = cmd_poset(parse_hf(hf_s), parse_grading(grading_s), format, out_path);
    } else if (*arrows) {
      rc = cmd_arrows(parse_ideal(ideal_s), parse_grading(grading_s), out_path);
    } else if (*universal) {
      rc = cmd_universal(parse_ideal(ideal_s), parse_grading(grading_s), out_path);
    } else if (*macaulay) {
      rc = cmd_macaulay(parse_ideal(ideal_s), parse_grading(grading_s), degree, bar, format,
                        out_path);
    } else if (*matroids) {
      rc = cmd_matroids(parse_ideal(ideal_s), parse_grading(grading_s), degree, random, point_s,
                        prime, seed, format, out_path);
    } else if (*verify_minors) {
      rc = cmd_verify_minors(max_colength, parse_grading(grading_s), out_path);
    } else if (*edge_probe_cmd) {
      rc = cmd_edge_probe(parse_hf(hf_s), parse_grading(grading_s), prime, seed, trials,
                          out_path);
    } else if (*verify_all) {
      rc = cmd_verify_all(out_path);
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    std::cerr << "[time] " << app.get_subcommands().front()->get_name() << ": " << dt.count()
              << "s\n";
    return rc;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const guard_error& e) {
    std::cerr << "guard tripped: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "FAILURE: " << e.what() << "\n";
    return 1;
  }
}
