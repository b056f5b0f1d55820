#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "k3lat/divisor.hpp"
#include "k3lat/enumerate.hpp"
#include "k3lat/errors.hpp"
#include "k3lat/io.hpp"
#include "k3lat/kummer.hpp"
#include "k3lat/models.hpp"
#include "k3lat/orbit.hpp"
#include "k3lat/quotient.hpp"
#include "k3lat/suite.hpp"

namespace k3lat::cli {

namespace {

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  VerdictList verdicts;
  std::vector<CriterionReport> suite;  // only for the suite command
  bool is_suite = false;

  bool pass() const {
    return verdicts.all_pass() &&
           std::all_of(suite.begin(), suite.end(), [](const CriterionReport& r) { return r.pass(); });
  }
};

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) {
    auto b = tok.find_first_not_of(" \t"), e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty entry in list \"" + s + "\"");
    out.push_back(tok.substr(b, e - b + 1));
  }
  return out;
}

IntVector parse_int_list(const std::string& s) {
  IntVector v;
  for (const auto& t : split(s)) {
    Integer x;
    if (x.set_str(t, 10) != 0) throw UsageError("not an integer: " + t);
    v.push_back(x);
  }
  return v;
}

RatVector parse_rat_list(const std::string& s) {
  RatVector v;
  for (const auto& t : split(s)) v.push_back(parse_rational(t));
  return v;
}

Json lattice_summary(const GramLattice& l) {
  auto inv = l.invariants();
  Json j;
  j["rank"] = inv.rank;
  j["signature"] = Json::array({inv.signature.positive, inv.signature.negative});
  j["determinant"] = integer_json(inv.determinant);
  j["abs_determinant"] = integer_json(inv.abs_determinant());
  j["even"] = inv.is_even;
  auto dg = discriminant_group(l);
  Json orders = Json::array();
  for (const auto& o : invariant_factors(dg.orders)) orders.push_back(integer_json(o));
  j["discriminant_group"] = orders;
  if (inv.is_even && dg.order() != 0 && dg.order() <= Integer(std::to_string(kCensusGuard)))
    j["q_census"] = to_json(q_census(discriminant_form(l)));
  return j;
}

// ---- family ----

struct FamilyArgs {
  std::string name;
  long d = 1;
  std::string nsy_case = "auto";
  std::string tfamily = "kummer";
  std::string out_file;
};

void family_build(const FamilyArgs& a, Report& r) {
  r.inputs = Json{{"name", a.name}, {"d", a.d}, {"case", a.nsy_case}, {"family", a.tfamily}};
  if (a.d < 1) throw UsageError("--d must be positive");
  GramLattice l;
  std::optional<Integer> expected_det;
  std::optional<Signature> expected_sig;
  if (a.name == "K") {
    l = kummer_lattice().lattice();
    expected_det = 64;
  } else if (a.name == "N") {
    l = nikulin_lattice().lattice();
    expected_det = 64;
  } else if (a.name == "MG") {
    l = mg_lattice().lattice();
    expected_det = 128;
  } else if (a.name == "K4d") {
    l = k4d_prime(a.d).lattice();
    expected_det = 64 * a.d;
    expected_sig = Signature{1, 16};
  } else if (a.name == "NSY") {
    NsyCase c = NsyCase::Auto;
    if (a.nsy_case == "iv") c = NsyCase::IV;
    else if (a.nsy_case != "auto") throw UsageError("--case accepts auto or iv");
    l = nsy_lattice(a.d, c).lattice();
    expected_det = 64 * a.d;
    r.results["case"] = to_string(nsy_resolve_case(a.d, c));
  } else if (a.name == "Lambda") {
    l = k3_lattice_glued().lattice();
    expected_det = 1;
    expected_sig = Signature{3, 19};
  } else if (a.name == "Omega") {
    l = omega_g(a.d).omega.sub;
    expected_det = 512;
  } else if (a.name == "T") {
    TFamily f = parse_tfamily(a.tfamily);
    l = transcendental_lattice(f, a.d);
    GramLattice partner = f == TFamily::Kummer ? k4d_prime(a.d).lattice()
                          : f == TFamily::Y    ? nsy_lattice(a.d).lattice()
                                               : w_vector_complement(f, a.d);
    bool opposite = f == TFamily::Kummer || f == TFamily::Y;
    auto fp = discriminant_form(partner);
    auto ft = discriminant_form(l);
    r.verdicts.check(opposite ? "q_T isometric to -q_NS" : "disc form matches the w-complement", true,
                     forms_isomorphic(ft, opposite ? fp.negated() : fp).isomorphic);
  } else {
    throw UsageError("unknown family name " + a.name);
  }
  r.results["lattice"] = lattice_to_json(document_of(l));
  r.results["invariants"] = lattice_summary(l);
  if (expected_det) r.verdicts.check("|det|", integer_json(*expected_det), integer_json(l.invariants().abs_determinant()));
  if (expected_sig)
    r.verdicts.check("signature", Json::array({expected_sig->positive, expected_sig->negative}),
                     Json::array({l.signature().positive, l.signature().negative}));
  if (a.name != "T") r.verdicts.check("even", true, l.is_even());
  if (!a.out_file.empty()) write_lattice_file(a.out_file, document_of(l));
}

// ---- orbit ----

void orbit_classify(long p, const std::string& vec, Report& r) {
  r.inputs = Json{{"p", p}, {"vector", vec}};
  IntVector v = parse_int_list(vec);
  if (v.size() != 5) throw UsageError("--vector needs five coordinates a0..a4");
  auto c = classify_t2p(p, v);
  GramLattice t = t2p_lattice(p);
  Json params = Json::object();
  for (const auto& [k, x] : c.params) params[k] = integer_json(x);
  r.results["tag"] = c.tag;
  r.results["params"] = params;
  r.results["aliases"] = c.aliases;
  r.results["representative"] = to_json(c.representative);
  r.results["norm"] = integer_json(t.norm(v));
  r.results["witness"] = to_json(c.witness);
  r.verdicts.check("witness maps the input to the representative", true, c.witness * v == c.representative);
  r.verdicts.check("witness is an isometry", true, is_isometry(t, c.witness));
  if (t.norm(v) != 0) {
    auto inv = orbit_invariants(p, v);
    r.results["det_complement"] = integer_json(inv.det_complement);
    r.verdicts.check("d(v-perp) matches the table", integer_json(expected_complement_det(p, c)),
                     integer_json(inv.det_complement));
  }
}

// ---- divisor ----

struct DivisorArgs {
  std::string lattice_file;
  std::string cls;
  std::string mode = "ample";
  std::string curves;
  std::string sections;
  std::string expect;
};

std::vector<std::pair<std::string, IntVector>> pick_curves(const GramLattice& l, const std::string& names) {
  std::vector<std::pair<std::string, IntVector>> out;
  if (!names.empty()) {
    for (const auto& n : split(names)) {
      auto i = l.index_of(n);
      if (!i) throw UsageError("no basis vector labeled " + n);
      out.emplace_back(n, l.basis_vector(*i));
    }
    return out;
  }
  for (std::size_t i = 0; i < l.rank(); ++i)
    if (l.gram()(i, i) == -2) out.emplace_back(l.labels().empty() ? "b" + std::to_string(i) : l.labels()[i], l.basis_vector(i));
  return out;
}

void divisor_check(const DivisorArgs& a, Report& r) {
  r.inputs = Json{{"lattice", a.lattice_file}, {"class", a.cls}, {"mode", a.mode}};
  if (!a.curves.empty()) r.inputs["curves"] = a.curves;
  GramLattice ns = read_lattice_file(a.lattice_file).resolve();
  auto curves = pick_curves(ns, a.curves);
  if (a.mode == "evenset") {
    std::vector<IntVector> cv;
    for (const auto& c : curves) cv.push_back(c.second);
    auto rep = even_sets(ns, cv);
    Json w = Json::object();
    for (const auto& [k, n] : rep.weights) w[std::to_string(k)] = n;
    r.results["curves"] = curves.size();
    r.results["kernel_dim"] = rep.kernel_dim;
    r.results["weights"] = w;
    if (!a.expect.empty()) r.verdicts.check("kernel dimension", std::stol(a.expect), rep.kernel_dim);
    return;
  }
  if (a.cls.empty()) throw UsageError("--class is required for mode " + a.mode);
  IntVector c = parse_int_list(a.cls);
  if (c.size() != ns.rank()) throw DimensionError("--class needs " + std::to_string(ns.rank()) + " coordinates");
  if (a.mode == "ample") {
    PolarizedNS p{ns, curves, c};
    auto v = ample_up_to_weyl(p);
    r.results["status"] = to_string(v.status);
    r.results["square"] = integer_json(v.square);
    r.results["root_type"] = v.root_type_string;
    r.results["contracted_curves"] = v.contracted_curves;
    r.results["scope"] = "verified up to the Weyl group and sign";
    if (!a.expect.empty()) r.verdicts.check("status", a.expect, to_string(v.status));
    else r.verdicts.check("candidate has positive square", true, v.square > 0);
  } else if (a.mode == "fibration") {
    std::vector<IntVector> sections, components;
    if (!a.sections.empty()) {
      for (const auto& s : pick_curves(ns, a.sections)) sections.push_back(s.second);
      for (const auto& cc : curves)
        if (ns.pairing(cc.second, c) == 0) components.push_back(cc.second);
    } else {
      for (const auto& cc : curves) {
        Integer deg = ns.pairing(cc.second, c);
        if (deg == 1) sections.push_back(cc.second);
        else if (deg == 0) components.push_back(cc.second);
      }
    }
    auto rep = fibration_check(ns, c, sections, components);
    r.results["f_square"] = integer_json(rep.f_square);
    r.results["sections"] = sections.size();
    r.results["components"] = components.size();
    r.results["z"] = to_json(rep.z);
    r.results["root_type"] = rep.roots.type_string();
    r.results["fiber_hints"] = rep.fiber_hints;
    r.verdicts.check("F^2 = 0", 0, integer_json(rep.f_square));
    r.verdicts.check("sections meet F once", true, rep.sections_ok);
    r.verdicts.check("components orthogonal to F", true, rep.components_ok);
    if (!a.expect.empty()) r.verdicts.check("root type", a.expect, rep.roots.type_string());
  } else {
    throw UsageError("--mode must be ample, fibration or evenset");
  }
}

// ---- enriques ----

void enriques_search(const std::string& q, Report& r) {
  r.inputs = Json{{"q", q}};
  auto eq = q.find('=');
  if (eq == std::string::npos) throw UsageError("--q expects shape=param, e.g. t=1");
  EnriquesShape shape = parse_enriques_shape(q.substr(0, eq));
  long param = 0;
  try {
    param = std::stol(q.substr(eq + 1));
  } catch (const std::exception&) {
    throw UsageError("bad parameter in --q " + q);
  }
  auto c = enriques_embedding(shape, param);
  Json vecs = Json::array();
  for (const auto& v : c.ambient_vectors) vecs.push_back(to_json(v));
  Json e8 = Json::array();
  for (const auto& v : c.e8_vectors) e8.push_back(to_json(v));
  Json divs = Json::array();
  for (const auto& d : c.elementary_divisors) divs.push_back(integer_json(d));
  r.results["q_gram"] = to_json(c.q_gram);
  r.results["e8_vectors"] = e8;
  r.results["ambient_vectors"] = vecs;
  r.results["induced_gram"] = to_json(c.induced_gram);
  r.results["elementary_divisors"] = divs;
  r.results["complement_gram"] = to_json(c.complement.gram());
  r.verdicts.check("induced Gram is U(2) + Q(2)", to_json(c.expected_gram), to_json(c.induced_gram));
  r.verdicts.check("primitive", true, c.primitive);
  r.verdicts.check("complement has no -2 vectors", 0, c.complement_roots.size());
}

// ---- quotient ----

void quotient_verify(Report& r) {
  auto rep = verify_quotient_identities(build_quotient_maps());
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    r.verdicts.check(c.name, true, c.pass);
  }
  auto chain = overlattice_chain_check();
  Json steps = Json::array();
  for (const auto& s : chain.steps)
    steps.push_back(Json{{"name", s.name}, {"sub_det", integer_json(s.sub_det)}, {"super_det", integer_json(s.super_det)},
                         {"index", integer_json(s.index)}, {"consistent", s.consistent}});
  r.results["identities"] = checks;
  r.results["chain"] = steps;
  r.results["total_index"] = integer_json(chain.total_index);
  r.results["quarter_classes_generate"] = chain.quarter_classes_generate;
  r.verdicts.check("total index 2^23", 23, chain.total_exponent);
  r.verdicts.check("chain closes", true, chain.closes);
}

// ---- models ----

void models_igusa(const std::string& leading, Report& r) {
  r.inputs = Json{{"leading", leading}};
  auto rep = igusa_relation_check(parse_rational(leading));
  r.results["identically_zero"] = rep.identically_zero;
  r.results["nonzero_terms"] = rep.nonzero_terms;
  r.results["spot_value_at_1_2_3_5"] = rational_json(rep.spot_value);
  if (!rep.identically_zero) r.results["witness"] = rep.witness;
  r.verdicts.check("relation vanishes identically", true, rep.identically_zero);
}

void models_invariants(int degree, const std::string& group, Report& r) {
  r.inputs = Json{{"degree", degree}, {"group", group}};
  std::vector<ProjectiveTransform> gens;
  std::size_t nvars = 4;
  if (group == "heisenberg") gens = heisenberg_generators();
  else if (group == "even-sign") gens = even_sign_generators(), nvars = 6;
  else if (group != "trivial") throw UsageError("--group must be heisenberg, even-sign or trivial");
  auto basis = invariant_space(nvars, gens, degree);
  Json polys = Json::array();
  for (const auto& p : basis) polys.push_back(to_string(p));
  r.results["dimension"] = basis.size();
  r.results["basis"] = polys;
  bool fixed = true;
  for (const auto& p : basis)
    for (const auto& g : gens) fixed = fixed && substitute(p, g) == p;
  r.verdicts.check("basis fixed by every generator", true, fixed);
  if (group == "heisenberg" && degree == 4) r.verdicts.check("spanned by p0..p4", true, same_span(basis, heisenberg_quartics()));
}

void models_gradient(const std::string& file, const std::string& point, Report& r) {
  r.inputs = Json{{"poly", file}, {"point", point}};
  auto p = read_polynomial_file(file);
  RatVector x = parse_rat_list(point);
  auto g = gradient_at(p, x);
  r.results["polynomial"] = to_string(p);
  r.results["value"] = rational_json(p.evaluate(x));
  r.results["gradient"] = to_json(g);
  bool nonzero = std::any_of(g.begin(), g.end(), [](const Rational& v) { return v != 0; });
  r.results["nonzero_gradient"] = nonzero;
  if (p.is_homogeneous() && !p.is_zero()) {
    Rational euler = 0;
    for (std::size_t i = 0; i < x.size(); ++i) euler += x[i] * g[i];
    r.verdicts.check("Euler identity", rational_json(p.evaluate(x) * p.degree()), rational_json(euler));
  }
}

// ---- lattice ----

void lattice_info(const std::string& file, const std::string& spec, Report& r) {
  GramLattice l;
  if (!file.empty()) {
    r.inputs = Json{{"file", file}};
    auto doc = read_lattice_file(file);
    l = doc.resolve();
    r.verdicts.check("file round trip is bit exact", dump_lattice(doc), dump_lattice(parse_lattice(dump_lattice(doc))));
  } else if (!spec.empty()) {
    r.inputs = Json{{"spec", spec}};
    l = standard_lattice(spec);
  } else {
    throw UsageError("lattice info needs --file or --spec");
  }
  r.results["lattice"] = lattice_to_json(document_of(l));
  r.results["invariants"] = lattice_summary(l);
}

void lattice_roots(const std::string& file, const std::string& spec, long norm, Report& r) {
  GramLattice l = !file.empty() ? read_lattice_file(file).resolve() : standard_lattice(spec);
  r.inputs = Json{{"file", file}, {"spec", spec}, {"norm", norm}};
  auto vs = enumerate_vectors(l, norm);
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  r.results["count_up_to_sign"] = vs.size();
  r.results["vectors"] = a;
  bool ok = std::all_of(vs.begin(), vs.end(), [&](const IntVector& v) { return l.norm(v) == norm; });
  r.verdicts.check("every vector has the requested norm", true, ok);
}

// ---- output ----

Json report_json(const Report& r, double elapsed_ms) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  if (r.is_suite) {
    Json crit = Json::array();
    Json timings = Json::object();
    for (const auto& c : r.suite) {
      crit.push_back(to_json(c));
      timings[std::to_string(c.info.id)] = c.elapsed_ms;
    }
    j["results"] = Json{{"criteria", crit}};
    Json verdicts = Json::array();
    for (const auto& c : r.suite)
      verdicts.push_back(Json{{"claim", "AC" + std::to_string(c.info.id) + " " + c.info.key},
                              {"expected", "pass"},
                              {"computed", c.pass() ? "pass" : "fail"},
                              {"pass", c.pass()}});
    j["verdicts"] = verdicts;
    j["pass"] = r.pass();
    j["timings_ms"] = timings;
  } else {
    j["results"] = r.results;
    j["verdicts"] = r.verdicts.to_json();
    j["pass"] = r.pass();
  }
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::string short_json(const Json& j) {
  std::string s = j.is_string() ? j.get<std::string>() : j.dump();
  return s.size() > 40 ? s.substr(0, 37) + "..." : s;
}

void render_human(const Report& r, double elapsed_ms, std::ostream& out) {
  out << r.command << "\n";
  if (r.is_suite) {
    for (const auto& c : r.suite) {
      out << "  AC" << std::setw(2) << std::setfill('0') << c.info.id << std::setfill(' ') << "  " << std::left
          << std::setw(18) << c.info.key << std::right << (c.pass() ? "PASS" : "FAIL") << std::setw(10) << std::fixed
          << std::setprecision(1) << c.elapsed_ms << " ms\n";
      for (const auto& v : c.verdicts.items())
        if (!v.pass) out << "        failed: " << v.claim << " expected " << short_json(v.expected) << " got " << short_json(v.computed) << "\n";
    }
  } else {
    for (const auto& v : r.verdicts.items())
      out << "  " << std::left << std::setw(52) << v.claim << std::setw(22) << short_json(v.expected) << std::setw(22)
          << short_json(v.computed) << std::right << (v.pass ? "PASS" : "FAIL") << "\n";
  }
  out << (r.pass() ? "all verdicts pass" : "verification failed") << " (" << std::fixed << std::setprecision(1)
      << elapsed_ms << " ms)\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k3lat: exact lattice and polynomial certificates for Kummer and K3 surfaces", "k3lat"};
  app.require_subcommand(1);
  app.fallthrough();  // --human may follow the subcommand
  bool human = false;
  app.add_flag("--human", human, "aligned text instead of JSON");

  Report report;
  std::function<void()> action;

  auto* family = app.add_subcommand("family", "named lattices")->require_subcommand(1);
  FamilyArgs fa;
  auto* fbuild = family->add_subcommand("build", "build a named lattice and verify its invariants");
  fbuild->add_option("--name", fa.name, "K, N, MG, K4d, NSY, Lambda, Omega or T")
      ->required()
      ->check(CLI::IsMember({"K", "N", "MG", "K4d", "NSY", "Lambda", "Omega", "T"}));
  fbuild->add_option("--d", fa.d, "family parameter d (or t, s, u for T)");
  fbuild->add_option("--case", fa.nsy_case, "auto or iv (NSY only)");
  fbuild->add_option("--family", fa.tfamily, "transcendental family: kummer, X1, X2, X3, Y");
  fbuild->add_option("--out", fa.out_file, "also write the lattice file here");
  fbuild->callback([&] { report.command = "family build"; action = [&] { family_build(fa, report); }; });

  auto* orbit = app.add_subcommand("orbit", "orbit normal forms in <-2p> + U + U")->require_subcommand(1);
  long p = 0;
  std::string vec;
  auto* oclass = orbit->add_subcommand("classify", "classify a primitive vector");
  oclass->add_option("--p", p, "prime p")->required();
  oclass->add_option("--vector", vec, "a0,a1,a2,a3,a4")->required();
  oclass->callback([&] { report.command = "orbit classify"; action = [&] { orbit_classify(p, vec, report); }; });

  auto* divisor = app.add_subcommand("divisor", "divisor classes on a lattice file")->require_subcommand(1);
  DivisorArgs da;
  auto* dcheck = divisor->add_subcommand("check", "ampleness, fibration or even-set check");
  dcheck->add_option("--lattice", da.lattice_file, "lattice file")->required();
  dcheck->add_option("--class", da.cls, "class coordinates c0,...,cn");
  dcheck->add_option("--mode", da.mode, "ample, fibration or evenset")
      ->check(CLI::IsMember({"ample", "fibration", "evenset"}));
  dcheck->add_option("--curves", da.curves, "labels of the known -2 curves (default: all basis vectors of square -2)");
  dcheck->add_option("--sections", da.sections, "labels of sections (fibration mode)");
  dcheck->add_option("--expect", da.expect, "expected status, root type or kernel dimension");
  dcheck->callback([&] { report.command = "divisor check"; action = [&] { divisor_check(da, report); }; });

  auto* enriques = app.add_subcommand("enriques", "Enriques embedding search")->require_subcommand(1);
  std::string q;
  auto* esearch = enriques->add_subcommand("search", "search a certificate for U(2) + Q(2) in U + E8(-2)");
  esearch->add_option("--q", q, "t=N, s=N or u=N")->required();
  esearch->callback([&] { report.command = "enriques search"; action = [&] { enriques_search(q, report); }; });

  auto* quotient = app.add_subcommand("quotient", "push-forward and pull-back maps")->require_subcommand(1);
  auto* qverify = quotient->add_subcommand("verify", "verify all identities and the index chain");
  qverify->callback([&] { report.command = "quotient verify"; action = [&] { quotient_verify(report); }; });

  auto* models = app.add_subcommand("models", "polynomial identities")->require_subcommand(1);
  std::string leading = "16";
  auto* migusa = models->add_subcommand("igusa-check", "quartic relation among p0..p4");
  migusa->add_option("--leading", leading, "coefficient of p4^4 (16 is the true relation)");
  migusa->callback([&] { report.command = "models igusa-check"; action = [&] { models_igusa(leading, report); }; });
  int degree = 4;
  std::string group = "heisenberg";
  auto* minv = models->add_subcommand("invariants", "invariant polynomials of a given degree");
  minv->add_option("--degree", degree, "degree 0..8")->required();
  minv->add_option("--group", group, "heisenberg, even-sign or trivial");
  minv->callback([&] { report.command = "models invariants"; action = [&] { models_invariants(degree, group, report); }; });
  std::string poly_file, point;
  auto* mgrad = models->add_subcommand("gradient", "exact gradient at a rational point");
  mgrad->add_option("--poly", poly_file, "polynomial file")->required();
  mgrad->add_option("--point", point, "comma-separated rationals")->required();
  mgrad->callback([&] { report.command = "models gradient"; action = [&] { models_gradient(poly_file, point, report); }; });

  auto* lattice = app.add_subcommand("lattice", "generic lattice operations")->require_subcommand(1);
  std::string lfile, lspec;
  long norm = -2;
  auto* linfo = lattice->add_subcommand("info", "invariants and discriminant form");
  linfo->add_option("--file", lfile, "lattice file");
  linfo->add_option("--spec", lspec, "standard lattice, e.g. U(2)^3+<-4>");
  linfo->callback([&] { report.command = "lattice info"; action = [&] { lattice_info(lfile, lspec, report); }; });
  auto* lroots = lattice->add_subcommand("vectors", "vectors of a given norm in a negative definite lattice");
  lroots->add_option("--file", lfile, "lattice file");
  lroots->add_option("--spec", lspec, "standard lattice");
  lroots->add_option("--norm", norm, "even negative norm");
  lroots->callback([&] { report.command = "lattice vectors"; action = [&] { lattice_roots(lfile, lspec, norm, report); }; });

  std::string filter;
  bool serial = false;
  auto* suite = app.add_subcommand("suite", "run every acceptance criterion");
  suite->add_option("--filter", filter, "comma-separated ids, keys or tags");
  suite->add_flag("--serial", serial, "run criteria one after another");
  suite->callback([&] {
    report.command = "suite";
    action = [&] {
      report.is_suite = true;
      report.inputs = Json{{"filter", filter}};
      SuiteOptions opts;
      opts.filter = filter;
      opts.parallel = !serial;
      report.suite = run_suite(opts);
      if (report.suite.empty()) throw UsageError("filter \"" + filter + "\" selects no criterion");
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!action) {
    err << "usage error: no command given\n" << app.help();
    return kExitUsage;
  }

  auto start = std::chrono::steady_clock::now();
  try {
    action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    report.verdicts.fail("command ran to completion", e.what());
  }
  double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (human) render_human(report, elapsed, out);
  else out << report_json(report, elapsed).dump(2) << "\n";
  return report.pass() ? kExitPass : kExitFail;
}

}  // namespace k3lat::cli
