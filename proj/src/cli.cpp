#include "bdm/cli.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "bdm/binom.hpp"
#include "bdm/hyper.hpp"

namespace bdm::cli {

namespace {

using json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

Rational rational_of(const json& v, const std::string& what) {
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw ParseError(what + ": expected an integer or a rational string");
}

RatVector rat_vector(const json& v, const std::string& what) {
  if (!v.is_array()) throw ParseError(what + ": expected an array");
  RatVector out;
  for (const auto& x : v) out.push_back(rational_of(x, what));
  return out;
}

RatVector rat_list(const std::string& text, const std::string& what) {
  RatVector out;
  for (const auto& s : split(text, text.find(':') != std::string::npos ? ':' : ',')) {
    if (s.empty()) throw ParseError(what + ": empty entry");
    out.push_back(parse_rational(s));
  }
  return out;
}

IntMatrix matrix_of(const json& v, const std::string& what) {
  if (!v.is_array() || v.empty()) throw ParseError(what + ": expected a nonempty array of rows");
  std::vector<IntVector> rows;
  for (const auto& row : v) {
    if (!row.is_array() || row.empty()) throw ParseError(what + ": each row must be a nonempty array");
    IntVector r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw ParseError(what + ": entries must be integers");
      r.emplace_back(std::to_string(x.get<long long>()));
    }
    rows.push_back(r);
  }
  try {
    return IntMatrix(rows);
  } catch (const std::invalid_argument& e) {
    throw ParseError(what + ": " + e.what());
  }
}

std::vector<std::string> strings_of(const json& v, const std::string& what) {
  if (!v.is_array()) throw ParseError(what + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) throw ParseError(what + ": expected strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

json rat_json(const RatVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

json matrix_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_si());
    out.push_back(row);
  }
  return out;
}

json ideal_json(const PolyIdeal& I) { return I.to_strings(); }

// Everything a command may need, read lazily from the system file.
class System {
 public:
  System(json doc, const JobSpec& spec) : doc_(std::move(doc)), spec_(spec) {
    if (!doc_.is_object()) throw ParseError("system file must hold a JSON object");
  }

  bool has(const char* key) const { return doc_.contains(key); }

  IntMatrix A() const {
    if (!has("A")) throw ParseError("missing \"A\"");
    return matrix_of(doc_["A"], "A");
  }
  PointedMatrix pointed_A() const { return PointedMatrix(A()); }

  std::size_t n() const {
    if (has("n")) {
      if (!doc_["n"].is_number_unsigned()) throw ParseError("\"n\" must be a nonnegative integer");
      return doc_["n"].get<std::size_t>();
    }
    if (has("A")) return A().cols();
    if (has("breve_A")) return matrix_of(doc_["breve_A"], "breve_A").cols();
    throw ParseError("cannot determine the number of variables; give \"n\"");
  }

  RatVector beta(std::size_t d) const {
    RatVector b;
    if (spec_.beta) b = rat_list(*spec_.beta, "--beta");
    else if (has("beta")) b = rat_vector(doc_["beta"], "beta");
    else b = RatVector(d, Rational(0));
    if (b.size() != d) throw ParseError("beta has " + std::to_string(b.size()) + " entries, expected " + std::to_string(d));
    return b;
  }

  ProjectiveWeight weight(std::size_t n) const {
    RatVector lx, ld;
    if (spec_.weight) {
      if (*spec_.weight == "F") return ProjectiveWeight::order_filtration(n);
      auto parts = split(*spec_.weight, ',');
      if (parts.size() != 2) throw ParseError("--weight expects Lx,Ld with ':'-separated entries");
      lx = rat_list(parts[0], "--weight");
      ld = rat_list(parts[1], "--weight");
    } else if (has("L_x") || has("L_d")) {
      if (!has("L_x") || !has("L_d")) throw ParseError("give both \"L_x\" and \"L_d\"");
      lx = rat_vector(doc_["L_x"], "L_x");
      ld = rat_vector(doc_["L_d"], "L_d");
    } else {
      return ProjectiveWeight::order_filtration(n);
    }
    if (lx.size() != n || ld.size() != n) throw ParseError("weight vectors must have " + std::to_string(n) + " entries");
    try {
      return ProjectiveWeight(lx, ld);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("weight: ") + e.what());
    }
  }

  WeylIdeal weyl_ideal() const {
    WeylParseOptions opts;
    if (has("theta_sugar")) opts.theta_sugar = doc_["theta_sugar"].get<bool>();
    return parse_weyl_ideal(strings_of(doc_["ideal"], "ideal"), n(), opts);
  }

  // "I" with "A", or a truncated system "breve_A" with "d".
  BinomialModuleSpec binomial() const {
    if (has("breve_A")) {
      auto T = truncated();
      return make_binomial_spec(T.A(), toric_ideal(T.breve_A().matrix()), T.beta());
    }
    PointedMatrix A = pointed_A();
    return make_binomial_spec(A, parse_ideal(strings_of(doc_["I"], "I"), d_ring(A.n())), beta(A.d()));
  }

  TruncatedSystem truncated() const {
    IntMatrix breve = matrix_of(doc_["breve_A"], "breve_A");
    if (!has("d") || !doc_["d"].is_number_unsigned()) throw ParseError("truncated systems need \"d\"");
    const auto d = doc_["d"].get<std::size_t>();
    return TruncatedSystem(breve, d, beta(d));
  }

  WeylIdeal hypergeometric() const {
    PointedMatrix A = pointed_A();
    return make_hypergeometric(A, beta(A.d())).ideal;
  }

  // The D-ideal described by the file, whichever form it takes.
  WeylIdeal module_ideal() const {
    if (has("ideal")) return weyl_ideal();
    if (has("I") || has("breve_A")) return binomial_weyl_ideal(binomial());
    return hypergeometric();
  }

 private:
  json doc_;
  const JobSpec& spec_;
};

json components_json(const std::vector<ConormalComponent>& comps) {
  json out = json::array();
  for (const auto& c : comps)
    out.push_back({{"face", c.face.to_string()}, {"dimension", c.dimension}, {"ideal", ideal_json(c.ideal)}});
  return out;
}

json factored_json(const FactoredPoly& f) {
  json factors = json::array();
  for (const auto& p : f.factors) factors.push_back(p.to_string());
  return {{"polynomial", f.to_string()}, {"factors", factors}};
}

json cmd_umbrella(const System& sys) {
  PointedMatrix A = sys.pointed_A();
  auto L = sys.weight(A.n());
  auto U = l_umbrella(A, L);
  json faces = json::array();
  for (std::size_t k = 0; k < U.faces.size(); ++k)
    faces.push_back({{"face", U.faces[k].to_string()}, {"rank", U.faces[k].rank}, {"facet", bool(U.facet[k])},
                     {"pyramid", !U.faces[k].empty() && is_pyramid(U.faces[k], A.matrix())}});
  return {{"A", matrix_json(A.matrix())},
          {"L", L.to_string()},
          {"chart", {{"h", rat_json(U.chart.h)}, {"epsilon", to_string(U.chart.epsilon)}}},
          {"faces", faces}};
}

json cmd_toric(const System& sys) {
  IntMatrix A = sys.A();
  return {{"A", matrix_json(A)}, {"generators", ideal_json(toric_ideal(A))}};
}

int max_dimension(const std::vector<ConormalComponent>& comps) {
  int d = -1;
  for (const auto& c : comps) d = std::max(d, c.dimension);
  return d;
}

json cmd_charvar(const System& sys, const JobSpec& spec) {
  if (sys.has("ideal")) {
    WeylIdeal I = sys.weyl_ideal();
    auto L = sys.weight(I.n());
    PolyIdeal g = gr_ideal(I, L);
    int dim = dimension(g);
    return {{"route", "weyl"}, {"L", L.to_string()}, {"gr", ideal_json(g)}, {"dimension", dim},
            {"holonomic", dim <= static_cast<int>(I.n())}};
  }
  std::vector<ConormalComponent> comps;
  std::string route;
  WeylIdeal module(0);
  ProjectiveWeight L = ProjectiveWeight::order_filtration(1);
  if (sys.has("I") || sys.has("breve_A")) {
    auto S = sys.binomial();
    L = sys.weight(S.A.n());
    route = "binomial";
    comps = char_variety_binomial(S, L);
    if (spec.verify) module = binomial_weyl_ideal(S);
  } else {
    PointedMatrix A = sys.pointed_A();
    L = sys.weight(A.n());
    route = "umbrella";
    comps = char_variety_gkz(A, L);
    if (spec.verify) module = make_hypergeometric(A, sys.beta(A.d())).ideal;
  }
  json out{{"route", route}, {"L", L.to_string()}, {"components", components_json(comps)},
           {"dimension", max_dimension(comps)}};
  if (spec.verify) {
    std::vector<PolyIdeal> ideals;
    for (const auto& c : comps) ideals.push_back(c.ideal);
    PolyIdeal g = gr_ideal(module, L);
    if (!same_radical(g, union_ideal(ideals, gr_ring(module.n()))))
      throw VerificationMismatch("component union differs from Var(gr^L) of the Weyl ideal");
    out["verified"] = true;
  }
  return out;
}

json verified_locus(const FactoredPoly& f, const WeylIdeal& module, const char* route, bool verify) {
  json out{{"route", route}, {"singular_locus", factored_json(f)}};
  if (verify) {
    Poly oracle = divisorial_part(singular_locus(module));
    if (oracle.primitive() != f.poly.primitive())
      throw VerificationMismatch("Weyl singular locus gives " + oracle.to_string());
    out["verified"] = true;
  }
  return out;
}

json cmd_singlocus(const System& sys, const JobSpec& spec) {
  const bool binomial = !sys.has("ideal") && (sys.has("I") || sys.has("breve_A"));
  if (spec.gkz) {
    if (sys.has("ideal") || binomial) throw ParseError("--gkz needs a plain \"A\" system");
    PointedMatrix A = sys.pointed_A();
    return verified_locus(sing_locus_gkz(A), make_hypergeometric(A, sys.beta(A.d())).ideal, "discriminants",
                          spec.verify);
  }
  if (binomial) {
    auto S = sys.binomial();
    if (is_holonomic(S).holonomic)
      return verified_locus(sing_locus_binomial(S), binomial_weyl_ideal(S), "binomial", spec.verify);
  }
  PolyIdeal s = singular_locus(sys.module_ideal());
  json out{{"route", "weyl"}, {"ideal", ideal_json(s)}, {"proper", !s.is_zero()}};
  if (!s.is_zero()) out["divisorial_part"] = divisorial_part(s).to_string();
  return out;
}

json cmd_discriminant(const System& sys) {
  IntMatrix A = sys.A();
  auto D = a_discriminant(A);
  return {{"A", matrix_json(A)}, {"discriminant", D.poly.to_string()}, {"trivial", D.trivial}};
}

json arrangement_json(const QuasidegreeSet& Q) {
  json out = json::array();
  for (const auto& p : Q.pieces) {
    json dirs = json::array();
    for (const auto& d : p.directions) dirs.push_back(rat_json(d));
    out.push_back({{"offset", rat_json(p.offset)}, {"directions", dirs}});
  }
  return out;
}

json cmd_holonomic(const System& sys, const JobSpec& spec) {
  if (sys.has("ideal")) {
    WeylIdeal I = sys.weyl_ideal();
    auto L = sys.weight(I.n());
    auto r = is_L_holonomic(I, L);
    return {{"route", "weyl"}, {"L", L.to_string()}, {"holonomic", r.holonomic}, {"dimension", r.dimension}};
  }
  if (!sys.has("I") && !sys.has("breve_A")) {
    // A-hypergeometric systems are always holonomic; --verify checks it.
    PointedMatrix A = sys.pointed_A();
    json out{{"route", "hypergeometric"}, {"holonomic", true}};
    if (spec.verify) {
      auto L = sys.weight(A.n());
      auto r = is_L_holonomic(make_hypergeometric(A, sys.beta(A.d())).ideal, L);
      if (!r.holonomic) throw VerificationMismatch("gr^L has dimension " + std::to_string(r.dimension));
      out["weyl_dimension"] = r.dimension;
      out["verified"] = true;
    }
    return out;
  }
  auto S = sys.binomial();
  auto v = is_holonomic(S);
  json comps = json::array();
  for (const auto& c : v.components) {
    json primes = json::array();
    for (const auto& p : c.primes) {
      json basis = json::array();
      for (const auto& b : p.lattice.basis()) {
        json row = json::array();
        for (const auto& x : b) row.push_back(x.get_si());
        basis.push_back(row);
      }
      primes.push_back({{"lattice", basis}, {"rescaling", rat_json(p.rescaling)}, {"class", to_string(p.kind)}});
    }
    comps.push_back({{"cell", c.cell.to_string()}, {"ideal", ideal_json(c.ideal)}, {"primes", primes}});
  }
  json out{{"route", "binomial"},
           {"holonomic", v.holonomic},
           {"andean_arrangement", arrangement_json(v.andean_arrangement)},
           {"components", comps},
           {"flagged", v.flagged}};
  if (spec.verify) {
    auto L = sys.weight(S.A.n());
    auto r = is_L_holonomic_binomial(S, L, true);
    out["L"] = L.to_string();
    out["weyl_dimension"] = r.weyl_dimension;
    out["verified"] = true;
  }
  return out;
}

json cmd_rankfinite(const System& sys) {
  WeylIdeal I = sys.module_ideal();
  PolyIdeal s = singular_locus(I);
  return {{"finite_rank", !s.is_zero()}, {"singular_locus", ideal_json(s)}};
}

json cmd_grweyl(const System& sys) {
  WeylIdeal I = sys.module_ideal();
  auto L = sys.weight(I.n());
  WeylIdeal G = left_groebner(I, L);
  PolyIdeal g = gr_ideal(I, L);
  return {{"L", L.to_string()}, {"groebner", G.to_strings()}, {"gr", ideal_json(g)}, {"dimension", dimension(g)}};
}

json cmd_witness(const System& sys) {
  if (!sys.has("breve_A")) throw ParseError("witness needs a truncated system with \"breve_A\" and \"d\"");
  auto T = sys.truncated();
  auto L = sys.weight(T.n());
  auto w = torus_component_witness(T, L);
  return {{"L", L.to_string()},
          {"expected_dimension", T.expected_dimension()},
          {"facet", w.face.to_string()},
          {"tried", w.tried},
          {"dimension", w.dimension},
          {"proper", w.proper},
          {"survives_full_saturation", w.survives_full_saturation},
          {"ideal", ideal_json(w.ideal)}};
}

void render(const json& v, const std::string& indent, std::ostringstream& out) {
  for (auto it = v.begin(); it != v.end(); ++it) {
    const json& x = it.value();
    out << indent << it.key() << ":";
    if (x.is_string()) {
      out << " " << x.get<std::string>() << "\n";
    } else if (x.is_array() && std::all_of(x.begin(), x.end(), [](const json& e) { return !e.is_object(); })) {
      out << (x.empty() ? " []" : "") << "\n";
      for (const auto& e : x) out << indent << "  " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
    } else if (x.is_array()) {
      out << "\n";
      for (const auto& e : x) {
        out << indent << "  -\n";
        render(e, indent + "    ", out);
      }
    } else if (x.is_object()) {
      out << "\n";
      render(x, indent + "  ", out);
    } else {
      out << " " << x.dump() << "\n";
    }
  }
}

json dispatch(const System& sys, const JobSpec& spec) {
  const auto& c = spec.command;
  if (c == "umbrella") return cmd_umbrella(sys);
  if (c == "toric") return cmd_toric(sys);
  if (c == "charvar") return cmd_charvar(sys, spec);
  if (c == "singlocus") return cmd_singlocus(sys, spec);
  if (c == "discriminant") return cmd_discriminant(sys);
  if (c == "holonomic") return cmd_holonomic(sys, spec);
  if (c == "rankfinite") return cmd_rankfinite(sys);
  if (c == "grweyl") return cmd_grweyl(sys);
  if (c == "witness") return cmd_witness(sys);
  throw ParseError("unknown command \"" + c + "\"");
}

}  // namespace

JobResult run_text(const JobSpec& spec, const std::string& system_json) {
  JobResult r;
  try {
    json doc;
    try {
      doc = json::parse(system_json);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    System sys(std::move(doc), spec);
    json report{{"command", spec.command}};
    report.update(dispatch(sys, spec));
    if (spec.json) {
      r.output = report.dump(2) + "\n";
    } else {
      std::ostringstream out;
      render(report, "", out);
      r.output = out.str();
    }
  } catch (const UnsupportedInput& e) {
    r.exit_code = 2;
    r.error = std::string("unsupported input: ") + e.what();
  } catch (const VerificationMismatch& e) {
    r.exit_code = 3;
    r.error = std::string("verification mismatch: ") + e.what();
  } catch (const json::exception& e) {
    r.exit_code = 1;
    r.error = std::string("bad input: ") + e.what();
  } catch (const ParseError& e) {
    r.exit_code = 1;
    r.error = std::string("bad input: ") + e.what();
  } catch (const std::exception& e) {
    r.exit_code = 1;
    r.error = std::string("error: ") + e.what();
  }
  return r;
}

JobResult run(const JobSpec& spec) {
  std::ifstream in(spec.input);
  if (!in) return {1, "", "cannot read " + spec.input};
  std::ostringstream buf;
  buf << in.rdbuf();
  return run_text(spec, buf.str());
}

}  // namespace bdm::cli
