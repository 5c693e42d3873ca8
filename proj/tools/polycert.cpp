#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <polycert/json_io.hpp>

namespace {

using namespace polycert;

constexpr int kExitIrreducible = 0;
constexpr int kExitInconclusive = 1;
constexpr int kExitWitness = 2;
constexpr int kExitUsage = 64;

struct GlobalOptions {
  bool json = false;
  bool quiet = false;
  unsigned long long seed = RootFindingOptions{}.seed;
};

std::ostream& out(const GlobalOptions& g) {
  static std::ostringstream sink;
  if (g.quiet) {
    sink.str("");
    return sink;
  }
  return std::cout;
}

// A polynomial argument is the text grammar, an inline JSON coefficient
// array, or @file.json holding such an array.
Polynomial read_poly_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    std::string path = arg.substr(1);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open polynomial file: " + path);
    return polynomial_from_json(Json::parse(in));
  }
  auto first = arg.find_first_not_of(" \t");
  if (first != std::string::npos && arg[first] == '[')
    return polynomial_from_json(Json::parse(arg));
  return parse_polynomial(arg);
}

Int read_prime_arg(const std::string& text) {
  Int p;
  try {
    p = Int(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: " + text);
  }
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("not a prime: " + text);
  return p;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string render_slope(const PolygonEdge& e) {
  Int num = Int(e.dy());
  Int den = Int(e.dx());
  Int g = boost::multiprecision::gcd(abs_int(num), den);
  num /= g;
  den /= g;
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

std::string render_segments(const std::vector<SegmentVector>& system) {
  std::ostringstream os;
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (i) os << ", ";
    os << "(" << system[i].dx << ", " << system[i].dy << ") x" << system[i].multiplicity;
  }
  if (system.empty()) os << "(none)";
  return os.str();
}

std::string render_factors(const Factorization& fact) {
  std::ostringstream os;
  if (fact.unit < 0) os << "-";
  for (const Polynomial& g : fact.factors) os << "(" << render(g) << ")";
  return os.str();
}

void print_certificate(std::ostream& os, const Certificate& cert) {
  os << "verdict: " << to_string(cert.verdict) << "\n";
  os << "criterion: " << cert.criterion << "\n";
  if (cert.prime) {
    os << "p = " << cert.prime->str();
    if (cert.exponent) os << ", u = " << *cert.exponent;
    if (cert.m) os << ", m = " << *cert.m;
    os << "\n";
  }
  if (cert.bound_lhs && cert.bound_rhs)
    os << "bound: " << cert.bound_lhs->str()
       << (*cert.bound_lhs > *cert.bound_rhs ? " > " : " <= ") << cert.bound_rhs->str() << "\n";
  if (cert.primality_probabilistic) os << "primality: probabilistic\n";
  os << "hypotheses:\n";
  for (const HypothesisReport& r : cert.reports)
    os << "  [" << (r.holds ? " ok " : "fail") << "] " << r.name << ": " << r.detail << "\n";
  if (cert.witness) {
    os << "witness: " << render_factors(*cert.witness) << "\n";
    os << "witness search exhaustive: " << (cert.witness->exhaustive ? "yes" : "no") << "\n";
  }
}

int cmd_check(const GlobalOptions& g, const std::string& poly_arg, bool oracle) {
  Polynomial f = read_poly_arg(poly_arg);
  CheckAllOptions opts;
  opts.use_oracle = oracle;
  Certificate cert = check_all(f, opts);
  if (g.json) {
    out(g) << certificate_to_json(cert).dump(2) << "\n";
  } else {
    out(g) << "f = " << render(f) << "\n";
    print_certificate(out(g), cert);
  }
  switch (cert.verdict) {
    case Verdict::Irreducible: return kExitIrreducible;
    case Verdict::ReducibleWitness: return kExitWitness;
    case Verdict::Inconclusive: break;
  }
  return kExitInconclusive;
}

int cmd_polygon(const GlobalOptions& g, const std::string& poly_arg, const std::string& prime_arg) {
  Polynomial f = read_poly_arg(poly_arg);
  Int p = read_prime_arg(prime_arg);
  NewtonPolygon polygon = newton_polygon(f, p);
  if (g.json) {
    out(g) << polygon_to_json(polygon).dump(2) << "\n";
    return 0;
  }
  out(g) << "f = " << render(f) << ", p = " << p.str() << "\n";
  out(g) << "vertices:";
  for (const ValuationPoint& v : polygon.vertices())
    out(g) << " (" << v.index << ", " << v.val << ")";
  out(g) << "\n";
  out(g) << "edges:\n";
  for (const PolygonEdge& e : polygon.edges())
    out(g) << "  (" << e.from.index << ", " << e.from.val << ") -> (" << e.to.index << ", "
           << e.to.val << ")  slope " << render_slope(e) << "\n";
  out(g) << "segments: " << render_segments(segment_vectors(polygon)) << "\n";
  return 0;
}

int cmd_factor(const GlobalOptions& g, const std::string& poly_arg, std::size_t max_degree,
               std::size_t divisor_cap) {
  Polynomial f = read_poly_arg(poly_arg);
  KroneckerLimits limits;
  limits.max_degree = max_degree;
  limits.divisor_cap = divisor_cap;
  Factorization fact = full_factor(f, limits);
  if (g.json) {
    out(g) << factorization_to_json(fact).dump(2) << "\n";
    return 0;
  }
  out(g) << render(f) << " = " << render_factors(fact) << "\n";
  if (fact.factors.size() <= 1)
    out(g) << (fact.exhaustive ? "irreducible (exhaustive)" : "no factor found (search truncated)")
           << "\n";
  else
    out(g) << "search " << (fact.exhaustive ? "exhaustive" : "truncated") << "\n";
  return 0;
}

int cmd_roots(const GlobalOptions& g, const std::string& poly_arg) {
  Polynomial f = read_poly_arg(poly_arg);
  RootFindingOptions opts;
  opts.seed = g.seed;
  RootSet rs = numeric_roots(f, opts);
  double vieta = 1.0;
  for (const std::complex<double>& z : rs.roots) vieta *= std::abs(z);
  double ratio = static_cast<double>(abs_int(f.constant())) /
                 static_cast<double>(abs_int(f.leading()));
  if (g.json) {
    Json j = root_set_to_json(rs);
    j["min_modulus"] = rs.roots.empty() ? 0.0 : min_root_modulus(rs);
    j["vieta_product"] = vieta;
    j["constant_leading_ratio"] = ratio;
    out(g) << j.dump(2) << "\n";
    return 0;
  }
  out(g) << "f = " << render(f) << "\n";
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    const std::complex<double>& z = rs.roots[i];
    out(g) << "  z = " << fmt(z.real()) << (z.imag() < 0 ? " - " : " + ")
           << fmt(std::abs(z.imag())) << "i"
           << "   |z| = " << fmt(std::abs(z)) << "   residual = " << fmt(rs.residuals[i]) << "\n";
  }
  if (!rs.roots.empty()) out(g) << "min |z| = " << fmt(min_root_modulus(rs)) << "\n";
  out(g) << "vieta product = " << fmt(vieta) << ", |a_0 / a_n| = " << fmt(ratio) << "\n";
  return 0;
}

int cmd_dumas(const GlobalOptions& g, const std::string& g_arg, const std::string& h_arg,
              const std::string& prime_arg) {
  Polynomial gp = read_poly_arg(g_arg);
  Polynomial hp = read_poly_arg(h_arg);
  Int p = read_prime_arg(prime_arg);
  bool holds = verify_dumas(gp, hp, p);
  auto sv_g = segment_vectors(newton_polygon(gp, p));
  auto sv_h = segment_vectors(newton_polygon(hp, p));
  auto sv_f = segment_vectors(newton_polygon(multiply(gp, hp), p));
  if (g.json) {
    Json j;
    j["holds"] = holds;
    j["g"] = segment_vectors_to_json(sv_g);
    j["h"] = segment_vectors_to_json(sv_h);
    j["union"] = segment_vectors_to_json(merge_segment_vectors(sv_g, sv_h));
    j["product"] = segment_vectors_to_json(sv_f);
    out(g) << j.dump(2) << "\n";
  } else {
    out(g) << "g: " << render_segments(sv_g) << "\n";
    out(g) << "h: " << render_segments(sv_h) << "\n";
    out(g) << "union: " << render_segments(merge_segment_vectors(sv_g, sv_h)) << "\n";
    out(g) << "product: " << render_segments(sv_f) << "\n";
    out(g) << (holds ? "Dumas property holds" : "Dumas property violated") << "\n";
  }
  return holds ? 0 : 1;
}

Polynomial poly_from_corpus(const Json& j) {
  if (j.is_string()) return parse_polynomial(j.get<std::string>());
  return polynomial_from_json(j);
}

int cmd_corpus(const GlobalOptions& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open corpus file: " << path << "\n";
    return kExitUsage;
  }
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const std::exception& e) {
    std::cerr << "error: corpus is not valid JSON: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!doc.is_array() || doc.empty()) {
    std::cerr << "error: corpus is empty\n";
    return kExitUsage;
  }

  std::size_t passed = 0;
  Json results = Json::array();
  for (const Json& entry : doc) {
    std::string id = entry.at("id").get<std::string>();
    bool pass = false;
    std::string detail;
    try {
      Polynomial f = poly_from_corpus(entry.at("polynomial"));
      const Json& expect = entry.at("expected");
      if (expect.contains("factors")) {
        Factorization fact = full_factor(f);
        Json got = Json::array();
        for (const Polynomial& part : fact.factors) got.push_back(polynomial_to_json(part));
        pass = got == expect.at("factors") && fact.unit == expect.value("unit", 1) &&
               fact.exhaustive;
        detail = pass ? "factors match: " + render_factors(fact)
                      : "expected " + expect.at("factors").dump() + ", got " + got.dump();
      } else {
        Certificate cert = check_all(f, {});
        std::string want = expect.at("verdict").get<std::string>();
        pass = to_string(cert.verdict) == want;
        if (pass && expect.contains("criterion"))
          pass = cert.criterion == expect.at("criterion").get<std::string>();
        detail = "verdict " + std::string(to_string(cert.verdict)) + " via " + cert.criterion;
      }
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string("error: ") + e.what();
    }
    passed += pass ? 1 : 0;
    if (g.json) {
      Json r;
      r["id"] = id;
      r["pass"] = pass;
      r["detail"] = detail;
      results.push_back(std::move(r));
    } else {
      out(g) << "[" << (pass ? "PASS" : "FAIL") << "] " << id << ": " << detail << "\n";
    }
  }
  if (g.json) {
    Json j;
    j["total"] = doc.size();
    j["passed"] = passed;
    j["results"] = std::move(results);
    out(g) << j.dump(2) << "\n";
  } else {
    out(g) << passed << "/" << doc.size() << " corpus entries passed\n";
  }
  return passed == doc.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Irreducibility certificates for integer polynomials via Newton polygons"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_flag("--json", g.json, "emit machine-readable JSON");
  app.add_flag("--quiet", g.quiet, "suppress normal output; rely on exit codes");
  app.add_option("--seed", g.seed, "seed for numeric root-finding start points");

  std::string poly_arg, poly_arg_h, prime_arg;
  bool oracle = false;
  std::size_t max_degree = 0, divisor_cap = KroneckerLimits{}.divisor_cap;
  std::string corpus_path = POLYCERT_CORPUS_DEFAULT;

  CLI::App* check = app.add_subcommand("check", "run all irreducibility criteria");
  check->add_option("poly", poly_arg, "polynomial (text, JSON array, or @file.json)")->required();
  check->add_flag("--oracle", oracle, "consult the exact factor search for a witness");

  CLI::App* polygon = app.add_subcommand("polygon", "Newton polygon w.r.t. a prime");
  polygon->add_option("poly", poly_arg, "polynomial")->required();
  polygon->add_option("-p,--prime", prime_arg, "prime")->required();

  CLI::App* factor = app.add_subcommand("factor", "exact Kronecker factor search");
  factor->add_option("poly", poly_arg, "polynomial")->required();
  factor->add_option("--max-degree", max_degree, "candidate factor degree cap (0 = half degree)");
  factor->add_option("--divisor-cap", divisor_cap, "divisor count cap per sample point");

  CLI::App* roots = app.add_subcommand("roots", "numeric roots, moduli and Vieta product");
  roots->add_option("poly", poly_arg, "polynomial")->required();

  CLI::App* dumas = app.add_subcommand("dumas", "check the segment-system identity for g*h");
  dumas->add_option("g_poly", poly_arg, "first factor")->required();
  dumas->add_option("h_poly", poly_arg_h, "second factor")->required();
  dumas->add_option("-p,--prime", prime_arg, "prime")->required();

  CLI::App* corpus = app.add_subcommand("corpus", "run the bundled expectation corpus");
  corpus->add_option("file", corpus_path, "corpus JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*check) return cmd_check(g, poly_arg, oracle);
    if (*polygon) return cmd_polygon(g, poly_arg, prime_arg);
    if (*factor) return cmd_factor(g, poly_arg, max_degree, divisor_cap);
    if (*roots) return cmd_roots(g, poly_arg);
    if (*dumas) return cmd_dumas(g, poly_arg, poly_arg_h, prime_arg);
    if (*corpus) return cmd_corpus(g, corpus_path);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
