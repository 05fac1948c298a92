#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ellsurf/affine_coweights.hpp"
#include "ellsurf/errors.hpp"
#include "ellsurf/hom_calculator.hpp"
#include "ellsurf/integrable_dynamics.hpp"
#include "ellsurf/integral_transforms.hpp"
#include "ellsurf/report.hpp"
#include "ellsurf/suites.hpp"

using namespace ellsurf;

namespace {

[[noreturn]] void usage(const std::string& msg) { throw Error(ErrorKind::UsageError, msg); }

double parse_real(const std::string& s, const std::string& whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  usage("not a complex number: " + whole);
}

// "1.5", "-2i", "0.3+0.1i", "0.3-1e-2i"
cplx parse_complex(std::string text) {
  const std::string whole = text;
  text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }), text.end());
  if (text.empty()) usage("empty complex number");
  if (text.back() != 'i') return {parse_real(text, whole), 0.0};
  text.pop_back();
  std::size_t cut = std::string::npos;
  for (std::size_t k = text.size(); k-- > 1;)
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      cut = k;
      break;
    }
  if (cut == std::string::npos) return {0.0, parse_real(text, whole)};
  return {parse_real(text.substr(0, cut), whole), parse_real(text.substr(cut), whole)};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  for (const auto& t : split(s, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(t, &used));
      if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::exception&) {
      usage("not an integer list: " + s);
    }
  }
  return v;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) usage("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// key=value lines, '#' comments
std::map<std::string, std::string> read_config(const std::string& path) {
  std::map<std::string, std::string> kv;
  std::istringstream in(slurp(path));
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos) usage("config line without '=': " + line);
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

// One image vector per line for s, f, e_1..e_m; lines starting with "rel"
// are relations. Coordinate 0 is p and coordinate 1 is q.
ExactParamMap read_param_map(const std::string& path, BlowdownBasis basis, int m) {
  std::vector<IntVec> images;
  IntMat relations;
  std::istringstream in(slurp(path));
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    bool rel = false;
    if (const auto pos = line.find("rel"); pos != std::string::npos) {
      rel = true;
      line.erase(pos, 3);
    }
    std::istringstream ls(line);
    IntVec v;
    std::int64_t x;
    while (ls >> x) v.push_back(x);
    if (!ls.eof()) usage("bad parameter map line in " + path);
    if (v.empty()) continue;
    (rel ? relations : images).push_back(v);
  }
  if (images.size() != static_cast<std::size_t>(m + 2)) usage("parameter map needs m + 2 image vectors");
  const std::size_t n = images.front().size();
  for (const auto& v : images)
    if (v.size() != n) usage("image vectors differ in length");
  for (const auto& v : relations)
    if (v.size() != n) usage("relation length differs from image length");
  if (n < 2) usage("image vectors need the p and q coordinates");
  return ExactParamMap(basis, n, 0, 1, std::move(images), std::move(relations));
}

RatFunc parse_entry(const Json& e) {
  if (!e.is_object() || !e.contains("coeffs")) usage("matrix entry needs {\"low\", \"coeffs\"}");
  const int low = e.value("low", 0);
  std::vector<mpq_class> c;
  for (const auto& x : e.at("coeffs")) {
    if (x.is_number_integer()) {
      c.emplace_back(x.get<long>());
    } else if (x.is_string()) {
      mpq_class r;
      if (r.set_str(x.get<std::string>(), 10) != 0) usage("bad rational " + x.get<std::string>());
      r.canonicalize();
      c.push_back(r);
    } else {
      usage("coefficients are integers or \"num/den\" strings");
    }
  }
  return RatFunc::laurent(low, c);
}

LaurentMatrix read_matrix(const std::string& path) {
  Json j;
  try {
    j = Json::parse(slurp(path));
  } catch (const Json::exception& e) {
    usage(std::string("bad matrix JSON: ") + e.what());
  }
  const Json& rows = j.is_object() ? j.at("rows") : j;
  LaurentMatrix a;
  a.n = static_cast<int>(rows.size());
  if (a.n == 0) usage("empty matrix");
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != a.n) usage("matrix must be square");
    for (const auto& e : row) a.entries.push_back(parse_entry(e));
  }
  return a;
}

Json ints_json(const std::vector<int>& v) { return Json(v); }

struct Options {
  std::uint64_t seed = 1;
  std::string out;
  bool timing = false;

  // eval
  std::string p = "0.2", q = "0.5", z = "0.7", fn = "theta";
  int k = 1;
  // dim
  int m = 0;
  std::string d1 = "0,0", d2, rho = "generic", basis = "even";
  // verify
  std::string suite;
  // dynamics
  int iterate = -1;
  std::string word, report = "degree";
  // beta-integral
  std::string t;
  // coweight
  std::string matrix;
};

RunReport run_eval(const Options& o) {
  RunReport r;
  const cplx p = parse_complex(o.p), q = parse_complex(o.q), z = parse_complex(o.z);
  r.inputs = {{"p", o.p}, {"q", o.q}, {"z", o.z}, {"fn", o.fn}};
  cplx v;
  if (o.fn == "theta") {
    v = theta_p(p, z);
  } else if (o.fn == "gamma") {
    v = elliptic_gamma(p, q, z);
  } else if (o.fn == "poch") {
    r.inputs["k"] = std::to_string(o.k);
    v = theta_pochhammer(p, q, z, o.k);
  } else {
    usage("--fn must be theta, gamma or poch");
  }
  r.result["value"] = complex_json(v);
  return r;
}

RunReport run_dim(const Options& o) {
  RunReport r;
  if (o.d2.empty()) usage("--d2 is required");
  const BlowdownBasis basis = o.basis == "odd" ? BlowdownBasis::Odd
                              : o.basis == "even" ? BlowdownBasis::Even
                                                  : (usage("--basis must be even or odd"), BlowdownBasis::Even);
  auto cls = [&](const std::string& s) {
    auto c = parse_ints(s);
    if (c.size() != static_cast<std::size_t>(o.m + 2)) usage("divisor needs m + 2 coefficients (s, f, e_1..e_m)");
    return DivisorClass(basis, c);
  };
  const DivisorClass source = cls(o.d1), target = cls(o.d2);
  const ExactParamMap rho = o.rho == "generic" ? ExactParamMap::generic(basis, o.m) : read_param_map(o.rho, basis, o.m);
  r.inputs = {{"m", std::to_string(o.m)}, {"d1", o.d1}, {"d2", o.d2}, {"rho", o.rho}, {"basis", o.basis}};
  const auto res = saturated_dim_traced(rho, source, target);
  r.result["dim"] = res.dim;
  r.result["trace"] = res.trace;
  return r;
}

RunReport run_verify(const Options& o) {
  RunReport r;
  if (o.suite.empty()) usage("--suite is required");
  r.inputs = {{"suite", o.suite}};
  r.cases = run_suite(o.suite, o.seed);
  r.result["suite"] = o.suite;
  return r;
}

RunReport run_dynamics(const Options& o) {
  RunReport r;
  Rng rng(o.seed);
  if (o.iterate >= 0 && o.word.empty()) {
    r.inputs = {{"iterate", std::to_string(o.iterate)}};
    const int deg = iterate_degree(RatTensor::random_integer(rng), o.iterate, rng);
    r.result["degree"] = deg;
    r.cases.push_back(exact_case("degree", 2LL * o.iterate * o.iterate + 1, deg));
    return r;
  }
  if (o.word.empty() || o.iterate >= 0) usage("give exactly one of --iterate and --word");
  const auto w = parse_ints(o.word);
  for (int g : w)
    if (g < 1 || g > 3) usage("word letters are 1, 2 or 3");
  r.inputs = {{"word", o.word}, {"report", o.report}};
  const auto de = coxeter_degree_entropy(w);
  if (o.report == "degree") {
    r.result["degree"] = de.degree;
    // the numeric composite is cheap only for short words
    if (w.size() <= 4)
      r.cases.push_back(exact_case("composite degree", de.degree, word_degree(RatTensor::random_integer(rng), w, rng)));
  } else if (o.report == "entropy") {
    r.result["entropy"] = de.entropy;
    r.result["zero_entropy"] = de.zero_entropy;
    r.result["char_poly"] = de.char_poly;
    r.cases.push_back(bool_case("zero entropy", de.zero_entropy, de.entropy < 1e-9));
  } else {
    usage("--report must be degree or entropy");
  }
  return r;
}

RunReport run_beta(const Options& o) {
  RunReport r;
  std::vector<cplx> t;
  for (const auto& s : split(o.t, ',')) t.push_back(parse_complex(s));
  if (t.size() != 6) usage("--t needs six parameters");
  const cplx p = parse_complex(o.p), q = parse_complex(o.q);
  r.inputs = {{"t", o.t}, {"p", o.p}, {"q", o.q}};
  const auto b = beta_integral(t, p, q);
  r.result["value"] = complex_json(b.value);
  r.result["closed_form"] = complex_json(b.closed_form);
  r.result["nodes"] = b.nodes;
  const double scale = std::abs(b.closed_form);
  r.cases.push_back(bound_case("relative error", scale == 0.0 ? std::abs(b.value) : std::abs(b.value - b.closed_form) / scale, 1e-6));
  r.cases.push_back(bound_case("node doubling", b.doubling_error, 1e-9));
  return r;
}

RunReport run_coweight(const Options& o) {
  RunReport r;
  if (o.matrix.empty()) usage("--matrix is required");
  r.inputs = {{"matrix", o.matrix}};
  const auto a = read_matrix(o.matrix);
  const Coweight l = coweight(a);
  r.result["coweight"] = ints_json(l.parts);
  r.result["dominant"] = l.is_dominant();
  const auto snf = local_smith_form(a);
  r.cases.push_back(exact_case("local smith form", l.to_string(), snf.lambda.to_string()));
  r.cases.push_back(bool_case("left factor invertible at 0", true, snf.left.invertible_at_zero()));
  r.cases.push_back(bool_case("right factor invertible at 0", true, snf.right.invertible_at_zero()));
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elliptic difference operators and noncommutative surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::string config;
  app.add_option("--config", config, "key=value file; flags override it");
  app.add_option("--seed", o.seed, "random seed")->envname("ELLSURF_SEED");
  app.add_option("--out", o.out, "write the report here instead of stdout");
  app.add_flag("--timing", o.timing, "record wall_time_ms");

  auto* eval = app.add_subcommand("eval", "evaluate theta_p, Gamma_{p,q} or the theta-Pochhammer symbol");
  eval->add_option("--p", o.p);
  eval->add_option("--q", o.q);
  eval->add_option("--z", o.z);
  eval->add_option("--fn", o.fn)->check(CLI::IsMember({"theta", "gamma", "poch"}));
  eval->add_option("--k", o.k);

  auto* dim = app.add_subcommand("dim", "saturated Hom dimension from an exact parameter map");
  dim->add_option("--m", o.m)->check(CLI::NonNegativeNumber);
  dim->add_option("--d1", o.d1, "source class s,f,e1..em");
  dim->add_option("--d2", o.d2, "target class s,f,e1..em");
  dim->add_option("--rho", o.rho, "generic or a parameter map file");
  dim->add_option("--basis", o.basis)->check(CLI::IsMember({"even", "odd"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite)->check(CLI::IsMember(suite_names()));

  auto* dyn = app.add_subcommand("dynamics", "degrees and entropy of the discrete dynamics");
  dyn->add_option("--iterate", o.iterate)->check(CLI::NonNegativeNumber);
  dyn->add_option("--word", o.word, "letters 1,2,3");
  dyn->add_option("--report", o.report)->check(CLI::IsMember({"degree", "entropy"}));

  auto* beta = app.add_subcommand("beta-integral", "elliptic beta integral against its closed form");
  beta->add_option("--t", o.t, "t1,...,t6 with product pq");
  beta->add_option("--p", o.p);
  beta->add_option("--q", o.q);

  auto* cw = app.add_subcommand("coweight", "coweight of a matrix over Q(z)");
  cw->add_option("--matrix", o.matrix, "JSON rows of {low, coeffs} entries");

  // config values become option defaults before parsing
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--config") config = argv[i + 1];
  try {
    if (!config.empty()) {
      for (const auto& [key, value] : read_config(config)) {
        CLI::Option* opt = app.get_option_no_throw("--" + key);
        for (auto* sub : {eval, dim, verify, dyn, beta, cw})
          if (opt == nullptr) opt = sub->get_option_no_throw("--" + key);
        if (opt == nullptr) usage("unknown config key: " + key);
        opt->default_val(value);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "eval") report = run_eval(o);
    else if (name == "dim") report = run_dim(o);
    else if (name == "verify") report = run_verify(o);
    else if (name == "dynamics") report = run_dynamics(o);
    else if (name == "beta-integral") report = run_beta(o);
    else report = run_coweight(o);
    report.command = name;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    if (e.kind() == ErrorKind::UsageError) std::cerr << app.help();
    return 2;
  }
  report.seed = o.seed;
  if (o.timing)
    report.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  const std::string text = report.to_json().dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "cannot write " << o.out << "\n";
      return 2;
    }
    f << text;
  }
  return report.all_pass() ? 0 : 1;
}
