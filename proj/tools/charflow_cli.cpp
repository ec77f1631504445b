// charflow: command-line frontend.
//
// Subcommands: classify | reduce | orbit | sample | fricke | ergodic | oracle
// Exit codes: 0 ok, 2 parse error, 3 iteration/depth cap, 4 empty region,
// 5 verification failure.

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "charflow/charflow.hpp"

namespace cf = charflow;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitEmpty = 4;
constexpr int kExitVerify = 5;

struct GlobalOpts {
  std::string backend = "float";
  std::uint64_t seed = 0;
  double eps = 1e-9;
  std::size_t max_steps = cf::kDefaultMaxSteps;
  std::string out;

  bool exact() const { return backend == "exact"; }
  cf::Tolerance tol() const {
    return exact() ? cf::Tolerance::exact() : cf::Tolerance{eps, eps};
  }
};

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw std::runtime_error("cannot open output file " + g.out);
  f << text;
}

// A point is either a character JSON object or a bare "(x,y,z)" tuple.
cf::Json point_json(const std::string& s) {
  std::string t = s;
  if (!t.empty() && t.front() == '(') {
    if (t.back() != ')') throw cf::ParseError("unbalanced tuple literal");
    t = t.substr(1, t.size() - 2);
    cf::Json j;
    const char* keys[3] = {"x", "y", "z"};
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
      auto comma = t.find(',', pos);
      if ((comma == std::string::npos) != (i == 2))
        throw cf::ParseError("tuple literal needs exactly three coordinates");
      j[keys[i]] = t.substr(pos, comma == std::string::npos ? comma : comma - pos);
      pos = comma + 1;
    }
    j["component"] = "11";
    return j;
  }
  cf::Json j = cf::Json::parse(s, nullptr, false);
  if (j.is_discarded()) throw cf::ParseError("malformed character JSON");
  return j;
}

cf::Character<double> parse_point_double(const std::string& s) {
  return cf::character_from_json_double(point_json(s));
}

cf::Character<cf::Rational> parse_point_rational(const std::string& s) {
  cf::Json j = point_json(s);
  // exact backend rejects non-terminating decimals; route strings through
  // the rational parser and integers directly
  for (const char* k : {"x", "y", "z"}) {
    auto& v = j.at(k);
    if (v.is_number_float()) throw cf::ParseError("float literal on the exact backend");
  }
  return cf::character_from_json_rational(j);
}

template <class T>
cf::Json classify_json(const cf::ReductionTrace<T>& trace) {
  return {{"class", cf::terminator_name(trace.cls)},
          {"kappa", cf::format_scalar(cf::kappa(trace.input))},
          {"word", cf::word_to_string(trace.word)},
          {"terminator", cf::character_to_json(trace.terminator)},
          {"steps", trace.steps.size()}};
}

template <class T>
int run_classify(const cf::Character<T>& u, const GlobalOpts& g) {
  auto norm = cf::normalize_signs(u);
  auto trace = cf::tau_reduce(norm.character, g.tol(), g.max_steps);
  emit(g, classify_json(trace).dump(2));
  return trace.cls == cf::TerminatorClass::IterationCap ? kExitCap : kExitOk;
}

template <class T>
int run_reduce(const cf::Character<T>& u, const GlobalOpts& g,
               const std::string& trace_path) {
  auto trace = cf::tau_reduce(u, g.tol(), g.max_steps);
  const std::string csv = cf::trace_to_csv(trace);
  if (!trace_path.empty()) {
    std::ofstream f(trace_path);
    if (!f) throw std::runtime_error("cannot open trace file " + trace_path);
    f << csv;
    emit(g, classify_json(trace).dump(2));
  } else {
    emit(g, csv);
  }
  return trace.cls == cf::TerminatorClass::IterationCap ? kExitCap : kExitOk;
}

template <class T>
int run_orbit(const cf::Character<T>& u, std::size_t depth, const GlobalOpts& g) {
  auto tree = cf::orbit_tree(u, depth);
  std::string csv = "word,x,y,z,tau\n";
  for (const auto& node : tree.nodes)
    csv += node.word + ',' + cf::format_scalar(node.value.x) + ',' +
           cf::format_scalar(node.value.y) + ',' + cf::format_scalar(node.value.z) + ',' +
           cf::format_scalar(cf::tau(node.value)) + '\n';
  emit(g, csv);
  return kExitOk;
}

int run_sample(double c, const std::string& region, std::size_t n, const GlobalOpts& g) {
  cf::Rng rng(g.seed);
  auto pts = cf::sample_region(c, cf::parse_region(region), n, rng);
  std::string csv = "x,y,z,zbar,kappa\n";
  for (const auto& u : pts)
    csv += cf::format_scalar(u.x) + ',' + cf::format_scalar(u.y) + ',' +
           cf::format_scalar(u.z) + ',' + cf::format_scalar(cf::zbar(u)) + ',' +
           cf::format_scalar(cf::kappa(u)) + '\n';
  emit(g, csv);
  return kExitOk;
}

template <class T>
int run_fricke(const cf::Character<T>& u, const std::string& surface,
               const std::string& word, const GlobalOpts& g) {
  cf::Surface s;
  if (surface == "moebius") s = cf::Surface::MoebiusM;
  else if (surface == "klein") s = cf::Surface::KleinK;
  else throw cf::ParseError("unknown surface '" + surface + "'");
  cf::FrickeVerdict<T> v =
      word.empty() ? cf::fricke_membership(s, u, g.tol())
                   : cf::translate_fricke(u, cf::word_from_string(word), s, g.tol());
  emit(g, cf::verdict_to_json(v).dump(2));
  return kExitOk;
}

int run_ergodic(double c, std::optional<double> z, bool sweep, std::uint64_t iters,
                std::size_t bins, const GlobalOpts& g) {
  cf::ErgodicReport rep;
  if (sweep) {
    cf::Rng rng(g.seed);
    auto start = cf::sample_region(c, cf::Region::Elliptic, 1, rng).front();
    rep = cf::slice_chain_walk(c, start, iters, g.seed, bins);
  } else {
    if (!z) throw cf::ParseError("ergodic needs --z or --sweep");
    rep = cf::zbar_coverage(c, *z, iters, bins, g.seed);
  }
  if (!g.out.empty()) {
    emit(g, cf::report_to_csv(rep));
    std::cout << cf::report_to_json(rep).dump(2) << '\n';
  } else {
    std::cout << cf::report_to_json(rep).dump(2) << '\n';
  }
  return kExitOk;
}

int run_oracle(const std::string& suite, std::size_t n, const GlobalOpts& g,
               const std::string& report_path) {
  cf::Json report;
  report["suite"] = suite;
  report["seed"] = g.seed;
  int code = kExitOk;
  cf::Rng rng(g.seed);
  if (suite == "threshold") {
    report["moebius_threshold"] = cf::threshold_search(cf::Surface::MoebiusM, -20, -10, 64);
    report["klein_threshold"] = cf::threshold_search(cf::Surface::KleinK, 2, 10, 64);
  } else if (suite == "agreement") {
    std::size_t checked = 0, mismatches = 0;
    cf::Json bad = cf::Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      auto u = cf::random_rational_omega0_M(rng);
      auto w = cf::random_lambda_word(1 + rng() % 8, rng);
      auto v = cf::apply_word(w, u);
      auto trace = cf::tau_reduce(v, cf::Tolerance::exact());
      if (trace.cls == cf::TerminatorClass::IterationCap) continue;
      auto res = cf::classify_bruteforce_full(v, 12);
      if (!res.cls) continue;
      ++checked;
      const bool ok =
          (trace.cls == cf::TerminatorClass::FrickeM && res.found_fricke) ||
          (trace.cls == cf::TerminatorClass::EllipticE && res.found_elliptic) ||
          (trace.cls == cf::TerminatorClass::SigmaZero && res.found_sigma_zero);
      if (!ok) {
        ++mismatches;
        bad.push_back(cf::character_to_json(v));
      }
    }
    report["checked"] = checked;
    report["mismatches"] = mismatches;
    report["bad_inputs"] = bad;
    if (mismatches) code = kExitVerify;
  } else if (suite == "certify") {
    std::size_t verified = 0;
    for (std::size_t i = 0; i < n; ++i) {
      auto u = cf::random_rational_omega0_M(rng);
      auto w = cf::random_lambda_word(1 + rng() % 8, rng, /*avoid_qz_first=*/true);
      auto trace = cf::tau_reduce(cf::apply_word(w, u), cf::Tolerance::exact());
      if (trace.cls == cf::TerminatorClass::IterationCap) continue;
      verified += cf::certify(trace).verified;
    }
    report["verified"] = verified;
  } else {
    throw cf::ParseError("unknown suite '" + suite + "'");
  }
  const std::string text = report.dump(2);
  if (!report_path.empty()) {
    std::ofstream f(report_path);
    if (!f) throw std::runtime_error("cannot open report file " + report_path);
    f << text;
  }
  std::cout << text << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("CHARFLOW_THREADS")) {
    int n = std::atoi(threads);
    if (n > 0) omp_set_num_threads(n);
  }

  CLI::App app{"modular-group dynamics on real character varieties"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  GlobalOpts g;
  app.add_option("--backend", g.backend)->check(CLI::IsMember({"float", "exact"}));
  app.add_option("--seed", g.seed);
  app.add_option("--eps", g.eps);
  app.add_option("--max-steps", g.max_steps);
  app.add_option("--out", g.out);

  std::string point, word, surface = "moebius", region = "omegaM", suite = "threshold";
  std::string trace_path;
  std::size_t depth = 8, n = 100, bins = cf::kDefaultBins;
  double c = -5;
  std::optional<double> z;
  bool sweep = false;
  std::uint64_t iters = 1'000'000;

  auto* classify = app.add_subcommand("classify", "reduce and report the class");
  classify->add_option("--point", point)->required();

  auto* reduce = app.add_subcommand("reduce", "emit the full reduction trace");
  reduce->add_option("--point", point)->required();
  reduce->add_option("--trace", trace_path);

  auto* orbit = app.add_subcommand("orbit", "enumerate the orbit tree");
  orbit->add_option("--point", point)->required();
  orbit->add_option("--depth", depth);

  auto* sample = app.add_subcommand("sample", "sample a region of kappa^{-1}(c)");
  sample->add_option("--c", c)->required();
  sample->add_option("--region", region);
  sample->add_option("--n", n);

  auto* fricke = app.add_subcommand("fricke", "Fricke-space membership");
  fricke->add_option("--point", point)->required();
  fricke->add_option("--surface", surface);
  fricke->add_option("--word", word);

  auto* ergodic = app.add_subcommand("ergodic", "slice rotation experiments");
  ergodic->add_option("--c", c)->required();
  ergodic->add_option("--z", z);
  ergodic->add_flag("--sweep", sweep);
  ergodic->add_option("--iters", iters);
  ergodic->add_option("--bins", bins);

  auto* oracle = app.add_subcommand("oracle", "brute-force verification suites");
  oracle->add_option("--suite", suite)->check(CLI::IsMember({"agreement", "certify", "threshold"}));
  oracle->add_option("--n", n);
  oracle->add_option("--report", trace_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (classify->parsed())
      return g.exact() ? run_classify(parse_point_rational(point), g)
                       : run_classify(parse_point_double(point), g);
    if (reduce->parsed())
      return g.exact() ? run_reduce(parse_point_rational(point), g, trace_path)
                       : run_reduce(parse_point_double(point), g, trace_path);
    if (orbit->parsed()) {
      try {
        return g.exact() ? run_orbit(parse_point_rational(point), depth, g)
                         : run_orbit(parse_point_double(point), depth, g);
      } catch (const cf::DepthCapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;  // caps on user-supplied depth are argument errors
      }
    }
    if (sample->parsed()) return run_sample(c, region, n, g);
    if (fricke->parsed())
      return g.exact() ? run_fricke(parse_point_rational(point), surface, word, g)
                       : run_fricke(parse_point_double(point), surface, word, g);
    if (ergodic->parsed()) return run_ergodic(c, z, sweep, iters, bins, g);
    if (oracle->parsed()) return run_oracle(suite, n, g, trace_path);
  } catch (const cf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const cf::EmptyRegion& e) {
    std::cerr << "empty region: " << e.what() << '\n';
    return kExitEmpty;
  } catch (const cf::DepthCapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const cf::VerificationFailed& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitVerify;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
