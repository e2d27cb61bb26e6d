// syzygy: command-line front end.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cache.hpp"
#include "syzygy/class_group.hpp"
#include "syzygy/error.hpp"
#include "syzygy/experiment_lab.hpp"
#include "syzygy/galois_tools.hpp"
#include "syzygy/point_enum.hpp"
#include "syzygy/quartic_classes.hpp"
#include "verify.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace syzygy;

namespace {

constexpr int kExitInvalid = 2, kExitInternal = 3, kExitCache = 4;
constexpr const char* kVersion = "0.3.0";

struct Context {
  std::string out_dir = "syzygy-out";
  std::string manifest_path;
  std::string cache_flag;
  bool no_cache = false;
  unsigned threads = 0;
  bool timing = false;
  bool quiet = false;

  std::string command;
  json parameters = json::object();
  json input_hashes = json::object();
  json outputs = json::array();
  json warnings = json::array();
  json elapsed = json::object();
  std::unique_ptr<cli::Cache> cache;

  cli::Cache& store() {
    if (!cache) cache = std::make_unique<cli::Cache>(no_cache ? fs::path() : cli::resolve_cache_dir(cache_flag));
    return *cache;
  }
};

std::string fixed(double v, int digits = 10) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(digits) << v;
  return o.str();
}

void write_output(Context& ctx, const std::string& name, const std::string& body) {
  fs::create_directories(ctx.out_dir);
  const fs::path p = fs::path(ctx.out_dir) / name;
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidInput("cannot write " + p.string());
  out << body;
  ctx.outputs.push_back(p.string());
}

void emit(Context& ctx, const std::string& name, const json& j) {
  const std::string body = j.dump(2) + "\n";
  write_output(ctx, name, body);
  if (!ctx.quiet) std::cout << body;
}

template <class F>
auto timed(Context& ctx, const std::string& label, F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  auto r = f();
  ctx.elapsed[label] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

void write_manifest(Context& ctx, int exit_code, const std::string& error) {
  json m;
  m["artifact_version"] = kVersion;
  m["command"] = ctx.command;
  m["parameters"] = ctx.parameters;
  m["input_hashes"] = ctx.input_hashes;
  json c;
  c["dir"] = ctx.cache && ctx.cache->enabled() ? ctx.cache->dir().string() : "";
  c["hits"] = ctx.cache ? ctx.cache->hits() : std::vector<std::string>{};
  c["misses"] = ctx.cache ? ctx.cache->misses() : std::vector<std::string>{};
  m["cache"] = c;
  m["outputs"] = ctx.outputs;
  m["warnings"] = ctx.warnings;
  m["elapsed_seconds"] = ctx.elapsed;
  m["exit_code"] = exit_code;
  if (!error.empty()) m["error"] = error;
  try {
    fs::path p = ctx.manifest_path.empty() ? fs::path(ctx.out_dir) / "manifest.json" : fs::path(ctx.manifest_path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary | std::ios::trunc) << m.dump(2) << "\n";
  } catch (const std::exception& e) {
    std::cerr << "warning: manifest not written: " << e.what() << "\n";
  }
}

// ---------------------------------------------------------------- classes

ClassSet load_classes(Context& ctx, const BigRational& I, const BigRational& J, const BigInt& bound,
                      const std::string& lattice_flag, int depth) {
  const FormLattice lattice = resolve_lattice(parse_lattice(lattice_flag), I, J);
  const std::string key = "classes I=" + to_string(I) + " J=" + to_string(J) + " bound=" + to_string(bound) +
                          " lattice=" + lattice_name(lattice) + " depth=" + std::to_string(depth);
  auto& cache = ctx.store();
  if (auto text = cache.load("classes", key)) return parse_class_set(*text);
  ClassSearchOptions opts;
  opts.depth = depth;
  opts.threads = ctx.threads;
  opts.lattice = lattice;
  ClassSet s = timed(ctx, "enumerate_classes", [&] { return enumerate_classes(I, J, bound, opts); });
  cache.store("classes", key, serialize_class_set(s));
  return s;
}

json class_set_json(const ClassSet& s) {
  json j;
  j["I"] = to_string(s.I);
  j["J"] = to_string(s.J);
  j["bound"] = to_string(s.search_bound);
  j["lattice"] = lattice_name(s.lattice);
  j["class_count"] = s.size();
  j["effective_count"] = s.effective_count();
  json ev;
  ev["possibly_incomplete"] = s.evidence.possibly_incomplete;
  ev["search_depth"] = s.evidence.search_depth;
  ev["raw_forms"] = s.evidence.raw_forms;
  ev["merged_by_search"] = s.evidence.merged_by_search;
  ev["note"] = s.evidence.note;
  j["evidence"] = ev;
  json arr = json::array();
  for (std::size_t i = 0; i < s.classes.size(); ++i) {
    const auto& c = s.classes[i];
    json e;
    e["index"] = i;
    e["coefficients"] = c.form.to_string();
    e["form"] = c.form.pretty();
    e["aut_order"] = c.aut_order();
    e["effective"] = c.effective;
    arr.push_back(e);
  }
  j["classes"] = arr;
  return j;
}

void note_incomplete(Context& ctx, const ClassSet& s) {
  if (s.evidence.possibly_incomplete)
    ctx.warnings.push_back("class set from coefficient bound " + to_string(s.search_bound) +
                           " is possibly incomplete (no certified reduction theory)");
}

// ---------------------------------------------------------------- commands

struct QuarticsArgs {
  std::vector<std::string> invariants;
  std::string bound = "40", lattice = "auto";
  int depth = 12;
};

int cmd_quartics(Context& ctx, const QuarticsArgs& a) {
  const BigRational I = parse_rational(a.invariants.at(0)), J = parse_rational(a.invariants.at(1));
  if (I * I * I - 27 * J * J == 0) throw InvalidInput("invariants give a singular curve (I^3 = 27 J^2)");
  ctx.parameters = {{"I", to_string(I)}, {"J", to_string(J)}, {"bound", a.bound}, {"lattice", a.lattice},
                    {"depth", a.depth}};
  ClassSet s = load_classes(ctx, I, J, parse_bigint(a.bound), a.lattice, a.depth);
  note_incomplete(ctx, s);
  json j = class_set_json(s);
  write_output(ctx, "quartics.json", j.dump(2) + "\n");
  if (!ctx.quiet)
    for (const auto& c : s.classes)
      std::cout << c.form.pretty() << "  [" << c.form.to_string() << "]  aut=" << c.aut_order()
                << (c.effective ? "  effective" : "") << "\n";
  return 0;
}

struct SurfaceArgs {
  std::string A, B, Q, bound = "40", lattice = "auto";
  int depth = 12;
};

SurfaceSpec surface_from(const SurfaceArgs& a) {
  SurfaceSpec s{parse_rational(a.A), parse_rational(a.B), QuadForm::parse(a.Q)};
  s.validate();
  return s;
}

struct CountArgs {
  SurfaceArgs surface;
  std::string T, method = "syzygy";
  bool points = false;
};

int cmd_count(Context& ctx, const CountArgs& a) {
  SurfaceSpec s = surface_from(a.surface);
  const BigInt T = parse_bigint(a.T);
  if (T < 0) throw InvalidInput("T must be >= 0");
  if (a.method != "syzygy" && a.method != "brute" && a.method != "both")
    throw InvalidInput("method must be syzygy, brute or both");
  ctx.parameters = {{"A", to_string(s.A)}, {"B", to_string(s.B)}, {"Q", s.Q.to_string()}, {"T", to_string(T)},
                    {"method", a.method}, {"bound", a.surface.bound}, {"lattice", a.surface.lattice}};
  CountOptions opts;
  opts.threads = ctx.threads;
  opts.collect_points = a.points || a.method == "both";
  json results = json::array();
  std::vector<CountResult> done;
  if (a.method != "brute") {
    ClassSet cs = load_classes(ctx, s.target_I(), s.target_J(), parse_bigint(a.surface.bound), a.surface.lattice,
                               a.surface.depth);
    note_incomplete(ctx, cs);
    auto t0 = std::chrono::steady_clock::now();
    done.push_back(count_points_syzygy(s, cs, T, opts));
    double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ctx.elapsed["syzygy"] = el;
    results.push_back(json::parse(count_to_json(s, T, done.back(), ctx.timing ? std::optional(el) : std::nullopt)));
  }
  if (a.method != "syzygy") {
    auto t0 = std::chrono::steady_clock::now();
    done.push_back(count_points_bruteforce(s, T, opts));
    double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ctx.elapsed["brute"] = el;
    results.push_back(json::parse(count_to_json(s, T, done.back(), ctx.timing ? std::optional(el) : std::nullopt)));
  }
  json j;
  j["results"] = results;
  if (done.size() == 2) {
    bool same = done[0].N == done[1].N && done[0].points.size() == done[1].points.size();
    for (std::size_t i = 0; same && i < done[0].points.size(); ++i)
      same = done[0].points[i].same_point(done[1].points[i]);
    j["agree"] = same;
    if (!same) {
      emit(ctx, "count.json", j);
      throw InternalError("syzygy and brute-force counts disagree (N = " + to_string(done[0].N) + " vs " +
                          to_string(done[1].N) + ")");
    }
  }
  if (a.points) write_output(ctx, "points.csv", points_to_csv(done.front().points));
  emit(ctx, "count.json", j);
  return 0;
}

int cmd_classify(Context& ctx, const SurfaceArgs& a) {
  SurfaceSpec s = surface_from(a);
  ctx.parameters = {{"A", to_string(s.A)}, {"B", to_string(s.B)}, {"Q", s.Q.to_string()}, {"bound", a.bound},
                    {"lattice", a.lattice}};
  ClassSet cs = load_classes(ctx, s.target_I(), s.target_J(), parse_bigint(a.bound), a.lattice, a.depth);
  note_incomplete(ctx, cs);
  auto dis = is_disassociated(s.A, s.B, s.Q, cs);
  auto pic = picard_analysis(s.A, s.B, s.Q);
  if (pic.rank != pic.rank_by_substitution)
    throw InternalError("Picard rank methods disagree: " + std::to_string(pic.rank) + " vs " +
                        std::to_string(pic.rank_by_substitution));
  json j;
  j["A"] = to_string(s.A);
  j["B"] = to_string(s.B);
  j["Q"] = s.Q.to_string();
  j["field_discriminant"] = to_string(dis.field_discriminant);
  j["picard"] = pic.rank;
  j["disassociated"] = dis.disassociated;
  j["beta_max"] = dis.beta_max;
  json pj;
  pj["sextic_pattern"] = pic.sextic_pattern;
  pj["cubic_factorization"] = pic.cubic_factorization;
  pj["rank_by_substitution"] = pic.rank_by_substitution;
  j["picard_details"] = pj;
  json arr = json::array();
  for (const auto& e : dis.entries) {
    json x;
    x["coefficients"] = e.form.to_string();
    x["form"] = e.form.pretty();
    std::vector<std::string> sub;
    for (const auto& d : e.subfields) sub.push_back(to_string(d));
    x["quadratic_subfields"] = sub;
    x["beta"] = e.beta;
    x["effective"] = e.effective;
    arr.push_back(x);
  }
  j["classes"] = arr;
  emit(ctx, "classify.json", j);
  return 0;
}

// exact correlation values, cached per X
BigInt cached_correlation(Context& ctx, const ExperimentSpec& spec, std::int64_t X) {
  const std::string key = "correlation " + spec.key() + " X=" + std::to_string(X);
  auto& cache = ctx.store();
  if (auto text = cache.load("series", key)) {
    try {
      std::string t = *text;
      while (!t.empty() && (t.back() == '\n' || t.back() == '\r')) t.pop_back();
      return parse_bigint(t);
    } catch (const InvalidInput&) {
      throw CacheCorruption("unparsable series entry for X=" + std::to_string(X));
    }
  }
  BigInt v = correlation_sum(spec, X);
  cache.store("series", key, to_string(v) + "\n");
  return v;
}

json fit_json(const std::optional<FitResult>& fit) {
  if (!fit) return nullptr;
  json f;
  f["beta_hat"] = fixed(fit->beta, 6);
  f["intercept"] = fixed(fit->intercept, 6);
  f["rms"] = fixed(fit->rms, 6);
  std::vector<std::string> r;
  for (double x : fit->residuals) r.push_back(fixed(x, 6));
  f["residuals"] = r;
  f["note"] = "least-squares slope of log(value/X^k) on log log X; diagnostic only";
  return f;
}

struct ExperimentArgs {
  std::string config, kind = "correlation";
};

int cmd_experiment(Context& ctx, const ExperimentArgs& a) {
  std::ifstream in(a.config, std::ios::binary);
  if (!in) throw InvalidInput("cannot read config " + a.config);
  std::stringstream ss;
  ss << in.rdbuf();
  ctx.input_hashes[a.config] = cli::sha256_hex(ss.str());
  ExperimentSpec spec = parse_experiment_config(ss.str());
  if (ctx.threads) spec.threads = ctx.threads;
  ctx.parameters = {{"config", a.config}, {"kind", a.kind}, {"spec", spec.key()}, {"grid", spec.grid}};
  if (spec.grid.empty()) throw InvalidInput("config needs grid or grid_max");
  json summary;
  summary["spec"] = spec.key();
  summary["kind"] = a.kind;
  summary["convention"] = kSignConvention;
  std::ostringstream csv;
  if (a.kind == "correlation") {
    if (!spec.Q) throw InvalidInput("correlation experiment needs quad");
    SeriesResult s;
    s.grid = spec.grid;
    timed(ctx, "correlation", [&] {
      for (auto X : spec.grid) {
        BigInt v = cached_correlation(ctx, spec, X);
        s.exact.emplace_back(v);
        s.values.push_back(v.get_d());
      }
      return 0;
    });
    s.normalized.clear();
    for (std::size_t i = 0; i < s.grid.size(); ++i)
      s.normalized.push_back(s.grid[i] ? s.values[i] / (double(s.grid[i]) * double(s.grid[i])) : 0.0);
    bool fit_ok = s.grid.size() >= 5;
    for (std::size_t i = 0; i < s.grid.size(); ++i) fit_ok = fit_ok && s.values[i] > 0 && s.grid[i] >= 3;
    if (fit_ok) s.fit = fit_log_exponent(s.grid, s.values, 2);
    csv << "X,value,normalized\n";
    for (std::size_t i = 0; i < s.grid.size(); ++i)
      csv << s.grid[i] << "," << to_string(s.exact[i]) << "," << fixed(s.normalized[i]) << "\n";
    summary["fit"] = fit_json(s.fit);
    if (!s.fit) ctx.warnings.push_back("exponent fit skipped: needs >= 5 positive grid points");
  } else if (a.kind == "recombination") {
    csv << "X,direct,eisenstein_part,cuspidal_part,holds\n";
    bool all = true;
    timed(ctx, "recombination", [&] {
      for (auto X : spec.grid) {
        auto r = recombination_check(spec, X);
        all = all && r.holds;
        csv << X << "," << to_string(r.direct) << "," << to_string(r.eisenstein_part) << ","
            << to_string(r.cuspidal_part) << "," << (r.holds ? "true" : "false") << "\n";
      }
      return 0;
    });
    summary["recombination_holds"] = all;
    if (!all) {
      write_output(ctx, "experiment.csv", csv.str());
      throw InternalError("recombination identity failed");
    }
  } else if (a.kind == "hecke") {
    auto t = class_group(spec.discriminant());
    const std::size_t k = spec.character.value_or(0);
    if (k >= t.characters().size()) throw InvalidInput("character index not in the table");
    const auto& xi = t.characters()[k];
    summary["character_order"] = xi.order;
    csv << "X,l1,normalized,l2_exact\n";
    if (spec.P) {
      auto series = timed(ctx, "hecke", [&] { return hecke_l1_series(t, xi, *spec.P, spec.grid); });
      for (const auto& h : series)
        csv << h.X << "," << fixed(h.l1) << "," << fixed(h.X ? h.l1 / double(h.X) : 0.0) << ","
            << (h.l2.is_rational() ? to_string(h.l2.rational_value()) : fixed(h.l2.real_approx())) << "\n";
    } else {
      for (auto X : spec.grid) {
        auto h = timed(ctx, "hecke X=" + std::to_string(X), [&] { return hecke_l1_sum(t, xi, spec.F, X, spec.threads); });
        csv << X << "," << fixed(h.l1) << "," << fixed(X ? h.l1 / (double(X) * double(X)) : 0.0) << ","
            << (h.l2.is_rational() ? to_string(h.l2.rational_value()) : fixed(h.l2.real_approx())) << "\n";
      }
    }
  } else {
    throw InvalidInput("kind must be correlation, recombination or hecke");
  }
  write_output(ctx, "experiment.csv", csv.str());
  emit(ctx, "experiment.json", summary);
  return 0;
}

struct AppendixArgs {
  std::int64_t n = 0, sup = 0;
  std::string disc = "-23";
  std::size_t character = 1;
  std::vector<std::int64_t> grid{100, 1000, 10000};
  std::string polynomial = "1,0";
};

int cmd_delta(Context& ctx) {
  ctx.parameters = json::object();
  auto d = delta_inf();
  json j;
  j["delta"] = fixed(d.value, 6);
  j["argmin"] = fixed(d.argmin, 6);
  emit(ctx, "appendix_delta.json", j);
  return 0;
}

int cmd_g(Context& ctx, const AppendixArgs& a) {
  ctx.parameters = {{"n", a.n}, {"sup", a.sup}};
  json j;
  if (a.n > 0) {
    auto g = dihedral_g(a.n);
    j["n"] = a.n;
    j["g"] = fixed(g.value, 10);
    j["exact"] = g.exact ? json(to_string(*g.exact)) : json(nullptr);
    j["error_bound"] = g.error_bound;
  }
  if (a.sup >= 3) {
    auto r = dihedral_sup_check(a.sup);
    json s;
    s["N"] = r.N;
    s["sup_g"] = fixed(r.sup, 10);
    s["argmax"] = r.argmax;
    s["bound"] = fixed(r.bound, 2);
    s["within_bound"] = r.within_bound;
    s["gap_to_2_over_pi"] = fixed(r.limit_gap, 10);
    s["even_average_sup"] = fixed(r.even_sup, 10);
    s["even_average_argmax"] = r.even_argmax;
    j["sup_check"] = s;
  }
  if (j.is_null()) throw InvalidInput("give --n N or --sup N (N >= 3)");
  emit(ctx, "appendix_g.json", j);
  return 0;
}

int cmd_hecke(Context& ctx, const AppendixArgs& a) {
  const BigInt D = parse_bigint(a.disc);
  ctx.parameters = {{"disc", a.disc}, {"character", a.character}, {"grid", a.grid}, {"polynomial", a.polynomial}};
  auto t = class_group(D);
  if (a.character >= t.characters().size()) throw InvalidInput("character index not in the table");
  std::vector<BigInt> coeffs;
  std::stringstream ss(a.polynomial);
  std::string item;
  while (std::getline(ss, item, ',')) coeffs.push_back(parse_bigint(item));
  IntPolynomial P = IntPolynomial::from_descending(coeffs);
  const auto& xi = t.characters()[a.character];
  auto series = timed(ctx, "hecke", [&] { return hecke_l1_series(t, xi, P, a.grid); });
  std::ostringstream csv;
  csv << "X,l1,normalized,l2_exact\n";
  json rows = json::array();
  bool decreasing = true;
  double prev = 0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& h = series[i];
    double norm = h.X ? h.l1 / double(h.X) : 0.0;
    if (i && !(norm < prev)) decreasing = false;
    prev = norm;
    std::string l2 = h.l2.is_rational() ? to_string(h.l2.rational_value()) : fixed(h.l2.real_approx());
    csv << h.X << "," << fixed(h.l1) << "," << fixed(norm) << "," << l2 << "\n";
    rows.push_back({{"X", h.X}, {"l1", fixed(h.l1)}, {"normalized", fixed(norm)}, {"l2_exact", l2}});
  }
  write_output(ctx, "appendix_hecke.csv", csv.str());
  json j;
  j["disc"] = a.disc;
  j["character"] = a.character;
  j["character_order"] = xi.order;
  j["series"] = rows;
  j["normalized_strictly_decreasing"] = decreasing;
  emit(ctx, "appendix_hecke.json", j);
  return 0;
}

int cmd_verify(Context& ctx, bool quick) {
  ctx.parameters = {{"quick", quick}};
  auto results = run_verification(quick, ctx.threads);
  json arr = json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    arr.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    if (!ctx.quiet) std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
  }
  write_output(ctx, "verify.json", json{{"all_passed", all}, {"checks", arr}}.dump(2) + "\n");
  if (!all) throw InternalError("verification suite reported failures");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral points on elliptic surfaces and correlation sums of representation numbers"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Context ctx;
  app.add_option("--out", ctx.out_dir, "Directory for outputs and the run manifest")->capture_default_str();
  app.add_option("--manifest", ctx.manifest_path, "Manifest path (default <out>/manifest.json)");
  app.add_option("--cache-dir", ctx.cache_flag, "Cache directory (default $SYZYGY_CACHE_DIR or .syzygy-cache)");
  app.add_flag("--no-cache", ctx.no_cache, "Disable the on-disk cache");
  app.add_option("--threads", ctx.threads, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_flag("--timing", ctx.timing, "Include elapsed times in primary outputs");
  app.add_flag("-q,--quiet", ctx.quiet, "Do not echo results to stdout");

  QuarticsArgs qa;
  auto* quartics = app.add_subcommand("quartics", "List SL2(Z)-classes of integral quartics with given invariants");
  quartics->add_option("--invariants", qa.invariants, "I J as integers or num/den")->expected(2)->required();
  quartics->add_option("--bound", qa.bound, "Coefficient bound")->capture_default_str();
  quartics->add_option("--lattice", qa.lattice, "auto, mordell or integral")->capture_default_str();
  quartics->add_option("--depth", qa.depth, "Equivalence search depth")->capture_default_str();

  auto add_surface = [](CLI::App* sub, SurfaceArgs& s) {
    sub->add_option("--A", s.A, "Coefficient A")->required();
    sub->add_option("--B", s.B, "Coefficient B")->required();
    sub->add_option("--Q", s.Q, "Quadratic form a,b,c")->required();
    sub->add_option("--bound", s.bound, "Coefficient bound for the class search")->capture_default_str();
    sub->add_option("--lattice", s.lattice, "auto, mordell or integral")->capture_default_str();
    sub->add_option("--depth", s.depth, "Equivalence search depth")->capture_default_str();
  };

  CountArgs ca;
  auto* count = app.add_subcommand("count", "Count integral points of bounded height");
  add_surface(count, ca.surface);
  count->add_option("--T", ca.T, "Height bound")->required();
  count->add_option("--method", ca.method, "syzygy, brute or both")->capture_default_str();
  count->add_flag("--points", ca.points, "Write points.csv");

  SurfaceArgs sa;
  auto* classify = app.add_subcommand("classify", "Picard rank, disassociation and beta exponents");
  add_surface(classify, sa);

  ExperimentArgs ea;
  auto* experiment = app.add_subcommand("experiment", "Evaluate a correlation-sum experiment from a config file");
  experiment->add_option("--config", ea.config, "key = value config file")->required()->check(CLI::ExistingFile);
  experiment->add_option("--kind", ea.kind, "correlation, recombination or hecke")->capture_default_str();

  AppendixArgs aa;
  auto* appendix = app.add_subcommand("appendix", "Numeric constants and Hecke L1 sums");
  appendix->require_subcommand(1);
  auto* delta = appendix->add_subcommand("delta", "Infimum of the auxiliary function on [-1, 2]");
  auto* g = appendix->add_subcommand("g", "Dihedral averages g(n)");
  g->add_option("--n", aa.n, "Evaluate g(n)");
  g->add_option("--sup", aa.sup, "Check max over 3 <= n <= N");
  auto* hecke = appendix->add_subcommand("hecke", "Partial sums of |lambda_Xi(|P(n)|)|");
  hecke->add_option("--disc", aa.disc, "Fundamental discriminant")->capture_default_str();
  hecke->add_option("--character", aa.character, "Index into the character table")->capture_default_str();
  hecke->add_option("--grid", aa.grid, "X values, comma separated")->delimiter(',')->capture_default_str();
  hecke->add_option("--polynomial", aa.polynomial, "Coefficients of P, highest degree first")->capture_default_str();

  bool quick = false;
  auto* verify = app.add_subcommand("verify", "Run the property suite");
  verify->add_flag("--quick", quick, "Smaller parameter ranges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    ctx.command = "parse";
    write_manifest(ctx, kExitInvalid, e.what());
    return kExitInvalid;
  }

  int code = 0;
  std::string error;
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (quartics->parsed()) {
      ctx.command = "quartics";
      code = cmd_quartics(ctx, qa);
    } else if (count->parsed()) {
      ctx.command = "count";
      code = cmd_count(ctx, ca);
    } else if (classify->parsed()) {
      ctx.command = "classify";
      code = cmd_classify(ctx, sa);
    } else if (experiment->parsed()) {
      ctx.command = "experiment";
      code = cmd_experiment(ctx, ea);
    } else if (delta->parsed()) {
      ctx.command = "appendix delta";
      code = cmd_delta(ctx);
    } else if (g->parsed()) {
      ctx.command = "appendix g";
      code = cmd_g(ctx, aa);
    } else if (hecke->parsed()) {
      ctx.command = "appendix hecke";
      code = cmd_hecke(ctx, aa);
    } else if (verify->parsed()) {
      ctx.command = "verify";
      code = cmd_verify(ctx, quick);
    }
  } catch (const InvalidInput& e) {
    code = kExitInvalid;
    error = e.what();
  } catch (const CacheCorruption& e) {
    code = kExitCache;
    error = e.what();
  } catch (const InternalError& e) {
    code = kExitInternal;
    error = e.what();
  } catch (const std::exception& e) {
    code = kExitInternal;
    error = e.what();
  }
  ctx.elapsed["total"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!error.empty()) std::cerr << "error: " << error << "\n";
  write_manifest(ctx, code, error);
  return code;
}
