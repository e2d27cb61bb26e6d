#include "syzygy/experiment_lab.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

#include "syzygy/error.hpp"
#include "syzygy/galois_tools.hpp"
#include "syzygy/parallel.hpp"

namespace syzygy {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

i64 parse_i64(const std::string& s, const char* what) {
  BigInt v;
  try {
    v = parse_bigint(s);
  } catch (const InvalidInput&) {
    throw InvalidInput(std::string("bad integer for ") + what + ": '" + s + "'");
  }
  if (!fits_i64(v)) throw InvalidInput(std::string(what) + " out of range");
  return to_i64(v);
}

i64 pos_mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

BigInt ceil_mul(const BigRational& q, i64 X) {
  BigRational v = q * BigRational(BigInt(static_cast<long>(X)));
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return r;
}

BigInt floor_mul(const BigRational& q, i64 X) {
  BigRational v = q * BigRational(BigInt(static_cast<long>(X)));
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return r;
}

// |F(x,y)| with an int128 fast path; nullopt when zero.
class FormEvaluator {
 public:
  explicit FormEvaluator(const BinaryForm<BigInt>& f) : f_(f) {
    small_ = true;
    for (const auto& c : f.c) {
      if (!fits_i64(c) || abs(c) > BigInt("1000000000")) small_ = false;
      coeff_.push_back(small_ ? to_i64(c) : 0);
    }
  }

  std::optional<BigInt> abs_value(i64 x, i64 y) const {
    if (small_) {
      const int d = f_.degree();
      const i64 m = std::max(std::abs(x), std::abs(y));
      // crude bound sum|c| * m^d < 2^100
      double bound = 0;
      for (i64 c : coeff_) bound += std::fabs(static_cast<double>(c));
      bound *= std::pow(static_cast<double>(m), d);
      if (bound < 1e29) {
        i128 r = 0, xp = 1;
        std::vector<i128> yp(static_cast<std::size_t>(d + 1), 1);
        for (int i = 1; i <= d; ++i) yp[static_cast<std::size_t>(i)] = yp[static_cast<std::size_t>(i - 1)] * y;
        for (int i = d; i >= 0; --i) {
          r += coeff_[static_cast<std::size_t>(i)] * xp * yp[static_cast<std::size_t>(i)];
          xp *= x;
        }
        if (r == 0) return std::nullopt;
        if (r < 0) r = -r;
        if (r < (i128(1) << 62)) return BigInt(std::to_string(static_cast<i64>(r)));
        std::string s;
        while (r > 0) {
          s.push_back(static_cast<char>('0' + static_cast<int>(r % 10)));
          r /= 10;
        }
        std::reverse(s.begin(), s.end());
        return BigInt(s);
      }
    }
    BigInt v = evaluate(f_, BigInt(static_cast<long>(x)), BigInt(static_cast<long>(y)));
    if (v == 0) return std::nullopt;
    return abs(v);
  }

 private:
  BinaryForm<BigInt> f_;
  std::vector<i64> coeff_;
  bool small_ = false;
};

std::vector<std::pair<i64, unsigned>> factor_any(const BigInt& n) {
  if (fits_i64(n)) return factorize_small(to_i64(n));
  std::vector<std::pair<i64, unsigned>> out;
  for (const auto& pp : factorize(n)) {
    if (!fits_i64(pp.prime)) throw InvalidInput("prime factor exceeds 64 bits");
    out.emplace_back(to_i64(pp.prime), pp.exponent);
  }
  return out;
}

// Visits admissible lattice points of X*region row by row; each row gets its
// own accumulator, rows are merged in order.
template <class Acc, class Visit, class Merge>
Acc scan_region(const ExperimentSpec& spec, i64 X, Acc zero, Visit visit, Merge merge) {
  if (X <= 0) return zero;
  const BigInt xlo = ceil_mul(spec.region.x0, X), xhi = floor_mul(spec.region.x1, X);
  const BigInt ylo = ceil_mul(spec.region.y0, X), yhi = floor_mul(spec.region.y1, X);
  if (xlo > xhi || ylo > yhi) return zero;
  if (!fits_i64(xlo) || !fits_i64(xhi) || !fits_i64(ylo) || !fits_i64(yhi)) throw InvalidInput("region too large");
  const i64 x0 = to_i64(xlo), x1 = to_i64(xhi), y0 = to_i64(ylo), y1 = to_i64(yhi);
  const std::size_t rows = static_cast<std::size_t>(x1 - x0 + 1);
  std::vector<Acc> partial(rows, zero);
  const i64 M = spec.M;
  parallel_for(rows, spec.threads, [&](std::size_t r) {
    const i64 x = x0 + static_cast<i64>(r);
    if (pos_mod(x, M) != spec.alpha1) return;
    Acc acc = zero;
    i64 ystart = y0 + pos_mod(spec.alpha2 - y0, M);
    for (i64 y = ystart; y <= y1; y += M) {
      if (std::gcd(x, y) != 1) continue;
      visit(acc, x, y);
    }
    partial[r] = std::move(acc);
  });
  Acc total = zero;
  for (auto& p : partial) merge(total, p);
  return total;
}

class RepresentationCounter {
 public:
  explicit RepresentationCounter(const QuadForm& q) : q_(q) {
    if (!q.positive_definite()) throw InvalidInput("Q must be positive definite");
    if (is_fundamental_discriminant(q.discriminant())) {
      table_ = class_group(q.discriminant());
      cls_ = table_->index_of(q);
    }
  }
  i64 operator()(const BigInt& n) const {
    if (table_) return table_->units() * table_->ideal_class_counts(n)[cls_];
    if (!fits_i64(n)) throw InvalidInput("r_Q argument too large for the lattice count");
    return r_Q_lattice(q_, to_i64(n));
  }

 private:
  QuadForm q_;
  std::optional<ClassGroupTable> table_;
  std::size_t cls_ = 0;
};

i64 epsilon_local(int c1, int c2, unsigned e) {
  i64 s = 0;
  for (unsigned i = 0; i <= e; ++i) {
    i64 t = 1;
    for (unsigned k = 0; k < i; ++k) t *= c1;
    for (unsigned k = i; k < e; ++k) t *= c2;
    s += t;
  }
  return s;
}

i64 epsilon_fast(i64 q1, i64 q2, const BigInt& n) {
  i64 r = 1;
  for (const auto& [p, e] : factor_any(n)) {
    int c1 = q1 == 1 ? 1 : kronecker(q1, p);
    int c2 = q2 == 1 ? 1 : kronecker(q2, p);
    r *= epsilon_local(c1, c2, e);
    if (r == 0) return 0;
  }
  return r;
}

Cyclotomic from_angles(const std::vector<i64>& a) {
  Cyclotomic z(static_cast<int>(a.size()));
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k]) z.add_root(static_cast<long>(k), BigRational(BigInt(std::to_string(a[k]))));
  return z;
}

BigInt to_big(i64 v) { return BigInt(std::to_string(v)); }

}  // namespace

// ------------------------------------------------------------------ spec

BigInt ExperimentSpec::discriminant() const {
  if (Q) return Q->discriminant();
  if (disc) return *disc;
  throw InvalidInput("experiment needs quad or disc");
}

void ExperimentSpec::validate() const {
  if (M < 1) throw InvalidInput("modulus must be >= 1");
  if (alpha1 < 0 || alpha1 >= M || alpha2 < 0 || alpha2 >= M) throw InvalidInput("residue must be reduced mod M");
  if (region.x1 <= region.x0 || region.y1 <= region.y0) throw InvalidInput("region must have positive area");
  if (Q && !Q->positive_definite()) throw InvalidInput("Q must be positive definite");
  if (Q && disc && *disc != Q->discriminant()) throw InvalidInput("disc does not match quad");
  if (!F.c.empty() && (F.is_zero() || F.degree() < 1)) throw InvalidInput("argument form must be nonzero of degree >= 1");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 0) throw InvalidInput("grid values must be >= 0");
    if (i && grid[i] <= grid[i - 1]) throw InvalidInput("grid must be strictly increasing");
  }
}

std::string ExperimentSpec::key() const {
  std::ostringstream o;
  o << "F=";
  for (std::size_t i = 0; i < F.c.size(); ++i) o << (i ? "," : "") << to_string(F.c[i]);
  if (Q) o << ";Q=" << Q->to_string();
  if (disc) o << ";disc=" << to_string(*disc);
  if (character) o << ";chi=" << *character;
  if (P) o << ";P=" << P->to_string();
  o << ";R=" << to_string(region.x0) << "," << to_string(region.x1) << "," << to_string(region.y0) << ","
    << to_string(region.y1) << ";M=" << M << ";a=" << alpha1 << "," << alpha2;
  return o.str();
}

std::vector<std::int64_t> geometric_grid(std::int64_t budget, std::int64_t start, std::int64_t ratio) {
  if (start < 1 || ratio < 2) throw InvalidInput("geometric grid needs start >= 1 and ratio >= 2");
  std::vector<std::int64_t> g;
  for (i64 x = start; x <= budget; x *= ratio) g.push_back(x);
  return g;
}

ExperimentSpec parse_experiment_config(const std::string& text) {
  ExperimentSpec s;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::optional<i64> grid_max;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidInput("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key == "form") {
      std::vector<BigInt> c;
      for (const auto& t : split_commas(val)) c.push_back(parse_bigint(t));
      s.F = BinaryForm<BigInt>(c);
    } else if (key == "quad") {
      s.Q = QuadForm::parse(val);
    } else if (key == "disc") {
      s.disc = parse_bigint(val);
    } else if (key == "character") {
      s.character = static_cast<std::size_t>(parse_i64(val, "character"));
    } else if (key == "polynomial") {
      std::vector<BigInt> c;
      for (const auto& t : split_commas(val)) c.push_back(parse_bigint(t));
      s.P = IntPolynomial::from_descending(c);
    } else if (key == "region") {
      auto p = split_commas(val);
      if (p.size() != 4) throw InvalidInput("region needs x0,x1,y0,y1");
      s.region = {parse_rational(p[0]), parse_rational(p[1]), parse_rational(p[2]), parse_rational(p[3])};
    } else if (key == "modulus") {
      s.M = parse_i64(val, "modulus");
    } else if (key == "residue") {
      auto p = split_commas(val);
      if (p.size() != 2) throw InvalidInput("residue needs a1,a2");
      s.alpha1 = parse_i64(p[0], "residue");
      s.alpha2 = parse_i64(p[1], "residue");
    } else if (key == "grid") {
      s.grid.clear();
      for (const auto& t : split_commas(val)) s.grid.push_back(parse_i64(t, "grid"));
    } else if (key == "grid_max") {
      grid_max = parse_i64(val, "grid_max");
    } else if (key == "threads") {
      s.threads = static_cast<unsigned>(parse_i64(val, "threads"));
    } else {
      throw InvalidInput("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (grid_max) {
    if (!s.grid.empty()) throw InvalidInput("give either grid or grid_max");
    s.grid = geometric_grid(*grid_max);
  }
  s.validate();
  return s;
}

// ------------------------------------------------------------------ sums

BigInt correlation_sum(const ExperimentSpec& spec, std::int64_t X) {
  spec.validate();
  if (!spec.Q) throw InvalidInput("correlation_sum needs quad");
  RepresentationCounter r(*spec.Q);
  FormEvaluator fe(spec.F);
  return scan_region(
      spec, X, BigInt(0),
      [&](BigInt& acc, i64 x, i64 y) {
        if (auto n = fe.abs_value(x, y)) acc += r(*n);
      },
      [](BigInt& a, const BigInt& b) { a += b; });
}

BigInt eisenstein_sum(const ExperimentSpec& spec, std::int64_t X, const BigInt& q1, const BigInt& q2) {
  spec.validate();
  if (q1 * q2 != spec.discriminant()) throw InvalidInput("q1 * q2 must equal the discriminant");
  if (!fits_i64(q1) || !fits_i64(q2)) throw InvalidInput("genus pair out of range");
  const i64 a = to_i64(q1), b = to_i64(q2);
  FormEvaluator fe(spec.F);
  return scan_region(
      spec, X, BigInt(0),
      [&](BigInt& acc, i64 x, i64 y) {
        if (auto n = fe.abs_value(x, y)) acc += to_big(epsilon_fast(a, b, *n));
      },
      [](BigInt& u, const BigInt& v) { u += v; });
}

Cyclotomic cuspidal_sum(const ExperimentSpec& spec, std::int64_t X, const ClassCharacter& psi) {
  spec.validate();
  auto t = class_group(spec.discriminant());
  if (psi.angle.size() != t.order()) throw InvalidInput("character does not belong to this class group");
  FormEvaluator fe(spec.F);
  const std::size_t m = static_cast<std::size_t>(psi.modulus);
  auto acc = scan_region(
      spec, X, std::vector<i64>(m, 0),
      [&](std::vector<i64>& a, i64 x, i64 y) {
        auto n = fe.abs_value(x, y);
        if (!n) return;
        auto counts = t.ideal_class_counts(*n);
        for (std::size_t k = 0; k < counts.size(); ++k)
          if (counts[k]) a[static_cast<std::size_t>(psi.angle[k])] += counts[k];
      },
      [](std::vector<i64>& u, const std::vector<i64>& v) {
        for (std::size_t k = 0; k < u.size(); ++k) u[k] += v[k];
      });
  return from_angles(acc);
}

RecombinationReport recombination_check(const ExperimentSpec& spec, std::int64_t X) {
  spec.validate();
  if (!spec.Q) throw InvalidInput("recombination needs quad");
  const BigInt D = spec.Q->discriminant();
  if (!is_fundamental_discriminant(D)) throw InvalidInput("recombination needs a fundamental discriminant");
  auto t = class_group(D);
  const std::size_t cls = t.index_of(*spec.Q);
  RecombinationReport rep;
  rep.X = X;
  rep.direct = correlation_sum(spec, X);
  const BigRational w(BigInt(t.units()), BigInt(static_cast<long>(t.order())));
  BigRational e = 0;
  for (const auto& pair : canonical_genus_pairs(D))
    e += BigRational(genus_character_value(pair, t, cls)) * BigRational(eisenstein_sum(spec, X, pair.q1, pair.q2));
  Cyclotomic c(t.exponent());
  for (const auto& psi : t.characters()) {
    if (psi.is_real()) continue;
    // lift into Q(zeta_exponent)
    const int scale = t.exponent() / psi.modulus;
    Cyclotomic raw = cuspidal_sum(spec, X, psi);
    Cyclotomic lifted(t.exponent());
    auto coeffs = raw.canonical();
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (coeffs[k] != 0) lifted.add_root(static_cast<long>(k) * scale, coeffs[k]);
    Cyclotomic weight = Cyclotomic::root(t.exponent(), -static_cast<long>(psi.angle[cls]) * scale);
    c = c + lifted * weight;
  }
  rep.eisenstein_part = w * e;
  rep.cuspidal_part = w * c.rational_value();
  rep.holds = rep.eisenstein_part + rep.cuspidal_part == BigRational(rep.direct);
  return rep;
}

// ------------------------------------------------------------------ fitting

FitResult fit_log_exponent(const std::vector<std::int64_t>& grid, const std::vector<double>& values, int power) {
  if (grid.size() != values.size()) throw InvalidInput("grid and values differ in length");
  if (grid.size() < 5) throw InvalidInput("exponent fit needs at least 5 grid points");
  std::vector<double> u, v;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(values[i] > 0)) throw InvalidInput("exponent fit needs positive values");
    if (grid[i] < 3) throw InvalidInput("exponent fit needs X >= 3");
    const double X = static_cast<double>(grid[i]);
    u.push_back(std::log(std::log(X)));
    v.push_back(std::log(values[i]) - power * std::log(X));
  }
  const double n = static_cast<double>(u.size());
  const double mu = std::accumulate(u.begin(), u.end(), 0.0) / n;
  const double mv = std::accumulate(v.begin(), v.end(), 0.0) / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    sxx += (u[i] - mu) * (u[i] - mu);
    sxy += (u[i] - mu) * (v[i] - mv);
  }
  if (sxx == 0) throw InvalidInput("exponent fit needs distinct grid points");
  FitResult r;
  r.beta = sxy / sxx;
  r.intercept = mv - r.beta * mu;
  double ss = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    double res = v[i] - (r.intercept + r.beta * u[i]);
    r.residuals.push_back(res);
    ss += res * res;
  }
  r.rms = std::sqrt(ss / n);
  return r;
}

std::string SeriesResult::to_csv() const {
  std::ostringstream o;
  o << "X,value,normalized\n";
  o.precision(12);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    o << grid[i] << ",";
    if (i < exact.size())
      o << to_string(exact[i]);
    else {
      std::ostringstream v;
      v.precision(15);
      v << values[i];
      o << v.str();
    }
    o << "," << normalized[i] << "\n";
  }
  return o.str();
}

namespace {
void finish_series(SeriesResult& s) {
  s.normalized.clear();
  bool positive = true;
  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    const double X = static_cast<double>(s.grid[i]);
    s.normalized.push_back(X > 0 ? s.values[i] / std::pow(X, s.power) : 0.0);
    if (!(s.values[i] > 0) || s.grid[i] < 3) positive = false;
  }
  if (positive && s.grid.size() >= 5) s.fit = fit_log_exponent(s.grid, s.values, s.power);
}
}  // namespace

SeriesResult correlation_series(const ExperimentSpec& spec) {
  spec.validate();
  SeriesResult s;
  s.grid = spec.grid;
  for (i64 X : spec.grid) {
    BigInt v = correlation_sum(spec, X);
    s.exact.emplace_back(v);
    s.values.push_back(v.get_d());
  }
  finish_series(s);
  return s;
}

// ------------------------------------------------------------------ Hecke sums

Cyclotomic hecke_lambda(const ClassGroupTable& t, const ClassCharacter& xi, const BigInt& n) {
  if (xi.angle.size() != t.order()) throw InvalidInput("character does not belong to this class group");
  return character_ideal_sum(t, xi, n);
}

HeckeValue hecke_abs(const ClassGroupTable& t, const ClassCharacter& xi, const BigInt& n) {
  HeckeValue v;
  v.norm_squared = hecke_lambda(t, xi, n).norm_squared();
  double sq = v.norm_squared.is_rational() ? v.norm_squared.rational_value().get_d() : v.norm_squared.real_approx();
  v.modulus = std::sqrt(std::max(0.0, sq));
  return v;
}

namespace {
// Accumulates |lambda| over a stream of arguments, caching by class-count vector.
struct HeckeAccumulator {
  const ClassGroupTable& t;
  const ClassCharacter& xi;
  std::map<std::vector<i64>, std::pair<double, Cyclotomic>> memo;
  HeckeSum sum;

  HeckeAccumulator(const ClassGroupTable& table, const ClassCharacter& c) : t(table), xi(c) {
    sum.l2 = Cyclotomic(c.modulus);
  }
  void add(const std::optional<BigInt>& n) {
    if (!n) {
      ++sum.zero_terms;
      return;
    }
    auto counts = t.ideal_class_counts(*n);
    auto it = memo.find(counts);
    if (it == memo.end()) {
      std::vector<i64> a(static_cast<std::size_t>(xi.modulus), 0);
      for (std::size_t k = 0; k < counts.size(); ++k) a[static_cast<std::size_t>(xi.angle[k])] += counts[k];
      Cyclotomic ns = from_angles(a).norm_squared();
      double sq = ns.is_rational() ? ns.rational_value().get_d() : ns.real_approx();
      it = memo.emplace(counts, std::make_pair(std::sqrt(std::max(0.0, sq)), ns)).first;
    }
    sum.l1 += it->second.first;
    sum.l2 = sum.l2 + it->second.second;
  }
};

void require_hecke_table(const ClassGroupTable& t, const ClassCharacter& xi) {
  if (!t.fundamental()) throw InvalidInput("Hecke sums need a fundamental discriminant");
  if (xi.angle.size() != t.order()) throw InvalidInput("character not in table");
}
}  // namespace

std::vector<HeckeSum> hecke_l1_series(const ClassGroupTable& t, const ClassCharacter& xi, const IntPolynomial& P,
                                      const std::vector<std::int64_t>& grid) {
  require_hecke_table(t, xi);
  if (P.is_zero()) throw InvalidInput("P must be nonzero");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i] <= grid[i - 1]) throw InvalidInput("grid must be strictly increasing");
  HeckeAccumulator acc(t, xi);
  std::vector<HeckeSum> out;
  i64 n = 0;
  for (i64 X : grid) {
    for (++n; n <= X; ++n) {
      BigInt v = abs(P.eval(to_big(n)));
      acc.add(v == 0 ? std::nullopt : std::optional<BigInt>(v));
    }
    --n;
    HeckeSum s = acc.sum;
    s.X = X;
    out.push_back(s);
  }
  return out;
}

HeckeSum hecke_l1_sum(const ClassGroupTable& t, const ClassCharacter& xi, const IntPolynomial& P, std::int64_t X) {
  if (X <= 0) {
    HeckeSum s;
    s.l2 = Cyclotomic(xi.modulus);
    return s;
  }
  return hecke_l1_series(t, xi, P, {X}).front();
}

HeckeSum hecke_l1_sum(const ClassGroupTable& t, const ClassCharacter& xi, const BinaryForm<BigInt>& P, std::int64_t X,
                      unsigned threads) {
  require_hecke_table(t, xi);
  HeckeSum total;
  total.X = X;
  total.l2 = Cyclotomic(xi.modulus);
  if (X <= 0) return total;
  FormEvaluator fe(P);
  std::vector<HeckeSum> rows(static_cast<std::size_t>(X));
  parallel_for(rows.size(), threads, [&](std::size_t r) {
    HeckeAccumulator acc(t, xi);
    const i64 x = static_cast<i64>(r) + 1;
    for (i64 y = 1; y <= X; ++y) acc.add(fe.abs_value(x, y));
    rows[r] = acc.sum;
  });
  for (const auto& r : rows) {
    total.l1 += r.l1;
    total.l2 = total.l2 + r.l2;
    total.zero_terms += r.zero_terms;
  }
  return total;
}

SeriesResult hecke_series(const ClassGroupTable& t, const ClassCharacter& xi, const IntPolynomial& P,
                          const std::vector<std::int64_t>& grid) {
  SeriesResult s;
  s.grid = grid;
  s.power = 1;
  s.convention = "terms use |P(n)|, P(n) = 0 skipped";
  for (const auto& h : hecke_l1_series(t, xi, P, grid)) s.values.push_back(h.l1);
  finish_series(s);
  return s;
}

double nair_rhs(const IntPolynomial& P, const std::function<double(std::int64_t)>& f, std::int64_t X) {
  if (P.is_zero()) throw InvalidInput("P must be nonzero");
  if (X < 1) return 0;
  if (X > 1000000) throw InvalidInput("nair_rhs supports X <= 10^6");
  double s = 0;
  for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(X))) {
    const i64 rho = local_root_count(P, p);
    if (rho == 0) continue;
    const double fp = f(p);
    s += static_cast<double>(rho) * (fp - 1.0) / static_cast<double>(p);
  }
  return static_cast<double>(X) * std::exp(s);
}

// ------------------------------------------------------------------ constants

double delta_integrand(double y) {
  if (y < -1) throw InvalidInput("integrand defined for y >= -1");
  if (std::fabs(y) < 1e-3) return 1.0 / 8 - y / 16 + 5 * y * y / 128 - 7 * y * y * y / 256;
  return (1 + y / 2 - std::sqrt(1 + y)) / (y * y);
}

DeltaResult delta_inf() {
  const double lo = -1, hi = 2;
  const int steps = 3000;
  double best = delta_integrand(lo), arg = lo;
  for (int i = 1; i <= steps; ++i) {
    double y = lo + (hi - lo) * i / steps;
    double v = delta_integrand(y);
    if (v < best) best = v, arg = y;
  }
  // golden-section refinement around the grid minimum
  double a = std::max(lo, arg - (hi - lo) / steps), b = std::min(hi, arg + (hi - lo) / steps);
  const double g = (std::sqrt(5.0) - 1) / 2;
  for (int it = 0; it < 100; ++it) {
    double c = b - g * (b - a), d = a + g * (b - a);
    if (delta_integrand(c) < delta_integrand(d))
      b = d;
    else
      a = c;
  }
  for (double y : {a, b, (a + b) / 2}) {
    double v = delta_integrand(y);
    if (v < best) best = v, arg = y;
  }
  return {best, arg};
}

DihedralValue dihedral_g(std::int64_t n) {
  if (n < 1) throw InvalidInput("dihedral_g needs n >= 1");
  DihedralValue r;
  double s = 0;
  bool rational = true;
  BigRational exact = 0;
  for (i64 a = 0; a < n; ++a) {
    const i64 b = std::min(a, n - a);
    s += std::fabs(std::cos(2 * std::numbers::pi * static_cast<double>(b) / static_cast<double>(n)));
    if (rational) {
      if ((12 * a) % n != 0) {
        rational = false;
        continue;
      }
      switch ((12 * a / n) % 12) {
        case 0: case 6: exact += 1; break;
        case 2: case 4: case 8: case 10: exact += BigRational(1, 2); break;
        case 3: case 9: break;
        default: rational = false;
      }
    }
  }
  r.value = s / static_cast<double>(n);
  r.error_bound = 4.0 * DBL_EPSILON * static_cast<double>(n + 1);
  if (rational) {
    r.exact = exact / BigRational(BigInt(static_cast<long>(n)));
    r.value = r.exact->get_d();
    r.error_bound = 0;
  }
  return r;
}

DihedralReport dihedral_sup_check(std::int64_t N) {
  if (N < 3) throw InvalidInput("dihedral_sup_check needs N >= 3");
  DihedralReport rep;
  rep.N = N;
  double last = 0;
  for (i64 n = 3; n <= N; ++n) {
    auto g = dihedral_g(n);
    if (g.value > rep.sup) rep.sup = g.value, rep.argmax = n;
    if (n % 2 == 0 && 1.0 / n + g.value > rep.even_sup) rep.even_sup = 1.0 / n + g.value, rep.even_argmax = n;
    last = g.value;
  }
  rep.within_bound = rep.sup <= rep.bound;
  rep.limit_gap = std::fabs(last - 2 / std::numbers::pi);
  return rep;
}

}  // namespace syzygy
