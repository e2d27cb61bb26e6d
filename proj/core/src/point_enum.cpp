#include "syzygy/point_enum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "syzygy/class_group.hpp"
#include "syzygy/error.hpp"
#include "syzygy/parallel.hpp"

namespace syzygy {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

constexpr i64 kMaxHeight = 100000;

BigInt from_i128(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u & ~0ULL));
  BigInt r = (hi << 64) + lo;
  return neg ? BigInt(-r) : r;
}

// Integer form num / den, evaluated exactly in 128 bits when the caller has
// checked the magnitude, otherwise through GMP.
struct ScaledForm {
  std::vector<BigInt> num;
  std::vector<i64> small;
  BigInt den = 1;
  bool fits = true;

  explicit ScaledForm(const RatForm& f) {
    for (const auto& c : f.c) den = lcm(den, BigInt(c.get_den()));
    for (const auto& c : f.c) {
      BigRational s = c * den;
      num.push_back(s.get_num());
      if (!fits_i64(num.back())) fits = false;
      small.push_back(fits ? to_i64(num.back()) : 0);
    }
  }
  int degree() const { return static_cast<int>(num.size()) - 1; }
  double abs_sum() const {
    double s = 0;
    for (const auto& c : num) s += std::abs(c.get_d());
    return s;
  }
  // True if every evaluation with |m| <= radius stays well inside 128 bits.
  bool safe_for(i64 radius) const {
    if (!fits) return false;
    double bound = abs_sum() * std::pow(static_cast<double>(radius) + 1, degree());
    return bound < 1e36;
  }
  i128 eval128(i64 x, i64 y) const {
    // Horner in x with the y powers folded in
    i128 r = 0, ypow = 1;
    std::vector<i128> yp(small.size());
    for (std::size_t i = 0; i < small.size(); ++i) {
      yp[i] = ypow;
      ypow *= y;
    }
    for (std::size_t i = 0; i < small.size(); ++i) r = r * x + i128(small[i]) * yp[i];
    return r;
  }
  BigInt eval_big(const BigInt& x, const BigInt& y) const {
    BigInt r = 0, yp = 1;
    std::vector<BigInt> ypw(num.size());
    for (std::size_t i = 0; i < num.size(); ++i) {
      ypw[i] = yp;
      yp *= y;
    }
    for (std::size_t i = 0; i < num.size(); ++i) r = r * x + num[i] * ypw[i];
    return r;
  }
};

RatForm half(const RatForm& f) {
  RatForm r = f;
  for (auto& c : r.c) c /= 2;
  return r;
}

std::vector<std::pair<i64, i64>> representations(const QuadForm& q, i64 n) {
  std::vector<std::pair<i64, i64>> out;
  const i64 a = to_i64(q.a), b = to_i64(q.b), c = to_i64(q.c);
  const i64 absD = 4 * a * c - b * b;
  i64 vmax = static_cast<i64>(std::sqrt(4.0L * a * n / absD)) + 1;
  for (i64 v = -vmax; v <= vmax; ++v) {
    i128 disc = i128(4) * a * n - i128(absD) * v * v;
    if (disc < 0) continue;
    i64 s = static_cast<i64>(std::sqrt(static_cast<long double>(disc)));
    while (s > 0 && i128(s) * s > disc) --s;
    while (i128(s + 1) * (s + 1) <= disc) ++s;
    if (i128(s) * s != disc) continue;
    for (i64 num : {-b * v + s, -b * v - s}) {
      if (num % (2 * a) == 0) out.emplace_back(num / (2 * a), v);
      if (s == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

i64 height_of(const BigInt& T) {
  if (T < 0) throw InvalidInput("height bound must be non-negative");
  if (T > kMaxHeight) throw InvalidInput("height bound above " + std::to_string(kMaxHeight));
  return to_i64(T);
}

bool is_square128(i128 v, i128& root) {
  if (v < 0) return false;
  i128 s = static_cast<i128>(std::sqrt(static_cast<long double>(v)));
  while (s > 0 && s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  root = s;
  return s * s == v;
}

void check_classes(const SurfaceSpec& s, const ClassSet& classes) {
  if (classes.I != s.target_I() || classes.J != s.target_J())
    throw InvalidInput("class set invariants (" + to_string(classes.I) + ", " + to_string(classes.J) +
                       ") do not match the surface (" + to_string(s.target_I()) + ", " + to_string(s.target_J()) + ")");
}

struct ClassScan {
  const QuarticClass* cls;
  std::size_t index;
  ResidueSet residues;
  ScaledForm H, Y;  // Hessian and T/2
  std::vector<std::array<i64, 4>> aut;
  i64 radius;
};

ClassScan prepare(const QuarticClass& c, std::size_t index, const BigRational& bound) {
  ClassScan s{&c, index, admissible_residues(c.form), ScaledForm(c.form.hessian()), ScaledForm(half(c.form.jacobian())), {}, 0};
  for (const auto& m : c.automorphisms) s.aut.push_back({to_i64(m.m11), to_i64(m.m12), to_i64(m.m21), to_i64(m.m22)});
  if (s.aut.empty()) throw InternalError("class without automorphism group");
  s.radius = region_radius(c.form, bound);
  return s;
}

bool canonical_in_orbit(const ClassScan& s, i64 m1, i64 m2) {
  for (const auto& M : s.aut) {
    i64 a = M[0] * m1 + M[1] * m2, b = M[2] * m1 + M[3] * m2;
    if (std::make_pair(a, b) < std::make_pair(m1, m2)) return false;
  }
  return true;
}

struct Hit {
  BigInt x, y;
  i64 n;
};

// Evaluates the covariants at m and applies the height and admissibility tests.
std::optional<Hit> probe(const SurfaceSpec& s, const ClassScan& c, bool use128, i64 m1, i64 m2, i64 nmin, i64 nmax,
                         i64 T) {
  if (std::gcd(m1, m2) != 1) return std::nullopt;
  BigInt n_big = c.cls->form.evaluate(BigInt(static_cast<long>(m1)), BigInt(static_cast<long>(m2)));
  if (n_big < nmin || n_big > nmax) return std::nullopt;
  BigInt hv, yv;
  if (use128) {
    hv = from_i128(c.H.eval128(m1, m2));
    yv = from_i128(c.Y.eval128(m1, m2));
  } else {
    hv = c.H.eval_big(BigInt(static_cast<long>(m1)), BigInt(static_cast<long>(m2)));
    yv = c.Y.eval_big(BigInt(static_cast<long>(m1)), BigInt(static_cast<long>(m2)));
  }
  if (yv == 0) return std::nullopt;
  BigInt T2 = BigInt(static_cast<long>(T)) * T, T3 = T2 * T;
  if (abs(hv) > T2 * c.H.den || abs(yv) > T3 * c.Y.den) return std::nullopt;
  if (!c.residues.contains(m1, m2)) return std::nullopt;
  if (hv % c.H.den != 0 || yv % c.Y.den != 0) return std::nullopt;
  Hit h{BigInt(-hv / c.H.den), BigInt(yv / c.Y.den), to_i64(n_big)};
  BigRational lhs = BigRational(h.y * h.y);
  BigRational rhs = BigRational(h.x * h.x * h.x) + s.A * h.x * n_big * n_big + s.B * n_big * n_big * n_big;
  if (lhs != rhs)
    throw InternalError("parameterized point off the curve for " + c.cls->form.to_string() + " at (" +
                        std::to_string(m1) + "," + std::to_string(m2) + ")");
  if (gcd(h.x, n_big) != 1)
    throw InternalError("parameterized point with gcd(x, n) > 1 for " + c.cls->form.to_string());
  return h;
}

void sort_and_check(std::vector<IntegralPoint>& pts) {
  std::sort(pts.begin(), pts.end());
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].same_point(pts[i - 1])) {
      std::string where;
      for (const auto* q : {&pts[i - 1], &pts[i]})
        if (q->provenance)
          where += " [class " + std::to_string(q->provenance->class_index) + " m=(" + q->provenance->m1.get_str() + "," +
                   q->provenance->m2.get_str() + ")]";
      throw InternalError("duplicate point (" + pts[i].x.get_str() + "," + pts[i].y.get_str() + "," +
                          pts[i].u.get_str() + "," + pts[i].v.get_str() + ")" + where);
    }
}

}  // namespace

void SurfaceSpec::validate() const {
  if (4 * A * A * A + 27 * B * B == 0) throw InvalidInput("singular curve: 4A^3 + 27B^2 = 0");
  if (!Q.positive_definite()) throw InvalidInput("Q must be positive definite");
}

std::string SurfaceSpec::to_string() const {
  return "A=" + syzygy::to_string(A) + " B=" + syzygy::to_string(B) + " Q=" + Q.pretty();
}

bool IntegralPoint::operator<(const IntegralPoint& o) const {
  if (n != o.n) return n < o.n;
  if (x != o.x) return x < o.x;
  if (y != o.y) return y < o.y;
  if (u != o.u) return u < o.u;
  return v < o.v;
}

bool IntegralPoint::same_point(const IntegralPoint& o) const {
  return x == o.x && y == o.y && u == o.u && v == o.v;
}

bool on_surface(const SurfaceSpec& s, const IntegralPoint& p) {
  if (p.y == 0 || p.n < 1 || s.Q.evaluate(p.u, p.v) != p.n) return false;
  if (gcd(p.x, p.n) != 1) return false;
  BigRational rhs = BigRational(p.x * p.x * p.x) + s.A * p.x * p.n * p.n + s.B * p.n * p.n * p.n;
  return BigRational(p.y * p.y) == rhs;
}

DukeImage duke_map(const QuarticForm& f, const BigInt& m1, const BigInt& m2) {
  if (!is_admissible_pair(f, m1, m2))
    throw InvalidInput("(" + m1.get_str() + "," + m2.get_str() + ") is not admissible for " + f.to_string());
  BigInt n = f.evaluate(m1, m2);
  if (n <= 0) throw InvalidInput("F(m) must be positive");
  BigRational x = -evaluate(f.hessian(), BigRational(m1), BigRational(m2));
  BigRational y = evaluate(f.jacobian(), BigRational(m1), BigRational(m2)) / 2;
  if (!is_integer(x) || !is_integer(y)) throw InvalidInput("non-integral image for " + f.to_string());
  return {to_integer(x), to_integer(y), n};
}

std::int64_t region_radius(const QuarticForm& f, const BigRational& bound) {
  if (bound < 0) throw InvalidInput("negative region bound");
  std::array<double, 5> fc{}, hc{};
  double fs = 0, hs = 0;
  for (int i = 0; i < 5; ++i) {
    fc[i] = f[i].get_d();
    hc[i] = f.hessian().c[i].get_d();
    fs += std::abs(fc[i]);
    hs += std::abs(hc[i]);
  }
  const double lip = 4.0 * std::max(fs, hs);
  auto at = [](const std::array<double, 5>& c, double t) {
    double x = std::cos(t), y = std::sin(t), r = 0;
    for (int i = 0; i < 5; ++i) r = r * x + c[i] * std::pow(y, i);
    return r;
  };
  for (int samples = 4096; samples <= (1 << 22); samples *= 2) {
    const double step = std::numbers::pi / samples;
    double lo = INFINITY;
    for (int k = 0; k < samples; ++k) {
      double t = (k + 0.5) * step;
      lo = std::min(lo, std::max(std::abs(at(fc, t)), std::abs(at(hc, t))));
    }
    lo -= lip * step / 2 + 1e-9 * std::max(fs, hs);
    if (lo > 0) {
      double r = std::pow(bound.get_d() / lo, 0.25);
      return static_cast<i64>(std::floor(r * (1 + 1e-9))) + 1;
    }
  }
  throw InternalError("F and its Hessian vanish together on the unit circle");
}

BigInt v_count(const SurfaceSpec& s, const ClassSet& classes, const BigInt& n, const BigInt& T_big) {
  s.validate();
  check_classes(s, classes);
  const i64 T = height_of(T_big);
  if (n < 1 || T == 0) return 0;
  if (!fits_i64(n)) throw InvalidInput("n too large");
  const i64 nn = to_i64(n);
  BigRational total = 0;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    BigRational bound = std::max(BigRational(n), BigRational(BigInt(static_cast<long>(T)) * T));
    ClassScan c = prepare(classes.classes[k], k, bound);
    bool use128 = c.H.safe_for(c.radius) && c.Y.safe_for(c.radius);
    long hits = 0;
    for (i64 m1 = -c.radius; m1 <= c.radius; ++m1)
      for (i64 m2 = -c.radius; m2 <= c.radius; ++m2)
        if (probe(s, c, use128, m1, m2, nn, nn, T)) ++hits;
    total += BigRational(hits, static_cast<long>(c.aut.size()));
  }
  total.canonicalize();
  if (!is_integer(total)) throw InternalError("non-integral weighted count " + to_string(total));
  return to_integer(total);
}

CountResult count_points_syzygy(const SurfaceSpec& s, const ClassSet& classes, const BigInt& T_big,
                                const CountOptions& options) {
  s.validate();
  check_classes(s, classes);
  const i64 T = height_of(T_big);
  CountResult res{0, {}, "syzygy"};
  if (T == 0) return res;
  const i64 T2 = T * T;
  const bool table_ok = T2 <= 4000000;
  std::vector<i64> rq = table_ok ? r_Q_table(s.Q, T2) : std::vector<i64>{};
  auto r_of = [&](i64 n) { return table_ok ? rq[static_cast<std::size_t>(n)] : r_Q_lattice(s.Q, n); };
  const unsigned threads = resolve_threads(options.threads);

  for (std::size_t k = 0; k < classes.size(); ++k) {
    ClassScan c = prepare(classes.classes[k], k, BigRational(BigInt(static_cast<long>(T2))));
    const bool use128 = c.H.safe_for(c.radius) && c.Y.safe_for(c.radius);
    const std::size_t width = static_cast<std::size_t>(2 * c.radius + 1);
    struct Slab {
      BigInt raw = 0, orbits = 0;
      std::vector<IntegralPoint> pts;
    };
    std::vector<Slab> slabs(width);
    parallel_for(width, threads, [&](std::size_t idx) {
      const i64 m1 = -c.radius + static_cast<i64>(idx);
      Slab& out = slabs[idx];
      for (i64 m2 = -c.radius; m2 <= c.radius; ++m2) {
        auto hit = probe(s, c, use128, m1, m2, 1, T2, T);
        if (!hit) continue;
        const i64 r = r_of(hit->n);
        out.raw += r;
        if (!canonical_in_orbit(c, m1, m2)) continue;
        out.orbits += r;
        if (!options.collect_points || r == 0) continue;
        for (const auto& [u, v] : representations(s.Q, hit->n))
          out.pts.push_back({hit->x, hit->y, BigInt(static_cast<long>(u)), BigInt(static_cast<long>(v)),
                             BigInt(static_cast<long>(hit->n)),
                             Provenance{k, BigInt(static_cast<long>(m1)), BigInt(static_cast<long>(m2))}});
      }
    });
    BigInt raw = 0, orbits = 0;
    for (auto& sl : slabs) {
      raw += sl.raw;
      orbits += sl.orbits;
      std::move(sl.pts.begin(), sl.pts.end(), std::back_inserter(res.points));
    }
    const long aut = static_cast<long>(c.aut.size());
    if (raw % aut != 0) throw InternalError("weighted sum not integral for class " + c.cls->form.to_string());
    if (raw / aut != orbits)
      throw InternalError("automorphism orbits of unequal size for class " + c.cls->form.to_string());
    res.N += orbits;
  }
  if (options.collect_points) {
    sort_and_check(res.points);
    if (BigInt(static_cast<long>(res.points.size())) != res.N) throw InternalError("point list size differs from N");
  }
  return res;
}

CountResult count_points_bruteforce(const SurfaceSpec& s, const BigInt& T_big, const CountOptions& options) {
  s.validate();
  const i64 T = height_of(T_big);
  CountResult res{0, {}, "bruteforce"};
  if (T == 0) return res;
  const i64 T2 = T * T;
  const i128 T3 = i128(T2) * T;
  std::vector<i64> rq = r_Q_table(s.Q, T2);

  BigInt D = lcm(BigInt(s.A.get_den()), BigInt(s.B.get_den()));
  BigInt DA_big = BigRational(s.A * D).get_num(), DB_big = BigRational(s.B * D).get_num();
  double mag = D.get_d() + std::abs(DA_big.get_d()) + std::abs(DB_big.get_d());
  const bool use128 = fits_i64(D) && fits_i64(DA_big) && fits_i64(DB_big) && mag * std::pow(double(T2), 3) < 1e36;

  const std::size_t chunk = 256;
  const std::size_t nchunks = static_cast<std::size_t>((T2 + chunk - 1) / chunk);
  struct Part {
    BigInt count = 0;
    std::vector<IntegralPoint> pts;
  };
  std::vector<Part> parts(nchunks);
  parallel_for(nchunks, resolve_threads(options.threads), [&](std::size_t ci) {
    Part& out = parts[ci];
    const i64 lo = 1 + static_cast<i64>(ci * chunk), hi = std::min<i64>(T2, lo + chunk - 1);
    for (i64 n = lo; n <= hi; ++n) {
      const i64 r = rq[static_cast<std::size_t>(n)];
      if (r == 0) continue;
      std::vector<std::pair<i64, i64>> reps;
      if (options.collect_points) reps = representations(s.Q, n);
      for (i64 x = -T2; x <= T2; ++x) {
        if (std::gcd(x, n) != 1) continue;
        BigInt y;
        if (use128) {
          const i128 d = to_i64(D), da = to_i64(DA_big), db = to_i64(DB_big);
          i128 num = d * x * x * x + da * x * n * n + db * n * n * n;
          if (num <= 0 || num % d != 0) continue;
          i128 root;
          if (!is_square128(num / d, root) || root > T3) continue;
          y = from_i128(root);
        } else {
          BigInt bx(static_cast<long>(x)), bn(static_cast<long>(n));
          BigInt num = D * bx * bx * bx + DA_big * bx * bn * bn + DB_big * bn * bn * bn;
          if (num <= 0 || num % D != 0) continue;
          auto sq = int_sqrt(BigInt(num / D));
          if (!sq.exact || sq.root > from_i128(T3)) continue;
          y = sq.root;
        }
        out.count += 2 * r;
        if (!options.collect_points) continue;
        for (const auto& [u, v] : reps)
          for (int sgn : {1, -1})
            out.pts.push_back({BigInt(static_cast<long>(x)), BigInt(y * sgn), BigInt(static_cast<long>(u)),
                               BigInt(static_cast<long>(v)), BigInt(static_cast<long>(n)), std::nullopt});
      }
    }
  });
  for (auto& p : parts) {
    res.N += p.count;
    std::move(p.pts.begin(), p.pts.end(), std::back_inserter(res.points));
  }
  if (options.collect_points) sort_and_check(res.points);
  return res;
}

std::string points_to_csv(const std::vector<IntegralPoint>& points) {
  std::ostringstream os;
  os << "x,y,u,v,n,class_index,m1,m2\n";
  for (const auto& p : points) {
    os << p.x << ',' << p.y << ',' << p.u << ',' << p.v << ',' << p.n << ',';
    if (p.provenance)
      os << p.provenance->class_index << ',' << p.provenance->m1 << ',' << p.provenance->m2;
    else
      os << ",,";
    os << '\n';
  }
  return os.str();
}

std::string count_to_json(const SurfaceSpec& s, const BigInt& T, const CountResult& r,
                          std::optional<double> elapsed_seconds) {
  nlohmann::ordered_json j;
  j["A"] = to_string(s.A);
  j["B"] = to_string(s.B);
  j["Q"] = s.Q.to_string();
  j["T"] = T.get_str();
  j["N"] = r.N.get_str();
  j["method"] = r.method;
  if (elapsed_seconds) j["elapsed_seconds"] = *elapsed_seconds;
  return j.dump();
}

}  // namespace syzygy
