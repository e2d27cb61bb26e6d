#include "syzygy/galois_tools.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "syzygy/error.hpp"

namespace syzygy {

namespace {

using i64 = std::int64_t;
using i128 = __int128;
using ModPoly = std::vector<i64>;  // ascending, coefficients in [0, p)

void mtrim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

i64 inv_mod(i64 a, i64 p) {
  i64 r = 1, b = a % p, e = p - 2;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = static_cast<i64>(i128(r) * b % p);
    b = static_cast<i64>(i128(b) * b % p);
    e >>= 1;
  }
  return r;
}

ModPoly mrem(ModPoly a, const ModPoly& b, i64 p) {
  mtrim(a);
  const i64 inv = inv_mod(b.back(), p);
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const i64 q = static_cast<i64>(i128(a.back()) * inv % p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = static_cast<i64>((a[shift + i] - i128(q) * b[i] % p + p) % p);
    mtrim(a);
  }
  return a;
}

ModPoly mquot(ModPoly a, const ModPoly& b, i64 p) {
  mtrim(a);
  const i64 inv = inv_mod(b.back(), p);
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return {};
  ModPoly q(a.size() - db, 0);
  while (a.size() > db && !a.empty()) {
    const i64 c = static_cast<i64>(i128(a.back()) * inv % p);
    const std::size_t shift = a.size() - 1 - db;
    q[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = static_cast<i64>((a[shift + i] - i128(c) * b[i] % p + p) % p);
    mtrim(a);
  }
  return q;
}

ModPoly mmul(const ModPoly& a, const ModPoly& b, const ModPoly& m, i64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = static_cast<i64>((r[i + j] + i128(a[i]) * b[j]) % p);
  return mrem(r, m, p);
}

ModPoly mgcd(ModPoly a, ModPoly b, i64 p) {
  mtrim(a);
  mtrim(b);
  while (!b.empty()) {
    ModPoly r = mrem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    i64 inv = inv_mod(a.back(), p);
    for (auto& x : a) x = static_cast<i64>(i128(x) * inv % p);
  }
  return a;
}

ModPoly mpow(ModPoly base, i64 e, const ModPoly& m, i64 p) {
  ModPoly result{1};
  while (e > 0) {
    if (e & 1) result = mmul(result, base, m, p);
    base = mmul(base, base, m, p);
    e >>= 1;
  }
  return result;
}

ModPoly reduce_mod(const IntPolynomial& f, i64 p) {
  ModPoly r;
  for (const auto& c : f.c) {
    BigInt m = c % p;
    if (m < 0) m += p;
    r.push_back(to_i64(m));
  }
  mtrim(r);
  return r;
}

ModPoly mderiv(const ModPoly& a, i64 p) {
  ModPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(static_cast<i64>(i128(a[i]) * static_cast<i64>(i) % p));
  mtrim(r);
  return r;
}

bool subset_sum(const std::vector<int>& parts, int target) {
  std::vector<char> can(static_cast<std::size_t>(target + 1), 0);
  can[0] = 1;
  for (int d : parts)
    for (int s = target; s >= d; --s)
      if (can[static_cast<std::size_t>(s - d)]) can[static_cast<std::size_t>(s)] = 1;
  return can[static_cast<std::size_t>(target)];
}

IntPolynomial normalize(IntPolynomial f) {
  f.trim();
  return f.primitive_part();
}

RatPolynomial interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
  RatPolynomial out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RatPolynomial term(std::vector<BigRational>{BigRational(ys[i])});
    BigRational den = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      term = term * RatPolynomial(std::vector<BigRational>{BigRational(-xs[j]), BigRational(1)});
      den *= BigRational(xs[i] - xs[j]);
    }
    out = out + BigRational(1 / den) * term;
  }
  out.trim();
  return out;
}

// A factor of exact degree d of the squarefree primitive f, if one exists.
std::optional<IntPolynomial> kronecker_factor(const IntPolynomial& f, int d) {
  struct Sample {
    BigInt x, value;
    std::vector<BigInt> divs;
  };
  std::vector<Sample> pool;
  for (long x = 0; pool.size() < 40 && x <= 40; x = x > 0 ? -x : -x + 1) {
    BigInt v = f.eval(BigInt(x));
    if (v == 0) continue;
    pool.push_back({BigInt(x), v, divisors(abs(v))});
  }
  if (pool.size() < static_cast<std::size_t>(d + 1)) throw InternalError("too few sample points for factor search");
  std::stable_sort(pool.begin(), pool.end(), [](const Sample& a, const Sample& b) { return a.divs.size() < b.divs.size(); });
  pool.resize(static_cast<std::size_t>(d + 1));

  const BigInt lead = f.leading(), cst = f.c.front();
  std::vector<BigInt> xs, ys(static_cast<std::size_t>(d + 1));
  for (const auto& s : pool) xs.push_back(s.x);
  const RatPolynomial fr = f.to_rat();
  std::vector<std::size_t> idx(static_cast<std::size_t>(d + 1), 0);
  std::vector<std::size_t> radix;
  for (std::size_t i = 0; i < pool.size(); ++i) radix.push_back(pool[i].divs.size() * (i == 0 ? 1 : 2));
  for (;;) {
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const auto& dv = pool[i].divs;
      std::size_t k = idx[i];
      ys[i] = (i == 0) ? dv[k] : (k < dv.size() ? dv[k] : BigInt(-dv[k - dv.size()]));
    }
    RatPolynomial g = interpolate(xs, ys);
    if (g.degree() == d) {
      bool integral = true;
      for (const auto& c : g.c)
        if (!is_integer(c)) integral = false;
      if (integral) {
        IntPolynomial gi;
        for (const auto& c : g.c) gi.c.push_back(to_integer(c));
        gi.trim();
        if (lead % gi.leading() == 0 && gi.c.front() != 0 && cst % gi.c.front() == 0) {
          auto dm = divmod(fr, g);
          if (dm.remainder.is_zero()) return normalize(gi);
        }
      }
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == radix[k]) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return std::nullopt;
}

std::vector<IntPolynomial> factor_squarefree(const IntPolynomial& f) {
  const int n = f.degree();
  if (n <= 1) return {f};
  if (f.c.front() == 0) {
    IntPolynomial rest(std::vector<BigInt>(f.c.begin() + 1, f.c.end()));
    auto out = factor_squarefree(normalize(rest));
    out.push_back(IntPolynomial(std::vector<BigInt>{0, 1}));
    return out;
  }
  std::vector<std::vector<int>> patterns;
  for (i64 p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    if (patterns.size() == 5) break;
    if (f.leading() % p == 0) continue;
    ModPoly fp = reduce_mod(f, p);
    if (mgcd(fp, mderiv(fp, p), p).size() > 1) continue;
    patterns.push_back(degree_pattern_mod(f, p));
  }
  for (int d = 1; 2 * d <= n; ++d) {
    bool possible = true;
    for (const auto& pat : patterns)
      if (!subset_sum(pat, d)) possible = false;
    if (!possible) continue;
    if (auto g = kronecker_factor(f, d)) {
      auto rest = normalize(exact_divide(f, *g));
      auto out = factor_squarefree(rest);
      out.push_back(*g);
      return out;
    }
  }
  return {f};
}

bool poly_less(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.c[static_cast<std::size_t>(i)] != b.c[static_cast<std::size_t>(i)])
      return a.c[static_cast<std::size_t>(i)] < b.c[static_cast<std::size_t>(i)];
  return false;
}

std::mutex g_cache_mutex;
std::map<std::string, PolyFactorization> g_cache;

BigRational coeff(const IntPolynomial& p, int i) {
  return i < static_cast<int>(p.c.size()) ? BigRational(p.c[static_cast<std::size_t>(i)]) : BigRational(0);
}

struct MonicQuartic {
  BigRational b, c, d, e;
};

MonicQuartic monic_quartic(const IntPolynomial& p) {
  if (p.degree() != 4) throw InvalidInput("expected a quartic");
  BigRational a = coeff(p, 4);
  return {coeff(p, 3) / a, coeff(p, 2) / a, coeff(p, 1) / a, coeff(p, 0) / a};
}

RatPolynomial resolvent_of(const MonicQuartic& m) {
  return RatPolynomial(std::vector<BigRational>{-(m.b * m.b * m.e - 4 * m.c * m.e + m.d * m.d), m.b * m.d - 4 * m.e, -m.c,
                                                BigRational(1)});
}

std::vector<BigRational> rational_roots(const RatPolynomial& p) {
  std::vector<BigRational> out;
  auto fac = factor_over_Z(p.primitive_integral());
  for (const auto& f : fac.factors)
    if (f.degree() == 1) {
      BigRational r = BigRational(-f.c[0], f.c[1]);
      r.canonicalize();
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
  return out;
}

SubfieldCertificate certify(const BigRational& radicand, std::string origin) {
  if (radicand == 0) throw InternalError("zero radicand in subfield certificate");
  return {fundamental_discriminant(radicand), radicand, std::move(origin)};
}

struct FactorField {
  GaloisTag tag;
  std::vector<SubfieldCertificate> certs;
};

FactorField irreducible_field(const IntPolynomial& f) {
  const int n = f.degree();
  const std::string name = f.to_string();
  switch (n) {
    case 1:
      return {GaloisTag::C1, {}};
    case 2: {
      BigRational disc = BigRational(f.c[1] * f.c[1] - 4 * f.c[2] * f.c[0]);
      return {GaloisTag::C2, {certify(disc, "(r1 - r2)^2 for " + name)}};
    }
    case 3: {
      BigRational disc = discriminant(f.to_rat());
      if (is_rational_square(disc)) return {GaloisTag::C3, {}};
      return {GaloisTag::S3, {certify(disc, "disc: prod (ri - rj)^2 for " + name)}};
    }
    case 4:
      break;
    default:
      throw InvalidInput("splitting field analysis supports irreducible factors of degree <= 4");
  }
  const MonicQuartic m = monic_quartic(f);
  const BigRational delta = discriminant(f.to_rat());
  const GaloisTag tag = quartic_galois_group(f);
  FactorField out{tag, {}};
  auto pair_radicand = [&](const BigRational& r, std::string& origin) {
    BigRational u = m.b * m.b - 4 * m.c + 4 * r;
    if (u != 0) {
      origin = "(a1 + a2 - a3 - a4)^2 = b^2 - 4c + 4t, t = " + to_string(r);
      return u;
    }
    origin = "(a1 a2 - a3 a4)^2 = t^2 - 4e, t = " + to_string(r);
    return BigRational(r * r - 4 * m.e);
  };
  switch (tag) {
    case GaloisTag::S4:
      out.certs.push_back(certify(delta, "disc: prod (ai - aj)^2 for " + name));
      break;
    case GaloisTag::A4:
      break;
    case GaloisTag::C4:
      out.certs.push_back(certify(delta, "disc: prod (ai - aj)^2 for " + name));
      break;
    case GaloisTag::D4: {
      auto roots = rational_roots(resolvent_of(m));
      std::string origin;
      BigRational u = pair_radicand(roots.at(0), origin);
      out.certs.push_back(certify(delta, "disc: prod (ai - aj)^2 for " + name));
      out.certs.push_back(certify(u, origin));
      out.certs.push_back(certify(u * delta, "product of the two above"));
      break;
    }
    case GaloisTag::V4: {
      for (const auto& r : rational_roots(resolvent_of(m))) {
        std::string origin;
        out.certs.push_back(certify(pair_radicand(r, origin), origin));
      }
      break;
    }
    default:
      throw InternalError("unexpected quartic Galois tag");
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------ factorization

std::vector<int> degree_pattern_mod(const IntPolynomial& f, std::int64_t p) {
  ModPoly g = reduce_mod(f, p);
  if (static_cast<int>(g.size()) - 1 != f.degree()) throw InvalidInput("prime divides the leading coefficient");
  std::vector<int> pattern;
  ModPoly h = mrem({0, 1}, g, p);
  for (int d = 1; 2 * d <= static_cast<int>(g.size()) - 1; ++d) {
    // h = x^(p^d) mod g
    h = mpow(h, p, g, p);
    ModPoly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = (hx[1] - 1 + p) % p;
    mtrim(hx);
    ModPoly common = mgcd(g, hx, p);
    const int dc = static_cast<int>(common.size()) - 1;
    if (dc > 0) {
      for (int k = 0; k < dc / d; ++k) pattern.push_back(d);
      g = mquot(g, common, p);
      h = mrem(h, g, p);
    }
  }
  if (g.size() > 1) pattern.push_back(static_cast<int>(g.size()) - 1);
  std::sort(pattern.begin(), pattern.end());
  return pattern;
}

PolyFactorization factor_over_Z(const IntPolynomial& p_in) {
  IntPolynomial p = p_in;
  p.trim();
  if (p.is_zero()) throw InvalidInput("cannot factor the zero polynomial");
  if (p.degree() > kMaxFactorDegree) throw InvalidInput("factorization limited to degree <= 6");
  const std::string key = p.to_string();
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  PolyFactorization out;
  out.content = p.content();
  if (p.leading() < 0) out.content = -out.content;
  IntPolynomial prim = p.primitive_part();
  if (prim.degree() >= 1) {
    RatPolynomial g = gcd(prim.to_rat(), derivative(prim.to_rat()));
    IntPolynomial sqf = g.degree() > 0 ? normalize(exact_divide(prim, g.primitive_integral())) : prim;
    IntPolynomial rest = prim;
    for (const auto& q : factor_squarefree(sqf)) {
      for (;;) {
        auto dm = divmod(rest.to_rat(), q.to_rat());
        if (!dm.remainder.is_zero()) break;
        out.factors.push_back(q);
        rest = exact_divide(rest, q);
      }
    }
    if (rest.degree() != 0) throw InternalError("factorization left a nonconstant cofactor");
  }
  std::sort(out.factors.begin(), out.factors.end(), poly_less);
  IntPolynomial check(std::vector<BigInt>{out.content});
  for (const auto& f : out.factors) check = check * f;
  check.trim();
  if (!(check == p)) throw InternalError("factorization does not multiply back to the input");
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_cache.emplace(key, out);
  return out;
}

bool is_irreducible(const IntPolynomial& p) {
  auto f = factor_over_Z(p);
  return f.factors.size() == 1;
}

// ------------------------------------------------------------ Galois groups

std::string galois_tag_name(GaloisTag t) {
  switch (t) {
    case GaloisTag::C1: return "C1";
    case GaloisTag::C2: return "C2";
    case GaloisTag::C3: return "C3";
    case GaloisTag::S3: return "S3";
    case GaloisTag::V4: return "V4";
    case GaloisTag::C4: return "C4";
    case GaloisTag::D4: return "D4";
    case GaloisTag::A4: return "A4";
    case GaloisTag::S4: return "S4";
    case GaloisTag::Product: return "product-of-factors";
  }
  return "?";
}

int galois_group_order(GaloisTag t) {
  switch (t) {
    case GaloisTag::C1: return 1;
    case GaloisTag::C2: return 2;
    case GaloisTag::C3: return 3;
    case GaloisTag::S3: return 6;
    case GaloisTag::V4: return 4;
    case GaloisTag::C4: return 4;
    case GaloisTag::D4: return 8;
    case GaloisTag::A4: return 12;
    case GaloisTag::S4: return 24;
    case GaloisTag::Product: return 0;
  }
  return 0;
}

IntPolynomial resolvent_cubic(const IntPolynomial& p) { return resolvent_of(monic_quartic(p)).primitive_integral(); }

GaloisTag quartic_galois_group(const IntPolynomial& p) {
  if (p.degree() != 4) throw InvalidInput("quartic_galois_group expects a quartic");
  if (!is_irreducible(p)) throw InvalidInput("quartic_galois_group expects an irreducible polynomial");
  const MonicQuartic m = monic_quartic(p);
  const RatPolynomial res = resolvent_of(m);
  const BigRational delta = discriminant(p.to_rat());
  const bool square = is_rational_square(delta);
  auto roots = rational_roots(res);
  if (roots.empty()) return square ? GaloisTag::A4 : GaloisTag::S4;
  if (roots.size() == 3) return GaloisTag::V4;
  // One rational root r: C4 iff x^2 - r x + e and x^2 + b x + (c - r) split over Q(sqrt(delta)).
  const BigRational r = roots[0];
  const BigRational u = (r * r - 4 * m.e) * delta, v = (m.b * m.b - 4 * (m.c - r)) * delta;
  return is_rational_square(u) && is_rational_square(v) ? GaloisTag::C4 : GaloisTag::D4;
}

// ------------------------------------------------------------ quadratic subfields

bool SubfieldCertificate::check() const {
  if (radicand == 0 || discriminant == 0) return false;
  return is_rational_square(radicand / BigRational(discriminant)) && is_fundamental_discriminant(discriminant);
}

bool SplittingFieldProfile::contains(const BigInt& disc) const {
  return std::find(quadratic_subfields.begin(), quadratic_subfields.end(), disc) != quadratic_subfields.end();
}

SplittingFieldProfile splitting_field_profile(const IntPolynomial& p) {
  auto fac = factor_over_Z(p);
  SplittingFieldProfile out;
  for (std::size_t i = 1; i < fac.factors.size(); ++i)
    if (fac.factors[i] == fac.factors[i - 1]) throw InvalidInput("polynomial is not squarefree");
  std::vector<SubfieldCertificate> basis;
  int nonlinear = 0;
  GaloisTag single = GaloisTag::C1;
  for (const auto& f : fac.factors) {
    FactorField ff = irreducible_field(f);
    out.degree_bound *= galois_group_order(ff.tag);
    if (f.degree() > 1) {
      ++nonlinear;
      single = ff.tag;
    }
    out.factors.push_back(f);
    basis.insert(basis.end(), ff.certs.begin(), ff.certs.end());
  }
  out.tag = nonlinear <= 1 ? single : GaloisTag::Product;
  // Close the square classes under multiplication.
  std::map<BigInt, SubfieldCertificate> span;
  for (const auto& c : basis) {
    std::vector<SubfieldCertificate> add{c};
    for (const auto& [d, e] : span) {
      BigRational prod = e.radicand * c.radicand;
      if (!is_rational_square(prod)) add.push_back(certify(prod, "product: " + e.origin + " | " + c.origin));
    }
    for (auto& a : add) span.emplace(a.discriminant, a);
  }
  for (auto& [d, c] : span) {
    if (!c.check()) throw InternalError("subfield certificate failed for " + d.get_str());
    out.quadratic_subfields.push_back(d);
    out.certificates.push_back(c);
  }
  return out;
}

SplittingFieldProfile splitting_field_profile(const QuarticForm& f) {
  if (!is_squarefree(f)) throw InvalidInput("form " + f.to_string() + " is not squarefree");
  return splitting_field_profile(dehomogenize(f.as_rat()).primitive_integral());
}

std::vector<BigInt> quadratic_subfields(const IntPolynomial& p) { return splitting_field_profile(p).quadratic_subfields; }
std::vector<BigInt> quadratic_subfields(const QuarticForm& f) { return splitting_field_profile(f).quadratic_subfields; }

// ------------------------------------------------------------ classifiers

int beta_exponent(const QuarticForm& f, const QuadForm& q) {
  if (!q.positive_definite()) throw InvalidInput("Q must be positive definite");
  if (!is_squarefree(f)) throw InvalidInput("form " + f.to_string() + " is not squarefree");
  const BigInt dq = fundamental_discriminant(q.discriminant());
  int beta = 0;
  for (const auto& g : factor_over_Z(dehomogenize(f.as_rat()).primitive_integral()).factors) {
    if (g.degree() < 2) continue;
    if (splitting_field_profile(g).contains(dq)) ++beta;
  }
  return beta;
}

DisassociationReport is_disassociated(const BigRational& A, const BigRational& B, const QuadForm& q,
                                      const ClassSet& classes) {
  if (classes.I != -4 * A || classes.J != -4 * B) throw InvalidInput("class set invariants do not match (A, B)");
  DisassociationReport r;
  r.field_discriminant = fundamental_discriminant(q.discriminant());
  for (const auto& c : classes.classes) {
    DisassociationEntry e{c.form, quadratic_subfields(c.form), beta_exponent(c.form, q), c.effective};
    if (std::find(e.subfields.begin(), e.subfields.end(), r.field_discriminant) != e.subfields.end())
      r.disassociated = false;
    r.beta_max = std::max(r.beta_max, e.beta);
    r.entries.push_back(std::move(e));
  }
  return r;
}

PicardReport picard_analysis(const BigRational& A, const BigRational& B, const QuadForm& q) {
  if (4 * A * A * A + 27 * B * B == 0) throw InvalidInput("singular cubic: 4A^3 + 27B^2 = 0");
  const BigInt delta = q.discriminant();
  if (delta >= 0) throw InvalidInput("Q must have negative discriminant");
  const BigInt dk = fundamental_discriminant(delta);
  PicardReport rep;

  // w^3 - A w + B over Q(sqrt(delta)); a rational cubic keeps its degree pattern
  // except that quadratic factors of discriminant class dk split.
  RatPolynomial cubic(std::vector<BigRational>{B, -A, BigRational(0), BigRational(1)});
  auto cf = factor_over_Z(cubic.primitive_integral());
  int linear = 0;
  bool quad_splits = false, has_quad = false;
  for (const auto& f : cf.factors) {
    rep.cubic_factorization += (rep.cubic_factorization.empty() ? "" : " * ") + ("(" + f.to_string('w') + ")");
    if (f.degree() == 1) ++linear;
    if (f.degree() == 2) {
      has_quad = true;
      quad_splits = fundamental_discriminant(BigInt(f.c[1] * f.c[1] - 4 * f.c[2] * f.c[0])) == dk;
    }
  }
  if (linear == 3) rep.rank_by_substitution = 5;
  else if (has_quad) rep.rank_by_substitution = quad_splits ? 5 : 4;
  else rep.rank_by_substitution = 3;

  if (B == 0) {
    // z^3 - A delta z = z (z^2 - A delta)
    const BigRational ad = A * BigRational(delta);
    const bool splits = is_rational_square(ad) || is_rational_square(A);
    rep.rank = splits ? 5 : 4;
  } else {
    // (z^3 - A delta z)^2 - B^2 delta^3 is the norm of the cubic from Q(sqrt(delta)).
    const BigRational D(delta);
    RatPolynomial c0(std::vector<BigRational>{BigRational(0), -A * D, BigRational(0), BigRational(1)});
    RatPolynomial sextic = c0 * c0 - RatPolynomial(std::vector<BigRational>{B * B * D * D * D});
    for (const auto& f : factor_over_Z(sextic.primitive_integral()).factors) rep.sextic_pattern.push_back(f.degree());
    std::sort(rep.sextic_pattern.begin(), rep.sextic_pattern.end());
    if (rep.sextic_pattern == std::vector<int>{2, 2, 2}) rep.rank = 5;
    else if (rep.sextic_pattern == std::vector<int>{2, 4}) rep.rank = 4;
    else if (rep.sextic_pattern == std::vector<int>{6}) rep.rank = 3;
    else throw InternalError("unexpected norm sextic factor pattern");
  }
  if (rep.rank != rep.rank_by_substitution)
    throw InternalError("Picard rank routes disagree: " + std::to_string(rep.rank) + " vs " +
                        std::to_string(rep.rank_by_substitution));
  return rep;
}

int picard_rank(const BigRational& A, const BigRational& B, const QuadForm& q) { return picard_analysis(A, B, q).rank; }

std::vector<BigInt> genus_field(const BigInt& disc) { return prime_discriminants(disc); }

std::string verdict_name(CuspidalityVerdict v) {
  switch (v) {
    case CuspidalityVerdict::SavingsConditionMet: return "savings-condition-met";
    case CuspidalityVerdict::NoncuspidalConditionMet: return "noncuspidal-condition-met";
    case CuspidalityVerdict::Undecided: return "undecided";
  }
  return "undecided";
}

CuspidalityCheck genus_cuspidality_check(const ClassGroupTable& t, const ClassCharacter& xi, const SplittingFieldProfile& k) {
  const BigInt disc(static_cast<long>(t.discriminant()));
  if (!t.fundamental()) throw InvalidInput("genus check requires a fundamental discriminant");
  if (xi.angle.size() != t.order()) throw InvalidInput("character does not belong to this class group");
  const int ord2 = xi.order / std::gcd(xi.order, 2);
  if (ord2 == 1) return {CuspidalityVerdict::Undecided, "xi^2 is trivial, so the induced representation is not cuspidal"};
  if (!k.contains(disc))
    return {CuspidalityVerdict::SavingsConditionMet, "Q(sqrt(" + disc.get_str() + ")) is not a subfield of K"};
  // L = fixed field of ker(xi^2) in the Hilbert class field, [L:Q] = 2 ord(xi^2).
  if (k.degree_bound % (2 * ord2) != 0)
    return {CuspidalityVerdict::NoncuspidalConditionMet,
            "[L:Q] = " + std::to_string(2 * ord2) + " does not divide [K:Q] | " + k.degree_bound.get_str()};
  for (const auto& pair : canonical_genus_pairs(disc)) {
    if (pair.q1 == 1) continue;
    bool trivial_on_kernel = true;
    for (std::size_t c = 0; c < t.order() && trivial_on_kernel; ++c)
      if ((2 * xi.angle[c]) % xi.modulus == 0 && genus_character_value(pair, t, c) != 1) trivial_on_kernel = false;
    if (!trivial_on_kernel) continue;
    for (const BigInt& d : {pair.q1, pair.q2})
      if (!k.contains(d))
        return {CuspidalityVerdict::NoncuspidalConditionMet,
                "genus subfield Q(sqrt(" + d.get_str() + ")) of L is not contained in K"};
  }
  return {CuspidalityVerdict::Undecided, "genus-field data cannot separate Gal(H/H cap K) from ker(xi^2)"};
}

std::int64_t local_root_count(const IntPolynomial& p, std::int64_t prime) {
  if (prime < 2 || prime > 1000000 || !is_prime(BigInt(static_cast<long>(prime))))
    throw InvalidInput("local_root_count needs a prime p <= 10^6");
  ModPoly f = reduce_mod(p, prime);
  if (f.empty()) return prime;
  if (f.size() == 1) return 0;
  // distinct roots = deg gcd(f, x^p - x)
  ModPoly xp = mpow(ModPoly{0, 1}, prime, f, prime);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = (xp[1] + prime - 1) % prime;
  mtrim(xp);
  ModPoly g = xp.empty() ? f : mgcd(f, xp, prime);
  return static_cast<std::int64_t>(g.size()) - 1;
}

std::int64_t local_root_count(const QuarticForm& f, std::int64_t prime) {
  IntPolynomial aff(std::vector<BigInt>{f[4], f[3], f[2], f[1], f[0]});
  aff.trim();
  const std::int64_t affine = local_root_count(aff, prime);
  const std::int64_t at_infinity = (f[0] % prime == 0) ? prime : 1;
  return at_infinity + (prime - 1) * affine;
}

}  // namespace syzygy
