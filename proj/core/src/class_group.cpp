#include "syzygy/class_group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "json.hpp"
#include "syzygy/error.hpp"

namespace syzygy {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i64 isqrt64(i64 n) {
  if (n < 0) return -1;
  i64 r = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && i128(r) * r > n) --r;
  while (i128(r + 1) * (r + 1) <= n) ++r;
  return r;
}

i64 mulmod(i64 a, i64 b, i64 m) { return static_cast<i64>((i128(a) * b) % m); }

i64 powmod(i64 b, i64 e, i64 m) {
  i64 r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Square root of a quadratic residue a modulo an odd prime p.
i64 sqrt_mod(i64 a, i64 p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  i64 q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  i64 z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  i64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    i64 i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    i64 b = c;
    for (i64 j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

std::array<i64, 3> key_of(const QuadForm& f) { return {to_i64(f.a), to_i64(f.b), to_i64(f.c)}; }

int unit_count(i64 disc) {
  if (disc == -3) return 6;
  if (disc == -4) return 4;
  return 2;
}

}  // namespace

// ------------------------------------------------------------ forms

QuadForm reduce(const QuadForm& f_in) {
  BigInt disc = f_in.discriminant();
  if (disc >= 0) throw InvalidInput("reduce: discriminant must be negative");
  if (f_in.a <= 0) throw InvalidInput("reduce: form must be positive definite");
  BigInt a = f_in.a, b = f_in.b, c = f_in.c;
  for (;;) {
    if (b <= -a || b > a) {
      // b -> b + 2ak landing in (-a, a]
      BigInt two_a = 2 * a;
      BigInt k;
      BigInt num = a - b;
      mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), two_a.get_mpz_t());
      b += two_a * k;
      c = (b * b - disc) / (4 * a);
    }
    if (a > c) {
      std::swap(a, c);
      b = -b;
      continue;
    }
    if (a == c && b < 0) b = -b;
    return {a, b, c};
  }
}

bool is_reduced(const QuadForm& f) {
  if (!(abs(f.b) <= f.a && f.a <= f.c)) return false;
  if ((abs(f.b) == f.a || f.a == f.c) && f.b < 0) return false;
  return true;
}

QuadForm compose(const QuadForm& f, const QuadForm& g) {
  BigInt disc = f.discriminant();
  if (g.discriminant() != disc) throw InvalidInput("compose: discriminants differ");
  BigInt s = (f.b + g.b) / 2;
  BigInt g1, x, y, e, z, w;
  mpz_gcdext(g1.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), f.a.get_mpz_t(), g.a.get_mpz_t());
  mpz_gcdext(e.get_mpz_t(), z.get_mpz_t(), w.get_mpz_t(), g1.get_mpz_t(), s.get_mpz_t());
  BigInt u = z * x, v = z * y;
  BigInt a3 = f.a * g.a / (e * e);
  BigInt num = u * f.a * g.b + v * g.a * f.b + w * (f.b * g.b + disc) / 2;
  if (num % e != 0) throw InternalError("composition: non-integral middle coefficient");
  BigInt b3 = num / e;
  BigInt two_a3 = 2 * a3;
  b3 = ((b3 % two_a3) + two_a3) % two_a3;
  BigInt cn = b3 * b3 - disc;
  if (cn % (4 * a3) != 0) throw InternalError("composition: non-integral last coefficient");
  return reduce({a3, b3, cn / (4 * a3)});
}

// ------------------------------------------------------------ table

ClassGroupTable ClassGroupTable::build(const BigInt& disc_big) {
  if (disc_big >= 0) throw InvalidInput("class group requires a negative discriminant");
  BigInt m4 = ((disc_big % 4) + 4) % 4;
  if (m4 != 0 && m4 != 1) throw InvalidInput("discriminant must be 0 or 1 mod 4");
  if (disc_big < -1000000000) throw InvalidInput("discriminant too large for table construction");
  ClassGroupTable t;
  t.disc_ = to_i64(disc_big);
  t.units_ = unit_count(t.disc_);
  BigInt d0 = fundamental_discriminant(disc_big);
  t.conductor_ = int_sqrt(BigInt(disc_big / d0)).root;
  if (t.conductor_ != 1) t.units_ = 2;

  const i64 D = t.disc_;
  const i64 amax = isqrt64(-D / 3);
  for (i64 a = 1; a <= amax; ++a)
    for (i64 b = -a + 1; b <= a; ++b) {
      if (((b - D) % 2 + 2) % 2 != 0) continue;
      i64 num = b * b - D;
      if (num % (4 * a) != 0) continue;
      i64 c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      t.forms_.push_back({BigInt(a), BigInt(b), BigInt(c)});
    }
  std::sort(t.forms_.begin(), t.forms_.end(), [](const QuadForm& x, const QuadForm& y) {
    if (x.a != y.a) return x.a < y.a;
    if (abs(x.b) != abs(y.b)) return abs(x.b) < abs(y.b);
    return x.b > y.b;
  });
  for (std::size_t i = 0; i < t.forms_.size(); ++i) t.index_[key_of(t.forms_[i])] = i;

  const std::size_t h = t.forms_.size();
  t.table_.assign(h * h, 0);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i; j < h; ++j) {
      auto it = t.index_.find(key_of(syzygy::compose(t.forms_[i], t.forms_[j])));
      if (it == t.index_.end()) throw InternalError("composition left the table");
      t.table_[i * h + j] = t.table_[j * h + i] = it->second;
    }
  int ex = 1;
  for (std::size_t i = 0; i < h; ++i) ex = std::lcm(ex, static_cast<int>(t.element_order(i)));
  t.exponent_ = ex;

  // Generators via a coset chain; every element gets a unique exponent vector.
  std::vector<std::size_t> gens;
  std::vector<std::vector<int>> expo(h);
  std::vector<bool> in_sub(h, false);
  std::vector<std::size_t> sub{0};
  in_sub[0] = true;
  expo[0] = {};
  for (std::size_t g = 0; g < h && sub.size() < h; ++g) {
    if (in_sub[g]) continue;
    std::size_t r = gens.size();
    gens.push_back(g);
    std::vector<std::size_t> old = sub;
    std::size_t gk = g;
    for (int k = 1;; ++k) {
      if (in_sub[gk]) break;
      for (std::size_t x : old) {
        std::size_t y = t.compose(x, gk);
        in_sub[y] = true;
        expo[y] = expo[x];
        expo[y].resize(r + 1, 0);
        expo[y][r] = k;
        sub.push_back(y);
      }
      gk = t.compose(gk, g);
    }
  }
  for (auto& e : expo) e.resize(gens.size(), 0);
  const std::size_t r = gens.size();
  std::vector<int> a(r, 0);
  for (;;) {
    ClassCharacter chi;
    chi.modulus = ex;
    chi.angle.resize(h);
    for (std::size_t x = 0; x < h; ++x) {
      long s = 0;
      for (std::size_t k = 0; k < r; ++k) s += static_cast<long>(expo[x][k]) * a[k];
      chi.angle[x] = static_cast<int>(s % ex);
    }
    bool ok = true;
    for (std::size_t x = 0; x < h && ok; ++x)
      for (std::size_t y = 0; y < h && ok; ++y)
        if ((chi.angle[x] + chi.angle[y]) % ex != chi.angle[t.compose(x, y)]) ok = false;
    if (ok) {
      int g = ex;
      for (int v : chi.angle) g = std::gcd(g, v);
      chi.order = ex / g;
      t.characters_.push_back(std::move(chi));
    }
    std::size_t k = 0;
    while (k < r && ++a[k] == ex) a[k++] = 0;
    if (k == r) break;
  }
  if (t.characters_.size() != h) throw InternalError("character count differs from class number");
  std::sort(t.characters_.begin(), t.characters_.end(), [](const ClassCharacter& x, const ClassCharacter& y) {
    if (x.order != y.order) return x.order < y.order;
    return x.angle < y.angle;
  });
  return t;
}

std::size_t ClassGroupTable::inverse(std::size_t i) const {
  for (std::size_t j = 0; j < order(); ++j)
    if (compose(i, j) == 0) return j;
  throw InternalError("class without inverse");
}

std::size_t ClassGroupTable::power(std::size_t i, long e) const {
  std::size_t base = e < 0 ? inverse(i) : i;
  std::size_t r = 0;
  for (long k = 0; k < std::labs(e); ++k) r = compose(r, base);
  return r;
}

std::size_t ClassGroupTable::element_order(std::size_t i) const {
  std::size_t x = i, k = 1;
  while (x != 0) {
    x = compose(x, i);
    ++k;
  }
  return k;
}

std::size_t ClassGroupTable::index_of(const QuadForm& f) const {
  if (f.discriminant() != disc_) throw InvalidInput("form " + f.to_string() + " has the wrong discriminant");
  auto it = index_.find(key_of(reduce(f)));
  if (it == index_.end()) throw InvalidInput("form " + f.to_string() + " is not primitive");
  return it->second;
}

std::size_t ClassGroupTable::prime_class(const BigInt& p_big) const {
  const i64 p = to_i64(p_big);
  const i64 D = disc_;
  i64 b = -1;
  if (p == 2) {
    for (i64 cand = 0; cand < 4; ++cand)
      if ((((cand * cand - D) % 8) + 8) % 8 == 0) {
        b = cand;
        break;
      }
  } else {
    i64 r = sqrt_mod(D, p);
    for (i64 cand : {r, p - r, r + p, 2 * p - r}) {
      if (cand < 0 || cand >= 2 * p) continue;
      if ((((cand - D) % 2) + 2) % 2 == 0) {
        b = cand;
        break;
      }
    }
  }
  if (b < 0 || ((i128(b) * b - D) % (4 * p)) != 0) throw InvalidInput("prime " + p_big.get_str() + " is inert");
  QuadForm f{BigInt(p), BigInt(b), BigInt(static_cast<long>((i128(b) * b - D) / (4 * p)))};
  return index_of(f);
}

std::vector<std::int64_t> ClassGroupTable::ideal_class_counts(const BigInt& n) const {
  if (n < 1) throw InvalidInput("ideal counts need n >= 1");
  const std::size_t h = order();
  std::vector<i64> dist(h, 0);
  dist[0] = 1;
  auto fac = fits_i64(n) ? factorize_small(to_i64(n)) : std::vector<std::pair<i64, unsigned>>{};
  if (!fits_i64(n))
    for (const auto& pp : factorize(n)) fac.emplace_back(to_i64(pp.prime), pp.exponent);
  const BigInt D(static_cast<long>(disc_));
  for (const auto& [p, e] : fac) {
    if (conductor_ % p == 0) throw InvalidInput("n shares a factor with the conductor");
    int k = kronecker(disc_, p);
    std::vector<i64> local(h, 0);
    if (k == -1) {
      if (e % 2) return std::vector<i64>(h, 0);
      local[0] = 1;
    } else {
      std::size_t g = prime_class(BigInt(static_cast<long>(p)));
      if (k == 0) {
        local[power(g, e)] += 1;
      } else {
        for (unsigned i = 0; i <= e; ++i) local[power(g, 2 * static_cast<long>(i) - static_cast<long>(e))] += 1;
      }
    }
    std::vector<i64> next(h, 0);
    for (std::size_t x = 0; x < h; ++x) {
      if (!dist[x]) continue;
      for (std::size_t y = 0; y < h; ++y)
        if (local[y]) next[compose(x, y)] += dist[x] * local[y];
    }
    dist = std::move(next);
  }
  return dist;
}

std::string ClassGroupTable::to_json() const {
  nlohmann::ordered_json j;
  j["discriminant"] = disc_;
  j["class_number"] = order();
  j["units"] = units_;
  j["exponent"] = exponent_;
  auto forms = nlohmann::ordered_json::array();
  for (const auto& f : forms_) forms.push_back({f.a.get_si(), f.b.get_si(), f.c.get_si()});
  j["forms"] = forms;
  auto comp = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < order(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < order(); ++k) row.push_back(compose(i, k));
    comp.push_back(row);
  }
  j["composition"] = comp;
  auto chars = nlohmann::ordered_json::array();
  for (const auto& c : characters_) {
    auto row = nlohmann::ordered_json::array();
    for (int a : c.angle) {
      int g = std::gcd(a, c.modulus);
      row.push_back(std::to_string(a / g) + "/" + std::to_string(c.modulus / g));
    }
    chars.push_back({{"order", c.order}, {"values", row}});
  }
  j["characters"] = chars;
  return j.dump(2);
}

ClassGroupTable class_group(const BigInt& disc) { return ClassGroupTable::build(disc); }

// ------------------------------------------------------------ representation numbers

std::int64_t r_Q_lattice(const QuadForm& q, std::int64_t n) {
  if (!q.positive_definite()) throw InvalidInput("r_Q requires a positive-definite form");
  if (n < 0) return 0;
  if (n == 0) return 1;
  const i64 a = to_i64(q.a), b = to_i64(q.b), c = to_i64(q.c);
  const i64 absD = 4 * a * c - b * b;
  const i64 vmax = isqrt64(static_cast<i64>(i128(4) * a * n / absD));
  i64 count = 0;
  for (i64 v = -vmax; v <= vmax; ++v) {
    i128 disc = i128(4) * a * n - i128(absD) * v * v;
    if (disc < 0) continue;
    i64 s = isqrt64(static_cast<i64>(disc));
    if (i128(s) * s != disc) continue;
    i64 bv = b * v;
    for (i64 num : {-bv + s, -bv - s}) {
      if (num % (2 * a) == 0) ++count;
      if (s == 0) break;
    }
  }
  return count;
}

std::vector<std::int64_t> r_Q_table(const QuadForm& q, std::int64_t limit) {
  if (!q.positive_definite()) throw InvalidInput("r_Q requires a positive-definite form");
  std::vector<i64> r(static_cast<std::size_t>(std::max<i64>(limit, 0) + 1), 0);
  if (limit < 0) return {};
  const i64 a = to_i64(q.a), b = to_i64(q.b), c = to_i64(q.c);
  const i64 absD = 4 * a * c - b * b;
  const i64 vmax = isqrt64(static_cast<i64>(i128(4) * a * limit / absD));
  for (i64 v = -vmax; v <= vmax; ++v) {
    // a u^2 + b v u + c v^2 <= limit  <=>  (2au + bv)^2 <= 4a limit - absD v^2
    i64 rhs = static_cast<i64>(i128(4) * a * limit - i128(absD) * v * v);
    if (rhs < 0) continue;
    i64 s = isqrt64(rhs);
    i64 ulo = floor_div(-b * v - s + 2 * a - 1, 2 * a), uhi = floor_div(-b * v + s, 2 * a);
    for (i64 u = ulo - 1; u <= uhi + 1; ++u) {
      i128 val = i128(a) * u * u + i128(b) * u * v + i128(c) * v * v;
      if (val >= 0 && val <= limit) ++r[static_cast<std::size_t>(val)];
    }
  }
  return r;
}

std::int64_t r_Q_ideal(const ClassGroupTable& t, std::size_t cls, const BigInt& n) {
  if (n == 0) throw InvalidInput("ideal route needs n >= 1");
  return t.units() * t.ideal_class_counts(n)[cls];
}

std::int64_t r_Q_ideal(const QuadForm& q, const BigInt& n) {
  auto t = class_group(q.discriminant());
  return r_Q_ideal(t, t.index_of(q), n);
}

// ------------------------------------------------------------ genus theory

std::vector<BigInt> prime_discriminants(const BigInt& disc) {
  if (!is_fundamental_discriminant(disc)) throw InvalidInput("genus theory requires a fundamental discriminant");
  std::vector<BigInt> out;
  BigInt rest = disc;
  for (const auto& [p, e] : factorize(disc)) {
    if (p == 2) continue;
    BigInt ps = (p % 4 == 1) ? p : BigInt(-p);
    out.push_back(ps);
    rest /= ps;
  }
  if (rest != 1) out.push_back(rest);  // -4, 8 or -8
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GenusPair> genus_pairs(const BigInt& disc) {
  auto primes = prime_discriminants(disc);
  std::vector<GenusPair> out;
  const std::size_t t = primes.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << t); ++mask) {
    BigInt q1 = 1;
    for (std::size_t i = 0; i < t; ++i)
      if (mask & (std::size_t(1) << i)) q1 *= primes[i];
    out.push_back({q1, BigInt(disc / q1)});
  }
  std::sort(out.begin(), out.end(), [](const GenusPair& x, const GenusPair& y) {
    if (x.q1 != y.q1) return x.q1 < y.q1;
    return x.q2 < y.q2;
  });
  return out;
}

std::vector<GenusPair> canonical_genus_pairs(const BigInt& disc) {
  std::vector<GenusPair> out;
  for (const auto& p : genus_pairs(disc))
    if (p.q1 > 0) out.push_back(p);
  return out;
}

int genus_character_value(const GenusPair& pair, const QuadForm& cls) {
  BigInt disc = pair.q1 * pair.q2;
  // Find a value represented by the form and coprime to the discriminant.
  for (long r = 1; r < 200; ++r)
    for (long u = -r; u <= r; ++u)
      for (long v : {-r, r}) {
        for (int flip = 0; flip < 2; ++flip) {
          long uu = flip ? v : u, vv = flip ? u : v;
          BigInt m = cls.evaluate(BigInt(uu), BigInt(vv));
          if (m != 0 && gcd(m, disc) == 1) {
            int k = kronecker(pair.q1, m);
            if (k == 0) throw InternalError("genus character evaluated at a non-unit");
            return k;
          }
        }
      }
  throw InternalError("form represents no value coprime to the discriminant");
}

int genus_character_value(const GenusPair& pair, const ClassGroupTable& t, std::size_t cls) {
  return genus_character_value(pair, t.forms()[cls]);
}

BigInt eisenstein_epsilon(const BigInt& q1, const BigInt& q2, const BigInt& n) {
  if (n < 1) throw InvalidInput("epsilon needs n >= 1");
  BigInt s = 0;
  for (const auto& d : divisors(n)) s += kronecker(q1, d) * kronecker(q2, BigInt(n / d));
  return s;
}

bool eisenstein_multiplicativity_check(const BigInt& q1, const BigInt& q2, const BigInt& n, const BigInt& m) {
  BigInt lhs = eisenstein_epsilon(q1, q2, n * m);
  BigInt rhs = 0;
  for (const auto& c : divisors(gcd(n, m))) {
    int mu = mobius(c);
    if (mu == 0) continue;
    int chi = kronecker(q1, c) * kronecker(q2, c);
    rhs += mu * chi * eisenstein_epsilon(q1, q2, BigInt(n / c)) * eisenstein_epsilon(q1, q2, BigInt(m / c));
  }
  return lhs == rhs;
}

BigRational eisenstein_coeff(const ClassGroupTable& t, std::size_t cls, const BigInt& n) {
  BigInt disc(static_cast<long>(t.discriminant()));
  BigRational s = 0;
  for (const auto& pair : canonical_genus_pairs(disc))
    s += genus_character_value(pair, t, cls) * eisenstein_epsilon(pair.q1, pair.q2, n);
  return s * t.units() / static_cast<long>(t.order());
}

Cyclotomic character_ideal_sum(const ClassGroupTable& t, const ClassCharacter& psi, const BigInt& n) {
  auto counts = t.ideal_class_counts(n);
  Cyclotomic z(psi.modulus);
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k]) z.add_root(psi.angle[k], counts[k]);
  return z;
}

namespace {
BigRational character_part(const ClassGroupTable& t, std::size_t cls, const BigInt& n, bool real_part) {
  auto counts = t.ideal_class_counts(n);
  Cyclotomic z(t.exponent());
  bool any = false;
  for (const auto& psi : t.characters()) {
    if (psi.is_real() != real_part) continue;
    any = true;
    for (std::size_t k = 0; k < counts.size(); ++k)
      if (counts[k]) z.add_root(static_cast<long>(psi.angle[k]) - psi.angle[cls], counts[k]);
  }
  if (!any) return 0;
  return z.rational_value() * t.units() / static_cast<long>(t.order());
}
}  // namespace

BigRational eisenstein_coeff_characters(const ClassGroupTable& t, std::size_t cls, const BigInt& n) {
  return character_part(t, cls, n, true);
}

BigRational cuspidal_coeff(const ClassGroupTable& t, std::size_t cls, const BigInt& n) {
  return character_part(t, cls, n, false);
}

BigRational eisenstein_coeff(const QuadForm& q, const BigInt& n) {
  auto t = class_group(q.discriminant());
  return eisenstein_coeff(t, t.index_of(q), n);
}

BigRational cuspidal_coeff(const QuadForm& q, const BigInt& n) {
  auto t = class_group(q.discriminant());
  return cuspidal_coeff(t, t.index_of(q), n);
}

}  // namespace syzygy
