#include "syzygy/quartic_classes.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "syzygy/error.hpp"
#include "syzygy/parallel.hpp"

namespace syzygy {

namespace {

using i64 = std::int64_t;
using i128 = __int128;
using Q64 = std::array<i64, 5>;

constexpr i64 kCoeffLimit = i64(1) << 60;

struct Mat64 {
  i64 a = 1, b = 0, c = 0, d = 1;
};

struct Q64Hash {
  std::size_t operator()(const Q64& q) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (i64 x : q) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

i64 checked(i128 v) {
  if (v > kCoeffLimit || v < -kCoeffLimit) throw InternalError("coefficient overflow in quartic reduction");
  return static_cast<i64>(v);
}

Mat64 mat_mul(const Mat64& x, const Mat64& y) {
  return {checked(i128(x.a) * y.a + i128(x.b) * y.c), checked(i128(x.a) * y.b + i128(x.b) * y.d),
          checked(i128(x.c) * y.a + i128(x.d) * y.c), checked(i128(x.c) * y.b + i128(x.d) * y.d)};
}

Mat64 mat_inv(const Mat64& m) { return {m.d, -m.b, -m.c, m.a}; }

UnimodularMatrix to_big(const Mat64& m) { return {BigInt(m.a), BigInt(m.b), BigInt(m.c), BigInt(m.d)}; }

i128 height128(const Q64& q) {
  i128 h = 0;
  for (i64 x : q) h += x < 0 ? -i128(x) : i128(x);
  return h;
}

bool less_canonical(const Q64& x, const Q64& y) {
  i128 hx = height128(x), hy = height128(y);
  if (hx != hy) return hx < hy;
  return x < y;
}

// F(x + k y, y); nullopt on overflow.
std::optional<Q64> shift(const Q64& p, i64 k) {
  static constexpr i64 binom[5][5] = {{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
  Q64 out{};
  for (int j = 0; j < 5; ++j) {
    i128 acc = 0;
    i128 kp = 1;
    for (int t = 0; t <= j; ++t) {
      int i = j - t;
      acc += i128(p[static_cast<std::size_t>(i)]) * binom[4 - i][t] * kp;
      if (acc > kCoeffLimit || acc < -kCoeffLimit) return std::nullopt;
      kp *= k;
    }
    out[static_cast<std::size_t>(j)] = static_cast<i64>(acc);
  }
  return out;
}

Q64 apply_s(const Q64& p) { return {p[4], -p[3], p[2], -p[1], p[0]}; }

const Mat64 kS{0, 1, -1, 0};
const Mat64 kT{1, 1, 0, 1};
const Mat64 kTinv{1, -1, 0, 1};

struct Step {
  Q64 form;
  Mat64 gen;
};

std::vector<Step> neighbours(const Q64& q) {
  std::vector<Step> out;
  if (auto t = shift(q, 1)) out.push_back({*t, kT});
  if (auto t = shift(q, -1)) out.push_back({*t, kTinv});
  out.push_back({apply_s(q), kS});
  return out;
}

Q64 to_q64(const QuarticForm& f) {
  Q64 q{};
  static const BigInt lim = BigInt(1) << 40;
  for (std::size_t i = 0; i < 5; ++i) {
    if (abs(f[i]) > lim) throw InvalidInput("quartic coefficients too large for equivalence search");
    q[i] = to_i64(f[i]);
  }
  return q;
}

QuarticForm to_form(const Q64& q) { return QuarticForm::from_longs(q[0], q[1], q[2], q[3], q[4]); }

struct Reduced64 {
  Q64 form;
  Mat64 witness;  // act(witness, input) == form
};

Reduced64 descend(Q64 g) {
  Mat64 m;
  for (;;) {
    bool improved = false;
    i128 best_h = height128(g);
    i64 best_k = 0;
    Q64 best = g;
    for (i64 k = -64; k <= 64; ++k) {
      if (k == 0) continue;
      auto t = shift(g, k);
      if (!t) continue;
      i128 h = height128(*t);
      if (h < best_h) {
        best_h = h;
        best_k = k;
        best = *t;
      }
    }
    if (best_k != 0) {
      g = best;
      m = mat_mul(m, Mat64{1, best_k, 0, 1});
      improved = true;
    }
    Q64 s = apply_s(g);
    if (height128(s) < height128(g)) {
      g = s;
      m = mat_mul(m, kS);
      improved = true;
    }
    if (!improved) return {g, m};
  }
}

struct SearchResult {
  std::unordered_map<Q64, Mat64, Q64Hash> seen;  // act(seen[x], start) == x
  std::vector<Mat64> collisions;                  // automorphisms of start
};

SearchResult bfs(const Q64& start, int depth, i128 cap, bool collect_collisions) {
  SearchResult r;
  r.seen.emplace(start, Mat64{});
  std::vector<Q64> frontier{start};
  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<Q64> next;
    for (const auto& f : frontier) {
      const Mat64 mf = r.seen.at(f);
      for (const auto& st : neighbours(f)) {
        if (height128(st.form) > cap) continue;
        Mat64 m = mat_mul(mf, st.gen);
        auto it = r.seen.find(st.form);
        if (it != r.seen.end()) {
          if (collect_collisions) r.collisions.push_back(mat_mul(m, mat_inv(it->second)));
          continue;
        }
        r.seen.emplace(st.form, m);
        next.push_back(st.form);
      }
    }
    frontier = std::move(next);
  }
  return r;
}

i128 search_cap(i128 h) { return 4 * h + 16; }

// Canonical representative among low-height neighbours of the descended form.
Reduced64 canonicalize(const Q64& q) {
  Reduced64 d = descend(q);
  auto r = bfs(d.form, 6, 2 * height128(d.form) + 8, false);
  Q64 best = d.form;
  Mat64 best_m{};
  for (const auto& [f, m] : r.seen) {
    if (less_canonical(f, best)) {
      best = f;
      best_m = m;
    }
  }
  // act(best_m, d.form) = best, act(d.witness, q) = d.form  =>  act(d.witness * best_m, q) = best
  return {best, mat_mul(d.witness, best_m)};
}

std::optional<Mat64> equivalent64(const Q64& f0, const Q64& g0, int depth) {
  if (f0 == g0) return Mat64{};
  i128 cap = search_cap(std::max(height128(f0), height128(g0)));
  auto from_f = bfs(f0, depth, cap, false);
  auto it = from_f.seen.find(g0);
  if (it != from_f.seen.end()) return it->second;
  auto from_g = bfs(g0, depth, cap, false);
  std::optional<Mat64> best;
  Q64 best_key{};
  for (const auto& [x, m2] : from_g.seen) {
    auto hit = from_f.seen.find(x);
    if (hit == from_f.seen.end()) continue;
    if (!best || x < best_key) {
      // act(m1, f0) = x = act(m2, g0)  =>  g0 = act(m1 * m2^-1, f0)
      best = mat_mul(hit->second, mat_inv(m2));
      best_key = x;
    }
  }
  return best;
}

std::vector<Mat64> close_group(std::vector<Mat64> gens, const Q64& f) {
  auto key = [](const Mat64& m) { return std::array<i64, 4>{m.a, m.b, m.c, m.d}; };
  auto acts_trivially = [&](const Mat64& m) {
    auto g = act(to_big(m), to_form(f).as_int());
    for (std::size_t i = 0; i < 5; ++i)
      if (g.c[i] != f[i]) return false;
    return true;
  };
  std::map<std::array<i64, 4>, Mat64> group;
  gens.push_back(Mat64{});
  gens.push_back(Mat64{-1, 0, 0, -1});
  for (const auto& g : gens)
    if (acts_trivially(g)) group.emplace(key(g), g);
  for (;;) {
    std::vector<Mat64> add;
    for (const auto& [k1, x] : group)
      for (const auto& [k2, y] : group) {
        Mat64 z = mat_mul(x, y);
        if (!group.count(key(z))) add.push_back(z);
      }
    if (add.empty()) break;
    for (const auto& z : add) group.emplace(key(z), z);
    if (group.size() > 24) throw InternalError("automorphism group is not finite; form is not squarefree?");
  }
  std::vector<Mat64> out;
  for (const auto& [k, m] : group) out.push_back(m);
  return out;
}

BigInt pow_big(const BigInt& p, unsigned k) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), k);
  return r;
}

BigRational half(const BigRational& x) { return x / 2; }

unsigned denominator_exponent(const RatForm& f, const BigInt& p) {
  unsigned k = 0;
  for (const auto& x : f.c) {
    if (x == 0) continue;
    int v = valuation(x, p);
    if (v < 0) k = std::max(k, static_cast<unsigned>(-v));
  }
  return k;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// BigInt residue of a p-integral rational modulo p.
BigInt reduce_mod_p(const BigRational& x, const BigInt& p) {
  BigInt inv;
  BigInt den = x.get_den();
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  BigInt r = (x.get_num() * inv) % p;
  if (r < 0) r += p;
  return r;
}

}  // namespace

// -------------------------------------------------------------- residues

std::vector<BigInt> admissibility_primes(const QuarticForm& f) {
  const BigRational& disc = f.discriminant();
  if (disc == 0) throw InvalidInput("admissibility requires a squarefree quartic (nonzero discriminant)");
  BigInt n = abs(BigInt(disc.get_num())) * denominator_lcm(f.hessian()) * denominator_lcm(scale(BigRational(1, 2), f.jacobian()));
  return prime_divisors(n);
}

bool admissible_at(const QuarticForm& f, const BigInt& p, const BigInt& m1, const BigInt& m2) {
  BigRational h = evaluate(f.hessian(), m1, m2);
  if (h.get_den() % p == 0) return false;
  BigRational t = half(evaluate(f.jacobian(), m1, m2));
  if (t.get_den() % p == 0) return false;
  BigInt v = f.evaluate(m1, m2);
  return !(v % p == 0 && h.get_num() % p == 0);
}

ResidueSet::ResidueSet(QuarticForm form, std::vector<Local> locals) : form_(std::move(form)), locals_(std::move(locals)) {}

BigInt ResidueSet::modulus() const {
  BigInt q = 1;
  for (const auto& l : locals_) q *= l.modulus;
  return q;
}

BigInt ResidueSet::size() const {
  BigInt s = 1;
  for (const auto& l : locals_) s *= l.count;
  return s;
}

bool ResidueSet::has_primitive() const {
  return std::all_of(locals_.begin(), locals_.end(), [](const Local& l) { return l.primitive_count > 0; });
}

bool ResidueSet::contains(std::int64_t m1, std::int64_t m2) const {
  for (const auto& l : locals_) {
    if (l.explicit_table) {
      std::size_t idx = static_cast<std::size_t>(mod_floor(m1, l.modulus) * l.modulus + mod_floor(m2, l.modulus));
      if (!l.table[idx]) return false;
    } else if (!admissible_at(form_, l.prime, BigInt(m1), BigInt(m2))) {
      return false;
    }
  }
  return true;
}

bool ResidueSet::contains(const BigInt& m1, const BigInt& m2) const {
  if (fits_i64(m1) && fits_i64(m2)) return contains(to_i64(m1), to_i64(m2));
  for (const auto& l : locals_)
    if (!admissible_at(form_, l.prime, m1, m2)) return false;
  return true;
}

std::vector<std::pair<BigInt, BigInt>> ResidueSet::enumerate(std::size_t limit) const {
  std::vector<std::pair<BigInt, BigInt>> acc{{BigInt(0), BigInt(0)}};
  BigInt mod_acc = 1;
  for (const auto& l : locals_) {
    if (!l.explicit_table) throw InvalidInput("residue set too large to enumerate");
    std::vector<std::pair<BigInt, BigInt>> next;
    BigInt m = l.modulus;
    BigInt inv;  // inverse of mod_acc modulo m
    mpz_invert(inv.get_mpz_t(), mod_acc.get_mpz_t(), m.get_mpz_t());
    for (const auto& [x, y] : acc)
      for (std::int64_t r1 = 0; r1 < l.modulus; ++r1)
        for (std::int64_t r2 = 0; r2 < l.modulus; ++r2) {
          if (!l.table[static_cast<std::size_t>(r1 * l.modulus + r2)]) continue;
          auto crt = [&](const BigInt& a, std::int64_t b) {
            BigInt t = ((BigInt(b) - a) * inv) % m;
            if (t < 0) t += m;
            return BigInt(a + mod_acc * t);
          };
          next.emplace_back(crt(x, r1), crt(y, r2));
          if (next.size() > limit) throw InvalidInput("residue set exceeds enumeration limit");
        }
    acc = std::move(next);
    mod_acc *= m;
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

ResidueSet admissible_residues(const QuarticForm& f) {
  std::vector<ResidueSet::Local> locals;
  const RatForm half_t = scale(BigRational(1, 2), f.jacobian());
  for (const auto& p : admissibility_primes(f)) {
    ResidueSet::Local l;
    l.prime = p;
    l.exponent = 1 + std::max(denominator_exponent(f.hessian(), p), denominator_exponent(half_t, p));
    BigInt pk = pow_big(p, l.exponent);
    if (pk <= 256) {
      l.modulus = to_i64(pk);
      l.explicit_table = true;
      l.table.assign(static_cast<std::size_t>(l.modulus * l.modulus), false);
      for (std::int64_t r1 = 0; r1 < l.modulus; ++r1)
        for (std::int64_t r2 = 0; r2 < l.modulus; ++r2)
          if (admissible_at(f, p, BigInt(r1), BigInt(r2))) {
            l.table[static_cast<std::size_t>(r1 * l.modulus + r2)] = true;
            ++l.count;
            if (BigInt(r1) % p != 0 || BigInt(r2) % p != 0) ++l.primitive_count;
          }
    } else if (l.exponent == 1 && p <= 1000000) {
      // Count pairs with F = H = 0 mod p by scanning projective points.
      l.modulus = to_i64(p);
      std::int64_t pp = l.modulus;
      const RatForm& h = f.hessian();
      auto vanish = [&](const BigInt& x, const BigInt& y) {
        BigInt fv = f.evaluate(x, y) % p;
        BigInt hv = 0;
        BigInt xp = 1;
        std::vector<BigInt> xs(5, 1);
        for (int i = 1; i <= 4; ++i) xs[static_cast<std::size_t>(i)] = (xs[static_cast<std::size_t>(i - 1)] * x) % p;
        BigInt yp = 1;
        for (int i = 0; i <= 4; ++i) {
          hv += reduce_mod_p(h.c[static_cast<std::size_t>(i)], p) * xs[static_cast<std::size_t>(4 - i)] * yp;
          yp = (yp * y) % p;
        }
        (void)xp;
        return fv == 0 && hv % p == 0;
      };
      std::int64_t roots = vanish(0, 1) ? 1 : 0;
      for (std::int64_t t = 0; t < pp; ++t)
        if (vanish(1, t)) ++roots;
      l.count = pp * pp - 1 - (pp - 1) * roots;
      l.primitive_count = l.count;
    } else {
      throw InvalidInput("admissibility prime " + p.get_str() + " too large for residue computation");
    }
    locals.push_back(std::move(l));
  }
  return ResidueSet(f, std::move(locals));
}

bool is_admissible_pair(const QuarticForm& /*f*/, const ResidueSet& r, const BigInt& m1, const BigInt& m2) {
  if (gcd(m1, m2) != 1) return false;
  return r.contains(m1, m2);
}

bool is_admissible_pair(const QuarticForm& f, const BigInt& m1, const BigInt& m2) {
  if (gcd(m1, m2) != 1) return false;
  for (const auto& p : admissibility_primes(f))
    if (!admissible_at(f, p, m1, m2)) return false;
  return true;
}

Definiteness definiteness(const QuarticForm& f) {
  if (f[0] == 0 || f[4] == 0) return Definiteness::Indefinite;
  if (count_real_roots(dehomogenize(f.as_rat())) > 0) return Definiteness::Indefinite;
  return f[0] > 0 ? Definiteness::PositiveDefinite : Definiteness::NegativeDefinite;
}

// -------------------------------------------------------------- equivalence

Reduction reduce_quartic(const QuarticForm& f) {
  auto r = canonicalize(to_q64(f));
  return {to_form(r.form), to_big(r.witness)};
}

std::optional<UnimodularMatrix> are_equivalent(const QuarticForm& f, const QuarticForm& g, int depth) {
  if (f == g) return UnimodularMatrix::identity();
  if (f.I() != g.I() || f.J() != g.J()) return std::nullopt;
  auto rf = canonicalize(to_q64(f));
  auto rg = canonicalize(to_q64(g));
  auto w0 = equivalent64(rf.form, rg.form, depth);
  if (!w0) return std::nullopt;
  // act(rf.w, f) = F0, act(w0, F0) = G0, act(rg.w, g) = G0  =>  g = act(rf.w * w0 * rg.w^-1, f)
  Mat64 w = mat_mul(mat_mul(rf.witness, *w0), mat_inv(rg.witness));
  UnimodularMatrix m = to_big(w);
  if (!(sl2_act(m, f) == g)) throw InternalError("equivalence witness failed verification");
  return m;
}

std::vector<UnimodularMatrix> automorphism_group(const QuarticForm& f, int depth) {
  if (!is_squarefree(f)) throw InvalidInput("automorphism_group requires a squarefree form");
  auto rf = canonicalize(to_q64(f));
  auto search = bfs(rf.form, depth, search_cap(height128(rf.form)), true);
  auto group0 = close_group(search.collisions, rf.form);
  // act(R, f) = F0  =>  Aut(f) = R Aut(F0) R^-1
  std::vector<UnimodularMatrix> out;
  for (const auto& m : group0) {
    UnimodularMatrix c = to_big(mat_mul(mat_mul(rf.witness, m), mat_inv(rf.witness)));
    if (!(sl2_act(c, f) == f)) throw InternalError("automorphism failed verification");
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// -------------------------------------------------------------- enumeration

std::vector<QuarticForm> ClassSet::representatives() const {
  std::vector<QuarticForm> out;
  for (const auto& c : classes) out.push_back(c.form);
  return out;
}

std::size_t ClassSet::effective_count() const {
  return static_cast<std::size_t>(std::count_if(classes.begin(), classes.end(), [](const QuarticClass& c) { return c.effective; }));
}

FormLattice resolve_lattice(FormLattice requested, const BigRational& I, const BigRational& J) {
  if (requested != FormLattice::Auto) return requested;
  return is_integer(I) && is_integer(J) ? FormLattice::Mordell : FormLattice::Integral;
}

std::string lattice_name(FormLattice l) {
  switch (l) {
    case FormLattice::Auto: return "auto";
    case FormLattice::Mordell: return "mordell";
    case FormLattice::Integral: return "integral";
  }
  return "auto";
}

FormLattice parse_lattice(const std::string& name) {
  if (name == "auto") return FormLattice::Auto;
  if (name == "mordell") return FormLattice::Mordell;
  if (name == "integral") return FormLattice::Integral;
  throw InvalidInput("unknown form lattice '" + name + "' (auto, mordell, integral)");
}

bool in_lattice(const QuarticForm& f, FormLattice l) {
  if (l != FormLattice::Mordell) return true;
  return f[1] % 4 == 0 && f[3] % 4 == 0 && f[2] % 6 == 0;
}

ClassSet enumerate_classes(const BigRational& I, const BigRational& J, const BigInt& coeff_bound, const ClassSearchOptions& options) {
  if (I * I * I - 27 * J * J == 0) throw InvalidInput("degenerate invariants: I^3 - 27 J^2 = 0");
  if (coeff_bound < 0 || coeff_bound > 100000) throw InvalidInput("coefficient bound must lie in [0, 100000]");
  ClassSet out;
  out.I = I;
  out.J = J;
  out.search_bound = coeff_bound;
  out.lattice = resolve_lattice(options.lattice, I, J);
  const bool mordell = out.lattice == FormLattice::Mordell;
  out.evidence.coeff_bound = coeff_bound;
  out.evidence.search_depth = options.depth;
  BigRational i12 = 12 * I, j432 = 432 * J;
  if (!is_integer(i12) || !is_integer(j432)) {
    out.evidence.note = "12I or 432J is not an integer: no integral quartic has these invariants";
    return out;
  }
  const i64 B = to_i64(coeff_bound);
  const i64 I12 = to_i64(i12.get_num()), J432 = to_i64(j432.get_num());
  const std::size_t slabs = static_cast<std::size_t>(2 * B + 1);
  std::vector<std::vector<Q64>> found(slabs);
  parallel_for(slabs, options.threads, [&](std::size_t s) {
    const i64 p0 = static_cast<i64>(s) - B;
    auto& bucket = found[s];
    const i64 s1 = mordell ? 4 : 1, s2 = mordell ? 6 : 1;
    for (i64 p1 = -B / s1 * s1; p1 <= B; p1 += s1)
      for (i64 p2 = -B / s2 * s2; p2 <= B; p2 += s2)
        for (i64 p3 = -B / s1 * s1; p3 <= B; p3 += s1) {
          i64 p4;
          if (p0 != 0) {
            i64 num = I12 + 3 * p1 * p3 - p2 * p2;
            i64 den = 12 * p0;
            if (num % den != 0) continue;
            p4 = num / den;
          } else {
            if (p1 == 0 || p2 * p2 - 3 * p1 * p3 != I12) continue;
            i64 num = 9 * p1 * p2 * p3 - 2 * p2 * p2 * p2 - J432;
            i64 den = 27 * p1 * p1;
            if (num % den != 0) continue;
            p4 = num / den;
          }
          if (p4 < -B || p4 > B) continue;
          i128 j = i128(72) * p0 * p2 * p4 + i128(9) * p1 * p2 * p3 - i128(27) * p1 * p1 * p4 - i128(27) * p0 * p3 * p3 -
                   i128(2) * p2 * p2 * p2;
          if (j != J432) continue;
          bucket.push_back({p0, p1, p2, p3, p4});
        }
  });
  std::vector<Q64> raw;
  for (auto& b : found) raw.insert(raw.end(), b.begin(), b.end());
  out.evidence.raw_forms = raw.size();

  std::vector<Q64> canon(raw.size());
  parallel_for(raw.size(), options.threads, [&](std::size_t i) { canon[i] = canonicalize(raw[i]).form; });
  std::set<Q64> keys(canon.begin(), canon.end());
  std::vector<Q64> distinct(keys.begin(), keys.end());

  // Join canonical keys that a deeper search shows to be equivalent.
  std::vector<std::size_t> parent(distinct.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < distinct.size(); ++i)
    for (std::size_t j = i + 1; j < distinct.size(); ++j) pairs.emplace_back(i, j);
  std::vector<char> equiv(pairs.size(), 0);
  parallel_for(pairs.size(), options.threads, [&](std::size_t k) {
    equiv[k] = equivalent64(distinct[pairs[k].first], distinct[pairs[k].second], options.depth).has_value();
  });
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!equiv[k]) continue;
    std::size_t a = find(pairs[k].first), b = find(pairs[k].second);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      ++out.evidence.merged_by_search;
    }
  }
  std::vector<Q64> reps;
  for (std::size_t i = 0; i < distinct.size(); ++i)
    if (find(i) == i) reps.push_back(distinct[i]);
  std::sort(reps.begin(), reps.end(), less_canonical);

  out.classes.resize(reps.size());
  parallel_for(reps.size(), options.threads, [&](std::size_t i) {
    QuarticClass& c = out.classes[i];
    c.form = to_form(reps[i]);
    c.automorphisms = automorphism_group(c.form, options.depth);
    c.effective = admissible_residues(c.form).has_primitive() && definiteness(c.form) != Definiteness::NegativeDefinite;
  });
  out.evidence.note = "exhaustive coefficient box; completeness is not certified";
  return out;
}

// -------------------------------------------------------------- cache format

std::string serialize_class_set(const ClassSet& s) {
  std::ostringstream os;
  os << "# syzygy class set v2\n";
  os << "I " << to_string(s.I) << "\n";
  os << "J " << to_string(s.J) << "\n";
  os << "bound " << to_string(s.search_bound) << "\n";
  os << "lattice " << lattice_name(s.lattice) << "\n";
  os << "depth " << s.evidence.search_depth << "\n";
  os << "raw_forms " << s.evidence.raw_forms << "\n";
  os << "merged " << s.evidence.merged_by_search << "\n";
  os << "classes " << s.classes.size() << "\n";
  for (const auto& c : s.classes) {
    os << "form " << c.form.to_string() << " effective " << (c.effective ? 1 : 0) << " aut ";
    for (std::size_t i = 0; i < c.automorphisms.size(); ++i) {
      const auto& m = c.automorphisms[i];
      if (i) os << ';';
      os << m.m11.get_str() << ',' << m.m12.get_str() << ',' << m.m21.get_str() << ',' << m.m22.get_str();
    }
    os << "\n";
  }
  return os.str();
}

ClassSet parse_class_set(const std::string& text) {
  auto fail = [](const std::string& why) -> ClassSet { throw CacheCorruption("class set record: " + why); };
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "# syzygy class set v2") return fail("bad header");
  ClassSet s;
  std::size_t expected = 0;
  auto field = [&](const std::string& name) {
    if (!std::getline(in, line)) fail("missing " + name);
    if (line.rfind(name + " ", 0) != 0) fail("expected " + name);
    return line.substr(name.size() + 1);
  };
  try {
    s.I = parse_rational(field("I"));
    s.J = parse_rational(field("J"));
    s.search_bound = parse_bigint(field("bound"));
    s.evidence.coeff_bound = s.search_bound;
    s.lattice = parse_lattice(field("lattice"));
    if (s.lattice == FormLattice::Auto) fail("unresolved lattice");
    s.evidence.search_depth = std::stoi(field("depth"));
    s.evidence.raw_forms = std::stoull(field("raw_forms"));
    s.evidence.merged_by_search = std::stoull(field("merged"));
    expected = std::stoull(field("classes"));
    for (std::size_t k = 0; k < expected; ++k) {
      if (!std::getline(in, line)) fail("truncated class list");
      std::istringstream ls(line);
      std::string tag, form, eff_tag, aut_tag, auts;
      int eff = 0;
      if (!(ls >> tag >> form >> eff_tag >> eff >> aut_tag >> auts) || tag != "form" || eff_tag != "effective" || aut_tag != "aut")
        fail("malformed class line");
      QuarticClass c;
      c.form = QuarticForm::parse(form);
      c.effective = eff != 0;
      std::istringstream as(auts);
      std::string m;
      while (std::getline(as, m, ';')) {
        std::istringstream ms(m);
        std::string e[4];
        for (auto& x : e)
          if (!std::getline(ms, x, ',')) fail("malformed automorphism");
        UnimodularMatrix u{parse_bigint(e[0]), parse_bigint(e[1]), parse_bigint(e[2]), parse_bigint(e[3])};
        if (u.det() != 1 || !(sl2_act(u, c.form) == c.form)) fail("automorphism does not fix its form");
        c.automorphisms.push_back(u);
      }
      if (c.form.I() != s.I || c.form.J() != s.J) fail("representative has wrong invariants");
      if (!in_lattice(c.form, s.lattice)) fail("representative outside the recorded lattice");
      s.classes.push_back(std::move(c));
    }
  } catch (const InvalidInput& e) {
    fail(e.what());
  } catch (const std::logic_error& e) {
    fail(e.what());
  }
  if (std::getline(in, line) && !line.empty()) fail("trailing data");
  s.evidence.note = "loaded from cache";
  return s;
}

}  // namespace syzygy
