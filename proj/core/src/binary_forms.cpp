#include "syzygy/binary_forms.hpp"

#include <sstream>

#include "syzygy/error.hpp"

namespace syzygy {

namespace {

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

template <class C>
std::vector<C> poly_mul(const std::vector<C>& a, const std::vector<C>& b) {
  std::vector<C> r(a.size() + b.size() - 1, C(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Expands f(m11 x + m12 y, m21 x + m22 y); coefficients stay in the ring of C.
template <class C>
BinaryForm<C> act_generic(const UnimodularMatrix& m, const BinaryForm<C>& f) {
  const int d = f.degree();
  std::vector<C> X{C(m.m11), C(m.m12)}, Y{C(m.m21), C(m.m22)};
  std::vector<std::vector<C>> xp{{C(1)}}, yp{{C(1)}};
  for (int i = 1; i <= d; ++i) {
    xp.push_back(poly_mul(xp.back(), X));
    yp.push_back(poly_mul(yp.back(), Y));
  }
  std::vector<C> out(static_cast<std::size_t>(d + 1), C(0));
  for (int i = 0; i <= d; ++i) {
    if (f.c[static_cast<std::size_t>(i)] == 0) continue;
    auto term = poly_mul(xp[static_cast<std::size_t>(d - i)], yp[static_cast<std::size_t>(i)]);
    for (int k = 0; k <= d; ++k) out[static_cast<std::size_t>(k)] += f.c[static_cast<std::size_t>(i)] * term[static_cast<std::size_t>(k)];
  }
  return BinaryForm<C>(std::move(out));
}

void append_monomial(std::ostringstream& os, bool& first, const BigRational& coeff, int xe, int ye) {
  if (coeff == 0) return;
  BigRational mag = abs(coeff);
  if (first)
    os << (coeff < 0 ? "-" : "");
  else
    os << (coeff < 0 ? " - " : " + ");
  first = false;
  bool unit = (mag == 1);
  if (!unit || (xe == 0 && ye == 0)) os << mag.get_str();
  if (xe > 0) os << 'x' << (xe > 1 ? "^" + std::to_string(xe) : "");
  if (ye > 0) os << 'y' << (ye > 1 ? "^" + std::to_string(ye) : "");
}

}  // namespace

UnimodularMatrix UnimodularMatrix::from(long a, long b, long c, long d) {
  UnimodularMatrix m{BigInt(a), BigInt(b), BigInt(c), BigInt(d)};
  require_unimodular(m);
  return m;
}

UnimodularMatrix UnimodularMatrix::inverse() const { return {m22, -m12, -m21, m11}; }

UnimodularMatrix UnimodularMatrix::operator*(const UnimodularMatrix& o) const {
  return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22, m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
}

UnimodularMatrix UnimodularMatrix::operator-() const { return {-m11, -m12, -m21, -m22}; }

bool UnimodularMatrix::operator<(const UnimodularMatrix& o) const {
  if (m11 != o.m11) return m11 < o.m11;
  if (m12 != o.m12) return m12 < o.m12;
  if (m21 != o.m21) return m21 < o.m21;
  return m22 < o.m22;
}

std::string UnimodularMatrix::to_string() const {
  return "[[" + m11.get_str() + "," + m12.get_str() + "],[" + m21.get_str() + "," + m22.get_str() + "]]";
}

void require_unimodular(const UnimodularMatrix& m) {
  if (m.det() != 1) throw InvalidInput("matrix " + m.to_string() + " is not in SL2(Z)");
}

// ---------------------------------------------------------------- QuarticForm

QuarticForm::QuarticForm() : QuarticForm(1, 0, 0, 0, 0) {}

QuarticForm::QuarticForm(BigInt p0, BigInt p1, BigInt p2, BigInt p3, BigInt p4)
    : QuarticForm(std::array<BigInt, 5>{std::move(p0), std::move(p1), std::move(p2), std::move(p3), std::move(p4)}) {}

QuarticForm::QuarticForm(const std::array<BigInt, 5>& p) : p_(p), lazy_(std::make_shared<Lazy>()) {
  bool all_zero = true;
  for (const auto& x : p_)
    if (x != 0) all_zero = false;
  if (all_zero) throw InvalidInput("quartic form must have a nonzero coefficient");
}

QuarticForm QuarticForm::from_longs(long p0, long p1, long p2, long p3, long p4) {
  return QuarticForm(BigInt(p0), BigInt(p1), BigInt(p2), BigInt(p3), BigInt(p4));
}

QuarticForm QuarticForm::parse(std::string_view text) {
  auto parts = split_commas(text);
  if (parts.size() != 5) throw InvalidInput("quartic form needs 5 comma-separated integers: '" + std::string(text) + "'");
  std::array<BigInt, 5> p;
  for (std::size_t i = 0; i < 5; ++i) p[i] = parse_bigint(parts[i]);
  return QuarticForm(p);
}

MordellCoefficients QuarticForm::mordell() const {
  return {BigRational(p_[0]), make_rational(p_[1], 4), make_rational(p_[2], 6), make_rational(p_[3], 4), BigRational(p_[4])};
}

RatForm QuarticForm::as_rat() const {
  std::vector<BigRational> v;
  for (const auto& x : p_) v.emplace_back(x);
  return RatForm(std::move(v));
}

BinaryForm<BigInt> QuarticForm::as_int() const { return BinaryForm<BigInt>(std::vector<BigInt>(p_.begin(), p_.end())); }

const QuarticForm::Cache& QuarticForm::cache() const {
  std::call_once(lazy_->once, [this] {
    Cache& c = lazy_->value;
    auto [a, b, cc, d, e] = mordell();
    c.I = a * e - 4 * b * d + 3 * cc * cc;
    c.J = a * cc * e + 2 * b * cc * d - b * b * e - d * d * a - cc * cc * cc;
    c.disc = c.I * c.I * c.I - 27 * c.J * c.J;
    c.H = syzygy::hessian(as_rat());
    c.T = syzygy::jacobian_covariant(as_rat());
  });
  return lazy_->value;
}

BigInt QuarticForm::evaluate(const BigInt& m1, const BigInt& m2) const { return syzygy::evaluate(as_int(), m1, m2); }

BigInt QuarticForm::height() const {
  BigInt h = 0;
  for (const auto& x : p_) h += abs(x);
  return h;
}

std::string QuarticForm::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < 5; ++i) {
    if (i) s += ',';
    s += p_[i].get_str();
  }
  return s;
}

std::string QuarticForm::pretty() const { return syzygy::pretty(as_rat()); }

QuadForm QuadForm::parse(std::string_view text) {
  auto parts = split_commas(text);
  if (parts.size() != 3) throw InvalidInput("quadratic form needs 3 comma-separated integers: '" + std::string(text) + "'");
  return {parse_bigint(parts[0]), parse_bigint(parts[1]), parse_bigint(parts[2])};
}

std::string QuadForm::to_string() const { return a.get_str() + "," + b.get_str() + "," + c.get_str(); }

std::string QuadForm::pretty(char x, char y) const {
  std::string s = syzygy::pretty(to_rat(as_form()));
  for (auto& ch : s) {
    if (ch == 'x')
      ch = x;
    else if (ch == 'y')
      ch = y;
  }
  return s;
}

// ---------------------------------------------------------------- generic

RatForm to_rat(const BinaryForm<BigInt>& f) {
  std::vector<BigRational> v;
  for (const auto& x : f.c) v.emplace_back(x);
  return RatForm(std::move(v));
}

RatForm add(const RatForm& f, const RatForm& g) {
  if (f.c.size() != g.c.size()) throw InvalidInput("adding forms of different degree");
  RatForm r = f;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += g.c[i];
  return r;
}

RatForm sub(const RatForm& f, const RatForm& g) { return add(f, scale(-1, g)); }

RatForm mul(const RatForm& f, const RatForm& g) { return RatForm(poly_mul(f.c, g.c)); }

RatForm scale(const BigRational& s, const RatForm& f) {
  RatForm r = f;
  for (auto& x : r.c) x *= s;
  return r;
}

RatForm partial_x(const RatForm& f) {
  const int d = f.degree();
  std::vector<BigRational> v;
  for (int i = 0; i < d; ++i) v.push_back(f.c[static_cast<std::size_t>(i)] * (d - i));
  return RatForm(std::move(v));
}

RatForm partial_y(const RatForm& f) {
  const int d = f.degree();
  std::vector<BigRational> v;
  for (int i = 1; i <= d; ++i) v.push_back(f.c[static_cast<std::size_t>(i)] * i);
  return RatForm(std::move(v));
}

RatForm act(const UnimodularMatrix& m, const RatForm& f) { return act_generic(m, f); }

BinaryForm<BigInt> act(const UnimodularMatrix& m, const BinaryForm<BigInt>& f) { return act_generic(m, f); }

std::string pretty(const RatForm& f) {
  std::ostringstream os;
  bool first = true;
  const int d = f.degree();
  for (int i = 0; i <= d; ++i) append_monomial(os, first, f.c[static_cast<std::size_t>(i)], d - i, i);
  if (first) return "0";
  return os.str();
}

RatPolynomial dehomogenize(const RatForm& f) { return RatPolynomial(std::vector<BigRational>(f.c.rbegin(), f.c.rend())); }

BigInt denominator_lcm(const RatForm& f) {
  BigInt l = 1;
  for (const auto& x : f.c) l = lcm(l, BigInt(x.get_den()));
  return l;
}

// ---------------------------------------------------------------- quartic ops

BigRational invariant_I(const QuarticForm& f) { return f.I(); }
BigRational invariant_J(const QuarticForm& f) { return f.J(); }
BigRational discriminant(const QuarticForm& f) { return f.discriminant(); }

RatForm hessian(const RatForm& f) {
  if (f.degree() != 4) throw InvalidInput("hessian expects a quartic");
  BigRational a = f.c[0], b = f.c[1] / 4, c = f.c[2] / 6, d = f.c[3] / 4, e = f.c[4];
  return RatForm({a * c - b * b, 2 * (a * d - b * c), a * e + 2 * b * d - 3 * c * c, 2 * (b * e - c * d), c * e - d * d});
}

RatForm hessian(const QuarticForm& f) { return f.hessian(); }

SexticForm jacobian_covariant(const RatForm& f) {
  RatForm h = hessian(f);
  RatForm det = sub(mul(partial_x(f), partial_y(h)), mul(partial_y(f), partial_x(h)));
  return scale(BigRational(-1, 8), det);
}

SexticForm jacobian_covariant(const QuarticForm& f) { return f.jacobian(); }

bool verify_syzygy(const RatForm& f, const RatForm& h, const SexticForm& t, const BigRational& I, const BigRational& J) {
  if (f.degree() != 4 || h.degree() != 4 || t.degree() != 6) return false;
  RatForm lhs = mul(t, t);
  RatForm f2 = mul(f, f);
  RatForm rhs = scale(-4, mul(mul(h, h), h));
  rhs = add(rhs, scale(I, mul(h, f2)));
  rhs = sub(rhs, scale(J, mul(f2, f)));
  return lhs == rhs;
}

bool verify_syzygy(const QuarticForm& f) { return verify_syzygy(f.as_rat(), f.hessian(), f.jacobian(), f.I(), f.J()); }

QuarticForm sl2_act(const UnimodularMatrix& m, const QuarticForm& f) {
  require_unimodular(m);
  auto g = act(m, f.as_int());
  return QuarticForm(g.c[0], g.c[1], g.c[2], g.c[3], g.c[4]);
}

BigInt evaluate(const QuarticForm& f, const BigInt& m1, const BigInt& m2) { return f.evaluate(m1, m2); }

BigRational evaluate(const RatForm& f, const BigInt& m1, const BigInt& m2) {
  return evaluate<BigRational>(f, BigRational(m1), BigRational(m2));
}

// Homogeneous Sylvester resultant; leading-zero degeneracy handled via the full degree.
BigRational resultant(const RatForm& f, const RatForm& g) {
  const int m = f.degree(), n = g.degree();
  if (m < 0 || n < 0) throw InvalidInput("resultant of empty forms");
  const std::size_t size = static_cast<std::size_t>(m + n);
  if (size == 0) return 1;
  RatMatrix s(size, std::vector<BigRational>(size, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = f.c[static_cast<std::size_t>(j)];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = g.c[static_cast<std::size_t>(j)];
  return determinant(std::move(s));
}

bool is_squarefree(const RatForm& f) {
  if (f.is_zero()) return false;
  const int d = f.degree();
  // Multiplicity of the root at infinity equals the number of leading zero coefficients.
  int lead_zeros = 0;
  while (lead_zeros <= d && f.c[static_cast<std::size_t>(lead_zeros)] == 0) ++lead_zeros;
  if (lead_zeros >= 2) return false;
  int tail_zeros = 0;
  while (tail_zeros <= d && f.c[static_cast<std::size_t>(d - tail_zeros)] == 0) ++tail_zeros;
  if (tail_zeros >= 2) return false;
  RatPolynomial px = dehomogenize(f);
  RatPolynomial py(std::vector<BigRational>(f.c.begin(), f.c.end()));
  return is_squarefree(px) && is_squarefree(py);
}

bool is_squarefree(const QuarticForm& f) { return is_squarefree(f.as_rat()); }

}  // namespace syzygy
