#include "syzygy/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "syzygy/error.hpp"

namespace syzygy {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::from_descending(const std::vector<BigInt>& coeffs) {
  return IntPolynomial(std::vector<BigInt>(coeffs.rbegin(), coeffs.rend()));
}

void IntPolynomial::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

int IntPolynomial::degree() const { return static_cast<int>(c.size()) - 1; }

const BigInt& IntPolynomial::leading() const {
  if (c.empty()) throw InvalidInput("leading coefficient of zero polynomial");
  return c.back();
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& x : c) g = gcd(g, x);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (c.empty()) return *this;
  BigInt g = content();
  if (leading() < 0) g = -g;
  IntPolynomial r = *this;
  for (auto& x : r.c) x /= g;
  return r;
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

RatPolynomial IntPolynomial::to_rat() const {
  std::vector<BigRational> v;
  v.reserve(c.size());
  for (const auto& x : c) v.emplace_back(x);
  return RatPolynomial(std::move(v));
}

std::string IntPolynomial::to_string(char var) const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& a = c[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    BigInt mag = abs(a);
    if (first)
      os << (a < 0 ? "-" : "");
    else
      os << (a < 0 ? " - " : " + ");
    first = false;
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

RatPolynomial::RatPolynomial(std::vector<BigRational> coeffs) : c(std::move(coeffs)) { trim(); }

void RatPolynomial::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

int RatPolynomial::degree() const { return static_cast<int>(c.size()) - 1; }

const BigRational& RatPolynomial::leading() const {
  if (c.empty()) throw InvalidInput("leading coefficient of zero polynomial");
  return c.back();
}

BigRational RatPolynomial::eval(const BigRational& x) const {
  BigRational r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

RatPolynomial RatPolynomial::monic() const {
  if (c.empty()) return *this;
  RatPolynomial r = *this;
  BigRational l = leading();
  for (auto& x : r.c) x /= l;
  return r;
}

IntPolynomial RatPolynomial::primitive_integral() const {
  BigInt l = 1;
  for (const auto& x : c) l = lcm(l, BigInt(x.get_den()));
  std::vector<BigInt> v;
  v.reserve(c.size());
  for (const auto& x : c) v.push_back(BigInt(x.get_num() * (l / x.get_den())));
  return IntPolynomial(std::move(v)).primitive_part();
}

namespace {
template <class P>
P add_sub(const P& a, const P& b, int sign) {
  P r = a;
  if (r.c.size() < b.c.size()) r.c.resize(b.c.size());
  for (std::size_t i = 0; i < b.c.size(); ++i) {
    if (sign > 0)
      r.c[i] += b.c[i];
    else
      r.c[i] -= b.c[i];
  }
  r.trim();
  return r;
}

template <class P>
P mul(const P& a, const P& b) {
  if (a.c.empty() || b.c.empty()) return P{};
  P r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}
}  // namespace

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) { return add_sub(a, b, 1); }
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return add_sub(a, b, -1); }
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) { return mul(a, b); }
RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) { return add_sub(a, b, 1); }
RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) { return add_sub(a, b, -1); }
RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) { return mul(a, b); }

RatPolynomial operator*(const BigRational& s, const RatPolynomial& a) {
  RatPolynomial r = a;
  for (auto& x : r.c) x *= s;
  r.trim();
  return r;
}

RatDivision divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  RatDivision d;
  d.remainder = a;
  int db = b.degree();
  if (a.degree() < db) return d;
  d.quotient.c.assign(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const BigRational& lb = b.leading();
  while (!d.remainder.is_zero() && d.remainder.degree() >= db) {
    int shift = d.remainder.degree() - db;
    BigRational f = d.remainder.leading() / lb;
    d.quotient.c[static_cast<std::size_t>(shift)] = f;
    for (int i = 0; i <= db; ++i) d.remainder.c[static_cast<std::size_t>(i + shift)] -= f * b.c[static_cast<std::size_t>(i)];
    d.remainder.trim();
  }
  d.quotient.trim();
  return d;
}

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a, y = b;
  while (!y.is_zero()) {
    RatPolynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

RatPolynomial derivative(const RatPolynomial& a) {
  RatPolynomial r;
  for (std::size_t i = 1; i < a.c.size(); ++i) r.c.push_back(a.c[i] * static_cast<long>(i));
  r.trim();
  return r;
}

IntPolynomial derivative(const IntPolynomial& a) {
  IntPolynomial r;
  for (std::size_t i = 1; i < a.c.size(); ++i) r.c.push_back(a.c[i] * static_cast<long>(i));
  r.trim();
  return r;
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  RatDivision d = divmod(a.to_rat(), b.to_rat());
  if (!d.remainder.is_zero()) throw InternalError("polynomial does not divide");
  std::vector<BigInt> q;
  for (const auto& x : d.quotient.c) q.push_back(to_integer(x));
  return IntPolynomial(std::move(q));
}

BigRational determinant(RatMatrix m) {
  const std::size_t n = m.size();
  BigRational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      BigRational f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

RatMatrix sylvester_matrix(const RatPolynomial& f, const RatPolynomial& g) {
  const int m = f.degree(), n = g.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  RatMatrix s(size, std::vector<BigRational>(size, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = f.c[static_cast<std::size_t>(m - j)];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = g.c[static_cast<std::size_t>(n - j)];
  return s;
}

BigRational resultant(const RatPolynomial& f, const RatPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  if (f.degree() == 0 && g.degree() == 0) return 1;
  return determinant(sylvester_matrix(f, g));
}

BigRational discriminant(const RatPolynomial& f) {
  const int n = f.degree();
  if (n < 1) throw InvalidInput("discriminant of constant polynomial");
  BigRational r = resultant(f, derivative(f)) / f.leading();
  if ((n * (n - 1) / 2) % 2) r = -r;
  return r;
}

bool is_squarefree(const RatPolynomial& f) {
  if (f.is_zero()) return false;
  return gcd(f, derivative(f)).degree() == 0;
}

namespace {
int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}
}  // namespace

int count_real_roots(const RatPolynomial& f) {
  if (f.degree() < 1) return 0;
  RatPolynomial g = divmod(f, gcd(f, derivative(f))).quotient;
  std::vector<RatPolynomial> seq{g, derivative(g)};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    RatPolynomial r = divmod(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back(BigRational(-1) * r);
  }
  std::vector<int> at_neg, at_pos;
  for (const auto& p : seq) {
    if (p.is_zero()) continue;
    int lead = sgn(p.leading());
    at_pos.push_back(lead);
    at_neg.push_back(p.degree() % 2 == 0 ? lead : -lead);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

}  // namespace syzygy
