#include "syzygy/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "syzygy/error.hpp"

namespace syzygy {

IntPolynomial cyclotomic_polynomial(int n) {
  if (n < 1) throw InvalidInput("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, IntPolynomial> memo;
  {
    std::lock_guard lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  std::vector<BigInt> xn(static_cast<std::size_t>(n + 1), 0);
  xn[0] = -1;
  xn[static_cast<std::size_t>(n)] = 1;
  IntPolynomial p(xn);
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = exact_divide(p, cyclotomic_polynomial(d));
  std::lock_guard lock(mu);
  memo.emplace(n, p);
  return p;
}

Cyclotomic::Cyclotomic(int order) : n_(order), c_(static_cast<std::size_t>(order), 0) {
  if (order < 1) throw InvalidInput("cyclotomic order must be positive");
}

Cyclotomic Cyclotomic::root(int order, long angle) {
  Cyclotomic z(order);
  z.add_root(angle, 1);
  return z;
}

void Cyclotomic::add_root(long angle, const BigRational& coeff) {
  long k = ((angle % n_) + n_) % n_;
  c_[static_cast<std::size_t>(k)] += coeff;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (o.n_ != n_) throw InvalidInput("cyclotomic order mismatch");
  Cyclotomic r = *this;
  for (int k = 0; k < n_; ++k) r.c_[static_cast<std::size_t>(k)] += o.c_[static_cast<std::size_t>(k)];
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + o.scaled(-1); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (o.n_ != n_) throw InvalidInput("cyclotomic order mismatch");
  Cyclotomic r(n_);
  for (int i = 0; i < n_; ++i) {
    if (c_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (o.c_[static_cast<std::size_t>(j)] == 0) continue;
      r.c_[static_cast<std::size_t>((i + j) % n_)] += c_[static_cast<std::size_t>(i)] * o.c_[static_cast<std::size_t>(j)];
    }
  }
  return r;
}

Cyclotomic Cyclotomic::scaled(const BigRational& s) const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic r(n_);
  for (int k = 0; k < n_; ++k) r.c_[static_cast<std::size_t>((n_ - k) % n_)] = c_[static_cast<std::size_t>(k)];
  return r;
}

std::vector<BigRational> Cyclotomic::canonical() const {
  RatPolynomial p(c_);
  RatPolynomial rem = divmod(p, cyclotomic_polynomial(n_).to_rat()).remainder;
  return rem.c;
}

bool Cyclotomic::is_zero() const { return canonical().empty(); }

bool Cyclotomic::is_rational() const { return canonical().size() <= 1; }

BigRational Cyclotomic::rational_value() const {
  auto c = canonical();
  if (c.size() > 1) throw InternalError("cyclotomic value is not rational");
  return c.empty() ? BigRational(0) : c[0];
}

double Cyclotomic::real_approx() const {
  double s = 0;
  for (int k = 0; k < n_; ++k) s += c_[static_cast<std::size_t>(k)].get_d() * std::cos(2 * std::numbers::pi * k / n_);
  return s;
}

double Cyclotomic::imag_approx() const {
  double s = 0;
  for (int k = 0; k < n_; ++k) s += c_[static_cast<std::size_t>(k)].get_d() * std::sin(2 * std::numbers::pi * k / n_);
  return s;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const { return (*this - o).is_zero(); }

}  // namespace syzygy
