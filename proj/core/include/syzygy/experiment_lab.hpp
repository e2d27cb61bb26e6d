#pragma once
// Exact correlation sums sum r_Q(F(x,y)) over scaled regions, their
// Eisenstein/cuspidal pieces, Hecke L1 sums and a few numeric constants.
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "syzygy/binary_forms.hpp"
#include "syzygy/class_group.hpp"
#include "syzygy/cyclotomic.hpp"
#include "syzygy/polynomial.hpp"

namespace syzygy {

// Axis-parallel rectangle [x0,x1] x [y0,y1].
struct Region {
  BigRational x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  BigRational area() const { return (x1 - x0) * (y1 - y0); }
};

struct ExperimentSpec {
  BinaryForm<BigInt> F;          // argument form, any degree >= 1
  std::optional<QuadForm> Q;     // representation-number form
  std::optional<BigInt> disc;    // discriminant when only characters are used
  std::optional<std::size_t> character;  // index into the class-group character table
  std::optional<IntPolynomial> P;        // single-variable argument for Hecke sums
  Region region;
  std::int64_t M = 1;
  std::int64_t alpha1 = 0, alpha2 = 0;
  std::vector<std::int64_t> grid;
  unsigned threads = 0;

  BigInt discriminant() const;
  // Throws InvalidInput on M < 1, unreduced alpha, empty region, bad grid.
  void validate() const;
  // Canonical one-line description, used as a cache key.
  std::string key() const;
};

// key = value text; '#' starts a comment.
// Keys: form, quad, disc, character, polynomial, region, modulus, residue, grid, grid_max, threads.
ExperimentSpec parse_experiment_config(const std::string& text);
// 2^5, 2^6, ... up to and including the largest power of two <= budget.
std::vector<std::int64_t> geometric_grid(std::int64_t budget, std::int64_t start = 32, std::int64_t ratio = 2);

// Terms with F(x,y) = 0 are skipped; negative values contribute through |F|.
inline constexpr const char* kSignConvention = "terms use |F(x,y)|, F(x,y) = 0 skipped";

BigInt correlation_sum(const ExperimentSpec& spec, std::int64_t X);
BigInt eisenstein_sum(const ExperimentSpec& spec, std::int64_t X, const BigInt& q1, const BigInt& q2);
Cyclotomic cuspidal_sum(const ExperimentSpec& spec, std::int64_t X, const ClassCharacter& psi);

struct RecombinationReport {
  std::int64_t X = 0;
  BigInt direct;
  BigRational eisenstein_part, cuspidal_part;
  bool holds = false;
};
// Needs spec.Q with fundamental discriminant.
RecombinationReport recombination_check(const ExperimentSpec& spec, std::int64_t X);

struct FitResult {
  double beta = 0, intercept = 0, rms = 0;
  std::vector<double> residuals;
};
// Least squares of log(value / X^power) against log log X.
FitResult fit_log_exponent(const std::vector<std::int64_t>& grid, const std::vector<double>& values, int power = 2);

struct SeriesResult {
  std::vector<std::int64_t> grid;
  std::vector<BigRational> exact;   // empty for series with irrational terms
  std::vector<double> values;
  std::vector<double> normalized;   // value / X^power
  int power = 2;
  std::optional<FitResult> fit;
  std::string convention = kSignConvention;

  std::string to_csv() const;
};

// Exact correlation sums on spec.grid; fitted when the grid has >= 5 positive values.
SeriesResult correlation_series(const ExperimentSpec& spec);

struct HeckeValue {
  double modulus = 0;        // |lambda|
  Cyclotomic norm_squared;   // |lambda|^2, exact
};
// lambda_Xi(n) = sum over ideals of norm n of xi; n >= 1, coprime to the conductor.
Cyclotomic hecke_lambda(const ClassGroupTable& t, const ClassCharacter& xi, const BigInt& n);
HeckeValue hecke_abs(const ClassGroupTable& t, const ClassCharacter& xi, const BigInt& n);

struct HeckeSum {
  std::int64_t X = 0;
  double l1 = 0;              // sum |lambda|
  Cyclotomic l2;              // sum |lambda|^2, exact
  std::int64_t zero_terms = 0;
};
// Partial sums over 1 <= n <= X of |lambda_Xi(|P(n)|)| at every grid point.
std::vector<HeckeSum> hecke_l1_series(const ClassGroupTable& t, const ClassCharacter& xi, const IntPolynomial& P,
                                      const std::vector<std::int64_t>& grid);
HeckeSum hecke_l1_sum(const ClassGroupTable& t, const ClassCharacter& xi, const IntPolynomial& P, std::int64_t X);
// Double-sum variant over 1 <= x, y <= X.
HeckeSum hecke_l1_sum(const ClassGroupTable& t, const ClassCharacter& xi, const BinaryForm<BigInt>& P, std::int64_t X,
                      unsigned threads = 0);
SeriesResult hecke_series(const ClassGroupTable& t, const ClassCharacter& xi, const IntPolynomial& P,
                          const std::vector<std::int64_t>& grid);

// X * exp(sum_{p <= X} rho(p) (f(p) - 1) / p), rho(p) = roots of P mod p.
double nair_rhs(const IntPolynomial& P, const std::function<double(std::int64_t)>& f, std::int64_t X);

struct DeltaResult {
  double value = 0, argmin = 0;
};
// inf over [-1, 2] of y^-2 (1 + y/2 - sqrt(1 + y)).
DeltaResult delta_inf();
double delta_integrand(double y);

struct DihedralValue {
  double value = 0;
  double error_bound = 0;
  std::optional<BigRational> exact;  // when every cosine is rational
};
// (1/2n) sum_{a<n} 2 |cos(2 pi a / n)|.
DihedralValue dihedral_g(std::int64_t n);

struct DihedralReport {
  std::int64_t N = 0;
  double sup = 0;
  std::int64_t argmax = 0;
  double bound = 0.8;
  bool within_bound = false;
  double limit_gap = 0;  // |g(N) - 2/pi|
  double even_sup = 0;   // max over even n of 1/n + g(n), informational
  std::int64_t even_argmax = 0;
};
DihedralReport dihedral_sup_check(std::int64_t N);

}  // namespace syzygy
