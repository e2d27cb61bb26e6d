#pragma once
// Integral points on y^2 = x^3 + A x Q(u,v)^2 + B Q(u,v)^3, counted directly
// and through the covariant parameterization by binary quartics.
#include <optional>
#include <string>
#include <vector>

#include "syzygy/binary_forms.hpp"
#include "syzygy/quartic_classes.hpp"

namespace syzygy {

struct SurfaceSpec {
  BigRational A, B;
  QuadForm Q;

  // Throws InvalidInput on a singular curve or a non-definite Q.
  void validate() const;
  BigRational target_I() const { return -4 * A; }
  BigRational target_J() const { return -4 * B; }
  std::string to_string() const;
};

struct Provenance {
  std::size_t class_index = 0;
  BigInt m1, m2;
};

struct IntegralPoint {
  BigInt x, y, u, v, n;
  std::optional<Provenance> provenance;

  bool operator<(const IntegralPoint& o) const;
  bool same_point(const IntegralPoint& o) const;
};

// Curve equation, y != 0, n = Q(u,v) >= 1 and gcd(x, n) = 1.
bool on_surface(const SurfaceSpec& s, const IntegralPoint& p);

struct DukeImage {
  BigInt x, y, n;
};
// (-H_F(m), T_F(m)/2, F(m)); throws InvalidInput for inadmissible m,
// non-positive F(m) or a non-integral image.
DukeImage duke_map(const QuarticForm& f, const BigInt& m1, const BigInt& m2);

struct CountOptions {
  unsigned threads = 0;
  bool collect_points = true;
};

struct CountResult {
  BigInt N;
  std::vector<IntegralPoint> points;  // sorted; empty unless collected
  std::string method;
};

// Radius of a disc containing every real m with max(|F(m)|, |H_F(m)|) <= bound.
std::int64_t region_radius(const QuarticForm& f, const BigRational& bound);

// Weighted count of (class, m) with F(m) = n under the height bound T.
BigInt v_count(const SurfaceSpec& s, const ClassSet& classes, const BigInt& n, const BigInt& T);

CountResult count_points_syzygy(const SurfaceSpec& s, const ClassSet& classes, const BigInt& T,
                                const CountOptions& options = {});
CountResult count_points_bruteforce(const SurfaceSpec& s, const BigInt& T, const CountOptions& options = {});

std::string points_to_csv(const std::vector<IntegralPoint>& points);
// elapsed time is included only when given, so untimed output is reproducible.
std::string count_to_json(const SurfaceSpec& s, const BigInt& T, const CountResult& r,
                          std::optional<double> elapsed_seconds = std::nullopt);

}  // namespace syzygy
