#pragma once
// Class groups of positive-definite binary quadratic forms, their characters,
// representation numbers and the Eisenstein/cuspidal split of r_Q(n).
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "syzygy/binary_forms.hpp"
#include "syzygy/cyclotomic.hpp"

namespace syzygy {

// Character of the class group: value on class k is exp(2 pi i angle[k] / modulus).
struct ClassCharacter {
  int modulus = 1;
  std::vector<int> angle;
  int order = 1;
  bool is_real() const { return order <= 2; }
  Cyclotomic value(std::size_t cls) const { return Cyclotomic::root(modulus, angle[cls]); }
};

struct GenusPair {
  BigInt q1, q2;
  bool operator==(const GenusPair&) const = default;
};

class ClassGroupTable {
 public:
  static ClassGroupTable build(const BigInt& disc);

  std::int64_t discriminant() const { return disc_; }
  std::size_t order() const { return forms_.size(); }
  const std::vector<QuadForm>& forms() const { return forms_; }
  std::size_t identity() const { return 0; }
  std::size_t compose(std::size_t i, std::size_t j) const { return table_[i * order() + j]; }
  std::size_t inverse(std::size_t i) const;
  std::size_t power(std::size_t i, long e) const;
  std::size_t element_order(std::size_t i) const;
  int exponent() const { return exponent_; }
  int units() const { return units_; }
  // Class of a primitive form of this discriminant (reduced first).
  std::size_t index_of(const QuadForm& f) const;
  const std::vector<ClassCharacter>& characters() const { return characters_; }
  // Class of a prime ideal above a split or ramified prime p (form (p, b_p, .)).
  std::size_t prime_class(const BigInt& p) const;
  // Number of ideals of norm n in each class; n coprime to the conductor.
  std::vector<std::int64_t> ideal_class_counts(const BigInt& n) const;
  BigInt conductor() const { return conductor_; }
  bool fundamental() const { return conductor_ == 1; }
  std::string to_json() const;

 private:
  std::int64_t disc_ = 0;
  BigInt conductor_ = 1;
  int units_ = 2;
  int exponent_ = 1;
  std::vector<QuadForm> forms_;
  std::map<std::array<std::int64_t, 3>, std::size_t> index_;
  std::vector<std::size_t> table_;
  std::vector<ClassCharacter> characters_;
};

// Gauss reduction of a positive-definite form.
QuadForm reduce(const QuadForm& f);
bool is_reduced(const QuadForm& f);
// Dirichlet composition of primitive forms of equal discriminant (result reduced).
QuadForm compose(const QuadForm& f, const QuadForm& g);
ClassGroupTable class_group(const BigInt& disc);

std::int64_t r_Q_lattice(const QuadForm& q, std::int64_t n);
// r_Q(n) for all 0 <= n <= limit.
std::vector<std::int64_t> r_Q_table(const QuadForm& q, std::int64_t limit);
std::int64_t r_Q_ideal(const QuadForm& q, const BigInt& n);
std::int64_t r_Q_ideal(const ClassGroupTable& t, std::size_t cls, const BigInt& n);

// Prime discriminants whose product is the fundamental discriminant disc.
std::vector<BigInt> prime_discriminants(const BigInt& disc);
// All ordered coprime discriminant splits q1*q2 = disc, including (1, disc) and (disc, 1).
std::vector<GenusPair> genus_pairs(const BigInt& disc);
// One pair per genus character (q1 > 0).
std::vector<GenusPair> canonical_genus_pairs(const BigInt& disc);
int genus_character_value(const GenusPair& pair, const QuadForm& cls);
int genus_character_value(const GenusPair& pair, const ClassGroupTable& t, std::size_t cls);

// epsilon_{q1,q2}(n) = sum_{d | n} chi_q1(d) chi_q2(n/d)
BigInt eisenstein_epsilon(const BigInt& q1, const BigInt& q2, const BigInt& n);
bool eisenstein_multiplicativity_check(const BigInt& q1, const BigInt& q2, const BigInt& n, const BigInt& m);

// lambda_E via the genus divisor sum.
BigRational eisenstein_coeff(const ClassGroupTable& t, std::size_t cls, const BigInt& n);
// lambda_E via characters of order <= 2.
BigRational eisenstein_coeff_characters(const ClassGroupTable& t, std::size_t cls, const BigInt& n);
BigRational cuspidal_coeff(const ClassGroupTable& t, std::size_t cls, const BigInt& n);
BigRational eisenstein_coeff(const QuadForm& q, const BigInt& n);
BigRational cuspidal_coeff(const QuadForm& q, const BigInt& n);
// Sum over ideals of norm n of psi(a), exactly.
Cyclotomic character_ideal_sum(const ClassGroupTable& t, const ClassCharacter& psi, const BigInt& n);

}  // namespace syzygy
