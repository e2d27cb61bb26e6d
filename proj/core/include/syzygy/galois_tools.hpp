#pragma once
// Factorization over Z in low degree, Galois groups of quartics, quadratic
// subfields of splitting fields and the classifiers built on them.
#include <string>
#include <vector>

#include "syzygy/binary_forms.hpp"
#include "syzygy/class_group.hpp"
#include "syzygy/polynomial.hpp"
#include "syzygy/quartic_classes.hpp"

namespace syzygy {

struct PolyFactorization {
  BigInt content;                     // sign and content of the input
  std::vector<IntPolynomial> factors;  // primitive, positive leading coefficient, repeated by multiplicity
};

constexpr int kMaxFactorDegree = 6;

// Complete factorization of a nonzero polynomial of degree <= 6.
PolyFactorization factor_over_Z(const IntPolynomial& p);
// Degrees of the irreducible factors of p mod a prime (p squarefree mod prime).
std::vector<int> degree_pattern_mod(const IntPolynomial& p, std::int64_t prime);
bool is_irreducible(const IntPolynomial& p);

enum class GaloisTag { C1, C2, C3, S3, V4, C4, D4, A4, S4, Product };
std::string galois_tag_name(GaloisTag t);
int galois_group_order(GaloisTag t);

// Tag of an irreducible quartic; throws InvalidInput on reducible input.
GaloisTag quartic_galois_group(const IntPolynomial& p);
// Resolvent cubic x^3 - c x^2 + (bd - 4e) x - (b^2 e - 4ce + d^2) of the monic
// associate x^4 + b x^3 + c x^2 + d x + e.
IntPolynomial resolvent_cubic(const IntPolynomial& p);

// A quadratic subfield Q(sqrt(radicand)) with its origin in terms of the roots.
struct SubfieldCertificate {
  BigInt discriminant;  // fundamental
  BigRational radicand;
  std::string origin;
  // radicand / discriminant is a rational square
  bool check() const;
};

struct SplittingFieldProfile {
  GaloisTag tag = GaloisTag::C1;
  // Upper bound for [K:Q] (exact for irreducible inputs; a product bound otherwise).
  BigInt degree_bound = 1;
  std::vector<BigInt> quadratic_subfields;  // sorted fundamental discriminants
  std::vector<SubfieldCertificate> certificates;
  std::vector<IntPolynomial> factors;
  bool contains(const BigInt& disc) const;
};

SplittingFieldProfile splitting_field_profile(const IntPolynomial& p);
SplittingFieldProfile splitting_field_profile(const QuarticForm& f);
std::vector<BigInt> quadratic_subfields(const IntPolynomial& p);
std::vector<BigInt> quadratic_subfields(const QuarticForm& f);

// Number of irreducible factors F_i of F whose splitting field contains K_Q.
int beta_exponent(const QuarticForm& f, const QuadForm& q);

struct DisassociationEntry {
  QuarticForm form;
  std::vector<BigInt> subfields;
  int beta = 0;
  bool effective = false;
};
struct DisassociationReport {
  BigInt field_discriminant;  // of K_Q
  bool disassociated = true;
  int beta_max = 0;
  std::vector<DisassociationEntry> entries;
};
DisassociationReport is_disassociated(const BigRational& A, const BigRational& B, const QuadForm& q,
                                      const ClassSet& classes);

struct PicardReport {
  int rank = 3;
  std::vector<int> sextic_pattern;  // factor degrees of the norm sextic (empty when B = 0)
  std::string cubic_factorization;  // over Q of w^3 - A w + B
  int rank_by_substitution = 3;
};
PicardReport picard_analysis(const BigRational& A, const BigRational& B, const QuadForm& q);
int picard_rank(const BigRational& A, const BigRational& B, const QuadForm& q);

std::vector<BigInt> genus_field(const BigInt& disc);

enum class CuspidalityVerdict { SavingsConditionMet, NoncuspidalConditionMet, Undecided };
std::string verdict_name(CuspidalityVerdict v);
struct CuspidalityCheck {
  CuspidalityVerdict verdict = CuspidalityVerdict::Undecided;
  std::string reason;
};
// Class group character xi of Q(sqrt(disc)) against a splitting field K,
// decided at genus-field precision.
CuspidalityCheck genus_cuspidality_check(const ClassGroupTable& table, const ClassCharacter& xi,
                                         const SplittingFieldProfile& k);

// #{a mod p : P(a) = 0 mod p}
std::int64_t local_root_count(const IntPolynomial& p, std::int64_t prime);
// #{(a,b) mod p : F(a,b) = 0 mod p}
std::int64_t local_root_count(const QuarticForm& f, std::int64_t prime);

}  // namespace syzygy
