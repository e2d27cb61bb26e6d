#pragma once
// SL2(Z)-classes of integral binary quartics with prescribed invariants.
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/binary_forms.hpp"

namespace syzygy {

// Admissible residues of a quartic. The modulus is a product of local moduli
// p^k, one per relevant prime; a pair is admissible iff it is admissible at
// every local component.
class ResidueSet {
 public:
  struct Local {
    BigInt prime;
    unsigned exponent = 1;  // local modulus is prime^exponent
    std::int64_t modulus = 1;
    // Row-major bitmap over (m1 mod modulus, m2 mod modulus) when enumerated explicitly.
    std::vector<bool> table;
    bool explicit_table = false;
    std::int64_t count = 0;  // number of admissible residue pairs
    std::int64_t primitive_count = 0;  // those not congruent to (0,0) mod prime
  };

  ResidueSet() = default;
  ResidueSet(QuarticForm form, std::vector<Local> locals);

  BigInt modulus() const;
  const std::vector<Local>& locals() const { return locals_; }
  BigInt size() const;
  bool empty() const { return size() == 0; }
  // Some admissible residue is compatible with gcd(m1, m2) = 1.
  bool has_primitive() const;
  bool contains(const BigInt& m1, const BigInt& m2) const;
  bool contains(std::int64_t m1, std::int64_t m2) const;
  // All residues mod modulus() (CRT-combined, sorted); throws if more than `limit`.
  std::vector<std::pair<BigInt, BigInt>> enumerate(std::size_t limit = 1u << 20) const;

 private:
  QuarticForm form_;
  std::vector<Local> locals_;
};

// Local admissibility of m at p: F(m), H(m), T(m)/2 are p-integral and
// (F(m), H(m)) is not (0,0) mod p.
bool admissible_at(const QuarticForm& f, const BigInt& p, const BigInt& m1, const BigInt& m2);
// Primes at which admissibility is a nontrivial condition.
std::vector<BigInt> admissibility_primes(const QuarticForm& f);
ResidueSet admissible_residues(const QuarticForm& f);
bool is_admissible_pair(const QuarticForm& f, const BigInt& m1, const BigInt& m2);
bool is_admissible_pair(const QuarticForm& f, const ResidueSet& r, const BigInt& m1, const BigInt& m2);

enum class Definiteness { PositiveDefinite, NegativeDefinite, Indefinite };
Definiteness definiteness(const QuarticForm& f);

struct CompletenessEvidence {
  BigInt coeff_bound;
  int search_depth = 0;
  std::uint64_t raw_forms = 0;       // forms in the coefficient box with the target invariants
  std::uint64_t merged_by_search = 0;  // components joined by the pairwise equivalence pass
  bool possibly_incomplete = true;   // always true: no certified reduction theory
  std::string note;
};

struct QuarticClass {
  QuarticForm form;
  std::vector<UnimodularMatrix> automorphisms;
  // Has an admissible residue and takes positive values, so it can contribute
  // integral points through the parameterization.
  bool effective = false;
  std::size_t aut_order() const { return automorphisms.size(); }
};

// Coefficient lattice searched. Mordell: p1, p3 divisible by 4 and p2 by 6
// (integral a, b, c, d, e in a x^4 + 4b x^3y + 6c x^2y^2 + 4d xy^3 + e y^4).
// Integral: every p_i an integer. Auto picks Mordell for integral invariants.
enum class FormLattice { Auto, Mordell, Integral };
FormLattice resolve_lattice(FormLattice requested, const BigRational& I, const BigRational& J);
std::string lattice_name(FormLattice l);
FormLattice parse_lattice(const std::string& name);
bool in_lattice(const QuarticForm& f, FormLattice l);

struct ClassSet {
  BigRational I, J;
  BigInt search_bound;
  FormLattice lattice = FormLattice::Integral;
  std::vector<QuarticClass> classes;
  CompletenessEvidence evidence;

  std::vector<QuarticForm> representatives() const;
  std::size_t size() const { return classes.size(); }
  std::size_t effective_count() const;
};

struct ClassSearchOptions {
  int depth = 12;        // equivalence-search word length
  unsigned threads = 0;  // 0 = hardware concurrency
  FormLattice lattice = FormLattice::Auto;
};

ClassSet enumerate_classes(const BigRational& I, const BigRational& J, const BigInt& coeff_bound,
                           const ClassSearchOptions& options = {});
// Witness M with sl2_act(M, f) == g, if found.
std::optional<UnimodularMatrix> are_equivalent(const QuarticForm& f, const QuarticForm& g, int depth = 12);
std::vector<UnimodularMatrix> automorphism_group(const QuarticForm& f, int depth = 12);

struct Reduction {
  QuarticForm form;
  UnimodularMatrix witness;  // sl2_act(witness, input) == form
};
// Greedy height descent followed by a canonical choice among nearby minima.
Reduction reduce_quartic(const QuarticForm& f);

std::string serialize_class_set(const ClassSet& s);
// Throws CacheCorruption on malformed input.
ClassSet parse_class_set(const std::string& text);

}  // namespace syzygy
