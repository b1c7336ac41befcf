#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "sepcomp/hom.hpp"

namespace sepcomp {

class LinearCode;
using LinearCodePtr = std::shared_ptr<const LinearCode>;

/// A linear [n, k] code over the prime field Z_p, kept fully enumerated as a
/// function group over G = (Z_p, +). The stored basis is the reduced
/// row-echelon form of the input rows.
class LinearCode {
 public:
  int field() const { return p_; }
  int length() const { return n_; }
  int dimension() const { return k_; }
  const std::vector<std::vector<int>>& basis() const { return basis_; }
  const FunctionGroupPtr& as_function_group() const { return fgroup_; }

  int codewords() const { return fgroup_->size(); }
  const PointMap& codeword(int i) const { return fgroup_->element(i); }

 private:
  friend LinearCodePtr code_from_matrix(int p, int k, int n,
                                        std::vector<std::vector<int>> rows);

  LinearCode() = default;

  int p_ = 0, n_ = 0, k_ = 0;
  std::vector<std::vector<int>> basis_;
  FunctionGroupPtr fgroup_;
};

// Validates that p is prime (the additive automorphisms of Z_p are exactly
// the nonzero scalar multiplications, so weighted compositions coincide with
// monomial maps; prime powers would admit non-scalar additive automorphisms
// and a different equivalence notion), row-reduces, and requires rank k.
LinearCodePtr code_from_matrix(int p, int k, int n,
                               std::vector<std::vector<int>> rows);

// W[i] = number of codewords of Hamming weight i, length n+1.
std::vector<long long> weight_enumerator(const LinearCode& c);

/// sigma is a permutation of columns and lambda a vector of nonzero scalars;
/// the induced map sends codeword c to x -> lambda[x] * c(sigma[x]).
struct MonomialWitness {
  std::vector<int> sigma;
  std::vector<int> lambda;

  bool operator==(const MonomialWitness&) const = default;
};

PointMap apply_monomial(const MonomialWitness& w, const PointMap& c, int p);

// Full re-verification: the witness maps c1 bijectively onto c2.
bool monomial_maps_onto(const LinearCode& c1, const LinearCode& c2,
                        const MonomialWitness& w);

// Backtracking over column assignments with per-column scalars, pruned by
// weight-enumerator equality, per-column codeword-weight profiles and
// partial-restriction multiset consistency. Returns the least witness in
// column-major (sigma, lambda) dictionary order, or nullopt. Every returned
// witness is re-verified by full codeword mapping.
std::optional<MonomialWitness> monomial_equivalence(const LinearCode& c1,
                                                    const LinearCode& c2);

// All monomial self-equivalences, in the same dictionary order.
std::vector<MonomialWitness> code_automorphisms(const LinearCode& c);

struct CodeIsometryReport {
  WeightedComposition forward;
  WeightedComposition inverse;
  MonomialWitness witness;
};

// Runs the representation machinery on a weight-preserving bijective
// homomorphism between the codes' function groups and converts the result to
// a monomial witness (sigma = h, lambda[y] = w[y](1)), asserting the two
// agree codeword by codeword. Throws Errc::not_isometry when a weight
// changes, plus any propagated representation error.
CodeIsometryReport verify_isometry_is_monomial(const GroupHom& h,
                                               const LinearCode& c1,
                                               const LinearCode& c2);

}  // namespace sepcomp
