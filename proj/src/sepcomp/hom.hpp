#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sepcomp/function_group.hpp"

namespace sepcomp {

class GroupHom;

struct PairWitness {
  int f = -1;
  int g = -1;
};

struct PredicateResult {
  bool holds = true;
  std::optional<PairWitness> witness;  // first violating pair, scan order
};

/// A verified homomorphism phi: A -> G, stored as the full value table
/// image[i] = phi(element i).
class PointHom {
 public:
  const FunctionGroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  const std::vector<int>& image() const { return image_; }
  int operator()(int i) const { return image_[i]; }

  bool is_null() const;

  // Validates the homomorphism law over all pairs.
  static PointHom checked(FunctionGroupPtr source, GroupPtr target,
                          std::vector<int> image);

 private:
  friend PointHom evaluation_hom(const FunctionGroupPtr& a, int x);
  friend PointHom evaluation_after(const GroupHom& h, int y);
  friend class GroupHom;

  PointHom(FunctionGroupPtr source, GroupPtr target, std::vector<int> image)
      : source_(std::move(source)),
        target_(std::move(target)),
        image_(std::move(image)) {}

  FunctionGroupPtr source_;
  GroupPtr target_;
  std::vector<int> image_;
};

// delta_x: f -> f(x).
PointHom evaluation_hom(const FunctionGroupPtr& a, int x);

// alpha o phi for a total morphism alpha on phi's target.
PointHom morph_after(const GroupMorphism& alpha, const PointHom& phi);

PredicateResult is_separating(const PointHom& phi);
PredicateResult is_weakly_separating(const PointHom& phi);
PredicateResult is_non_vanishing(const PointHom& phi);

// S is a support for phi when every f vanishing on S has phi(f) = e.
bool is_support(const PointHom& phi, Mask s);

struct SupportReport {
  std::vector<Mask> minimal_supports;  // (size, value) order
  std::optional<Mask> minimum;  // meet of the minimal supports, when it is
                                // itself a support
  bool is_singleton = false;
};

// Enumerates subsets of X in size-then-value order. Throws
// Errc::null_homomorphism for the null map, whose every subset is a support.
SupportReport minimal_supports(const PointHom& phi);

enum class HomOrigin { generator_images, explicit_table };

/// A verified homomorphism H: A -> B between function groups, stored as the
/// full element table. Construction checks the homomorphism law over all
/// pairs of A.
class GroupHom {
 public:
  const FunctionGroupPtr& source() const { return source_; }
  const FunctionGroupPtr& target() const { return target_; }
  const std::vector<int>& image() const { return image_; }
  int operator()(int i) const { return image_[i]; }
  HomOrigin origin() const { return origin_; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  static GroupHom from_table(FunctionGroupPtr source, FunctionGroupPtr target,
                             std::vector<int> image);

  // Pairs are (element of A, element of B) given as point maps; they must
  // include every stored generator of A. Extra pairs are allowed and checked.
  static GroupHom from_generator_images(
      FunctionGroupPtr source, FunctionGroupPtr target,
      const std::vector<std::pair<PointMap, PointMap>>& pairs);

 private:
  GroupHom(FunctionGroupPtr source, FunctionGroupPtr target,
           std::vector<int> image, HomOrigin origin)
      : source_(std::move(source)),
        target_(std::move(target)),
        image_(std::move(image)),
        origin_(origin) {}

  static void verify(const FunctionGroup& a, const FunctionGroup& b,
                     const std::vector<int>& image);

  FunctionGroupPtr source_;
  FunctionGroupPtr target_;
  std::vector<int> image_;
  HomOrigin origin_;
};

GroupHom inverse_hom(const GroupHom& h);

// delta_y o H, trusted (composition of verified homomorphisms).
PointHom evaluation_after(const GroupHom& h, int y);

PredicateResult is_separating(const GroupHom& h);
PredicateResult is_weakly_separating(const GroupHom& h);

struct SupportMapResult {
  // h[y] = -1 marks a dropped point (delta_y o H null); those y are listed in
  // `dropped`, mirroring the shrink of Y to the faithful part of H(A).
  std::vector<int> h;
  std::vector<std::uint8_t> minimum_present;  // per y: a true minimum existed
  std::vector<int> dropped;
  bool onto = false;         // kept values cover all of X
  bool all_minimum = true;   // every kept y had a true minimum support
};

// h(y) = the unique singleton support of delta_y o H. When the support
// lattice has a minimum (controllable sources) this is the minimum support;
// without one, the unique singleton minimal support is used and flagged,
// since the weight stage verifies the representation exhaustively anyway.
// Throws Errc::not_weakly_separating, Errc::null_homomorphism (every point
// dropped) or Errc::non_singleton_support.
SupportMapResult support_map(const GroupHom& h);

/// A group homomorphism defined on a subgroup of G, as a sorted domain list
/// plus images.
struct PartialMorphism {
  std::vector<int> domain;
  std::vector<int> image;
  bool total = false;
  bool is_auto = false;  // meaningful when total

  int apply(int a) const;  // -1 when a is outside the domain
};

struct WeightedComposition {
  std::vector<int> h;               // -1 for dropped points
  std::vector<PartialMorphism> w;   // empty morphism for dropped points
  bool verified = false;
};

// Builds w[y] on G_{h(y)} = { f(h(y)) : f in A } from the defining identity
// w[y](f(h(y))) := Hf(y), verifying single-valuedness and the homomorphism
// law. Throws Errc::not_well_defined when h(y) is not a support.
WeightedComposition weight_map(const GroupHom& h_hom, const std::vector<int>& h);

// support_map then weight_map; `verified` is set by exhaustively checking
// Hf(y) = w[y](f(h(y))) over all f and y.
WeightedComposition represent(const GroupHom& h);

struct IsoRepresentation {
  WeightedComposition forward;   // for H, over Y
  WeightedComposition inverse;   // for H^{-1}, over X
  bool support_maps_mutually_inverse = false;
  bool weights_mutually_inverse = false;  // rho[h(y)] o w[y] = id_G
};

// Requires H bijective with both directions weakly separating and both
// weight families total (pointwise dense sources). All conclusions are
// re-verified, not assumed.
IsoRepresentation represent_iso(const GroupHom& h);

// The weighted composition operator Hf(y) = weights[y](f(sigma[y])) as a
// verified homomorphism into an explicit target. Every image must be an
// element of the target.
GroupHom weighted_hom_into(const FunctionGroupPtr& a, const FunctionGroupPtr& b,
                           const std::vector<int>& sigma,
                           const std::vector<GroupMorphism>& weights);

// Same operator with the target generated from the images of A's generators.
std::pair<FunctionGroupPtr, GroupHom> induced_weighted_hom(
    const FunctionGroupPtr& a, int codomain_size, const std::vector<int>& sigma,
    const std::vector<GroupMorphism>& weights,
    const GenerateOptions& options = {});

}  // namespace sepcomp
