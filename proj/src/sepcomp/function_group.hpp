#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sepcomp/finite_group.hpp"
#include "sepcomp/subsets.hpp"

namespace sepcomp {

// An element of G^X: values[x] is the group element index at point x.
using PointMap = std::vector<int>;

Mask zero_mask(const PointMap& f, int identity);
Mask cozero_mask(const PointMap& f, int identity);
std::string point_map_to_string(const PointMap& f);

struct GenerateOptions {
  std::size_t max_elements = 1'000'000;
  std::size_t lattice_bound = std::size_t{1} << 20;
  // Bounds on the normality certificate (blocks, pairs per block).
  // 0 means |X|, which always suffices for the decision below.
  int normal_block_bound = 0;
  int normal_pair_bound = 0;
};

struct ControllabilityWitness {
  int f = -1;   // element index
  Mask d1 = 0;
  Mask d2 = 0;
};

struct ControllabilityResult {
  bool controllable = true;
  std::optional<ControllabilityWitness> violation;
};

struct NormalityResult {
  bool normal = true;
  std::optional<std::pair<Mask, Mask>> violation;  // the (D1, D2) that fails
};

// One pair of the normality certificate: p = f^{-1}(f1), q = f^{-1}(f2) for
// disjoint value sets f1, f2 of G.
struct NormalCertPair {
  int f = -1;
  Mask p = 0;
  Mask q = 0;
  std::vector<int> f1;
  std::vector<int> f2;
};

using NormalCertificate = std::vector<std::vector<NormalCertPair>>;

class FunctionGroup;
using FunctionGroupPtr = std::shared_ptr<const FunctionGroup>;

/// A finite subgroup of G^X, stored as the full list of elements in
/// generation order (identity first, then breadth-first products of the
/// generators). Immutable once built; the hypothesis predicates and lattices
/// are computed on first use and cached.
class FunctionGroup {
 public:
  const GroupPtr& group() const { return group_; }
  int domain_size() const { return domain_size_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const PointMap& element(int i) const { return elements_[i]; }
  const std::vector<PointMap>& elements() const { return elements_; }
  int identity_index() const { return 0; }
  Mask universe_mask() const { return full_mask(domain_size_); }
  const GenerateOptions& options() const { return options_; }

  // -1 when the map is not an element.
  int index_of(const PointMap& f) const;
  int product(int i, int j) const;  // index of pointwise product
  int inverse(int i) const;

  Mask zero_mask(int i) const { return zero_masks_[i]; }
  Mask cozero_mask(int i) const { return universe_mask() & ~zero_masks_[i]; }

  const std::vector<int>& generator_indices() const { return generator_indices_; }
  // (parent element, generator position) with elements_[i] =
  // elements_[parent] * gen; (-1,-1) for the identity.
  std::pair<int, int> parent(int i) const { return parents_[i]; }

  // The bounded subgroup: every map into a finite discrete group is bounded,
  // so A* is A itself. Kept explicit so hypothesis statements can refer to it.
  const FunctionGroup& bounded_subgroup() const { return *this; }

  // --- hypothesis predicates -------------------------------------------

  bool is_faithful() const;
  bool separates_points() const;
  bool is_function_group() const { return is_faithful() && separates_points(); }
  bool is_pointwise_dense() const;

  // Sorted list of group elements attained at x, i.e. delta_x(A). Always a
  // subgroup of G.
  std::vector<int> evaluation_image(int x) const;

  const SetFamily& d_lattice() const;
  const SetFamily& e_lattice() const;

  const ControllabilityResult& controllability() const;
  const NormalityResult& normality() const;

  // Positions A cannot tell apart from x (always includes x itself).
  Mask inseparable_class(int x) const;

 private:
  friend FunctionGroupPtr closure_generate(GroupPtr group, int domain_size,
                                           std::vector<PointMap> generators,
                                           const GenerateOptions& options);

  FunctionGroup() = default;
  void build_lattices() const;
  void decide_controllability() const;
  void decide_normality() const;

  GroupPtr group_;
  int domain_size_ = 0;
  GenerateOptions options_;
  std::vector<PointMap> elements_;
  std::vector<Mask> zero_masks_;
  std::vector<int> generator_indices_;
  std::vector<std::pair<int, int>> parents_;
  std::unordered_map<std::uint64_t, int> packed_index_;  // when keys fit
  bool packed_ = false;
  int pack_bits_ = 0;
  std::vector<std::pair<PointMap, int>> sorted_index_;   // fallback

  std::uint64_t pack(const PointMap& f) const;

  mutable std::atomic<int> faithful_{-1};
  mutable std::atomic<int> separates_{-1};
  mutable std::atomic<int> dense_{-1};
  mutable std::once_flag lattice_once_;
  mutable SetFamily d_lattice_;
  mutable SetFamily e_lattice_;
  mutable std::once_flag controllable_once_;
  mutable ControllabilityResult controllability_;
  mutable std::once_flag normal_once_;
  mutable NormalityResult normality_;
};

// Closure of the generators under pointwise product. Throws Errc::too_large
// when the closure exceeds options.max_elements.
FunctionGroupPtr closure_generate(GroupPtr group, int domain_size,
                                  std::vector<PointMap> generators,
                                  const GenerateOptions& options = {});

// All of G^X, generated point by point so element order is reproducible.
FunctionGroupPtr full_function_group(GroupPtr group, int domain_size,
                                     const GenerateOptions& options = {});

inline bool is_faithful(const FunctionGroup& a) { return a.is_faithful(); }
inline bool separates_points(const FunctionGroup& a) { return a.separates_points(); }
inline bool is_function_group(const FunctionGroup& a) { return a.is_function_group(); }
inline bool is_pointwise_dense(const FunctionGroup& a) { return a.is_pointwise_dense(); }
inline bool is_controllable(const FunctionGroup& a) { return a.controllability().controllable; }
inline bool is_normal(const FunctionGroup& a) { return a.normality().normal; }

// Certificate for one disjoint pair of the normality condition, or nullopt
// when the pair cannot be covered. Throws Errc::search_bound_exceeded when a
// certificate exists but not within the configured bounds.
std::optional<NormalCertificate> normal_certificate(const FunctionGroup& a,
                                                    Mask d1, Mask d2);

struct OmegaExtensionCertificate {
  bool domain_finite = false;
  bool all_bounded = false;          // every element has finite range
  bool closed_under_products = false;  // re-verified pairwise
  bool equals_original = false;      // the extension adds nothing
};

struct OmegaExtensionResult {
  FunctionGroupPtr group;
  OmegaExtensionCertificate certificate;
};

// On a finite domain a locally finite family has finitely many nonempty
// cozero sets, so the largest omega-extension of A* collapses to A itself.
// Returns A with the hypothesis re-verified rather than assumed.
OmegaExtensionResult omega_extension_closure(const FunctionGroupPtr& a);

}  // namespace sepcomp
