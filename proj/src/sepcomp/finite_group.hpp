#pragma once

#include <memory>
#include <vector>

#include "sepcomp/errors.hpp"

namespace sepcomp {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group given by its Cayley table. Elements are the indices
/// 0..order-1; op(i, j) is table[i*order + j]. Construction validates
/// associativity, a two-sided identity and inverses, so a FiniteGroup
/// value is always an actual group. Immutable after construction.
class FiniteGroup {
 public:
  int order() const { return order_; }
  int identity() const { return identity_; }
  int op(int a, int b) const { return table_[a * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }

  int element_order(int a) const;

  // Greedy generating set, computed once at construction: scan elements in
  // index order, keep those outside the subgroup generated so far. Empty for
  // the trivial group.
  const std::vector<int>& generating_set() const { return generators_; }

  bool same_table(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  friend GroupPtr make_cyclic(int n);
  friend GroupPtr make_from_table(const std::vector<std::vector<int>>& table);

  FiniteGroup() = default;
  void init_validated();  // fills identity/inverse/generators, validates
  void compute_generators();

  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;    // flattened order x order
  std::vector<int> inverse_;
  std::vector<int> generators_;
};

// Two group handles are compatible if they are the same object or carry the
// same Cayley table. Codes and workspaces may build their own Z_p instances,
// so structural equality matters.
inline bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a && b && a->same_table(*b));
}

GroupPtr make_cyclic(int n);
GroupPtr make_from_table(const std::vector<std::vector<int>>& table);

/// A verified homomorphism between finite groups, stored as the full image
/// vector: image[i] is where element i of the source goes.
struct GroupMorphism {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> image;
  bool is_endo = false;
  bool is_epi = false;
  bool is_auto = false;

  int operator()(int a) const { return image[a]; }
};

GroupMorphism identity_morphism(const GroupPtr& g);

// Validates the homomorphism law over all pairs before returning.
GroupMorphism morphism_from_image(GroupPtr source, GroupPtr target,
                                  std::vector<int> image);

// All endomorphisms of g, sorted lexicographically by image vector, with
// is_epi / is_auto flags filled in.
std::vector<GroupMorphism> endomorphisms(const GroupPtr& g);

// The automorphisms among them, same ordering.
std::vector<GroupMorphism> automorphism_group(const GroupPtr& g);

// (a o b)(x) = a(b(x)). Requires b.target compatible with a.source.
GroupMorphism compose(const GroupMorphism& a, const GroupMorphism& b);

// Requires a bijective image.
GroupMorphism invert(const GroupMorphism& a);

}  // namespace sepcomp
