#include "sepcomp/function_group.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace sepcomp {

Mask zero_mask(const PointMap& f, int identity) {
  Mask m = 0;
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f[x] == identity) m |= Mask{1} << x;
  return m;
}

Mask cozero_mask(const PointMap& f, int identity) {
  return full_mask(static_cast<int>(f.size())) & ~zero_mask(f, identity);
}

std::string point_map_to_string(const PointMap& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(f[i]);
  }
  return s;
}

std::uint64_t FunctionGroup::pack(const PointMap& f) const {
  std::uint64_t key = 0;
  for (int x = 0; x < domain_size_; ++x)
    key |= static_cast<std::uint64_t>(f[x]) << (x * pack_bits_);
  return key;
}

int FunctionGroup::index_of(const PointMap& f) const {
  if (static_cast<int>(f.size()) != domain_size_) return -1;
  if (packed_) {
    auto it = packed_index_.find(pack(f));
    return it == packed_index_.end() ? -1 : it->second;
  }
  auto it = std::lower_bound(
      sorted_index_.begin(), sorted_index_.end(), f,
      [](const auto& entry, const PointMap& key) { return entry.first < key; });
  return it != sorted_index_.end() && it->first == f ? it->second : -1;
}

int FunctionGroup::product(int i, int j) const {
  const auto& g = *group_;
  const PointMap& a = elements_[i];
  const PointMap& b = elements_[j];
  if (packed_) {
    std::uint64_t key = 0;
    for (int x = 0; x < domain_size_; ++x)
      key |= static_cast<std::uint64_t>(g.op(a[x], b[x])) << (x * pack_bits_);
    auto it = packed_index_.find(key);
    return it == packed_index_.end() ? -1 : it->second;
  }
  PointMap prod(domain_size_);
  for (int x = 0; x < domain_size_; ++x) prod[x] = g.op(a[x], b[x]);
  return index_of(prod);
}

int FunctionGroup::inverse(int i) const {
  const auto& g = *group_;
  PointMap inv(domain_size_);
  for (int x = 0; x < domain_size_; ++x) inv[x] = g.inverse(elements_[i][x]);
  return index_of(inv);
}

FunctionGroupPtr closure_generate(GroupPtr group, int domain_size,
                                  std::vector<PointMap> generators,
                                  const GenerateOptions& options) {
  if (domain_size < 1)
    fail(Errc::invalid_argument, "domain must contain at least one point");
  if (domain_size > 31)
    fail(Errc::too_large, "domains beyond 31 points are unsupported");
  const int order = group->order();
  for (const auto& f : generators) {
    if (static_cast<int>(f.size()) != domain_size)
      fail(Errc::invalid_argument, "generator has wrong domain size");
    for (int v : f)
      if (v < 0 || v >= order)
        fail(Errc::invalid_argument, "generator value out of range");
  }

  auto fg = std::shared_ptr<FunctionGroup>(new FunctionGroup());
  fg->group_ = std::move(group);
  fg->domain_size_ = domain_size;
  fg->options_ = options;

  const auto& g = *fg->group_;
  int bits = 1;
  while ((1 << bits) < order) ++bits;
  fg->pack_bits_ = bits;
  fg->packed_ = static_cast<std::int64_t>(domain_size) * bits <= 64;

  auto& elements = fg->elements_;
  auto insert = [&](const PointMap& f, int parent, int gen_pos) -> bool {
    if (fg->index_of(f) >= 0) return false;
    if (elements.size() >= options.max_elements)
      fail(Errc::too_large,
           "closure exceeds the element bound of " +
               std::to_string(options.max_elements));
    const int idx = static_cast<int>(elements.size());
    elements.push_back(f);
    fg->parents_.emplace_back(parent, gen_pos);
    if (fg->packed_) {
      fg->packed_index_.emplace(fg->pack(f), idx);
    } else {
      auto it = std::lower_bound(
          fg->sorted_index_.begin(), fg->sorted_index_.end(), f,
          [](const auto& e, const PointMap& key) { return e.first < key; });
      fg->sorted_index_.insert(it, {f, idx});
    }
    return true;
  };

  insert(PointMap(domain_size, g.identity()), -1, -1);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t gpos = 0; gpos < generators.size(); ++gpos) {
      PointMap prod(domain_size);
      for (int x = 0; x < domain_size; ++x)
        prod[x] = g.op(elements[i][x], generators[gpos][x]);
      insert(prod, static_cast<int>(i), static_cast<int>(gpos));
    }
  }

  for (const auto& f : generators)
    fg->generator_indices_.push_back(fg->index_of(f));

  fg->zero_masks_.reserve(elements.size());
  for (const auto& f : elements)
    fg->zero_masks_.push_back(zero_mask(f, g.identity()));

  return fg;
}

FunctionGroupPtr full_function_group(GroupPtr group, int domain_size,
                                     const GenerateOptions& options) {
  std::vector<PointMap> gens;
  for (int x = 0; x < domain_size; ++x)
    for (int a : group->generating_set()) {
      PointMap f(domain_size, group->identity());
      f[x] = a;
      gens.push_back(std::move(f));
    }
  return closure_generate(std::move(group), domain_size, std::move(gens),
                          options);
}

bool FunctionGroup::is_faithful() const {
  int cached = faithful_.load(std::memory_order_relaxed);
  if (cached < 0) {
    Mask covered = 0;
    for (int i = 0; i < size(); ++i) covered |= cozero_mask(i);
    cached = covered == universe_mask() ? 1 : 0;
    faithful_.store(cached, std::memory_order_relaxed);
  }
  return cached == 1;
}

bool FunctionGroup::separates_points() const {
  int cached = separates_.load(std::memory_order_relaxed);
  if (cached < 0) {
    cached = 1;
    for (int x = 0; x < domain_size_ && cached == 1; ++x)
      if (inseparable_class(x) != (Mask{1} << x)) cached = 0;
    separates_.store(cached, std::memory_order_relaxed);
  }
  return cached == 1;
}

bool FunctionGroup::is_pointwise_dense() const {
  int cached = dense_.load(std::memory_order_relaxed);
  if (cached < 0) {
    cached = 1;
    for (int x = 0; x < domain_size_ && cached == 1; ++x)
      if (static_cast<int>(evaluation_image(x).size()) != group_->order())
        cached = 0;
    dense_.store(cached, std::memory_order_relaxed);
  }
  return cached == 1;
}

std::vector<int> FunctionGroup::evaluation_image(int x) const {
  std::vector<char> seen(group_->order(), 0);
  for (const auto& f : elements_) seen[f[x]] = 1;
  std::vector<int> out;
  for (int v = 0; v < group_->order(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

Mask FunctionGroup::inseparable_class(int x) const {
  Mask m = 0;
  for (int y = 0; y < domain_size_; ++y) {
    bool same = true;
    for (const auto& f : elements_)
      if (f[y] != f[x]) {
        same = false;
        break;
      }
    if (same) m |= Mask{1} << y;
  }
  return m;
}

namespace {

// Union/intersection closure of a seed family, bounded in size.
std::vector<Mask> lattice_closure(const std::set<Mask>& seed,
                                  std::size_t bound) {
  std::set<Mask> seen(seed);
  std::vector<Mask> fam(seed.begin(), seed.end());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (Mask candidate : {Mask(fam[i] | fam[j]), Mask(fam[i] & fam[j])}) {
        if (seen.insert(candidate).second) {
          if (seen.size() > bound)
            fail(Errc::too_large, "set lattice exceeds the configured bound");
          fam.push_back(candidate);
        }
      }
    }
  }
  std::sort(fam.begin(), fam.end(), mask_less);
  return fam;
}

}  // namespace

void FunctionGroup::build_lattices() const {
  const std::size_t bound = options_.lattice_bound;
  const int order = group_->order();

  // C(A): preimages f^{-1}(S) over S <= G. Distinct preimages are exactly the
  // unions of fibers of f, so enumerate those instead of all 2^|G| value sets.
  std::set<Mask> c_family;
  for (const auto& f : elements_) {
    std::vector<Mask> fibers(order, 0);
    for (std::size_t x = 0; x < f.size(); ++x)
      fibers[f[x]] |= Mask{1} << x;
    std::vector<Mask> nonempty;
    for (Mask m : fibers)
      if (m) nonempty.push_back(m);
    const int r = static_cast<int>(nonempty.size());
    for (Mask sub = 0; sub < (Mask{1} << r); ++sub) {
      Mask u = 0;
      for (int i = 0; i < r; ++i)
        if (sub & (Mask{1} << i)) u |= nonempty[i];
      c_family.insert(u);
      if (c_family.size() > bound)
        fail(Errc::too_large, "set lattice exceeds the configured bound");
    }
  }

  std::set<Mask> o_family;
  for (Mask m : c_family) o_family.insert(universe_mask() & ~m);

  d_lattice_.universe_size = domain_size_;
  d_lattice_.members = lattice_closure(c_family, bound);
  e_lattice_.universe_size = domain_size_;
  e_lattice_.members = lattice_closure(o_family, bound);

  // With G discrete every subset of G is closed, so the two closures coincide;
  // both are computed independently and compared.
  if (d_lattice_.members != e_lattice_.members)
    throw std::logic_error("D(A) and E(A) diverged on a discrete group");
}

const SetFamily& FunctionGroup::d_lattice() const {
  std::call_once(lattice_once_, [this] { build_lattices(); });
  return d_lattice_;
}

const SetFamily& FunctionGroup::e_lattice() const {
  std::call_once(lattice_once_, [this] { build_lattices(); });
  return e_lattice_;
}

void FunctionGroup::decide_controllability() const {
  const auto& d = d_lattice().members;
  const auto& e = e_lattice().members;
  const int m = size();

  for (int f = 0; f < m; ++f) {
    for (Mask d1 : d) {
      for (Mask d2 : d) {
        if (d1 & d2) continue;
        bool found = false;
        for (int fp = 0; fp < m && !found; ++fp) {
          // f' must agree with f on D1 and vanish on Z(f).
          if (!subset_of(zero_mask(f), zero_mask(fp))) continue;
          bool agrees = true;
          for (int x = 0; x < domain_size_ && agrees; ++x)
            if ((d1 >> x) & 1)
              agrees = elements_[fp][x] == elements_[f][x];
          if (!agrees) continue;
          const Mask need = d1 | cozero_mask(fp);
          for (Mask set_e : e) {
            if (subset_of(need, set_e) && (set_e & d2) == 0) {
              found = true;
              break;
            }
          }
        }
        if (!found) {
          controllability_.controllable = false;
          controllability_.violation = ControllabilityWitness{f, d1, d2};
          return;
        }
      }
    }
  }
  controllability_.controllable = true;
}

const ControllabilityResult& FunctionGroup::controllability() const {
  std::call_once(controllable_once_, [this] { decide_controllability(); });
  return controllability_;
}

void FunctionGroup::decide_normality() const {
  // A disjoint pair (D1, D2) admits the required covering families exactly
  // when no A-inseparable pair of points is split across D1 and D2: the pair
  // (f^{-1}{f(x)}, f^{-1}(G \ {f(x)})) built from a separating f is the
  // widest admissible block entry at x.
  const auto& d = d_lattice().members;
  std::vector<Mask> classes;
  Mask handled = 0;
  for (int x = 0; x < domain_size_; ++x) {
    if ((handled >> x) & 1) continue;
    const Mask cls = inseparable_class(x);
    classes.push_back(cls);
    handled |= cls;
  }

  for (Mask d1 : d) {
    for (Mask d2 : d) {
      if (d1 & d2) continue;
      for (Mask cls : classes) {
        if ((cls & d1) && (cls & d2)) {
          normality_.normal = false;
          normality_.violation = {d1, d2};
          return;
        }
      }
    }
  }
  normality_.normal = true;

  // Non-default certificate bounds are enforced pair by pair; the assembly
  // throws search_bound_exceeded instead of reporting a false negative.
  if (options_.normal_block_bound != 0 || options_.normal_pair_bound != 0) {
    for (Mask d1 : d)
      for (Mask d2 : d) {
        if (d1 & d2) continue;
        normal_certificate(*this, d1, d2);
      }
  }
}

const NormalityResult& FunctionGroup::normality() const {
  std::call_once(normal_once_, [this] { decide_normality(); });
  return normality_;
}

std::optional<NormalCertificate> normal_certificate(const FunctionGroup& a,
                                                    Mask d1, Mask d2) {
  if (d1 & d2) fail(Errc::invalid_argument, "certificate needs disjoint sets");
  const int n = a.domain_size();
  const int order = a.group()->order();
  const int pair_bound = a.options().normal_pair_bound > 0
                             ? a.options().normal_pair_bound
                             : n;
  const int block_bound = a.options().normal_block_bound > 0
                              ? a.options().normal_block_bound
                              : n;

  auto make_pair = [&](int f, int x) {
    NormalCertPair pair;
    pair.f = f;
    const int v = a.element(f)[x];
    for (int y = 0; y < n; ++y)
      if (a.element(f)[y] == v) pair.p |= Mask{1} << y;
    pair.q = a.universe_mask() & ~pair.p;
    pair.f1 = {v};
    for (int w = 0; w < order; ++w)
      if (w != v) pair.f2.push_back(w);
    return pair;
  };

  NormalCertificate blocks;
  for (int x = 0; x < n; ++x) {
    if (!((d1 >> x) & 1)) continue;
    // Greedy cover of D2 by the widest admissible Q for each map.
    std::vector<NormalCertPair> block;
    Mask remaining = d2;
    while (remaining) {
      int best_f = -1;
      Mask best_gain = 0;
      for (int f = 0; f < a.size(); ++f) {
        NormalCertPair cand = make_pair(f, x);
        const Mask gain = cand.q & remaining;
        if (mask_size(gain) > mask_size(best_gain)) {
          best_gain = gain;
          best_f = f;
        }
      }
      if (best_f < 0 || !best_gain) return std::nullopt;
      block.push_back(make_pair(best_f, x));
      remaining &= ~best_gain;
    }
    if (static_cast<int>(block.size()) > pair_bound)
      fail(Errc::search_bound_exceeded,
           "normality certificate needs more than " +
               std::to_string(pair_bound) + " pairs per block");
    if (block.empty()) block.push_back(make_pair(a.identity_index(), x));
    blocks.push_back(std::move(block));
  }
  if (blocks.empty()) {
    // D1 empty: one block built from (F1, F2) = (empty, G), whose preimage
    // pair (empty, X) covers any D2 vacuously.
    NormalCertPair pair;
    pair.f = a.identity_index();
    pair.p = 0;
    pair.q = a.universe_mask();
    for (int w = 0; w < order; ++w) pair.f2.push_back(w);
    blocks.push_back({pair});
  }
  if (static_cast<int>(blocks.size()) > block_bound)
    fail(Errc::search_bound_exceeded,
         "normality certificate needs more than " +
             std::to_string(block_bound) + " blocks");
  return blocks;
}

OmegaExtensionResult omega_extension_closure(const FunctionGroupPtr& a) {
  OmegaExtensionResult out;
  out.group = a;
  out.certificate.domain_finite = a->domain_size() >= 1;

  bool bounded = true;
  for (int i = 0; i < a->size(); ++i)
    bounded = bounded &&
              static_cast<int>(a->element(i).size()) == a->domain_size();
  out.certificate.all_bounded = bounded;

  // Re-verify group closure: a locally finite product over a finite domain
  // reduces to a finite product, so closure under pairwise products is the
  // whole content of ext_omega(A*) = A*.
  bool closed = true;
  for (int i = 0; i < a->size() && closed; ++i)
    for (int j = 0; j < a->size() && closed; ++j)
      closed = a->product(i, j) >= 0;
  out.certificate.closed_under_products = closed;
  out.certificate.equals_original = closed;
  return out;
}

}  // namespace sepcomp
