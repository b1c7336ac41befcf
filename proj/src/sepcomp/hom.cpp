#include "sepcomp/hom.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace sepcomp {
namespace {

std::string pair_text(const FunctionGroup& a, int f, int g) {
  return "f = " + point_map_to_string(a.element(f)) +
         " ; g = " + point_map_to_string(a.element(g));
}

// The smallest member of the family containing c. The family is closed under
// intersections and sorted by (size, value), so the first superset found is
// the meet of all supersets.
Mask min_cover(const SetFamily& family, Mask c) {
  for (Mask m : family.members)
    if (subset_of(c, m)) return m;
  return full_mask(family.universe_size);
}

std::vector<Mask> min_covers_for_cozeros(const FunctionGroup& a) {
  const auto& d = a.d_lattice();
  std::map<Mask, Mask> memo;
  std::vector<Mask> out(a.size());
  for (int i = 0; i < a.size(); ++i) {
    const Mask c = a.cozero_mask(i);
    auto it = memo.find(c);
    if (it == memo.end()) it = memo.emplace(c, min_cover(d, c)).first;
    out[i] = it->second;
  }
  return out;
}

}  // namespace

bool PointHom::is_null() const {
  const int e = target_->identity();
  return std::all_of(image_.begin(), image_.end(),
                     [e](int v) { return v == e; });
}

PointHom PointHom::checked(FunctionGroupPtr source, GroupPtr target,
                           std::vector<int> image) {
  const auto& a = *source;
  if (static_cast<int>(image.size()) != a.size())
    fail(Errc::invalid_argument, "point homomorphism table has wrong length");
  for (int v : image)
    if (v < 0 || v >= target->order())
      fail(Errc::invalid_argument, "point homomorphism value out of range");
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (image[a.product(i, j)] != target->op(image[i], image[j]))
        fail(Errc::inconsistent_images,
             "homomorphism law fails at " + pair_text(a, i, j));
  return PointHom(std::move(source), std::move(target), std::move(image));
}

PointHom evaluation_hom(const FunctionGroupPtr& a, int x) {
  if (x < 0 || x >= a->domain_size())
    fail(Errc::invalid_argument, "evaluation point out of range");
  std::vector<int> image(a->size());
  for (int i = 0; i < a->size(); ++i) image[i] = a->element(i)[x];
  return PointHom(a, a->group(), std::move(image));
}

PointHom morph_after(const GroupMorphism& alpha, const PointHom& phi) {
  if (!same_group(alpha.source, phi.target()))
    fail(Errc::domain_mismatch, "morphism domain differs from hom target");
  std::vector<int> image(phi.image().size());
  for (std::size_t i = 0; i < image.size(); ++i)
    image[i] = alpha.image[phi.image()[i]];
  return PointHom::checked(phi.source(), alpha.target, std::move(image));
}

PredicateResult is_separating(const PointHom& phi) {
  const auto& a = *phi.source();
  const int e = phi.target()->identity();
  for (int i = 0; i < a.size(); ++i)
    for (int j = i; j < a.size(); ++j)
      if ((a.cozero_mask(i) & a.cozero_mask(j)) == 0)
        if (phi(i) != e && phi(j) != e)
          return {false, PairWitness{i, j}};
  return {};
}

PredicateResult is_weakly_separating(const PointHom& phi) {
  const auto& a = *phi.source();
  const int e = phi.target()->identity();
  const auto covers = min_covers_for_cozeros(a);
  for (int i = 0; i < a.size(); ++i)
    for (int j = i; j < a.size(); ++j)
      if ((covers[i] & covers[j]) == 0)
        if (phi(i) != e && phi(j) != e)
          return {false, PairWitness{i, j}};
  return {};
}

PredicateResult is_non_vanishing(const PointHom& phi) {
  const auto& a = *phi.source();
  const int e = phi.target()->identity();
  for (int i = 0; i < a.size(); ++i)
    for (int j = i; j < a.size(); ++j)
      if ((a.zero_mask(i) & a.zero_mask(j)) == 0)
        if (phi(i) == e && phi(j) == e)
          return {false, PairWitness{i, j}};
  return {};
}

bool is_support(const PointHom& phi, Mask s) {
  const auto& a = *phi.source();
  const int e = phi.target()->identity();
  for (int i = 0; i < a.size(); ++i)
    if (subset_of(s, a.zero_mask(i)) && phi(i) != e) return false;
  return true;
}

SupportReport minimal_supports(const PointHom& phi) {
  if (phi.is_null())
    fail(Errc::null_homomorphism,
         "every subset supports the null homomorphism");
  const auto& a = *phi.source();
  const int n = a.domain_size();
  if (n > 20)
    fail(Errc::too_large, "support enumeration beyond 20 points is unsupported");
  const int e = phi.target()->identity();

  std::set<Mask> bad;  // zero sets of maps with nontrivial value
  for (int i = 0; i < a.size(); ++i)
    if (phi(i) != e) bad.insert(a.zero_mask(i));

  std::vector<Mask> order(std::size_t{1} << n);
  for (Mask s = 0; s < order.size(); ++s) order[s] = s;
  std::sort(order.begin(), order.end(), mask_less);

  SupportReport report;
  for (Mask s : order) {
    bool support = true;
    for (Mask z : bad)
      if (subset_of(s, z)) {
        support = false;
        break;
      }
    if (!support) continue;
    bool minimal = true;
    for (Mask t : report.minimal_supports)
      if (t != s && subset_of(t, s)) {
        minimal = false;
        break;
      }
    if (minimal) report.minimal_supports.push_back(s);
  }

  Mask meet = full_mask(n);
  for (Mask s : report.minimal_supports) meet &= s;
  if (is_support(phi, meet)) report.minimum = meet;
  report.is_singleton = report.minimum && mask_size(*report.minimum) == 1;
  return report;
}

void GroupHom::verify(const FunctionGroup& a, const FunctionGroup& b,
                      const std::vector<int>& image) {
  if (static_cast<int>(image.size()) != a.size())
    fail(Errc::invalid_argument, "homomorphism table has wrong length");
  for (int v : image)
    if (v < 0 || v >= b.size())
      fail(Errc::invalid_argument, "homomorphism image out of range");
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (image[a.product(i, j)] != b.product(image[i], image[j]))
        fail(Errc::inconsistent_images,
             "homomorphism law fails at " + pair_text(a, i, j));
}

GroupHom GroupHom::from_table(FunctionGroupPtr source, FunctionGroupPtr target,
                              std::vector<int> image) {
  verify(*source, *target, image);
  return GroupHom(std::move(source), std::move(target), std::move(image),
                  HomOrigin::explicit_table);
}

GroupHom GroupHom::from_generator_images(
    FunctionGroupPtr source, FunctionGroupPtr target,
    const std::vector<std::pair<PointMap, PointMap>>& pairs) {
  const auto& a = *source;
  const auto& b = *target;
  std::vector<int> image(a.size(), -1);
  image[a.identity_index()] = b.identity_index();

  for (const auto& [lhs, rhs] : pairs) {
    const int li = a.index_of(lhs);
    if (li < 0)
      fail(Errc::invalid_argument,
           "pair source " + point_map_to_string(lhs) +
               " is not an element of the source group");
    const int ri = b.index_of(rhs);
    if (ri < 0)
      fail(Errc::invalid_argument,
           "pair image " + point_map_to_string(rhs) +
               " is not an element of the target group");
    if (image[li] >= 0 && image[li] != ri)
      fail(Errc::inconsistent_images,
           "conflicting images for " + point_map_to_string(lhs));
    image[li] = ri;
  }

  for (int g : a.generator_indices())
    if (image[g] < 0)
      fail(Errc::invalid_argument,
           "pairs do not cover generator " +
               point_map_to_string(a.element(g)));

  // Extend along the generation tree: every non-identity element is
  // parent * generator with the parent earlier in the list.
  for (int i = 0; i < a.size(); ++i) {
    const auto [parent, gpos] = a.parent(i);
    if (parent < 0) continue;
    const int gen = a.generator_indices()[gpos];
    const int value = b.product(image[parent], image[gen]);
    if (image[i] < 0) {
      image[i] = value;
    } else if (image[i] != value) {
      fail(Errc::inconsistent_images,
           "image of " + point_map_to_string(a.element(i)) +
               " violates the relation through its generator word");
    }
  }

  verify(a, b, image);
  return GroupHom(std::move(source), std::move(target), std::move(image),
                  HomOrigin::generator_images);
}

bool GroupHom::is_injective() const {
  std::vector<char> hit(target_->size(), 0);
  for (int v : image_) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

bool GroupHom::is_surjective() const {
  std::vector<char> hit(target_->size(), 0);
  int distinct = 0;
  for (int v : image_)
    if (!hit[v]) {
      hit[v] = 1;
      ++distinct;
    }
  return distinct == target_->size();
}

GroupHom inverse_hom(const GroupHom& h) {
  if (!h.is_bijective())
    fail(Errc::not_bijective, "cannot invert a non-bijective homomorphism");
  std::vector<int> image(h.target()->size());
  for (int i = 0; i < h.source()->size(); ++i) image[h(i)] = i;
  return GroupHom::from_table(h.target(), h.source(), std::move(image));
}

PointHom evaluation_after(const GroupHom& h, int y) {
  if (y < 0 || y >= h.target()->domain_size())
    fail(Errc::invalid_argument, "evaluation point out of range");
  const auto& b = *h.target();
  std::vector<int> image(h.source()->size());
  for (int i = 0; i < h.source()->size(); ++i)
    image[i] = b.element(h(i))[y];
  return PointHom(h.source(), b.group(), std::move(image));
}

PredicateResult is_separating(const GroupHom& h) {
  const auto& a = *h.source();
  const auto& b = *h.target();
  for (int i = 0; i < a.size(); ++i)
    for (int j = i; j < a.size(); ++j)
      if ((a.cozero_mask(i) & a.cozero_mask(j)) == 0)
        if (b.cozero_mask(h(i)) & b.cozero_mask(h(j)))
          return {false, PairWitness{i, j}};
  return {};
}

PredicateResult is_weakly_separating(const GroupHom& h) {
  const auto& a = *h.source();
  const auto& b = *h.target();
  const auto covers_a = min_covers_for_cozeros(a);
  const auto covers_b = min_covers_for_cozeros(b);
  for (int i = 0; i < a.size(); ++i)
    for (int j = i; j < a.size(); ++j)
      if ((covers_a[i] & covers_a[j]) == 0)
        if (covers_b[h(i)] & covers_b[h(j)])
          return {false, PairWitness{i, j}};
  return {};
}

SupportMapResult support_map(const GroupHom& h) {
  const auto wsep = is_weakly_separating(h);
  if (!wsep.holds)
    fail(Errc::not_weakly_separating,
         "not weakly separating; witness " +
             pair_text(*h.source(), wsep.witness->f, wsep.witness->g));

  const auto& a = *h.source();
  const int codomain = h.target()->domain_size();
  SupportMapResult out;
  out.h.assign(codomain, -1);
  out.minimum_present.assign(codomain, 0);

  for (int y = 0; y < codomain; ++y) {
    PointHom phi = evaluation_after(h, y);
    if (phi.is_null()) {
      out.dropped.push_back(y);
      continue;
    }
    const SupportReport report = minimal_supports(phi);
    Mask chosen = 0;
    if (report.minimum && report.is_singleton) {
      chosen = *report.minimum;
      out.minimum_present[y] = 1;
    } else {
      // No minimum: fall back to the unique singleton minimal support when
      // there is one. The weight stage re-verifies the representation, so
      // nothing rests on this choice.
      std::vector<Mask> singletons;
      for (Mask s : report.minimal_supports)
        if (mask_size(s) == 1) singletons.push_back(s);
      if (singletons.size() != 1) {
        std::string sets;
        for (Mask s : report.minimal_supports) {
          if (!sets.empty()) sets += ",";
          sets += mask_to_string(s);
        }
        fail(Errc::non_singleton_support,
             "no singleton support at y=" + std::to_string(y) +
                 "; minimal supports " + sets + "; minimum " +
                 (report.minimum ? mask_to_string(*report.minimum) : "absent"));
      }
      chosen = singletons[0];
      out.all_minimum = false;
    }
    out.h[y] = std::countr_zero(chosen);
  }

  if (static_cast<int>(out.dropped.size()) == codomain)
    fail(Errc::null_homomorphism, "every evaluation of H is null");

  Mask covered = 0;
  for (int y = 0; y < codomain; ++y)
    if (out.h[y] >= 0) covered |= Mask{1} << out.h[y];
  out.onto = covered == a.universe_mask();
  return out;
}

int PartialMorphism::apply(int a) const {
  auto it = std::lower_bound(domain.begin(), domain.end(), a);
  if (it == domain.end() || *it != a) return -1;
  return image[it - domain.begin()];
}

WeightedComposition weight_map(const GroupHom& h_hom,
                               const std::vector<int>& h) {
  const auto& a = *h_hom.source();
  const auto& b = *h_hom.target();
  const auto& g = *a.group();
  if (static_cast<int>(h.size()) != b.domain_size())
    fail(Errc::invalid_argument, "support vector has wrong length");

  WeightedComposition out;
  out.h = h;
  out.w.resize(h.size());

  for (std::size_t y = 0; y < h.size(); ++y) {
    const int x = h[y];
    if (x < 0) continue;
    if (x >= a.domain_size())
      fail(Errc::invalid_argument, "support vector value out of range");

    std::vector<int> value(g.order(), -1);
    std::vector<int> setter(g.order(), -1);
    for (int f = 0; f < a.size(); ++f) {
      const int arg = a.element(f)[x];
      const int res = b.element(h_hom(f))[y];
      if (value[arg] < 0) {
        value[arg] = res;
        setter[arg] = f;
      } else if (value[arg] != res) {
        fail(Errc::not_well_defined,
             "h(" + std::to_string(y) + ") = " + std::to_string(x) +
                 " is not a support: " + pair_text(a, setter[arg], f) +
                 " agree there but have different images at y");
      }
    }

    PartialMorphism& w = out.w[y];
    for (int v = 0; v < g.order(); ++v)
      if (value[v] >= 0) {
        w.domain.push_back(v);
        w.image.push_back(value[v]);
      }
    w.total = static_cast<int>(w.domain.size()) == g.order();

    // The domain is delta_x(A), a subgroup; check the homomorphism law on it.
    for (std::size_t i = 0; i < w.domain.size(); ++i)
      for (std::size_t j = 0; j < w.domain.size(); ++j) {
        const int prod = g.op(w.domain[i], w.domain[j]);
        const int expect = g.op(w.image[i], w.image[j]);
        if (w.apply(prod) != expect)
          fail(Errc::not_well_defined,
               "weight at y=" + std::to_string(y) +
                   " is not a homomorphism on its domain");
      }

    if (w.total) {
      std::vector<char> hit(g.order(), 0);
      bool bij = true;
      for (int v : w.image) {
        if (hit[v]) bij = false;
        hit[v] = 1;
      }
      w.is_auto = bij;
    }
  }

  // The acceptance oracle: the defining identity checked over every (f, y).
  bool verified = true;
  for (std::size_t y = 0; y < h.size() && verified; ++y) {
    if (h[y] < 0) continue;
    for (int f = 0; f < a.size() && verified; ++f)
      verified = out.w[y].apply(a.element(f)[h[y]]) ==
                 b.element(h_hom(f))[static_cast<int>(y)];
  }
  out.verified = verified;
  return out;
}

WeightedComposition represent(const GroupHom& h) {
  const SupportMapResult smap = support_map(h);
  return weight_map(h, smap.h);
}

IsoRepresentation represent_iso(const GroupHom& h) {
  if (!h.is_bijective())
    fail(Errc::not_bijective, "homomorphism is not bijective");
  {
    const auto fwd = is_weakly_separating(h);
    if (!fwd.holds)
      fail(Errc::not_biseparating,
           "forward direction not weakly separating; witness " +
               pair_text(*h.source(), fwd.witness->f, fwd.witness->g));
  }
  const GroupHom h_inv = inverse_hom(h);
  {
    const auto bwd = is_weakly_separating(h_inv);
    if (!bwd.holds)
      fail(Errc::not_biseparating,
           "inverse direction not weakly separating; witness " +
               pair_text(*h_inv.source(), bwd.witness->f, bwd.witness->g));
  }

  IsoRepresentation out;
  out.forward = represent(h);
  out.inverse = represent(h_inv);

  const int nx = h.source()->domain_size();
  const int ny = h.target()->domain_size();
  if (nx != ny)
    fail(Errc::not_biseparating, "domain sizes differ; h cannot be a bijection");
  for (int y = 0; y < ny; ++y)
    if (out.forward.h[y] < 0)
      fail(Errc::not_biseparating,
           "support map dropped y=" + std::to_string(y) +
               " of a bijective homomorphism");
  for (int x = 0; x < nx; ++x)
    if (out.inverse.h[x] < 0)
      fail(Errc::not_biseparating,
           "inverse support map dropped x=" + std::to_string(x));

  bool mutually_inverse = true;
  for (int y = 0; y < ny; ++y)
    mutually_inverse = mutually_inverse && out.inverse.h[out.forward.h[y]] == y;
  for (int x = 0; x < nx; ++x)
    mutually_inverse = mutually_inverse && out.forward.h[out.inverse.h[x]] == x;
  if (!mutually_inverse)
    fail(Errc::not_biseparating, "support maps are not mutually inverse");
  out.support_maps_mutually_inverse = true;

  const int order = h.source()->group()->order();
  for (int y = 0; y < ny; ++y)
    if (!out.forward.w[y].total)
      fail(Errc::not_pointwise_dense,
           "G_{h(y)} is a proper subgroup at y=" + std::to_string(y));
  for (int x = 0; x < nx; ++x)
    if (!out.inverse.w[x].total)
      fail(Errc::not_pointwise_dense,
           "G_{k(x)} is a proper subgroup at x=" + std::to_string(x));

  bool weights_inverse = true;
  for (int y = 0; y < ny && weights_inverse; ++y) {
    const PartialMorphism& w = out.forward.w[y];
    const PartialMorphism& rho = out.inverse.w[out.forward.h[y]];
    for (int a = 0; a < order && weights_inverse; ++a)
      weights_inverse = rho.apply(w.apply(a)) == a && w.apply(rho.apply(a)) == a;
  }
  if (!weights_inverse)
    fail(Errc::not_biseparating, "weights are not mutually inverse");
  out.weights_mutually_inverse = true;
  return out;
}

GroupHom weighted_hom_into(const FunctionGroupPtr& a, const FunctionGroupPtr& b,
                           const std::vector<int>& sigma,
                           const std::vector<GroupMorphism>& weights) {
  const int ny = b->domain_size();
  if (static_cast<int>(sigma.size()) != ny ||
      static_cast<int>(weights.size()) != ny)
    fail(Errc::invalid_argument, "sigma/weights must have one entry per point");
  for (int v : sigma)
    if (v < 0 || v >= a->domain_size())
      fail(Errc::invalid_argument, "sigma value out of range");
  for (const auto& w : weights)
    if (!same_group(w.source, a->group()) || !same_group(w.target, a->group()))
      fail(Errc::domain_mismatch, "weight morphism is not an endomap of G");

  std::vector<int> image(a->size());
  PointMap hf(ny);
  for (int f = 0; f < a->size(); ++f) {
    for (int y = 0; y < ny; ++y)
      hf[y] = weights[y].image[a->element(f)[sigma[y]]];
    const int idx = b->index_of(hf);
    if (idx < 0)
      fail(Errc::invalid_argument,
           "weighted image " + point_map_to_string(hf) +
               " is not an element of the target");
    image[f] = idx;
  }
  return GroupHom::from_table(a, b, std::move(image));
}

std::pair<FunctionGroupPtr, GroupHom> induced_weighted_hom(
    const FunctionGroupPtr& a, int codomain_size, const std::vector<int>& sigma,
    const std::vector<GroupMorphism>& weights, const GenerateOptions& options) {
  std::vector<PointMap> gens;
  for (int g : a->generator_indices()) {
    PointMap hf(codomain_size);
    for (int y = 0; y < codomain_size; ++y)
      hf[y] = weights[y].image[a->element(g)[sigma[y]]];
    gens.push_back(std::move(hf));
  }
  FunctionGroupPtr b =
      closure_generate(a->group(), codomain_size, std::move(gens), options);
  GroupHom h = weighted_hom_into(a, b, sigma, weights);
  return {std::move(b), std::move(h)};
}

}  // namespace sepcomp
