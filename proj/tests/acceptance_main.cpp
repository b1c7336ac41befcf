// Acceptance suite: one pass/fail line per criterion, each with its runtime
// budget enforced. Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "sepcomp/code.hpp"
#include "sepcomp/hom.hpp"
#include "test_util.hpp"

using namespace sepcomp;

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::runtime_error(message);
}

struct Config {
  std::string group_name;
  GroupPtr group;
  int domain;
  FunctionGroupPtr full;
  std::vector<GroupMorphism> automorphisms;
  std::vector<GroupMorphism> endomorphisms;
};

std::vector<Config>& corpus() {
  static std::vector<Config> configs = [] {
    std::vector<Config> out;
    const std::vector<std::pair<std::string, GroupPtr>> groups = {
        {"Z2", make_cyclic(2)},
        {"Z3", make_cyclic(3)},
        {"Z4", make_cyclic(4)},
        {"S3", testutil::symmetric_group(3)}};
    for (const auto& [name, g] : groups)
      for (int n : {2, 3, 4})
        out.push_back({name, g, n, full_function_group(g, n),
                       automorphism_group(g), endomorphisms(g)});
    return out;
  }();
  return configs;
}

FunctionGroupPtr cube4() {
  static FunctionGroupPtr a =
      closure_generate(make_cyclic(2), 3, {{1, 1, 0}, {0, 1, 1}});
  return a;
}

LinearCodePtr hamming74() {
  static LinearCodePtr c = code_from_matrix(2, 4, 7,
                                            {{1, 0, 0, 0, 1, 1, 0},
                                             {0, 1, 0, 0, 1, 0, 1},
                                             {0, 0, 1, 0, 0, 1, 1},
                                             {0, 0, 0, 1, 1, 1, 1}});
  return c;
}

// Every function group the property criteria quantify over.
std::vector<FunctionGroupPtr> fgroup_corpus() {
  std::vector<FunctionGroupPtr> out;
  for (const auto& c : corpus()) out.push_back(c.full);
  out.push_back(cube4());
  out.push_back(closure_generate(make_cyclic(2), 3, {{1, 1, 1}}));  // constants
  out.push_back(hamming74()->as_function_group());
  return out;
}

// --- criteria ------------------------------------------------------------

// Representation round trip: 204 random weighted compositions, exact
// recovery of (sigma, w) and mutually inverse weights.
void criterion_round_trip() {
  std::mt19937 rng(0x5ec01);
  int checked = 0;
  for (const auto& cfg : corpus()) {
    std::uniform_int_distribution<std::size_t> pick(0, cfg.automorphisms.size() - 1);
    for (int trial = 0; trial < 17; ++trial) {
      const auto sigma = testutil::random_permutation(cfg.domain, rng);
      std::vector<GroupMorphism> weights;
      for (int y = 0; y < cfg.domain; ++y)
        weights.push_back(cfg.automorphisms[pick(rng)]);

      GroupHom h = weighted_hom_into(cfg.full, cfg.full, sigma, weights);
      const IsoRepresentation iso = represent_iso(h);

      require(iso.forward.verified && iso.inverse.verified,
              "representation not verified");
      require(iso.forward.h == sigma, "sigma not recovered exactly");
      for (int y = 0; y < cfg.domain; ++y) {
        require(iso.forward.w[y].total && iso.forward.w[y].is_auto,
                "weight not a total automorphism");
        require(iso.forward.w[y].image == weights[y].image,
                "weight table not recovered exactly");
        const auto& rho = iso.inverse.w[sigma[y]];
        for (int v = 0; v < cfg.group->order(); ++v)
          require(rho.apply(iso.forward.w[y].apply(v)) == v,
                  "rho[h(y)] o w[y] is not the identity");
      }
      require(iso.weights_mutually_inverse && iso.support_maps_mutually_inverse,
              "inverse structure not verified");
      ++checked;
    }
  }
  require(checked >= 200, "fewer than 200 round trips");
}

// Singleton minimum supports for random weakly separating homomorphisms on
// controllable groups.
void criterion_singleton_support() {
  std::mt19937 rng(0x5ec02);
  int checked = 0;
  while (checked < 100) {
    const auto& cfg = corpus()[checked % corpus().size()];
    require(cfg.full->controllability().controllable,
            "corpus group not controllable");
    std::uniform_int_distribution<int> pick_x(0, cfg.domain - 1);
    std::uniform_int_distribution<std::size_t> pick_e(
        0, cfg.endomorphisms.size() - 1);
    const auto& alpha = cfg.endomorphisms[pick_e(rng)];
    PointHom phi = morph_after(alpha, evaluation_hom(cfg.full, pick_x(rng)));
    if (phi.is_null()) continue;
    require(is_weakly_separating(phi).holds, "phi not weakly separating");
    const SupportReport report = minimal_supports(phi);
    require(report.minimum.has_value(), "no minimum support");
    require(report.is_singleton, "minimum support not a singleton");
    ++checked;
  }
}

// The negative control phi(f) = f(x1) f(x2) on full Z_2^2.
void criterion_negative_control() {
  auto z2 = make_cyclic(2);
  auto a = full_function_group(z2, 2);
  std::vector<int> image(a->size());
  for (int i = 0; i < a->size(); ++i)
    image[i] = z2->op(a->element(i)[0], a->element(i)[1]);
  PointHom phi = PointHom::checked(a, z2, image);

  const auto sep = is_separating(phi);
  require(!sep.holds, "phi wrongly classified separating");
  require(a->element(sep.witness->f) == PointMap{1, 0} &&
              a->element(sep.witness->g) == PointMap{0, 1},
          "witness differs from ((1,0),(0,1))");

  const SupportReport report = minimal_supports(phi);
  require(report.minimal_supports == std::vector<Mask>{0b11},
          "unique minimal support is not {x1,x2}");
  require(report.minimum.has_value() && *report.minimum == 0b11 &&
              !report.is_singleton,
          "minimum support mis-reported");
}

// Separated and detached coincide pairwise over the whole corpus.
void criterion_separated_detached() {
  for (const auto& a : fgroup_corpus()) {
    const auto& family = a->d_lattice().members;
    // smallest family member containing c; the family is meet-closed
    auto min_cover = [&](Mask c) {
      for (Mask m : family)
        if (subset_of(c, m)) return m;
      return a->universe_mask();
    };
    std::vector<Mask> cover(a->size());
    for (int i = 0; i < a->size(); ++i) cover[i] = min_cover(a->cozero_mask(i));
    for (int i = 0; i < a->size(); ++i)
      for (int j = i; j < a->size(); ++j) {
        const bool separated = (a->cozero_mask(i) & a->cozero_mask(j)) == 0;
        const bool detached = (cover[i] & cover[j]) == 0;
        require(separated == detached, "separated and detached diverge");
      }
  }
}

// Controllability: all full groups positive; the 4-element subgroup of Z_2^3
// negative with the exact witness.
void criterion_controllability() {
  for (const auto& cfg : corpus())
    require(cfg.full->controllability().controllable,
            "full function group not controllable");

  const auto& result = cube4()->controllability();
  require(!result.controllable, "subgroup wrongly controllable");
  const auto& w = *result.violation;
  require(cube4()->element(w.f) == PointMap{1, 1, 0} && w.d1 == 0b001 &&
              w.d2 == 0b010,
          "controllability witness differs from (f=(1,1,0), D1={0}, D2={1})");
}

// Injective homomorphisms have onto support maps.
void criterion_support_map_onto() {
  std::mt19937 rng(0x5ec06);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = trial % 2 == 0 ? make_cyclic(2) : make_cyclic(3);
    const int nx = 2 + trial % 2;
    const int ny = nx + 1;
    auto a = full_function_group(g, nx);
    auto b = full_function_group(g, ny);

    std::vector<int> h0(nx);
    std::iota(h0.begin(), h0.end(), 0);
    std::uniform_int_distribution<int> extra(0, nx - 1);
    h0.push_back(extra(rng));
    std::shuffle(h0.begin(), h0.end(), rng);

    const auto auts = automorphism_group(g);
    std::uniform_int_distribution<std::size_t> pick(0, auts.size() - 1);
    std::vector<GroupMorphism> weights;
    for (int y = 0; y < ny; ++y) weights.push_back(auts[pick(rng)]);

    GroupHom h = weighted_hom_into(a, b, h0, weights);
    require(h.is_injective(), "constructed homomorphism not injective");
    require(!h.is_surjective(), "constructed homomorphism unexpectedly onto");
    const SupportMapResult smap = support_map(h);
    require(smap.h == h0, "support map differs from the constructing map");
    require(smap.onto, "support map of an injective homomorphism not onto");
  }
}

// Hamming [7,4]: weight enumerator and automorphism count against brute force.
void criterion_hamming() {
  auto ham = hamming74();
  const std::vector<long long> expected{1, 0, 0, 7, 7, 0, 0, 1};
  require(weight_enumerator(*ham) == expected, "weight enumerator differs");

  const auto fast = code_automorphisms(*ham);
  require(fast.size() == 168, "automorphism count is not 168");

  // oracle: all 5040 column permutations (p = 2, so no scalar freedom)
  std::vector<int> sigma(7);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::vector<int>> oracle;
  do {
    MonomialWitness w{sigma, std::vector<int>(7, 1)};
    if (monomial_maps_onto(*ham, *ham, w)) oracle.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  require(oracle.size() == 168, "permutation scan does not find 168");
  for (std::size_t i = 0; i < oracle.size(); ++i)
    require(fast[i].sigma == oracle[i],
            "backtracking and brute force disagree");
}

// Equivalence search against the exhaustive oracle on random pairs.
void criterion_equivalence_search() {
  std::mt19937 rng(0x5ec08);
  auto random_rows = [&](int p, int k, int n) {
    std::uniform_int_distribution<int> coef(0, p - 1);
    while (true) {
      std::vector<std::vector<int>> rows(k, std::vector<int>(n));
      for (auto& r : rows)
        for (auto& v : r) v = coef(rng);
      try {
        code_from_matrix(p, k, n, rows);
        return rows;
      } catch (const Error&) {
      }
    }
  };

  for (int trial = 0; trial < 100; ++trial) {
    const int p = trial % 2 == 0 ? 2 : 3;
    std::uniform_int_distribution<int> pick_n(2, 4);
    const int n = pick_n(rng);
    std::uniform_int_distribution<int> pick_k(1, n);
    const int k1 = pick_k(rng);
    auto c1 = code_from_matrix(p, k1, n, random_rows(p, k1, n));

    LinearCodePtr c2;
    if (trial < 50) {
      MonomialWitness w;
      w.sigma = testutil::random_permutation(n, rng);
      std::uniform_int_distribution<int> scalar(1, p - 1);
      for (int i = 0; i < n; ++i) w.lambda.push_back(scalar(rng));
      std::vector<std::vector<int>> rows;
      for (const auto& r : c1->basis())
        rows.push_back(apply_monomial(w, r, p));
      c2 = code_from_matrix(p, c1->dimension(), n, rows);
    } else {
      const int k2 = pick_k(rng);
      c2 = code_from_matrix(p, k2, n, random_rows(p, k2, n));
    }

    // oracle: existence over all n! * (p-1)^n monomial maps
    bool oracle = false;
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      std::vector<int> lambda(n, 1);
      while (!oracle) {
        if (monomial_maps_onto(*c1, *c2, MonomialWitness{sigma, lambda}))
          oracle = true;
        int pos = n - 1;
        while (pos >= 0 && lambda[pos] == p - 1) lambda[pos--] = 1;
        if (pos < 0) break;
        ++lambda[pos];
      }
    } while (!oracle && std::next_permutation(sigma.begin(), sigma.end()));

    const auto witness = monomial_equivalence(*c1, *c2);
    require(witness.has_value() == oracle,
            "search disagrees with the exhaustive oracle");
    if (witness)
      require(monomial_maps_onto(*c1, *c2, *witness),
              "returned witness fails re-verification");
  }
}

// ext_omega(A*) = A* on finite domains, certificate included.
void criterion_omega_collapse() {
  for (const auto& a : fgroup_corpus()) {
    const auto result = omega_extension_closure(a);
    require(result.group == a, "omega extension changed the group");
    require(result.certificate.domain_finite && result.certificate.all_bounded &&
                result.certificate.closed_under_products &&
                result.certificate.equals_original,
            "omega extension certificate incomplete");
  }
}

// Support-set properties: monotonicity, locality, pairwise intersection.
void criterion_support_properties() {
  std::mt19937 rng(0x5ec10);
  auto z2 = make_cyclic(2);

  std::vector<PointHom> phis;
  for (const auto& cfg : corpus()) {
    std::uniform_int_distribution<int> pick_x(0, cfg.domain - 1);
    std::uniform_int_distribution<std::size_t> pick_e(
        0, cfg.endomorphisms.size() - 1);
    int added = 0;
    while (added < 2) {
      PointHom phi = morph_after(cfg.endomorphisms[pick_e(rng)],
                                 evaluation_hom(cfg.full, pick_x(rng)));
      if (phi.is_null()) continue;
      phis.push_back(std::move(phi));
      ++added;
    }
  }
  {
    auto a = full_function_group(z2, 2);
    std::vector<int> image(a->size());
    for (int i = 0; i < a->size(); ++i)
      image[i] = z2->op(a->element(i)[0], a->element(i)[1]);
    phis.push_back(PointHom::checked(a, z2, image));
  }

  for (const auto& phi : phis) {
    const auto& a = *phi.source();
    const int n = a.domain_size();
    std::vector<Mask> supports;
    for (Mask s = 0; s < (Mask{1} << n); ++s)
      if (is_support(phi, s)) supports.push_back(s);
    require(!supports.empty(), "a non-null homomorphism with no supports");

    for (Mask s : supports) {
      // monotonicity
      for (Mask r = 0; r < (Mask{1} << n); ++r)
        if (subset_of(s, r))
          require(is_support(phi, r), "superset of a support not a support");
      // pairwise intersection (sources here are all controllable)
      for (Mask t : supports)
        require((s & t) != 0, "two disjoint supports on a controllable group");
      // locality
      for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) {
          bool agree = true;
          for (int x = 0; x < n && agree; ++x)
            if ((s >> x) & 1) agree = a.element(i)[x] == a.element(j)[x];
          if (agree)
            require(phi(i) == phi(j),
                    "maps agreeing on a support with different images");
        }
    }
  }
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<void()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "round-trip representation recovers (sigma, w) exactly (204 homs)",
       60.0, criterion_round_trip},
      {2, "singleton minimum supports on controllable groups (100 homs)", 30.0,
       criterion_singleton_support},
      {3, "negative control: f(x1)f(x2) on Z_2^2", 1.0,
       criterion_negative_control},
      {4, "separated and detached coincide pairwise over the corpus", 30.0,
       criterion_separated_detached},
      {5, "controllability decisions with pinned witness", 5.0,
       criterion_controllability},
      {6, "support maps of injective homomorphisms are onto (50 homs)", 30.0,
       criterion_support_map_onto},
      {7, "Hamming [7,4]: weight enumerator and 168 automorphisms", 30.0,
       criterion_hamming},
      {8, "equivalence search matches the exhaustive oracle (100 pairs)", 120.0,
       criterion_equivalence_search},
      {9, "omega extension collapses on every corpus group", 5.0,
       criterion_omega_collapse},
      {10, "support-set properties: monotone, local, intersecting", 60.0,
       criterion_support_properties},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      c.body();
    } catch (const std::exception& e) {
      failure = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (failure.empty() && elapsed > c.budget_seconds)
      failure = "exceeded the " + std::to_string(c.budget_seconds) + "s budget";
    if (failure.empty()) {
      std::printf("[%2d] PASS  %s  (%.2fs of %.0fs)\n", c.id, c.name, elapsed,
                  c.budget_seconds);
    } else {
      std::printf("[%2d] FAIL  %s  (%.2fs): %s\n", c.id, c.name, elapsed,
                  failure.c_str());
      ++failures;
    }
  }
  std::printf("acceptance: %d/%d criteria passed\n",
              static_cast<int>(criteria.size()) - failures,
              static_cast<int>(criteria.size()));
  return failures == 0 ? 0 : 1;
}
