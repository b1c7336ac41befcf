#include "sepcomp/code.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace sepcomp {
namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// In-place reduced row-echelon form over Z_p; returns the rank.
int rref_mod_p(std::vector<std::vector<int>>& rows, int p, int n) {
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    // scale pivot row to leading 1 (p prime, so inverses exist)
    int inv = 1;
    for (int v = 1; v < p; ++v)
      if (rows[rank][col] * v % p == 1) {
        inv = v;
        break;
      }
    for (int c = 0; c < n; ++c) rows[rank][c] = rows[rank][c] * inv % p;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const int factor = rows[r][col];
      for (int c = 0; c < n; ++c)
        rows[r][c] = ((rows[r][c] - factor * rows[rank][c]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

LinearCodePtr code_from_matrix(int p, int k, int n,
                               std::vector<std::vector<int>> rows) {
  if (!is_prime(p))
    fail(Errc::not_prime,
         std::to_string(p) +
             " is not prime; over Z_p the additive automorphisms are exactly "
             "the nonzero scalar multiplications, which makes weighted "
             "compositions coincide with monomial maps. Prime powers have "
             "additional additive automorphisms and are not supported.");
  if (n < 1) fail(Errc::invalid_argument, "code length must be positive");
  if (k < 0 || k > n) fail(Errc::invalid_argument, "invalid dimension");
  if (static_cast<int>(rows.size()) != k)
    fail(Errc::invalid_argument, "expected one generator row per dimension");
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      fail(Errc::invalid_argument, "generator row has wrong length");
    for (int v : row)
      if (v < 0 || v >= p)
        fail(Errc::invalid_argument, "generator entry out of range");
  }

  const int rank = rref_mod_p(rows, p, n);
  if (rank != k)
    fail(Errc::rank_deficient, "generator matrix has rank " +
                                   std::to_string(rank) + ", expected " +
                                   std::to_string(k));

  auto code = std::shared_ptr<LinearCode>(new LinearCode());
  code->p_ = p;
  code->n_ = n;
  code->k_ = k;
  code->basis_ = rows;
  code->fgroup_ = closure_generate(make_cyclic(p), n,
                                   std::vector<PointMap>(rows.begin(), rows.end()));
  return code;
}

std::vector<long long> weight_enumerator(const LinearCode& c) {
  std::vector<long long> w(c.length() + 1, 0);
  const auto& fg = *c.as_function_group();
  for (int i = 0; i < fg.size(); ++i)
    ++w[mask_size(fg.cozero_mask(i))];
  return w;
}

PointMap apply_monomial(const MonomialWitness& w, const PointMap& c, int p) {
  PointMap out(w.sigma.size());
  for (std::size_t x = 0; x < w.sigma.size(); ++x)
    out[x] = w.lambda[x] * c[w.sigma[x]] % p;
  return out;
}

bool monomial_maps_onto(const LinearCode& c1, const LinearCode& c2,
                        const MonomialWitness& w) {
  if (c1.field() != c2.field() || c1.length() != c2.length()) return false;
  if (c1.codewords() != c2.codewords()) return false;
  const auto& fg2 = *c2.as_function_group();
  std::vector<char> hit(fg2.size(), 0);
  for (int i = 0; i < c1.codewords(); ++i) {
    const int j = fg2.index_of(apply_monomial(w, c1.codeword(i), c1.field()));
    if (j < 0 || hit[j]) return false;
    hit[j] = 1;
  }
  return true;
}

namespace {

// Shared depth-first search over column assignments. Columns of c2 are
// assigned in natural order; candidates (sigma, lambda) ascend, so the first
// complete assignment is the dictionary-least witness and full enumeration
// emits witnesses in dictionary order.
struct MonomialSearch {
  const LinearCode& c1;
  const LinearCode& c2;
  int p, n, m;
  int shift;                            // bits per symbol in packed patterns
  std::vector<std::vector<int>> cw1, cw2;
  std::vector<std::vector<std::uint64_t>> prefix2;  // sorted packed prefixes
  std::vector<std::vector<int>> candidates;         // per column of c2
  std::vector<std::uint64_t> pattern;               // per codeword of c1
  std::vector<int> sigma, lambda;
  std::vector<char> used;
  bool collect_all = false;
  std::vector<MonomialWitness> found;

  MonomialSearch(const LinearCode& a, const LinearCode& b)
      : c1(a), c2(b), p(a.field()), n(a.length()), m(a.codewords()) {
    shift = std::bit_width(static_cast<unsigned>(p - 1));
    if (n * shift > 64)
      fail(Errc::too_large, "code search supports n*ceil(log2 p) <= 64");
    for (int i = 0; i < m; ++i) cw1.push_back(a.codeword(i));
    for (int i = 0; i < b.codewords(); ++i) cw2.push_back(b.codeword(i));
  }

  // Column profile: per Hamming weight, how many codewords are nonzero at x.
  // Invariant under monomial maps, so it filters sigma candidates exactly.
  static std::vector<long long> column_profile(
      const std::vector<std::vector<int>>& cw, int x, int n) {
    std::vector<long long> prof(n + 1, 0);
    for (const auto& c : cw) {
      if (c[x] == 0) continue;
      int wt = 0;
      for (int v : c) wt += v != 0;
      ++prof[wt];
    }
    return prof;
  }

  bool feasible() {
    if (m != static_cast<int>(cw2.size())) return false;
    if (weight_enumerator(c1) != weight_enumerator(c2)) return false;

    std::vector<std::vector<long long>> prof1(n), prof2(n);
    for (int x = 0; x < n; ++x) {
      prof1[x] = column_profile(cw1, x, n);
      prof2[x] = column_profile(cw2, x, n);
    }
    {
      auto s1 = prof1, s2 = prof2;
      std::sort(s1.begin(), s1.end());
      std::sort(s2.begin(), s2.end());
      if (s1 != s2) return false;
    }
    candidates.assign(n, {});
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x)
        if (prof1[x] == prof2[y]) candidates[y].push_back(x);

    prefix2.assign(n + 1, {});
    for (int len = 1; len <= n; ++len) {
      auto& bucket = prefix2[len];
      bucket.reserve(cw2.size());
      for (const auto& c : cw2) {
        std::uint64_t key = 0;
        for (int x = 0; x < len; ++x)
          key |= static_cast<std::uint64_t>(c[x]) << (x * shift);
        bucket.push_back(key);
      }
      std::sort(bucket.begin(), bucket.end());
    }
    return true;
  }

  // Multiset check: the images of c1 restricted to the assigned columns must
  // coincide with c2's own restriction (the final map is a bijection).
  bool prefixes_match(int len) const {
    std::vector<std::uint64_t> keys(pattern);
    std::sort(keys.begin(), keys.end());
    return keys == prefix2[len];
  }

  bool dfs(int y) {
    if (y == n) {
      MonomialWitness w{sigma, lambda};
      if (!monomial_maps_onto(c1, c2, w)) return false;
      found.push_back(std::move(w));
      return !collect_all;
    }
    for (int x : candidates[y]) {
      if (used[x]) continue;
      used[x] = 1;
      sigma[y] = x;
      for (int lam = 1; lam < p; ++lam) {
        lambda[y] = lam;
        for (int i = 0; i < m; ++i)
          pattern[i] |= static_cast<std::uint64_t>(lam * cw1[i][x] % p)
                        << (y * shift);
        if (prefixes_match(y + 1) && dfs(y + 1)) {
          if (!collect_all) return true;
        }
        const std::uint64_t clear =
            ~(((std::uint64_t{1} << shift) - 1) << (y * shift));
        for (int i = 0; i < m; ++i) pattern[i] &= clear;
      }
      used[x] = 0;
    }
    return false;
  }

  void run(bool all) {
    collect_all = all;
    if (!feasible()) return;
    pattern.assign(m, 0);
    sigma.assign(n, -1);
    lambda.assign(n, -1);
    used.assign(n, 0);
    dfs(0);
  }
};

}  // namespace

std::optional<MonomialWitness> monomial_equivalence(const LinearCode& c1,
                                                    const LinearCode& c2) {
  if (c1.field() != c2.field())
    fail(Errc::invalid_argument, "codes are over different fields");
  if (c1.length() != c2.length())
    fail(Errc::invalid_argument, "codes have different lengths");
  MonomialSearch search(c1, c2);
  search.run(false);
  if (search.found.empty()) return std::nullopt;
  return search.found.front();
}

std::vector<MonomialWitness> code_automorphisms(const LinearCode& c) {
  MonomialSearch search(c, c);
  search.run(true);
  return search.found;
}

CodeIsometryReport verify_isometry_is_monomial(const GroupHom& h,
                                               const LinearCode& c1,
                                               const LinearCode& c2) {
  if (h.source() != c1.as_function_group() ||
      h.target() != c2.as_function_group())
    fail(Errc::invalid_argument,
         "homomorphism does not connect the given codes");
  if (!h.is_bijective())
    fail(Errc::not_bijective, "homomorphism is not bijective");
  const auto& fg1 = *c1.as_function_group();
  const auto& fg2 = *c2.as_function_group();
  for (int i = 0; i < fg1.size(); ++i)
    if (mask_size(fg1.cozero_mask(i)) != mask_size(fg2.cozero_mask(h(i))))
      fail(Errc::not_isometry,
           "weight changes at codeword " + point_map_to_string(fg1.element(i)));

  IsoRepresentation rep = represent_iso(h);

  CodeIsometryReport report;
  report.forward = std::move(rep.forward);
  report.inverse = std::move(rep.inverse);
  report.witness.sigma = report.forward.h;
  report.witness.lambda.resize(report.forward.h.size());
  for (std::size_t y = 0; y < report.forward.h.size(); ++y)
    report.witness.lambda[y] = report.forward.w[y].apply(1);

  if (!monomial_maps_onto(c1, c2, report.witness))
    fail(Errc::not_isometry, "extracted witness does not map code onto code");
  for (int i = 0; i < fg1.size(); ++i)
    if (fg2.index_of(apply_monomial(report.witness, c1.codeword(i),
                                    c1.field())) != h(i))
      fail(Errc::not_isometry,
           "extracted witness disagrees with the homomorphism");
  return report;
}

}  // namespace sepcomp
