#include "sepcomp/finite_group.hpp"

#include <algorithm>
#include <string>

namespace sepcomp {
namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

}  // namespace

void FiniteGroup::init_validated() {
  const int n = order_;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int v = table_[i * n + j];
      if (v < 0 || v >= n)
        fail(Errc::invalid_argument,
             "table entry out of range at " + triple(i, j, v));
    }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (op(op(a, b), c) != op(a, op(b, c)))
          fail(Errc::not_associative,
               "associativity fails at triple " + triple(a, b, c));

  identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      ok = op(e, i) == i && op(i, e) == i;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) fail(Errc::no_identity, "no two-sided identity element");

  inverse_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (op(i, j) == identity_ && op(j, i) == identity_) {
        inverse_[i] = j;
        break;
      }
    if (inverse_[i] < 0)
      fail(Errc::no_inverse, "element " + std::to_string(i) + " has no inverse");
  }

  compute_generators();
}

void FiniteGroup::compute_generators() {
  const int n = order_;
  std::vector<char> in(n, 0);
  std::vector<int> closure{identity_};
  in[identity_] = 1;
  generators_.clear();
  for (int cand = 0; cand < n; ++cand) {
    if (in[cand]) continue;
    generators_.push_back(cand);
    // extend the closure by right-multiplying with the enlarged generator set
    std::size_t head = 0;
    closure.push_back(cand);
    in[cand] = 1;
    while (head < closure.size()) {
      const int a = closure[head++];
      for (int g : generators_) {
        const int b = op(a, g);
        if (!in[b]) {
          in[b] = 1;
          closure.push_back(b);
        }
      }
    }
    if (static_cast<int>(closure.size()) == n) break;
  }
}

int FiniteGroup::element_order(int a) const {
  int x = a;
  int k = 1;
  while (x != identity_) {
    x = op(x, a);
    ++k;
  }
  return k;
}

GroupPtr make_cyclic(int n) {
  if (n < 1) fail(Errc::invalid_order, "cyclic group order must be positive");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = n;
  g->table_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g->table_[i * n + j] = (i + j) % n;
  g->init_validated();
  return g;
}

GroupPtr make_from_table(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n < 1) fail(Errc::invalid_order, "table must have positive order");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = n;
  g->table_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      fail(Errc::invalid_argument,
           "table row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n; ++j) g->table_[i * n + j] = table[i][j];
  }
  g->init_validated();
  return g;
}

GroupMorphism identity_morphism(const GroupPtr& g) {
  GroupMorphism m;
  m.source = g;
  m.target = g;
  m.image.resize(g->order());
  for (int i = 0; i < g->order(); ++i) m.image[i] = i;
  m.is_endo = true;
  m.is_epi = true;
  m.is_auto = true;
  return m;
}

namespace {

void fill_flags(GroupMorphism& m) {
  m.is_endo = same_group(m.source, m.target);
  std::vector<char> hit(m.target->order(), 0);
  int distinct = 0;
  for (int v : m.image)
    if (!hit[v]) {
      hit[v] = 1;
      ++distinct;
    }
  m.is_epi = distinct == m.target->order();
  const bool injective = distinct == static_cast<int>(m.image.size());
  m.is_auto = m.is_endo && injective && m.is_epi;
}

}  // namespace

GroupMorphism morphism_from_image(GroupPtr source, GroupPtr target,
                                  std::vector<int> image) {
  const int n = source->order();
  if (static_cast<int>(image.size()) != n)
    fail(Errc::invalid_argument, "image vector has wrong length");
  for (int v : image)
    if (v < 0 || v >= target->order())
      fail(Errc::invalid_argument, "image value out of range");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (image[source->op(a, b)] != target->op(image[a], image[b]))
        fail(Errc::inconsistent_images,
             "homomorphism law fails at pair (" + std::to_string(a) + "," +
                 std::to_string(b) + ")");
  GroupMorphism m;
  m.source = std::move(source);
  m.target = std::move(target);
  m.image = std::move(image);
  fill_flags(m);
  return m;
}

namespace {

// Backtracking over images of the generating set. A partial image map is
// extended by the homomorphism law whenever a new value is fixed; a conflict
// rejects the branch. Reaches all endomorphisms because the generating set
// generates the whole group.
struct EndoSearch {
  const FiniteGroup& g;
  std::vector<int> img;          // -1 where undefined
  std::vector<int> defined;      // indices with img set, in definition order
  std::vector<std::vector<int>> results;

  explicit EndoSearch(const FiniteGroup& grp)
      : g(grp), img(grp.order(), -1) {
    img[g.identity()] = g.identity();
    defined.push_back(g.identity());
  }

  // Sets img[x] = v and propagates products against everything already
  // defined. Returns false on conflict. Appends every newly defined index to
  // `defined` so the caller can roll back.
  bool assign(int x, int v) {
    if (img[x] >= 0) return img[x] == v;
    img[x] = v;
    defined.push_back(x);
    std::size_t head = defined.size() - 1;
    while (head < defined.size()) {
      const int d = defined[head++];
      const std::size_t snapshot = defined.size();
      for (std::size_t i = 0; i < snapshot; ++i) {
        const int a = defined[i];
        const int p1 = g.op(a, d), v1 = g.op(img[a], img[d]);
        if (img[p1] < 0) {
          img[p1] = v1;
          defined.push_back(p1);
        } else if (img[p1] != v1) {
          return false;
        }
        const int p2 = g.op(d, a), v2 = g.op(img[d], img[a]);
        if (img[p2] < 0) {
          img[p2] = v2;
          defined.push_back(p2);
        } else if (img[p2] != v2) {
          return false;
        }
      }
    }
    return true;
  }

  void rollback(std::size_t mark) {
    while (defined.size() > mark) {
      img[defined.back()] = -1;
      defined.pop_back();
    }
  }

  void run(std::size_t gen_pos) {
    const auto& gens = g.generating_set();
    if (gen_pos == gens.size()) {
      results.push_back(img);
      return;
    }
    const int x = gens[gen_pos];
    for (int v = 0; v < g.order(); ++v) {
      const std::size_t mark = defined.size();
      if (assign(x, v)) run(gen_pos + 1);
      rollback(mark);
    }
  }
};

}  // namespace

std::vector<GroupMorphism> endomorphisms(const GroupPtr& g) {
  EndoSearch search(*g);
  search.run(0);
  std::sort(search.results.begin(), search.results.end());
  std::vector<GroupMorphism> out;
  out.reserve(search.results.size());
  for (auto& image : search.results) {
    GroupMorphism m;
    m.source = g;
    m.target = g;
    m.image = std::move(image);
    fill_flags(m);
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<GroupMorphism> automorphism_group(const GroupPtr& g) {
  std::vector<GroupMorphism> out;
  for (auto& m : endomorphisms(g))
    if (m.is_auto) out.push_back(std::move(m));
  return out;
}

GroupMorphism compose(const GroupMorphism& a, const GroupMorphism& b) {
  if (!same_group(b.target, a.source))
    fail(Errc::domain_mismatch, "compose: inner target differs from outer source");
  GroupMorphism m;
  m.source = b.source;
  m.target = a.target;
  m.image.resize(b.image.size());
  for (std::size_t i = 0; i < b.image.size(); ++i)
    m.image[i] = a.image[b.image[i]];
  fill_flags(m);
  return m;
}

GroupMorphism invert(const GroupMorphism& a) {
  std::vector<char> hit(a.target->order(), 0);
  for (int v : a.image) hit[v] = 1;
  const bool bijective =
      a.source->order() == a.target->order() &&
      std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  if (!bijective) fail(Errc::not_invertible, "morphism image is not a bijection");
  GroupMorphism m;
  m.source = a.target;
  m.target = a.source;
  m.image.resize(a.image.size());
  for (std::size_t i = 0; i < a.image.size(); ++i)
    m.image[a.image[i]] = static_cast<int>(i);
  fill_flags(m);
  return m;
}

}  // namespace sepcomp
