#include "rackrep/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "rackrep/kernels.hpp"
#include "rackrep/rack.hpp"

namespace rackrep {

namespace {

Index find_identity(std::span<const Index> t, std::size_t m) {
  for (Index e = 0; e < m; ++e) {
    bool ok = true;
    for (Index a = 0; a < m && ok; ++a)
      ok = t[e * m + a] == a && t[a * m + e] == a;
    if (ok)
      return e;
  }
  throw InvalidInput("group table has no identity element");
}

std::vector<Index> find_inverses(std::span<const Index> t, std::size_t m, Index e) {
  std::vector<Index> inv(m, m);
  for (Index a = 0; a < m; ++a) {
    for (Index b = 0; b < m; ++b)
      if (t[a * m + b] == e) {
        inv[a] = b;
        break;
      }
    if (inv[a] == m || t[inv[a] * m + a] != e)
      throw InvalidInput("element " + std::to_string(a) + " has no two-sided inverse");
  }
  return inv;
}

// Elements reachable from e by right multiplication with `gens`.
std::vector<bool> generated(std::span<const Index> t, std::size_t m, Index e,
                            const std::vector<Index> &gens) {
  std::vector<bool> seen(m, false);
  std::deque<Index> queue{e};
  seen[e] = true;
  while (!queue.empty()) {
    const Index a = queue.front();
    queue.pop_front();
    for (Index s : gens) {
      const Index b = t[a * m + s];
      if (!seen[b]) {
        seen[b] = true;
        queue.push_back(b);
      }
    }
  }
  return seen;
}

std::string cycle_label(const Permutation &p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (Index i = 0; i < p.degree(); ++i) {
    if (seen[i] || p(i) == i)
      continue;
    out += "(";
    for (Index j = i; !seen[j]; j = p(j)) {
      seen[j] = true;
      out += (j == i ? "" : " ") + std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

} // namespace

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<long long>> &table,
                                    std::vector<std::string> labels,
                                    std::optional<std::vector<Index>> generators) {
  const std::size_t m = table.size();
  if (m == 0)
    throw InvalidInput("group table is empty");
  FiniteGroup g;
  g.size_ = m;
  g.table_.resize(m * m);
  for (Index a = 0; a < m; ++a) {
    if (table[a].size() != m)
      throw InvalidInput("group table row " + std::to_string(a) + " has wrong length");
    for (Index b = 0; b < m; ++b) {
      const long long v = table[a][b];
      if (v < 0 || static_cast<unsigned long long>(v) >= m)
        throw OutOfRangeEntry(a, b, v);
      g.table_[a * m + b] = static_cast<Index>(v);
    }
  }
  if (!labels.empty() && labels.size() != m)
    throw InvalidInput("need one label per group element");
  g.identity_ = find_identity(g.table_, m);
  g.inverse_ = find_inverses(g.table_, m, g.identity_);
  if (auto bad = par::first_associativity_violation(g.table_, m))
    throw InvalidInput("group table is not associative at (" +
                       std::to_string((*bad)[0]) + "," + std::to_string((*bad)[1]) +
                       "," + std::to_string((*bad)[2]) + ")");
  g.labels_ = std::move(labels);
  if (generators) {
    for (Index s : *generators)
      if (s >= m)
        throw InvalidInput("generator index out of range");
    g.generators_ = std::move(*generators);
  } else {
    std::vector<bool> reach = generated(g.table_, m, g.identity_, {});
    for (Index a = 0; a < m; ++a)
      if (!reach[a]) {
        g.generators_.push_back(a);
        reach = generated(g.table_, m, g.identity_, g.generators_);
      }
  }
  g.build_tree();
  return g;
}

FiniteGroup FiniteGroup::from_trusted_table(std::vector<Index> flat, std::size_t size,
                                            std::vector<Index> generators,
                                            std::vector<std::string> labels) {
  FiniteGroup g;
  g.size_ = size;
  g.table_ = std::move(flat);
  g.identity_ = find_identity(g.table_, size);
  g.inverse_ = find_inverses(g.table_, size, g.identity_);
  g.generators_ = std::move(generators);
  g.labels_ = std::move(labels);
  g.build_tree();
  return g;
}

void FiniteGroup::build_tree() {
  const std::size_t m = size_;
  parent_.assign(m, m);
  via_.assign(m, m);
  bfs_order_.clear();
  std::vector<bool> seen(m, false);
  seen[identity_] = true;
  parent_[identity_] = identity_;
  bfs_order_.push_back(identity_);
  for (std::size_t head = 0; head < bfs_order_.size(); ++head) {
    const Index a = bfs_order_[head];
    for (Index s = 0; s < generators_.size(); ++s) {
      const Index b = mul(a, generators_[s]);
      if (!seen[b]) {
        seen[b] = true;
        parent_[b] = a;
        via_[b] = s;
        bfs_order_.push_back(b);
      }
    }
  }
  if (bfs_order_.size() != m)
    throw InvalidInput("generators do not generate the group");
}

std::vector<std::vector<Index>> FiniteGroup::table() const {
  std::vector<std::vector<Index>> out(size_);
  for (Index a = 0; a < size_; ++a)
    out[a].assign(table_.begin() + static_cast<std::ptrdiff_t>(a * size_),
                  table_.begin() + static_cast<std::ptrdiff_t>((a + 1) * size_));
  return out;
}

std::vector<Index> FiniteGroup::word(Index element) const {
  std::vector<Index> w;
  for (Index b = element; b != identity_; b = parent_[b])
    w.push_back(via_[b]);
  std::reverse(w.begin(), w.end());
  return w;
}

std::size_t FiniteGroup::element_order(Index a) const {
  std::size_t n = 1;
  for (Index p = a; p != identity_; p = mul(p, a))
    ++n;
  return n;
}

Index FiniteGroup::power(Index a, std::size_t n) const {
  Index p = identity_;
  for (std::size_t i = 0; i < n; ++i)
    p = mul(p, a);
  return p;
}

PermGroup closure(std::span<const Permutation> generators, std::size_t cap,
                  std::size_t degree) {
  if (!generators.empty())
    degree = generators.front().degree();
  for (const auto &g : generators)
    if (g.degree() != degree)
      throw InvalidInput("generators act on different degrees");
  if (cap == 0)
    throw CapExceeded(cap);

  PermGroup out;
  std::map<Permutation, Index> index;
  out.elements.push_back(Permutation::identity(degree));
  index.emplace(out.elements.back(), 0);
  const std::size_t ngen = generators.size();
  std::vector<Index> right; // right[a * ngen + s] = a * gen_s
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (Index s = 0; s < ngen; ++s) {
      Permutation next = out.elements[head] * generators[s];
      auto [it, inserted] = index.emplace(next, out.elements.size());
      if (inserted) {
        if (out.elements.size() >= cap)
          throw CapExceeded(cap);
        out.elements.push_back(std::move(next));
      }
      right.push_back(it->second);
    }
  }

  const std::size_t m = out.elements.size();
  std::vector<Index> gen_index(ngen);
  for (Index s = 0; s < ngen; ++s)
    gen_index[s] = index.at(generators[s]);

  // BFS discovery order is exactly the spanning tree that from_trusted_table
  // rebuilds, so a*b = (a * parent(b)) * gen_via(b) fills rows left to right.
  std::vector<Index> parent(m, 0), via(m, 0);
  std::vector<bool> seen(m, false);
  seen[0] = true;
  for (Index a = 0; a < m; ++a)
    for (Index s = 0; s < ngen; ++s) {
      const Index b = right[a * ngen + s];
      if (!seen[b]) {
        seen[b] = true;
        parent[b] = a;
        via[b] = s;
      }
    }
  std::vector<Index> flat(m * m);
  for (Index a = 0; a < m; ++a) {
    flat[a * m] = a;
    for (Index b = 1; b < m; ++b)
      flat[a * m + b] = right[flat[a * m + parent[b]] * ngen + via[b]];
  }
  out.group = FiniteGroup::from_trusted_table(std::move(flat), m, std::move(gen_index));
  return out;
}

InnGroup inn_group(const Rack &rack, std::size_t cap) {
  std::vector<Permutation> lefts;
  for (Index x = 0; x < rack.size(); ++x)
    lefts.push_back(left_mult(rack, x));
  InnGroup inn{closure(lefts, cap, rack.size()), {}};
  const auto gens = inn.perm.group.generators();
  inn.left_index.assign(gens.begin(), gens.end());
  return inn;
}

std::vector<std::vector<Index>> conjugacy_classes(const FiniteGroup &g) {
  const std::size_t m = g.size();
  std::vector<bool> done(m, false);
  std::vector<std::vector<Index>> classes;
  for (Index a = 0; a < m; ++a) {
    if (done[a])
      continue;
    std::vector<Index> cls;
    for (Index h = 0; h < m; ++h) {
      const Index c = g.mul(g.mul(h, a), g.inverse(h));
      if (!done[c]) {
        done[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Index> class_of(const std::vector<std::vector<Index>> &classes,
                            std::size_t group_size) {
  std::vector<Index> out(group_size, 0);
  for (Index c = 0; c < classes.size(); ++c)
    for (Index a : classes[c])
      out[a] = c;
  return out;
}

std::vector<Index> center(const FiniteGroup &g) {
  std::vector<Index> z;
  for (Index a = 0; a < g.size(); ++a) {
    bool central = true;
    for (Index b = 0; b < g.size() && central; ++b)
      central = g.mul(a, b) == g.mul(b, a);
    if (central)
      z.push_back(a);
  }
  return z;
}

bool GroupHom::is_injective() const {
  std::vector<Index> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool GroupHom::is_surjective(std::size_t target_size) const {
  std::vector<bool> hit(target_size, false);
  for (Index v : images)
    if (v < target_size)
      hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<Index> GroupHom::kernel(Index target_identity) const {
  std::vector<Index> k;
  for (Index a = 0; a < images.size(); ++a)
    if (images[a] == target_identity)
      k.push_back(a);
  return k;
}

GroupHom hom_from_generator_images(const FiniteGroup &g,
                                   std::span<const Index> generator_images,
                                   const FiniteGroup &target) {
  for (Index v : generator_images)
    if (v >= target.size())
      throw InvalidInput("generator image out of range of the target group");
  GroupHom h;
  h.images = extend_generator_images<Index>(
      g, generator_images, target.identity(),
      [&](Index a, Index b) { return target.mul(a, b); },
      [](Index a, Index b) { return a == b; });
  return h;
}

namespace groups {

FiniteGroup symmetric(std::size_t n) {
  if (n == 0 || n > 6)
    throw InvalidInput("symmetric group supported for 1 <= n <= 6");
  std::vector<Permutation> elems;
  std::vector<Index> p(n);
  std::iota(p.begin(), p.end(), Index{0});
  do
    elems.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t m = elems.size();
  std::map<Permutation, Index> index;
  for (Index i = 0; i < m; ++i)
    index.emplace(elems[i], i);
  std::vector<Index> flat(m * m);
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b)
      flat[a * m + b] = index.at(elems[a] * elems[b]);
  std::vector<Index> gens;
  for (Index i = 0; i + 1 < n; ++i) {
    std::vector<Index> t(n);
    std::iota(t.begin(), t.end(), Index{0});
    std::swap(t[i], t[i + 1]);
    gens.push_back(index.at(Permutation(t)));
  }
  std::vector<std::string> labels;
  for (const auto &e : elems)
    labels.push_back(cycle_label(e));
  return FiniteGroup::from_trusted_table(std::move(flat), m, std::move(gens),
                                         std::move(labels));
}

Permutation symmetric_element(std::size_t n, Index index) {
  std::vector<Index> p(n);
  std::iota(p.begin(), p.end(), Index{0});
  for (Index i = 0; i < index; ++i)
    if (!std::next_permutation(p.begin(), p.end()))
      throw InvalidInput("symmetric group index out of range");
  return Permutation(p);
}

Index symmetric_index(const Permutation &p) {
  std::vector<Index> q(p.images().begin(), p.images().end());
  Index rank = 0;
  while (std::prev_permutation(q.begin(), q.end()))
    ++rank;
  return rank;
}

FiniteGroup cyclic(std::size_t n) {
  if (n == 0)
    throw InvalidInput("cyclic group needs n >= 1");
  std::vector<Index> flat(n * n);
  std::vector<std::string> labels;
  for (Index a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (Index b = 0; b < n; ++b)
      flat[a * n + b] = (a + b) % n;
  }
  return FiniteGroup::from_trusted_table(std::move(flat), n,
                                         {n > 1 ? Index{1} : Index{0}}, std::move(labels));
}

FiniteGroup dihedral(std::size_t n) {
  if (n < 1)
    throw InvalidInput("dihedral group needs n >= 1");
  const std::size_t m = 2 * n;
  // index i < n: r^i ; index n + i: r^i s.  (r^a s^f)(r^b s^g) = r^(a + (-1)^f b) s^(f+g)
  std::vector<Index> flat(m * m);
  std::vector<std::string> labels;
  for (Index x = 0; x < m; ++x) {
    const Index a = x % n, f = x / n;
    labels.push_back(f ? "r^" + std::to_string(a) + " s" : "r^" + std::to_string(a));
    for (Index y = 0; y < m; ++y) {
      const Index b = y % n, g = y / n;
      const Index rot = f ? (a + n - b) % n : (a + b) % n;
      flat[x * m + y] = rot + ((f + g) % 2) * n;
    }
  }
  return FiniteGroup::from_trusted_table(std::move(flat), m,
                                         {n > 1 ? Index{1} : Index{0}, n},
                                         std::move(labels));
}

} // namespace groups
} // namespace rackrep
