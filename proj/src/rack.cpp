#include "rackrep/rack.hpp"

#include <algorithm>
#include <numeric>

#include "rackrep/error.hpp"
#include "rackrep/group.hpp"
#include "rackrep/kernels.hpp"

namespace rackrep {

std::vector<std::vector<Index>> Rack::table() const {
  std::vector<std::vector<Index>> out(size_);
  for (Index x = 0; x < size_; ++x)
    out[x].assign(row(x).begin(), row(x).end());
  return out;
}

Rack validate_rack(const std::vector<std::vector<long long>> &table, std::string name) {
  const std::size_t k = table.size();
  if (k == 0)
    throw InvalidInput("rack table is empty");
  Rack r;
  r.size_ = k;
  r.name_ = std::move(name);
  r.table_.resize(k * k);
  for (Index x = 0; x < k; ++x) {
    if (table[x].size() != k)
      throw InvalidInput("rack table row " + std::to_string(x) + " has length " +
                         std::to_string(table[x].size()) + ", expected " +
                         std::to_string(k));
    for (Index y = 0; y < k; ++y) {
      const long long v = table[x][y];
      if (v < 0 || static_cast<unsigned long long>(v) >= k)
        throw OutOfRangeEntry(x, y, v);
      r.table_[x * k + y] = static_cast<Index>(v);
    }
  }
  r.inverse_.resize(k * k);
  for (Index x = 0; x < k; ++x) {
    std::vector<bool> hit(k, false);
    for (Index y = 0; y < k; ++y) {
      const Index v = r.table_[x * k + y];
      if (hit[v])
        throw NonBijectiveRow(x);
      hit[v] = true;
      r.inverse_[x * k + v] = y;
    }
  }
  if (auto bad = par::first_distributivity_violation(r.table_, k))
    throw DistributivityViolation((*bad)[0], (*bad)[1], (*bad)[2]);
  return r;
}

Rack validate_rack(const std::vector<std::vector<Index>> &table, std::string name) {
  std::vector<std::vector<long long>> wide(table.size());
  for (std::size_t i = 0; i < table.size(); ++i)
    wide[i].assign(table[i].begin(), table[i].end());
  return validate_rack(wide, std::move(name));
}

Permutation left_mult(const Rack &rack, Index x) {
  if (x >= rack.size())
    throw InvalidInput("element " + std::to_string(x) + " out of range");
  return Permutation(std::vector<Index>(rack.row(x).begin(), rack.row(x).end()));
}

std::vector<std::vector<Index>> orbits(const Rack &rack) {
  const std::size_t k = rack.size();
  std::vector<Index> parent(k);
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index a) {
    while (parent[a] != a)
      a = parent[a] = parent[parent[a]];
    return a;
  };
  // y and x |> y always share an orbit; inverses add no new edges.
  for (Index x = 0; x < k; ++x)
    for (Index y = 0; y < k; ++y) {
      Index a = find(y), b = find(rack.op(x, y));
      if (a != b)
        parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<Index>> out;
  std::vector<std::ptrdiff_t> slot(k, -1);
  for (Index y = 0; y < k; ++y) {
    const Index root = find(y);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::ptrdiff_t>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[root])].push_back(y);
  }
  return out;
}

RackClassification classify(const Rack &rack) {
  const std::size_t k = rack.size();
  RackClassification c;
  c.is_quandle = true;
  c.is_involutive = true;
  for (Index x = 0; x < k; ++x) {
    if (rack.op(x, x) != x)
      c.is_quandle = false;
    for (Index y = 0; y < k; ++y)
      if (rack.op(x, rack.op(x, y)) != y)
        c.is_involutive = false;
    c.left_orders.push_back(left_mult(rack, x).order());
  }
  c.is_connected = orbits(rack).size() == 1;
  if (std::adjacent_find(c.left_orders.begin(), c.left_orders.end(),
                         std::not_equal_to<>()) == c.left_orders.end())
    c.common_order = c.left_orders.front();
  return c;
}

HomCheck check_hom(const Rack &source, const Rack &target, std::span<const Index> map) {
  HomCheck h;
  if (map.size() != source.size())
    return h;
  for (Index v : map)
    if (v >= target.size())
      return h;
  for (Index x = 0; x < source.size(); ++x)
    for (Index y = 0; y < source.size(); ++y)
      if (map[source.op(x, y)] != target.op(map[x], map[y]))
        return h;
  h.is_hom = true;
  if (source.size() == target.size()) {
    std::vector<bool> hit(target.size(), false);
    h.is_iso = true;
    for (Index v : map) {
      if (hit[v])
        h.is_iso = false;
      hit[v] = true;
    }
  }
  return h;
}

namespace builtin {

namespace {
using Table = std::vector<std::vector<Index>>;
Table square(std::size_t k) { return Table(k, std::vector<Index>(k)); }
} // namespace

Rack trivial(std::size_t k) {
  if (k == 0)
    throw InvalidInput("trivial rack needs k >= 1");
  Table t = square(k);
  for (Index x = 0; x < k; ++x)
    for (Index y = 0; y < k; ++y)
      t[x][y] = y;
  return validate_rack(t, "trivial:" + std::to_string(k));
}

Rack cyclic(const Permutation &sigma) {
  const std::size_t k = sigma.degree();
  if (k == 0)
    throw InvalidInput("cyclic rack needs a permutation of positive degree");
  Table t = square(k);
  std::string label = "cyclic:" + std::to_string(k) + ":";
  for (Index y = 0; y < k; ++y) {
    for (Index x = 0; x < k; ++x)
      t[x][y] = sigma(y);
    label += (y ? "," : "") + std::to_string(sigma(y));
  }
  return validate_rack(t, label);
}

Rack takasaki(std::size_t m) {
  if (m == 0)
    throw InvalidInput("takasaki quandle needs m >= 1");
  Table t = square(m);
  for (Index x = 0; x < m; ++x)
    for (Index y = 0; y < m; ++y)
      t[x][y] = (2 * x + m - y) % m;
  return validate_rack(t, "takasaki:" + std::to_string(m));
}

std::vector<std::pair<Index, Index>> transpositions(std::size_t n) {
  std::vector<std::pair<Index, Index>> out;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      out.emplace_back(i, j);
  return out;
}

Rack permutation_quandle(std::size_t n) {
  if (n < 3)
    throw InvalidInput("permutation quandle needs n >= 3");
  const auto tr = transpositions(n);
  auto swap_point = [](std::pair<Index, Index> s, Index p) {
    return p == s.first ? s.second : p == s.second ? s.first : p;
  };
  Table t = square(tr.size());
  for (Index a = 0; a < tr.size(); ++a)
    for (Index b = 0; b < tr.size(); ++b) {
      // (s) (u v) (s) = (s(u) s(v))
      Index u = swap_point(tr[a], tr[b].first);
      Index v = swap_point(tr[a], tr[b].second);
      if (u > v)
        std::swap(u, v);
      t[a][b] = static_cast<Index>(
          std::find(tr.begin(), tr.end(), std::pair{u, v}) - tr.begin());
    }
  return validate_rack(t, "permutation:" + std::to_string(n));
}

Rack conj(const FiniteGroup &g) {
  const std::size_t m = g.size();
  Table t = square(m);
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b)
      t[a][b] = g.mul(g.mul(a, b), g.inverse(a));
  return validate_rack(t, "conj");
}

Rack core(const FiniteGroup &g) {
  const std::size_t m = g.size();
  Table t = square(m);
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b)
      t[a][b] = g.mul(g.mul(a, g.inverse(b)), a);
  return validate_rack(t, "core");
}

Rack conj_class(const FiniteGroup &g, Index element) {
  if (element >= g.size())
    throw InvalidInput("element " + std::to_string(element) + " out of range");
  std::vector<Index> members;
  for (Index h = 0; h < g.size(); ++h)
    members.push_back(g.mul(g.mul(h, element), g.inverse(h)));
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  auto position = [&](Index v) {
    auto it = std::lower_bound(members.begin(), members.end(), v);
    if (it == members.end() || *it != v)
      throw InvalidInput("conjugacy class is not closed under conjugation");
    return static_cast<Index>(it - members.begin());
  };
  Table t = square(members.size());
  for (Index a = 0; a < members.size(); ++a)
    for (Index b = 0; b < members.size(); ++b)
      t[a][b] = position(g.mul(g.mul(members[a], members[b]), g.inverse(members[a])));
  return validate_rack(t, "conjclass:" + std::to_string(element));
}

} // namespace builtin
} // namespace rackrep
