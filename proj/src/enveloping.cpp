#include "rackrep/enveloping.hpp"

#include <algorithm>
#include <set>

namespace rackrep {

Presentation presentation_of(const Rack &rack) {
  const auto cls = classify(rack);
  if (!cls.is_connected || !cls.common_order)
    throw NotConnected();
  const std::size_t k = rack.size();
  const std::size_t n = *cls.common_order;

  Presentation pres;
  pres.n_generators = k;
  std::set<std::vector<Letter>> seen;
  auto add = [&](std::vector<Letter> r) {
    if (seen.insert(r).second)
      pres.relators.push_back(std::move(r));
  };
  for (Index x = 0; x < k; ++x)
    for (Index y = 0; y < k; ++y)
      add({gen_letter(rack.op(x, y)), gen_letter(x), inv_letter(y), inv_letter(x)});
  for (Index x = 0; x < k; ++x)
    add(std::vector<Letter>(n, gen_letter(x)));
  return pres;
}

EnvelopingGroup enveloping_group(std::shared_ptr<const Rack> rack, const Config &config) {
  const Presentation pres = presentation_of(*rack);
  EnvelopingGroup env;
  env.rack = rack;
  env.common_order = *classify(*rack).common_order;
  env.cosets = todd_coxeter(pres, config.max_cosets);

  const CosetTable &ct = env.cosets;
  const std::size_t m = ct.size();
  const std::size_t k = rack->size();
  for (Index x = 0; x < k; ++x)
    env.eta.push_back(ct.action[0][2 * x]);

  // Coset c is the element reached by its representative word; a * b follows
  // b's breadth-first tree edge from a * parent(b).
  std::vector<Index> flat(m * m);
  for (Index a = 0; a < m; ++a) {
    flat[a * m] = a;
    for (Index b = 1; b < m; ++b)
      flat[a * m + b] = ct.action[flat[a * m + ct.parent[b]]][2 * ct.via[b]];
  }
  env.group = std::make_shared<const FiniteGroup>(
      FiniteGroup::from_trusted_table(std::move(flat), m, env.eta));

  env.inn = inn_group(*rack, config.group_cap);
  env.to_inn = hom_from_generator_images(*env.group, env.inn.left_index,
                                         env.inn.perm.group);
  env.kernel = env.to_inn.kernel(env.inn.perm.group.identity());
  for (Index h : env.kernel) {
    const auto slots = env.group->word(h);
    env.kernel_words.emplace_back(slots.begin(), slots.end());
  }
  env.center = center(*env.group);
  return env;
}

EnvelopingGroup enveloping_group(const Rack &rack, const Config &config) {
  return enveloping_group(std::make_shared<const Rack>(rack), config);
}

bool is_stabilizing_family(const Rack &rack, std::span<const Index> word) {
  std::vector<Index> images(rack.size());
  for (Index i = 0; i < rack.size(); ++i)
    images[i] = i;
  for (Index x : word) {
    if (x >= rack.size())
      throw InvalidInput("family element " + std::to_string(x) + " out of range");
    for (auto &v : images)
      v = rack.op(x, v);
  }
  for (Index i = 0; i < rack.size(); ++i)
    if (images[i] != i)
      return false;
  return true;
}

std::vector<StabilizingFamily> enumerate_stabilizing_families(const Rack &rack,
                                                              std::size_t max_len,
                                                              std::uint64_t budget) {
  if (max_len == 0)
    throw InvalidInput("max_len must be at least 1");
  if (word_count(rack.size(), max_len) > budget)
    throw BudgetExceeded("stabilizing-family scan over " + std::to_string(rack.size()) +
                         "^" + std::to_string(max_len) + " words exceeds budget " +
                         std::to_string(budget));
  std::vector<Permutation> lefts;
  for (Index x = 0; x < rack.size(); ++x)
    lefts.push_back(left_mult(rack, x));
  std::vector<StabilizingFamily> out;
  for (auto &w : par::stabilizing_words(lefts, max_len))
    out.push_back({std::move(w)});
  return out;
}

bool conj_center_criterion(const FiniteGroup &g, std::span<const Index> family) {
  Index product = g.identity();
  for (Index u : family) {
    if (u >= g.size())
      throw InvalidInput("family element out of range");
    product = g.mul(u, product);
  }
  for (Index a = 0; a < g.size(); ++a)
    if (g.mul(product, a) != g.mul(a, product))
      return false;
  return true;
}

} // namespace rackrep
