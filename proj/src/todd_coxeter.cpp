#include "rackrep/todd_coxeter.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "rackrep/error.hpp"

namespace rackrep {

void Presentation::validate() const {
  for (const auto &r : relators) {
    if (r.empty())
      throw InvalidInput("empty relator");
    for (Letter l : r)
      if (l == 0 || static_cast<std::size_t>(l < 0 ? -l : l) > n_generators)
        throw InvalidInput("relator letter out of range");
  }
}

std::string format_relator(const std::vector<Letter> &relator) {
  std::string out;
  for (Letter l : relator) {
    if (!out.empty())
      out += ' ';
    out += "g" + std::to_string((l < 0 ? -l : l) - 1) + (l < 0 ? "^-1" : "");
  }
  return out;
}

namespace {

constexpr Index kNone = std::numeric_limits<Index>::max();

using Column = std::size_t;

Column column_of(Letter l) {
  return l > 0 ? 2 * static_cast<Column>(l - 1) : 2 * static_cast<Column>(-l - 1) + 1;
}
Column inverse_column(Column c) { return c ^ 1U; }

// Working state of one enumeration. Follows the standard Felsch scheme:
// define the first undefined entry, then process the deduction stack by
// scanning every cyclic conjugate of every relator (and inverse) that starts
// with the deduced letter; coincidences are merged with a union-find queue.
class Enumerator {
public:
  Enumerator(const Presentation &pres, std::size_t max_cosets)
      : ncols_(2 * pres.n_generators), max_cosets_(max_cosets), by_first_(ncols_) {
    std::set<std::vector<Column>> conjugates;
    for (const auto &rel : pres.relators) {
      std::vector<Column> w;
      for (Letter l : rel)
        w.push_back(column_of(l));
      std::vector<Column> inv(w.rbegin(), w.rend());
      for (auto &c : inv)
        c = inverse_column(c);
      for (const auto *base : {&w, &inv})
        for (std::size_t shift = 0; shift < base->size(); ++shift) {
          std::vector<Column> rot(base->begin() + static_cast<std::ptrdiff_t>(shift),
                                  base->end());
          rot.insert(rot.end(), base->begin(),
                     base->begin() + static_cast<std::ptrdiff_t>(shift));
          conjugates.insert(std::move(rot));
        }
    }
    for (const auto &w : conjugates)
      by_first_[w.front()].push_back(w);
  }

  void run() {
    new_coset();
    for (Index alpha = 0; alpha < parent_.size(); ++alpha) {
      for (Column x = 0; x < ncols_ && live(alpha); ++x)
        if (entry(alpha, x) == kNone) {
          define(alpha, x);
          process_deductions();
        }
    }
  }

  std::size_t ncols() const { return ncols_; }
  bool live(Index c) const { return parent_[c] == c; }
  Index entry(Index c, Column x) const { return table_[c * ncols_ + x]; }
  std::size_t allocated() const { return parent_.size(); }
  std::size_t coincidences() const { return coincidences_; }
  std::size_t max_live() const { return max_live_; }

private:
  Index &slot(Index c, Column x) { return table_[c * ncols_ + x]; }

  Index new_coset() {
    if (parent_.size() >= max_cosets_)
      throw CosetLimitExceeded(max_cosets_);
    const Index c = parent_.size();
    parent_.push_back(c);
    table_.resize(table_.size() + ncols_, kNone);
    ++live_count_;
    max_live_ = std::max(max_live_, live_count_);
    return c;
  }

  void define(Index alpha, Column x) {
    const Index beta = new_coset();
    slot(alpha, x) = beta;
    slot(beta, inverse_column(x)) = alpha;
    deductions_.emplace_back(alpha, x);
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      const auto [alpha, x] = deductions_.back();
      deductions_.pop_back();
      if (live(alpha))
        for (const auto &w : by_first_[x]) {
          scan(alpha, w);
          if (!live(alpha))
            break;
        }
      if (live(alpha)) {
        const Index beta = entry(alpha, x);
        if (beta != kNone && live(beta))
          for (const auto &w : by_first_[inverse_column(x)]) {
            scan(beta, w);
            if (!live(beta))
              break;
          }
      }
    }
  }

  void scan(Index alpha, const std::vector<Column> &w) {
    const std::size_t r = w.size();
    Index f = alpha;
    std::size_t i = 0;
    while (i < r && entry(f, w[i]) != kNone) {
      f = entry(f, w[i]);
      ++i;
    }
    if (i == r) {
      if (f != alpha)
        coincidence(f, alpha);
      return;
    }
    Index b = alpha;
    std::size_t j = r; // scanning w[j-1] backwards
    while (j > i && entry(b, inverse_column(w[j - 1])) != kNone) {
      b = entry(b, inverse_column(w[j - 1]));
      --j;
    }
    if (j == i) {
      coincidence(f, b);
    } else if (j == i + 1) {
      slot(f, w[i]) = b;
      slot(b, inverse_column(w[i])) = f;
      deductions_.emplace_back(f, w[i]);
    }
  }

  Index rep(Index k) {
    Index root = k;
    while (parent_[root] != root)
      root = parent_[root];
    while (parent_[k] != root) {
      const Index next = parent_[k];
      parent_[k] = root;
      k = next;
    }
    return root;
  }

  void merge(Index k, Index l, std::vector<Index> &queue) {
    const Index a = rep(k), b = rep(l);
    if (a == b)
      return;
    const Index lo = std::min(a, b), hi = std::max(a, b);
    parent_[hi] = lo;
    --live_count_;
    queue.push_back(hi);
  }

  void coincidence(Index alpha, Index beta) {
    ++coincidences_;
    std::vector<Index> queue;
    merge(alpha, beta, queue);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Index gamma = queue[head];
      for (Column x = 0; x < ncols_; ++x) {
        const Index delta = entry(gamma, x);
        if (delta == kNone)
          continue;
        const Column xi = inverse_column(x);
        slot(delta, xi) = kNone;
        const Index mu = rep(gamma), nu = rep(delta);
        if (entry(mu, x) != kNone) {
          merge(nu, entry(mu, x), queue);
        } else if (entry(nu, xi) != kNone) {
          merge(mu, entry(nu, xi), queue);
        } else {
          slot(mu, x) = nu;
          slot(nu, xi) = mu;
          deductions_.emplace_back(mu, x);
        }
      }
    }
  }

  std::size_t ncols_;
  std::size_t max_cosets_;
  std::vector<std::vector<std::vector<Column>>> by_first_;
  std::vector<Index> table_;
  std::vector<Index> parent_;
  std::vector<std::pair<Index, Column>> deductions_;
  std::size_t live_count_ = 0;
  std::size_t max_live_ = 0;
  std::size_t coincidences_ = 0;
};

} // namespace

Index CosetTable::apply(Index coset, Letter letter) const {
  return action[coset][column_of(letter)];
}

Index CosetTable::trace(Index coset, const std::vector<Letter> &word) const {
  for (Letter l : word)
    coset = apply(coset, l);
  return coset;
}

CosetTable todd_coxeter(const Presentation &pres, std::size_t max_cosets) {
  pres.validate();
  if (max_cosets == 0)
    throw CosetLimitExceeded(max_cosets);
  Enumerator en(pres, max_cosets);
  en.run();

  const std::size_t ncols = en.ncols();
  const std::size_t ngen = pres.n_generators;

  // Renumber live cosets breadth-first over positive generators.
  std::vector<Index> renum(en.allocated(), kNone);
  std::vector<Index> order{0};
  std::vector<Index> parent{0}, via{0};
  renum[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (Index g = 0; g < ngen; ++g) {
      const Index next = en.entry(order[head], 2 * g);
      if (next == kNone || !en.live(next))
        throw Error("coset enumeration finished with an incomplete table");
      if (renum[next] == kNone) {
        renum[next] = order.size();
        order.push_back(next);
        parent.push_back(head);
        via.push_back(g);
      }
    }

  CosetTable out;
  out.n_generators = ngen;
  out.cosets_defined = en.allocated();
  out.coincidences = en.coincidences();
  out.max_live = en.max_live();
  out.parent = std::move(parent);
  out.via = std::move(via);
  const std::size_t m = order.size();
  out.action.assign(m, std::vector<Index>(ncols));
  for (Index c = 0; c < m; ++c)
    for (Column x = 0; x < ncols; ++x) {
      const Index target = en.entry(order[c], x);
      if (target == kNone || renum[target] == kNone)
        throw Error("coset enumeration finished with an incomplete table");
      out.action[c][x] = renum[target];
    }
  out.representative_words.resize(m);
  for (Index c = 1; c < m; ++c) {
    out.representative_words[c] = out.representative_words[out.parent[c]];
    out.representative_words[c].push_back(out.via[c]);
  }

  // Verification: every column is a bijection inverse to its partner, every
  // relator closes at every coset.
  for (Column x = 0; x < ncols; ++x)
    for (Index c = 0; c < m; ++c)
      if (out.action[out.action[c][x]][inverse_column(x)] != c)
        throw Error("coset table column is not a bijection");
  for (const auto &rel : pres.relators)
    for (Index c = 0; c < m; ++c)
      if (out.trace(c, rel) != c)
        throw Error("relator " + format_relator(rel) + " does not close at coset " +
                    std::to_string(c));
  return out;
}

} // namespace rackrep
