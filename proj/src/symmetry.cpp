#include "pxg/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "pxg/errors.hpp"

namespace pxg {
namespace {

class Meter {
 public:
  explicit Meter(const SearchBudget& budget) : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  // Returns false once the budget is spent.
  bool charge(std::uint64_t work) {
    checks_ += work;
    if (checks_ > budget_.max_checks) exhausted_ = true;
    if (budget_.time_limit.count() > 0 && (++calls_ & 0xfff) == 0 &&
        std::chrono::steady_clock::now() - start_ > budget_.time_limit) {
      exhausted_ = true;
    }
    return !exhausted_;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t checks() const { return checks_; }

 private:
  const SearchBudget& budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t checks_ = 0;
  std::uint64_t calls_ = 0;
  bool exhausted_ = false;
};

std::size_t degree_of(std::span<const Perm> group) {
  if (group.empty()) throw UsageError("group must contain at least the identity");
  return group.front().degree();
}

std::vector<const Perm*> nontrivial_elements(std::span<const Perm> group) {
  std::vector<const Perm*> out;
  for (const Perm& g : group) {
    if (!is_identity(g)) out.push_back(&g);
  }
  return out;
}

// Calls visit(subset) for each r-subset of {0..order-1} in lexicographic
// order until visit returns true or the meter runs out.
bool for_each_subset(std::size_t order, int r, Meter& meter, const std::function<bool(const std::vector<VertexId>&)>& visit) {
  if (r < 0 || static_cast<std::size_t>(r) > order) return false;
  std::vector<VertexId> subset(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) subset[i] = static_cast<VertexId>(i);
  while (true) {
    if (visit(subset)) return true;
    if (meter.exhausted()) return false;
    int i = r - 1;
    while (i >= 0 && subset[i] == order - static_cast<std::size_t>(r - i)) --i;
    if (i < 0) return false;
    ++subset[i];
    for (int j = i + 1; j < r; ++j) subset[j] = subset[j - 1] + 1;
  }
}

// Searches red sets of size r for a distinguishing 2-coloring.
std::optional<std::vector<VertexId>> find_distinguishing_red_set(const std::vector<const Perm*>& nontrivial,
                                                                 std::size_t order, int r, Meter& meter) {
  std::vector<char> in_red(order, 0);
  std::optional<std::vector<VertexId>> found;
  for_each_subset(order, r, meter, [&](const std::vector<VertexId>& red) {
    for (VertexId v : red) in_red[v] = 1;
    bool distinguishing = true;
    for (const Perm* g : nontrivial) {
      bool preserves = true;
      for (VertexId v : red) {
        if (!in_red[g->image[v]]) {
          preserves = false;
          break;
        }
      }
      if (preserves) {
        distinguishing = false;
        break;
      }
    }
    for (VertexId v : red) in_red[v] = 0;
    meter.charge(nontrivial.size());
    if (distinguishing) found = red;
    return distinguishing;
  });
  return found;
}

// Backtracking over colorings in restricted-growth form (vertex 0 gets color
// 0, each vertex uses at most one color beyond those already used). An
// element whose support lies among the colored vertices and which preserves
// every colored class can never be eliminated, so the branch is cut.
std::optional<Coloring> find_distinguishing_coloring(const std::vector<const Perm*>& nontrivial, std::size_t order,
                                                     std::uint32_t colors, Meter& meter) {
  std::vector<std::vector<const Perm*>> by_last_moved(order);
  std::vector<std::vector<VertexId>> support(nontrivial.size());
  std::map<const Perm*, std::size_t> index;
  for (std::size_t i = 0; i < nontrivial.size(); ++i) {
    const Perm* g = nontrivial[i];
    index[g] = i;
    for (VertexId v = 0; v < order; ++v) {
      if (g->image[v] != v) support[i].push_back(v);
    }
    by_last_moved[support[i].back()].push_back(g);
  }
  std::vector<std::uint32_t> color(order, 0);
  std::function<bool(VertexId, std::uint32_t)> assign = [&](VertexId v, std::uint32_t used) -> bool {
    const std::uint32_t limit = std::min(used + 1, colors);
    for (std::uint32_t c = 0; c < limit; ++c) {
      color[v] = c;
      bool dead = false;
      for (const Perm* g : by_last_moved[v]) {
        bool preserves = true;
        for (VertexId u : support[index[g]]) {
          if (color[g->image[u]] != color[u]) {
            preserves = false;
            break;
          }
        }
        if (preserves) {
          dead = true;
          break;
        }
      }
      if (!meter.charge(by_last_moved[v].size() + 1)) return false;
      if (dead) continue;
      if (v + 1 == order) return true;
      if (assign(v + 1, std::max(used, c + 1))) return true;
      if (meter.exhausted()) return false;
    }
    return false;
  };
  if (order == 0 || !assign(0, 0)) return std::nullopt;
  std::uint32_t used = 0;
  for (auto c : color) used = std::max(used, c + 1);
  return Coloring{color, used};
}

}  // namespace

Coloring Coloring::from_red_set(std::size_t order, std::span<const VertexId> red) {
  Coloring c{std::vector<std::uint32_t>(order, 1), 2};
  for (VertexId v : red) c.color.at(v) = 0;
  return c;
}

std::vector<std::vector<VertexId>> Coloring::classes() const {
  std::vector<std::vector<VertexId>> out(num_colors);
  for (VertexId v = 0; v < color.size(); ++v) out.at(color[v]).push_back(v);
  return out;
}

bool is_determining(std::span<const Perm> group, std::span<const VertexId> set) {
  return is_determining_in(
      group, set, [](const Perm& g, VertexId v) { return g.image[v]; }, [](const Perm& g) { return is_identity(g); });
}

bool is_distinguishing(std::span<const Perm> group, const Coloring& coloring) {
  for (const Perm& g : group) {
    if (g.degree() != coloring.color.size()) throw UsageError("coloring size does not match group degree");
    bool preserves = true;
    for (VertexId v = 0; v < g.degree(); ++v) {
      if (coloring.color[g.image[v]] != coloring.color[v]) {
        preserves = false;
        break;
      }
    }
    if (preserves && !is_identity(g)) return false;
  }
  return true;
}

bool is_distinguishing_red_set(std::span<const Perm> group, std::span<const VertexId> red) {
  return is_distinguishing_red_set_in(
      group, red, degree_of(group), [](const Perm& g, VertexId v) { return g.image[v]; },
      [](const Perm& g) { return is_identity(g); });
}

SubsetSearch det_bruteforce(std::span<const Perm> group, const SearchBudget& budget) {
  const std::size_t order = degree_of(group);
  const auto nontrivial = nontrivial_elements(group);
  Meter meter(budget);
  SubsetSearch out;
  if (nontrivial.empty()) {
    out.value = 0;
    return out;
  }
  const int max_r = static_cast<int>(std::min<std::size_t>(budget.max_subset_size, order));
  for (int r = 1; r <= max_r; ++r) {
    // levels[d] holds the non-identity elements fixing the first d chosen vertices.
    std::vector<std::vector<const Perm*>> levels(static_cast<std::size_t>(r) + 1);
    levels[0] = nontrivial;
    std::vector<VertexId> chosen(static_cast<std::size_t>(r));
    std::function<bool(int, VertexId)> dfs = [&](int depth, VertexId start) -> bool {
      if (depth == r) return levels[depth].empty();
      for (VertexId v = start; v + static_cast<VertexId>(r - depth) <= order; ++v) {
        auto& next = levels[depth + 1];
        next.clear();
        for (const Perm* g : levels[depth]) {
          if (g->image[v] == v) next.push_back(g);
        }
        if (!meter.charge(levels[depth].size() + 1)) return false;
        chosen[depth] = v;
        if (dfs(depth + 1, v + 1)) return true;
        if (meter.exhausted()) return false;
      }
      return false;
    };
    if (dfs(0, 0)) {
      out.value = r;
      out.witness = chosen;
      break;
    }
    if (meter.exhausted()) break;
  }
  out.checks = meter.checks();
  if (!out.value) out.status = SearchStatus::budget_exhausted;
  return out;
}

SubsetSearch cost2_bruteforce(std::span<const Perm> group, const SearchBudget& budget) {
  const std::size_t order = degree_of(group);
  const auto nontrivial = nontrivial_elements(group);
  Meter meter(budget);
  SubsetSearch out;
  const int half = static_cast<int>(order / 2);
  const int max_r = std::min(budget.max_subset_size, half);
  for (int r = 1; r <= max_r; ++r) {
    if (auto red = find_distinguishing_red_set(nontrivial, order, r, meter)) {
      out.value = r;
      out.witness = *red;
      break;
    }
    if (meter.exhausted()) break;
  }
  out.checks = meter.checks();
  if (!out.value && (meter.exhausted() || max_r < half)) out.status = SearchStatus::budget_exhausted;
  return out;
}

DistSearch dist_bruteforce(std::span<const Perm> group, const SearchBudget& budget) {
  const std::size_t order = degree_of(group);
  const auto nontrivial = nontrivial_elements(group);
  Meter meter(budget);
  DistSearch out;
  if (nontrivial.empty()) {
    out.value = 1;
    out.witness = Coloring{std::vector<std::uint32_t>(order, 0), 1};
    return out;
  }
  // Two colors: red sets by ascending size settle it when the sizes up to
  // |V|/2 can all be searched.
  const int half = static_cast<int>(order / 2);
  const int max_r = std::min(budget.max_subset_size, half);
  for (int r = 1; r <= max_r; ++r) {
    if (auto red = find_distinguishing_red_set(nontrivial, order, r, meter)) {
      out.value = 2;
      out.witness = Coloring::from_red_set(order, *red);
      out.checks = meter.checks();
      return out;
    }
    if (meter.exhausted()) break;
  }
  std::uint32_t first = 3;
  if (meter.exhausted()) {
    out.status = SearchStatus::budget_exhausted;
    out.checks = meter.checks();
    return out;
  }
  if (max_r < half) first = 2;
  for (std::uint32_t c = first; c <= static_cast<std::uint32_t>(budget.max_colors); ++c) {
    if (auto coloring = find_distinguishing_coloring(nontrivial, order, c, meter)) {
      out.value = static_cast<int>(c);
      out.witness = *coloring;
      out.checks = meter.checks();
      return out;
    }
    if (meter.exhausted()) break;
  }
  out.status = SearchStatus::budget_exhausted;
  out.checks = meter.checks();
  return out;
}

namespace {

using Colors = std::vector<std::uint32_t>;

// Refines two colorings in lockstep to their coarsest equitable refinements.
// Returns false as soon as the two sides stop being compatible. New colors
// are ranks of (old color, sorted neighbor colors) signatures, computed from
// a shared table so matching cells keep matching indices.
bool refine_pair(const Graph& g, Colors& left, Colors& right, std::size_t& cells) {
  const std::size_t order = g.order();
  using Signature = std::vector<std::uint32_t>;
  std::vector<Signature> sig_left(order), sig_right(order);
  auto signature = [&](const Colors& colors, VertexId v, Signature& out) {
    out.clear();
    out.push_back(colors[v]);
    for (VertexId w : g.neighbors(v)) out.push_back(colors[w]);
    std::sort(out.begin() + 1, out.end());
  };
  while (true) {
    for (VertexId v = 0; v < order; ++v) {
      signature(left, v, sig_left[v]);
      signature(right, v, sig_right[v]);
    }
    std::vector<Signature> sorted_left = sig_left;
    std::vector<Signature> sorted_right = sig_right;
    std::sort(sorted_left.begin(), sorted_left.end());
    std::sort(sorted_right.begin(), sorted_right.end());
    if (sorted_left != sorted_right) return false;
    sorted_left.erase(std::unique(sorted_left.begin(), sorted_left.end()), sorted_left.end());
    for (VertexId v = 0; v < order; ++v) {
      left[v] = static_cast<std::uint32_t>(
          std::lower_bound(sorted_left.begin(), sorted_left.end(), sig_left[v]) - sorted_left.begin());
      right[v] = static_cast<std::uint32_t>(
          std::lower_bound(sorted_left.begin(), sorted_left.end(), sig_right[v]) - sorted_left.begin());
    }
    if (sorted_left.size() == cells) return true;
    cells = sorted_left.size();
  }
}

}  // namespace

AutomorphismSearch generic_automorphisms(const Graph& g, const SearchBudget& budget) {
  const std::size_t order = g.order();
  if (order > budget.generic_vertex_cap) {
    throw CapacityError("generic automorphism search is capped at " + std::to_string(budget.generic_vertex_cap) +
                        " vertices");
  }
  AutomorphismSearch out;
  if (order == 0) {
    out.group.push_back(Perm{});
    return out;
  }
  Meter meter(budget);
  std::function<void(Colors, Colors, std::size_t)> search = [&](Colors left, Colors right, std::size_t cells) {
    if (!refine_pair(g, left, right, cells)) return;
    if (++out.nodes > budget.node_limit || !meter.charge(order)) {
      out.complete = false;
      return;
    }
    if (cells == order) {
      Perm p;
      p.image.resize(order);
      std::vector<VertexId> by_color(order);
      for (VertexId w = 0; w < order; ++w) by_color[right[w]] = w;
      for (VertexId v = 0; v < order; ++v) p.image[v] = by_color[left[v]];
      if (is_automorphism(g, p)) out.group.push_back(std::move(p));
      return;
    }
    // Target cell: the smallest color index with more than one vertex.
    std::vector<std::size_t> count(cells, 0);
    for (auto c : left) ++count[c];
    std::uint32_t target = 0;
    while (count[target] < 2) ++target;
    VertexId pivot = 0;
    while (left[pivot] != target) ++pivot;
    for (VertexId w = 0; w < order; ++w) {
      if (right[w] != target) continue;
      Colors l = left;
      Colors r = right;
      l[pivot] = static_cast<std::uint32_t>(cells);
      r[w] = static_cast<std::uint32_t>(cells);
      search(std::move(l), std::move(r), cells + 1);
      if (!out.complete) return;
    }
  };
  search(Colors(order, 0), Colors(order, 0), 1);
  std::sort(out.group.begin(), out.group.end());
  return out;
}

std::optional<Perm> interchangeable_bruteforce(std::span<const Perm> group, VertexId u, VertexId v) {
  if (u == v) throw UsageError("interchangeability needs two distinct vertices");
  for (const Perm& g : group) {
    if (g.image.at(u) == v && g.image.at(v) == u) return g;
  }
  return std::nullopt;
}

}  // namespace pxg
