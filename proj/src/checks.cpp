#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "pxg/campaign.hpp"
#include "pxg/errors.hpp"
#include "pxg/formulas.hpp"
#include "pxg/px_group.hpp"
#include "pxg/twins.hpp"
#include "pxg/witnesses.hpp"

namespace pxg {
namespace {

constexpr std::uint64_t kSeed = 0x5eed'2024'0613ULL;
constexpr int kSamples = 1000;

std::string px(const PxParams& p) { return "PX(" + std::to_string(p.n) + "," + std::to_string(p.k) + ")"; }

VerificationReport report(std::string claim, std::string method, Json value, bool ok,
                          std::vector<std::string> witness = {}) {
  return VerificationReport{std::move(claim), std::move(method), std::move(value), std::move(witness), 0,
                            ok ? Status::pass : Status::fail};
}

Json value_of(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

std::vector<PxParams> scope(const Config& config, const std::optional<PxParams>& only) {
  if (only) return {*only};
  return grid(config);
}

bool in_scope(const Config& config, const std::optional<PxParams>& only, PxParams p) {
  auto s = scope(config, only);
  return std::find(s.begin(), s.end(), p) != s.end();
}

Perm perm_of(const PxGraph& g, const Automorphism& a) { return to_perm(g, a); }

// ---------------------------------------------------------------- table

void table_claims(std::vector<Claim>& out, const PxParams& p) {
  out.push_back({"det " + px(p), [p](const Config& c) {
    const PxGraph g(p);
    const auto search = det_bruteforce(full_aut(g, c.budget), c.budget);
    const int expected = *det_formula(p);
    auto r = report("det(" + px(p) + ") = " + std::to_string(expected), "bruteforce", value_of(search.value),
                    search.value == expected, vertex_labels(g, search.witness));
    if (!search.value) r.status = Status::budget;
    return r;
  }});
  if (p.k >= 2) {
    out.push_back({"cost " + px(p), [p](const Config& c) {
      const PxGraph g(p);
      const auto group = full_aut(g, c.budget);
      const auto search = cost2_bruteforce(group, c.budget);
      const int expected = *cost_formula(p);
      // A distinguishing red set is also determining.
      const bool implied = !search.value || is_determining(group, search.witness);
      auto r = report("cost(" + px(p) + ") = " + std::to_string(expected), "bruteforce", value_of(search.value),
                      search.value == expected && implied, vertex_labels(g, search.witness));
      if (!search.value && search.status == SearchStatus::budget_exhausted) r.status = Status::budget;
      return r;
    }});
  }
  out.push_back({"dist " + px(p), [p](const Config& c) {
    const PxGraph g(p);
    const auto search = dist_bruteforce(full_aut(g, c.budget), c.budget);
    const int expected = *dist_formula(p);
    std::vector<std::string> witness;
    if (search.value) {
      auto classes = search.witness.classes();
      auto smallest = *std::min_element(classes.begin(), classes.end(),
                                        [](const auto& a, const auto& b) { return a.size() < b.size(); });
      witness = vertex_labels(g, smallest);
    }
    auto r = report("dist(" + px(p) + ") = " + std::to_string(expected), "bruteforce", value_of(search.value),
                    search.value == expected, witness);
    if (!search.value) r.status = Status::budget;
    return r;
  }});
  out.push_back({"det witness " + px(p), [p](const Config& c) {
    const PxGraph g(p);
    const auto w = det_witness(p, c.budget);
    const bool ok = static_cast<int>(w.size()) == *det_formula(p) && is_determining(full_aut(g, c.budget), g.ids(w));
    return report("det_witness(" + px(p) + ") is determining of size det", "witness", static_cast<int>(w.size()), ok,
                  vertex_labels(w));
  }});
  if (p.k >= 2) {
    out.push_back({"cost witness " + px(p), [p](const Config& c) {
      const PxGraph g(p);
      const auto w = cost_witness(p, c.budget);
      const bool ok = static_cast<int>(w.size()) == *cost_formula(p) &&
                      is_distinguishing_red_set(full_aut(g, c.budget), g.ids(w));
      return report("cost_witness(" + px(p) + ") is distinguishing of size cost", "witness",
                    static_cast<int>(w.size()), ok, vertex_labels(w));
    }});
  }
  out.push_back({"dist witness " + px(p), [p](const Config& c) {
    const PxGraph g(p);
    const Coloring w = dist_witness(p, c.budget);
    const bool ok = static_cast<int>(w.num_colors) == *dist_formula(p) && is_distinguishing(full_aut(g, c.budget), w);
    return report("dist_witness(" + px(p) + ") is distinguishing with dist colors", "witness",
                  static_cast<int>(w.num_colors), ok);
  }});
}

// ---------------------------------------------------------------- aut

std::optional<std::size_t> known_order(const PxParams& p) {
  if (p == PxParams{4, 1}) return 1152;
  if (p == PxParams{4, 2}) return 384;
  if (p == PxParams{4, 3}) return 256;
  return std::nullopt;
}

bool relations_hold(const PxParams& p) {
  const PxGraph g(p);
  const Perm id = identity_perm(g.order());
  const Perm r = perm_of(g, rho(p));
  const Perm ri = inverse(r);
  const Perm m = perm_of(g, mu(p));
  std::vector<Perm> t;
  for (int s = 0; s < p.n; ++s) t.push_back(perm_of(g, tau_s(p, s)));
  bool ok = compose(m, m) == id && compose(m, compose(r, m)) == ri;
  for (int s = 0; s < p.n; ++s) {
    ok = ok && compose(t[s], t[s]) == id;
    for (int u = 0; u < p.n; ++u) ok = ok && compose(t[s], t[u]) == compose(t[u], t[s]);
    // rho^-1 tau_s rho = tau_{s+1} with the word read left to right.
    ok = ok && compose(r, compose(t[s], ri)) == t[mod(s + 1, p.n)];
    ok = ok && compose(ri, compose(t[s], r)) == t[mod(s - 1, p.n)];
    ok = ok && compose(m, compose(t[s], m)) == t[mod(p.k - 1 - s, p.n)];
  }
  return ok;
}

Automorphism random_element(const PxParams& p, std::mt19937_64& rng) {
  Automorphism a = algebraic_element(p, std::uniform_int_distribution<std::uint64_t>(0, algebraic_order(p) - 1)(rng));
  if (has_xi(p)) a.xi = (rng() & 1) != 0;
  return a;
}

struct XiSwapEntry {
  std::string_view v;
  std::vector<std::pair<char, int>> word;  // ('t', s) tau_s, ('r', s) rho^s, ('m', s) mu_s
};

const std::vector<XiSwapEntry>& xi_swap_words() {
  static const std::vector<XiSwapEntry> entries{
      {"1:010", {{'t', 2}, {'r', 1}}},
      {"1:011", {{'t', 2}, {'t', 3}, {'m', 3}}},
      {"1:100", {{'t', 0}, {'t', 1}, {'m', 3}}},
      {"1:101", {{'t', 0}, {'t', 1}, {'t', 3}, {'r', 1}}},
      {"3:010", {{'t', 0}, {'t', 2}, {'m', 1}}},
      {"3:110", {{'t', 0}, {'t', 2}, {'t', 3}, {'r', 3}}},
      {"3:001", {{'t', 1}, {'r', 3}}},
      {"3:101", {{'t', 1}, {'t', 3}, {'m', 1}}},
  };
  return entries;
}

Automorphism word_element(const PxParams& p, const std::vector<std::pair<char, int>>& word) {
  Automorphism a = identity_element();
  for (auto [g, s] : word) {
    Automorphism next = g == 't' ? tau_s(p, s) : g == 'r' ? rho(p, s) : mu_s(p, s);
    a = compose(p, a, next);
  }
  return a;
}

std::string word_text(const std::vector<std::pair<char, int>>& word) {
  std::string out;
  for (auto [g, s] : word) {
    out += g == 't' ? "tau_" : g == 'r' ? "rho^" : "mu_";
    out += std::to_string(s);
    out += ' ';
  }
  out.pop_back();
  return out;
}

void aut_claims(std::vector<Claim>& out, const Config& config, const std::optional<PxParams>& only) {
  for (const PxParams& p : scope(config, only)) {
    out.push_back({"faithful " + px(p), [p](const Config&) {
      const PxGraph g(p);
      auto perms = algebraic_perms(g);
      perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
      const std::uint64_t expected = algebraic_order(p);
      return report("|PermTables(A(" + px(p) + "))| = " + std::to_string(expected), "bruteforce", perms.size(),
                    perms.size() == expected);
    }});
    const std::size_t order = static_cast<std::size_t>(p.n) << p.k;
    if (order <= 56 || (only && order <= config.budget.generic_vertex_cap)) {
      out.push_back({"generic " + px(p), [p](const Config& c) {
        const PxGraph g(p);
        const auto search = generic_automorphisms(g.graph(), c.budget);
        if (!search.complete) throw CapacityError("generic search budget exhausted");
        const auto full = full_aut(g, c.budget);
        bool ok = search.group == full && is_closed_under_composition(search.group);
        if (auto expected = known_order(p)) ok = ok && full.size() == *expected;
        return report("generic_automorphisms(" + px(p) + ") = full_aut(" + px(p) + ")", "bruteforce",
                      search.group.size(), ok);
      }});
    }
    out.push_back({"relations " + px(p), [p](const Config&) {
      return report("generator relations hold pointwise on " + px(p), "bruteforce", p.n, relations_hold(p));
    }});
    out.push_back({"compose " + px(p), [p](const Config&) {
      const PxGraph g(p);
      std::mt19937_64 rng(kSeed + static_cast<std::uint64_t>(p.n * 64 + p.k));
      int agree = 0;
      for (int i = 0; i < kSamples; ++i) {
        const Automorphism a = random_element(p, rng);
        const Automorphism b = random_element(p, rng);
        const bool ok = to_perm(g, compose(p, a, b)) == compose(to_perm(g, a), to_perm(g, b)) &&
                        to_perm(g, inverse(p, a)) == inverse(to_perm(g, a));
        agree += ok ? 1 : 0;
      }
      return report("compose and inverse agree with permutation tables on " + px(p), "bruteforce", agree,
                    agree == kSamples);
    }});
  }
  const PxParams xp{4, 3};
  if (!in_scope(config, only, xp)) return;
  out.push_back({"xi automorphism", [xp](const Config&) {
    const PxGraph g(xp);
    const Perm x = to_perm(g, xi_element(xp));
    const auto a = algebraic_perms(g);
    const bool outside = !std::binary_search(a.begin(), a.end(), x);
    return report("xi is an automorphism of PX(4,3) outside A", "bruteforce", is_automorphism(g.graph(), x) && outside,
                  is_automorphism(g.graph(), x) && outside);
  }});
  out.push_back({"xi fixed points", [xp](const Config&) {
    const PxGraph g(xp);
    const Perm x = to_perm(g, xi_element(xp));
    std::vector<VertexId> fixed;
    for (VertexId v = 0; v < g.order(); ++v) {
      if (x(v) == v) fixed.push_back(v);
    }
    const std::vector<std::string> expected{"0:000", "0:111", "1:001", "1:110", "2:011", "2:100", "3:000", "3:111"};
    auto labels = vertex_labels(g, fixed);
    return report("xi fixes exactly the vertices missing from its 2-cycle table", "bruteforce", labels.size(),
                  labels == expected, labels);
  }});
  out.push_back({"xi half-fibres", [xp](const Config&) {
    const PxGraph g(xp);
    const Automorphism x = xi_element(xp);
    // Blocks: (fibre, palindromic?). The image of each block must be a block.
    std::map<std::pair<int, bool>, std::set<std::pair<int, bool>>> images;
    for (VertexId v = 0; v < g.order(); ++v) {
      const Vertex u = g.vertex(v);
      const Vertex w = apply(xp, x, u);
      images[{u.fibre, is_palindrome(u.word)}].insert({w.fibre, is_palindrome(w.word)});
    }
    bool ok = true;
    std::set<std::pair<int, bool>> targets;
    for (const auto& [block, image] : images) {
      ok = ok && image.size() == 1;
      targets.insert(*image.begin());
    }
    ok = ok && targets.size() == images.size();
    return report("palindromic half-fibres form a block system for xi", "bruteforce", images.size(), ok);
  }});
  for (const auto& entry : xi_swap_words()) {
    out.push_back({"xi swap " + std::string(entry.v), [xp, &entry](const Config&) {
      const Vertex z{0, BitWord::zeros(3)};
      const Vertex v = parse_vertex(entry.v);
      const Automorphism alpha = word_element(xp, entry.word);
      const Automorphism ax = compose(xp, alpha, xi_element(xp));
      return report("(" + word_text(entry.word) + ") xi swaps 0:000 and " + std::string(entry.v), "witness",
                    to_string(xp, ax), swaps(xp, ax, z, v));
    }});
  }
  out.push_back({"xi index two", [xp](const Config& c) {
    const PxGraph g(xp);
    const auto full = full_aut(g, c.budget);
    return report("|Aut(PX(4,3))| = 2|A|", "bruteforce", full.size(), full.size() == 2 * algebraic_order(xp));
  }});
  if (!only) {
    out.push_back({"fixed fibre parity", [](const Config&) {
      bool ok = true;
      int cases = 0;
      for (int n = 3; n <= 12; ++n) {
        for (int k = 1; k < n; ++k) {
          for (int s = 0; s < n; ++s) {
            const auto fixed = fixed_fibres(s, n, k);
            ++cases;
            if (n % 2 == 0) {
              ok = ok && fixed.empty() == (mod(s - k, 2) == 0);
              ok = ok && (fixed.empty() || fixed.size() == 2);
            } else {
              ok = ok && fixed.size() == 1;
            }
          }
        }
      }
      return report("mu_s fixes no fibre iff n even and s = k mod 2", "bruteforce", cases, ok);
    }});
  }
}

// ---------------------------------------------------------------- phi

void phi_claims(std::vector<Claim>& out) {
  out.push_back({"phi isomorphism", [](const Config&) {
    const PxGraph g(PxParams{4, 2});
    const Graph q = hypercube_graph(4);
    Perm map;
    for (std::uint32_t x = 0; x < 16; ++x) map.image.push_back(g.id(phi(BitWord(4, x))));
    bool ok = is_bijection(map);
    int mapped = 0;
    for (const auto& [a, b] : q.edges()) {
      if (g.graph().adjacent(map(a), map(b))) ++mapped;
    }
    ok = ok && mapped == 32 && q.size() == 32 && g.graph().size() == 32;
    return report("phi maps Q4 bijectively onto PX(4,2) and all 32 edges onto edges", "bruteforce", mapped, ok);
  }});
  out.push_back({"phi examples", [](const Config&) {
    const bool ok = to_string(phi(BitWord::parse("0000"))) == "2:00" && to_string(phi(BitWord::parse("1000"))) == "1:00";
    return report("phi(0000) = 2:00 and phi(1000) = 1:00", "formula", ok, ok);
  }});
}

// ---------------------------------------------------------------- twins

bool is_cycle(const Graph& g, std::size_t n) {
  if (g.order() != n || g.size() != n || !is_connected(g)) return false;
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

void twin_claims(std::vector<Claim>& out, const Config& config, const std::optional<PxParams>& only) {
  for (const PxParams& p : scope(config, only)) {
    out.push_back({"twins " + px(p), [p](const Config&) {
      const PxGraph g(p);
      const TwinPartition t = twin_classes(g.graph());
      std::vector<std::vector<VertexId>> expected;
      if (p.k >= 2) {
        for (VertexId v = 0; v < g.order(); ++v) expected.push_back({v});
      } else if (p.n == 4) {
        expected = {{0, 1, 4, 5}, {2, 3, 6, 7}};
      } else {
        for (VertexId i = 0; i < static_cast<VertexId>(p.n); ++i) expected.push_back({2 * i, 2 * i + 1});
      }
      bool ok = t.classes == expected;
      for (const auto& c : t.classes) {
        for (std::size_t a = 0; a + 1 < c.size(); ++a) {
          ok = ok && is_automorphism(g.graph(), transposition(g.order(), c[a], c[a + 1]));
        }
      }
      if (p.k == 1) {
        const QuotientGraph q = twin_quotient(g.graph(), t);
        ok = ok && (p.n == 4 ? q.graph.order() == 2 && q.graph.size() == 1 : is_cycle(q.graph, p.n));
      }
      return report("twin classes of " + px(p) + " are fibres, antipodal unions or singletons", "bruteforce", t.classes.size(), ok);
    }});
  }
  if (only) return;
  out.push_back({"cycle dist", [](const Config& c) {
    bool ok = true;
    Json values = Json::array();
    for (int n = 3; n <= 10; ++n) {
      const Graph cn = cycle_graph(static_cast<std::size_t>(n));
      const auto aut = generic_automorphisms(cn, c.budget);
      const auto d = dist_bruteforce(aut.group, c.budget);
      values.push_back(value_of(d.value));
      ok = ok && aut.group.size() == static_cast<std::size_t>(2 * n) && d.value == cycle_dist(n);
    }
    return report("cycle_dist(n) matches brute force for 3 <= n <= 10", "bruteforce", values, ok);
  }});
  out.push_back({"dist transfer", [](const Config&) {
    bool ok = dist_from_quotient(4, 2) == 5;
    for (int n = 3; n <= 12; ++n) {
      if (n != 4) ok = ok && dist_from_quotient(2, cycle_dist(n)) == 3;
    }
    return report("dist_from_quotient gives 3 for PX(n,1), n != 4, and 5 for PX(4,1)", "formula", ok, ok);
  }});
}

// ---------------------------------------------------------------- interchange

std::vector<PxParams> interchange_instances() { return {{5, 2}, {5, 3}, {6, 2}, {6, 3}, {7, 2}}; }

void interchange_claims(std::vector<Claim>& out, const Config& config, const std::optional<PxParams>& only) {
  const auto instances = only ? std::vector<PxParams>{*only} : interchange_instances();
  for (const PxParams& p : instances) {
    out.push_back({"predicate " + px(p), [p](const Config&) {
      check_group_params(p);
      const PxGraph g(p);
      const auto group = algebraic_perms(g);
      std::size_t pairs = 0;
      std::vector<std::string> mismatch;
      for (VertexId a = 0; a < g.order(); ++a) {
        for (VertexId b = 0; b < g.order(); ++b) {
          if (a == b) continue;
          ++pairs;
          const Vertex u = g.vertex(a);
          const Vertex v = g.vertex(b);
          const bool predicted = interchangeable_predicate(p, u, v);
          const bool found = interchangeable_bruteforce(group, a, b).has_value();
          bool ok = predicted == found;
          if (ok && predicted) ok = swaps(p, interchange_witness(p, u, v), u, v);
          if (!ok && mismatch.empty()) mismatch = {to_string(u), to_string(v)};
        }
      }
      return report("interchangeable_predicate = brute force over A on " + px(p), "bruteforce", pairs,
                    mismatch.empty(), mismatch);
    }});
  }
  for (const PxParams& p : scope(config, only)) {
    out.push_back({"z agreement " + px(p), [p](const Config&) {
      const PxGraph g(p);
      const Vertex z{0, BitWord::zeros(p.k)};
      bool ok = true;
      for (VertexId v = 1; v < g.order(); ++v) {
        ok = ok && z_interchangeable(p, g.vertex(v)) == interchangeable_predicate(p, z, g.vertex(v));
      }
      return report("z_interchangeable agrees with the pair predicate on " + px(p), "bruteforce", g.order() - 1, ok);
    }});
  }
  if (only) return;
  out.push_back({"pair 5,3", [](const Config&) {
    const PxParams p{5, 3};
    const PxGraph g(p);
    const Vertex u = parse_vertex("0:101");
    const Vertex v = parse_vertex("1:001");
    const bool predicted = interchangeable_predicate(p, u, v);
    const bool found = interchangeable_bruteforce(algebraic_perms(g), g.id(u), g.id(v)).has_value();
    return report("0:101 and 1:001 are not interchangeable in PX(5,3)", "bruteforce", predicted || found,
                  !predicted && !found);
  }});
  out.push_back({"pair 10,3", [](const Config&) {
    const PxParams p{10, 3};
    const Vertex u = parse_vertex("0:000");
    const Vertex v = parse_vertex("5:000");
    const auto clauses = satisfied_clauses(p, u, v);
    const Automorphism rot = interchange_witness(p, u, v, InterchangeClause::antipodal_rotation);
    const Automorphism ref = interchange_witness(p, u, v, InterchangeClause::reflection);
    const Automorphism chosen = interchange_witness(p, u, v);
    bool rotation_found = false;
    bool reflection_found = false;
    for (const Automorphism& a : enumerate_A(p)) {
      if (swaps(p, a, u, v)) (a.delta.reflect ? reflection_found : rotation_found) = true;
    }
    const bool ok = clauses == std::vector<InterchangeClause>{InterchangeClause::reflection,
                                                             InterchangeClause::antipodal_rotation} &&
                    swaps(p, rot, u, v) && swaps(p, ref, u, v) && chosen == rho(p, 5) && rotation_found &&
                    reflection_found;
    return report("0:000 and 5:000 in PX(10,3) swap by a rotation and by a reflection", "witness",
                  Json::array({to_string(p, rot), to_string(p, ref)}), ok);
  }});
  out.push_back({"pairs 3,2", [](const Config&) {
    const PxParams p{3, 2};
    const PxGraph g(p);
    bool ok = true;
    for (VertexId a = 0; a < g.order(); ++a) {
      for (VertexId b = 0; b < g.order(); ++b) {
        if (a != b) ok = ok && interchangeable_predicate(p, g.vertex(a), g.vertex(b));
      }
    }
    return report("any two distinct vertices of PX(3,2) are interchangeable", "bruteforce", ok, ok);
  }});
  out.push_back({"starred 4,3", [](const Config& c) {
    const PxParams p{4, 3};
    const PxGraph g(p);
    const auto full = full_aut(g, c.budget);
    const Vertex z{0, BitWord::zeros(3)};
    std::vector<std::string> excluded;
    bool ok = true;
    for (VertexId v = 1; v < g.order(); ++v) {
      const Vertex w = g.vertex(v);
      if (z_interchangeable(p, w)) continue;
      excluded.push_back(to_string(w));
      ok = ok && interchangeable_bruteforce(full, g.id(z), v).has_value();
    }
    const std::vector<std::string> expected{"1:010", "1:011", "1:100", "1:101", "3:001", "3:010", "3:101", "3:110"};
    ok = ok && excluded == expected;
    return report("vertices of PX(4,3) not swappable with 0:000 in A are swappable in Aut", "bruteforce",
                  excluded.size(), ok, excluded);
  }});
}

// ---------------------------------------------------------------- scale

void scale_claims(std::vector<Claim>& out) {
  out.push_back({"det witness 20,5", [](const Config& c) {
    const PxParams p{20, 5};
    const PxGraph g(p);
    const auto w = det_witness(p, c.budget);
    const bool ok = w.size() == 4 && verify_determining(p, g.ids(w), c.budget);
    return report("det_witness(PX(20,5)) of size 4 is determining over A", "witness", w.size(), ok, vertex_labels(w));
  }});
  out.push_back({"cost witness 13,4", [](const Config& c) {
    const PxParams p{13, 4};
    const PxGraph g(p);
    const auto w = cost_witness(p, c.budget);
    const auto ids = g.ids(w);
    const bool ok = w.size() == 4 && verify_distinguishing(p, Coloring::from_red_set(g.order(), ids), c.budget);
    return report("cost_witness(PX(13,4)) of size 4 is distinguishing over A", "witness", w.size(), ok,
                  vertex_labels(w));
  }});
  out.push_back({"upper bound 13,4", [](const Config& c) {
    const PxParams p{13, 4};
    const PxGraph g(p);
    const auto w = upper_bound_red_set(p);
    const bool ok = w.size() == 5 && verify_distinguishing(p, Coloring::from_red_set(g.order(), g.ids(w)), c.budget);
    return report("the size-5 red set of PX(13,4) is distinguishing over A", "witness", w.size(), ok,
                  vertex_labels(w));
  }});
}

// ---------------------------------------------------------------- properties

bool odd_fixed_set_holds(const PxParams& p, TauWord tau, int i, std::uint64_t subset) {
  const std::uint32_t f = flip_mask(p, tau, i);
  const std::uint32_t size = 1u << p.k;
  std::uint64_t image = 0;
  for (std::uint32_t x = 0; x < size; ++x) {
    if ((subset >> x) & 1u) image |= std::uint64_t{1} << (x ^ f);
  }
  const bool invariant = image == subset;
  const bool odd = std::popcount(subset) % 2 == 1;
  return !(invariant && odd) || f == 0;
}

void property_claims(std::vector<Claim>& out) {
  out.push_back({"odd fixed set", [](const Config&) {
    std::uint64_t cases = 0;
    bool ok = true;
    for (int n = 3; n <= 6; ++n) {
      for (int k = 1; k <= std::min(3, n - 1); ++k) {
        const PxParams p{n, k};
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
          for (int i = 0; i < n; ++i) {
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << (1u << k)); ++s) {
              ++cases;
              ok = ok && odd_fixed_set_holds(p, TauWord{mask}, i, s);
            }
          }
        }
      }
    }
    std::mt19937_64 rng(kSeed);
    for (int t = 0; t < kSamples; ++t) {
      const int n = std::uniform_int_distribution<int>(7, 16)(rng);
      const int k = std::uniform_int_distribution<int>(1, std::min(5, n - 1))(rng);
      const PxParams p{n, k};
      const TauWord tau{rng() & ((std::uint64_t{1} << n) - 1)};
      const int i = std::uniform_int_distribution<int>(0, n - 1)(rng);
      const std::uint32_t size = 1u << k;
      std::uint64_t s = rng() & (size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1);
      if (t % 2 == 1) {
        // Close under the flip so the set is invariant.
        const std::uint32_t f = flip_mask(p, tau, i);
        std::uint64_t closed = s;
        for (std::uint32_t x = 0; x < size; ++x) {
          if ((s >> x) & 1u) closed |= std::uint64_t{1} << (x ^ f);
        }
        s = closed;
      }
      ++cases;
      ok = ok && odd_fixed_set_holds(p, tau, i, s);
    }
    return report("an odd tau-invariant subset of a fibre forces tau to act trivially there", "bruteforce", cases,
                  ok);
  }});
  out.push_back({"block system", [](const Config& c) {
    std::uint64_t cases = 0;
    bool ok = true;
    auto check = [&](const PxParams& p, const PxGraph& g, const Automorphism& a, int i) {
      ++cases;
      const int target = induced_fibre_action(a).act(i, p.n);
      std::vector<VertexId> image;
      for (const Vertex& v : g.fibre(i)) image.push_back(g.id(apply(p, a, v)));
      std::sort(image.begin(), image.end());
      const auto expected = g.ids(g.fibre(target));
      ok = ok && image == expected;
    };
    for (const PxParams& p : grid(c)) {
      if (p.n > 5) continue;
      const PxGraph g(p);
      for (const Automorphism& a : enumerate_A(p)) {
        for (int i = 0; i < p.n; ++i) check(p, g, a, i);
      }
    }
    std::mt19937_64 rng(kSeed + 1);
    for (int t = 0; t < kSamples; ++t) {
      const int n = std::uniform_int_distribution<int>(6, 16)(rng);
      const int k = std::uniform_int_distribution<int>(1, std::min(4, n - 1))(rng);
      const PxParams p{n, k};
      const PxGraph g(p);
      check(p, g, random_element(p, rng), std::uniform_int_distribution<int>(0, n - 1)(rng));
    }
    return report("fibres form a block system for A with the induced dihedral action", "bruteforce", cases, ok);
  }});
  out.push_back({"det monotone", [](const Config& c) {
    std::uint64_t cases = 0;
    bool ok = true;
    // Exhaustive on PX(3,1) and PX(3,2).
    for (const PxParams p : {PxParams{3, 1}, PxParams{3, 2}}) {
      const PxGraph g(p);
      const auto group = full_aut(g, c.budget);
      const auto order = static_cast<std::uint32_t>(g.order());
      std::vector<char> det(std::size_t{1} << order);
      for (std::uint32_t s = 0; s < det.size(); ++s) {
        std::vector<VertexId> set;
        for (VertexId v = 0; v < order; ++v) {
          if ((s >> v) & 1u) set.push_back(v);
        }
        det[s] = is_determining(group, set);
      }
      for (std::uint32_t s = 0; s < det.size(); ++s) {
        for (VertexId v = 0; v < order; ++v) {
          ++cases;
          ok = ok && (!det[s] || det[s | (1u << v)]);
        }
      }
    }
    std::vector<PxParams> pool;
    for (const PxParams& p : grid(c)) {
      if ((static_cast<std::size_t>(p.n) << p.k) <= 48) pool.push_back(p);
    }
    std::map<PxParams, PermGroup> groups;
    for (const PxParams& p : pool) groups[p] = full_aut(PxGraph(p), c.budget);
    std::mt19937_64 rng(kSeed + 2);
    for (int t = 0; t < kSamples; ++t) {
      const PxParams p = pool[rng() % pool.size()];
      const PxGraph g(p);
      const auto& group = groups[p];
      std::vector<VertexId> set = t % 2 == 0 ? g.ids(det_witness(p, c.budget)) : std::vector<VertexId>{};
      const auto extra = std::uniform_int_distribution<std::size_t>(0, g.order() / 2)(rng);
      for (std::size_t e = 0; e < extra; ++e) set.push_back(static_cast<VertexId>(rng() % g.order()));
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      const bool before = is_determining(group, set);
      set.push_back(static_cast<VertexId>(rng() % g.order()));
      ++cases;
      ok = ok && (!before || is_determining(group, set));
    }
    return report("supersets of determining sets are determining", "bruteforce", cases, ok);
  }});
  out.push_back({"dist monotone", [](const Config& c) {
    std::uint64_t cases = 0;
    bool ok = true;
    {
      const PxParams p{3, 2};
      const PxGraph g(p);
      const auto group = full_aut(g, c.budget);
      const auto order = static_cast<std::uint32_t>(g.order());
      for (std::uint32_t s = 0; s < (1u << order); ++s) {
        Coloring col{std::vector<std::uint32_t>(order), 2};
        for (VertexId v = 0; v < order; ++v) col.color[v] = (s >> v) & 1u;
        if (!is_distinguishing(group, col)) continue;
        for (VertexId v = 0; v < order; ++v) {
          Coloring finer = col;
          finer.color[v] = 2;
          finer.num_colors = 3;
          ++cases;
          ok = ok && is_distinguishing(group, finer);
        }
      }
    }
    std::vector<PxParams> pool;
    for (const PxParams& p : grid(c)) {
      if ((static_cast<std::size_t>(p.n) << p.k) <= 48) pool.push_back(p);
    }
    std::map<PxParams, PermGroup> groups;
    std::map<PxParams, Coloring> bases;
    for (const PxParams& p : pool) {
      groups[p] = full_aut(PxGraph(p), c.budget);
      bases[p] = dist_witness(p, c.budget);
    }
    std::mt19937_64 rng(kSeed + 3);
    for (int t = 0; t < kSamples; ++t) {
      const PxParams p = pool[rng() % pool.size()];
      Coloring col = bases[p];
      if (!is_distinguishing(groups[p], col)) continue;
      // Split a random class, twice.
      for (int step = 0; step < 2; ++step) {
        auto classes = col.classes();
        std::vector<std::size_t> splittable;
        for (std::size_t i = 0; i < classes.size(); ++i) {
          if (classes[i].size() >= 2) splittable.push_back(i);
        }
        if (splittable.empty()) break;
        const auto& cls = classes[splittable[rng() % splittable.size()]];
        std::vector<VertexId> moved;
        for (VertexId v : cls) {
          if (rng() & 1u) moved.push_back(v);
        }
        if (moved.empty() || moved.size() == cls.size()) moved = {cls.front()};
        for (VertexId v : moved) col.color[v] = col.num_colors;
        ++col.num_colors;
        ++cases;
        ok = ok && is_distinguishing(groups[p], col);
      }
    }
    return report("refinements of distinguishing colorings are distinguishing", "bruteforce", cases, ok);
  }});
  out.push_back({"determinism", [](const Config& c) {
    std::string first;
    bool ok = true;
    for (unsigned workers : {1u, 2u, 4u}) {
      Config local = c;
      local.workers = workers;
      local.timing = false;
      std::ostringstream text;
      write_ndjson(text, run_campaign(local, {Check::table, Check::twins, Check::interchange}, PxParams{5, 2}));
      if (first.empty()) {
        first = text.str();
      } else {
        ok = ok && text.str() == first;
      }
    }
    return report("campaign output bytes do not depend on the worker count", "bruteforce", first.size(), ok);
  }});
}

}  // namespace

std::vector<Claim> claims_for(Check check, const Config& config, const std::optional<PxParams>& only) {
  if (only) only->validate();
  std::vector<Claim> out;
  switch (check) {
    case Check::table:
      for (const PxParams& p : scope(config, only)) table_claims(out, p);
      break;
    case Check::aut:
      aut_claims(out, config, only);
      break;
    case Check::phi:
      phi_claims(out);
      break;
    case Check::twins:
      twin_claims(out, config, only);
      break;
    case Check::interchange:
      interchange_claims(out, config, only);
      break;
    case Check::scale:
      scale_claims(out);
      break;
    case Check::properties:
      property_claims(out);
      break;
  }
  return out;
}

}  // namespace pxg
