#include "pxg/px_group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <utility>

#include "pxg/errors.hpp"
#include "pxg/symmetry.hpp"

namespace pxg {
namespace {

constexpr PxParams kXiParams{4, 3};

// Two-cycles of xi on PX(4,3); every vertex not listed is fixed.
constexpr std::array<std::pair<std::string_view, std::string_view>, 12> kXiCycles{{
    {"0:010", "0:101"},
    {"2:001", "2:110"},
    {"0:001", "2:000"},
    {"0:100", "2:010"},
    {"0:011", "2:101"},
    {"0:110", "2:111"},
    {"1:100", "1:011"},
    {"3:010", "3:101"},
    {"1:000", "3:100"},
    {"1:010", "3:001"},
    {"1:101", "3:110"},
    {"1:111", "3:011"},
}};

const std::array<VertexId, 32>& xi_table() {
  static const std::array<VertexId, 32> table = [] {
    std::array<VertexId, 32> t{};
    for (VertexId v = 0; v < 32; ++v) t[v] = v;
    auto id = [](std::string_view s) {
      Vertex v = parse_vertex(s);
      return (static_cast<VertexId>(v.fibre) << 3) | v.word.numeral();
    };
    for (auto [a, b] : kXiCycles) {
      t[id(a)] = id(b);
      t[id(b)] = id(a);
    }
    return t;
  }();
  return table;
}

std::uint64_t low_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// delta tau delta^{-1}, again an element of K.
TauWord conjugate(const PxParams& p, const Dihedral& d, TauWord t) {
  TauWord out;
  for (int s = 0; s < p.n; ++s) {
    if (!t.exponent(s)) continue;
    int image = d.reflect ? mod(static_cast<long long>(d.offset) + p.k - 1 - s, p.n) : mod(d.offset + s, p.n);
    out.mask ^= std::uint64_t{1} << image;
  }
  return out;
}

void require_legal(const PxParams& p, const Automorphism& a) {
  if (a.xi && !has_xi(p)) throw UsageError("xi factor is only defined for PX(4,3)");
}

// Lookup from permutation tables of PX(4,3) to canonical elements of A and A xi.
const std::map<Perm, Automorphism>& xi_coset_index() {
  static const std::map<Perm, Automorphism> index = [] {
    std::map<Perm, Automorphism> out;
    PxGraph g(kXiParams);
    for (std::uint64_t i = 0; i < algebraic_order(kXiParams); ++i) {
      Automorphism a = algebraic_element(kXiParams, i);
      out.emplace(to_perm(g, a), a);
      a.xi = true;
      out.emplace(to_perm(g, a), a);
    }
    return out;
  }();
  return index;
}

Automorphism lookup_xi_group(const Perm& perm) {
  const auto& index = xi_coset_index();
  auto it = index.find(perm);
  if (it == index.end()) throw std::logic_error("permutation is not in A or A xi");
  return it->second;
}

}  // namespace

Dihedral Dihedral::rotation(int s, int n) { return Dihedral{false, mod(s, n)}; }

Dihedral Dihedral::mu_s(int s, int n, int k) { return Dihedral{true, mod(static_cast<long long>(s) + 1 - k, n)}; }

int Dihedral::act(int i, int n) const noexcept {
  return reflect ? mod(static_cast<long long>(offset) - i, n) : mod(static_cast<long long>(offset) + i, n);
}

Dihedral compose(const Dihedral& a, const Dihedral& b, int n) {
  // a(b(i)) with b(i) = b.offset +- i.
  if (!a.reflect) return Dihedral{b.reflect, mod(static_cast<long long>(a.offset) + b.offset, n)};
  return Dihedral{!b.reflect, mod(static_cast<long long>(a.offset) - b.offset, n)};
}

Dihedral inverse(const Dihedral& d, int n) { return d.reflect ? d : Dihedral{false, mod(-d.offset, n)}; }

void check_group_params(const PxParams& p) {
  p.validate();
  if (p.n > kMaxGroupN) throw CapacityError("group elements support n <= " + std::to_string(kMaxGroupN));
}

bool has_xi(const PxParams& p) noexcept { return p == kXiParams; }

Automorphism identity_element() { return Automorphism{}; }

Automorphism rho(const PxParams& p, int s) {
  check_group_params(p);
  return Automorphism{TauWord{}, Dihedral::rotation(s, p.n), false};
}

Automorphism mu(const PxParams& p) {
  check_group_params(p);
  return Automorphism{TauWord{}, Dihedral{true, 0}, false};
}

Automorphism mu_s(const PxParams& p, int s) {
  check_group_params(p);
  return Automorphism{TauWord{}, Dihedral::mu_s(s, p.n, p.k), false};
}

Automorphism tau_s(const PxParams& p, int s) {
  check_group_params(p);
  return Automorphism{TauWord::single(mod(s, p.n)), Dihedral{}, false};
}

Automorphism tau_of(const PxParams& p, TauWord u) {
  check_group_params(p);
  if ((u.mask & ~low_mask(p.n)) != 0) throw UsageError("tau word longer than n");
  return Automorphism{u, Dihedral{}, false};
}

Automorphism xi_element(const PxParams& p) {
  if (!has_xi(p)) throw UsageError("xi exists only for PX(4,3)");
  return Automorphism{TauWord{}, Dihedral{}, true};
}

std::uint32_t flip_mask(const PxParams& p, TauWord tau, int m) noexcept {
  // Bits u_m, u_{m+1}, ..., u_{m+k-1}: bit j of the window is u_{m+j}.
  const std::uint64_t all = low_mask(p.n);
  std::uint64_t window = tau.mask & all;
  if (m != 0) window = ((window >> m) | (window << (p.n - m))) & all;
  const std::uint32_t low = static_cast<std::uint32_t>(window & ((std::uint64_t{1} << p.k) - 1));
  // Bit j of the window flips x_j, which is numeral bit k-1-j.
  return reverse_bits(low, p.k);
}

VertexId apply_id(const PxParams& p, const Automorphism& a, VertexId v) {
  if (a.xi) v = xi_table()[v];
  const std::uint32_t low = (std::uint32_t{1} << p.k) - 1;
  const int fibre = a.delta.act(static_cast<int>(v >> p.k), p.n);
  std::uint32_t word = v & low;
  if (a.delta.reflect) word = reverse_bits(word, p.k);
  word ^= flip_mask(p, a.tau, fibre);
  return (static_cast<VertexId>(fibre) << p.k) | word;
}

Vertex apply(const PxParams& p, const Automorphism& a, const Vertex& v) {
  check_group_params(p);
  require_legal(p, a);
  if (v.fibre < 0 || v.fibre >= p.n || v.word.length() != p.k) {
    throw UsageError("vertex " + to_string(v) + " is not in the graph");
  }
  const VertexId out = apply_id(p, a, (static_cast<VertexId>(v.fibre) << p.k) | v.word.numeral());
  return Vertex{static_cast<int>(out >> p.k), BitWord(p.k, out & ((1u << p.k) - 1))};
}

Automorphism compose(const PxParams& p, const Automorphism& a, const Automorphism& b) {
  check_group_params(p);
  require_legal(p, a);
  require_legal(p, b);
  if (a.xi || b.xi) {
    PxGraph g(p);
    return lookup_xi_group(compose(to_perm(g, a), to_perm(g, b)));
  }
  // tau_a delta_a tau_b delta_b = tau_a (delta_a tau_b delta_a^{-1}) delta_a delta_b
  TauWord tau{a.tau.mask ^ conjugate(p, a.delta, b.tau).mask};
  return Automorphism{tau, compose(a.delta, b.delta, p.n), false};
}

Automorphism inverse(const PxParams& p, const Automorphism& a) {
  check_group_params(p);
  require_legal(p, a);
  if (a.xi) {
    PxGraph g(p);
    return lookup_xi_group(inverse(to_perm(g, a)));
  }
  // (tau delta)^{-1} = delta^{-1} tau = (delta^{-1} tau delta) delta^{-1}
  Dihedral d = inverse(a.delta, p.n);
  return Automorphism{conjugate(p, d, a.tau), d, false};
}

Dihedral induced_fibre_action(const Automorphism& a) {
  if (a.xi) throw NotApplicableError("fibres do not form a block system for xi");
  return a.delta;
}

std::vector<int> fixed_fibres(int s, int n, int k) {
  PxParams{n, k}.validate();
  const Dihedral d = Dihedral::mu_s(s, n, k);
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (d.act(i, n) == i) out.push_back(i);
  }
  return out;
}

std::uint64_t algebraic_order(const PxParams& p) {
  check_group_params(p);
  if (p.n > kMaxEnumerateN) throw CapacityError("group order too large to index");
  return (std::uint64_t{1} << p.n) * 2 * static_cast<std::uint64_t>(p.n);
}

Automorphism algebraic_element(const PxParams& p, std::uint64_t index) {
  const std::uint64_t d = index >> p.n;
  const int n = p.n;
  Dihedral delta{d >= static_cast<std::uint64_t>(n), static_cast<int>(d % static_cast<std::uint64_t>(n))};
  return Automorphism{TauWord{index & low_mask(n)}, delta, false};
}

Perm to_perm(const PxGraph& g, const Automorphism& a) {
  require_legal(g.params(), a);
  Perm out;
  out.image.resize(g.order());
  for (VertexId v = 0; v < g.order(); ++v) out.image[v] = apply_id(g.params(), a, v);
  return out;
}

PermGroup algebraic_perms(const PxGraph& g) {
  const std::uint64_t count = algebraic_order(g.params());
  if (count * g.order() > kMaxPermEntries) {
    throw CapacityError("A of PX(" + std::to_string(g.n()) + "," + std::to_string(g.k()) +
                        ") is too large to tabulate");
  }
  PermGroup out;
  out.reserve(count);
  for (const Automorphism& a : enumerate_A(g.params())) out.push_back(to_perm(g, a));
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup full_aut(const PxGraph& g, const SearchBudget& budget) {
  const PxParams& p = g.params();
  if (p.n != 4) return algebraic_perms(g);
  if (has_xi(p)) {
    PermGroup out;
    for (const auto& [perm, element] : xi_coset_index()) out.push_back(perm);
    return out;  // map order is sorted
  }
  AutomorphismSearch search = generic_automorphisms(g.graph(), budget);
  if (!search.complete) throw CapacityError("generic automorphism search exceeded its budget");
  return std::move(search.group);
}

PermGroup full_aut(const PxGraph& g) { return full_aut(g, SearchBudget{}); }

std::string to_string(const PxParams& p, const Automorphism& a) {
  std::string tau;
  for (int m = 0; m < p.n; ++m) tau.push_back(a.tau.exponent(m) ? '1' : '0');
  std::string delta;
  if (a.delta.reflect) {
    delta = "m" + std::to_string(mod(static_cast<long long>(a.delta.offset) + p.k - 1, p.n));
  } else {
    delta = "r" + std::to_string(a.delta.offset);
  }
  return "tau=" + tau + " delta=" + delta + " xi=" + (a.xi ? "1" : "0");
}

Automorphism parse_automorphism(const PxParams& p, std::string_view text) {
  check_group_params(p);
  auto fail = [&] { return UsageError("bad automorphism literal '" + std::string(text) + "'"); };
  std::vector<std::string_view> fields;
  while (!text.empty()) {
    auto space = text.find(' ');
    fields.push_back(text.substr(0, space));
    text = space == std::string_view::npos ? std::string_view{} : text.substr(space + 1);
  }
  if (fields.size() != 3 || !fields[0].starts_with("tau=") || !fields[1].starts_with("delta=") ||
      !fields[2].starts_with("xi=")) {
    throw fail();
  }
  Automorphism a;
  std::string_view tau = fields[0].substr(4);
  if (tau.size() != static_cast<std::size_t>(p.n)) throw fail();
  for (int m = 0; m < p.n; ++m) {
    if (tau[m] == '1') {
      a.tau.mask |= std::uint64_t{1} << m;
    } else if (tau[m] != '0') {
      throw fail();
    }
  }
  std::string_view delta = fields[1].substr(6);
  if (delta.size() < 2 || (delta[0] != 'r' && delta[0] != 'm')) throw fail();
  int s = 0;
  for (char c : delta.substr(1)) {
    if (c < '0' || c > '9') throw fail();
    s = s * 10 + (c - '0');
    if (s >= p.n) throw fail();
  }
  a.delta = delta[0] == 'r' ? Dihedral::rotation(s, p.n) : Dihedral::mu_s(s, p.n, p.k);
  std::string_view xi = fields[2].substr(3);
  if (xi == "1") {
    a.xi = true;
  } else if (xi != "0") {
    throw fail();
  }
  require_legal(p, a);
  return a;
}

Vertex phi(BitWord q) {
  if (q.length() != 4) throw UsageError("phi takes a 4-bit word");
  const bool head_odd = (q.bit(0) ^ q.bit(1)) != 0;
  const bool tail_odd = (q.bit(2) ^ q.bit(3)) != 0;
  int j = 0;
  if (head_odd && tail_odd) {
    j = 0;
  } else if (head_odd) {
    j = 1;
  } else if (!tail_odd) {
    j = 2;
  } else {
    j = 3;
  }
  const std::uint32_t x1 = static_cast<std::uint32_t>(q.bit(1));
  const std::uint32_t x3 = static_cast<std::uint32_t>(q.bit(3));
  const std::uint32_t word = j % 2 == 1 ? (x1 << 1) | x3 : (x3 << 1) | x1;
  return Vertex{j, BitWord(2, word)};
}

}  // namespace pxg
