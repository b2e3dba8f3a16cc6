#pragma once

// The group A = K x| <rho, mu> acting on PX(n,k), the exceptional element xi
// of Aut(PX(4,3)), and the isomorphism Q_4 -> PX(4,2).
//
// Elements act on the left: (tau delta) . v = tau . (delta . v). The flip
// generator tau_s flips bit x_{s-i} of every word in fibre i whenever
// 0 <= s - i < k (mod n); consequently bit j of fibre m is flipped by the
// composite tau exactly when u_{m+j} = 1.

#include <compare>
#include <cstdint>
#include <ranges>
#include <string>
#include <string_view>
#include <vector>

#include "pxg/errors.hpp"
#include "pxg/graph.hpp"
#include "pxg/px_graph.hpp"

namespace pxg {

struct SearchBudget;

/// Largest n supported by algebraic elements (tau words are 64-bit masks).
inline constexpr int kMaxGroupN = 62;
/// Largest n for which enumerate_A may be streamed.
inline constexpr int kMaxEnumerateN = 24;
/// Cap on |group| * |V| when materializing permutation tables.
inline constexpr std::uint64_t kMaxPermEntries = std::uint64_t{1} << 27;

/// Element of D_n acting on Z_n as i -> offset + i (rotation) or
/// i -> offset - i (reflection). mu_s has offset s + 1 - k.
struct Dihedral {
  bool reflect = false;
  int offset = 0;

  static Dihedral rotation(int s, int n);
  static Dihedral mu_s(int s, int n, int k);

  int act(int i, int n) const noexcept;
  bool is_identity() const noexcept { return !reflect && offset == 0; }

  friend bool operator==(const Dihedral&, const Dihedral&) = default;
  friend auto operator<=>(const Dihedral&, const Dihedral&) = default;
};

Dihedral compose(const Dihedral& a, const Dihedral& b, int n);
Dihedral inverse(const Dihedral& d, int n);

/// tau_0^{u_0} ... tau_{n-1}^{u_{n-1}}; bit m of `mask` is u_m.
struct TauWord {
  std::uint64_t mask = 0;

  static TauWord single(int s) { return TauWord{std::uint64_t{1} << s}; }
  bool exponent(int m) const noexcept { return (mask >> m) & 1u; }
  bool is_identity() const noexcept { return mask == 0; }

  friend bool operator==(const TauWord&, const TauWord&) = default;
  friend auto operator<=>(const TauWord&, const TauWord&) = default;
};

/// tau . delta, optionally followed on the right by xi (only for PX(4,3)):
/// the element acts as tau(delta(xi(v))).
struct Automorphism {
  TauWord tau;
  Dihedral delta;
  bool xi = false;

  bool is_identity() const noexcept { return tau.is_identity() && delta.is_identity() && !xi; }

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
};

/// Validates params for group use (standing assumption and n <= kMaxGroupN).
void check_group_params(const PxParams& p);
bool has_xi(const PxParams& p) noexcept;

Automorphism identity_element();
Automorphism rho(const PxParams& p, int s = 1);
Automorphism mu(const PxParams& p);
Automorphism mu_s(const PxParams& p, int s);
Automorphism tau_s(const PxParams& p, int s);
Automorphism tau_of(const PxParams& p, TauWord u);
/// xi of Aut(PX(4,3)). Throws UsageError for other parameters.
Automorphism xi_element(const PxParams& p);

/// Flip mask (as a word numeral) that `tau` applies to words of fibre m.
std::uint32_t flip_mask(const PxParams& p, TauWord tau, int m) noexcept;

Vertex apply(const PxParams& p, const Automorphism& a, const Vertex& v);
/// Same as apply on vertex ids; no validation of `v`.
VertexId apply_id(const PxParams& p, const Automorphism& a, VertexId v);

/// a * b, acting as a(b(v)), in canonical form.
Automorphism compose(const PxParams& p, const Automorphism& a, const Automorphism& b);
Automorphism inverse(const PxParams& p, const Automorphism& a);

/// The dihedral action on fibre indices. Throws NotApplicableError when the
/// element has a xi factor: fibres are not blocks for xi.
Dihedral induced_fibre_action(const Automorphism& a);

/// Fibres preserved by mu_s: {i : s + 1 - k - i = i (mod n)}.
std::vector<int> fixed_fibres(int s, int n, int k);

std::uint64_t algebraic_order(const PxParams& p);
/// Element number `index` of A: delta index index >> n (rotations first),
/// tau mask index & (2^n - 1). Index 0 is the identity.
Automorphism algebraic_element(const PxParams& p, std::uint64_t index);

/// Lazily yields all 2^n * 2n elements of A. Throws CapacityError when
/// n > kMaxEnumerateN.
inline auto enumerate_A(const PxParams& p) {
  check_group_params(p);
  if (p.n > kMaxEnumerateN) {
    throw CapacityError("enumerate_A supports n <= " + std::to_string(kMaxEnumerateN));
  }
  return std::views::iota(std::uint64_t{0}, algebraic_order(p)) |
         std::views::transform([p](std::uint64_t i) { return algebraic_element(p, i); });
}

Perm to_perm(const PxGraph& g, const Automorphism& a);
/// Permutation tables of every element of A, sorted.
PermGroup algebraic_perms(const PxGraph& g);

/// Aut(PX(n,k)): A for n != 4; A together with the coset A xi for (4,3);
/// generic search for (4,1) and (4,2). Sorted.
PermGroup full_aut(const PxGraph& g, const SearchBudget& budget);
PermGroup full_aut(const PxGraph& g);

/// "tau=u_0..u_{n-1} delta=r<s>|m<s> xi=0|1".
std::string to_string(const PxParams& p, const Automorphism& a);
Automorphism parse_automorphism(const PxParams& p, std::string_view text);

/// The isomorphism Q_4 -> PX(4,2) on a 4-bit word x_0x_1x_2x_3.
Vertex phi(BitWord q);

}  // namespace pxg
