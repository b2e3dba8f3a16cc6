#include "pxg/formulas.hpp"

#include "pxg/errors.hpp"

namespace pxg {
namespace {

void check(const PxParams& p) {
  if (p.n < 3 || p.k < 1 || p.k >= p.n) throw UsageError("PX(n,k) needs n >= 3 and 1 <= k < n");
}

}  // namespace

int ceil_div(int a, int b) {
  if (b <= 0) throw UsageError("ceil_div needs a positive divisor");
  return (a + b - 1) / b;
}

ParamValue det_formula(const PxParams& p) {
  check(p);
  if (p.n == 4 && p.k == 1) return 6;
  if (2 * p.k == p.n) return 3;
  return ceil_div(p.n, p.k);
}

ParamValue dist_formula(const PxParams& p) {
  check(p);
  if (p.n == 4 && p.k == 1) return 5;
  return p.k == 1 ? 3 : 2;
}

ParamValue cost_formula(const PxParams& p) {
  check(p);
  const int n = p.n;
  const int k = p.k;
  if (k == 1) return std::nullopt;
  if (n == 4 && k == 2) return 5;
  const int c = ceil_div(n, k);
  if (5 <= n && n < 2 * k) return c;
  if (n > 2 * k && n % k != 0 && n % k != k - 1) return c;
  return c + 1;
}

}  // namespace pxg
