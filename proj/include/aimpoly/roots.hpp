#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "aimpoly/gcd.hpp"
#include "aimpoly/tower.hpp"

namespace aimpoly {

struct RationalRoot {
  Scalar value;
  std::size_t multiplicity = 1;

  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// Rational roots of a polynomial in t plus whatever is left over once every
/// (t - r)^m has been divided out. The residual factor is monic and carries
/// all irrational and complex roots.
struct RationalRoots {
  std::vector<RationalRoot> roots;  // ascending by value
  ParamPoly residual_factor;

  bool contains(const Scalar& v) const {
    return std::any_of(roots.begin(), roots.end(), [&](const RationalRoot& r) { return r.value == v; });
  }
  std::vector<Scalar> values() const {
    std::vector<Scalar> out;
    for (const auto& r : roots) out.push_back(r.value);
    return out;
  }
};

namespace detail {

inline Scalar floor_of(const Scalar& v) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v.value().get_num_mpz_t(), v.value().get_den_mpz_t());
  return Scalar(q);
}

/// Rational with the smallest denominator in the open interval (lo, hi),
/// 0 <= lo < hi; a missing hi means +infinity.
inline Scalar simplest_between(const Scalar& lo, const std::optional<Scalar>& hi) {
  Scalar n = floor_of(lo);
  Scalar next = n + Scalar(1);
  if (!hi || next < *hi) return next;
  // (lo, hi) lies inside [n, n + 1]; recurse on the reciprocal of the fractional part.
  Scalar flo = lo - n;
  Scalar fhi = *hi - n;
  std::optional<Scalar> upper;
  if (!flo.is_zero()) upper = flo.inverse();
  return n + simplest_between(fhi.inverse(), upper).inverse();
}

inline Scalar simplest_in_open(const Scalar& lo, const Scalar& hi) {
  if (lo.sign() < 0 && hi.sign() > 0) return Scalar(0);
  if (hi.sign() <= 0) return -simplest_between(-hi, -lo);
  return simplest_between(lo, hi);
}

inline std::vector<ParamPoly> sturm_sequence(const ParamPoly& p) {
  std::vector<ParamPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    auto r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

inline int sign_variations(const std::vector<ParamPoly>& seq, const Scalar& at) {
  int variations = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = q.evaluate(at).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

/// Distinct rational roots of a square-free polynomial with integer
/// coefficients. Any rational root p/q in lowest terms has q | lc, so two
/// distinct candidates are at least 1/lc^2 apart; real roots are isolated by
/// Sturm bisection below that width and the simplest rational of each
/// isolating interval is the only possible rational root in it.
inline std::vector<Scalar> distinct_rational_roots(const ParamPoly& squarefree) {
  std::vector<Scalar> found;
  if (squarefree.degree() < 1) return found;
  const Scalar lc = squarefree.leading().abs();
  Scalar bound(0);
  for (int i = 0; i < squarefree.degree(); ++i) bound = std::max(bound, (squarefree[i] / lc).abs());
  bound += Scalar(1);
  const Scalar width = (lc * lc * Scalar(2)).inverse();
  const auto seq = sturm_sequence(squarefree);

  struct Interval {
    Scalar lo, hi;
    int vlo, vhi;
  };
  std::vector<Interval> stack{{-bound, bound, sign_variations(seq, -bound), sign_variations(seq, bound)}};
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    int count = iv.vlo - iv.vhi;  // distinct roots in (lo, hi]
    if (count <= 0) continue;
    if (iv.hi - iv.lo < width && count == 1) {
      if (squarefree.evaluate(iv.hi).is_zero()) {
        found.push_back(iv.hi);
        continue;
      }
      Scalar candidate = simplest_in_open(iv.lo, iv.hi);
      if (squarefree.evaluate(candidate).is_zero()) found.push_back(candidate);
      continue;
    }
    Scalar mid = (iv.lo + iv.hi) / Scalar(2);
    int vmid = sign_variations(seq, mid);
    stack.push_back({iv.lo, mid, iv.vlo, vmid});
    stack.push_back({mid, iv.hi, vmid, iv.vhi});
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace detail

/// All rational roots of g with multiplicity. The zero polynomial is rejected:
/// callers must treat "identically zero" as "every value admissible".
inline RationalRoots param_rational_roots(const ParamPoly& g) {
  if (g.is_zero()) throw Error(ErrorKind::InvalidInput, "rational roots of the zero polynomial");
  RationalRoots out;
  ParamPoly rest = detail::integer_primitive(g);
  if (rest.degree() >= 1) {
    ParamPoly squarefree = exact_quotient(rest, gcd(rest, rest.derivative()));
    squarefree = detail::integer_primitive(squarefree);
    for (const auto& r : detail::distinct_rational_roots(squarefree)) {
      ParamPoly factor(std::vector<Scalar>{-r, Scalar(1)});
      std::size_t m = 0;
      for (;;) {
        auto [q, rem] = divmod(rest, factor);
        if (!rem.is_zero()) break;
        rest = std::move(q);
        ++m;
      }
      out.roots.push_back({r, m});
    }
  }
  out.residual_factor = rest.monic();
  return out;
}

}  // namespace aimpoly
