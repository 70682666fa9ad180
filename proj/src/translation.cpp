#include "garside/translation.hpp"

#include <algorithm>

#include "garside/conjugacy.hpp"
#include "garside/errors.hpp"

namespace garside {

Rational t_inf(const Element& g) {
  const int big_n = g.structure().delta_norm();
  Element pw = g;
  Rational best(inf_s(pw), 1);
  for (int k = 2; k <= big_n; ++k) {
    pw = pw * g;
    best = std::max(best, Rational(inf_s(pw), k));
  }
  if (best.den() > big_n)
    throw InternalConsistencyError("t_inf denominator exceeds ||Delta||");
  return best;
}

Rational t_inf_by_detection(const Element& g) {
  const int big_n = g.structure().delta_norm();
  Element pw = g;
  for (int q = 1; q <= big_n; ++q) {
    if (q > 1) pw = pw * g;
    std::int64_t base = inf_s(pw);
    if (inf_s(pw.pow(big_n)) == big_n * base) return Rational(base, q);
  }
  throw InternalConsistencyError(
      "no q <= ||Delta|| detected the translation number of '" +
      g.structure().spec() + "' element");
}

Rational t_sup(const Element& g) { return -t_inf(g.inverse()); }

Rational t_len(const Element& g) { return t_sup(g) - t_inf(g); }

bool is_inf_straight(const Element& g) {
  const int big_n = g.structure().delta_norm();
  return g.pow(big_n).inf() == big_n * g.inf();
}

bool is_sup_straight(const Element& g) {
  const int big_n = g.structure().delta_norm();
  return g.pow(big_n).sup() == big_n * g.sup();
}

bool is_conjugate_to_inf_straight(const Element& g) {
  return t_inf(g).is_integer();
}

bool is_conjugate_to_sup_straight(const Element& g) {
  return t_sup(g).is_integer();
}

}  // namespace garside
