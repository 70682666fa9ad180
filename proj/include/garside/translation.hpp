#pragma once

#include "garside/element.hpp"
#include "garside/rational.hpp"

namespace garside {

/// t_inf(g) = lim inf(g^n)/n, computed exactly as
/// max{ inf_s(g^k)/k : k = 1..N } with N = ||Delta||.
Rational t_inf(const Element& g);

/// Same limit by the detection method: the first q <= N with
/// inf_s(g^{qN}) = N inf_s(g^q) yields inf_s(g^q)/q. Disagreement with the
/// theory (no such q) raises InternalConsistencyError.
Rational t_inf_by_detection(const Element& g);

/// t_sup(g) = -t_inf(g^{-1}).
Rational t_sup(const Element& g);

/// t_len(g) = t_sup(g) - t_inf(g); nonnegative.
Rational t_len(const Element& g);

/// inf(g^N) = N inf(g); equivalent to inf(g^n) = n inf(g) for all n >= 1.
bool is_inf_straight(const Element& g);
bool is_sup_straight(const Element& g);

/// Whether some conjugate is inf-straight, i.e. t_inf(g) is an integer.
bool is_conjugate_to_inf_straight(const Element& g);
bool is_conjugate_to_sup_straight(const Element& g);

}  // namespace garside
