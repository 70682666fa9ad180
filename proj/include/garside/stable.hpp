#pragma once

#include <optional>
#include <string>

#include "garside/conjugacy.hpp"
#include "garside/rational.hpp"

namespace garside {

/// Membership in the stable super summit set of g: h must realize the
/// summit invariants of g^n for every n, which by the N-power horizon only
/// needs checking for 1 <= n <= N = ||Delta||.
///
/// Precondition: h is conjugate to g (not checked; with a non-conjugate h
/// the answer is meaningless). Elements outside [g]^S return false fast.
bool is_in_stable_sss(const Element& h, const Element& g);

/// The stable super summit set, computed in two steps: a seed found by
/// filtering the super summit set, then closure under simple conjugation
/// intersected with the membership test.
SummitSet stable_sss(const Element& g, const SearchOptions& opts = {});

enum class GeodesicCase { kCaseI, kCaseII, kCaseIII };

std::string to_string(GeodesicCase c);

/// A power n <= N^2 whose super summit elements are all periodically
/// geodesic, together with the exact translation data that certifies it.
struct GeodesicPowerReport {
  std::int64_t n;  // lcm of the two denominators
  Rational t_inf;
  Rational t_sup;
  std::int64_t q1;  // denominator of t_inf
  std::int64_t q2;  // denominator of t_sup
  GeodesicCase certificate;
};

GeodesicPowerReport geodesic_power(const Element& g);

enum class GeodesicStatus { kCertified, kRefuted, kUnknown };

std::string to_string(GeodesicStatus s);

struct GeodesicCertificate {
  GeodesicStatus status;
  /// Smallest power witnessing |h^n| != n |h| when refuted.
  std::optional<std::int64_t> refuted_at;
};

/// Certifies that h is periodically geodesic when h lies in its own super
/// summit set and one of the three sufficient sign/integrality conditions
/// holds; refutes by scanning powers up to n_max (default 3N). The
/// conditions are sufficient but not necessary, so `unknown` is a possible
/// honest answer.
GeodesicCertificate certify_periodically_geodesic(const Element& h,
                                                  std::int64_t n_max = 0);

/// |h^n| = n |h| for all 1 <= n <= n_max.
bool check_periodically_geodesic_up_to(const Element& h, std::int64_t n_max);

}  // namespace garside
