#include "garside/stable.hpp"

#include <numeric>

#include "garside/errors.hpp"
#include "garside/translation.hpp"

namespace garside {

bool is_in_stable_sss(const Element& h, const Element& g) {
  if (h.inf() != inf_s(g) || h.sup() != sup_s(g)) return false;
  const int big_n = h.structure().delta_norm();
  Element hp = h;
  Element gp = g;
  for (int n = 2; n <= big_n; ++n) {
    hp = hp * h;
    gp = gp * g;
    if (hp.inf() != inf_s(gp) || hp.sup() != sup_s(gp)) return false;
  }
  return true;
}

SummitSet stable_sss(const Element& g, const SearchOptions& opts) {
  SearchOptions sss_opts = opts;
  SummitSet sss = super_summit_set(g, sss_opts);

  std::optional<Element> seed;
  for (const Element& h : sss.members) {
    if (is_in_stable_sss(h, g)) {
      seed = h;
      break;
    }
  }
  if (!seed)
    throw InternalConsistencyError(
        "super summit set of '" + g.structure().spec() +
        "' element contains no stable member; the stable set is never empty");

  Element seed_witness = opts.witnesses ? sss.conjugators->at(*seed)
                                        : Element::identity(g.structure());
  return detail::simple_conjugation_closure(
      g, *seed, seed_witness, SummitKind::kStable,
      [&](const Element& h) { return is_in_stable_sss(h, g); }, opts);
}

std::string to_string(GeodesicCase c) {
  switch (c) {
    case GeodesicCase::kCaseI:
      return "case_i";
    case GeodesicCase::kCaseII:
      return "case_ii";
    default:
      return "case_iii";
  }
}

std::string to_string(GeodesicStatus s) {
  switch (s) {
    case GeodesicStatus::kCertified:
      return "certified";
    case GeodesicStatus::kRefuted:
      return "refuted";
    default:
      return "unknown";
  }
}

GeodesicPowerReport geodesic_power(const Element& g) {
  const int big_n = g.structure().delta_norm();
  Rational ti = t_inf(g);
  Rational ts = t_sup(g);
  std::int64_t n = std::lcm(ti.den(), ts.den());
  if (n > static_cast<std::int64_t>(big_n) * big_n)
    throw InternalConsistencyError("geodesic power exceeds N^2");

  Element gn = g.pow(n);
  GeodesicCase cert = GeodesicCase::kCaseIII;
  if (inf_s(gn) >= 0)
    cert = GeodesicCase::kCaseI;
  else if (sup_s(gn) <= 0)
    cert = GeodesicCase::kCaseII;
  return GeodesicPowerReport{n, ti, ts, ti.den(), ts.den(), cert};
}

GeodesicCertificate certify_periodically_geodesic(const Element& h,
                                                  std::int64_t n_max) {
  const int big_n = h.structure().delta_norm();
  if (n_max <= 0) n_max = 3 * big_n;

  if (h.inf() == inf_s(h) && h.sup() == sup_s(h)) {
    Rational ti = t_inf(h);
    Rational ts = t_sup(h);
    bool cond_i = h.inf() >= 0 && ts.is_integer();
    bool cond_ii = h.sup() <= 0 && ti.is_integer();
    bool cond_iii = ti.is_integer() && ts.is_integer();
    if (cond_i || cond_ii || cond_iii)
      return {GeodesicStatus::kCertified, std::nullopt};
  }

  const std::int64_t base = h.word_length();
  Element pw = h;
  for (std::int64_t n = 2; n <= n_max; ++n) {
    pw = pw * h;
    if (pw.word_length() != n * base)
      return {GeodesicStatus::kRefuted, n};
  }
  return {GeodesicStatus::kUnknown, std::nullopt};
}

bool check_periodically_geodesic_up_to(const Element& h, std::int64_t n_max) {
  const std::int64_t base = h.word_length();
  Element pw = h;
  for (std::int64_t n = 2; n <= n_max; ++n) {
    pw = pw * h;
    if (pw.word_length() != n * base) return false;
  }
  return true;
}

}  // namespace garside
