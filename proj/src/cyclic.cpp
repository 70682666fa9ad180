#include <algorithm>
#include <cassert>

#include "garside/errors.hpp"
#include "structures_impl.hpp"

namespace garside::detail {

// Simples of <x,y | x^N = y^N> are 1, x^i, y^i (1 <= i <= N-1) and
// Delta = x^N = y^N. Delta is central, so tau is the identity.

CyclicAmalgamStructure::CyclicAmalgamStructure(std::uint32_t id, int big_n)
    : GarsideStructure(id), big_n_(big_n) {
  spec_ = "cyclic:" + std::to_string(big_n);
  delta_norm_ = big_n;
  one_ = std::make_unique<Simple>(wrap(0, 0));
  delta_ = std::make_unique<Simple>(wrap(0, big_n));
  atoms_.push_back(wrap(1, 1));
  atoms_.push_back(wrap(2, 1));
}

int CyclicAmalgamStructure::norm(const Simple& a) const {
  return static_cast<int>(a.cyclic().exp);
}

bool CyclicAmalgamStructure::divides(const Simple& a, const Simple& b) const {
  const CyclicPow& x = a.cyclic();
  const CyclicPow& y = b.cyclic();
  if (x.exp == 0) return true;
  if (y.exp == big_n_) return true;
  return x.axis == y.axis && x.exp <= y.exp;
}

Simple CyclicAmalgamStructure::meet(const Simple& a, const Simple& b) const {
  const CyclicPow& x = a.cyclic();
  const CyclicPow& y = b.cyclic();
  if (x.exp == 0 || y.exp == 0) return one();
  if (x.exp == big_n_) return b;
  if (y.exp == big_n_) return a;
  if (x.axis != y.axis) return one();
  return wrap(x.axis, std::min(x.exp, y.exp));
}

Simple CyclicAmalgamStructure::join(const Simple& a, const Simple& b) const {
  const CyclicPow& x = a.cyclic();
  const CyclicPow& y = b.cyclic();
  if (x.exp == 0) return b;
  if (y.exp == 0) return a;
  if (x.exp == big_n_ || y.exp == big_n_) return delta();
  if (x.axis != y.axis) return delta();
  return wrap(x.axis, std::max(x.exp, y.exp));
}

Simple CyclicAmalgamStructure::complement(const Simple& a) const {
  const CyclicPow& x = a.cyclic();
  if (x.exp == 0) return delta();
  if (x.exp == big_n_) return one();
  return wrap(x.axis, big_n_ - x.exp);
}

Simple CyclicAmalgamStructure::tau(const Simple& a) const { return a; }

Simple CyclicAmalgamStructure::tau_inverse(const Simple& a) const { return a; }

Simple CyclicAmalgamStructure::tau_power(const Simple& a, std::int64_t) const {
  return a;
}

Simple CyclicAmalgamStructure::product(const Simple& a, const Simple& b) const {
  const CyclicPow& x = a.cyclic();
  const CyclicPow& y = b.cyclic();
  if (x.exp == 0) return b;
  if (y.exp == 0) return a;
  assert(x.axis == y.axis || x.exp == big_n_ || y.exp == big_n_);
  assert(x.exp + y.exp <= big_n_);
  std::uint8_t axis = x.axis != 0 ? x.axis : y.axis;
  std::int32_t e = x.exp + y.exp;
  if (e == big_n_) return delta();
  return wrap(axis, e);
}

Simple CyclicAmalgamStructure::left_quotient(const Simple& t,
                                             const Simple& b) const {
  const CyclicPow& x = t.cyclic();
  const CyclicPow& y = b.cyclic();
  assert(divides(t, b));
  if (x.exp == 0) return b;
  if (x.exp == y.exp && x.axis == y.axis) return one();
  if (y.exp == big_n_) return complement(t);
  return wrap(y.axis, y.exp - x.exp);
}

std::optional<Simple> CyclicAmalgamStructure::parse_atom(
    std::string_view name) const {
  if (name == "x") return atoms_[0];
  if (name == "y") return atoms_[1];
  return std::nullopt;
}

std::vector<Simple> CyclicAmalgamStructure::enumerate_simples() const {
  std::vector<Simple> out;
  out.push_back(one());
  for (int i = 1; i < big_n_; ++i) out.push_back(wrap(1, i));
  for (int i = 1; i < big_n_; ++i) out.push_back(wrap(2, i));
  out.push_back(delta());
  return out;
}

}  // namespace garside::detail
