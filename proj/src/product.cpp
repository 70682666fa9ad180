#include <cassert>

#include "garside/errors.hpp"
#include "structures_impl.hpp"

namespace garside::detail {

ProductStructure::ProductStructure(std::uint32_t id, const GarsideStructure& left,
                                   const GarsideStructure& right)
    : GarsideStructure(id), left_(&left), right_(&right) {
  spec_ = "product(" + left.spec() + "," + right.spec() + ")";
  delta_norm_ = left.delta_norm() + right.delta_norm();
  one_ = std::make_unique<Simple>(wrap(left.one(), right.one()));
  delta_ = std::make_unique<Simple>(wrap(left.delta(), right.delta()));
  for (const Simple& a : left.atoms()) atoms_.push_back(wrap(a, right.one()));
  for (const Simple& b : right.atoms()) atoms_.push_back(wrap(left.one(), b));
}

int ProductStructure::norm(const Simple& a) const {
  return left_->norm(a.left()) + right_->norm(a.right());
}

bool ProductStructure::divides(const Simple& a, const Simple& b) const {
  return left_->divides(a.left(), b.left()) &&
         right_->divides(a.right(), b.right());
}

Simple ProductStructure::meet(const Simple& a, const Simple& b) const {
  return wrap(left_->meet(a.left(), b.left()),
              right_->meet(a.right(), b.right()));
}

Simple ProductStructure::join(const Simple& a, const Simple& b) const {
  return wrap(left_->join(a.left(), b.left()),
              right_->join(a.right(), b.right()));
}

Simple ProductStructure::complement(const Simple& a) const {
  return wrap(left_->complement(a.left()), right_->complement(a.right()));
}

Simple ProductStructure::tau(const Simple& a) const {
  return wrap(left_->tau(a.left()), right_->tau(a.right()));
}

Simple ProductStructure::tau_inverse(const Simple& a) const {
  return wrap(left_->tau_inverse(a.left()), right_->tau_inverse(a.right()));
}

Simple ProductStructure::tau_power(const Simple& a, std::int64_t m) const {
  return wrap(left_->tau_power(a.left(), m), right_->tau_power(a.right(), m));
}

Simple ProductStructure::product(const Simple& a, const Simple& b) const {
  return wrap(left_->product(a.left(), b.left()),
              right_->product(a.right(), b.right()));
}

Simple ProductStructure::left_quotient(const Simple& t, const Simple& b) const {
  return wrap(left_->left_quotient(t.left(), b.left()),
              right_->left_quotient(t.right(), b.right()));
}

std::optional<Simple> ProductStructure::parse_atom(std::string_view) const {
  // Product words use the pair syntax "( <word> , <word> )" only.
  return std::nullopt;
}

const GarsideStructure* ProductStructure::component(int index) const {
  if (index == 0) return left_;
  if (index == 1) return right_;
  return nullptr;
}

std::vector<Simple> ProductStructure::enumerate_simples() const {
  std::vector<Simple> out;
  const auto& ls = left_->all_simples();
  const auto& rs = right_->all_simples();
  out.reserve(ls.size() * rs.size());
  for (const Simple& a : ls)
    for (const Simple& b : rs) out.push_back(wrap(a, b));
  return out;
}

}  // namespace garside::detail
