#pragma once

// Internal declarations of the concrete structures. Construction goes
// through the registry in structure.cpp; nothing here is public API.

#include "garside/structure.hpp"

namespace garside::detail {

class BraidStructure final : public GarsideStructure {
 public:
  BraidStructure(std::uint32_t id, int n);

  int strands() const { return n_; }

  int norm(const Simple& a) const override;
  bool divides(const Simple& a, const Simple& b) const override;
  Simple meet(const Simple& a, const Simple& b) const override;
  Simple join(const Simple& a, const Simple& b) const override;
  Simple complement(const Simple& a) const override;
  Simple tau(const Simple& a) const override;
  Simple tau_inverse(const Simple& a) const override;
  Simple tau_power(const Simple& a, std::int64_t m) const override;
  Simple product(const Simple& a, const Simple& b) const override;
  Simple left_quotient(const Simple& t, const Simple& b) const override;
  std::optional<Simple> parse_atom(std::string_view name) const override;

 protected:
  std::vector<Simple> enumerate_simples() const override;

 private:
  Simple wrap(const Perm& p) const { return Simple(id(), Simple::Payload(p)); }
  int n_;
};

class CyclicAmalgamStructure final : public GarsideStructure {
 public:
  CyclicAmalgamStructure(std::uint32_t id, int big_n);

  int modulus() const { return big_n_; }

  int norm(const Simple& a) const override;
  bool divides(const Simple& a, const Simple& b) const override;
  Simple meet(const Simple& a, const Simple& b) const override;
  Simple join(const Simple& a, const Simple& b) const override;
  Simple complement(const Simple& a) const override;
  Simple tau(const Simple& a) const override;
  Simple tau_inverse(const Simple& a) const override;
  Simple tau_power(const Simple& a, std::int64_t m) const override;
  Simple product(const Simple& a, const Simple& b) const override;
  Simple left_quotient(const Simple& t, const Simple& b) const override;
  std::optional<Simple> parse_atom(std::string_view name) const override;

 protected:
  std::vector<Simple> enumerate_simples() const override;

 private:
  Simple wrap(std::uint8_t axis, std::int32_t exp) const {
    return Simple(id(), Simple::Payload(CyclicPow{axis, exp}));
  }
  int big_n_;
};

class ProductStructure final : public GarsideStructure {
 public:
  ProductStructure(std::uint32_t id, const GarsideStructure& left,
                   const GarsideStructure& right);

  int norm(const Simple& a) const override;
  bool divides(const Simple& a, const Simple& b) const override;
  Simple meet(const Simple& a, const Simple& b) const override;
  Simple join(const Simple& a, const Simple& b) const override;
  Simple complement(const Simple& a) const override;
  Simple tau(const Simple& a) const override;
  Simple tau_inverse(const Simple& a) const override;
  Simple tau_power(const Simple& a, std::int64_t m) const override;
  Simple product(const Simple& a, const Simple& b) const override;
  Simple left_quotient(const Simple& t, const Simple& b) const override;
  std::optional<Simple> parse_atom(std::string_view name) const override;
  const GarsideStructure* component(int index) const override;

 protected:
  std::vector<Simple> enumerate_simples() const override;

 private:
  Simple wrap(Simple l, Simple r) const {
    return make_product_simple(id(), std::move(l), std::move(r));
  }
  const GarsideStructure* left_;
  const GarsideStructure* right_;
};

}  // namespace garside::detail
