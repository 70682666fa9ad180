#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "garside/simple.hpp"

namespace garside {

/// Description of a Garside monoid: its simples, the lattice operations on
/// them, the Garside element Delta and the automorphism tau.
///
/// Instances are created through the factory functions below, registered
/// under their canonical spec string and kept alive for the whole process,
/// so plain references and pointers to them never dangle. All methods are
/// const and safe to call concurrently.
class GarsideStructure {
 public:
  virtual ~GarsideStructure() = default;

  GarsideStructure(const GarsideStructure&) = delete;
  GarsideStructure& operator=(const GarsideStructure&) = delete;

  std::uint32_t id() const { return id_; }
  /// Canonical spec string, e.g. "braid:3" or "product(cyclic:2,cyclic:2)".
  const std::string& spec() const { return spec_; }
  /// N = ||Delta||, the atom length of the Garside element.
  int delta_norm() const { return delta_norm_; }

  const Simple& one() const { return *one_; }
  const Simple& delta() const { return *delta_; }
  const std::vector<Simple>& atoms() const { return atoms_; }

  bool is_one(const Simple& s) const { return s == *one_; }
  bool is_delta(const Simple& s) const { return s == *delta_; }

  /// ||a||: the length of a as a product of atoms.
  virtual int norm(const Simple& a) const = 0;
  /// a <=_L b. Default goes through meet; subclasses may use a direct test.
  virtual bool divides(const Simple& a, const Simple& b) const;
  virtual Simple meet(const Simple& a, const Simple& b) const = 0;
  virtual Simple join(const Simple& a, const Simple& b) const = 0;
  /// The left complement d(a) = a^{-1} Delta.
  virtual Simple complement(const Simple& a) const = 0;
  /// tau(a) = Delta^{-1} a Delta.
  virtual Simple tau(const Simple& a) const = 0;
  virtual Simple tau_inverse(const Simple& a) const = 0;
  virtual Simple tau_power(const Simple& a, std::int64_t m) const;
  /// Product of two simples. Precondition: the product divides Delta.
  virtual Simple product(const Simple& a, const Simple& b) const = 0;
  /// t^{-1} b. Precondition: t <=_L b.
  virtual Simple left_quotient(const Simple& t, const Simple& b) const = 0;

  /// All simple elements, computed once on first use.
  const std::vector<Simple>& all_simples() const;

  /// Local normal-form step: with t = d(a) /\ b, returns (a t, t^{-1} b).
  std::pair<Simple, Simple> normal_step(const Simple& a, const Simple& b) const;

  /// Atom for a token of the word grammar ("s1", "x", ...), if any.
  virtual std::optional<Simple> parse_atom(std::string_view name) const = 0;

  /// Component structures of a direct product; null otherwise.
  virtual const GarsideStructure* component(int index) const {
    (void)index;
    return nullptr;
  }

 protected:
  explicit GarsideStructure(std::uint32_t id) : id_(id) {}

  virtual std::vector<Simple> enumerate_simples() const = 0;

  // Filled in by each concrete constructor.
  std::string spec_;
  int delta_norm_ = 0;
  std::unique_ptr<Simple> one_;
  std::unique_ptr<Simple> delta_;
  std::vector<Simple> atoms_;

 private:
  std::uint32_t id_;

  mutable std::once_flag simples_once_;
  mutable std::vector<Simple> simples_;
};

/// Braid group B_n on n strands, 2 <= n <= max_strands (default 8).
const GarsideStructure& make_braid(int n, int max_strands = 8);

/// The group <x,y | x^N = y^N>, N >= 2.
const GarsideStructure& make_cyclic_amalgam(int big_n);

/// Direct product of two structures, all operations componentwise.
const GarsideStructure& make_product(const GarsideStructure& a,
                                     const GarsideStructure& b);

/// Parses the spec grammar `braid:<n> | cyclic:<N> | product(<spec>,<spec>)`.
const GarsideStructure& structure_for_spec(std::string_view spec);

const GarsideStructure& structure_by_id(std::uint32_t id);

}  // namespace garside
