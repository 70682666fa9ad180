#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "garside/structure.hpp"

namespace garside {

/// A group element in left-greedy normal form Delta^r s_1 ... s_k.
///
/// Elements are immutable and always stored normalized: no factor is 1 or
/// Delta and consecutive factors satisfy d(s_i) /\ s_{i+1} = 1. inf, sup and
/// len read off the stored form.
class Element {
 public:
  static Element identity(const GarsideStructure& st);
  static Element delta_power(const GarsideStructure& st, std::int64_t r);
  static Element from_simple(const GarsideStructure& st, const Simple& s);
  /// Normal form of Delta^r * raw[0] * ... * raw[k-1]. The raw factors may
  /// contain 1 and Delta; they are absorbed.
  static Element make(const GarsideStructure& st, std::int64_t r,
                      std::vector<Simple> raw);

  const GarsideStructure& structure() const { return *st_; }

  std::int64_t inf() const { return r_; }
  std::int64_t sup() const { return r_ + static_cast<std::int64_t>(factors_.size()); }
  std::int64_t len() const { return static_cast<std::int64_t>(factors_.size()); }
  const std::vector<Simple>& factors() const { return factors_; }
  bool is_identity() const { return r_ == 0 && factors_.empty(); }

  /// Shortest word length over the simples and their inverses:
  /// sup if inf >= 0, -inf if sup <= 0, len otherwise.
  std::int64_t word_length() const;

  Element inverse() const;
  Element pow(std::int64_t n) const;
  /// Delta^{-m} g Delta^m; preserves inf, sup and len.
  Element tau_conjugate(std::int64_t m) const;

  friend Element operator*(const Element& g, const Element& h);

  bool operator==(const Element& other) const;
  bool operator!=(const Element& other) const { return !(*this == other); }
  /// Canonical total order: inf first, then factors lexicographically.
  bool operator<(const Element& other) const;

  std::size_t hash() const;

 private:
  Element(const GarsideStructure& st, std::int64_t r, std::vector<Simple> fs)
      : st_(&st), r_(r), factors_(std::move(fs)) {}

  const GarsideStructure* st_;
  std::int64_t r_;
  std::vector<Simple> factors_;
};

int compare(const Element& a, const Element& b);

struct ElementHash {
  std::size_t operator()(const Element& g) const { return g.hash(); }
};

/// Lmax(a) = Delta /\ a for a positive word: the first normal-form factor.
/// The empty word yields 1.
Simple lmax(const GarsideStructure& st, std::span<const Simple> positive_word);

}  // namespace garside
