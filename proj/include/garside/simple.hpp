#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <functional>
#include <memory>
#include <variant>

namespace garside {

/// Permutation of {0..n-1} in one-line notation with inline storage.
/// perm[i] is the final position of the strand that starts at position i;
/// composition follows word order (left factor acts first).
class Perm {
 public:
  static constexpr int kMaxStrands = 8;

  Perm() : n_(0), v_{} {}

  static Perm identity(int n) {
    Perm p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) p.v_[i] = static_cast<std::uint8_t>(i);
    return p;
  }

  static Perm reversal(int n) {
    Perm p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) p.v_[i] = static_cast<std::uint8_t>(n - 1 - i);
    return p;
  }

  int size() const { return n_; }
  std::uint8_t operator[](int i) const { return v_[i]; }
  void set(int i, std::uint8_t value) { v_[i] = value; }

  /// Composite permutation of this braid followed by `b`.
  Perm then(const Perm& b) const {
    assert(n_ == b.n_);
    Perm r;
    r.n_ = n_;
    for (int i = 0; i < n_; ++i) r.v_[i] = b.v_[v_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.n_ = n_;
    for (int i = 0; i < n_; ++i) r.v_[v_[i]] = static_cast<std::uint8_t>(i);
    return r;
  }

  int inversions() const {
    int count = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (v_[i] > v_[j]) ++count;
    return count;
  }

  bool is_identity() const {
    for (int i = 0; i < n_; ++i)
      if (v_[i] != i) return false;
    return true;
  }

  friend bool operator==(const Perm& a, const Perm& b) {
    if (a.n_ != b.n_) return false;
    for (int i = 0; i < a.n_; ++i)
      if (a.v_[i] != b.v_[i]) return false;
    return true;
  }

  friend int compare(const Perm& a, const Perm& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_ ? -1 : 1;
    for (int i = 0; i < a.n_; ++i)
      if (a.v_[i] != b.v_[i]) return a.v_[i] < b.v_[i] ? -1 : 1;
    return 0;
  }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ n_;
    for (int i = 0; i < n_; ++i) h = (h * 0x100000001b3ull) ^ v_[i];
    return h;
  }

 private:
  std::uint8_t n_;
  std::array<std::uint8_t, kMaxStrands> v_;
};

/// Simple element of a cyclic amalgam <x,y | x^N = y^N>.
/// axis 0 holds the identity (exp 0) and Delta (exp N); axis 1 is a power
/// of x, axis 2 a power of y, with 1 <= exp <= N-1.
struct CyclicPow {
  std::uint8_t axis = 0;
  std::int32_t exp = 0;

  friend bool operator==(const CyclicPow&, const CyclicPow&) = default;
};

class Simple;

/// Payload of a simple in a direct product: the two component simples.
struct ProductParts {
  std::shared_ptr<const Simple> left;
  std::shared_ptr<const Simple> right;
};

/// A canonical representation of one simple element (left divisor of Delta).
/// Equality requires the owning structure and the payload to be identical;
/// payloads are canonical, so this is equality in the monoid.
class Simple {
 public:
  using Payload = std::variant<Perm, CyclicPow, ProductParts>;

  Simple(std::uint32_t structure_id, Payload payload)
      : sid_(structure_id), payload_(std::move(payload)) {}

  std::uint32_t structure_id() const { return sid_; }
  const Payload& payload() const { return payload_; }

  const Perm& perm() const { return std::get<Perm>(payload_); }
  const CyclicPow& cyclic() const { return std::get<CyclicPow>(payload_); }
  const Simple& left() const { return *std::get<ProductParts>(payload_).left; }
  const Simple& right() const { return *std::get<ProductParts>(payload_).right; }

  bool operator==(const Simple& other) const;
  bool operator!=(const Simple& other) const { return !(*this == other); }
  bool operator<(const Simple& other) const;

  std::size_t hash() const;

 private:
  std::uint32_t sid_;
  Payload payload_;
};

/// Three-way comparison defining the canonical total order on simples.
int compare(const Simple& a, const Simple& b);

Simple make_product_simple(std::uint32_t sid, Simple left, Simple right);

struct SimpleHash {
  std::size_t operator()(const Simple& s) const { return s.hash(); }
};

}  // namespace garside
