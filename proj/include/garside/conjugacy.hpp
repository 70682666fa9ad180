#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "garside/element.hpp"

namespace garside {

struct SearchOptions {
  /// Hard cap on summit set closures; exceeding it throws ResourceLimitError.
  std::size_t member_cap = 100000;
  /// Expand closure frontiers on multiple threads. The resulting set is
  /// identical to the sequential one.
  bool parallel = false;
  /// Retain a conjugating witness for every member.
  bool witnesses = false;
};

/// c^{-1} h c.
Element conjugate(const Element& h, const Element& c);

/// Conjugation by tau^{-inf(h)}(first factor). Never decreases inf, never
/// increases sup. Identity on elements with len = 0.
Element cycling(const Element& h);

/// Conjugation moving the last factor to the front; dual of cycling.
Element decycling(const Element& h);

/// A conjugate h = c^{-1} g c with inf(h) = inf_s(g) and sup(h) = sup_s(g),
/// found by alternating cycling and decycling phases. Each phase walks the
/// deterministic trajectory and stops when it revisits an element without
/// having improved.
std::pair<Element, Element> summit_representative(const Element& g);

std::int64_t inf_s(const Element& g);
std::int64_t sup_s(const Element& g);
std::int64_t len_s(const Element& g);

enum class SummitKind { kSuper, kStable };

/// A super or stable super summit set with its defining invariants.
struct SummitSet {
  Element base;
  SummitKind kind;
  std::int64_t inf_s;
  std::int64_t sup_s;
  std::vector<Element> members;  // canonically sorted
  /// member -> c with member = c^{-1} base c; present when requested.
  std::optional<std::map<Element, Element>> conjugators;
};

/// All conjugates of g with inf = inf_s(g) and sup = sup_s(g), computed by
/// closing the summit representative under conjugation by simples.
SummitSet super_summit_set(const Element& g, const SearchOptions& opts = {});

namespace detail {
/// Closure of seed under s^-1 h s for simple s, filtered by keep. Used by
/// both summit set computations; deterministic regardless of opts.parallel.
SummitSet simple_conjugation_closure(
    const Element& base, const Element& seed, const Element& seed_witness,
    SummitKind kind, const std::function<bool(const Element&)>& keep,
    const SearchOptions& opts);
}  // namespace detail

}  // namespace garside
