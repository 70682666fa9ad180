#include "garside/conjugacy.hpp"

#include <algorithm>
#include <set>
#include <shared_mutex>
#include <thread>
#include <unordered_map>

#include "garside/errors.hpp"

namespace garside {

Element conjugate(const Element& h, const Element& c) {
  return c.inverse() * h * c;
}

Element cycling(const Element& h) {
  if (h.len() == 0) return h;
  const GarsideStructure& st = h.structure();
  std::vector<Simple> fs(h.factors().begin() + 1, h.factors().end());
  fs.push_back(st.tau_power(h.factors().front(), -h.inf()));
  return Element::make(st, h.inf(), std::move(fs));
}

Element decycling(const Element& h) {
  if (h.len() == 0) return h;
  const GarsideStructure& st = h.structure();
  std::vector<Simple> fs;
  fs.reserve(h.factors().size());
  fs.push_back(st.tau_power(h.factors().back(), h.inf()));
  fs.insert(fs.end(), h.factors().begin(), h.factors().end() - 1);
  return Element::make(st, h.inf(), std::move(fs));
}

namespace {

// The conjugator that cycling applies.
Element cycling_conjugator(const Element& h) {
  const GarsideStructure& st = h.structure();
  return Element::from_simple(st, st.tau_power(h.factors().front(), -h.inf()));
}

// Decycling conjugates by the inverse of the last factor.
Element decycling_conjugator(const Element& h) {
  return Element::from_simple(h.structure(), h.factors().back()).inverse();
}

}  // namespace

std::pair<Element, Element> summit_representative(const Element& g) {
  Element h = g;
  Element witness = Element::identity(g.structure());
  bool improved_outer = true;
  while (improved_outer) {
    improved_outer = false;

    // Cycling phase: raise inf. The trajectory is deterministic, so a
    // revisit without improvement means inf is maximal along it.
    std::set<Element> visited;
    while (h.len() > 0) {
      if (!visited.insert(h).second) break;
      Element c = cycling_conjugator(h);
      Element next = cycling(h);
      witness = witness * c;
      if (next.inf() > h.inf()) {
        improved_outer = true;
        visited.clear();
      }
      h = next;
    }

    // Decycling phase: lower sup.
    visited.clear();
    while (h.len() > 0) {
      if (!visited.insert(h).second) break;
      Element c = decycling_conjugator(h);
      Element next = decycling(h);
      witness = witness * c;
      if (next.sup() < h.sup()) {
        improved_outer = true;
        visited.clear();
      }
      h = next;
    }
  }
  return {h, witness};
}

namespace {

struct SummitVals {
  std::int64_t inf_s;
  std::int64_t sup_s;
};

SummitVals summit_invariants(const Element& g) {
  static std::unordered_map<Element, SummitVals, ElementHash> cache;
  static std::shared_mutex mutex;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(g);
    if (it != cache.end()) return it->second;
  }
  Element h = summit_representative(g).first;
  SummitVals vals{h.inf(), h.sup()};
  std::unique_lock lock(mutex);
  cache.emplace(g, vals);
  return vals;
}

}  // namespace

std::int64_t inf_s(const Element& g) { return summit_invariants(g).inf_s; }
std::int64_t sup_s(const Element& g) { return summit_invariants(g).sup_s; }
std::int64_t len_s(const Element& g) {
  SummitVals v = summit_invariants(g);
  return v.sup_s - v.inf_s;
}

namespace detail {

SummitSet simple_conjugation_closure(
    const Element& base, const Element& seed, const Element& seed_witness,
    SummitKind kind, const std::function<bool(const Element&)>& keep,
    const SearchOptions& opts) {
  const GarsideStructure& st = seed.structure();
  const std::vector<Simple>& simples = st.all_simples();

  std::set<Element> seen{seed};
  std::map<Element, Element> witnesses;
  if (opts.witnesses) witnesses.emplace(seed, seed_witness);

  std::vector<Element> frontier{seed};
  while (!frontier.empty()) {
    // Candidate generation is pure; the filtering pass below is sequential
    // and runs in a fixed order, so parallel and serial results agree.
    struct Cand {
      Element value;
      std::size_t parent;
      std::size_t simple;
    };
    const std::size_t total = frontier.size() * simples.size();
    std::vector<std::optional<Cand>> cands(total);
    auto generate = [&](std::size_t begin, std::size_t end) {
      for (std::size_t idx = begin; idx < end; ++idx) {
        std::size_t pi = idx / simples.size();
        std::size_t si = idx % simples.size();
        if (st.is_one(simples[si])) continue;
        Element c = Element::from_simple(st, simples[si]);
        cands[idx] = Cand{conjugate(frontier[pi], c), pi, si};
      }
    };
    unsigned workers = opts.parallel ? std::thread::hardware_concurrency() : 1;
    if (workers > 1 && total > 16) {
      std::vector<std::thread> pool;
      std::size_t chunk = (total + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        if (begin >= total) break;
        pool.emplace_back(generate, begin, std::min(total, begin + chunk));
      }
      for (std::thread& t : pool) t.join();
    } else {
      generate(0, total);
    }

    std::vector<Element> next;
    for (std::size_t idx = 0; idx < total; ++idx) {
      if (!cands[idx]) continue;
      const Cand& cand = *cands[idx];
      if (seen.count(cand.value)) continue;
      if (!keep(cand.value)) continue;
      seen.insert(cand.value);
      if (seen.size() > opts.member_cap)
        throw ResourceLimitError(
            "summit set closure exceeded member cap of " +
            std::to_string(opts.member_cap));
      if (opts.witnesses) {
        Element c = Element::from_simple(st, simples[cand.simple]);
        witnesses.emplace(cand.value,
                          witnesses.at(frontier[cand.parent]) * c);
      }
      next.push_back(cand.value);
    }
    frontier = std::move(next);
  }

  SummitSet out{base,
                kind,
                seed.inf(),
                seed.sup(),
                std::vector<Element>(seen.begin(), seen.end()),
                std::nullopt};
  if (opts.witnesses) out.conjugators = std::move(witnesses);
  return out;
}

}  // namespace detail

SummitSet super_summit_set(const Element& g, const SearchOptions& opts) {
  auto [h0, c0] = summit_representative(g);
  const std::int64_t inf_target = h0.inf();
  const std::int64_t sup_target = h0.sup();
  return detail::simple_conjugation_closure(
      g, h0, c0, SummitKind::kSuper,
      [&](const Element& h) {
        return h.inf() == inf_target && h.sup() == sup_target;
      },
      opts);
}

}  // namespace garside
