#include "garside/element.hpp"

#include <algorithm>

#include "garside/errors.hpp"

namespace garside {

namespace {

// Drops units and absorbs Delta factors into the exponent. A Delta at
// position i commutes to the front across the kept prefix, twisting it.
void absorb(const GarsideStructure& st, std::vector<Simple>& dst,
            std::int64_t& r, const Simple& s) {
  if (st.is_one(s)) return;
  if (st.is_delta(s)) {
    for (Simple& g : dst) g = st.tau(g);
    ++r;
    return;
  }
  dst.push_back(s);
}

}  // namespace

Element Element::identity(const GarsideStructure& st) {
  return Element(st, 0, {});
}

Element Element::delta_power(const GarsideStructure& st, std::int64_t r) {
  return Element(st, r, {});
}

Element Element::from_simple(const GarsideStructure& st, const Simple& s) {
  return make(st, 0, {s});
}

Element Element::make(const GarsideStructure& st, std::int64_t r,
                      std::vector<Simple> raw) {
  for (const Simple& s : raw) {
    if (s.structure_id() != st.id())
      throw StructureMismatchError("factor belongs to structure '" +
                                   structure_by_id(s.structure_id()).spec() +
                                   "', expected '" + st.spec() + "'");
  }

  std::vector<Simple> fs;
  fs.reserve(raw.size());
  for (const Simple& s : raw) absorb(st, fs, r, s);

  // Local sliding until every adjacent pair is left-weighted. Each step
  // moves at least one atom of norm leftward, so a pass count of
  // len * (len + 2) can never be reached.
  std::size_t guard = 16 + fs.size() * (fs.size() + 2) *
                               static_cast<std::size_t>(st.delta_norm() + 1);
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
      Simple t = st.meet(st.complement(fs[i]), fs[i + 1]);
      if (st.is_one(t)) continue;
      fs[i + 1] = st.left_quotient(t, fs[i + 1]);
      fs[i] = st.product(fs[i], t);
      changed = true;
    }
    if (!changed) break;
    std::vector<Simple> next;
    next.reserve(fs.size());
    for (const Simple& s : fs) absorb(st, next, r, s);
    fs = std::move(next);
    if (guard-- == 0)
      throw InternalConsistencyError("normal form computation did not stabilize");
  }
  return Element(st, r, std::move(fs));
}

std::int64_t Element::word_length() const {
  if (inf() >= 0) return sup();
  if (sup() <= 0) return -inf();
  return len();
}

Element operator*(const Element& g, const Element& h) {
  if (&g.structure() != &h.structure())
    throw StructureMismatchError("cannot multiply elements of '" +
                                 g.structure().spec() + "' and '" +
                                 h.structure().spec() + "'");
  const GarsideStructure& st = g.structure();
  std::vector<Simple> fs;
  fs.reserve(g.factors_.size() + h.factors_.size());
  for (const Simple& s : g.factors_) fs.push_back(st.tau_power(s, h.r_));
  for (const Simple& s : h.factors_) fs.push_back(s);
  return Element::make(st, g.r_ + h.r_, std::move(fs));
}

Element Element::inverse() const {
  const GarsideStructure& st = *st_;
  const std::int64_t k = len();
  std::vector<Simple> fs;
  fs.reserve(factors_.size());
  // (Delta^r s_1...s_k)^{-1} = Delta^{-(r+k)} v_k ... v_1 with
  // v_j = tau^{-(r+j)}(d(s_j)).
  for (std::int64_t j = k; j >= 1; --j)
    fs.push_back(st.tau_power(st.complement(factors_[static_cast<std::size_t>(j - 1)]),
                              -(r_ + j)));
  return make(st, -(r_ + k), std::move(fs));
}

Element Element::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  Element acc = identity(*st_);
  Element base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

Element Element::tau_conjugate(std::int64_t m) const {
  std::vector<Simple> fs;
  fs.reserve(factors_.size());
  for (const Simple& s : factors_) fs.push_back(st_->tau_power(s, m));
  return make(*st_, r_, std::move(fs));
}

int compare(const Element& a, const Element& b) {
  if (a.structure().id() != b.structure().id())
    return a.structure().id() < b.structure().id() ? -1 : 1;
  if (a.inf() != b.inf()) return a.inf() < b.inf() ? -1 : 1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  if (fa.size() != fb.size()) return fa.size() < fb.size() ? -1 : 1;
  for (std::size_t i = 0; i < fa.size(); ++i)
    if (int c = compare(fa[i], fb[i])) return c;
  return 0;
}

bool Element::operator==(const Element& other) const {
  return compare(*this, other) == 0;
}

bool Element::operator<(const Element& other) const {
  return compare(*this, other) < 0;
}

std::size_t Element::hash() const {
  std::size_t h = 0x2545f4914f6cdd1dull ^ st_->id();
  h = (h * 0x100000001b3ull) ^ static_cast<std::size_t>(r_ + (1ll << 32));
  for (const Simple& s : factors_) h = (h * 0x100000001b3ull) ^ s.hash();
  return h;
}

Simple lmax(const GarsideStructure& st, std::span<const Simple> positive_word) {
  Element e = Element::make(st, 0,
                            std::vector<Simple>(positive_word.begin(),
                                                positive_word.end()));
  if (e.inf() >= 1) return st.delta();
  if (e.factors().empty()) return st.one();
  return e.factors().front();
}

}  // namespace garside
