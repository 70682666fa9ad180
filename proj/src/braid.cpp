#include <algorithm>
#include <cassert>
#include <charconv>

#include "garside/errors.hpp"
#include "structures_impl.hpp"

namespace garside::detail {

namespace {

// sigma_i <=_L x  iff  x has a descent at position i.
bool descent_at(const Perm& p, int i) { return p[i] > p[i + 1]; }

// sigma_i^{-1} x: swap the entries at positions i, i+1.
Perm strip_left_atom(const Perm& p, int i) {
  Perm q = p;
  std::uint8_t tmp = q[i];
  q.set(i, q[i + 1]);
  q.set(i + 1, tmp);
  return q;
}

// x sigma_i: swap the values i, i+1 wherever they occur.
Perm append_atom(const Perm& p, int i) {
  Perm q = p;
  for (int k = 0; k < q.size(); ++k) {
    if (q[k] == i)
      q.set(k, static_cast<std::uint8_t>(i + 1));
    else if (q[k] == i + 1)
      q.set(k, static_cast<std::uint8_t>(i));
  }
  return q;
}

}  // namespace

BraidStructure::BraidStructure(std::uint32_t id, int n)
    : GarsideStructure(id), n_(n) {
  spec_ = "braid:" + std::to_string(n);
  delta_norm_ = n * (n - 1) / 2;
  one_ = std::make_unique<Simple>(wrap(Perm::identity(n)));
  delta_ = std::make_unique<Simple>(wrap(Perm::reversal(n)));
  for (int i = 0; i + 1 < n; ++i) {
    Perm p = Perm::identity(n);
    p.set(i, static_cast<std::uint8_t>(i + 1));
    p.set(i + 1, static_cast<std::uint8_t>(i));
    atoms_.push_back(wrap(p));
  }
}

int BraidStructure::norm(const Simple& a) const { return a.perm().inversions(); }

bool BraidStructure::divides(const Simple& a, const Simple& b) const {
  // a <=_L b iff the crossing counts add up along b = a (a^{-1} b).
  const Perm& pa = a.perm();
  const Perm& pb = b.perm();
  Perm inv = pa.inverse();
  Perm quot;
  quot = inv.then(pb);
  return pa.inversions() + quot.inversions() == pb.inversions();
}

Simple BraidStructure::meet(const Simple& a, const Simple& b) const {
  // Greedy: strip common initial atoms; each one divides the meet, and
  // left cancellation keeps the recursion exact.
  Perm u = a.perm();
  Perm v = b.perm();
  Perm w = Perm::identity(n_);
  for (;;) {
    int found = -1;
    for (int i = 0; i + 1 < n_; ++i) {
      if (descent_at(u, i) && descent_at(v, i)) {
        found = i;
        break;
      }
    }
    if (found < 0) return wrap(w);
    u = strip_left_atom(u, found);
    v = strip_left_atom(v, found);
    w = append_atom(w, found);
  }
}

Simple BraidStructure::join(const Simple& a, const Simple& b) const {
  // d anti-isomorphically maps <=_L onto <=_R and permutation inverse swaps
  // the two orders, so join(a,b) = d^{-1}(rev(meet(rev(d a), rev(d b)))).
  // The rev/d^{-1} steps collapse to reading the meet backwards.
  Perm da = complement(a).perm().inverse();
  Perm db = complement(b).perm().inverse();
  Perm m = meet(wrap(da), wrap(db)).perm();
  Perm out = Perm::identity(n_);
  for (int p = 0; p < n_; ++p) out.set(p, m[n_ - 1 - p]);
  return wrap(out);
}

Simple BraidStructure::complement(const Simple& a) const {
  const Perm inv = a.perm().inverse();
  Perm out = Perm::identity(n_);
  for (int p = 0; p < n_; ++p)
    out.set(p, static_cast<std::uint8_t>(n_ - 1 - inv[p]));
  return wrap(out);
}

Simple BraidStructure::tau(const Simple& a) const {
  const Perm& p = a.perm();
  Perm out = Perm::identity(n_);
  for (int i = 0; i < n_; ++i)
    out.set(i, static_cast<std::uint8_t>(n_ - 1 - p[n_ - 1 - i]));
  return wrap(out);
}

Simple BraidStructure::tau_inverse(const Simple& a) const { return tau(a); }

Simple BraidStructure::tau_power(const Simple& a, std::int64_t m) const {
  // Delta^2 is central, so tau has order two on simples.
  return (m % 2 == 0) ? a : tau(a);
}

Simple BraidStructure::product(const Simple& a, const Simple& b) const {
  assert(a.perm().inversions() + b.perm().inversions() ==
         a.perm().then(b.perm()).inversions());
  return wrap(a.perm().then(b.perm()));
}

Simple BraidStructure::left_quotient(const Simple& t, const Simple& b) const {
  assert(divides(t, b));
  return wrap(t.perm().inverse().then(b.perm()));
}

std::optional<Simple> BraidStructure::parse_atom(std::string_view name) const {
  if (name.size() < 2 || name[0] != 's') return std::nullopt;
  int k = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), k);
  if (ec != std::errc() || ptr != name.data() + name.size()) return std::nullopt;
  if (k < 1 || k > n_ - 1) return std::nullopt;
  return atoms_[static_cast<std::size_t>(k - 1)];
}

std::vector<Simple> BraidStructure::enumerate_simples() const {
  std::vector<std::uint8_t> line(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) line[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  std::vector<Simple> out;
  do {
    Perm p = Perm::identity(n_);
    for (int i = 0; i < n_; ++i) p.set(i, line[static_cast<std::size_t>(i)]);
    out.push_back(wrap(p));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

}  // namespace garside::detail
