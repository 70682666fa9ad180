#include "garside/simple.hpp"

namespace garside {

namespace {

int compare_payload(const Simple::Payload& a, const Simple::Payload& b) {
  if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
  if (std::holds_alternative<Perm>(a))
    return compare(std::get<Perm>(a), std::get<Perm>(b));
  if (std::holds_alternative<CyclicPow>(a)) {
    const auto& x = std::get<CyclicPow>(a);
    const auto& y = std::get<CyclicPow>(b);
    if (x.axis != y.axis) return x.axis < y.axis ? -1 : 1;
    if (x.exp != y.exp) return x.exp < y.exp ? -1 : 1;
    return 0;
  }
  const auto& x = std::get<ProductParts>(a);
  const auto& y = std::get<ProductParts>(b);
  if (int c = compare(*x.left, *y.left)) return c;
  return compare(*x.right, *y.right);
}

}  // namespace

int compare(const Simple& a, const Simple& b) {
  if (a.structure_id() != b.structure_id())
    return a.structure_id() < b.structure_id() ? -1 : 1;
  return compare_payload(a.payload(), b.payload());
}

bool Simple::operator==(const Simple& other) const {
  return compare(*this, other) == 0;
}

bool Simple::operator<(const Simple& other) const {
  return compare(*this, other) < 0;
}

std::size_t Simple::hash() const {
  std::size_t h = 0xcbf29ce484222325ull ^ sid_;
  auto mix = [&h](std::size_t v) { h = (h * 0x100000001b3ull) ^ v; };
  mix(payload_.index());
  if (const Perm* p = std::get_if<Perm>(&payload_)) {
    mix(p->hash());
  } else if (const CyclicPow* c = std::get_if<CyclicPow>(&payload_)) {
    mix(c->axis);
    mix(static_cast<std::size_t>(c->exp));
  } else {
    const auto& parts = std::get<ProductParts>(payload_);
    mix(parts.left->hash());
    mix(parts.right->hash());
  }
  return h;
}

Simple make_product_simple(std::uint32_t sid, Simple left, Simple right) {
  ProductParts parts{std::make_shared<const Simple>(std::move(left)),
                     std::make_shared<const Simple>(std::move(right))};
  return Simple(sid, Simple::Payload(std::move(parts)));
}

}  // namespace garside
