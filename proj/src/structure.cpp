#include "garside/structure.hpp"

#include <charconv>
#include <map>
#include <memory>

#include "garside/errors.hpp"
#include "structures_impl.hpp"

namespace garside {

bool GarsideStructure::divides(const Simple& a, const Simple& b) const {
  return meet(a, b) == a;
}

Simple GarsideStructure::tau_power(const Simple& a, std::int64_t m) const {
  Simple s = a;
  if (m >= 0) {
    for (std::int64_t i = 0; i < m; ++i) s = tau(s);
  } else {
    for (std::int64_t i = 0; i < -m; ++i) s = tau_inverse(s);
  }
  return s;
}

const std::vector<Simple>& GarsideStructure::all_simples() const {
  std::call_once(simples_once_, [this] { simples_ = enumerate_simples(); });
  return simples_;
}

std::pair<Simple, Simple> GarsideStructure::normal_step(const Simple& a,
                                                        const Simple& b) const {
  Simple t = meet(complement(a), b);
  if (is_one(t)) return {a, b};
  return {product(a, t), left_quotient(t, b)};
}

namespace {

// Process-lifetime registry of structures keyed by canonical spec string,
// so element and simple handles stay valid and ids are stable.
class Registry {
 public:
  static Registry& instance() {
    static Registry r;
    return r;
  }

  template <typename Make>
  const GarsideStructure& get_or_create(const std::string& spec, Make make) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = by_spec_.find(spec);
    if (it != by_spec_.end()) return *by_id_[it->second];
    std::uint32_t id = static_cast<std::uint32_t>(by_id_.size());
    std::unique_ptr<GarsideStructure> st = make(id);
    by_spec_.emplace(spec, id);
    by_id_.push_back(std::move(st));
    return *by_id_.back();
  }

  const GarsideStructure& by_id(std::uint32_t id) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (id >= by_id_.size())
      throw InternalConsistencyError("unknown structure id");
    return *by_id_[id];
  }

 private:
  std::mutex mutex_;
  std::map<std::string, std::uint32_t> by_spec_;
  std::vector<std::unique_ptr<GarsideStructure>> by_id_;
};

}  // namespace

const GarsideStructure& make_braid(int n, int max_strands) {
  if (max_strands > Perm::kMaxStrands) max_strands = Perm::kMaxStrands;
  if (n < 2 || n > max_strands)
    throw ParseError("braid strand count out of range [2," +
                         std::to_string(max_strands) + "]: " + std::to_string(n),
                     0);
  std::string spec = "braid:" + std::to_string(n);
  return Registry::instance().get_or_create(spec, [&](std::uint32_t id) {
    return std::make_unique<detail::BraidStructure>(id, n);
  });
}

const GarsideStructure& make_cyclic_amalgam(int big_n) {
  if (big_n < 2 || big_n > 1000000)
    throw ParseError("cyclic amalgam exponent out of range [2,1000000]: " +
                         std::to_string(big_n),
                     0);
  std::string spec = "cyclic:" + std::to_string(big_n);
  return Registry::instance().get_or_create(spec, [&](std::uint32_t id) {
    return std::make_unique<detail::CyclicAmalgamStructure>(id, big_n);
  });
}

const GarsideStructure& make_product(const GarsideStructure& a,
                                     const GarsideStructure& b) {
  std::string spec = "product(" + a.spec() + "," + b.spec() + ")";
  return Registry::instance().get_or_create(spec, [&](std::uint32_t id) {
    return std::make_unique<detail::ProductStructure>(id, a, b);
  });
}

const GarsideStructure& structure_by_id(std::uint32_t id) {
  return Registry::instance().by_id(id);
}

namespace {

int parse_int(std::string_view text, std::size_t& pos, std::size_t base_pos) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec != std::errc() || ptr == text.data() + pos)
    throw ParseError("expected an integer in group spec at offset " +
                         std::to_string(base_pos + pos),
                     base_pos + pos);
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

const GarsideStructure& parse_spec(std::string_view text, std::size_t& pos,
                                   std::size_t base_pos) {
  auto starts_with = [&](std::string_view prefix) {
    return text.substr(pos, prefix.size()) == prefix;
  };
  if (starts_with("braid:")) {
    pos += 6;
    return make_braid(parse_int(text, pos, base_pos));
  }
  if (starts_with("cyclic:")) {
    pos += 7;
    return make_cyclic_amalgam(parse_int(text, pos, base_pos));
  }
  if (starts_with("product(")) {
    pos += 8;
    const GarsideStructure& left = parse_spec(text, pos, base_pos);
    if (pos >= text.size() || text[pos] != ',')
      throw ParseError("expected ',' in product spec at offset " +
                           std::to_string(base_pos + pos),
                       base_pos + pos);
    ++pos;
    const GarsideStructure& right = parse_spec(text, pos, base_pos);
    if (pos >= text.size() || text[pos] != ')')
      throw ParseError("expected ')' in product spec at offset " +
                           std::to_string(base_pos + pos),
                       base_pos + pos);
    ++pos;
    return make_product(left, right);
  }
  throw ParseError("unknown group spec at offset " +
                       std::to_string(base_pos + pos) + ": '" +
                       std::string(text.substr(pos)) + "'",
                   base_pos + pos);
}

}  // namespace

const GarsideStructure& structure_for_spec(std::string_view spec) {
  std::size_t pos = 0;
  const GarsideStructure& st = parse_spec(spec, pos, 0);
  if (pos != spec.size())
    throw ParseError("trailing characters in group spec at offset " +
                         std::to_string(pos) + ": '" +
                         std::string(spec.substr(pos)) + "'",
                     pos);
  return st;
}

}  // namespace garside
