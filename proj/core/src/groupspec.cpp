#include "fqg/groupspec.hpp"

#include <charconv>
#include <numeric>

#include "fqg/error.hpp"
#include "fqg/numtheory.hpp"

namespace fqg {

std::string_view kind_name(GroupKind k) { return k == GroupKind::Split ? "split" : "nonsplit"; }

GroupPresentation GroupPresentation::make(GroupKind kind, uint64_t n, int64_t s, uint64_t q) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be >= 1");
  if (!prime_power(q)) throw Error(Errc::InvalidArgument, "q = " + std::to_string(q) + " is not a prime power");
  if (q % 2 == 0) throw Error(Errc::EvenCharacteristic, "q must be odd");
  GroupPresentation g;
  g.kind_ = kind;
  g.n_ = n;
  g.N_ = kind == GroupKind::Split ? n : 2 * n;
  g.q_ = q;
  if (std::gcd(2 * g.N_, q) != 1) throw Error(Errc::OrderNotCoprime, "gcd(|G|, q) != 1");
  const auto sN = static_cast<int64_t>(g.N_);
  const int64_t r = mod_floor(s, sN);
  if (static_cast<u128>(r) * r % g.N_ != 1 % g.N_) {
    throw Error(Errc::SNotInvolutive, "s^2 != 1 mod " + std::to_string(g.N_));
  }
  g.s_ = static_cast<uint64_t>(mod_floor(s - 1, sN)) + 1;
  const uint64_t sm1 = g.s_ - 1;
  g.d_ = sm1 == 0 ? g.N_ : std::gcd(g.N_, sm1);
  g.s_adj_ = g.s_;
  if (kind == GroupKind::NonSplit && q % 4 == 3) {
    const unsigned vq = padic_valuation(2, static_cast<int64_t>(q + 1));
    const unsigned vn = padic_valuation(2, static_cast<int64_t>(n));
    const unsigned vs = padic_valuation(2, static_cast<int64_t>(g.s_ + 1));
    if (vn <= vq && vs > vq + 1) g.s_adj_ = g.s_ + g.N_;
  }
  return g;
}

std::pair<GroupKind, std::pair<uint64_t, int64_t>> GroupPresentation::parse(std::string_view text) {
  auto fail = [&] {
    throw Error(Errc::ParseError,
                "expected 'split:n=<n>,s=<s>' or 'nonsplit:n=<n>,s=<s>', got '" + std::string(text) + "'");
  };
  const size_t colon = text.find(':');
  if (colon == std::string_view::npos) fail();
  const std::string_view head = text.substr(0, colon);
  GroupKind kind;
  if (head == "split") {
    kind = GroupKind::Split;
  } else if (head == "nonsplit") {
    kind = GroupKind::NonSplit;
  } else {
    fail();
  }
  std::string_view rest = text.substr(colon + 1);
  bool have_n = false, have_s = false;
  uint64_t n = 0;
  int64_t s = 0;
  while (!rest.empty()) {
    const size_t comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.size() < 3 || item[1] != '=') fail();
    const char* first = item.data() + 2;
    const char* last = item.data() + item.size();
    if (item[0] == 'n') {
      auto [p, ec] = std::from_chars(first, last, n);
      if (ec != std::errc{} || p != last || have_n) fail();
      have_n = true;
    } else if (item[0] == 's') {
      auto [p, ec] = std::from_chars(first, last, s);
      if (ec != std::errc{} || p != last || have_s) fail();
      have_s = true;
    } else {
      fail();
    }
  }
  if (!have_n || !have_s) fail();
  return {kind, {n, s}};
}

std::string GroupPresentation::to_string() const {
  return std::string(kind_name(kind_)) + ":n=" + std::to_string(n_) + ",s=" + std::to_string(s_);
}

std::vector<std::pair<uint64_t, unsigned>> group_elements(const GroupPresentation& g) {
  std::vector<std::pair<uint64_t, unsigned>> out;
  out.reserve(g.order());
  for (unsigned j = 0; j < 2; ++j) {
    for (uint64_t i = 0; i < g.N(); ++i) out.emplace_back(i, j);
  }
  return out;
}

}  // namespace fqg
