#include "fqg/wedderburn.hpp"

#include <map>

#include "helpers.hpp"

using namespace fqg;

namespace {
Decomposition dec_of(GroupKind k, uint64_t n, int64_t s, uint64_t q) {
  return decompose(GroupPresentation::make(k, n, s, q));
}
std::map<std::pair<unsigned, unsigned>, unsigned> shape(const Decomposition& d) {
  std::map<std::pair<unsigned, unsigned>, unsigned> out;
  for (const auto& c : d.components) out[{c.l, c.m}] += c.multiplicity;
  return out;
}
}  // namespace

TEST_CASE("F_3 D_8") {
  const auto d = dec_of(GroupKind::Split, 4, 3, 3);
  CHECK(shape(d) == std::map<std::pair<unsigned, unsigned>, unsigned>{{{1, 1}, 4}, {{2, 1}, 1}});
  CHECK(d.dimension() == 8);
  CHECK(d.center_dimension() == 5);
  for (const auto& c : d.components) CHECK(component_matrices_check(c, d.group));
}

TEST_CASE("F_3 Q_8") {
  const auto d = dec_of(GroupKind::NonSplit, 2, 3, 3);
  // The abelianization is C_2 x C_2, so the commutative part is F_3^4.
  CHECK(shape(d) == std::map<std::pair<unsigned, unsigned>, unsigned>{{{1, 1}, 4}, {{2, 1}, 1}});
  CHECK(d.dimension() == 8);
  CHECK(d.center_dimension() == 5);
  for (const auto& c : d.components) CHECK(component_matrices_check(c, d.group));
}

TEST_CASE("more pinned shapes") {
  const auto ab = dec_of(GroupKind::Split, 3, 1, 7);
  CHECK(shape(ab) == std::map<std::pair<unsigned, unsigned>, unsigned>{{{1, 1}, 6}});
  const auto s8 = dec_of(GroupKind::Split, 8, 3, 7);
  CHECK(s8.dimension() == 16);
  const auto q5 = dec_of(GroupKind::NonSplit, 2, 3, 5);
  CHECK(shape(q5) == std::map<std::pair<unsigned, unsigned>, unsigned>{{{1, 1}, 4}, {{2, 1}, 1}});
  const auto c1 = dec_of(GroupKind::NonSplit, 4, 5, 3);
  CHECK(c1.group.d() == 4);
  CHECK(c1.dimension() == 16);
  CHECK(c1.abelian_case == "s=1 mod 4");
}

TEST_CASE("images are verified and corruption is caught") {
  const auto d = dec_of(GroupKind::Split, 4, 3, 3);
  WedderburnComponent bad = d.components.back();
  REQUIRE(bad.l == 2);
  bad.image_y = bad.image_x;
  CHECK_FALSE(component_matrices_check(bad, d.group));
  WedderburnComponent outside = d.components.back();
  outside.image_x = outside.image_x.scaled(d.splitting().beta);
  CHECK_FALSE(component_matrices_check(outside, d.group));
}

TEST_CASE("constructions on non-split groups") {
  for (auto [n, s, q] : std::vector<std::tuple<uint64_t, int64_t, uint64_t>>{
           {2, 3, 3}, {4, 3, 3}, {4, 7, 3}, {6, 5, 7}, {8, 7, 3}, {8, 9, 7}, {12, 11, 7}, {5, 9, 3}, {3, 5, 11}}) {
    const auto d = dec_of(GroupKind::NonSplit, n, s, q);
    CHECK(d.dimension() == d.group.order());
    for (const auto& c : d.components) CHECK_MESSAGE(component_matrices_check(c, d.group), c.construction);
  }
}

TEST_CASE("express_in_root") {
  const auto d = dec_of(GroupKind::Split, 4, 3, 3);
  const auto& sf = d.splitting();
  const FieldElem xi = sf.alpha;
  auto b = express_in_root(sf, xi, 2, sf.ext->mul(xi, xi));
  REQUIRE(b.has_value());
  CHECK(b->to_string() == "2");
  CHECK_FALSE(express_in_root(sf, sf.ext->one(), 1, xi).has_value());
}

TEST_CASE("wrong kind") {
  const auto g = GroupPresentation::make(GroupKind::Split, 4, 3, 3);
  CHECK_ERRC(decompose_nonsplit(g), Errc::InvalidArgument);
  CHECK(decompose_split(g).component_count() == 5);
}
