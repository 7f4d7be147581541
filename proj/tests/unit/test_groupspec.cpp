#include "fqg/groupspec.hpp"

#include "helpers.hpp"

using namespace fqg;

TEST_CASE("presentations") {
  auto d8 = GroupPresentation::make(GroupKind::Split, 4, 3, 3);
  CHECK(d8.d() == 2);
  CHECK(d8.order() == 8);
  CHECK_FALSE(d8.abelian());
  auto q8 = GroupPresentation::make(GroupKind::NonSplit, 2, 3, 3);
  CHECK(q8.d() == 2);
  CHECK(q8.order() == 8);
  CHECK(q8.N() == 4);
  CHECK(GroupPresentation::make(GroupKind::Split, 4, -1, 3).s() == 3);
  CHECK(GroupPresentation::make(GroupKind::Split, 5, 1, 3).d() == 5);
  CHECK(GroupPresentation::make(GroupKind::Split, 5, 1, 3).abelian());
}

TEST_CASE("validation order") {
  CHECK_ERRC(GroupPresentation::make(GroupKind::Split, 5, 2, 3), Errc::SNotInvolutive);
  CHECK_ERRC(GroupPresentation::make(GroupKind::Split, 3, 2, 4), Errc::EvenCharacteristic);
  CHECK_ERRC(GroupPresentation::make(GroupKind::Split, 3, 1, 3), Errc::OrderNotCoprime);
  CHECK_ERRC(GroupPresentation::make(GroupKind::Split, 4, 3, 6), Errc::InvalidArgument);
  CHECK_ERRC(GroupPresentation::make(GroupKind::Split, 0, 1, 3), Errc::InvalidArgument);
}

TEST_CASE("parsing and listing") {
  auto [kind, ns] = GroupPresentation::parse("nonsplit:n=2,s=3");
  CHECK(kind == GroupKind::NonSplit);
  CHECK(ns.first == 2);
  CHECK(ns.second == 3);
  CHECK_ERRC(GroupPresentation::parse("dihedral:n=2"), Errc::ParseError);
  auto g = GroupPresentation::make(GroupKind::Split, 4, 3, 3);
  CHECK(g.to_string() == "split:n=4,s=3");
  auto els = group_elements(g);
  REQUIRE(els.size() == 8);
  CHECK(els[5] == std::pair<uint64_t, unsigned>{1, 1});
}
