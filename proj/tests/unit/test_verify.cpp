#include "fqg/verify.hpp"

#include <random>

#include "helpers.hpp"

using namespace fqg;

TEST_CASE("battery enumeration") {
  const auto all = battery_instances({});
  CHECK(all.size() >= 150);
  for (const auto& k : all) {
    const uint64_t N = k.kind == GroupKind::Split ? k.n : 2 * k.n;
    CHECK(static_cast<uint64_t>(k.s * k.s) % N == 1 % N);
    CHECK(std::gcd(2 * N, k.q) == 1);
  }
  BatteryFilter none;
  none.qs = {};
  CHECK(battery_instances(none).empty());
  BatteryFilter three;
  three.q_mod4 = 3;
  for (const auto& k : battery_instances(three)) CHECK(k.q % 4 == 3);
  BatteryFilter even;
  even.qs = {4, 8};
  CHECK(battery_instances(even).empty());
}

TEST_CASE("pinned instances verify") {
  for (auto [kind, n, s] : std::vector<std::tuple<GroupKind, uint64_t, int64_t>>{
           {GroupKind::Split, 4, 3}, {GroupKind::NonSplit, 2, 3}}) {
    const auto r = verify_instance(GroupPresentation::make(kind, n, s, 3));
    CHECK_MESSAGE(r.passed(), r.group);
    CHECK(r.components == 5);
    CHECK(r.center_dimension == 5);
    CHECK(r.find("noncentral") != nullptr);
  }
}

TEST_CASE("randomized sample of the battery") {
  auto keys = battery_instances({});
  std::mt19937_64 rng(20261016);
  std::shuffle(keys.begin(), keys.end(), rng);
  keys.resize(40);
  const auto reports = run_battery(keys, {}, 4);
  REQUIRE(reports.size() == keys.size());
  for (size_t i = 0; i < keys.size(); ++i) {
    const auto& r = reports[i];
    CHECK(r.error.empty());
    CHECK(r.n == keys[i].n);
    for (const char* name : {"associativity", "dimension", "center", "component_images", "faithful",
                             "cyclic_idempotent", "central_idempotents", "central_images", "noncentral",
                             "tower_index_two", "perlis_walker", "remark"}) {
      const Check* c = r.find(name);
      REQUIRE_MESSAGE(c != nullptr, name);
      CHECK_MESSAGE(c->passed, r.group, " q=", r.q, " ", name, " ", c->detail);
    }
  }
}

TEST_CASE("battery results are deterministic across thread counts") {
  BatteryFilter f;
  f.max_n = 6;
  f.qs = {5, 7};
  const auto keys = battery_instances(f);
  const auto a = run_battery(keys, {}, 1);
  const auto b = run_battery(keys, {}, 8);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].group == b[i].group);
    CHECK(a[i].passed() == b[i].passed());
    CHECK(a[i].checks.size() == b[i].checks.size());
  }
}

TEST_CASE("lifting the exponent") {
  const auto r = lte_check(20, 10, {2, 3, 5, 7});
  CHECK(r.checked > 100);
  CHECK(r.failures.empty());
}
