#include "fqg/report_json.hpp"

#include "helpers.hpp"

using namespace fqg;

TEST_CASE("factorization json") {
  auto rep = classify(factor_xn_minus_1(4, make_field(3, 1)), 3);
  const Json j = factorization_json(rep);
  CHECK(j["N"] == 4);
  CHECK(j["s"] == 3);
  CHECK(j["d"] == 2);
  REQUIRE(j["factors"].size() == 3);
  for (const auto& f : j["factors"]) {
    CHECK(f.contains("coset"));
    CHECK(f.contains("self_involutive"));
    CHECK(f.contains("divides_xd"));
    CHECK(f.contains("partner"));
    CHECK(Poly::parse(rep.field, f["poly"].get<std::string>()).to_string() == f["poly"]);
  }
}

TEST_CASE("decomposition json round trip") {
  const auto g = GroupPresentation::make(GroupKind::Split, 4, 3, 3);
  const auto dec = decompose(g);
  const Json j = decomposition_json(dec);
  const Json back = Json::parse(j.dump());
  CHECK(back == j);
  CHECK(back["components"].size() == 5);
  CHECK(back["totals"]["dimension"] == 8);
  uint64_t dim = 0;
  for (const auto& c : back["components"]) {
    dim += c["l"].get<uint64_t>() * c["l"].get<uint64_t>() * c["m"].get<uint64_t>();
    CHECK(c["image_x"].size() == c["l"]);
    // entries are coefficient vectors over F_p
    CHECK(c["image_x"][0][0].size() == dec.splitting().ext->absolute_degree());
  }
  CHECK(dim == 8);
}

TEST_CASE("idempotent json") {
  const auto g = GroupPresentation::make(GroupKind::Split, 4, 3, 3);
  const auto dec = decompose(g);
  auto A = GroupAlgebra::make(g, dec.factorization.field);
  const auto set = all_idempotents(dec, A, true, false);
  const Json j = idempotents_json(dec, set);
  CHECK(j["central"].size() == 5);
  CHECK(j["noncentral"].size() == 1);
  for (const auto& e : j["central"]) {
    // rebuild from the sparse coefficients and compare with the flat vector
    std::vector<uint32_t> v(8, 0);
    for (const auto& c : e["coeffs"]) {
      v[c["power_of_x"].get<size_t>() + (c["has_y"].get<bool>() ? 4 : 0)] = c["value"].get<uint32_t>();
    }
    CHECK(e["vector"].get<std::vector<uint32_t>>() == v);
    CHECK(e["kind"] == "central_primitive");
  }
  CHECK(j["central"][4]["coeffs"].dump() ==
        R"([{"power_of_x":0,"has_y":false,"value":2},{"power_of_x":2,"has_y":false,"value":1}])");
}

TEST_CASE("text reports") {
  const auto g = GroupPresentation::make(GroupKind::NonSplit, 2, 3, 3);
  const auto dec = decompose(g);
  const std::string t = decomposition_text(dec);
  CHECK(t.find("total: 5 components, dimension 8") != std::string::npos);
  const auto r = verify_instance(g);
  CHECK(instance_text(r).find("PASS") != std::string::npos);
  CHECK(battery_text({r}).find("instances: 1, failed: 0") != std::string::npos);
}
