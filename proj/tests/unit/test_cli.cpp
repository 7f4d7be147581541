#include "fqg_cli/cli.hpp"

#include <sstream>

#include "fqg/report_json.hpp"
#include "helpers.hpp"

using namespace fqg;
using namespace fqg::cli;

namespace {
struct Out {
  int code;
  std::string out, err;
};
Out run_cfg(const RunConfig& c) {
  std::ostringstream o, e;
  const int code = run(c, o, e);
  return {code, o.str(), e.str()};
}
RunConfig cfg(Command cmd, uint64_t q, const std::string& group) {
  RunConfig c;
  c.command = cmd;
  c.q = q;
  c.group = group;
  return c;
}
}  // namespace

TEST_CASE("field order parsing") {
  CHECK(parse_field_order("9") == 9);
  CHECK(parse_field_order("3^2") == 9);
  CHECK(parse_field_order("5**3") == 125);
  CHECK_ERRC(parse_field_order("x"), Errc::InvalidArgument);
  CHECK_ERRC(parse_field_order("3^"), Errc::InvalidArgument);
}

TEST_CASE("decompose json") {
  auto c = cfg(Command::Decompose, 3, "split:n=4,s=3");
  c.format = Format::Json;
  const auto r = run_cfg(c);
  CHECK(r.code == kOk);
  const Json j = Json::parse(r.out);
  CHECK(j["components"].size() == 5);
  CHECK(j["totals"]["dimension"] == 8);
  CHECK(run_cfg(c).out == r.out);
}

TEST_CASE("exit codes") {
  CHECK(run_cfg(cfg(Command::Verify, 3, "nonsplit:n=2,s=3")).code == kOk);
  const auto even = run_cfg(cfg(Command::Decompose, 4, "split:n=3,s=2"));
  CHECK(even.code == kValidation);
  CHECK(even.err.find("EvenCharacteristic") != std::string::npos);
  CHECK(run_cfg(cfg(Command::Decompose, 3, "split:n=5,s=2")).code == kValidation);
  CHECK(run_cfg(cfg(Command::Decompose, 3, "bogus")).code == kValidation);
  CHECK(run_cfg(cfg(Command::Decompose, 3, "")).code == kValidation);
  // the 2-adic tower claim fails for n = 10 over F_3
  CHECK(run_cfg(cfg(Command::Verify, 3, "split:n=10,s=1")).code == kVerificationFailed);
}

TEST_CASE("factor and idempotents") {
  auto f = cfg(Command::Factor, 3, "");
  f.N = 8;
  const auto r = run_cfg(f);
  CHECK(r.code == kOk);
  CHECK(r.out.find("5 factors") != std::string::npos);
  auto i = cfg(Command::Idempotents, 3, "split:n=4,s=3");
  i.include_noncentral = true;
  const auto ri = run_cfg(i);
  CHECK(ri.code == kOk);
  CHECK(ri.out.find("split of e[1 + 1*x^2]") != std::string::npos);
}

TEST_CASE("battery filters") {
  RunConfig c;
  c.command = Command::Battery;
  c.qs = {};
  const auto empty = run_cfg(c);
  CHECK(empty.code == kOk);
  CHECK(empty.out.find("instances: 0") != std::string::npos);
  c.qs = {5};
  c.max_n = 4;
  const auto small = run_cfg(c);
  CHECK(small.code == kOk);
  CHECK(run_cfg(c).out == small.out);
  c.kind_filter = "cyclic";
  CHECK(run_cfg(c).code == kValidation);
}
