#include "fqg_cli/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "fqg/cycfactor.hpp"
#include "fqg/error.hpp"
#include "fqg/groupspec.hpp"
#include "fqg/idempotents.hpp"
#include "fqg/numtheory.hpp"
#include "fqg/oracle.hpp"
#include "fqg/report_json.hpp"
#include "fqg/verify.hpp"
#include "fqg/wedderburn.hpp"

namespace fqg::cli {

uint64_t parse_field_order(const std::string& text) {
  auto number = [&](const std::string& s) -> uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18) {
      throw Error(Errc::InvalidArgument, "bad field order '" + text + "'");
    }
    return std::stoull(s);
  };
  size_t caret = text.find('^');
  size_t width = 1;
  if (caret == std::string::npos) {
    caret = text.find("**");
    width = 2;
  }
  if (caret == std::string::npos) return number(text);
  const uint64_t p = number(text.substr(0, caret));
  const uint64_t m = number(text.substr(caret + width));
  if (m == 0 || m > 63) throw Error(Errc::InvalidArgument, "bad exponent in '" + text + "'");
  const u128 q = checked_pow(p, static_cast<unsigned>(m));
  if (q > u128{1} << 62) throw Error(Errc::InvalidArgument, "field order too large");
  return static_cast<uint64_t>(q);
}

namespace {

GroupPresentation group_of(const RunConfig& c) {
  if (c.group.empty()) throw Error(Errc::InvalidArgument, "--group is required");
  const auto [kind, ns] = GroupPresentation::parse(c.group);
  return GroupPresentation::make(kind, ns.first, ns.second, c.q);
}

void emit(std::ostream& out, const RunConfig& c, const Json& j, const std::string& text) {
  if (c.format == Format::Json) {
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
}

int run_factor(const RunConfig& c, std::ostream& out) {
  FactorizationReport rep;
  if (!c.group.empty()) {
    const GroupPresentation g = group_of(c);
    rep = classify(factor_xn_minus_1(g.N(), make_field_of_order(g.q())), static_cast<int64_t>(g.s()));
  } else {
    if (c.N == 0) throw Error(Errc::InvalidArgument, "factor needs --group or --N");
    if (!prime_power(c.q) || c.q % 2 == 0) {
      throw Error(Errc::InvalidArgument, "q must be an odd prime power");
    }
    rep = factor_xn_minus_1(c.N, make_field_of_order(c.q));
  }
  emit(out, c, factorization_json(rep), factorization_text(rep));
  return kOk;
}

int run_decompose(const RunConfig& c, std::ostream& out) {
  const Decomposition dec = decompose(group_of(c));
  emit(out, c, decomposition_json(dec), decomposition_text(dec));
  return kOk;
}

int run_idempotents(const RunConfig& c, std::ostream& out) {
  const GroupPresentation g = group_of(c);
  const Decomposition dec = decompose(g);
  const AlgebraPtr A = GroupAlgebra::make(g, dec.factorization.field);
  const IdempotentSet set = all_idempotents(dec, A, c.include_noncentral, c.crt_fallback);
  emit(out, c, idempotents_json(dec, set), idempotents_text(dec, set));
  return kOk;
}

VerifyOptions verify_options(const RunConfig& c) {
  VerifyOptions o;
  o.include_noncentral = true;
  o.interpolation_fallback = c.crt_fallback;
  o.seed = c.seed;
  return o;
}

int run_verify(const RunConfig& c, std::ostream& out) {
  const InstanceReport r = verify_instance(group_of(c), verify_options(c));
  emit(out, c, instance_json(r), instance_text(r));
  return r.passed() ? kOk : kVerificationFailed;
}

int run_battery_command(const RunConfig& c, std::ostream& out) {
  BatteryFilter f;
  if (c.kind_filter == "split") {
    f.kind = GroupKind::Split;
  } else if (c.kind_filter == "nonsplit") {
    f.kind = GroupKind::NonSplit;
  } else if (!c.kind_filter.empty()) {
    throw Error(Errc::InvalidArgument, "--kind must be split or nonsplit");
  }
  f.max_n = c.max_n;
  f.qs = c.qs;
  f.q_mod4 = c.q_mod4;
  f.nonabelian_only = c.nonabelian_only;
  const auto reports = run_battery(battery_instances(f), verify_options(c), c.threads);
  emit(out, c, battery_json(reports), battery_text(reports));
  for (const auto& r : reports) {
    if (!r.passed()) return kVerificationFailed;
  }
  return kOk;
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    switch (c.command) {
      case Command::Factor:
        return run_factor(c, out);
      case Command::Decompose:
        return run_decompose(c, out);
      case Command::Idempotents:
        return run_idempotents(c, out);
      case Command::Verify:
        return run_verify(c, out);
      case Command::Battery:
        return run_battery_command(c, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.internal() ? kInternal : kValidation;
  } catch (const std::exception& e) {
    err << "error: InternalConsistency: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

int main(int argc, char** argv) {
  CLI::App app{"Wedderburn decomposition of F_q G for metacyclic G with a cyclic subgroup of index 2"};
  app.require_subcommand(1);
  RunConfig c;
  std::string q_text, format = "text";
  std::string qs_text;

  auto add_field = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--q", q_text, "field order, e.g. 9 or 3^2");
    if (required) opt->required();
  };
  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", c.group, "split:n=4,s=3 or nonsplit:n=2,s=3");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* factor = app.add_subcommand("factor", "factor x^N - 1 over F_q");
  add_field(factor, true);
  add_group(factor);
  factor->add_option("--N", c.N, "factor x^N - 1 without classifying");
  add_format(factor);

  auto* decompose_cmd = app.add_subcommand("decompose", "simple components with generator images");
  add_field(decompose_cmd, true);
  add_group(decompose_cmd);
  add_format(decompose_cmd);

  auto* idem = app.add_subcommand("idempotents", "central and non-central primitive idempotents");
  add_field(idem, true);
  add_group(idem);
  add_format(idem);
  idem->add_flag("--include-noncentral", c.include_noncentral, "also split the matrix components");
  idem->add_flag("--crt-fallback", c.crt_fallback, "interpolate when no closed formula exists");

  auto* verify = app.add_subcommand("verify", "check every invariant against the group algebra oracle");
  add_field(verify, true);
  add_group(verify);
  add_format(verify);
  verify->add_flag("--crt-fallback", c.crt_fallback, "interpolate when no closed formula exists");
  verify->add_option("--seed", c.seed, "seed for associativity spot checks");

  auto* battery = app.add_subcommand("battery", "verify every (kind, n, s, q) in the standard battery");
  add_format(battery);
  battery->add_option("--kind", c.kind_filter, "split or nonsplit");
  battery->add_option("--max-n", c.max_n, "largest n");
  battery->add_option("--qs", qs_text, "comma-separated field orders");
  battery->add_option("--q-mod4", c.q_mod4, "keep q with q % 4 equal to this");
  battery->add_flag("--nonabelian-only", c.nonabelian_only, "skip s = 1");
  battery->add_flag("--crt-fallback", c.crt_fallback, "interpolate when no closed formula exists");
  battery->add_option("--seed", c.seed, "seed for associativity spot checks");
  battery->add_option("--threads", c.threads, "worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }
  try {
    if (!q_text.empty()) c.q = parse_field_order(q_text);
    if (!qs_text.empty()) {
      c.qs.clear();
      std::stringstream ss(qs_text);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) c.qs.push_back(parse_field_order(item));
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  c.format = format == "json" ? Format::Json : Format::Text;
  if (factor->parsed()) c.command = Command::Factor;
  if (decompose_cmd->parsed()) c.command = Command::Decompose;
  if (idem->parsed()) c.command = Command::Idempotents;
  if (verify->parsed()) c.command = Command::Verify;
  if (battery->parsed()) c.command = Command::Battery;
  return run(c, std::cout, std::cerr);
}

}  // namespace fqg::cli
