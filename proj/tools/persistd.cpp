// persistd: command-line front end for exact interleaving distances.
//
// Exit codes: 0 success, 1 a verification or certificate check failed,
// 2 usage, parse or domain error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "persistd/bottleneck.hpp"
#include "persistd/families.hpp"
#include "persistd/io.hpp"
#include "persistd/pmodule.hpp"
#include "persistd/verify.hpp"

namespace {

using namespace persistd;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PModule load_module(const std::string& path) {
  try {
    return parse_module(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.message(), e.position());
  }
}

MatchOptions match_options() {
  MatchOptions opt;
  if (const char* cap = std::getenv("PERSISTD_MATCH_CAP")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(cap, &used);
      if (used != std::string(cap).size() || v == 0) throw std::invalid_argument(cap);
      opt.vertex_cap = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw UsageError(std::string("PERSISTD_MATCH_CAP must be a positive integer, got '") + cap + "'");
    }
  }
  return opt;
}

Bounds parse_bounds(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("bounds must be written c,d");
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1), comma + 1)};
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start), start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void print_module(const PModule& m) { std::cout << module_to_json(m).dump() << "\n"; }

// `--key value` / `--key=value` pairs left over after CLI11 parsing.
verify::Params parse_suite_params(const std::vector<std::string>& extras) {
  verify::Params params;
  for (std::size_t k = 0; k < extras.size(); ++k) {
    const std::string& arg = extras[k];
    if (arg.rfind("--", 0) != 0 || arg.size() == 2) throw UsageError("unexpected argument '" + arg + "'");
    const auto eq = arg.find('=');
    if (eq != std::string::npos) {
      params[arg.substr(2, eq - 2)] = arg.substr(eq + 1);
    } else {
      if (k + 1 >= extras.size()) throw UsageError("parameter '" + arg + "' needs a value");
      params[arg.substr(2)] = extras[++k];
    }
  }
  return params;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact interleaving distances of interval-decomposable persistence modules"};
  app.require_subcommand(1);

  std::string path_a;
  std::string path_b;
  std::string path_m;
  std::string rational_arg;
  bool approx = false;

  auto* dist = app.add_subcommand("dist", "Print d_I(A, B) exactly (p/q or inf)");
  dist->add_option("A", path_a, "first module (JSON)")->required();
  dist->add_option("B", path_b, "second module (JSON)")->required();
  dist->add_flag("--approx", approx, "also print a decimal approximation");

  auto* inter = app.add_subcommand("interleaved", "Decide whether A and B are eps-interleaved");
  inter->add_option("--eps", rational_arg, "interleaving parameter p/q")->required();
  inter->add_option("A", path_a)->required();
  inter->add_option("B", path_b)->required();

  std::string bounds_arg;
  auto* cls = app.add_subcommand("classify", "Report class membership of a module");
  cls->add_option("--bounds", bounds_arg, "c,d for membership in (ffid^[c,d])");
  cls->add_option("M", path_m)->required();

  auto* rad = app.add_subcommand("radical", "Print the radical of a module");
  rad->add_option("M", path_m)->required();

  auto* persist = app.add_subcommand("persist", "Print the p-persistent submodule");
  persist->add_option("--p", rational_arg, "persistence p/q >= 0")->required();
  persist->add_option("M", path_m)->required();

  auto* contract = app.add_subcommand("contract", "Print the contraction path at t");
  contract->add_option("--t", rational_arg, "path parameter in [0,1]")->required();
  contract->add_option("M", path_m)->required();

  auto* cert = app.add_subcommand("cert", "Emit a matching certificate for d_I(A, B)");
  cert->add_option("A", path_a)->required();
  cert->add_option("B", path_b)->required();

  std::string path_cert;
  auto* check = app.add_subcommand("check-cert", "Re-check a matching certificate");
  check->add_option("A", path_a)->required();
  check->add_option("B", path_b)->required();
  check->add_option("CERT", path_cert)->required();

  auto* gen = app.add_subcommand("gen", "Generate a witness-family module");
  gen->require_subcommand(1);
  std::size_t gen_n = 0;
  std::string gen_text;
  std::string gen_eps;
  std::size_t gen_trunc = 1;
  auto* gen_cube = gen->add_subcommand("cube", "cube point module M(x)");
  gen_cube->add_option("--N", gen_n, "dimension")->required();
  gen_cube->add_option("--x", gen_text, "comma-separated coordinates")->required();
  auto* gen_binary = gen->add_subcommand("binary", "binary-sequence module");
  gen_binary->add_option("--bits", gen_text, "bit string, e.g. 0110")->required();
  auto* gen_cauchy = gen->add_subcommand("cauchy", "Cauchy witness M_n");
  gen_cauchy->add_option("--n", gen_n)->required();
  auto* gen_stair = gen->add_subcommand("staircase", "sum of [0,k) for k = 1..n");
  gen_stair->add_option("--n", gen_n)->required();
  auto* gen_rep = gen->add_subcommand("replicate", "n copies of an interval");
  gen_rep->add_option("--interval", gen_text, "interval text form")->required();
  gen_rep->add_option("--n", gen_n)->required();
  auto* gen_wit = gen->add_subcommand("witness", "open-subset witness N for module M");
  gen_wit->add_option("--inclusion", gen_text, "ffid_cd_in_ffid|ffid_in_cfid|fid_in_cid|fid_in_pfd|cid_in_rid|pfd_in_rid")
      ->required();
  gen_wit->add_option("--eps", gen_eps, "radius p/q > 0")->required();
  gen_wit->add_option("--trunc", gen_trunc, "copies kept from infinite sums");
  gen_wit->add_option("--bounds", bounds_arg, "c,d (required for ffid_cd_in_ffid)");
  gen_wit->add_option("M", path_m)->required();

  std::string suite;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  bool as_json = false;
  auto* ver = app.add_subcommand("verify", "Run a seeded property suite; extra --key value pairs are suite parameters");
  ver->add_option("suite", suite, "suite name")->required();
  ver->add_option("--seed", seed);
  ver->add_option("--trials", trials);
  ver->add_flag("--json", as_json, "emit the report as JSON");
  ver->allow_extras();

  auto* replay = app.add_subcommand("replay", "Re-run a counterexample emitted by verify");
  replay->add_option("FILE", path_m, "counterexample JSON")->required();
  replay->allow_extras();

  app.add_subcommand("suites", "List the verification suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*dist) {
      const Distance d = module_distance(load_module(path_a), load_module(path_b), match_options());
      std::cout << to_string(d) << "\n";
      if (approx) std::cout << "approx " << to_decimal(d.ext()) << "\n";
    } else if (*inter) {
      const bool yes = modules_eps_interleaved(load_module(path_a), load_module(path_b),
                                               parse_rational(rational_arg), match_options());
      std::cout << (yes ? "true" : "false") << "\n";
    } else if (*cls) {
      std::optional<Bounds> bounds;
      if (!bounds_arg.empty()) bounds = parse_bounds(bounds_arg);
      const auto c = classify(load_module(path_m), bounds);
      json out{{"in_fid", c.in_fid},
               {"in_ffid", c.in_ffid},
               {"is_ephemeral", c.is_ephemeral},
               {"is_zero", c.is_zero}};
      out["in_ffid_cd"] = c.in_ffid_cd ? json(*c.in_ffid_cd) : json(nullptr);
      std::cout << out.dump() << "\n";
    } else if (*rad) {
      print_module(radical(load_module(path_m)));
    } else if (*persist) {
      print_module(persistent_submodule(load_module(path_m), parse_rational(rational_arg)));
    } else if (*contract) {
      print_module(contraction_path(load_module(path_m), parse_rational(rational_arg)));
    } else if (*cert) {
      const auto c = distance_certificate(load_module(path_a), load_module(path_b), match_options());
      std::cout << certificate_to_json(c).dump() << "\n";
    } else if (*check) {
      const bool ok = verify_certificate(load_module(path_a), load_module(path_b),
                                         parse_certificate(read_file(path_cert)));
      std::cout << (ok ? "valid" : "invalid") << "\n";
      return ok ? 0 : kExitFailure;
    } else if (*gen) {
      if (*gen_cube) {
        print_module(cube_point_module(gen_n, parse_rational_list(gen_text)));
      } else if (*gen_binary) {
        std::vector<bool> bits;
        for (char ch : gen_text) {
          if (ch != '0' && ch != '1') throw UsageError("bits must be a string of 0 and 1");
          bits.push_back(ch == '1');
        }
        print_module(binary_sequence_module(bits));
      } else if (*gen_cauchy) {
        print_module(cauchy_witness(gen_n));
      } else if (*gen_stair) {
        print_module(staircase(gen_n));
      } else if (*gen_rep) {
        print_module(replicate(parse_interval(gen_text), gen_n));
      } else if (*gen_wit) {
        std::optional<Bounds> bounds;
        if (!bounds_arg.empty()) bounds = parse_bounds(bounds_arg);
        print_module(open_subset_witness(load_module(path_m), parse_inclusion(gen_text),
                                         parse_rational(gen_eps), gen_trunc, bounds));
      }
    } else if (*ver) {
      const auto report =
          verify::run_suite(suite, seed, trials, parse_suite_params(ver->remaining()));
      if (as_json) {
        std::cout << verify::report_to_json(report).dump(2) << "\n";
      } else {
        std::cout << verify::report_to_table(report);
      }
      return report.all_passed() ? 0 : kExitFailure;
    } else if (*replay) {
      json payload;
      try {
        payload = json::parse(read_file(path_m));
      } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), detail::json_error_offset(e));
      }
      if (payload.contains("counterexample")) payload = payload["counterexample"];
      const auto outcome = verify::replay(payload, parse_suite_params(replay->remaining()));
      std::cout << (outcome.ok ? "pass" : "fail") << " " << outcome.values.dump() << "\n";
      return outcome.ok ? 0 : kExitFailure;
    } else {
      for (const auto& name : verify::suite_names()) std::cout << name << "\n";
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
