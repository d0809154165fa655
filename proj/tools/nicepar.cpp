// nicepar: classify nice parabolic subalgebras of the simple complex Lie
// algebras, compute generic Jordan data, emit Richardson normal forms, and
// cross-check everything against the exact-arithmetic oracle.

#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "nicepar/classify.hpp"
#include "nicepar/jordan.hpp"
#include "nicepar/oracle.hpp"
#include "nicepar/richardson.hpp"

using nlohmann::json;
using namespace nicepar;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagreement = 2;
constexpr int kExitIndeterminate = 3;

struct Options {
  bool json_out = false;
  uint64_t seed = 1;
  int trials = 5;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string verdict_word(bool nice) { return nice ? "nice" : "not nice"; }

std::string oracle_word(const OracleVerdict& v) {
  switch (v.result) {
    case OracleVerdict::Result::nice: return "nice";
    case OracleVerdict::Result::not_nice: return "not nice";
    default: return "indeterminate";
  }
}

LieType parse_type_token(const std::string& s) {
  if (s == "A") return LieType::A;
  if (s == "B") return LieType::B;
  if (s == "C") return LieType::C;
  if (s == "D") return LieType::D;
  if (s == "G2") return LieType::G2;
  if (s == "F4") return LieType::F4;
  if (s == "E6") return LieType::E6;
  if (s == "E7") return LieType::E7;
  if (s == "E8") return LieType::E8;
  throw parse_error("unknown type '" + s + "'", 0);
}

json spec_json(const SpecInput& in) {
  json j;
  j["spec"] = to_string(in.spec);
  if (is_classical(in.spec.type))
    j["blocks"] = (in.blocks_given ? *in.blocks_given : coloring_to_blocks(in.spec)).blocks;
  return j;
}

int cmd_classify(const std::string& spec_text, bool verify, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  SpecInput in = parse_spec(spec_text);
  NicenessVerdict closed = is_nice(in.spec);

  bool have_dim_route = is_classical(in.spec.type);
  bool dim_route = false;
  if (have_dim_route) dim_route = nice_via_dimension(coloring_to_blocks(in.spec));

  bool disagreement = have_dim_route && dim_route != closed.nice;
  OracleVerdict oracle{OracleVerdict::Result::not_nice};
  if (verify) {
    oracle = is_nice_oracle(in.spec, opt.trials, opt.seed);
    if (oracle.determinate() && oracle.nice() != closed.nice) disagreement = true;
  }

  json j = spec_json(in);
  j["closed_form"] = {{"nice", closed.nice}, {"rule", closed.rule}};
  if (have_dim_route) j["dimension_route"] = {{"nice", dim_route}};
  if (verify)
    j["oracle"] = {{"verdict", oracle_word(oracle)},
                   {"samples", oracle.samples},
                   {"generic_samples", oracle.generic_samples},
                   {"seed", opt.seed},
                   {"trials", opt.trials}};
  j["disagreement"] = disagreement;
  j["elapsed_seconds"] = seconds_since(t0);

  if (opt.json_out) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "spec: " << to_string(in.spec);
    if (j.contains("blocks")) {
      std::cout << "  blocks:";
      for (int b : j["blocks"]) std::cout << " " << b;
    }
    std::cout << "\nclosed-form: " << verdict_word(closed.nice) << " (rule " << closed.rule << ")\n";
    if (have_dim_route) std::cout << "dimension-route: " << verdict_word(dim_route) << "\n";
    if (verify)
      std::cout << "oracle: " << oracle_word(oracle) << " (samples=" << oracle.samples
                << ", generic=" << oracle.generic_samples << ")\n";
    if (disagreement) std::cout << "DISAGREEMENT between verdict routes\n";
  }
  if (verify && !oracle.determinate()) return kExitIndeterminate;
  return disagreement ? kExitDisagreement : kExitOk;
}

int cmd_jordan(const std::string& spec_text, const Options& opt) {
  SpecInput in = parse_spec(spec_text);
  if (!is_classical(in.spec.type))
    throw unsupported_operation("jordan: closed-form Jordan data exists for classical types only");
  BlockSequence bs = in.blocks_given ? *in.blocks_given : coloring_to_blocks(in.spec);
  JordanForm jf = jordan_form(bs);
  Partition p = jf.partition();
  Partition dual = dual_partition(p);
  int cd = centralizer_dim(p, bs.type);
  int ld = levi_dim(bs);

  json j = spec_json(in);
  j["partition"] = p.parts;
  j["dual_partition"] = dual.parts;
  j["power_ranks"] = jf.ranks;
  j["centralizer_dim"] = cd;
  j["levi_dim"] = ld;
  j["nice_via_dimension"] = (cd == ld);
  if (opt.json_out) {
    std::cout << j.dump() << "\n";
  } else {
    auto list = [](const std::vector<int>& v) {
      std::string s = "(";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s + ")";
    };
    std::cout << "spec: " << to_string(bs) << "\n"
              << "partition: " << list(p.parts) << "\n"
              << "dual: " << list(dual.parts) << "\n"
              << "centralizer_dim: " << cd << "\n"
              << "levi_dim: " << ld << "\n"
              << "nice_via_dimension: " << (cd == ld ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int cmd_richardson(const std::string& spec_text, const std::string& format, bool check, const Options& opt) {
  SpecInput in = parse_spec(spec_text);
  if (!is_classical(in.spec.type))
    throw unsupported_operation("richardson: normal forms exist for classical types only");
  BlockSequence bs = in.blocks_given ? *in.blocks_given : coloring_to_blocks(in.spec);
  NicenessVerdict verdict = is_nice(bs);
  if (!verdict.nice) {
    std::cerr << "refusing: " << to_string(bs) << " is not nice (rule " << verdict.rule << ")\n";
    return kExitUsage;
  }
  RichardsonMatrix xr = build_matrix(bs);

  bool check_ok = true;
  json check_json;
  if (check) {
    MatrixModel model(bs.type, bs.rank);
    ExactMatrix x = xr.to_exact();
    bool member = bs.type == LieType::A || model.contains(x);
    int cd = model.centralizer_dim(x);
    int ld = levi_dim(bs);
    auto ranks = matrix_power_ranks(x, xr.size);
    bool ranks_ok = true;
    for (std::size_t p = 0; p < ranks.size(); ++p)
      if (ranks[p] != generic_rank(bs, static_cast<int>(p) + 1)) ranks_ok = false;
    check_ok = member && cd == ld && ranks_ok;
    check_json = {{"membership", member},
                  {"centralizer_dim", cd},
                  {"levi_dim", ld},
                  {"power_ranks_match_closed_form", ranks_ok},
                  {"ok", check_ok}};
  }

  if (opt.json_out || format == "json") {
    json j = spec_json(in);
    j["richardson"] = json::parse(to_json(xr));
    if (check) j["check"] = check_json;
    std::cout << j.dump() << "\n";
  } else if (format == "csv") {
    std::cout << to_csv(xr);
    if (check) std::cout << "# check: " << (check_ok ? "ok" : "FAILED") << "\n";
  } else {
    std::cout << "spec: " << to_string(bs) << "\n" << to_text_grid(xr);
    if (check)
      std::cout << "check: membership=" << check_json["membership"]
                << " dim_centralizer=" << check_json["centralizer_dim"]
                << " dim_levi=" << check_json["levi_dim"]
                << " ranks=" << check_json["power_ranks_match_closed_form"] << " -> "
                << (check_ok ? "ok" : "FAILED") << "\n";
  }
  return check_ok ? kExitOk : kExitDisagreement;
}

int cmd_sweep(const std::string& type_token, int max_rank, int budget, const Options& opt) {
  LieType type = parse_type_token(type_token);
  int lo, hi;
  if (is_classical(type)) {
    switch (type) {
      case LieType::A: lo = 1; break;
      case LieType::B: lo = 2; break;
      case LieType::C: lo = 3; break;
      default: lo = 4; break;
    }
    hi = max_rank;
    if (max_rank < lo) throw error("max_rank below the minimum rank for this type");
  } else {
    lo = hi = exceptional_rank(type);
    if (max_rank != lo) throw error("rank for " + type_name(type) + " must be " + std::to_string(lo));
  }

  int done = 0, nice_count = 0, disagreements = 0, indeterminates = 0;
  bool truncated = false;
  json rows = json::array();
  for (int rank = lo; rank <= hi && !truncated; ++rank) {
    for (int mask = 0; mask < (1 << rank); ++mask) {
      if (done >= budget) {
        truncated = true;
        break;
      }
      std::vector<int> u(rank);
      for (int i = 0; i < rank; ++i) u[i] = (mask >> i) & 1;
      ParabolicSpec spec(type, rank, u);
      NicenessVerdict closed = is_nice(spec);
      bool have_dim = is_classical(type);
      bool dim_route = have_dim ? nice_via_dimension(coloring_to_blocks(spec)) : false;
      OracleVerdict oracle = is_nice_oracle(spec, opt.trials, opt.seed);
      ++done;

      bool agree = true;
      if (have_dim && dim_route != closed.nice) agree = false;
      if (!oracle.determinate())
        ++indeterminates;
      else if (oracle.nice() != closed.nice)
        agree = false;
      if (!agree) ++disagreements;
      if (closed.nice) ++nice_count;

      if (opt.json_out) {
        json row = {{"spec", to_string(spec)},
                    {"closed_form", closed.nice},
                    {"oracle", oracle_word(oracle)},
                    {"agree", agree}};
        if (have_dim) row["dimension_route"] = dim_route;
        rows.push_back(row);
      } else if (!agree || !oracle.determinate()) {
        std::cout << to_string(spec) << "  closed=" << verdict_word(closed.nice)
                  << (have_dim ? std::string("  dim=") + verdict_word(dim_route) : std::string())
                  << "  oracle=" << oracle_word(oracle) << "  <-- attention\n";
      }
    }
  }

  if (opt.json_out) {
    json j = {{"type", type_name(type)},
              {"max_rank", hi},
              {"colorings", done},
              {"nice", nice_count},
              {"disagreements", disagreements},
              {"indeterminate", indeterminates},
              {"truncated", truncated},
              {"rows", rows},
              {"seed", opt.seed},
              {"trials", opt.trials}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "sweep " << type_name(type) << " up to rank " << hi << ": " << done
              << " colorings, " << nice_count << " nice, " << disagreements << " disagreements, "
              << indeterminates << " indeterminate" << (truncated ? " [TRUNCATED by budget]" : "")
              << "\n";
  }
  if (disagreements > 0) return kExitDisagreement;
  if (indeterminates > 0) return kExitIndeterminate;
  return kExitOk;
}

int cmd_even_orbits(const std::string& type_token, int rank, const Options& opt) {
  LieType type = parse_type_token(type_token);
  EvenOrbitCount c = count_even_orbits(type, rank);
  if (opt.json_out) {
    json comps = json::array();
    for (const auto& comp : c.compositions) comps.push_back(comp.parts);
    json j = {{"type", type_name(type)}, {"rank", rank}, {"count", c.count}, {"compositions", comps}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "even orbits of " << type_name(type) << rank << ": " << c.count << "\n";
    for (const auto& comp : c.compositions) {
      for (std::size_t i = 0; i < comp.parts.size(); ++i)
        std::cout << (i ? "," : "(") << comp.parts[i];
      std::cout << ")\n";
    }
  }
  return kExitOk;
}

int cmd_genfun(int max_degree, const Options& opt) {
  GenfunCoefficients gc = genfun_coefficients(max_degree);
  if (opt.json_out) {
    json lhs = json::array(), rhs = json::array();
    for (const auto& v : gc.lhs) lhs.push_back(v.get_str());
    for (const auto& v : gc.rhs) rhs.push_back(v.get_str());
    json j = {{"max_degree", max_degree}, {"lhs", lhs}, {"rhs", rhs}, {"match", gc.match()}};
    std::cout << j.dump() << "\n";
  } else {
    auto row = [](const char* label, const std::vector<mpz_class>& v) {
      std::cout << label;
      for (std::size_t i = 1; i < v.size(); ++i) std::cout << " " << v[i].get_str();
      std::cout << "\n";
    };
    row("lhs:", gc.lhs);
    row("rhs:", gc.rhs);
    std::cout << "match=" << (gc.match() ? "true" : "false") << "\n";
  }
  return gc.match() ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nice parabolic subalgebras: classification, Jordan data, Richardson normal forms"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json_out, "machine-readable JSON output");
  app.add_option("--seed", opt.seed, "seed for the oracle's random sampling (default 1)");
  app.add_option("--trials", opt.trials, "samples per oracle verdict (default 5)");

  std::string spec_text, format = "text", type_token;
  int rank_arg = 0, budget = 4096, max_degree = 40;
  bool verify = false, check = false;

  auto* classify = app.add_subcommand("classify", "closed-form niceness verdict");
  classify->add_option("spec", spec_text, "e.g. A6:1,0,1,0,0,1 or C5#3,4,3")->required();
  classify->add_flag("--verify", verify, "also run the exact-arithmetic oracle");

  auto* jordan = app.add_subcommand("jordan", "generic Jordan form and centralizer dimension");
  jordan->add_option("spec", spec_text)->required();

  auto* richardson = app.add_subcommand("richardson", "Richardson element normal form");
  richardson->add_option("spec", spec_text)->required();
  richardson->add_option("--format", format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  richardson->add_flag("--check", check, "verify the construction exactly");

  auto* sweep = app.add_subcommand("sweep", "compare all verdict routes over every coloring");
  sweep->add_option("type", type_token, "A, B, C, D, G2, F4, E6, E7 or E8")->required();
  auto* rank_pos = sweep->add_option("max_rank", rank_arg, "largest rank to sweep");
  auto* rank_opt = sweep->add_option("--max-rank", rank_arg, "largest rank to sweep");
  rank_pos->excludes(rank_opt);
  sweep->add_option("--budget", budget, "max colorings before truncation (default 4096)");

  auto* orbits = app.add_subcommand("even-orbits", "count even nilpotent orbits");
  orbits->add_option("type", type_token)->required();
  orbits->add_option("rank", rank_arg)->required();

  auto* genfun = app.add_subcommand("genfun", "orbit-count generating function, both sides");
  genfun->add_option("max_degree", max_degree)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(spec_text, verify, opt);
    if (jordan->parsed()) return cmd_jordan(spec_text, opt);
    if (richardson->parsed()) return cmd_richardson(spec_text, format, check, opt);
    if (sweep->parsed()) {
      if (rank_pos->count() == 0 && rank_opt->count() == 0)
        throw error("sweep needs a rank bound (positional or --max-rank)");
      return cmd_sweep(type_token, rank_arg, budget, opt);
    }
    if (orbits->parsed()) return cmd_even_orbits(type_token, rank_arg, opt);
    if (genfun->parsed()) return cmd_genfun(max_degree, opt);
  } catch (const parse_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const indeterminate_error& e) {
    std::cerr << "indeterminate: " << e.what() << "\n";
    return kExitIndeterminate;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
