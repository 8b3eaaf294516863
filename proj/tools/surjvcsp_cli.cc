// surjvcsp command-line front end. Exit codes: 0 ok, 1 usage, 2 parse,
// 3 resource guard, 4 verify mismatch.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "surjvcsp/surjvcsp.hpp"

namespace sv = surjvcsp;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr int kExitMismatch = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

sv::Value value_arg(const std::string& text, const char* what) {
  const auto v = sv::Value::parse(text);
  if (!v) throw sv::ArgumentError(std::string(what) + ": expected P or P/Q, got '" + text + "'");
  return *v;
}

sv::SolveMode mode_of(const std::string& m) {
  if (m == "eds") return sv::SolveMode::Eds;
  if (m == "brute") return sv::SolveMode::Brute;
  if (m == "bnb") return sv::SolveMode::BranchAndBound;
  return sv::SolveMode::Auto;
}

void print(const sv::Json& j) { std::cout << j.dump() << "\n"; }

sv::Json sets_json(const sv::GmcInstance& j, const std::vector<sv::VertexSet>& xs) {
  sv::Json out = sv::Json::array();
  for (sv::VertexSet x : xs) out.push_back(sv::vertex_set_json(j.graph().expand(x)));
  return out;
}

int run_gmc(const std::string& input, bool all, const std::string& alpha_text) {
  const sv::GmcInstance j = sv::parse_gmc(slurp(input)).instance();
  sv::Json out;
  if (j.n() < 2) {
    out["lambda"] = "inf";
    if (all || !alpha_text.empty()) out["solutions"] = sv::Json::array();
    print(out);
    return 0;
  }
  const auto cls = sv::classify_lambda(j);
  if (const auto* z = std::get_if<sv::LambdaZero>(&cls)) {
    out["lambda"] = "0";
    out["witness"] = sv::vertex_set_json(j.graph().expand(z->witness));
    if (all || !alpha_text.empty())
      throw sv::ExponentialOutputError("gmc: lambda is 0, the optimal set can be exponential");
    print(out);
    return 0;
  }
  if (std::holds_alternative<sv::LambdaInfinite>(cls)) {
    out["lambda"] = "inf";
    if (all || !alpha_text.empty()) out["solutions"] = sv::Json::array();
    print(out);
    return 0;
  }
  const sv::Value lambda = std::get<sv::LambdaFinite>(cls).lambda;
  out["lambda"] = lambda.to_string();
  if (!alpha_text.empty()) {
    const sv::Value alpha = value_arg(alpha_text, "--alpha");
    out["alpha"] = alpha.to_string();
    const auto xs = sv::enumerate_alpha_optimal(j, alpha);
    out["count"] = xs.size();
    out["solutions"] = sets_json(j, xs);
  } else if (all) {
    const auto xs = sv::enumerate_optimal(j).second;
    out["count"] = xs.size();
    out["solutions"] = sets_json(j, xs);
  }
  print(out);
  return 0;
}

int run_fixup(const std::string& input, const std::string& bits, const std::string& eps_text,
              const std::string& ratio_text) {
  const auto inst = sv::parse_instance(slurp(input)).instance;
  if (static_cast<int>(bits.size()) != inst.num_vars())
    throw sv::ArgumentError("--assignment: expected " + std::to_string(inst.num_vars()) + " bits");
  const auto start = sv::Assignment::from_string(bits);
  const auto s = sv::fixup_surjective(inst, start, value_arg(ratio_text, "--ratio"),
                                      value_arg(eps_text, "--epsilon"));
  sv::Json out;
  out["assignment"] = sv::assignment_json(s);
  out["value"] = sv::evaluate(inst, s).to_string();
  out["input_value"] = sv::evaluate(inst, start).to_string();
  print(out);
  return 0;
}

int run_verify(const std::string& input, const std::string& mode) {
  const auto inst = sv::parse_instance(slurp(input)).instance;
  const auto got = sv::solve_surjective(inst, mode_of(mode));
  const auto want = sv::brute_vcsp_surjective(inst);
  bool match = got.status == want.status;
  if (match && got.optimal())
    match = got.value == want.value && got.assignment.is_surjective() &&
            sv::evaluate(inst, got.assignment) == got.value;
  const auto all = sv::enumerate_optimal_surjective(inst);
  const bool enum_match = all == sv::brute_vcsp_surjective_all(inst);
  sv::Json out;
  out["match"] = match && enum_match;
  out["solver"] = sv::result_json(got);
  out["oracle"] = sv::result_json(want);
  out["enumeration_match"] = enum_match;
  out["optimal_count"] = all.size();
  print(out);
  return match && enum_match ? 0 : kExitMismatch;
}

sv::Instance bench_instance(const std::string& family, int n) {
  if (family == "cycle") {
    sv::Instance inst(n);
    for (int i = 1; i <= n; ++i) inst.add(sv::Value(1), sv::named::gamma_eq(), {i, i % n + 1}, "eq");
    return inst;
  }
  if (family == "maxcut") {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
    return sv::encode_maxcut(n, edges, 2 * n + 1);
  }
  if (family == "mindist") {
    // Repetition-code checks x_i + x_{i+1} = 0.
    sv::BitMatrix h(n - 1, std::vector<int>(n, 0));
    for (int i = 0; i + 1 < n; ++i) h[i][i] = h[i][i + 1] = 1;
    return sv::encode_min_distance(h);
  }
  throw sv::ArgumentError("--family: expected cycle, maxcut or mindist");
}

int run_bench(const std::vector<std::string>& inputs, const std::string& family,
              const std::vector<int>& sizes, const std::string& mode, int repeat) {
  std::vector<std::pair<std::string, sv::Instance>> cases;
  for (const auto& path : inputs) cases.emplace_back(path, sv::parse_instance(slurp(path)).instance);
  if (!family.empty())
    for (int n : sizes) cases.emplace_back(family + "-" + std::to_string(n), bench_instance(family, n));
  if (cases.empty()) throw sv::ArgumentError("bench: give -i files or --family");
  std::cout << "case,vars,constraints,mode,status,value,path,seconds\n";
  for (const auto& [name, inst] : cases) {
    double best = 0;
    sv::SolveResult res;
    for (int r = 0; r < repeat; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      res = sv::solve_surjective(inst, mode_of(mode));
      const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (r == 0 || dt < best) best = dt;
    }
    std::cout << name << "," << inst.num_vars() << "," << inst.constraints().size() << "," << mode << ","
              << sv::status_name(res.status) << "," << (res.optimal() ? res.value.to_string() : "inf") << ","
              << sv::path_name(res.path) << "," << best << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Surjective Boolean VCSP toolkit"};
  app.require_subcommand(1);

  std::string input, mode = "auto", alpha, bits, eps, ratio = "1", matrix, graph, family;
  bool all_optimal = false;
  std::int64_t w = 0;
  int repeat = 1;
  std::uint64_t limit = 0;
  std::vector<std::string> inputs;
  std::vector<int> sizes{4, 8, 16, 32};
  const std::vector<std::string> modes{"auto", "eds", "brute", "bnb"};

  auto* classify = app.add_subcommand("classify", "Tractability verdict for a language or instance file");
  classify->add_option("-i,--input", input, "VCSP or language file ('-' for stdin)")->required();

  auto* solve = app.add_subcommand("solve", "Optimal surjective assignment");
  solve->add_option("-i,--input", input, "VCSP file")->required();
  solve->add_option("--mode", mode, "auto|eds|brute|bnb")->check(CLI::IsMember(modes));

  auto* enumerate = app.add_subcommand("enumerate", "Stream all optimal surjective assignments");
  enumerate->add_option("-i,--input", input, "VCSP file")->required();
  enumerate->add_option("--limit", limit, "Stop after this many (0 = all)");

  auto* gmc = app.add_subcommand("gmc", "Generalised min-cut: lambda and optimal sets");
  gmc->add_option("-i,--input", input, "GMC file")->required();
  gmc->add_flag("--all-optimal", all_optimal, "List every optimal solution");
  gmc->add_option("--alpha", alpha, "List every alpha-optimal solution (P/Q)");

  auto* fixup = app.add_subcommand("fixup", "Make a Max-VCSP assignment surjective");
  fixup->add_option("-i,--input", input, "VCSP file")->required();
  fixup->add_option("--assignment", bits, "0/1 string, x_1 first")->required();
  fixup->add_option("--epsilon", eps, "Loss allowance (P/Q)")->required();
  fixup->add_option("--ratio", ratio, "Approximation ratio of the input (P/Q)");

  auto* gadget = app.add_subcommand("gadget", "Write a reduction instance");
  gadget->require_subcommand(1);
  auto* mindist = gadget->add_subcommand("mindist", "Minimum distance of a binary code");
  mindist->add_option("--matrix", matrix, "Parity-check matrix file")->required();
  auto* maxcut = gadget->add_subcommand("maxcut", "Max-Cut through mu_w");
  maxcut->add_option("--graph", graph, "Graph file")->required();
  maxcut->add_option("--w", w, "Penalty weight, at least 2|E|+1 (default 2|E|+1)");
  auto* pad = gadget->add_subcommand("pad", "Append two free variables");
  pad->add_option("-i,--input", input, "VCSP file")->required();
  auto* leq = gadget->add_subcommand("leq-constants", "Simulate rho0/rho1 with rho_leq");
  leq->add_option("-i,--input", input, "VCSP file")->required();

  auto* verify = app.add_subcommand("verify", "Cross-check the solver against brute force");
  verify->add_option("-i,--input", input, "VCSP file")->required();
  verify->add_option("--mode", mode, "auto|eds|brute|bnb")->check(CLI::IsMember(modes));

  auto* bench = app.add_subcommand("bench", "Solver timings as CSV");
  bench->add_option("-i,--input", inputs, "VCSP files");
  bench->add_option("--family", family, "cycle|maxcut|mindist");
  bench->add_option("--sizes", sizes, "Sizes for --family")->delimiter(',');
  bench->add_option("--mode", mode, "auto|eds|brute|bnb")->check(CLI::IsMember(modes));
  bench->add_option("--repeat", repeat, "Runs per case; the fastest is reported")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*classify) {
      print(sv::verdict_json(sv::classify_language(sv::parse_language(slurp(input)))));
    } else if (*solve) {
      print(sv::result_json(sv::solve_surjective(sv::parse_instance(slurp(input)).instance, mode_of(mode))));
    } else if (*enumerate) {
      const auto inst = sv::parse_instance(slurp(input)).instance;
      struct Done {};
      std::uint64_t count = 0;
      try {
        sv::enumerate_optimal_surjective(inst, [&](const sv::Assignment& s) {
          std::cout << sv::assignment_json(s).dump() << std::endl;
          if (limit && ++count >= limit) throw Done{};
        });
      } catch (const Done&) {
      }
    } else if (*gmc) {
      return run_gmc(input, all_optimal, alpha);
    } else if (*fixup) {
      return run_fixup(input, bits, eps, ratio);
    } else if (*mindist) {
      std::cout << sv::write_instance(sv::encode_min_distance(sv::parse_matrix(slurp(matrix))));
    } else if (*maxcut) {
      const auto g = sv::parse_graph(slurp(graph));
      const auto edges = g.unit_edges();
      const std::int64_t weight = w ? w : 2 * static_cast<std::int64_t>(edges.size()) + 1;
      std::cout << sv::write_instance(sv::encode_maxcut(g.n, edges, weight));
    } else if (*pad) {
      std::cout << sv::write_instance(sv::pad_surjective(sv::parse_instance(slurp(input)).instance));
    } else if (*leq) {
      std::cout << sv::write_instance(
          sv::simulate_constants_with_leq(sv::parse_instance(slurp(input)).instance));
    } else if (*verify) {
      return run_verify(input, mode);
    } else if (*bench) {
      return run_bench(inputs, family, sizes, mode, repeat);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const sv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const sv::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitParse;
  } catch (const sv::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
