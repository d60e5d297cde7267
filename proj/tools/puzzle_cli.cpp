/* Copyright 2026 The puzzlepath Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "puzzle/errors.hpp"
#include "puzzle/filling.hpp"
#include "puzzle/interval_rank.hpp"
#include "puzzle/render.hpp"
#include "puzzle/serialize.hpp"
#include "puzzle/verify.hpp"

namespace {

using namespace puzzle;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitInvariant = 2;

struct Common {
  int threads = 0;
  bool json = false;
};

Word word_arg(const std::string& s) { return Word::from_string(s); }

// --- coeff -------------------------------------------------------------------

struct CoeffArgs {
  std::string theory;
  std::string mu;
  std::string nu;
};

int run_coeff(const CoeffArgs& a, const Common& c) {
  const Theory t = parse_theory(a.theory);
  const Word mu = word_arg(a.mu);
  const Word nu = word_arg(a.nu);
  CoefficientResult r{mu, nu, t, structure_constants_parallel(t, mu, nu, c.threads), 0};
  if (c.json) {
    r.puzzle_count = enumerate_puzzles(mu, nu, std::nullopt, t).size();
    std::cout << result_to_json(r).dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& [lambda, coef] : r.coefficients) std::cout << lambda.str() << ": " << render(coef) << "\n";
  return kExitOk;
}

// --- puzzles -----------------------------------------------------------------

struct PuzzlesArgs {
  std::string mu;
  std::string nu;
  std::string lambda;
  std::string theory = "kt";
  std::string render;
  std::string out = ".";
};

int run_puzzles(const PuzzlesArgs& a, const Common& c) {
  const Word mu = word_arg(a.mu);
  const Word nu = word_arg(a.nu);
  std::optional<Word> lambda;
  if (!a.lambda.empty()) lambda = word_arg(a.lambda);
  const Theory t = parse_theory(a.theory);
  const std::vector<PuzzleResult> found = enumerate_puzzles(mu, nu, lambda, t);

  if (a.render == "svg") {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(a.out, ec);
    if (ec || !fs::is_directory(a.out)) throw InputError("cannot create output directory " + a.out);
    for (std::size_t x = 0; x < found.size(); ++x) {
      const Boundary b = read_boundary(found[x].puzzle);
      const fs::path file = fs::path(a.out) / svg_filename(b, static_cast<int>(x));
      std::ofstream f(file);
      f << render_svg(found[x].puzzle, "lambda=" + b.lambda.str() + "  weight " + render(found[x].weight));
      if (!f) throw InputError("cannot write " + file.string());
      if (!c.json) std::cout << file.string() << "\n";
    }
  }
  if (c.json) {
    std::cout << puzzles_to_json(mu, nu, found).dump(2) << "\n";
    return kExitOk;
  }
  if (a.render == "ascii") {
    for (std::size_t x = 0; x < found.size(); ++x) {
      std::cout << "# " << x << " lambda=" << found[x].lambda.str() << " weight=" << render(found[x].weight)
                << "\n"
                << render_ascii(found[x].puzzle) << "\n";
    }
  }
  std::cout << "count: " << found.size() << "\n";
  return kExitOk;
}

// --- trace -------------------------------------------------------------------

struct TraceArgs {
  std::string mu;
  std::string nu;
};

void print_node(const DegenerationNode& node, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  const int n = node.path.n();
  if (node.via) {
    std::cout << pad << to_string(*node.via) << "  weights";
    for (Theory t : kTheories) std::cout << " " << to_string(t) << "=" << render(branch_weight(t, *node.via, n));
    std::cout << "\n";
  } else {
    std::cout << pad << "start\n";
  }
  std::cout << pad << "  " << node.path.str() << "\n";
  const std::string conds = format_conditions(nontrivial_conditions(node.dots));
  std::cout << pad << "  dots {" << node.dots.str() << "}  conditions " << (conds.empty() ? "none" : conds)
            << "  envelope " << node.envelope.first.str() << "," << node.envelope.second.str() << "  codim "
            << node.envelope_codim << "\n";
  if (node.path.is_final()) std::cout << pad << "  lambda=" << node.path.final_word().str() << "\n";
  for (const DegenerationNode& child : node.children) print_node(child, depth + 1);
}

int run_trace(const TraceArgs& a, const Common& c) {
  const DegenerationNode root = trace(word_arg(a.mu), word_arg(a.nu));
  if (c.json) {
    std::cout << trace_to_json(root).dump(2) << "\n";
  } else {
    print_node(root, 0);
  }
  return kExitOk;
}

// --- rank --------------------------------------------------------------------

struct RankArgs {
  std::string op;
  int n = 0;
  std::string dots;
  std::string word;
};

std::string dots_list(const std::vector<DotSet>& v) {
  std::string s;
  for (const DotSet& d : v) s += "{" + d.str() + "}\n";
  return s;
}

int run_rank(const RankArgs& a, const Common& c) {
  const DotSet d = parse_dots(a.dots, a.n);
  if (a.op == "dots") {
    const IntervalRankMatrix r = rank_from_dots(d);
    if (c.json) {
      json rows = json::array();
      for (int i = 1; i <= a.n; ++i) {
        json row = json::array();
        for (int j = 1; j <= a.n; ++j) row.push_back(j < i ? json(nullptr) : json(r.at(i, j)));
        rows.push_back(row);
      }
      std::cout << json{{"dots", dots_to_json(d)}, {"rank", rows}}.dump(2) << "\n";
      return kExitOk;
    }
    for (int i = 1; i <= a.n; ++i) {
      for (int j = 1; j <= a.n; ++j) std::cout << (j > 1 ? " " : "") << (j < i ? "." : std::to_string(r.at(i, j)));
      std::cout << "\n";
    }
    return kExitOk;
  }
  if (a.op == "essential") {
    const auto conds = essential_conditions(d);
    if (c.json) {
      std::cout << conditions_to_json(conds).dump(2) << "\n";
    } else {
      std::cout << format_conditions(conds) << "\n";
    }
    return kExitOk;
  }
  if (a.op == "covers") {
    const std::vector<DotSet> cs = covers(d);
    if (c.json) {
      json out = json::array();
      for (const DotSet& x : cs) out.push_back(dots_to_json(x));
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << dots_list(cs);
    }
    return kExitOk;
  }
  if (a.op == "envelope") {
    const auto [lambda, mu] = envelope(d);
    if (c.json) {
      std::cout << json{{"lambda", lambda.str()}, {"mu", mu.str()}, {"codim", envelope_codim(d)}}.dump(2) << "\n";
    } else {
      std::cout << "lambda=" << lambda.str() << " mu=" << mu.str() << "\n";
    }
    return kExitOk;
  }
  if (a.op == "fixed-points") {
    std::vector<Word> members;
    if (!a.word.empty()) {
      members.push_back(word_arg(a.word));
    } else {
      members = all_words(a.n, a.n - d.size());
    }
    json out = json::array();
    for (const Word& w : members) {
      if (w.size() != a.n) throw InputError("word length differs from --n");
      const bool in = fixed_point_in(d, w);
      if (!a.word.empty()) {
        if (c.json) {
          out.push_back({{"word", w.str()}, {"member", in}, {"matching", matching_exists(d, w)}});
        } else {
          std::cout << w.str() << ": " << (in ? "member" : "not a member") << "\n";
        }
      } else if (in) {
        if (c.json) {
          out.push_back(w.str());
        } else {
          std::cout << w.str() << "\n";
        }
      }
    }
    if (c.json) std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  throw InputError("unknown rank operation \"" + a.op + "\"");
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
  int max_n = 5;
  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  bool corrupted = false;
};

int run_verify(const VerifyArgs& a, const Common& c) {
  VerifyOptions opts;
  opts.max_n = a.max_n;
  if (!a.suite.empty()) opts.suite = a.suite;
  opts.seed = a.seed;
  opts.threads = c.threads;
  if (a.corrupted) opts.table = WeightTable::corrupted();
  const std::vector<Report> reports = verify_suite(opts);
  bool pass = true;
  for (const Report& r : reports) pass = pass && r.pass();
  if (c.json) {
    std::cout << reports_to_json(reports).dump(2) << "\n";
  } else {
    for (const Report& r : reports) {
      std::cout << (r.pass() ? "PASS " : "FAIL ") << r.suite << "  cases=" << r.cases << " failed=" << r.failed
                << "\n";
      for (const Failure& f : r.failures) {
        std::cout << "  inputs:   " << f.inputs << "\n  expected: " << f.expected << "\n  actual:   " << f.actual
                  << "\n";
      }
    }
    std::cout << (pass ? "all suites passed" : "verification failed") << " (max-n " << a.max_n << ", seed "
              << a.seed << ")\n";
  }
  return pass ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grassmannian puzzle structure constants and interval rank tools"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "OpenMP threads (0: runtime default)")
      ->envname("PUZZLE_THREADS")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--json", common.json, "JSON output");

  CoeffArgs coeff;
  auto* c_cmd = app.add_subcommand("coeff", "structure constants for (mu, nu)");
  c_cmd->add_option("--theory", coeff.theory, "h, ht, k or kt")->required();
  c_cmd->add_option("--mu", coeff.mu, "NE side word")->required();
  c_cmd->add_option("--nu", coeff.nu, "S side word")->required();
  c_cmd->add_flag("--json", common.json, "JSON output");

  PuzzlesArgs pz;
  auto* p_cmd = app.add_subcommand("puzzles", "enumerate puzzles");
  p_cmd->add_option("--mu", pz.mu, "NE side word")->required();
  p_cmd->add_option("--nu", pz.nu, "S side word")->required();
  p_cmd->add_option("--lambda", pz.lambda, "keep only this NW side");
  p_cmd->add_option("--theory", pz.theory, "skip pieces of weight zero in this theory")->capture_default_str();
  p_cmd->add_option("--render", pz.render, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  p_cmd->add_option("--out", pz.out, "directory for SVG files")->capture_default_str();
  p_cmd->add_flag("--json", common.json, "JSON output");

  TraceArgs tr;
  auto* t_cmd = app.add_subcommand("trace", "annotated degeneration tree");
  t_cmd->add_option("--mu", tr.mu, "NE side word")->required();
  t_cmd->add_option("--nu", tr.nu, "S side word")->required();
  t_cmd->add_flag("--json", common.json, "JSON output");

  RankArgs rk;
  auto* r_cmd = app.add_subcommand("rank", "interval rank operations");
  r_cmd->add_option("op", rk.op, "dots, essential, covers, envelope or fixed-points")
      ->required()
      ->check(CLI::IsMember({"dots", "essential", "covers", "envelope", "fixed-points"}));
  r_cmd->add_option("--n", rk.n, "board size")->required()->check(CLI::NonNegativeNumber);
  r_cmd->add_option("--dots", rk.dots, "dot list \"i,j;i,j;...\"");
  r_cmd->add_option("--word", rk.word, "test a single word (fixed-points)");
  r_cmd->add_flag("--json", common.json, "JSON output");

  VerifyArgs vf;
  auto* v_cmd = app.add_subcommand("verify", "run the verification suites");
  v_cmd->add_option("--max-n", vf.max_n, "largest board size")->capture_default_str();
  v_cmd->add_option("--suite", vf.suite, "run a single suite");
  v_cmd->add_option("--seed", vf.seed, "seed for the randomized checks")->capture_default_str();
  v_cmd->add_flag("--corrupted-table", vf.corrupted, "use a deliberately wrong K_T weight table");
  v_cmd->add_flag("--json", common.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*c_cmd) return run_coeff(coeff, common);
    if (*p_cmd) return run_puzzles(pz, common);
    if (*t_cmd) return run_trace(tr, common);
    if (*r_cmd) return run_rank(rk, common);
    if (*v_cmd) return run_verify(vf, common);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitBadInput;
}
