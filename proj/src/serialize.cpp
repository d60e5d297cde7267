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

#include "puzzle/serialize.hpp"

#include <limits>

#include "puzzle/render.hpp"

namespace puzzle {

namespace {

template <typename P>
json terms_to_json(const P& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) {
    json coef;
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
      coef = static_cast<std::int64_t>(c);
    } else {
      coef = c.str();
    }
    out.push_back({{"coef", coef}, {"exp", e}});
  }
  return out;
}

template <typename P>
P terms_from_json(const json& j, int n) {
  if (!j.is_array()) throw InputError("coefficient must be an array of terms");
  P p(n);
  for (const json& t : j) {
    if (!t.is_object() || !t.contains("coef") || !t.contains("exp")) {
      throw InputError("term needs \"coef\" and \"exp\"");
    }
    const json& c = t.at("coef");
    Integer coef;
    if (c.is_number_integer()) {
      coef = c.get<std::int64_t>();
    } else if (c.is_string()) {
      try {
        coef = Integer(c.get<std::string>());
      } catch (const std::exception&) {
        throw InputError("bad coefficient \"" + c.get<std::string>() + "\"");
      }
    } else {
      throw InputError("coefficient must be an integer");
    }
    const auto e = t.at("exp").get<Exponent>();
    if (static_cast<int>(e.size()) != n) throw InputError("exponent has the wrong length");
    if constexpr (std::is_same_v<P, Poly>) {
      for (int x : e) {
        if (x < 0) throw InputError("negative exponent in a polynomial");
      }
    }
    p.add_term(e, coef);
  }
  return p;
}

Word word_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) throw InputError(std::string("missing word \"") + key + "\"");
  return Word::from_string(j.at(key).get<std::string>());
}

}  // namespace

json coefficient_to_json(const Coefficient& c) {
  return std::visit([](const auto& p) { return terms_to_json(p); }, c);
}

Coefficient coefficient_from_json(const json& j, Theory t, int n) {
  if (is_laurent(t)) return terms_from_json<LPoly>(j, n);
  return terms_from_json<Poly>(j, n);
}

json result_to_json(const CoefficientResult& r) {
  json coefs = json::object();
  for (const auto& [lambda, c] : r.coefficients) coefs[lambda.str()] = coefficient_to_json(c);
  return {{"n", r.mu.size()},       {"k", r.mu.ones()},       {"mu", r.mu.str()},
          {"nu", r.nu.str()},       {"theory", to_string(r.theory)}, {"coefficients", coefs},
          {"puzzle_count", r.puzzle_count}};
}

CoefficientResult result_from_json(const json& j) {
  try {
    CoefficientResult r;
    r.mu = word_field(j, "mu");
    r.nu = word_field(j, "nu");
    r.theory = parse_theory(j.at("theory").get<std::string>());
    const int n = j.at("n").get<int>();
    if (n != r.mu.size() || j.at("k").get<int>() != r.mu.ones()) throw InputError("n or k disagrees with mu");
    for (const auto& [key, terms] : j.at("coefficients").items()) {
      const Word lambda = Word::from_string(key);
      if (lambda.size() != n) throw InputError("lambda " + key + " has the wrong length");
      r.coefficients.emplace(lambda, coefficient_from_json(terms, r.theory, n));
    }
    r.puzzle_count = j.at("puzzle_count").get<std::size_t>();
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed result JSON: ") + e.what());
  }
}

json dots_to_json(const DotSet& d) {
  json dots = json::array();
  for (const Cell& c : d.dots()) dots.push_back({c.i, c.j});
  return {{"n", d.n()}, {"dots", dots}};
}

DotSet dots_from_json(const json& j) {
  try {
    std::vector<Cell> cells;
    for (const json& c : j.at("dots")) {
      if (!c.is_array() || c.size() != 2) throw InputError("a dot is a pair [i, j]");
      cells.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    return DotSet(j.at("n").get<int>(), cells);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed dot set JSON: ") + e.what());
  }
}

json conditions_to_json(const std::vector<RankCondition>& conds) {
  json out = json::array();
  for (const RankCondition& c : conds) out.push_back({{"i", c.cell.i}, {"j", c.cell.j}, {"bound", c.bound}});
  return out;
}

json branch_to_json(const Branch& b) {
  json out = {{"kind", to_string(b.kind)}, {"position", to_string(b.pos)}, {"ul", std::string(1, label_char(b.ul))}};
  if (b.pos.kind == FillPosition::Kind::Rhombus) {
    out["i"] = b.pos.i;
    out["j"] = b.pos.j;
    out["ll"] = std::string(1, label_char(b.ll));
    out["h"] = b.h ? json(std::string(1, label_char(*b.h))) : json(nullptr);
  } else {
    out["column"] = b.pos.c;
  }
  return out;
}

json trace_to_json(const DegenerationNode& node) {
  const int n = node.path.n();
  json out = {{"path", node.path.str()},
              {"dots", dots_to_json(node.dots)},
              {"essential", conditions_to_json(node.essential)},
              {"nontrivial", format_conditions(nontrivial_conditions(node.dots))},
              {"envelope", {node.envelope.first.str(), node.envelope.second.str()}},
              {"envelope_codim", node.envelope_codim},
              {"path_codim", node.path_codim}};
  if (node.via) {
    json via = branch_to_json(*node.via);
    json weights = json::object();
    for (Theory t : kTheories) weights[to_string(t)] = render(branch_weight(t, *node.via, n));
    via["weights"] = weights;
    out["via"] = via;
  }
  if (node.path.is_final()) out["lambda"] = node.path.final_word().str();
  json children = json::array();
  for (const DegenerationNode& c : node.children) children.push_back(trace_to_json(c));
  out["children"] = children;
  return out;
}

json puzzles_to_json(const Word& mu, const Word& nu, const std::vector<PuzzleResult>& puzzles) {
  json list = json::array();
  for (const PuzzleResult& r : puzzles) {
    json kinds = json::object();
    for (int k = 0; k < kBranchKinds; ++k) {
      const auto kind = static_cast<BranchKind>(k);
      kinds[to_string(kind)] = r.puzzle.count(kind);
    }
    list.push_back({{"lambda", r.lambda.str()},
                    {"weight", render(r.weight)},
                    {"pieces", kinds},
                    {"ascii", render_ascii(r.puzzle)}});
  }
  return {{"mu", mu.str()}, {"nu", nu.str()}, {"count", puzzles.size()}, {"puzzles", list}};
}

json reports_to_json(const std::vector<Report>& reports) {
  json suites = json::array();
  bool all = true;
  for (const Report& r : reports) {
    json fails = json::array();
    for (const Failure& f : r.failures) {
      fails.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
    }
    all = all && r.pass();
    suites.push_back({{"suite", r.suite},
                      {"status", r.pass() ? "pass" : "fail"},
                      {"cases", r.cases},
                      {"failed", r.failed},
                      {"failures", fails}});
  }
  return {{"status", all ? "pass" : "fail"}, {"suites", suites}};
}

}  // namespace puzzle
