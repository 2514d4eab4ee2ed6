// Copyright 2026 The tspace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 when
// any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include <sys/wait.h>

#include "fixtures.hpp"
#include "tspace/hierarchy.hpp"
#include "tspace/model_io.hpp"
#include "tspace/morphism.hpp"

using namespace tspace;
namespace fx = tspace::testing;
using nlohmann::json;

namespace {

constexpr int kRandomSpaces = 200;
constexpr std::uint64_t kQuotientSearch = 100'000'000;  // 8^8 < 1e8

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

struct Cli {
  int code;
  std::string out;
};

std::string quote(const std::string& s) { return "'" + s + "'"; }

Cli cli(const std::vector<std::string>& args) {
  std::string cmd = quote(TSPACE_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) { return fx::fixture_path(name); }

std::vector<TypeSpace> random_spaces() {
  std::mt19937_64 rng(20260501);
  std::vector<TypeSpace> out;
  while (out.size() < kRandomSpaces) {
    TypeSpace ts = fx::random_type_space(rng);
    if (validate_type_space(ts).ok()) out.push_back(std::move(ts));
  }
  return out;
}

json actions_of(const json& report, const std::string& player) {
  return report["players"][player]["actions"];
}

// Per-type survivors of a rationalize report, keyed by first state.
std::string type_actions(const json& report, const std::string& player,
                         const std::string& state) {
  for (const auto& t : report["players"][player]["types"]) {
    for (const auto& s : t["states"]) {
      if (s == state) return t["actions"].dump();
    }
  }
  return "?";
}

void criterion_case1(Outcome& o) {
  const Cli r = cli({"rationalize", fixture("case1.game.json")});
  o.expect(r.code == 0, "exit code " + std::to_string(r.code));
  const json rep = json::parse(r.out);
  o.expect(actions_of(rep, "1") == json({"D"}), "player 1 " + actions_of(rep, "1").dump());
  o.expect(actions_of(rep, "2") == json({"L"}), "player 2 " + actions_of(rep, "2").dump());
}

void criterion_case2(Outcome& o) {
  const Cli c = cli({"complete", fixture("case2.json")});
  const json comp = json::parse(c.out);
  o.expect(c.code == 0 && comp["complete"] == true, "not complete");
  o.expect(comp["players"]["1"]["complete"] == true && comp["players"]["2"]["complete"] == true,
           "a player is incomplete");
  const Cli r = cli({"rationalize", fixture("case2.game.json")});
  const json rep = json::parse(r.out);
  o.expect(r.code == 0, "rationalize exit code");
  for (const auto& a : actions_of(rep, "1")) o.expect(a != "U", "U survives for player 1");
  o.expect(actions_of(rep, "1") == json({"D"}) && actions_of(rep, "2") == json({"L"}),
           "survivors " + rep["players"].dump());
}

void criterion_case3(Outcome& o) {
  const Cli r = cli({"rationalize", fixture("case3f.game.json")});
  o.expect(r.code == 0, "exit code");
  const json rep = json::parse(r.out);
  o.expect(actions_of(rep, "1") == json({"U", "D"}), "player 1 " + actions_of(rep, "1").dump());
  o.expect(actions_of(rep, "2") == json({"L", "R"}), "player 2 " + actions_of(rep, "2").dump());
  // Player 1's type is the middle coordinate, player 2's the last.
  o.expect(type_actions(rep, "1", "s1_1_0") == R"(["D"])", "player 1 type 1");
  o.expect(type_actions(rep, "1", "s1_0_0") == R"(["U"])", "player 1 type 0");
  o.expect(type_actions(rep, "2", "s1_0_1") == R"(["R"])", "player 2 type 1");
  o.expect(type_actions(rep, "2", "s1_0_0") == R"(["L"])", "player 2 type 0");
}

std::vector<std::size_t> extents_of(const FiniteMeasurableSpace& space) {
  std::vector<std::size_t> e;
  if (space.is_product()) {
    for (const auto& f : space.factors()) e.push_back(f.size());
  } else {
    e.push_back(space.size());
  }
  return e;
}

// v_{n+1} pushed through (s, l_1, ...) -> (s, parent(l_1), ...) must be v_n.
bool marginal_matches(const HierarchyLevel& upper, const HierarchyLevel& lower) {
  const auto& from = upper.measure.base();
  const auto& to = lower.measure.base();
  const auto up = extents_of(from), down = extents_of(to);
  std::vector<PointIndex> assignment(from.size());
  for (PointIndex p = 0; p < from.size(); ++p) {
    std::vector<std::size_t> coords(up.size());
    std::size_t rest = p;
    for (std::size_t k = up.size(); k-- > 0;) {
      coords[k] = rest % up[k];
      rest /= up[k];
    }
    std::size_t q = 0;
    for (std::size_t k = 0; k < coords.size(); ++k) {
      const std::size_t c = k == 0 ? coords[0] : upper.parents[k - 1][coords[k]];
      q = q * down[k] + c;
    }
    assignment[p] = q;
  }
  const auto map = MeasurableMap::make(from, to, assignment);
  return pushforward(upper.measure, map, to.field()) == lower.measure;
}

void criterion_coherency(Outcome& o, const std::vector<TypeSpace>& spaces) {
  std::size_t checks = 0;
  for (std::size_t k = 0; k < spaces.size() && o.ok; ++k) {
    const TypeSpace& ts = spaces[k];
    o.expect(ts.state_count() <= 8 && ts.player_count() <= 3, "instance out of range");
    const auto table = HierarchyTable::build(ts, 6);
    for (PlayerIndex i = 0; i < ts.player_count(); ++i) {
      for (PointIndex w = 0; w < ts.state_count(); ++w) {
        const auto profile = table.profile(i, w, 6);
        o.expect(coherency_check(profile).coherent,
                 "space " + std::to_string(k) + " incoherent");
        for (std::size_t n = 1; n <= 5; ++n, ++checks) {
          o.expect(marginal_matches(profile.levels[n], profile.levels[n - 1]),
                   "space " + std::to_string(k) + " marginal at depth " + std::to_string(n));
        }
      }
    }
  }
  o.detail = o.ok ? std::to_string(spaces.size()) + " spaces, " + std::to_string(checks) +
                        " marginals" : o.detail;
}

void check_preserved(Outcome& o, const TypeSpace& src, const TypeSpace& tgt,
                     const MeasurableMap& m, std::size_t& count) {
  auto names = std::make_shared<LabelInterner>();
  const auto a = HierarchyTable::build(src, 5, names);
  const auto b = HierarchyTable::build(tgt, 5, names);
  ++count;
  for (PlayerIndex i = 0; i < src.player_count(); ++i) {
    for (PointIndex w = 0; w < src.state_count(); ++w) {
      for (std::size_t n = 1; n <= 5; ++n) {
        if (a.label(i, n, w) != b.label(i, n, m(w))) {
          o.fail("hierarchy moved at depth " + std::to_string(n));
          return;
        }
      }
    }
  }
}

void criterion_preservation(Outcome& o, const std::vector<TypeSpace>& spaces) {
  std::mt19937_64 rng(77);
  std::size_t morphisms = 0;
  for (const TypeSpace& ts : spaces) {
    const QuotientResult q = quotient(ts);
    check_preserved(o, ts, q.quotient, q.projection, morphisms);
  }
  fx::RandomSpaceOptions small;
  small.max_states = 4;
  for (int round = 0; round < 150 && o.ok; ++round) {
    const auto params = fx::random_parameters(rng, 2);
    small.players = 1 + rng() % 3;
    const TypeSpace a = fx::random_type_space(rng, params, small);
    const TypeSpace b = fx::random_type_space(rng, params, small);
    const TypeSpace u = fx::disjoint_union(a, b);
    const TypeSpace q = quotient(u).quotient;
    const std::pair<const TypeSpace*, const TypeSpace*> pairs[] = {
        {&a, &b}, {&b, &a}, {&a, &u}, {&u, &a}, {&a, &q}, {&b, &q}, {&u, &q}, {&q, &q}};
    for (const auto& [src, tgt] : pairs) {
      for (const MeasurableMap& m : find_morphisms(*src, *tgt, kQuotientSearch)) {
        check_preserved(o, *src, *tgt, m, morphisms);
      }
    }
  }
  if (o.ok) o.detail = std::to_string(morphisms) + " morphisms";
}

void criterion_quotient(Outcome& o, const std::vector<TypeSpace>& spaces) {
  for (std::size_t k = 0; k < spaces.size() && o.ok; ++k) {
    const TypeSpace& ts = spaces[k];
    const std::string at = "space " + std::to_string(k) + ": ";
    const QuotientResult q = quotient(ts);
    o.expect(check_morphism(ts, q.quotient, q.projection).ok(), at + "projection");
    o.expect(validate_type_space(q.quotient).ok(), at + "quotient invalid");
    for (PlayerIndex i = 0; i < ts.player_count(); ++i) {
      o.expect(find_duplicates(q.quotient, i).empty(), at + "duplicates remain");
    }
    o.expect(stabilization_depth(ts) <= ts.state_count() * ts.player_count(),
             at + "stabilization beyond bound");
    const QuotientResult qq = quotient(q.quotient);
    o.expect(is_isomorphism(q.quotient, qq.quotient, qq.projection), at + "not idempotent");
  }
  if (o.ok) o.detail = std::to_string(spaces.size()) + " spaces";
}

void criterion_universality(Outcome& o, const std::vector<TypeSpace>& spaces) {
  for (std::size_t k = 0; k < spaces.size() && o.ok; ++k) {
    const QuotientResult q = quotient(spaces[k]);
    const auto found = find_morphisms(spaces[k], q.quotient, kQuotientSearch);
    o.expect(found.size() == 1, "space " + std::to_string(k) + ": " +
                                    std::to_string(found.size()) + " morphisms");
  }
  const TypeSpace c1 = parse_model(read_file(fixture("case1.json")));
  const TypeSpace c2 = parse_model(read_file(fixture("case2.json")));
  const std::vector<TypeSpace> candidates{c1, c2};
  const auto report = verify_terminality_small(candidates, quotient(c1).quotient);
  o.expect(report.counts == std::vector<std::size_t>{1, 1}, "terminality counts");
  if (o.ok) o.detail = std::to_string(spaces.size()) + " spaces, counts [1,1]";
}

void criterion_completeness(Outcome& o, const std::vector<TypeSpace>& spaces) {
  std::size_t incomplete = 0;
  for (std::size_t k = 0; k < spaces.size() && o.ok; ++k) {
    const TypeSpace& ts = spaces[k];
    const auto verdict = check_completeness(ts);
    bool all_single = true;
    for (const auto& p : verdict.players) {
      const bool single = ts.minus_field(p.player).atom_count() == 1;
      all_single &= single;
      o.expect(p.complete == single, "space " + std::to_string(k) + " verdict");
      if (p.complete) continue;
      ++incomplete;
      o.expect(p.witness && p.witness->is_probability() &&
                   p.witness->base().field() == ts.minus_field(p.player),
               "space " + std::to_string(k) + " witness is not a measure on M_-i");
      for (AtomIndex t = 0; t < ts.type_count(p.player) && p.witness; ++t) {
        o.expect(!(p.witness->weights() == ts.belief(p.player, t).weights()),
                 "space " + std::to_string(k) + " witness attained");
      }
    }
    o.expect(verdict.complete() == all_single, "space " + std::to_string(k) + " overall");
  }
  if (o.ok) o.detail = std::to_string(incomplete) + " incomplete verdicts checked";
}

void criterion_determinism(Outcome& o) {
  const std::vector<std::string> models{"case1.json", "case2.json", "case3f.json"};
  const std::vector<std::string> games{"case1.game.json", "case2.game.json",
                                       "case3f.game.json"};
  std::vector<std::vector<std::string>> commands;
  for (const auto& f : models) {
    for (const char* sub : {"validate", "hierarchy", "quotient", "duplicates", "complete"}) {
      commands.push_back({sub, fixture(f)});
    }
    commands.push_back({"hierarchy", fixture(f), "--depth", "4"});
    commands.push_back({"believe", fixture(f), "--event",
                        f == "case2.json" ? "w" : f == "case1.json" ? "w2" : "s2_0_0,s2_0_1,s2_1_0,s2_1_1",
                        "--p", "1/2", "--mode", "mutual"});
    commands.push_back({"terminality", fixture(f), fixture("case1.json"), fixture("case2.json")});
    for (const auto& g : models) {
      if (f == "case3f.json" && g == "case3f.json") continue;  // beyond the default guard
      commands.push_back({"morphism", fixture(f), fixture(g)});
    }
  }
  for (const auto& g : games) {
    commands.push_back({"validate", fixture(g)});
    commands.push_back({"rationalize", fixture(g)});
    commands.push_back({"hierarchy", fixture(g)});
  }
  commands.push_back({"morphism", fixture("case2.json"), fixture("case1.json"), "--map", "w:w2"});
  commands.push_back({"morphism", fixture("case2.json"), fixture("case1.json"), "--map", "w:w1"});
  for (const auto& args : commands) {
    const Cli first = cli(args);
    o.expect(first.code != 2 && !first.out.empty(), "input error on " + args[0] + " " + args[1]);
    for (int rep = 0; rep < 2; ++rep) {
      const Cli again = cli(args);
      o.expect(again.code == first.code && again.out == first.out,
               "report differs for " + args[0]);
    }
  }
  if (o.ok) o.detail = std::to_string(commands.size()) + " commands x 3 runs";
}

}  // namespace

int main() {
  const auto spaces_start = std::chrono::steady_clock::now();
  const std::vector<TypeSpace> spaces = random_spaces();
  const double generation =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - spaces_start).count();

  struct Criterion {
    int id;
    std::string name;
    double limit_seconds;  // 0: none
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "first example: P1={D}, P2={L}", 1, criterion_case1},
      {2, "second example: complete; U not rationalizable", 1, criterion_case2},
      {3, "third example stand-in: P1={U,D}, P2={L,R}, per-type chain", 1, criterion_case3},
      {4, "coherency of random hierarchies", 60,
       [&](Outcome& o) { criterion_coherency(o, spaces); }},
      {5, "morphisms preserve hierarchies", 60,
       [&](Outcome& o) { criterion_preservation(o, spaces); }},
      {6, "quotient soundness", 0, [&](Outcome& o) { criterion_quotient(o, spaces); }},
      {7, "desk-scale universality", 0,
       [&](Outcome& o) { criterion_universality(o, spaces); }},
      {8, "completeness dichotomy", 0,
       [&](Outcome& o) { criterion_completeness(o, spaces); }},
      {9, "determinism of every command", 0, criterion_determinism},
  };

  std::cout << "generated " << spaces.size() << " random type spaces in " << generation
            << " s\n";
  bool all = true;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.fail("took " + std::to_string(seconds) + " s, limit " +
             std::to_string(c.limit_seconds) + " s");
    }
    all &= o.ok;
    std::ostringstream line;
    line.precision(3);
    line << std::fixed << (o.ok ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name << "  ["
         << seconds << " s]";
    if (!o.detail.empty()) line << "  " << o.detail;
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
