// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "matroids/bounds.hpp"
#include "matroids/erection.hpp"
#include "matroids/io.hpp"
#include "matroids/matroid.hpp"
#include "matroids/plp.hpp"

namespace {

using namespace matroids;

ParsedMatroid LoadMatroidFile(const std::string& path) {
  ParsedMatroid parsed = ParseMatroidText(ReadFileOrThrow(path));
  for (const std::string& warning : parsed.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  return parsed;
}

Matroid BuildFromFile(const std::string& path) {
  ParsedMatroid parsed = LoadMatroidFile(path);
  Matroid m = Matroid::FromCopoints(parsed.n, parsed.copoints);
  if (parsed.declared_rank && *parsed.declared_rank != m.rank()) {
    throw DomainError("file declares rank " +
                      std::to_string(*parsed.declared_rank) +
                      " but the flats have rank " + std::to_string(m.rank()));
  }
  return m;
}

// A file is a graph file iff its first significant token is "points".
bool IsGraphFile(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i < text.size() && (text[i] == '#' || text[i] == '\n')) {
      while (i < text.size() && text[i] != '\n') ++i;
      ++i;
      continue;
    }
    break;
  }
  return text.compare(i, 6, "points") == 0;
}

BipartiteIncidence LoadGraphFile(const std::string& path) {
  const std::string text = ReadFileOrThrow(path);
  if (IsGraphFile(text)) {
    ParsedGraph parsed = ParseGraphText(text);
    for (const std::string& warning : parsed.warnings) {
      std::cerr << "warning: " << warning << "\n";
    }
    return parsed.graph;
  }
  ParsedMatroid parsed = ParseMatroidText(text);
  for (const std::string& warning : parsed.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  return GraphFromRank3(Matroid::FromCopoints(parsed.n, parsed.copoints));
}

void PrintErection(const ErectionResult& result) {
  std::cout << "trivial=" << (result.trivial ? "true" : "false") << "\n"
            << "count=" << result.new_copoints.Size() << "\n";
  for (ElementSet copoint : result.new_copoints) {
    std::cout << ToString(copoint) << "\n";
  }
}

std::string Fraction(long long num, long long den) {
  return den == 1 ? std::to_string(num)
                  : std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"erections, bounds and incidence graphs of simple matroids"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string file;
  std::string add_file;
  std::string variant_name = "i";
  std::string mode_name = "auto";
  std::string restrict_arg;
  int budget = 100;
  int workers = 1;
  int random_n = 8;
  std::uint64_t seed = 0;
  double intensity = 0.5;

  CLI::App* validate = app.add_subcommand("validate",
                                          "check the hyperplane axioms");
  validate->add_option("file", file)->required();
  validate->callback([&] {
    ParsedMatroid parsed = LoadMatroidFile(file);
    Diagnostic diag = ValidateCopointFamily(parsed.n, parsed.copoints);
    std::cout << "valid=" << (diag.ok ? "true" : "false") << "\n";
    if (!diag.ok) {
      std::cout << "diagnostic: " << diag.message << "\n";
      exit_code = 1;
    }
  });

  CLI::App* lattice = app.add_subcommand("lattice",
                                         "print the full flat lattice");
  lattice->add_option("file", file)->required();
  lattice->callback([&] {
    Matroid m = BuildFromFile(file);
    std::cout << "n " << m.n() << "\nrank " << m.rank() << "\n";
    for (int i = 0; i <= m.rank(); ++i) {
      for (ElementSet f : m.FlatsOfRank(i)) {
        std::cout << i << ": " << ToString(f) << "\n";
      }
    }
  });

  CLI::App* whitney = app.add_subcommand("whitney", "print Whitney numbers");
  whitney->add_option("file", file)->required();
  whitney->callback([&] {
    Matroid m = BuildFromFile(file);
    bool first = true;
    for (long long w : m.Whitney()) {
      std::cout << (first ? "" : " ") << w;
      first = false;
    }
    std::cout << "\n";
  });

  CLI::App* free_cmd = app.add_subcommand("free", "free erection copoints");
  free_cmd->add_option("file", file)->required();
  free_cmd->callback([&] { PrintErection(FreeErection(BuildFromFile(file))); });

  CLI::App* erect = app.add_subcommand("erect",
                                       "erection relative to a clutter");
  erect->add_option("file", file)->required();
  erect->add_option("--add", add_file, "file of clutter sets")->required();
  erect->callback([&] {
    Matroid m = BuildFromFile(file);
    // Clutter files share the copoint-line syntax; reuse the matroid
    // parser with a synthetic header.
    ParsedMatroid clutter = ParseMatroidText(
        "n " + std::to_string(m.n()) + "\n" + ReadFileOrThrow(add_file));
    PrintErection(ErectWith(m, clutter.copoints));
  });

  CLI::App* random_cmd = app.add_subcommand("random",
                                            "random matroid by erection");
  random_cmd->add_option("--n", random_n)->required();
  random_cmd->add_option("--seed", seed);
  random_cmd->add_option("--intensity", intensity);
  random_cmd->callback([&] {
    std::cout << FormatMatroid(RandomMatroid(random_n, seed, intensity));
  });

  CLI::App* check_lc = app.add_subcommand("check-lc",
                                          "log-concavity of Whitney numbers");
  check_lc->add_option("file", file)->required();
  check_lc->add_option("--variant", variant_name)
      ->check(CLI::IsMember({"i", "ii", "iii"}));
  check_lc->callback([&] {
    Matroid m = BuildFromFile(file);
    ConcavityReport report =
        CheckLogConcavity(m, ParseConcavityVariant(variant_name));
    std::cout << "variant=" << variant_name << "\n";
    for (const ConcavityEntry& e : report.per_k) {
      std::cout << "k=" << e.k << " lhs=" << e.lhs
                << " rhs=" << Fraction(e.rhs_num, e.rhs_den)
                << " holds=" << (e.holds ? "true" : "false") << "\n";
    }
    std::cout << "all=" << (report.all_hold ? "true" : "false") << "\n";
  });

  CLI::App* check_free = app.add_subcommand("check-free-lc",
                                            "free-erection inequality");
  check_free->add_option("file", file)->required();
  check_free->callback([&] {
    FreeLcReport report = CheckFreeLc(BuildFromFile(file));
    std::cout << "copoints=" << report.copoints
              << " colines=" << report.colines
              << " free_copoints=" << report.free_copoints
              << " holds=" << (report.holds ? "true" : "false") << "\n";
  });

  CLI::App* bound = app.add_subcommand("bound",
                                       "minimized copoint-count bound");
  bound->add_option("file", file)->required();
  bound->add_option("--mode", mode_name)
      ->check(CLI::IsMember({"auto", "exact", "heuristic"}));
  bound->add_option("--budget", budget);
  bound->add_option("--workers", workers);
  bound->add_option("--seed", seed);
  bound->callback([&] {
    Matroid m = BuildFromFile(file);
    BoundMode mode;
    if (mode_name == "auto") {
      mode = m.n() <= 9 ? BoundMode::kExact : BoundMode::kHeuristic;
    } else {
      mode = mode_name == "exact" ? BoundMode::kExact : BoundMode::kHeuristic;
    }
    BoundReport report = MinimizeBound(m, mode, budget, workers, seed);
    std::cout << FormatBoundReport(report, m.n());
  });

  CLI::App* beta = app.add_subcommand("beta", "property-beta subset count");
  beta->add_option("file", file)->required();
  beta->add_option("--workers", workers);
  beta->callback([&] {
    std::cout << "beta=" << BetaCount(LoadGraphFile(file), workers) << "\n";
  });

  CLI::App* plp = app.add_subcommand("plp-check",
                                     "points-lines-planes bound check");
  plp->add_option("file", file)->required();
  plp->add_option("--workers", workers);
  plp->callback([&] {
    PlpReport report = PlpBoundCheck(LoadGraphFile(file), workers);
    std::cout << "beta=" << report.beta
              << " bound=" << Fraction(report.bound_num, report.bound_den)
              << " holds=" << (report.holds ? "true" : "false") << "\n";
  });

  CLI::App* dot = app.add_subcommand("dot", "emit the incidence graph as DOT");
  dot->add_option("file", file)->required();
  dot->add_option("--restrict", restrict_arg,
                  "comma-separated line sets, e.g. 24,258,57");
  dot->callback([&] {
    BipartiteIncidence g = LoadGraphFile(file);
    if (!restrict_arg.empty()) {
      const std::vector<int> labels = g.points.Elements();
      const int n = labels.empty() ? 9 : labels.back();
      SetFamily lines;
      std::string part;
      for (char c : restrict_arg + ",") {
        if (c == ',') {
          if (!part.empty()) lines.Insert(ParseSetToken(part, n));
          part.clear();
        } else {
          part += c;
        }
      }
      g = Restrict(g, lines);
    }
    std::cout << ExportDot(g);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
