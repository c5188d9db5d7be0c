//------------------------------------------------------------------------------
//
//   Copyright 2026 The essencemap Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "essencemap/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

std::vector<std::string> const kModes{"heuristic", "annotated", "hybrid"};
std::vector<std::string> const kFormats{"table", "tsv", "jsonl"};

}  // namespace

int main(int argc, char **argv)
{
  namespace cli = essencemap::cli;

  CLI::App app{"Map software-engineering practice concepts onto framework concepts"};
  app.require_subcommand(1);

  cli::CliConfig map_cfg;
  std::string    map_mode   = "hybrid";
  std::string    map_format = "table";
  auto          *map = app.add_subcommand("map", "Map every practice concept onto every framework concept");
  map->add_option("--practice", map_cfg.practice_path, "Practice concept file")->required();
  map->add_option("--framework", map_cfg.framework_path, "Framework concept file")->required();
  map->add_option("--lexicon", map_cfg.lexicon_path, "Lexicon file for heuristic scoring");
  map->add_option("--annotations", map_cfg.annotations_path, "Annotation file with pair levels");
  map->add_option("--mode", map_mode, "heuristic, annotated or hybrid")
      ->check(CLI::IsMember(kModes));
  map->add_option("--threshold", map_cfg.threshold, "Minimum level of a shared attribute pair")
      ->check(CLI::Range(1, 3));
  map->add_option("--format", map_format, "table, tsv or jsonl")->check(CLI::IsMember(kFormats));
  map->add_option("--out", map_cfg.out_path, "Write the report here instead of standard output");

  std::string                parse_path;
  bool                       show_spo = false;
  std::optional<std::string> parse_lexicon;
  auto *parse = app.add_subcommand("parse", "Validate a concept file");
  parse->add_option("path", parse_path, "Concept file")->required();
  parse->add_flag("--show-spo", show_spo, "List subject / predicate / object of every attribute");
  parse->add_option("--lexicon", parse_lexicon, "Lexicon file with extra verbs");

  cli::ScoreConfig score_cfg;
  std::string      score_mode = "hybrid";
  auto *score = app.add_subcommand("score", "Show the full scoring detail of one concept pair");
  score->add_option("--left", score_cfg.left, "<context>/<Concept>")->required();
  score->add_option("--right", score_cfg.right, "<context>/<Concept>")->required();
  score->add_option("--corpus", score_cfg.corpus_paths, "Concept file (repeatable)")->required();
  score->add_option("--lexicon", score_cfg.lexicon_path, "Lexicon file for heuristic scoring");
  score->add_option("--annotations", score_cfg.annotations_path, "Annotation file");
  score->add_option("--mode", score_mode, "heuristic, annotated or hybrid")
      ->check(CLI::IsMember(kModes));
  score->add_option("--threshold", score_cfg.threshold, "Minimum level of a shared attribute pair")
      ->check(CLI::Range(1, 3));

  auto *version = app.add_subcommand("version", "Print the version");

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::ParseError const &e)
  {
    auto const code = app.exit(e);
    return code == 0 ? 0 : cli::usage_error;
  }

  if (*map)
  {
    map_cfg.mode   = essencemap::parse_scoring_mode(map_mode);
    map_cfg.format = essencemap::parse_output_format(map_format);
    return cli::cmd_map(map_cfg, std::cout, std::cerr);
  }
  if (*parse)
  {
    return cli::cmd_parse(parse_path, show_spo, parse_lexicon, std::cout, std::cerr);
  }
  if (*score)
  {
    score_cfg.mode = essencemap::parse_scoring_mode(score_mode);
    return cli::cmd_score(score_cfg, std::cout, std::cerr);
  }
  if (*version)
  {
    std::cout << "essencemap " << cli::kVersion << "\n";
  }
  return cli::ok;
}
