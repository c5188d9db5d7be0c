#pragma once
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

#include "essencemap/error.hpp"
#include "essencemap/mapper.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <string_view>

namespace essencemap {

enum class OutputFormat
{
  table,
  tsv,
  jsonl
};

inline OutputFormat parse_output_format(std::string_view text)
{
  if (text == "table")
  {
    return OutputFormat::table;
  }
  if (text == "tsv")
  {
    return OutputFormat::tsv;
  }
  if (text == "jsonl")
  {
    return OutputFormat::jsonl;
  }
  throw Error(ErrorKind::usage, "unknown format '" + std::string(text) + "'");
}

/// "b3-a3,b4-a4" in result orientation.
inline std::string render_matches(MatchSet const &m)
{
  std::string out;
  for (auto const &p : m.pairs)
  {
    if (!out.empty())
    {
      out += ",";
    }
    out += p.left.attr + "-" + p.right.attr;
  }
  return out;
}

inline void render_table(MappingReport const &report, std::ostream &out)
{
  out << "practice: " << report.practice << "  framework: " << report.framework
      << "  mode: " << to_string(report.mode) << "  threshold: " << report.threshold << "\n\n";
  for (auto const &r : report.results)
  {
    out << r.left.name << " -> " << r.right.name << "  " << r.similarity_pct.str() << "%  "
        << to_string(r.relation) << "  [" << render_matches(r.match_set) << "]\n";
  }
  out << "\nbest matches:\n";
  for (auto const &b : report.best_matches)
  {
    out << b.practice << " -> " << b.framework << "  " << b.similarity_pct.str() << "%\n";
  }
}

inline void render_tsv(MappingReport const &report, std::ostream &out)
{
  out << "left\tright\tsimilarity_pct\trelation\tmatches\n";
  for (auto const &r : report.results)
  {
    out << r.left.name << "\t" << r.right.name << "\t" << r.similarity_pct.str() << "\t"
        << to_string(r.relation) << "\t" << render_matches(r.match_set) << "\n";
  }
  out << "\npractice\tbest_match\tsimilarity_pct\n";
  for (auto const &b : report.best_matches)
  {
    out << b.practice << "\t" << b.framework << "\t" << b.similarity_pct.str() << "\n";
  }
}

inline void render_jsonl(MappingReport const &report, std::ostream &out)
{
  using nlohmann::ordered_json;
  // Numbers go through the one-decimal rendering so every output format
  // agrees on the printed value.
  auto pct = [](Percentage const &p) { return std::stod(p.str()); };
  for (auto const &r : report.results)
  {
    ordered_json matches = ordered_json::array();
    for (auto const &p : r.match_set.pairs)
    {
      matches.push_back(
          ordered_json{{"left", p.left.attr}, {"right", p.right.attr}, {"level", p.level.value()}});
    }
    ordered_json line{{"left", r.left.name},
                      {"right", r.right.name},
                      {"similarity_pct", pct(r.similarity_pct)},
                      {"relation", to_string(r.relation)},
                      {"matches", matches}};
    out << line.dump() << "\n";
  }
  for (auto const &b : report.best_matches)
  {
    ordered_json line{{"practice", b.practice},
                      {"best_match", b.framework},
                      {"similarity_pct", pct(b.similarity_pct)}};
    out << line.dump() << "\n";
  }
}

inline void render(MappingReport const &report, OutputFormat format, std::ostream &out)
{
  switch (format)
  {
  case OutputFormat::table:
    render_table(report, out);
    break;
  case OutputFormat::tsv:
    render_tsv(report, out);
    break;
  case OutputFormat::jsonl:
    render_jsonl(report, out);
    break;
  }
}

}  // namespace essencemap
