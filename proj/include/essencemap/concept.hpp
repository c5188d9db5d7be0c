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

#include <algorithm>
#include <cctype>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace essencemap {

/// One attribute sentence of a concept's intension.
struct AttributeStatement
{
  std::string id;
  std::string text;

  bool operator==(AttributeStatement const &) const = default;
};

/// One object instance of a concept's extension.
struct ObjectInstance
{
  std::string id;
  std::string text;

  bool operator==(ObjectInstance const &) const = default;
};

/// A concept: attributes, objects, and relation references of the form
/// "<context>/<ConceptName>". The internal relation set is the full product
/// objects x attributes and is therefore not stored.
struct Concept
{
  std::string                     name;
  std::vector<AttributeStatement> attributes;
  std::vector<ObjectInstance>     objects;
  std::vector<std::string>        input_relations;
  std::vector<std::string>        output_relations;

  bool operator==(Concept const &) const = default;

  AttributeStatement const *find_attribute(std::string_view id) const
  {
    auto it = std::find_if(attributes.begin(), attributes.end(),
                           [id](auto const &a) { return a.id == id; });
    return it == attributes.end() ? nullptr : &*it;
  }
};

/// A named knowledge domain holding concepts unique by name.
struct SemanticContext
{
  std::string          id;
  std::vector<Concept> concepts;

  bool operator==(SemanticContext const &) const = default;

  Concept const *find_concept(std::string_view name) const
  {
    auto it = std::find_if(concepts.begin(), concepts.end(),
                           [name](auto const &c) { return c.name == name; });
    return it == concepts.end() ? nullptr : &*it;
  }
};

/// "<context>/<concept>"
struct ConceptRef
{
  std::string context;
  std::string name;

  auto operator<=>(ConceptRef const &) const = default;

  std::string str() const
  {
    return context + "/" + name;
  }
};

/// "<context>/<concept>.<attribute id>"
struct AttributeRef
{
  std::string context;
  std::string concept_name;
  std::string attr;

  auto operator<=>(AttributeRef const &) const = default;

  ConceptRef owner() const
  {
    return {context, concept_name};
  }

  std::string str() const
  {
    return context + "/" + concept_name + "." + attr;
  }
};

namespace detail {

inline bool is_space(char c)
{
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

inline std::string_view trim(std::string_view s)
{
  while (!s.empty() && is_space(s.front()))
  {
    s.remove_prefix(1);
  }
  while (!s.empty() && is_space(s.back()))
  {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace detail

/// Context ids are non-empty and contain neither whitespace nor '/'.
inline bool is_valid_context_id(std::string_view id)
{
  return !id.empty() && std::none_of(id.begin(), id.end(), [](char c) {
    return c == '/' || detail::is_space(c);
  });
}

/// Concept names are non-empty and free of whitespace, '/' and '.', which
/// delimit references.
inline bool is_valid_concept_name(std::string_view name)
{
  return !name.empty() && std::none_of(name.begin(), name.end(), [](char c) {
    return c == '/' || c == '.' || detail::is_space(c);
  });
}

/// [a-z][a-z0-9]*
inline bool is_valid_item_id(std::string_view id)
{
  if (id.empty() || id.front() < 'a' || id.front() > 'z')
  {
    return false;
  }
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
  });
}

/// Parses "<context>/<ConceptName>".
inline ConceptRef parse_concept_ref(std::string_view text)
{
  auto const slash = text.find('/');
  if (slash == std::string_view::npos)
  {
    throw Error(ErrorKind::parse, "expected <context>/<Concept>, got '" + std::string(text) + "'");
  }
  ConceptRef ref{std::string(text.substr(0, slash)), std::string(text.substr(slash + 1))};
  if (!is_valid_context_id(ref.context) || !is_valid_concept_name(ref.name))
  {
    throw Error(ErrorKind::parse, "expected <context>/<Concept>, got '" + std::string(text) + "'");
  }
  return ref;
}

/// Parses "<context>/<ConceptName>.<attrId>".
inline AttributeRef parse_attribute_ref(std::string_view text)
{
  auto const dot = text.rfind('.');
  if (dot == std::string_view::npos)
  {
    throw Error(ErrorKind::parse,
                "expected <context>/<Concept>.<attr>, got '" + std::string(text) + "'");
  }
  auto const owner = parse_concept_ref(text.substr(0, dot));
  std::string attr(text.substr(dot + 1));
  if (!is_valid_item_id(attr))
  {
    throw Error(ErrorKind::parse,
                "expected <context>/<Concept>.<attr>, got '" + std::string(text) + "'");
  }
  return {owner.context, owner.name, std::move(attr)};
}

/// Checks every structural invariant of a context, throwing on the first
/// violation.
inline void validate(SemanticContext const &ctx)
{
  if (!is_valid_context_id(ctx.id))
  {
    throw Error(ErrorKind::domain, "invalid context id '" + ctx.id + "'");
  }
  for (std::size_t i = 0; i < ctx.concepts.size(); ++i)
  {
    auto const &c = ctx.concepts[i];
    if (!is_valid_concept_name(c.name))
    {
      throw Error(ErrorKind::domain, "invalid concept name '" + c.name + "'");
    }
    for (std::size_t j = 0; j < i; ++j)
    {
      if (ctx.concepts[j].name == c.name)
      {
        throw Error(ErrorKind::domain, "duplicate concept '" + c.name + "'");
      }
    }
    for (std::size_t a = 0; a < c.attributes.size(); ++a)
    {
      auto const &attr = c.attributes[a];
      if (!is_valid_item_id(attr.id))
      {
        throw Error(ErrorKind::domain, "invalid attribute id '" + attr.id + "' in " + c.name);
      }
      if (detail::trim(attr.text).empty())
      {
        throw Error(ErrorKind::domain, "empty attribute text " + c.name + "." + attr.id);
      }
      for (std::size_t b = 0; b < a; ++b)
      {
        if (c.attributes[b].id == attr.id)
        {
          throw Error(ErrorKind::domain, "duplicate attribute '" + attr.id + "' in " + c.name);
        }
      }
    }
    for (std::size_t o = 0; o < c.objects.size(); ++o)
    {
      for (std::size_t b = 0; b < o; ++b)
      {
        if (c.objects[b].id == c.objects[o].id)
        {
          throw Error(ErrorKind::domain,
                      "duplicate object '" + c.objects[o].id + "' in " + c.name);
        }
      }
    }
  }
}

/// Resolves every relation reference that points into one of `contexts`.
/// References into contexts that are not loaded are left unchecked.
inline void validate_relations(std::vector<SemanticContext const *> const &contexts)
{
  auto find_context = [&](std::string_view id) -> SemanticContext const * {
    for (auto const *c : contexts)
    {
      if (c->id == id)
      {
        return c;
      }
    }
    return nullptr;
  };
  for (auto const *ctx : contexts)
  {
    for (auto const &c : ctx->concepts)
    {
      for (auto const *list : {&c.input_relations, &c.output_relations})
      {
        for (auto const &rel : *list)
        {
          ConceptRef ref;
          try
          {
            ref = parse_concept_ref(rel);
          }
          catch (Error const &)
          {
            throw Error(ErrorKind::reference, "malformed relation '" + rel + "' in " + ctx->id +
                                                  "/" + c.name);
          }
          auto const *target = find_context(ref.context);
          if (target != nullptr && target->find_concept(ref.name) == nullptr)
          {
            throw Error(ErrorKind::reference, "unknown concept '" + rel + "' referenced from " +
                                                  ctx->id + "/" + c.name);
          }
        }
      }
    }
  }
}

}  // namespace essencemap
