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

#include "essencemap/matcher.hpp"
#include "essencemap/relations.hpp"
#include "support/fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace essencemap;
using essencemap::testing::aref;
using essencemap::testing::make_concept;

namespace {

MatchSet table1_matching()
{
  MatchSet m{{}, 6, 6};
  for (auto const *id : {"3", "4", "6"})
  {
    m.pairs.push_back({aref("EF", "Requirements", std::string("a") + id),
                       aref("Scrum", "ProductBacklog", std::string("b") + id), LtaLevel(2)});
  }
  return m;
}

Concept requirements()
{
  return essencemap::testing::essence().concepts.at(0);
}

Concept product_backlog()
{
  return essencemap::testing::scrum().concepts.at(0);
}

}  // namespace

TEST_CASE("related and independent on the case-study matching", "[concept-core]")
{
  auto const req = requirements();
  auto const pb  = product_backlog();
  auto const m   = table1_matching();

  CHECK(related(req, pb, m));
  CHECK_FALSE(independent(req, pb, m));

  MatchSet const none{{}, 6, 6};
  CHECK_FALSE(related(req, pb, none));
  CHECK(independent(req, pb, none));

  auto const self = identity_matching("EF", req, LtaLevel(3));
  CHECK(related(req, req, self));
}

TEST_CASE("similarity counts matched pairs once in the union", "[concept-core]")
{
  auto const req = requirements();
  auto const pb  = product_backlog();
  auto const pct = similarity(req, pb, table1_matching());
  CHECK(pct.shared() == 3);
  CHECK(pct.total() == 9);
  CHECK(pct.str() == "33.3");

  auto const self = identity_matching("EF", req, LtaLevel(3));
  CHECK(similarity(req, req, self).str() == "100.0");
  CHECK(similarity(req, req, self).is_full());

  auto const two   = make_concept("Two", {"x is y", "y is z"});
  auto const three = make_concept("Three", {"p is q", "q is r", "r is s"}, "b");
  auto const zero  = similarity(two, three, MatchSet{{}, 2, 3});
  CHECK(zero.is_zero());
  CHECK(zero.str() == "0.0");
}

TEST_CASE("similarity of two attribute-free concepts is an error", "[concept-core]")
{
  Concept const empty{"Empty", {}, {}, {}, {}};
  CHECK_THROWS_WITH(similarity(empty, empty, MatchSet{}),
                    Catch::Matchers::ContainsSubstring("no attributes to compare"));
}

TEST_CASE("percentage rendering rounds half up", "[concept-core]")
{
  CHECK(Percentage(1, 3).str() == "33.3");
  CHECK(Percentage(2, 3).str() == "66.7");
  CHECK(Percentage(1, 8).str() == "12.5");
  CHECK(Percentage(1, 16).str() == "6.3");  // 6.25
  CHECK(Percentage(1, 1600).str() == "0.1");  // 0.0625
  CHECK(Percentage(0, 5).str() == "0.0");
  CHECK(Percentage(5, 5).str() == "100.0");
}

TEST_CASE("equivalence needs full matching and equal objects", "[concept-core]")
{
  auto const req = requirements();
  auto const pb  = product_backlog();
  CHECK_FALSE(equivalent(req, pb, table1_matching()));

  auto with_objects = req;
  with_objects.objects = {{"o1", "Login   Story"}, {"o2", "search"}};
  auto copy = with_objects;
  copy.objects = {{"x1", "search"}, {"x2", "login story"}};
  auto const self = identity_matching("EF", req, LtaLevel(3));
  CHECK(equivalent(with_objects, copy, self));
  CHECK(equivalent(req, req, self));

  auto renamed = with_objects;
  renamed.objects[0].text = "logout story";
  CHECK_FALSE(equivalent(with_objects, renamed, self));
  // Still 100% similar: only the objects differ.
  CHECK(similarity(with_objects, renamed, self).is_full());
}

TEST_CASE("sub-concept requires strict intension containment", "[concept-core]")
{
  auto const big   = make_concept("Big", {"w is x", "x is y", "y is z", "z is w"});
  auto const small = make_concept("Small", {"x is y", "z is w"}, "b");
  // Hand enumeration: b1 <-> a2, b2 <-> a4 covers all of Small.
  MatchSet m{{}, 4, 2};
  m.pairs.push_back({aref("C", "Big", "a2"), aref("C", "Small", "b1"), LtaLevel(3)});
  m.pairs.push_back({aref("C", "Big", "a4"), aref("C", "Small", "b2"), LtaLevel(3)});
  CHECK(sub_concept(big, small, m));
  CHECK_FALSE(super_concept(big, small, m));
  CHECK(super_concept(small, big, m.mirrored()));
  CHECK_FALSE(sub_concept(small, big, m.mirrored()));

  MatchSet partial{{m.pairs.front()}, 4, 2};
  CHECK_FALSE(sub_concept(big, small, partial));

  auto const req  = requirements();
  auto const self = identity_matching("EF", req, LtaLevel(3));
  CHECK_FALSE(sub_concept(req, req, self));
  CHECK_FALSE(super_concept(req, req, self));
  CHECK_FALSE(sub_concept(req, product_backlog(), table1_matching()));
  CHECK_FALSE(super_concept(req, product_backlog(), table1_matching()));
}

TEST_CASE("relational invariants hold on random matchings", "[concept-core][property]")
{
  std::mt19937 rng(20261019);
  std::uniform_int_distribution<std::size_t> side(1, 6);
  for (int round = 0; round < 300; ++round)
  {
    auto const n1 = side(rng);
    auto const n2 = side(rng);
    Concept    c1 = make_concept("Left", std::vector<std::string>(n1, "x is y"));
    Concept    c2 = make_concept("Right", std::vector<std::string>(n2, "x is y"), "b");
    auto const m  = max_matching(essencemap::testing::random_candidates(rng, n1, n2, 2), n1, n2);
    auto const pct = similarity(c1, c2, m);

    CHECK(related(c1, c2, m) == !pct.is_zero());
    CHECK(independent(c1, c2, m) == pct.is_zero());
    CHECK(pct == similarity(c2, c1, m.mirrored()));
    CHECK(pct.value() >= 0.0);
    CHECK(pct.value() <= 100.0);
    CHECK(pct.is_full() == (m.size() == n1 && m.size() == n2));
    if (equivalent(c1, c2, m))
    {
      CHECK(pct.is_full());
    }
    CHECK(sub_concept(c1, c2, m) == super_concept(c2, c1, m.mirrored()));
    CHECK_FALSE((sub_concept(c1, c2, m) && super_concept(c1, c2, m)));

    if (!m.empty())
    {
      auto grown = c1;
      grown.attributes.push_back({"z99", "unmatched statement"});
      MatchSet wider = m;
      wider.left_size += 1;
      CHECK(similarity(grown, c2, wider) < pct);
    }
  }
}

TEST_CASE("reference parsing", "[concept-core]")
{
  auto const r = parse_attribute_ref("EF/Requirements.a3");
  CHECK(r.context == "EF");
  CHECK(r.concept_name == "Requirements");
  CHECK(r.attr == "a3");
  CHECK(r.str() == "EF/Requirements.a3");
  CHECK(parse_concept_ref("Scrum/ProductBacklog").str() == "Scrum/ProductBacklog");
  CHECK_THROWS_AS(parse_concept_ref("NoSlash"), Error);
  CHECK_THROWS_AS(parse_attribute_ref("EF/Requirements"), Error);
  CHECK_THROWS_AS(parse_attribute_ref("EF/Requirements.A1"), Error);
}

TEST_CASE("context validation", "[concept-core]")
{
  auto ctx = essencemap::testing::essence();
  CHECK_NOTHROW(validate(ctx));
  ctx.concepts.push_back(ctx.concepts.front());
  CHECK_THROWS_WITH(validate(ctx), Catch::Matchers::ContainsSubstring("duplicate concept"));

  SemanticContext bad_id{"has space", {}};
  CHECK_THROWS_AS(validate(bad_id), Error);
  CHECK_FALSE(is_valid_context_id("a/b"));
  CHECK(is_valid_item_id("a1"));
  CHECK_FALSE(is_valid_item_id("1a"));
  CHECK_FALSE(is_valid_item_id("aB"));
}
