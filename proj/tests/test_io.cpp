#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "alexposet/generators.hpp"
#include "alexposet/io.hpp"

using namespace alexposet;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(ALEXPOSET_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_matches(const std::string& text, const std::regex& re) {
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re),
                                                std::sregex_iterator()));
}

}  // namespace

TEST(Parse, MinimalDocument) {
  const PosetDocument d = parse_poset("poset two\nel a\nel b\ncov a b\n");
  EXPECT_EQ(d.name, "two");
  EXPECT_EQ(d.elements, (std::vector<std::string>{"a", "b"}));
  ASSERT_EQ(d.covers.size(), 1u);
  EXPECT_FALSE(d.basepoint.has_value());
  EXPECT_TRUE(to_poset(d).less(0, 1));
}

TEST(Parse, CommentsBlankLinesAndBasepoint) {
  const PosetDocument d = to_document(to_poset(parse_poset(read_data("diamond_commented.poset"))), "diamond");
  EXPECT_EQ(d.elements.size(), 4u);
  EXPECT_EQ(d.covers.size(), 4u);  // the redundant bot < top is reduced away
  const PointedPoset sp = to_pointed(parse_poset(read_data("spider222.poset")));
  EXPECT_EQ(sp.poset.label(sp.basepoint), "s");
  EXPECT_THROW(to_pointed(parse_poset("poset p\nel a\n")), Error);
}

TEST(Parse, ErrorsCarryLineAndColumn) {
  try {
    parse_poset(read_data("bad_directive.poset"));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 1u);
  }
  try {
    parse_poset("poset p\nel a\ncov a\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  try {
    parse_poset("poset p\nel a b\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 6u);
  }
  EXPECT_THROW(parse_poset("el a\n"), ParseError);
  EXPECT_THROW(parse_poset(""), ParseError);
  EXPECT_THROW(parse_poset("poset a\nposet b\n"), ParseError);
  EXPECT_THROW(parse_poset("poset a\nel x\nbase x\nbase x\n"), ParseError);
}

TEST(Parse, OrderErrorsSurfaceFromConstruction) {
  EXPECT_THROW(to_poset(parse_poset(read_data("cycle.poset"))), CycleError);
  EXPECT_THROW(to_poset(parse_poset("poset p\nel a\ncov a z\n")), UnknownLabel);
  EXPECT_THROW(to_poset(parse_poset("poset p\nel a\nel a\n")), DuplicateLabel);
}

TEST(RoundTrip, GoldenCorpus) {
  for (const char* name : {"fence6.poset", "fence3.poset", "crown2.poset", "crown3.poset", "chain3.poset",
                           "singleton.poset", "spider222.poset", "random_5_0.3_7.poset"}) {
    const std::string text = read_data(name);
    const PosetDocument d = parse_poset(text);
    EXPECT_EQ(emit_poset(d), text) << name;
    const Poset p = to_poset(d);
    std::optional<Id> base;
    if (d.basepoint) base = p.id_of(*d.basepoint);
    EXPECT_EQ(to_document(p, d.name, base), d) << name;
    EXPECT_EQ(parse_poset_json(to_json(d).dump()), d) << name;
  }
}

TEST(RoundTrip, GeneratedPosets) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Poset p = random_poset(seed % 12, 0.3, seed);
    const PosetDocument d = to_document(p, "r" + std::to_string(seed));
    const PosetDocument back = parse_poset(emit_poset(d));
    EXPECT_EQ(back, d);
    EXPECT_TRUE(to_poset(back).same_order(p));
    EXPECT_EQ(to_poset(back).labels(), p.labels());
  }
}

TEST(Json, MirrorOfTextFormat) {
  const PosetDocument from_json = parse_poset_json(read_data("crown2.json"));
  const PosetDocument from_text = parse_poset(read_data("crown2.poset"));
  EXPECT_EQ(from_json, from_text);
  const auto j = to_json(from_text);
  EXPECT_TRUE(j["basepoint"].is_null());
  EXPECT_EQ(j["covers"].size(), 4u);
}

TEST(Json, Errors) {
  try {
    parse_poset_json("{\n  \"name\": \"x\",\n  oops\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_poset_json(R"({"name": "x"})"), ParseError);
  EXPECT_THROW(parse_poset_json(R"({"name": "x", "elements": ["a"], "covers": [["a"]]})"), ParseError);
}

TEST(Dot, Examples) {
  const std::string single = emit_dot(chain(1), "pt");
  EXPECT_EQ(count_matches(single, std::regex("->")), 0u);
  EXPECT_NE(single.find("\"c0\";"), std::string::npos);
  const std::string f3 = emit_dot(fence(3), "f");
  EXPECT_EQ(count_matches(f3, std::regex(" -> ")), 2u);
  EXPECT_NE(f3.find("rankdir=BT"), std::string::npos);
}

TEST(Dot, TraceMarksRemovedElements) {
  const Poset c = chain(3);
  const DismantlingTrace t = core(c).trace;
  const std::string dot = emit_dot(c, "c", &t);
  EXPECT_EQ(count_matches(dot, std::regex("fillcolor=gray")), 2u);
  EXPECT_EQ(count_matches(dot, std::regex("\"c[0-9]\" -> \"c[0-9]\"")), 2u);
}

TEST(Dot, EdgeCountEqualsCoverCount) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Poset p = random_poset(1 + seed % 10, 0.4, seed);
    const std::string dot = emit_dot(p);
    EXPECT_EQ(count_matches(dot, std::regex("\"v[0-9]+\" -> \"v[0-9]+\"")), p.cover_count());
  }
}
