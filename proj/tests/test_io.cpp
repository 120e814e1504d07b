#include "lcq/catalog.hpp"
#include "lcq/io.hpp"
#include "lcq/random.hpp"

#include <gtest/gtest.h>

using namespace lcq;

TEST(SpaceJson, ParsesMuAndCup) {
  const auto s = io::space_from_json(io::parse_json(R"({
    "name": "genus2", "h1_rank": 4, "h1_torsion_free": true, "h2_rank": 1,
    "mu": null, "cup": [[1, 0, 0, 0, 0, 1]]})"));
  EXPECT_EQ(s.name, "genus2");
  ASSERT_TRUE(s.cup.has_value());
  EXPECT_FALSE(s.mu.has_value());
  EXPECT_EQ(second_lcs_quotient(s).group, AbelianGroup::free(5));

  // rows of length zero when h2_rank is 0
  const auto w = io::space_from_json(io::parse_json(
      R"({"name": "w", "h1_rank": 3, "h1_torsion_free": true, "h2_rank": 0,
          "mu": [[], [], []], "cup": null})"));
  EXPECT_EQ(w.mu->rows(), 3u);
  EXPECT_EQ(w.mu->cols(), 0u);
}

TEST(SpaceJson, BigIntegersAsStrings) {
  const auto s = io::space_from_json(io::parse_json(
      R"({"name": "big", "h1_rank": 2, "h1_torsion_free": false, "h2_rank": 1,
          "mu": [["100000000000000000000000"]], "cup": null})"));
  EXPECT_EQ((*s.mu)(0, 0), Integer("100000000000000000000000"));
  EXPECT_EQ(io::space_from_json(io::to_json(s)), s);
}

TEST(SpaceJson, FieldDiagnostics) {
  auto parse = [](const char *text) {
    return io::space_from_json(io::parse_json(text));
  };
  auto message = [&](const char *text) {
    try {
      parse(text);
    } catch (const ParseError &e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message(R"({"name": "x", "h1_rank": 2, "h2_rank": 1, "mu": [[1]], "cup": null})")
                .find("h1_torsion_free"),
            std::string::npos);
  EXPECT_NE(message(R"({"name": "x", "h1_rank": 3, "h1_torsion_free": true,
                        "h2_rank": 1, "mu": [[1], [0]], "cup": null})")
                .find("has 2 rows, expected 3"),
            std::string::npos);
  EXPECT_NE(message(R"({"name": "x", "h1_rank": 2, "h1_torsion_free": true,
                        "h2_rank": 1, "mu": [[1, 2]], "cup": null})")
                .find("row 0: has 2 entries"),
            std::string::npos);
  EXPECT_NE(message(R"({"name": "x", "h1_rank": 2, "h1_torsion_free": true,
                        "h2_rank": 1, "mu": [[1]], "cup": [[1]]})")
                .find("exactly one"),
            std::string::npos);
  EXPECT_NE(message(R"({"name": "x", "h1_rank": -1, "h1_torsion_free": true,
                        "h2_rank": 1, "mu": [[1]], "cup": null})")
                .find("nonnegative"),
            std::string::npos);
  EXPECT_NE(message(R"({"name": "x", "h1_rank": 2, "h1_torsion_free": true,
                        "h2_rank": 1, "mu": [["1.5"]], "cup": null})")
                .find("not a decimal integer"),
            std::string::npos);
}

TEST(Json, SyntaxErrorsCarryLineAndColumn) {
  try {
    io::parse_json("{\n  \"name\": \"x\",\n  \"h1_rank\": ,\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 1u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(PresentationJson, ParseAndValidate) {
  const auto p = io::presentation_from_json(
      io::parse_json(R"({"generators": 2, "relators": [[1, 2, -1, -2]]})"));
  EXPECT_EQ(p.generators, 2u);
  ASSERT_EQ(p.relators.size(), 1u);
  EXPECT_EQ(p.relators[0], (Word{1, 2, -1, -2}));
  EXPECT_THROW(io::presentation_from_json(io::parse_json(
                   R"({"generators": 2, "relators": [[3]]})")),
               ParseError);
  EXPECT_THROW(io::presentation_from_json(io::parse_json(
                   R"({"generators": 2, "relators": [[0]]})")),
               ParseError);
  EXPECT_THROW(io::presentation_from_json(io::parse_json(R"({"generators": 2})")),
               ParseError);
}

TEST(RoundTrip, RandomValues) {
  random::Engine rng(55);
  for (int t = 0; t < 100; ++t) {
    const SpaceData s = random::space(rng, 6, 5, 1000000);
    EXPECT_EQ(io::space_from_json(io::parse_json(io::to_json(s).dump())), s);
    const GroupPresentation p = random::presentation(rng, 4, 4, 8);
    EXPECT_EQ(io::presentation_from_json(io::parse_json(io::to_json(p).dump())),
              p);
  }
}

TEST(GroupStrings, ParseAndRender) {
  for (const char *s : {"0", "Z^3", "Z/2", "Z^1 x Z/2 x Z/6", "Z/3 x Z/3"})
    EXPECT_EQ(io::parse_group(s).to_string(), s);
  EXPECT_EQ(io::parse_group("Z"), AbelianGroup::free(1));
  EXPECT_THROW(io::parse_group("Z/2 x Z/3"), ParseError); // not a chain
  EXPECT_THROW(io::parse_group("Q^2"), ParseError);
  EXPECT_THROW(io::parse_group("Z/1"), ParseError);
}

TEST(Catalog, BuiltInEntriesPass) {
  const auto entries = catalog::load_catalog(LCQ_CATALOG_DIR);
  ASSERT_GE(entries.size(), 9u);
  for (const auto &r : catalog::run_catalog(entries, false))
    EXPECT_TRUE(r.passed()) << r.name << " " << r.error;
}

TEST(Catalog, ParallelRunMatchesSerial) {
  const auto entries = catalog::load_catalog(LCQ_CATALOG_DIR);
  EXPECT_EQ(catalog::run_catalog(entries, true),
            catalog::run_catalog(entries, false));
}

TEST(Catalog, EntryRoundTrip) {
  for (const auto &e : catalog::load_catalog(LCQ_CATALOG_DIR)) {
    const auto back = catalog::entry_from_json(catalog::to_json(e));
    EXPECT_EQ(back.name, e.name);
    EXPECT_EQ(back.space, e.space);
    EXPECT_EQ(back.presentation, e.presentation);
    EXPECT_EQ(back.expected, e.expected);
  }
}

TEST(Catalog, ExpectedMismatchFails) {
  auto entries = catalog::load_catalog(LCQ_CATALOG_DIR);
  auto &e = entries.front();
  e.expected = AbelianGroup::free(7);
  EXPECT_FALSE(catalog::run_entry(e).passed());
}

TEST(Catalog, MissingDirectory) {
  EXPECT_THROW(catalog::load_catalog("/nonexistent/lcq"), InputError);
}
