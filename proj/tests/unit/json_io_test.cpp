#include "wittlab/json_io.hpp"

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "wittlab/derivations.hpp"
#include "wittlab/errors.hpp"

namespace wittlab {
namespace {

using testing::Sampler;

TEST(JsonIoTest, SchemaShape) {
  const auto d = ad(Element::basis(AlgebraKind::Witt, 1, Rational(1, 2)), {-1, 1});
  const Json j = to_json(d);
  EXPECT_EQ(j.dump(),
            R"({"algebra":"witt","truncation":{"min":-1,"max":1},)"
            R"("images":{"-1":[[0,"-1"]],"0":[[1,"-1/2"]],"1":[]}})");
}

TEST(JsonIoTest, TablesRoundTrip) {
  Sampler s(51);
  for (int trial = 0; trial < 50; ++trial) {
    const auto witt = ad(s.element(AlgebraKind::Witt, -4, 4), {-6, 6});
    EXPECT_EQ(table_from_json(to_json(witt).dump()), witt);
    const auto thin = ad(s.element(AlgebraKind::Thin, 1, 5), {1, 9});
    EXPECT_EQ(table_from_json(to_json(thin).dump(2)), thin);
  }
}

TEST(JsonIoTest, MissingImageIsAnError) {
  const char* text =
      R"({"algebra":"thin","truncation":{"min":1,"max":3},"images":{"1":[],"3":[]}})";
  EXPECT_THROW(table_from_json(text), PreconditionError);
}

TEST(JsonIoTest, ImageOutsideTruncationIsAnError) {
  const char* text =
      R"({"algebra":"thin","truncation":{"min":1,"max":1},"images":{"1":[],"2":[]}})";
  EXPECT_THROW(table_from_json(text), PreconditionError);
}

TEST(JsonIoTest, MalformedInputsAreParseErrors) {
  for (const char* bad : {
           "{",
           "[]",
           R"({"algebra":"lie","truncation":{"min":1,"max":1},"images":{"1":[]}})",
           R"({"algebra":"thin","truncation":{"min":1,"max":1},"images":{"x":[]}})",
           R"({"algebra":"thin","truncation":{"min":1,"max":1},"images":{"1":[[2]]}})",
           R"({"algebra":"thin","truncation":{"min":1,"max":1},"images":{"1":[[2,"1/0"]]}})",
           R"({"algebra":"thin","truncation":{"min":1,"max":1},"images":[]})",
       }) {
    EXPECT_THROW(table_from_json(bad), Error) << bad;
  }
}

TEST(JsonIoTest, DomainViolationIsPrecondition) {
  const char* text =
      R"({"algebra":"wplus","truncation":{"min":0,"max":1},"images":{"0":[],"1":[]}})";
  EXPECT_THROW(table_from_json(text), PreconditionError);
}

TEST(JsonIoTest, PairsFile) {
  const auto p = pairs_from_json(R"({"algebra":"thin","pairs":[["e_1 + e_2","-e_1 + e_2"],["0","e_3"]]})");
  EXPECT_EQ(p.kind, AlgebraKind::Thin);
  ASSERT_EQ(p.pairs.size(), 2u);
  EXPECT_EQ(to_string(p.pairs[0].second), "-e_1 + e_2");
  EXPECT_TRUE(p.pairs[1].first.is_zero());
  EXPECT_THROW(pairs_from_json(R"({"algebra":"thin","pairs":[["e_1"]]})"), ParseError);
  EXPECT_THROW(pairs_from_json(R"({"algebra":"thin","pairs":[["e_0","e_1"]]})"), PreconditionError);
}

}  // namespace
}  // namespace wittlab
