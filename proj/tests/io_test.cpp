#include <gtest/gtest.h>

#include "nearposet/error.hpp"
#include "nearposet/io.hpp"

using namespace nearposet;
using io::Json;

TEST(Io, InstanceRoundTrip) {
  const Json j = Json::parse(R"({"elements":["a","b","1"],"order":[["a","1"],["b","1"]],"theta":[["a","b"]]})");
  const io::InstanceFile f = io::parse_instance(j);
  EXPECT_EQ(f.instance.size(), 3U);
  EXPECT_EQ(f.instance.generators(), (std::vector<Mask>{0b011}));
  EXPECT_FALSE(f.frame);
  EXPECT_EQ(io::to_json(f.instance), j);
}

TEST(Io, OrderIsClosedAndWrittenAsCoveringPairs) {
  const Json j = Json::parse(R"({"elements":["0","1","2"],"order":[["0","1"],["1","2"],["0","2"]],"theta":[]})");
  const io::InstanceFile f = io::parse_instance(j);
  EXPECT_TRUE(f.instance.poset().leq(0, 2));
  EXPECT_EQ(io::to_json(f.instance)["order"], Json::parse(R"([["0","1"],["1","2"]])"));
}

TEST(Io, ClosureAndFrameFields) {
  const Json j = Json::parse(
      R"({"elements":["0","1"],"order":[["0","1"]],"theta":[["1"]],"closure":"superset","frame":{"derive":true}})");
  const io::InstanceFile f = io::parse_instance(j);
  EXPECT_EQ(f.instance.closure(), ThetaClosure::superset);
  EXPECT_TRUE(f.frame);
  EXPECT_EQ(io::to_json(f.instance, true), j);
}

TEST(Io, InvalidInstances) {
  const char* bad[] = {
      R"({"elements":["a","b"],"order":[["a","b"],["b","a"]],"theta":[]})",
      R"({"elements":["a"],"theta":[["z"]]})",
      R"({"elements":["a"],"order":[["a"]],"theta":[]})",
      R"({"elements":["a"]})",
      R"({"elements":["a"],"theta":[],"closure":"upward"})",
      R"({"elements":["a"],"theta":[],"extra":1})",
      R"({"elements":["a","b"],"theta":[],"frame":{"derive":true}})",
      R"([1,2])",
  };
  for (const char* text : bad) EXPECT_THROW(io::parse_instance(Json::parse(text)), InvalidInput) << text;
}

TEST(Io, SpaceFiles) {
  const Json j = Json::parse(
      R"({"points":["x","y"],"sets":{"u":["x"],"v":["y"],"w":["x","y"]},"role":"basis","theta":[["u","v"],["w"]]})");
  EXPECT_EQ(io::kind_of(j), io::FileKind::space);
  const io::SpaceFile s = io::parse_space(j);
  EXPECT_EQ(s.space.set_count(), 3U);
  EXPECT_FALSE(s.all_covers);
  EXPECT_EQ(s.theta.generators(), (std::vector<Mask>{0b011, 0b100}));

  const io::SpaceFile all = io::parse_space(Json::parse(R"({"points":["x"],"sets":{"u":["x"]},"role":"subbasis"})"));
  EXPECT_TRUE(all.all_covers);
  EXPECT_THROW(io::parse_space(Json::parse(R"({"points":["x"],"sets":{"u":["q"]},"role":"basis"})")), InvalidInput);
  EXPECT_THROW(io::parse_space(Json::parse(R"({"points":["x"],"sets":{"u":["x"]},"role":"cover"})")), InvalidInput);
  EXPECT_THROW(io::parse_space(Json::parse(R"({"points":["x"],"sets":{"u":["x"]},"role":"basis","theta":[["v"]]})")),
               InvalidInput);
}
