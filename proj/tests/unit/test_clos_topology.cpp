#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "roadm/clos_topology.hpp"
#include "roadm/errors.hpp"

namespace roadm {
namespace {

TEST(ClusterTopology, ProposedPrototypeHas224Fibers) {
  const ClusterConfig c{14, 16, 8, 6};
  const auto topo = build_cluster(c, InterconnectPattern::proposed());
  EXPECT_EQ(topo.fiber_count(), 224);
  EXPECT_EQ(c.interconnect_cards(), 14);
  for (int o = 0; o < c.outer_chassis(); ++o) {
    for (int i = 0; i < c.connection_cards; ++i) EXPECT_EQ(topo.fibers_between(o, i), 1);
  }
  EXPECT_EQ(topo.kind(7), ChassisKind::Line);
  EXPECT_EQ(topo.kind(8), ChassisKind::AddDrop);
}

TEST(ClusterTopology, NoAddDropChassis) {
  const auto topo = build_cluster({14, 16, 7, 0}, InterconnectPattern::proposed());
  EXPECT_EQ(topo.fiber_count(), 112);
  EXPECT_EQ(topo.degree(), 98);
}

TEST(ClusterTopology, MinimalConfig) {
  const auto topo = build_cluster({1, 1, 1, 0}, InterconnectPattern::proposed());
  EXPECT_EQ(topo.fiber_count(), 1);
  EXPECT_EQ(classify_nonblocking(1, 1), NonblockingClass::StrictSense);
}

TEST(ClusterTopology, RandomPatternKeepsPortCounts) {
  const ClusterConfig c{14, 16, 8, 6};
  const auto topo = build_cluster(c, InterconnectPattern::random(7));
  EXPECT_EQ(topo.fiber_count(), 224);
  for (int f = 0; f < c.add_drop_chassis; ++f) {
    int ports = 0;
    for (int i = 0; i < c.connection_cards; ++i) ports += topo.fibers_between(c.line_chassis + f, i);
    EXPECT_EQ(ports, c.connection_cards);
  }
  for (int e = 0; e < c.line_chassis; ++e) EXPECT_EQ(topo.fibers_between(e, 3), 1);
  EXPECT_EQ(build_cluster(c, InterconnectPattern::random(7)).multiplicity(), topo.multiplicity());
}

TEST(Classify, Boundaries) {
  EXPECT_EQ(classify_nonblocking(14, 27), NonblockingClass::StrictSense);
  EXPECT_EQ(classify_nonblocking(14, 26), NonblockingClass::RearrangeablyNonblocking);
  EXPECT_EQ(classify_nonblocking(14, 16), NonblockingClass::RearrangeablyNonblocking);
  EXPECT_EQ(classify_nonblocking(14, 14), NonblockingClass::RearrangeablyNonblocking);
  EXPECT_EQ(classify_nonblocking(14, 13), NonblockingClass::Blocking);
  EXPECT_THROW(classify_nonblocking(0, 3), PreconditionError);
  EXPECT_THROW(classify_nonblocking(3, 0), PreconditionError);
}

TEST(Config, DegreesAndAddDropRate) {
  EXPECT_EQ(total_degrees({14, 16, 8, 6}), 112);
  EXPECT_EQ(total_degrees({14, 16, 14, 0}), 196);
  EXPECT_DOUBLE_EQ(add_drop_rate({14, 16, 8, 6}), 0.75);
  EXPECT_DOUBLE_EQ(add_drop_rate({14, 16, 10, 4}), 0.4);
  EXPECT_DOUBLE_EQ(add_drop_rate({14, 16, 14, 0}), 0.0);
}

TEST(Config, ValidateNamesField) {
  try {
    validate({14, 0, 8, 6});
    FAIL() << "expected SizingError";
  } catch (const SizingError& e) {
    EXPECT_EQ(e.field(), "M");
  }
  EXPECT_THROW(validate({0, 16, 8, 6}), SizingError);
  EXPECT_THROW(validate({14, 16, 0, 6}), SizingError);
  EXPECT_THROW(validate({14, 16, 8, -1}), SizingError);
  EXPECT_THROW(build_cluster({14, 16, 8, -1}, InterconnectPattern::proposed()), SizingError);
  EXPECT_NO_THROW(validate({14, 16, 8, 0}));
}

TEST(Sizing, Warnings) {
  EXPECT_TRUE(validate_sizing({14, 16, 8, 6}).empty());
  auto w = validate_sizing({14, 14, 8, 6});
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].code, SizingWarning::Code::MiddleNotAboveN);
  w = validate_sizing({10, 12, 8, 6});
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].code, SizingWarning::Code::MiddleAtOrAbove1p2N);
  w = validate_sizing({14, 13, 8, 6});
  bool blocking = false;
  for (const auto& x : w) blocking |= x.code == SizingWarning::Code::BlockingFabric;
  EXPECT_TRUE(blocking);
}

TEST(Pattern, ParseKind) {
  EXPECT_EQ(parse_pattern_kind("proposed"), InterconnectPattern::Kind::Proposed);
  EXPECT_EQ(parse_pattern_kind("random"), InterconnectPattern::Kind::Random);
  EXPECT_THROW(parse_pattern_kind("mesh"), PreconditionError);
}

TEST(ClusterTopology, Json) {
  const auto j = to_json(build_cluster({2, 3, 1, 1}, InterconnectPattern::proposed()));
  EXPECT_EQ(j.at("config").at("N"), 2);
  EXPECT_EQ(j.at("fibers").size(), 6u);
  EXPECT_EQ(j.at("pattern").at("kind"), "proposed");
  EXPECT_EQ(j.at("fiber_count"), 6);
}

}  // namespace
}  // namespace roadm
