#include <gtest/gtest.h>

#include <string>

#include "properties.hpp"

namespace roadm::testing {
namespace {

class Property : public ::testing::TestWithParam<PropertySpec> {};

TEST_P(Property, Holds) {
  const auto& spec = GetParam();
  const auto r = spec.run(kPropertyTrials, 0x5eed);
  EXPECT_TRUE(r.passed) << r.name << ": " << r.counterexample;
  if (!spec.scenario_level) EXPECT_EQ(r.trials, kPropertyTrials);
}

std::string property_name(const ::testing::TestParamInfo<PropertySpec>& info) {
  return std::string(info.param.module) + "_" + info.param.name;
}

INSTANTIATE_TEST_SUITE_P(All, Property, ::testing::ValuesIn(all_properties().begin(), all_properties().end()),
                         property_name);

}  // namespace
}  // namespace roadm::testing
