// Copyright 2026 The gaen-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "gaen/utility_model.hpp"

namespace gaen::utility {
namespace {

TEST(Coverage, ClosedForms) {
  EXPECT_DOUBLE_EQ(expected_sc_coverage(0.5), 0.25);
  EXPECT_DOUBLE_EQ(expected_attacker_coverage(0.5), 0.75);
  EXPECT_DOUBLE_EQ(expected_attacker_coverage(0.5, 0.0), 0.25);
  // Attacker coverage dominates whenever alpha_cd == alpha_sc.
  for (int i = 0; i <= 100; ++i) {
    const double a = i / 100.0;
    EXPECT_GE(expected_attacker_coverage(a), expected_sc_coverage(a));
  }
}

TEST(Coverage, ExtremesAreExact) {
  PopulationModel m;
  m.n = 1000;
  m.contacts = 5000;
  m.alpha_sc = 1.0;
  m.alpha_cd = 0.0;
  auto r = simulate_coverage(m);
  EXPECT_EQ(r.sc_detected, 5000u);
  EXPECT_EQ(r.attacker_two_sided + r.attacker_one_sided, 0u);
  m.alpha_sc = 0.0;
  m.alpha_cd = 1.0;
  r = simulate_coverage(m);
  EXPECT_EQ(r.sc_detected, 0u);
  EXPECT_EQ(r.attacker_two_sided, 5000u);
  EXPECT_DOUBLE_EQ(r.attacker_individual_coverage, 1.0);
}

TEST(Coverage, CloseToClosedForm) {
  PopulationModel m;
  m.n = 200000;
  m.contacts = 100000;
  m.alpha_sc = 0.6;
  m.alpha_cd = 0.3;
  m.seed = 4;
  const auto r = simulate_coverage(m);
  EXPECT_NEAR(r.sc_coverage, 0.36, 0.01);
  EXPECT_NEAR(r.attacker_coverage, 0.51, 0.01);
  EXPECT_NEAR(r.attacker_individual_coverage, 0.3, 0.01);
  EXPECT_EQ(r.n_contacts, 100000u);
}

TEST(Coverage, OneSidedQualityScalesOneSidedContacts) {
  PopulationModel m;
  m.n = 10000;
  m.contacts = 20000;
  m.alpha_cd = 0.4;
  m.one_sided_quality = 0.5;
  const auto r = simulate_coverage(m);
  EXPECT_DOUBLE_EQ(r.attacker_coverage,
                   (r.attacker_two_sided + 0.5 * r.attacker_one_sided) / 20000.0);
}

TEST(Coverage, Validation) {
  PopulationModel m;
  m.alpha_sc = 1.5;
  EXPECT_THROW(simulate_coverage(m), std::invalid_argument);
  m.alpha_sc = 0.5;
  m.n = 1;
  EXPECT_THROW(simulate_coverage(m), std::invalid_argument);
}

TEST(Grid, ShapeAndOrder) {
  const auto g = make_grid(11);
  ASSERT_EQ(g.size(), 121u);
  EXPECT_DOUBLE_EQ(g[0].alpha_sc, 0.0);
  EXPECT_DOUBLE_EQ(g[1].alpha_cd, 0.1);
  EXPECT_DOUBLE_EQ(g[11].alpha_sc, 0.1);
  EXPECT_DOUBLE_EQ(g[120].alpha_sc, 1.0);
  EXPECT_DOUBLE_EQ(g[120].alpha_cd, 1.0);
  EXPECT_TRUE(make_grid(0).empty());
}

TEST(Sweep, ThreadCountDoesNotChangeResults) {
  PopulationModel base;
  base.n = 5000;
  base.contacts = 2000;
  base.seed = 17;
  const auto grid = make_grid(4);
  const auto a = sweep(base, grid, 1);
  const auto b = sweep(base, grid, 5);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].sc_detected, b[i].sc_detected);
    EXPECT_EQ(a[i].attacker_one_sided, b[i].attacker_one_sided);
    EXPECT_EQ(a[i].seed, 17 + i);
  }
}

TEST(Visibility, SizeMismatchThrows) {
  PopulationModel m;
  m.n = 3;
  EXPECT_THROW(infected_visibility(m, EndToEndRun{}), std::invalid_argument);
}

TEST(Visibility, CountsByGroup) {
  PopulationModel m;
  m.n = 4;
  EndToEndRun run;
  run.people = {{true, true, false, true, false},
                {true, false, true, false, false},
                {true, true, false, true, true},
                {false, true, true, true, true}};
  const auto v = infected_visibility(m, run);
  EXPECT_EQ(v.infected, 3u);
  EXPECT_EQ(v.authority_known, 2u);
  EXPECT_EQ(v.attacker_known, 2u);
  EXPECT_DOUBLE_EQ(v.attacker_fraction, 2.0 / 3.0);
}

// Property: with the seed fixed, the attacker's share of infected people is
// non-decreasing in alpha_sc (more app users means more published keys that
// can be matched against harvested beacons).
TEST(Visibility, EndToEndMonotoneInAppAdoption) {
  PopulationWorld w;
  w.duration_s = 900;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    double prev = -1.0;
    for (double a : {0.1, 0.4, 0.7, 1.0}) {
      PopulationModel m;
      m.n = 40;
      m.alpha_sc = a;
      m.alpha_cd = 0.25;
      m.infected_fraction = 0.4;
      m.seed = seed;
      const auto v = infected_visibility(m, simulate_population(m, w));
      EXPECT_GE(v.attacker_fraction, prev) << "seed " << seed << " alpha " << a;
      prev = v.attacker_fraction;
    }
  }
}

}  // namespace
}  // namespace gaen::utility
