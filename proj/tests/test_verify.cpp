// Copyright 2026 The ellipse-loci Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>
#include <string>

#include "ellipse_loci/verify.hpp"

namespace el = ellipse_loci;

namespace {

TEST(Verify, CatalogueIdsAreUnique) {
  std::set<std::string> ids;
  for (const auto& c : el::check_catalogue()) EXPECT_TRUE(ids.insert(c.id).second) << c.id;
  EXPECT_GE(ids.size(), 30u);
}

TEST(Verify, DefaultRunPasses) {
  const auto results = el::run_verify({});
  ASSERT_EQ(results.size(), el::check_catalogue().size());
  for (const auto& r : results) {
    EXPECT_TRUE(r.pass) << r.check_id << " residual " << r.residual << " tol " << r.tolerance << " " << r.params;
  }
}

TEST(Verify, InjectedFaultIsDetected) {
  el::VerifyOptions opt;
  opt.inject_fault = true;
  const auto results = el::run_verify(opt, {"implicit-consistency", "conic-fit-equivalence", "chord-slope-parallel"});
  ASSERT_EQ(results.size(), 3u);
  for (const auto& r : results) {
    if (r.check_id == "chord-slope-parallel") {
      EXPECT_TRUE(r.pass);
    } else {
      EXPECT_FALSE(r.pass) << r.check_id;
    }
  }
}

TEST(Verify, SubsetMatchesFullRun) {
  const auto full = el::run_verify({});
  const auto subset = el::run_verify({}, {"ratio-invariance"});
  ASSERT_EQ(subset.size(), 1u);
  for (const auto& r : full) {
    if (r.check_id == "ratio-invariance") {
      EXPECT_EQ(r.residual, subset[0].residual);
    }
  }
}

TEST(Verify, UnknownIdThrows) {
  try {
    (void)el::run_verify({}, {"no-such-check"});
    FAIL();
  } catch (const el::GeometryError& ex) {
    EXPECT_EQ(ex.kind(), el::ErrorKind::kInvalidConfig);
  }
}

TEST(Verify, SeedReproducesAndMatters) {
  el::VerifyOptions a;
  a.seed = 7;
  const auto r1 = el::run_verify(a, {"product-invariance", "line-rho-centers"});
  const auto r2 = el::run_verify(a, {"product-invariance", "line-rho-centers"});
  a.seed = 8;
  const auto r3 = el::run_verify(a, {"product-invariance", "line-rho-centers"});
  for (std::size_t i = 0; i < r1.size(); ++i) {
    EXPECT_EQ(r1[i].residual, r2[i].residual);
    EXPECT_TRUE(r3[i].pass);
  }
  EXPECT_NE(r1[1].residual, r3[1].residual);
}

}  // namespace
