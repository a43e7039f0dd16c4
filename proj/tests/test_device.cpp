// Copyright 2026 The crda Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "crda/device.hpp"
#include "crda/errors.hpp"

namespace crda {
namespace {

TEST(Lattice, SquareIndexingAndWrap) {
  const Lattice lat = Lattice::square(4, 4);
  EXPECT_EQ(lat.size(), 16);
  EXPECT_EQ(lat.site(1, 1), 0);
  EXPECT_EQ(lat.site(2, 1), 1);
  EXPECT_EQ(lat.site(1, 2), 4);
  EXPECT_EQ(lat.site(5, 1), 0);
  EXPECT_EQ(lat.site(0, 0), lat.site(4, 4));
  EXPECT_TRUE(lat.is_even(lat.site(1, 1)));
  EXPECT_FALSE(lat.is_even(lat.site(2, 1)));
  EXPECT_EQ(lat.sublattice(true).size(), 8U);
}

TEST(Lattice, OpenBoundaryReturnsMinusOne) {
  const Lattice chain = Lattice::chain(4);
  EXPECT_EQ(chain.site(4), 3);
  EXPECT_EQ(chain.site(5), -1);
  EXPECT_EQ(Lattice::chain(4, Boundary::Periodic).site(5), 0);
  // Site 1 (qubit 0) is odd in the 1-based convention.
  EXPECT_FALSE(chain.is_even(0));
  EXPECT_TRUE(chain.is_even(1));
}

TEST(Lattice, Validation) {
  EXPECT_THROW(Lattice::chain(2, Boundary::Periodic).validate(), DomainError);
  EXPECT_THROW(Lattice::square(3, 4, Boundary::Periodic).validate(), DomainError);
  EXPECT_NO_THROW(Lattice::square(3, 3, Boundary::Open).validate());
  EXPECT_THROW(Lattice::square(9, 8, Boundary::Open).validate(), ResourceError);
}

TEST(Enums, StringRoundTrip) {
  for (auto b : {Boundary::Open, Boundary::Periodic}) {
    EXPECT_EQ(boundary_from_string(to_string(b)), b);
  }
  for (auto m : {DriveMode::All, DriveMode::OddOnly, DriveMode::EvenOnly}) {
    EXPECT_EQ(drive_mode_from_string(to_string(m)), m);
  }
  EXPECT_THROW(boundary_from_string("twisted"), DomainError);
}

TEST(DriveConfig, ControlPattern) {
  const DriveConfig odd{DriveMode::OddOnly};
  EXPECT_TRUE(odd.is_control(1, 4, Boundary::Open));
  EXPECT_FALSE(odd.is_control(2, 4, Boundary::Open));
  EXPECT_TRUE(odd.is_control(3, 4, Boundary::Open));
  const DriveConfig all{DriveMode::All};
  EXPECT_FALSE(all.is_control(4, 4, Boundary::Open));
  EXPECT_TRUE(all.is_control(4, 4, Boundary::Periodic));
}

TEST(DeviceParams, CrossResonanceChain) {
  const DeviceParams p = DeviceParams::cr_chain(3, 100.0, 2.0, 0.1, 0.05);
  EXPECT_DOUBLE_EQ(p.omega_q[0], 104.0);
  EXPECT_DOUBLE_EQ(p.omega_q[2], 100.0);
  // Each control is driven at its target's frequency.
  EXPECT_DOUBLE_EQ(p.omega[0], p.omega_q[1]);
  EXPECT_DOUBLE_EQ(p.omega[1], p.omega_q[2]);
  EXPECT_DOUBLE_EQ(p.delta(0), 2.0);
  EXPECT_FALSE(p.is_driven(2));
  EXPECT_EQ(p.nbonds(), 2);
  EXPECT_NEAR(effective_coupling(p, 0), -0.05 * 0.1 / 8.0, 1e-15);
  EXPECT_NEAR(p.xi(0), std::atan2(2.0, 0.1), 1e-15);
  EXPECT_NEAR(p.eta(0), std::hypot(2.0, 0.1), 1e-15);
}

TEST(DeviceParams, ValidationCatchesSizeErrors) {
  DeviceParams p = DeviceParams::cr_chain(3, 100.0, 2.0, 0.1, 0.05);
  p.g.push_back(0.1);
  EXPECT_THROW(p.validate(), DomainError);
}

TEST(Regime, WarnsOutsideWeakDriving) {
  const auto ok = validate_regime(DeviceParams::cr_chain(2, 300, 10, 0.5, 0.2));
  EXPECT_TRUE(ok.ok());
  ASSERT_EQ(ok.entries.size(), 1U);
  EXPECT_EQ(ok.entries[0].qubit, 1);
  EXPECT_NEAR(ok.entries[0].omega_ratio, 0.05, 1e-15);
  const auto bad = validate_regime(DeviceParams::cr_chain(2, 300, 1, 0.5, 0.2));
  EXPECT_FALSE(bad.ok());
  EXPECT_EQ(bad.warnings.size(), 2U);
}

TEST(Regime, ZeroDetuningOnDrivenQubitThrows) {
  DeviceParams p = DeviceParams::cr_chain(2, 300, 10, 0.5, 0.2);
  p.omega[0] = p.omega_q[0];
  EXPECT_THROW(validate_regime(p), DomainError);
}

TEST(UniformDrive, ExtractsSharedParameters) {
  const UniformDrive u = uniform_drive(DeviceParams::cr_chain(4, 300, 10, 0.5, 0.2, 0.3));
  EXPECT_EQ(u.n, 4);
  EXPECT_DOUBLE_EQ(u.delta, 10.0);
  EXPECT_DOUBLE_EQ(u.ratio(), 0.05);
  EXPECT_NEAR(u.coupling(), -0.2 * 0.5 / 40.0, 1e-16);
  EXPECT_DOUBLE_EQ(u.phi, 0.3);
}

TEST(UniformDrive, RejectsNonUniformDevices) {
  DeviceParams p = DeviceParams::cr_chain(4, 300, 10, 0.5, 0.2);
  p.Omega[1] = 0.7;
  EXPECT_THROW(uniform_drive(p), DomainError);
}

TEST(ModelParams, TotalTimeAndValidation) {
  ModelParams m{1.0, 0.25, 8};
  EXPECT_DOUBLE_EQ(m.total_time(), 2.0);
  m.M = 0;
  EXPECT_THROW(m.validate(), DomainError);
}

}  // namespace
}  // namespace crda
