// SPDX-License-Identifier: Apache-2.0
//
// risdof: sum-DoF analysis of active-RIS-assisted two-user MIMO interference channels
// Copyright (C) 2026 The risdof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace risdof {

// Bad user input: non-positive antenna counts, negative budgets, a case
// label that does not apply to the configuration, bad SNR range, ...
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// No case of the taxonomy matched a canonical configuration. Never expected
// at runtime; tests treat it as a failure.
class CoverageViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// More entries must be zeroed than there are RIS elements.
class InfeasibleBudget : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The stacked cancellation system is numerically rank deficient. Callers
// resample the channels.
class IllConditioned : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An entry that the RIS should have cancelled is above tolerance.
class ZeroBlockViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A stream allocation asks for more precoding directions than exist.
class AllocationInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Neither interference-decoding owner yields a decodable scheme.
class DecodabilityFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace risdof
