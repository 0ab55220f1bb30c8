/*
 * verify.hpp
 *
 * This source file is part of the mfprod open source project
 *
 * Copyright 2026 The mfprod project authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mfprod/weights.hpp"

namespace mfprod {

struct Check {
	std::string name;
	bool pass = true;
	double max_error = 0;
	std::string witness;   // partition diagram or tagged word; empty when passing
	std::string reproduce; // a single command that replays the check
	std::string detail;
};

struct VerifyReport {
	std::string suite;
	std::uint64_t seed = 0;
	std::vector<Check> checks;
	bool pass() const;
};

// "all" runs every suite in order and concatenates the checks.
std::vector<std::string> verify_suites();
VerifyReport run_suite(const std::string& suite, std::uint64_t seed);

// Families used as negative controls.
// Tensor-type weights continued off the unit circle: admissible up to the
// mirror condition.
WeightFamily mirror_asymmetric_family();
// Noncrossing with at most two blocks: not closed under block replacement.
bool nc_two_blocks(const Partition& p);
WeightFamily nc_two_blocks_family();

} // namespace mfprod
