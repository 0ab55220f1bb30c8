/*
 * classification.hpp
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

#include <array>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "mfprod/classes.hpp"
#include "mfprod/weights.hpp"

namespace mfprod {

// 0/1 pattern of (nu_w, nu_b, nu_wb, xi_w, xi_b, xi_wb).
using Pattern = std::array<int, 6>;

Pattern class_pattern(ClassId c);
std::string pattern_string(const Pattern& p);
Pattern swap_pattern(const Pattern& p);

struct Deformation {
	DeformedKind kind;
	Complex zeta;
};
using Classification = std::variant<std::monostate, ClassId, Deformation>;

// Throws an input error when the coefficients violate the basic relations.
Classification classify_pattern(const BasicCoefficients& bc);
std::string classification_string(const Classification& c);

struct PatternEntry {
	Pattern pattern;
	ClassId cls;
};
std::vector<PatternEntry> enumerate_admissible_patterns();
// Relations and implications on a 0/1 pattern, without the class lookup.
bool pattern_consistent(const Pattern& p);

// Hasse diagram of the classes restricted to partitions with at most max_legs legs.
struct HasseEdge {
	ClassId from, to; // from is covered by to
	std::optional<Partition> witness; // in `to`, not in `from`
};
struct Incomparability {
	ClassId a, b;
	std::optional<Partition> a_not_b, b_not_a;
};
struct HasseReport {
	int max_legs = 0;
	std::vector<HasseEdge> edges;
	std::vector<Incomparability> incomparable; // NCwAb/AwNCb and the covers of pNC
	std::vector<std::string> violations;
	std::array<long, 12> cardinality{};
	bool pass() const { return violations.empty(); }
};
// Covering edges of the diagram, stated as the expected answer.
const std::vector<std::pair<ClassId, ClassId>>& expected_hasse_edges();
HasseReport hasse_verify(int max_legs);
std::string hasse_dot(const HasseReport& r);

// Partitions with at most max_legs legs reachable from the seeds by the
// closure operations, passing only through intermediates with at most
// max_legs + headroom legs.
std::set<Partition> closure_generate(const std::vector<Partition>& generators, int max_legs, int headroom = 1,
                                     std::size_t node_cap = 2'000'000);
// Basic diagrams whose pattern entry is 1; these generate the class.
std::vector<Partition> class_generators(ClassId c);
std::vector<Partition> class_members(ClassId c, int max_legs);

using PartitionPredicate = std::function<bool(const Partition&)>;
struct RestrictionReport {
	bool pass = true;
	std::optional<Partition> rho, sigma;
	long checked = 0;
};
RestrictionReport refinement_restriction_check(const PartitionPredicate& in_class, int max_legs);
RestrictionReport refinement_restriction_check(ClassId c, int max_legs);

// Rotation invariance of the class indicator on every word up to max_legs.
struct RotationReport {
	bool invariant = true;
	std::optional<Partition> witness;
};
RotationReport rotation_check(ClassId c, int max_legs);

} // namespace mfprod
