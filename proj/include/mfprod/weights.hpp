/*
 * weights.hpp
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

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mfprod/classes.hpp"
#include "mfprod/partition.hpp"

namespace mfprod {

// Weights of the four smallest two-block diagrams. The entry for (q, q) is the
// monochrome coefficient; (q, Q) with q != Q the bicolor one.
struct BasicCoefficients {
	std::string alphabet{kTwoFaces};
	std::map<std::pair<Face, Face>, Complex> nu, xi;

	Complex nu_at(Face q, Face Q) const;
	Complex xi_at(Face q, Face Q) const;

	// (nu_w, nu_b, nu_wb, xi_w, xi_b, xi_wb); the (b, w) entries are the conjugates.
	static BasicCoefficients two_faced(Complex nu_w, Complex nu_b, Complex nu_wb, Complex xi_w, Complex xi_b,
	                                   Complex xi_wb);
	std::array<Complex, 6> pattern() const;
};

Partition nest_diagram(Face q, Face Q);
Partition cross_diagram(Face q, Face Q);

struct RelationReport {
	bool pass = true;
	std::string relation; // idempotent, absorption, modulus, crossing-transfer, nesting-crossing or range
	std::string detail;
};
RelationReport check_basic_relations(const BasicCoefficients& bc, double eps = kEps);

enum class DeformedKind { tensor, free, bifree };
std::string_view deformed_name(DeformedKind k);
std::optional<DeformedKind> deformed_from_name(std::string_view name);
BasicCoefficients deformed_coefficients(DeformedKind k, Complex zeta);

// Reduction-based evaluation from basic coefficients. With an rng, every
// choice point (split position, orientation) is taken at random.
Complex evaluate_by_reduction(const BasicCoefficients& bc, const Partition& p, std::mt19937_64* rng = nullptr);

class WeightFamily {
public:
	enum class Kind { class_indicator, deformed, basic, table, function };
	using Fn = std::function<Complex(const Partition&)>;

	static WeightFamily class_indicator(ClassId c);
	static WeightFamily deformed(DeformedKind k, Complex zeta);
	static WeightFamily basic(BasicCoefficients bc, std::string label = "basic");
	static WeightFamily table(std::map<Partition, Complex> entries, int max_legs, std::string alphabet = std::string(kTwoFaces));
	static WeightFamily function(std::string label, Fn fn, std::string alphabet = std::string(kTwoFaces));

	Kind kind() const;
	const std::string& alphabet() const;
	const std::string& label() const;
	std::optional<ClassId> class_id() const;
	std::optional<std::pair<DeformedKind, Complex>> deformation() const;
	const BasicCoefficients* coefficients() const;
	std::optional<int> max_legs() const;
	const std::map<Partition, Complex>* entries() const;

	Complex evaluate(const Partition& p) const;
	// Weights of all partitions of the word, in enumerate_partitions order.
	std::shared_ptr<const std::vector<Complex>> weights_for_word(const FaceWord& word) const;

private:
	struct State;
	std::shared_ptr<State> s_;
};

BasicCoefficients basic_coefficients(const WeightFamily& family);

struct AdmissibilityReport {
	bool pass = true;
	std::string condition; // "(i)".."(vi)" of the first violation
	std::optional<Partition> witness;
	std::string detail;
	long checked = 0;
};
AdmissibilityReport check_admissible(const WeightFamily& family, int max_legs, double eps = kEps);

struct SingletonReport {
	bool inductive = true;
	std::optional<Partition> witness;
	bool nu_all_one = true;
	bool agree() const { return inductive == nu_all_one; }
};
SingletonReport is_singleton_inductive(const WeightFamily& family, int max_legs, double eps = kEps);

} // namespace mfprod
