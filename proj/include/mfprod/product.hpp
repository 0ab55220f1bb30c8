/*
 * product.hpp
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

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mfprod/cumulants.hpp"

namespace mfprod {

inline constexpr int kMaxProductLength = 8;
inline constexpr int kMaxFactors = 8;
inline constexpr int kMaxMaximalRefinements = 24;

struct TaggedLetter {
	int factor;    // 0-based
	int generator; // index into that factor's generator list
	friend bool operator==(const TaggedLetter&, const TaggedLetter&) = default;
};
using TaggedWord = std::vector<TaggedLetter>;

// A functional given by its moments on nonempty words.
template <class S>
struct Factor {
	std::vector<Generator> generators;
	MomentFn<S> moment;
};

template <class S>
Factor<S> as_factor(FunctionalTable<S> t) {
	auto gens = t.generators();
	auto shared = std::make_shared<const FunctionalTable<S>>(std::move(t));
	return {gens, [shared](const Word& w) { return shared->at(w); }};
}

template <class S>
struct ExpansionTerm {
	Partition partition;
	Complex weight;
	S contribution;
	bool mixed = false; // some block holds letters of two factors
};

// Face word of a tagged word; validates the tags against the factors.
template <class S>
FaceWord tagged_faces(const std::vector<Factor<S>>& factors, const TaggedWord& word);

// Moment of the symmetric universal product with the given highest
// coefficients: exp of the direct sum of the factor logs.
template <class S>
S product_moment(const WeightFamily& family, const std::vector<Factor<S>>& factors, const TaggedWord& word,
                 std::vector<ExpansionTerm<S>>* explain = nullptr);

// The product of several factors as one factor over the concatenated generators.
template <class S>
Factor<S> product_factor(const WeightFamily& family, std::vector<Factor<S>> factors);

// Factor indices and faces; the induced partition has one block per factor used.
struct BlockStructure {
	std::vector<int> factor; // 0-based
	FaceWord faces;
	Partition maximal_partition() const;
	bool adapted(const Partition& p) const;
};

Complex extract_highest_coefficient(const WeightFamily& family, const OrderedPartition& p);
Complex extract_full_coefficient(const WeightFamily& family, const BlockStructure& s, const Partition& rho);

struct CombinatorialResult {
	Complex value;
	std::vector<Partition> maximal; // coarsest refinements of the block partition inside the class
	long terms = 0;                 // nonempty subsets R summed
};
CombinatorialResult combinatorial_moment(ClassId c, const std::vector<Factor<Complex>>& factors, const TaggedWord& word,
                                         int max_refinements = kMaxMaximalRefinements);

struct DifferenceReport {
	double max_error = 0;
	std::optional<TaggedWord> witness;
	long checked = 0;
	bool pass(double eps = kEps) const { return max_error < eps; }
};

// Letters i and i+1 (1-based) against one fused product letter.
double well_definedness_check(const WeightFamily& family, const std::vector<Table>& tables, const TaggedWord& word, int i);

// All tagged words up to max_len over three factors: both bracketings against
// the flat formula, plus invariance under every relabeling of the factors.
DifferenceReport associativity_symmetry_check(const WeightFamily& family, const Table& t1, const Table& t2,
                                              const Table& t3, int max_len);

struct UnitReport {
	bool insertion_invariant = true;
	std::optional<TaggedWord> witness; // word with the unit letter inserted
	int inserted_at = 0;               // 1-based position of the unit letter in the witness
	double max_error = 0;
	bool nu_all_one = true;
	bool singleton_inductive = true;
	bool agree() const {
		return insertion_invariant == nu_all_one && nu_all_one == singleton_inductive;
	}
};
UnitReport unit_preservation_check(const WeightFamily& family, int max_len, std::uint64_t seed, double eps = kEps);

std::string format_tagged_word(const std::vector<std::vector<Generator>>& gens, const TaggedWord& w);

} // namespace mfprod
