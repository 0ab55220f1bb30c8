/*
 * cumulants.hpp
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

#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mfprod/weights.hpp"

namespace mfprod {

struct Generator {
	Face face;
	std::string name;
	friend bool operator==(const Generator&, const Generator&) = default;
};

// Letters are indices into a generator list.
using Word = std::vector<int>;

Word restrict_word(const Word& w, const Block& legs);
FaceWord faces_of(const std::vector<Generator>& gens, const Word& w);

// Dense table of a functional on all words of length 1..degree_bound over a
// finite generator set. The value on the empty word is implicit.
template <class S>
class FunctionalTable {
public:
	FunctionalTable() = default;
	FunctionalTable(std::vector<Generator> gens, int degree_bound);

	const std::vector<Generator>& generators() const { return gens_; }
	int degree_bound() const { return degree_; }
	int generator_index(Face face, const std::string& name) const;
	FaceWord faces(const Word& w) const { return faces_of(gens_, w); }

	std::size_t count(int length) const { return values_[length].size(); }
	Word word_at(int length, std::size_t index) const;
	std::size_t index_of(const Word& w) const;

	const S& at(const Word& w) const { return values_[check(w)][index_of(w)]; }
	S& at(const Word& w) { return values_[check(w)][index_of(w)]; }
	const S& at(int length, std::size_t index) const { return values_[length][index]; }
	S& at(int length, std::size_t index) { return values_[length][index]; }
	S operator()(const Word& w) const { return at(w); }

private:
	int check(const Word& w) const;

	std::vector<Generator> gens_;
	int degree_ = 0;
	std::vector<std::vector<S>> values_; // values_[n][index], n = 0 unused
};

using Table = FunctionalTable<Complex>;

template <class S>
using MomentFn = std::function<S(const Word&)>;

// Alpha-weighted exponential and its inverse, on dense tables.
template <class S>
FunctionalTable<S> exp_alpha(const WeightFamily& family, const FunctionalTable<S>& psi);
template <class S>
FunctionalTable<S> log_alpha(const WeightFamily& family, const FunctionalTable<S>& phi);

inline Table cumulants_to_moments(const WeightFamily& family, const Table& c) {
	return exp_alpha(family, c);
}
inline Table moments_to_cumulants(const WeightFamily& family, const Table& m) {
	return log_alpha(family, m);
}

// Sum over ordered partitions with the 1/|pi|! normalization, for comparison
// with the unordered transform.
Complex ordered_moment(const WeightFamily& family, const Table& cumulants, const Word& w);

// Logs of a moment functional on all subwords of one fixed word. The result is
// indexed by position mask; entry 0 is unused. moment(mask) gives the moment of
// the subword at those positions.
template <class S>
std::vector<S> subword_logs(const WeightFamily& family, const FaceWord& faces,
                            const std::function<S(std::uint32_t)>& moment);

// Mask helpers shared with the product engine.
inline Block mask_legs(std::uint32_t mask) {
	Block b;
	for (int i = 0; mask; ++i, mask >>= 1)
		if (mask & 1)
			b.push_back(i + 1);
	return b;
}
FaceWord mask_faces(const FaceWord& faces, std::uint32_t mask);

Table direct_sum(const Table& a, const Table& b);

// Pushforward along a substitution sending generator j of the new table to
// the word subst[j] over the old generators, all letters of matching face.
Table substitute(const Table& phi, std::vector<Generator> new_gens, const std::vector<Word>& subst);

Table random_table(std::vector<Generator> gens, int degree_bound, std::mt19937_64& rng);
// Small integers, so sums of products stay exact in floating point.
Table integer_table(std::vector<Generator> gens, int degree_bound, std::mt19937_64& rng, int range = 3);
std::vector<Generator> two_face_generators(const std::string& prefix, int per_face = 1);

struct FusionReport {
	Complex lhs, rhs;
	double difference = 0;
};
// Cumulant of the word with letters i and i+1 (1-based i) fused into one
// product letter, against the two-block correction formula.
FusionReport fusion_check(const WeightFamily& family, const Table& m, const Word& w, int i);
// Same, with the cumulants of m already computed.
FusionReport fusion_check(const WeightFamily& family, const Table& m, const Table& cumulants, const Word& w, int i);

// Implementation ------------------------------------------------------------

inline constexpr std::size_t kMaxTableEntries = std::size_t(1) << 22;

template <class S>
FunctionalTable<S>::FunctionalTable(std::vector<Generator> gens, int degree_bound)
    : gens_(std::move(gens)), degree_(degree_bound) {
	if (degree_ < 1)
		input_error("table degree bound must be at least 1");
	if (gens_.empty())
		input_error("table needs at least one generator");
	for (std::size_t i = 0; i < gens_.size(); ++i)
		for (std::size_t j = 0; j < i; ++j)
			if (gens_[i] == gens_[j])
				input_error("duplicate generator " + gens_[i].name);
	values_.resize(degree_ + 1);
	std::size_t n = 1, total = 0;
	for (int len = 1; len <= degree_; ++len) {
		n *= gens_.size();
		total += n;
		if (total > kMaxTableEntries)
			budget_error("table with " + std::to_string(gens_.size()) + " generators and degree " +
			             std::to_string(degree_) + " is too large");
		values_[len].assign(n, S(Complex{}));
	}
}

template <class S>
int FunctionalTable<S>::generator_index(Face face, const std::string& name) const {
	for (std::size_t i = 0; i < gens_.size(); ++i)
		if (gens_[i].face == face && gens_[i].name == name)
			return int(i);
	return -1;
}

template <class S>
Word FunctionalTable<S>::word_at(int length, std::size_t index) const {
	Word w(length);
	for (int i = length - 1; i >= 0; --i) {
		w[i] = int(index % gens_.size());
		index /= gens_.size();
	}
	return w;
}

template <class S>
std::size_t FunctionalTable<S>::index_of(const Word& w) const {
	std::size_t idx = 0;
	for (int g : w)
		idx = idx * gens_.size() + std::size_t(g);
	return idx;
}

template <class S>
int FunctionalTable<S>::check(const Word& w) const {
	if (w.empty() || int(w.size()) > degree_)
		input_error("word length " + std::to_string(w.size()) + " outside table range 1.." + std::to_string(degree_));
	for (int g : w)
		if (g < 0 || g >= int(gens_.size()))
			input_error("unknown generator index " + std::to_string(g));
	return int(w.size());
}

namespace detail {
// Sum over partitions of the positions in `mask`, weighted by alpha, of the
// product of value(block mask). The one-block term is skipped when
// skip_one_block is set.
template <class S, class F>
S partition_sum(const WeightFamily& family, const FaceWord& faces, std::uint32_t mask, bool skip_one_block, F&& value) {
	int n = std::popcount(mask);
	int pos[32];
	for (int i = 0, k = 0; i < 32; ++i)
		if (mask >> i & 1)
			pos[k++] = i;
	FaceWord sub(n, ' ');
	for (int k = 0; k < n; ++k)
		sub[k] = faces[pos[k]];
	auto weights = family.weights_for_word(sub);
	const auto& shapes = set_partition_shapes(n);
	S total(Complex{});
	for (std::size_t s = 0; s < shapes.size(); ++s) {
		Complex a = (*weights)[s];
		if (a == Complex{})
			continue;
		const auto& blocks = shapes[s].blocks;
		if (skip_one_block && blocks.size() == 1)
			continue;
		S term(a);
		for (const auto& b : blocks) {
			std::uint32_t m = 0;
			for (int k : b)
				m |= 1u << pos[k];
			term = term * value(m);
		}
		total += term;
	}
	return total;
}
} // namespace detail

template <class S>
std::vector<S> subword_logs(const WeightFamily& family, const FaceWord& faces,
                            const std::function<S(std::uint32_t)>& moment) {
	int n = int(faces.size());
	if (n > 20)
		budget_error("word too long for subword cumulants");
	std::vector<std::uint32_t> order;
	for (std::uint32_t m = 1; m < (1u << n); ++m)
		order.push_back(m);
	std::stable_sort(order.begin(), order.end(),
	                 [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
	std::vector<S> logs(std::size_t(1) << n, S(Complex{}));
	for (auto m : order) {
		// monic: the one-block weight is 1
		logs[m] = moment(m) - detail::partition_sum<S>(family, faces, m, true, [&](std::uint32_t b) { return logs[b]; });
	}
	return logs;
}

template <class S>
FunctionalTable<S> exp_alpha(const WeightFamily& family, const FunctionalTable<S>& psi) {
	FunctionalTable<S> out(psi.generators(), psi.degree_bound());
	for (int n = 1; n <= psi.degree_bound(); ++n)
		for (std::size_t idx = 0; idx < psi.count(n); ++idx) {
			Word w = psi.word_at(n, idx);
			FaceWord f = psi.faces(w);
			out.at(n, idx) = detail::partition_sum<S>(family, f, (1u << n) - 1, false, [&](std::uint32_t m) {
				return psi.at(restrict_word(w, mask_legs(m)));
			});
		}
	return out;
}

template <class S>
FunctionalTable<S> log_alpha(const WeightFamily& family, const FunctionalTable<S>& phi) {
	FunctionalTable<S> out(phi.generators(), phi.degree_bound());
	for (int n = 1; n <= phi.degree_bound(); ++n)
		for (std::size_t idx = 0; idx < phi.count(n); ++idx) {
			Word w = phi.word_at(n, idx);
			FaceWord f = phi.faces(w);
			std::uint32_t full = (1u << n) - 1;
			out.at(n, idx) = phi.at(n, idx) - detail::partition_sum<S>(family, f, full, true, [&](std::uint32_t m) {
				                                  return out.at(restrict_word(w, mask_legs(m)));
			                                  });
		}
	return out;
}

} // namespace mfprod
