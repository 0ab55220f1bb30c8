/*
 * cumulants.cpp
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

#include "mfprod/cumulants.hpp"

#include <algorithm>
#include <numeric>

namespace mfprod {

Word restrict_word(const Word& w, const Block& legs) {
	Word out;
	out.reserve(legs.size());
	for (int l : legs)
		out.push_back(w[l - 1]);
	return out;
}

FaceWord faces_of(const std::vector<Generator>& gens, const Word& w) {
	FaceWord f;
	f.reserve(w.size());
	for (int g : w)
		f.push_back(gens.at(g).face);
	return f;
}

FaceWord mask_faces(const FaceWord& faces, std::uint32_t mask) {
	FaceWord out;
	for (int i = 0; mask; ++i, mask >>= 1)
		if (mask & 1)
			out.push_back(faces[i]);
	return out;
}

Complex ordered_moment(const WeightFamily& family, const Table& cumulants, const Word& w) {
	int n = int(w.size());
	FaceWord f = cumulants.faces(w);
	auto weights = family.weights_for_word(f);
	const auto& shapes = set_partition_shapes(n);
	Complex total{};
	for (std::size_t s = 0; s < shapes.size(); ++s) {
		Partition p = Partition::from_labels(f, shapes[s].labels);
		int k = p.block_count();
		std::vector<int> order(k);
		std::iota(order.begin(), order.end(), 0);
		double fact = 1;
		for (int i = 2; i <= k; ++i)
			fact *= i;
		Complex prod = 1.0;
		for (const auto& b : shapes[s].blocks) {
			Block legs;
			for (int l : b)
				legs.push_back(l + 1);
			prod *= cumulants.at(restrict_word(w, legs));
		}
		// each block order carries the (order independent) weight of the
		// underlying partition
		Complex sum{};
		do {
			OrderedPartition{p, order}.validate();
			sum += (*weights)[s];
		} while (std::next_permutation(order.begin(), order.end()));
		total += sum / fact * prod;
	}
	return total;
}

Table direct_sum(const Table& a, const Table& b) {
	auto gens = a.generators();
	for (const auto& g : b.generators()) {
		if (a.generator_index(g.face, g.name) >= 0)
			input_error("direct sum: generator " + std::string(1, g.face) + ":" + g.name + " on both sides");
		gens.push_back(g);
	}
	int na = int(a.generators().size());
	Table out(gens, std::min(a.degree_bound(), b.degree_bound()));
	for (int n = 1; n <= out.degree_bound(); ++n)
		for (std::size_t idx = 0; idx < out.count(n); ++idx) {
			Word w = out.word_at(n, idx);
			bool left = std::all_of(w.begin(), w.end(), [&](int g) { return g < na; });
			bool right = std::all_of(w.begin(), w.end(), [&](int g) { return g >= na; });
			if (left)
				out.at(n, idx) = a.at(w);
			else if (right) {
				for (int& g : w)
					g -= na;
				out.at(n, idx) = b.at(w);
			}
		}
	return out;
}

Table substitute(const Table& phi, std::vector<Generator> new_gens, const std::vector<Word>& subst) {
	if (subst.size() != new_gens.size())
		input_error("substitution needs one word per generator");
	std::size_t longest = 1;
	for (std::size_t j = 0; j < subst.size(); ++j) {
		if (subst[j].empty())
			input_error("substitution word for " + new_gens[j].name + " is empty");
		for (int g : subst[j])
			if (g < 0 || g >= int(phi.generators().size()) || phi.generators()[g].face != new_gens[j].face)
				input_error("substitution word for " + new_gens[j].name + " has a letter of another face");
		longest = std::max(longest, subst[j].size());
	}
	int degree = phi.degree_bound() / int(longest);
	if (degree < 1)
		input_error("substitution words exceed the table degree");
	Table out(std::move(new_gens), degree);
	for (int n = 1; n <= degree; ++n)
		for (std::size_t idx = 0; idx < out.count(n); ++idx) {
			Word expanded;
			for (int g : out.word_at(n, idx))
				expanded.insert(expanded.end(), subst[g].begin(), subst[g].end());
			out.at(n, idx) = phi.at(expanded);
		}
	return out;
}

Table random_table(std::vector<Generator> gens, int degree_bound, std::mt19937_64& rng) {
	Table t(std::move(gens), degree_bound);
	std::uniform_real_distribution<double> u(-1.0, 1.0);
	for (int n = 1; n <= degree_bound; ++n)
		for (std::size_t i = 0; i < t.count(n); ++i) {
			double re = u(rng), im = u(rng);
			t.at(n, i) = Complex(re, im);
		}
	return t;
}

Table integer_table(std::vector<Generator> gens, int degree_bound, std::mt19937_64& rng, int range) {
	Table t(std::move(gens), degree_bound);
	std::uniform_int_distribution<int> u(-range, range);
	for (int n = 1; n <= degree_bound; ++n)
		for (std::size_t i = 0; i < t.count(n); ++i) {
			int re = u(rng), im = u(rng);
			t.at(n, i) = Complex(re, im);
		}
	return t;
}

std::vector<Generator> two_face_generators(const std::string& prefix, int per_face) {
	std::vector<Generator> gens;
	for (char f : kTwoFaces)
		for (int i = 1; i <= per_face; ++i)
			gens.push_back({f, prefix + std::string(1, f) + std::to_string(i)});
	return gens;
}

FusionReport fusion_check(const WeightFamily& family, const Table& m, const Word& w, int i) {
	return fusion_check(family, m, log_alpha(family, m), w, i);
}

FusionReport fusion_check(const WeightFamily& family, const Table& m, const Table& c, const Word& w, int i) {
	int n = int(w.size());
	if (i < 1 || i >= n)
		input_error("fusion check position out of range");
	FaceWord f = m.faces(w);
	if (f[i - 1] != f[i])
		input_error("letters " + std::to_string(i) + " and " + std::to_string(i + 1) + " have different faces");
	if (n > m.degree_bound())
		input_error("word longer than the table degree");

	// fused word: letter i-1 stands for the product of letters i-1 and i (0-based)
	std::vector<Word> letters;
	FaceWord fused_faces;
	for (int k = 0; k < n; ++k) {
		if (k == i) {
			letters.back().push_back(w[k]);
			continue;
		}
		letters.push_back({w[k]});
		fused_faces.push_back(f[k]);
	}
	auto logs = subword_logs<Complex>(family, fused_faces, [&](std::uint32_t mask) {
		Word expanded;
		for (int k = 0; mask; ++k, mask >>= 1)
			if (mask & 1)
				expanded.insert(expanded.end(), letters[k].begin(), letters[k].end());
		return m.at(expanded);
	});
	FusionReport r;
	r.lhs = logs[(1u << (n - 1)) - 1];

	r.rhs = c.at(w);
	// two-block partitions separating i and i+1
	for (const auto& shape : set_partition_shapes(n)) {
		if (shape.blocks.size() != 2 || shape.labels[i - 1] == shape.labels[i])
			continue;
		Complex a = family.evaluate(Partition::from_labels(f, shape.labels));
		if (a == Complex{})
			continue;
		Block b1, b2;
		for (int l : shape.blocks[0])
			b1.push_back(l + 1);
		for (int l : shape.blocks[1])
			b2.push_back(l + 1);
		r.rhs += a * c.at(restrict_word(w, b1)) * c.at(restrict_word(w, b2));
	}
	r.difference = std::abs(r.lhs - r.rhs);
	return r;
}

} // namespace mfprod
