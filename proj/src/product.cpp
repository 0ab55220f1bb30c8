/*
 * product.cpp
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

#include "mfprod/product.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace mfprod {

template <class S>
FaceWord tagged_faces(const std::vector<Factor<S>>& factors, const TaggedWord& word) {
	if (factors.empty() || int(factors.size()) > kMaxFactors)
		budget_error("product supports 1.." + std::to_string(kMaxFactors) + " factors");
	if (int(word.size()) > kMaxProductLength)
		budget_error("product words are limited to " + std::to_string(kMaxProductLength) + " letters");
	FaceWord f;
	for (const auto& l : word) {
		if (l.factor < 0 || l.factor >= int(factors.size()))
			input_error("letter refers to unknown factor " + std::to_string(l.factor + 1));
		const auto& gens = factors[l.factor].generators;
		if (l.generator < 0 || l.generator >= int(gens.size()))
			input_error("unknown generator in factor " + std::to_string(l.factor + 1));
		f.push_back(gens[l.generator].face);
	}
	return f;
}

template <class S>
S product_moment(const WeightFamily& family, const std::vector<Factor<S>>& factors, const TaggedWord& word,
                 std::vector<ExpansionTerm<S>>* explain) {
	FaceWord faces = tagged_faces(factors, word);
	int n = int(word.size());
	if (n == 0)
		return S(Complex(1.0));

	// logs on the subwords of each factor; everything else is a mixed block
	std::vector<S> logs(std::size_t(1) << n, S(Complex{}));
	for (int k = 0; k < int(factors.size()); ++k) {
		std::vector<int> pos;
		for (int i = 0; i < n; ++i)
			if (word[i].factor == k)
				pos.push_back(i);
		if (pos.empty())
			continue;
		FaceWord local_faces;
		for (int i : pos)
			local_faces.push_back(faces[i]);
		auto local = subword_logs<S>(family, local_faces, [&](std::uint32_t m) {
			Word w;
			for (int j = 0; m; ++j, m >>= 1)
				if (m & 1)
					w.push_back(word[pos[j]].generator);
			return factors[k].moment(w);
		});
		for (std::uint32_t m = 1; m < local.size(); ++m) {
			std::uint32_t g = 0;
			for (int j = 0; j < int(pos.size()); ++j)
				if (m >> j & 1)
					g |= 1u << pos[j];
			logs[g] = local[m];
		}
	}

	std::uint32_t full = (1u << n) - 1;
	if (!explain)
		return detail::partition_sum<S>(family, faces, full, false, [&](std::uint32_t m) { return logs[m]; });

	auto weights = family.weights_for_word(faces);
	const auto& shapes = set_partition_shapes(n);
	S total(Complex{});
	for (std::size_t s = 0; s < shapes.size(); ++s) {
		Complex a = (*weights)[s];
		if (a == Complex{})
			continue;
		ExpansionTerm<S> term{Partition::from_labels(faces, shapes[s].labels), a, S(a), false};
		for (const auto& b : shapes[s].blocks) {
			std::uint32_t m = 0;
			for (int i : b)
				m |= 1u << i;
			if (std::any_of(b.begin(), b.end(), [&](int i) { return word[i].factor != word[b[0]].factor; }))
				term.mixed = true;
			term.contribution = term.contribution * logs[m];
		}
		total += term.contribution;
		explain->push_back(std::move(term));
	}
	return total;
}

template <class S>
Factor<S> product_factor(const WeightFamily& family, std::vector<Factor<S>> factors) {
	Factor<S> out;
	std::vector<TaggedLetter> letter_of;
	for (int k = 0; k < int(factors.size()); ++k)
		for (int g = 0; g < int(factors[k].generators.size()); ++g) {
			out.generators.push_back(factors[k].generators[g]);
			letter_of.push_back({k, g});
		}
	auto shared = std::make_shared<const std::vector<Factor<S>>>(std::move(factors));
	out.moment = [family, shared, letter_of](const Word& w) {
		TaggedWord tw;
		for (int g : w)
			tw.push_back(letter_of.at(g));
		return product_moment(family, *shared, tw);
	};
	return out;
}

template FaceWord tagged_faces(const std::vector<Factor<Complex>>&, const TaggedWord&);
template FaceWord tagged_faces(const std::vector<Factor<MarkerPoly>>&, const TaggedWord&);
template Complex product_moment(const WeightFamily&, const std::vector<Factor<Complex>>&, const TaggedWord&,
                                std::vector<ExpansionTerm<Complex>>*);
template MarkerPoly product_moment(const WeightFamily&, const std::vector<Factor<MarkerPoly>>&, const TaggedWord&,
                                   std::vector<ExpansionTerm<MarkerPoly>>*);
template Factor<Complex> product_factor(const WeightFamily&, std::vector<Factor<Complex>>);

Partition BlockStructure::maximal_partition() const {
	if (factor.size() != faces.size())
		input_error("block structure: factor and face sequences differ in length");
	return Partition::from_labels(faces, factor);
}

bool BlockStructure::adapted(const Partition& p) const {
	if (p.word() != faces)
		return false;
	int n = p.size();
	for (int l = 1; l <= n; ++l)
		for (int m = l + 1; m <= n; ++m)
			if (p.block_of(l) == p.block_of(m) && factor[l - 1] != factor[m - 1])
				return false;
	for (int l = 1; l < n; ++l)
		if (factor[l - 1] == factor[l] && faces[l - 1] == faces[l] && p.block_of(l) != p.block_of(l + 1))
			return false;
	return true;
}

Complex extract_highest_coefficient(const WeightFamily& family, const OrderedPartition& p) {
	p.validate();
	int k = p.partition.block_count();
	if (k > kMaxFactors)
		budget_error("coefficient extraction supports at most " + std::to_string(kMaxFactors) + " blocks");
	if (k == 0)
		return 1.0;
	const auto& alphabet = family.alphabet();
	std::vector<Factor<MarkerPoly>> factors;
	for (int kappa = 0; kappa < k; ++kappa) {
		Factor<MarkerPoly> f;
		for (char q : alphabet)
			f.generators.push_back({q, "t" + std::to_string(kappa + 1) + q});
		// trivially multi-faced all-ones state, scaled by the marker t_kappa
		MarkerPoly scaled = MarkerPoly::monomial(k, 1u << kappa, 1.0);
		f.moment = [scaled](const Word&) { return scaled; };
		factors.push_back(std::move(f));
	}
	TaggedWord w;
	for (int l = 1; l <= p.partition.size(); ++l) {
		auto face_index = alphabet.find(p.partition.face(l));
		if (face_index == std::string::npos)
			input_error("face outside the family alphabet");
		w.push_back({p.order[p.partition.block_of(l)], int(face_index)});
	}
	return product_moment(family, factors, w).coefficient((1u << k) - 1);
}

Complex extract_full_coefficient(const WeightFamily& family, const BlockStructure& s, const Partition& rho) {
	if (s.factor.size() != s.faces.size() || s.factor.empty())
		input_error("block structure: factor and face sequences must be nonempty and of equal length");
	if (!s.adapted(rho))
		input_error(format_diagram(rho) + " is not adapted to the block structure");
	int k = 1 + *std::max_element(s.factor.begin(), s.factor.end());
	// one generator per position, so block words identify their legs
	std::vector<Factor<Complex>> factors(k);
	TaggedWord w;
	for (int l = 1; l <= rho.size(); ++l) {
		int kappa = s.factor[l - 1];
		w.push_back({kappa, int(factors[kappa].generators.size())});
		factors[kappa].generators.push_back({s.faces[l - 1], "x" + std::to_string(l)});
	}
	for (int kappa = 0; kappa < k; ++kappa) {
		std::set<Word> support;
		for (const auto& b : rho.blocks())
			if (s.factor[b[0] - 1] == kappa) {
				Word bw;
				for (int l : b)
					bw.push_back(w[l - 1].generator);
				support.insert(bw);
			}
		factors[kappa].moment = [support](const Word& x) { return support.count(x) ? Complex(1.0) : Complex{}; };
	}
	return product_moment(family, factors, w);
}

namespace {
// Value of the product of the factor moments over the blocks of a refinement
// of the factor partition; each block sits inside one factor.
Complex blockwise(const std::vector<Factor<Complex>>& factors, const TaggedWord& word, const Partition& p) {
	Complex v = 1.0;
	for (const auto& b : p.blocks()) {
		Word w;
		for (int l : b)
			w.push_back(word[l - 1].generator);
		v *= factors[word[b[0] - 1].factor].moment(w);
	}
	return v;
}
} // namespace

CombinatorialResult combinatorial_moment(ClassId c, const std::vector<Factor<Complex>>& factors, const TaggedWord& word,
                                         int max_refinements) {
	FaceWord faces = tagged_faces(factors, word);
	CombinatorialResult r;
	if (word.empty()) {
		r.value = 1.0;
		return r;
	}
	std::vector<int> labels;
	for (const auto& l : word)
		labels.push_back(l.factor);
	Partition pi = Partition::from_labels(faces, labels);

	std::vector<Partition> below;
	for (auto& p : refinements(pi))
		if (member(c, p))
			below.push_back(std::move(p));
	for (const auto& p : below) {
		bool maximal = std::none_of(below.begin(), below.end(),
		                            [&](const Partition& q) { return q != p && is_refinement(p, q); });
		if (maximal)
			r.maximal.push_back(p);
	}
	int m = int(r.maximal.size());
	if (m > max_refinements)
		budget_error("class has " + std::to_string(m) + " coarsest refinements, above the cap of " +
		             std::to_string(max_refinements));

	// accumulate the signed count of each distinct meet, then evaluate once
	std::map<Partition, long> coefficient;
	std::vector<Partition> stack{Partition::one_block(faces)};
	auto visit = [&](auto&& self, int next, int size) -> void {
		for (int i = next; i < m; ++i) {
			stack.push_back(size == 0 ? r.maximal[i] : meet({stack.back(), r.maximal[i]}));
			coefficient[stack.back()] += (size % 2 == 0) ? 1 : -1;
			++r.terms;
			self(self, i + 1, size + 1);
			stack.pop_back();
		}
	};
	visit(visit, 0, 0);
	r.value = 0.0;
	for (const auto& [p, coef] : coefficient)
		if (coef != 0)
			r.value += double(coef) * blockwise(factors, word, p);
	return r;
}

double well_definedness_check(const WeightFamily& family, const std::vector<Table>& tables, const TaggedWord& word,
                              int i) {
	std::vector<Factor<Complex>> factors;
	for (const auto& t : tables)
		factors.push_back(as_factor(t));
	FaceWord faces = tagged_faces(factors, word);
	int n = int(word.size());
	if (i < 1 || i >= n)
		input_error("fusion position out of range");
	auto a = word[i - 1], b = word[i];
	if (a.factor != b.factor || faces[i - 1] != faces[i])
		input_error("letters " + std::to_string(i) + " and " + std::to_string(i + 1) +
		            " differ in factor or face");

	// the fused factor gains one generator standing for the product of the two letters
	auto& fused = factors[a.factor];
	const Table& base = tables[a.factor];
	int product_gen = int(base.generators().size());
	fused.generators.push_back({faces[i - 1], "(" + base.generators()[a.generator].name + base.generators()[b.generator].name + ")"});
	fused.moment = [&base, product_gen, a, b](const Word& w) {
		Word expanded;
		for (int g : w) {
			if (g == product_gen) {
				expanded.push_back(a.generator);
				expanded.push_back(b.generator);
			} else
				expanded.push_back(g);
		}
		return base.at(expanded);
	};
	TaggedWord shorter;
	for (int k = 0; k < n; ++k) {
		if (k == i - 1) {
			shorter.push_back({a.factor, product_gen});
			++k;
		} else
			shorter.push_back(word[k]);
	}
	std::vector<Factor<Complex>> originals;
	for (const auto& t : tables)
		originals.push_back(as_factor(t));
	return std::abs(product_moment(family, originals, word) - product_moment(family, factors, shorter));
}

namespace {
void all_tagged_words(const std::vector<int>& gen_counts, int len, TaggedWord& cur,
                      const std::function<void(const TaggedWord&)>& f) {
	if (int(cur.size()) == len) {
		f(cur);
		return;
	}
	for (int k = 0; k < int(gen_counts.size()); ++k)
		for (int g = 0; g < gen_counts[k]; ++g) {
			cur.push_back({k, g});
			all_tagged_words(gen_counts, len, cur, f);
			cur.pop_back();
		}
}
} // namespace

DifferenceReport associativity_symmetry_check(const WeightFamily& family, const Table& t1, const Table& t2,
                                              const Table& t3, int max_len) {
	std::vector<Factor<Complex>> flat{as_factor(t1), as_factor(t2), as_factor(t3)};
	std::vector<Factor<Complex>> left{product_factor<Complex>(family, {flat[0], flat[1]}), flat[2]};
	std::vector<Factor<Complex>> right{flat[0], product_factor<Complex>(family, {flat[1], flat[2]})};
	int g1 = int(t1.generators().size()), g2 = int(t2.generators().size());
	std::vector<int> counts{g1, g2, int(t3.generators().size())};
	max_len = std::min(max_len, std::min({t1.degree_bound(), t2.degree_bound(), t3.degree_bound()}));

	std::vector<std::array<int, 3>> perms;
	std::array<int, 3> perm{0, 1, 2};
	do
		perms.push_back(perm);
	while (std::next_permutation(perm.begin(), perm.end()));

	DifferenceReport r;
	auto record = [&](double d, const TaggedWord& w) {
		if (d > r.max_error) {
			r.max_error = d;
			r.witness = w;
		}
	};
	TaggedWord cur;
	for (int len = 1; len <= max_len; ++len)
		all_tagged_words(counts, len, cur, [&](const TaggedWord& w) {
			++r.checked;
			Complex v = product_moment(family, flat, w);
			TaggedWord lw, rw;
			for (const auto& l : w) {
				lw.push_back(l.factor == 2 ? TaggedLetter{1, l.generator} : TaggedLetter{0, l.factor == 0 ? l.generator : g1 + l.generator});
				rw.push_back(l.factor == 0 ? l : TaggedLetter{1, l.factor == 1 ? l.generator : g2 + l.generator});
			}
			record(std::abs(v - product_moment(family, left, lw)), w);
			record(std::abs(v - product_moment(family, right, rw)), w);
			for (const auto& p : perms) {
				std::vector<Factor<Complex>> permuted(3);
				TaggedWord pw;
				for (int k = 0; k < 3; ++k)
					permuted[p[k]] = flat[k];
				for (const auto& l : w)
					pw.push_back({p[l.factor], l.generator});
				record(std::abs(v - product_moment(family, permuted, pw)), w);
			}
		});
	return r;
}

UnitReport unit_preservation_check(const WeightFamily& family, int max_len, std::uint64_t seed, double eps) {
	UnitReport r;
	const auto& alphabet = family.alphabet();
	int q = int(alphabet.size());
	std::mt19937_64 rng(seed);
	// generators 0..q-1 are ordinary, q..2q-1 the units of the matching face
	std::vector<Table> bases;
	std::vector<Factor<Complex>> factors;
	for (int k = 0; k < 2; ++k) {
		std::vector<Generator> gens;
		for (char f : alphabet)
			gens.push_back({f, std::string(1, char('a' + k)) + f});
		bases.push_back(random_table(gens, std::max(1, max_len), rng));
	}
	for (int k = 0; k < 2; ++k) {
		Factor<Complex> f;
		f.generators = bases[k].generators();
		for (char c : alphabet)
			f.generators.push_back({c, std::string("u") + c});
		const Table& base = bases[k];
		f.moment = [&base, q](const Word& w) {
			Word stripped;
			for (int g : w)
				if (g < q)
					stripped.push_back(g);
			return stripped.empty() ? Complex(1.0) : base.at(stripped);
		};
		factors.push_back(std::move(f));
	}
	TaggedWord cur;
	for (int len = 1; len < max_len && r.insertion_invariant; ++len)
		all_tagged_words({q, q}, len, cur, [&](const TaggedWord& w) {
			if (!r.insertion_invariant)
				return;
			Complex v = product_moment(family, factors, w);
			for (int at = 0; at <= len; ++at)
				for (int k = 0; k < 2; ++k)
					for (int u = 0; u < q; ++u) {
						TaggedWord with = w;
						with.insert(with.begin() + at, TaggedLetter{k, q + u});
						double d = std::abs(v - product_moment(family, factors, with));
						r.max_error = std::max(r.max_error, d);
						if (d >= eps && r.insertion_invariant) {
							r.insertion_invariant = false;
							r.witness = with;
							r.inserted_at = at + 1;
						}
					}
		});
	auto bc = basic_coefficients(family);
	for (char c : alphabet)
		r.nu_all_one = r.nu_all_one && near(bc.nu_at(c, c), 1.0, eps);
	r.singleton_inductive = is_singleton_inductive(family, std::max(max_len, 3), eps).inductive;
	return r;
}

std::string format_tagged_word(const std::vector<std::vector<Generator>>& gens, const TaggedWord& w) {
	std::string out;
	for (const auto& l : w) {
		if (!out.empty())
			out += ' ';
		const auto& g = gens.at(l.factor).at(l.generator);
		out += std::to_string(l.factor + 1) + ":" + g.face + ":" + g.name;
	}
	return out;
}

} // namespace mfprod
