/*
 * weights.cpp
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

#include "mfprod/weights.hpp"

#include <mutex>
#include <unordered_map>

namespace mfprod {

Complex BasicCoefficients::nu_at(Face q, Face Q) const {
	auto it = nu.find({q, Q});
	if (it == nu.end())
		input_error(std::string("no nesting coefficient for faces ") + q + Q);
	return it->second;
}

Complex BasicCoefficients::xi_at(Face q, Face Q) const {
	auto it = xi.find({q, Q});
	if (it == xi.end())
		input_error(std::string("no crossing coefficient for faces ") + q + Q);
	return it->second;
}

BasicCoefficients BasicCoefficients::two_faced(Complex nu_w, Complex nu_b, Complex nu_wb, Complex xi_w, Complex xi_b,
                                               Complex xi_wb) {
	BasicCoefficients bc;
	bc.nu = {{{'w', 'w'}, nu_w}, {{'b', 'b'}, nu_b}, {{'w', 'b'}, nu_wb}, {{'b', 'w'}, std::conj(nu_wb)}};
	bc.xi = {{{'w', 'w'}, xi_w}, {{'b', 'b'}, xi_b}, {{'w', 'b'}, xi_wb}, {{'b', 'w'}, std::conj(xi_wb)}};
	return bc;
}

std::array<Complex, 6> BasicCoefficients::pattern() const {
	return {nu_at('w', 'w'), nu_at('b', 'b'), nu_at('w', 'b'), xi_at('w', 'w'), xi_at('b', 'b'), xi_at('w', 'b')};
}

Partition nest_diagram(Face q, Face Q) {
	if (q == Q)
		return Partition::from_labels(FaceWord(3, q), {0, 1, 0});
	return Partition::from_labels(FaceWord{q, q, Q, Q}, {0, 1, 1, 0});
}

Partition cross_diagram(Face q, Face Q) {
	return Partition::from_labels(FaceWord{q, q, Q, Q}, {0, 1, 0, 1});
}

RelationReport check_basic_relations(const BasicCoefficients& bc, double eps) {
	RelationReport r;
	auto fail = [&](std::string rel, std::string detail) {
		if (r.pass) {
			r.pass = false;
			r.relation = std::move(rel);
			r.detail = std::move(detail);
		}
	};
	auto is = [&](Complex a, Complex b) { return near(a, b, eps); };
	for (char q : bc.alphabet) {
		Complex nq = bc.nu_at(q, q), xq = bc.xi_at(q, q);
		std::string sq(1, q);
		if (!is(nq * nq, nq))
			fail("idempotent", "nu_" + sq + " is not idempotent");
		if (!is(xq * xq, xq))
			fail("idempotent", "xi_" + sq + " is not idempotent");
		if (!is(xq * nq, xq))
			fail("absorption", "xi_" + sq + " * nu_" + sq + " != xi_" + sq);
		for (char Q : bc.alphabet) {
			if (Q == q)
				continue;
			std::string sp = sq + Q;
			Complex nqQ = bc.nu_at(q, Q), xqQ = bc.xi_at(q, Q);
			for (auto [t, name] : {std::pair{nqQ, "nu_"}, std::pair{xqQ, "xi_"}}) {
				if (!is(std::norm(t) * t, t))
					fail("modulus", std::string(name) + sp + " is neither 0 nor on the unit circle");
				if (!is(t * nq, t))
					fail("absorption", std::string(name) + sp + " * nu_" + sq + " != " + name + sp);
			}
			if (!is(nqQ * xq, xqQ * xq))
				fail("crossing-transfer", "nu_" + sp + " xi_" + sq + " != xi_" + sp + " xi_" + sq);
			if (!is(nqQ * xqQ, nqQ * xqQ * xq))
				fail("nesting-crossing", "nu_" + sp + " xi_" + sp + " != nu_" + sp + " xi_" + sp + " xi_" + sq);
		}
	}
	return r;
}

std::string_view deformed_name(DeformedKind k) {
	switch (k) {
	case DeformedKind::tensor:
		return "tensor";
	case DeformedKind::free:
		return "free";
	case DeformedKind::bifree:
		return "bifree";
	}
	return "";
}

std::optional<DeformedKind> deformed_from_name(std::string_view name) {
	for (auto k : {DeformedKind::tensor, DeformedKind::free, DeformedKind::bifree})
		if (deformed_name(k) == name)
			return k;
	return std::nullopt;
}

BasicCoefficients deformed_coefficients(DeformedKind k, Complex zeta) {
	Complex z = std::conj(zeta);
	switch (k) {
	case DeformedKind::tensor:
		return BasicCoefficients::two_faced(1, 1, z, 1, 1, z);
	case DeformedKind::free:
		return BasicCoefficients::two_faced(1, 1, z, 0, 0, 0);
	case DeformedKind::bifree:
		return BasicCoefficients::two_faced(1, 1, 0, 0, 0, z);
	}
	return {};
}

namespace {

using Rng = std::mt19937_64;

Partition drop_leg(const Partition& p, int leg) {
	return remove_leg(p, leg);
}

// Move to the form where legs 1,2 (and n-1,n) lie in distinct blocks and carry equal faces.
Partition normalize_front(Partition p) {
	while (p.size() >= 2 && p.block_of(1) == p.block_of(2))
		p = drop_leg(p, 1);
	if (p.size() >= 2)
		p = set_face(p, 1, p.face(2));
	return p;
}

Partition normalize_back(Partition p) {
	while (p.size() >= 2 && p.block_of(p.size()) == p.block_of(p.size() - 1))
		p = drop_leg(p, p.size());
	if (p.size() >= 2)
		p = set_face(p, p.size(), p.face(p.size() - 1));
	return p;
}

Complex eval(const BasicCoefficients& bc, const Partition& in, Rng* rng);

// Split relation at neighbouring legs i, i+1 of distinct blocks with equal faces.
Complex split_at(const BasicCoefficients& bc, const Partition& p, int i, Rng* rng) {
	int b1 = p.block_of(i), b2 = p.block_of(i + 1);
	return eval(bc, unite_blocks(p, b1, b2), rng) * eval(bc, restrict_to_blocks(p, {b1, b2}), rng);
}

Complex two_block(const BasicCoefficients& bc, Partition p, Rng* rng, bool allow_mirror) {
	p = reduce(normalize_back(normalize_front(p)));
	int n = p.size();
	if (n <= 2)
		return 1.0;
	if (n == 3)
		return bc.nu_at(p.face(2), p.face(2));
	if (n == 4) {
		if (p.block_of(3) == p.block_of(1))
			return bc.xi_at(p.face(2), p.face(3));
		return bc.nu_at(p.face(2), p.face(3));
	}
	bool use_mirror = false;
	if (allow_mirror && rng)
		use_mirror = std::uniform_int_distribution<int>(0, 1)(*rng) == 1;
	auto beta = p.block(p.block_of(1));
	if (!use_mirror && beta.size() >= 3) {
		// beta = {1, q, ...}: cut beta after q, then use the split relation at legs 1,2.
		Partition s = split_block_at_leg(p, beta[1]);
		int b1 = s.block_of(1), gamma = s.block_of(2);
		return eval(bc, unite_blocks(s, b1, gamma), rng) * eval(bc, restrict_to_blocks(s, {b1, gamma}), rng);
	}
	if (!use_mirror && beta.size() == 2 && beta[1] == n) {
		// A nest around one long block: cut the inner block after its second leg.
		Partition s = split_block_at_leg(p, 3);
		int b = s.block_of(1), g1 = s.block_of(2);
		return eval(bc, unite_blocks(s, b, g1), rng) * eval(bc, restrict_to_blocks(s, {b, g1}), rng);
	}
	return std::conj(two_block(bc, mirror(p), rng, false));
}

Complex eval(const BasicCoefficients& bc, const Partition& in, Rng* rng) {
	Partition p = reduce(in);
	int k = p.block_count();
	if (k <= 1)
		return 1.0;
	if (k == 2)
		return two_block(bc, p, rng, true);
	if (!rng) {
		p = normalize_front(p);
		return split_at(bc, p, 1, rng);
	}
	// Random choice among the front, the back, and every interior split position.
	std::vector<int> options{0, -1};
	for (int i = 1; i < p.size(); ++i)
		if (p.block_of(i) != p.block_of(i + 1) && p.face(i) == p.face(i + 1))
			options.push_back(i);
	int pick = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(*rng)];
	if (pick == 0) {
		p = normalize_front(p);
		return split_at(bc, p, 1, rng);
	}
	if (pick == -1) {
		p = normalize_back(p);
		return split_at(bc, p, p.size() - 1, rng);
	}
	return split_at(bc, p, pick, rng);
}

} // namespace

Complex evaluate_by_reduction(const BasicCoefficients& bc, const Partition& p, Rng* rng) {
	check_alphabet(p.word(), bc.alphabet);
	return eval(bc, p, rng);
}

struct WeightFamily::State {
	Kind kind = Kind::class_indicator;
	std::string alphabet{kTwoFaces};
	std::string label;
	std::optional<ClassId> cls;
	std::optional<std::pair<DeformedKind, Complex>> deformation;
	std::optional<BasicCoefficients> bc;
	std::optional<int> max_legs;
	std::map<Partition, Complex> entries;
	Fn fn;

	mutable std::mutex mu;
	mutable std::unordered_map<std::string, Complex> cache;
	mutable std::unordered_map<std::string, std::shared_ptr<const std::vector<Complex>>> word_cache;

	Complex compute(const Partition& p) const {
		switch (kind) {
		case Kind::class_indicator:
			return member(*cls, p) ? 1.0 : 0.0;
		case Kind::deformed:
		case Kind::basic:
			return evaluate_by_reduction(*bc, p);
		case Kind::table: {
			if (p.size() > *max_legs)
				input_error("table family is defined up to " + std::to_string(*max_legs) + " legs only");
			auto it = entries.find(p);
			if (it == entries.end())
				it = entries.find(reduce(p));
			if (it == entries.end())
				input_error("table family has no entry for " + format_diagram(p));
			return it->second;
		}
		case Kind::function:
			return fn(p);
		}
		return 0.0;
	}
};

WeightFamily WeightFamily::class_indicator(ClassId c) {
	WeightFamily f;
	f.s_ = std::make_shared<State>();
	f.s_->kind = Kind::class_indicator;
	f.s_->cls = c;
	f.s_->label = std::string(class_name(c));
	return f;
}

WeightFamily WeightFamily::deformed(DeformedKind k, Complex zeta) {
	// tolerate rounding in user-supplied unit numbers, nothing more
	if (std::abs(std::abs(zeta) - 1.0) > 1e-6)
		input_error("deformation parameter must lie on the unit circle");
	zeta /= std::abs(zeta);
	WeightFamily f;
	f.s_ = std::make_shared<State>();
	f.s_->kind = Kind::deformed;
	f.s_->deformation = std::pair{k, zeta};
	f.s_->bc = deformed_coefficients(k, zeta);
	f.s_->label = "deformed-" + std::string(deformed_name(k));
	return f;
}

WeightFamily WeightFamily::basic(BasicCoefficients bc, std::string label) {
	WeightFamily f;
	f.s_ = std::make_shared<State>();
	f.s_->kind = Kind::basic;
	f.s_->alphabet = bc.alphabet;
	f.s_->bc = std::move(bc);
	f.s_->label = std::move(label);
	return f;
}

WeightFamily WeightFamily::table(std::map<Partition, Complex> entries, int max_legs, std::string alphabet) {
	if (max_legs < 0 || max_legs > kMaxLegs)
		input_error("table max_legs out of range");
	for (auto& [p, v] : entries) {
		check_alphabet(p.word(), alphabet);
		if (p.size() > max_legs)
			input_error("table entry " + format_diagram(p) + " exceeds max_legs");
	}
	WeightFamily f;
	f.s_ = std::make_shared<State>();
	f.s_->kind = Kind::table;
	f.s_->alphabet = std::move(alphabet);
	f.s_->entries = std::move(entries);
	f.s_->max_legs = max_legs;
	f.s_->label = "table";
	return f;
}

WeightFamily WeightFamily::function(std::string label, Fn fn, std::string alphabet) {
	WeightFamily f;
	f.s_ = std::make_shared<State>();
	f.s_->kind = Kind::function;
	f.s_->alphabet = std::move(alphabet);
	f.s_->fn = std::move(fn);
	f.s_->label = std::move(label);
	return f;
}

WeightFamily::Kind WeightFamily::kind() const { return s_->kind; }
const std::string& WeightFamily::alphabet() const { return s_->alphabet; }
const std::string& WeightFamily::label() const { return s_->label; }
std::optional<ClassId> WeightFamily::class_id() const { return s_->cls; }
std::optional<std::pair<DeformedKind, Complex>> WeightFamily::deformation() const { return s_->deformation; }
const BasicCoefficients* WeightFamily::coefficients() const { return s_->bc ? &*s_->bc : nullptr; }
std::optional<int> WeightFamily::max_legs() const { return s_->max_legs; }
const std::map<Partition, Complex>* WeightFamily::entries() const {
	return s_->kind == Kind::table ? &s_->entries : nullptr;
}

Complex WeightFamily::evaluate(const Partition& p) const {
	check_alphabet(p.word(), s_->alphabet);
	std::string key = p.key();
	{
		std::lock_guard lock(s_->mu);
		auto it = s_->cache.find(key);
		if (it != s_->cache.end())
			return it->second;
	}
	Complex v = s_->compute(p);
	std::lock_guard lock(s_->mu);
	s_->cache.emplace(std::move(key), v);
	return v;
}

std::shared_ptr<const std::vector<Complex>> WeightFamily::weights_for_word(const FaceWord& word) const {
	{
		std::lock_guard lock(s_->mu);
		auto it = s_->word_cache.find(word);
		if (it != s_->word_cache.end())
			return it->second;
	}
	auto out = std::make_shared<std::vector<Complex>>();
	for (auto& shape : set_partition_shapes(int(word.size())))
		out->push_back(evaluate(Partition::from_labels(word, shape.labels)));
	std::lock_guard lock(s_->mu);
	s_->word_cache.emplace(word, out);
	return out;
}

BasicCoefficients basic_coefficients(const WeightFamily& family) {
	BasicCoefficients bc;
	bc.alphabet = family.alphabet();
	for (char q : bc.alphabet)
		for (char Q : bc.alphabet) {
			bc.nu[{q, Q}] = family.evaluate(nest_diagram(q, Q));
			bc.xi[{q, Q}] = family.evaluate(cross_diagram(q, Q));
		}
	return bc;
}

AdmissibilityReport check_admissible(const WeightFamily& family, int max_legs, double eps) {
	if (max_legs > 10)
		budget_error("check_admissible is limited to 10 legs");
	AdmissibilityReport r;
	auto fail = [&](const char* cond, const Partition& p, std::string detail) {
		r.pass = false;
		r.condition = cond;
		r.witness = p;
		r.detail = std::move(detail);
	};
	const std::string& alphabet = family.alphabet();
	for (int n = 1; n <= max_legs; ++n) {
		for (auto& word : enumerate_words(n, alphabet)) {
			for (auto& p : enumerate_partitions(word)) {
				++r.checked;
				Complex a = family.evaluate(p);
				if (p.block_count() == 1 && !near(a, 1.0, eps))
					return fail("(i)", p, "one-block weight differs from 1"), r;
				if (n == 2 && p.block_count() == 2 && !near(a, 1.0, eps))
					return fail("(ii)", p, "two-leg two-block weight differs from 1"), r;
				if (!near(a, family.evaluate(reduce(p)), eps))
					return fail("(iii)", p, "weight differs from the weight of the reduction"), r;
				for (int i = 1; i < n; ++i) {
					int b1 = p.block_of(i), b2 = p.block_of(i + 1);
					if (b1 == b2 || p.face(i) != p.face(i + 1))
						continue;
					Complex rhs = family.evaluate(unite_blocks(p, b1, b2)) * family.evaluate(restrict_to_blocks(p, {b1, b2}));
					if (!near(a, rhs, eps))
						return fail("(iv')", p, "split relation fails at legs " + std::to_string(i) + "," + std::to_string(i + 1)), r;
				}
				for (char q : alphabet) {
					if (q != p.face(1) && !near(a, family.evaluate(change_extremal_face(p, End::first, q)), eps))
						return fail("(v)", p, std::string("changing the first face to ") + q + " changes the weight"), r;
					if (q != p.face(n) && !near(a, family.evaluate(change_extremal_face(p, End::last, q)), eps))
						return fail("(v)", p, std::string("changing the last face to ") + q + " changes the weight"), r;
				}
				if (!near(family.evaluate(mirror(p)), std::conj(a), eps))
					return fail("(vi)", p, "mirror weight is not the conjugate"), r;
			}
		}
	}
	return r;
}

SingletonReport is_singleton_inductive(const WeightFamily& family, int max_legs, double eps) {
	if (max_legs > 10)
		budget_error("singleton check is limited to 10 legs");
	SingletonReport r;
	for (char q : family.alphabet())
		if (!near(family.evaluate(nest_diagram(q, q)), 1.0, eps))
			r.nu_all_one = false;
	for (int n = 2; n <= max_legs && r.inductive; ++n)
		for (auto& word : enumerate_words(n, family.alphabet()))
			for (auto& p : enumerate_partitions(word)) {
				auto blocks = p.blocks();
				Complex a = family.evaluate(p);
				for (auto& b : blocks)
					if (b.size() == 1 && !near(a, family.evaluate(remove_leg(p, b[0])), eps)) {
						r.inductive = false;
						r.witness = p;
						return r;
					}
			}
	return r;
}

} // namespace mfprod
