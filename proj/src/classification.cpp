/*
 * classification.cpp
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

#include "mfprod/classification.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

namespace mfprod {

namespace {

// Hand-derived lookup: (nu_w, nu_b, nu_wb, xi_w, xi_b, xi_wb) per class.
const std::array<Pattern, 12> kPatterns = {{
    {0, 0, 0, 0, 0, 0}, // I
    {1, 1, 1, 0, 0, 0}, // NC
    {1, 1, 0, 0, 0, 1}, // biNC
    {0, 1, 0, 0, 0, 0}, // IwNCb
    {1, 0, 0, 0, 0, 0}, // NCwIb
    {0, 1, 0, 0, 1, 0}, // IwAb
    {1, 0, 0, 1, 0, 0}, // AwIb
    {1, 1, 0, 0, 1, 0}, // NCwAb
    {1, 1, 0, 1, 0, 0}, // AwNCb
    {1, 1, 0, 0, 0, 0}, // pNC
    {1, 1, 0, 1, 1, 0}, // pC
    {1, 1, 1, 1, 1, 1}, // A
}};

BasicCoefficients to_coefficients(const Pattern& p) {
	return BasicCoefficients::two_faced(p[0], p[1], p[2], p[3], p[4], p[5]);
}

std::optional<ClassId> lookup(const Pattern& p) {
	for (int i = 0; i < 12; ++i)
		if (kPatterns[i] == p)
			return ClassId(i);
	return std::nullopt;
}

} // namespace

Pattern class_pattern(ClassId c) {
	return kPatterns[int(c)];
}

std::string pattern_string(const Pattern& p) {
	std::string s;
	for (int v : p)
		s.push_back(char('0' + v));
	return s;
}

Pattern swap_pattern(const Pattern& p) {
	return {p[1], p[0], p[2], p[4], p[3], p[5]};
}

bool pattern_consistent(const Pattern& p) {
	if (!check_basic_relations(to_coefficients(p)).pass)
		return false;
	int nu_w = p[0], nu_b = p[1], nu_wb = p[2], xi_w = p[3], xi_b = p[4], xi_wb = p[5];
	bool all = nu_w && nu_b && nu_wb && xi_w && xi_b && xi_wb;
	if ((nu_wb || xi_w || xi_wb) && !nu_w)
		return false;
	if ((nu_wb || xi_b || xi_wb) && !nu_b)
		return false;
	if (nu_wb + xi_w + xi_wb >= 2 && !all)
		return false;
	if (nu_wb + xi_b + xi_wb >= 2 && !all)
		return false;
	return true;
}

std::vector<PatternEntry> enumerate_admissible_patterns() {
	std::vector<PatternEntry> out;
	for (int mask = 0; mask < 64; ++mask) {
		Pattern p;
		for (int i = 0; i < 6; ++i)
			p[i] = (mask >> (5 - i)) & 1;
		if (!pattern_consistent(p))
			continue;
		auto c = lookup(p);
		if (!c)
			throw Error(ErrorKind::internal, "consistent pattern " + pattern_string(p) + " has no class");
		out.push_back({p, *c});
	}
	return out;
}

Classification classify_pattern(const BasicCoefficients& bc) {
	auto rel = check_basic_relations(bc);
	if (!rel.pass)
		input_error("basic coefficients fail the " + rel.relation + " relation: " + rel.detail);
	auto values = bc.pattern();
	bool binary = std::all_of(values.begin(), values.end(), [](Complex v) { return near(v, 0.0) || near(v, 1.0); });
	if (binary) {
		Pattern p;
		for (int i = 0; i < 6; ++i)
			p[i] = near(values[i], 1.0) ? 1 : 0;
		if (!pattern_consistent(p))
			return std::monostate{};
		if (auto c = lookup(p))
			return *c;
		return std::monostate{};
	}
	Complex nu_w = values[0], nu_b = values[1], nu_wb = values[2], xi_w = values[3], xi_b = values[4], xi_wb = values[5];
	bool nu_mono = near(nu_w, 1.0) && near(nu_b, 1.0);
	if (nu_mono && near(xi_w, 1.0) && near(xi_b, 1.0) && near(nu_wb, xi_wb))
		return Deformation{DeformedKind::tensor, std::conj(nu_wb)};
	if (nu_mono && near_zero(xi_w) && near_zero(xi_b) && near_zero(xi_wb) && !near_zero(nu_wb))
		return Deformation{DeformedKind::free, std::conj(nu_wb)};
	if (nu_mono && near_zero(xi_w) && near_zero(xi_b) && near_zero(nu_wb) && !near_zero(xi_wb))
		return Deformation{DeformedKind::bifree, std::conj(xi_wb)};
	return std::monostate{};
}

std::string classification_string(const Classification& c) {
	if (auto id = std::get_if<ClassId>(&c))
		return std::string(class_name(*id));
	if (auto d = std::get_if<Deformation>(&c)) {
		std::ostringstream os;
		os.precision(12);
		os << "deformed(" << deformed_name(d->kind) << ", " << d->zeta.real() << (d->zeta.imag() < 0 ? "-" : "+")
		   << std::abs(d->zeta.imag()) << "i)";
		return os.str();
	}
	return "none";
}

const std::vector<std::pair<ClassId, ClassId>>& expected_hasse_edges() {
	using C = ClassId;
	static const std::vector<std::pair<ClassId, ClassId>> edges = {
	    {C::I, C::NCwIb},     {C::I, C::IwNCb},    {C::NCwIb, C::AwIb}, {C::NCwIb, C::pNC}, {C::IwNCb, C::IwAb},
	    {C::IwNCb, C::pNC},   {C::pNC, C::NC},     {C::pNC, C::biNC},   {C::pNC, C::NCwAb}, {C::pNC, C::AwNCb},
	    {C::AwIb, C::AwNCb},  {C::IwAb, C::NCwAb}, {C::NCwAb, C::pC},   {C::AwNCb, C::pC},  {C::NC, C::A},
	    {C::biNC, C::A},      {C::pC, C::A},
	};
	return edges;
}

HasseReport hasse_verify(int max_legs) {
	if (max_legs > 7)
		budget_error("hasse verification is limited to 7 legs");
	HasseReport r;
	r.max_legs = max_legs;
	std::vector<Partition> all;
	for (int n = 1; n <= max_legs; ++n)
		for (auto& w : enumerate_words(n))
			for (auto& p : enumerate_partitions(w))
				all.push_back(p);
	std::array<std::vector<char>, 12> in;
	for (int c = 0; c < 12; ++c) {
		in[c].resize(all.size());
		for (std::size_t i = 0; i < all.size(); ++i)
			in[c][i] = member(ClassId(c), all[i]);
		r.cardinality[c] = std::count(in[c].begin(), in[c].end(), 1);
	}
	auto witness = [&](int big, int small) -> std::optional<Partition> {
		for (std::size_t i = 0; i < all.size(); ++i)
			if (in[big][i] && !in[small][i])
				return all[i];
		return std::nullopt;
	};
	auto subset = [&](int a, int b) { return !witness(a, b); };
	auto strict = [&](int a, int b) { return a != b && subset(a, b) && !subset(b, a); };
	std::set<std::pair<int, int>> covers;
	for (int a = 0; a < 12; ++a)
		for (int b = 0; b < 12; ++b) {
			if (!strict(a, b))
				continue;
			bool direct = true;
			for (int m = 0; m < 12 && direct; ++m)
				if (strict(a, m) && strict(m, b))
					direct = false;
			if (direct)
				covers.insert({a, b});
		}
	for (int a = 0; a < 12; ++a)
		for (int b = a + 1; b < 12; ++b)
			if (subset(a, b) && subset(b, a))
				r.violations.push_back(std::string(class_name(ClassId(a))) + " and " + std::string(class_name(ClassId(b))) +
				                       " coincide");
	std::set<std::pair<int, int>> expected;
	for (auto [a, b] : expected_hasse_edges())
		expected.insert({int(a), int(b)});
	for (auto [a, b] : expected) {
		HasseEdge e{ClassId(a), ClassId(b), witness(b, a)};
		if (!covers.count({a, b}))
			r.violations.push_back("expected covering edge " + std::string(class_name(e.from)) + " -> " +
			                       std::string(class_name(e.to)) + " not found");
		if (!e.witness)
			r.violations.push_back("no strictness witness for " + std::string(class_name(e.from)) + " -> " +
			                       std::string(class_name(e.to)));
		r.edges.push_back(e);
	}
	for (auto [a, b] : covers)
		if (!expected.count({a, b}))
			r.violations.push_back("unexpected covering edge " + std::string(class_name(ClassId(a))) + " -> " +
			                       std::string(class_name(ClassId(b))));
	using C = ClassId;
	std::vector<std::pair<C, C>> pairs = {{C::NCwAb, C::AwNCb}, {C::NC, C::biNC},   {C::NC, C::NCwAb},
	                                      {C::NC, C::AwNCb},    {C::biNC, C::NCwAb}, {C::biNC, C::AwNCb}};
	for (auto [a, b] : pairs) {
		Incomparability inc{a, b, witness(int(a), int(b)), witness(int(b), int(a))};
		if (!inc.a_not_b || !inc.b_not_a)
			r.violations.push_back(std::string(class_name(a)) + " and " + std::string(class_name(b)) + " are comparable");
		r.incomparable.push_back(inc);
	}
	return r;
}

std::string hasse_dot(const HasseReport& r) {
	std::vector<int> order(12);
	for (int i = 0; i < 12; ++i)
		order[i] = i;
	std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return r.cardinality[a] < r.cardinality[b]; });
	std::ostringstream os;
	os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
	for (int c : order)
		os << "  \"" << class_name(ClassId(c)) << "\" [label=\"" << class_name(ClassId(c)) << "\\n" << r.cardinality[c]
		   << "\"];\n";
	for (auto& e : r.edges) {
		os << "  \"" << class_name(e.from) << "\" -> \"" << class_name(e.to) << "\"";
		if (e.witness)
			os << " [tooltip=\"" << format_diagram(*e.witness) << "\"]";
		os << ";\n";
	}
	os << "}\n";
	return os.str();
}

std::vector<Partition> class_generators(ClassId c) {
	Pattern p = class_pattern(c);
	std::vector<Partition> out;
	if (p[0])
		out.push_back(nest_diagram('w', 'w'));
	if (p[1])
		out.push_back(nest_diagram('b', 'b'));
	if (p[2])
		out.push_back(nest_diagram('w', 'b'));
	if (p[3])
		out.push_back(cross_diagram('w', 'w'));
	if (p[4])
		out.push_back(cross_diagram('b', 'b'));
	if (p[5])
		out.push_back(cross_diagram('w', 'b'));
	return out;
}

std::vector<Partition> class_members(ClassId c, int max_legs) {
	std::vector<Partition> out;
	for (int n = 1; n <= max_legs; ++n)
		for (auto& w : enumerate_words(n))
			for (auto& p : enumerate_partitions(w))
				if (member(c, p))
					out.push_back(p);
	return out;
}

std::set<Partition> closure_generate(const std::vector<Partition>& generators, int max_legs, int headroom,
                                     std::size_t node_cap) {
	if (max_legs > 8)
		budget_error("closure is limited to 8 legs");
	if (headroom < 0)
		input_error("negative headroom");
	int limit = max_legs + headroom;
	if (limit > 9)
		budget_error("closure intermediates are limited to 9 legs");
	std::set<Partition> seen;
	std::deque<Partition> work;
	auto add = [&](const Partition& p) {
		if (p.empty() || p.size() > limit)
			return;
		if (seen.insert(p).second) {
			if (seen.size() > node_cap)
				budget_error("closure exceeded the node cap of " + std::to_string(node_cap));
			work.push_back(p);
		}
	};
	for (int n = 1; n <= limit; ++n)
		for (auto& w : enumerate_words(n))
			add(Partition::one_block(w));
	if (limit >= 2)
		for (char q : kTwoFaces)
			for (char Q : kTwoFaces)
				add(Partition::singletons(FaceWord{q, Q}));
	for (auto& g : generators) {
		check_alphabet(g.word());
		if (g.size() > max_legs)
			input_error("generator " + format_diagram(g) + " exceeds max_legs");
		add(g);
	}

	// Two-block partitions by face word, and (host, block) pairs by the block's face word.
	std::unordered_map<FaceWord, std::vector<Partition>> pairs_by_word;
	std::unordered_map<FaceWord, std::vector<std::pair<Partition, int>>> hosts_by_word;
	auto block_word = [](const Partition& p, int b) {
		FaceWord w;
		for (int i = 1; i <= p.size(); ++i)
			if (p.block_of(i) == b)
				w.push_back(p.face(i));
		return w;
	};
	auto neighbours = [](const Partition& p, int b1, int b2) {
		for (int i = 1; i < p.size(); ++i) {
			int x = p.block_of(i), y = p.block_of(i + 1);
			if (((x == b1 && y == b2) || (x == b2 && y == b1)) && p.face(i) == p.face(i + 1))
				return true;
		}
		return false;
	};
	// Replace block b of host by the two-block partition sigma.
	auto replace = [&](const Partition& host, int b, const Partition& sigma) {
		std::vector<int> labels(host.labels().begin(), host.labels().end());
		int fresh = host.block_count(), j = 0;
		for (int i = 0; i < host.size(); ++i)
			if (host.labels()[i] == b && sigma.labels()[j++] == 1)
				labels[i] = fresh;
		Partition p = Partition::from_labels(host.word(), labels);
		int b1 = p.block_of(host.block(b).front());
		int b2 = -1;
		for (int i = 1; i <= p.size(); ++i)
			if (labels[i - 1] == fresh)
				b2 = p.block_of(i);
		if (neighbours(p, b1, b2))
			add(p);
	};

	while (!work.empty()) {
		Partition p = work.front();
		work.pop_front();
		int n = p.size();
		if (n < limit)
			for (int leg = 1; leg <= n; ++leg)
				add(double_leg(p, leg));
		for (int i = 1; i < n; ++i) {
			int b1 = p.block_of(i), b2 = p.block_of(i + 1);
			if (p.face(i) != p.face(i + 1))
				continue;
			if (b1 == b2)
				add(merge_legs(p, i));
			else {
				add(unite_blocks(p, b1, b2));
				add(restrict_to_blocks(p, {b1, b2}));
			}
		}
		add(mirror(p));
		for (char q : kTwoFaces) {
			add(change_extremal_face(p, End::first, q));
			add(change_extremal_face(p, End::last, q));
		}
		for (int b = 0; b < p.block_count() && p.block_count() > 1; ++b) {
			FaceWord w = block_word(p, b);
			hosts_by_word[w].emplace_back(p, b);
			for (auto& sigma : std::vector<Partition>(pairs_by_word[w]))
				replace(p, b, sigma);
		}
		if (p.block_count() == 2) {
			pairs_by_word[p.word()].push_back(p);
			for (auto& [host, b] : std::vector<std::pair<Partition, int>>(hosts_by_word[p.word()]))
				replace(host, b, p);
		}
	}
	for (auto it = seen.begin(); it != seen.end();)
		it = it->size() > max_legs ? seen.erase(it) : std::next(it);
	return seen;
}

RestrictionReport refinement_restriction_check(const PartitionPredicate& in_class, int max_legs) {
	if (max_legs > 7)
		budget_error("refinement check is limited to 7 legs");
	RestrictionReport r;
	std::unordered_map<std::string, bool> memo;
	auto in = [&](const Partition& p) {
		auto k = p.key();
		auto it = memo.find(k);
		if (it != memo.end())
			return it->second;
		bool v = in_class(p);
		memo.emplace(std::move(k), v);
		return v;
	};
	for (int n = 1; n <= max_legs; ++n)
		for (auto& w : enumerate_words(n))
			for (auto& rho : enumerate_partitions(w)) {
				if (!in(rho))
					continue;
				auto blocks = rho.blocks();
				for (auto& sigma : refinements(rho)) {
					++r.checked;
					bool pieces = true;
					for (auto& b : blocks)
						if (!in(restrict_to(sigma, b))) {
							pieces = false;
							break;
						}
					if (pieces != in(sigma)) {
						r.pass = false;
						r.rho = rho;
						r.sigma = sigma;
						return r;
					}
				}
			}
	return r;
}

RestrictionReport refinement_restriction_check(ClassId c, int max_legs) {
	return refinement_restriction_check([c](const Partition& p) { return member(c, p); }, max_legs);
}

RotationReport rotation_check(ClassId c, int max_legs) {
	RotationReport r;
	for (int n = 2; n <= max_legs; ++n)
		for (auto& w : enumerate_words(n))
			for (auto& p : enumerate_partitions(w))
				if (member(c, p) != member(c, rotate(p))) {
					r.invariant = false;
					r.witness = p;
					return r;
				}
	return r;
}

} // namespace mfprod
