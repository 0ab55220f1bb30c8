#include "doctest.h"
#include "families.hpp"

#include <map>

#include "mfprod/classification.hpp"

using namespace mfprod;
using namespace mfprod::testing;

namespace {
Partition D(const char* s) {
	return parse_diagram(s);
}

template <class F>
void for_all(int max_legs, F&& f) {
	for (int n = 1; n <= max_legs; ++n)
		for (auto& w : enumerate_words(n))
			for (auto& p : enumerate_partitions(w))
				f(p);
}
} // namespace

TEST_CASE("class names and face swap") {
	for (auto c : kAllClasses) {
		CHECK(class_from_name(class_name(c)) == c);
		CHECK(swap(swap(c)) == c);
	}
	CHECK_FALSE(class_from_name("XY"));
	int fixed = 0;
	for (auto c : kAllClasses)
		fixed += swap(c) == c;
	CHECK(fixed == 6);
}

TEST_CASE("membership examples") {
	auto p = D("wbwb/13|24");
	CHECK(member(ClassId::biNC, p));
	CHECK_FALSE(member(ClassId::NC, p));
	auto q = D("wbbwb/134|25");
	CHECK(member(ClassId::A, q));
	CHECK_FALSE(member(ClassId::NC, q));
	// white leg 4 nests inside {2,5} while its block mate 1 lies outside
	CHECK_FALSE(member(ClassId::NCwAb, q));
	CHECK(member(ClassId::I, D("wb/1|2")));
	CHECK_THROWS_AS(member(ClassId::NC, parse_diagram("xy/1|2", "xy")), Error);
	for_all(6, [](const Partition& r) {
		if (is_interval(r))
			for (auto c : kAllClasses)
				REQUIRE(member(c, r));
	});
}

TEST_CASE("pure crossing: literal connectivity reading is not closed") {
	auto w = D("wwwbbw/13|25|46");
	CHECK(member(ClassId::pC, w));
	CHECK_FALSE(connected_inner_legs_monochrome(w));
	// both pieces of the replacement that produces it satisfy the literal reading
	CHECK(connected_inner_legs_monochrome(D("wwwbbw/1235|46")));
	CHECK(connected_inner_legs_monochrome(D("wwwb/13|24")));
	for_all(6, [](const Partition& p) {
		if (connected_inner_legs_monochrome(p))
			REQUIRE(member(ClassId::pC, p));
	});
}

TEST_CASE("membership invariances") {
	for_all(6, [](const Partition& p) {
		auto r = reduce(p), m = mirror(p), s = swap_faces(p);
		for (auto c : kAllClasses) {
			bool in = member(c, p);
			REQUIRE(member(c, r) == in);
			REQUIRE(member(c, m) == in);
			REQUIRE(member(swap(c), p) == member(c, s));
			for (char f : kTwoFaces) {
				REQUIRE(member(c, change_extremal_face(p, End::first, f)) == in);
				REQUIRE(member(c, change_extremal_face(p, End::last, f)) == in);
			}
		}
	});
}

TEST_CASE("admissible patterns") {
	auto pats = enumerate_admissible_patterns();
	CHECK(pats.size() == 12);
	std::set<ClassId> classes;
	for (auto& e : pats) {
		classes.insert(e.cls);
		// cross-validated against the predicates on the basic diagrams
		auto bc = basic_coefficients(WeightFamily::class_indicator(e.cls));
		for (int i = 0; i < 6; ++i)
			CHECK(near(bc.pattern()[i], double(e.pattern[i])));
		CHECK(class_pattern(swap(e.cls)) == swap_pattern(e.pattern));
	}
	CHECK(classes.size() == 12);
}

TEST_CASE("pattern classification") {
	CHECK(std::get<ClassId>(classify_pattern(BasicCoefficients::two_faced(1, 1, 1, 1, 1, 1))) == ClassId::A);
	CHECK(std::get<ClassId>(classify_pattern(BasicCoefficients::two_faced(1, 1, 0, 0, 0, 1))) == ClassId::biNC);
	Complex q = std::polar(1.0, 0.9);
	auto bif = classify_pattern(BasicCoefficients::two_faced(1, 1, 0, 0, 0, q));
	REQUIRE(std::holds_alternative<Deformation>(bif));
	CHECK(std::get<Deformation>(bif).kind == DeformedKind::bifree);
	CHECK(near(std::get<Deformation>(bif).zeta, std::conj(q)));
	auto fr = classify_pattern(BasicCoefficients::two_faced(1, 1, q, 0, 0, 0));
	CHECK(std::get<Deformation>(fr).kind == DeformedKind::free);
	auto te = classify_pattern(BasicCoefficients::two_faced(1, 1, q, 1, 1, q));
	CHECK(std::get<Deformation>(te).kind == DeformedKind::tensor);
	CHECK(classification_string(te).rfind("deformed(tensor", 0) == 0);
	// relation-violating input is rejected
	CHECK_THROWS_AS(classify_pattern(BasicCoefficients::two_faced(0, 1, 1, 0, 0, 0)), Error);
	CHECK_THROWS_AS(classify_pattern(BasicCoefficients::two_faced(1, 1, 0, 1, 1, 1)), Error);
	CHECK_THROWS_AS(classify_pattern(BasicCoefficients::two_faced(1, 1, 0.5, 0, 0, 0)), Error);
	// every relation-consistent input lands on a class or a deformation
	Complex vals[] = {0.0, 1.0, q, std::polar(1.0, 2.0)};
	int classified = 0;
	for (int m = 0; m < 4096; ++m) {
		int d[6];
		for (int i = 0, x = m; i < 6; ++i, x /= 4)
			d[i] = x % 4;
		auto bc = BasicCoefficients::two_faced(vals[d[0]], vals[d[1]], vals[d[2]], vals[d[3]], vals[d[4]], vals[d[5]]);
		if (!check_basic_relations(bc).pass)
			continue;
		CHECK_FALSE(std::holds_alternative<std::monostate>(classify_pattern(bc)));
		++classified;
	}
	CHECK(classified > 12);
	for (auto c : kAllClasses)
		CHECK(std::get<ClassId>(classify_pattern(basic_coefficients(WeightFamily::class_indicator(c)))) == c);
	for (auto k : {DeformedKind::tensor, DeformedKind::free, DeformedKind::bifree}) {
		auto r = classify_pattern(deformed_coefficients(k, q));
		REQUIRE(std::holds_alternative<Deformation>(r));
		CHECK(std::get<Deformation>(r).kind == k);
		CHECK(near(std::get<Deformation>(r).zeta, q));
	}
}

TEST_CASE("hasse diagram") {
	auto r = hasse_verify(6);
	for (auto& v : r.violations)
		MESSAGE(v);
	CHECK(r.pass());
	CHECK(r.edges.size() == 17);
	for (auto& e : r.edges) {
		REQUIRE(e.witness);
		CHECK(member(e.to, *e.witness));
		CHECK_FALSE(member(e.from, *e.witness));
	}
	for (auto& inc : r.incomparable) {
		REQUIRE(inc.a_not_b);
		REQUIRE(inc.b_not_a);
		CHECK(member(inc.a, *inc.a_not_b));
		CHECK_FALSE(member(inc.b, *inc.a_not_b));
	}
	auto dot = hasse_dot(r);
	CHECK(dot.find("\"pNC\" -> \"biNC\"") != std::string::npos);
	CHECK(dot.find("digraph") == 0);
	CHECK(hasse_dot(hasse_verify(6)) == dot);
	CHECK_THROWS_AS(hasse_verify(8), Error);
}

TEST_CASE("closure of the generators reproduces each class") {
	CHECK(closure_generate({}, 6) == [] {
		auto m = class_members(ClassId::I, 6);
		return std::set<Partition>(m.begin(), m.end());
	}());
	for (auto c : kAllClasses) {
		auto m = class_members(c, 6);
		auto cl = closure_generate(class_generators(c), 6);
		CHECK_MESSAGE(cl == std::set<Partition>(m.begin(), m.end()), class_name(c));
	}
	// without headroom the bounded closure is only a lower bound
	auto tight = closure_generate(class_generators(ClassId::A), 6, 0);
	CHECK(tight.size() < class_members(ClassId::A, 6).size());
	CHECK_FALSE(tight.count(D("bbbbbb/135|246")));
	CHECK_THROWS_AS(closure_generate(class_generators(ClassId::A), 6, 1, 1000), Error);
}

TEST_CASE("adding an outside partition escalates the closure to a larger class") {
	for (auto c : kAllClasses) {
		if (c == ClassId::A)
			continue;
		auto base = closure_generate(class_generators(c), 5);
		std::set<std::set<Partition>> seen_results;
		for (auto& extra : class_members(ClassId::A, 4)) {
			if (member(c, extra) || extra.block_count() != 2)
				continue;
			auto gens = class_generators(c);
			gens.push_back(extra);
			auto cl = closure_generate(gens, 5);
			CHECK(cl.size() > base.size());
			CHECK(cl.count(extra));
			// the enlarged closure is again one of the classes
			bool matches = false;
			for (auto d : kAllClasses) {
				auto m = class_members(d, 5);
				if (cl == std::set<Partition>(m.begin(), m.end()))
					matches = true;
			}
			CHECK_MESSAGE(matches, class_name(c) << " + " << format_diagram(extra));
		}
	}
}

TEST_CASE("refinement restriction property") {
	for (auto c : kAllClasses) {
		auto r = refinement_restriction_check(c, 6);
		CHECK_MESSAGE(r.pass, class_name(c));
		CHECK(r.checked > 0);
	}
	auto bad = refinement_restriction_check(nc_two_blocks, 4);
	CHECK_FALSE(bad.pass);
	REQUIRE(bad.rho);
	CHECK(bad.rho->block_count() <= 2);
	CHECK(bad.sigma->block_count() == 3);
	// the example from the derivation: rho = {1,2},{3}, sigma = singletons
	auto rho = D("www/12|3"), sigma = D("www/1|2|3");
	CHECK(nc_two_blocks(rho));
	CHECK_FALSE(nc_two_blocks(sigma));
	CHECK(nc_two_blocks(restrict_to(sigma, {1, 2})));
	CHECK(nc_two_blocks(restrict_to(sigma, {3})));
}

TEST_CASE("rotation invariance singles out the face-blind classes") {
	std::set<ClassId> invariant;
	for (auto c : kAllClasses) {
		auto r = rotation_check(c, 6);
		if (r.invariant)
			invariant.insert(c);
		else
			CHECK(member(c, *r.witness) != member(c, rotate(*r.witness)));
	}
	CHECK(invariant == std::set<ClassId>{ClassId::NC, ClassId::A});
	// on one-face words every class is the interval, noncrossing or full class
	for (auto c : kAllClasses)
		for (char f : kTwoFaces) {
			int agrees = 0;
			for (auto ref : {ClassId::I, ClassId::NC, ClassId::A}) {
				bool same = true;
				for (int n = 1; n <= 6 && same; ++n)
					for (auto& p : enumerate_partitions(FaceWord(std::size_t(n), f)))
						if (member(c, p) != member(ref, p)) {
							same = false;
							break;
						}
				agrees += same;
			}
			CHECK(agrees == 1);
		}
}

TEST_CASE("bicolor crossing coefficient is 1 exactly for the tensor and bifree classes") {
	std::set<ClassId> one;
	for (auto c : kAllClasses)
		if (near(basic_coefficients(WeightFamily::class_indicator(c)).xi_at('w', 'b'), 1.0))
			one.insert(c);
	CHECK(one == std::set<ClassId>{ClassId::A, ClassId::biNC});
}
