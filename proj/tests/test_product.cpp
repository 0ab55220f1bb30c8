#include "doctest.h"
#include "families.hpp"

#include <chrono>

#include "mfprod/product.hpp"

using namespace mfprod;
using namespace mfprod::testing;

namespace {
std::vector<Factor<Complex>> factors_of(const std::vector<Table>& ts) {
	std::vector<Factor<Complex>> out;
	for (const auto& t : ts)
		out.push_back(as_factor(t));
	return out;
}

// One generator per face per factor; letter (k, 0) is white and (k, 1) black.
TaggedWord tagged(const std::string& factors, const std::string& faces) {
	TaggedWord w;
	for (std::size_t i = 0; i < factors.size(); ++i)
		w.push_back({factors[i] - '1', faces[i] == 'w' ? 0 : 1});
	return w;
}

Complex at(const Table& t, const std::string& faces) {
	Word w;
	for (char f : faces)
		w.push_back(f == 'w' ? 0 : 1);
	return t.at(w);
}
} // namespace

TEST_CASE("deformed tensor example with four letters") {
	Complex zeta(0, 1), zb = std::conj(zeta);
	auto fam = WeightFamily::deformed(DeformedKind::tensor, zeta);
	for (std::uint64_t seed = 1; seed <= 5; ++seed) {
		std::mt19937_64 rng(seed);
		auto t1 = random_table(two_face_generators("a"), 4, rng);
		auto t2 = random_table(two_face_generators("b"), 4, rng);
		Complex v = product_moment(fam, factors_of({t1, t2}), tagged("1212", "wwbb"));
		// second factor moments taken in the natural order of the letters
		Complex m1 = at(t1, "wb"), m2 = at(t2, "wb");
		Complex p1 = at(t1, "w") * at(t1, "b"), p2 = at(t2, "w") * at(t2, "b");
		Complex closed = zb * m1 * m2 + (1.0 - zb) * m1 * p2 + (1.0 - zb) * p1 * m2 - (1.0 - zb) * p1 * p2;
		CHECK(std::abs(v - closed) < 1e-9);
	}
	auto crossing = OrderedPartition::natural(parse_diagram("wwbb/13|24"));
	CHECK(near(extract_highest_coefficient(fam, crossing), Complex(0, -1)));
	BlockStructure s{{0, 1, 0, 1}, "wwbb"};
	CHECK(near(extract_full_coefficient(fam, s, parse_diagram("wwbb/1|2|3|4")), -(1.0 - zb)));
	CHECK(near(extract_full_coefficient(fam, s, parse_diagram("wwbb/13|2|4")), 1.0 - zb));
	CHECK(near(extract_full_coefficient(fam, s, s.maximal_partition()), zb));
	CHECK_THROWS_AS(extract_full_coefficient(fam, s, parse_diagram("wwbb/12|3|4")), Error);
}

TEST_CASE("restriction to one factor") {
	std::mt19937_64 rng(4);
	auto t1 = integer_table(two_face_generators("a"), 5, rng);
	auto t2 = integer_table(two_face_generators("b"), 5, rng);
	auto fs = factors_of({t1, t2});
	for (const auto& fam : class_families())
		for (int n = 1; n <= 5; ++n)
			for (std::size_t i = 0; i < t1.count(n); ++i) {
				Word w = t1.word_at(n, i);
				TaggedWord tw;
				for (int g : w)
					tw.push_back({1, g});
				// integer data keeps every intermediate exact
				REQUIRE(product_moment(fam, fs, tw) == t2.at(w));
			}
	auto ct1 = random_table(two_face_generators("a"), 5, rng);
	auto cfs = factors_of({ct1, t2});
	for (const auto& fam : deformed_families(std::polar(1.0, 2.0)))
		for (int n = 1; n <= 5; ++n)
			for (std::size_t i = 0; i < ct1.count(n); ++i) {
				Word w = ct1.word_at(n, i);
				TaggedWord tw;
				for (int g : w)
					tw.push_back({0, g});
				REQUIRE(std::abs(product_moment(fam, cfs, tw) - ct1.at(w)) < 1e-12);
			}
	CHECK(product_moment(WeightFamily::class_indicator(ClassId::A), fs, {}) == Complex(1.0));
	CHECK_THROWS_AS(product_moment(WeightFamily::class_indicator(ClassId::A), fs, TaggedWord{{2, 0}}), Error);
	CHECK_THROWS_AS(product_moment(WeightFamily::class_indicator(ClassId::A), fs, TaggedWord(9, {0, 0})), Error);
}

TEST_CASE("boolean product factorizes across alternations") {
	std::mt19937_64 rng(6);
	std::vector<Generator> g1{{'w', "a"}, {'w', "a2"}}, g2{{'w', "b"}};
	auto t1 = random_table(g1, 3, rng);
	auto t2 = random_table(g2, 3, rng);
	Complex v = product_moment(WeightFamily::class_indicator(ClassId::I), factors_of({t1, t2}),
	                           TaggedWord{{0, 0}, {1, 0}, {0, 1}});
	CHECK(near(v, t1.at(Word{0}) * t2.at(Word{0}) * t1.at(Word{1})));
}

TEST_CASE("expansion dump") {
	std::mt19937_64 rng(12);
	auto t1 = random_table(two_face_generators("a"), 4, rng);
	auto t2 = random_table(two_face_generators("b"), 4, rng);
	auto fam = WeightFamily::class_indicator(ClassId::A);
	std::vector<ExpansionTerm<Complex>> terms;
	auto w = tagged("1212", "wbwb");
	Complex v = product_moment(fam, factors_of({t1, t2}), w, &terms);
	CHECK(terms.size() == 15);
	Complex sum = 0;
	for (const auto& t : terms) {
		sum += t.contribution;
		if (t.mixed)
			CHECK(t.contribution == Complex{});
	}
	CHECK(near(sum, v));
	CHECK(near(v, product_moment(fam, factors_of({t1, t2}), w)));
}

TEST_CASE("highest coefficient extraction matches the weights") {
	std::mt19937_64 rng(31);
	auto fams = all_families();
	fams.push_back(WeightFamily::deformed(DeformedKind::free, std::polar(1.0, 2.0 * M_PI / 3)));
	for (const auto& fam : fams)
		for (int n = 1; n <= 5; ++n)
			for (auto& w : enumerate_words(n))
				for (auto& p : enumerate_partitions(w)) {
					auto op = OrderedPartition::natural(p);
					std::shuffle(op.order.begin(), op.order.end(), rng);
					REQUIRE(near(extract_highest_coefficient(fam, op), fam.evaluate(p)));
				}
	for (const auto& fam : fams)
		CHECK(extract_highest_coefficient(fam, OrderedPartition::natural(parse_diagram("wbbw/1234"))) == Complex(1.0));
}

TEST_CASE("full coefficients sum to the all-ones moment") {
	auto fam = WeightFamily::class_indicator(ClassId::NCwAb);
	BlockStructure s{{0, 1, 0, 0, 1}, "wbbwb"};
	auto sigma = s.maximal_partition();
	std::vector<Factor<Complex>> ones;
	for (int k = 0; k < 2; ++k)
		ones.push_back({two_face_generators(std::string(1, char('a' + k))), [](const Word&) { return Complex(1.0); }});
	TaggedWord w;
	for (int l = 0; l < 5; ++l)
		w.push_back({s.factor[l], s.faces[l] == 'w' ? 0 : 1});
	Complex sum = 0;
	int adapted = 0;
	for (auto& rho : refinements(sigma))
		if (s.adapted(rho)) {
			++adapted;
			sum += extract_full_coefficient(fam, s, rho);
		}
	CHECK(adapted == int(refinements(sigma).size()));
	CHECK(near(sum, product_moment(fam, ones, w)));
	CHECK(near(extract_full_coefficient(fam, s, sigma),
	           extract_highest_coefficient(fam, OrderedPartition{sigma, {1, 0}})));
}

TEST_CASE("well definedness under fusing letters") {
	std::mt19937_64 rng(41);
	for (const auto& fam : all_families()) {
		double worst = 0;
		for (int trial = 0; trial < 3; ++trial) {
			std::vector<Table> ts{random_table(two_face_generators("a"), 5, rng),
			                      random_table(two_face_generators("b"), 5, rng)};
			for (int n = 2; n <= 5; ++n)
				for (int sample = 0; sample < 30; ++sample) {
					TaggedWord w;
					for (int l = 0; l < n; ++l)
						w.push_back({int(rng() % 2), int(rng() % 2)});
					int i = 1 + int(rng() % (n - 1));
					w[i] = {w[i - 1].factor, w[i].generator};
					w[i].generator = w[i - 1].generator;
					worst = std::max(worst, well_definedness_check(fam, ts, w, i));
				}
		}
		CHECK_MESSAGE(worst < 1e-9, fam.label());
	}
	// two letters of one factor: both sides are the factor's own moment
	std::vector<Table> ts{random_table(two_face_generators("a"), 3, rng), random_table(two_face_generators("b"), 3, rng)};
	CHECK(near(well_definedness_check(WeightFamily::class_indicator(ClassId::I), ts, tagged("11", "ww"), 1), 0.0));
	CHECK_THROWS_AS(well_definedness_check(WeightFamily::class_indicator(ClassId::I), ts, tagged("12", "ww"), 1), Error);
}

TEST_CASE("fusing letters exposes a family that is not closed under replacement") {
	std::mt19937_64 rng(43);
	auto fam = nc_two_blocks_family();
	double worst = 0;
	TaggedWord witness;
	std::vector<Table> ts{random_table(two_face_generators("a"), 5, rng), random_table(two_face_generators("b"), 5, rng)};
	for (int n = 3; n <= 5 && worst < 1e-6; ++n)
		for (int sample = 0; sample < 200 && worst < 1e-6; ++sample) {
			TaggedWord w;
			for (int l = 0; l < n; ++l)
				w.push_back({int(rng() % 3 == 0), 0});
			int i = 1 + int(rng() % (n - 1));
			w[i].factor = w[i - 1].factor;
			double d = well_definedness_check(fam, ts, w, i);
			if (d > worst) {
				worst = d;
				witness = w;
			}
		}
	CHECK(worst > 1e-6);
	MESSAGE(format_tagged_word({ts[0].generators(), ts[1].generators()}, witness));
}

TEST_CASE("associativity and symmetry") {
	std::mt19937_64 rng(51);
	for (const auto& fam : all_families()) {
		auto r = associativity_symmetry_check(fam, random_table(two_face_generators("a"), 4, rng),
		                                      random_table(two_face_generators("b"), 4, rng),
		                                      random_table(two_face_generators("c"), 4, rng), 4);
		CHECK_MESSAGE(r.pass(), fam.label() << " " << r.max_error);
		CHECK(r.checked == 6 + 36 + 216 + 1296);
	}
}

TEST_CASE("universality under substitution") {
	std::mt19937_64 rng(61);
	for (const auto& fam : all_families()) {
		std::vector<Table> base{random_table(two_face_generators("a", 2), 8, rng),
		                        random_table(two_face_generators("b", 2), 8, rng)};
		// y_w -> x_w1 x_w2 and y_b -> x_b2 in both factors
		std::vector<Generator> ng{{'w', "yw"}, {'b', "yb"}};
		std::vector<Word> subst{{0, 1}, {3}};
		std::vector<Table> pushed{substitute(base[0], ng, subst), substitute(base[1], ng, subst)};
		double worst = 0;
		for (int n = 1; n <= 4; ++n)
			for (int sample = 0; sample < 20; ++sample) {
				TaggedWord y, x;
				for (int l = 0; l < n; ++l) {
					TaggedLetter t{int(rng() % 2), int(rng() % 2)};
					y.push_back(t);
					for (int g : subst[t.generator])
						x.push_back({t.factor, g});
				}
				worst = std::max(worst, std::abs(product_moment(fam, factors_of(pushed), y) -
				                                 product_moment(fam, factors_of(base), x)));
			}
		CHECK_MESSAGE(worst < 1e-9, fam.label());
	}
}

TEST_CASE("mixed cumulants of a product vanish") {
	std::mt19937_64 rng(71);
	auto t1 = random_table(two_face_generators("a"), 4, rng);
	auto t2 = random_table(two_face_generators("b"), 4, rng);
	for (const auto& fam : all_families()) {
		auto joint_gens = t1.generators();
		for (const auto& g : t2.generators())
			joint_gens.push_back(g);
		Table joint(joint_gens, 4);
		auto fs = factors_of({t1, t2});
		for (int n = 1; n <= 4; ++n)
			for (std::size_t i = 0; i < joint.count(n); ++i) {
				TaggedWord tw;
				for (int g : joint.word_at(n, i))
					tw.push_back({g / 2, g % 2});
				joint.at(n, i) = product_moment(fam, fs, tw);
			}
		auto c = log_alpha(fam, joint);
		auto expected = direct_sum(log_alpha(fam, t1), log_alpha(fam, t2));
		double worst = 0;
		for (int n = 1; n <= 4; ++n)
			for (std::size_t i = 0; i < c.count(n); ++i)
				worst = std::max(worst, std::abs(c.at(n, i) - expected.at(n, i)));
		CHECK_MESSAGE(worst < 1e-9, fam.label());
	}
}

TEST_CASE("combinatorial formula: worked example") {
	std::mt19937_64 rng(91);
	auto phi = random_table(two_face_generators("a"), 5, rng);
	auto psi = random_table(two_face_generators("b"), 5, rng);
	auto w = tagged("12112", "wbbwb");
	auto r = combinatorial_moment(ClassId::NCwAb, factors_of({phi, psi}), w);
	REQUIRE(r.maximal.size() == 2);
	std::set<Partition> maximal(r.maximal.begin(), r.maximal.end());
	CHECK(maximal == std::set<Partition>{parse_diagram("wbbwb/13|25|4"), parse_diagram("wbbwb/134|2|5")});
	CHECK(meet(r.maximal) == parse_diagram("wbbwb/13|2|4|5"));
	CHECK(r.terms == 3);
	Complex display = at(phi, "wb") * at(phi, "w") * at(psi, "bb") + at(phi, "wbw") * at(psi, "b") * at(psi, "b") -
	                  at(phi, "wb") * at(phi, "w") * at(psi, "b") * at(psi, "b");
	CHECK(std::abs(r.value - display) < 1e-12);
	CHECK(std::abs(product_moment(WeightFamily::class_indicator(ClassId::NCwAb), factors_of({phi, psi}), w) - display) <
	      1e-9);
	// the block partition itself in the class: a single factorized term
	auto single = combinatorial_moment(ClassId::A, factors_of({phi, psi}), w);
	CHECK(single.terms == 1);
	CHECK(std::abs(single.value - at(phi, "wbw") * at(psi, "bb")) < 1e-12);
	CHECK_THROWS_AS(combinatorial_moment(ClassId::NCwAb, factors_of({phi, psi}), w, 1), Error);
}

TEST_CASE("combinatorial formula agrees with the flat product") {
	std::mt19937_64 rng(93);
	std::vector<Table> ts{random_table(two_face_generators("a"), 5, rng), random_table(two_face_generators("b"), 5, rng),
	                      random_table(two_face_generators("c"), 5, rng)};
	auto fs = factors_of(ts);
	for (auto c : kAllClasses) {
		auto fam = WeightFamily::class_indicator(c);
		double worst = 0;
		for (int n = 1; n <= 5; ++n)
			for (int sample = 0; sample < 40; ++sample) {
				TaggedWord w;
				for (int l = 0; l < n; ++l)
					w.push_back({int(rng() % 3), int(rng() % 2)});
				worst = std::max(worst, std::abs(combinatorial_moment(c, fs, w).value - product_moment(fam, fs, w)));
			}
		CHECK_MESSAGE(worst < 1e-9, class_name(c));
	}
}

TEST_CASE("unit preservation") {
	std::set<ClassId> preserving;
	for (auto c : kAllClasses) {
		auto r = unit_preservation_check(WeightFamily::class_indicator(c), 4, 7);
		CHECK_MESSAGE(r.agree(), class_name(c));
		if (r.insertion_invariant)
			preserving.insert(c);
		else
			CHECK(r.witness);
	}
	CHECK(preserving == std::set<ClassId>{ClassId::A, ClassId::NC, ClassId::biNC, ClassId::NCwAb, ClassId::AwNCb,
	                                      ClassId::pNC, ClassId::pC});
	for (const auto& fam : deformed_families(Complex(0, 1))) {
		auto r = unit_preservation_check(fam, 4, 7);
		CHECK(r.insertion_invariant);
		CHECK(r.agree());
	}
	auto boolean = unit_preservation_check(WeightFamily::class_indicator(ClassId::I), 4, 7);
	REQUIRE(boolean.witness);
	CHECK(boolean.witness->size() >= 2);
}
