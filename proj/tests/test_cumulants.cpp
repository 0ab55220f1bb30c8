#include "doctest.h"
#include "families.hpp"

#include "mfprod/cumulants.hpp"

using namespace mfprod;
using namespace mfprod::testing;

namespace {
double max_diff(const Table& a, const Table& b) {
	double d = 0;
	for (int n = 1; n <= a.degree_bound(); ++n)
		for (std::size_t i = 0; i < a.count(n); ++i)
			d = std::max(d, std::abs(a.at(n, i) - b.at(n, i)));
	return d;
}

// Compositions of n, i.e. the interval partitions, as lists of block lengths.
void compositions(int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
	if (n == 0) {
		out.push_back(cur);
		return;
	}
	for (int k = 1; k <= n; ++k) {
		cur.push_back(k);
		compositions(n - k, cur, out);
		cur.pop_back();
	}
}
} // namespace

TEST_CASE("dense table indexing") {
	Table t(two_face_generators("a", 2), 3);
	CHECK(t.count(1) == 4);
	CHECK(t.count(3) == 64);
	for (std::size_t i = 0; i < t.count(3); ++i)
		CHECK(t.index_of(t.word_at(3, i)) == i);
	CHECK(t.generator_index('b', "ab2") == 3);
	CHECK(t.generator_index('w', "ab2") == -1);
	CHECK_THROWS_AS(t.at(Word{}), Error);
	CHECK_THROWS_AS(t.at(Word{0, 0, 0, 0}), Error);
	CHECK_THROWS_AS(t.at(Word{7}), Error);
	CHECK_THROWS_AS(Table({{'w', "x"}, {'w', "x"}}, 2), Error);
	CHECK_THROWS_AS(Table(two_face_generators("a", 8), 8), Error);
}

TEST_CASE("exp and log on small words") {
	std::mt19937_64 rng(11);
	auto psi = random_table(two_face_generators("a", 2), 4, rng);
	for (const auto& fam : all_families()) {
		auto m = exp_alpha(fam, psi);
		auto c = log_alpha(fam, psi);
		for (int g = 0; g < 4; ++g) {
			CHECK(m.at(Word{g}) == psi.at(Word{g}));
			CHECK(c.at(Word{g}) == psi.at(Word{g}));
		}
	}
	// classical second cumulant shape
	auto c = log_alpha(WeightFamily::class_indicator(ClassId::A), psi);
	Word xy{0, 1};
	CHECK(near(c.at(xy), psi.at(xy) - psi.at(Word{0}) * psi.at(Word{1})));
	// mixed two-letter word
	auto m = cumulants_to_moments(WeightFamily::class_indicator(ClassId::A), psi);
	Word wb{0, 2};
	CHECK(near(m.at(wb), psi.at(wb) + psi.at(Word{0}) * psi.at(Word{2})));
}

TEST_CASE("boolean exp sums over interval partitions") {
	std::mt19937_64 rng(5);
	auto psi = random_table(two_face_generators("a", 1), 5, rng);
	auto m = exp_alpha(WeightFamily::class_indicator(ClassId::I), psi);
	for (int n = 1; n <= 5; ++n) {
		std::vector<std::vector<int>> comps;
		std::vector<int> cur;
		compositions(n, cur, comps);
		for (std::size_t i = 0; i < m.count(n); ++i) {
			Word w = m.word_at(n, i);
			Complex expected = 0;
			for (const auto& comp : comps) {
				Complex term = 1;
				int start = 0;
				for (int len : comp) {
					term *= psi.at(Word(w.begin() + start, w.begin() + start + len));
					start += len;
				}
				expected += term;
			}
			REQUIRE(near(m.at(n, i), expected));
		}
	}
}

TEST_CASE("exp and log are inverse") {
	std::mt19937_64 rng(2024);
	for (const auto& fam : all_families()) {
		double worst = 0;
		for (int trial = 0; trial < 10; ++trial) {
			auto t = random_table(two_face_generators("a", 1), 5, rng);
			worst = std::max(worst, max_diff(exp_alpha(fam, log_alpha(fam, t)), t));
			worst = std::max(worst, max_diff(log_alpha(fam, exp_alpha(fam, t)), t));
		}
		CHECK_MESSAGE(worst < 1e-9, fam.label());
	}
	// with marker coefficients as well
	FunctionalTable<MarkerPoly> t(two_face_generators("a", 1), 3);
	for (int n = 1; n <= 3; ++n)
		for (std::size_t i = 0; i < t.count(n); ++i)
			t.at(n, i) = MarkerPoly::monomial(2, unsigned(i % 3) + 1, double(i + n));
	auto fam = WeightFamily::class_indicator(ClassId::NCwAb);
	auto back = exp_alpha(fam, log_alpha(fam, t));
	for (int n = 1; n <= 3; ++n)
		for (std::size_t i = 0; i < t.count(n); ++i)
			for (unsigned mask = 0; mask < 4; ++mask)
				CHECK(near(back.at(n, i).coefficient(mask), t.at(n, i).coefficient(mask)));
}

TEST_CASE("ordered form agrees with the unordered relation") {
	std::mt19937_64 rng(3);
	auto c = random_table(two_face_generators("a", 1), 4, rng);
	for (const auto& fam : all_families()) {
		auto m = cumulants_to_moments(fam, c);
		for (int n = 1; n <= 4; ++n)
			for (std::size_t i = 0; i < m.count(n); ++i)
				REQUIRE(near(ordered_moment(fam, c, m.word_at(n, i)), m.at(n, i)));
	}
}

TEST_CASE("direct sum") {
	std::mt19937_64 rng(8);
	auto a = random_table(two_face_generators("a"), 3, rng);
	auto b = random_table(two_face_generators("b"), 4, rng);
	auto s = direct_sum(a, b);
	CHECK(s.degree_bound() == 3);
	CHECK(s.at(Word{0, 1, 0}) == a.at(Word{0, 1, 0}));
	CHECK(s.at(Word{2, 3}) == b.at(Word{0, 1}));
	CHECK(s.at(Word{0, 3}) == Complex{});
	CHECK(s.at(Word{2, 2, 1}) == Complex{});
	auto r = direct_sum(b, a);
	for (int n = 1; n <= 3; ++n)
		for (std::size_t i = 0; i < s.count(n); ++i) {
			Word w = s.word_at(n, i);
			for (int& g : w)
				g = (g + 2) % 4;
			REQUIRE(r.at(w) == s.at(n, i));
		}
	CHECK_THROWS_AS(direct_sum(a, a), Error);
}

TEST_CASE("cumulants of a direct sum are the direct sum of cumulants") {
	std::mt19937_64 rng(9);
	auto a = random_table(two_face_generators("a"), 4, rng);
	auto b = random_table(two_face_generators("b"), 4, rng);
	for (const auto& fam : all_families()) {
		auto s = direct_sum(a, b);
		CHECK(max_diff(log_alpha(fam, exp_alpha(fam, s)), s) < 1e-9);
		// the direct sum of logs exponentiates to the direct sum of the exps
		auto lhs = exp_alpha(fam, direct_sum(log_alpha(fam, a), log_alpha(fam, b)));
		for (int n = 1; n <= 4; ++n)
			for (std::size_t i = 0; i < lhs.count(n); ++i) {
				Word w = lhs.word_at(n, i);
				bool pure_a = std::all_of(w.begin(), w.end(), [](int g) { return g < 2; });
				if (pure_a)
					REQUIRE(near(lhs.at(n, i), a.at(w)));
			}
	}
}

TEST_CASE("log commutes with substitution of products") {
	std::mt19937_64 rng(17);
	std::uniform_int_distribution<int> len(1, 2);
	auto old_gens = two_face_generators("x", 2);
	for (const auto& fam : all_families()) {
		auto phi = random_table(old_gens, 8, rng);
		std::vector<Generator> new_gens{{'w', "y1"}, {'w', "y2"}, {'b', "y3"}};
		std::vector<Word> subst;
		for (const auto& g : new_gens) {
			Word w;
			for (int k = len(rng); k > 0; --k)
				w.push_back(g.face == 'w' ? int(rng() % 2) : 2 + int(rng() % 2));
			subst.push_back(w);
		}
		auto pushed = substitute(phi, new_gens, subst);
		CHECK(pushed.degree_bound() >= 4);
		auto lhs = log_alpha(fam, pushed);
		for (int n = 1; n <= 4; ++n)
			for (std::size_t i = 0; i < lhs.count(n); ++i) {
				Word y = lhs.word_at(n, i);
				auto logs = subword_logs<Complex>(fam, pushed.faces(y), [&](std::uint32_t m) {
					Word x;
					for (int l : mask_legs(m))
						x.insert(x.end(), subst[y[l - 1]].begin(), subst[y[l - 1]].end());
					return phi.at(x);
				});
				REQUIRE(near(lhs.at(n, i), logs[(1u << n) - 1]));
			}
	}
	CHECK_THROWS_AS(substitute(random_table(old_gens, 2, rng), {{'w', "y"}}, {{2}}), Error);
}

TEST_CASE("product letter identity for cumulants") {
	std::mt19937_64 rng(81);
	for (const auto& fam : all_families()) {
		// base case: two letters fused into one
		auto m = random_table(two_face_generators("a", 2), 2, rng);
		Word xy{0, 1};
		auto r = fusion_check(fam, m, xy, 1);
		auto c = log_alpha(fam, m);
		Complex expected = c.at(xy) + fam.evaluate(parse_diagram("ww/1|2")) * c.at(Word{0}) * c.at(Word{1});
		CHECK(r.rhs == expected);
		CHECK(r.lhs == m.at(xy));
		CHECK(near(r.lhs, r.rhs));

		auto big = random_table(two_face_generators("a", 1), 5, rng);
		double worst = 0;
		for (int n = 2; n <= 5; ++n)
			for (std::size_t idx = 0; idx < big.count(n); idx += 3) {
				Word w = big.word_at(n, idx);
				for (int i = 1; i < n; ++i)
					if (big.faces(w)[i - 1] == big.faces(w)[i])
						worst = std::max(worst, fusion_check(fam, big, w, i).difference);
			}
		CHECK_MESSAGE(worst < 1e-9, fam.label());
	}
	auto m = random_table(two_face_generators("a", 1), 3, rng);
	CHECK_THROWS_AS(fusion_check(WeightFamily::class_indicator(ClassId::A), m, Word{0, 1}, 1), Error);
	// no two-block partition in the support: the cumulant does not move
	auto one_block = WeightFamily::function("one-block", [](const Partition& p) { return p.block_count() == 1 ? 1.0 : 0.0; });
	auto r = fusion_check(one_block, m, Word{0, 0, 1}, 1);
	CHECK(r.lhs == r.rhs);
}

TEST_CASE("singleton inductive families kill unit cumulants") {
	std::mt19937_64 rng(97);
	auto base = random_table(two_face_generators("a"), 4, rng);
	auto gens = base.generators();
	gens.push_back({'w', "uw"});
	gens.push_back({'b', "ub"});
	Table phi(gens, 4);
	for (int n = 1; n <= 4; ++n)
		for (std::size_t i = 0; i < phi.count(n); ++i) {
			Word w = phi.word_at(n, i), stripped;
			for (int g : w)
				if (g < 2)
					stripped.push_back(g);
			phi.at(n, i) = stripped.empty() ? Complex(1.0) : base.at(stripped);
		}
	for (const auto& fam : all_families()) {
		bool inductive = is_singleton_inductive(fam, 5).inductive;
		auto c = log_alpha(fam, phi);
		double worst = 0;
		for (int n = 2; n <= 4; ++n)
			for (std::size_t i = 0; i < c.count(n); ++i) {
				Word w = c.word_at(n, i);
				if (std::any_of(w.begin(), w.end(), [](int g) { return g >= 2; }))
					worst = std::max(worst, std::abs(c.at(n, i)));
			}
		CHECK_MESSAGE((worst < 1e-9) == inductive, fam.label());
	}
}
