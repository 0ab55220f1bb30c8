/*
 * verify.cpp
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

#include "mfprod/verify.hpp"

#include <cmath>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "mfprod/json_io.hpp"

namespace mfprod {

bool VerifyReport::pass() const {
	return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

WeightFamily mirror_asymmetric_family() {
	// conj(zeta)^c with c read off at a small angle, then evaluated at 2
	const double theta = 0.05;
	auto tensor = WeightFamily::deformed(DeformedKind::tensor, std::polar(1.0, -theta));
	return WeightFamily::function("tensor-continued", [tensor, theta](const Partition& p) {
		double c = std::round(std::arg(tensor.evaluate(p)) / theta);
		return Complex(std::pow(2.0, c), 0.0);
	});
}

bool nc_two_blocks(const Partition& p) {
	return p.block_count() <= 2 && member(ClassId::NC, p);
}

WeightFamily nc_two_blocks_family() {
	return WeightFamily::function("nc-two-blocks", [](const Partition& p) { return nc_two_blocks(p) ? 1.0 : 0.0; });
}

namespace {

const Complex kI(0, 1);
const Complex kCubeRoot = std::polar(1.0, 2.0 * M_PI / 3.0);

std::string quote(const std::string& s) {
	return "'" + s + "'";
}

std::string replay(const std::string& suite, std::uint64_t seed) {
	return "mfprod verify --suite " + suite + " --seed " + std::to_string(seed);
}

std::string family_arg(const WeightFamily& f) {
	return quote(family_to_json(f).dump());
}

std::vector<WeightFamily> class_families() {
	std::vector<WeightFamily> out;
	for (auto c : kAllClasses)
		out.push_back(WeightFamily::class_indicator(c));
	return out;
}

// The 12 classes and the three deformations at zeta.
std::vector<WeightFamily> sweep_families(Complex zeta = kI) {
	auto out = class_families();
	for (auto k : {DeformedKind::tensor, DeformedKind::free, DeformedKind::bifree})
		out.push_back(WeightFamily::deformed(k, zeta));
	return out;
}

std::string family_name(const WeightFamily& f) {
	if (auto d = f.deformation()) {
		std::ostringstream os;
		os << deformed_name(d->first) << "(" << d->second.real() << (d->second.imag() < 0 ? "" : "+") << d->second.imag()
		   << "i)";
		return os.str();
	}
	return f.label();
}

// Runs f on every item concurrently; results keep the input order.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, F f) {
	using R = decltype(f(items[0], std::size_t(0)));
	std::vector<std::future<R>> futures;
	for (std::size_t i = 0; i < items.size(); ++i)
		futures.push_back(std::async(std::launch::async, [&, i] { return f(items[i], i); }));
	std::vector<R> out;
	for (auto& fu : futures)
		out.push_back(fu.get());
	return out;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
	std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
	z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
	z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
	return z ^ (z >> 31);
}

void for_each_tagged_word(int factors, int gens, int len, const std::function<void(const TaggedWord&)>& f) {
	TaggedWord w(len);
	long total = 1;
	for (int i = 0; i < len; ++i)
		total *= factors * gens;
	for (long code = 0; code < total; ++code) {
		long c = code;
		for (int i = len - 1; i >= 0; --i) {
			int letter = int(c % (factors * gens));
			c /= factors * gens;
			w[i] = {letter / gens, letter % gens};
		}
		f(w);
	}
}

std::string tagged_string(const std::vector<Table>& ts, const TaggedWord& w) {
	std::vector<std::vector<Generator>> gens;
	for (const auto& t : ts)
		gens.push_back(t.generators());
	return format_tagged_word(gens, w);
}

std::vector<Factor<Complex>> factors_of(const std::vector<Table>& ts) {
	std::vector<Factor<Complex>> out;
	for (const auto& t : ts)
		out.push_back(as_factor(t));
	return out;
}

// Suites ----------------------------------------------------------------------

void suite_classification(VerifyReport& r) {
	auto pats = enumerate_admissible_patterns();
	std::set<ClassId> classes;
	std::string listing;
	for (const auto& e : pats) {
		classes.insert(e.cls);
		if (!listing.empty())
			listing += ", ";
		listing += std::string(class_name(e.cls)) + "=" + pattern_string(e.pattern);
	}
	r.checks.push_back({"twelve admissible patterns", pats.size() == 12, 0, "", replay("classification", r.seed),
	                    std::to_string(pats.size()) + " patterns: " + listing});
	r.checks.push_back({"patterns biject onto the classes", classes.size() == 12 && pats.size() == 12, 0, "",
	                    replay("classification", r.seed), ""});

	int fixed = 0;
	std::set<std::set<ClassId>> orbits;
	for (const auto& e : pats) {
		fixed += swap(e.cls) == e.cls;
		orbits.insert({e.cls, swap(e.cls)});
	}
	r.checks.push_back({"face swap: 6 fixed points, 9 orbits", fixed == 6 && orbits.size() == 9, 0, "",
	                    replay("classification", r.seed),
	                    std::to_string(fixed) + " fixed, " + std::to_string(orbits.size()) + " orbits"});

	// the patterns must be the basic coefficients of the membership predicates
	Check agree{"patterns match the class predicates", true, 0, "", "", ""};
	for (const auto& e : pats) {
		auto bc = basic_coefficients(WeightFamily::class_indicator(e.cls));
		auto v = bc.pattern();
		for (int i = 0; i < 6; ++i)
			agree.max_error = std::max(agree.max_error, std::abs(v[i] - double(e.pattern[i])));
		if (agree.max_error > 0 && agree.witness.empty()) {
			agree.pass = false;
			agree.witness = std::string(class_name(e.cls));
			agree.reproduce = "mfprod check-admissible --family " + quote(Json{{"class", agree.witness}}.dump());
		}
	}
	if (agree.pass)
		agree.reproduce = replay("classification", r.seed);
	r.checks.push_back(agree);

	Check round{"classifier recovers classes and deformations", true, 0, "", replay("classification", r.seed), ""};
	for (auto c : kAllClasses) {
		auto got = classify_pattern(basic_coefficients(WeightFamily::class_indicator(c)));
		if (!std::holds_alternative<ClassId>(got) || std::get<ClassId>(got) != c) {
			round.pass = false;
			round.witness = std::string(class_name(c));
		}
	}
	for (auto zeta : {kI, kCubeRoot})
		for (auto k : {DeformedKind::tensor, DeformedKind::free, DeformedKind::bifree}) {
			auto bc = deformed_coefficients(k, zeta);
			auto got = classify_pattern(bc);
			bool ok = std::holds_alternative<Deformation>(got) && std::get<Deformation>(got).kind == k;
			if (ok)
				round.max_error = std::max(round.max_error, std::abs(std::get<Deformation>(got).zeta - zeta));
			if (!ok || round.max_error > kEps) {
				round.pass = false;
				round.witness = std::string(deformed_name(k));
				round.reproduce = "mfprod classify --basic " + quote(to_json(bc).dump());
			}
		}
	r.checks.push_back(round);
}

void suite_admissibility(VerifyReport& r) {
	std::vector<WeightFamily> fams = class_families();
	for (auto zeta : {Complex(1.0), kI, kCubeRoot})
		for (auto k : {DeformedKind::tensor, DeformedKind::free, DeformedKind::bifree})
			fams.push_back(WeightFamily::deformed(k, zeta));
	auto reports = parallel_map(fams, [](const WeightFamily& f, std::size_t) { return check_admissible(f, 6); });
	for (std::size_t i = 0; i < fams.size(); ++i) {
		const auto& a = reports[i];
		Check c{"admissible at 6 legs: " + family_name(fams[i]), a.pass, 0, "",
		        "mfprod check-admissible --family " + family_arg(fams[i]) + " --max-legs 6",
		        std::to_string(a.checked) + " conditions checked"};
		if (!a.pass) {
			c.witness = a.witness ? format_diagram(*a.witness) : "";
			c.detail = a.condition + ": " + a.detail;
		}
		r.checks.push_back(c);
	}
	auto control = check_admissible(mirror_asymmetric_family(), 6);
	r.checks.push_back({"mirror-asymmetric control fails (vi)", !control.pass && control.condition == "(vi)", 0,
	                    control.witness ? format_diagram(*control.witness) : "", replay("admissibility", r.seed),
	                    control.pass ? "control passed" : control.condition + ": " + control.detail});
	auto nc2 = check_admissible(nc_two_blocks_family(), 6);
	r.checks.push_back({"two-block noncrossing control fails (iv')", !nc2.pass && nc2.condition == "(iv')", 0,
	                    nc2.witness ? format_diagram(*nc2.witness) : "", replay("admissibility", r.seed),
	                    nc2.pass ? "control passed" : nc2.condition + ": " + nc2.detail});
}

void suite_hasse(VerifyReport& r) {
	auto h = hasse_verify(6);
	std::string reproduce = "mfprod hasse --max-legs 6";
	for (const auto& e : h.edges) {
		bool ok = e.witness && member(e.to, *e.witness) && !member(e.from, *e.witness);
		r.checks.push_back({std::string("edge ") + std::string(class_name(e.from)) + " < " + std::string(class_name(e.to)),
		                    ok, 0, e.witness ? format_diagram(*e.witness) : "", reproduce, ""});
	}
	r.checks.push_back({"17 covering edges", h.edges.size() == 17, 0, "", reproduce, std::to_string(h.edges.size())});
	for (const auto& i : h.incomparable) {
		bool ok = i.a_not_b && i.b_not_a;
		std::string w = (i.a_not_b ? format_diagram(*i.a_not_b) : "-") + " ; " + (i.b_not_a ? format_diagram(*i.b_not_a) : "-");
		r.checks.push_back({std::string("incomparable ") + std::string(class_name(i.a)) + " / " + std::string(class_name(i.b)),
		                    ok, 0, w, reproduce, ""});
	}
	std::string v;
	for (const auto& s : h.violations)
		v += (v.empty() ? "" : "; ") + s;
	r.checks.push_back({"containment matches the diagram", h.violations.empty(), 0, v, reproduce, ""});
}

void suite_example(VerifyReport& r) {
	Complex zb = std::conj(kI);
	auto fam = WeightFamily::deformed(DeformedKind::tensor, kI);
	Check closed{"deformed tensor four-letter moment", true, 0, "", replay("example", r.seed),
	             "zeta = i, 5 random table pairs"};
	for (int trial = 0; trial < 5; ++trial) {
		std::mt19937_64 rng(mix(r.seed, trial));
		std::vector<Table> ts{random_table(two_face_generators("a"), 4, rng), random_table(two_face_generators("b"), 4, rng)};
		// letters: a_w b_w a_b b_b; generator 0 is white, 1 black
		TaggedWord w{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
		Complex v = product_moment(fam, factors_of(ts), w);
		Complex m1 = ts[0].at(Word{0, 1}), m2 = ts[1].at(Word{0, 1});
		Complex p1 = ts[0].at(Word{0}) * ts[0].at(Word{1}), p2 = ts[1].at(Word{0}) * ts[1].at(Word{1});
		Complex expected = zb * m1 * m2 + (1.0 - zb) * m1 * p2 + (1.0 - zb) * p1 * m2 - (1.0 - zb) * p1 * p2;
		closed.max_error = std::max(closed.max_error, std::abs(v - expected));
	}
	closed.pass = closed.max_error < kEps;
	r.checks.push_back(closed);

	auto crossing = parse_diagram("wwbb/13|24");
	Complex hc = extract_highest_coefficient(fam, OrderedPartition::natural(crossing));
	double err = std::abs(hc - Complex(0, -1));
	r.checks.push_back({"highest coefficient of the crossing is conj(zeta)", err < kEps, err,
	                    err < kEps ? "" : format_diagram(crossing),
	                    "mfprod product --query <four-letter query>", ""});
	BlockStructure s{{0, 1, 0, 1}, "wwbb"};
	Complex fc = extract_full_coefficient(fam, s, Partition::singletons("wwbb"));
	err = std::abs(fc + (1.0 - zb));
	r.checks.push_back({"full coefficient of the singletons is -(1 - conj(zeta))", err < kEps, err, "",
	                    replay("example", r.seed), ""});
}

struct SweepResult {
	double wd = 0, assoc = 0, extract = 0;
	bool restriction_exact = true;
	std::string wd_witness, assoc_witness, extract_witness, restriction_witness;
	long wd_checked = 0, assoc_checked = 0;
};

SweepResult reconstruction_sweep(const WeightFamily& fam, std::uint64_t seed, int tables, int max_len) {
	SweepResult s;
	for (int trial = 0; trial < tables; ++trial) {
		std::mt19937_64 rng(mix(seed, trial));
		std::vector<Table> ts{random_table(two_face_generators("a"), max_len, rng),
		                      random_table(two_face_generators("b"), max_len, rng),
		                      random_table(two_face_generators("c"), max_len, rng)};
		// two generators per face, so fused letters need not coincide
		std::vector<Table> pair{random_table(two_face_generators("x", 2), max_len, rng),
		                        random_table(two_face_generators("y", 2), max_len, rng)};
		for (int n = 2; n <= max_len; ++n)
			for (int sample = 0; sample < 200; ++sample) {
				TaggedWord w;
				for (int l = 0; l < n; ++l)
					w.push_back({int(rng() % 2), int(rng() % 4)});
				int i = 1 + int(rng() % (n - 1));
				// same factor and face at i, i+1
				w[i].factor = w[i - 1].factor;
				w[i].generator = (w[i - 1].generator / 2) * 2 + int(rng() % 2);
				double d = well_definedness_check(fam, pair, w, i);
				++s.wd_checked;
				if (d > s.wd) {
					s.wd = d;
					s.wd_witness = tagged_string(pair, w) + " @" + std::to_string(i);
				}
			}
		auto a = associativity_symmetry_check(fam, ts[0], ts[1], ts[2], max_len);
		s.assoc_checked += a.checked;
		if (a.max_error > s.assoc) {
			s.assoc = a.max_error;
			s.assoc_witness = a.witness ? tagged_string(ts, *a.witness) : "";
		}
		// Gaussian-integer data keeps the restriction round trip exact
		auto t = integer_table(two_face_generators("a"), max_len, rng);
		auto other = integer_table(two_face_generators("b"), max_len, rng);
		std::vector<Table> it{t, other};
		auto fs = factors_of(it);
		for (int n = 1; n <= max_len && s.restriction_exact; ++n)
			for (std::size_t i = 0; i < t.count(n); ++i) {
				TaggedWord tw;
				Word w = t.word_at(n, i);
				for (int g : w)
					tw.push_back({0, g});
				if (product_moment(fam, fs, tw) != t.at(w)) {
					s.restriction_exact = false;
					s.restriction_witness = tagged_string(it, tw);
					break;
				}
			}
	}
	std::mt19937_64 rng(mix(seed, 1000));
	for (int n = 1; n <= max_len; ++n)
		for (const auto& w : enumerate_words(n))
			for (const auto& p : enumerate_partitions(w)) {
				auto op = OrderedPartition::natural(p);
				std::shuffle(op.order.begin(), op.order.end(), rng);
				double d = std::abs(extract_highest_coefficient(fam, op) - fam.evaluate(p));
				if (d > s.extract) {
					s.extract = d;
					s.extract_witness = format_diagram(p);
				}
			}
	return s;
}

void suite_reconstruction(VerifyReport& r) {
	auto fams = sweep_families();
	auto results = parallel_map(fams, [&](const WeightFamily& f, std::size_t) {
		return reconstruction_sweep(f, r.seed, 20, 5);
	});
	std::string rep = replay("reconstruction", r.seed);
	for (std::size_t i = 0; i < fams.size(); ++i) {
		const auto& s = results[i];
		std::string name = family_name(fams[i]);
		r.checks.push_back({"well defined under fusion: " + name, s.wd < kEps, s.wd, s.wd < kEps ? "" : s.wd_witness, rep,
		                    std::to_string(s.wd_checked) + " fusions"});
		r.checks.push_back({"associative and symmetric: " + name, s.assoc < kEps, s.assoc,
		                    s.assoc < kEps ? "" : s.assoc_witness, rep, std::to_string(s.assoc_checked) + " words"});
		r.checks.push_back({"restriction exact: " + name, s.restriction_exact, 0, s.restriction_witness, rep, ""});
		r.checks.push_back({"highest coefficients equal the weights: " + name, s.extract < kEps, s.extract,
		                    s.extract < kEps ? "" : s.extract_witness, rep, "all partitions up to 5 legs"});
	}
}

void suite_combinatorial(VerifyReport& r) {
	std::mt19937_64 rng(mix(r.seed, 0));
	std::vector<Table> ts{random_table(two_face_generators("a"), 6, rng), random_table(two_face_generators("b"), 6, rng),
	                      random_table(two_face_generators("c"), 6, rng)};
	std::string rep = replay("combinatorial", r.seed);
	{
		// word a1 b1 a2 a3 b2 of faces w b b w b over two factors
		std::vector<Table> two{ts[0], ts[1]};
		TaggedWord w{{0, 0}, {1, 1}, {0, 1}, {0, 0}, {1, 1}};
		auto res = combinatorial_moment(ClassId::NCwAb, factors_of(two), w);
		const auto &phi = ts[0], &psi = ts[1];
		Complex display = phi.at(Word{0, 1}) * phi.at(Word{0}) * psi.at(Word{1, 1}) +
		                  phi.at(Word{0, 1, 0}) * psi.at(Word{1}) * psi.at(Word{1}) -
		                  phi.at(Word{0, 1}) * phi.at(Word{0}) * psi.at(Word{1}) * psi.at(Word{1});
		std::set<Partition> maximal(res.maximal.begin(), res.maximal.end());
		bool shape = maximal == std::set<Partition>{parse_diagram("wbbwb/13|25|4"), parse_diagram("wbbwb/134|2|5")} &&
		             meet(res.maximal) == parse_diagram("wbbwb/13|2|4|5") && res.terms == 3;
		double err = std::max(std::abs(res.value - display),
		                      std::abs(product_moment(WeightFamily::class_indicator(ClassId::NCwAb), factors_of(two), w) - display));
		r.checks.push_back({"three-term display for NCwAb", shape && err < kEps, err, shape ? "" : "wbbwb/134|25", rep,
		                    std::to_string(res.maximal.size()) + " coarsest refinements"});
	}
	std::vector<ClassId> classes(kAllClasses.begin(), kAllClasses.end());
	struct Out {
		double err = 0;
		std::string witness;
		long checked = 0;
	};
	auto fs = factors_of(ts);
	auto results = parallel_map(classes, [&](ClassId c, std::size_t) {
		Out o;
		auto fam = WeightFamily::class_indicator(c);
		for (int n = 1; n <= 6; ++n)
			for_each_tagged_word(3, 2, n, [&](const TaggedWord& w) {
				++o.checked;
				double d = std::abs(combinatorial_moment(c, fs, w).value - product_moment(fam, fs, w));
				if (d > o.err) {
					o.err = d;
					o.witness = tagged_string(ts, w);
				}
			});
		return o;
	});
	for (std::size_t i = 0; i < classes.size(); ++i)
		r.checks.push_back({"inclusion-exclusion equals the product: " + std::string(class_name(classes[i])),
		                    results[i].err < kEps, results[i].err, results[i].err < kEps ? "" : results[i].witness, rep,
		                    std::to_string(results[i].checked) + " block structures"});
}

void suite_fusion(VerifyReport& r) {
	std::string rep = replay("fusion", r.seed);
	auto fams = sweep_families();
	// base case on integer data: both sides are exact
	Check base{"two-letter base case exact", true, 0, "", rep, ""};
	for (std::size_t i = 0; i < fams.size(); ++i) {
		std::mt19937_64 rng(mix(r.seed, 500 + i));
		auto m = integer_table(two_face_generators("a", 2), 2, rng);
		auto res = fusion_check(fams[i], m, Word{0, 1}, 1);
		if (res.lhs != res.rhs) {
			base.pass = false;
			base.max_error = std::max(base.max_error, res.difference);
			base.witness = family_name(fams[i]);
		}
	}
	r.checks.push_back(base);
	struct Out {
		double err = 0;
		std::string witness;
		long checked = 0;
	};
	auto results = parallel_map(fams, [&](const WeightFamily& fam, std::size_t fi) {
		Out o;
		for (int trial = 0; trial < 100; ++trial) {
			std::mt19937_64 rng(mix(r.seed, fi * 1000 + trial));
			auto m = random_table(two_face_generators("a", 2), 5, rng);
			auto c = log_alpha(fam, m);
			for (int n = 2; n <= 5; ++n)
				for (std::size_t idx = 0; idx < m.count(n); ++idx) {
					Word w = m.word_at(n, idx);
					FaceWord f = m.faces(w);
					for (int i = 1; i < n; ++i)
						if (f[i - 1] == f[i]) {
							++o.checked;
							double d = fusion_check(fam, m, c, w, i).difference;
							if (d > o.err) {
								o.err = d;
								o.witness = "table " + std::to_string(trial) + ", word " + f + " @" + std::to_string(i);
							}
						}
				}
		}
		return o;
	});
	for (std::size_t i = 0; i < fams.size(); ++i)
		r.checks.push_back({"fused-letter cumulant identity: " + family_name(fams[i]), results[i].err < kEps,
		                    results[i].err, results[i].err < kEps ? "" : results[i].witness, rep,
		                    std::to_string(results[i].checked) + " fusions over 100 tables"});
}

void suite_units(VerifyReport& r) {
	std::string rep = replay("units", r.seed);
	auto pnc = class_members(ClassId::pNC, 6);
	std::set<ClassId> contains_pnc, preserving;
	for (auto c : kAllClasses) {
		auto m = class_members(c, 6);
		std::set<Partition> ms(m.begin(), m.end());
		if (std::all_of(pnc.begin(), pnc.end(), [&](const Partition& p) { return ms.count(p) > 0; }))
			contains_pnc.insert(c);
	}
	std::vector<WeightFamily> fams = class_families();
	for (auto zeta : {Complex(1.0), kI, kCubeRoot})
		for (auto k : {DeformedKind::tensor, DeformedKind::free, DeformedKind::bifree})
			fams.push_back(WeightFamily::deformed(k, zeta));
	auto reports = parallel_map(fams, [&](const WeightFamily& f, std::size_t) { return unit_preservation_check(f, 5, r.seed); });
	bool deformations_preserve = true;
	for (std::size_t i = 0; i < fams.size(); ++i) {
		const auto& u = reports[i];
		std::string verdicts = std::string("insertion ") + (u.insertion_invariant ? "yes" : "no") + ", nu=1 " +
		                       (u.nu_all_one ? "yes" : "no") + ", singleton inductive " +
		                       (u.singleton_inductive ? "yes" : "no");
		std::string witness;
		if (u.witness) {
			for (const auto& l : *u.witness)
				witness += std::to_string(l.factor + 1) + (l.generator >= 2 ? "u" : "") + "wb"[l.generator % 2] + " ";
			witness += "(unit at " + std::to_string(u.inserted_at) + ")";
		}
		r.checks.push_back({"unit verdicts agree: " + family_name(fams[i]), u.agree(), u.insertion_invariant ? u.max_error : 0,
		                    u.agree() ? "" : witness, rep, verdicts});
		if (auto c = fams[i].class_id()) {
			if (u.insertion_invariant)
				preserving.insert(*c);
		} else
			deformations_preserve = deformations_preserve && u.insertion_invariant;
	}
	std::string names;
	for (auto c : preserving)
		names += std::string(names.empty() ? "" : ", ") + std::string(class_name(c));
	r.checks.push_back({"unit preserving classes are those containing pNC", preserving == contains_pnc, 0, "", rep, names});
	r.checks.push_back({"deformations are unit preserving", deformations_preserve, 0, "", rep, ""});
}

void suite_cumulants(VerifyReport& r) {
	std::string rep = replay("cumulants", r.seed);
	auto fams = sweep_families();
	struct Out {
		double round = 0, ordered = 0;
	};
	auto results = parallel_map(fams, [&](const WeightFamily& fam, std::size_t fi) {
		Out o;
		for (int trial = 0; trial < 100; ++trial) {
			std::mt19937_64 rng(mix(r.seed, fi * 1000 + trial));
			auto t = random_table(two_face_generators("a"), 5, rng);
			auto e = exp_alpha(fam, log_alpha(fam, t));
			auto l = log_alpha(fam, exp_alpha(fam, t));
			for (int n = 1; n <= 5; ++n)
				for (std::size_t i = 0; i < t.count(n); ++i)
					o.round = std::max({o.round, std::abs(e.at(n, i) - t.at(n, i)), std::abs(l.at(n, i) - t.at(n, i))});
			if (trial < 5) {
				auto m = exp_alpha(fam, t);
				for (int n = 1; n <= 4; ++n)
					for (std::size_t i = 0; i < t.count(n); ++i)
						o.ordered = std::max(o.ordered, std::abs(ordered_moment(fam, t, t.word_at(n, i)) - m.at(n, i)));
			}
		}
		return o;
	});
	for (std::size_t i = 0; i < fams.size(); ++i) {
		r.checks.push_back({"exp and log inverse: " + family_name(fams[i]), results[i].round < kEps, results[i].round, "",
		                    rep, "100 tables, degree 5"});
		r.checks.push_back({"ordered form agrees: " + family_name(fams[i]), results[i].ordered < kEps, results[i].ordered,
		                    "", rep, "words up to length 4"});
	}
}

// Bell numbers by the triangle recurrence, Catalan numbers by the product formula.
std::vector<std::uint64_t> bell_triangle(int n) {
	std::vector<std::uint64_t> bell{1}, row{1};
	for (int i = 1; i <= n; ++i) {
		std::vector<std::uint64_t> next{row.back()};
		for (auto x : row)
			next.push_back(next.back() + x);
		row = next;
		bell.push_back(row.front());
	}
	return bell;
}

void suite_counting(VerifyReport& r) {
	std::string rep = replay("counting", r.seed);
	auto bell = bell_triangle(8);
	Check b{"Bell numbers up to 8 legs", true, 0, "", rep, ""};
	for (int n = 0; n <= 8; ++n) {
		auto count = enumerate_partitions(FaceWord(n, 'w')).size();
		b.detail += (n ? " " : "") + std::to_string(count);
		if (count != bell[n] || bell_number(n) != bell[n]) {
			b.pass = false;
			b.witness = "n=" + std::to_string(n);
		}
	}
	r.checks.push_back(b);
	Check c{"noncrossing on one face: Catalan numbers", true, 0, "", rep, ""};
	for (char f : kTwoFaces)
		for (int n = 1; n <= 8; ++n) {
			// binom(2n, n) / (n + 1); the partial products binom(n + k, k) are integral
			std::uint64_t catalan = 1;
			for (int k = 1; k <= n; ++k)
				catalan = catalan * (n + k) / k;
			catalan /= n + 1;
			auto parts = enumerate_partitions(FaceWord(n, f));
			auto nc = std::count_if(parts.begin(), parts.end(), [](const Partition& p) { return member(ClassId::NC, p); });
			if (std::uint64_t(nc) != catalan) {
				c.pass = false;
				c.witness = FaceWord(n, f);
			}
			if (f == 'w')
				c.detail += (n > 1 ? " " : "") + std::to_string(nc);
		}
	r.checks.push_back(c);
	Check col{"colored partitions: Bell(n) * 2^n", true, 0, "", rep, ""};
	for (int n = 1; n <= 6; ++n) {
		std::size_t total = 0;
		for (const auto& w : enumerate_words(n))
			total += enumerate_partitions(w).size();
		if (total != bell[n] << n) {
			col.pass = false;
			col.witness = "n=" + std::to_string(n);
		}
	}
	r.checks.push_back(col);
}

const std::map<std::string, void (*)(VerifyReport&)>& suite_table() {
	static const std::map<std::string, void (*)(VerifyReport&)> t{
	    {"classification", suite_classification}, {"admissibility", suite_admissibility},
	    {"hasse", suite_hasse},                   {"example", suite_example},
	    {"reconstruction", suite_reconstruction}, {"combinatorial", suite_combinatorial},
	    {"fusion", suite_fusion},               {"units", suite_units},
	    {"cumulants", suite_cumulants},           {"counting", suite_counting},
	};
	return t;
}

} // namespace

std::vector<std::string> verify_suites() {
	return {"classification", "admissibility", "hasse",     "example",   "reconstruction",
	        "combinatorial",  "fusion",       "units",     "cumulants", "counting"};
}

VerifyReport run_suite(const std::string& suite, std::uint64_t seed) {
	VerifyReport r{suite, seed, {}};
	if (suite == "all") {
		for (const auto& s : verify_suites()) {
			VerifyReport part{s, seed, {}};
			suite_table().at(s)(part);
			for (auto& c : part.checks) {
				c.name = s + ": " + c.name;
				r.checks.push_back(std::move(c));
			}
		}
		return r;
	}
	auto it = suite_table().find(suite);
	if (it == suite_table().end())
		input_error("unknown suite " + suite);
	it->second(r);
	return r;
}

} // namespace mfprod
