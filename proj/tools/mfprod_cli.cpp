/*
 * mfprod_cli.cpp
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

// Command-line front end. Talks to the library only through the C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mfprod/mfprod.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kDefaultMaxLegs = 6;

struct Owned {
	char* s = nullptr;
	~Owned() { mfp_string_free(s); }
	std::string str() const { return s ? s : ""; }
};

// Inline JSON when the argument looks like JSON, otherwise a file path.
std::string json_argument(const std::string& arg) {
	auto first = arg.find_first_not_of(" \t\r\n");
	if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[' || arg[first] == '"'))
		return arg;
	std::ifstream in(arg);
	if (!in)
		throw std::runtime_error("cannot read " + arg + " (expected a JSON file or inline JSON)");
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void warn_legs(int max_legs) {
	if (max_legs > kDefaultMaxLegs)
		std::cerr << "warning: max-legs " << max_legs << " enumerates far more partitions than the default "
		          << kDefaultMaxLegs << "; expect long run times\n";
}

std::string complex_text(const Json& z) {
	std::ostringstream os;
	os.precision(12);
	double re = z.at("re").get<double>(), im = z.at("im").get<double>();
	os << re;
	if (im != 0)
		os << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
	return os.str();
}

// Exit status follows the library status: 1 input, 2 verification, 3 budget.
int finish(mfp_status st, const std::string& out, bool pretty, void (*render)(const Json&)) {
	if (st != MFP_OK && st != MFP_ERR_VERIFICATION) {
		std::cerr << "error: " << mfp_last_error() << "\n";
		return int(st);
	}
	if (pretty && render)
		render(Json::parse(out));
	else
		std::cout << out << "\n";
	return int(st);
}

void render_enumerate(const Json& j) {
	for (const auto& p : j.at("partitions"))
		std::cout << p.get<std::string>() << "\n";
	std::cout << j.at("count").get<long>() << " partitions\n";
}

void render_admissible(const Json& j) {
	if (j.at("pass").get<bool>()) {
		std::cout << "pass (" << j.at("checked").get<long>() << " checks up to " << j.at("max_legs").get<int>()
		          << " legs)\n";
		return;
	}
	std::cout << "fail: condition " << j.at("condition").get<std::string>() << "\n";
	if (!j.at("witness").is_null())
		std::cout << "witness: " << j.at("witness").get<std::string>() << "\n";
	std::cout << j.at("detail").get<std::string>() << "\n";
}

void render_closure(const Json& j) {
	for (const auto& p : j.at("partitions"))
		std::cout << p.get<std::string>() << "\n";
	std::cout << j.at("count").get<long>() << " partitions";
	if (!j.at("class").is_null())
		std::cout << " (class " << j.at("class").get<std::string>() << ")";
	std::cout << "\n";
}

void render_classify(const Json& j) {
	std::cout << j.at("result").get<std::string>() << "\n";
}

void render_hasse(const Json& j) {
	for (const auto& e : j.at("edges"))
		std::cout << e.at("from").get<std::string>() << " < " << e.at("to").get<std::string>() << "  witness "
		          << (e.at("witness").is_null() ? "-" : e.at("witness").get<std::string>()) << "\n";
	for (const auto& i : j.at("incomparable"))
		std::cout << i.at("a").get<std::string>() << " || " << i.at("b").get<std::string>() << "\n";
	for (const auto& v : j.at("violations"))
		std::cout << "violation: " << v.get<std::string>() << "\n";
	std::cout << (j.at("pass").get<bool>() ? "pass" : "fail") << "\n";
}

void render_product(const Json& j) {
	if (j.contains("expansion"))
		for (const auto& t : j.at("expansion")) {
			if (t.at("mixed").get<bool>())
				continue;
			std::cout << t.at("partition").get<std::string>() << "  weight " << complex_text(t.at("weight"))
			          << "  contribution " << complex_text(t.at("contribution")) << "\n";
		}
	std::cout << "value " << complex_text(j.at("value")) << "\n";
	if (j.contains("combinatorial")) {
		const auto& c = j.at("combinatorial");
		std::cout << "inclusion-exclusion " << complex_text(c.at("value")) << " over " << c.at("maximal").size()
		          << " coarsest refinements, difference " << c.at("difference").get<double>() << "\n";
	}
}

void render_verify(const Json& j) {
	for (const auto& c : j.at("checks")) {
		std::cout << (c.at("pass").get<bool>() ? "PASS  " : "FAIL  ") << c.at("name").get<std::string>();
		if (c.at("max_error").get<double>() > 0)
			std::cout << "  (max error " << c.at("max_error").get<double>() << ")";
		std::cout << "\n";
		if (!c.at("pass").get<bool>()) {
			if (!c.at("witness").is_null())
				std::cout << "      witness: " << c.at("witness").get<std::string>() << "\n";
			std::cout << "      reproduce: " << c.at("reproduce").get<std::string>() << "\n";
		}
	}
	std::cout << (j.at("pass").get<bool>() ? "suite passed" : "suite FAILED") << "\n";
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"Multi-faced partitions, admissible weights and universal products"};
	app.require_subcommand(1);
	app.fallthrough();
	bool pretty = false;
	app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");

	std::string word, cls, partition, family, generators, basic, dot, query, suite = "all";
	int max_legs = kDefaultMaxLegs;
	std::uint64_t seed = 0;
	bool explain = false, combinatorial = false;
	auto legs = CLI::Range(1, 8);

	auto* en = app.add_subcommand("enumerate", "List the partitions of a face word");
	en->add_option("--word", word, "Face word over {w,b}")->required();
	en->add_option("--class", cls, "Keep only members of this class");

	auto* me = app.add_subcommand("member", "Test class membership");
	me->add_option("--class", cls)->required();
	me->add_option("--partition", partition, "Diagram such as wbwb/13|24")->required();

	auto* ad = app.add_subcommand("check-admissible", "Check conditions (i)-(vi) of a weight family");
	ad->add_option("--family", family, "Family JSON, inline or file")->required();
	ad->add_option("--max-legs", max_legs)->check(legs);

	auto* cl = app.add_subcommand("closure", "Close a set of partitions under the class operations");
	cl->add_option("--generators", generators, "JSON list of diagrams, inline or file")->required();
	cl->add_option("--max-legs", max_legs)->check(legs);

	auto* cf = app.add_subcommand("classify", "Classify basic coefficients");
	cf->add_option("--basic", basic, "Basic coefficient JSON, inline or file")->required();

	auto* ha = app.add_subcommand("hasse", "Verify the containment diagram of the classes");
	ha->add_option("--max-legs", max_legs)->check(CLI::Range(1, 7));
	ha->add_option("--dot", dot, "Write the diagram in DOT format to this file");

	auto* pr = app.add_subcommand("product", "Joint moment of independent functionals");
	pr->add_option("--query", query, "Product query JSON, inline or file")->required();
	pr->add_flag("--explain", explain, "Dump the partition expansion");
	pr->add_flag("--combinatorial", combinatorial, "Cross-check with the inclusion-exclusion formula");

	auto* ve = app.add_subcommand("verify", "Run verification suites");
	ve->add_option("--suite", suite, "all, classification, admissibility, hasse, example, reconstruction, combinatorial, "
	                                 "fusion, units, cumulants or counting");
	ve->add_option("--seed", seed);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? 0 : 1;
	}

	try {
		Owned out;
		if (en->parsed()) {
			auto st = mfp_enumerate(word.c_str(), cls.empty() ? nullptr : cls.c_str(), &out.s);
			return finish(st, out.str(), pretty, render_enumerate);
		}
		if (me->parsed()) {
			auto st = mfp_member(cls.c_str(), partition.c_str(), &out.s);
			if (st != MFP_OK)
				return finish(st, "", pretty, nullptr);
			std::cout << (Json::parse(out.str()).at("member").get<bool>() ? "true" : "false") << "\n";
			return 0;
		}
		if (ad->parsed()) {
			warn_legs(max_legs);
			auto st = mfp_check_admissible(json_argument(family).c_str(), max_legs, &out.s);
			return finish(st, out.str(), pretty, render_admissible);
		}
		if (cl->parsed()) {
			warn_legs(max_legs);
			auto st = mfp_closure(json_argument(generators).c_str(), max_legs, &out.s);
			return finish(st, out.str(), pretty, render_closure);
		}
		if (cf->parsed()) {
			auto st = mfp_classify(json_argument(basic).c_str(), &out.s);
			return finish(st, out.str(), pretty, render_classify);
		}
		if (ha->parsed()) {
			warn_legs(max_legs);
			Owned d;
			auto st = mfp_hasse(max_legs, &out.s, dot.empty() ? nullptr : &d.s);
			if (!dot.empty() && d.s) {
				std::ofstream f(dot);
				if (!f) {
					std::cerr << "error: cannot write " << dot << "\n";
					return 1;
				}
				f << d.s;
			}
			return finish(st, out.str(), pretty, render_hasse);
		}
		if (pr->parsed()) {
			unsigned flags = (explain ? unsigned(MFP_PRODUCT_EXPLAIN) : 0u) | (combinatorial ? unsigned(MFP_PRODUCT_COMBINATORIAL) : 0u);
			auto st = mfp_product(json_argument(query).c_str(), flags, &out.s);
			return finish(st, out.str(), pretty, render_product);
		}
		if (ve->parsed()) {
			auto st = mfp_verify(suite.c_str(), seed, &out.s);
			return finish(st, out.str(), pretty, render_verify);
		}
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return 1;
}
