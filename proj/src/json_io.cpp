/*
 * json_io.cpp
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

#include "mfprod/json_io.hpp"

#include <set>

namespace mfprod {

namespace {
const Json& field(const Json& j, const char* key) {
	if (!j.is_object() || !j.contains(key))
		input_error(std::string("missing field \"") + key + "\"");
	return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
	const auto& v = field(j, key);
	if (!v.is_string())
		input_error(std::string("field \"") + key + "\" must be a string");
	return v.get<std::string>();
}

int int_field(const Json& j, const char* key) {
	const auto& v = field(j, key);
	if (!v.is_number_integer())
		input_error(std::string("field \"") + key + "\" must be an integer");
	return v.get<int>();
}

Face face_from_json(const Json& j) {
	if (!j.is_string() || j.get<std::string>().size() != 1)
		input_error("a face is a one-letter string");
	return j.get<std::string>()[0];
}
} // namespace

Json parse_json(const std::string& text) {
	try {
		return Json::parse(text);
	} catch (const nlohmann::json::exception& e) {
		input_error(std::string("malformed JSON: ") + e.what());
	}
}

Json to_json(Complex z) {
	return Json{{"re", z.real()}, {"im", z.imag()}};
}

Complex complex_from_json(const Json& j) {
	if (j.is_number())
		return j.get<double>();
	if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
		return {j[0].get<double>(), j[1].get<double>()};
	if (j.is_object() && j.contains("re")) {
		double im = 0;
		if (j.contains("im")) {
			if (!j.at("im").is_number())
				input_error("complex \"im\" must be a number");
			im = j.at("im").get<double>();
		}
		if (!j.at("re").is_number())
			input_error("complex \"re\" must be a number");
		return {j.at("re").get<double>(), im};
	}
	input_error("expected a number, [re, im] or {\"re\", \"im\"}");
}

Partition partition_from_json(const Json& j) {
	if (!j.is_string())
		input_error("a partition is a diagram string such as \"wbwb/13|24\"");
	return parse_diagram(j.get<std::string>());
}

std::vector<Partition> partitions_from_json(const Json& j) {
	const Json& list = j.is_object() ? field(j, "generators") : j;
	if (!list.is_array())
		input_error("expected a list of partition diagrams");
	std::vector<Partition> out;
	for (const auto& e : list)
		out.push_back(partition_from_json(e));
	return out;
}

BasicCoefficients basic_from_json(const Json& j) {
	static const char* keys[] = {"nu_w", "nu_b", "nu_wb", "xi_w", "xi_b", "xi_wb"};
	Complex v[6];
	for (int i = 0; i < 6; ++i)
		v[i] = complex_from_json(field(j, keys[i]));
	return BasicCoefficients::two_faced(v[0], v[1], v[2], v[3], v[4], v[5]);
}

Json to_json(const BasicCoefficients& bc) {
	static const char* keys[] = {"nu_w", "nu_b", "nu_wb", "xi_w", "xi_b", "xi_wb"};
	auto p = bc.pattern();
	Json j = Json::object();
	for (int i = 0; i < 6; ++i)
		j[keys[i]] = to_json(p[i]);
	return j;
}

WeightFamily family_from_json(const Json& j) {
	if (j.is_string()) {
		auto c = class_from_name(j.get<std::string>());
		if (!c)
			input_error("unknown class " + j.get<std::string>());
		return WeightFamily::class_indicator(*c);
	}
	if (!j.is_object())
		input_error("a weight family is an object or a class name");
	if (j.contains("class"))
		return family_from_json(j.at("class"));
	if (j.contains("deformed")) {
		auto k = deformed_from_name(string_field(j, "deformed"));
		if (!k)
			input_error("unknown deformation " + j.at("deformed").get<std::string>());
		return WeightFamily::deformed(*k, complex_from_json(field(j, "zeta")));
	}
	if (j.contains("basic")) {
		std::string label = j.contains("label") ? string_field(j, "label") : "basic";
		return WeightFamily::basic(basic_from_json(j.at("basic")), label);
	}
	if (j.contains("table")) {
		std::map<Partition, Complex> entries;
		const auto& list = j.at("table");
		if (!list.is_array())
			input_error("\"table\" must be a list of {partition, weight}");
		for (const auto& e : list) {
			Partition p = partition_from_json(field(e, "partition"));
			if (!entries.emplace(p, complex_from_json(field(e, "weight"))).second)
				input_error("duplicate table entry " + format_diagram(p));
		}
		return WeightFamily::table(std::move(entries), int_field(j, "max_legs"));
	}
	input_error("weight family needs one of \"class\", \"deformed\", \"basic\" or \"table\"");
}

Json family_to_json(const WeightFamily& f) {
	if (auto c = f.class_id())
		return Json{{"class", std::string(class_name(*c))}};
	if (auto d = f.deformation())
		return Json{{"deformed", std::string(deformed_name(d->first))}, {"zeta", to_json(d->second)}};
	if (const auto* bc = f.coefficients())
		return Json{{"basic", to_json(*bc)}, {"label", f.label()}};
	if (const auto* entries = f.entries()) {
		Json list = Json::array();
		for (const auto& [p, w] : *entries)
			list.push_back(Json{{"partition", format_diagram(p)}, {"weight", to_json(w)}});
		return Json{{"table", list}, {"max_legs", *f.max_legs()}};
	}
	return Json{{"function", f.label()}};
}

Table table_from_json(const Json& j) {
	int degree = int_field(j, "degree_bound");
	const auto& gl = field(j, "generators");
	if (!gl.is_array())
		input_error("\"generators\" must be a list");
	std::vector<Generator> gens;
	for (const auto& g : gl)
		gens.push_back({face_from_json(field(g, "face")), string_field(g, "name")});
	for (const auto& g : gens)
		check_alphabet(FaceWord(1, g.face));
	if (j.contains("random")) {
		if (j.contains("values"))
			input_error("a table takes either \"values\" or \"random\"");
		const auto& seed = j.at("random");
		if (!seed.is_number_unsigned() && !seed.is_number_integer())
			input_error("\"random\" must be an integer seed");
		std::mt19937_64 rng(seed.get<std::uint64_t>());
		return random_table(std::move(gens), degree, rng);
	}
	Table t(std::move(gens), degree);
	std::vector<std::vector<bool>> seen(degree + 1);
	for (int n = 1; n <= degree; ++n)
		seen[n].assign(t.count(n), false);
	if (j.contains("values")) {
		const auto& values = j.at("values");
		if (!values.is_array())
			input_error("\"values\" must be a list");
		for (const auto& e : values) {
			const auto& wl = field(e, "word");
			if (!wl.is_array() || wl.empty())
				input_error("a table word is a nonempty list of [face, name] pairs");
			Word w;
			for (const auto& letter : wl) {
				if (!letter.is_array() || letter.size() != 2 || !letter[1].is_string())
					input_error("a letter is a [face, name] pair");
				int g = t.generator_index(face_from_json(letter[0]), letter[1].get<std::string>());
				if (g < 0)
					input_error("letter " + letter.dump() + " is not a declared generator");
				w.push_back(g);
			}
			if (int(w.size()) > degree)
				input_error("table word longer than degree_bound");
			auto idx = t.index_of(w);
			if (seen[w.size()][idx])
				input_error("duplicate table word " + wl.dump());
			seen[w.size()][idx] = true;
			t.at(int(w.size()), idx) = complex_from_json(field(e, "value"));
		}
	}
	std::optional<Complex> fill;
	if (j.contains("default"))
		fill = complex_from_json(j.at("default"));
	for (int n = 1; n <= degree; ++n)
		for (std::size_t i = 0; i < t.count(n); ++i)
			if (!seen[n][i]) {
				if (!fill) {
					Json missing = Json::array();
					for (int g : t.word_at(n, i))
						missing.push_back(Json::array({std::string(1, t.generators()[g].face), t.generators()[g].name}));
					input_error("table has no value for word " + missing.dump());
				}
				t.at(n, i) = *fill;
			}
	return t;
}

Json to_json(const Table& t) {
	Json gens = Json::array();
	for (const auto& g : t.generators())
		gens.push_back(Json{{"face", std::string(1, g.face)}, {"name", g.name}});
	Json values = Json::array();
	for (int n = 1; n <= t.degree_bound(); ++n)
		for (std::size_t i = 0; i < t.count(n); ++i) {
			Json w = Json::array();
			for (int g : t.word_at(n, i))
				w.push_back(Json::array({std::string(1, t.generators()[g].face), t.generators()[g].name}));
			values.push_back(Json{{"word", w}, {"value", to_json(t.at(n, i))}});
		}
	return Json{{"degree_bound", t.degree_bound()}, {"generators", gens}, {"values", values}};
}

ProductQuery query_from_json(const Json& j) {
	ProductQuery q{family_from_json(field(j, "family")), {}, {}};
	const auto& fl = field(j, "factors");
	if (!fl.is_array() || fl.empty())
		input_error("\"factors\" must be a nonempty list of moment tables");
	if (int(fl.size()) > kMaxFactors)
		budget_error("at most " + std::to_string(kMaxFactors) + " factors");
	std::set<std::pair<Face, std::string>> names;
	for (const auto& f : fl) {
		q.factors.push_back(table_from_json(f));
		for (const auto& g : q.factors.back().generators())
			if (!names.insert({g.face, g.name}).second)
				input_error("generator " + std::string(1, g.face) + ":" + g.name + " appears in two factors");
	}
	const auto& wl = field(j, "word");
	if (!wl.is_array())
		input_error("\"word\" must be a list of letters");
	for (const auto& l : wl) {
		int k = int_field(l, "factor");
		if (k < 1 || k > int(q.factors.size()))
			input_error("letter factor " + std::to_string(k) + " out of range");
		int g = q.factors[k - 1].generator_index(face_from_json(field(l, "face")), string_field(l, "name"));
		if (g < 0)
			input_error("letter " + l.dump() + " is not a generator of factor " + std::to_string(k));
		q.word.push_back({k - 1, g});
	}
	return q;
}

namespace {
Json optional_partition(const std::optional<Partition>& p) {
	return p ? Json(format_diagram(*p)) : Json(nullptr);
}
} // namespace

Json to_json(const AdmissibilityReport& r) {
	Json j{{"pass", r.pass}, {"checked", r.checked}};
	if (!r.pass) {
		j["condition"] = r.condition;
		j["witness"] = optional_partition(r.witness);
		j["detail"] = r.detail;
	}
	return j;
}

Json to_json(const HasseReport& r) {
	Json edges = Json::array();
	for (const auto& e : r.edges)
		edges.push_back(Json{{"from", std::string(class_name(e.from))},
		                     {"to", std::string(class_name(e.to))},
		                     {"witness", optional_partition(e.witness)}});
	Json inc = Json::array();
	for (const auto& i : r.incomparable)
		inc.push_back(Json{{"a", std::string(class_name(i.a))},
		                   {"b", std::string(class_name(i.b))},
		                   {"a_not_b", optional_partition(i.a_not_b)},
		                   {"b_not_a", optional_partition(i.b_not_a)}});
	Json card = Json::object();
	for (auto c : kAllClasses)
		card[std::string(class_name(c))] = r.cardinality[int(c)];
	return Json{{"max_legs", r.max_legs}, {"pass", r.pass()},   {"edges", edges},
	            {"incomparable", inc},   {"cardinality", card}, {"violations", r.violations}};
}

Json to_json(const VerifyReport& r) {
	Json checks = Json::array();
	for (const auto& c : r.checks) {
		Json e{{"name", c.name}, {"pass", c.pass}, {"max_error", c.max_error}};
		e["witness"] = c.witness.empty() ? Json(nullptr) : Json(c.witness);
		e["reproduce"] = c.reproduce;
		if (!c.detail.empty())
			e["detail"] = c.detail;
		checks.push_back(std::move(e));
	}
	return Json{{"suite", r.suite}, {"seed", r.seed}, {"checks", checks}, {"pass", r.pass()}};
}

Json to_json(const Classification& c) {
	if (std::holds_alternative<ClassId>(c))
		return Json{{"result", std::string(class_name(std::get<ClassId>(c)))}, {"class", std::string(class_name(std::get<ClassId>(c)))}};
	if (std::holds_alternative<Deformation>(c)) {
		const auto& d = std::get<Deformation>(c);
		return Json{{"result", classification_string(c)},
		            {"deformed", std::string(deformed_name(d.kind))},
		            {"zeta", to_json(d.zeta)}};
	}
	return Json{{"result", "none"}};
}

} // namespace mfprod
