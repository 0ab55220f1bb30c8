/*
 * c_api.cpp
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

#include "mfprod/mfprod.h"

#include <cstring>
#include <new>

#include "mfprod/json_io.hpp"

struct mfp_partition {
	mfprod::Partition value;
};
struct mfp_family {
	mfprod::WeightFamily value;
};
struct mfp_table {
	mfprod::Table value;
};

namespace {

using namespace mfprod;

thread_local std::string last_error;

constexpr int kMaxEnumerateLegs = 12;

char* dup(const std::string& s) {
	char* out = static_cast<char*>(std::malloc(s.size() + 1));
	if (!out)
		throw std::bad_alloc();
	std::memcpy(out, s.c_str(), s.size() + 1);
	return out;
}

template <class F>
mfp_status guard(F&& f) {
	last_error.clear();
	try {
		return f();
	} catch (const Error& e) {
		last_error = e.what();
		switch (e.kind()) {
		case ErrorKind::input:
			return MFP_ERR_INPUT;
		case ErrorKind::budget:
			return MFP_ERR_BUDGET;
		default:
			return MFP_ERR_INTERNAL;
		}
	} catch (const nlohmann::json::exception& e) {
		last_error = std::string("JSON: ") + e.what();
		return MFP_ERR_INPUT;
	} catch (const std::bad_alloc&) {
		last_error = "out of memory";
		return MFP_ERR_BUDGET;
	} catch (const std::exception& e) {
		last_error = e.what();
		return MFP_ERR_INTERNAL;
	}
}

void need(const void* p, const char* what) {
	if (!p)
		input_error(std::string(what) + " is null");
}

ClassId class_arg(const char* name) {
	need(name, "class name");
	auto c = class_from_name(name);
	if (!c)
		input_error(std::string("unknown class ") + name);
	return *c;
}

mfp_status emit(const Json& j, char** out) {
	need(out, "output pointer");
	*out = dup(j.dump());
	return MFP_OK;
}

} // namespace

extern "C" {

const char* mfp_version(void) {
	return "1.0.0";
}

const char* mfp_last_error(void) {
	return last_error.c_str();
}

void mfp_string_free(char* s) {
	std::free(s);
}

mfp_status mfp_partition_parse(const char* diagram, mfp_partition** out) {
	return guard([&] {
		need(diagram, "diagram");
		need(out, "output pointer");
		*out = new mfp_partition{parse_diagram(diagram)};
		return MFP_OK;
	});
}

void mfp_partition_free(mfp_partition* p) {
	delete p;
}

int mfp_partition_size(const mfp_partition* p) {
	return p ? p->value.size() : -1;
}

int mfp_partition_block_count(const mfp_partition* p) {
	return p ? p->value.block_count() : -1;
}

mfp_status mfp_partition_format(const mfp_partition* p, char** out) {
	return guard([&] {
		need(p, "partition");
		need(out, "output pointer");
		*out = dup(format_diagram(p->value));
		return MFP_OK;
	});
}

mfp_status mfp_partition_reduce(const mfp_partition* p, mfp_partition** out) {
	return guard([&] {
		need(p, "partition");
		need(out, "output pointer");
		*out = new mfp_partition{reduce(p->value)};
		return MFP_OK;
	});
}

mfp_status mfp_partition_mirror(const mfp_partition* p, mfp_partition** out) {
	return guard([&] {
		need(p, "partition");
		need(out, "output pointer");
		*out = new mfp_partition{mirror(p->value)};
		return MFP_OK;
	});
}

mfp_status mfp_partition_member(const mfp_partition* p, const char* cls, int* out) {
	return guard([&] {
		need(p, "partition");
		need(out, "output pointer");
		*out = member(class_arg(cls), p->value) ? 1 : 0;
		return MFP_OK;
	});
}

mfp_status mfp_family_from_json(const char* json, mfp_family** out) {
	return guard([&] {
		need(json, "family JSON");
		need(out, "output pointer");
		*out = new mfp_family{family_from_json(parse_json(json))};
		return MFP_OK;
	});
}

void mfp_family_free(mfp_family* f) {
	delete f;
}

mfp_status mfp_family_evaluate(const mfp_family* f, const mfp_partition* p, double* re, double* im) {
	return guard([&] {
		need(f, "family");
		need(p, "partition");
		need(re, "output pointer");
		need(im, "output pointer");
		Complex z = f->value.evaluate(p->value);
		*re = z.real();
		*im = z.imag();
		return MFP_OK;
	});
}

mfp_status mfp_table_from_json(const char* json, mfp_table** out) {
	return guard([&] {
		need(json, "table JSON");
		need(out, "output pointer");
		*out = new mfp_table{table_from_json(parse_json(json))};
		return MFP_OK;
	});
}

void mfp_table_free(mfp_table* t) {
	delete t;
}

mfp_status mfp_table_to_json(const mfp_table* t, char** out) {
	return guard([&] {
		need(t, "table");
		return emit(to_json(t->value), out);
	});
}

mfp_status mfp_table_exp(const mfp_family* f, const mfp_table* t, mfp_table** out) {
	return guard([&] {
		need(f, "family");
		need(t, "table");
		need(out, "output pointer");
		*out = new mfp_table{exp_alpha(f->value, t->value)};
		return MFP_OK;
	});
}

mfp_status mfp_table_log(const mfp_family* f, const mfp_table* t, mfp_table** out) {
	return guard([&] {
		need(f, "family");
		need(t, "table");
		need(out, "output pointer");
		*out = new mfp_table{log_alpha(f->value, t->value)};
		return MFP_OK;
	});
}

mfp_status mfp_enumerate(const char* word, const char* cls, char** out) {
	return guard([&] {
		need(word, "word");
		std::string w(word);
		check_alphabet(w);
		if (int(w.size()) > kMaxEnumerateLegs)
			budget_error("enumeration is limited to " + std::to_string(kMaxEnumerateLegs) + " legs");
		std::optional<ClassId> c;
		if (cls)
			c = class_arg(cls);
		Json list = Json::array();
		for (const auto& p : enumerate_partitions(w))
			if (!c || member(*c, p))
				list.push_back(format_diagram(p));
		Json j{{"word", w}, {"class", c ? Json(std::string(class_name(*c))) : Json(nullptr)}, {"count", list.size()},
		       {"partitions", list}};
		return emit(j, out);
	});
}

mfp_status mfp_member(const char* cls, const char* diagram, char** out) {
	return guard([&] {
		need(diagram, "diagram");
		ClassId c = class_arg(cls);
		Partition p = parse_diagram(diagram);
		return emit(Json{{"class", std::string(class_name(c))}, {"partition", format_diagram(p)}, {"member", member(c, p)}},
		            out);
	});
}

mfp_status mfp_check_admissible(const char* family_json, int max_legs, char** out) {
	return guard([&] {
		need(family_json, "family JSON");
		auto fam = family_from_json(parse_json(family_json));
		auto r = check_admissible(fam, max_legs);
		Json j = to_json(r);
		j["max_legs"] = max_legs;
		j["family"] = family_to_json(fam);
		emit(j, out);
		return r.pass ? MFP_OK : MFP_ERR_VERIFICATION;
	});
}

mfp_status mfp_closure(const char* generators_json, int max_legs, char** out) {
	return guard([&] {
		need(generators_json, "generators JSON");
		auto gens = partitions_from_json(parse_json(generators_json));
		auto set = closure_generate(gens, max_legs);
		Json list = Json::array();
		for (const auto& p : set)
			list.push_back(format_diagram(p));
		// name the class when the closure coincides with one
		Json matches = nullptr;
		for (auto c : kAllClasses) {
			auto m = class_members(c, max_legs);
			if (std::set<Partition>(m.begin(), m.end()) == set) {
				matches = std::string(class_name(c));
				break;
			}
		}
		return emit(Json{{"max_legs", max_legs}, {"count", list.size()}, {"class", matches}, {"partitions", list}}, out);
	});
}

mfp_status mfp_classify(const char* basic_json, char** out) {
	return guard([&] {
		need(basic_json, "basic coefficient JSON");
		auto bc = basic_from_json(parse_json(basic_json));
		return emit(to_json(classify_pattern(bc)), out);
	});
}

mfp_status mfp_hasse(int max_legs, char** report, char** dot) {
	return guard([&] {
		auto r = hasse_verify(max_legs);
		if (dot)
			*dot = dup(hasse_dot(r));
		emit(to_json(r), report);
		return r.pass() ? MFP_OK : MFP_ERR_VERIFICATION;
	});
}

mfp_status mfp_product(const char* query_json, unsigned flags, char** out) {
	return guard([&] {
		need(query_json, "query JSON");
		auto q = query_from_json(parse_json(query_json));
		std::vector<Factor<Complex>> factors;
		for (const auto& t : q.factors)
			factors.push_back(as_factor(t));
		std::vector<ExpansionTerm<Complex>> terms;
		Complex v = product_moment(q.family, factors, q.word, (flags & MFP_PRODUCT_EXPLAIN) ? &terms : nullptr);
		Json j{{"value", to_json(v)}};
		if (flags & MFP_PRODUCT_EXPLAIN) {
			Json ex = Json::array();
			for (const auto& t : terms)
				ex.push_back(Json{{"partition", format_diagram(t.partition)},
				                  {"weight", to_json(t.weight)},
				                  {"contribution", to_json(t.contribution)},
				                  {"mixed", t.mixed}});
			j["expansion"] = ex;
		}
		mfp_status status = MFP_OK;
		if (flags & MFP_PRODUCT_COMBINATORIAL) {
			auto c = q.family.class_id();
			if (!c)
				input_error("the combinatorial formula needs a class family");
			auto r = combinatorial_moment(*c, factors, q.word);
			Json maximal = Json::array();
			for (const auto& p : r.maximal)
				maximal.push_back(format_diagram(p));
			double diff = std::abs(r.value - v);
			j["combinatorial"] = Json{{"value", to_json(r.value)},
			                          {"maximal", maximal},
			                          {"terms", r.terms},
			                          {"difference", diff},
			                          {"pass", diff < kEps}};
			if (diff >= kEps)
				status = MFP_ERR_VERIFICATION;
		}
		emit(j, out);
		return status;
	});
}

mfp_status mfp_verify(const char* suite, uint64_t seed, char** out) {
	return guard([&] {
		need(suite, "suite");
		auto r = run_suite(suite, seed);
		emit(to_json(r), out);
		return r.pass() ? MFP_OK : MFP_ERR_VERIFICATION;
	});
}

mfp_status mfp_verify_suites(char** out) {
	return guard([&] {
		Json list = verify_suites();
		list.insert(list.begin(), "all");
		return emit(list, out);
	});
}

} // extern "C"
