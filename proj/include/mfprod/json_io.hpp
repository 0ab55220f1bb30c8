/*
 * json_io.hpp
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

#pragma once

#include <json.hpp>

#include "mfprod/classification.hpp"
#include "mfprod/product.hpp"
#include "mfprod/verify.hpp"

namespace mfprod {

using Json = nlohmann::ordered_json;

// Parse errors and schema violations surface as input errors.
Json parse_json(const std::string& text);

Json to_json(Complex z);
// A plain number, {"re": .., "im": ..} or [re, im].
Complex complex_from_json(const Json& j);

Partition partition_from_json(const Json& j);
std::vector<Partition> partitions_from_json(const Json& j);

// {"nu_w": .., "nu_b": .., "nu_wb": .., "xi_w": .., "xi_b": .., "xi_wb": ..}
BasicCoefficients basic_from_json(const Json& j);
Json to_json(const BasicCoefficients& bc);

// {"class": "NC"}, {"deformed": "tensor", "zeta": z}, {"basic": {...}} or
// {"table": [{"partition": "..", "weight": z}, ...], "max_legs": n}. A bare
// string names a class.
WeightFamily family_from_json(const Json& j);
Json family_to_json(const WeightFamily& f);

// {"degree_bound": d, "generators": [{"face": "w", "name": "a1"}, ...],
//  "values": [{"word": [["w", "a1"], ...], "value": z}, ...]}
// Optional "default" fills missing words; optional "random": seed draws all values.
Table table_from_json(const Json& j);
Json to_json(const Table& t);

struct ProductQuery {
	WeightFamily family;
	std::vector<Table> factors;
	TaggedWord word;
};
ProductQuery query_from_json(const Json& j);

Json to_json(const AdmissibilityReport& r);
Json to_json(const HasseReport& r);
Json to_json(const VerifyReport& r);
Json to_json(const Classification& c);

} // namespace mfprod
