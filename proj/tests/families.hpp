// Weight families used across the tests, including the negative controls.
#pragma once

#include <cmath>
#include <vector>

#include "mfprod/classification.hpp"
#include "mfprod/verify.hpp"
#include "mfprod/weights.hpp"

namespace mfprod::testing {

inline std::vector<WeightFamily> class_families() {
	std::vector<WeightFamily> out;
	for (auto c : kAllClasses)
		out.push_back(WeightFamily::class_indicator(c));
	return out;
}

inline std::vector<WeightFamily> deformed_families(Complex zeta) {
	return {WeightFamily::deformed(DeformedKind::tensor, zeta), WeightFamily::deformed(DeformedKind::free, zeta),
	        WeightFamily::deformed(DeformedKind::bifree, zeta)};
}

// The 12 classes plus the three deformations at zeta = i.
inline std::vector<WeightFamily> all_families() {
	auto out = class_families();
	for (auto& f : deformed_families(Complex(0, 1)))
		out.push_back(f);
	return out;
}

using mfprod::mirror_asymmetric_family;
using mfprod::nc_two_blocks;
using mfprod::nc_two_blocks_family;

} // namespace mfprod::testing
