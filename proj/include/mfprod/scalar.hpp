/*
 * scalar.hpp
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

#include <algorithm>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mfprod {

using Complex = std::complex<double>;

inline constexpr double kEps = 1e-9;

enum class ErrorKind { input, budget, internal };

class Error : public std::runtime_error {
public:
	Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
	ErrorKind kind() const { return kind_; }

private:
	ErrorKind kind_;
};

[[noreturn]] inline void input_error(const std::string& what) {
	throw Error(ErrorKind::input, what);
}
[[noreturn]] inline void budget_error(const std::string& what) {
	throw Error(ErrorKind::budget, what);
}

inline bool near(Complex a, Complex b, double eps = kEps) {
	return std::abs(a - b) < eps;
}
inline bool near_zero(Complex a, double eps = kEps) {
	return std::abs(a) < eps;
}
inline bool on_unit_circle_or_zero(Complex z, double eps = kEps) {
	return std::abs(z) < eps || std::abs(std::abs(z) - 1.0) < eps;
}

// Multilinear polynomial in k commuting nilpotent markers t_1..t_k (t_i^2 = 0).
// Coefficient of the monomial prod_{i in mask} t_i is stored at index mask.
class MarkerPoly {
public:
	MarkerPoly() = default;
	MarkerPoly(Complex c) : coeff_(1, c) {}
	MarkerPoly(int markers, Complex c) : coeff_(std::size_t(1) << markers, Complex{}) { coeff_[0] = c; }

	static MarkerPoly monomial(int markers, unsigned mask, Complex c) {
		MarkerPoly p(markers, 0.0);
		p.coeff_[mask] = c;
		return p;
	}

	int markers() const {
		int k = 0;
		while ((std::size_t(1) << k) < coeff_.size())
			++k;
		return k;
	}
	Complex coefficient(unsigned mask) const { return mask < coeff_.size() ? coeff_[mask] : Complex{}; }
	Complex top() const { return coeff_.empty() ? Complex{} : coeff_.back(); }

	MarkerPoly& operator+=(const MarkerPoly& o) {
		widen(o.coeff_.size());
		for (std::size_t i = 0; i < o.coeff_.size(); ++i)
			coeff_[i] += o.coeff_[i];
		return *this;
	}
	MarkerPoly& operator-=(const MarkerPoly& o) {
		widen(o.coeff_.size());
		for (std::size_t i = 0; i < o.coeff_.size(); ++i)
			coeff_[i] -= o.coeff_[i];
		return *this;
	}
	friend MarkerPoly operator+(MarkerPoly a, const MarkerPoly& b) { return a += b; }
	friend MarkerPoly operator-(MarkerPoly a, const MarkerPoly& b) { return a -= b; }
	friend MarkerPoly operator*(const MarkerPoly& a, const MarkerPoly& b) {
		MarkerPoly r;
		r.coeff_.assign(std::max(a.coeff_.size(), b.coeff_.size()), Complex{});
		for (std::size_t i = 0; i < a.coeff_.size(); ++i) {
			if (a.coeff_[i] == Complex{})
				continue;
			for (std::size_t j = 0; j < b.coeff_.size(); ++j)
				if ((i & j) == 0)
					r.coeff_[i | j] += a.coeff_[i] * b.coeff_[j];
		}
		return r;
	}
	friend MarkerPoly operator*(Complex c, MarkerPoly a) {
		for (auto& x : a.coeff_)
			x *= c;
		return a;
	}

private:
	void widen(std::size_t n) {
		if (coeff_.size() < n)
			coeff_.resize(n, Complex{});
	}

	std::vector<Complex> coeff_;
};

// Uniform handling of the scalar types used by the transforms.
inline Complex scalar_zero(const Complex&) { return Complex{}; }
inline MarkerPoly scalar_zero(const MarkerPoly&) { return MarkerPoly(Complex{}); }

} // namespace mfprod
