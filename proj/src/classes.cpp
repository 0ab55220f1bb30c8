/*
 * classes.cpp
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

#include "mfprod/classes.hpp"

namespace mfprod {

namespace {

constexpr std::array<std::string_view, 12> kNames = {"I",    "NC",   "biNC",  "IwNCb", "NCwIb", "IwAb",
                                                     "AwIb", "NCwAb", "AwNCb", "pNC",   "pC",    "A"};

bool noncrossing(const Partition& p) {
	for (int a = 0; a < p.block_count(); ++a)
		for (int b = a + 1; b < p.block_count(); ++b)
			if (blocks_cross(p, a, b))
				return false;
	return true;
}

bool binoncrossing(const Partition& p) {
	int n = p.size();
	for (int i = 1; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j)
			for (int k = j + 1; k <= n; ++k)
				for (int l = k + 1; l <= n; ++l) {
					int bi = p.block_of(i), bj = p.block_of(j), bk = p.block_of(k), bl = p.block_of(l);
					if (bi == bk && bj == bl && bi != bj && p.face(j) == p.face(k))
						return false;
					if (bi == bl && bj == bk && bi != bj && p.face(j) != p.face(k))
						return false;
				}
	return true;
}

bool face_legs_outer(const Partition& p, Face f) {
	for (int i = 1; i <= p.size(); ++i)
		if (p.face(i) == f && is_inner(p, i))
			return false;
	return true;
}

// j,k in beta; i,l in gamma != beta; i < k < l; f(k) = w  implies  i < j < l and f(j) = w.
bool noncrossing_arbitrary(const Partition& p) {
	int n = p.size();
	for (int k = 1; k <= n; ++k) {
		if (p.face(k) != 'w')
			continue;
		int beta = p.block_of(k);
		for (int i = 1; i < k; ++i) {
			int gamma = p.block_of(i);
			if (gamma == beta)
				continue;
			for (int l = k + 1; l <= n; ++l) {
				if (p.block_of(l) != gamma)
					continue;
				for (int j = 1; j <= n; ++j)
					if (p.block_of(j) == beta && !(i < j && j < l && p.face(j) == 'w'))
						return false;
			}
		}
	}
	return true;
}

bool pure_noncrossing(const Partition& p) {
	if (!noncrossing(p))
		return false;
	std::vector<int> first_face(p.block_count(), 0);
	std::vector<bool> inner(p.block_count(), false), mono(p.block_count(), true);
	for (int i = 1; i <= p.size(); ++i) {
		int b = p.block_of(i);
		if (!first_face[b])
			first_face[b] = p.face(i);
		else if (first_face[b] != p.face(i))
			mono[b] = false;
		if (is_inner(p, i))
			inner[b] = true;
	}
	for (int b = 0; b < p.block_count(); ++b)
		if (inner[b] && !mono[b])
			return false;
	return true;
}

// Crossing or nesting pair of distinct blocks: the two middle legs share a face.
bool pure_crossing(const Partition& p) {
	int n = p.size();
	for (int i = 1; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j)
			for (int k = j + 1; k <= n; ++k)
				for (int l = k + 1; l <= n; ++l) {
					int bi = p.block_of(i), bj = p.block_of(j);
					if (bi == bj || p.face(j) == p.face(k))
						continue;
					if ((bi == p.block_of(k) && bj == p.block_of(l)) || (bi == p.block_of(l) && bj == p.block_of(k)))
						return false;
				}
	return true;
}

} // namespace

bool connected_inner_legs_monochrome(const Partition& p) {
	auto comp = crossing_components(p);
	std::vector<int> color(p.block_count(), 0);
	for (int i = 1; i <= p.size(); ++i) {
		if (!is_inner(p, i))
			continue;
		int& c = color[comp[p.block_of(i)]];
		if (!c)
			c = p.face(i);
		else if (c != p.face(i))
			return false;
	}
	return true;
}

std::string_view class_name(ClassId c) {
	return kNames[int(c)];
}

std::optional<ClassId> class_from_name(std::string_view name) {
	for (int i = 0; i < 12; ++i)
		if (kNames[i] == name)
			return ClassId(i);
	return std::nullopt;
}

ClassId swap(ClassId c) {
	switch (c) {
	case ClassId::IwNCb:
		return ClassId::NCwIb;
	case ClassId::NCwIb:
		return ClassId::IwNCb;
	case ClassId::IwAb:
		return ClassId::AwIb;
	case ClassId::AwIb:
		return ClassId::IwAb;
	case ClassId::NCwAb:
		return ClassId::AwNCb;
	case ClassId::AwNCb:
		return ClassId::NCwAb;
	default:
		return c;
	}
}

bool member(ClassId c, const Partition& p) {
	check_alphabet(p.word(), kTwoFaces);
	switch (c) {
	case ClassId::I:
		return is_interval(p);
	case ClassId::NC:
		return noncrossing(p);
	case ClassId::biNC:
		return binoncrossing(p);
	case ClassId::IwNCb:
		return noncrossing(p) && face_legs_outer(p, 'w');
	case ClassId::IwAb:
		return face_legs_outer(p, 'w');
	case ClassId::NCwAb:
		return noncrossing_arbitrary(p);
	case ClassId::NCwIb:
	case ClassId::AwIb:
	case ClassId::AwNCb:
		return member(swap(c), swap_faces(p));
	case ClassId::pNC:
		return pure_noncrossing(p);
	case ClassId::pC:
		return pure_crossing(p);
	case ClassId::A:
		return true;
	}
	return false;
}

} // namespace mfprod
