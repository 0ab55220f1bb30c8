// Shared helpers for the test binaries: seeded generators and independent oracles.
#pragma once

#include <random>
#include <set>
#include <vector>

#include "mfprod/partition.hpp"

namespace mfprod::testing {

inline Partition random_partition(std::mt19937_64& rng, int n, std::string_view alphabet = kTwoFaces) {
	std::uniform_int_distribution<int> face(0, int(alphabet.size()) - 1), label(0, n - 1);
	FaceWord w;
	std::vector<int> labels;
	for (int i = 0; i < n; ++i) {
		w.push_back(alphabet[face(rng)]);
		labels.push_back(label(rng));
	}
	return Partition::from_labels(w, labels);
}

// Counts restricted growth strings of length n by filtering all of [n]^n.
inline long rgs_count_bruteforce(int n) {
	if (n == 0)
		return 1;
	std::vector<int> a(n, 0);
	long count = 0;
	while (true) {
		bool ok = a[0] == 0;
		int mx = 0;
		for (int i = 1; i < n && ok; ++i) {
			if (a[i] > mx + 1)
				ok = false;
			mx = std::max(mx, a[i]);
		}
		count += ok;
		int i = n - 1;
		while (i >= 0 && ++a[i] == n)
			a[i--] = 0;
		if (i < 0)
			break;
	}
	return count;
}

// Restricted growth strings of length n that avoid the pattern x y x y.
inline long noncrossing_rgs_bruteforce(int n) {
	if (n == 0)
		return 1;
	std::vector<int> a(n, 0);
	long count = 0;
	while (true) {
		bool ok = a[0] == 0;
		int mx = 0;
		for (int i = 1; i < n && ok; ++i) {
			if (a[i] > mx + 1)
				ok = false;
			mx = std::max(mx, a[i]);
		}
		for (int i = 0; i < n && ok; ++i)
			for (int j = i + 1; j < n && ok; ++j)
				for (int k = j + 1; k < n && ok; ++k)
					for (int l = k + 1; l < n && ok; ++l)
						if (a[i] == a[k] && a[j] == a[l] && a[i] != a[j])
							ok = false;
		count += ok;
		int i = n - 1;
		while (i >= 0 && ++a[i] == n)
			a[i--] = 0;
		if (i < 0)
			break;
	}
	return count;
}

inline long catalan(int n) {
	long c = 1;
	for (int i = 0; i < n; ++i)
		c = c * 2 * (2 * i + 1) / (i + 2);
	return c;
}

inline bool inner_bruteforce(const Partition& p, int leg) {
	for (int i = 1; i < leg; ++i)
		for (int j = leg + 1; j <= p.size(); ++j)
			if (p.block_of(i) == p.block_of(j) && p.block_of(i) != p.block_of(leg))
				return true;
	return false;
}

inline bool cross_bruteforce(const Partition& p, int a, int b) {
	int n = p.size();
	for (int i = 1; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j)
			for (int k = j + 1; k <= n; ++k)
				for (int l = k + 1; l <= n; ++l) {
					int x = p.block_of(i), y = p.block_of(j);
					if (x != y && p.block_of(k) == x && p.block_of(l) == y && ((x == a && y == b) || (x == b && y == a)))
						return true;
				}
	return false;
}

// Transitive closure of the pairwise crossing relation via Floyd-Warshall.
inline bool connected_bruteforce(const Partition& p, int l1, int l2) {
	int k = p.block_count();
	std::vector<std::vector<bool>> r(k, std::vector<bool>(k, false));
	for (int a = 0; a < k; ++a)
		for (int b = 0; b < k; ++b)
			r[a][b] = a == b || cross_bruteforce(p, a, b);
	for (int m = 0; m < k; ++m)
		for (int a = 0; a < k; ++a)
			for (int b = 0; b < k; ++b)
				if (r[a][m] && r[m][b])
					r[a][b] = true;
	return r[p.block_of(l1)][p.block_of(l2)];
}

} // namespace mfprod::testing
