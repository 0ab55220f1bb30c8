/*
 * partition.hpp
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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mfprod/scalar.hpp"

namespace mfprod {

using Face = char;
using FaceWord = std::string;
using Block = std::vector<int>; // 1-based legs, ascending

inline constexpr std::string_view kTwoFaces = "wb";
inline constexpr int kMaxLegs = 16;

// A multi-faced set partition of [n]. Stored as the face word plus a
// restricted growth string: labels()[i] is the block index of leg i+1, and
// blocks are numbered by their minimal leg. That is the canonical form, so
// structural equality is plain member equality.
class Partition {
public:
	Partition() = default;

	// Arbitrary integer labels, canonicalized by first occurrence.
	static Partition from_labels(FaceWord word, const std::vector<int>& labels);
	// 1-based blocks; must be disjoint, nonempty and cover [n].
	static Partition from_blocks(FaceWord word, const std::vector<Block>& blocks);
	static Partition one_block(FaceWord word);
	static Partition singletons(FaceWord word);

	int size() const { return int(word_.size()); }
	bool empty() const { return word_.empty(); }
	int block_count() const { return blocks_; }
	const FaceWord& word() const { return word_; }
	Face face(int leg) const { return word_[leg - 1]; }
	// 0-based block index of a 1-based leg
	int block_of(int leg) const { return labels_[leg - 1]; }
	const std::vector<std::uint8_t>& labels() const { return labels_; }
	std::vector<Block> blocks() const;
	Block block(int index) const;

	// Compact hashable key: face word, a separator, then one char per label.
	std::string key() const;

	friend bool operator==(const Partition&, const Partition&) = default;
	friend auto operator<=>(const Partition& a, const Partition& b) {
		if (auto c = a.word_.size() <=> b.word_.size(); c != 0)
			return c;
		if (auto c = a.word_ <=> b.word_; c != 0)
			return c;
		return a.labels_ <=> b.labels_;
	}

private:
	FaceWord word_;
	std::vector<std::uint8_t> labels_;
	int blocks_ = 0;
};

struct OrderedPartition {
	Partition partition;
	std::vector<int> order; // order[b] = rank of block b (0-based), a permutation

	static OrderedPartition natural(Partition p);
	void validate() const;
};

enum class End { first, last };

// Faces must be drawn from the alphabet; throws input errors otherwise.
void check_alphabet(const FaceWord& word, std::string_view alphabet = kTwoFaces);

std::vector<Partition> enumerate_partitions(const FaceWord& word);

// Face-free shape of a set partition of n positions: 0-based labels and blocks.
struct SetPartitionShape {
	std::vector<int> labels;
	std::vector<std::vector<int>> blocks;
};
// All set partitions of n positions in the order used by enumerate_partitions; cached.
const std::vector<SetPartitionShape>& set_partition_shapes(int n);
// Every face word of length n over the alphabet, in lexicographic alphabet order.
std::vector<FaceWord> enumerate_words(int n, std::string_view alphabet = kTwoFaces);
std::uint64_t bell_number(int n);

Partition reduce(const Partition& p);
bool is_reduced(const Partition& p);
Partition mirror(const Partition& p);
OrderedPartition mirror(const OrderedPartition& p);
Partition concatenate(const std::vector<Partition>& parts);
Partition unite_blocks(const Partition& p, int b1, int b2);
Partition unite_blocks(const Partition& p, const Block& b1, const Block& b2);
Partition split_block_at_leg(const Partition& p, int leg);
// Each group must be a contiguous run of outer legs of one block.
Partition collapse_outer_legs(const Partition& p, const std::vector<Block>& groups, Face replacement_face);
bool is_inner(const Partition& p, int leg);
bool blocks_cross(const Partition& p, int b1, int b2);
bool connected(const Partition& p, int leg1, int leg2);
// Connected component id of each block in the crossing graph.
std::vector<int> crossing_components(const Partition& p);
bool is_interval(const Partition& p);

Partition double_leg(const Partition& p, int leg);
Partition merge_legs(const Partition& p, int leg);
Partition change_extremal_face(const Partition& p, End end, Face face);
Partition set_face(const Partition& p, int leg, Face face);

// Induced partition on the given legs (ascending, 1-based).
Partition restrict_to(const Partition& p, const Block& legs);
// Sub-partition formed by a subset of blocks (0-based indices).
Partition restrict_to_blocks(const Partition& p, const std::vector<int>& blocks);
Partition remove_leg(const Partition& p, int leg);
Partition swap_faces(const Partition& p, std::string_view alphabet = kTwoFaces);
// Cyclic rotation: leg 1 moves to position n.
Partition rotate(const Partition& p);

bool is_refinement(const Partition& finer, const Partition& coarser);
Partition meet(const std::vector<Partition>& ps);
std::vector<Partition> refinements(const Partition& p);

Partition parse_diagram(std::string_view text, std::string_view alphabet = kTwoFaces);
std::string format_diagram(const Partition& p);

} // namespace mfprod
