/*
 * partition.cpp
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

#include "mfprod/partition.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace mfprod {

namespace {

void check_leg(const Partition& p, int leg) {
	if (leg < 1 || leg > p.size())
		input_error("leg " + std::to_string(leg) + " out of range 1.." + std::to_string(p.size()));
}

int hex_value(char c) {
	if (c >= '1' && c <= '9')
		return c - '0';
	if (c >= 'a' && c <= 'f')
		return c - 'a' + 10;
	if (c >= 'A' && c <= 'F')
		return c - 'A' + 10;
	return -1;
}

char hex_digit(int v) {
	return v < 10 ? char('0' + v) : char('a' + v - 10);
}

} // namespace

Partition Partition::from_labels(FaceWord word, const std::vector<int>& labels) {
	if (labels.size() != word.size())
		input_error("label count does not match word length");
	if (word.size() > 255)
		budget_error("partitions are limited to 255 legs");
	Partition p;
	p.word_ = std::move(word);
	p.labels_.resize(labels.size());
	std::vector<std::pair<int, int>> seen; // (raw label, canonical index)
	for (std::size_t i = 0; i < labels.size(); ++i) {
		auto it = std::find_if(seen.begin(), seen.end(), [&](auto& e) { return e.first == labels[i]; });
		if (it == seen.end()) {
			seen.emplace_back(labels[i], int(seen.size()));
			p.labels_[i] = std::uint8_t(seen.size() - 1);
		} else {
			p.labels_[i] = std::uint8_t(it->second);
		}
	}
	p.blocks_ = int(seen.size());
	return p;
}

Partition Partition::from_blocks(FaceWord word, const std::vector<Block>& blocks) {
	int n = int(word.size());
	std::vector<int> labels(word.size(), -1);
	for (std::size_t b = 0; b < blocks.size(); ++b) {
		if (blocks[b].empty())
			input_error("empty block");
		for (int leg : blocks[b]) {
			if (leg < 1 || leg > n)
				input_error("leg " + std::to_string(leg) + " out of range 1.." + std::to_string(n));
			if (labels[leg - 1] != -1)
				input_error("leg " + std::to_string(leg) + " appears in two blocks");
			labels[leg - 1] = int(b);
		}
	}
	for (int i = 0; i < n; ++i)
		if (labels[i] == -1)
			input_error("leg " + std::to_string(i + 1) + " is not covered by any block");
	return from_labels(std::move(word), labels);
}

Partition Partition::one_block(FaceWord word) {
	return from_labels(word, std::vector<int>(word.size(), 0));
}

Partition Partition::singletons(FaceWord word) {
	std::vector<int> labels(word.size());
	std::iota(labels.begin(), labels.end(), 0);
	return from_labels(std::move(word), labels);
}

std::vector<Block> Partition::blocks() const {
	std::vector<Block> out(blocks_);
	for (int i = 0; i < size(); ++i)
		out[labels_[i]].push_back(i + 1);
	return out;
}

Block Partition::block(int index) const {
	Block out;
	for (int i = 0; i < size(); ++i)
		if (labels_[i] == index)
			out.push_back(i + 1);
	return out;
}

std::string Partition::key() const {
	std::string k = word_;
	k.push_back('/');
	for (auto l : labels_)
		k.push_back(char('0' + l));
	return k;
}

OrderedPartition OrderedPartition::natural(Partition p) {
	OrderedPartition o{std::move(p), {}};
	o.order.resize(o.partition.block_count());
	std::iota(o.order.begin(), o.order.end(), 0);
	return o;
}

void OrderedPartition::validate() const {
	std::vector<int> sorted = order;
	std::sort(sorted.begin(), sorted.end());
	for (int i = 0; i < int(sorted.size()); ++i)
		if (sorted[i] != i)
			input_error("block order is not a permutation");
	if (int(sorted.size()) != partition.block_count())
		input_error("block order has the wrong length");
}

void check_alphabet(const FaceWord& word, std::string_view alphabet) {
	for (char c : word)
		if (alphabet.find(c) == std::string_view::npos)
			input_error(std::string("face '") + c + "' is not in the alphabet \"" + std::string(alphabet) + "\"");
}

std::vector<Partition> enumerate_partitions(const FaceWord& word) {
	int n = int(word.size());
	if (n > kMaxLegs)
		budget_error("enumeration is limited to " + std::to_string(kMaxLegs) + " legs");
	std::vector<Partition> out;
	std::vector<int> rgs(n, 0);
	// Walk restricted growth strings in lexicographic order.
	auto rec = [&](auto&& self, int i, int max_label) -> void {
		if (i == n) {
			out.push_back(Partition::from_labels(word, rgs));
			return;
		}
		for (int l = 0; l <= max_label + 1; ++l) {
			rgs[i] = l;
			self(self, i + 1, std::max(max_label, l));
		}
	};
	if (n == 0)
		out.push_back(Partition::from_labels(word, {}));
	else {
		rgs[0] = 0;
		rec(rec, 1, 0);
	}
	return out;
}

const std::vector<SetPartitionShape>& set_partition_shapes(int n) {
	static std::mutex mu;
	static std::map<int, std::unique_ptr<std::vector<SetPartitionShape>>> cache;
	if (n > 12)
		budget_error("set partition catalogue is limited to 12 positions");
	std::lock_guard lock(mu);
	auto& slot = cache[n];
	if (!slot) {
		slot = std::make_unique<std::vector<SetPartitionShape>>();
		for (auto& p : enumerate_partitions(FaceWord(std::size_t(n), 'w'))) {
			SetPartitionShape shape;
			shape.labels.assign(p.labels().begin(), p.labels().end());
			shape.blocks.resize(p.block_count());
			for (int i = 0; i < n; ++i)
				shape.blocks[shape.labels[i]].push_back(i);
			slot->push_back(std::move(shape));
		}
	}
	return *slot;
}

std::vector<FaceWord> enumerate_words(int n, std::string_view alphabet) {
	std::vector<FaceWord> out{FaceWord()};
	for (int i = 0; i < n; ++i) {
		std::vector<FaceWord> next;
		next.reserve(out.size() * alphabet.size());
		for (auto& w : out)
			for (char c : alphabet)
				next.push_back(w + c);
		out = std::move(next);
	}
	return out;
}

std::uint64_t bell_number(int n) {
	// Bell triangle.
	std::vector<std::uint64_t> row{1};
	for (int i = 0; i < n; ++i) {
		std::vector<std::uint64_t> next{row.back()};
		for (auto v : row)
			next.push_back(next.back() + v);
		row = std::move(next);
	}
	return row.front();
}

Partition reduce(const Partition& p) {
	FaceWord word;
	std::vector<int> labels;
	for (int i = 1; i <= p.size(); ++i) {
		if (i > 1 && p.face(i) == p.face(i - 1) && p.block_of(i) == p.block_of(i - 1))
			continue;
		word.push_back(p.face(i));
		labels.push_back(p.block_of(i));
	}
	return Partition::from_labels(std::move(word), labels);
}

bool is_reduced(const Partition& p) {
	for (int i = 2; i <= p.size(); ++i)
		if (p.face(i) == p.face(i - 1) && p.block_of(i) == p.block_of(i - 1))
			return false;
	return true;
}

Partition mirror(const Partition& p) {
	FaceWord word(p.word().rbegin(), p.word().rend());
	std::vector<int> labels(p.labels().rbegin(), p.labels().rend());
	return Partition::from_labels(std::move(word), labels);
}

OrderedPartition mirror(const OrderedPartition& p) {
	p.validate();
	Partition m = mirror(p.partition);
	// Block b of the mirror is the old block owning leg n - min + 1; ranks travel with blocks.
	OrderedPartition out{m, std::vector<int>(m.block_count())};
	int n = p.partition.size();
	for (int b = 0; b < m.block_count(); ++b) {
		int leg = m.block(b).front();
		out.order[b] = p.order[p.partition.block_of(n - leg + 1)];
	}
	return out;
}

Partition concatenate(const std::vector<Partition>& parts) {
	FaceWord word;
	std::vector<int> labels;
	int offset = 0;
	for (auto& q : parts) {
		word += q.word();
		for (auto l : q.labels())
			labels.push_back(offset + l);
		offset += q.block_count();
	}
	return Partition::from_labels(std::move(word), labels);
}

Partition unite_blocks(const Partition& p, int b1, int b2) {
	if (b1 < 0 || b2 < 0 || b1 >= p.block_count() || b2 >= p.block_count())
		input_error("block index out of range");
	if (b1 == b2)
		input_error("cannot unite a block with itself");
	std::vector<int> labels(p.labels().begin(), p.labels().end());
	for (auto& l : labels)
		if (l == b2)
			l = b1;
	return Partition::from_labels(p.word(), labels);
}

Partition unite_blocks(const Partition& p, const Block& b1, const Block& b2) {
	auto index_of = [&](const Block& b) {
		auto all = p.blocks();
		auto it = std::find(all.begin(), all.end(), b);
		if (it == all.end())
			input_error("not a block of the partition");
		return int(it - all.begin());
	};
	return unite_blocks(p, index_of(b1), index_of(b2));
}

Partition split_block_at_leg(const Partition& p, int leg) {
	check_leg(p, leg);
	int beta = p.block_of(leg);
	int fresh = p.block_count();
	FaceWord word;
	std::vector<int> labels;
	for (int i = 1; i <= p.size(); ++i) {
		int l = p.block_of(i);
		if (l == beta && i > leg)
			l = fresh;
		word.push_back(p.face(i));
		labels.push_back(l);
		if (i == leg) {
			word.push_back(p.face(i));
			labels.push_back(fresh);
		}
	}
	return Partition::from_labels(std::move(word), labels);
}

Partition collapse_outer_legs(const Partition& p, const std::vector<Block>& groups, Face replacement_face) {
	std::vector<int> group_of(p.size() + 1, -1);
	for (std::size_t g = 0; g < groups.size(); ++g) {
		const Block& grp = groups[g];
		if (grp.empty())
			input_error("empty collapse group");
		for (std::size_t j = 0; j < grp.size(); ++j) {
			check_leg(p, grp[j]);
			if (j > 0 && grp[j] != grp[j - 1] + 1)
				input_error("collapse group is not a contiguous run of legs");
			if (is_inner(p, grp[j]))
				input_error("leg " + std::to_string(grp[j]) + " is inner");
			if (p.block_of(grp[j]) != p.block_of(grp[0]))
				input_error("collapse group spans several blocks");
			if (group_of[grp[j]] != -1)
				input_error("collapse groups overlap");
			group_of[grp[j]] = int(g);
		}
	}
	FaceWord word;
	std::vector<int> labels;
	for (int i = 1; i <= p.size(); ++i) {
		if (group_of[i] >= 0 && i > 1 && group_of[i - 1] == group_of[i])
			continue;
		word.push_back(group_of[i] >= 0 ? replacement_face : p.face(i));
		labels.push_back(p.block_of(i));
	}
	return Partition::from_labels(std::move(word), labels);
}

bool is_inner(const Partition& p, int leg) {
	check_leg(p, leg);
	int own = p.block_of(leg);
	// first and last leg of each block
	std::vector<int> lo(p.block_count(), 0), hi(p.block_count(), 0);
	for (int i = p.size(); i >= 1; --i)
		lo[p.block_of(i)] = i;
	for (int i = 1; i <= p.size(); ++i)
		hi[p.block_of(i)] = i;
	for (int b = 0; b < p.block_count(); ++b)
		if (b != own && lo[b] < leg && leg < hi[b])
			return true;
	return false;
}

bool blocks_cross(const Partition& p, int b1, int b2) {
	if (b1 == b2)
		return false;
	// Scan the subsequence of legs in b1 or b2; a crossing is an alternation x y x y.
	int n = p.size();
	int state = 0; // length of the alternating prefix matched so far, starting with either block
	for (int start : {b1, b2}) {
		int other = start == b1 ? b2 : b1;
		state = 0;
		for (int i = 1; i <= n; ++i) {
			int l = p.block_of(i);
			int want = state % 2 == 0 ? start : other;
			if (l == want && ++state == 4)
				return true;
		}
	}
	return false;
}

std::vector<int> crossing_components(const Partition& p) {
	int k = p.block_count();
	std::vector<int> comp(k);
	std::iota(comp.begin(), comp.end(), 0);
	auto find = [&](int x) {
		while (comp[x] != x)
			x = comp[x] = comp[comp[x]];
		return x;
	};
	for (int a = 0; a < k; ++a)
		for (int b = a + 1; b < k; ++b)
			if (blocks_cross(p, a, b))
				comp[find(a)] = find(b);
	for (int a = 0; a < k; ++a)
		comp[a] = find(a);
	return comp;
}

bool connected(const Partition& p, int leg1, int leg2) {
	check_leg(p, leg1);
	check_leg(p, leg2);
	auto comp = crossing_components(p);
	return comp[p.block_of(leg1)] == comp[p.block_of(leg2)];
}

bool is_interval(const Partition& p) {
	for (int i = 1; i <= p.size(); ++i)
		if (is_inner(p, i))
			return false;
	return true;
}

Partition double_leg(const Partition& p, int leg) {
	check_leg(p, leg);
	FaceWord word = p.word();
	std::vector<int> labels(p.labels().begin(), p.labels().end());
	word.insert(word.begin() + leg, p.face(leg));
	labels.insert(labels.begin() + leg, p.block_of(leg));
	return Partition::from_labels(std::move(word), labels);
}

Partition merge_legs(const Partition& p, int leg) {
	check_leg(p, leg);
	if (leg == p.size())
		input_error("merge needs a right neighbour");
	if (p.block_of(leg) != p.block_of(leg + 1) || p.face(leg) != p.face(leg + 1))
		input_error("merge needs neighbouring legs of the same block and face");
	return remove_leg(p, leg + 1);
}

Partition change_extremal_face(const Partition& p, End end, Face face) {
	if (p.empty())
		input_error("empty partition has no extremal leg");
	return set_face(p, end == End::first ? 1 : p.size(), face);
}

Partition set_face(const Partition& p, int leg, Face face) {
	check_leg(p, leg);
	FaceWord word = p.word();
	word[leg - 1] = face;
	return Partition::from_labels(std::move(word), std::vector<int>(p.labels().begin(), p.labels().end()));
}

Partition restrict_to(const Partition& p, const Block& legs) {
	FaceWord word;
	std::vector<int> labels;
	for (int leg : legs) {
		check_leg(p, leg);
		word.push_back(p.face(leg));
		labels.push_back(p.block_of(leg));
	}
	return Partition::from_labels(std::move(word), labels);
}

Partition restrict_to_blocks(const Partition& p, const std::vector<int>& blocks) {
	Block legs;
	for (int i = 1; i <= p.size(); ++i)
		if (std::find(blocks.begin(), blocks.end(), p.block_of(i)) != blocks.end())
			legs.push_back(i);
	return restrict_to(p, legs);
}

Partition remove_leg(const Partition& p, int leg) {
	check_leg(p, leg);
	Block legs;
	for (int i = 1; i <= p.size(); ++i)
		if (i != leg)
			legs.push_back(i);
	return restrict_to(p, legs);
}

Partition swap_faces(const Partition& p, std::string_view alphabet) {
	if (alphabet.size() != 2)
		input_error("face swap needs a two-face alphabet");
	FaceWord word = p.word();
	for (auto& c : word)
		c = c == alphabet[0] ? alphabet[1] : c == alphabet[1] ? alphabet[0] : c;
	return Partition::from_labels(std::move(word), std::vector<int>(p.labels().begin(), p.labels().end()));
}

Partition rotate(const Partition& p) {
	if (p.size() < 2)
		return p;
	FaceWord word = p.word().substr(1) + p.word()[0];
	std::vector<int> labels(p.labels().begin() + 1, p.labels().end());
	labels.push_back(p.labels()[0]);
	return Partition::from_labels(std::move(word), labels);
}

bool is_refinement(const Partition& finer, const Partition& coarser) {
	if (finer.word() != coarser.word())
		input_error("refinement comparison needs a common face word");
	std::vector<int> image(finer.block_count(), -1);
	for (int i = 1; i <= finer.size(); ++i) {
		int& img = image[finer.block_of(i)];
		if (img == -1)
			img = coarser.block_of(i);
		else if (img != coarser.block_of(i))
			return false;
	}
	return true;
}

Partition meet(const std::vector<Partition>& ps) {
	if (ps.empty())
		input_error("meet of an empty family");
	Partition cur = ps.front();
	int n = cur.size();
	for (auto& q : ps) {
		if (q.word() != cur.word())
			input_error("meet needs a common face word");
		std::vector<int> key(n);
		for (int i = 0; i < n; ++i)
			key[i] = cur.labels()[i] * (n + 1) + q.labels()[i];
		cur = Partition::from_labels(cur.word(), key);
	}
	return cur;
}

std::vector<Partition> refinements(const Partition& p) {
	int n = p.size();
	std::vector<Partition> out;
	std::vector<int> labels(n), parent; // parent[sub-block] = block of p
	auto rec = [&](auto&& self, int i) -> void {
		if (i == n) {
			out.push_back(Partition::from_labels(p.word(), labels));
			return;
		}
		int b = p.labels()[i];
		for (int s = 0; s < int(parent.size()); ++s)
			if (parent[s] == b) {
				labels[i] = s;
				self(self, i + 1);
			}
		labels[i] = int(parent.size());
		parent.push_back(b);
		self(self, i + 1);
		parent.pop_back();
	};
	rec(rec, 0);
	return out;
}

Partition parse_diagram(std::string_view text, std::string_view alphabet) {
	auto slash = text.find('/');
	if (slash == std::string_view::npos)
		input_error("diagram must look like <faceword>/<block>|<block>...");
	FaceWord word(text.substr(0, slash));
	check_alphabet(word, alphabet);
	int n = int(word.size());
	if (n > 255)
		budget_error("diagram too long");
	std::string_view rest = text.substr(slash + 1);
	std::vector<Block> blocks;
	if (n == 0) {
		if (!rest.empty())
			input_error("empty word cannot carry blocks");
		return Partition::from_blocks(word, blocks);
	}
	bool wide = rest.find(',') != std::string_view::npos || n > 15;
	std::size_t pos = 0;
	while (pos <= rest.size()) {
		auto bar = rest.find('|', pos);
		std::string_view item = rest.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos);
		if (item.empty())
			input_error("empty block in diagram");
		Block b;
		if (wide) {
			std::size_t q = 0;
			while (q <= item.size()) {
				auto comma = item.find(',', q);
				std::string_view num = item.substr(q, comma == std::string_view::npos ? std::string_view::npos : comma - q);
				if (num.empty() || num.size() > 3 || num.find_first_not_of("0123456789") != std::string_view::npos)
					input_error("malformed leg '" + std::string(num) + "'");
				b.push_back(std::stoi(std::string(num)));
				if (comma == std::string_view::npos)
					break;
				q = comma + 1;
			}
		} else {
			for (char c : item) {
				int v = hex_value(c);
				if (v < 0)
					input_error(std::string("malformed leg '") + c + "'");
				b.push_back(v);
			}
		}
		std::sort(b.begin(), b.end());
		blocks.push_back(std::move(b));
		if (bar == std::string_view::npos)
			break;
		pos = bar + 1;
	}
	return Partition::from_blocks(std::move(word), blocks);
}

std::string format_diagram(const Partition& p) {
	std::string out = p.word() + "/";
	bool wide = p.size() > 15;
	auto blocks = p.blocks();
	for (std::size_t b = 0; b < blocks.size(); ++b) {
		if (b)
			out.push_back('|');
		for (std::size_t j = 0; j < blocks[b].size(); ++j) {
			if (wide) {
				if (j)
					out.push_back(',');
				out += std::to_string(blocks[b][j]);
			} else {
				out.push_back(hex_digit(blocks[b][j]));
			}
		}
	}
	return out;
}

} // namespace mfprod
