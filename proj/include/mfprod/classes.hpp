/*
 * classes.hpp
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

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "mfprod/partition.hpp"

namespace mfprod {

// The twelve admissible classes of two-faced partitions (faces w and b).
enum class ClassId { I, NC, biNC, IwNCb, NCwIb, IwAb, AwIb, NCwAb, AwNCb, pNC, pC, A };

inline constexpr std::array<ClassId, 12> kAllClasses = {ClassId::I,     ClassId::NC,    ClassId::biNC,  ClassId::IwNCb,
                                                        ClassId::NCwIb, ClassId::IwAb,  ClassId::AwIb,  ClassId::NCwAb,
                                                        ClassId::AwNCb, ClassId::pNC,   ClassId::pC,    ClassId::A};

std::string_view class_name(ClassId c);
std::optional<ClassId> class_from_name(std::string_view name);
ClassId swap(ClassId c);

// Literal evaluation of the defining condition; the partition must use faces w and b.
bool member(ClassId c, const Partition& p);

// Word-for-word reading of the pure crossing condition through the crossing
// graph. Strictly smaller than pC and not closed under block replacement; kept
// for comparison only.
bool connected_inner_legs_monochrome(const Partition& p);

} // namespace mfprod
