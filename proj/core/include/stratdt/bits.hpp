/*
 * Copyright 2026 The stratdt Authors
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

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stratdt {

/// A point of {0,1}^d, one byte (0 or 1) per coordinate.
using BitVec = std::vector<std::uint8_t>;
using BitView = std::span<const std::uint8_t>;

enum class Player : std::uint8_t { P1 = 0, P2 = 1 };

constexpr Player opponent(Player p) { return p == Player::P1 ? Player::P2 : Player::P1; }
constexpr int index(Player p) { return static_cast<int>(p); }
constexpr int number(Player p) { return index(p) + 1; }

/// Smallest n with 2^n >= count (0 for count <= 1).
unsigned ceil_log2(std::size_t count);

/// Binary code of value in `width` bits, most significant bit first.
BitVec binary_code(std::uint64_t value, unsigned width);
std::uint64_t binary_value(BitView bits);

std::string to_string(BitView bits);

/// Input could not be parsed; line() is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace stratdt
