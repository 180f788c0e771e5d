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

#include "stratdt/bits.hpp"

namespace stratdt {

unsigned ceil_log2(std::size_t count)
{
    unsigned n = 0;
    while (n < 64 && (std::size_t{1} << n) < count) ++n;
    return n;
}

BitVec binary_code(std::uint64_t value, unsigned width)
{
    BitVec out(width, 0);
    for (unsigned i = 0; i < width; ++i) {
        out[width - 1 - i] = static_cast<std::uint8_t>((value >> i) & 1u);
    }
    return out;
}

std::uint64_t binary_value(BitView bits)
{
    std::uint64_t v = 0;
    for (auto b : bits) v = (v << 1) | (b & 1u);
    return v;
}

std::string to_string(BitView bits)
{
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

static std::string with_line(std::size_t line, const std::string& what)
{
    if (line == 0) return what;
    return "line " + std::to_string(line) + ": " + what;
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(with_line(line, what)), line_(line)
{
}

} // namespace stratdt
