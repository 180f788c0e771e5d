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

#include <iosfwd>
#include <string>
#include <string_view>

#include "stratdt/game.hpp"

namespace stratdt {

/**
 * Explicit game text format (PGSolver style):
 *
 *   parity <max_id>;
 *   [start <id>;]
 *   <id> <priority> <owner> <succ>(,<succ>)* ["name"];
 *
 * Owner 0 is player 1. The `safety` and `reach` headers replace the
 * priority column by `safe|unsafe` resp. `target|plain`. Every id in
 * 0..max_id must be declared exactly once; the initial state defaults to 0.
 */
GraphGame parse_game_text(std::string_view text);
GraphGame read_game_file(const std::string& path);

std::string write_game_text(const GraphGame& game);

} // namespace stratdt
