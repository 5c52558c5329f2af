/*
 * Copyright 2026 The kfvd Authors
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

#ifndef KFVD_REPORT_HPP
#define KFVD_REPORT_HPP

#include "kfvd/solver.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kfvd {

using StatField = std::pair<std::string, std::size_t>;

/// SearchStats as ordered key/value pairs; the order is part of the output
/// format.
inline std::vector<StatField> flatten(const SearchStats &s) {
  return {
      {"nodes", s.nodes},
      {"leaves", s.leaves},
      {"sub1_sink", s.sub1_sink},
      {"sub1_nonsink", s.sub1_nonsink},
      {"sub2", s.sub2},
      {"sub3", s.sub3},
      {"sub4", s.sub4},
      {"rr1", s.rr1},
      {"rr2", s.rr2},
      {"rr3", s.rr3},
      {"forced_sink", s.forced_sink},
      {"max_depth", s.max_depth},
      {"drop_violations", s.drop_violations.size()},
  };
}

inline std::string format_stats(const SearchStats &s) {
  std::string out;
  for (const auto &[key, value] : flatten(s)) {
    if (!out.empty())
      out += ' ';
    out += key + "=" + std::to_string(value);
  }
  return out;
}

} // namespace kfvd

#endif // KFVD_REPORT_HPP
