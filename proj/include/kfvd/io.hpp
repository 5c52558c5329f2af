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

// Instance file format, DIMACS flavoured:
//
//   c <comment>
//   p kfvd <n> <m>
//   e <u> <v>        (exactly m lines, 1 <= u, v <= n)

#ifndef KFVD_IO_HPP
#define KFVD_IO_HPP

#include "kfvd/digraph.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace kfvd {

class ParseError : public InputError {
public:
  ParseError(std::size_t line, const std::string &what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r')
      ++j;
    if (j > i)
      out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<std::uint64_t> to_uint(std::string_view s) {
  std::uint64_t x = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || p != s.data() + s.size())
    return std::nullopt;
  return x;
}

} // namespace detail

inline Digraph parse_digraph(std::string_view text) {
  std::optional<Digraph> d;
  std::uint64_t declared_arcs = 0;
  std::uint64_t seen_arcs = 0;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0] == "c")
      continue;

    if (tok[0] == "p") {
      if (d)
        throw ParseError(line_no, "duplicate header");
      if (tok.size() != 4 || tok[1] != "kfvd")
        throw ParseError(line_no, "malformed header, expected 'p kfvd <n> <m>'");
      auto n = detail::to_uint(tok[2]);
      auto m = detail::to_uint(tok[3]);
      if (!n || !m || *n > 0xFFFFFFFEu)
        throw ParseError(line_no, "malformed header counts");
      d.emplace(static_cast<std::size_t>(*n));
      declared_arcs = *m;
    } else if (tok[0] == "e") {
      if (!d)
        throw ParseError(line_no, "arc before header");
      if (tok.size() != 3)
        throw ParseError(line_no, "malformed arc line, expected 'e <u> <v>'");
      auto u = detail::to_uint(tok[1]);
      auto v = detail::to_uint(tok[2]);
      if (!u || !v)
        throw ParseError(line_no, "malformed arc endpoint");
      const auto n = d->id_bound();
      if (*u < 1 || *u > n || *v < 1 || *v > n)
        throw ParseError(line_no, "arc endpoint out of range [1, " + std::to_string(n) + "]");
      if (*u == *v)
        throw ParseError(line_no, "self-loop at vertex " + std::to_string(*u));
      if (d->has_arc(static_cast<Vertex>(*u), static_cast<Vertex>(*v)))
        throw ParseError(line_no, "duplicate arc " + std::to_string(*u) + " " + std::to_string(*v));
      d->add_arc(static_cast<Vertex>(*u), static_cast<Vertex>(*v));
      ++seen_arcs;
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }

  if (!d)
    throw ParseError(line_no, "missing header");
  if (seen_arcs != declared_arcs)
    throw ParseError(line_no, "arc count mismatch: header declares " + std::to_string(declared_arcs) +
                                  ", found " + std::to_string(seen_arcs));
  return std::move(*d);
}

/// Writes `p kfvd <id_bound> <m>` followed by the arcs in (u, v) order.
/// Deleted ids reappear as isolated vertices when the output is parsed back.
inline std::string serialize(const Digraph &d) {
  std::string out = "p kfvd " + std::to_string(d.id_bound()) + " " + std::to_string(d.arc_count()) + "\n";
  for (auto [u, v] : d.arcs())
    out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline Digraph read_digraph(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_digraph(ss.str());
}

} // namespace kfvd

#endif // KFVD_IO_HPP
