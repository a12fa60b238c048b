#ifndef PGRO_GROUP_FILE_HPP
#define PGRO_GROUP_FILE_HPP

// Plain-text group files.
//
//   # comment
//   perm <degree> <num_generators>
//   <degree one-based images>            (one line per generator)
//
// or
//
//   table <order> <num_generators>
//   <order one-based entries>            (row x lists x*y for all y)
//   <num_generators one-based indices>

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "permutation.hpp"

namespace pgro {

namespace detail {

inline std::vector<std::vector<long long>> content_lines(std::string_view text) {
  std::vector<std::vector<long long>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<long long> row;
    if (header) {
      std::string kind;
      ls >> kind;
      if (kind == "perm") row.push_back(0);
      else if (kind == "table") row.push_back(1);
      else throw InputError("line " + std::to_string(lineno) + ": expected 'perm' or 'table'");
      header = false;
    }
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        row.push_back(v);
      } catch (const std::logic_error&) {
        throw InputError("line " + std::to_string(lineno) + ": bad number '" + tok + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("empty group file");
  return rows;
}

}  // namespace detail

/// Generators of a group file as permutations (tables go through the
/// regular action).
inline std::vector<Permutation> parse_group_generators(std::string_view text) {
  auto rows = detail::content_lines(text);
  const auto& head = rows.front();
  if (head.size() != 3 || head[1] < 1 || head[2] < 1)
    throw InputError("header must be 'perm <degree> <k>' or 'table <order> <k>'");
  const auto size = static_cast<std::size_t>(head[1]);
  const auto k = static_cast<std::size_t>(head[2]);

  if (head[0] == 0) {
    if (rows.size() != 1 + k) throw InputError("expected " + std::to_string(k) + " generator lines");
    std::vector<Permutation> gens;
    for (std::size_t i = 1; i <= k; ++i) {
      if (rows[i].size() != size)
        throw InputError("generator " + std::to_string(i) + " has wrong number of images");
      gens.push_back(Permutation::from_one_based(rows[i]));
    }
    return gens;
  }

  if (rows.size() != 2 + size) throw InputError("expected " + std::to_string(size) + " table rows and a generator line");
  CayleyTable table{size, {}};
  table.entries.reserve(size * size);
  for (std::size_t x = 1; x <= size; ++x) {
    if (rows[x].size() != size) throw MalformedTable("table row " + std::to_string(x) + " has wrong length");
    for (long long v : rows[x]) {
      if (v < 1 || static_cast<std::size_t>(v) > size) throw MalformedTable("table entry out of range");
      table.entries.push_back(static_cast<std::uint32_t>(v - 1));
    }
  }
  const auto& gen_line = rows.back();
  if (gen_line.size() != k) throw InputError("generator line must list " + std::to_string(k) + " indices");
  std::vector<std::size_t> gens;
  for (long long g : gen_line) {
    if (g < 1 || static_cast<std::size_t>(g) > size) throw MalformedTable("generator index out of range");
    gens.push_back(static_cast<std::size_t>(g - 1));
  }
  return regular_action(table, gens);
}

inline PGroup load_group_text(std::string_view text, std::size_t ceiling = default_order_ceiling) {
  auto gens = parse_group_generators(text);
  return close_group(gens, ceiling);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline PGroup load_group_file(const std::string& path, std::size_t ceiling = default_order_ceiling) {
  return load_group_text(read_text_file(path), ceiling);
}

}  // namespace pgro

#endif  // PGRO_GROUP_FILE_HPP
