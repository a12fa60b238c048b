#ifndef PGRO_CORPUS_HPP
#define PGRO_CORPUS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corpus_data.hpp"
#include "errors.hpp"
#include "group_file.hpp"

namespace pgro {

struct CorpusEntry {
  std::string label;
  std::string text;
  std::size_t order;

  PGroup load() const { return load_group_text(text); }
};

/// The bundled groups. Each entry is closed once and its order checked.
inline const std::vector<CorpusEntry>& load_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> out;
    for (const auto& s : corpus_data::sources) {
      CorpusEntry e{std::string(s.label), std::string(s.text), s.order};
      if (e.load().order() != e.order)
        throw InternalError("corpus entry " + e.label + " does not close to its declared order");
      out.push_back(std::move(e));
    }
    return out;
  }();
  return corpus;
}

inline std::optional<CorpusEntry> find_corpus_entry(std::string_view label) {
  for (const auto& e : load_corpus())
    if (e.label == label) return e;
  return std::nullopt;
}

}  // namespace pgro

#endif  // PGRO_CORPUS_HPP
