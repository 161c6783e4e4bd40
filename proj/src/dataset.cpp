#include "hq/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hq/hangul.hpp"
#include "hq/text.hpp"

namespace hq {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) {
      return out;
    }
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  auto const ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) {
    return {};
  }
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool is_korean(Alphabet const& alphabet) {
  return alphabet.language() == kKoreanTag;
}

// Rethrows tokenizer failures with the record line attached.
template <typename F>
auto at_line(std::size_t line, F&& f) {
  try {
    return f();
  } catch (UnknownGlyph const& e) {
    throw UnknownGlyph(line, e.glyph());
  } catch (DatasetError const& e) {
    throw;
  } catch (Error const& e) {
    throw DatasetError(line, e.what());
  }
}

}  // namespace

DatasetError::DatasetError(std::size_t line, std::string const& why)
    : Error(line == 0 ? why : "line " + std::to_string(line) + ": " + why),
      line_(line) {}

UnknownGlyph::UnknownGlyph(std::size_t line, std::string glyph)
    : DatasetError(line, "unknown glyph '" + glyph + "'"),
      glyph_(std::move(glyph)) {}

LanguageDataset parse_dataset(std::string_view content) {
  LanguageDataset d;
  bool have_language = false;
  std::vector<std::size_t> record_lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= content.size()) {
    auto end = content.find('\n', start);
    auto raw = content.substr(start, end == std::string_view::npos
                                         ? std::string_view::npos
                                         : end - start);
    start = end == std::string_view::npos ? content.size() + 1 : end + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') {
      raw.remove_suffix(1);
    }
    if (trim(raw).empty() || raw.front() == '#') {
      continue;
    }
    if (raw.starts_with("@language")) {
      auto tag = trim(raw.substr(9));
      if (tag.empty() || have_language) {
        throw DatasetError(line_no, have_language ? "duplicate @language"
                                                  : "empty @language");
      }
      d.language = tag;
      have_language = true;
      continue;
    }
    if (raw.starts_with("@alphabet")) {
      for (auto const& g : split(trim(raw.substr(9)), ' ')) {
        if (g.empty()) {
          continue;
        }
        auto glyph = text::nfc(g);
        if (std::find(d.alphabet.begin(), d.alphabet.end(), glyph) !=
            d.alphabet.end()) {
          throw DatasetError(line_no, "duplicate glyph '" + glyph + "'");
        }
        d.alphabet.push_back(std::move(glyph));
      }
      continue;
    }
    if (raw.front() == '@') {
      throw DatasetError(line_no, "unknown directive");
    }
    auto fields = split(raw, '\t');
    if (fields.size() != 5) {
      throw DatasetError(line_no, "expected 5 tab-separated fields, found " +
                                      std::to_string(fields.size()));
    }
    RelationRecord rec;
    if (fields[0] == "word") {
      rec.kind = RelationKind::word_pair;
    } else if (fields[0] == "raw") {
      rec.kind = RelationKind::raw_identity;
    } else {
      throw DatasetError(line_no, "unknown record kind '" + fields[0] + "'");
    }
    rec.lhs = text::nfc(fields[1]);
    rec.rhs = text::nfc(fields[2]);
    rec.gloss = fields[3];
    rec.ref = fields[4];
    if (rec.lhs.empty() || rec.rhs.empty()) {
      throw DatasetError(line_no, "empty relation side");
    }
    d.records.push_back(std::move(rec));
    record_lines.push_back(line_no);
  }
  if (!have_language) {
    throw DatasetError(0, "missing @language header");
  }

  AlphabetPtr alphabet;
  try {
    alphabet = make_alphabet(d.language, d.alphabet);
  } catch (Error const& e) {
    throw DatasetError(0, e.what());
  }
  for (std::size_t i = 0; i < d.records.size(); ++i) {
    at_line(record_lines[i],
            [&] { return to_relation(alphabet, d.records[i]); });
  }
  return d;
}

LanguageDataset load_dataset(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DatasetError(0, "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dataset(buf.str());
}

std::string serialize_dataset(LanguageDataset const& d) {
  std::string out = "@language " + d.language + "\n@alphabet";
  for (auto const& g : d.alphabet) {
    out += " " + g;
  }
  out += "\n";
  for (auto const& r : d.records) {
    out += r.kind == RelationKind::word_pair ? "word" : "raw";
    out += "\t" + r.lhs + "\t" + r.rhs + "\t" + r.gloss + "\t" + r.ref + "\n";
  }
  return out;
}

void save_dataset(LanguageDataset const& d, std::filesystem::path const& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw DatasetError(0, "cannot write " + path.string());
  }
  out << serialize_dataset(d);
}

Word tokenize_side(AlphabetPtr const& alphabet, RelationKind kind,
                   std::string_view side) {
  std::vector<Letter> letters;
  auto push = [&](std::string const& glyph) {
    auto id = alphabet->find(glyph);
    if (!id) {
      throw UnknownGlyph(0, glyph);
    }
    letters.push_back({*id, 1});
  };

  if (kind == RelationKind::raw_identity) {
    for (auto const& part : split(side, '+')) {
      auto glyph = std::string(trim(part));
      if (glyph.empty()) {
        throw DatasetError(0, "empty glyph in '" + std::string(side) + "'");
      }
      push(glyph);
    }
  } else if (is_korean(*alphabet)) {
    for (auto j : hangul::decompose_text(side)) {
      push(j.glyph());
    }
  } else {
    for (auto const& g : text::graphemes(side)) {
      push(g);
    }
  }
  return free_reduce(alphabet, letters);
}

void validate(LanguageDataset const& d) {
  AlphabetPtr alphabet;
  try {
    alphabet = make_alphabet(d.language, d.alphabet);
  } catch (Error const& e) {
    throw DatasetError(0, e.what());
  }
  for (std::size_t i = 0; i < d.records.size(); ++i) {
    at_line(i + 1, [&] { return to_relation(alphabet, d.records[i]); });
  }
}

Relation to_relation(AlphabetPtr const& alphabet, RelationRecord const& rec) {
  return {tokenize_side(alphabet, rec.kind, rec.lhs),
          tokenize_side(alphabet, rec.kind, rec.rhs),
          {rec.kind, rec.lhs, rec.rhs, rec.gloss, rec.ref}};
}

Presentation to_presentation(LanguageDataset const& d) {
  validate(d);
  auto alphabet = make_alphabet(d.language, d.alphabet);
  Presentation p(alphabet);
  for (auto const& rec : d.records) {
    auto rel = to_relation(alphabet, rec);
    p.add_relator(relator_from_relation(rel), rel.provenance);
  }
  return p;
}

}  // namespace hq
