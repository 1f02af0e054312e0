#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qgrass/representation.hpp"
#include "qgrass/typea.hpp"

namespace qgrass::cli {

/// A representation file. Vertices are 1-based in the text, arrow indices
/// (the keys of `matrices`) are 0-based. Exactly one of `matrices` and
/// `intervals` is set; an arrow missing from `matrices` carries the zero map.
struct RepDocument {
  Quiver quiver;
  Field field = Field::rationals();
  DimVector dims;
  std::optional<std::vector<Matrix>> matrices;
  std::optional<typea::IntervalDecomposition> intervals;

  Representation representation() const;
  friend bool operator==(const RepDocument&, const RepDocument&) = default;
};

/// Throws ParseError; the position is a byte offset for syntax errors and
/// a JSON pointer for semantic ones.
RepDocument parse_rep_document(const std::string& text);
RepDocument load_rep_document(const std::string& path);

nlohmann::json to_json(const RepDocument& doc);
/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string serialize(const RepDocument& doc);

RepDocument document_from(const Representation& m);
RepDocument document_from(const typea::IntervalDecomposition& m, const Field& field = Field::rationals());

/// Integers as JSON numbers when they fit, otherwise decimal strings.
nlohmann::json to_json(const Integer& x);
/// Integers as numbers, everything else as "a/b".
nlohmann::json to_json(const Rational& x);

}  // namespace qgrass::cli
