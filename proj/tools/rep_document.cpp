#include "rep_document.hpp"

#include <fstream>
#include <sstream>

#include "qgrass/error.hpp"

namespace qgrass::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what, const std::string& pointer) { throw ParseError(what, pointer); }

const json& field_of(const json& doc, const char* key) {
  if (!doc.contains(key)) fail(std::string("missing field '") + key + "'", "/");
  return doc.at(key);
}

long natural(const json& v, const std::string& pointer) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail("expected a natural number", pointer);
  return static_cast<long>(v.get<long long>());
}

Rational entry(const json& v, const std::string& pointer) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const DomainError& e) {
      fail(e.what(), pointer);
    }
  }
  fail("matrix entries are integers or \"a/b\" strings", pointer);
}

Quiver parse_quiver(const json& doc) {
  const long n = natural(field_of(doc, "vertices"), "/vertices");
  std::vector<Arrow> arrows;
  if (doc.contains("arrows")) {
    const json& list = doc.at("arrows");
    if (!list.is_array()) fail("expected a list of [source, target] pairs", "/arrows");
    for (std::size_t a = 0; a < list.size(); ++a) {
      const std::string at = "/arrows/" + std::to_string(a);
      const json& pair = list[a];
      if (!pair.is_array() || pair.size() != 2) fail("expected a [source, target] pair", at);
      const long s = natural(pair[0], at + "/0"), t = natural(pair[1], at + "/1");
      if (s < 1 || s > n) fail("vertex out of range (vertices are 1-based)", at + "/0");
      if (t < 1 || t > n) fail("vertex out of range (vertices are 1-based)", at + "/1");
      arrows.push_back({static_cast<std::size_t>(s - 1), static_cast<std::size_t>(t - 1)});
    }
  }
  try {
    return Quiver(static_cast<std::size_t>(n), std::move(arrows));
  } catch (const DomainError& e) {
    fail(e.what(), "/arrows");
  }
}

std::vector<Matrix> parse_matrices(const json& list, const Quiver& q, const DimVector& dims) {
  if (!list.is_object()) fail("expected a map from 0-based arrow index to matrix", "/matrices");
  std::vector<Matrix> maps;
  for (const auto& a : q.arrows())
    maps.emplace_back(static_cast<std::size_t>(dims[a.target]), static_cast<std::size_t>(dims[a.source]));
  for (const auto& [key, rows] : list.items()) {
    const std::string at = "/matrices/" + key;
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos || key.size() > 9)
      fail("arrow keys are 0-based indices", at);
    const std::size_t a = std::stoul(key);
    if (a >= q.arrow_count()) fail("no arrow with this index (arrow indices are 0-based)", at);
    Matrix& m = maps[a];
    if (!rows.is_array() || rows.size() != m.rows())
      fail("expected " + std::to_string(m.rows()) + " rows (d_target)", at);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const std::string rat = at + "/" + std::to_string(r);
      if (!rows[r].is_array() || rows[r].size() != m.cols())
        fail("expected " + std::to_string(m.cols()) + " columns (d_source)", rat);
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rows[r][c], rat + "/" + std::to_string(c));
    }
  }
  return maps;
}

}  // namespace

json to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json to_json(const Rational& x) {
  if (x.get_den() == 1) return to_json(x.get_num());
  return to_string(x);
}

Representation RepDocument::representation() const {
  if (intervals) return typea::to_representation(*intervals, field);
  return Representation(quiver, field, dims, matrices.value_or(std::vector<Matrix>{}));
}

RepDocument parse_rep_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed document: " + std::string(e.what()), "byte " + std::to_string(e.byte));
  }
  if (!doc.is_object()) fail("expected a JSON object", "/");
  for (const auto& [key, _] : doc.items())
    if (key != "vertices" && key != "arrows" && key != "field" && key != "dims" && key != "matrices" &&
        key != "intervals")
      fail("unknown field '" + key + "'", "/" + key);

  RepDocument out;
  out.quiver = parse_quiver(doc);
  const std::size_t n = out.quiver.vertex_count();
  if (doc.contains("field")) {
    const json& f = doc.at("field");
    if (!f.is_string()) fail("field is \"Q\" or \"Fp:<prime>\"", "/field");
    try {
      out.field = Field::parse(f.get<std::string>());
    } catch (const DomainError& e) {
      fail(e.what(), "/field");
    }
  }
  const bool has_m = doc.contains("matrices"), has_i = doc.contains("intervals");
  if (has_m == has_i) fail("exactly one of 'matrices' and 'intervals' is required", "/");

  if (has_i) {
    if (!doc.at("intervals").is_string()) fail("intervals use the syntax U[i,j]^m + ...", "/intervals");
    if (doc.contains("arrows") && !out.quiver.is_equioriented_a())
      fail("interval shorthand needs the equioriented A_n quiver", "/arrows");
    out.quiver = Quiver::equioriented_a(n);
    try {
      out.intervals = typea::parse_intervals(doc.at("intervals").get<std::string>(), static_cast<int>(n));
    } catch (const ParseError& e) {
      fail(e.what(), "/intervals");
    } catch (const DomainError& e) {
      fail(e.what(), "/intervals");
    }
    out.dims = out.intervals->dims();
    if (doc.contains("dims")) {
      std::vector<long> d;
      const json& list = doc.at("dims");
      if (!list.is_array()) fail("expected a list", "/dims");
      for (std::size_t i = 0; i < list.size(); ++i) d.push_back(natural(list[i], "/dims/" + std::to_string(i)));
      if (DimVector(d) != out.dims) fail("dims disagree with the intervals", "/dims");
    }
    return out;
  }

  const json& list = field_of(doc, "dims");
  if (!list.is_array() || list.size() != n) fail("expected one dimension per vertex", "/dims");
  std::vector<long> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(natural(list[i], "/dims/" + std::to_string(i)));
  out.dims = DimVector(d);
  std::vector<Matrix> maps = parse_matrices(doc.at("matrices"), out.quiver, out.dims);
  for (std::size_t a = 0; a < maps.size(); ++a)
    for (std::size_t r = 0; r < maps[a].rows(); ++r)
      for (std::size_t c = 0; c < maps[a].cols(); ++c)
        if (!out.field.reduces(maps[a](r, c)))
          fail("entry does not lie in " + out.field.name(),
               "/matrices/" + std::to_string(a) + "/" + std::to_string(r) + "/" + std::to_string(c));
  for (auto& m : maps) m = normalized(out.field, m);
  out.matrices = std::move(maps);
  return out;
}

RepDocument load_rep_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open representation file", path);
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_rep_document(text.str());
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" (at ")), path + ": " + e.position());
  }
}

json to_json(const RepDocument& doc) {
  json out;
  out["vertices"] = doc.quiver.vertex_count();
  json arrows = json::array();
  for (const auto& a : doc.quiver.arrows()) arrows.push_back({a.source + 1, a.target + 1});
  out["arrows"] = arrows;
  out["field"] = doc.field.name();
  out["dims"] = doc.dims.entries();
  if (doc.intervals) {
    out["intervals"] = typea::to_string(*doc.intervals);
    return out;
  }
  json maps = json::object();
  const auto& ms = doc.matrices.value();
  for (std::size_t a = 0; a < ms.size(); ++a) {
    json rows = json::array();
    for (std::size_t r = 0; r < ms[a].rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < ms[a].cols(); ++c) row.push_back(to_json(ms[a](r, c)));
      rows.push_back(row);
    }
    maps[std::to_string(a)] = rows;
  }
  out["matrices"] = maps;
  return out;
}

std::string serialize(const RepDocument& doc) { return to_json(doc).dump(2) + "\n"; }

RepDocument document_from(const Representation& m) {
  RepDocument doc;
  doc.quiver = m.quiver();
  doc.field = m.field();
  doc.dims = m.dims();
  doc.matrices = m.maps();
  return doc;
}

RepDocument document_from(const typea::IntervalDecomposition& m, const Field& field) {
  RepDocument doc;
  doc.quiver = Quiver::equioriented_a(static_cast<std::size_t>(m.n()));
  doc.field = field;
  doc.dims = m.dims();
  doc.intervals = m;
  return doc;
}

}  // namespace qgrass::cli
