#include "commands.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "elliptic.hpp"
#include "qgrass/ar.hpp"
#include "qgrass/cluster.hpp"
#include "qgrass/error.hpp"
#include "qgrass/ff.hpp"
#include "qgrass/homological.hpp"
#include "qgrass/typea.hpp"
#include "rep_document.hpp"

namespace qgrass::cli {

using nlohmann::json;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string rep, rep2, intervals, intervals2, witness, e, primes, strategy = "automatic", format = "text";
  int n = 0;
  std::uint32_t p = 0;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  std::size_t trials = 64;
  bool embed = false;
};

struct Result {
  json outputs = json::object();
  json provenance = json::object();
  std::vector<std::string> lines;
  void line(std::string s) { lines.push_back(std::move(s)); }
};

struct Input {
  Representation rep;
  std::optional<typea::IntervalDecomposition> dec;
};

// ---------------------------------------------------------------- parsing

std::vector<long> parse_csv(const std::string& text, const char* flag) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + " expects comma-separated natural numbers, got '" + text + "'");
    }
  }
  return out;
}

Input load(const std::string& rep, const std::string& intervals, int n, const char* which) {
  if (!rep.empty() && !intervals.empty())
    throw UsageError(std::string("give either --rep") + which + " or --intervals" + which + ", not both");
  if (!rep.empty()) {
    const RepDocument doc = load_rep_document(rep);
    return {doc.representation(), doc.intervals};
  }
  if (!intervals.empty()) {
    if (n <= 0) throw UsageError("--intervals needs --n");
    auto dec = typea::parse_intervals(intervals, n);
    return {typea::to_representation(dec), dec};
  }
  throw UsageError(std::string("an input is required: --rep") + which + " FILE or --intervals" + which + " STR --n N");
}

Input first(const Options& o) { return load(o.rep, o.intervals, o.n, ""); }
Input second(const Options& o) { return load(o.rep2, o.intervals2, o.n, "2"); }

typea::IntervalDecomposition decomposition(const Input& in) { return in.dec ? *in.dec : typea::decompose(in.rep); }

DimVector dimension(const Options& o, const Representation& m) {
  if (o.e.empty()) throw UsageError("--e is required");
  DimVector e(parse_csv(o.e, "--e"));
  if (e.size() != m.quiver().vertex_count())
    throw DomainError("--e has " + std::to_string(e.size()) + " entries for " +
                      std::to_string(m.quiver().vertex_count()) + " vertices");
  if (!e.fits_in(m.dims())) throw DomainError("e = " + to_string(e) + " does not fit in " + to_string(m.dims()));
  return e;
}

std::vector<std::uint32_t> prime_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  for (long v : parse_csv(text, "--primes")) out.push_back(static_cast<std::uint32_t>(v));
  return out;
}

/// M over F_p: reduced from Q, or checked against --p.
Representation over_fp(const Representation& m, std::uint32_t p) {
  if (m.field().is_prime()) {
    if (p != 0 && p != m.field().characteristic())
      throw DomainError("representation is over " + m.field().name() + " but --p is " + std::to_string(p));
    return m;
  }
  if (p == 0) throw UsageError("--p is required for a representation over Q");
  return reduce_mod(m, p);
}

CountOptions count_options(const Options& o) { return {o.budget, 0}; }

// ---------------------------------------------------------------- serialization

json integers(const std::vector<Integer>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

template <class T>
std::string csv(const std::vector<T>& xs) {
  std::vector<std::string> parts;
  for (const auto& x : xs) {
    std::ostringstream ss;
    ss << x;
    parts.push_back(ss.str());
  }
  return "(" + join(parts, ",") + ")";
}

/// Exponent-vector / coefficient pairs in graded lex order.
json poly_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({e, to_json(c)});
  return out;
}

json interval_json(const typea::IntervalDecomposition& m) {
  json out = json::array();
  for (const auto& [u, k] : m.multiplicities()) out.push_back({u.i, u.j, k});
  return out;
}

json count_poly_json(const CountPoly& cp) {
  json out;
  out["coefficients"] = integers(cp.coefficients);
  out["polynomial"] = to_string(cp);
  out["consistency"] = to_string(cp.consistency);
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- subcommands

Result cmd_decompose(const Options& o) {
  const Input in = first(o);
  const auto dec = decomposition(in);
  const auto r = typea::ranks_from_multiplicities(dec);
  json ranks = json::array();
  for (int i = 1; i <= dec.n(); ++i)
    for (int j = i; j <= dec.n(); ++j) ranks.push_back({i, j, r(i, j)});
  Result res;
  res.outputs["intervals"] = typea::to_string(dec);
  res.outputs["multiplicities"] = interval_json(dec);
  res.outputs["dims"] = dec.dims().entries();
  res.outputs["ranks"] = ranks;
  res.provenance["engine"] = in.dec ? "interval syntax" : "rank sequence";
  res.line(typea::to_string(dec));
  res.line("dims " + to_string(dec.dims()));
  return res;
}

Result cmd_hom(const Options& o, bool ext) {
  const Input n = first(o), m = second(o);
  Result res;
  const std::size_t value = ext ? ext1_dim(n.rep, m.rep) : hom_dim(n.rep, m.rep);
  res.outputs[ext ? "ext1" : "hom"] = value;
  res.provenance["engine"] = "phi-map";
  res.line(std::to_string(value));
  if (n.rep.quiver().is_equioriented_a()) {
    const auto a = decomposition(n), b = decomposition(m);
    const long closed = ext ? typea::ext1(a, b) : typea::hom(a, b);
    res.outputs["closed_form"] = closed;
    if (closed != static_cast<long>(value)) throw std::logic_error("interval closed form disagrees with the phi-map");
  }
  if (!ext && o.embed) {
    const auto search = generic_embeds(n.rep, m.rep, o.trials, o.seed);
    res.outputs["embeds"] = search.found;
    res.outputs["embedding_probabilistic"] = search.probabilistic;
    res.provenance["trials_used"] = search.trials_used;
    res.provenance["seed"] = o.seed;
    res.line(std::string("embeds ") + (search.found ? "true" : search.probabilistic ? "unknown (none found)" : "false"));
  }
  return res;
}

Result cmd_euler(const Options& o) {
  const Input n = first(o);
  Result res;
  long value = 0;
  if (!o.rep2.empty() || !o.intervals2.empty()) {
    const Input m = second(o);
    value = euler_form(n.rep.quiver(), n.rep.dims(), m.rep.dims());
    res.outputs["form"] = "<dim N, dim M>";
  } else {
    const DimVector e = dimension(o, n.rep);
    value = euler_form(n.rep.quiver(), e, n.rep.dims() - e);
    res.outputs["form"] = "<e, d - e>";
  }
  res.outputs["euler"] = value;
  res.line(std::to_string(value));
  return res;
}

Result cmd_count(const Options& o) {
  const Input in = first(o);
  const DimVector e = dimension(o, in.rep);
  const Representation m = over_fp(in.rep, o.p);
  const Integer points = count_points(m, e, count_options(o));
  Result res;
  res.outputs["points"] = to_json(points);
  res.outputs["p"] = m.field().characteristic();
  res.provenance["engine"] = "echelon enumeration";
  res.provenance["estimate"] = to_json(enumeration_estimate(m, e));
  res.provenance["budget"] = o.budget;
  res.line(points.get_str());
  return res;
}

Result cmd_poly(const Options& o) {
  const Input in = first(o);
  const DimVector e = dimension(o, in.rep);
  const CountPoly cp = counting_polynomial(in.rep, e, o.primes.empty() ? std::vector<std::uint32_t>{} : prime_list(o.primes),
                                           count_options(o));
  Result res;
  res.outputs = count_poly_json(cp);
  res.line(to_string(cp));
  res.line("consistency " + to_string(cp.consistency));
  if (cp.consistency != Consistency::inconsistent) {
    const Integer chi = euler_characteristic(cp);
    res.outputs["euler_characteristic"] = to_json(chi);
    res.outputs["betti"] = integers(betti_numbers(cp));
    res.line("chi " + chi.get_str());
  } else {
    json raw = json::array();
    for (const auto& x : cp.raw) raw.push_back(to_json(x));
    res.outputs["raw"] = raw;
  }
  res.provenance["engine"] = "interpolation";
  res.provenance["primes_used"] = cp.primes_used;
  res.provenance["held_out_prime"] = cp.held_out_prime;
  res.provenance["skipped_primes"] = cp.skipped_primes;
  res.provenance["degree_bound"] = degree_bound(in.rep.dims(), e);
  res.provenance["budget"] = o.budget;
  return res;
}

Result cmd_cells(const Options& o) {
  const Input in = first(o);
  const auto dec = decomposition(in);
  const DimVector e = dimension(o, in.rep);
  const auto cq = typea::coefficient_quiver(dec);
  std::vector<std::string> rows;
  json rows_json = json::array();
  for (const auto& u : cq.rows) {
    rows.push_back(typea::to_string(u));
    rows_json.push_back({u.i, u.j});
  }
  Result res;
  res.outputs["rows"] = rows_json;
  res.line("rows " + join(rows, " "));
  json points = json::array();
  for (const auto& l : typea::fixed_points(cq, e)) {
    const long dim = typea::cell_dimension(cq, l);
    points.push_back({{"start", l.start}, {"cell_dimension", dim}, {"class", typea::to_string(typea::fixed_point_class(cq, l))}});
    res.line("start " + csv(l.start) + " dim " + std::to_string(dim));
  }
  res.outputs["fixed_points"] = points;
  res.provenance["engine"] = "coefficient quiver";
  return res;
}

Result cmd_poincare(const Options& o) {
  const Input in = first(o);
  const auto dec = decomposition(in);
  const DimVector e = dimension(o, in.rep);
  const CountPoly cp = typea::poincare_polynomial(dec, e);
  Result res;
  res.outputs = count_poly_json(cp);
  res.outputs["euler_characteristic"] = to_json(typea::euler_char_cells(dec, e));
  res.line(to_string(cp));
  res.line("chi " + typea::euler_char_cells(dec, e).get_str());
  res.provenance["engine"] = "cells";
  if (o.p != 0) {
    const Integer points = count_points(reduce_mod(in.rep, o.p), e, count_options(o));
    const Integer expected = cp.evaluate(o.p);
    res.outputs["count_check"] = {{"p", o.p}, {"points", to_json(points)}, {"agree", points == expected}};
    res.line("count at p=" + std::to_string(o.p) + " " + points.get_str() + (points == expected ? " (agrees)" : " (DISAGREES)"));
  }
  return res;
}

Result cmd_strata(const Options& o) {
  const Input in = first(o);
  const auto dec = decomposition(in);
  const DimVector e = dimension(o, in.rep);
  const auto s = typea::strata(dec, e);
  Result res;
  json list = json::array();
  for (const auto& st : s) {
    list.push_back({{"class", typea::to_string(st.sub)},
                    {"dim", st.dim},
                    {"cells", st.cells},
                    {"cell_polynomial", integers(st.cell_polynomial)}});
    res.line(typea::to_string(st.sub) + "  dim " + std::to_string(st.dim) + "  cells " + std::to_string(st.cells));
  }
  res.outputs["strata"] = list;
  res.outputs["top_strata"] = typea::count_top_strata(s);
  res.line("top-dimensional strata " + std::to_string(typea::count_top_strata(s)));
  res.provenance["engine"] = "cells";
  if (o.p != 0) {
    const int n = dec.n();
    std::vector<Representation> family;
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) family.push_back(typea::interval_module(n, {i, j}, Field::prime(o.p)));
    const Representation m = reduce_mod(in.rep, o.p);
    json ff = json::array();
    for (const auto& sc : classify_strata_ff(m, e, family, o.budget)) {
      const auto cls = typea::decompose(restrict_to(m, sc.representative));
      ff.push_back({{"class", typea::to_string(cls)}, {"points", to_json(sc.points)}});
      res.line("p=" + std::to_string(o.p) + " " + typea::to_string(cls) + "  points " + sc.points.get_str());
    }
    res.outputs["ff_strata"] = ff;
    res.provenance["p"] = o.p;
  }
  return res;
}

cluster::ChiStrategy strategy(const Options& o) {
  if (o.strategy == "automatic") return cluster::ChiStrategy::automatic;
  if (o.strategy == "cells") return cluster::ChiStrategy::cells;
  if (o.strategy == "count") return cluster::ChiStrategy::count;
  throw UsageError("--strategy is automatic, cells or count");
}

cluster::ChiStrategy resolved(cluster::ChiStrategy s, const Representation& m) {
  if (s != cluster::ChiStrategy::automatic) return s;
  return m.quiver().is_equioriented_a() ? cluster::ChiStrategy::cells : cluster::ChiStrategy::count;
}

Result cmd_fpoly(const Options& o) {
  const Input in = first(o);
  const auto s = resolved(strategy(o), in.rep);
  const LaurentPoly f = cluster::f_polynomial(in.rep, s, count_options(o));
  Result res;
  res.outputs["fpoly"] = poly_json(f);
  res.outputs["text"] = to_string(f, y_names(in.rep.quiver().vertex_count()));
  res.provenance["engine"] = cluster::to_string(s);
  res.line(to_string(f, y_names(in.rep.quiver().vertex_count())));
  return res;
}

Result cmd_gvector(const Options& o) {
  const Input in = first(o);
  const auto g = cluster::g_vector(in.rep);
  const auto h = cluster::g_vector_from_injectives(in.rep);
  if (g != h) throw std::logic_error("g-vector routes disagree: " + csv(g) + " vs " + csv(h));
  Result res;
  res.outputs["g"] = g;
  res.provenance["engine"] = "euler form, checked against the minimal injective resolution";
  res.line(csv(g));
  return res;
}

Result cmd_cc(const Options& o) {
  const Input in = first(o);
  const auto s = resolved(strategy(o), in.rep);
  const LaurentPoly cc = cluster::cluster_character(in.rep, s, count_options(o));
  const auto names = xy_names(in.rep.quiver().vertex_count());
  Result res;
  res.outputs["cc"] = poly_json(cc);
  res.outputs["text"] = to_string(cc, names);
  res.outputs["at_ones"] = to_json(cc.at_ones());
  res.provenance["engine"] = cluster::to_string(s);
  res.line(to_string(cc, names));
  return res;
}

std::string dec_text(const Representation& m) {
  return m.quiver().is_equioriented_a() ? typea::to_string(typea::decompose(m)) : to_string(m.dims());
}

Result cmd_verify_mult(const Options& o) {
  const Input s = first(o), x = second(o);
  const auto ge = cluster::make_generating(s.rep, x.rep);
  const auto rep = cluster::verify_multiplication(ge, strategy(o));
  const std::size_t n = s.rep.quiver().vertex_count();
  const auto names = xy_names(n), ys = y_names(n);
  Result res;
  res.outputs["Y"] = dec_text(ge.y);
  res.outputs["X_S"] = dec_text(ge.x_s_module());
  res.outputs["S_X"] = dec_text(ge.s_x_module());
  res.outputs["dim_S_X"] = rep.dim_s_x.entries();
  res.outputs["f"] = rep.f;
  res.outputs["lhs"] = poly_json(rep.lhs);
  res.outputs["rhs"] = poly_json(rep.rhs);
  res.outputs["residual"] = poly_json(rep.residual);
  res.outputs["f_lhs"] = poly_json(rep.f_lhs);
  res.outputs["f_rhs"] = poly_json(rep.f_rhs);
  res.outputs["holds"] = rep.holds;
  res.provenance["engine"] = cluster::to_string(resolved(strategy(o), s.rep));
  res.line("Y " + dec_text(ge.y));
  res.line("X_S " + dec_text(ge.x_s_module()) + "   S^X " + dec_text(ge.s_x_module()));
  res.line("f " + csv(rep.f));
  res.line("CC(X)CC(S) = " + to_string(rep.lhs, names));
  res.line("rhs        = " + to_string(rep.rhs, names));
  res.line("residual   = " + to_string(rep.residual, names));
  res.line("F-identity " + bool_text(rep.f_lhs == rep.f_rhs));
  res.line("holds " + bool_text(rep.holds));
  return res;
}

Result cmd_psi_check(const Options& o) {
  const Input s = first(o), x = second(o);
  const auto ge = cluster::make_generating(s.rep, x.rep);
  const DimVector e = dimension(o, ge.y);
  const auto report = cluster::psi_count_identity(ge, e, prime_list(o.primes.empty() ? "2,3" : o.primes), o.budget);
  Result res;
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"p", r.p}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"holds", r.holds},
                    {"skipped", r.skipped}, {"note", r.note}});
    res.line("p=" + std::to_string(r.p) + "  #Gr_e(Y) " + r.lhs.get_str() + "  sum " + r.rhs.get_str() +
             (r.skipped ? "  skipped: " + r.note : r.holds ? "  ok" : "  MISMATCH"));
  }
  res.outputs["split"] = ge.split;
  res.outputs["rows"] = rows;
  res.outputs["holds"] = report.holds;
  res.provenance["budget"] = o.budget;
  res.line("holds " + bool_text(report.holds));
  return res;
}

Result cmd_deg_compare(const Options& o) {
  const Input m = first(o), n = second(o);
  const auto rm = typea::rank_sequence(m.rep), rn = typea::rank_sequence(n.rep);
  const bool mn_r = typea::deg_leq_ranks(rm, rn), nm_r = typea::deg_leq_ranks(rn, rm);
  const bool mn_h = typea::deg_leq_hom(m.rep, n.rep), nm_h = typea::deg_leq_hom(n.rep, m.rep);
  if (mn_r != mn_h || nm_r != nm_h) throw std::logic_error("rank and hom degeneration criteria disagree");
  Result res;
  res.outputs["M_degenerates_to_N"] = mn_r;
  res.outputs["N_degenerates_to_M"] = nm_r;
  res.provenance["engine"] = "rank sequences, checked against hom dimensions";
  res.line("M <=deg N " + bool_text(mn_r));
  res.line("N <=deg M " + bool_text(nm_r));
  return res;
}

Result cmd_flat_locus(const Options& o) {
  const auto c = typea::flat_locus_class(decomposition(first(o)));
  Result res;
  res.outputs["class"] = typea::to_string(c);
  res.line(typea::to_string(c));
  return res;
}

Result cmd_catenoid(const Options& o) {
  const bool c = typea::is_catenoid(decomposition(first(o)));
  Result res;
  res.outputs["catenoid"] = c;
  res.line(bool_text(c));
  return res;
}

Result cmd_ar_quiver(const Options& o) {
  Quiver q;
  if (!o.rep.empty() || !o.intervals.empty())
    q = first(o).rep.quiver();
  else if (o.n > 0)
    q = Quiver::equioriented_a(static_cast<std::size_t>(o.n));
  else
    throw UsageError("ar-quiver needs --rep FILE or --n N");
  const auto cls = ar::classify(q);
  const auto g = ar::knit(q);
  Result res;
  json vs = json::array();
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    std::vector<std::size_t> succ;
    for (const auto& [s, t] : g.arrows)
      if (s == v) succ.push_back(t);
    const auto& x = g.vertices[v];
    json entry = {{"id", v}, {"projective", x.projective + 1}, {"level", x.level}, {"dim", x.dim.entries()},
                  {"successors", succ}};
    entry["tau"] = g.tau[v] ? json(*g.tau[v]) : json(nullptr);
    vs.push_back(entry);
    res.line(std::to_string(v) + "  tau^-" + std::to_string(x.level) + " P" + std::to_string(x.projective + 1) + "  " +
             to_string(x.dim) + "  -> " + csv(succ));
  }
  res.outputs["type"] = cls.name();
  res.outputs["vertices"] = vs;
  res.outputs["mesh_additive"] = g.mesh_additive();
  res.line("type " + cls.name() + ", " + std::to_string(g.vertices.size()) + " vertices, mesh additive " +
           bool_text(g.mesh_additive()));
  return res;
}

SubrepWitness parse_witness(const std::string& spec, const Representation& m) {
  std::string text = spec;
  if (spec.empty() || spec[0] != '[') {
    std::ifstream in(spec);
    if (!in) throw ParseError("cannot open witness file", spec);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed witness", "byte " + std::to_string(e.byte));
  }
  const std::size_t n = m.quiver().vertex_count();
  if (!doc.is_array() || doc.size() != n) throw ParseError("witness lists one row list per vertex", "/");
  std::vector<Matrix> spans;
  for (std::size_t v = 0; v < n; ++v) {
    const json& rows = doc[v];
    if (!rows.is_array()) throw ParseError("expected a list of rows", "/" + std::to_string(v));
    Matrix b(rows.size(), m.dim(v));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!rows[r].is_array() || rows[r].size() != m.dim(v))
        throw ParseError("row length must be d_" + std::to_string(v + 1), "/" + std::to_string(v) + "/" + std::to_string(r));
      for (std::size_t c = 0; c < m.dim(v); ++c) {
        const json& x = rows[r][c];
        b(r, c) = x.is_string() ? parse_rational(x.get<std::string>()) : Rational(static_cast<long>(x.get<long long>()));
      }
    }
    spans.push_back(b);
  }
  auto w = SubrepWitness::from_spanning_rows(m.field(), spans);
  if (!is_stable(m, w)) throw DomainError("the witness is not a subrepresentation");
  return w;
}

Result cmd_tangent(const Options& o) {
  const Input in = first(o);
  Result res;
  if (!o.witness.empty()) {
    const auto w = parse_witness(o.witness, in.rep);
    const std::size_t t = tangent_dim(in.rep, w);
    const DimVector e = w.dims();
    res.outputs["e"] = e.entries();
    res.outputs["tangent"] = t;
    res.outputs["expected_dim"] = euler_form(in.rep.quiver(), e, in.rep.dims() - e);
    res.line(std::to_string(t));
    return res;
  }
  const DimVector e = dimension(o, in.rep);
  const Representation m = over_fp(in.rep, o.p);
  std::map<std::size_t, long> histogram;
  for (const auto& w : enumerate_subreps(m, e, o.budget)) ++histogram[tangent_dim(m, w)];
  json hist = json::array();
  long points = 0;
  for (const auto& [t, k] : histogram) {
    hist.push_back({t, k});
    points += k;
    res.line("tangent " + std::to_string(t) + "  points " + std::to_string(k));
  }
  const long expected = euler_form(in.rep.quiver(), e, in.rep.dims() - e);
  res.outputs["histogram"] = hist;
  res.outputs["points"] = points;
  res.outputs["expected_dim"] = expected;
  res.outputs["rigid"] = is_rigid(in.rep);
  res.provenance["p"] = m.field().characteristic();
  res.provenance["budget"] = o.budget;
  res.line("<e, d-e> " + std::to_string(expected) + ", rigid " + bool_text(is_rigid(in.rep)));
  return res;
}

Result cmd_demo_elliptic(const Options& o) {
  if (o.p == 0) throw UsageError("--p is required");
  const auto r = demo_elliptic(o.p, count_options(o));
  Result res;
  res.outputs["p"] = r.p;
  res.outputs["grassmannian_points"] = to_json(r.grassmannian);
  res.outputs["curve_points"] = r.curve;
  res.outputs["difference"] = to_json(Integer(r.grassmannian - Integer(static_cast<unsigned long>(r.curve))));
  res.outputs["agree"] = r.agree();
  res.provenance["estimate"] = to_json(r.estimate);
  res.provenance["budget"] = o.budget;
  res.line("#Gr_(0,1,1)(M)(F_" + std::to_string(r.p) + ") " + r.grassmannian.get_str());
  res.line("#{y^2 z = x^3 + z^3}(F_" + std::to_string(r.p) + ") " + std::to_string(r.curve));
  res.line("agree " + bool_text(r.agree()));
  return res;
}

// ---------------------------------------------------------------- dispatch

void emit(std::ostream& out, const std::string& format, const std::string& command, const json& inputs,
          const Result& res) {
  if (format == "machine") {
    json doc;
    doc["command"] = command;
    doc["inputs"] = inputs;
    doc["outputs"] = res.outputs;
    doc["provenance"] = res.provenance;
    out << doc.dump(2) << "\n";
    return;
  }
  for (const auto& l : res.lines) out << l << "\n";
}

int fail(std::ostream& out, std::ostream& err, const std::string& format, const std::string& command,
         const std::string& kind, const std::string& message, int code) {
  err << "error: " << message << "\n";
  if (format == "machine") {
    json doc;
    doc["command"] = command;
    doc["error"] = {{"kind", kind}, {"message", message}};
    out << doc.dump(2) << "\n";
  }
  return code;
}

constexpr const char* kConventions =
    "Vertices are 1-based in files and flags; arrow indices (the keys of 'matrices') are 0-based.\n"
    "Exit codes: 0 ok, 1 usage, 2 malformed input or domain error, 3 budget exceeded, 4 internal check failed.";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Quiver representations and quiver Grassmannians", "qgrass"};
  app.footer(kConventions);
  app.require_subcommand(1, 1);

  using Handler = std::function<Result(const Options&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  const auto sub = [&](const char* name, const char* help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    commands.emplace_back(s, std::move(h));
    return s;
  };
  const auto input = [&](CLI::App* s) {
    s->add_option("--rep", o.rep, "representation file");
    s->add_option("--intervals", o.intervals, "type A shorthand U[i,j]^m + ...");
    s->add_option("--n", o.n, "number of vertices for --intervals");
  };
  const auto input2 = [&](CLI::App* s) {
    s->add_option("--rep2", o.rep2, "second representation file");
    s->add_option("--intervals2", o.intervals2, "second module in interval shorthand");
  };
  const auto dim_e = [&](CLI::App* s) { s->add_option("--e", o.e, "sub-dimension vector, comma separated"); };
  const auto prime = [&](CLI::App* s) { s->add_option("--p", o.p, "prime for finite-field counts"); };
  const auto budget = [&](CLI::App* s) { s->add_option("--budget", o.budget, "enumeration budget in tuples"); };
  const auto strat = [&](CLI::App* s) {
    s->add_option("--strategy", o.strategy, "Euler characteristics from cells or counts")
        ->check(CLI::IsMember({"automatic", "cells", "count"}));
  };

  input(sub("decompose", "interval decomposition and rank sequence (equioriented A_n)", cmd_decompose));
  {
    auto* s = sub("hom", "dim Hom(N, M) for N = --rep, M = --rep2", [](const Options& x) { return cmd_hom(x, false); });
    input(s);
    input2(s);
    s->add_flag("--embed", o.embed, "search Hom(N, M) for an injective map");
    s->add_option("--seed", o.seed, "seed for --embed");
    s->add_option("--trials", o.trials, "samples for --embed");
  }
  {
    auto* s = sub("ext", "dim Ext^1(N, M) for N = --rep, M = --rep2", [](const Options& x) { return cmd_hom(x, true); });
    input(s);
    input2(s);
  }
  {
    auto* s = sub("euler", "<dim N, dim M>, or <e, d - e> with --e", cmd_euler);
    input(s);
    input2(s);
    dim_e(s);
  }
  {
    auto* s = sub("count", "number of F_p-points of Gr_e(M)", cmd_count);
    input(s);
    dim_e(s);
    prime(s);
    budget(s);
  }
  {
    auto* s = sub("poly", "counting polynomial by interpolation over primes", cmd_poly);
    input(s);
    dim_e(s);
    s->add_option("--primes", o.primes, "interpolation primes, comma separated (held-out prime last)");
    budget(s);
  }
  {
    auto* s = sub("cells", "torus fixed points and cell dimensions", cmd_cells);
    input(s);
    dim_e(s);
  }
  {
    auto* s = sub("poincare", "Poincare polynomial from the cell decomposition", cmd_poincare);
    input(s);
    dim_e(s);
    prime(s);
    budget(s);
  }
  {
    auto* s = sub("strata", "iso-strata of Gr_e(M) with dimensions", cmd_strata);
    input(s);
    dim_e(s);
    prime(s);
    budget(s);
  }
  {
    auto* s = sub("fpoly", "F-polynomial", cmd_fpoly);
    input(s);
    strat(s);
    budget(s);
  }
  input(sub("gvector", "g-vector", cmd_gvector));
  {
    auto* s = sub("cc", "cluster character", cmd_cc);
    input(s);
    strat(s);
    budget(s);
  }
  {
    auto* s = sub("verify-mult", "multiplication formula for S = --rep, X = --rep2", cmd_verify_mult);
    input(s);
    input2(s);
    strat(s);
  }
  {
    auto* s = sub("psi-check", "point-count identity for the extension of S = --rep by X = --rep2", cmd_psi_check);
    input(s);
    input2(s);
    dim_e(s);
    s->add_option("--primes", o.primes, "primes, comma separated (default 2,3)");
    budget(s);
  }
  {
    auto* s = sub("deg-compare", "degeneration order between M = --rep and N = --rep2", cmd_deg_compare);
    input(s);
    input2(s);
  }
  input(sub("flat-locus", "flat-locus class for d = (n+1, ..., n+1)", cmd_flat_locus));
  input(sub("catenoid", "whether the summands lie on one path of the AR quiver", cmd_catenoid));
  input(sub("ar-quiver", "Auslander-Reiten quiver by knitting (quiver of --rep, or A_n with --n)", cmd_ar_quiver));
  {
    auto* s = sub("tangent", "tangent dimension at --witness, or over every F_p-point of Gr_e(M)", cmd_tangent);
    input(s);
    dim_e(s);
    prime(s);
    budget(s);
    s->add_option("--witness", o.witness, "JSON rows per vertex, inline or as a file");
  }
  {
    auto* s = sub("demo-elliptic", "plane cubic as a quiver Grassmannian", cmd_demo_elliptic);
    prime(s);
    budget(s);
  }

  std::vector<std::string> argv_store{"qgrass"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  for (const auto& [s, handler] : commands) {
    if (!s->parsed()) continue;
    const std::string name = s->get_name();
    json inputs = json::object();
    for (const CLI::Option* opt : s->get_options()) {
      if (opt->count() == 0 || opt->get_name() == "--format" || opt->get_name() == "--help") continue;
      const std::string key = opt->get_name().substr(2);
      inputs[key] = opt->get_expected_min() == 0 ? json(true) : json(opt->as<std::string>());
    }
    try {
      emit(out, o.format, name, inputs, handler(o));
      return kOk;
    } catch (const UsageError& e) {
      return fail(out, err, o.format, name, "usage", e.what(), kUsage);
    } catch (const BudgetExceeded& e) {
      return fail(out, err, o.format, name, "budget", e.what(), kBudget);
    } catch (const ParseError& e) {
      return fail(out, err, o.format, name, "parse", e.what(), kDomain);
    } catch (const DomainError& e) {
      return fail(out, err, o.format, name, "domain", e.what(), kDomain);
    } catch (const std::logic_error& e) {
      return fail(out, err, o.format, name, "internal", e.what(), kInternal);
    }
  }
  return kUsage;
}

}  // namespace qgrass::cli
