#include "flatcx/json_io.hpp"

#include <set>

namespace flatcx {

namespace {

std::string child(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string child(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError("expected an object", where.empty() ? "/" : where);
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"", where.empty() ? "/" : where);
  return *it;
}

Index index_from_json(const Json& j, Index bound, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError("expected an integer index", where);
  const auto v = j.get<long long>();
  if (v < 0 || v >= bound) throw ParseError("index out of range", where);
  return static_cast<Index>(v);
}

Index key_index(const std::string& key, Index bound, const std::string& where) {
  if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("coefficient key must be a basis index", where);
  }
  const long long v = std::stoll(key);
  if (v >= bound) throw ParseError("coefficient index out of range", where);
  return static_cast<Index>(v);
}

Json coeffs_to_json(const RVector& v) {
  Json out = Json::object();
  for (Index k = 0; k < v.size(); ++k) {
    if (!v(k).is_zero()) out[std::to_string(k)] = to_json(v(k));
  }
  return out;
}

// [{"i", "j", "coeffs"}] over the pairs selected by `keep`.
template <class Keep>
Json bilinear_entries(const BilinearMap<Rational>& b, Keep keep) {
  Json out = Json::array();
  for (Index i = 0; i < b.dim(); ++i) {
    for (Index j = 0; j < b.dim(); ++j) {
      if (!keep(i, j)) continue;
      const RVector v = b.on_basis(i, j);
      if (is_zero(v)) continue;
      out.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs_to_json(v)}});
    }
  }
  return out;
}

Json line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

Json to_json(const Rational& x) { return x.str(); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError("expected a rational string \"p/q\"", where);
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(e.what(), where);
  }
}

Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    std::vector<std::uint32_t> full(p.num_vars(), 0);
    std::copy(e.begin(), e.end(), full.begin());
    out.push_back({{"coeff", to_json(c)}, {"exponents", full}});
  }
  return out;
}

Polynomial polynomial_from_json(const Json& j, std::size_t num_vars, const std::string& where) {
  if (!j.is_array()) throw ParseError("expected a polynomial term list", where);
  Polynomial p(Rational(0), num_vars);
  std::set<Exponents> seen;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string at = child(where, t);
    const Rational c = rational_from_json(field(j[t], "coeff", at), child(at, "coeff"));
    const Json& ex = field(j[t], "exponents", at);
    if (!ex.is_array() || ex.size() != num_vars) {
      throw ParseError("exponents must list one entry per variable", child(at, "exponents"));
    }
    Exponents e;
    for (std::size_t k = 0; k < ex.size(); ++k) {
      if (!ex[k].is_number_unsigned() && !(ex[k].is_number_integer() && ex[k].get<long long>() >= 0)) {
        throw ParseError("exponent must be a non-negative integer", child(child(at, "exponents"), k));
      }
      e.push_back(ex[k].get<std::uint32_t>());
    }
    if (c.is_zero()) throw ParseError("zero coefficients are not stored", child(at, "coeff"));
    const Polynomial term = Polynomial::monomial(c, e, num_vars);
    if (!seen.insert(term.terms().begin()->first).second) {
      throw ParseError("duplicate monomial", at);
    }
    p += term;
  }
  return p;
}

Json to_json(const RVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const PVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const RMatrix& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

RMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a non-empty array of rows", where);
  const std::size_t rows = j.size();
  if (!j[0].is_array()) throw ParseError("expected a row array", child(where, 0));
  const std::size_t cols = j[0].size();
  RMatrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string at = child(where, r);
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError("rows must have equal length", at);
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Index>(r), static_cast<Index>(c)) = rational_from_json(j[r][c], child(at, c));
    }
  }
  return m;
}

Json to_json(const LieAlgebra& g) {
  return {{"dim", g.dim()},
          {"brackets", bilinear_entries(g.structure_constants(), [](Index i, Index j) { return i < j; })}};
}

LieAlgebra lie_algebra_from_json(const Json& j, const std::string& where) {
  const Json& dim_j = field(j, "dim", where);
  if (!dim_j.is_number_integer() || dim_j.get<long long>() <= 0) {
    throw ParseError("dim must be a positive integer", child(where, "dim"));
  }
  const Index n = dim_j.get<Index>();
  const Json& br = field(j, "brackets", where);
  if (!br.is_array()) throw ParseError("brackets must be an array", child(where, "brackets"));
  std::vector<BracketEntry> entries;
  std::set<std::pair<Index, Index>> seen;
  for (std::size_t e = 0; e < br.size(); ++e) {
    const std::string at = child(child(where, "brackets"), e);
    BracketEntry entry;
    entry.i = index_from_json(field(br[e], "i", at), n, child(at, "i"));
    entry.j = index_from_json(field(br[e], "j", at), n, child(at, "j"));
    if (entry.i >= entry.j) throw ParseError("bracket entries must have i < j", at);
    if (!seen.insert({entry.i, entry.j}).second) throw ParseError("duplicate bracket entry", at);
    const Json& coeffs = field(br[e], "coeffs", at);
    if (!coeffs.is_object()) throw ParseError("coeffs must be an object", child(at, "coeffs"));
    for (const auto& [key, value] : coeffs.items()) {
      const std::string cat = child(child(at, "coeffs"), key);
      entry.coeffs.emplace_back(key_index(key, n, cat), rational_from_json(value, cat));
    }
    entries.push_back(std::move(entry));
  }
  return LieAlgebra::from_brackets(n, entries);
}

Json to_json(const Connection& c) {
  return {{"gamma", bilinear_entries(c.gamma(), [](Index, Index) { return true; })}};
}

BilinearMap<Rational> gamma_from_json(const Json& j, Index dim, const std::string& where) {
  const Json& entries = field(j, "gamma", where);
  if (!entries.is_array()) throw ParseError("gamma must be an array", child(where, "gamma"));
  BilinearMap<Rational> gamma(dim);
  std::set<std::pair<Index, Index>> seen;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string at = child(child(where, "gamma"), e);
    const Index i = index_from_json(field(entries[e], "i", at), dim, child(at, "i"));
    const Index jj = index_from_json(field(entries[e], "j", at), dim, child(at, "j"));
    if (!seen.insert({i, jj}).second) throw ParseError("duplicate gamma entry", at);
    const Json& coeffs = field(entries[e], "coeffs", at);
    if (!coeffs.is_object()) throw ParseError("coeffs must be an object", child(at, "coeffs"));
    for (const auto& [key, value] : coeffs.items()) {
      const std::string cat = child(child(at, "coeffs"), key);
      gamma(i, jj, key_index(key, dim, cat)) = rational_from_json(value, cat);
    }
  }
  return gamma;
}

Json to_json(const Frame& f) {
  Json fields = Json::array();
  for (const auto& v : f.fields()) {
    Json comps = Json::array();
    for (const auto& p : v.components()) comps.push_back(to_json(p));
    fields.push_back(std::move(comps));
  }
  return {{"half_dim", f.half_dim()}, {"fields", std::move(fields)}};
}

Frame frame_from_json(const Json& j, const std::string& where) {
  const Json& hd = field(j, "half_dim", where);
  if (!hd.is_number_integer() || hd.get<long long>() <= 0) {
    throw ParseError("half_dim must be a positive integer", child(where, "half_dim"));
  }
  const std::size_t n = hd.get<std::size_t>();
  const std::size_t m = 2 * n;
  const Json& fs = field(j, "fields", where);
  if (!fs.is_array() || fs.size() != m) throw ParseError("fields must list exactly 2*half_dim fields", child(where, "fields"));
  std::vector<PolyVectorField> fields;
  for (std::size_t a = 0; a < m; ++a) {
    const std::string at = child(child(where, "fields"), a);
    if (!fs[a].is_array() || fs[a].size() != m) throw ParseError("field must have 2*half_dim components", at);
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < m; ++i) comps.push_back(polynomial_from_json(fs[a][i], m, child(at, i)));
    fields.emplace_back(std::move(comps));
  }
  return Frame(n, std::move(fields));
}

Json to_json(const ClassificationVerdict& v) {
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses) {
    witnesses.push_back({{"check", w.check}, {"basis", {w.i, w.j}}, {"defect", to_json(w.defect)}});
  }
  return {{"integrable", v.integrable},
          {"abelian", v.abelian},
          {"bi_invariant", v.bi_invariant},
          {"witnesses", std::move(witnesses)}};
}

Document document_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object", "/");
  if (j.contains("half_dim") || j.contains("fields")) return FrameDocument{frame_from_json(j)};
  if (!j.contains("dim")) {
    throw ParseError("unrecognised document: expected \"dim\"/\"brackets\" or \"half_dim\"/\"fields\"", "/");
  }
  AlgebraDocument doc{lie_algebra_from_json(j), std::nullopt, std::nullopt};
  if (j.contains("J")) doc.j = matrix_from_json(j["J"], "/J");
  if (j.contains("metric")) doc.metric = matrix_from_json(j["metric"], "/metric");
  return doc;
}

Json to_json(const Document& d) {
  if (const auto* f = std::get_if<FrameDocument>(&d)) return to_json(f->frame);
  const auto& a = std::get<AlgebraDocument>(d);
  Json out = to_json(a.algebra);
  if (a.j) out["J"] = to_json(*a.j);
  if (a.metric) out["metric"] = to_json(*a.metric);
  return out;
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const Json lc = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", "line " + std::to_string(lc[0].get<std::size_t>()) + ", column " +
                                           std::to_string(lc[1].get<std::size_t>()));
  }
}

Document parse_document(std::string_view text) { return document_from_json(parse_json_text(text)); }

std::string serialize(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace flatcx
