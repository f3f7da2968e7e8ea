#include "stringy/cli_io.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "stringy/error.hpp"

namespace stringy {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_integer(const std::string& token, Integer& out) {
  std::size_t start = (token[0] == '-' || token[0] == '+') ? 1 : 0;
  if (start == token.size()) return false;
  for (std::size_t i = start; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
  return out.set_str(token[0] == '+' ? token.substr(1) : token, 10) == 0;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

bool is_precondition(ErrorCode c) {
  switch (c) {
    case ErrorCode::UnsupportedDimension:
    case ErrorCode::NotCanonicalFano:
    case ErrorCode::NotLDP:
    case ErrorCode::NotAlmostPseudoreflexive:
    case ErrorCode::OriginNotInterior:
      return true;
    default:
      return false;
  }
}

Rational volume_of(const LatticePolytope& p) { return hull_volume(p.vertices()); }

bool e_function_ok(const StringyEFunction& e, const Rational& volume) {
  return e.is_symmetric() && stringy_euler(e) == volume;
}

std::string strategy_name(SubdivisionStrategy s) {
  return s == SubdivisionStrategy::VerticesOnly ? "vertices" : "boundary";
}

CheckResult evaluate(const LatticePolytope& p, Check check, const BatchOptions& options) {
  CheckResult r;
  r.check = check;
  bool ok = false;
  switch (check) {
    case Check::Classify: {
      ClassificationReport c = classify(p);
      r.report = to_json(c);
      ok = c.consistent() && (!c.origin_interior || c.is_reflexive == all_facets_at_distance_one(p));
      break;
    }
    case Check::E3d: {
      StringyEFunction e = stringy_e_canonical3d(p);
      Rational v = volume_of(p);
      r.report = Json{{"e_function", to_json(e)}, {"volume", to_json(v)}};
      ok = e_function_ok(e, v);
      break;
    }
    case Check::EGeneral: {
      StringyEFunction ev = stringy_e_general(p, SubdivisionStrategy::VerticesOnly);
      StringyEFunction eb = stringy_e_general(p, SubdivisionStrategy::AllBoundaryPoints);
      Rational v = volume_of(p);
      r.report = Json{{"vertices_only", to_json(ev)}, {"all_boundary_points", to_json(eb)}};
      ok = ev == eb && e_function_ok(ev, v);
      std::optional<StringyEFunction> closed;
      if (p.dim() == 3) closed = stringy_e_canonical3d(p);
      if (p.dim() == 2) closed = stringy_e_ldp(p);
      if (closed) {
        r.report["closed_form"] = to_json(*closed);
        ok = ok && *closed == ev;
      }
      r.report["volume"] = to_json(v);
      break;
    }
    case Check::Id24: {
      Identity24Report rep = identity24(p);
      r.report = to_json(rep);
      ok = rep.holds;
      break;
    }
    case Check::Lw: {
      LibgoberWoodReport rep = libgober_wood(p);
      r.report = to_json(rep);
      ok = rep.holds;
      break;
    }
    case Check::Cy: {
      Rational a = cy_stringy_euler(p);
      Rational b = cy_stringy_euler_normalfan(p);
      r.report = Json{{"e_str", to_json(a)}, {"e_str_normalfan", to_json(b)}};
      ok = a == b && (p.dim() != 3 || a == 24);
      break;
    }
    case Check::Estr: {
      StringyEFunction e;
      std::string method;
      if (options.strategy) {
        e = stringy_e_general(p, *options.strategy);
        method = "general/" + strategy_name(*options.strategy);
      } else if (p.dim() == 3) {
        e = stringy_e_canonical3d(p);
        method = "closed_form_3d";
      } else if (p.dim() == 2) {
        e = stringy_e_ldp(p);
        method = "ldp";
      } else {
        fail(ErrorCode::UnsupportedDimension, "E-functions need d = 2 or 3");
      }
      r.report = Json{{"method", method}, {"e_function", to_json(e)}, {"stringy_euler", to_json(stringy_euler(e))}};
      ok = e.is_symmetric();
      break;
    }
  }
  r.outcome = ok ? Outcome::Pass : Outcome::Fail;
  return r;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Human-readable rendering of one report value.
std::string text_value(const Json& j) {
  if (j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den")) {
    std::string den = j["den"].get<std::string>();
    return den == "1" ? j["num"].get<std::string>() : j["num"].get<std::string>() + "/" + den;
  }
  if (j.is_object() && j.contains("text") && j.contains("terms")) return j["text"].get<std::string>();
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void text_report(std::ostringstream& os, const Json& report, const std::string& indent) {
  for (const auto& [key, value] : report.items()) {
    if (value.is_object() && !(value.contains("num") || value.contains("terms"))) {
      os << indent << key << ":\n";
      text_report(os, value, indent + "  ");
    } else {
      os << indent << key << " = " << text_value(value) << "\n";
    }
  }
}

}  // namespace

std::vector<PolytopeRecord> parse_polytopes(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    ++number;
    std::string_view t = trim(line);
    if (!t.empty() && t.front() != '#') lines.emplace_back(number, t);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }

  std::vector<PolytopeRecord> out;
  std::size_t i = 0;
  while (i < lines.size()) {
    auto [header_line, header] = lines[i++];
    std::vector<std::string> tokens = split_ws(header);
    Integer a, b;
    if (tokens.size() < 2 || !parse_integer(tokens[0], a) || !parse_integer(tokens[1], b))
      parse_fail(header_line, "expected a header with two integers");
    if (a <= 0 || b <= 0 || !a.fits_slong_p() || !b.fits_slong_p()) parse_fail(header_line, "malformed counts");
    const long rows = a.get_si(), cols = b.get_si();

    PolytopeRecord rec;
    rec.index = out.size();
    rec.source_line = header_line;
    std::size_t label_pos = header.find(tokens[1], header.find(tokens[0]) + tokens[0].size()) + tokens[1].size();
    std::string_view label = trim(header.substr(label_pos));
    if (!label.empty() && label.front() == '#') label = trim(label.substr(1));
    if (!label.empty()) rec.label = std::string(label);

    std::vector<std::vector<Integer>> matrix;
    for (long r = 0; r < rows; ++r) {
      if (i >= lines.size()) parse_fail(header_line, "block ends after " + std::to_string(r) + " of " + std::to_string(rows) + " rows");
      auto [row_line, row] = lines[i++];
      std::vector<std::string> cells = split_ws(row);
      if (cells.size() != static_cast<std::size_t>(cols))
        parse_fail(row_line, "expected " + std::to_string(cols) + " integers, found " + std::to_string(cells.size()));
      std::vector<Integer> values(cells.size());
      for (std::size_t c = 0; c < cells.size(); ++c)
        if (!parse_integer(cells[c], values[c])) parse_fail(row_line, "not an integer: '" + cells[c] + "'");
      matrix.push_back(std::move(values));
    }

    std::vector<IntVector> points;
    int dim;
    if (rows < cols) {
      dim = static_cast<int>(rows);
      for (long c = 0; c < cols; ++c) {
        IntVector v(static_cast<std::size_t>(rows));
        for (long r = 0; r < rows; ++r) v[static_cast<std::size_t>(r)] = matrix[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        points.push_back(std::move(v));
      }
    } else {
      dim = static_cast<int>(cols);
      for (auto& row : matrix) points.emplace_back(std::move(row));
    }
    try {
      rec.polytope = LatticePolytope::hull_of(points, dim);
    } catch (const Error& e) {
      parse_fail(header_line, e.what());
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::string emit_polytopes(const std::vector<PolytopeRecord>& records) {
  std::ostringstream os;
  for (const auto& rec : records) {
    const auto& verts = rec.polytope.vertices();
    os << verts.size() << ' ' << rec.polytope.dim();
    if (rec.label) os << ' ' << *rec.label;
    os << '\n';
    for (const auto& v : verts) {
      for (std::size_t j = 0; j < v.dim(); ++j) os << (j ? " " : "") << v[j].get_str();
      os << '\n';
    }
  }
  return os.str();
}

std::string check_name(Check c) {
  switch (c) {
    case Check::Classify: return "classify";
    case Check::E3d: return "e3d";
    case Check::EGeneral: return "e_general";
    case Check::Id24: return "id24";
    case Check::Lw: return "lw";
    case Check::Cy: return "cy";
    case Check::Estr: return "estr";
  }
  return "unknown";
}

std::vector<Check> parse_checks(std::string_view list) {
  static const std::vector<Check> all{Check::Classify, Check::E3d, Check::EGeneral, Check::Id24, Check::Lw, Check::Cy};
  std::vector<Check> out;
  while (true) {
    std::size_t comma = list.find(',');
    std::string_view name = trim(list.substr(0, comma));
    if (!name.empty()) {
      auto it = std::find_if(all.begin(), all.end(), [&](Check c) { return check_name(c) == name; });
      if (it == all.end()) fail(ErrorCode::InvalidArgument, "unknown check '" + std::string(name) + "'");
      if (std::find(out.begin(), out.end(), *it) == out.end()) out.push_back(*it);
    }
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (out.empty()) fail(ErrorCode::EmptyCheckSet, "no checks selected");
  return out;
}

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Skipped: return "skipped";
  }
  return "unknown";
}

CheckResult run_check(const LatticePolytope& p, Check check, const BatchOptions& options, std::size_t index) {
  CheckResult r;
  try {
    r = evaluate(p, check, options);
  } catch (const Error& e) {
    r.check = check;
    r.outcome = is_precondition(e.code()) ? Outcome::Skipped : Outcome::Fail;
    r.report = Json{{"code", std::string(error_code_name(e.code()))}, {"error", e.what()}};
  } catch (const std::exception& e) {
    r.check = check;
    r.outcome = Outcome::Fail;
    r.report = Json{{"code", "Exception"}, {"error", e.what()}};
  }
  r.index = index;
  return r;
}

std::vector<const CheckResult*> BatchSummary::failures() const {
  std::vector<const CheckResult*> out;
  for (const auto& r : results)
    if (r.outcome == Outcome::Fail) out.push_back(&r);
  return out;
}

std::size_t BatchSummary::failure_count() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.outcome == Outcome::Fail; }));
}

BatchSummary run_batch(const std::vector<PolytopeRecord>& records, const BatchOptions& options) {
  if (options.checks.empty()) fail(ErrorCode::EmptyCheckSet, "no checks selected");
  const std::size_t n = records.size();
  const std::size_t k = options.checks.size();

  std::vector<CheckResult> slots(n * k);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < n; i = next++) {
      for (std::size_t c = 0; c < k; ++c)
        slots[i * k + c] = run_check(records[i].polytope, options.checks[c], options, records[i].index);
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(n, 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  BatchSummary s;
  s.total = n;
  s.checks = options.checks;
  for (Check c : options.checks) s.tallies[c];
  for (const auto& rec : records) {
    s.labels.push_back(rec.label);
    s.source_lines.push_back(rec.source_line);
  }
  if (std::find(options.checks.begin(), options.checks.end(), Check::Classify) != options.checks.end())
    s.classification = ClassificationTally{};
  for (const auto& r : slots) {
    CheckTally& t = s.tallies[r.check];
    if (r.outcome == Outcome::Pass) ++t.pass;
    if (r.outcome == Outcome::Fail) ++t.fail;
    if (r.outcome == Outcome::Skipped) ++t.skipped;
    if (r.check == Check::Classify && r.report.contains("canonical_fano")) {
      ClassificationTally& ct = *s.classification;
      bool canonical = r.report["canonical_fano"].get<bool>();
      bool almost_reflexive = r.report["almost_reflexive"].get<bool>();
      ct.canonical += canonical;
      ct.reflexive += r.report["reflexive"].get<bool>();
      ct.almost_reflexive += almost_reflexive;
      ct.almost_pseudoreflexive += r.report["almost_pseudoreflexive"].get<bool>();
      ct.pseudoreflexive += r.report["pseudoreflexive"].get<bool>();
      ct.canonical_not_almost_reflexive += canonical && !almost_reflexive;
      ct.ldp += r.report["ldp_polygon"].get<bool>();
    }
  }
  s.results = std::move(slots);
  return s;
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  fail(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

std::string emit_report(const BatchSummary& s, Format format) {
  const std::size_t k = s.checks.size();
  auto label_of = [&](std::size_t i) { return i < s.labels.size() && s.labels[i] ? *s.labels[i] : std::string(); };
  auto line_of = [&](std::size_t i) { return i < s.source_lines.size() ? s.source_lines[i] : std::size_t{0}; };

  if (format == Format::Json) {
    Json j;
    j["total"] = s.total;
    j["checks"] = Json::array();
    for (Check c : s.checks) j["checks"].push_back(check_name(c));
    Json tallies = Json::object();
    for (Check c : s.checks) {
      const CheckTally& t = s.tallies.at(c);
      tallies[check_name(c)] = Json{{"pass", t.pass}, {"fail", t.fail}, {"skipped", t.skipped}};
    }
    j["tallies"] = tallies;
    if (s.classification) {
      const auto& c = *s.classification;
      j["classification"] = Json{{"canonical", c.canonical},
                                 {"reflexive", c.reflexive},
                                 {"almost_reflexive", c.almost_reflexive},
                                 {"almost_pseudoreflexive", c.almost_pseudoreflexive},
                                 {"pseudoreflexive", c.pseudoreflexive},
                                 {"canonical_not_almost_reflexive", c.canonical_not_almost_reflexive},
                                 {"ldp", c.ldp}};
    }
    Json polytopes = Json::array();
    for (std::size_t i = 0; i < s.total; ++i) {
      Json entry{{"index", i}, {"line", line_of(i)}};
      if (i < s.labels.size() && s.labels[i]) entry["label"] = *s.labels[i];
      Json checks = Json::object();
      for (std::size_t c = 0; c < k; ++c) {
        const CheckResult& r = s.results[i * k + c];
        checks[check_name(r.check)] = Json{{"outcome", outcome_name(r.outcome)}, {"report", r.report}};
      }
      entry["checks"] = checks;
      polytopes.push_back(std::move(entry));
    }
    j["polytopes"] = polytopes;
    Json failures = Json::array();
    for (const CheckResult* r : s.failures())
      failures.push_back(Json{{"index", r->index}, {"check", check_name(r->check)}, {"details", r->report}});
    j["failures"] = failures;
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  if (format == Format::Csv) {
    os << "index,line,label,check,outcome,report\n";
    for (const auto& r : s.results) {
      os << r.index << ',' << line_of(r.index) << ',' << csv_quote(label_of(r.index)) << ',' << check_name(r.check)
         << ',' << outcome_name(r.outcome) << ',' << csv_quote(r.report.dump()) << '\n';
    }
    return os.str();
  }

  for (std::size_t i = 0; i < s.total; ++i) {
    os << "polytope " << i << " (line " << line_of(i) << ")";
    if (!label_of(i).empty()) os << " " << label_of(i);
    os << "\n";
    for (std::size_t c = 0; c < k; ++c) {
      const CheckResult& r = s.results[i * k + c];
      std::string verdict = outcome_name(r.outcome);
      std::transform(verdict.begin(), verdict.end(), verdict.begin(), ::toupper);
      os << "  " << check_name(r.check) << ": " << verdict << "\n";
      text_report(os, r.report, "    ");
    }
  }
  os << "total: " << s.total << "\n";
  for (Check c : s.checks) {
    const CheckTally& t = s.tallies.at(c);
    os << check_name(c) << ": " << t.pass << " pass, " << t.fail << " fail, " << t.skipped << " skipped\n";
  }
  if (s.classification) {
    const auto& c = *s.classification;
    os << "canonical: " << c.canonical << ", reflexive: " << c.reflexive << ", almost reflexive: " << c.almost_reflexive
       << ", almost pseudoreflexive: " << c.almost_pseudoreflexive << ", pseudoreflexive: " << c.pseudoreflexive
       << ", canonical not almost reflexive: " << c.canonical_not_almost_reflexive << ", ldp: " << c.ldp << "\n";
  }
  return os.str();
}

Json to_json(const Rational& q) { return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Json to_json(const StringyEFunction& e) {
  Json terms = Json::array();
  for (const auto& [alpha, psi] : e.terms) {
    Json coeff = psi.fits_slong_p() ? Json(psi.get_si()) : Json(psi.get_str());
    terms.push_back(Json{{"alpha", to_json(alpha)}, {"psi", coeff}});
  }
  return Json{{"dim", e.dim},
              {"gorenstein_q", e.gorenstein_q.get_str()},
              {"terms", terms},
              {"stringy_euler", to_json(stringy_euler(e))},
              {"text", e.to_text()}};
}

Json to_json(const ClassificationReport& r) {
  return Json{{"dim", r.dim},
              {"origin_interior", r.origin_interior},
              {"canonical_fano", r.is_canonical_fano},
              {"reflexive", r.is_reflexive},
              {"almost_reflexive", r.is_almost_reflexive},
              {"almost_pseudoreflexive", r.is_almost_pseudoreflexive},
              {"pseudoreflexive", r.is_pseudoreflexive},
              {"ldp_polygon", r.is_ldp_polygon},
              {"interior_points", r.interior_point_count},
              {"boundary_points", r.boundary_point_count},
              {"dual_lattice_points", r.dual_lattice_point_count}};
}

Json to_json(const Identity24Report& r) {
  return Json{{"volume_term", to_json(r.volume_term)},
              {"facet_term", to_json(r.facet_term)},
              {"edge_term", to_json(r.edge_term)},
              {"total", to_json(r.total)},
              {"holds", r.holds}};
}

Json to_json(const LibgoberWoodReport& r) {
  return Json{{"lhs", to_json(r.lhs)},
              {"rhs_volume", to_json(r.rhs_volume)},
              {"rhs_mixed", to_json(r.rhs_mixed)},
              {"holds", r.holds}};
}

}  // namespace stringy
