#include "stringy/capi.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "stringy/cli_io.hpp"
#include "stringy/error.hpp"

struct stringy_polytope {
  stringy::LatticePolytope polytope;
};

struct stringy_records {
  std::vector<stringy::PolytopeRecord> records;
};

namespace {

thread_local std::string last_error;

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
stringy_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return STRINGY_OK;
  } catch (const stringy::Error& e) {
    last_error = e.what();
    return static_cast<stringy_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    last_error = e.what();
    return STRINGY_ERR_UNKNOWN;
  }
}

void require(bool cond, const char* what) {
  if (!cond) stringy::fail(stringy::ErrorCode::InvalidArgument, what);
}

std::optional<stringy::SubdivisionStrategy> to_strategy(stringy_strategy s) {
  switch (s) {
    case STRINGY_STRATEGY_VERTICES: return stringy::SubdivisionStrategy::VerticesOnly;
    case STRINGY_STRATEGY_BOUNDARY: return stringy::SubdivisionStrategy::AllBoundaryPoints;
    default: return std::nullopt;
  }
}

stringy::StringyEFunction compute_estr(const stringy_polytope* p, stringy_strategy strategy) {
  stringy::BatchOptions options;
  options.strategy = to_strategy(strategy);
  const auto& poly = p->polytope;
  if (options.strategy) return stringy::stringy_e_general(poly, *options.strategy);
  if (poly.dim() == 3) return stringy::stringy_e_canonical3d(poly);
  if (poly.dim() == 2) return stringy::stringy_e_ldp(poly);
  stringy::fail(stringy::ErrorCode::UnsupportedDimension, "E-functions need d = 2 or 3");
}

}  // namespace

extern "C" {

const char* stringy_last_error(void) { return last_error.c_str(); }

const char* stringy_status_name(stringy_status status) {
  if (status == STRINGY_OK) return "Ok";
  if (status == STRINGY_ERR_UNKNOWN) return "Unknown";
  return stringy::error_code_name(static_cast<stringy::ErrorCode>(static_cast<int>(status))).data();
}

void stringy_string_free(char* s) { std::free(s); }

stringy_status stringy_polytope_create(const int64_t* coords, size_t n_points, int dim, stringy_polytope** out) {
  return guarded([&] {
    require(out != nullptr && (coords != nullptr || n_points == 0) && dim > 0, "null argument or bad dimension");
    std::vector<stringy::IntVector> points;
    for (size_t i = 0; i < n_points; ++i) {
      stringy::IntVector v(static_cast<std::size_t>(dim));
      for (int j = 0; j < dim; ++j) v[static_cast<std::size_t>(j)] = static_cast<long>(coords[i * static_cast<size_t>(dim) + static_cast<size_t>(j)]);
      points.push_back(std::move(v));
    }
    *out = new stringy_polytope{stringy::LatticePolytope::hull_of(points, dim)};
  });
}

void stringy_polytope_destroy(stringy_polytope* p) { delete p; }

int stringy_polytope_dim(const stringy_polytope* p) { return p ? p->polytope.dim() : 0; }

size_t stringy_polytope_vertex_count(const stringy_polytope* p) { return p ? p->polytope.vertices().size() : 0; }

stringy_status stringy_records_parse(const char* text, size_t length, stringy_records** out) {
  return guarded([&] {
    require(out != nullptr && (text != nullptr || length == 0), "null argument");
    *out = new stringy_records{stringy::parse_polytopes(std::string_view(text ? text : "", length))};
  });
}

void stringy_records_destroy(stringy_records* r) { delete r; }

size_t stringy_records_count(const stringy_records* r) { return r ? r->records.size() : 0; }

stringy_status stringy_records_get(const stringy_records* r, size_t i, stringy_polytope** out) {
  return guarded([&] {
    require(r != nullptr && out != nullptr, "null argument");
    require(i < r->records.size(), "record index out of range");
    *out = new stringy_polytope{r->records[i].polytope};
  });
}

stringy_status stringy_classify(const stringy_polytope* p, stringy_classification* out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "null argument");
    stringy::ClassificationReport c = stringy::classify(p->polytope);
    *out = stringy_classification{c.dim,
                                  c.origin_interior,
                                  c.is_canonical_fano,
                                  c.is_reflexive,
                                  c.is_almost_reflexive,
                                  c.is_almost_pseudoreflexive,
                                  c.is_pseudoreflexive,
                                  c.is_ldp_polygon,
                                  c.interior_point_count,
                                  c.boundary_point_count};
  });
}

stringy_status stringy_estr(const stringy_polytope* p, stringy_strategy strategy, char** text_out) {
  return guarded([&] {
    require(p != nullptr && text_out != nullptr, "null argument");
    *text_out = copy_out(compute_estr(p, strategy).to_text());
  });
}

stringy_status stringy_estr_euler(const stringy_polytope* p, stringy_strategy strategy, char** value_out) {
  return guarded([&] {
    require(p != nullptr && value_out != nullptr, "null argument");
    *value_out = copy_out(stringy::to_string(stringy::stringy_euler(compute_estr(p, strategy))));
  });
}

stringy_status stringy_check24(const stringy_polytope* p, char** json_out, int* holds) {
  return guarded([&] {
    require(p != nullptr && json_out != nullptr, "null argument");
    stringy::Identity24Report r = stringy::identity24(p->polytope);
    *json_out = copy_out(stringy::to_json(r).dump());
    if (holds) *holds = r.holds;
  });
}

stringy_status stringy_check_lw(const stringy_polytope* p, char** json_out, int* holds) {
  return guarded([&] {
    require(p != nullptr && json_out != nullptr, "null argument");
    stringy::LibgoberWoodReport r = stringy::libgober_wood(p->polytope);
    *json_out = copy_out(stringy::to_json(r).dump());
    if (holds) *holds = r.holds;
  });
}

stringy_status stringy_check_cy(const stringy_polytope* p, char** json_out, int* holds) {
  return guarded([&] {
    require(p != nullptr && json_out != nullptr, "null argument");
    stringy::Rational a = stringy::cy_stringy_euler(p->polytope);
    stringy::Rational b = stringy::cy_stringy_euler_normalfan(p->polytope);
    *json_out = copy_out(stringy::Json{{"e_str", stringy::to_json(a)}, {"e_str_normalfan", stringy::to_json(b)}}.dump());
    if (holds) *holds = a == b && (p->polytope.dim() != 3 || a == 24);
  });
}

stringy_status stringy_gauss_sum(uint64_t n, char** value_out) {
  return guarded([&] {
    require(value_out != nullptr, "null argument");
    *value_out = copy_out(stringy::to_string(stringy::gauss_sum(n)));
  });
}

stringy_status stringy_run_batch(const stringy_records* r, const char* checks, unsigned jobs,
                                 stringy_strategy strategy, stringy_format format, char** report_out,
                                 size_t* failures_out) {
  return guarded([&] {
    require(r != nullptr && checks != nullptr && report_out != nullptr, "null argument");
    stringy::BatchOptions options;
    options.checks = std::string_view(checks) == "estr" ? std::vector<stringy::Check>{stringy::Check::Estr}
                                                        : stringy::parse_checks(checks);
    options.jobs = jobs == 0 ? 1 : jobs;
    options.strategy = to_strategy(strategy);
    stringy::BatchSummary s = stringy::run_batch(r->records, options);
    stringy::Format f = format == STRINGY_FORMAT_CSV    ? stringy::Format::Csv
                        : format == STRINGY_FORMAT_TEXT ? stringy::Format::Text
                                                        : stringy::Format::Json;
    *report_out = copy_out(stringy::emit_report(s, f));
    if (failures_out) *failures_out = s.failure_count();
  });
}

}  // extern "C"
