#include "dwlat/dwlat.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "dwlat/error.hpp"
#include "dwlat/json_io.hpp"
#include "dwlat/poset.hpp"
#include "dwlat/verify.hpp"

struct dwlat_diagram {
  dwlat::AffineDiagram d;
};

struct dwlat_weight {
  dwlat::Weight w;
};

namespace {

thread_local std::string g_last_error;

dwlat_status fail(dwlat_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
dwlat_status guarded(F&& f) {
  g_last_error.clear();
  try {
    return f();
  } catch (const dwlat::Error& e) {
    return fail(static_cast<dwlat_status>(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(DWLAT_E_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DWLAT_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DWLAT_E_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* dwlat_last_error(void) { return g_last_error.c_str(); }

const char* dwlat_status_name(dwlat_status status) {
  switch (status) {
    case DWLAT_OK: return "ok";
    case DWLAT_E_UNKNOWN_TYPE: return "unknown-type";
    case DWLAT_E_PARSE: return "parse";
    case DWLAT_E_INDEX: return "index";
    case DWLAT_E_INVALID_SUBDIAGRAM: return "invalid-subdiagram";
    case DWLAT_E_COMPONENT_MISMATCH: return "component-mismatch";
    case DWLAT_E_NON_POSITIVE_LEVEL: return "non-positive-level";
    case DWLAT_E_NOT_DOMINANT: return "not-dominant";
    case DWLAT_E_INCOMPARABLE: return "incomparable";
    case DWLAT_E_NOT_A_COCOVER: return "not-a-cocover";
    case DWLAT_E_UNSUPPORTED_TYPE: return "unsupported-type";
    case DWLAT_E_INTERVAL_OVERFLOW: return "interval-overflow";
    case DWLAT_E_WINDOW_EXHAUSTED: return "window-exhausted";
    case DWLAT_E_PREDICTION_MISMATCH: return "prediction-mismatch";
    case DWLAT_E_INTERNAL: return "internal";
    case DWLAT_E_NULL_ARGUMENT: return "null-argument";
  }
  return "unknown";
}

void dwlat_string_free(char* s) { std::free(s); }

dwlat_status dwlat_diagram_create(const char* type_id, dwlat_diagram** out) {
  if (type_id == nullptr || out == nullptr) return fail(DWLAT_E_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new dwlat_diagram{dwlat::build_affine(type_id)};
    return DWLAT_OK;
  });
}

void dwlat_diagram_destroy(dwlat_diagram* d) { delete d; }

dwlat_status dwlat_diagram_info(const dwlat_diagram* d, char** json_out) {
  if (d == nullptr || json_out == nullptr) return fail(DWLAT_E_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *json_out = dup(dwlat::diagram_info(d->d).dump(2) + "\n");
    return DWLAT_OK;
  });
}

dwlat_status dwlat_types(int max_rank, char** json_out) {
  if (json_out == nullptr) return fail(DWLAT_E_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    dwlat::Json j = dwlat::Json::array();
    for (const auto& id : dwlat::catalog(max_rank)) j.push_back(id.str());
    *json_out = dup(j.dump(2) + "\n");
    return DWLAT_OK;
  });
}

dwlat_status dwlat_weight_create(const dwlat_diagram* d, const int64_t* labels, size_t count, const char* shift,
                                 dwlat_weight** out) {
  if (d == nullptr || (labels == nullptr && count > 0) || out == nullptr)
    return fail(DWLAT_E_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    if (count != static_cast<size_t>(d->d.size()))
      throw dwlat::Error(dwlat::ErrorCode::Index, "expected " + std::to_string(d->d.size()) + " labels for " +
                                                      d->d.type_id().str() + ", got " + std::to_string(count));
    const dwlat::Rational s = shift == nullptr ? dwlat::Rational(0) : dwlat::parse_rational(shift);
    *out = new dwlat_weight{dwlat::weight_from_labels(d->d, std::span<const std::int64_t>(labels, count), s)};
    return DWLAT_OK;
  });
}

dwlat_status dwlat_weight_from_json(const dwlat_diagram* d, const char* json, dwlat_weight** out) {
  if (d == nullptr || json == nullptr || out == nullptr) return fail(DWLAT_E_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new dwlat_weight{dwlat::weight_from_json(d->d, dwlat::Json::parse(json))};
    return DWLAT_OK;
  });
}

void dwlat_weight_destroy(dwlat_weight* w) { delete w; }

dwlat_status dwlat_weight_to_json(const dwlat_diagram* d, const dwlat_weight* w, char** json_out) {
  if (d == nullptr || w == nullptr || json_out == nullptr) return fail(DWLAT_E_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *json_out = dup(dwlat::to_json(d->d, w->w).dump(2) + "\n");
    return DWLAT_OK;
  });
}

dwlat_status dwlat_is_delta_cocover(const dwlat_diagram* d, const dwlat_weight* w, int* out) {
  if (d == nullptr || w == nullptr || out == nullptr) return fail(DWLAT_E_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dwlat::is_delta_cocover(d->d, w->w) ? 1 : 0;
    return DWLAT_OK;
  });
}

dwlat_status dwlat_meet(const dwlat_diagram* d, const dwlat_weight* a, const dwlat_weight* b, dwlat_weight** out) {
  if (d == nullptr || a == nullptr || b == nullptr || out == nullptr)
    return fail(DWLAT_E_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new dwlat_weight{dwlat::meet(d->d, a->w, b->w)};
    return DWLAT_OK;
  });
}

dwlat_status dwlat_join(const dwlat_diagram* d, const dwlat_weight* a, const dwlat_weight* b, dwlat_weight** out) {
  if (d == nullptr || a == nullptr || b == nullptr || out == nullptr)
    return fail(DWLAT_E_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new dwlat_weight{dwlat::join(d->d, a->w, b->w)};
    return DWLAT_OK;
  });
}

static dwlat_status edges_json(const dwlat_diagram* d, const dwlat_weight* w, char** json_out, bool down) {
  if (d == nullptr || w == nullptr || json_out == nullptr) return fail(DWLAT_E_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    dwlat::Json j = dwlat::Json::array();
    for (const auto& e : down ? dwlat::cocovers(d->d, w->w) : dwlat::covers(d->d, w->w)) j.push_back(dwlat::to_json(d->d, e));
    *json_out = dup(j.dump(2) + "\n");
    return DWLAT_OK;
  });
}

dwlat_status dwlat_cocovers(const dwlat_diagram* d, const dwlat_weight* w, char** json_out) {
  return edges_json(d, w, json_out, true);
}

dwlat_status dwlat_covers(const dwlat_diagram* d, const dwlat_weight* w, char** json_out) {
  return edges_json(d, w, json_out, false);
}

dwlat_status dwlat_interval(const dwlat_diagram* d, const dwlat_weight* top, const dwlat_weight* bottom,
                            dwlat_format format, char** out) {
  if (d == nullptr || top == nullptr || bottom == nullptr || out == nullptr)
    return fail(DWLAT_E_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const auto g = dwlat::interval(d->d, top->w, bottom->w);
    *out = dup(dwlat::export_graph(d->d, g, format == DWLAT_FORMAT_DOT ? dwlat::GraphFormat::Dot : dwlat::GraphFormat::Json));
    return DWLAT_OK;
  });
}

dwlat_status dwlat_cell(const dwlat_diagram* d, const dwlat_weight* top, const dwlat_weight* mu,
                        const dwlat_weight* mu2, dwlat_format format, char** out) {
  if (d == nullptr || top == nullptr || mu == nullptr || mu2 == nullptr || out == nullptr)
    return fail(DWLAT_E_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const dwlat::BasicCell predicted = dwlat::predict_cell(d->d, top->w, mu->w, mu2->w);
    const dwlat::PosetGraph actual = dwlat::interval(d->d, top->w, *predicted.graph.bottom);
    const bool agree = dwlat::same_poset(predicted.graph, actual);
    if (format == DWLAT_FORMAT_DOT) {
      *out = dup(dwlat::export_graph(d->d, actual, dwlat::GraphFormat::Dot));
    } else {
      dwlat::Json j;
      j["shape"] = dwlat::to_string(predicted.shape);
      j["clause"] = predicted.clause;
      j["agrees"] = agree;
      j["graph"] = dwlat::to_json(d->d, actual);
      *out = dup(j.dump(2) + "\n");
    }
    if (!agree)
      return fail(DWLAT_E_PREDICTION_MISMATCH,
                  std::string("predicted ") + dwlat::to_string(predicted.shape) + " (clause " + predicted.clause +
                      ") but the interval has " + std::to_string(actual.nodes.size()) + " nodes and " +
                      std::to_string(actual.edges.size()) + " edges");
    return DWLAT_OK;
  });
}

dwlat_status dwlat_verify(const dwlat_diagram* d, const int64_t* levels, size_t level_count, size_t samples,
                          uint64_t seed, size_t pairs, char** json_out, int* passed) {
  if (d == nullptr || (levels == nullptr && level_count > 0) || json_out == nullptr || passed == nullptr)
    return fail(DWLAT_E_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const std::vector<std::int64_t> lv(levels, levels + level_count);
    const auto rep = dwlat::verify_covering(d->d, lv, samples, seed, pairs);
    *json_out = dup(dwlat::to_json(d->d, rep).dump(2) + "\n");
    *passed = rep.passed() ? 1 : 0;
    return DWLAT_OK;
  });
}

}  // extern "C"
