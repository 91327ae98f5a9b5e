#define GKMLAB_BUILDING
#include "gkmlab/gkmlab.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "gkmlab/error.hpp"
#include "gkmlab/reports.hpp"

struct gkm_graph {
  gkm::Session session;
};

namespace {

thread_local std::string last_error;

template <typename F>
gkm_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const gkm::InputError& e) {
    last_error = e.what();
    return GKM_INPUT_ERROR;
  } catch (const gkm::ContextMismatch& e) {
    last_error = e.what();
    return GKM_INPUT_ERROR;
  } catch (const gkm::PreconditionError& e) {
    last_error = e.what();
    return GKM_PRECONDITION;
  } catch (const gkm::InconsistencyError& e) {
    last_error = e.what();
    return GKM_INCONSISTENT;
  } catch (const gkm::json::exception& e) {
    last_error = e.what();
    return GKM_INPUT_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GKM_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return GKM_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gkm_status emit(const gkm::Report& r, gkm_format format, char** out) {
  *out = dup(format == GKM_FORMAT_TABLE ? gkm::render_table(r.body) : r.body.dump(2) + "\n");
  return r.positive ? GKM_OK : GKM_NEGATIVE;
}

gkm_status missing(const char* what) {
  last_error = std::string(what) + " is null";
  return GKM_INPUT_ERROR;
}

}  // namespace

extern "C" {

const char* gkm_version(void) { return "0.1.0"; }

const char* gkm_last_error(void) { return last_error.c_str(); }

gkm_status gkm_graph_open(const char* spec, gkm_graph** out) {
  if (!spec || !out) return missing("argument");
  return guarded([&] {
    *out = new gkm_graph{gkm::Session(gkm::open_graph(spec))};
    return GKM_OK;
  });
}

gkm_status gkm_graph_from_json(const char* text, gkm_graph** out) {
  if (!text || !out) return missing("argument");
  return guarded([&] {
    gkm::json j;
    try {
      j = gkm::json::parse(text);
    } catch (const gkm::json::parse_error& e) {
      throw gkm::InputError(e.what());
    }
    gkm::CatalogGraph g;
    g.name = "json";
    g.skeleton = gkm::skeleton_from_json(j);
    *out = new gkm_graph{gkm::Session(std::move(g))};
    return GKM_OK;
  });
}

void gkm_graph_free(gkm_graph* g) { delete g; }

int gkm_graph_num_vertices(const gkm_graph* g) { return g ? g->session.skeleton().num_vertices() : -1; }
int gkm_graph_dim(const gkm_graph* g) { return g ? g->session.skeleton().dim() : -1; }
int gkm_graph_valence(const gkm_graph* g) { return g ? g->session.skeleton().valence() : -1; }

gkm_status gkm_graph_set_xi(gkm_graph* g, const char* csv) {
  if (!g || !csv) return missing("argument");
  return guarded([&] {
    g->session.set_xi(gkm::parse_vec(csv));
    return GKM_OK;
  });
}

gkm_status gkm_graph_set_seed(gkm_graph* g, uint64_t seed) {
  if (!g) return missing("graph");
  return guarded([&] {
    g->session.set_seed(seed);
    return GKM_OK;
  });
}

gkm_status gkm_graph_betti(gkm_graph* g, int* out, int cap, int* len) {
  if (!g || !len || (cap > 0 && !out)) return missing("argument");
  return guarded([&] {
    const auto& betti = g->session.morse().betti;
    *len = static_cast<int>(betti.size());
    for (int k = 0; k < cap && k < *len; ++k) out[k] = betti[k];
    return GKM_OK;
  });
}

gkm_status gkm_graph_dim_h(gkm_graph* g, int m, int* out) {
  if (!g || !out) return missing("argument");
  if (m < 0) {
    last_error = "degree must be >= 0";
    return GKM_INPUT_ERROR;
  }
  return guarded([&] {
    *out = gkm::dim_H(g->session.skeleton(), m);
    return GKM_OK;
  });
}

gkm_status gkm_run(gkm_graph* g, const char* command, const char* options_json, gkm_format format, char** out) {
  if (!g || !command || !out) return missing("argument");
  *out = nullptr;
  return guarded([&] {
    gkm::json opts;
    if (options_json && *options_json) {
      try {
        opts = gkm::json::parse(options_json);
      } catch (const gkm::json::parse_error& e) {
        throw gkm::InputError(std::string("options: ") + e.what());
      }
    }
    auto r = gkm::run_report(g->session, command, gkm::ReportOptions::from_json(opts));
    return emit(r, format, out);
  });
}

gkm_status gkm_appendix_check(int max_m, uint64_t seed, gkm_format format, char** out) {
  if (!out) return missing("out");
  *out = nullptr;
  return guarded([&] { return emit(gkm::appendix_report(max_m, seed), format, out); });
}

void gkm_string_free(char* s) { std::free(s); }

}  // extern "C"
