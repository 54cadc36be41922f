#include "krh/krh.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "cli/parse.hpp"
#include "cli/run.hpp"
#include "graph/library.hpp"
#include "oracle/homfly.hpp"
#include "oracle/moy.hpp"

struct krh_diagram {
  krh::link::LinkDiagram d;
};

struct krh_table {
  krh::link::HomologyTable t;
  std::vector<std::pair<std::pair<int, int>, long>> entries;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

krh_status fail(krh_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class Fn>
krh_status guard(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return KRH_OK;
  } catch (const krh::Error& e) {
    return fail(static_cast<krh_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KRH_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(KRH_INTERNAL, e.what());
  }
}

} // namespace

extern "C" {

const char* krh_status_name(krh_status s) {
  if (s == KRH_INVALID_ARGUMENT) return "InvalidArgument";
  if (s < KRH_OK || s > KRH_INTERNAL) return "Unknown";
  return krh::error_name(static_cast<krh::ErrorCode>(s));
}

const char* krh_last_error(void) { return last_error.c_str(); }

void krh_string_free(char* s) { std::free(s); }

krh_status krh_diagram_parse(const char* text, krh_diagram** out) {
  if (!text || !out) return fail(KRH_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] { *out = new krh_diagram{krh::cli::parse_link(text)}; });
}

void krh_diagram_free(krh_diagram* d) { delete d; }

int krh_diagram_crossings(const krh_diagram* d) { return d ? d->d.crossing_count() : -1; }
int krh_diagram_components(const krh_diagram* d) { return d ? d->d.component_count() : -1; }
int krh_diagram_writhe(const krh_diagram* d) { return d ? d->d.writhe() : 0; }

krh_status krh_homology(const krh_diagram* d, int n, int reduced_component, int jobs, krh_table** out) {
  if (!d || !out) return fail(KRH_INVALID_ARGUMENT, "null argument");
  if (n < 1 || jobs < 1) return fail(KRH_INVALID_ARGUMENT, "n and jobs must be positive");
  *out = nullptr;
  return guard([&] {
    auto t = reduced_component < 0 ? krh::link::kr_homology(d->d, n, jobs)
                                   : krh::link::reduced_kr_homology(d->d, n, reduced_component, jobs);
    auto* r = new krh_table{t, {}};
    for (auto& e : t.dims) r->entries.push_back(e);
    *out = r;
  });
}

void krh_table_free(krh_table* t) { delete t; }
int krh_table_n(const krh_table* t) { return t ? t->t.n : 0; }
int krh_table_parity(const krh_table* t) { return t ? t->t.parity : 0; }
size_t krh_table_size(const krh_table* t) { return t ? t->entries.size() : 0; }

krh_status krh_table_entry(const krh_table* t, size_t index, int* i, int* j, long* dim) {
  if (!t || !i || !j || !dim) return fail(KRH_INVALID_ARGUMENT, "null argument");
  if (index >= t->entries.size()) return fail(KRH_INVALID_ARGUMENT, "index out of range");
  *i = t->entries[index].first.first;
  *j = t->entries[index].first.second;
  *dim = t->entries[index].second;
  return KRH_OK;
}

krh_status krh_table_json(const krh_table* t, char** out) {
  if (!t || !out) return fail(KRH_INVALID_ARGUMENT, "null argument");
  return guard([&] { *out = dup(krh::cli::table_to_json(t->t)); });
}

krh_status krh_table_euler(const krh_table* t, char** out) {
  if (!t || !out) return fail(KRH_INVALID_ARGUMENT, "null argument");
  return guard([&] { *out = dup(krh::link::euler(t->t).to_string()); });
}

krh_status krh_polynomial(const krh_diagram* d, int n, char** out) {
  if (!d || !out) return fail(KRH_INVALID_ARGUMENT, "null argument");
  if (n < 1) return fail(KRH_INVALID_ARGUMENT, "n must be positive");
  return guard([&] { *out = dup(krh::oracle::homfly_specialized(d->d, n).to_string()); });
}

krh_status krh_graph_eval(const char* graph, int n, char** gdim, char** moy) {
  if (!graph || !gdim || !moy) return fail(KRH_INVALID_ARGUMENT, "null argument");
  if (n < 1) return fail(KRH_INVALID_ARGUMENT, "n must be positive");
  *gdim = *moy = nullptr;
  return guard([&] {
    auto g = krh::graph::parse_graph(graph);
    std::string h = krh::graph::graph_gdim(g, n).to_string();
    std::string m;
    if (g.closed()) m = krh::oracle::moy_eval(g, n).to_string();
    *gdim = dup(h);
    if (g.closed()) *moy = dup(m);
  });
}

int krh_run(const krh_invocation* inv, char** out, char** err) {
  if (!inv || !inv->subcommand || !inv->input) return 2;
  krh::cli::Invocation c;
  c.subcommand = inv->subcommand;
  c.n = inv->n;
  c.input = inv->input;
  if (inv->reduced_component >= 0) c.reduced = inv->reduced_component;
  c.format = inv->json ? krh::cli::Format::Json : krh::cli::Format::Text;
  c.jobs = inv->jobs;
  krh::cli::Outcome o;
  try {
    o = krh::cli::run(c);
  } catch (const std::exception& e) {
    o = {3, "", std::string(e.what()) + "\n"};
  }
  if (out) *out = dup(o.out);
  if (err) *err = dup(o.err);
  return o.exit_code;
}

} // extern "C"
