#include "commtop/commtop.h"

#include "commtop/catalog.hpp"
#include "commtop/commands.hpp"
#include "commtop/error.hpp"
#include "commtop/spec_io.hpp"

#include <new>
#include <string>

struct ct_group {
  commtop::FiniteGroup group;
};

struct ct_extension {
  commtop::TorusExtension extension;
};

struct ct_cocycle {
  commtop::PatchCocycle cocycle;
};

struct ct_report {
  commtop::Report report;
  std::string text, json;
};

namespace {

thread_local std::string last_error;

ct_status status_of(const commtop::Error& e) {
  switch (e.kind()) {
    case commtop::ErrorKind::budget: return CT_ERR_BUDGET;
    case commtop::ErrorKind::invariant: return CT_ERR_INVARIANT;
    default: return CT_ERR_INPUT;
  }
}

template <class F>
ct_status guarded(F&& f) {
  try {
    return f();
  } catch (const commtop::Error& e) {
    last_error = e.what();
    return status_of(e);
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CT_ERR_INTERNAL;
  }
}

ct_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return CT_ERR_INPUT;
}

}  // namespace

extern "C" {

const char* ct_version(void) { return "1.0.0"; }
const char* ct_last_error(void) { return last_error.c_str(); }

ct_status ct_group_load(const char* path, ct_group** out) {
  if (!path || !out) return null_argument("path/out");
  return guarded([&] {
    *out = new ct_group{commtop::parse_group_spec(commtop::read_text_file(path))};
    return CT_OK;
  });
}

ct_status ct_group_parse(const char* json_text, ct_group** out) {
  if (!json_text || !out) return null_argument("text/out");
  return guarded([&] {
    *out = new ct_group{commtop::parse_group_spec(json_text)};
    return CT_OK;
  });
}

ct_status ct_group_catalog(const char* name, ct_group** out) {
  if (!name || !out) return null_argument("name/out");
  return guarded([&] {
    *out = new ct_group{commtop::catalog::group(name)};
    return CT_OK;
  });
}

size_t ct_group_order(const ct_group* g) { return g ? g->group.order() : 0; }
const char* ct_group_label(const ct_group* g) { return g ? g->group.label().c_str() : ""; }
void ct_group_free(ct_group* g) { delete g; }

ct_status ct_extension_load(const char* path, ct_extension** out) {
  if (!path || !out) return null_argument("path/out");
  return guarded([&] {
    *out = new ct_extension{commtop::parse_extension_spec(commtop::read_text_file(path))};
    return CT_OK;
  });
}

ct_status ct_extension_parse(const char* json_text, ct_extension** out) {
  if (!json_text || !out) return null_argument("text/out");
  return guarded([&] {
    *out = new ct_extension{commtop::parse_extension_spec(json_text)};
    return CT_OK;
  });
}

ct_status ct_extension_catalog(const char* name, ct_extension** out) {
  if (!name || !out) return null_argument("name/out");
  return guarded([&] {
    *out = new ct_extension{commtop::extension_catalog::extension(name)};
    return CT_OK;
  });
}

size_t ct_extension_rank(const ct_extension* e) { return e ? e->extension.rank() : 0; }
const char* ct_extension_label(const ct_extension* e) { return e ? e->extension.label().c_str() : ""; }
void ct_extension_free(ct_extension* e) { delete e; }

ct_status ct_cocycle_load(const char* path, const ct_extension* e, ct_cocycle** out) {
  if (!path || !e || !out) return null_argument("path/extension/out");
  return guarded([&] {
    *out = new ct_cocycle{commtop::parse_cocycle_spec(commtop::read_text_file(path), e->extension)};
    return CT_OK;
  });
}

ct_status ct_cocycle_parse(const char* json_text, const ct_extension* e, ct_cocycle** out) {
  if (!json_text || !e || !out) return null_argument("text/extension/out");
  return guarded([&] {
    *out = new ct_cocycle{commtop::parse_cocycle_spec(json_text, e->extension)};
    return CT_OK;
  });
}

void ct_cocycle_free(ct_cocycle* c) { delete c; }

void ct_options_init(ct_options* o) {
  if (!o) return;
  o->max_dim = 2;
  o->denominator = 12;
  o->search_denominator = 0;
  o->budget = commtop::kDefaultBudget;
  o->threads = 0;
  o->fixtures_path = nullptr;
}

size_t ct_command_count(void) { return commtop::command_names().size(); }

const char* ct_command_name(size_t i) {
  const auto& names = commtop::command_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

ct_status ct_run(const char* command, const ct_group* g, const ct_extension* e, const ct_cocycle* c,
                 const ct_options* o, ct_report** out) {
  if (!command || !out) return null_argument("command/out");
  *out = nullptr;
  return guarded([&] {
    ct_options defaults;
    ct_options_init(&defaults);
    if (!o) o = &defaults;
    commtop::CommandInputs in;
    if (g) in.group = g->group;
    if (e) in.extension = e->extension;
    if (c) in.cocycle = c->cocycle;
    in.max_dim = o->max_dim;
    in.denominator = o->denominator;
    in.search_denominator = o->search_denominator;
    in.budget = o->budget;
    in.threads = o->threads;
    if (o->fixtures_path) in.fixtures = commtop::read_text_file(o->fixtures_path);
    auto* r = new ct_report{commtop::run_command(command, in), {}, {}};
    r->text = r->report.to_text();
    r->json = r->report.to_json();
    *out = r;
    if (!r->report.ok) {
      last_error = r->report.command + ": a check failed";
      return CT_ERR_INVARIANT;
    }
    return CT_OK;
  });
}

int ct_report_ok(const ct_report* r) { return r && r->report.ok ? 1 : 0; }
const char* ct_report_text(const ct_report* r) { return r ? r->text.c_str() : ""; }
const char* ct_report_json(const ct_report* r) { return r ? r->json.c_str() : ""; }
void ct_report_free(ct_report* r) { delete r; }

}  // extern "C"
