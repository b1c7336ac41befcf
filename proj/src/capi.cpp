#include "sepcomp/sepcomp.h"

#include <new>
#include <string>

#include "sepcomp/reports.hpp"
#include "sepcomp/workspace.hpp"

struct sepcomp_workspace {
  sepcomp::Workspace ws;
  std::string last_error;
  std::string last_error_kind;
  int last_error_exit = 0;
};

struct sepcomp_report {
  std::string text;
  int exit_code = 0;
};

namespace {

void record_error(sepcomp_workspace* ws, const sepcomp::Error& e) {
  ws->last_error = e.what();
  ws->last_error_kind = sepcomp::errc_name(e.code());
  ws->last_error_exit = sepcomp::errc_exit_code(e.code());
}

void record_error(sepcomp_workspace* ws, const std::exception& e) {
  ws->last_error = e.what();
  ws->last_error_kind = "internal";
  ws->last_error_exit = 4;
}

template <typename Body>
sepcomp_status guarded(sepcomp_workspace* ws, Body&& body) {
  if (!ws) return SEPCOMP_ERROR_ARGUMENT;
  try {
    body();
    return SEPCOMP_OK;
  } catch (const sepcomp::Error& e) {
    record_error(ws, e);
    return SEPCOMP_ERROR_INPUT;
  } catch (const std::bad_alloc&) {
    return SEPCOMP_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    record_error(ws, e);
    return SEPCOMP_ERROR_INTERNAL;
  }
}

template <typename Command>
sepcomp_status run_command(sepcomp_workspace* ws, sepcomp_report** out,
                           Command&& command) {
  if (!ws || !out) return SEPCOMP_ERROR_ARGUMENT;
  *out = nullptr;
  try {
    sepcomp::Report report = command();
    auto* boxed = new sepcomp_report{std::move(report.text), report.exit_code};
    *out = boxed;
    return SEPCOMP_OK;
  } catch (const sepcomp::Error& e) {
    record_error(ws, e);
    return SEPCOMP_ERROR_INPUT;
  } catch (const std::bad_alloc&) {
    return SEPCOMP_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    record_error(ws, e);
    return SEPCOMP_ERROR_INTERNAL;
  }
}

}  // namespace

extern "C" {

sepcomp_workspace* sepcomp_workspace_new(void) {
  return new (std::nothrow) sepcomp_workspace();
}

void sepcomp_workspace_free(sepcomp_workspace* ws) { delete ws; }

sepcomp_status sepcomp_workspace_load_file(sepcomp_workspace* ws,
                                           const char* path) {
  if (!path) return SEPCOMP_ERROR_ARGUMENT;
  return guarded(ws, [&] { ws->ws.load_file(path); });
}

sepcomp_status sepcomp_workspace_load_text(sepcomp_workspace* ws,
                                           const char* origin,
                                           const char* text) {
  if (!origin || !text) return SEPCOMP_ERROR_ARGUMENT;
  return guarded(ws, [&] { ws->ws.load_text(origin, text); });
}

sepcomp_status sepcomp_workspace_set_max_closure(sepcomp_workspace* ws,
                                                 unsigned long long bound) {
  if (!ws || bound == 0) return SEPCOMP_ERROR_ARGUMENT;
  ws->ws.set_max_closure(static_cast<std::size_t>(bound));
  return SEPCOMP_OK;
}

const char* sepcomp_workspace_last_error(const sepcomp_workspace* ws) {
  return ws ? ws->last_error.c_str() : "";
}

const char* sepcomp_workspace_last_error_kind(const sepcomp_workspace* ws) {
  return ws ? ws->last_error_kind.c_str() : "";
}

int sepcomp_workspace_last_error_exit(const sepcomp_workspace* ws) {
  return ws ? ws->last_error_exit : 0;
}

sepcomp_status sepcomp_command_analyze(sepcomp_workspace* ws,
                                       const char* fgroup_name, int as_json,
                                       sepcomp_report** out) {
  if (!fgroup_name) return SEPCOMP_ERROR_ARGUMENT;
  return run_command(ws, out, [&] {
    return sepcomp::cmd_analyze(ws->ws, fgroup_name, as_json != 0);
  });
}

sepcomp_status sepcomp_command_represent(sepcomp_workspace* ws,
                                         const char* hom_name, int as_json,
                                         sepcomp_report** out) {
  if (!hom_name) return SEPCOMP_ERROR_ARGUMENT;
  return run_command(ws, out, [&] {
    return sepcomp::cmd_represent(ws->ws, hom_name, as_json != 0);
  });
}

sepcomp_status sepcomp_command_equiv(sepcomp_workspace* ws, const char* code1,
                                     const char* code2, int as_json,
                                     sepcomp_report** out) {
  if (!code1 || !code2) return SEPCOMP_ERROR_ARGUMENT;
  return run_command(ws, out, [&] {
    return sepcomp::cmd_equiv(ws->ws, code1, code2, as_json != 0);
  });
}

sepcomp_status sepcomp_command_aut(sepcomp_workspace* ws, const char* code_name,
                                   int as_json, sepcomp_report** out) {
  if (!code_name) return SEPCOMP_ERROR_ARGUMENT;
  return run_command(ws, out, [&] {
    return sepcomp::cmd_aut(ws->ws, code_name, as_json != 0);
  });
}

sepcomp_status sepcomp_command_wenum(sepcomp_workspace* ws,
                                     const char* code_name, int as_json,
                                     sepcomp_report** out) {
  if (!code_name) return SEPCOMP_ERROR_ARGUMENT;
  return run_command(ws, out, [&] {
    return sepcomp::cmd_wenum(ws->ws, code_name, as_json != 0);
  });
}

const char* sepcomp_report_text(const sepcomp_report* report) {
  return report ? report->text.c_str() : "";
}

int sepcomp_report_exit_code(const sepcomp_report* report) {
  return report ? report->exit_code : 4;
}

void sepcomp_report_free(sepcomp_report* report) { delete report; }

const char* sepcomp_version(void) { return "0.1.0"; }

}  // extern "C"
