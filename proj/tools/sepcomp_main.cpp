// sepcomp command-line front end. Talks to the engine exclusively through the
// C API in sepcomp/sepcomp.h.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sepcomp/sepcomp.h"

namespace {

struct WorkspaceDeleter {
  void operator()(sepcomp_workspace* ws) const { sepcomp_workspace_free(ws); }
};

struct ReportDeleter {
  void operator()(sepcomp_report* r) const { sepcomp_report_free(r); }
};

using WorkspaceHandle = std::unique_ptr<sepcomp_workspace, WorkspaceDeleter>;
using ReportHandle = std::unique_ptr<sepcomp_report, ReportDeleter>;

int print_load_error(const sepcomp_workspace* ws) {
  const int exit_code = sepcomp_workspace_last_error_exit(ws);
  std::printf("ERR %d %s: %s\n", exit_code,
              sepcomp_workspace_last_error_kind(ws),
              sepcomp_workspace_last_error(ws));
  return exit_code == 0 ? 4 : exit_code;
}

int emit(const ReportHandle& report) {
  std::fputs(sepcomp_report_text(report.get()), stdout);
  return sepcomp_report_exit_code(report.get());
}

struct CommonOptions {
  std::vector<std::string> workspaces;
  bool json = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--workspace", opts.workspaces, "workspace file (repeatable)")
      ->type_name("FILE");
  cmd->add_flag("--json", opts.json, "emit the machine-readable format");
}

int load_all(sepcomp_workspace* ws, const CommonOptions& opts) {
  for (const auto& path : opts.workspaces)
    if (sepcomp_workspace_load_file(ws, path.c_str()) != SEPCOMP_OK)
      return print_load_error(ws);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"separating homomorphisms, weighted compositions and linear "
               "code equivalence over finite groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sepcomp_version());

  CommonOptions analyze_opts, represent_opts, equiv_opts, aut_opts, wenum_opts;
  std::string analyze_name, represent_name, aut_name, wenum_name;
  std::string equiv_first, equiv_second;

  CLI::App* analyze = app.add_subcommand("analyze", "decide the function-group hypotheses");
  add_common(analyze, analyze_opts);
  analyze->add_option("fgroup", analyze_name, "function group name")->required();

  CLI::App* represent = app.add_subcommand(
      "represent", "extract the weighted-composition representation");
  add_common(represent, represent_opts);
  represent->add_option("hom", represent_name, "homomorphism name")->required();

  CLI::App* equiv =
      app.add_subcommand("equiv", "decide monomial equivalence of two codes");
  add_common(equiv, equiv_opts);
  equiv->add_option("code1", equiv_first, "first code")->required();
  equiv->add_option("code2", equiv_second, "second code")->required();

  CLI::App* aut = app.add_subcommand("aut", "list monomial automorphisms of a code");
  add_common(aut, aut_opts);
  aut->add_option("code", aut_name, "code name")->required();

  CLI::App* wenum = app.add_subcommand("wenum", "Hamming weight enumerator");
  add_common(wenum, wenum_opts);
  wenum->add_option("code", wenum_name, "code name")->required();

  CLI11_PARSE(app, argc, argv);

  WorkspaceHandle ws(sepcomp_workspace_new());
  if (!ws) {
    std::fputs("ERR 4 internal: out of memory\n", stdout);
    return 4;
  }

  if (const char* env = std::getenv("SEPCOMP_MAX_CLOSURE")) {
    char* end = nullptr;
    const unsigned long long bound = std::strtoull(env, &end, 10);
    if (!end || *end != '\0' || bound == 0) {
      std::fputs("ERR 4 invalid-argument: SEPCOMP_MAX_CLOSURE must be a "
                 "positive integer\n",
                 stdout);
      return 4;
    }
    sepcomp_workspace_set_max_closure(ws.get(), bound);
  }

  const CommonOptions* opts = nullptr;
  if (analyze->parsed()) opts = &analyze_opts;
  else if (represent->parsed()) opts = &represent_opts;
  else if (equiv->parsed()) opts = &equiv_opts;
  else if (aut->parsed()) opts = &aut_opts;
  else opts = &wenum_opts;

  if (const int rc = load_all(ws.get(), *opts)) return rc;

  sepcomp_report* raw = nullptr;
  sepcomp_status status = SEPCOMP_ERROR_INTERNAL;
  if (analyze->parsed()) {
    status = sepcomp_command_analyze(ws.get(), analyze_name.c_str(),
                                     analyze_opts.json, &raw);
  } else if (represent->parsed()) {
    status = sepcomp_command_represent(ws.get(), represent_name.c_str(),
                                       represent_opts.json, &raw);
  } else if (equiv->parsed()) {
    status = sepcomp_command_equiv(ws.get(), equiv_first.c_str(),
                                   equiv_second.c_str(), equiv_opts.json, &raw);
  } else if (aut->parsed()) {
    status = sepcomp_command_aut(ws.get(), aut_name.c_str(), aut_opts.json, &raw);
  } else if (wenum->parsed()) {
    status = sepcomp_command_wenum(ws.get(), wenum_name.c_str(),
                                   wenum_opts.json, &raw);
  }

  if (status != SEPCOMP_OK) return print_load_error(ws.get());
  ReportHandle report(raw);
  return emit(report);
}
