#pragma once

#include <string>

#include "sepcomp/workspace.hpp"

namespace sepcomp {

// Exit codes: 0 success, 2 hypothesis failure, 3 not equivalent, 4 input
// error. Every nonzero exit ends the text with a single
// `ERR <code> <kind>: <reason>` line.
struct Report {
  std::string text;
  int exit_code = 0;
};

Report cmd_analyze(Workspace& ws, const std::string& fgroup_name, bool json);
Report cmd_represent(Workspace& ws, const std::string& hom_name, bool json);
Report cmd_equiv(Workspace& ws, const std::string& code1,
                 const std::string& code2, bool json);
Report cmd_aut(Workspace& ws, const std::string& code_name, bool json);
Report cmd_wenum(Workspace& ws, const std::string& code_name, bool json);

}  // namespace sepcomp
