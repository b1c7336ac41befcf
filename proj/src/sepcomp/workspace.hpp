#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sepcomp/code.hpp"
#include "sepcomp/hom.hpp"

namespace sepcomp {

struct GroupDef {
  std::string name;
  int order = 0;
  std::vector<std::vector<int>> table;
};

struct FgroupDef {
  std::string name;
  std::string group;
  int domain = 0;
  std::vector<PointMap> generators;
};

struct HomDef {
  std::string name;
  std::string source;
  std::string target;
  std::vector<std::pair<PointMap, PointMap>> pairs;
};

struct CodeDef {
  std::string name;
  int p = 0, n = 0, k = 0;
  std::vector<std::vector<int>> rows;
};

/// Named collections parsed from workspace files. Definitions accumulate
/// across load calls; cross-references are resolved when an entity is first
/// requested, so files may reference entities from files loaded later.
class Workspace {
 public:
  void load_file(const std::string& path);
  void load_text(const std::string& origin, const std::string& text);

  void set_max_closure(std::size_t max_elements) { max_closure_ = max_elements; }
  std::size_t max_closure() const { return max_closure_; }

  GroupPtr group(const std::string& name);
  FunctionGroupPtr fgroup(const std::string& name);
  const GroupHom& hom(const std::string& name);
  LinearCodePtr code(const std::string& name);

  const GroupDef* find_group_def(const std::string& name) const;
  const FgroupDef* find_fgroup_def(const std::string& name) const;
  const HomDef* find_hom_def(const std::string& name) const;
  const CodeDef* find_code_def(const std::string& name) const;

  std::size_t group_count() const { return group_defs_.size(); }
  std::size_t fgroup_count() const { return fgroup_defs_.size(); }
  std::size_t hom_count() const { return hom_defs_.size(); }
  std::size_t code_count() const { return code_defs_.size(); }

 private:
  template <typename Def>
  void register_def(std::vector<Def>& defs, Def def, const char* kind);

  std::vector<GroupDef> group_defs_;
  std::vector<FgroupDef> fgroup_defs_;
  std::vector<HomDef> hom_defs_;
  std::vector<CodeDef> code_defs_;

  std::size_t max_closure_ = 1'000'000;

  std::map<std::string, GroupPtr> groups_;
  std::map<std::string, FunctionGroupPtr> fgroups_;
  std::map<std::string, std::shared_ptr<GroupHom>> homs_;
  std::map<std::string, LinearCodePtr> codes_;
};

}  // namespace sepcomp
