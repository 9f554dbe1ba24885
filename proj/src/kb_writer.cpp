#include <algorithm>

#include "fdlb/kb_text.hpp"

namespace fdlb::text {

std::string serialize_kb(const KnowledgeBase& kb) {
  std::vector<std::vector<std::string>> blocks(3);

  for (const auto& [name, decl] : kb.roles()) blocks[0].push_back("role " + decl.str() + ";");
  for (const auto& name : kb.declared_concepts()) blocks[0].push_back("concept " + name + ";");

  for (const auto& gci : kb.tbox()) blocks[1].push_back("axiom " + gci.str() + ";");

  for (const auto& a : kb.assertions()) blocks[2].push_back("assert " + a.str() + ";");
  for (const auto& r : kb.role_assertions()) blocks[2].push_back("assert " + r.str() + ";");
  for (const auto& f : kb.concrete_facts()) blocks[2].push_back("assert " + f.str() + ";");

  std::string out;
  for (auto& block : blocks) {
    if (block.empty()) continue;
    // declarations are already ordered by name
    if (&block != &blocks[0]) std::sort(block.begin(), block.end());
    if (!out.empty()) out += '\n';
    for (const auto& line : block) out += line + '\n';
  }
  return out.empty() ? "\n" : out;
}

std::string serialize_ubox(const UtilityBox& ubox) {
  std::string out = "ubox " + ubox.expert + " {\n";
  for (const auto& e : ubox.entries) out += "  " + e.attribute + " = " + e.weight.str() + ";\n";
  return out + "}\n";
}

}  // namespace fdlb::text
