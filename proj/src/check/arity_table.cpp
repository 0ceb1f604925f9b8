// SPDX-License-Identifier: Apache-2.0
#include "robojs/check/arity_table.hpp"

#include <functional>

namespace robojs::check {

std::string qualified(std::string_view ns, std::string_view name) {
  std::string out(ns);
  out += '.';
  out += name;
  return out;
}

ArityTable ArityTable::from_manifest(const api::ApiManifest& manifest) {
  ArityTable t;
  for (const auto& e : manifest.entries) {
    t.builtins[qualified("robot", e.name)] = e.arity;
  }
  t.builtins["console.log"] = 0;
  t.variadic.insert("console.log");
  return t;
}

const ArityTable& ArityTable::standard() {
  static const ArityTable table = from_manifest(api::api_catalog());
  return table;
}

void ArityTable::add_program(const lang::Program& program) {
  std::function<void(const std::vector<lang::StmtPtr>&)> walk =
      [&](const std::vector<lang::StmtPtr>& body) {
        for (const auto& s : body) {
          if (const auto* f = s->as<lang::FunctionDecl>()) {
            user[f] = static_cast<int>(f->params.size());
            walk(f->body);
          }
        }
      };
  walk(program.body);
}

bool ArityTable::has_member(std::string_view ns, std::string_view name) const {
  return builtins.count(qualified(ns, name)) > 0;
}

std::optional<int> ArityTable::builtin_arity(std::string_view ns,
                                             std::string_view name) const {
  std::string key = qualified(ns, name);
  if (variadic.count(key)) return std::nullopt;
  auto it = builtins.find(key);
  if (it == builtins.end()) return std::nullopt;
  return it->second;
}

}  // namespace robojs::check
