// SPDX-License-Identifier: Apache-2.0
// Revision statistics and error estimates for a saved-program corpus.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "robojs/corpus/corpus.hpp"

using namespace robojs;

int main(int argc, char** argv) {
  CLI::App app{"Summarize a corpus laid out as account/file/NNN.js"};
  std::string dir;
  std::string format = "table";
  std::string manifest_path;
  app.add_option("dir", dir, "corpus root")->required();
  app.add_option("--format", format, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}));
  app.add_option("--manifest", manifest_path, "robot API manifest (JSON) for arities");
  CLI11_PARSE(app, argc, argv);

  api::ApiManifest manifest = api::api_catalog();
  if (!manifest_path.empty()) {
    std::ifstream in(manifest_path);
    if (!in) {
      std::cerr << "robojs-corpus: cannot read " << manifest_path << '\n';
      return 1;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      manifest = api::manifest_from_json(ss.str());
    } catch (const std::exception& e) {
      std::cerr << "robojs-corpus: " << manifest_path << ": " << e.what() << '\n';
      return 1;
    }
  }

  corpus::Corpus c;
  try {
    c = corpus::load_corpus(dir);
  } catch (const std::exception& e) {
    std::cerr << "robojs-corpus: " << e.what() << '\n';
    return 1;
  }
  for (const auto& w : c.warnings) std::cerr << "warning: " << w << '\n';
  auto fmt = format == "csv" ? corpus::ReportFormat::Csv : corpus::ReportFormat::Table;
  std::cout << corpus::report(corpus::scan(c), corpus::estimate_errors(c, manifest), fmt);
  return 0;
}
