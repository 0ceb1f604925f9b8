// SPDX-License-Identifier: Apache-2.0
#include "robojs/net/revision_store.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace robojs::net {

namespace fs = std::filesystem;

namespace {

std::optional<int> parse_revision(const fs::path& p) {
  if (p.extension() != ".js") return std::nullopt;
  std::string stem = p.stem().string();
  if (stem.size() < 3 || !std::all_of(stem.begin(), stem.end(), ::isdigit)) return std::nullopt;
  return std::stoi(stem);
}

std::vector<std::string> subdirs(const fs::path& dir) {
  std::vector<std::string> out;
  std::error_code ec;
  for (const auto& e : fs::directory_iterator(dir, ec)) {
    if (e.is_directory() && RevisionStore::valid_name(e.path().filename().string())) {
      out.push_back(e.path().filename().string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

RevisionStore::RevisionStore(fs::path root) : root_(std::move(root)) {}

bool RevisionStore::valid_name(const std::string& name) {
  if (name.empty() || name.size() > 128 || name[0] == '.') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.';
  });
}

std::string RevisionStore::revision_name(int revision) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03d.js", revision);
  return buf;
}

std::optional<int> RevisionStore::save_if_changed(const std::string& account,
                                                  const std::string& file,
                                                  const std::string& source) {
  if (!valid_name(account) || !valid_name(file)) {
    throw std::invalid_argument("invalid account or file name");
  }
  std::lock_guard lock(mutex_);
  fs::path dir = root_ / account / file;
  fs::create_directories(dir);
  int last = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (auto n = parse_revision(e.path())) last = std::max(last, *n);
  }
  if (last > 0) {
    std::ifstream in(dir / revision_name(last), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    if (ss.str() == source) return std::nullopt;
  }
  int next = last + 1;
  fs::path tmp = dir / (revision_name(next) + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary);
    out << source;
    if (!out) throw std::runtime_error("cannot write revision in " + dir.string());
  }
  fs::rename(tmp, dir / revision_name(next));
  return next;
}

std::vector<std::string> RevisionStore::accounts() const { return subdirs(root_); }

std::vector<std::string> RevisionStore::files(const std::string& account) const {
  if (!valid_name(account)) return {};
  return subdirs(root_ / account);
}

std::vector<int> RevisionStore::revisions(const std::string& account,
                                          const std::string& file) const {
  std::vector<int> out;
  if (!valid_name(account) || !valid_name(file)) return out;
  std::error_code ec;
  for (const auto& e : fs::directory_iterator(root_ / account / file, ec)) {
    if (auto n = parse_revision(e.path())) out.push_back(*n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> RevisionStore::read(const std::string& account,
                                               const std::string& file, int revision) const {
  if (!valid_name(account) || !valid_name(file)) return std::nullopt;
  std::ifstream in(root_ / account / file / revision_name(revision), std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<std::string> RevisionStore::latest(const std::string& account,
                                                 const std::string& file) const {
  auto revs = revisions(account, file);
  if (revs.empty()) return std::nullopt;
  return read(account, file, revs.back());
}

}  // namespace robojs::net
