// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace robojs::net {

/// Saved program revisions laid out as `root/account/file/NNN.js`, numbered
/// from 001. This is the layout the corpus analyzer reads.
class RevisionStore {
 public:
  explicit RevisionStore(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }

  /// Account and file names: letters, digits, '-', '_' and '.', not
  /// starting with '.'.
  static bool valid_name(const std::string& name);

  /// Saves `source` as the next revision unless it equals the latest one.
  /// Returns the new revision number, or nullopt when nothing changed.
  /// Throws std::invalid_argument on bad names.
  std::optional<int> save_if_changed(const std::string& account, const std::string& file,
                                     const std::string& source);

  std::vector<std::string> accounts() const;
  std::vector<std::string> files(const std::string& account) const;
  /// Revision numbers of a file, ascending.
  std::vector<int> revisions(const std::string& account, const std::string& file) const;
  std::optional<std::string> read(const std::string& account, const std::string& file,
                                  int revision) const;
  std::optional<std::string> latest(const std::string& account, const std::string& file) const;

  static std::string revision_name(int revision);

 private:
  std::filesystem::path root_;
  mutable std::mutex mutex_;
};

}  // namespace robojs::net
