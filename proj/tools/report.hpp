#pragma once

// Command reports: command echo, input hashes, results and warnings. Rendered
// either as indented key: value text or as one JSON document. Both renderings
// are deterministic for identical inputs.

#include <filesystem>
#include <string>

#include <json.hpp>

namespace fintop::cli {

using Json = nlohmann::ordered_json;

std::string sha256_hex(std::string_view bytes);

class Report {
 public:
  explicit Report(std::string command);

  /// Records the SHA-256 of the file's bytes under the name given on the command line.
  void add_input(const std::string& name, std::string_view bytes);
  void add_output(const std::string& name, std::string_view bytes);
  void warn(std::string message);
  Json& results() { return results_; }

  std::string text() const;
  std::string json() const;

 private:
  Json document() const;

  std::string command_;
  Json inputs_ = Json::object();
  Json outputs_ = Json::object();
  Json results_ = Json::object();
  Json warnings_ = Json::array();
};

}  // namespace fintop::cli
