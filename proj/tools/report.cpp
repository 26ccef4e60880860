#include "report.hpp"

#include <array>
#include <sstream>

#include <openssl/evp.h>

namespace fintop::cli {

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

Report::Report(std::string command) : command_(std::move(command)) {}

void Report::add_input(const std::string& name, std::string_view bytes) {
  inputs_[name] = "sha256:" + sha256_hex(bytes);
}

void Report::add_output(const std::string& name, std::string_view bytes) {
  outputs_[name] = "sha256:" + sha256_hex(bytes);
}

void Report::warn(std::string message) { warnings_.push_back(std::move(message)); }

Json Report::document() const {
  Json doc;
  doc["command"] = command_;
  doc["inputs"] = inputs_;
  if (!outputs_.empty()) doc["outputs"] = outputs_;
  doc["results"] = results_;
  doc["warnings"] = warnings_;
  return doc;
}

namespace {

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& e : j)
    if (e.is_object() || (e.is_array() && !is_flat(e))) return false;
  return true;
}

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + scalar(j[i]);
    return out + "]";
  }
  return j.dump();
}

void emit(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_flat(value)) {
        out << pad << key << ": " << scalar(value) << '\n';
      } else if ((value.is_object() || value.is_array()) && value.empty()) {
        out << pad << key << ": " << (value.is_object() ? "{}" : "[]") << '\n';
      } else {
        out << pad << key << ":\n";
        emit(out, value, indent + 2);
      }
    }
    return;
  }
  for (const auto& e : j) {
    if (is_flat(e)) {
      out << pad << "- " << scalar(e) << '\n';
    } else {
      out << pad << "-\n";
      emit(out, e, indent + 2);
    }
  }
}

}  // namespace

std::string Report::text() const {
  std::ostringstream out;
  emit(out, document(), 0);
  return out.str();
}

std::string Report::json() const { return document().dump(2) + "\n"; }

}  // namespace fintop::cli
