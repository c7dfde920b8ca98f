#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "luroth/serialize.hpp"

namespace luroth {

enum class Status { pass, fail, degenerate };

std::string_view status_name(Status s);

/// One named check; `residual` is set exactly when the status is fail.
struct Check {
  std::string name;
  Status status = Status::pass;
  std::optional<std::string> residual;
};

struct RunReport {
  std::string command;
  std::string input_digest;
  io::Json outputs = io::Json::object();
  std::vector<Check> checks;

  void pass(std::string name);
  void fail(std::string name, std::string residual);
  void degenerate(std::string name);
  /// pass when ok, otherwise fail with the residual.
  void expect(std::string name, bool ok, const std::string& residual);

  bool any_failed() const;
  /// 1 if any check failed, 0 otherwise.
  int exit_code() const;
  io::Json to_json() const;
  std::string to_text() const;
};

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

}  // namespace luroth
