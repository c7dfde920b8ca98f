#include "luroth/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <stdexcept>

namespace luroth {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::degenerate:
      return "degenerate";
  }
  return "fail";
}

void RunReport::pass(std::string name) { checks.push_back({std::move(name), Status::pass, std::nullopt}); }

void RunReport::fail(std::string name, std::string residual) {
  checks.push_back({std::move(name), Status::fail, std::move(residual)});
}

void RunReport::degenerate(std::string name) {
  checks.push_back({std::move(name), Status::degenerate, std::nullopt});
}

void RunReport::expect(std::string name, bool ok, const std::string& residual) {
  if (ok) {
    pass(std::move(name));
  } else {
    fail(std::move(name), residual);
  }
}

bool RunReport::any_failed() const {
  for (const auto& c : checks)
    if (c.status == Status::fail) return true;
  return false;
}

int RunReport::exit_code() const { return any_failed() ? 1 : 0; }

io::Json RunReport::to_json() const {
  io::Json cs = io::Json::array();
  for (const auto& c : checks) {
    io::Json entry{{"name", c.name}, {"status", status_name(c.status)}};
    if (c.residual) entry["residual"] = *c.residual;
    cs.push_back(entry);
  }
  return io::Json{{"command", command}, {"input_digest", input_digest}, {"outputs", outputs}, {"checks", cs}};
}

std::string RunReport::to_text() const {
  std::string out = "command: " + command + "\ninput_digest: " + input_digest + "\n";
  for (const auto& [key, value] : outputs.items()) out += key + ": " + value.dump() + "\n";
  for (const auto& c : checks) {
    out += std::string(status_name(c.status)) + "  " + c.name;
    if (c.residual) out += "  residual: " + *c.residual;
    out += "\n";
  }
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

}  // namespace luroth
