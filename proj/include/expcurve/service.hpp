#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include <json.hpp>

namespace expcurve::service {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::filesystem::path scenario_dir;  // custom scenarios, optional
  std::filesystem::path static_dir;    // dashboard assets served at /, optional
  std::string cors_origin = "*";
};

/// Reads EXPCURVE_HOST, EXPCURVE_PORT, EXPCURVE_SCENARIO_DIR, EXPCURVE_STATIC_DIR
/// and EXPCURVE_CORS_ORIGIN over the defaults. Throws std::invalid_argument on a
/// malformed port.
ServiceConfig config_from_env();

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

/// HTTP-free request handling, so every endpoint can be exercised directly.
class Api {
 public:
  explicit Api(std::filesystem::path scenario_dir = {});

  ApiResponse health() const;
  ApiResponse scenarios() const;
  /// Body: {"base": name, "overrides": {...}, "sections": [...]}, all optional.
  /// The overrides are applied to the base document as a JSON merge patch.
  ApiResponse project(std::string_view body) const;

  /// Dispatches by method and path; unknown routes give 404, wrong methods 405.
  ApiResponse handle(std::string_view method, std::string_view path,
                     std::string_view body) const;

 private:
  std::filesystem::path scenario_dir_;
};

/// Thin HTTP front end over Api. Thread-safe: Api holds no mutable state.
class Server {
 public:
  explicit Server(ServiceConfig config);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds to config.host and config.port (0 picks a free port). Returns the
  /// bound port, or -1 on failure.
  int bind();
  /// Blocks serving requests until stop() is called.
  bool listen();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace expcurve::service
