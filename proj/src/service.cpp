#include "expcurve/service.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include <fmt/format.h>
#include <httplib.h>

#include "expcurve/error.hpp"
#include "expcurve/export.hpp"
#include "expcurve/projection.hpp"
#include "expcurve/scenario.hpp"
#include "expcurve/version.hpp"

namespace expcurve::service {

using nlohmann::json;

namespace {

std::string env_or(const char* name, std::string fallback) {
  const char* v = std::getenv(name);
  return (v != nullptr && *v != '\0') ? std::string(v) : std::move(fallback);
}

ApiResponse error(int status, std::string message) {
  return {status, json{{"error", std::move(message)}}};
}

ApiResponse field_errors(const std::vector<scenario::FieldIssue>& issues) {
  json fields = json::array();
  for (const auto& i : issues) fields.push_back({{"field", i.field}, {"message", i.message}});
  return {422, json{{"error", "validation failed"}, {"fields", std::move(fields)}}};
}

}  // namespace

ServiceConfig config_from_env() {
  ServiceConfig c;
  c.host = env_or("EXPCURVE_HOST", c.host);
  if (const auto port = env_or("EXPCURVE_PORT", ""); !port.empty()) {
    int p = 0;
    auto [end, ec] = std::from_chars(port.data(), port.data() + port.size(), p);
    if (ec != std::errc{} || end != port.data() + port.size() || p < 0 || p > 65535)
      throw std::invalid_argument(fmt::format("EXPCURVE_PORT: not a port number: '{}'", port));
    c.port = p;
  }
  c.scenario_dir = env_or("EXPCURVE_SCENARIO_DIR", "");
  c.static_dir = env_or("EXPCURVE_STATIC_DIR", "");
  c.cors_origin = env_or("EXPCURVE_CORS_ORIGIN", c.cors_origin);
  return c;
}

Api::Api(std::filesystem::path scenario_dir) : scenario_dir_(std::move(scenario_dir)) {}

ApiResponse Api::health() const {
  return {200, json{{"status", "ok"}, {"version", kVersion}}};
}

ApiResponse Api::scenarios() const {
  try {
    json list = json::array();
    for (const auto& e : scenario::list_scenarios(scenario_dir_))
      list.push_back({{"name", e.name}, {"description", e.description}, {"bundled", e.bundled}});
    return {200, json{{"scenarios", std::move(list)}}};
  } catch (const std::exception& e) {
    return error(500, e.what());
  }
}

ApiResponse Api::project(std::string_view body) const {
  json request = json::object();
  if (body.find_first_not_of(" \t\r\n") != std::string_view::npos) {
    request = json::parse(body, nullptr, false);
    if (request.is_discarded()) return error(400, "request body is not valid JSON");
  }
  if (!request.is_object()) return error(400, "request body must be a JSON object");

  std::vector<scenario::FieldIssue> issues;
  std::string base = "base-2030";
  json overrides = json::object();
  std::vector<projection::Section> sections;

  for (const auto& [key, value] : request.items()) {
    if (key == "base") {
      if (value.is_string())
        base = value.get<std::string>();
      else
        issues.push_back({"base", "expected a string"});
    } else if (key == "overrides") {
      if (value.is_object())
        overrides = value;
      else if (!value.is_null())
        issues.push_back({"overrides", "expected an object"});
    } else if (key == "sections") {
      if (!value.is_array()) {
        issues.push_back({"sections", "expected an array of section names"});
        continue;
      }
      for (std::size_t i = 0; i < value.size(); ++i) {
        const auto& item = value[i];
        auto sec = item.is_string() ? projection::parse_section(item.get<std::string>())
                                    : std::nullopt;
        if (sec)
          sections.push_back(*sec);
        else
          issues.push_back({fmt::format("sections[{}]", i),
                            "expected one of electrolysis, hydrogen, dac, ekerosene"});
      }
    } else {
      issues.push_back({key, "unknown key"});
    }
  }
  if (!issues.empty()) return field_errors(issues);

  try {
    auto doc = scenario::catalog_document(base, scenario_dir_);
    if (!doc) return error(404, fmt::format("unknown base scenario '{}'", base));
    doc->merge_patch(overrides);
    const auto s = scenario::from_json(*doc);
    const auto bundle = projection::run_full_projection(s, sections);
    return {200, io::to_json(bundle)};
  } catch (const scenario::ValidationError& e) {
    return field_errors(e.issues());
  } catch (const scenario::ParseError& e) {
    return error(422, e.what());
  } catch (const std::exception& e) {
    return error(500, e.what());
  }
}

ApiResponse Api::handle(std::string_view method, std::string_view path,
                        std::string_view body) const {
  if (path == "/api/health")
    return method == "GET" ? health() : error(405, "method not allowed");
  if (path == "/api/scenarios")
    return method == "GET" ? scenarios() : error(405, "method not allowed");
  if (path == "/api/project")
    return method == "POST" ? project(body) : error(405, "method not allowed");
  return error(404, fmt::format("no such endpoint: {}", path));
}

struct Server::Impl {
  ServiceConfig config;
  Api api;
  httplib::Server http;
  int port = -1;

  explicit Impl(ServiceConfig c) : config(std::move(c)), api(config.scenario_dir) {}
};

Server::Server(ServiceConfig config) : impl_(std::make_unique<Impl>(std::move(config))) {
  auto& http = impl_->http;
  const auto& api = impl_->api;

  http.set_default_headers({{"Access-Control-Allow-Origin", impl_->config.cors_origin},
                            {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                            {"Access-Control-Allow-Headers", "Content-Type"}});

  auto reply = [&api](const httplib::Request& req, httplib::Response& res) {
    const auto r = api.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(io::dump(r.body), "application/json");
  };
  for (const char* path : {"/api/health", "/api/scenarios", "/api/project"}) {
    http.Get(path, reply);
    http.Post(path, reply);
  }
  http.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });

  if (!impl_->config.static_dir.empty())
    http.set_mount_point("/", impl_->config.static_dir.string());
}

Server::~Server() { stop(); }

int Server::bind() {
  auto& i = *impl_;
  if (i.config.port == 0) {
    i.port = i.http.bind_to_any_port(i.config.host);
  } else {
    i.port = i.http.bind_to_port(i.config.host, i.config.port) ? i.config.port : -1;
  }
  return i.port;
}

bool Server::listen() { return impl_->http.listen_after_bind(); }

void Server::stop() {
  if (impl_ && impl_->http.is_running()) impl_->http.stop();
}

void Server::wait_until_ready() const { impl_->http.wait_until_ready(); }

}  // namespace expcurve::service
