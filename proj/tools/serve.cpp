#include <csignal>
#include <exception>
#include <iostream>

#include <fmt/format.h>

#include "expcurve/service.hpp"

namespace {
expcurve::service::Server* g_server = nullptr;

void on_signal(int) {
  if (g_server != nullptr) g_server->stop();
}
}  // namespace

int main() {
  try {
    auto config = expcurve::service::config_from_env();
    expcurve::service::Server server(config);
    const int port = server.bind();
    if (port < 0) {
      std::cerr << fmt::format("error: cannot bind {}:{}\n", config.host, config.port);
      return 1;
    }
    g_server = &server;
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    std::cout << fmt::format("listening on http://{}:{}\n", config.host, port) << std::flush;
    const bool ok = server.listen();
    g_server = nullptr;
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
