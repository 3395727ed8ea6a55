#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "service.hpp"

namespace adrcode::service {

/// Binds the Service handlers to an HTTP listener. Optionally serves a static
/// directory (the reviewer UI build) at `/`.
class HttpServer {
 public:
  explicit HttpServer(Service& service,
                      std::optional<std::filesystem::path> static_dir = std::nullopt);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Returns the bound port, or -1 on failure.
  int bind(const std::string& host, int port);
  int bind_any_port(const std::string& host);
  /// Blocks until stop().
  bool listen();
  void stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace adrcode::service
