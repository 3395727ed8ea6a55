#include "http.hpp"

#include <cstdlib>

#include <httplib.h>

namespace adrcode::service {
namespace {

void send(httplib::Response& res, const Response& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json; charset=utf-8");
}

}  // namespace

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(Service& service, std::optional<std::filesystem::path> static_dir)
    : impl_(std::make_unique<Impl>()) {
  auto& srv = impl_->server;

  srv.Post("/api/encode", [&service](const httplib::Request& req, httplib::Response& res) {
    send(res, service.encode(req.body));
  });

  srv.Get("/api/terms", [&service](const httplib::Request& req, httplib::Response& res) {
    std::size_t limit = 20;
    if (req.has_param("limit")) {
      const auto n = std::strtol(req.get_param_value("limit").c_str(), nullptr, 10);
      if (n <= 0) {
        send(res, {400, {{"error", "limit must be a positive integer"}}});
        return;
      }
      limit = static_cast<std::size_t>(n);
    }
    send(res, service.terms(req.get_param_value("q"), limit));
  });

  srv.Post("/api/review", [&service](const httplib::Request& req, httplib::Response& res) {
    send(res, service.review(req.body));
  });

  srv.Get("/api/health", [&service](const httplib::Request&, httplib::Response& res) {
    send(res, {service.ready() ? 200 : 503, {{"ready", service.ready()}}});
  });

  if (static_dir) srv.set_mount_point("/", static_dir->string());
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

int HttpServer::bind_any_port(const std::string& host) {
  return impl_->server.bind_to_any_port(host);
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

bool HttpServer::running() const { return impl_->server.is_running(); }

}  // namespace adrcode::service
