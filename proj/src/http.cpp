#include "calissons/http.hpp"

#include <httplib.h>

#include "calissons/service.hpp"

namespace calissons {

HttpService::HttpService() : server_(std::make_unique<httplib::Server>()) {
  server_->set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Headers", "Content-Type"},
                                {"Access-Control-Allow-Methods", "POST, GET, OPTIONS"}});
  for (const char* endpoint : {"solve", "decide", "check", "extremes", "render", "enumerate", "encode-sat"}) {
    const std::string name = endpoint;
    server_->Post("/" + name, [name](const httplib::Request& req, httplib::Response& res) {
      const Response r = handle_request_text(name, req.body);
      res.status = r.http_status;
      res.set_content(r.body, r.content_type);
    });
  }
  server_->Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  server_->Get("/health", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("{\"status\": \"ok\"}\n", "application/json");
  });
}

HttpService::~HttpService() { stop(); }

int HttpService::bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

bool HttpService::run() { return server_->listen_after_bind(); }

void HttpService::stop() {
  if (server_) server_->stop();
}

}  // namespace calissons
