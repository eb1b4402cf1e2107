#pragma once

#include <memory>
#include <string>

namespace httplib {
class Server;
}

namespace calissons {

/// Stateless JSON service: POST /solve, /decide, /check, /extremes, /render,
/// /enumerate, /encode-sat. Bodies are handled by handle_request_text.
class HttpService {
 public:
  HttpService();
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  /// Binds without serving yet. Port 0 picks a free port; returns the port,
  /// or -1 on failure.
  int bind(const std::string& host, int port);
  /// Blocks until stop() is called.
  bool run();
  void stop();

 private:
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace calissons
