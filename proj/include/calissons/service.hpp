#pragma once

#include <string>
#include <string_view>

#include "calissons/io.hpp"

namespace calissons {

/// Result of one request, shared by the command line and the HTTP server.
/// exit_code: 0 solvable / valid, 1 unsolvable / invalid, 2 input error.
struct Response {
  int exit_code = 0;
  int http_status = 200;
  std::string content_type = "application/json";
  std::string body;
};

/// Endpoints: solve, decide, check, extremes, render, enumerate, encode-sat.
/// The request is a JSON object {"document": ..., options...}; a bare puzzle
/// document is accepted too. Never throws.
Response handle_request_text(std::string_view endpoint, std::string_view request_text);
Response handle_request(std::string_view endpoint, const json& request);

}  // namespace calissons
