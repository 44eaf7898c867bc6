#pragma once

#include <stdexcept>
#include <string>

namespace upscalc {

// Exit-code mapping used by the CLI lives in tools/upscalc.cpp.

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainError : std::domain_error {
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Signature requested at a root of the Alexander polynomial.
struct JumpPointError : std::runtime_error {
  explicit JumpPointError(const std::string& msg) : std::runtime_error(msg) {}
};

// Precision-escalation cap reached without a certified answer.
struct UndecidableError : std::runtime_error {
  explicit UndecidableError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace upscalc
