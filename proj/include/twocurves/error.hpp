#pragma once

#include <stdexcept>
#include <string>

namespace twocurves {

enum class ErrorKind {
  MalformedCode,
  NotSpherical,
  NotTransversal,
  Disconnected,
  InvalidArrangement,
  InvalidSite,
  LayoutDegenerate,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedCode: return "MalformedCode";
    case ErrorKind::NotSpherical: return "NotSpherical";
    case ErrorKind::NotTransversal: return "NotTransversal";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::InvalidArrangement: return "InvalidArrangement";
    case ErrorKind::InvalidSite: return "InvalidSite";
    case ErrorKind::LayoutDegenerate: return "LayoutDegenerate";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace twocurves
