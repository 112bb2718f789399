#include "vasr/errors.h"

#include <utility>

namespace vasr {

SchemaError::SchemaError(std::string field_path, std::string message, int line)
    : Error((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
            (field_path.empty() ? std::string() : field_path + ": ") +
            message),
      field_path_(std::move(field_path)),
      message_(std::move(message)),
      line_(line) {}

}  // namespace vasr
