#ifndef VASR_ERRORS_H_
#define VASR_ERRORS_H_

#include <stdexcept>
#include <string>

namespace vasr {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input does not conform to a JSON / JSONL schema. `field_path` follows the
// "atoms[0].relation" convention; `line` is 1-based, 0 when not applicable.
class SchemaError : public Error {
 public:
  SchemaError(std::string field_path, std::string message, int line = 0);

  const std::string& field_path() const { return field_path_; }
  const std::string& message() const { return message_; }
  int line() const { return line_; }

 private:
  std::string field_path_;
  std::string message_;
  int line_;
};

class DuplicateInstanceId : public Error {
 public:
  explicit DuplicateInstanceId(const std::string& id)
      : Error("duplicate instance_id: " + id), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

// No subject-predicate structure was found in the text.
class ExtractionEmpty : public Error {
 public:
  explicit ExtractionEmpty(const std::string& text)
      : Error("no subject-predicate structure in: " + text) {}
};

// The remote model service could not be reached or answered malformed data.
// Retryable by the caller.
class RemoteUnavailable : public Error {
 public:
  using Error::Error;
};

class EmptyOriginal : public Error {
 public:
  EmptyOriginal() : Error("original atom set is empty") {}
};

class NotAttackable : public Error {
 public:
  using Error::Error;
};

class EmptyDenominator : public Error {
 public:
  EmptyDenominator() : Error("rate requested over an empty denominator") {}
};

class MisalignedInputs : public Error {
 public:
  MisalignedInputs(size_t a, size_t b)
      : Error("misaligned inputs: " + std::to_string(a) + " vs " +
              std::to_string(b)) {}
};

class MissingSurfaceScore : public Error {
 public:
  explicit MissingSurfaceScore(const std::string& instance_id)
      : Error("missing surface score for instance " + instance_id),
        instance_id_(instance_id) {}
  const std::string& instance_id() const { return instance_id_; }

 private:
  std::string instance_id_;
};

// Invalid OracleConfig or run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class InvalidQuery : public Error {
 public:
  using Error::Error;
};

// No instance is attackable for any verifier.
class EmptyAttackableSet : public Error {
 public:
  EmptyAttackableSet() : Error("no attackable instances for any verifier") {}
};

class NotRepairable : public Error {
 public:
  using Error::Error;
};

}  // namespace vasr

#endif  // VASR_ERRORS_H_
