#pragma once

#include <stdexcept>
#include <string>

namespace ccsim {

// Base error for the library. `kind()` is a stable, machine-readable tag
// that the CLI maps into its error JSON.
class error : public std::runtime_error {
 public:
  error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class invalid_parameters : public error {
 public:
  explicit invalid_parameters(const std::string& msg, std::string field = "")
      : error("invalid-parameters", msg), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class invalid_topology : public error {
 public:
  explicit invalid_topology(const std::string& msg) : error("invalid-topology", msg) {}
};

class inconsistent_policy : public error {
 public:
  explicit inconsistent_policy(const std::string& msg) : error("inconsistent-policy", msg) {}
};

class invalid_feasible_set : public error {
 public:
  explicit invalid_feasible_set(const std::string& msg) : error("invalid-feasible-set", msg) {}
};

class instance_too_large : public error {
 public:
  explicit instance_too_large(const std::string& msg) : error("instance-too-large", msg) {}
};

class infeasible_objective : public error {
 public:
  explicit infeasible_objective(const std::string& msg) : error("infeasible-objective", msg) {}
};

class undefined_utility : public error {
 public:
  explicit undefined_utility(const std::string& msg) : error("undefined-utility", msg) {}
};

class oracle_scale_exceeded : public error {
 public:
  explicit oracle_scale_exceeded(const std::string& msg) : error("oracle-scale-exceeded", msg) {}
};

class schema_error : public error {
 public:
  explicit schema_error(const std::string& msg) : error("schema-error", msg) {}
};

}  // namespace ccsim
