#ifndef HOMREP_ERRORS_HPP
#define HOMREP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace homrep {

// All recoverable failures are reported through typed exceptions so the
// harness can turn them into flagged checks instead of aborting a battery.

struct DivisionByZero : std::runtime_error {
  explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct MixedDomain : std::runtime_error {
  explicit MixedDomain(const std::string& what) : std::runtime_error(what) {}
};

struct DenominatorVanishes : std::runtime_error {
  explicit DenominatorVanishes(const std::string& what) : std::runtime_error(what) {}
};

struct NotInvariant : std::runtime_error {
  explicit NotInvariant(const std::string& what) : std::runtime_error(what) {}
};

struct QuadraticRelationFails : std::runtime_error {
  explicit QuadraticRelationFails(const std::string& what) : std::runtime_error(what) {}
};

struct NotNormalizable : std::runtime_error {
  explicit NotNormalizable(const std::string& what) : std::runtime_error(what) {}
};

struct FormVanishesAtSpecialization : std::runtime_error {
  explicit FormVanishesAtSpecialization(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotAPartition : std::runtime_error {
  explicit NotAPartition(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedM : std::runtime_error {
  explicit UnsupportedM(const std::string& what) : std::runtime_error(what) {}
};

struct SingularMatrix : std::runtime_error {
  explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace homrep

#endif
