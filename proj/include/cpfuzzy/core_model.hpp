#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cpfuzzy {

/// Slack on mu^2 + nu^2 <= 1 so that decimal inputs on the boundary (0.8, 0.6) parse.
inline constexpr double kConstraintSlack = 1e-9;

/// Pythagorean fuzzy value <mu, nu>: mu, nu in [0,1] with mu^2 + nu^2 <= 1.
class PFV {
 public:
  PFV() = default;
  /// Throws Error{OutOfRange} or Error{ConstraintViolation}.
  PFV(double mu, double nu);

  double mu() const noexcept { return mu_; }
  double nu() const noexcept { return nu_; }

  /// <nu, mu>
  PFV swapped() const noexcept;

  friend bool operator==(const PFV &, const PFV &) = default;

 private:
  double mu_ = 0.0;
  double nu_ = 0.0;
};

/// Circular Pythagorean fuzzy value <mu, nu; r>.
class CPFV {
 public:
  CPFV() = default;
  /// Throws like PFV, plus Error{RadiusOutOfRange} when r is outside [0,1].
  CPFV(double mu, double nu, double r);
  CPFV(const PFV &center, double r);

  const PFV &center() const noexcept { return center_; }
  double mu() const noexcept { return center_.mu(); }
  double nu() const noexcept { return center_.nu(); }
  double r() const noexcept { return r_; }

  friend bool operator==(const CPFV &, const CPFV &) = default;

 private:
  PFV center_;
  double r_ = 0.0;
};

PFV validate_pfv(double mu, double nu);
CPFV validate_cpfv(double mu, double nu, double r);

/// The positive ideal alternative <1, 0; 1>.
inline CPFV ideal_cpfv() { return CPFV{1.0, 0.0, 1.0}; }

enum class RadiusMode { Min, Max };

/// Finite circular Pythagorean fuzzy set; one radius per element.
class CPFS {
 public:
  using Element = std::pair<std::string, CPFV>;

  CPFS() = default;
  /// Throws Error{DuplicateLabel} on repeated labels.
  explicit CPFS(std::vector<Element> elements);

  const std::vector<Element> &elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const CPFV &operator[](std::size_t i) const { return elements_[i].second; }
  const std::string &label(std::size_t i) const { return elements_[i].first; }

  /// All elements share one radius.
  static CPFS uniform(const std::vector<std::pair<std::string, PFV>> &centers, double r);

  friend bool operator==(const CPFS &, const CPFS &) = default;

 private:
  std::vector<Element> elements_;
};

CPFS complement(const CPFS &a);

// The binary set operations require identical ordered universes and throw
// Error{UniverseMismatch} otherwise.
bool subset(const CPFS &a, const CPFS &b);
bool equal(const CPFS &a, const CPFS &b);
CPFS set_union(const CPFS &a, const CPFS &b, RadiusMode mode);
CPFS set_intersection(const CPFS &a, const CPFS &b, RadiusMode mode);

}  // namespace cpfuzzy
