#include "cpfuzzy/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

#include "cpfuzzy/errors.hpp"

namespace cpfuzzy {

namespace {

bool in_unit(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

std::string describe(double mu, double nu) {
  std::ostringstream os;
  os.precision(17);
  os << "<" << mu << ", " << nu << ">";
  return os.str();
}

void require_same_universe(const CPFS &a, const CPFS &b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::UniverseMismatch, "sets have " + std::to_string(a.size()) + " and " +
                                                 std::to_string(b.size()) + " elements");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.label(i) != b.label(i)) {
      throw Error(ErrorCode::UniverseMismatch,
                  "element " + std::to_string(i) + " is '" + a.label(i) + "' vs '" + b.label(i) + "'");
    }
  }
}

double pick(RadiusMode mode, double ra, double rb) {
  return mode == RadiusMode::Min ? std::min(ra, rb) : std::max(ra, rb);
}

template <typename Combine>
CPFS zip_with(const CPFS &a, const CPFS &b, Combine combine) {
  require_same_universe(a, b);
  std::vector<CPFS::Element> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.emplace_back(a.label(i), combine(a[i], b[i]));
  }
  return CPFS(std::move(out));
}

}  // namespace

PFV::PFV(double mu, double nu) : mu_(mu), nu_(nu) {
  if (!in_unit(mu) || !in_unit(nu)) {
    throw Error(ErrorCode::OutOfRange, "component outside [0,1] in " + describe(mu, nu));
  }
  if (mu * mu + nu * nu > 1.0 + kConstraintSlack) {
    throw Error(ErrorCode::ConstraintViolation, "mu^2 + nu^2 > 1 for " + describe(mu, nu));
  }
}

PFV PFV::swapped() const noexcept {
  PFV out;
  out.mu_ = nu_;
  out.nu_ = mu_;
  return out;
}

CPFV::CPFV(double mu, double nu, double r) : CPFV(PFV{mu, nu}, r) {}

CPFV::CPFV(const PFV &center, double r) : center_(center), r_(r) {
  if (!in_unit(r)) {
    std::ostringstream os;
    os.precision(17);
    os << "radius " << r << " outside [0,1]";
    throw Error(ErrorCode::RadiusOutOfRange, os.str());
  }
}

PFV validate_pfv(double mu, double nu) { return PFV{mu, nu}; }

CPFV validate_cpfv(double mu, double nu, double r) { return CPFV{mu, nu, r}; }

CPFS::CPFS(std::vector<Element> elements) : elements_(std::move(elements)) {
  std::unordered_set<std::string> seen;
  for (const auto &[label, value] : elements_) {
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::DuplicateLabel, "element label '" + label + "' appears more than once");
    }
  }
}

CPFS CPFS::uniform(const std::vector<std::pair<std::string, PFV>> &centers, double r) {
  std::vector<Element> out;
  out.reserve(centers.size());
  for (const auto &[label, center] : centers) out.emplace_back(label, CPFV{center, r});
  return CPFS(std::move(out));
}

CPFS complement(const CPFS &a) {
  std::vector<CPFS::Element> out;
  out.reserve(a.size());
  for (const auto &[label, v] : a.elements()) out.emplace_back(label, CPFV{v.center().swapped(), v.r()});
  return CPFS(std::move(out));
}

bool subset(const CPFS &a, const CPFS &b) {
  require_same_universe(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const CPFV &x = a[i];
    const CPFV &y = b[i];
    if (!(x.r() <= y.r() && x.mu() <= y.mu() && x.nu() >= y.nu())) return false;
  }
  return true;
}

bool equal(const CPFS &a, const CPFS &b) {
  require_same_universe(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

CPFS set_union(const CPFS &a, const CPFS &b, RadiusMode mode) {
  return zip_with(a, b, [mode](const CPFV &x, const CPFV &y) {
    return CPFV{std::max(x.mu(), y.mu()), std::min(x.nu(), y.nu()), pick(mode, x.r(), y.r())};
  });
}

CPFS set_intersection(const CPFS &a, const CPFS &b, RadiusMode mode) {
  return zip_with(a, b, [mode](const CPFV &x, const CPFV &y) {
    return CPFV{std::min(x.mu(), y.mu()), std::max(x.nu(), y.nu()), pick(mode, x.r(), y.r())};
  });
}

}  // namespace cpfuzzy
