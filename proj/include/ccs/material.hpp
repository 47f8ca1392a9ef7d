#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "ccs/rational.hpp"

namespace ccs {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Definiteness { PositiveDefinite, PositiveSemidefinite, Indefinite };

inline const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "positive-definite";
    case Definiteness::PositiveSemidefinite: return "positive-semidefinite";
    default: return "indefinite";
  }
}

// mu, lambda: linear moduli; alpha1, alpha2: curvature moduli.
// kappa and eta are always derived, never stored, so a parameter set can
// not go inconsistent. Curvature positivity is classified, not enforced.
struct MaterialParams {
  Rational mu{1};
  Rational lambda{0};
  Rational alpha1{1};
  Rational alpha2{1};
  std::optional<Rational> eta;  // extra constitutive weight of the trace cross term
  std::optional<Rational> Lc;   // length scale paired with eta

  Rational kappa() const { return (Rational(2) * mu + Rational(3) * lambda) / Rational(3); }

  Rational eta_derived() const {
    const Rational s = alpha1 + alpha2;
    if (s.is_zero()) throw ConfigError("eta undefined: alpha1 + alpha2 = 0");
    return (alpha1 - alpha2) / s;
  }

  bool conformal() const { return alpha2.is_zero(); }

  Definiteness curvature_definiteness() const {
    if (alpha1.sign() > 0 && alpha2.sign() > 0) return Definiteness::PositiveDefinite;
    if (alpha1.sign() >= 0 && alpha2.sign() >= 0) return Definiteness::PositiveSemidefinite;
    return Definiteness::Indefinite;
  }

  // mu > 0 is a hard requirement; everything else is reported, not enforced.
  void validate() const {
    if (mu.sign() <= 0) throw ConfigError("material: mu must be > 0");
  }

  // The eta-form is admissible for -1 < eta < 1; outside that range the
  // parameters are accepted with a warning flag (eta is constitutive data).
  bool eta_warning() const {
    if (!eta) return false;
    return !(Rational(-1) < *eta && *eta < Rational(1));
  }

  // Curvature weights equivalent to the eta/Lc form: the eta-form energy
  // equals the standard two-modulus form with these moduli.
  MaterialParams eta_form_effective() const {
    if (!eta || !Lc) throw ConfigError("eta/Lc form requires both eta and Lc");
    const Rational common = mu * (*Lc) * (*Lc) * alpha1;
    MaterialParams p = *this;
    p.alpha1 = common * (Rational(1) + *eta);
    p.alpha2 = common * (Rational(1) - *eta);
    p.eta.reset();
    p.Lc.reset();
    return p;
  }
};

}  // namespace ccs
