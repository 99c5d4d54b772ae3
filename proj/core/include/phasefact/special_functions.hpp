#pragma once

namespace phasefact {

/// Modified Bessel function I0(x), x >= 0. Power series below 20, the
/// large-argument asymptotic expansion above.
double bessel_i0(double x);

/// Modified Bessel function K0(x), x > 0. Throws DomainError for x <= 0.
double bessel_k0(double x);

}  // namespace phasefact
