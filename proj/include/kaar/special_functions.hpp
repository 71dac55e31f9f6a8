#pragma once

namespace kaar {

/// Gamma function for 0 < x. Throws std::domain_error for x <= 0 or
/// non-finite x, std::overflow_error when the result is not representable.
double gamma(double x);

/// Modified Bessel function of the second kind K_nu(x) for real nu >= 0 and
/// x > 0.
///
/// Half-integer orders are evaluated with the terminating closed form
///   K_{n+1/2}(x) = sqrt(pi/(2x)) e^{-x} sum_{k<=n} (n+k)! / (k!(n-k)!(2x)^k).
/// Other orders reduce to mu = nu - round(nu) in [-1/2, 1/2], evaluate
/// K_mu and K_{mu+1} with Temme's series (x < 2) or Steed's continued
/// fraction (x >= 2), and recur upward in the order, which is stable for K.
///
/// Throws std::domain_error on x <= 0, nu < 0 or NaN arguments and
/// std::overflow_error when K_nu(x) exceeds the double range (small x,
/// large nu). Underflows to 0 for very large x (beyond ~700).
double bessel_k(double nu, double x);

/// True when nu - 1/2 is a nonnegative integer.
bool is_half_integer_order(double nu);

}  // namespace kaar
