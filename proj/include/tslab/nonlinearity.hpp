#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

namespace tslab {

using Rational = boost::rational<std::int64_t>;

/// Real polynomial, c[i] multiplies tau^i. Trailing zeros are trimmed.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<double> coeffs);
  static Poly monomial(unsigned degree, double coeff = 1.0);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<double>& coeffs() const { return c_; }
  double coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0.0; }
  double operator()(double tau) const;
  /// Exact antiderivative vanishing at 0.
  Poly integral() const;

  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<double> c_;
};

/// sum_j M_j(tau) w^j with w = tau alpha(tau); M.size() == J + 1.
struct AlgebraicCertificate {
  std::vector<Poly> M;
  std::size_t J() const { return M.empty() ? 0 : M.size() - 1; }
};

struct PolynomialAlpha {
  Poly alpha;
};
/// alpha = A^(1/N); the real N-th root for odd N.
struct RootAlpha {
  Poly A;
  unsigned N = 2;
};
struct RationalAlpha {
  Poly A;
  Poly B;
};
struct CustomAlpha {
  std::function<double(double)> fn;
  Rational kappa;
  std::optional<AlgebraicCertificate> certificate;
};

class Nonlinearity {
 public:
  using Variant = std::variant<PolynomialAlpha, RootAlpha, RationalAlpha, CustomAlpha>;

  /// Requires alpha(0) = 0, i.e. no constant term.
  static Nonlinearity polynomial(Poly alpha);
  /// N >= 2, deg A >= 1; for even N, A >= 0 is sampled on [0, tau_max].
  static Nonlinearity root(Poly A, unsigned N, double tau_max = 10.0);
  /// B must keep one strict sign on samples of [0, tau_max].
  static Nonlinearity rational(Poly A, Poly B, double tau_max = 10.0);
  static Nonlinearity custom(std::function<double(double)> fn, Rational kappa,
                             std::optional<AlgebraicCertificate> certificate = std::nullopt);

  const Variant& variant() const { return v_; }
  std::string variant_name() const;

  double operator()(double tau) const;
  /// G(tau) = 1/2 int_0^tau alpha(s) ds; exact for polynomials, tanh-sinh
  /// quadrature otherwise.
  double potential(double tau) const;
  /// True when alpha is identically zero.
  bool is_zero() const;

 private:
  explicit Nonlinearity(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// kappa: deg alpha, deg A / N, deg A - deg B, or the declared value.
Rational growth_exponent(const Nonlinearity& nl);

/// Certificate for the three built-in families; Custom throws InvalidInput
/// unless a certificate was supplied with it.
AlgebraicCertificate certificate_synthesize(const Nonlinearity& nl);

/// max over 64 samples of [0, 10] of |sum_j M_j w^j| / max(1, max_j |M_j w^j|).
double certificate_residual(const Nonlinearity& nl, const AlgebraicCertificate& cert);

inline constexpr double kCertificateTolerance = 1e-9;

struct Verdict {
  bool admissible = false;
  Rational kappa;
  std::vector<std::string> failed;
};

/// Growth and algebraic conditions in dimension n, checked in order:
/// kappa > 0; kappa <= 2/(n-2) (n >= 3); certificate with M_J != 0 and small
/// residual; deg M_0 > deg M_j + j; deg M_j + (kappa+1) j <= n/(n-2) (n >= 3).
/// Identically zero M_j with 0 < j < J carry no degree and are skipped.
Verdict admissible(const Nonlinearity& nl, int n);

}  // namespace tslab
