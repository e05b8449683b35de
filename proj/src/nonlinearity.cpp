#include "tslab/nonlinearity.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "tslab/errors.hpp"

namespace tslab {

Poly::Poly(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  for (double v : c_) {
    if (!std::isfinite(v)) throw InvalidInput("Poly: non-finite coefficient");
  }
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

Poly Poly::monomial(unsigned degree, double coeff) {
  std::vector<double> c(degree + 1, 0.0);
  c[degree] = coeff;
  return Poly(std::move(c));
}

double Poly::operator()(double tau) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * tau + *it;
  return acc;
}

Poly Poly::integral() const {
  if (c_.empty()) return {};
  std::vector<double> c(c_.size() + 1, 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i) c[i + 1] = c_[i] / static_cast<double>(i + 1);
  return Poly(std::move(c));
}

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<double> c(p.c_.size() + q.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.c_.size(); ++i) {
    for (std::size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
  }
  return Poly(std::move(c));
}

Poly operator-(const Poly& p) {
  std::vector<double> c(p.c_);
  for (double& v : c) v = -v;
  return Poly(std::move(c));
}

namespace {

constexpr std::size_t kSamples = 64;
constexpr double kSampleMax = 10.0;

template <typename Fn>
bool holds_on_samples(double tau_max, Fn pred) {
  for (std::size_t i = 0; i < kSamples; ++i) {
    if (!pred(tau_max * static_cast<double>(i) / static_cast<double>(kSamples - 1))) return false;
  }
  return true;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Nonlinearity Nonlinearity::polynomial(Poly alpha) {
  if (alpha.coeff(0) != 0.0) throw InvalidInput("polynomial nonlinearity needs alpha(0) = 0");
  return Nonlinearity(PolynomialAlpha{std::move(alpha)});
}

Nonlinearity Nonlinearity::root(Poly A, unsigned N, double tau_max) {
  if (N < 2) throw InvalidInput("root nonlinearity needs N >= 2");
  if (A.degree() < 1) throw InvalidInput("root nonlinearity needs deg A >= 1");
  if (N % 2 == 0 && !holds_on_samples(tau_max, [&](double t) { return A(t) >= 0.0; })) {
    throw InvalidInput("root nonlinearity with even N needs A >= 0 on the sampled range");
  }
  return Nonlinearity(RootAlpha{std::move(A), N});
}

Nonlinearity Nonlinearity::rational(Poly A, Poly B, double tau_max) {
  const double sign = B(0.0) > 0.0 ? 1.0 : -1.0;
  if (B.is_zero() || !holds_on_samples(tau_max, [&](double t) { return sign * B(t) > 0.0; })) {
    throw InvalidInput("rational nonlinearity needs B != 0 on the sampled range");
  }
  return Nonlinearity(RationalAlpha{std::move(A), std::move(B)});
}

Nonlinearity Nonlinearity::custom(std::function<double(double)> fn, Rational kappa,
                                  std::optional<AlgebraicCertificate> certificate) {
  if (!fn) throw InvalidInput("custom nonlinearity needs a callable");
  return Nonlinearity(CustomAlpha{std::move(fn), kappa, std::move(certificate)});
}

std::string Nonlinearity::variant_name() const {
  return std::visit(overloaded{[](const PolynomialAlpha&) { return std::string("polynomial"); },
                               [](const RootAlpha&) { return std::string("root"); },
                               [](const RationalAlpha&) { return std::string("rational"); },
                               [](const CustomAlpha&) { return std::string("custom"); }},
                    v_);
}

double Nonlinearity::operator()(double tau) const {
  return std::visit(overloaded{[&](const PolynomialAlpha& p) { return p.alpha(tau); },
                               [&](const RootAlpha& r) {
                                 const double a = r.A(tau);
                                 if (r.N % 2 == 1) return std::copysign(std::pow(std::abs(a), 1.0 / r.N), a);
                                 return std::pow(std::max(a, 0.0), 1.0 / r.N);
                               },
                               [&](const RationalAlpha& q) { return q.A(tau) / q.B(tau); },
                               [&](const CustomAlpha& c) { return c.fn(tau); }},
                    v_);
}

double Nonlinearity::potential(double tau) const {
  if (const auto* p = std::get_if<PolynomialAlpha>(&v_)) return 0.5 * p->alpha.integral()(tau);
  if (tau == 0.0) return 0.0;
  // tanh-sinh copes with the sqrt-type endpoint behaviour of root variants.
  thread_local boost::math::quadrature::tanh_sinh<double> quad;
  auto f = [this](double s) { return (*this)(s); };
  return 0.5 * quad.integrate(f, 0.0, tau);
}

bool Nonlinearity::is_zero() const {
  if (const auto* p = std::get_if<PolynomialAlpha>(&v_)) return p->alpha.is_zero();
  if (const auto* r = std::get_if<RationalAlpha>(&v_)) return r->A.is_zero();
  return false;
}

Rational growth_exponent(const Nonlinearity& nl) {
  return std::visit(overloaded{[](const PolynomialAlpha& p) { return Rational(std::max(p.alpha.degree(), 0)); },
                               [](const RootAlpha& r) { return Rational(r.A.degree(), r.N); },
                               [](const RationalAlpha& q) {
                                 return Rational(std::max(q.A.degree(), 0) - q.B.degree());
                               },
                               [](const CustomAlpha& c) { return c.kappa; }},
                    nl.variant());
}

AlgebraicCertificate certificate_synthesize(const Nonlinearity& nl) {
  const Poly tau = Poly::monomial(1);
  return std::visit(
      overloaded{[&](const PolynomialAlpha& p) { return AlgebraicCertificate{{-(tau * p.alpha), Poly({1.0})}}; },
                 [&](const RootAlpha& r) {
                   std::vector<Poly> M(r.N + 1);
                   M[0] = -(Poly::monomial(r.N) * r.A);
                   M[r.N] = Poly({1.0});
                   return AlgebraicCertificate{std::move(M)};
                 },
                 [&](const RationalAlpha& q) { return AlgebraicCertificate{{-(tau * q.A), q.B}}; },
                 [&](const CustomAlpha& c) {
                   if (!c.certificate) throw InvalidInput("custom nonlinearity has no certificate to synthesize");
                   return *c.certificate;
                 }},
      nl.variant());
}

double certificate_residual(const Nonlinearity& nl, const AlgebraicCertificate& cert) {
  double worst = 0.0;
  for (std::size_t i = 0; i < kSamples; ++i) {
    const double tau = kSampleMax * static_cast<double>(i) / static_cast<double>(kSamples - 1);
    const double w = tau * nl(tau);
    double sum = 0.0;
    double scale = 1.0;
    double wj = 1.0;
    for (const Poly& m : cert.M) {
      const double term = m(tau) * wj;
      sum += term;
      scale = std::max(scale, std::abs(term));
      wj *= w;
    }
    worst = std::max(worst, std::abs(sum) / scale);
  }
  return worst;
}

Verdict admissible(const Nonlinearity& nl, int n) {
  if (n < 1) throw InvalidInput("admissible: dimension n must be >= 1");
  Verdict v;
  v.kappa = growth_exponent(nl);
  if (v.kappa <= 0) v.failed.emplace_back("kappa>0");
  if (n >= 3 && v.kappa > Rational(2, n - 2)) v.failed.emplace_back("kappa<=2/(n-2)");

  std::optional<AlgebraicCertificate> cert;
  try {
    cert = certificate_synthesize(nl);
  } catch (const InvalidInput&) {
  }
  if (!cert || cert->M.size() < 2 || cert->M.back().is_zero() ||
      certificate_residual(nl, *cert) >= kCertificateTolerance) {
    v.failed.emplace_back("certificate");
  } else {
    const auto& M = cert->M;
    const int deg0 = M[0].degree();
    for (std::size_t j = 1; j < M.size(); ++j) {
      if (M[j].is_zero()) continue;
      if (!(deg0 > M[j].degree() + static_cast<int>(j))) {
        v.failed.push_back("deg M0>deg Mj+j (j=" + std::to_string(j) + ")");
      }
    }
    if (n >= 3) {
      const Rational bound(n, n - 2);
      for (std::size_t j = 0; j < M.size(); ++j) {
        if (M[j].is_zero()) continue;
        const Rational lhs = Rational(M[j].degree()) + (v.kappa + 1) * static_cast<std::int64_t>(j);
        if (lhs > bound) v.failed.push_back("deg Mj+(kappa+1)j<=n/(n-2) (j=" + std::to_string(j) + ")");
      }
    }
  }
  v.admissible = v.failed.empty();
  return v;
}

}  // namespace tslab
