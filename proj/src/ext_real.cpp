#include "tslab/ext_real.hpp"

#include <charconv>
#include <cmath>

#include "tslab/errors.hpp"

namespace tslab {

ExtReal ExtReal::finite(double v) {
  if (!std::isfinite(v)) throw InvalidInput("ExtReal::finite: value is not finite");
  return ExtReal(Kind::finite, v);
}

double ExtReal::value() const {
  if (kind_ != Kind::finite) throw InvalidInput("ExtReal::value: infinite sentinel has no value");
  return value_;
}

std::string ExtReal::to_string() const {
  if (kind_ == Kind::pos_inf) return "+inf";
  if (kind_ == Kind::neg_inf) return "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value_);
  return std::string(buf, res.ptr);
}

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
  using K = ExtReal::Kind;
  if ((a.kind_ == K::pos_inf && b.kind_ == K::neg_inf) || (a.kind_ == K::neg_inf && b.kind_ == K::pos_inf)) {
    throw InvalidInput("ExtReal: +inf + -inf is undefined");
  }
  if (a.kind_ != K::finite) return a;
  if (b.kind_ != K::finite) return b;
  return ExtReal(K::finite, a.value_ + b.value_);
}

ExtReal operator-(const ExtReal& a) {
  using K = ExtReal::Kind;
  switch (a.kind_) {
    case K::pos_inf: return ExtReal::neg_inf();
    case K::neg_inf: return ExtReal::pos_inf();
    case K::finite: break;
  }
  return ExtReal(K::finite, -a.value_);
}

}  // namespace tslab
