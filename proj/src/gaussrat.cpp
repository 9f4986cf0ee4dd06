#include "darbouxkit/gaussrat.hpp"
#include "darbouxkit/errors.hpp"

namespace darbouxkit {

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
  if (sgn(n) == 0) throw Error(ErrorCode::DivisionByZeroExpr, "division by zero constant");
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
  im_ = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(r);
  return *this;
}

GaussRat GaussRat::from_string(const std::string& s) {
  auto dot = s.find('.');
  try {
    if (dot == std::string::npos) {
      mpq_class q(s, 10);
      q.canonicalize();
      if (sgn(q.get_den()) == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + s + "'");
      return GaussRat(q);
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    mpz_class den = 1;
    for (size_t k = dot + 1; k < s.size(); ++k) den *= 10;
    mpq_class q{mpz_class(digits.empty() ? "0" : digits, 10), den};
    q.canonicalize();
    return GaussRat(q);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::Parse, "bad number '" + s + "'");
  }
}

std::string GaussRat::sexpr() const {
  if (is_real()) return re_.get_str();
  return "(c " + re_.get_str() + " " + im_.get_str() + ")";
}

std::string GaussRat::infix() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) {
    if (im_ == 1) return "i";
    if (im_ == -1) return "-i";
    return im_.get_str() + "*i";
  }
  std::string s = "(" + re_.get_str();
  if (sgn(im_) > 0) s += "+";
  if (im_ == 1) s += "i";
  else if (im_ == -1) s += "-i";
  else s += im_.get_str() + "*i";
  return s + ")";
}

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::UnboundSymbol: return "UnboundSymbol";
    case ErrorCode::DivisionByZeroExpr: return "DivisionByZeroExpr";
    case ErrorCode::EvalSingularity: return "EvalSingularity";
    case ErrorCode::SingularGauge: return "SingularGauge";
    case ErrorCode::SeedNotSolution: return "SeedNotSolution";
    case ErrorCode::NotTraceless: return "NotTraceless";
    case ErrorCode::OmegaOneZero: return "OmegaOneZero";
    case ErrorCode::NotShapeInvariant: return "NotShapeInvariant";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::RouteConstraintViolated: return "RouteConstraintViolated";
    case ErrorCode::RouteMismatch: return "RouteMismatch";
    case ErrorCode::NotUnitNorm: return "NotUnitNorm";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::Internal: return "InternalError";
  }
  return "Error";
}

}
