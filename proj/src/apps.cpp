#include "darbouxkit/apps.hpp"

namespace darbouxkit {

const char* route_name(Route r) { return r == Route::Q ? "Q" : "S"; }

Route parse_route(const std::string& s) {
  if (s == "Q" || s == "q") return Route::Q;
  if (s == "S" || s == "s") return Route::S;
  throw Error(ErrorCode::InvalidArgument, "route must be Q or S, got '" + s + "'");
}

namespace {

Expr I() { return Expr::imag(); }

void require(bool ok, const std::string& what, const Expr& residual = Expr()) {
  if (!ok) throw Error(ErrorCode::RouteConstraintViolated, "route constraint violated: " + what, residual.infix());
}

LinearSystem route_system(const SecondOrderFamily& f, Route r) {
  return r == Route::Q ? so3_q_system(f) : so3_s_system(f);
}

AppSystem finish(AppSystem a) {
  a.system = route_system(a.family, a.route);
  a.fundamental = fundamental_matrices(a.family);
  a.Zfund = a.route == Route::Q ? a.fundamental.Z : a.fundamental.Z1;
  Mat m0 = substitute(a.system.A, {{a.family.m, Expr()}});
  if (m0 != a.geometric)
    throw Error(ErrorCode::Internal, a.kind + " identification does not reproduce the application matrix");
  return a;
}

}

AppSystem frenet_family(const FrenetData& d) {
  AppSystem a;
  a.kind = "frenet";
  a.route = d.route;
  const Expr &k = d.kappa, &tau = d.tau;
  a.geometric = Mat{{Expr(), -k, Expr()}, {k, Expr(), -tau}, {Expr(), tau, Expr()}};
  DerivationTable t = d.table;
  if (d.route == Route::Q) {
    require((tau + 2 * I()).is_zero(), "tau + 2i = 0", tau + 2 * I());
    // w = exp(i int kappa), registered through its logarithmic derivative
    t.set("w", 0, I() * k * Expr::symbol("w"));
    a.family = SecondOrderFamily::make(I() * k, Expr(-1), Expr(1), Expr::symbol("w"), t);
    a.constraints = {"tau = -2i", "p = i kappa", "q = -1", "w' = i kappa w"};
  } else {
    Expr eta = I() * k - tau;
    require(!eta.is_zero(), "i kappa - tau != 0", eta);
    Expr w = 2 / eta;
    a.family = SecondOrderFamily::make(-differentiate(eta, t) / eta, (k * k + tau * tau) / 4, Expr(1), w, t);
    a.constraints = {"eta = i kappa - tau != 0", "w = 2/eta", "q = (kappa^2 + tau^2)/4"};
  }
  return finish(std::move(a));
}

AppSystem rigid_family(const RigidData& d) {
  AppSystem a;
  a.kind = "rigid";
  a.route = d.route;
  const Expr &w1 = d.omega1, &w2 = d.omega2;
  a.geometric = Mat{{Expr(), Expr(), w2}, {Expr(), Expr(), -w1}, {-w2, w1, Expr()}};
  if (d.route == Route::Q) {
    Expr c = I() * w1 + w2 - 2;
    require(c.is_zero(), "i omega1 + omega2 = 2", c);
    a.family = SecondOrderFamily::make(Expr(), w2 - 1, Expr(1), Expr(1), d.table);
    a.constraints = {"i omega1 + omega2 = 2", "p = 0", "q = omega2 - 1", "w = 1"};
  } else {
    require(w2.is_zero(), "omega2 = 0", w2);
    require(!w1.is_zero(), "omega1 != 0", w1);
    a.family = SecondOrderFamily::make(-differentiate(w1, d.table) / w1, w1 * w1 / 4, Expr(1), -2 / w1, d.table);
    a.constraints = {"omega2 = 0", "omega1 != 0", "w = -2/omega1", "q = omega1^2/4"};
  }
  return finish(std::move(a));
}

Mat perturbation_matrix(const AppSystem& app, Perturbation which) {
  if ((which == Perturbation::N3) != (app.route == Route::Q))
    throw Error(ErrorCode::RouteMismatch, std::string("perturbation does not belong to the ") +
                                              route_name(app.route) + " route");
  if (which == Perturbation::N3)
    return Mat{{Expr(), Expr(), Expr(-1)}, {Expr(), Expr(), I()}, {Expr(1), -I(), Expr()}};
  return app.family.w * Mat{{Expr(), I(), Expr()}, {-I(), Expr(), Expr(-1)}, {Expr(), Expr(1), Expr()}};
}

LinearSystem perturbed_system(const AppSystem& app, Perturbation which) {
  Mat N = perturbation_matrix(app, which);
  if (m_coefficient(app.system.A, app.family.m) != N)
    throw Error(ErrorCode::Internal, "route system is not base + m N");
  return app.system;
}

AppChain application_chain(const AppSystem& app, const std::vector<Expr>& seeds, int k,
                           const DerivationTable& extra) {
  if (!app.family.r.constant_value() || app.family.r != Expr(1))
    throw Error(ErrorCode::InvalidArgument, "application chains need r = 1");
  DarbouxChain c = darboux_chain(app.family, seeds, k, extra);
  AppChain out{app, {}};
  SecondOrderFamily cur = app.family;
  LinearSystem sys = app.system;
  for (size_t i = 0; i < c.steps.size(); ++i) {
    const ChainStep& st = c.steps[i];
    LiftedGauge T = app.route == Route::Q ? lift_t1(cur, st.seed) : lift_t2(cur, st.seed);
    sys.table = st.seed.table;
    LinearSystem next = transform(sys, T.G);
    LinearSystem expect = route_system(st.family, app.route);
    if (next.A != expect.A)
      throw Error(ErrorCode::Internal, "lifted gauge does not reach the transformed system", "", static_cast<int>(i));
    out.steps.push_back(AppChainStep{st.family, st.seed, T, expect});
    cur = st.family;
    sys = expect;
  }
  return out;
}

}
