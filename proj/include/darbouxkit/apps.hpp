#pragma once

#include <string>
#include <vector>

#include "darbouxkit/tensordt.hpp"

namespace darbouxkit {

enum class Route { Q, S };
const char* route_name(Route r);
Route parse_route(const std::string& s);

// derivatives of symbolic curvature etc. go in `table`
struct FrenetData {
  Expr kappa, tau;
  Route route = Route::S;
  DerivationTable table;
};

struct RigidData {
  Expr omega1, omega2;
  Route route = Route::Q;
  DerivationTable table;
};

struct AppSystem {
  std::string kind; // "frenet" or "rigid"
  Route route;
  SecondOrderFamily family; // r = 1
  Mat geometric;            // the unperturbed matrix as written for the application (Z' = -M Z)
  LinearSystem system;      // Z' = -(Omega0 + m N) Z for the route
  FundamentalMatrices fundamental;
  Mat Zfund; // Z for the Q route, Z1 for the S route
  std::vector<std::string> constraints;
};

// RouteConstraintViolated with the failing identity
AppSystem frenet_family(const FrenetData& d);
AppSystem rigid_family(const RigidData& d);

enum class Perturbation { N3, N3hat };
// the m-family of the route; RouteMismatch if `which` belongs to the other route
LinearSystem perturbed_system(const AppSystem& app, Perturbation which);
// r N3 or w r N3^ with r = 1
Mat perturbation_matrix(const AppSystem& app, Perturbation which);

struct AppChainStep {
  SecondOrderFamily family; // after the step
  DarbouxSeed seed;
  LiftedGauge T;            // T1 (Q route) or T2 (S route)
  LinearSystem system;      // transformed so(3) system
};

struct AppChain {
  AppSystem base;
  std::vector<AppChainStep> steps;
};

// seed i is seeds[min(i, size-1)]; SeedNotSolution carries the step index
AppChain application_chain(const AppSystem& app, const std::vector<Expr>& seeds, int k,
                           const DerivationTable& extra = {});

}
