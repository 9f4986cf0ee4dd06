#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "darbouxkit/apps.hpp"
#include "darbouxkit/numverify.hpp"

namespace darbouxkit {

using json = nlohmann::json;

// Expressions travel as canonical S-expressions. Input also accepts infix;
// `params` lists names parsed as parameters (m is always one).
json to_json(const Expr& e);
Expr expr_from_json(const json& j, const std::vector<std::string>& params = {});
json to_json(const Mat& m);
Mat mat_from_json(const json& j, const std::vector<std::string>& params = {});

// {"w": "<w'>", "kappa": null, ...}: key is the differentiated symbol in
// display form, null marks a free function
json to_json(const DerivationTable& t);
DerivationTable table_from_json(const json& j, const std::vector<std::string>& params = {});
// symbols with no rule become free functions
void declare_unknown_free(DerivationTable& t, const std::vector<Expr>& es);

json to_json(const SecondOrderFamily& f);
SecondOrderFamily family_from_json(const json& j);

json to_json(const LinearSystem& s);
LinearSystem system_from_json(const json& j);

json to_json(const OrthogonalSystem& s);
OrthogonalSystem orthogonal_from_json(const json& j);

json to_json(const CheckReport& r);
CheckReport report_from_json(const json& j);

// parameter names occurring in a list of expressions, m excluded
std::vector<std::string> params_of(const std::vector<Expr>& es);
std::vector<std::string> params_field(const json& j);

// dispatches on "type"; the result serializes back to the same JSON
json reingest(const json& j);

}
