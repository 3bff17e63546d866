#ifndef GROUPORDER_JSONIO_HPP
#define GROUPORDER_JSONIO_HPP

#include <json.hpp>

#include "grouporder/cones.hpp"
#include "grouporder/hgp.hpp"
#include "grouporder/order_lift.hpp"
#include "grouporder/reduction.hpp"
#include "grouporder/stallings.hpp"

namespace grouporder {

// ordered_json keeps insertion order, which pins the wire formats byte for
// byte; dump() with default settings is the canonical rendering.
using Json = nlohmann::ordered_json;

// {"rank": k, "base": 0, "edges": [[src, "x2", dst], ...]}
Json to_json(const StallingsGraph& g);

// {"a":[{"key":"x1 x2","coef":2}],"b":[{"key":"1","coef":-1}],"g":"x1"}
Json to_json(const HElement& x);
HElement h_from_json(const Json& j, int rank);

// {"ok": bool, "violations": [{"condition": "CPC", "witness": [...]}]}
Json to_json(const BallReport& report);

// {"kind":"cylinder","words":["x1 x2"]} | {"kind":"empty"} | {"kind":"full"}
Json to_json(const PreimageResult& result);

// {"rank": 2, "images": ["x2 x1 x2^-1", "x2"]}
Json to_json(const OrderAutomorphism& phi);

} // namespace grouporder

#endif // GROUPORDER_JSONIO_HPP
