#ifndef HOG_JSON_HH
#define HOG_JSON_HH

#include <hog/record.hh>

#include <json.hpp>

namespace hog
{
    using Json = nlohmann::json;

    /// {"num": n, "den": d}
    auto to_json(const Rational & r) -> Json;

    /// Accepts {"num", "den"}, an integer, or a string such as "4/3".
    /// Throws hog::Error (bad_format).
    auto rational_from_json(const Json & j) -> Rational;

    /// {"status": "...", "kind": "...", "value": ...} with value present iff COMPUTED
    /// and not undefined.
    auto to_json(const InvariantValue & v) -> Json;
    auto invariant_value_from_json(const Json & j) -> InvariantValue;

    /// Complete record; the graph travels as graph6.
    auto to_json(const GraphRecord & r) -> Json;
    auto record_from_json(const Json & j) -> GraphRecord;

    auto to_json(const User & u) -> Json;
    auto user_from_json(const Json & j) -> User;
}

#endif
