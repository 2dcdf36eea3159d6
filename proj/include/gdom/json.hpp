#pragma once

#include <gdom/bounds.hpp>
#include <gdom/certificates.hpp>
#include <gdom/constructors.hpp>
#include <gdom/errors.hpp>
#include <gdom/exact.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gdom
{
    using nlohmann::json;

    inline auto to_json(const Certificate & cert) -> json
    {
        json j;
        j["variant"] = std::string(to_string(cert.variant));
        if (cert.variant == Variant::roman) {
            std::vector<int> values(cert.roman().assignment().begin(), cert.roman().assignment().end());
            j["assignment"] = values;
        }
        else
            j["set"] = cert.set().indices();
        return j;
    }

    /// `{"variant": ..., "set": [...]}` or `{"variant": "roman", "assignment": [...]}` for a graph of order n.
    inline auto certificate_from_json(const json & j, int n) -> Certificate
    {
        try {
            const auto variant = parse_variant(j.at("variant").get<std::string>());
            if (variant == Variant::roman) {
                std::vector<std::uint8_t> assignment;
                for (const auto & value : j.at("assignment")) {
                    int x = value.get<int>();
                    if (x < 0 || x > 2)
                        throw ParseError(0, "assignment values must lie in {0, 1, 2}");
                    assignment.push_back(static_cast<std::uint8_t>(x));
                }
                if (static_cast<int>(assignment.size()) != n)
                    throw ParameterError("assignment has " + std::to_string(assignment.size()) + " entries, graph has " + std::to_string(n) + " vertices");
                return Certificate::of_roman(RomanFunction(std::move(assignment)));
            }
            const auto indices = j.at("set").get<std::vector<int>>();
            return Certificate::of_set(variant, VertexSet::from_indices(n, indices));
        }
        catch (const json::exception & e) {
            throw ParseError(0, std::string("malformed certificate: ") + e.what());
        }
    }

    inline auto to_json(const Verdict & v) -> json
    {
        json j{{"valid", v.valid}};
        if (! v.valid) {
            j["witness"] = v.witness;
            j["reason"] = std::string(to_string(v.reason));
        }
        return j;
    }

    inline auto to_json(const Solution & s) -> json
    {
        return json{{"parameter", std::string(parameter_name(s.variant))},
            {"value", s.value}, {"certificate", to_json(s.witness)}};
    }

    inline auto to_json(const BoundReport & r) -> json
    {
        json j{{"id", r.bound_id}, {"parameter", std::string(parameter_name(r.parameter))},
            {"applicable", r.applicable}, {"statement", r.descriptor}};
        if (r.rhs)
            j["rhs"] = *r.rhs;
        else
            j["rhs"] = nullptr;
        if (! r.applicable)
            j["reason"] = r.reason;
        if (r.severity == Severity::warning)
            j["severity"] = "warning";
        return j;
    }

    inline auto to_json(const Violation & v) -> json
    {
        return json{{"id", v.bound_id}, {"lhs", v.lhs}, {"rhs", v.rhs},
            {"severity", v.severity == Severity::warning ? "warning" : "failure"}, {"message", v.message}};
    }

    inline auto to_json(const ConstructionOutcome & o) -> json
    {
        json j{{"certificate", to_json(o.certificate)}, {"value", o.size_or_weight}};
        j["guarantee"] = o.guarantee ? json(*o.guarantee) : json(nullptr);
        if (o.expectation)
            j["expectation"] = *o.expectation;
        if (o.guarantee)
            j["meets_guarantee"] = o.meets_guarantee();
        if (o.matching)
            j["matching"] = json{{"beta1", o.matching->beta1}, {"touching", o.matching->touching},
                {"base_size", o.matching->base_size}, {"base", o.matching->exact_base ? "exact" : "derandomized"}};
        return j;
    }
}
