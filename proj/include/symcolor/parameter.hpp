#pragma once

#include <array>
#include <optional>
#include <string>

#include "symcolor/coloring.hpp"
#include "symcolor/verify.hpp"

namespace symcolor {

// The twelve coloring parameters.
enum class Parameter {
    chi,          // proper vertex
    chi_prime,    // proper edge
    chi_total,    // total
    chi_odd,      // odd proper vertex
    d,            // distinguishing vertex
    d_prime,      // distinguishing edge
    d_total,      // distinguishing total (not necessarily proper)
    chi_d,        // distinguishing proper vertex
    chi_prime_d,  // distinguishing proper edge
    chi_total_d,  // distinguishing proper total
    chi_n,        // neighbor-distinguishing vertex
    chi_prime_n,  // neighbor-distinguishing edge
};

inline constexpr std::array<Parameter, 12> kAllParameters = {
    Parameter::chi,     Parameter::chi_prime,   Parameter::chi_total,   Parameter::chi_odd,
    Parameter::d,       Parameter::d_prime,     Parameter::d_total,     Parameter::chi_d,
    Parameter::chi_prime_d, Parameter::chi_total_d, Parameter::chi_n, Parameter::chi_prime_n,
};

struct ParameterTraits {
    ColoringKind kind;
    std::optional<Notion> notion;  // structural requirement, if any
    bool distinguishing;
};

inline ParameterTraits traits(Parameter p) {
    using K = ColoringKind;
    switch (p) {
        case Parameter::chi: return {K::vertex, Notion::proper_vertex, false};
        case Parameter::chi_prime: return {K::edge, Notion::proper_edge, false};
        case Parameter::chi_total: return {K::total, Notion::total, false};
        case Parameter::chi_odd: return {K::vertex, Notion::odd, false};
        case Parameter::d: return {K::vertex, std::nullopt, true};
        case Parameter::d_prime: return {K::edge, std::nullopt, true};
        case Parameter::d_total: return {K::total, std::nullopt, true};
        case Parameter::chi_d: return {K::vertex, Notion::proper_vertex, true};
        case Parameter::chi_prime_d: return {K::edge, Notion::proper_edge, true};
        case Parameter::chi_total_d: return {K::total, Notion::total, true};
        case Parameter::chi_n: return {K::vertex, Notion::nd_vertex, false};
        case Parameter::chi_prime_n: return {K::edge, Notion::nd_edge, false};
    }
    return {K::vertex, std::nullopt, false};
}

inline const char* to_string(Parameter p) {
    switch (p) {
        case Parameter::chi: return "chi";
        case Parameter::chi_prime: return "chi-prime";
        case Parameter::chi_total: return "chi-total";
        case Parameter::chi_odd: return "chi-odd";
        case Parameter::d: return "d";
        case Parameter::d_prime: return "d-prime";
        case Parameter::d_total: return "d-total";
        case Parameter::chi_d: return "chi-d";
        case Parameter::chi_prime_d: return "chi-prime-d";
        case Parameter::chi_total_d: return "chi-total-d";
        case Parameter::chi_n: return "chi-n";
        case Parameter::chi_prime_n: return "chi-prime-n";
    }
    return "?";
}

inline std::optional<Parameter> parameter_from_string(const std::string& s) {
    for (Parameter p : kAllParameters) {
        if (s == to_string(p)) return p;
    }
    return std::nullopt;
}

}  // namespace symcolor
