#include "dwt/units.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <numbers>
#include <string>

#include "dwt/error.hpp"

namespace dwt::units {
namespace {

struct UnitInfo {
    Unit unit;
    Dimension dim;
    double factor;
    std::string_view name;
};

constexpr std::array<UnitInfo, 16> kUnits{{
    {Unit::Pa, Dimension::Stress, 1.0, "Pa"},
    {Unit::MPa, Dimension::Stress, 1.0e6, "MPa"},
    {Unit::ksi, Dimension::Stress, kKsiInPascal, "ksi"},
    {Unit::N, Dimension::Force, 1.0, "N"},
    {Unit::lbf, Dimension::Force, kLbfInNewton, "lbf"},
    {Unit::N_m, Dimension::Moment, 1.0, "N*m"},
    {Unit::ft_lb, Dimension::Moment, kFootPoundInNewtonMeter, "ft*lb"},
    {Unit::m, Dimension::Length, 1.0, "m"},
    {Unit::mm, Dimension::Length, 1.0e-3, "mm"},
    {Unit::in, Dimension::Length, kInchInMeter, "in"},
    {Unit::kg_per_m3, Dimension::Density, 1.0, "kg/m3"},
    {Unit::g_per_cc, Dimension::Density, 1000.0, "g/cc"},
    {Unit::rpm, Dimension::AngularSpeed, 2.0 * std::numbers::pi / 60.0, "rpm"},
    {Unit::rad_per_s, Dimension::AngularSpeed, 1.0, "rad/s"},
    {Unit::m_per_s, Dimension::Speed, 1.0, "m/s"},
    {Unit::mph, Dimension::Speed, kMileInMeter / 3600.0, "mph"},
}};

const UnitInfo& info(Unit u) noexcept { return kUnits[static_cast<std::size_t>(u)]; }

struct Alias {
    std::string_view text;
    Unit unit;
};

constexpr std::array<Alias, 22> kAliases{{
    {"pa", Unit::Pa},         {"mpa", Unit::MPa},        {"ksi", Unit::ksi},
    {"n", Unit::N},           {"lbf", Unit::lbf},        {"lb-f", Unit::lbf},
    {"n*m", Unit::N_m},       {"n-m", Unit::N_m},        {"nm", Unit::N_m},
    {"ft*lb", Unit::ft_lb},   {"ft-lb", Unit::ft_lb},    {"ft-lbs", Unit::ft_lb},
    {"m", Unit::m},           {"mm", Unit::mm},          {"in", Unit::in},
    {"kg/m3", Unit::kg_per_m3}, {"g/cc", Unit::g_per_cc}, {"g/cm3", Unit::g_per_cc},
    {"rpm", Unit::rpm},       {"rad/s", Unit::rad_per_s}, {"m/s", Unit::m_per_s},
    {"mph", Unit::mph},
}};

std::string lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Dimension dimension_of(Unit u) noexcept { return info(u).dim; }
double si_factor(Unit u) noexcept { return info(u).factor; }
std::string_view name(Unit u) noexcept { return info(u).name; }

std::string_view name(Dimension d) noexcept {
    switch (d) {
        case Dimension::Stress: return "stress";
        case Dimension::Force: return "force";
        case Dimension::Moment: return "moment";
        case Dimension::Length: return "length";
        case Dimension::Density: return "density";
        case Dimension::AngularSpeed: return "angular speed";
        case Dimension::Speed: return "speed";
    }
    return "unknown";
}

Unit parse_unit(std::string_view text) {
    const auto key = lower(trim(text));
    for (const auto& a : kAliases) {
        if (a.text == key) return a.unit;
    }
    throw ValidationError("unknown unit '" + std::string(text) + "'");
}

Quantity convert(const Quantity& q, Unit target) {
    if (dimension_of(q.unit) != dimension_of(target)) {
        throw ValidationError("cannot convert " + std::string(name(q.unit)) + " (" +
                              std::string(name(dimension_of(q.unit))) + ") to " +
                              std::string(name(target)) + " (" +
                              std::string(name(dimension_of(target))) + ")");
    }
    if (q.unit == target) return q;
    return {q.value * si_factor(q.unit) / si_factor(target), target};
}

Quantity parse_quantity(std::string_view text, Unit fallback) {
    const auto s = trim(text);
    double value = 0.0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) {
        throw ValidationError("expected a number in '" + std::string(text) + "'");
    }
    const auto suffix = trim(std::string_view(ptr, static_cast<std::size_t>(last - ptr)));
    if (suffix.empty()) return {value, fallback};
    const Unit u = parse_unit(suffix);
    if (dimension_of(u) != dimension_of(fallback)) {
        throw ValidationError("'" + std::string(text) + "' is a " +
                              std::string(name(dimension_of(u))) + ", expected a " +
                              std::string(name(dimension_of(fallback))));
    }
    return {value, u};
}

}  // namespace dwt::units
