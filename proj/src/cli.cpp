#include "dwt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <variant>

#include "dwt/aero.hpp"
#include "dwt/bearing.hpp"
#include "dwt/error.hpp"
#include "dwt/fatigue.hpp"
#include "dwt/format.hpp"
#include "dwt/io.hpp"
#include "dwt/presets.hpp"
#include "dwt/report.hpp"
#include "dwt/schedule.hpp"
#include "dwt/structural.hpp"
#include "dwt/system.hpp"
#include "dwt/units.hpp"
#include "dwt/weibull.hpp"

namespace dwt::cli {
namespace {

using units::Dimension;
using units::Unit;
using io::json;

constexpr CoverageEntry kCoverage[] = {
    {"units::convert", "units convert"},
    {"fatigue::endurance_limit_unmodified", "fatigue endurance"},
    {"fatigue::marin_modified_endurance", "fatigue endurance"},
    {"fatigue::sn_constants", "fatigue sn"},
    {"fatigue::cycles_to_failure", "fatigue life"},
    {"fatigue::cycles_to_calendar", "fatigue life"},
    {"structural::ballast_required_weight", "ballast"},
    {"structural::ballast_height_for_weight", "ballast"},
    {"structural::secant_deflection", "tower column"},
    {"structural::secant_allowable_load", "tower column"},
    {"structural::blade_root_bending_moment", "blade bending"},
    {"structural::rect_bending_stress", "blade bending"},
    {"structural::rect_torsion_max_shear", "blade torsion"},
    {"aero::tip_speed_ratio", "aero torque"},
    {"aero::torque_coefficient", "aero torque"},
    {"aero::rotor_torque", "aero torque"},
    {"aero::rotor_power", "aero torque"},
    {"aero::ducted_betz_limit", "aero betz"},
    {"aero::torque_sweep", "aero sweep"},
    {"bearing::basic_dynamic_axial_rating", "bearing life"},
    {"bearing::oscillating_rating", "bearing life"},
    {"bearing::equivalent_axial_load", "bearing life"},
    {"bearing::l10_life", "bearing life"},
    {"bearing::modified_life", "bearing life"},
    {"bearing::raceway_stress_cycles", "bearing life"},
    {"bearing::bearing_calendar_life", "bearing life"},
    {"weibull::cdf", "weibull cdf"},
    {"weibull::quantile_bp", "weibull quantile"},
    {"weibull::fit_two_quantiles", "weibull fit"},
    {"weibull::failure_regime", "weibull fit"},
    {"weibull::hazard", "weibull hazard"},
    {"weibull::average_failure_rate", "weibull hazard"},
    {"weibull::sample", "weibull sample"},
    {"system::series_reliability", "system reliability"},
    {"system::parallel_reliability", "system reliability"},
    {"system::system_reliability_at", "system reliability"},
    {"system::monte_carlo_mttf", "system mttf"},
    {"system::expected_repairs", "system repairs"},
    {"system::poisson_pmf", "system repairs"},
    {"system::system_service_life", "system life"},
    {"schedule::load_registry", "schedule report"},
    {"report::emit_report", "schedule report"},
    {"schedule::generate_schedule", "schedule generate"},
    {"schedule::remaining_service_life", "schedule rul"},
};

struct Globals {
    std::string units = "si";
    bool json = false;
    std::uint64_t seed = 1;
    std::size_t samples = 100000;
    std::string format;
};

Unit display_unit(Dimension d, bool imperial) {
    switch (d) {
        case Dimension::Stress: return imperial ? Unit::ksi : Unit::MPa;
        case Dimension::Force: return imperial ? Unit::lbf : Unit::N;
        case Dimension::Moment: return imperial ? Unit::ft_lb : Unit::N_m;
        case Dimension::Length: return imperial ? Unit::in : Unit::m;
        case Dimension::Density: return Unit::kg_per_m3;
        case Dimension::AngularSpeed: return Unit::rpm;
        case Dimension::Speed: return imperial ? Unit::mph : Unit::m_per_s;
    }
    return Unit::Pa;
}

// Ordered result fields printed as "key: value unit" lines or one JSON object.
class Result {
public:
    Result& num(std::string key, double si, std::optional<Dimension> dim = std::nullopt) {
        fields_.push_back({std::move(key), si, dim});
        return *this;
    }
    Result& text(std::string key, std::string v) {
        fields_.push_back({std::move(key), std::move(v), std::nullopt});
        return *this;
    }
    Result& flag(std::string key, bool v) {
        fields_.push_back({std::move(key), v, std::nullopt});
        return *this;
    }

    void emit(std::ostream& out, const Globals& g) const {
        const bool imperial = g.units == "imperial";
        if (g.json) {
            json j = json::object();
            json unit_map = json::object();
            for (const auto& f : fields_) {
                if (const double* v = std::get_if<double>(&f.value)) {
                    if (f.dim) {
                        const Unit u = display_unit(*f.dim, imperial);
                        j[f.key] = units::from_si(*v, u);
                        unit_map[f.key] = std::string(units::name(u));
                    } else {
                        j[f.key] = *v;
                    }
                } else if (const bool* b = std::get_if<bool>(&f.value)) {
                    j[f.key] = *b;
                } else {
                    j[f.key] = std::get<std::string>(f.value);
                }
            }
            if (!unit_map.empty()) j["units"] = unit_map;
            out << j.dump(2) << '\n';
            return;
        }
        for (const auto& f : fields_) {
            out << f.key << ": ";
            if (const double* v = std::get_if<double>(&f.value)) {
                if (f.dim) {
                    const Unit u = display_unit(*f.dim, imperial);
                    out << format_sig(units::from_si(*v, u)) << ' ' << units::name(u);
                } else {
                    out << format_sig(*v);
                }
            } else if (const bool* b = std::get_if<bool>(&f.value)) {
                out << (*b ? "true" : "false");
            } else {
                out << std::get<std::string>(f.value);
            }
            out << '\n';
        }
    }

private:
    struct Field {
        std::string key;
        std::variant<double, bool, std::string> value;
        std::optional<Dimension> dim;
    };
    std::vector<Field> fields_;
};

// Option storage and handlers for one command line.
class Cli {
public:
    Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) { build(); }

    int run(const std::vector<std::string>& args) {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app_.parse(reversed);
        } catch (const CLI::ParseError& e) {
            if (e.get_exit_code() == 0) {
                app_.exit(e, out_, err_);
                return 0;
            }
            err_ << "error: " << e.what() << "\n\n" << usage_for(args);
            return 1;
        }
        if (globals_.units != "si" && globals_.units != "imperial") {
            err_ << "error: --units must be si or imperial\n";
            return 1;
        }
        try {
            for (const auto& [sub, handler] : handlers_) {
                if (sub->parsed()) {
                    handler();
                    return 0;
                }
            }
            err_ << "error: no subcommand\n\n" << app_.help();
            return 1;
        } catch (const ValidationError& e) {
            err_ << "error: " << e.what() << '\n';
            return 1;
        } catch (const NumericError& e) {
            err_ << "numeric failure: " << e.what() << '\n';
            return 2;
        } catch (const json::exception& e) {
            err_ << "error: " << e.what() << '\n';
            return 1;
        }
    }

    std::vector<std::string> leaves() const {
        std::vector<std::string> out;
        for (const auto& [sub, _] : handlers_) out.push_back(path_of(sub));
        return out;
    }

private:
    static std::string path_of(const CLI::App* sub) {
        std::string path = sub->get_name();
        for (const CLI::App* p = sub->get_parent(); p && p->get_parent(); p = p->get_parent()) {
            path = p->get_name() + " " + path;
        }
        return path;
    }

    std::string usage_for(const std::vector<std::string>& args) {
        // Help of the deepest subcommand named on the command line.
        CLI::App* current = &app_;
        for (const auto& a : args) {
            bool descended = false;
            for (CLI::App* sub : current->get_subcommands([](CLI::App*) { return true; })) {
                if (sub->get_name() == a) {
                    current = sub;
                    descended = true;
                    break;
                }
            }
            if (!descended && !a.empty() && a[0] != '-') break;
        }
        return current->help();
    }

    double si(const std::string& text, Dimension d) const {
        const auto q = units::parse_quantity(text, display_unit(d, globals_.units == "imperial"));
        return units::to_si(q.value, q.unit);
    }

    void emit(const Result& r) const { r.emit(out_, globals_); }

    CLI::App* group(const std::string& name, const std::string& desc) {
        CLI::App* g = app_.add_subcommand(name, desc);
        g->require_subcommand(1);
        return g;
    }

    CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& desc, std::function<void()> fn) {
        CLI::App* sub = parent->add_subcommand(name, desc);
        handlers_.emplace_back(sub, std::move(fn));
        return sub;
    }

    void build();
    void build_fatigue();
    void build_blade();
    void build_tower();
    void build_ballast();
    void build_aero();
    void build_bearing();
    void build_weibull();
    void build_system();
    void build_schedule();
    void build_units();

    schedule::Registry registry() const {
        if (!registry_path_.empty()) return io::load_registry(io::read_file(registry_path_));
        if (const char* env = std::getenv("DWT_REGISTRY"); env && *env) return io::load_registry(io::read_file(env));
        return io::default_registry();
    }

    void fatigue_chain(Result& r, double sut, const fatigue::MarinFactors& k, const std::optional<double>& pinned_se,
                       double f, double sigma, double per_day) const {
        const double se_prime = fatigue::endurance_limit_unmodified(Material("input", sut));
        const double se = pinned_se ? *pinned_se : fatigue::marin_modified_endurance(se_prime, k);
        const auto c = fatigue::sn_constants(sut, se, f);
        const auto life = fatigue::cycles_to_failure(sigma, c);
        r.num("se", se, Dimension::Stress)
            .num("a", c.a, Dimension::Stress)
            .num("b", c.b)
            .num("stress", sigma, Dimension::Stress)
            .num("cycles", life.cycles);
        if (per_day > 0) r.num("years", fatigue::cycles_to_calendar(life.cycles, per_day));
        r.flag("below_endurance_extrapolation", life.below_endurance_extrapolation).flag("low_cycle", life.low_cycle);
    }

    std::ostream& out_;
    std::ostream& err_;
    CLI::App app_{"Component life, reliability and maintenance scheduling for small ducted wind turbines", "dwt"};
    Globals globals_;
    std::string registry_path_;
    std::vector<std::pair<CLI::App*, std::function<void()>>> handlers_;
    // Per-subcommand option storage lives as long as the app.
    std::map<std::string, std::string> s_;
    std::map<std::string, double> d_;
    std::map<std::string, std::vector<double>> v_;
    std::map<std::string, std::vector<std::string>> vs_;
    fatigue::MarinFactors marin_{};
    std::string preset_;
    long long k_ = -1;
    int count_ = 10;
    unsigned threads_ = 0;
};

void Cli::build() {
    app_.require_subcommand(1);
    app_.fallthrough();
    app_.set_config("--config", "", "Read option values from a TOML/INI file");
    app_.add_option("--units", globals_.units, "Unit system for bare inputs and printed results")
        ->check(CLI::IsMember({"si", "imperial"}))
        ->capture_default_str();
    app_.add_flag("--json", globals_.json, "Print results as JSON");
    app_.add_option("--seed", globals_.seed, "Random seed")->capture_default_str();
    app_.add_option("--samples", globals_.samples, "Monte Carlo sample count")->capture_default_str();
    app_.add_option("--format", globals_.format, "Report format")->check(CLI::IsMember({"csv", "markdown"}));
    app_.footer(
        "Quantities accept unit suffixes (58ksi, 185mm, 22.055N*m); bare numbers use MPa, N, N*m, m, kg/m3, rpm, "
        "m/s (si) or ksi, lbf, ft*lb, in, kg/m3, rpm, mph (imperial).\nExit status: 0 ok, 1 invalid input, 2 numeric "
        "failure.");

    build_units();
    build_fatigue();
    build_blade();
    build_tower();
    build_ballast();
    build_aero();
    build_bearing();
    build_weibull();
    build_system();
    build_schedule();
}

void Cli::build_units() {
    auto* g = group("units", "Unit conversion");
    auto* conv = leaf(g, "convert", "Convert a quantity to another unit of the same dimension", [this] {
        const auto from_unit = units::parse_unit(s_["units.from_unit"]);
        const auto target = units::parse_unit(s_["units.to"]);
        const auto q = units::parse_quantity(s_["units.value"], from_unit);
        const auto r = units::convert(q, target);
        if (globals_.json) {
            out_ << json{{"value", r.value}, {"unit", std::string(units::name(r.unit))}}.dump(2) << '\n';
        } else {
            out_ << format_sig(r.value) << ' ' << units::name(r.unit) << '\n';
        }
    });
    conv->add_option("value", s_["units.value"], "Quantity, e.g. 45ksi")->required();
    conv->add_option("--to", s_["units.to"], "Target unit")->required();
    s_["units.from_unit"] = "Pa";
    conv->add_option("--from", s_["units.from_unit"], "Unit of a bare value")->capture_default_str();
}

void Cli::build_fatigue() {
    auto* g = group("fatigue", "Endurance limit, S-N constants and fatigue life");

    auto add_marin = [this](CLI::App* sub) {
        sub->add_option("--preset", preset_, "Marin factor preset")->check(CLI::IsMember({"tower", "blade"}));
        sub->add_option("--ka", marin_.ka, "Surface factor");
        sub->add_option("--kb", marin_.kb, "Size factor");
        sub->add_option("--kc", marin_.kc, "Load factor");
        sub->add_option("--kd", marin_.kd, "Temperature factor");
        sub->add_option("--ke", marin_.ke, "Reliability factor");
        sub->add_option("--kf", marin_.kf, "Miscellaneous factor");
    };
    auto marin = [this](CLI::App* sub) {
        fatigue::MarinFactors k = marin_;
        if (!preset_.empty()) {
            fatigue::MarinFactors p =
                preset_ == "tower" ? fatigue::MarinFactors::tower_preset() : fatigue::MarinFactors::blade_preset();
            // Explicit factors override the preset.
            const char* names[] = {"--ka", "--kb", "--kc", "--kd", "--ke", "--kf"};
            double* dst[] = {&p.ka, &p.kb, &p.kc, &p.kd, &p.ke, &p.kf};
            const double* src[] = {&k.ka, &k.kb, &k.kc, &k.kd, &k.ke, &k.kf};
            for (int i = 0; i < 6; ++i) {
                if (sub->count(names[i])) *dst[i] = *src[i];
            }
            k = p;
        }
        k.validate();
        return k;
    };

    auto* endurance = leaf(g, "endurance", "S_e' = 0.5 S_ut and the Marin-modified S_e", {});
    s_["fatigue.sut"] = "58ksi";
    endurance->add_option("--sut", s_["fatigue.sut"], "Ultimate tensile strength")->capture_default_str();
    add_marin(endurance);
    handlers_.back().second = [this, endurance, marin] {
        const double se_prime = fatigue::endurance_limit_unmodified(Material("input", si(s_["fatigue.sut"], Dimension::Stress)));
        const auto k = marin(endurance);
        Result r;
        r.num("se_prime", se_prime, Dimension::Stress)
            .num("marin_product", k.product())
            .num("se", fatigue::marin_modified_endurance(se_prime, k), Dimension::Stress);
        emit(r);
    };

    auto* sn = leaf(g, "sn", "S-N constants a, b through (1e3, f S_ut) and (1e6, S_e)", [this] {
        const auto c = fatigue::sn_constants(si(s_["fatigue.sn.sut"], Dimension::Stress),
                                             si(s_["fatigue.sn.se"], Dimension::Stress), d_["fatigue.sn.f"]);
        Result r;
        r.num("a", c.a, Dimension::Stress).num("b", c.b).num("f", c.f);
        emit(r);
    });
    sn->add_option("--sut", s_["fatigue.sn.sut"], "Ultimate tensile strength")->required();
    sn->add_option("--se", s_["fatigue.sn.se"], "Modified endurance limit")->required();
    d_["fatigue.sn.f"] = presets::kFatigueStrengthFraction;
    sn->add_option("--f", d_["fatigue.sn.f"], "Fatigue strength fraction")->capture_default_str();

    auto* life = leaf(g, "life", "Cycles to failure and calendar life", {});
    life->add_option("--sigma", s_["fatigue.life.sigma"], "Fully reversed stress amplitude")->required();
    life->add_option("--sut", s_["fatigue.life.sut"], "Ultimate tensile strength");
    life->add_option("--se", s_["fatigue.life.se"], "Modified endurance limit");
    life->add_option("--a", s_["fatigue.life.a"], "S-N coefficient (stress)");
    life->add_option("--b", d_["fatigue.life.b"], "S-N exponent");
    d_["fatigue.life.f"] = presets::kFatigueStrengthFraction;
    life->add_option("--f", d_["fatigue.life.f"], "Fatigue strength fraction")->capture_default_str();
    d_["fatigue.life.per_day"] = 0.0;
    life->add_option("--per-day", d_["fatigue.life.per_day"], "Cycles per day for the calendar conversion");
    handlers_.back().second = [this, life] {
        const double sigma = si(s_["fatigue.life.sigma"], Dimension::Stress);
        const double per_day = d_["fatigue.life.per_day"];
        Result r;
        if (life->count("--a") || life->count("--b")) {
            if (!life->count("--a") || !life->count("--b")) throw ValidationError("--a and --b go together");
            fatigue::SnConstants c{si(s_["fatigue.life.a"], Dimension::Stress), d_["fatigue.life.b"],
                                   d_["fatigue.life.f"]};
            c.validate();
            const auto est = fatigue::cycles_to_failure(sigma, c);
            r.num("stress", sigma, Dimension::Stress).num("cycles", est.cycles);
            if (per_day > 0) r.num("years", fatigue::cycles_to_calendar(est.cycles, per_day));
            r.flag("below_endurance_extrapolation", est.below_endurance_extrapolation).flag("low_cycle", est.low_cycle);
        } else {
            if (!life->count("--sut") || !life->count("--se")) {
                throw ValidationError("fatigue life needs --sut and --se, or --a and --b");
            }
            fatigue_chain(r, si(s_["fatigue.life.sut"], Dimension::Stress), {},
                          si(s_["fatigue.life.se"], Dimension::Stress), d_["fatigue.life.f"], sigma, per_day);
        }
        emit(r);
    };
}

void Cli::build_blade() {
    auto* g = group("blade", "Rectangular blade section stresses and life");

    auto section_opts = [this](CLI::App* sub, const std::string& p) {
        s_[p + ".width"] = "185mm";
        s_[p + ".thickness"] = "4mm";
        sub->add_option("--width", s_[p + ".width"], "Section width b")->capture_default_str();
        sub->add_option("--thickness", s_[p + ".thickness"], "Section thickness t")->capture_default_str();
    };

    auto* bending = leaf(g, "bending", "Self-weight root moment and bending stress", {});
    section_opts(bending, "blade.bending");
    bending->add_option("--moment", s_["blade.bending.moment"], "Root moment (skips the self-weight moment)");
    d_["blade.bending.mass"] = presets::kBladeMassKg;
    bending->add_option("--mass", d_["blade.bending.mass"], "Blade mass [kg]")->capture_default_str();
    s_["blade.bending.span"] = "1498.8mm";
    bending->add_option("--span", s_["blade.bending.span"], "Blade span L")->capture_default_str();
    s_["blade.bending.orientation"] = "both";
    bending->add_option("--orientation", s_["blade.bending.orientation"], "Section orientation")
        ->check(CLI::IsMember({"flat", "upright", "both"}))
        ->capture_default_str();
    handlers_.back().second = [this, bending] {
        const double span = si(s_["blade.bending.span"], Dimension::Length);
        RectSection s(si(s_["blade.bending.width"], Dimension::Length),
                      si(s_["blade.bending.thickness"], Dimension::Length), span);
        double m;
        if (bending->count("--moment")) {
            m = si(s_["blade.bending.moment"], Dimension::Moment);
        } else {
            detail::require(d_["blade.bending.mass"] > 0, "blade mass must be positive");
            m = structural::blade_root_bending_moment(d_["blade.bending.mass"], span);
        }
        const auto& o = s_["blade.bending.orientation"];
        Result r;
        r.num("moment", m, Dimension::Moment);
        if (o != "upright") r.num("stress_flat", structural::rect_bending_stress(m, s, structural::Orientation::Flat), Dimension::Stress);
        if (o != "flat") r.num("stress_upright", structural::rect_bending_stress(m, s, structural::Orientation::Upright), Dimension::Stress);
        emit(r);
    };

    auto* torsion = leaf(g, "torsion", "Maximum torsional shear of a thin rectangle", {});
    section_opts(torsion, "blade.torsion");
    torsion->add_option("--torque", s_["blade.torsion.torque"], "Applied torque")->required();
    handlers_.back().second = [this] {
        RectSection s(si(s_["blade.torsion.width"], Dimension::Length),
                      si(s_["blade.torsion.thickness"], Dimension::Length), 1.0);
        const double t = si(s_["blade.torsion.torque"], Dimension::Moment);
        Result r;
        r.num("torque", t, Dimension::Moment).num("shear_max", structural::rect_torsion_max_shear(t, s), Dimension::Stress);
        emit(r);
    };

    auto* life = leaf(g, "life", "Fatigue life of the blade under reversed bending", {});
    s_["blade.life.sut"] = "45ksi";
    life->add_option("--sut", s_["blade.life.sut"], "Ultimate tensile strength")->capture_default_str();
    life->add_option("--se", s_["blade.life.se"], "Pin S_e instead of the blade Marin chain");
    life->add_option("--stress", s_["blade.life.stress"], "Reversed stress (default: flat self-weight bending)");
    d_["blade.life.per_day"] = presets::kBladeCyclesPerDay;
    life->add_option("--per-day", d_["blade.life.per_day"], "Rotor revolutions per day")->capture_default_str();
    d_["blade.life.f"] = presets::kFatigueStrengthFraction;
    life->add_option("--f", d_["blade.life.f"], "Fatigue strength fraction")->capture_default_str();
    handlers_.back().second = [this, life] {
        double sigma;
        if (life->count("--stress")) {
            sigma = si(s_["blade.life.stress"], Dimension::Stress);
        } else {
            const auto blade = presets::blade();
            sigma = structural::rect_bending_stress(structural::blade_root_bending_moment(blade), blade.section,
                                                    structural::Orientation::Flat);
        }
        std::optional<double> se;
        if (life->count("--se")) se = si(s_["blade.life.se"], Dimension::Stress);
        Result r;
        fatigue_chain(r, si(s_["blade.life.sut"], Dimension::Stress), fatigue::MarinFactors::blade_preset(), se,
                      d_["blade.life.f"], sigma, d_["blade.life.per_day"]);
        emit(r);
    };
}

void Cli::build_tower() {
    auto* g = group("tower", "Tower column mechanics and fatigue life");

    auto* column = leaf(g, "column", "Secant-formula deflection and allowable load", {});
    column->add_option("--load", s_["tower.load"], "Eccentric load P (deflection needs it)");
    column->add_option("--eccentricity", s_["tower.e"], "Load eccentricity e")->required();
    column->add_option("--centroid", s_["tower.c"], "Centroidal distance c")->required();
    column->add_option("--gyration", s_["tower.k"], "Radius of gyration k")->required();
    column->add_option("--height", s_["tower.l"], "Column height l")->required();
    column->add_option("--area", d_["tower.area"], "Cross-section area [m^2]")->required();
    column->add_option("--inertia", d_["tower.inertia"], "Second moment of area [m^4]")->required();
    s_["tower.modulus"] = "200000MPa";
    column->add_option("--modulus", s_["tower.modulus"], "Elastic modulus E")->capture_default_str();
    column->add_option("--syc", s_["tower.syc"], "Compressive yield strength (allowable load needs it)");
    handlers_.back().second = [this, column] {
        const double e_mod = si(s_["tower.modulus"], Dimension::Stress);
        ColumnSpec col{column->count("--load") ? si(s_["tower.load"], Dimension::Force) : 0.0,
                       si(s_["tower.e"], Dimension::Length),
                       si(s_["tower.c"], Dimension::Length),
                       si(s_["tower.k"], Dimension::Length),
                       si(s_["tower.l"], Dimension::Length),
                       d_["tower.area"],
                       d_["tower.inertia"]};
        col.validate(false);
        Result r;
        r.num("eccentricity_ratio", col.eccentricity_e * col.centroid_c / (col.gyration_k * col.gyration_k))
            .num("buckling_load", structural::secant_buckling_load(col, e_mod), Dimension::Force);
        if (column->count("--load")) {
            r.num("deflection", structural::secant_deflection(col, e_mod), Dimension::Length);
        }
        if (column->count("--syc")) {
            const double syc = si(s_["tower.syc"], Dimension::Stress);
            Material m("column", std::max(syc, 1.0), syc, e_mod);
            const double p = structural::secant_allowable_load(col, m);
            r.num("allowable_load", p, Dimension::Force)
                .num("allowable_stress", p / col.area_a, Dimension::Stress)
                .num("residual", structural::secant_residual(col, m, p));
        }
        emit(r);
    };

    auto* life = leaf(g, "life", "Fatigue life of the tower under reversed von Mises stress", {});
    s_["tower.life.sut"] = "58ksi";
    life->add_option("--sut", s_["tower.life.sut"], "Ultimate tensile strength")->capture_default_str();
    s_["tower.life.stress"] = "13.56ksi";
    life->add_option("--stress", s_["tower.life.stress"], "Reversed stress amplitude")->capture_default_str();
    life->add_option("--se", s_["tower.life.se"], "Pin S_e instead of the tower Marin chain");
    d_["tower.life.per_day"] = presets::kTowerCyclesPerDay;
    life->add_option("--per-day", d_["tower.life.per_day"], "Stress cycles per day")->capture_default_str();
    d_["tower.life.f"] = presets::kFatigueStrengthFraction;
    life->add_option("--f", d_["tower.life.f"], "Fatigue strength fraction")->capture_default_str();
    handlers_.back().second = [this, life] {
        std::optional<double> se;
        if (life->count("--se")) se = si(s_["tower.life.se"], Dimension::Stress);
        Result r;
        fatigue_chain(r, si(s_["tower.life.sut"], Dimension::Stress), fatigue::MarinFactors::tower_preset(), se,
                      d_["tower.life.f"], si(s_["tower.life.stress"], Dimension::Stress), d_["tower.life.per_day"]);
        emit(r);
    };
}

void Cli::build_ballast() {
    auto* b = leaf(&app_, "ballast", "Ballast weight from the moment balance and fill height", {});
    s_["ballast.thrust"] = "6035N";
    b->add_option("--thrust", s_["ballast.thrust"], "Turbine thrust")->capture_default_str();
    b->add_option("--nacelle-diameter", s_["ballast.d"], "Largest nacelle diameter")->required();
    d_["ballast.n"] = 1.0;
    b->add_option("--safety-factor", d_["ballast.n"], "Factor of safety")->capture_default_str();
    b->add_option("--base-diameter", s_["ballast.db"], "Foundation base diameter")->required();
    b->add_option("--base-area", d_["ballast.area"], "Foundation base area [m^2]")->required();
    s_["ballast.rho"] = "1600kg/m3";
    b->add_option("--density", s_["ballast.rho"], "Ballast mass density")->capture_default_str();
    handlers_.back().second = [this] {
        structural::BallastSpec spec{si(s_["ballast.thrust"], Dimension::Force),
                                     si(s_["ballast.d"], Dimension::Length),
                                     d_["ballast.n"],
                                     si(s_["ballast.db"], Dimension::Length),
                                     d_["ballast.area"],
                                     si(s_["ballast.rho"], Dimension::Density)};
        const double w = structural::ballast_required_weight(spec);
        Result r;
        r.num("weight", w, Dimension::Force).num("height", structural::ballast_height_for_weight(w, spec), Dimension::Length);
        emit(r);
    };
}

void Cli::build_aero() {
    auto* g = group("aero", "Rotor torque, power and the ducted Betz limit");

    auto state_opts = [this](CLI::App* sub) {
        s_["aero.radius"] = "1.5m";
        s_["aero.wind"] = "48.72m/s";
        s_["aero.rho"] = "1.24kg/m3";
        sub->add_option("--radius", s_["aero.radius"], "Rotor radius R")->capture_default_str();
        sub->add_option("--wind", s_["aero.wind"], "Free-stream wind speed")->capture_default_str();
        sub->add_option("--density", s_["aero.rho"], "Air density")->capture_default_str();
    };
    auto state = [this](double cp, double rpm) {
        aero::RotorState st{si(s_["aero.radius"], Dimension::Length), units::to_si(rpm, Unit::rpm),
                            si(s_["aero.wind"], Dimension::Speed), si(s_["aero.rho"], Dimension::Density), cp};
        st.validate();
        return st;
    };

    auto* torque = leaf(g, "torque", "Tip-speed ratio, torque coefficient, torque and power", {});
    state_opts(torque);
    d_["aero.cp"] = presets::kPowerCoefficient;
    torque->add_option("--cp", d_["aero.cp"], "Power coefficient")->capture_default_str();
    s_["aero.speed"] = "600rpm";
    torque->add_option("--speed", s_["aero.speed"], "Rotor speed")->capture_default_str();
    handlers_.back().second = [this, state] {
        const double omega = si(s_["aero.speed"], Dimension::AngularSpeed);
        const auto st = state(d_["aero.cp"], units::from_si(omega, Unit::rpm));
        const double lambda = aero::tip_speed_ratio(st);
        const double t = aero::rotor_torque(st);
        const double p = aero::rotor_power(t, st.omega_rad_s);
        Result r;
        r.num("tip_speed_ratio", lambda)
            .num("torque_coefficient", aero::torque_coefficient(st.power_coefficient, lambda))
            .num("torque", t, Dimension::Moment)
            .num("power_w", p)
            .num("power_coefficient_check", aero::power_coefficient_from_power(p, st));
        emit(r);
    };

    auto* betz = leaf(g, "betz", "Betz limit with rotor-plane axial induction", [this] {
        Result r;
        r.num("a0", d_["aero.a0"]).num("cp_max", aero::ducted_betz_limit(d_["aero.a0"]));
        emit(r);
    });
    d_["aero.a0"] = 0.0;
    betz->add_option("--a0", d_["aero.a0"], "Axial induction factor")->capture_default_str();

    auto* sweep = leaf(g, "sweep", "Torque for a set of (C_p, rpm) points", {});
    state_opts(sweep);
    sweep->add_option("--point", vs_["aero.points"], "C_p:rpm pair, repeatable (default: the sensitivity table)");
    handlers_.back().second = [this, state] {
        std::vector<std::pair<double, double>> pts;
        for (const auto& p : vs_["aero.points"]) {
            const auto colon = p.find(':');
            if (colon == std::string::npos) throw ValidationError("sweep point '" + p + "' must be cp:rpm");
            try {
                pts.emplace_back(std::stod(p.substr(0, colon)), std::stod(p.substr(colon + 1)));
            } catch (const std::exception&) {
                throw ValidationError("sweep point '" + p + "' must be cp:rpm");
            }
        }
        if (pts.empty()) pts = presets::torque_sweep_points();
        const auto base = state(presets::kPowerCoefficient, presets::kRotorSpeedRpm);
        const auto rows = aero::torque_sweep(base, pts);
        const Unit tu = display_unit(Dimension::Moment, globals_.units == "imperial");
        if (globals_.json) {
            json arr = json::array();
            for (const auto& row : rows) {
                arr.push_back({{"cp", row.power_coefficient},
                               {"rpm", row.rotor_speed_rpm},
                               {"tip_speed_ratio", row.tip_speed_ratio},
                               {"torque_coefficient", row.torque_coefficient},
                               {"torque", units::from_si(row.torque_nm, tu)}});
            }
            out_ << json{{"rows", arr}, {"units", {{"torque", std::string(units::name(tu))}}}}.dump(2) << '\n';
            return;
        }
        out_ << "cp,rpm,tip_speed_ratio,torque_coefficient,torque_" << units::name(tu) << '\n';
        for (const auto& row : rows) {
            out_ << format_sig(row.power_coefficient) << ',' << format_sig(row.rotor_speed_rpm) << ','
                 << format_sig(row.tip_speed_ratio) << ',' << format_sig(row.torque_coefficient) << ','
                 << format_sig(units::from_si(row.torque_nm, tu)) << '\n';
        }
    };
}

void Cli::build_bearing() {
    auto* g = group("bearing", "Slewing-bearing life pipeline");
    auto* life = leaf(g, "life", "Rating, equivalent load, L10, modified life and calendar life", {});
    life->add_option("--input", s_["bearing.input"], "Pipeline input JSON document");
    life->add_option("--lnm", d_["bearing.lnm"], "Start from a known modified life [oscillations]");
    d_["bearing.balls"] = presets::kBallCount;
    life->add_option("--balls", d_["bearing.balls"], "Ball count Z for --lnm")->capture_default_str();
    d_["bearing.per_day"] = presets::kOscillationsPerDay;
    life->add_option("--per-day", d_["bearing.per_day"], "Oscillations per day")->capture_default_str();
    handlers_.back().second = [this, life] {
        bearing::PipelineResult res{};
        json input;
        if (life->count("--input")) {
            if (life->count("--lnm")) throw ValidationError("--input and --lnm are exclusive");
            const auto doc = io::parse(io::read_file(s_["bearing.input"]));
            auto in = io::bearing_input_from_json(doc);
            if (life->count("--per-day")) in.oscillations_per_day = d_["bearing.per_day"];
            res = bearing::run_pipeline(in);
            input = io::to_json(in);
        } else {
            const double lnm = life->count("--lnm") ? d_["bearing.lnm"] : presets::kModifiedLifeOscillations;
            const double z = d_["bearing.balls"];
            if (z != static_cast<int>(z)) throw ValidationError("--balls must be an integer");
            res = bearing::from_modified_life(lnm, static_cast<int>(z), d_["bearing.per_day"]);
        }
        if (globals_.json) {
            json j = io::to_json(res);
            if (!input.is_null()) j["input"] = input;
            out_ << j.dump(2) << '\n';
            return;
        }
        Result r;
        if (!input.is_null()) {
            r.num("ca", res.ca).num("ca_osc", res.ca_osc).num("pea", res.pea).num("l10", res.l10);
        }
        r.num("lnm", res.lnm)
            .num("raceway_cycles", res.raceway_cycles)
            .num("years_oscillation_basis", res.years_oscillation_basis)
            .num("years_raceway_basis", res.years_raceway_basis);
        emit(r);
    };
}

void Cli::build_weibull() {
    auto* g = group("weibull", "Two-parameter Weibull life distribution");

    auto params = [this](CLI::App* sub) {
        sub->add_option("--beta", d_["weibull.beta"], "Shape parameter")->required();
        sub->add_option("--eta", d_["weibull.eta"], "Scale parameter")->required();
    };
    auto w = [this] {
        weibull::WeibullParams p{d_["weibull.beta"], d_["weibull.eta"]};
        p.validate();
        return p;
    };

    auto* fit = leaf(g, "fit", "Fit beta and eta through two B_p lives", [this] {
        const auto p = weibull::fit_two_quantiles({d_["weibull.p1"], d_["weibull.b1"]}, {d_["weibull.p2"], d_["weibull.b2"]});
        Result r;
        r.num("beta", p.shape_beta)
            .num("eta", p.scale_eta)
            .text("regime", std::string(weibull::to_string(weibull::failure_regime(p.shape_beta))));
        emit(r);
    });
    fit->add_option("--p1", d_["weibull.p1"], "First percentile")->required();
    fit->add_option("--b1", d_["weibull.b1"], "Life at the first percentile")->required();
    fit->add_option("--p2", d_["weibull.p2"], "Second percentile")->required();
    fit->add_option("--b2", d_["weibull.b2"], "Life at the second percentile")->required();

    auto* cdf = leaf(g, "cdf", "F(t), R(t) and f(t)", [this, w] {
        const auto p = w();
        const double t = d_["weibull.t"];
        Result r;
        r.num("cdf", weibull::cdf(t, p)).num("survival", weibull::survival(t, p)).num("pdf", weibull::pdf(t, p));
        emit(r);
    });
    params(cdf);
    cdf->add_option("--t", d_["weibull.t"], "Time")->required();

    auto* quantile = leaf(g, "quantile", "B_p life", [this, w] {
        Result r;
        r.num("percent", d_["weibull.p"]).num("life", weibull::quantile_bp(d_["weibull.p"], w()));
        emit(r);
    });
    params(quantile);
    quantile->add_option("--p", d_["weibull.p"], "Percent failed, in (0, 100)")->required();

    auto* hazard = leaf(g, "hazard", "Hazard rate, cumulative hazard and interval-average rate", {});
    params(hazard);
    hazard->add_option("--t", d_["weibull.ht"], "Time")->required();
    hazard->add_option("--t2", d_["weibull.ht2"], "Interval end for the average failure rate");
    handlers_.back().second = [this, hazard, w] {
        const auto p = w();
        const double t = d_["weibull.ht"];
        Result r;
        r.num("hazard", weibull::hazard(t, p))
            .num("cumulative_hazard", weibull::cumulative_hazard(t, p))
            .num("mean_life", weibull::mean_life(p));
        if (hazard->count("--t2")) r.num("average_failure_rate", weibull::average_failure_rate(t, d_["weibull.ht2"], p));
        r.text("regime", std::string(weibull::to_string(weibull::failure_regime(p.shape_beta))));
        emit(r);
    };

    auto* sample = leaf(g, "sample", "Deterministic Weibull draws", [this, w] {
        detail::require(count_ >= 0, "--count must be non-negative");
        const auto xs = weibull::sample(w(), globals_.seed, static_cast<std::size_t>(count_));
        if (globals_.json) {
            out_ << json{{"seed", globals_.seed}, {"samples", xs}}.dump(2) << '\n';
            return;
        }
        for (double x : xs) out_ << format_sig(x) << '\n';
    });
    params(sample);
    sample->add_option("--count", count_, "Number of draws")->capture_default_str();
}

void Cli::build_system() {
    auto* g = group("system", "System reliability, MTTF, repairs and service life");

    auto topology = [this]() { return io::topology_from_json(io::parse(io::read_file(s_["system.topology"]))); };

    auto* mttf = leaf(g, "mttf", "Monte Carlo MTTF of a reliability block diagram", {});
    mttf->add_option("--topology", s_["system.topology"], "Topology JSON document");
    mttf->add_option("--rates", v_["system.rates"], "Shortcut: exponential components in series")->delimiter(',');
    mttf->add_option("--threads", threads_, "Worker threads (0: hardware concurrency)");
    handlers_.back().second = [this, mttf, topology] {
        const bool has_topo = mttf->count("--topology") > 0;
        const bool has_rates = mttf->count("--rates") > 0;
        if (has_topo == has_rates) throw ValidationError("system mttf needs exactly one of --topology or --rates");
        std::optional<system::Topology> topo;
        if (has_topo) {
            topo = topology();
        } else {
            std::vector<system::Topology> leaves;
            for (std::size_t i = 0; i < v_["system.rates"].size(); ++i) {
                leaves.push_back(system::Topology::leaf("c" + std::to_string(i), system::Exponential{v_["system.rates"][i]}));
            }
            topo = system::Topology::series(std::move(leaves));
            topo->validate();
        }
        const auto est = system::monte_carlo_mttf(*topo, globals_.samples, globals_.seed, threads_);
        Result r;
        r.num("mttf", est.estimate)
            .num("standard_error", est.standard_error)
            .num("samples", static_cast<double>(globals_.samples))
            .num("seed", static_cast<double>(globals_.seed));
        emit(r);
    };

    auto* rel = leaf(g, "reliability", "System reliability at time t, or series/parallel of given values", {});
    rel->add_option("--topology", s_["system.topology"], "Topology JSON document");
    rel->add_option("--t", d_["system.t"], "Time for --topology");
    rel->add_option("--r", v_["system.r"], "Component reliabilities")->delimiter(',');
    s_["system.mode"] = "series";
    rel->add_option("--mode", s_["system.mode"], "Combination for --r")
        ->check(CLI::IsMember({"series", "parallel"}))
        ->capture_default_str();
    handlers_.back().second = [this, rel, topology] {
        const bool has_topo = rel->count("--topology") > 0;
        const bool has_r = rel->count("--r") > 0;
        if (has_topo == has_r) throw ValidationError("system reliability needs exactly one of --topology or --r");
        Result r;
        if (has_topo) {
            if (!rel->count("--t")) throw ValidationError("--topology needs --t");
            r.num("reliability", system::system_reliability_at(d_["system.t"], topology()));
        } else {
            const auto& xs = v_["system.r"];
            r.num("reliability", s_["system.mode"] == "series" ? system::series_reliability(xs)
                                                              : system::parallel_reliability(xs));
        }
        emit(r);
    };

    auto* repairs = leaf(g, "repairs", "Expected repair count and its Poisson probabilities", {});
    repairs->add_option("--rate", d_["system.rate"], "Repair (failure) rate per unit time")->required();
    repairs->add_option("--horizon", d_["system.horizon"], "Horizon length")->required();
    repairs->add_option("--k", k_, "Probability of exactly k repairs");
    handlers_.back().second = [this, repairs] {
        const double m = system::expected_repairs(d_["system.rate"], d_["system.horizon"]);
        Result r;
        r.num("expected_repairs", m);
        if (repairs->count("--k")) r.num("k", static_cast<double>(k_)).num("probability", system::poisson_pmf(k_, m));
        emit(r);
    };

    auto* life = leaf(g, "life", "Shortest component life and the limiting component", {});
    life->add_option("--life", vs_["system.life"], "id=years, repeatable (default: the system-life summary)");
    life->add_option("--lives", s_["system.lives"], "JSON object of id -> years");
    handlers_.back().second = [this, life] {
        std::map<std::string, double> lives;
        if (life->count("--lives")) {
            const auto doc = io::parse(io::read_file(s_["system.lives"]));
            if (!doc.is_object()) throw ValidationError("--lives must hold a JSON object of id -> years");
            for (const auto& [k, v] : doc.items()) {
                if (!v.is_number()) throw ValidationError("life of '" + k + "' must be a number");
                lives[k] = v.get<double>();
            }
        }
        for (const auto& item : vs_["system.life"]) {
            const auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0) throw ValidationError("--life expects id=years, got '" + item + "'");
            try {
                lives[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
            } catch (const std::exception&) {
                throw ValidationError("--life expects id=years, got '" + item + "'");
            }
        }
        if (!life->count("--lives") && !life->count("--life")) lives = presets::summary_lives();
        const auto s = system::system_service_life(lives);
        Result r;
        r.num("years", s.years).text("limiting_component", s.limiting_component);
        emit(r);
    };
}

void Cli::build_schedule() {
    auto* g = group("schedule", "Maintenance registry, schedule and remaining life");
    auto registry_opt = [this](CLI::App* sub) {
        sub->add_option("--registry", registry_path_, "Registry JSON (default: $DWT_REGISTRY, then built-in tables)");
    };

    auto* gen = leaf(g, "generate", "Dated maintenance schedule over a horizon", {});
    registry_opt(gen);
    gen->add_option("--install", s_["schedule.install"], "Installation JSON document");
    gen->add_option("--install-date", s_["schedule.install_date"], "Install date YYYY-MM-DD (no logs)");
    gen->add_option("--usage", s_["schedule.usage"], "Usage JSON document");
    d_["schedule.horizon"] = 1.0;
    gen->add_option("--horizon", d_["schedule.horizon"], "Horizon [years]")->capture_default_str();
    handlers_.back().second = [this, gen] {
        const bool has_doc = gen->count("--install") > 0;
        if (has_doc == (gen->count("--install-date") > 0)) {
            throw ValidationError("schedule generate needs exactly one of --install or --install-date");
        }
        schedule::InstallationRecord install{};
        schedule::UsageProfile usage = schedule::UsageProfile::defaults();
        if (has_doc) {
            const auto doc = io::parse(io::read_file(s_["schedule.install"]));
            install = io::install_from_json(doc);
            usage = io::usage_from_install(doc);
        } else {
            install.install_date = schedule::parse_date(s_["schedule.install_date"]);
        }
        if (gen->count("--usage")) usage = io::usage_from_json(io::parse(io::read_file(s_["schedule.usage"])));
        const auto entries = schedule::generate_schedule(registry(), install, usage, d_["schedule.horizon"]);
        if (globals_.json) {
            json arr = json::array();
            for (const auto& e : entries) arr.push_back(io::to_json(e));
            out_ << json{{"entries", arr}}.dump(2) << '\n';
            return;
        }
        out_ << report::emit_schedule(entries, report::parse_format(globals_.format.empty() ? "csv" : globals_.format));
    };

    auto* rep = leaf(g, "report", "Registry tables as Markdown or CSV", {});
    registry_opt(rep);
    handlers_.back().second = [this] {
        const auto reg = registry();
        if (globals_.json) {
            out_ << io::to_json(reg).dump(2) << '\n';
            return;
        }
        out_ << report::emit_registry(reg, report::parse_format(globals_.format.empty() ? "markdown" : globals_.format));
    };

    auto* rul = leaf(g, "rul", "Remaining service life of one component", {});
    registry_opt(rul);
    rul->add_option("--component", s_["schedule.component"], "Component id")->required();
    rul->add_option("--elapsed", d_["schedule.elapsed"], "Elapsed time in service [years]")->required();
    rul->add_option("--usage", s_["schedule.rul_usage"], "Usage JSON document");
    handlers_.back().second = [this, rul] {
        const auto reg = registry();
        auto usage = schedule::UsageProfile::defaults();
        if (rul->count("--usage")) usage = io::usage_from_json(io::parse(io::read_file(s_["schedule.rul_usage"])));
        const auto& comp = reg.find(s_["schedule.component"]);
        const auto rem = schedule::remaining_service_life(comp, usage, d_["schedule.elapsed"]);
        Result r;
        r.text("component", comp.id)
            .num("remaining", rem.remaining)
            .text("unit", rem.unit == schedule::LifeUnit::Years ? "years" : "cycles")
            .num("fraction_consumed", rem.fraction_consumed)
            .flag("overconsumed", rem.overconsumed);
        emit(r);
    };
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Cli cli(out, err);
    return cli.run(args);
}

std::span<const CoverageEntry> coverage() { return kCoverage; }

std::vector<std::string> subcommands() {
    std::ostringstream sink;
    Cli cli(sink, sink);
    return cli.leaves();
}

}  // namespace dwt::cli
