#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dwt/aero.hpp"
#include "dwt/bearing.hpp"
#include "dwt/cli.hpp"
#include "dwt/error.hpp"
#include "dwt/fatigue.hpp"
#include "dwt/io.hpp"
#include "dwt/report.hpp"
#include "dwt/schedule.hpp"
#include "dwt/structural.hpp"
#include "dwt/system.hpp"
#include "dwt/units.hpp"
#include "dwt/weibull.hpp"

namespace py = pybind11;
using namespace dwt;

namespace {

// Schedule entries as plain dicts keep the Python surface free of date types.
py::list entries_to_python(const std::vector<schedule::ScheduleEntry>& entries) {
    py::list out;
    for (const auto& e : entries) {
        py::dict d;
        d["due_date"] = schedule::format_date(e.due_date);
        d["component_id"] = e.component_id;
        d["task"] = e.task;
        d["reason"] = std::string(to_string(e.reason));
        d["due_count"] = e.due_count ? py::cast(*e.due_count) : py::none();
        out.append(d);
    }
    return out;
}

schedule::Registry registry_or_default(const std::optional<std::string>& registry_json) {
    return registry_json ? io::load_registry(*registry_json) : io::default_registry();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Component life, reliability and maintenance scheduling for small ducted wind turbines";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

    m.def("convert", [](double value, const std::string& from, const std::string& to) {
        return units::convert({value, units::parse_unit(from)}, units::parse_unit(to)).value;
    }, py::arg("value"), py::arg("from_unit"), py::arg("to_unit"));

    m.def("endurance_limit", [](double sut_pa, std::vector<double> k) {
        if (k.size() != 6) throw ValidationError("expected six Marin factors");
        const double se_prime = fatigue::endurance_limit_unmodified(Material("input", sut_pa));
        return fatigue::marin_modified_endurance(se_prime, {k[0], k[1], k[2], k[3], k[4], k[5]});
    }, py::arg("sut_pa"), py::arg("marin") = std::vector<double>(6, 1.0));
    m.def("sn_constants", [](double sut_pa, double se_pa, double f) {
        const auto c = fatigue::sn_constants(sut_pa, se_pa, f);
        return std::make_pair(c.a, c.b);
    }, py::arg("sut_pa"), py::arg("se_pa"), py::arg("f") = 0.9);
    m.def("cycles_to_failure", [](double sigma_pa, double a_pa, double b) {
        return fatigue::cycles_to_failure(sigma_pa, {a_pa, b, 0.9}).cycles;
    }, py::arg("sigma_pa"), py::arg("a_pa"), py::arg("b"));
    m.def("cycles_to_calendar", &fatigue::cycles_to_calendar, py::arg("cycles"), py::arg("cycles_per_day"));

    m.def("blade_root_bending_moment", py::overload_cast<double, double>(&structural::blade_root_bending_moment),
          py::arg("mass_kg"), py::arg("span_m"));
    m.def("rect_bending_stress", [](double moment, double b, double t, const std::string& orientation) {
        if (orientation != "flat" && orientation != "upright") throw ValidationError("orientation is flat or upright");
        return structural::rect_bending_stress(moment, RectSection(b, t, 1.0),
                                               orientation == "flat" ? structural::Orientation::Flat
                                                                     : structural::Orientation::Upright);
    }, py::arg("moment_nm"), py::arg("width_m"), py::arg("thickness_m"), py::arg("orientation") = "flat");
    m.def("rect_torsion_max_shear", [](double torque, double b, double t) {
        return structural::rect_torsion_max_shear(torque, RectSection(b, t, 1.0));
    }, py::arg("torque_nm"), py::arg("width_m"), py::arg("thickness_m"));

    m.def("rotor_torque", [](double radius, double omega, double wind, double rho, double cp) {
        return aero::rotor_torque({radius, omega, wind, rho, cp});
    }, py::arg("radius_m"), py::arg("omega_rad_s"), py::arg("wind_m_s"), py::arg("air_density"), py::arg("cp"));
    m.def("ducted_betz_limit", &aero::ducted_betz_limit, py::arg("a0"));

    m.def("bearing_life_from_modified", [](double lnm, int z, double per_day) {
        const auto r = bearing::from_modified_life(lnm, z, per_day);
        return py::dict(py::arg("raceway_cycles") = r.raceway_cycles,
                        py::arg("years_oscillation_basis") = r.years_oscillation_basis,
                        py::arg("years_raceway_basis") = r.years_raceway_basis);
    }, py::arg("lnm"), py::arg("ball_count"), py::arg("oscillations_per_day") = 1500.0);
    m.def("oscillating_rating", &bearing::oscillating_rating, py::arg("ca"), py::arg("theta_deg"), py::arg("p") = 3.0);

    m.def("weibull_cdf", [](double t, double beta, double eta) { return weibull::cdf(t, {beta, eta}); },
          py::arg("t"), py::arg("beta"), py::arg("eta"));
    m.def("weibull_quantile", [](double p, double beta, double eta) { return weibull::quantile_bp(p, {beta, eta}); },
          py::arg("percent"), py::arg("beta"), py::arg("eta"));
    m.def("weibull_fit", [](double p1, double b1, double p2, double b2) {
        const auto w = weibull::fit_two_quantiles({p1, b1}, {p2, b2});
        return std::make_pair(w.shape_beta, w.scale_eta);
    }, py::arg("p1"), py::arg("b1"), py::arg("p2"), py::arg("b2"));
    m.def("weibull_sample", [](double beta, double eta, std::uint64_t seed, std::size_t count) {
        return weibull::sample({beta, eta}, seed, count);
    }, py::arg("beta"), py::arg("eta"), py::arg("seed"), py::arg("count"));

    m.def("series_reliability", [](const std::vector<double>& r) { return system::series_reliability(r); });
    m.def("parallel_reliability", [](const std::vector<double>& r) { return system::parallel_reliability(r); });
    m.def("monte_carlo_mttf", [](const std::string& topology_json, std::size_t samples, std::uint64_t seed,
                                 unsigned threads) {
        const auto topo = io::topology_from_json(io::parse(topology_json));
        py::gil_scoped_release release;
        const auto est = system::monte_carlo_mttf(topo, samples, seed, threads);
        return std::make_pair(est.estimate, est.standard_error);
    }, py::arg("topology_json"), py::arg("samples"), py::arg("seed"), py::arg("threads") = 0);
    m.def("poisson_pmf", &system::poisson_pmf, py::arg("k"), py::arg("mean"));
    m.def("system_service_life", [](const std::map<std::string, double>& lives) {
        const auto s = system::system_service_life(lives);
        return std::make_pair(s.years, s.limiting_component);
    });

    m.def("default_registry_json", [] { return std::string(io::default_registry_json()); });
    m.def("generate_schedule", [](const std::string& install_json, double horizon_years,
                                  const std::optional<std::string>& registry_json) {
        const auto doc = io::parse(install_json);
        const auto install = io::install_from_json(doc);
        return entries_to_python(schedule::generate_schedule(registry_or_default(registry_json), install,
                                                             io::usage_from_install(doc), horizon_years));
    }, py::arg("install_json"), py::arg("horizon_years"), py::arg("registry_json") = py::none());
    m.def("registry_report", [](const std::string& format, const std::optional<std::string>& registry_json) {
        return report::emit_registry(registry_or_default(registry_json), report::parse_format(format));
    }, py::arg("format") = "markdown", py::arg("registry_json") = py::none());

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
