// Python bindings for the main operations. Specs cross the boundary as
// JSON-compatible dicts in the same shape the CLI spec files use.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <variant>

#include <json.hpp>

#include "lorentz/compactness.hpp"
#include "lorentz/errors.hpp"
#include "lorentz/norms.hpp"
#include "lorentz/selftest.hpp"
#include "lorentz/specio.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace lorentz;

namespace {

json json_from_py(const py::object& obj) {
    const py::object dumps = py::module_::import("json").attr("dumps");
    return json::parse(dumps(obj).cast<std::string>());
}

py::object json_to_py(const json& j) {
    const py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

SequenceSpec seq_arg(const py::object& obj) {
    return specio::sequence_from_json(json_from_py(obj));
}

WeightSpec weight_arg(const py::object& obj) {
    if (py::isinstance<py::str>(obj))
        return specio::weight_from_shorthand(obj.cast<std::string>());
    return specio::weight_from_json(json_from_py(obj));
}

FamilySpec family_arg(const py::object& obj) {
    return specio::family_from_json(json_from_py(obj));
}

} // namespace

PYBIND11_MODULE(_lorentz, m) {
    m.doc() = "Certified computations in weighted rearrangement sequence spaces";

    // translators run newest-first: register the base before the derived
    // classes so the most specific one matches
    py::register_exception<Error>(m, "LorentzError");
    py::register_exception<SpecError>(m, "SpecError");
    py::register_exception<NotSummable>(m, "NotSummable");
    py::register_exception<BudgetExhausted>(m, "BudgetExhausted");

    m.def(
        "norm_pth",
        [](const py::object& seq, double p, const py::object& w, double tol,
           std::uint64_t budget) {
            const Interval iv =
                lorentz_norm_pth(seq_arg(seq), p, weight_arg(w), tol, budget);
            return py::make_tuple(iv.lo, iv.hi);
        },
        py::arg("seq"), py::arg("p"), py::arg("w"), py::arg("tol") = kDefaultTol,
        py::arg("budget") = kDefaultBudget,
        "Certified enclosure (lo, hi) of the p-th power of the norm.");

    m.def(
        "norm",
        [](const py::object& seq, double p, const py::object& w, double tol,
           std::uint64_t budget) {
            const Interval iv =
                lorentz_norm_pth(seq_arg(seq), p, weight_arg(w), tol, budget);
            return py::make_tuple(std::pow(iv.lo, 1.0 / p), std::pow(iv.hi, 1.0 / p));
        },
        py::arg("seq"), py::arg("p"), py::arg("w"), py::arg("tol") = kDefaultTol,
        py::arg("budget") = kDefaultBudget,
        "Certified enclosure (lo, hi) of the norm itself.");

    m.def(
        "classify_membership",
        [](const py::object& seq, double p, const py::object& w,
           std::uint64_t budget) -> py::object {
            const MembershipVerdict v =
                classify_membership(seq_arg(seq), p, weight_arg(w), budget);
            py::dict out;
            if (const auto* mem = std::get_if<Member>(&v)) {
                out["verdict"] = "member";
                out["norm_pth"] = py::make_tuple(mem->norm_pth.lo, mem->norm_pth.hi);
            } else if (const auto* nm = std::get_if<NotMember>(&v)) {
                out["verdict"] = "not_member";
                out["reason"] = nm->reason;
            } else {
                const auto& inc = std::get<Inconclusive>(v);
                out["verdict"] = "inconclusive";
                out["partial_sum"] = inc.partial_sum;
                out["horizon"] = inc.horizon;
            }
            return out;
        },
        py::arg("seq"), py::arg("p"), py::arg("w"), py::arg("budget") = kDefaultBudget);

    m.def(
        "seminorm_pth",
        [](const py::object& seq, double p, const py::object& w, std::uint64_t i) {
            return seminorm_pth(seq_arg(seq), p, weight_arg(w), i);
        },
        py::arg("seq"), py::arg("p"), py::arg("w"), py::arg("i"));

    m.def(
        "decompose",
        [](const py::object& seq, double p, const py::object& w, std::uint64_t i,
           double tol, std::uint64_t budget) {
            const DecompositionRecord rec =
                decompose(seq_arg(seq), p, weight_arg(w), i, tol, budget);
            return json_to_py(specio::to_json(rec));
        },
        py::arg("seq"), py::arg("p"), py::arg("w"), py::arg("i"),
        py::arg("tol") = kDefaultTol, py::arg("budget") = kDefaultBudget);

    m.def(
        "certify",
        [](const py::object& family, double p, const py::object& w,
           const std::vector<double>& eps, double tol, std::uint64_t budget) {
            const Certificate cert =
                certify(family_arg(family), p, weight_arg(w),
                        eps.empty() ? kDefaultEpsLadder : eps, tol, budget);
            return json_to_py(specio::to_json(cert));
        },
        py::arg("family"), py::arg("p"), py::arg("w"),
        py::arg("eps") = std::vector<double>{}, py::arg("tol") = kDefaultTol,
        py::arg("budget") = kDefaultBudget);

    m.def(
        "lambda_of",
        [](double M, double d, double p, const py::object& w) {
            return lambda_of(M, d, p, weight_arg(w));
        },
        py::arg("M"), py::arg("d"), py::arg("p"), py::arg("w"));

    m.def(
        "gamma_of",
        [](const py::object& family, double d) -> py::object {
            const GammaResult g = gamma_of(family_arg(family), d);
            if (const auto* n = std::get_if<std::uint64_t>(&g))
                return py::int_(*n);
            return py::none(); // not uniformly vanishing
        },
        py::arg("family"), py::arg("d"));

    m.def(
        "gamma_inverse_at",
        [](const py::object& family, std::uint64_t n, double tol) {
            return gamma_inverse_at(family_arg(family), n, tol);
        },
        py::arg("family"), py::arg("n"), py::arg("tol") = 1e-12);

    m.def(
        "difference_family",
        [](const py::object& family) {
            return json_to_py(specio::to_json(difference_family(family_arg(family))));
        },
        py::arg("family"));

    m.def(
        "selftest",
        [](std::uint64_t seed, std::uint64_t trials) {
            py::list out;
            for (const auto& r : selftest::run_all(seed, trials)) {
                py::dict d;
                d["name"] = r.name;
                d["trials"] = r.trials;
                d["failures"] = r.failures;
                d["messages"] = r.messages;
                out.append(d);
            }
            return out;
        },
        py::arg("seed") = 0, py::arg("trials") = 200);
}
