#include "lorentz/specio.hpp"

#include <cstdint>
#include <sstream>

#include "lorentz/errors.hpp"

namespace lorentz {
namespace specio {

namespace {

json envelope_to_json(const Envelope& e) {
    json j;
    switch (e.kind()) {
    case Envelope::Kind::PowerTail:
        j["kind"] = "power_tail";
        j["c"] = e.coeff();
        j["s"] = e.param();
        break;
    case Envelope::Kind::GeometricTail:
        j["kind"] = "geometric_tail";
        j["c"] = e.coeff();
        j["r"] = e.param();
        break;
    }
    return j;
}

Envelope envelope_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "power_tail")
        return Envelope::power_tail(j.at("c").get<double>(), j.at("s").get<double>());
    if (kind == "geometric_tail")
        return Envelope::geometric_tail(j.at("c").get<double>(), j.at("r").get<double>());
    throw SpecError("unknown envelope kind: " + kind);
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Precompact:
        return "precompact";
    case Verdict::NotPrecompact:
        return "not_precompact";
    default:
        return "inconclusive";
    }
}

const char* method_name(CriterionMethod m) {
    switch (m) {
    case CriterionMethod::SeminormGap:
        return "seminorm_gap";
    case CriterionMethod::TailCriterion:
        return "tail_criterion";
    default:
        return "both";
    }
}

} // namespace

json to_json(const SequenceSpec& s) {
    json j;
    switch (s.kind()) {
    case SequenceSpec::Kind::Finite:
        j["kind"] = "finite";
        j["entries"] = s.entries();
        break;
    case SequenceSpec::Kind::Power:
        j["kind"] = "power";
        j["c"] = s.coeff();
        j["s"] = s.param();
        break;
    case SequenceSpec::Kind::Geometric:
        j["kind"] = "geometric";
        j["c"] = s.coeff();
        j["r"] = s.param();
        break;
    case SequenceSpec::Kind::Tabled:
        j["kind"] = "tabled";
        j["entries"] = s.entries();
        j["envelope"] = envelope_to_json(s.envelope());
        break;
    }
    return j;
}

json to_json(const WeightSpec& w) {
    json j;
    if (w.prefix().empty()) {
        j["kind"] = "power";
        j["beta"] = w.tail_beta();
    } else {
        j["kind"] = "prefix";
        j["values"] = w.prefix();
        j["tail_beta"] = w.tail_beta();
    }
    return j;
}

json to_json(const FamilySpec& f) {
    json j;
    switch (f.kind()) {
    case FamilySpec::Kind::ExplicitFinite: {
        j["kind"] = "explicit";
        json members = json::array();
        for (const auto& m : f.members())
            members.push_back(to_json(m));
        j["members"] = std::move(members);
        break;
    }
    case FamilySpec::Kind::ShiftFamily:
        j["kind"] = "shift";
        j["base"] = to_json(f.base());
        break;
    case FamilySpec::Kind::ScaledBasis:
        j["kind"] = "scaled_basis";
        j["coeffs"] = to_json(f.coeffs());
        break;
    case FamilySpec::Kind::Dominated: {
        j["kind"] = "dominated";
        j["envelope"] = to_json(f.dominating());
        json samples = json::array();
        for (const auto& s : f.samples())
            samples.push_back(to_json(s));
        j["samples"] = std::move(samples);
        break;
    }
    }
    return j;
}

json to_json(const Interval& iv) {
    return json{{"lo", iv.lo}, {"hi", iv.hi}};
}

json to_json(const DecompositionRecord& rec) {
    json j;
    j["split"] = rec.split;
    j["S"] = to_json(rec.S);
    j["S_tilde"] = to_json(rec.S_tilde);
    j["H"] = to_json(rec.H);
    j["H_tilde"] = to_json(rec.H_tilde);
    j["W"] = to_json(rec.W);
    j["W_tilde"] = to_json(rec.W_tilde);
    j["T"] = to_json(rec.T);
    j["norm_pth"] = to_json(rec.norm_pth);
    return j;
}

json to_json(const Certificate& cert) {
    json j;
    j["verdict"] = verdict_name(cert.verdict);
    j["method"] = method_name(cert.method);
    j["cross_check_agreement"] = cert.cross_check_agreement;
    if (cert.bound)
        j["bound"] = to_json(*cert.bound);
    json table = json::array();
    for (const auto& [eps, n] : cert.equinorm_table)
        table.push_back(json{{"eps", eps}, {"N", n}});
    j["equinorm_table"] = std::move(table);
    if (cert.witness)
        j["witness"] = json{{"member", cert.witness->member},
                            {"gap", cert.witness->gap}};
    if (!cert.note.empty())
        j["note"] = cert.note;
    return j;
}

SequenceSpec sequence_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "finite")
        return SequenceSpec::finite(j.at("entries").get<std::vector<double>>());
    if (kind == "power")
        return SequenceSpec::power(j.at("c").get<double>(), j.at("s").get<double>());
    if (kind == "geometric")
        return SequenceSpec::geometric(j.at("c").get<double>(), j.at("r").get<double>());
    if (kind == "tabled")
        return SequenceSpec::tabled(j.at("entries").get<std::vector<double>>(),
                                    envelope_from_json(j.at("envelope")));
    throw SpecError("unknown sequence kind: " + kind);
}

WeightSpec weight_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "power")
        return WeightSpec::power_decay(j.at("beta").get<double>());
    if (kind == "prefix")
        return WeightSpec::explicit_prefix(j.at("values").get<std::vector<double>>(),
                                           j.at("tail_beta").get<double>());
    throw SpecError("unknown weight kind: " + kind);
}

FamilySpec family_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "explicit") {
        std::vector<SequenceSpec> members;
        for (const auto& m : j.at("members"))
            members.push_back(sequence_from_json(m));
        return FamilySpec::explicit_finite(std::move(members));
    }
    if (kind == "shift")
        return FamilySpec::shift_family(sequence_from_json(j.at("base")));
    if (kind == "scaled_basis")
        return FamilySpec::scaled_basis(sequence_from_json(j.at("coeffs")));
    if (kind == "dominated") {
        std::vector<SequenceSpec> samples;
        if (j.contains("samples"))
            for (const auto& s : j.at("samples"))
                samples.push_back(sequence_from_json(s));
        return FamilySpec::dominated(sequence_from_json(j.at("envelope")),
                                     std::move(samples));
    }
    throw SpecError("unknown family kind: " + kind);
}

WeightSpec weight_from_shorthand(const std::string& name) {
    if (name == "harmonic")
        return WeightSpec::power_decay(1.0);
    if (name == "invsqrt")
        return WeightSpec::power_decay(0.5);
    if (name.rfind("power:", 0) == 0) {
        const double beta = std::stod(name.substr(6));
        return WeightSpec::power_decay(beta);
    }
    throw SpecError("unknown weight shorthand: " + name);
}

std::string digest(const json& j) {
    const std::string dump = j.dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

} // namespace specio
} // namespace lorentz
