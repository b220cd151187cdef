#include "k3lcs/cli.hpp"

#include <array>
#include <istream>
#include <ostream>

#include "k3lcs/ade.hpp"
#include "k3lcs/json_io.hpp"
#include "k3lcs/parabolic.hpp"
#include "k3lcs/selftest.hpp"

namespace k3lcs::cli {

namespace {

using json::Json;

constexpr std::array<const char*, 8> kCommands = {"reduce-tau", "coords", "lcs-test", "act",
                                                  "ade-type",   "classify-v", "fiber-scan", "selftest"};

FrameKind record_frame(const Json& rec, const Options& opt) {
    auto it = rec.find("frame");
    if (it == rec.end()) return opt.frame;
    if (!it->is_string()) throw Error(ErrorKind::Parse, "frame", "field 'frame': expected a string");
    return parse_frame_kind(it->get<std::string>());
}

const Json& require(const Json& rec, const char* key) {
    auto it = rec.find(key);
    if (it == rec.end()) throw Error(ErrorKind::Parse, key, std::string("field '") + key + "': missing");
    return *it;
}

Json reduce_tau(const Json& rec) {
    return json::write(reduce_sl2(json::read_gaussian(require(rec, "tau"), "tau")));
}

Json coords(const Json& rec, const Options& opt) {
    FrameKind frame = record_frame(rec, opt);
    PeriodVector w = normalize(json::read_point(rec, frame));
    TubeCoords t = tube_from_omega(w);
    Json out{{"omega", json::write(w)},
             {"tube", json::write(t)},
             {"narain", json::write(narain_from_tube(t))},
             {"omega_dot_conj", json::write(pair(w, w.conj()).re())}};
    auto y1 = rec.find("y1");
    auto y2 = rec.find("y2");
    if (y1 != rec.end() || y2 != rec.end()) {
        LatticeElement e1 = y1 != rec.end() ? json::read_lattice_element(*y1, "y1") : LatticeElement::y1();
        LatticeElement e2 = y2 != rec.end() ? json::read_lattice_element(*y2, "y2") : LatticeElement::y2();
        out["basis"] = json::write(tau_u2_from_basis(w, e1, e2));
    }
    if (auto r = rec.find("r"); r != rec.end()) {
        out["lemma"] = json::write(lemma1_gap(w, json::read_lattice_element(*r, "r")));
    }
    return out;
}

Json lcs(const Json& rec, const Options& opt) {
    return json::write(lcs_test(narain_from_omega(json::read_point(rec, record_frame(rec, opt)))));
}

Json act(const Json& rec, const Options& opt) {
    FrameKind frame = record_frame(rec, opt);
    PeriodVector w = json::read_point(rec, frame);
    NarainCoords before = narain_from_omega(w);
    const Json& g_in = require(rec, "g");
    Json out = Json::object();
    PeriodVector image;
    if (g_in.is_string()) {
        if (g_in.get<std::string>() != "h_block_swap") {
            throw Error(ErrorKind::Parse, "g", "field 'g': the only named isometry is \"h_block_swap\"");
        }
        image = act_on_period(h_block_swap(frame), w);
        out["g"] = "h_block_swap";
    } else {
        ParabolicIsometry g = g_in.is_object() && g_in.contains("sample")
                                  ? sample_parabolic(frame, static_cast<std::uint64_t>(json::read_int(g_in["sample"], "g.sample")))
                                  : json::read_parabolic(g_in, frame, "g");
        image = act_on_period(g, w);
        out["g"] = json::write(g);
        // The closed forms cover P+ only.
        if (g.m().det() == 1) out["closed_form_agrees"] = narain_transform(g, before) == narain_from_omega(image);
    }
    NarainCoords after = narain_from_omega(image);
    out["omega"] = json::write(image);
    out["narain"] = json::write(after);
    out["lcs_before"] = lcs_test(before).is_lcs;
    out["lcs_after"] = lcs_test(after).is_lcs;
    return out;
}

Json ade_type(const Json& rec, const Options& opt) {
    PeriodVector w = json::read_point(rec, record_frame(rec, opt));
    return json::write(root_system_report(w, opt.box_bound, opt.c_norm_bound));
}

Json classify_v(const Json& rec, const Options& opt) {
    FrameKind frame = record_frame(rec, opt);
    const Json& basis = require(rec, "basis");
    if (!basis.is_array() || basis.size() != 2) {
        throw Error(ErrorKind::Parse, "basis", "field 'basis': expected two lattice elements");
    }
    SublatticeBasis v{{json::read_lattice_element(basis[0], "basis[0]"), json::read_lattice_element(basis[1], "basis[1]")},
                      frame};
    if (!is_primitive_isotropic_rank2(v)) {
        throw Error(ErrorKind::InvalidPlane, "primitive-isotropic-rank-2", "basis does not span a primitive isotropic plane");
    }
    return Json{{"primitive_isotropic", true}, {"type", std::string(to_string(classify_isotropic_plane(v)))}};
}

Json fiber_scan(const Json& rec, const Options& opt) {
    FrameKind frame = record_frame(rec, opt);
    GaussianRational tau = json::read_gaussian(require(rec, "tau"), "tau");
    auto zit = rec.find("z");
    ComplexLambda z = json::read_complex_lambda(zit == rec.end() ? nullptr : &*zit, "z");
    const Json& samples = require(rec, "u_tilde_samples");
    if (!samples.is_array()) throw Error(ErrorKind::Parse, "u_tilde_samples", "field 'u_tilde_samples': expected an array");
    std::vector<GaussianRational> us;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        us.push_back(json::read_gaussian(samples[i], "u_tilde_samples[" + std::to_string(i) + "]"));
    }
    return json::write(fiber_constancy_scan(tau, z, frame, us, opt.box_bound, opt.c_norm_bound));
}

Json dispatch(const Options& opt, const Json& rec) {
    const std::string& c = opt.command;
    if (c == "reduce-tau") return reduce_tau(rec);
    if (c == "coords") return coords(rec, opt);
    if (c == "lcs-test") return lcs(rec, opt);
    if (c == "act") return act(rec, opt);
    if (c == "ade-type") return ade_type(rec, opt);
    if (c == "classify-v") return classify_v(rec, opt);
    if (c == "fiber-scan") return fiber_scan(rec, opt);
    throw Error(ErrorKind::Precondition, "command", "unknown command '" + c + "'");
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_object() && v.size() == 2 && v.contains("re") && v.contains("im")) {
        return v["re"].get<std::string>() + (v["im"].get<std::string>()[0] == '-' ? "" : "+") +
               v["im"].get<std::string>() + "i";
    }
    return v.dump();
}

void emit(const Options& opt, const Json& j, std::ostream& out) {
    if (opt.format == Format::Json) {
        out << j.dump() << '\n';
        return;
    }
    bool first = true;
    for (const auto& [k, v] : j.items()) {
        out << (first ? "" : " ") << k << '=' << scalar_text(v);
        first = false;
    }
    out << '\n';
}

int run_selftest_command(const Options& opt, std::ostream& out) {
    bool ok = true;
    for (const auto& r : run_selftest(opt.seed)) {
        ok = ok && r.pass;
        Json j{{"suite", r.name}, {"pass", r.pass}};
        if (!r.pass) j["detail"] = r.detail;
        emit(opt, j, out);
    }
    return ok ? kExitOk : kExitRuntime;
}

}  // namespace

bool is_command(const std::string& name) {
    for (const char* c : kCommands) {
        if (name == c) return true;
    }
    return false;
}

int run(const Options& opt, std::istream& in, std::ostream& out) {
    if (opt.command == "selftest") return run_selftest_command(opt, out);
    bool validation = false;
    bool runtime = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            Json rec;
            try {
                rec = Json::parse(line);
            } catch (const nlohmann::json::parse_error& e) {
                throw Error(ErrorKind::Parse, "json", std::string("malformed JSON: ") + e.what());
            }
            if (!rec.is_object()) throw Error(ErrorKind::Parse, "record", "record must be a JSON object");
            emit(opt, dispatch(opt, rec), out);
        } catch (const Error& e) {
            (is_validation_error(e.kind()) ? validation : runtime) = true;
            emit(opt, json::write_error(e, lineno), out);
        } catch (const std::exception& e) {
            runtime = true;
            emit(opt, json::write_error(Error(ErrorKind::Internal, "internal", e.what()), lineno), out);
        }
    }
    if (validation) return kExitValidation;
    return runtime ? kExitRuntime : kExitOk;
}

}  // namespace k3lcs::cli
