#include "k3lcs/json_io.hpp"

namespace k3lcs::json {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw Error(ErrorKind::Parse, field, "field '" + field + "': " + what);
}

const Json& member(const Json& j, const char* key, const std::string& field) {
    if (!j.is_object()) fail(field, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(field + "." + key, "missing");
    return *it;
}

const Json* optional_member(const Json& j, const char* key) {
    if (!j.is_object()) return nullptr;
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

void expect_array(const Json& j, std::size_t n, const std::string& field) {
    if (!j.is_array() || j.size() != n) fail(field, "expected an array of length " + std::to_string(n));
}

}  // namespace

Json write(const Rational& x) { return x.str(); }

Rational read_rational(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const Error& e) {
            fail(field, e.what());
        }
    }
    fail(field, "expected an integer or a \"p/q\" string");
}

std::int64_t read_int(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_string()) {
        Rational r = read_rational(j, field);
        if (r.is_integer()) return r.to_int64();
    }
    fail(field, "expected an integer");
}

Json write(const GaussianRational& x) { return Json{{"re", x.re().str()}, {"im", x.im().str()}}; }

GaussianRational read_gaussian(const Json& j, const std::string& field) {
    if (j.is_object()) {
        Rational re = read_rational(member(j, "re", field), field + ".re");
        Rational im = read_rational(member(j, "im", field), field + ".im");
        return {re, im};
    }
    return GaussianRational(read_rational(j, field));
}

Json write(const ComplexLambda& z) {
    Json a = Json::array();
    for (const auto& x : z) a.push_back(write(x));
    return a;
}

ComplexLambda read_complex_lambda(const Json* j, const std::string& field) {
    ComplexLambda z;
    if (j == nullptr) return z;
    expect_array(*j, kLambdaRank, field);
    for (std::size_t i = 0; i < kLambdaRank; ++i) z[i] = read_gaussian((*j)[i], field + "[" + std::to_string(i) + "]");
    return z;
}

Json write(const LambdaVector& c) {
    Json a = Json::array();
    for (auto x : c) a.push_back(x);
    return a;
}

LambdaVector read_lambda_vector(const Json& j, const std::string& field) {
    expect_array(j, kLambdaRank, field);
    LambdaVector c{};
    for (std::size_t i = 0; i < kLambdaRank; ++i) c[i] = read_int(j[i], field + "[" + std::to_string(i) + "]");
    return c;
}

Json write(const LatticeElement& e) {
    return Json{{"a", {e.a[0], e.a[1]}}, {"b", {e.b[0], e.b[1]}}, {"c", write(e.c)}};
}

LatticeElement read_lattice_element(const Json& j, const std::string& field) {
    LatticeElement e;
    const Json& a = member(j, "a", field);
    const Json& b = member(j, "b", field);
    expect_array(a, 2, field + ".a");
    expect_array(b, 2, field + ".b");
    for (std::size_t i = 0; i < 2; ++i) {
        e.a[i] = read_int(a[i], field + ".a");
        e.b[i] = read_int(b[i], field + ".b");
    }
    if (const Json* c = optional_member(j, "c")) e.c = read_lambda_vector(*c, field + ".c");
    return e;
}

Json write(const Mat2& m) { return Json{{m.a, m.b}, {m.c, m.d}}; }

Mat2 read_mat2(const Json& j, const std::string& field) {
    IntMatrix x = read_int_matrix(j, field, 2, 2);
    return {x.at64(0, 0), x.at64(0, 1), x.at64(1, 0), x.at64(1, 1)};
}

Json write(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.at64(i, k));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix read_int_matrix(const Json& j, const std::string& field, std::size_t rows, std::size_t cols) {
    expect_array(j, rows, field);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        std::string rf = field + "[" + std::to_string(i) + "]";
        expect_array(j[i], cols, rf);
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = static_cast<long>(read_int(j[i][k], rf));
    }
    return m;
}

Json write(const TubeCoords& t) { return Json{{"tau", write(t.tau)}, {"u", write(t.u)}, {"z", write(t.z)}}; }

Json write(const NarainCoords& n) {
    return Json{{"tau", write(n.tau)}, {"u_tilde", write(n.u_tilde)}, {"z", write(n.z)}};
}

Json write(const PeriodVector& p) {
    return Json{{"a", {write(p.a[0]), write(p.a[1])}}, {"b", {write(p.b[0]), write(p.b[1])}}, {"c", write(p.c)}};
}

PeriodVector read_period(const Json& j, FrameKind frame, const std::string& field) {
    PeriodVector p;
    p.frame = frame;
    const Json& a = member(j, "a", field);
    const Json& b = member(j, "b", field);
    expect_array(a, 2, field + ".a");
    expect_array(b, 2, field + ".b");
    for (std::size_t i = 0; i < 2; ++i) {
        p.a[i] = read_gaussian(a[i], field + ".a");
        p.b[i] = read_gaussian(b[i], field + ".b");
    }
    p.c = read_complex_lambda(optional_member(j, "c"), field + ".c");
    return p;
}

PeriodVector read_point(const Json& j, FrameKind frame) {
    if (!j.is_object()) fail("record", "expected an object");
    if (const Json* w = optional_member(j, "omega")) {
        PeriodVector p = read_period(*w, frame, "omega");
        tube_from_omega(p);  // validates and rejects the conjugate component
        return p;
    }
    GaussianRational tau = read_gaussian(member(j, "tau", "record"), "tau");
    ComplexLambda z = read_complex_lambda(optional_member(j, "z"), "z");
    if (const Json* ut = optional_member(j, "u_tilde")) {
        return omega_from_narain({tau, read_gaussian(*ut, "u_tilde"), z, frame});
    }
    if (const Json* u = optional_member(j, "u")) {
        return omega_from_tube({tau, read_gaussian(*u, "u"), z, frame});
    }
    fail("record", "expected one of omega, u_tilde or u");
}

Json write(const ParabolicIsometry& g) {
    return Json{{"m", write(g.m())}, {"Q", write(g.q())}, {"R", write(g.r())}, {"f", write(g.f())}};
}

ParabolicIsometry read_parabolic(const Json& j, FrameKind frame, const std::string& field) {
    if (!j.is_object()) fail(field, "expected an object");
    Mat2 m = Mat2::identity();
    if (const Json* x = optional_member(j, "m")) m = read_mat2(*x, field + ".m");
    Mat2 r = Mat2::zero();
    if (const Json* x = optional_member(j, "R")) r = read_mat2(*x, field + ".R");
    IntMatrix f = IntMatrix::identity(kLambdaRank);
    if (const Json* x = optional_member(j, "f")) f = read_int_matrix(*x, field + ".f", kLambdaRank, kLambdaRank);
    bool improper = false;
    if (const Json* x = optional_member(j, "allow_improper")) improper = x->is_boolean() && x->get<bool>();
    if (const Json* q = optional_member(j, "Q")) {
        return make_parabolic(frame, m, read_int_matrix(*q, field + ".Q", 2, kLambdaRank), r, f, improper);
    }
    LambdaVector c1{}, c2{};
    if (const Json* x = optional_member(j, "c1")) c1 = read_lambda_vector(*x, field + ".c1");
    if (const Json* x = optional_member(j, "c2")) c2 = read_lambda_vector(*x, field + ".c2");
    return make_parabolic_from_vectors(frame, m, c1, c2, r, f, improper);
}

Json write(const ReductionResult& r) {
    return Json{{"m", write(r.m)}, {"tau", write(r.tau_reduced)}, {"rho", write(r.rho)}};
}

Json write(const LcsReport& r) {
    return Json{{"is_lcs", r.is_lcs},
                {"rho", write(r.rho)},
                {"binding", std::string(to_string(r.binding))},
                {"u_tilde_2", write(r.u_tilde_2)},
                {"disc_radius_approx", r.disc_radius_approx}};
}

Json write(const BasisInvariants& b) {
    Json j{{"tau", write(b.tau)}, {"u2_literal", write(b.u2_literal)}};
    j["narain_u2"] = b.narain_u2 ? write(*b.narain_u2) : Json(nullptr);
    j["reoriented"] = b.reoriented;
    return j;
}

Json write(const Lemma1Report& r) {
    return Json{{"a1", r.a1},
                {"a2", r.a2},
                {"lemma_sign", r.lemma_sign},
                {"lemma_gap_approx", r.lemma_gap_approx},
                {"remark_gap", write(r.remark_gap)}};
}

Json write(const RootSystemReport& r) {
    Json comps = Json::array();
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        const auto& c = r.components[i];
        comps.push_back(Json{{"label", c.label.str()}, {"rank", c.rank}, {"count", c.count}, {"kodaira", r.kodaira[i]}});
    }
    Json roots = Json::array();
    for (const auto& e : r.roots) roots.push_back(write(e));
    Json out{{"complete", r.complete}, {"components", comps}};
    // No roots: the singular fibers are invisible to the root lattice.
    if (r.components.empty()) out["kodaira_trivial"] = kodaira_candidates_trivial();
    out["roots"] = roots;
    return out;
}

Json write_error(const Error& e, std::size_t line) {
    return Json{{"error",
                 {{"kind", std::string(to_string(e.kind()))},
                  {"invariant", e.invariant()},
                  {"message", e.what()},
                  {"line", line}}}};
}

}  // namespace k3lcs::json
