#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ruled/degrees.hpp"
#include "ruled/io.hpp"
#include "ruled/poncelet.hpp"
#include "ruled/selftest.hpp"

namespace {

using nlohmann::json;
using namespace ruled;

std::string error_json(const std::string& what) {
    json j;
    j["error"] = what;
    return j.dump();
}

// severity: 0 ok, 1 invalid document, 2 mathematical degeneracy
struct LineResult {
    std::string text;
    int severity = 0;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw document_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

unsigned thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("RULED_LOCUS_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1 && v <= 256) return static_cast<unsigned>(v);
    }
    return std::min(hw, 8u);
}

LineResult guarded(const std::function<LineResult()>& fn) {
    try {
        return fn();
    } catch (const document_error& e) {
        return {error_json(e.what()), 1};
    } catch (const math_error& e) {
        return {error_json(e.what()), 2};
    } catch (const std::exception& e) {
        return {error_json(e.what()), 1};
    }
}

// One JSON document per input line; outputs keep input order.  A single line
// uses the plain error protocol (message on stderr); with several lines the
// per-line errors go inline so ordering survives, and the exit code reports
// the worst severity seen.
int run_lines(const std::string& input, const std::function<LineResult(const std::string&)>& per_line) {
    std::vector<std::string> lines;
    std::istringstream is(input);
    std::string line;
    while (std::getline(is, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    if (lines.empty()) {
        std::cerr << error_json("empty input") << "\n";
        return 1;
    }
    if (lines.size() == 1) {
        LineResult r = guarded([&] { return per_line(lines[0]); });
        if (r.severity != 0 && r.text.rfind("{\"error\"", 0) == 0) {
            std::cerr << r.text << "\n";
            return r.severity;
        }
        std::cout << r.text << "\n";
        return r.severity;
    }
    std::vector<LineResult> results(lines.size());
    std::atomic<std::size_t> next{0};
    const unsigned nt = static_cast<unsigned>(
        std::min<std::size_t>(thread_budget(), lines.size()));
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (unsigned w = 0; w < nt; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= lines.size()) return;
                results[i] = guarded([&] { return per_line(lines[i]); });
            }
        });
    for (auto& th : pool) th.join();
    bool doc_bad = false, math_bad = false;
    for (const auto& r : results) {
        std::cout << r.text << "\n";
        doc_bad = doc_bad || r.severity == 1;
        math_bad = math_bad || r.severity == 2;
    }
    return doc_bad ? 1 : (math_bad ? 2 : 0);
}

FieldSpec parse_field_flag(const std::string& s) {
    if (s == "q" || s == "Q") return FieldSpec{true, 0};
    if (s.rfind("fp:", 0) == 0) {
        char* end = nullptr;
        long v = std::strtol(s.c_str() + 3, &end, 10);
        if (end == s.c_str() + 3 || *end != '\0' || v < 3) throw document_error("bad field flag: " + s);
        try {
            Fp::check_modulus(static_cast<std::uint64_t>(v));
        } catch (const math_error& e) {
            throw document_error(e.what());
        }
        return FieldSpec{false, static_cast<std::uint64_t>(v)};
    }
    throw document_error("unknown field flag (use q or fp:P): " + s);
}

json field_json(const FieldSpec& fs) {
    json j;
    j["type"] = fs.rational ? "Q" : "Fp";
    if (!fs.rational) j["p"] = fs.p;
    return j;
}

template <class F>
json curve_json(const F& field, const PlaneCurve<typename F::Element>& c) {
    return json::parse(serialize(document_from_curve(field, c)));
}

template <class F>
json form_json(const F& field, const BinaryForm<typename F::Element>& f) {
    json a = json::array();
    for (int i = 0; i <= f.degree(); ++i) a.push_back(F::str(f.coeff(i)));
    return a;
}

const char* stability_name(StabilityClass c) {
    switch (c) {
        case StabilityClass::Stable: return "stable";
        case StabilityClass::StrictlySemistable: return "strictly_semistable";
        default: return "unstable";
    }
}

const char* triangle_status_name(TriangleStatus s) {
    switch (s) {
        case TriangleStatus::Finite: return "finite";
        case TriangleStatus::Infinite: return "infinite";
        default: return "indeterminate";
    }
}

template <class F>
json analyze_report(const F& field, const SurfaceMap<typename F::Element>& s) {
    const auto t0 = std::chrono::steady_clock::now();
    json j;
    j["d"] = s.degree();
    j["field"] = field_json(field_spec_of(field));

    auto v = validate(s);
    json jv;
    jv["decomposable"] = v.decomposable;
    jv["base_point_free"] = v.base_point_free;
    jv["in_family"] = v.in_family;
    jv["boundary_factor"] = v.boundary_factor ? form_json(field, *v.boundary_factor) : json(nullptr);
    j["validity"] = jv;

    try {
        auto st = splitting_type(s);
        j["splitting"] = json{{"a_q", st.a_q}, {"b_k", st.b_k}};
    } catch (const math_error&) {
        j["splitting"] = nullptr;  // e.g. a common-factor boundary map
    }

    auto rep = stability(s);
    json js;
    js["class"] = stability_name(rep.cls);
    js["kernel_dim"] = rep.kernel_dim;
    j["stability"] = js;

    j["phi_rank"] = phi_rank(s);

    auto psi = psi_biform(s);
    j["singular_locus"] = curve_json(field, psi);
    j["pinch_form"] = form_json(field, psi.restrict_to_conic());
    j["developable"] = divide_by_conic(psi).has_value();

    try {
        auto tc = check_main_theorem(s);
        j["routes_equal"] = tc.equal;
        j["theorem_scale"] = F::str(tc.scale);
    } catch (const math_error&) {
        j["routes_equal"] = nullptr;
        j["theorem_scale"] = nullptr;
    }

    if (s.degree() == 5) {
        auto tri = count_triangles_exact(psi);
        json jt;
        jt["status"] = triangle_status_name(tri.status);
        if (tri.status == TriangleStatus::Finite) jt["count"] = tri.count;
        j["triangles"] = jt;
    }
    j["time_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return j;
}

struct GenArgs {
    std::string kind = "type-a";
    int d = 3;
    int a = 1;
    bool a_given = false;
    std::uint64_t seed = 0;
    std::string field_flag = "q";
};

template <class F>
LineResult gen_command_for(const F& field, const GenArgs& g) {
    using K = typename F::Element;
    SurfaceMap<K> out = [&]() -> SurfaceMap<K> {
        if (g.kind == "type-a") return gen_type_a(field, g.d, g.a, g.seed).map;
        if (g.kind == "cone") return gen_cone(field, g.d, g.a, g.seed).map;
        if (g.kind == "rank5") return gen_rank5(field, g.d, g.seed).map;
        if (g.kind == "rank3") return gen_rank3(field, g.d, g.a, g.seed).map;
        if (g.kind == "developable") {
            if (g.d % 2 != 0 || g.d < 2) throw document_error("developable needs an even degree >= 2");
            return gen_developable(field, g.d / 2 + 1, g.seed).map;
        }
        if (g.kind == "boundary") {
            const int dp = g.a_given ? g.a : g.d - 1;
            if (dp < 3 || dp >= g.d) throw document_error("boundary needs an inner degree 3 <= a < d");
            auto inner = gen_type_a(field, dp, 1 + static_cast<int>(g.seed % static_cast<std::uint64_t>(dp / 2)),
                                    mix_seed(g.seed, 0xb0u));
            std::mt19937_64 rng(mix_seed(g.seed, 0xb1u));
            BinaryForm<K> xi(0);
            xi.coeff(0) = K(1);
            for (int i = 0; i < g.d - dp; ++i) {
                BinaryForm<K> lin(1);
                lin.coeff(0) = field.make(1);
                lin.coeff(1) = -field.random(rng);
                xi = xi * lin;
            }
            return boundary_compose(inner.map, xi);
        }
        throw document_error("unknown kind: " + g.kind);
    }();
    return {serialize(document_from_surface(field, out)), 0};
}

int cmd_gen(const GenArgs& g) {
    LineResult r = guarded([&] {
        return with_field(parse_field_flag(g.field_flag),
                          [&](auto& field) { return gen_command_for(field, g); });
    });
    if (r.severity != 0) {
        std::cerr << r.text << "\n";
        return r.severity;
    }
    std::cout << r.text << "\n";
    return 0;
}

LineResult analyze_line(const std::string& text) {
    SurfaceDocument doc = parse_surface_document(text);
    return with_field(doc.field, [&](auto& field) -> LineResult {
        auto s = surface_from_document(field, doc);
        return {analyze_report(field, s).dump(), 0};
    });
}

LineResult psi_line(const std::string& text, const std::string& method) {
    SurfaceDocument doc = parse_surface_document(text);
    return with_field(doc.field, [&](auto& field) -> LineResult {
        auto s = surface_from_document(field, doc);
        if (method == "biform") return {serialize(document_from_curve(field, psi_biform(s))), 0};
        if (method == "det") return {serialize(document_from_curve(field, psi_determinantal(s))), 0};
        if (method != "both") throw document_error("unknown method: " + method);
        auto tc = check_main_theorem(s);
        if (!tc.equal) throw math_error("the two singular-locus routes disagree");
        json j;
        j["biform"] = curve_json(field, tc.biform_route);
        j["determinantal"] = curve_json(field, tc.determinantal_route);
        j["scale"] = std::decay_t<decltype(field)>::str(tc.scale);
        return {j.dump(), 0};
    });
}

LineResult phi_line(const std::string& text) {
    SurfaceDocument doc = parse_surface_document(text);
    return with_field(doc.field, [&](auto& field) -> LineResult {
        using F = std::decay_t<decltype(field)>;
        auto s = surface_from_document(field, doc);
        auto m = phi_matrix(s);
        json rows = json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(F::str(m(i, k)));
            rows.push_back(row);
        }
        json j;
        j["rank"] = m.rank();
        j["matrix"] = rows;
        return {j.dump(), 0};
    });
}

LineResult dual_line(const std::string& text) {
    SurfaceDocument doc = parse_surface_document(text);
    return with_field(doc.field, [&](auto& field) -> LineResult {
        auto s = surface_from_document(field, doc);
        return {serialize(document_from_surface(field, dual_surface(s))), 0};
    });
}

LineResult act_line(const std::string& text, const MatrixDocument& mat, bool pgl4) {
    SurfaceDocument doc = parse_surface_document(text);
    return with_field(doc.field, [&](auto& field) -> LineResult {
        using K = typename std::decay_t<decltype(field)>::Element;
        auto s = surface_from_document(field, doc);
        if (pgl4) {
            auto a = matrix_from_document<std::decay_t<decltype(field)>, 4>(field, mat);
            Matrix<K> g(4, 4);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) g(i, j) = a[i][j];
            return {serialize(document_from_surface(field, act_pgl4(s, g))), 0};
        }
        auto h = matrix_from_document<std::decay_t<decltype(field)>, 2>(field, mat);
        return {serialize(document_from_surface(field, act_pgl2(s, h))), 0};
    });
}

LineResult triangles_line(const std::string& text, const std::string& mode) {
    CurveDocument doc = parse_curve_document(text);
    if (doc.degree != 3) throw document_error("triangle counting needs a degree-3 curve");
    if (mode.rfind("brute:", 0) == 0) {
        char* end = nullptr;
        long p = std::strtol(mode.c_str() + 6, &end, 10);
        if (end == mode.c_str() + 6 || *end != '\0' || p < 3 || p > 257)
            throw document_error("brute mode needs an odd prime modulus <= 257");
        FpField f(static_cast<std::uint64_t>(p));
        auto c = curve_from_document(f, doc);
        auto tris = find_triangles_bruteforce(c);
        json arr = json::array();
        for (const auto& tri : tris) {
            json jt = json::array();
            for (const auto& pt : tri) jt.push_back(json::array({pt[0].str(), pt[1].str()}));
            arr.push_back(jt);
        }
        json j;
        j["count"] = tris.size();
        j["triangles"] = arr;
        return {j.dump(), 0};
    }
    if (mode != "exact") throw document_error("unknown mode: " + mode);
    QField f;
    auto c = curve_from_document(f, doc);
    auto tc = count_triangles_exact(c);
    json j;
    j["status"] = triangle_status_name(tc.status);
    if (tc.status == TriangleStatus::Finite) {
        j["count"] = tc.count;
        j["vertex_form"] = form_json(f, tc.vertex_form);
    }
    return {j.dump(), tc.status == TriangleStatus::Indeterminate ? 2 : 0};
}

int cmd_degrees(int d) {
    LineResult r = guarded([&]() -> LineResult {
        if (d < 3) throw document_error("degree tables start at d = 3");
        auto tab = stratum_degrees(d);
        auto emit = [](const mpz_class& z) -> json {
            if (z.fits_slong_p()) return json(z.get_si());
            return json(z.get_str());
        };
        json j;
        j["d"] = tab.d;
        j["i"] = emit(tab.i);
        j["j"] = emit(tab.j);
        j["k"] = emit(tab.k);
        j["p"] = emit(tab.p);
        return {j.dump(), 0};
    });
    if (r.severity != 0) {
        std::cerr << r.text << "\n";
        return r.severity;
    }
    std::cout << r.text << "\n";
    return 0;
}

LineResult from_extension_line(const std::string& text) {
    ExtensionDocument doc = parse_extension_document(text);
    return with_field(doc.field, [&](auto& field) -> LineResult {
        using F = std::decay_t<decltype(field)>;
        auto ex = extension_from_document(field, doc);
        if (!extension_is_trivializable(ex)) throw math_error("extension datum is not trivializable");
        auto s = extension_to_surface(ex);
        auto curve = calcexp_curve(ex);
        auto psi = psi_biform(s);
        auto scale = proportionality_scalar(curve, psi);
        json j;
        j["surface"] = json::parse(serialize(document_from_surface(field, s)));
        j["calcexp"] = curve_json(field, curve);
        j["singular_locus"] = curve_json(field, psi);
        j["equal"] = scale.has_value();
        j["scale"] = scale ? json(F::str(*scale)) : json(nullptr);
        return {j.dump(), 0};
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ruled surface singular-locus toolkit"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a surface document");
    gen->add_option("--kind", gen_args.kind, "type-a|cone|rank5|rank3|developable|boundary");
    gen->add_option("--d", gen_args.d, "map degree")->required();
    auto* aopt = gen->add_option("--a", gen_args.a, "splitting / inner degree");
    gen->add_option("--seed", gen_args.seed, "deterministic seed");
    gen->add_option("--field", gen_args.field_flag, "q or fp:P");

    std::string in_path = "-";
    auto* analyze = app.add_subcommand("analyze", "full report for a surface document");
    analyze->add_option("input", in_path, "file or - for stdin");

    std::string psi_path = "-", psi_method = "biform";
    auto* psi = app.add_subcommand("psi", "singular-locus curve of a surface document");
    psi->add_option("input", psi_path, "file or - for stdin");
    psi->add_option("--method", psi_method, "biform|det|both");

    std::string phi_path = "-";
    auto* phi = app.add_subcommand("phi", "coefficient quadratic form and its rank");
    phi->add_option("input", phi_path, "file or - for stdin");

    std::string dual_path = "-";
    auto* dual = app.add_subcommand("dual", "apply the wedge-coordinate duality");
    dual->add_option("input", dual_path, "file or - for stdin");

    std::string act_path = "-", act_pgl4_path, act_pgl2_path;
    auto* act = app.add_subcommand("act", "apply a coordinate change");
    act->add_option("input", act_path, "file or - for stdin");
    act->add_option("--pgl4", act_pgl4_path, "4x4 matrix document");
    act->add_option("--pgl2", act_pgl2_path, "2x2 matrix document");

    std::string tri_path = "-", tri_mode = "exact";
    auto* tri = app.add_subcommand("triangles", "count inscribed triangles of a cubic");
    tri->add_option("input", tri_path, "curve document file or - for stdin");
    tri->add_option("--mode", tri_mode, "exact or brute:P");

    int deg_d = 0;
    auto* deg = app.add_subcommand("degrees", "closed-form degree table");
    deg->add_option("--d", deg_d, "degree")->required();

    std::string ext_path = "-";
    auto* ext = app.add_subcommand("from-extension", "reconstruct a surface from an extension datum");
    ext->add_option("input", ext_path, "file or - for stdin");

    bool quick = false;
    auto* self = app.add_subcommand("selftest", "run the acceptance suite");
    self->add_flag("--quick", quick, "shrunken trial counts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << error_json(e.what()) << "\n";
        return 1;
    }

    try {
        if (gen->parsed()) {
            gen_args.a_given = aopt->count() > 0;
            return cmd_gen(gen_args);
        }
        if (analyze->parsed()) return run_lines(read_input(in_path), analyze_line);
        if (psi->parsed())
            return run_lines(read_input(psi_path), [&](const std::string& t) { return psi_line(t, psi_method); });
        if (phi->parsed()) return run_lines(read_input(phi_path), phi_line);
        if (dual->parsed()) return run_lines(read_input(dual_path), dual_line);
        if (act->parsed()) {
            if (act_pgl4_path.empty() == act_pgl2_path.empty())
                throw document_error("act needs exactly one of --pgl4 or --pgl2");
            const bool pgl4 = !act_pgl4_path.empty();
            MatrixDocument m = parse_matrix_document(read_input(pgl4 ? act_pgl4_path : act_pgl2_path));
            return run_lines(read_input(act_path),
                             [&](const std::string& t) { return act_line(t, m, pgl4); });
        }
        if (tri->parsed())
            return run_lines(read_input(tri_path), [&](const std::string& t) { return triangles_line(t, tri_mode); });
        if (deg->parsed()) return cmd_degrees(deg_d);
        if (ext->parsed()) return run_lines(read_input(ext_path), from_extension_line);
        if (self->parsed()) return run_acceptance(std::cout, quick) == 0 ? 0 : 1;
    } catch (const document_error& e) {
        std::cerr << error_json(e.what()) << "\n";
        return 1;
    } catch (const math_error& e) {
        std::cerr << error_json(e.what()) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << error_json(e.what()) << "\n";
        return 1;
    }
    return 0;
}
