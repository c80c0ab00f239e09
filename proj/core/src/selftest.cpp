#include "ruled/selftest.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "ruled/birational.hpp"
#include "ruled/degrees.hpp"
#include "ruled/poncelet.hpp"

namespace ruled {
namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

struct Crit {
    bool ok = true;
    std::string detail;
};

struct Tally {
    int checked = 0;
    int bad = 0;
    std::string first_error;

    void fail(const std::string& why) {
        ++bad;
        if (first_error.empty()) first_error = why;
    }
    template <class Fn>
    void run(Fn&& fn) {
        ++checked;
        try {
            if (!fn()) fail("predicate failed");
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }
};

template <class K, std::size_t N>
bool vec_proportional(const std::array<K, N>& x, const std::array<K, N>& y) {
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            if (x[i] * y[j] != x[j] * y[i]) return false;
    return true;
}

template <class F>
Matrix<typename F::Element> random_invertible4(const F& field, std::mt19937_64& rng) {
    using K = typename F::Element;
    for (;;) {
        Matrix<K> g(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) g(i, j) = field.random(rng);
        if (!g.det().is_zero()) return g;
    }
}

template <class F>
std::array<std::array<typename F::Element, 2>, 2> random_invertible2(const F& field, std::mt19937_64& rng) {
    using K = typename F::Element;
    for (;;) {
        std::array<std::array<K, 2>, 2> h{{{field.random(rng), field.random(rng)},
                                           {field.random(rng), field.random(rng)}}};
        if (h[0][0] * h[1][1] != h[0][1] * h[1][0]) return h;
    }
}

// product of deg random linear factors with recorded roots (r : 1)
template <class F>
BinaryForm<typename F::Element> random_split_form(const F& field, int deg, std::mt19937_64& rng,
                                                  std::vector<std::array<typename F::Element, 2>>* roots) {
    using K = typename F::Element;
    BinaryForm<K> xi(0);
    xi.coeff(0) = K(1);
    for (int i = 0; i < deg; ++i) {
        std::array<K, 2> p{field.random(rng), field.make(1)};
        BinaryForm<K> lin(1);
        lin.coeff(0) = p[1];
        lin.coeff(1) = -p[0];
        xi = xi * lin;
        if (roots) roots->push_back(p);
    }
    return xi;
}

// ---------------------------------------------------------------- criterion 1

template <class F>
void c1_field(const F& field, bool quick, Tally& t) {
    const int seeds = quick ? 10 : 100;
    for (int d = 3; d <= 8; ++d)
        for (int s = 0; s < seeds; ++s)
            t.run([&] {
                const int a = 1 + s % (d / 2);
                auto g = gen_type_a(field, d, a, mix_seed(0xc1a0u + static_cast<unsigned>(d), static_cast<std::uint64_t>(s)));
                auto tc = check_main_theorem(g.map);
                return tc.equal && !tc.scale.is_zero();
            });
}

Crit criterion1(bool quick) {
    auto t0 = Clock::now();
    Tally t;
    c1_field(QField{}, quick, t);
    c1_field(FpField(10007), quick, t);
    const long ms = ms_since(t0);
    std::ostringstream os;
    os << t.checked << " maps, " << ms << " ms";
    if (t.bad) os << "; first: " << t.first_error;
    bool ok = t.bad == 0 && ms < 60000;
    if (ms >= 60000) os << "; over the 60 s budget";
    return {ok, os.str()};
}

// ---------------------------------------------------------------- criterion 2

template <class F>
void c2_field(const F& field, int trials, std::uint64_t salt, Tally& t) {
    using K = typename F::Element;
    std::mt19937_64 rng(mix_seed(0xc2u, salt));
    for (int i = 0; i < trials; ++i)
        t.run([&] {
            const int d = 3 + i % 4;
            const int a = 1 + i % (d / 2);
            auto g = gen_type_a(field, d, a, mix_seed(salt, static_cast<std::uint64_t>(i)));
            PlaneCurve<K> psi0 = psi_biform(g.map);
            const std::size_t r0 = phi_rank(g.map);

            auto sd = dual_surface(g.map);
            if (!proportional(psi_biform(sd), psi0) || phi_rank(sd) != r0) return false;

            auto g4 = random_invertible4(field, rng);
            auto s4 = act_pgl4(g.map, g4);
            if (!proportional(psi_biform(s4), psi0) || phi_rank(s4) != r0) return false;

            auto h2 = random_invertible2(field, rng);
            auto s2 = act_pgl2(g.map, h2);
            PlaneCurve<K> expected = compose_linear(psi0, pair_space_action(h2));
            if (!proportional(psi_biform(s2), expected) || phi_rank(s2) != r0) return false;
            return true;
        });
}

Crit criterion2(bool quick) {
    Tally t;
    const int half = quick ? 25 : 250;
    c2_field(QField{}, half, 0x2a11u, t);
    c2_field(FpField(10007), half, 0x2b22u, t);
    std::ostringstream os;
    os << t.checked << " trials";
    if (t.bad) os << "; " << t.bad << " failed; first: " << t.first_error;
    return {t.bad == 0, os.str()};
}

// ---------------------------------------------------------------- criterion 3

SurfaceMap<Rational> worked_degree3_map() {
    std::array<BinaryForm<Rational>, 6> w;
    for (auto& f : w) f = BinaryForm<Rational>(3);
    w[0].coeff(0) = Rational(1);  // s^3
    w[1].coeff(1) = Rational(1);  // s^2 t
    w[2].coeff(2) = Rational(1);  // s t^2
    w[3].coeff(2) = Rational(1);  // s t^2
    w[4].coeff(3) = Rational(1);  // t^3
    return SurfaceMap<Rational>(w);
}

Crit criterion3(bool) {
    Tally t;
    auto s = worked_degree3_map();
    t.run([&] {
        Matrix<Rational> m = phi_matrix(s);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                Rational want(0);
                if ((i == 1 && j == 3) || (i == 3 && j == 1)) want = Rational(-1);
                if (i == 2 && j == 2) want = Rational(2);
                if (m(i, j) != want) return false;
            }
        return m.rank() == 3;
    });
    t.run([&] {
        PlaneCurve<Rational> e2(1);
        e2.coeff(0, 0) = Rational(1);
        auto b = psi_biform(s);
        auto det = psi_determinantal(s);
        if (!proportional(b, e2) || !proportional(det, e2)) return false;
        // bit-exact after leading normalization: coefficients (0, 0, 1)
        auto norm = [](const PlaneCurve<Rational>& c) {
            return c.coeff_at(0).is_zero() && c.coeff_at(1).is_zero() && !c.coeff_at(2).is_zero();
        };
        return norm(b) && norm(det);
    });
    t.run([&] {
        auto tc = check_main_theorem(s);
        return tc.equal && !tc.scale.is_zero();
    });
    std::ostringstream os;
    if (t.bad) os << t.bad << " of " << t.checked << " checks failed; first: " << t.first_error;
    else os << "matrix entries, rank and both singular-locus routes";
    return {t.bad == 0, os.str()};
}

// ---------------------------------------------------------------- criterion 4

template <class F>
void c4_field(const F& field, int d, int seeds, std::uint64_t salt, Tally& t) {
    for (int s = 0; s < seeds; ++s) {
        const std::uint64_t seed = mix_seed(salt, static_cast<std::uint64_t>(100 * d + s));
        t.run([&] { return phi_rank(gen_type_a(field, d, 2, seed).map) == 6; });
        t.run([&] { return phi_rank(gen_rank5(field, d, seed).map) == 5; });
        t.run([&] { return phi_rank(gen_cone(field, d, 2, seed).map) == 4; });
        t.run([&] { return phi_rank(gen_rank3(field, d, 2, seed).map) == 3; });
    }
}

Crit criterion4(bool quick) {
    Tally t;
    const int half = quick ? 3 : 10;
    for (int d = 5; d <= 7; ++d) {
        c4_field(QField{}, d, half, 0x4a01u, t);
        c4_field(FpField(10007), d, half, 0x4b02u, t);
    }
    std::ostringstream os;
    os << t.checked << " draws across the four strata";
    if (t.bad) os << "; " << t.bad << " failed; first: " << t.first_error;
    return {t.bad == 0, os.str()};
}

// ---------------------------------------------------------------- criterion 5

template <class F>
void c5_field(const F& field, int seeds, std::uint64_t salt, Tally& t) {
    for (int d = 3; d <= 8; ++d) {
        for (int a = 1; a <= d - 1; ++a)
            for (int s = 0; s < seeds; ++s)
                t.run([&] {
                    return cone_factorization_check(
                        gen_cone(field, d, a, mix_seed(salt, static_cast<std::uint64_t>(1000 * d + 10 * a + s))));
                });
        for (int a = 1; 2 * a <= d; ++a)
            for (int s = 0; s < seeds; ++s)
                t.run([&] {
                    return rank3_factorization_check(
                        gen_rank3(field, d, a, mix_seed(salt + 7, static_cast<std::uint64_t>(1000 * d + 10 * a + s))));
                });
    }
}

Crit criterion5(bool quick) {
    Tally t;
    const int half = quick ? 1 : 5;
    c5_field(QField{}, half, 0x5a0u, t);
    c5_field(FpField(10007), half, 0x5b0u, t);
    std::ostringstream os;
    os << t.checked << " factorizations over all degree/splitting pairs";
    if (t.bad) os << "; " << t.bad << " failed; first: " << t.first_error;
    return {t.bad == 0, os.str()};
}

// ---------------------------------------------------------------- criterion 6

template <class F>
void c6_field(const F& field, int seeds, std::uint64_t salt, Tally& t) {
    using K = typename F::Element;
    for (int dp = 3; dp <= 5; ++dp)
        for (int deg = 1; deg <= 3; ++deg)
            for (int s = 0; s < seeds; ++s)
                t.run([&] {
                    std::mt19937_64 rng(mix_seed(salt, static_cast<std::uint64_t>(100 * dp + 10 * deg + s)));
                    auto inner = gen_type_a(field, dp, 1 + s % (dp / 2),
                                            mix_seed(salt + 3, static_cast<std::uint64_t>(100 * dp + 10 * deg + s)));
                    BinaryForm<K> xi = random_split_form(field, deg, rng, nullptr);
                    return boundary_factorization_check(inner.map, xi);
                });
}

Crit criterion6(bool quick) {
    Tally t;
    const int half = quick ? 2 : 5;
    c6_field(QField{}, half, 0x6a0u, t);
    c6_field(FpField(10007), half, 0x6b0u, t);
    std::ostringstream os;
    os << t.checked << " composed maps";
    if (t.bad) os << "; " << t.bad << " failed; first: " << t.first_error;
    return {t.bad == 0, os.str()};
}

// ---------------------------------------------------------------- criterion 7

template <class F>
void c7_field(const F& field, int seeds, std::uint64_t salt, Tally& t) {
    using K = typename F::Element;
    for (int s = 0; s < seeds; ++s) {
        t.run([&] {
            auto g = gen_developable(field, 3, mix_seed(salt, static_cast<std::uint64_t>(s)));
            return proportional(psi_biform(g.map), veronese_conic<K>());
        });
        t.run([&] {
            auto g = gen_developable(field, 4, mix_seed(salt + 1, static_cast<std::uint64_t>(s)));
            return divide_by_conic(psi_biform(g.map)).has_value();
        });
    }
}

Crit criterion7(bool quick) {
    Tally t;
    const int half = quick ? 3 : 10;
    c7_field(QField{}, half, 0x7a0u, t);
    c7_field(FpField(10007), half, 0x7b0u, t);
    std::ostringstream os;
    os << t.checked << " tangent developables";
    if (t.bad) os << "; " << t.bad << " failed; first: " << t.first_error;
    return {t.bad == 0, os.str()};
}

// ---------------------------------------------------------------- criterion 8

constexpr std::uint64_t kBruteP = 101;

std::uint64_t point_key(const std::array<Fp, 2>& p) {
    if (!p[1].is_zero()) return static_cast<std::uint64_t>((p[0] / p[1]).residue());
    return kBruteP;
}

std::uint64_t triangle_key(std::array<std::uint64_t, 3> k) {
    std::sort(k.begin(), k.end());
    return (k[0] * (kBruteP + 1) + k[1]) * (kBruteP + 1) + k[2];
}

std::set<std::uint64_t> rational_roots(const BinaryForm<Fp>& s, const FpField& f) {
    std::set<std::uint64_t> out;
    for (std::uint64_t r = 0; r < kBruteP; ++r) {
        std::array<Fp, 2> p{f.make(static_cast<long>(r)), f.make(1)};
        if (s.eval_point(p).is_zero()) out.insert(r);
    }
    if (s.coeff(0).is_zero()) out.insert(kBruteP);
    return out;
}

// random member of the cubics through the given pair-space points
PlaneCurve<Fp> cubic_through(const FpField& f, const std::vector<std::array<Fp, 3>>& pts,
                             std::mt19937_64& rng) {
    PlaneCurve<Fp> proto(3);
    Matrix<Fp> m(pts.size(), PlaneCurve<Fp>::monomial_count(3));
    for (std::size_t r = 0; r < pts.size(); ++r)
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; a + b <= 3; ++b) {
                Fp v = f.make(1);
                for (int i = 0; i < a; ++i) v *= pts[r][0];
                for (int i = 0; i < b; ++i) v *= pts[r][1];
                for (int i = 0; i < 3 - a - b; ++i) v *= pts[r][2];
                m(r, proto.index(a, b)) = v;
            }
    auto kern = m.kernel();
    require(!kern.empty(), "no cubic through the prescribed points");
    for (;;) {
        std::vector<Fp> c(m.cols(), f.make(0));
        for (const auto& kv : kern) {
            Fp lambda = f.random(rng);
            for (std::size_t i = 0; i < c.size(); ++i) c[i] += lambda * kv[i];
        }
        bool nz = false;
        for (const auto& x : c) nz = nz || !x.is_zero();
        if (!nz) continue;
        PlaneCurve<Fp> out(3);
        for (std::size_t i = 0; i < c.size(); ++i) out.coeff_at(i) = c[i];
        return out;
    }
}

std::array<Fp, 3> pair_coords(const std::array<Fp, 2>& p, const std::array<Fp, 2>& q) {
    return {p[0] * q[0], p[0] * q[1] + p[1] * q[0], p[1] * q[1]};
}

// Pin the exact counter against exhaustive search before trusting it: brute
// vertices must be roots of the vertex form, the closure count bounds the
// rational one, prescribed rational triangles must be found, and on a fully
// split vertex form the two counts must agree exactly.
std::string calibrate_triangle_counter(int wanted) {
    FpField f(kBruteP);
    std::mt19937_64 rng(mix_seed(0xca11u, 0xb07u));
    int done = 0;
    for (int draw = 0; draw < 60 * wanted && done < wanted; ++draw) {
        const int cls = done % 3;  // 0 random, 1 one prescribed triangle, 2 two
        PlaneCurve<Fp> cubic(3);
        std::vector<std::uint64_t> pres;
        if (cls == 0) {
            for (std::size_t i = 0; i < cubic.coeffs().size(); ++i) cubic.coeff_at(i) = f.random(rng);
            if (cubic.is_zero()) continue;
        } else {
            const int npts = cls == 1 ? 3 : 6;
            std::set<std::uint64_t> used;
            while (used.size() < static_cast<std::size_t>(npts)) used.insert(rng() % kBruteP);
            pres.assign(used.begin(), used.end());
            std::vector<std::array<Fp, 2>> pp;
            for (auto r : pres) pp.push_back({f.make(static_cast<long>(r)), f.make(1)});
            std::vector<std::array<Fp, 3>> conds;
            for (int tri = 0; tri + 3 <= npts; tri += 3)
                for (int i = 0; i < 3; ++i)
                    for (int j = i + 1; j < 3; ++j)
                        conds.push_back(pair_coords(pp[static_cast<std::size_t>(tri + i)],
                                                    pp[static_cast<std::size_t>(tri + j)]));
            cubic = cubic_through(f, conds, rng);
        }
        TriangleCount<Fp> exact;
        try {
            exact = count_triangles_exact(cubic);
        } catch (const math_error&) {
            continue;
        }
        if (exact.status != TriangleStatus::Finite) continue;

        auto brute = find_triangles_bruteforce(cubic);

        // the counter strips self-incident parameters and parameters whose
        // incidence partner is self-incident, so compare against triangles
        // that stay away from those loci
        BiForm<Fp> lifted = cubic.lift();
        BinaryForm<Fp> rc = cubic.restrict_to_conic();
        auto clean_key = [&](std::uint64_t x) {
            std::array<Fp, 2> p{f.make(static_cast<long>(x % kBruteP)), f.make(x == kBruteP ? 0 : 1)};
            if (rc.eval_point(p).is_zero()) return false;
            BinaryForm<Fp> slice = lifted.eval_left(p);
            if (slice.is_zero()) return false;
            return poly_gcd(slice, rc).degree() == 0;
        };
        std::set<std::uint64_t> brute_tris, clean_tris, clean_pts;
        for (const auto& tri : brute) {
            std::array<std::uint64_t, 3> k{point_key(tri[0]), point_key(tri[1]), point_key(tri[2])};
            brute_tris.insert(triangle_key(k));
            if (clean_key(k[0]) && clean_key(k[1]) && clean_key(k[2])) {
                clean_tris.insert(triangle_key(k));
                for (auto x : k) clean_pts.insert(x);
            }
        }
        std::set<std::uint64_t> roots;
        if (exact.vertex_form.degree() > 0) roots = rational_roots(exact.vertex_form, f);

        for (auto x : clean_pts)
            if (!roots.count(x)) return "brute-force vertex missing from the vertex form";
        if (exact.count < static_cast<long>(clean_tris.size()))
            return "closure count below the rational count";
        if (static_cast<int>(roots.size()) == exact.vertex_form.degree() &&
            exact.count != static_cast<long>(clean_tris.size()))
            return "fully split vertex form but counts disagree";
        if (cls >= 1) {
            std::array<std::uint64_t, 3> a{pres[0], pres[1], pres[2]};
            if (!brute_tris.count(triangle_key(a))) return "prescribed triangle not found by brute force";
            // only triangles in general position are informative beyond this
            if (!clean_tris.count(triangle_key(a))) continue;
            for (int i = 0; i < 3; ++i)
                if (!roots.count(pres[static_cast<std::size_t>(i)])) return "prescribed vertex missing from the vertex form";
        }
        if (cls == 2) {
            std::array<std::uint64_t, 3> b{pres[3], pres[4], pres[5]};
            if (!brute_tris.count(triangle_key(b))) return "second prescribed triangle not found";
            if (!clean_tris.count(triangle_key(b))) continue;
            if (exact.count != 2) return "two prescribed triangles but count is not 2";
            if (clean_tris.size() != 2) return "brute force sees extra triangles";
            if (roots.size() != 6 || exact.vertex_form.degree() != 6)
                return "vertex form does not match the six prescribed vertices";
        }
        ++done;
    }
    if (done < wanted) return "could not draw enough clean cubics";
    return "";
}

template <class F>
void c8_probes(const F& field, int wanted, std::uint64_t salt, Tally& t) {
    int found = 0;
    for (std::uint64_t sd = 0; found < wanted && sd < static_cast<std::uint64_t>(8 * wanted); ++sd) {
        FiberProbe<typename F::Element> pr;
        try {
            auto g = gen_type_a(field, 5, 2, mix_seed(salt, sd));
            pr = quintic_fiber_probe(g.map);
        } catch (const math_error&) {
            continue;
        }
        if (pr.triangles.status == TriangleStatus::Indeterminate) continue;
        ++found;
        t.run([&] { return pr.triangles.status == TriangleStatus::Finite && pr.triangles.count == 2; });
    }
    t.run([&] { return found == wanted; });
}

Crit criterion8(bool quick) {
    Tally t;
    std::string calib = calibrate_triangle_counter(quick ? 8 : 20);
    if (!calib.empty()) return {false, "calibration: " + calib};
    c8_probes(QField{}, quick ? 3 : 10, 0x8a0u, t);
    c8_probes(FpField(10007), quick ? 3 : 10, 0x8b0u, t);
    for (int s = 0; s < (quick ? 1 : 3); ++s)
        t.run([&] {
            auto g = gen_cone(QField{}, 5, 2, mix_seed(0x8c0u, static_cast<std::uint64_t>(s)));
            return quintic_fiber_probe(g.map).triangles.status == TriangleStatus::Infinite;
        });
    // type-1 quintics live in the inscribed-pencil stratum: never a finite count
    for (int s = 0; s < (quick ? 1 : 3); ++s)
        t.run([&] {
            auto g = gen_type_a(QField{}, 5, 1, mix_seed(0x8d0u, static_cast<std::uint64_t>(s)));
            return quintic_fiber_probe(g.map).triangles.status != TriangleStatus::Finite;
        });
    std::ostringstream os;
    os << "calibrated counter, " << t.checked << " degree-5 probes";
    if (t.bad) os << "; " << t.bad << " failed; first: " << t.first_error;
    return {t.bad == 0, os.str()};
}

// ---------------------------------------------------------------- criterion 9

Crit criterion9(bool) {
    Tally t;
    for (int d = 3; d <= 30; ++d)
        t.run([&] {
            auto tab = stratum_degrees(d);
            const int n = d + 1;
            if (n >= 6 && tab.i != harris_tu_symmetric(n, 6)) return false;
            if (n >= 5 && tab.j != harris_tu_symmetric(n, 5)) return false;
            if (n >= 4 && tab.k != harris_tu_symmetric(n, 4)) return false;
            if (n >= 3 && tab.p != harris_tu_symmetric(n, 3)) return false;
            return true;
        });
    t.run([&] {
        for (int n = 1; n <= 20; ++n) {
            mpz_class catalan = binomial(2 * n, n) / mpz_class(n + 1);
            if (poncelet_degree(n) != catalan) return false;
        }
        return true;
    });
    t.run([&] { return stratum_degrees(6).i == 7 && stratum_degrees(5).j == 6 && stratum_degrees(3).p == 4; });
    t.run([&] {
        return poncelet_degree(3) == 5 && m_degree(2, 5) == 30 && boundary_degree(5, 4) == 12;
    });
    t.run([&] { return boundary_degree(4, 3) == 6; });
    std::ostringstream os;
    if (t.bad) os << t.bad << " of " << t.checked << " table checks failed; first: " << t.first_error;
    else os << "closed-formula tables up to degree 30";
    return {t.bad == 0, os.str()};
}

// --------------------------------------------------------------- criterion 10

template <class F>
void c10_field(const F& field, int seeds, std::uint64_t salt, Tally& t) {
    for (int n = 2; n <= 4; ++n)
        for (int s = 0; s < seeds; ++s)
            t.run([&] {
                auto ex = random_extension(field, n, mix_seed(salt, static_cast<std::uint64_t>(100 * n + s)));
                auto sm = extension_to_surface(ex);
                if (!proportional(calcexp_curve(ex), psi_biform(sm))) return false;
                return splitting_type(dual_surface(sm)).a_q == n;
            });
}

Crit criterion10(bool quick) {
    Tally t;
    const int seeds = quick ? 5 : 50;
    c10_field(QField{}, seeds, 0xaa0u, t);
    c10_field(FpField(10007), seeds, 0xab0u, t);
    std::ostringstream os;
    os << t.checked << " extension data";
    if (t.bad) os << "; " << t.bad << " failed; first: " << t.first_error;
    return {t.bad == 0, os.str()};
}

// --------------------------------------------------------------- criterion 11

template <class F>
void c11_field(const F& field, int iters, std::uint64_t salt, Tally& t) {
    using K = typename F::Element;
    std::mt19937_64 rng(mix_seed(0xc11u, salt));
    for (int i = 0; i < iters; ++i) {
        const int d = 4 + i % 4;
        const std::uint64_t seed = mix_seed(salt, static_cast<std::uint64_t>(i));
        t.run([&] {
            // all generators through one point
            for (int tries = 0; tries < 32; ++tries) {
                std::array<K, 4> pt{field.random(rng), field.random(rng), field.random(rng), field.random(rng)};
                bool pnz = false;
                for (const auto& x : pt) pnz = pnz || !x.is_zero();
                if (!pnz) continue;
                FormVec4<K> p, v;
                for (int j = 0; j < 4; ++j) {
                    p[static_cast<std::size_t>(j)] = BinaryForm<K>(0);
                    p[static_cast<std::size_t>(j)].coeff(0) = pt[static_cast<std::size_t>(j)];
                    v[static_cast<std::size_t>(j)] = random_form(d, field, rng);
                }
                auto w = wedge_of(p, v);
                bool nz = false;
                for (const auto& fm : w) nz = nz || !fm.is_zero();
                if (!nz) continue;
                auto rep = stability(SurfaceMap<K>(w));
                return rep.cls == StabilityClass::Unstable && rep.point_witness.has_value() &&
                       vec_proportional(*rep.point_witness, pt);
            }
            return false;
        });
        t.run([&] {
            auto g = gen_cone(field, d, 1 + i % (d - 1), seed);
            auto rep = stability(g.map);
            if (rep.cls != StabilityClass::StrictlySemistable || !rep.isotropic_witness.has_value())
                return false;
            const auto& z = *rep.isotropic_witness;
            return plucker_pairing(z, z).is_zero();
        });
        t.run([&] {
            auto rep = stability(gen_rank5(field, d, seed).map);
            return rep.cls == StabilityClass::Stable && rep.kernel_dim == 1;
        });
        t.run([&] {
            auto rep = stability(gen_type_a(field, 3, 1, seed).map);
            return rep.cls != StabilityClass::Stable && rep.kernel_dim >= 2;
        });
    }
}

Crit criterion11(bool quick) {
    Tally t;
    const int half = quick ? 5 : 50;
    c11_field(QField{}, half, 0xba0u, t);
    c11_field(FpField(10007), half, 0xbb0u, t);
    std::ostringstream os;
    os << t.checked << " classifications";
    if (t.bad) os << "; " << t.bad << " failed; first: " << t.first_error;
    return {t.bad == 0, os.str()};
}

// --------------------------------------------------------------- criterion 12

template <class F>
void c12_field(const F& field, int pairs, std::uint64_t salt, Tally& t, int& zeros) {
    using K = typename F::Element;
    std::mt19937_64 rng(mix_seed(0xc12u, salt));
    const int block = 25;
    for (int b = 0; b * block < pairs; ++b) {
        const int d = 3 + b % 5;
        auto g = gen_type_a(field, d, 1 + b % (d / 2), mix_seed(salt, static_cast<std::uint64_t>(b)));
        PlaneCurve<K> psi = psi_biform(g.map);
        auto rand_pt = [&]() -> std::array<K, 2> {
            if (rng() % 17 == 0) return {field.make(1), field.make(0)};
            return {field.random(rng), field.make(1)};
        };
        for (int i = 0; i < block && b * block + i < pairs; ++i)
            t.run([&] {
                std::array<K, 2> t0 = rand_pt(), t1 = rand_pt();
                while (t0[0] * t1[1] == t0[1] * t1[0]) t1 = rand_pt();
                const bool meet = lines_meet(g.map, t0, t1);
                const K val = psi.eval_at_pair(t0, t1);
                const bool det = lines_meet_det_oracle(generator_line(g.map, t0), generator_line(g.map, t1));
                if (val.is_zero()) ++zeros;
                return meet == val.is_zero() && meet == det;
            });
    }
}

// deliberately incident pairs so the meeting branch is exercised too
void c12_meeting_pairs(int wanted, Tally& t, int& zeros) {
    FpField f(kBruteP);
    std::mt19937_64 rng(mix_seed(0xc12u, 0x303u));
    int made = 0;
    for (int b = 0; made < wanted && b < 8 * wanted; ++b) {
        const int d = 3 + b % 4;
        auto g = gen_type_a(f, d, 1 + b % (d / 2), mix_seed(0xcc12u, static_cast<std::uint64_t>(b)));
        PlaneCurve<Fp> psi = psi_biform(g.map);
        for (int hunt = 0; hunt < 32 && made < wanted; ++hunt) {
            std::array<Fp, 2> t0{f.random(rng), f.make(1)};
            for (std::uint64_t r = 0; r < kBruteP; ++r) {
                std::array<Fp, 2> t1{f.make(static_cast<long>(r)), f.make(1)};
                if (t0[0] * t1[1] == t0[1] * t1[0]) continue;
                if (!psi.eval_at_pair(t0, t1).is_zero()) continue;
                ++made;
                t.run([&] {
                    const bool det =
                        lines_meet_det_oracle(generator_line(g.map, t0), generator_line(g.map, t1));
                    ++zeros;
                    return lines_meet(g.map, t0, t1) && det;
                });
                break;
            }
        }
    }
}

Crit criterion12(bool quick) {
    Tally t;
    int zeros = 0;
    const int half = quick ? 50 : 475;
    c12_field(QField{}, half, 0xca0u, t, zeros);
    c12_field(FpField(kBruteP), half, 0xcb0u, t, zeros);
    c12_meeting_pairs(quick ? 4 : 50, t, zeros);
    std::ostringstream os;
    os << t.checked << " pairs, " << zeros << " incident";
    bool ok = t.bad == 0 && zeros > 0;
    if (t.bad) os << "; " << t.bad << " failed; first: " << t.first_error;
    if (zeros == 0) os << "; the incident branch was never exercised";
    return {ok, os.str()};
}

}  // namespace

int run_acceptance(std::ostream& out, bool quick) {
    struct Entry {
        const char* name;
        Crit (*fn)(bool);
    };
    const Entry entries[12] = {
        {"two singular-locus routes agree up to a unit", criterion1},
        {"invariance under duality and coordinate changes", criterion2},
        {"degree-3 worked map reproduces frozen values", criterion3},
        {"coefficient-form ranks by stratum", criterion4},
        {"inscribed-polygon curve factorizations", criterion5},
        {"common-factor boundary factorization", criterion6},
        {"tangent-developable conic criterion", criterion7},
        {"degree-5 triangle count", criterion8},
        {"degree tables and closed formulas", criterion9},
        {"extension data reconstruct and match", criterion10},
        {"stability classification by construction", criterion11},
        {"meet oracle agreement", criterion12},
    };
    int failures = 0;
    auto t0 = Clock::now();
    for (int i = 0; i < 12; ++i) {
        Crit c;
        try {
            c = entries[i].fn(quick);
        } catch (const std::exception& e) {
            c = {false, std::string("exception: ") + e.what()};
        }
        if (!c.ok) ++failures;
        out << "[" << std::setw(2) << (i + 1) << "/12] " << (c.ok ? "PASS" : "FAIL") << "  "
            << entries[i].name;
        if (!c.detail.empty()) out << "  (" << c.detail << ")";
        out << "\n" << std::flush;
    }
    out << (failures == 0 ? "acceptance: all 12 criteria passed" : "acceptance: FAILURES") << " ["
        << ms_since(t0) << " ms total]\n";
    return failures;
}

}  // namespace ruled
