// Command-line front end: algebra catalog, identity checking against the
// built-in expectation table, and demo reproductions with anchored assertions.
//
// Exit codes: 0 all assertions/expectations met, 1 an assertion or expectation
// failed, 2 input error (unknown name, malformed algebra file, bad flag).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <nonassoc/nonassoc.hpp>

namespace {

using namespace nonassoc;

// ---------------------------------------------------------------------------
// Built-in expectation table (frozen verdicts; regenerate with the catalog
// checker when algebras or identities are added).
// ---------------------------------------------------------------------------

struct Expectation {
    const char* algebra;
    const char* identity;
    bool holds;
};

#include "expectations.inc"

const Expectation* find_expectation(const std::string& algebra, const std::string& identity) {
    for (const auto& e : kExpectations)
        if (algebra == e.algebra && identity == e.identity) return &e;
    return nullptr;
}

// ---------------------------------------------------------------------------
// Output sink: stdout plus optional --out file, byte-identical content.
// ---------------------------------------------------------------------------

struct Sink {
    std::optional<std::ofstream> file;

    explicit Sink(const std::string& out_path) {
        if (!out_path.empty()) {
            file.emplace(out_path);
            if (!*file) throw input_error("cannot open output file: " + out_path);
        }
    }
    void line(const std::string& s) {
        std::cout << s << "\n";
        if (file) *file << s << "\n";
    }
};

std::string oct_to_string(const OctonionQ& o) {
    std::string s;
    for (std::size_t k = 0; k < 8; ++k) {
        if (o.c[k] == 0) continue;
        std::string coef = rational_to_string(o.c[k]);
        std::string unit = (k == 0) ? "1" : "e" + std::to_string(k);
        if (!s.empty()) {
            if (coef[0] == '-') {
                s += " - ";
                coef = coef.substr(1);
            } else {
                s += " + ";
            }
        }
        if (k == 0)
            s += coef;
        else if (coef == "1")
            s += unit;
        else if (coef == "-1")
            s += "-" + unit;
        else
            s += coef + "*" + unit;
    }
    return s.empty() ? "0" : s;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("NONASSOC_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw input_error("NONASSOC_SEED is not an unsigned integer");
        }
    }
    return 1;
}

// ---------------------------------------------------------------------------
// catalog
// ---------------------------------------------------------------------------

int cmd_catalog(Sink& sink) {
    sink.line("builtin algebras:");
    for (const auto& name : builtin_algebra_names()) {
        auto alg = resolve_builtin_algebra(name);
        sink.line("  " + name + " dim=" + std::to_string(alg->dim()));
    }
    sink.line("identity catalog:");
    for (const auto& d : identity_catalog()) sink.line("  " + d.id + " ↦ " + d.anchor);
    return 0;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

int cmd_check(Sink& sink, const std::string& algebra_arg, const std::string& profile,
              std::size_t trials, std::uint64_t seed, bool slow) {
    AlgebraPtr alg;
    bool builtin = true;
    if (algebra_arg.rfind("file:", 0) == 0) {
        alg = load_algebra_file(algebra_arg.substr(5));
        builtin = false;
    } else {
        alg = resolve_builtin_algebra(algebra_arg);
    }
    const std::string aname = builtin ? algebra_arg : alg->name();

    bool surprise = false;
    for (auto& rep : check_all(alg, profile, CheckMode::Both, trials, seed)) {
        bool held = rep.status.rfind("holds", 0) == 0;
        const Expectation* exp = builtin ? find_expectation(aname, rep.identity_id) : nullptr;
        std::string verdict;
        if (!exp) {
            verdict = "no-expectation";
        } else if (held == exp->holds) {
            verdict = held ? "holds-as-expected" : "fails-as-expected";
        } else {
            verdict = held ? "surprise-holds" : "surprise-fails";
            surprise = true;
        }
        rep.note = rep.note.empty() ? verdict : rep.note + "; " + verdict;
        sink.line(report_to_json_line(rep));
    }

    // Symmetric associative bilinear forms for the Hermitian matrix families;
    // the 52-dimensional solve runs only when --slow is given.
    if (aname == "H2" || aname == "H3" || (aname == "H4" && slow)) {
        BilinearFormSpace forms = find_associative_symmetric_forms(alg);
        nlohmann::json j;
        j["algebra"] = aname;
        j["check"] = "bilinear-form";
        j["space_dim"] = forms.basis.size();
        j["nondegenerate"] = forms.has_nondegenerate;
        sink.line(j.dump());
        if (forms.basis.empty() || !forms.has_nondegenerate) surprise = true;
    }
    return surprise ? 1 : 0;
}

// ---------------------------------------------------------------------------
// demo helpers
// ---------------------------------------------------------------------------

struct DemoRun {
    Sink& sink;
    bool all_pass = true;

    void header(const std::string& name, const std::vector<std::string>& anchors) {
        nlohmann::json j;
        j["demo"] = name;
        j["assertions"] = anchors;
        sink.line(j.dump());
    }
    void record(nlohmann::json j, bool pass) {
        j["pass"] = pass;
        sink.line(j.dump());
        all_pass = all_pass && pass;
    }
    int exit_code() const { return all_pass ? 0 : 1; }
};

// ---------------------------------------------------------------------------
// demo ruhaak
// ---------------------------------------------------------------------------

int demo_ruhaak(Sink& sink) {
    DemoRun run{sink};
    run.header("ruhaak", {"d12 = 2i3 (A^2 o A^2 probe entry)",
                          "d12* = i3 ((A^2 o A) o A probe entry)",
                          "A^2 o A^2 differs from (A^2 o A) o A",
                          "scalar control stays power-associative"});
    RuhaakReport rep = ruhaak_counterexample();
    OctonionQ i3 = OctonionQ::basis(1);  // i3 is realized on the unit e1

    nlohmann::json a1;
    a1["assert"] = "d12 = 2i3";
    a1["value"] = oct_to_string(rep.square_square_entry);
    run.record(a1, rep.square_square_entry == Rational(2) * i3);

    nlohmann::json a2;
    a2["assert"] = "d12* = i3";
    a2["value"] = oct_to_string(rep.cube_times_a_starred);
    run.record(a2, rep.cube_times_a_starred == i3);

    nlohmann::json a3;
    a3["assert"] = "fourth-power bracketings differ";
    run.record(a3, rep.distinct);

    nlohmann::json a4;
    a4["assert"] = "scalar control equal";
    run.record(a4, rep.rational_control_equal);
    return run.exit_code();
}

// ---------------------------------------------------------------------------
// demo kalscheuer
// ---------------------------------------------------------------------------

int demo_kalscheuer(Sink& sink, double w, bool reciprocal, std::size_t trials,
                    std::uint64_t seed) {
    NearFieldParams p;
    p.w = w;
    p.reciprocal_convention = reciprocal;
    std::mt19937_64 rng(seed);
    DemoRun run{sink};

    if (w == 0.0) {
        run.header("kalscheuer", {"w = 0 reduces to quaternions"});
        double worst = 0.0;
        for (std::size_t t = 0; t < trials; ++t) {
            ApproxQuaternion a = random_quaternion(rng), b = random_quaternion(rng);
            worst = std::max(worst, quat_dist(kalscheuer_mul(a, b, p), quat_mul(a, b)));
        }
        nlohmann::json j;
        j["assert"] = "reduces to quaternions";
        j["max_residual"] = worst;
        run.record(j, worst < 1e-14);
        return run.exit_code();
    }

    run.header("kalscheuer", {"left distributivity", "norm multiplicativity",
                              "twist-factor multiplicativity", "associativity",
                              "right-distributivity violation witness",
                              "limit product oscillates"});
    double left = 0.0, norm = 0.0, twist = 0.0, assoc = 0.0, right = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        ApproxQuaternion a = random_quaternion(rng), b = random_quaternion(rng),
                         c = random_quaternion(rng);
        left = std::max(left, distributor(b, c, a, [&](const auto& x, const auto& y) {
                                  return kalscheuer_mul(y, x, p);
                              }).abs());
        double nm = std::fabs(kalscheuer_mul(a, b, p).norm() - a.norm() * b.norm());
        norm = std::max(norm, nm / std::max(1.0, a.norm() * b.norm()));
        ApproxQuaternion ab = kalscheuer_mul(a, b, p);
        if (!ab.is_zero())
            twist = std::max(twist, quat_dist(twist_factor(ab, p),
                                              quat_mul(twist_factor(a, p), twist_factor(b, p))));
        assoc = std::max(assoc, quat_dist(kalscheuer_mul(kalscheuer_mul(a, b, p), c, p),
                                          kalscheuer_mul(a, kalscheuer_mul(b, c, p), p)));
        right = std::max(right, distributor(a, b, c, [&](const auto& x, const auto& y) {
                                    return kalscheuer_mul(x, y, p);
                                }).abs());
    }
    auto residual_record = [&](const std::string& what, double r, double tol) {
        nlohmann::json j;
        j["assert"] = what;
        j["max_residual"] = r;
        run.record(j, r < tol);
    };
    residual_record("left distributivity", left, 1e-10);
    residual_record("norm multiplicativity", norm, 1e-10);
    residual_record("twist-factor multiplicativity", twist, 1e-10);
    residual_record("associativity", assoc, 1e-10);

    nlohmann::json jr;
    jr["assert"] = "right-distributivity violation";
    jr["witness_residual"] = right;
    run.record(jr, right > 1e-3);

    std::vector<double> lambdas;
    for (int k = 1; k <= 40; ++k) lambdas.push_back(1.0 / k);
    ApproxQuaternion a{{1.3, 0.4, -0.7, 0.2}}, b{{0.5, -1.1, 0.6, 0.9}};
    LimitProbeReport probe = limit_product_probe(a, b, p, lambdas);
    nlohmann::json jo;
    jo["assert"] = "limit product oscillates";
    run.record(jo, !probe.converged);
    return run.exit_code();
}

// ---------------------------------------------------------------------------
// demo haehl
// ---------------------------------------------------------------------------

int demo_haehl(Sink& sink, std::size_t trials, std::uint64_t seed) {
    DemoRun run{sink};
    run.header("haehl", {"identity kink matches octonion product on basis pairs",
                         "left distributivity structurally exact",
                         "cubic kink breaks right distributivity",
                         "alternative laws at the octonion point"});
    std::mt19937_64 rng(seed);

    HaehlParams id_p;  // alpha = 1, rho = identity
    double basis_worst = 0.0;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            Vec8 a{}, x{};
            a[i] = 1.0;
            x[j] = 1.0;
            ApproxOctonion lhs = haehl_to_octonion(haehl_mul(a, x, id_p));
            ApproxOctonion rhs = oct_mul(haehl_to_octonion(a), haehl_to_octonion(x));
            basis_worst = std::max(basis_worst, (lhs - rhs).abs());
        }
    nlohmann::json j1;
    j1["assert"] = "matches octonions on 64 basis pairs";
    j1["max_residual"] = basis_worst;
    run.record(j1, basis_worst < 1e-12);

    HaehlParams cubic;
    cubic.rho = RhoFamily::Cubic;
    auto rand_vec = [&rng]() {
        std::uniform_real_distribution<double> d(-2.0, 2.0);
        Vec8 v{};
        for (auto& c : v) c = d(rng);
        return v;
    };
    double left = 0.0, right = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        Vec8 a = rand_vec(), x = rand_vec(), y = rand_vec();
        left = std::max(left, vec8_max_abs(vec8_sub(
                                  haehl_mul(a, vec8_add(x, y), cubic),
                                  vec8_add(haehl_mul(a, x, cubic), haehl_mul(a, y, cubic)))));
        right = std::max(right, vec8_max_abs(vec8_sub(
                                    haehl_mul(vec8_add(a, x), y, cubic),
                                    vec8_add(haehl_mul(a, y, cubic), haehl_mul(x, y, cubic)))));
    }
    nlohmann::json j2;
    j2["assert"] = "left distributivity";
    j2["max_residual"] = left;
    run.record(j2, left < 1e-12);

    nlohmann::json j3;
    j3["assert"] = "right-distributivity violation";
    j3["witness_residual"] = right;
    run.record(j3, right > 1e-3);

    double alt = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        Vec8 a = rand_vec(), x = rand_vec();
        // a(ax) = (a·a)x and (xa)a = x(a·a) across the correspondence.
        ApproxOctonion ao = haehl_to_octonion(a), xo = haehl_to_octonion(x);
        alt = std::max(alt, (oct_mul(ao, oct_mul(ao, xo)) - oct_mul(oct_mul(ao, ao), xo)).abs());
        alt = std::max(alt, (oct_mul(oct_mul(xo, ao), ao) - oct_mul(xo, oct_mul(ao, ao))).abs());
    }
    nlohmann::json j4;
    j4["assert"] = "alternative laws";
    j4["max_residual"] = alt;
    run.record(j4, alt < 1e-10);
    return run.exit_code();
}

// ---------------------------------------------------------------------------
// demo pnr
// ---------------------------------------------------------------------------

int demo_pnr(Sink& sink, std::size_t trials, std::uint64_t seed) {
    DemoRun run{sink};
    run.header("pnr", {"addition is non-commutative", "right distributivity exact",
                       "multiplication associativity exact", "f * 0 = 0",
                       "monomial left factors distribute; general ones do not"});

    PNRElement x1 = pnr_monomial(Rational(1), 1), x2 = pnr_monomial(Rational(1), 2);
    nlohmann::json j1;
    j1["assert"] = "addition non-commutative";
    j1["lhs"] = pnr_to_string(pnr_add(x1, x2));
    j1["rhs"] = pnr_to_string(pnr_add(x2, x1));
    run.record(j1, !(pnr_add(x1, x2) == pnr_add(x2, x1)));

    std::mt19937_64 rng(seed);
    bool right_ok = true, assoc_ok = true, zero_ok = true;
    for (std::size_t t = 0; t < trials; ++t) {
        PNRElement f = random_pnr_word(rng), g = random_pnr_word(rng), h = random_pnr_word(rng);
        right_ok = right_ok &&
                   pnr_mul(pnr_add(f, g), h) == pnr_add(pnr_mul(f, h), pnr_mul(g, h));
        assoc_ok = assoc_ok && pnr_mul(pnr_mul(f, g), h) == pnr_mul(f, pnr_mul(g, h));
        zero_ok = zero_ok && pnr_mul(f, pnr_zero()) == pnr_zero();
    }
    nlohmann::json j2;
    j2["assert"] = "right distributivity";
    j2["trials"] = trials;
    run.record(j2, right_ok);
    nlohmann::json j3;
    j3["assert"] = "multiplication associativity";
    j3["trials"] = trials;
    run.record(j3, assoc_ok);
    nlohmann::json j4;
    j4["assert"] = "f * 0 = 0";
    j4["trials"] = trials;
    run.record(j4, zero_ok);

    PNRElement f = pnr_add(pnr_monomial(Rational(1), 1), pnr_monomial(Rational(1), 2));
    PNRElement g = pnr_monomial(Rational(1), 1);
    PNRDistributivityReport rep = pnr_generator_left_distributive_check(2, f, g, 200, seed);
    nlohmann::json j5;
    j5["assert"] = "generator left distributivity + general-factor failure witness";
    run.record(j5, rep.generator_distributes && rep.failure_found);
    return run.exit_code();
}

// ---------------------------------------------------------------------------
// demo fl
// ---------------------------------------------------------------------------

int demo_fl(Sink& sink) {
    DemoRun run{sink};
    run.header("fl", {"x^2 x^2 = x^4 + 2e", "operator form matches the product to degree 40",
                      "[D, L(x)] = 1 to degree 39",
                      "exponential identity exact to total degree 12"});

    FLElement x = FLElement::monomial(1);
    FLElement x2 = fl_mul(x, x);
    FLElement lhs = fl_mul(x2, x2);
    FLElement x4 = fl_mul(fl_mul(x2, x), x);
    FLElement diff = lhs - x4;
    bool sq_ok = diff.coeffs.size() == 1 && diff.coeffs.count(0) == 1 &&
                 diff.coeffs.at(0) == CRational(Rational(2));
    nlohmann::json j1;
    j1["assert"] = "x^2 x^2 = x^4 + 2e";
    j1["difference_degree0"] = diff.coeffs.count(0) ? rational_to_string(diff.coeffs.at(0).re) : "0";
    run.record(j1, sq_ok);

    // Exact coefficient table of the low-degree monomial products.
    nlohmann::json table;
    for (unsigned mu = 0; mu <= 6; ++mu)
        for (unsigned nu = 0; nu <= 6; ++nu) {
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [deg, coef] : fl_monomial_product(mu, nu))
                terms.push_back({deg, rational_to_string(coef)});
            table[std::to_string(mu) + "," + std::to_string(nu)] = terms;
        }
    nlohmann::json jt;
    jt["monomial_product_table"] = table;
    sink.line(jt.dump());

    // Operator form to the full truncation, with L/D powers built
    // incrementally so the check stays fast.
    const unsigned K = fl_default_truncation;
    RatMatrix L = fl_shift_matrix(K), D = fl_derivative_matrix(K);
    std::vector<RatMatrix> Lp{RatMatrix::identity(K + 1)}, Dp{RatMatrix::identity(K + 1)};
    for (unsigned k = 1; k <= K; ++k) {
        Lp.push_back(L * Lp.back());
        Dp.push_back(Dp.back() * D);
    }
    bool op_ok = true;
    for (unsigned mu = 0; mu <= K && op_ok; ++mu) {
        RatMatrix acc(K + 1, K + 1);
        for (unsigned rho = 0; 2 * rho <= mu; ++rho)
            acc = acc + Rational(binomial(mu, 2 * rho)) * (Lp[mu - 2 * rho] * Dp[2 * rho]);
        RatMatrix direct = fl_direct_matrix(mu, K);
        for (unsigned nu = 0; mu + nu <= K && op_ok; ++nu)
            for (unsigned r = 0; r <= K; ++r)
                if (acc(r, nu) != direct(r, nu)) op_ok = false;
    }
    nlohmann::json j2;
    j2["assert"] = "operator form matches product";
    run.record(j2, op_ok);
    bool comm_ok = true;
    RatMatrix comm = D * L - L * D;
    for (unsigned c = 0; c < K && comm_ok; ++c)
        for (unsigned r = 0; r <= K; ++r)
            if (comm(r, c) != (r == c ? Rational(1) : Rational(0))) comm_ok = false;
    nlohmann::json j3;
    j3["assert"] = "[D, L(x)] = 1";
    run.record(j3, comm_ok);

    ExpIdentityReport ex = exp_identity_check(12);
    nlohmann::json j4;
    j4["assert"] = "exponential identity";
    j4["total_degree"] = ex.total_degree;
    run.record(j4, ex.equal);
    return run.exit_code();
}

// ---------------------------------------------------------------------------
// demo biedenharn
// ---------------------------------------------------------------------------

Rational random_small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return make_rational(num(rng), den(rng));
}

int demo_biedenharn(Sink& sink, std::size_t trials, std::uint64_t seed) {
    DemoRun run{sink};
    run.header("biedenharn", {"oscillator factorization A+A- = A^2 * Id",
                              "third power of H is order-sensitive"});
    std::mt19937_64 rng(seed);
    bool fact_ok = true;
    for (std::size_t t = 0; t < trials && fact_ok; ++t) {
        OscillatorParams p;
        p.p0 = random_small_rational(rng);
        p.p1 = random_small_rational(rng);
        p.p2 = random_small_rational(rng);
        p.p3 = random_small_rational(rng);
        p.a1 = CRational{random_small_rational(rng), random_small_rational(rng)};
        p.a2 = CRational{random_small_rational(rng), random_small_rational(rng)};
        FactorizationReport rep = biedenharn_factorization(p);
        fact_ok = rep.plus_minus_ok && rep.minus_plus_ok;
    }
    nlohmann::json j1;
    j1["assert"] = "factorization exact";
    j1["trials"] = trials;
    run.record(j1, fact_ok);

    OscillatorParams p;
    p.p0 = Rational(1);
    p.p1 = Rational(1, 2);
    p.p2 = Rational(2, 3);
    p.p3 = Rational(1, 3);
    p.a1 = CRational{Rational(1), Rational(1, 2)};
    p.a2 = CRational{Rational(2), Rational(-1, 3)};
    PowerCheckReport pc = biedenharn_power_check(p);
    nlohmann::json j2;
    j2["assert"] = "H(HH) != (HH)H";
    if (pc.non_associative) {
        j2["entry"] = {pc.entry_i, pc.entry_j};
        j2["lhs"] = oct_to_string(pc.left);
        j2["rhs"] = oct_to_string(pc.right);
    }
    run.record(j2, pc.non_associative);
    return run.exit_code();
}

// ---------------------------------------------------------------------------
// demo qform
// ---------------------------------------------------------------------------

OctonionQ random_octonion_q(std::mt19937_64& rng, const std::vector<std::size_t>& support) {
    OctonionQ o;
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    for (std::size_t k : support) o.c[k] = make_rational(num(rng), den(rng));
    return o;
}

int demo_qform(Sink& sink, std::size_t trials, std::uint64_t seed) {
    DemoRun run{sink};
    run.header("qform", {"0 <= Q <= N(r)N(n) on quaternionic inputs",
                         "octonionic inputs can drive Q negative",
                         "normalized quartic ratio stays non-negative"});
    std::mt19937_64 rng(seed);
    const std::vector<std::size_t> quat_support{0, 1, 2, 4};
    const std::vector<std::size_t> oct_support{0, 1, 2, 3, 4, 5, 6, 7};

    bool bounds_ok = true;
    for (std::size_t t = 0; t < trials && bounds_ok; ++t) {
        QInput in;
        for (int k = 0; k < 3; ++k) {
            in.x.push_back(random_octonion_q(rng, quat_support));
            in.y.push_back(random_octonion_q(rng, quat_support));
        }
        Rational q = q_form(in);
        bounds_ok = q >= 0 && q <= q_norm_bound(in);
    }
    nlohmann::json j1;
    j1["assert"] = "quaternionic bounds";
    j1["trials"] = trials;
    run.record(j1, bounds_ok);

    bool negative_found = false;
    std::string witness_value;
    for (std::size_t t = 0; t < 20000 && !negative_found; ++t) {
        QInput in;
        for (int k = 0; k < 3; ++k) {
            in.x.push_back(random_octonion_q(rng, oct_support));
            in.y.push_back(random_octonion_q(rng, oct_support));
        }
        try {
            Rational q = q_form(in);
            if (q < 0) {
                negative_found = true;
                witness_value = rational_to_string(q);
            }
        } catch (const non_real_result_error&) {
            // Generic octonionic inputs need not give a real value; skip.
        }
    }
    nlohmann::json j2;
    j2["assert"] = "octonionic Q < 0 witness";
    if (negative_found) j2["value"] = witness_value;
    run.record(j2, negative_found);

    bool ratio_ok = true;
    std::size_t ratio_trials = trials / 2 == 0 ? 1 : trials / 2;
    for (std::size_t t = 0; t < ratio_trials && ratio_ok; ++t) {
        OctonionQ x1 = random_octonion_q(rng, quat_support);
        OctonionQ y2 = random_octonion_q(rng, quat_support);
        if ((x1 * y2).norm() == 0) continue;
        Rational q = hasse_jordan_q(x1, random_octonion_q(rng, quat_support),
                                    random_octonion_q(rng, quat_support),
                                    random_octonion_q(rng, quat_support), y2,
                                    random_octonion_q(rng, quat_support));
        ratio_ok = q >= 0;
    }
    nlohmann::json j3;
    j3["assert"] = "normalized quartic ratio non-negative";
    j3["trials"] = ratio_trials;
    run.record(j3, ratio_ok);
    return run.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checker for non-associative algebra identities and reproductions"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "also write the report to this file")->capture_default_str();

    auto* catalog = app.add_subcommand("catalog", "list builtin algebras and the identity catalog");

    auto* check = app.add_subcommand("check", "run identity checks against expectations");
    std::string algebra, profile = "all";
    std::size_t trials = 100;
    std::optional<std::uint64_t> seed_flag;
    bool slow = false;
    check->add_option("--algebra", algebra, "builtin name or file:PATH")->required();
    check->add_option("--profile", profile, "identity profile or single identity id");
    check->add_option("--trials", trials, "randomized trials per identity");
    check->add_option("--seed", seed_flag, "random seed (default: NONASSOC_SEED or 1)");
    check->add_flag("--slow", slow, "enable the 52-dimensional bilinear-form solve");

    auto* demo = app.add_subcommand("demo", "run a named reproduction");
    std::string demo_name;
    double w = 1.0;
    double tolerance = 0.0;  // accepted for interface compatibility; demos use fixed bounds
    std::string convention = "standard";
    std::size_t demo_trials = 0;  // 0 = per-demo default
    std::optional<std::uint64_t> demo_seed_flag;
    demo->add_option("name", demo_name, "ruhaak|kalscheuer|haehl|pnr|fl|biedenharn|qform")
        ->required();
    demo->add_option("--w", w, "twist exponent for the kalscheuer demo");
    demo->add_option("--trials", demo_trials, "randomized trials (0 = demo default)");
    demo->add_option("--seed", demo_seed_flag, "random seed (default: NONASSOC_SEED or 1)");
    demo->add_option("--tolerance", tolerance, "unused override hook for near-structure demos");
    demo->add_option("--kalscheuer-convention", convention,
                     "standard (exponent w) or reciprocal (exponent 1/w)")
        ->check(CLI::IsMember({"standard", "reciprocal"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Sink sink(out_path);
        if (catalog->parsed()) return cmd_catalog(sink);
        if (check->parsed())
            return cmd_check(sink, algebra, profile, trials, resolve_seed(seed_flag), slow);
        if (demo->parsed()) {
            std::uint64_t seed = resolve_seed(demo_seed_flag);
            auto n = [&](std::size_t dflt) { return demo_trials == 0 ? dflt : demo_trials; };
            if (demo_name == "ruhaak") return demo_ruhaak(sink);
            if (demo_name == "kalscheuer")
                return demo_kalscheuer(sink, w, convention == "reciprocal", n(10000), seed);
            if (demo_name == "haehl") return demo_haehl(sink, n(500), seed);
            if (demo_name == "pnr") return demo_pnr(sink, n(1000), seed);
            if (demo_name == "fl") return demo_fl(sink);
            if (demo_name == "biedenharn") return demo_biedenharn(sink, n(100), seed);
            if (demo_name == "qform") return demo_qform(sink, n(1000), seed);
            throw input_error("unknown demo: " + demo_name);
        }
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
