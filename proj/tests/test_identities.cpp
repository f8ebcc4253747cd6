#include <doctest.h>

#include <nonassoc/builtins.hpp>
#include <nonassoc/identities.hpp>
#include <nonassoc/registry.hpp>

using namespace nonassoc;

namespace {

std::string status(const std::string& algebra, const std::string& id, std::size_t trials = 100) {
    return check_identity(resolve_builtin_algebra(algebra), id, CheckMode::Both, trials, 1).status;
}

bool holds(const std::string& algebra, const std::string& id) {
    return status(algebra, id).rfind("holds", 0) == 0;
}

}  // namespace

TEST_CASE("catalog is sorted, ids unique, anchors present") {
    const auto& cat = identity_catalog();
    CHECK(cat.size() >= 20);
    for (std::size_t i = 1; i < cat.size(); ++i) CHECK(cat[i - 1].id < cat[i].id);
    for (const auto& d : cat) {
        CHECK_FALSE(d.id.empty());
        CHECK_FALSE(d.anchor.empty());
        CHECK(d.arity >= 1);
    }
    CHECK_THROWS_AS(find_identity("no-such-identity"), unknown_identity_error);
}

TEST_CASE("octonions: alternative, flexible, moufang, jordan — not associative") {
    CHECK(status("octonions", "alternative-laws") == "holds-exhaustive");
    CHECK(status("octonions", "flexibility") == "holds-exhaustive");
    CHECK(status("octonions", "moufang") == "holds-exhaustive");
    CHECK(status("octonions", "jordan-identity") == "holds-exhaustive");
    CHECK(holds("octonions", "power-assoc(6)"));
}

TEST_CASE("associative algebras pass everything structural") {
    for (const char* alg : {"quaternions", "mat2", "complex-as-real", "dual-numbers"}) {
        CHECK(holds(alg, "alternative-laws"));
        CHECK(holds(alg, "moufang"));
        CHECK(holds(alg, "power-assoc(4)"));
    }
}

TEST_CASE("hermitian 3x3 family is a jordan algebra; 4x4 is not power-associative") {
    CHECK(holds("H3", "jordan-identity"));
    CHECK(holds("H3", "power-assoc(6)"));
    IdentityReport h4 = check_identity(resolve_builtin_algebra("H4"), "power-assoc(4)",
                                       CheckMode::Both, 1000, 1);
    CHECK(h4.status == "fails");
    CHECK_FALSE(h4.witness.empty());
    REQUIRE(h4.residual_norm.has_value());
    CHECK(*h4.residual_norm > 0);
}

TEST_CASE("block families: 20-dim stays power-associative, 54-dim does not") {
    CHECK(holds("l44pp", "power-assoc(5)"));
    CHECK(holds("l44pp", "jordan-identity"));
    CHECK(status("l66pp", "power-assoc(4)") == "fails");
    CHECK(status("l66pp", "power-assoc(5)") == "fails");
}

TEST_CASE("malcev but not lie: imaginary octonions under the commutator") {
    CHECK(status("oct-imag-comm", "malcev") == "holds-exhaustive");
    IdentityReport jac = check_identity(resolve_builtin_algebra("oct-imag-comm"), "jacobi",
                                        CheckMode::Both, 100, 1);
    CHECK(jac.status == "fails");
    CHECK_FALSE(jac.witness.empty());
}

TEST_CASE("tabled commutative algebras and the operator identities") {
    CHECK(status("U3", "elementary-L") == "holds-exhaustive");
    CHECK(status("U3", "elementary-fundamental") == "holds-exhaustive");
    CHECK(status("U4", "elementary-L") == "holds-exhaustive");
    CHECK(status("U4", "elementary-fundamental") == "holds-exhaustive");
    IdentityReport u5l = check_identity(resolve_builtin_algebra("U5"), "elementary-L",
                                        CheckMode::Both, 100, 1);
    IdentityReport u5f = check_identity(resolve_builtin_algebra("U5"), "elementary-fundamental",
                                        CheckMode::Both, 100, 1);
    CHECK(u5l.status == "fails");
    CHECK(u5f.status == "fails");
    // Exhaustive-phase witnesses are basis tuples: every coefficient 0 or 1.
    for (const auto* rep : {&u5l, &u5f}) {
        REQUIRE_FALSE(rep->witness.empty());
        for (const auto& vec : rep->witness)
            for (const auto& c : vec) CHECK((c == 0 || c == 1));
    }
}

TEST_CASE("involution axioms run only when an involution exists") {
    auto reps = check_all(resolve_builtin_algebra("U4"), "all", CheckMode::Both, 20, 1);
    for (const auto& r : reps) CHECK(r.identity_id != "involution-axioms");
    CHECK(holds("octonions", "involution-axioms"));
}

TEST_CASE("profiles expand to known id sets; bare ids accepted; unknown rejected") {
    auto jordan = profile_ids("jordan");
    CHECK(jordan.size() == 7);
    auto single = profile_ids("moufang");
    REQUIRE(single.size() == 1);
    CHECK(single[0] == "moufang");
    CHECK(profile_ids("all").size() == identity_catalog().size());
    CHECK(profile_ids("").size() == identity_catalog().size());
    CHECK_THROWS_AS(profile_ids("not-a-profile"), input_error);
}

TEST_CASE("reports are deterministic in (identity, algebra, trials, seed)") {
    AlgebraPtr h3 = resolve_builtin_algebra("H3");
    IdentityReport a = check_identity(h3, "jordan-identity", CheckMode::Both, 50, 42);
    IdentityReport b = check_identity(h3, "jordan-identity", CheckMode::Both, 50, 42);
    CHECK(a.status == b.status);
    CHECK(a.trials == b.trials);
    CHECK(a.witness == b.witness);
    IdentityReport c = check_identity(h3, "jordan-identity", CheckMode::Both, 50, 43);
    CHECK(c.status == a.status);  // different seed, same verdict for a true identity
}

TEST_CASE("failure witnesses re-verify against the raw evaluator") {
    AlgebraPtr u5 = resolve_builtin_algebra("U5");
    IdentityReport rep = check_identity(u5, "lie-triple", CheckMode::Both, 200, 1);
    REQUIRE(rep.status == "fails");
    const IdentityDescriptor& d = find_identity("lie-triple");
    REQUIRE(rep.witness.size() == d.arity);
    std::vector<Element> args;
    for (const auto& v : rep.witness) args.push_back(u5->element(v));
    bool all_zero = true;
    for (const auto& r : d.eval(args))
        if (!r.is_zero()) all_zero = false;
    CHECK_FALSE(all_zero);
}

TEST_CASE("printed-coefficient variant verdicts are appended to the note") {
    IdentityReport rep = check_identity(resolve_builtin_algebra("quaternions"),
                                        "quasi-assoc-2.8", CheckMode::Both, 100, 1);
    CHECK(rep.note.find("variant") != std::string::npos);
}
