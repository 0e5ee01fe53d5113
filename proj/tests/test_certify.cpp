#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "magiclab/certify.hpp"
#include "magiclab/construct.hpp"

using namespace magiclab;

TEST_CASE("Q_4 distance magic certificate: diameter rule plus kernel witness") {
    auto cert = certify_not_distance_magic(IntersectionArray::hypercube(4), /*all_rules=*/true);
    REQUIRE(cert.has_value());
    REQUIRE(cert->rules.size() == 2);
    CHECK(cert->rules[0].rule == "diameter-congruence");
    CHECK(cert->rules[0].diameter == 4);
    CHECK(cert->rules[1].rule == "kernel-sign");
    CHECK(cert->rules[1].kernel == std::vector<Rational>({1, 0, -2, 0, 1}));
    CHECK(recheck(*cert).ok);

    auto first_only = certify_not_distance_magic(IntersectionArray::hypercube(4));
    REQUIRE(first_only.has_value());
    CHECK(first_only->rules.size() == 1);
}

TEST_CASE("distance magic certificates and non-obstructions across instances") {
    CHECK(certify_not_distance_magic(IntersectionArray::hypercube(8)).has_value());
    CHECK(certify_not_distance_magic(IntersectionArray::parse("{4,3,2,1;1,2,3,4}")).has_value());
    CHECK_FALSE(certify_not_distance_magic(IntersectionArray::hypercube(6)).has_value());
    CHECK_FALSE(certify_not_distance_magic(IntersectionArray::hypercube(10)).has_value());

    // odd degree: Petersen and Q_3 fall to the parity rule
    auto pet = certify_not_distance_magic(IntersectionArray::parse("{3,2;1,1}"));
    REQUIRE(pet.has_value());
    CHECK(pet->rules[0].rule == "odd-degree-parity");
    CHECK(pet->rules[0].degree == 3);
    CHECK(pet->rules[0].order == 10);
    CHECK(recheck(*pet).ok);

    auto q3 = certify_not_distance_magic(IntersectionArray::hypercube(3));
    REQUIRE(q3.has_value());
    CHECK(q3->rules[0].rule == "odd-degree-parity");
}

TEST_CASE("closed distance magic certificates") {
    auto q3 = certify_not_closed_magic(3);
    REQUIRE(q3.has_value());
    CHECK(q3->rules[0].rule == "closed-parity");
    CHECK(q3->rules[0].p == 2);
    CHECK(q3->rules[0].kernel == std::vector<Rational>({1, -1, -1, 1}));
    CHECK(recheck(*q3).ok);

    auto q4 = certify_not_closed_magic(4);
    REQUIRE(q4.has_value());
    CHECK(q4->rules[0].rule == "kernel-trivial");
    CHECK(q4->rules[0].eigenvalues == std::vector<long long>({4, 2, 0, -2, -4}));
    CHECK(recheck(*q4).ok);

    CHECK(certify_not_closed_magic(6).has_value());
    CHECK(certify_not_closed_magic(7).has_value());
    CHECK_FALSE(certify_not_closed_magic(1).has_value());
    CHECK_FALSE(certify_not_closed_magic(5).has_value());
    CHECK_FALSE(certify_not_closed_magic(9).has_value());
}

TEST_CASE("closed certificates for general antipodal arrays") {
    // The Hadamard array has ker(I+B) trivial: eigenvalues are even.
    auto had = certify_not_closed_magic_array(IntersectionArray::parse("{4,3,2,1;1,2,3,4}"));
    REQUIRE(had.has_value());
    CHECK(had->rules[0].rule == "kernel-trivial");
    CHECK(recheck(*had).ok);

    // Not an antipodal double cover: the kernel rules stay silent.
    CHECK_FALSE(certify_not_closed_magic_array(IntersectionArray::parse("{3,2;1,1}")).has_value());
}

TEST_CASE("soundness cross-check: constructor success and certificates partition n <= 14") {
    for (int n = 1; n <= 14; ++n) {
        bool cert_fires = certify_not_distance_magic(IntersectionArray::hypercube(n)).has_value();
        bool construct_ok = true;
        try {
            distance_magic_labeling(n);
        } catch (const std::invalid_argument&) {
            construct_ok = false;
        }
        CHECK(construct_ok == (n % 4 == 2));
        CHECK(cert_fires != construct_ok);

        bool closed_cert = certify_not_closed_magic(n).has_value();
        bool closed_ok = true;
        try {
            closed_magic_labeling(n);
        } catch (const std::invalid_argument&) {
            closed_ok = false;
        }
        CHECK(closed_ok == (n % 4 == 1));
        CHECK(closed_cert != closed_ok);
    }
}

TEST_CASE("certificates serialize, round-trip bit-exactly, and recheck") {
    std::vector<Certificate> certs;
    certs.push_back(*certify_not_distance_magic(IntersectionArray::hypercube(4), true));
    certs.push_back(*certify_not_distance_magic(IntersectionArray::hypercube(8)));
    certs.push_back(*certify_not_distance_magic(IntersectionArray::parse("{3,2;1,1}")));
    certs.push_back(*certify_not_closed_magic(3));
    certs.push_back(*certify_not_closed_magic(4));
    certs.push_back(*certify_not_closed_magic(7, true));
    for (auto& cert : certs) {
        CHECK(recheck(cert).ok);
        std::string once = cert.json();
        Certificate back = Certificate::parse(once);
        CHECK(back.json() == once);
        CHECK(recheck(back).ok);
    }
}

TEST_CASE("tampered witnesses fail recheck with a diff") {
    Certificate cert = *certify_not_distance_magic(IntersectionArray::hypercube(4), true);

    Certificate perturbed = cert;
    perturbed.rules[1].kernel[2] = perturbed.rules[1].kernel[2] + Rational(1);
    RecheckResult r1 = recheck(perturbed);
    CHECK_FALSE(r1.ok);
    CHECK(r1.diff.find("re-substitution") != std::string::npos);

    Certificate swapped = cert;
    swapped.rules[0].rule = "odd-degree-parity";
    RecheckResult r2 = recheck(swapped);
    CHECK_FALSE(r2.ok);
    CHECK_FALSE(r2.diff.empty());

    Certificate wrong_mode = cert;
    wrong_mode.mode = "closed-distance-magic";
    CHECK_FALSE(recheck(wrong_mode).ok);

    // a diameter rule on a d = 2 (mod 4) array cannot fire
    Certificate bogus{"bogus", "distance-magic", IntersectionArray::hypercube(6), {}};
    FiredRule fake;
    fake.rule = "diameter-congruence";
    fake.diameter = 6;
    bogus.rules.push_back(fake);
    RecheckResult r3 = recheck(bogus);
    CHECK_FALSE(r3.ok);
    CHECK(r3.diff.find("congruence rule cannot fire") != std::string::npos);
}

TEST_CASE("kernel witnesses of bipartite double covers end in (-1)^{d/2}") {
    for (int n : {4, 8, 12}) {
        auto cert = certify_not_distance_magic(IntersectionArray::hypercube(n), true);
        REQUIRE(cert.has_value());
        for (auto& r : cert->rules)
            if (r.rule == "kernel-sign")
                CHECK(r.kernel.back() == Rational((n / 2) % 2 == 0 ? 1 : -1));
    }
}
