#include "grasschar/catalog.hpp"

#include <fstream>
#include <regex>

#include <json.hpp>

#include "grasschar/errors.hpp"

namespace grasschar {

using nlohmann::json;

const ManifoldModel& Catalog::model(const std::string& name) const {
    auto it = models.find(name);
    if (it == models.end()) throw unknown_manifold("unknown manifold '" + name + "'");
    return it->second;
}

const HomologyRelation& Catalog::relation(const std::string& id) const {
    for (const HomologyRelation& r : relations)
        if (r.id == id) return r;
    throw unknown_relation("unknown homology relation '" + id + "'");
}

namespace {

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

CharClassExpr X(const std::string& s) { return CharClassExpr::parse(s); }
Monomial M(const std::string& s) { return parse_monomial(s); }

void add_rule(ManifoldModel& m, const std::string& lhs, const std::string& rhs) {
    m.rules.emplace_back(M(lhs), X(rhs));
}

// Stores *mono = scalar * cls with the rational part of the scalar folded
// into the class, keeping the unit at coefficient 1.
void add_star(ManifoldModel& m, const std::string& mono, const ExactScalar& scalar,
              const std::string& cls) {
    ScaledClass sc;
    sc.unit = ExactScalar(1, scalar.radicand(), scalar.pi_pow());
    sc.cls = X(cls) * scalar.coeff();
    m.star_table[M(mono)] = sc;
}

Cycle make_cycle(const std::string& name, int degree,
                 const std::vector<std::pair<std::string, Rational>>& pairs) {
    Cycle c;
    c.name = name;
    c.degree = degree;
    for (const auto& [mono, v] : pairs) c.pairings[M(mono)] = v;
    return c;
}

void add_point_and_fundamental_cycles(ManifoldModel& m) {
    m.cycles.push_back(make_cycle("pt", 0, {{"1", 1}}));
    Cycle fund;
    fund.name = m.name;
    fund.degree = m.dim;
    fund.pairings = m.integrals;
    fund.volume = real_grassmann_volume(m.grass_k, m.grass_n);
    m.cycles.push_back(fund);
    m.generator_cycles[0] = {"pt"};
    m.generator_cycles[m.dim] = {m.name};
}

std::string epow(int k) {
    if (k == 0) return "1";
    if (k == 1) return "e(E)";
    return "e(E)^" + std::to_string(k);
}

// The rank-2 models G(2,N), N = 4..8.  Writing M = N-2 (the rank of F):
// every Pontrjagin class rewrites into powers of e(E); for even N the
// middle degree gains the second generator e(F).
ManifoldModel build_g2(int N) {
    const int Mr = N - 2;
    const bool even = N % 2 == 0;
    const int n = even ? Mr / 2 : (Mr - 1) / 2; // middle exponent for even N
    ManifoldModel m;
    m.name = "G(2," + std::to_string(N) + ")";
    m.grass_k = 2;
    m.grass_n = N;
    m.dim = 2 * Mr;

    m.generator_degrees["e(E)"] = 2;
    m.generator_degrees["p1(E)"] = 4;
    for (int q = 1; q <= Mr / 2; ++q)
        m.generator_degrees["p" + std::to_string(q) + "(F)"] = 4 * q;
    if (even) m.generator_degrees["e(F)"] = Mr;

    for (int q = 1; q <= Mr / 2; ++q) {
        std::string sign = q % 2 == 0 ? "" : "-";
        add_rule(m, "p" + std::to_string(q) + "(F)", sign + epow(2 * q));
    }
    add_rule(m, "p1(E)", epow(2));
    if (even) {
        add_rule(m, "e(E)*e(F)", "0");
        add_rule(m, "e(F)^2", std::string(n % 2 == 0 ? "" : "-") + epow(2 * n));
    }

    m.poincare.assign(m.dim + 1, 0);
    for (int k = 0; k <= Mr; ++k) {
        m.poincare[2 * k] = 1;
        m.bases[2 * k] = {M(epow(k))};
    }
    if (even) {
        m.poincare[2 * n] = 2;
        m.bases[2 * n] = {M(epow(n)), M("e(F)")};
    }

    m.integrals[M(epow(Mr))] = 2;

    // Hodge stars: *e^k = (a_k / 2) e^(M-k) with
    // a_k = (k!)^2 (2 pi)^(-2k) C(M, k) V(G(2, N)).
    const ExactScalar vol = real_grassmann_volume(2, N);
    for (int k = 1; k < Mr; ++k) {
        ExactScalar ak =
            ExactScalar(Rational(factorial(k) * factorial(k) * binomial(Mr, k),
                                 boost::multiprecision::pow(Int(2), 2 * k)),
                        1, -2 * k) *
            vol;
        add_star(m, epow(k), ak * Rational(1, 2), epow(Mr - k));
    }
    if (even)
        add_star(m, "e(F)", ExactScalar(Rational(n % 2 == 0 ? 1 : -1)), "e(F)");

    add_point_and_fundamental_cycles(m);
    // Complex projective spaces CP^k (k <= n), their conjugates at the even
    // middle, and the sub-Grassmannians G(2,k+2), G(1,N-1).
    const int cp_max = even ? n : n; // CP^k needs an invariant R^(2k+2)
    for (int k = 1; k <= cp_max; ++k) {
        std::vector<std::pair<std::string, Rational>> pairs = {
            {epow(k), k % 2 == 0 ? 1 : -1}};
        if (even && k == n) pairs.push_back({"e(F)", 1});
        m.cycles.push_back(
            make_cycle("CP" + std::to_string(k), 2 * k, pairs));
    }
    if (even) {
        m.cycles.push_back(make_cycle(
            "~CP" + std::to_string(n), 2 * n,
            {{epow(n), n % 2 == 0 ? 1 : -1}, {"e(F)", -1}}));
        m.cycles.push_back(make_cycle(
            "G(1," + std::to_string(N - 1) + ")", 2 * n,
            {{epow(n), 0}, {"e(F)", 2}}));
    }
    for (int k = 1; k <= Mr - 1; ++k) {
        std::vector<std::pair<std::string, Rational>> pairs = {{epow(k), 2}};
        if (even && k == n) pairs.push_back({"e(F)", 0});
        m.cycles.push_back(
            make_cycle("G(2," + std::to_string(k + 2) + ")", 2 * k, pairs));
    }
    for (int k = 1; k <= Mr - 1; ++k) {
        if (even && k == n) {
            m.generator_cycles[2 * k] = {"CP" + std::to_string(n),
                                         "~CP" + std::to_string(n)};
        } else if (k <= (even ? n - 1 : n)) {
            m.generator_cycles[2 * k] = {"CP" + std::to_string(k)};
        } else {
            m.generator_cycles[2 * k] = {"G(2," + std::to_string(k + 2) + ")"};
        }
    }
    return m;
}

ManifoldModel build_g36() {
    ManifoldModel m;
    m.name = "G(3,6)";
    m.grass_k = 3;
    m.grass_n = 6;
    m.dim = 9;
    m.generator_degrees = {{"p1(E)", 4}, {"p1(F)", 4}, {"q5", 5}};
    add_rule(m, "p1(F)", "-p1(E)");
    add_rule(m, "p1(E)^2", "0");
    add_rule(m, "q5^2", "0");
    m.bases[0] = {M("1")};
    m.bases[4] = {M("p1(E)")};
    m.bases[5] = {M("q5")};
    m.bases[9] = {M("p1(E)*q5")};
    m.poincare = {1, 0, 0, 0, 1, 1, 0, 0, 0, 1};
    m.integrals[M("p1(E)*q5")] = 2;
    add_star(m, "p1(E)", ExactScalar(Rational(3, 4), 1, 1), "q5");
    add_star(m, "q5", ExactScalar(Rational(4, 3), 1, -1), "p1(E)");
    add_point_and_fundamental_cycles(m);
    m.cycles.push_back(make_cycle("G(2,4)", 4, {{"p1(E)", 2}}));
    Cycle pont = make_cycle("PONT", 4, {{"p1(E)", 2}});
    pont.volume = catalog_space_volume("PONT");
    m.cycles.push_back(pont);
    Cycle slag = make_cycle("SLAG", 5, {{"q5", 1}});
    slag.volume = slag_volume(3);
    m.cycles.push_back(slag);
    m.generator_cycles[4] = {"G(2,4)"};
    m.generator_cycles[5] = {"SLAG"};
    return m;
}

ManifoldModel build_g37() {
    ManifoldModel m;
    m.name = "G(3,7)";
    m.grass_k = 3;
    m.grass_n = 7;
    m.dim = 12;
    m.generator_degrees = {{"p1(E)", 4}, {"e(F)", 4}, {"p1(F)", 4}, {"p2(F)", 8}};
    add_rule(m, "p1(F)", "-p1(E)");
    add_rule(m, "p2(F)", "p1(E)^2");
    add_rule(m, "e(F)^2", "p1(E)^2");
    add_rule(m, "p1(E)^3", "0");
    m.bases[0] = {M("1")};
    m.bases[4] = {M("p1(E)"), M("e(F)")};
    m.bases[8] = {M("p1(E)^2"), M("p1(E)*e(F)")};
    m.bases[12] = {M("p1(E)^2*e(F)")};
    m.poincare = {1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1};
    m.integrals[M("p1(E)^2*e(F)")] = 2;
    add_star(m, "p1(E)", ExactScalar(Rational(4, 5), 1, 2), "p1(E)*e(F)");
    add_star(m, "e(F)", ExactScalar(Rational(1, 2), 1, 2), "p1(E)^2");
    add_star(m, "p1(E)^2", ExactScalar(Rational(2), 1, -2), "e(F)");
    add_star(m, "p1(E)*e(F)", ExactScalar(Rational(5, 4), 1, -2), "p1(E)");
    add_point_and_fundamental_cycles(m);
    m.cycles.push_back(make_cycle("CP2", 4, {{"p1(E)", 1}, {"e(F)", 1}}));
    m.cycles.push_back(make_cycle("~CP2", 4, {{"p1(E)", 1}, {"e(F)", -1}}));
    Cycle assoc =
        make_cycle("ASSOC", 8, {{"p1(E)^2", 1}, {"p1(E)*e(F)", 1}});
    assoc.volume = catalog_space_volume("ASSOC");
    m.cycles.push_back(assoc);
    Cycle assoc_t =
        make_cycle("~ASSOC", 8, {{"p1(E)^2", 1}, {"p1(E)*e(F)", -1}});
    assoc_t.volume = catalog_space_volume("~ASSOC");
    m.cycles.push_back(assoc_t);
    m.cycles.push_back(
        make_cycle("G(2,6)", 8, {{"p1(E)^2", 2}, {"p1(E)*e(F)", 0}}));
    m.generator_cycles[4] = {"CP2", "~CP2"};
    m.generator_cycles[8] = {"ASSOC", "~ASSOC"};
    return m;
}

ManifoldModel build_g38() {
    ManifoldModel m;
    m.name = "G(3,8)";
    m.grass_k = 3;
    m.grass_n = 8;
    m.dim = 15;
    m.generator_degrees = {{"p1(E)", 4}, {"p1(F)", 4}, {"p2(F)", 8}, {"q7", 7}};
    add_rule(m, "p1(F)", "-p1(E)");
    add_rule(m, "p2(F)", "p1(E)^2");
    add_rule(m, "p1(E)^3", "0");
    add_rule(m, "q7^2", "0");
    m.bases[0] = {M("1")};
    m.bases[4] = {M("p1(E)")};
    m.bases[7] = {M("q7")};
    m.bases[8] = {M("p1(E)^2")};
    m.bases[11] = {M("p1(E)*q7")};
    m.bases[15] = {M("p1(E)^2*q7")};
    m.poincare = {1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1};
    m.integrals[M("p1(E)^2*q7")] = 1;
    add_star(m, "p1(E)", ExactScalar(Rational(1, 3), 1, 4), "p1(E)*q7");
    add_star(m, "q7", ExactScalar(Rational(2, 5)), "p1(E)^2");
    add_star(m, "p1(E)^2", ExactScalar(Rational(5, 2)), "q7");
    add_star(m, "p1(E)*q7", ExactScalar(Rational(3), 1, -4), "p1(E)");
    add_point_and_fundamental_cycles(m);
    m.cycles.push_back(make_cycle("CP2", 4, {{"p1(E)", 1}}));
    m.cycles.push_back(make_cycle("f(S7)", 7, {{"q7", 1}}));
    Cycle assoc = make_cycle("ASSOC", 8, {{"p1(E)^2", 1}});
    assoc.volume = catalog_space_volume("ASSOC");
    m.cycles.push_back(assoc);
    Cycle m11 = make_cycle("M", 11, {{"p1(E)*q7", 1}});
    m11.volume = catalog_space_volume("M");
    m.cycles.push_back(m11);
    m.generator_cycles[4] = {"CP2"};
    m.generator_cycles[7] = {"f(S7)"};
    m.generator_cycles[8] = {"ASSOC"};
    m.generator_cycles[11] = {"M"};
    return m;
}

ManifoldModel build_g48() {
    ManifoldModel m;
    m.name = "G(4,8)";
    m.grass_k = 4;
    m.grass_n = 8;
    m.dim = 16;
    m.generator_degrees = {{"e(E)", 4},  {"e(F)", 4},  {"p1(E)", 4},
                           {"p1(F)", 4}, {"p2(E)", 8}, {"p2(F)", 8}};
    add_rule(m, "p1(F)", "-p1(E)");
    add_rule(m, "p2(E)", "e(E)^2");
    add_rule(m, "p2(F)", "e(F)^2");
    add_rule(m, "e(E)*e(F)", "0");
    add_rule(m, "p1(E)^2", "e(E)^2 + e(F)^2");
    add_rule(m, "p1(E)*e(F)^2", "p1(E)*e(E)^2");
    add_rule(m, "p1(E)*e(E)^3", "0");
    add_rule(m, "e(F)^4", "e(E)^4");
    m.bases[0] = {M("1")};
    m.bases[4] = {M("e(E)"), M("e(F)"), M("p1(E)")};
    m.bases[8] = {M("e(E)^2"), M("e(F)^2"), M("p1(E)*e(E)"), M("p1(E)*e(F)")};
    m.bases[12] = {M("e(E)^3"), M("e(F)^3"), M("p1(E)*e(E)^2")};
    m.bases[16] = {M("e(E)^4")};
    m.poincare = {1, 0, 0, 0, 3, 0, 0, 0, 4, 0, 0, 0, 3, 0, 0, 0, 1};
    m.integrals[M("e(E)^4")] = 2;
    add_star(m, "e(E)", ExactScalar(Rational(2, 15), 1, 4), "e(E)^3");
    add_star(m, "e(F)", ExactScalar(Rational(2, 15), 1, 4), "e(F)^3");
    add_star(m, "p1(E)", ExactScalar(Rational(4, 15), 1, 4), "p1(E)*e(E)^2");
    // Middle degree: the intersection form is the identity in the half-class
    // basis, which forces the star to be the identity there.
    add_star(m, "e(E)^2", ExactScalar(Rational(1)), "e(E)^2");
    add_star(m, "e(F)^2", ExactScalar(Rational(1)), "e(F)^2");
    add_star(m, "p1(E)*e(E)", ExactScalar(Rational(1)), "p1(E)*e(E)");
    add_star(m, "p1(E)*e(F)", ExactScalar(Rational(1)), "p1(E)*e(F)");
    add_star(m, "e(E)^3", ExactScalar(Rational(15, 2), 1, -4), "e(E)");
    add_star(m, "e(F)^3", ExactScalar(Rational(15, 2), 1, -4), "e(F)");
    add_star(m, "p1(E)*e(E)^2", ExactScalar(Rational(15, 4), 1, -4), "p1(E)");
    add_point_and_fundamental_cycles(m);

    m.cycles.push_back(
        make_cycle("CP2", 4, {{"e(E)", 0}, {"e(F)", 1}, {"p1(E)", 1}}));
    m.cycles.push_back(
        make_cycle("*CP2", 4, {{"e(E)", 1}, {"e(F)", 0}, {"p1(E)", -1}}));
    m.cycles.push_back(
        make_cycle("G(2,4)", 4, {{"e(E)", 0}, {"e(F)", 0}, {"p1(E)", 2}}));
    m.cycles.push_back(
        make_cycle("G(4,5)", 4, {{"e(E)", 2}, {"e(F)", 0}, {"p1(E)", 0}}));
    m.cycles.push_back(
        make_cycle("G(1,5)", 4, {{"e(E)", 0}, {"e(F)", 2}, {"p1(E)", 0}}));

    auto deg8 = [](const std::string& name, Rational ee, Rational ff, Rational pe,
                   Rational pf) {
        return make_cycle(name, 8,
                          {{"e(E)^2", ee},
                           {"e(F)^2", ff},
                           {"p1(E)*e(E)", pe},
                           {"p1(E)*e(F)", pf}});
    };
    Cycle assoc = deg8("ASSOC", 0, 1, 0, 1);
    assoc.volume = catalog_space_volume("ASSOC");
    m.cycles.push_back(assoc);
    m.cycles.push_back(deg8("~ASSOC", 0, 1, 0, -1));
    m.cycles.push_back(deg8("*ASSOC", 1, 0, 1, 0));
    m.cycles.push_back(deg8("*~ASSOC", 1, 0, -1, 0));
    m.cycles.push_back(deg8("G(4,6)", 2, 0, 0, 0));
    m.cycles.push_back(deg8("G(2,6)", 0, 2, 0, 0));
    m.cycles.push_back(deg8("G(2,3)xG(2,5)", 0, 0, 4, 0));
    m.cycles.push_back(deg8("G(1,3)xG(3,5)", 0, 0, 0, 4));

    auto deg12 = [](const std::string& name, Rational e3, Rational f3, Rational pe2) {
        return make_cycle(
            name, 12,
            {{"e(E)^3", e3}, {"e(F)^3", f3}, {"p1(E)*e(E)^2", pe2}});
    };
    m.cycles.push_back(deg12("G(4,7)", 2, 0, 0));
    m.cycles.push_back(deg12("G(3,7)", 0, 2, 0));
    Cycle cay = deg12("CAY", -1, 1, 1);
    cay.volume = catalog_space_volume("CAY");
    m.cycles.push_back(cay);

    m.generator_cycles[4] = {"CP2", "*CP2", "G(2,4)"};
    m.generator_cycles[8] = {"ASSOC", "~ASSOC", "*ASSOC", "*~ASSOC"};
    m.generator_cycles[12] = {"G(4,7)", "G(3,7)", "CAY"};
    return m;
}

} // namespace

Catalog build_default_catalog() {
    Catalog cat;
    for (int N = 4; N <= 8; ++N) {
        ManifoldModel m = build_g2(N);
        cat.models[m.name] = std::move(m);
    }
    for (ManifoldModel m : {build_g36(), build_g37(), build_g38(), build_g48()})
        cat.models[m.name] = std::move(m);

    // Homology relations, verified by pairing both sides.
    auto rel = [&cat](const std::string& id, const std::string& manifold, int degree,
                      CycleClass lhs, CycleClass rhs, const std::string& desc) {
        cat.relations.push_back({id, manifold, degree, std::move(lhs), std::move(rhs), desc});
    };
    // [G(2,k+2)] = 2 (-1)^k [CP^k] below the middle degree of G(2,N).
    for (int N = 4; N <= 8; ++N) {
        const int Mr = N - 2;
        const bool even = N % 2 == 0;
        const int n = even ? Mr / 2 : (Mr - 1) / 2;
        const std::string g2name = "G(2," + std::to_string(N) + ")";
        for (int k = 1; k <= (even ? n - 1 : n); ++k) {
            rel("double-point-class:" + g2name + ":k=" + std::to_string(k), g2name,
                2 * k, CycleClass("G(2," + std::to_string(k + 2) + ")"),
                CycleClass("CP" + std::to_string(k), k % 2 == 0 ? 2 : -2),
                "[G(2,k+2)] = 2(-1)^k [CP^k] in " + g2name);
        }
        if (even) {
            Rational sgn = n % 2 == 0 ? 1 : -1;
            rel("middle-split:" + g2name, g2name, 2 * n,
                CycleClass("G(2," + std::to_string(n + 2) + ")"),
                CycleClass("CP" + std::to_string(n), sgn) +
                    CycleClass("~CP" + std::to_string(n), sgn),
                "[G(2,n+2)] = (-1)^n ([CP^n] + [~CP^n]) in " + g2name);
            rel("odd-grassmann-split:" + g2name, g2name, 2 * n,
                CycleClass("G(1," + std::to_string(N - 1) + ")"),
                CycleClass("CP" + std::to_string(n)) -
                    CycleClass("~CP" + std::to_string(n)),
                "[G(1,N-1)] = [CP^n] - [~CP^n] in " + g2name);
        }
    }
    rel("assoc-sum:G(3,7)", "G(3,7)", 8, CycleClass("G(2,6)"),
        CycleClass("ASSOC") + CycleClass("~ASSOC"),
        "[G(2,6)] = [ASSOC] + [~ASSOC] in G(3,7)");
    rel("pont-homologous:G(3,6)", "G(3,6)", 4, CycleClass("PONT"),
        CycleClass("G(2,4)"), "[PONT] = [G(2,4)] in G(3,6)");
    rel("assoc-sum:G(4,8)", "G(4,8)", 8, CycleClass("G(2,6)"),
        CycleClass("ASSOC") + CycleClass("~ASSOC"),
        "[G(2,6)] = [ASSOC] + [~ASSOC] in G(4,8)");
    rel("star-assoc-sum:G(4,8)", "G(4,8)", 8, CycleClass("G(4,6)"),
        CycleClass("*ASSOC") + CycleClass("*~ASSOC"),
        "[G(4,6)] = [*ASSOC] + [*~ASSOC] in G(4,8)");

    SphereBundleDescriptor tau2;
    tau2.id = "tau2:G(2,7)->ASSOC";
    tau2.total = "G(2,7)";
    tau2.base = "ASSOC";
    tau2.fiber_dim = 2;
    tau2.total_betti = cat.models.at("G(2,7)").poincare;
    tau2.base_dim = 8;
    tau2.euler_class_vanishes_rationally = true; // Euler class is 2-torsion
    cat.fibrations.push_back(tau2);

    cat.facts = {
        {"assoc-h3-torsion", "H^3(ASSOC; Z) = Z/2"},
        {"assoc-h6-torsion", "H^6(ASSOC; Z) = Z/2"},
        {"assoc-free-cohomology", "H^q(ASSOC; R) = R for q = 0, 4, 8 and 0 otherwise"},
        {"euler-class-two-torsion", "2 e(E(3,7)) = 0 in H^4(G(3,7); Z)"},
        {"sphere-fibration-class",
         "[tau* dV] = 1/2 e(E)^3 + 1/2 e(F) for the fibration G(2,8) -> S^6"},
    };
    return cat;
}

std::vector<int> poincare_polynomial(const Catalog& cat, const std::string& name) {
    auto it = cat.models.find(name);
    if (it != cat.models.end()) return it->second.poincare;
    static const std::regex g1(R"(^G\(1,(\d+)\)$)");
    static const std::regex g2(R"(^G\(2,(\d+)\)$)");
    std::smatch m;
    if (std::regex_match(name, m, g1)) {
        int n = std::stoi(m[1]) - 1; // G(1, n+1) has dimension n
        if (n < 1) throw unknown_manifold("degenerate Grassmannian '" + name + "'");
        std::vector<int> b(n + 1, 0);
        b[0] = b[n] = 1;
        return b;
    }
    if (std::regex_match(name, m, g2)) {
        int N = std::stoi(m[1]);
        if (N < 4) throw unknown_manifold("degenerate Grassmannian '" + name + "'");
        int Mr = N - 2;
        std::vector<int> b(2 * Mr + 1, 0);
        for (int k = 0; k <= Mr; ++k) b[2 * k] += 1;
        if (N % 2 == 0) b[Mr] += 1;
        return b;
    }
    throw unknown_manifold("no Betti data for '" + name + "'");
}

PairingTable cycle_pairing_table(const Catalog& cat, const std::string& name,
                                 int degree) {
    const ManifoldModel& m = cat.model(name);
    auto bit = m.bases.find(degree);
    if (bit == m.bases.end())
        throw no_data_for_degree("no cohomology at degree " + std::to_string(degree) +
                                 " of " + name);
    auto git = m.generator_cycles.find(degree);
    if (git == m.generator_cycles.end() || git->second.empty())
        throw no_data_for_degree("no cycle basis at degree " + std::to_string(degree) +
                                 " of " + name);
    PairingTable t;
    t.class_monomials = bit->second;
    for (const std::string& cname : git->second) {
        const Cycle& c = m.cycle(cname);
        t.cycle_names.push_back(c.name);
        RationalVector row;
        for (const Monomial& mono : t.class_monomials) row.push_back(c.pairings.at(mono));
        t.values.push_back(std::move(row));
    }
    return t;
}

std::vector<int> gysin_betti_solver(const SphereBundleDescriptor& d) {
    if (!d.euler_class_vanishes_rationally)
        throw contract_error(
            "gysin_betti_solver requires a rationally vanishing Euler class");
    const int top = static_cast<int>(d.total_betti.size()) - 1;
    if (d.base_dim != top - d.fiber_dim)
        throw contract_error("base_dim must equal total dimension - fiber dimension");
    std::vector<int> b(std::max(d.base_dim + 1, 0), 0);
    auto base_at = [&](int q) { return q >= 0 && q <= d.base_dim ? b[q] : 0; };
    for (int q = 0; q <= top; ++q) {
        int want = d.total_betti[q] - base_at(q - d.fiber_dim);
        if (q <= d.base_dim) {
            if (want < 0)
                throw infeasible_gysin("negative Betti number at degree " +
                                       std::to_string(q));
            b[q] = want;
        } else if (want != 0) {
            throw infeasible_gysin("no solution vanishing above the base dimension");
        }
    }
    return b;
}

CycleClass gauss_map_class(const std::string& target, const Rational& chi,
                           const Rational& sign, const Rational& lambda) {
    if (target == "G(4,8)") {
        return CycleClass("G(4,5)", chi / 2) + CycleClass("G(1,5)", lambda) +
               CycleClass("G(2,4)", sign * Rational(3, 2));
    }
    if (target == "G(4,7)" || target == "G(4,6)") {
        // Codimension-reduced case: the lambda term drops.
        return CycleClass("G(4,5)", chi / 2) + CycleClass("G(2,4)", sign * Rational(3, 2));
    }
    if (target.rfind("G(2,", 0) == 0) {
        return CycleClass("G(2,3)", chi / 2);
    }
    throw unsupported_target("no Gauss-map formula for target '" + target + "'");
}

Rational tau_gauss_degree(const Rational& normal_euler_cubed_integral,
                          const Rational& chi) {
    return normal_euler_cubed_integral / 2 + chi / 2;
}

Rational pair_cycle_class(const CycleClass& t, const CharClassExpr& x,
                          const ManifoldModel& m) {
    Rational total = 0;
    for (const auto& [name, coeff] : t.combination())
        total += coeff * m.cycle_integral(name, x);
    return total;
}

bool verify_relation(const Catalog& cat, const HomologyRelation& rel) {
    const ManifoldModel& m = cat.model(rel.manifold);
    auto bit = m.bases.find(rel.degree);
    if (bit == m.bases.end()) return false;
    for (const Monomial& mono : bit->second) {
        CharClassExpr x(mono);
        if (pair_cycle_class(rel.lhs, x, m) != pair_cycle_class(rel.rhs, x, m))
            return false;
    }
    return true;
}

void validate_catalog(const Catalog& cat) {
    for (const auto& [name, m] : cat.models) {
        if (m.name != name) throw catalog_error("model key/name mismatch for " + name);
        validate_model(m);
    }
    for (const HomologyRelation& r : cat.relations) {
        const ManifoldModel& m = cat.model(r.manifold);
        for (const auto* side : {&r.lhs, &r.rhs})
            for (const auto& [cyc, c] : side->combination())
                if (!m.has_cycle(cyc))
                    throw catalog_error("relation " + r.id + " uses unknown cycle " + cyc);
        if (!verify_relation(cat, r))
            throw catalog_error("homology relation fails pairing check: " + r.id);
    }
    for (const SphereBundleDescriptor& d : cat.fibrations) {
        if (static_cast<int>(d.total_betti.size()) != d.base_dim + d.fiber_dim + 1)
            throw catalog_error("fibration " + d.id + " has inconsistent dimensions");
        std::vector<int> b = gysin_betti_solver(d);
        for (int q = 0; q < static_cast<int>(d.total_betti.size()); ++q) {
            int sum = (q <= d.base_dim ? b[q] : 0) +
                      (q - d.fiber_dim >= 0 && q - d.fiber_dim <= d.base_dim
                           ? b[q - d.fiber_dim]
                           : 0);
            if (sum != d.total_betti[q])
                throw catalog_error("fibration " + d.id + " Betti sum check failed");
        }
    }
}

// ---------------------------------------------------------------------------
// JSON serialization
// ---------------------------------------------------------------------------
namespace {

json rational_to_json(const Rational& q) { return rational_str(q); }
Rational rational_from_json(const json& j) { return parse_rational(j.get<std::string>()); }

json model_to_json(const ManifoldModel& m) {
    json j;
    j["name"] = m.name;
    j["k"] = m.grass_k;
    j["n"] = m.grass_n;
    j["dim"] = m.dim;
    j["generators"] = json::array();
    for (const auto& [g, d] : m.generator_degrees)
        j["generators"].push_back({{"name", g}, {"degree", d}});
    j["rules"] = json::array();
    for (const auto& [lhs, rhs] : m.rules)
        j["rules"].push_back({{"lhs", monomial_str(lhs)}, {"rhs", rhs.str()}});
    j["bases"] = json::object();
    for (const auto& [deg, monos] : m.bases) {
        json list = json::array();
        for (const Monomial& mono : monos) list.push_back(monomial_str(mono));
        j["bases"][std::to_string(deg)] = list;
    }
    j["integrals"] = json::object();
    for (const auto& [mono, v] : m.integrals)
        j["integrals"][monomial_str(mono)] = rational_to_json(v);
    j["star"] = json::object();
    for (const auto& [mono, sc] : m.star_table)
        j["star"][monomial_str(mono)] = {{"scalar", sc.unit.str()},
                                         {"class", sc.cls.str()}};
    j["cycles"] = json::array();
    for (const Cycle& c : m.cycles) {
        json jc = {{"name", c.name}, {"degree", c.degree}};
        jc["pairings"] = json::object();
        for (const auto& [mono, v] : c.pairings)
            jc["pairings"][monomial_str(mono)] = rational_to_json(v);
        if (c.volume) jc["volume"] = c.volume->str();
        j["cycles"].push_back(jc);
    }
    j["generator_cycles"] = json::object();
    for (const auto& [deg, names] : m.generator_cycles)
        j["generator_cycles"][std::to_string(deg)] = names;
    j["poincare"] = m.poincare;
    return j;
}

ManifoldModel model_from_json(const json& j) {
    ManifoldModel m;
    m.name = j.at("name").get<std::string>();
    m.grass_k = j.at("k").get<int>();
    m.grass_n = j.at("n").get<int>();
    m.dim = j.at("dim").get<int>();
    for (const json& g : j.at("generators"))
        m.generator_degrees[g.at("name").get<std::string>()] = g.at("degree").get<int>();
    for (const json& r : j.at("rules"))
        m.rules.emplace_back(parse_monomial(r.at("lhs").get<std::string>()),
                             CharClassExpr::parse(r.at("rhs").get<std::string>()));
    for (const auto& [deg, list] : j.at("bases").items()) {
        std::vector<Monomial> monos;
        for (const json& s : list) monos.push_back(parse_monomial(s.get<std::string>()));
        m.bases[std::stoi(deg)] = std::move(monos);
    }
    for (const auto& [mono, v] : j.at("integrals").items())
        m.integrals[parse_monomial(mono)] = rational_from_json(v);
    for (const auto& [mono, sc] : j.at("star").items()) {
        ScaledClass s;
        s.unit = ExactScalar::parse(sc.at("scalar").get<std::string>());
        s.cls = CharClassExpr::parse(sc.at("class").get<std::string>());
        m.star_table[parse_monomial(mono)] = s;
    }
    for (const json& jc : j.at("cycles")) {
        Cycle c;
        c.name = jc.at("name").get<std::string>();
        c.degree = jc.at("degree").get<int>();
        for (const auto& [mono, v] : jc.at("pairings").items())
            c.pairings[parse_monomial(mono)] = rational_from_json(v);
        if (jc.contains("volume"))
            c.volume = ExactScalar::parse(jc.at("volume").get<std::string>());
        m.cycles.push_back(std::move(c));
    }
    for (const auto& [deg, names] : j.at("generator_cycles").items())
        m.generator_cycles[std::stoi(deg)] = names.get<std::vector<std::string>>();
    m.poincare = j.at("poincare").get<std::vector<int>>();
    return m;
}

json cycle_class_to_json(const CycleClass& c) {
    json j = json::object();
    for (const auto& [name, v] : c.combination()) j[name] = rational_to_json(v);
    return j;
}

CycleClass cycle_class_from_json(const json& j) {
    CycleClass c;
    for (const auto& [name, v] : j.items()) c.add(name, rational_from_json(v));
    return c;
}

} // namespace

void save_catalog(const Catalog& cat, const std::string& path) {
    json j;
    j["manifolds"] = json::array();
    for (const auto& [name, m] : cat.models) j["manifolds"].push_back(model_to_json(m));
    j["relations"] = json::array();
    for (const HomologyRelation& r : cat.relations)
        j["relations"].push_back({{"id", r.id},
                                  {"manifold", r.manifold},
                                  {"degree", r.degree},
                                  {"lhs", cycle_class_to_json(r.lhs)},
                                  {"rhs", cycle_class_to_json(r.rhs)},
                                  {"description", r.description}});
    j["fibrations"] = json::array();
    for (const SphereBundleDescriptor& d : cat.fibrations)
        j["fibrations"].push_back(
            {{"id", d.id},
             {"total", d.total},
             {"base", d.base},
             {"fiber_dim", d.fiber_dim},
             {"total_betti", d.total_betti},
             {"base_dim", d.base_dim},
             {"euler_class_vanishes_rationally", d.euler_class_vanishes_rationally}});
    j["facts"] = json::array();
    for (const CatalogFact& f : cat.facts)
        j["facts"].push_back({{"id", f.id}, {"statement", f.statement}});
    std::ofstream out(path);
    if (!out) throw catalog_error("cannot write catalog file '" + path + "'");
    out << j.dump(2) << "\n";
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw catalog_error("cannot open catalog file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw catalog_error("malformed catalog JSON: " + std::string(e.what()));
    }
    Catalog cat;
    try {
        for (const json& jm : j.at("manifolds")) {
            ManifoldModel m = model_from_json(jm);
            cat.models[m.name] = std::move(m);
        }
        for (const json& jr : j.value("relations", json::array())) {
            HomologyRelation r;
            r.id = jr.at("id").get<std::string>();
            r.manifold = jr.at("manifold").get<std::string>();
            r.degree = jr.at("degree").get<int>();
            r.lhs = cycle_class_from_json(jr.at("lhs"));
            r.rhs = cycle_class_from_json(jr.at("rhs"));
            r.description = jr.value("description", "");
            cat.relations.push_back(std::move(r));
        }
        for (const json& jd : j.value("fibrations", json::array())) {
            SphereBundleDescriptor d;
            d.id = jd.at("id").get<std::string>();
            d.total = jd.at("total").get<std::string>();
            d.base = jd.at("base").get<std::string>();
            d.fiber_dim = jd.at("fiber_dim").get<int>();
            d.total_betti = jd.at("total_betti").get<std::vector<int>>();
            d.base_dim = jd.at("base_dim").get<int>();
            d.euler_class_vanishes_rationally =
                jd.at("euler_class_vanishes_rationally").get<bool>();
            cat.fibrations.push_back(std::move(d));
        }
        for (const json& jf : j.value("facts", json::array()))
            cat.facts.push_back(
                {jf.at("id").get<std::string>(), jf.at("statement").get<std::string>()});
    } catch (const json::exception& e) {
        throw catalog_error("catalog schema error: " + std::string(e.what()));
    }
    return cat;
}

} // namespace grasschar
