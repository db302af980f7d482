#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grasschar/catalog.hpp"
#include "grasschar/duality.hpp"
#include "grasschar/errors.hpp"
#include "grasschar/verify.hpp"
#include "grasschar/volumes.hpp"

namespace {

using namespace grasschar;

Catalog obtain_catalog(const std::string& path) {
    Catalog cat = path.empty() ? build_default_catalog() : load_catalog(path);
    validate_catalog(cat);
    return cat;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact characteristic-class engine for oriented Grassmann manifolds"};
    app.require_subcommand(1);
    std::string catalog_path;
    app.add_option("--catalog", catalog_path, "Load the catalog from a JSON file");

    // volume
    auto* vol = app.add_subcommand("volume", "Volume of a homogeneous space");
    std::string space;
    bool approx = false;
    vol->add_option("space", space, "Descriptor, e.g. G(3,7), SO(5), SLAG(3), S(6)")
        ->required();
    vol->add_flag("--approx", approx, "Also print a decimal approximation");

    // class
    auto* cls = app.add_subcommand("class", "Evaluate a characteristic class");
    std::string manifold, expression, action;
    cls->add_option("manifold", manifold, "Manifold name, e.g. G(4,8)")->required();
    cls->add_option("expression", expression, "Class expression")->required();
    cls->add_option("action", action, "One of: reduce, integrate, star, dual")
        ->required()
        ->check(CLI::IsMember({"reduce", "integrate", "star", "dual"}));

    // dual-basis
    auto* db = app.add_subcommand("dual-basis", "Dual basis of one degree");
    std::string db_manifold;
    int db_degree = 0;
    db->add_option("manifold", db_manifold)->required();
    db->add_option("degree", db_degree)->required();

    // pairing
    auto* pr = app.add_subcommand("pairing", "Cycle/class pairing table");
    std::string pr_manifold;
    int pr_degree = 0;
    pr->add_option("manifold", pr_manifold)->required();
    pr->add_option("degree", pr_degree)->required();

    // snf
    auto* sn = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    int sn_rows = 0, sn_cols = 0;
    std::vector<std::string> sn_entries;
    sn->add_option("rows", sn_rows)->required();
    sn->add_option("cols", sn_cols)->required();
    sn->add_option("entries", sn_entries, "Row-major integer entries")->required();

    // gysin
    auto* gy = app.add_subcommand("gysin", "Base Betti numbers of a sphere bundle");
    std::string gy_id;
    std::vector<int> gy_total;
    int gy_fiber = 0, gy_base_dim = -1;
    gy->add_option("id", gy_id, "Catalog fibration id (default: first)");
    gy->add_option("--total", gy_total, "Total-space Betti numbers");
    gy->add_option("--fiber-dim", gy_fiber, "Fibre sphere dimension");
    gy->add_option("--base-dim", gy_base_dim, "Base dimension");

    // gauss
    auto* ga = app.add_subcommand("gauss", "Gauss-map pushforward class");
    std::string ga_target, ga_chi = "0", ga_sign = "0", ga_lambda = "0";
    ga->add_option("--target", ga_target)->required();
    ga->add_option("--chi", ga_chi, "Euler characteristic");
    ga->add_option("--sign", ga_sign, "Signature");
    ga->add_option("--lambda", ga_lambda, "Normal degree coefficient");

    // betti
    auto* be = app.add_subcommand("betti", "Betti numbers of a manifold");
    std::string be_name;
    be->add_option("manifold", be_name)->required();

    // verify
    auto* ve = app.add_subcommand("verify", "Run the verification suite");
    std::string ve_filter, ve_json;
    ve->add_option("--filter", ve_filter, "Only run checks whose id contains this");
    ve->add_option("--json", ve_json, "Write the report as JSON to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (vol->parsed()) {
        ExactScalar v = volume(SpaceDescriptor::parse(space));
        std::cout << v.str() << "\n";
        if (approx) std::cout << "~ " << v.approx() << "\n";
        return 0;
    }

    if (cls->parsed()) {
        const Catalog cat = obtain_catalog(catalog_path);
        const ManifoldModel& m = cat.model(manifold);
        CharClassExpr x = CharClassExpr::parse(expression);
        if (action == "reduce") std::cout << reduce(x, m).str() << "\n";
        else if (action == "integrate") std::cout << rational_str(integrate(x, m)) << "\n";
        else if (action == "star") std::cout << star(x, m).str() << "\n";
        else std::cout << poincare_dual(x, m).str() << "\n";
        return 0;
    }

    if (db->parsed()) {
        const Catalog cat = obtain_catalog(catalog_path);
        const ManifoldModel& m = cat.model(db_manifold);
        std::vector<CharClassExpr> psi = dual_basis(db_degree, m);
        const auto& basis = m.bases.at(db_degree);
        for (size_t i = 0; i < psi.size(); ++i)
            std::cout << monomial_str(basis[i]) << " -> " << psi[i].str() << "\n";
        return 0;
    }

    if (pr->parsed()) {
        const Catalog cat = obtain_catalog(catalog_path);
        PairingTable t = cycle_pairing_table(cat, pr_manifold, pr_degree);
        std::cout << "columns:";
        for (const Monomial& mono : t.class_monomials)
            std::cout << " " << monomial_str(mono);
        std::cout << "\n";
        for (size_t i = 0; i < t.cycle_names.size(); ++i) {
            std::cout << t.cycle_names[i] << ":";
            for (const Rational& v : t.values[i]) std::cout << " " << rational_str(v);
            std::cout << "\n";
        }
        return 0;
    }

    if (sn->parsed()) {
        if (sn_rows <= 0 || sn_cols <= 0 ||
            sn_entries.size() != static_cast<size_t>(sn_rows) * sn_cols)
            throw parse_error("snf expects rows*cols entries");
        IntMatrix a(sn_rows, std::vector<Int>(sn_cols));
        for (int i = 0; i < sn_rows; ++i)
            for (int j = 0; j < sn_cols; ++j)
                a[i][j] = Int(sn_entries[static_cast<size_t>(i) * sn_cols + j]);
        SmithNormalForm f = smith_normal_form(a);
        auto print = [](const char* name, const IntMatrix& m) {
            std::cout << name << ":\n";
            for (const auto& row : m) {
                for (const Int& v : row) std::cout << " " << v.str();
                std::cout << "\n";
            }
        };
        print("U", f.u);
        print("S", f.s);
        print("V", f.v);
        return 0;
    }

    if (gy->parsed()) {
        SphereBundleDescriptor d;
        if (!gy_total.empty()) {
            d.total_betti = gy_total;
            d.fiber_dim = gy_fiber;
            d.base_dim = gy_base_dim >= 0
                             ? gy_base_dim
                             : static_cast<int>(gy_total.size()) - 1 - gy_fiber;
            d.euler_class_vanishes_rationally = true;
        } else {
            const Catalog cat = obtain_catalog(catalog_path);
            if (cat.fibrations.empty())
                throw unknown_entity_error("catalog has no fibrations");
            if (gy_id.empty()) {
                d = cat.fibrations.front();
            } else {
                bool found = false;
                for (const SphereBundleDescriptor& f : cat.fibrations)
                    if (f.id == gy_id) {
                        d = f;
                        found = true;
                    }
                if (!found) throw unknown_entity_error("unknown fibration '" + gy_id + "'");
            }
        }
        std::vector<int> b = gysin_betti_solver(d);
        for (size_t i = 0; i < b.size(); ++i) std::cout << (i ? " " : "") << b[i];
        std::cout << "\n";
        return 0;
    }

    if (ga->parsed()) {
        CycleClass c = gauss_map_class(ga_target, parse_rational(ga_chi),
                                       parse_rational(ga_sign),
                                       parse_rational(ga_lambda));
        std::cout << c.str() << "\n";
        return 0;
    }

    if (be->parsed()) {
        const Catalog cat = obtain_catalog(catalog_path);
        std::vector<int> b = poincare_polynomial(cat, be_name);
        for (size_t i = 0; i < b.size(); ++i) std::cout << (i ? " " : "") << b[i];
        std::cout << "\n";
        return 0;
    }

    if (ve->parsed()) {
        const Catalog cat = obtain_catalog(catalog_path);
        VerifyReport r = run_verification(cat, ve_filter);
        std::cout << render_report(r);
        if (!ve_json.empty()) {
            std::ofstream out(ve_json);
            if (!out) throw input_error("cannot write report to '" + ve_json + "'");
            out << report_json(r) << "\n";
        }
        return r.all_passed() ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const contract_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const unknown_entity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
