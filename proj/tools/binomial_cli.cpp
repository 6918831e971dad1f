#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "binomial_c.h"

namespace {

using json = nlohmann::json;

void render_text(const json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || it.value().is_array()) {
                os << prefix << it.key() << ":\n";
                render_text(it.value(), prefix + "  ", os);
            } else {
                os << prefix << it.key() << ": " << it.value().dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                os << prefix << "-\n";
                render_text(v, prefix + "  ", os);
            } else {
                os << prefix << "- " << v.dump() << "\n";
            }
        }
    } else {
        os << prefix << j.dump() << "\n";
    }
}

struct Output {
    std::string format = "json";
    std::string out_path;

    int emit(int status, bn_ctx* ctx, char* report) const {
        if (!report) {
            std::cerr << "error: " << bn_ctx_last_error(ctx) << "\n";
            return status;
        }
        std::string text;
        if (format == "text") {
            std::ostringstream os;
            render_text(json::parse(report), "", os);
            text = os.str();
        } else {
            text = std::string(report) + "\n";
        }
        bn_free_string(report);
        if (!out_path.empty()) {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return BN_EDOMAIN;
            }
            f << text;
        } else {
            std::cout << text;
        }
        return status;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact binomial factor degrees, Hartley conditions, and affine orbit checks"};
    app.require_subcommand(1);

    Output out;
    std::string seed, degree_bound, group_bound;
    long jobs = 1;
    bool timing = false;
    app.add_option("--format", out.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->envname("BINOM_FORMAT");
    app.add_option("--out", out.out_path, "write the report to a file")->envname("BINOM_OUT");
    app.add_option("--seed", seed, "factoring RNG seed")->envname("BINOM_SEED");
    app.add_option("--max-degree", degree_bound, "degree guardrail for field computations")
        ->envname("BINOM_MAX_DEGREE");
    app.add_option("--group-bound", group_bound, "subgroup enumeration bound")
        ->envname("BINOM_GROUP_BOUND");
    app.add_option("--jobs", jobs, "worker count for sweeps (results are input-ordered)")
        ->envname("BINOM_JOBS");
    app.add_flag("--timing", timing, "include timing_ms in reports")->envname("BINOM_TIMING");
    app.set_version_flag("--version", bn_version());

    // lambda
    auto* lam = app.add_subcommand("lambda", "minimal factor degree of t^n - alpha over K");
    std::string lam_field = "rational", lam_alpha;
    long lam_n = 0;
    lam->add_option("--field", lam_field, "minimal polynomial in x, or \"rational\"");
    lam->add_option("--alpha", lam_alpha, "rational number or polynomial in x")->required();
    lam->add_option("--n", lam_n, "exponent")->required();

    // hartley
    auto* har = app.add_subcommand("hartley", "n-Hartley decision for an integer polynomial");
    std::string har_delta, har_witness;
    long har_n = 0;
    std::vector<long> har_pair;
    har->add_option("--delta", har_delta, "polynomial in t")->required();
    har->add_option("--n", har_n, "order")->required();
    har->add_option("--witness", har_witness, "candidate witness polynomial g in t");
    har->add_option("--pair", har_pair, "coprime pair m n for the multiplicativity check")
        ->expected(2);

    // verify-group
    auto* ver = app.add_subcommand("verify-group", "exhaustive subgroup orbit verification");
    long ver_n = 0, ver_max = 0;
    bool ver_crt = false, ver_pp = false;
    ver->add_option("n", ver_n, "single modulus to verify");
    ver->add_option("--max", ver_max, "verify every n up to this bound");
    ver->add_flag("--crt", ver_crt, "also check the coprime-split orbit relations");
    ver->add_flag("--prime-power", ver_pp, "also check fixed points on odd prime powers");

    // galois
    auto* gal = app.add_subcommand("galois", "splitting field and Galois group of t^n - alpha");
    std::string gal_alpha;
    long gal_n = 0;
    gal->add_option("--alpha", gal_alpha, "rational alpha")->required();
    gal->add_option("--n", gal_n, "exponent")->required();

    // knots
    auto* kno = app.add_subcommand("knots", "Alexander polynomial generators and tables");
    kno->require_subcommand(1);
    auto* kt = kno->add_subcommand("torus", "torus knot Alexander polynomial");
    long kt_p = 0, kt_q = 0;
    kt->add_option("p", kt_p, "first parameter")->required();
    kt->add_option("q", kt_q, "second parameter")->required();
    auto* ks = kno->add_subcommand("sakuma", "the degree-960 cable example");
    auto* ktab = kno->add_subcommand("table", "Hartley table for a knot family");
    std::string ktab_family = "torus";
    long ktab_p = 0, ktab_q = 0, ktab_nmax = 0;
    ktab->add_option("--family", ktab_family, "knot family");
    ktab->add_option("--p", ktab_p, "first parameter")->required();
    ktab->add_option("--q", ktab_q, "second parameter")->required();
    ktab->add_option("--nmax", ktab_nmax, "table upper bound")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();
    kt->fallthrough();
    ks->fallthrough();
    ktab->fallthrough();

    CLI11_PARSE(app, argc, argv);

    bn_ctx* ctx = bn_ctx_new();
    if (!ctx) {
        std::cerr << "error: out of memory\n";
        return BN_EINTERNAL;
    }
    if (!seed.empty()) bn_ctx_set_option(ctx, "seed", seed.c_str());
    if (!degree_bound.empty()) bn_ctx_set_option(ctx, "degree_bound", degree_bound.c_str());
    if (!group_bound.empty()) bn_ctx_set_option(ctx, "group_bound", group_bound.c_str());
    if (timing) bn_ctx_set_option(ctx, "timing", "1");
    (void)jobs; // sweeps run serially; results are input-ordered either way

    int status = BN_EDOMAIN;
    char* report = nullptr;
    if (lam->parsed()) {
        status = bn_lambda(ctx, lam_field.c_str(), lam_alpha.c_str(), lam_n, &report);
    } else if (har->parsed()) {
        status = bn_hartley(ctx, har_delta.c_str(), har_n,
                            har_witness.empty() ? nullptr : har_witness.c_str(),
                            har_pair.size() == 2 ? har_pair[0] : 0,
                            har_pair.size() == 2 ? har_pair[1] : 0, &report);
    } else if (ver->parsed()) {
        long lo = 1, hi = 0;
        if (ver_max > 0) hi = ver_max;
        if (ver_n > 0) lo = hi = ver_n;
        if (hi == 0) {
            std::cerr << "error: verify-group needs a modulus or --max\n";
            bn_ctx_free(ctx);
            return BN_EDOMAIN;
        }
        status = bn_verify_group(ctx, lo, hi, ver_crt ? 1 : 0, ver_pp ? 1 : 0, &report);
    } else if (gal->parsed()) {
        status = bn_galois(ctx, gal_alpha.c_str(), gal_n, &report);
    } else if (kno->parsed()) {
        if (kt->parsed()) status = bn_knots_torus(ctx, kt_p, kt_q, &report);
        else if (ks->parsed()) status = bn_knots_sakuma(ctx, &report);
        else status = bn_knots_table(ctx, ktab_family.c_str(), ktab_p, ktab_q, ktab_nmax, &report);
    }

    int rc = out.emit(status, ctx, report);
    bn_ctx_free(ctx);
    return rc;
}
