#include "binomial_c.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "binom/affine_orbits.hpp"
#include "binom/galois_bridge.hpp"
#include "binom/hartley.hpp"
#include "binom/number_field.hpp"
#include "binom/parse.hpp"

using json = nlohmann::json;
using namespace binom;

namespace {
constexpr const char* kVersion = "0.1.0";
}

struct bn_ctx {
    Config cfg;
    bool timing = false;
    std::string last_error;
};

extern "C" bn_ctx* bn_ctx_new(void) { return new (std::nothrow) bn_ctx(); }

extern "C" void bn_ctx_free(bn_ctx* ctx) { delete ctx; }

extern "C" int bn_ctx_set_option(bn_ctx* ctx, const char* key, const char* value) {
    if (!ctx || !key || !value) return BN_EDOMAIN;
    try {
        std::string k(key), v(value);
        if (k == "seed") ctx->cfg.seed = std::stoull(v);
        else if (k == "group_bound") ctx->cfg.group_bound = std::stol(v);
        else if (k == "degree_bound") ctx->cfg.degree_bound = std::stol(v);
        else if (k == "timing") ctx->timing = std::stol(v) != 0;
        else {
            ctx->last_error = "unknown option: " + k;
            return BN_EDOMAIN;
        }
    } catch (const std::exception&) {
        ctx->last_error = "invalid option value";
        return BN_EDOMAIN;
    }
    return BN_OK;
}

extern "C" const char* bn_ctx_last_error(const bn_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "";
}

extern "C" const char* bn_version(void) { return kVersion; }

extern "C" void bn_free_string(char* s) { std::free(s); }

namespace {

char* dup_string(const std::string& s) {
    char* out = (char*)std::malloc(s.size() + 1);
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ExactRat parse_rational(const std::string& text) {
    try {
        ExactRat v(text, 10);
        if (v.get_den() == 0) throw std::invalid_argument("zero denominator");
        v.canonicalize();
        return v;
    } catch (const std::exception&) {
        throw ParseError("not a rational number: " + text);
    }
}

// Runs op(), which fills a report and returns a status; serializes the
// report when the operation produced one.
template <typename F>
int run_op(bn_ctx* ctx, char** out_json, const char* command, F&& op) {
    if (!ctx || !out_json) return BN_EDOMAIN;
    *out_json = nullptr;
    ctx->last_error.clear();
    global_config() = ctx->cfg;
    auto t0 = std::chrono::steady_clock::now();
    json report;
    report["command"] = command;
    report["version"] = kVersion;
    int status;
    try {
        status = op(report);
    } catch (const ParseError& e) {
        ctx->last_error = e.what();
        return BN_EPARSE;
    } catch (const std::domain_error& e) {
        ctx->last_error = e.what();
        return BN_EDOMAIN;
    } catch (const std::logic_error& e) {
        ctx->last_error = e.what();
        return BN_EVERDICT;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return BN_EINTERNAL;
    }
    if (ctx->timing) {
        auto t1 = std::chrono::steady_clock::now();
        report["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    }
    *out_json = dup_string(report.dump());
    if (!*out_json) return BN_EINTERNAL;
    return status;
}

std::string rat_string(const ExactRat& v) { return v.get_str(); }

} // namespace

extern "C" int bn_lambda(bn_ctx* ctx, const char* field_minpoly, const char* alpha_text,
                         long n, char** out_json) {
    return run_op(ctx, out_json, "lambda", [&](json& report) {
        if (!alpha_text) throw ParseError("missing alpha");
        if (n < 1) throw std::domain_error("n must be >= 1");
        bool rational = !field_minpoly || std::string(field_minpoly) == "rational";
        NumberFieldPtr K;
        json inputs;
        if (rational) {
            K = NumberField::rationals();
            inputs["field"] = "rational";
        } else {
            PolyZ h = parse_poly(field_minpoly, 'x');
            K = NumberField::create(h); // throws domain_error when reducible
            inputs["field"] = poly_to_string(z_primitive(h), 'x');
        }
        NfElem alpha = rational
                           ? NfElem::from_rational(K, parse_rational(alpha_text))
                           : NfElem(K, to_rational(parse_poly(alpha_text, 'x')));
        inputs["alpha"] = rational ? rat_string(alpha.rational_value())
                                   : poly_to_string(alpha.repr(), 'x');
        inputs["n"] = n;
        report["inputs"] = inputs;

        std::vector<long> degrees;
        if (alpha.is_zero()) {
            degrees.assign(n, 1);
        } else if (auto r = as_root_of_unity(alpha)) {
            degrees = degrees_root_of_unity(*r, n);
        } else {
            if ((long)K->degree() * n > global_config().degree_bound)
                throw std::domain_error("field degree times n exceeds the degree bound");
            degrees = factor_binomial(alpha, n).degrees;
        }
        long lambda = degrees.front();
        bool ok = true;
        for (long d : degrees)
            if (d % lambda != 0) ok = false;
        json results;
        results["lambda"] = lambda;
        results["degrees"] = degrees;
        results["divisibility_ok"] = ok;
        report["results"] = results;
        return ok ? BN_OK : BN_EVERDICT;
    });
}

extern "C" int bn_hartley(bn_ctx* ctx, const char* delta_text, long n, const char* witness,
                          long pair_m, long pair_n, char** out_json) {
    return run_op(ctx, out_json, "hartley", [&](json& report) {
        if (!delta_text) throw ParseError("missing delta");
        PolyZ delta = parse_poly(delta_text, 't');
        json inputs;
        inputs["delta"] = poly_to_string(delta, 't');
        inputs["n"] = n;
        HartleyReport rep = is_n_hartley(delta, n);
        json results;
        results["verdict"] = rep.verdict;
        results["content_unit"] = rat_string(rep.content_unit);
        json factors = json::array();
        for (const auto& f : rep.per_factor) {
            json jf;
            jf["factor"] = poly_to_string(f.h, 't');
            jf["multiplicity"] = f.s;
            jf["lambda"] = f.lambda;
            jf["divides"] = f.divides;
            factors.push_back(jf);
        }
        results["per_factor"] = factors;

        int status = BN_OK;
        if (witness) {
            PolyZ g = parse_poly(witness, 't');
            inputs["witness"] = poly_to_string(g, 't');
            auto sign = verify_witness(delta, n, g);
            json w;
            w["valid"] = sign.has_value();
            if (sign) w["sign"] = *sign;
            results["witness"] = w;
            // a valid witness must imply a positive verdict
            if (sign && !rep.verdict) status = BN_EVERDICT;
        }
        if (pair_m != 0 || pair_n != 0) {
            if (pair_m < 1 || pair_n < 1 || gcd_l(pair_m, pair_n) != 1)
                throw std::domain_error("--pair requires coprime m, n >= 1");
            inputs["pair"] = json::array({pair_m, pair_n});
            json p;
            p["hartley_m"] = is_n_hartley(delta, pair_m).verdict;
            p["hartley_n"] = is_n_hartley(delta, pair_n).verdict;
            p["hartley_mn"] = is_n_hartley(delta, pair_m * pair_n).verdict;
            bool consistent = hartley_multiplicativity(delta, pair_m, pair_n);
            p["consistent"] = consistent;
            results["pair"] = p;
            if (!consistent) status = BN_EVERDICT;
        }
        report["inputs"] = inputs;
        report["results"] = results;
        return status;
    });
}

extern "C" int bn_verify_group(bn_ctx* ctx, long n_min, long n_max, int do_crt,
                               int do_prime_power, char** out_json) {
    return run_op(ctx, out_json, "verify-group", [&](json& report) {
        if (n_min < 1 || n_max < n_min) throw std::domain_error("invalid n range");
        json inputs;
        inputs["n_min"] = n_min;
        inputs["n_max"] = n_max;
        inputs["crt"] = do_crt != 0;
        inputs["prime_power"] = do_prime_power != 0;
        report["inputs"] = inputs;

        bool all_ok = true;
        json per_n = json::array();
        for (long n = n_min; n <= n_max; ++n) {
            json row;
            row["n"] = n;
            auto subs = enumerate_subgroups(n); // throws past the bound
            row["subgroup_count"] = subs.size();
            bool divisible = true;
            for (const auto& G : subs) {
                auto rep = orbit_report(G); // asserts lambda | n
                if (!rep.divisibility_ok) divisible = false;
            }
            row["all_divisible"] = divisible;
            if (!divisible) all_ok = false;

            if (do_crt) {
                // split off the largest prime-power component
                long p = 2, nn = n;
                long best_q = 1;
                while (nn > 1) {
                    while (nn % p != 0 && p * p <= nn) ++p;
                    if (nn % p != 0) p = nn;
                    long q = 1;
                    while (nn % p == 0) {
                        q *= p;
                        nn /= p;
                    }
                    best_q = q;
                    ++p;
                }
                if (best_q > 1 && best_q < n) {
                    bool crt_ok = true;
                    for (const auto& G : subs)
                        if (!crt_relations_check(G, n / best_q, best_q)) crt_ok = false;
                    row["crt_split"] = json::array({n / best_q, best_q});
                    row["crt_ok"] = crt_ok;
                    if (!crt_ok) all_ok = false;
                }
            }
            if (do_prime_power) {
                long p = 3;
                while (p < n && n % p != 0) p += 2;
                bool is_odd_pp = n > 1 && n % 2 == 1;
                if (is_odd_pp) {
                    long t = n;
                    long q = p;
                    while (t % q == 0) t /= q;
                    if (t != 1) is_odd_pp = false;
                }
                if (is_odd_pp) {
                    bool fp_ok = true;
                    long checked = 0;
                    for (const auto& g : full_group(n).elements) {
                        auto u = prime_power_fixed_point(g);
                        if (gcd_l(g.a - 1 + n, n) == 1) {
                            if (!u || !(act(g, *u) == *u)) fp_ok = false;
                            ++checked;
                        } else if (u) {
                            fp_ok = false;
                        }
                    }
                    row["fixed_points_checked"] = checked;
                    row["fixed_point_ok"] = fp_ok;
                    if (!fp_ok) all_ok = false;
                }
            }
            per_n.push_back(row);
        }
        json results;
        results["per_n"] = per_n;
        results["all_ok"] = all_ok;
        report["results"] = results;
        return all_ok ? BN_OK : BN_EVERDICT;
    });
}

extern "C" int bn_galois(bn_ctx* ctx, const char* alpha_text, long n, char** out_json) {
    return run_op(ctx, out_json, "galois", [&](json& report) {
        if (!alpha_text) throw ParseError("missing alpha");
        ExactRat alpha = parse_rational(alpha_text);
        json inputs;
        inputs["alpha"] = rat_string(alpha);
        inputs["n"] = n;
        report["inputs"] = inputs;

        GaloisGroup gg = automorphism_group(splitting_field(alpha, n), n);
        OrbitReport rep = orbit_report(gg.group);
        auto bf = factor_binomial(NfElem::from_rational(NumberField::rationals(), alpha), n);
        std::vector<long> sizes;
        for (const auto& o : rep.orbits) sizes.push_back((long)o.size());
        std::sort(sizes.begin(), sizes.end());
        bool cross = rep.lambda == bf.lambda && sizes == bf.degrees;

        json results;
        results["field_degree"] = gg.field.field_degree();
        results["minpoly"] = poly_to_string(gg.field.primitive_minpoly, 'x');
        json group = json::array();
        for (const auto& e : gg.group.elements) group.push_back(json::array({e.a, e.b}));
        results["group"] = group;
        results["group_order"] = gg.group.order();
        results["orbit_sizes"] = sizes;
        results["lambda"] = rep.lambda;
        results["factor_degrees"] = bf.degrees;
        results["cross_check"] = cross;
        report["results"] = results;
        return cross ? BN_OK : BN_EVERDICT;
    });
}

extern "C" int bn_knots_torus(bn_ctx* ctx, long p, long q, char** out_json) {
    return run_op(ctx, out_json, "knots torus", [&](json& report) {
        json inputs;
        inputs["p"] = p;
        inputs["q"] = q;
        report["inputs"] = inputs;
        PolyZ delta = torus_knot_delta(p, q);
        json results;
        results["delta"] = poly_to_string(delta, 't');
        results["degree"] = delta.degree();
        report["results"] = results;
        return BN_OK;
    });
}

extern "C" int bn_knots_sakuma(bn_ctx* ctx, char** out_json) {
    return run_op(ctx, out_json, "knots sakuma", [&](json& report) {
        report["inputs"] = json::object();
        PolyZ delta = sakuma_delta();
        json results;
        results["degree"] = delta.degree();
        json verdicts;
        bool ok = true;
        for (long n : {2L, 3L, 4L, 6L}) {
            bool v = is_n_hartley(delta, n).verdict;
            verdicts[std::to_string(n)] = v;
            if (!v) ok = false; // this example satisfies all four orders
        }
        results["hartley"] = verdicts;
        results["all_asserted"] = ok;
        report["results"] = results;
        return ok ? BN_OK : BN_EVERDICT;
    });
}

extern "C" int bn_knots_table(bn_ctx* ctx, const char* family, long p, long q, long nmax,
                              char** out_json) {
    return run_op(ctx, out_json, "knots table", [&](json& report) {
        if (!family || std::string(family) != "torus")
            throw std::domain_error("unknown family (expected \"torus\")");
        if (nmax < 1) throw std::domain_error("nmax must be >= 1");
        json inputs;
        inputs["family"] = "torus";
        inputs["p"] = p;
        inputs["q"] = q;
        inputs["nmax"] = nmax;
        report["inputs"] = inputs;

        PolyZ delta = torus_knot_delta(p, q);
        json rows = json::array();
        bool consistent = true;
        for (long n = 1; n <= nmax; ++n) {
            bool v = is_n_hartley(delta, n).verdict;
            bool expected = gcd_l(n, p * q) == 1;
            json row;
            row["n"] = n;
            row["hartley"] = v;
            row["coprime_rule"] = expected;
            rows.push_back(row);
            if (v != expected) consistent = false;
        }
        json results;
        results["delta"] = poly_to_string(delta, 't');
        results["rows"] = rows;
        results["consistent"] = consistent;
        report["results"] = results;
        return consistent ? BN_OK : BN_EVERDICT;
    });
}
