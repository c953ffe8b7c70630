#include "nazeta/capi.h"

#include <cctype>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "nazeta/artin_zeta.hpp"
#include "nazeta/curve_count.hpp"
#include "nazeta/errors.hpp"
#include "nazeta/euler_product.hpp"
#include "nazeta/invariants.hpp"
#include "nazeta/json_io.hpp"
#include "nazeta/lattice_zeta.hpp"
#include "nazeta/nonabelian.hpp"
#include "nazeta/rank2_genus2.hpp"
#include "nazeta/report.hpp"

namespace {

using namespace nazeta;

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) return nullptr;
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <class F>
nz_status guarded(char** out, F&& body) {
    if (!out) {
        g_last_error = "output pointer is null";
        return NZ_INPUT_ERROR;
    }
    try {
        std::string text = body();
        char* p = dup_string(text);
        if (!p) {
            g_last_error = "out of memory";
            return NZ_NUMERIC_ERROR;
        }
        *out = p;
        return NZ_OK;
    } catch (const input_error& e) {
        g_last_error = e.what();
        return NZ_INPUT_ERROR;
    } catch (const math_error& e) {
        g_last_error = e.what();
        return NZ_MATH_ERROR;
    } catch (const numeric_error& e) {
        g_last_error = e.what();
        return NZ_NUMERIC_ERROR;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return NZ_MATH_ERROR;
    }
}

std::string require_text(const char* p, const char* what) {
    if (!p) throw input_error(std::string(what) + " is null");
    return std::string(p);
}

// Complex literals like "5.5+0i", "1.3-2.5i", "-0.3+0i", "2", "1.5i".
std::complex<double> parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw input_error("empty complex literal");
    auto to_double = [&](const std::string& part, bool imag_unit_only_ok) {
        if (imag_unit_only_ok && (part.empty() || part == "+")) return 1.0;
        if (imag_unit_only_ok && part == "-") return -1.0;
        size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(part, &used);
        } catch (const std::exception&) {
            throw input_error("could not parse complex literal '" + raw + "'");
        }
        if (used != part.size()) {
            throw input_error("could not parse complex literal '" + raw + "'");
        }
        return v;
    };
    if (s.back() != 'i') {
        return {to_double(s, false), 0.0};
    }
    std::string body = s.substr(0, s.size() - 1);
    // Split at the last +/- that is not a leading sign or an exponent sign.
    size_t split = std::string::npos;
    for (size_t i = body.size(); i-- > 1;) {
        char c = body[i];
        if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        return {0.0, to_double(body, true)};
    }
    double re = to_double(body.substr(0, split), false);
    std::string im_part = body.substr(split);
    return {re, to_double(im_part, true)};
}

std::string format_complex(std::complex<double> z) {
    std::string out = fmt_double(z.real());
    out += (std::signbit(z.imag()) ? "-" : "+");
    out += fmt_double(std::abs(z.imag()));
    out += "i";
    return out;
}

CurveSpec curve_from_json(const char* curve_json) {
    return parse_curve_json(require_text(curve_json, "curve JSON"));
}

IntegerCurve integer_curve_from_json(const char* curve_json) {
    std::string text = require_text(curve_json, "curve JSON");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("curve JSON malformed: ") + e.what());
    }
    if (!j.is_object() || !j.contains("f") || !j["f"].is_array()) {
        throw input_error("curve JSON needs an \"f\" array of integer coefficients");
    }
    std::vector<long long> f;
    for (const auto& c : j["f"]) {
        if (!c.is_number_integer()) {
            throw input_error("curve JSON: \"f\" entries must be integers");
        }
        f.push_back(c.get<long long>());
    }
    return make_integer_curve(std::move(f));
}

void write_complex_fields(JsonWriter& w, std::complex<double> z) {
    w.key("re").value(z.real());
    w.key("im").value(z.imag());
}

void write_roots_array(JsonWriter& w, const std::vector<std::complex<double>>& roots) {
    w.begin_array();
    for (const auto& r : roots) {
        w.begin_object();
        write_complex_fields(w, r);
        w.key("abs").value(std::abs(r));
        w.end_object();
    }
    w.end_array();
}

// Largest distance from q/omega back to the root multiset; zero means the
// roots pair exactly under omega -> q/omega.
double pairing_defect(const std::vector<std::complex<double>>& roots, double q) {
    double worst = 0.0;
    for (const auto& r : roots) {
        std::complex<double> want = q / r;
        double best = std::numeric_limits<double>::infinity();
        for (const auto& cand : roots) {
            best = std::min(best, std::abs(want - cand));
        }
        worst = std::max(worst, best);
    }
    return worst;
}

InvariantTable table_for_rank(const CurveSpec& spec, unsigned rank) {
    if (rank == 1) return table_rank1(ArtinZeta::from_curve(spec.curve));
    if (rank == 2) return rank2_genus2_table(rank2_input_from_curve(spec.curve));
    throw input_error("invariant tables are implemented for rank 1 and rank 2");
}

NonAbelianZeta zeta_for_rank(const CurveSpec& spec, unsigned rank) {
    return assemble_zeta(table_for_rank(spec, rank));
}

}  // namespace

extern "C" {

const char* nz_version(void) { return "1.0.0"; }

const char* nz_last_error(void) { return g_last_error.c_str(); }

void nz_string_free(char* s) { std::free(s); }

nz_status nz_count_json(const char* curve_json, unsigned d_lo, unsigned d_hi,
                        unsigned long long budget, char** out_json) {
    return guarded(out_json, [&] {
        CurveSpec spec = curve_from_json(curve_json);
        if (d_lo < 1 || d_hi < d_lo) {
            throw input_error("degree range must satisfy 1 <= lo <= hi");
        }
        unsigned long long cap = budget ? budget : 100000000ull;
        long double work = 0.0L;
        for (unsigned m = d_lo; m <= d_hi; ++m) {
            work += std::pow(static_cast<long double>(spec.field.q()),
                             static_cast<long double>(m));
        }
        if (work > static_cast<long double>(cap)) {
            throw input_error(
                "enumeration budget exceeded: raise the budget to allow this "
                "degree range");
        }
        JsonWriter w;
        w.begin_object();
        w.key("q").value(static_cast<unsigned long>(spec.field.q()));
        w.key("genus").value(spec.curve.genus);
        w.key("counts").begin_array();
        for (unsigned m = d_lo; m <= d_hi; ++m) {
            w.begin_object();
            w.key("m").value(m);
            w.key("n").value(static_cast<unsigned long>(count_points(spec.curve, m)));
            w.end_object();
        }
        w.end_array();
        w.end_object();
        return w.str() + "\n";
    });
}

nz_status nz_artin_json(const char* curve_json, char** out_json) {
    return guarded(out_json, [&] {
        CurveSpec spec = curve_from_json(curve_json);
        ArtinZeta z = ArtinZeta::from_curve(spec.curve);
        JsonWriter w;
        w.begin_object();
        w.key("q").value(static_cast<unsigned long>(z.q()));
        w.key("genus").value(z.g());
        w.key("numerator");
        write_poly(w, z.numerator());
        w.key("class_number").value(z.class_number());
        Rational n1 = Rational(BigInt(static_cast<long>(z.q())) + 1) +
                      z.numerator().coeff(1);
        w.key("n1").value(n1);
        w.key("weil_deviation").value(z.weil_deviation());
        w.end_object();
        return w.str() + "\n";
    });
}

nz_status nz_invariants_json(const char* curve_json, unsigned rank,
                             char** out_json) {
    return guarded(out_json, [&] {
        CurveSpec spec = curve_from_json(curve_json);
        InvariantTable t = table_for_rank(spec, rank);
        JsonWriter w;
        w.begin_object();
        w.key("rank").value(t.r);
        w.key("q").value(static_cast<unsigned long>(t.q));
        w.key("genus").value(t.g);
        w.key("alpha_core").begin_array();
        for (const auto& a : t.alpha_core) w.value(a);
        w.end_array();
        w.key("beta_core").begin_array();
        for (const auto& b : t.beta_core) w.value(b);
        w.end_array();
        long top = static_cast<long>(t.r) * (2L * t.g - 2L);
        w.key("window").begin_array();
        for (long d = 0; d <= top; ++d) {
            w.begin_object();
            w.key("d").value(d);
            w.key("alpha").value(extend_alpha(t, d));
            w.key("beta").value(extend_beta(t, d));
            w.key("gamma").value(gamma_of(t, d));
            w.key("clifford_ok").value(clifford_ok(t, d));
            w.end_object();
        }
        w.end_array();
        w.end_object();
        return w.str() + "\n";
    });
}

nz_status nz_zeta2g2_json(const char* curve_json, char** out_json) {
    return guarded(out_json, [&] {
        CurveSpec spec = curve_from_json(curve_json);
        Rank2Input in = rank2_input_from_curve(spec.curve);
        NonAbelianZeta z = assemble_rank2_genus2(in);
        JsonWriter w;
        w.begin_object();
        w.key("q").value(static_cast<unsigned long>(in.z.q()));
        w.key("rank").value(2);
        w.key("genus").value(2);
        w.key("n1").value(in.n1);
        w.key("class_number").value(in.h);
        w.key("weierstrass_count").value(in.w_count);
        w.key("gamma").begin_array();
        for (int d = 0; d <= 2; ++d) w.value(gamma2g2(in, d));
        w.end_array();
        w.key("beta2_line").begin_array();
        for (int d = 0; d <= 1; ++d) w.value(beta2_line(in, d));
        w.end_array();
        w.key("beta2").begin_array();
        for (int d = 0; d <= 1; ++d) w.value(beta2_degree(in, d));
        w.end_array();
        w.key("numerator");
        write_poly(w, z.numerator());
        w.key("roots");
        write_roots_array(w, z.reciprocal_roots());
        w.key("pairing_defect")
            .value(pairing_defect(z.reciprocal_roots(),
                                  static_cast<double>(z.q())));
        w.end_object();
        return w.str() + "\n";
    });
}

nz_status nz_zeta2g2_report(const char* curve_json, int as_csv,
                            char** out_text) {
    return guarded(out_text, [&] {
        CurveSpec spec = curve_from_json(curve_json);
        CheckReport report = rank2_genus2_report(rank2_input_from_curve(spec.curve));
        return as_csv ? report.to_csv() : report.to_json();
    });
}

nz_status nz_euler_fingerprint(const char* curve_json, unsigned rank,
                               char** out_hex) {
    return guarded(out_hex, [&] {
        IntegerCurve c = integer_curve_from_json(curve_json);
        char hex[17];
        std::snprintf(hex, sizeof hex, "%016llx",
                      static_cast<unsigned long long>(
                          LocalFactorStore::fingerprint_of(c, rank)));
        return std::string(hex);
    });
}

nz_status nz_euler_json(const char* curve_json, unsigned rank,
                        unsigned long long xmax, const char* s_str,
                        const char* store_path, unsigned threads, int force,
                        char** out_json) {
    return guarded(out_json, [&] {
        IntegerCurve c = integer_curve_from_json(curve_json);
        std::complex<double> s = parse_complex(require_text(s_str, "s"));
        std::string path = require_text(store_path, "store path");

        uint64_t fp = LocalFactorStore::fingerprint_of(c, rank);
        LocalFactorStore store = std::filesystem::exists(path)
                                     ? LocalFactorStore::load(path)
                                     : LocalFactorStore(fp, rank);
        size_t before = store.size();
        compute_factors(c, rank, xmax, threads, store);
        if (store.size() != before || !std::filesystem::exists(path)) {
            store.save(path);
        }
        EulerReport rep = truncated_product(store, c, s, xmax, force != 0);

        char fp_hex[17];
        std::snprintf(fp_hex, sizeof fp_hex, "%016llx",
                      static_cast<unsigned long long>(fp));
        JsonWriter w;
        w.begin_object();
        w.key("rank").value(rank);
        w.key("xmax").value(static_cast<unsigned long>(xmax));
        w.key("s").value(format_complex(s));
        w.key("abscissa").value(euler_abscissa(rank, c.genus));
        w.key("fingerprint").value(fp_hex);
        w.key("store_size").value(static_cast<unsigned long>(store.size()));
        w.key("partials").begin_array();
        for (const auto& p : rep.partials) {
            w.begin_object();
            w.key("x").value(static_cast<unsigned long>(p.x));
            write_complex_fields(w, p.value);
            w.end_object();
        }
        w.end_array();
        w.key("deltas").begin_array();
        for (double d : rep.deltas) w.value(d);
        w.end_array();
        w.key("value").begin_object();
        write_complex_fields(w, rep.value);
        w.end_object();
        w.end_object();
        return w.str() + "\n";
    });
}

nz_status nz_roots_json(const char* curve_json, unsigned rank,
                        char** out_json) {
    return guarded(out_json, [&] {
        CurveSpec spec = curve_from_json(curve_json);
        NonAbelianZeta z = zeta_for_rank(spec, rank);
        JsonWriter w;
        w.begin_object();
        w.key("rank").value(z.r());
        w.key("q").value(static_cast<unsigned long>(z.q()));
        w.key("degree").value(static_cast<long>(z.numerator().degree()));
        w.key("roots");
        write_roots_array(w, z.reciprocal_roots());
        // rank 1 roots sit on |w| = sqrt(q); higher rank roots only pair
        // under w -> q/w, so the right scale diagnostic differs by rank
        if (z.r() == 1) {
            w.key("weil_deviation").value(z.weil_deviation());
        }
        w.key("pairing_defect")
            .value(pairing_defect(z.reciprocal_roots(),
                                  static_cast<double>(z.q())));
        w.end_object();
        return w.str() + "\n";
    });
}

nz_status nz_lattice_xi_json(const char* s_str, double tol, size_t max_cells,
                             unsigned threads, char** out_json) {
    return guarded(out_json, [&] {
        std::complex<double> s = parse_complex(require_text(s_str, "s"));
        QuadSpec quad;
        if (tol > 0.0) quad.tol = tol;
        else if (tol != 0.0) throw input_error("quadrature tolerance must be positive");
        if (max_cells) quad.max_cells = max_cells;
        quad.threads = threads;
        QuadResult r = xi_rank2(s, quad);
        JsonWriter w;
        w.begin_object();
        w.key("s").value(format_complex(s));
        w.key("value").begin_object();
        write_complex_fields(w, r.value);
        w.end_object();
        w.key("error_estimate").value(r.error_estimate);
        w.key("cells").value(static_cast<unsigned long>(r.cells));
        w.end_object();
        return w.str() + "\n";
    });
}

nz_status nz_lattice_scan_json(double t_min, double t_max, double step,
                               double tol, size_t max_cells, unsigned threads,
                               char** out_json) {
    return guarded(out_json, [&] {
        QuadSpec quad;
        if (tol > 0.0) quad.tol = tol;
        else if (tol != 0.0) throw input_error("quadrature tolerance must be positive");
        if (max_cells) quad.max_cells = max_cells;
        quad.threads = threads;
        ScanResult sc = critical_scan(t_min, t_max, step, quad);
        JsonWriter w;
        w.begin_object();
        w.key("t_min").value(t_min);
        w.key("t_max").value(t_max);
        w.key("step").value(step);
        w.key("points").begin_array();
        for (const auto& p : sc.points) {
            w.begin_object();
            w.key("t").value(p.t);
            write_complex_fields(w, p.xi);
            w.end_object();
        }
        w.end_array();
        w.key("sign_changes").begin_array();
        for (const auto& [a, b] : sc.sign_changes) {
            w.begin_array();
            w.value(a);
            w.value(b);
            w.end_array();
        }
        w.end_array();
        w.key("max_im").value(sc.max_im);
        w.end_object();
        return w.str() + "\n";
    });
}

nz_status nz_lattice_h0_json(double x, double y, double tail_tol,
                             char** out_json) {
    return guarded(out_json, [&] {
        EpsteinParams ep;
        if (tail_tol > 0.0) ep.tail_tol = tail_tol;
        else if (tail_tol != 0.0) throw input_error("tail tolerance must be positive");
        double h = h0_lattice(UpperHalfPoint{x, y}, ep);
        JsonWriter w;
        w.begin_object();
        w.key("x").value(x);
        w.key("y").value(y);
        w.key("h0").value(h);
        w.end_object();
        return w.str() + "\n";
    });
}

}  // extern "C"
