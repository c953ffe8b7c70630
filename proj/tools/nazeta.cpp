// Command-line front end over the C API: parses flags, reads input files,
// routes to the one-shot library calls, and writes outputs atomically.
// Exit codes: 0 success, 1 input error, 2 mathematical-consistency failure,
// 3 numeric non-convergence.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "nazeta/capi.h"

namespace fs = std::filesystem;

namespace {

struct Shared {
    double tol = 0.0;                 // 0 = library default
    unsigned long long budget = 0;    // 0 = per-subcommand default
    unsigned threads = 0;             // 0 = hardware count
    std::string out_path;             // empty = stdout
    std::string report_path;          // zeta2g2 only
    bool force = false;
};

void add_shared(CLI::App* sub, Shared& sh) {
    sub->add_option("--tol", sh.tol, "tolerance (quadrature or tail, by subcommand)");
    sub->add_option("--budget", sh.budget,
                    "work cap: enumeration steps, primes, or quadrature cells");
    sub->add_option("--threads", sh.threads, "worker threads (0 = hardware count)");
    sub->add_option("--out", sh.out_path, "write the JSON result here (default stdout)");
    sub->add_option("--report", sh.report_path,
                    "write the consistency report here (.json for JSON, else CSV)");
    sub->add_flag("--force", sh.force, "evaluate outside the proven-convergence region");
}

int complain(const std::string& msg) {
    std::fprintf(stderr, "nazeta: %s\n", msg.c_str());
    return 1;
}

int complain_status(nz_status st) {
    std::fprintf(stderr, "nazeta: %s\n", nz_last_error());
    return static_cast<int>(st);
}

bool atomic_write_file(const std::string& path, const std::string& content,
                       std::string& err) {
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) {
        err = "cannot open " + tmp.string() + " for writing";
        return false;
    }
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.close();
    if (!f) {
        err = "short write to " + tmp.string();
        return false;
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        err = "cannot rename " + tmp.string() + " to " + path + ": " + ec.message();
        return false;
    }
    return true;
}

// Ship a successful result to --out or stdout.
int deliver(const Shared& sh, const std::string& text) {
    if (sh.out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return 0;
    }
    std::string err;
    if (!atomic_write_file(sh.out_path, text, err)) return complain(err);
    return 0;
}

int finish(nz_status st, char* out, const Shared& sh) {
    if (st != NZ_OK) return complain_status(st);
    std::string text(out);
    nz_string_free(out);
    return deliver(sh, text);
}

bool read_file(const std::string& path, std::string& content, std::string& err) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        err = "cannot read " + path;
        return false;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    content = ss.str();
    return true;
}

bool parse_degrees(const std::string& spec, unsigned& lo, unsigned& hi) {
    auto parse_one = [](const std::string& part, unsigned& v) {
        try {
            size_t used = 0;
            unsigned long n = std::stoul(part, &used);
            if (used != part.size() || n == 0 || n > 64) return false;
            v = static_cast<unsigned>(n);
            return true;
        } catch (const std::exception&) {
            return false;
        }
    };
    size_t dots = spec.find("..");
    if (dots == std::string::npos) {
        if (!parse_one(spec, lo)) return false;
        hi = lo;
        return true;
    }
    return parse_one(spec.substr(0, dots), lo) &&
           parse_one(spec.substr(dots + 2), hi) && lo <= hi;
}

bool parse_range(const std::string& spec, double& lo, double& hi) {
    size_t colon = spec.find(':');
    if (colon == std::string::npos) return false;
    try {
        size_t used = 0;
        lo = std::stod(spec.substr(0, colon), &used);
        if (used != colon) return false;
        std::string rest = spec.substr(colon + 1);
        hi = std::stod(rest, &used);
        return used == rest.size();
    } catch (const std::exception&) {
        return false;
    }
}

std::string cache_dir() {
    const char* env = std::getenv("NAZETA_CACHE");
    return (env && *env) ? std::string(env) : std::string("./.nazeta-cache");
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-r zeta functions of curves and rank-2 lattice zeta"};
    app.require_subcommand(1);

    Shared sh;
    std::string curve_path, degrees = "1..4", s_str, op = "xi", trange;
    unsigned rank_inv = 2, rank_euler = 2, rank_roots = 1;
    unsigned long long xmax = 100;
    double step = 0.1, tau_x = 0.0, tau_y = 1.0;

    CLI::App* cmd_count = app.add_subcommand("count", "point counts N_m by enumeration");
    cmd_count->add_option("--curve", curve_path, "curve JSON file")->required();
    cmd_count->add_option("--degrees", degrees, "degree or range, e.g. 3 or 1..4");
    add_shared(cmd_count, sh);

    CLI::App* cmd_artin = app.add_subcommand("artin", "point-count zeta of the curve");
    cmd_artin->add_option("--curve", curve_path, "curve JSON file")->required();
    add_shared(cmd_artin, sh);

    CLI::App* cmd_inv = app.add_subcommand("invariants", "alpha/beta/gamma table");
    cmd_inv->add_option("--curve", curve_path, "curve JSON file")->required();
    cmd_inv->add_option("--rank", rank_inv, "zeta rank (1 or 2)");
    add_shared(cmd_inv, sh);

    CLI::App* cmd_z22 = app.add_subcommand("zeta2g2", "rank-2 genus-2 pipeline");
    cmd_z22->add_option("--curve", curve_path, "curve JSON file")->required();
    add_shared(cmd_z22, sh);

    CLI::App* cmd_euler = app.add_subcommand("euler", "truncated global Euler product");
    cmd_euler->add_option("--curve", curve_path, "curve JSON file")->required();
    cmd_euler->add_option("--rank", rank_euler, "zeta rank (1 or 2)");
    cmd_euler->add_option("--xmax", xmax, "include good primes p <= xmax");
    cmd_euler->add_option("--s", s_str, "evaluation point, e.g. \"5.5+0i\"")->required();
    add_shared(cmd_euler, sh);

    CLI::App* cmd_lat = app.add_subcommand("lattice", "rank-2 lattice zeta");
    cmd_lat->add_option("--op", op, "xi, scan, or h0");
    cmd_lat->add_option("--s", s_str, "evaluation point for --op xi");
    cmd_lat->add_option("--trange", trange, "scan range lo:hi for --op scan");
    cmd_lat->add_option("--step", step, "scan step for --op scan");
    cmd_lat->add_option("--x", tau_x, "lattice parameter x for --op h0");
    cmd_lat->add_option("--y", tau_y, "lattice parameter y for --op h0");
    add_shared(cmd_lat, sh);

    CLI::App* cmd_roots = app.add_subcommand("roots", "reciprocal roots of the numerator");
    cmd_roots->add_option("--curve", curve_path, "curve JSON file")->required();
    cmd_roots->add_option("--rank", rank_roots, "zeta rank (1 or 2)");
    add_shared(cmd_roots, sh);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    std::string curve_json, io_err;
    if (!curve_path.empty() && !read_file(curve_path, curve_json, io_err)) {
        return complain(io_err);
    }

    char* out = nullptr;

    if (app.got_subcommand(cmd_count)) {
        unsigned lo = 0, hi = 0;
        if (!parse_degrees(degrees, lo, hi)) {
            return complain("cannot parse --degrees '" + degrees + "' (want m or lo..hi)");
        }
        nz_status st = nz_count_json(curve_json.c_str(), lo, hi, sh.budget, &out);
        return finish(st, out, sh);
    }

    if (app.got_subcommand(cmd_artin)) {
        nz_status st = nz_artin_json(curve_json.c_str(), &out);
        return finish(st, out, sh);
    }

    if (app.got_subcommand(cmd_inv)) {
        nz_status st = nz_invariants_json(curve_json.c_str(), rank_inv, &out);
        return finish(st, out, sh);
    }

    if (app.got_subcommand(cmd_z22)) {
        nz_status st = nz_zeta2g2_json(curve_json.c_str(), &out);
        if (st != NZ_OK) return complain_status(st);
        std::string text(out);
        nz_string_free(out);

        int verdict = 0;
        if (!sh.report_path.empty()) {
            bool as_json = ends_with(sh.report_path, ".json");
            char* rep = nullptr;
            nz_status rst = nz_zeta2g2_report(curve_json.c_str(), as_json ? 0 : 1, &rep);
            if (rst != NZ_OK) return complain_status(rst);
            std::string rtext(rep);
            nz_string_free(rep);
            std::string err;
            if (!atomic_write_file(sh.report_path, rtext, err)) return complain(err);
            bool row_failed = as_json ? rtext.find("\"all_pass\":false") != std::string::npos
                                      : rtext.find(",fail,") != std::string::npos;
            if (row_failed) verdict = 2;  // report is on disk before the nonzero exit
        }
        int rc = deliver(sh, text);
        return rc != 0 ? rc : verdict;
    }

    if (app.got_subcommand(cmd_euler)) {
        unsigned long long prime_cap = sh.budget ? sh.budget : 1000;
        if (xmax > prime_cap) {
            return complain("prime bound " + std::to_string(xmax) +
                            " exceeds the budget " + std::to_string(prime_cap) +
                            "; raise --budget to sweep further");
        }
        char* hex = nullptr;
        nz_status fst = nz_euler_fingerprint(curve_json.c_str(), rank_euler, &hex);
        if (fst != NZ_OK) return complain_status(fst);
        std::string key(hex);
        nz_string_free(hex);

        fs::path dir(cache_dir());
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) return complain("cannot create cache directory " + dir.string());
        std::string store = (dir / ("euler-" + key + ".jsonl")).string();

        nz_status st = nz_euler_json(curve_json.c_str(), rank_euler, xmax, s_str.c_str(),
                                     store.c_str(), sh.threads, sh.force ? 1 : 0, &out);
        return finish(st, out, sh);
    }

    if (app.got_subcommand(cmd_lat)) {
        if (op == "xi") {
            if (s_str.empty()) return complain("--op xi needs --s");
            nz_status st = nz_lattice_xi_json(s_str.c_str(), sh.tol, sh.budget,
                                              sh.threads, &out);
            return finish(st, out, sh);
        }
        if (op == "scan") {
            double lo = 0.0, hi = 0.0;
            if (trange.empty() || !parse_range(trange, lo, hi)) {
                return complain("--op scan needs --trange lo:hi");
            }
            nz_status st = nz_lattice_scan_json(lo, hi, step, sh.tol, sh.budget,
                                                sh.threads, &out);
            return finish(st, out, sh);
        }
        if (op == "h0") {
            nz_status st = nz_lattice_h0_json(tau_x, tau_y, sh.tol, &out);
            return finish(st, out, sh);
        }
        return complain("unknown lattice op '" + op + "' (want xi, scan, or h0)");
    }

    if (app.got_subcommand(cmd_roots)) {
        nz_status st = nz_roots_json(curve_json.c_str(), rank_roots, &out);
        return finish(st, out, sh);
    }

    return complain("no subcommand dispatched");
}
