#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quatsp/covers.hpp"
#include "quatsp/errors.hpp"
#include "quatsp/io.hpp"
#include "quatsp/qmatrix.hpp"
#include "quatsp/relsvd.hpp"
#include "quatsp/rng.hpp"
#include "quatsp/spectral.hpp"
#include "quatsp/stiefel.hpp"
#include "quatsp/study.hpp"

namespace {

using nlohmann::json;
using namespace quatsp;

// Shortest round-trip decimal, same formatting as matrix files.
std::string fmt(double x) { return json(x).dump(); }

json matrix_json(const QMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Quaternion& q = m(i, c);
            row.push_back(json::array({q.w, q.x, q.y, q.z}));
        }
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

struct Config {
    std::uint64_t seed = 0;
    std::size_t samples = 10000;
    double tol = 1e-9;
    std::string output = "text";
    bool is_json() const { return output == "json"; }
};

void add_output_flag(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--output", cfg.output, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

// ---------------------------------------------------------------- decompose

int cmd_decompose(const std::string& input, std::size_t k, const Config& cfg) {
    QMatrix a = read_matrix_path(input);
    RelativeSvd d = decompose(a, k, cfg.tol);
    double residual = (rebuild(d) - a).frobenius_norm();
    if (cfg.is_json()) {
        json out{{"n", d.n},
                 {"k", d.k},
                 {"ones", d.ones},
                 {"interior", d.angles()},
                 {"zeros", d.zeros},
                 {"complement_ones", d.complement_ones()},
                 {"thetas", d.thetas},
                 {"a", matrix_json(d.a)},
                 {"b", matrix_json(d.b)},
                 {"m", matrix_json(d.m)},
                 {"l", matrix_json(d.l)},
                 {"residual", residual}};
        std::cout << out.dump(1) << "\n";
        return 0;
    }
    std::cout << "relative SVD of a symplectic " << d.n << " x " << d.n << " matrix at k = " << k
              << "\n"
              << "singular structure of the corner block: " << d.ones << " ones, " << d.angles()
              << " interior, " << d.zeros << " zeros (" << d.complement_ones()
              << " complementary ones)\n";
    if (!d.thetas.empty()) {
        std::cout << "angles (radians):";
        for (double t : d.thetas) std::cout << " " << fmt(t);
        std::cout << "\n";
    }
    std::cout << "reconstruction residual: " << fmt(residual) << "\n";
    return 0;
}

// ---------------------------------------------------------------- admissible

const char* reason_text(AdmissibilityReport::Reason r) {
    switch (r) {
        case AdmissibilityReport::Reason::ok:
            return "ok";
        case AdmissibilityReport::Reason::eigenvalue_above_one:
            return "a singular value exceeds 1";
        default:
            return "multiplicity of singular value 1 is below the excess 2k - n";
    }
}

int cmd_admissible(const std::string& input, std::size_t n, bool with_completion,
                   const Config& cfg) {
    QMatrix p = read_matrix_path(input);
    AdmissibilityReport rep = is_admissible(p, n, cfg.tol);
    std::optional<StiefelFrame> frame;
    if (rep.admissible && with_completion) frame = complete(p, n, cfg.tol);
    if (cfg.is_json()) {
        json out{{"n", n},
                 {"k", p.rows()},
                 {"admissible", rep.admissible},
                 {"excess", rep.excess},
                 {"ones", rep.classes.ones},
                 {"interior", rep.classes.interior},
                 {"zeros", rep.classes.zeros},
                 {"reason", reason_text(rep.reason)}};
        if (frame) out["completion"] = matrix_json(frame->t);
        std::cout << out.dump(1) << "\n";
    } else {
        std::cout << "block is " << (rep.admissible ? "" : "NOT ") << n << "-admissible (excess "
                  << rep.excess << "; " << rep.classes.ones << " ones, "
                  << rep.classes.interior.size() << " interior, " << rep.classes.zeros
                  << " zeros)\n";
        if (!rep.admissible) std::cout << "reason: " << reason_text(rep.reason) << "\n";
        if (frame) {
            std::cout << "completion block (stack it on top of the input to get the frame):\n";
            write_matrix(std::cout, frame->t);
        }
    }
    return rep.admissible ? 0 : 2;
}

// -------------------------------------------------------------- verify-cover

std::vector<CayleySet> read_family(const std::string& path, std::size_t& n_out) {
    std::string text;
    {
        std::ostringstream buf;
        if (path == "-") {
            buf << std::cin.rdbuf();
        } else {
            std::ifstream f(path);
            if (!f) throw ParseError("cannot open " + path);
            buf << f.rdbuf();
        }
        text = buf.str();
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() ||
        !j.contains("centers") || !j["centers"].is_array())
        throw ParseError("family file: expected {\"n\": count, \"centers\": [...]}");
    n_out = j["n"].get<std::size_t>();
    std::vector<CayleySet> family;
    for (std::size_t i = 0; i < j["centers"].size(); ++i) {
        const json& c = j["centers"][i];
        if (!c.is_object() || !c.contains("matrix"))
            throw ParseError("family file: center " + std::to_string(i) +
                             " must be {\"label\"?, \"matrix\": ...}");
        CayleySet s;
        s.n = n_out;
        s.label = c.contains("label") ? c["label"].get<std::string>()
                                      : "center " + std::to_string(i);
        s.p = read_matrix(c["matrix"].dump());
        family.push_back(std::move(s));
    }
    return family;
}

// Canonical deterministic probes: the embedded sign-pattern frames. They are
// the exact witnesses for the small covers and catch measure-zero holes that
// sampling cannot (a single Cayley set misses only a null set).
std::vector<StiefelFrame> sign_probes(std::size_t n, std::size_t k) {
    std::vector<StiefelFrame> probes;
    if (k > 6) return probes;  // 2^k frames stops being a probe set
    for (std::size_t bits = 0; bits < (std::size_t{1} << k); ++bits) {
        std::vector<double> d(k);
        for (std::size_t s = 0; s < k; ++s) d[s] = ((bits >> (k - 1 - s)) & 1u) ? -1.0 : 1.0;
        probes.push_back(iota(QMatrix::diagonal(k, k, d), n));
    }
    return probes;
}

int cmd_verify_cover(const std::string& family_kind, std::size_t k, const std::string& family_path,
                     const std::string& sampler_name, const std::string& witness_out,
                     const Config& cfg) {
    std::vector<CayleySet> family;
    std::size_t n = 0;
    if (family_kind == "sp2") {
        family = sp2_cover();
        n = 2;
        k = 2;
    } else if (family_kind.rfind("spk-j", 0) == 0) {
        std::size_t j = family_kind[5] - '0';
        if (k == 0) throw std::invalid_argument("spk families need -k");
        family = spk_cover(k, j);
        n = 2 * k - j;
    } else {
        family = read_family(family_path, n);
        if (family.empty()) throw std::invalid_argument("family file has no centers");
        k = family.front().p.rows();
        for (const CayleySet& s : family) {
            AdmissibilityReport a = is_admissible(s.p, n);
            if (!a.admissible)
                throw InadmissibleError(
                    "center " + s.label + " is not admissible in dimension " + std::to_string(n),
                    a);
        }
    }
    SamplerKind sampler =
        sampler_name == "stiefel" ? SamplerKind::full_stiefel : SamplerKind::sp_k_embedded;
    CoverReport rep =
        verify_cover(family, sampler, cfg.samples, cfg.seed, cfg.tol, sign_probes(n, k));

    std::string verdict =
        rep.uncovered == 0
            ? "no counterexample in " + std::to_string(rep.samples) + " samples and " +
                  std::to_string(rep.probes) +
                  " deterministic probes (sampling cannot prove the cover)"
            : std::to_string(rep.uncovered) + " uncovered frame(s) found";
    if (rep.witness && !witness_out.empty()) write_matrix_path(witness_out, rep.witness->stacked());
    if (cfg.is_json()) {
        json labels = json::array();
        for (const CayleySet& s : rep.family) labels.push_back(s.label);
        json out{{"n", n},          {"k", k},
                 {"family", labels}, {"samples", rep.samples},
                 {"probes", rep.probes}, {"uncovered", rep.uncovered},
                 {"min_best_margin", rep.min_best_margin}, {"verdict", verdict}};
        out["witness"] = rep.witness ? matrix_json(rep.witness->stacked()) : json();
        std::cout << out.dump(1) << "\n";
    } else {
        std::cout << "family of " << rep.family.size() << " Cayley set(s) for " << k
                  << "-frames in H^" << n << ":\n";
        for (const CayleySet& s : rep.family) std::cout << "  " << s.label << "\n";
        std::cout << "checked " << rep.samples << " samples (seed " << cfg.seed << ") and "
                  << rep.probes << " probes; membership threshold " << fmt(cfg.tol) << "\n"
                  << "uncovered: " << rep.uncovered << " — " << verdict << "\n"
                  << "minimum best margin: " << fmt(rep.min_best_margin) << "\n";
        if (rep.witness && !witness_out.empty())
            std::cout << "witness frame written to " << witness_out << "\n";
    }
    return rep.uncovered == 0 ? 0 : 1;
}

// ------------------------------------------------------------------- bounds

int cmd_bounds(std::size_t n, std::size_t k, const Config& cfg) {
    LsBounds b = ls_bounds(n, k);
    if (cfg.is_json()) {
        json out{{"n", b.n}, {"k", b.k}, {"lower", b.lower}, {"upper_dim", b.upper_dim}};
        out["exact"] = b.exact ? json(*b.exact) : json();
        if (b.lower == b.upper_dim) out["pinched"] = b.lower;
        std::cout << out.dump(1) << "\n";
        return 0;
    }
    std::cout << "category bounds for " << k << "-frames in H^" << n << "\n"
              << "  lower (cup length): " << b.lower << "\n"
              << "  upper (dimension):  " << b.upper_dim << "\n";
    if (b.exact)
        std::cout << "  exact value (stable range n >= 2k): " << *b.exact << "\n";
    else if (b.lower == b.upper_dim)
        std::cout << "  bounds pinch: category = " << b.lower << "\n";
    return 0;
}

// ------------------------------------------------------------------- sample

int cmd_sample(const std::string& what, std::size_t n, std::size_t k, std::size_t count,
               const std::string& out_path, const Config& cfg) {
    bool stiefel = what == "stiefel";
    if (!stiefel) k = n;
    if (stiefel && k == 0) throw std::invalid_argument("stiefel sampling needs -k");
    if (k > n) throw std::invalid_argument("need k <= n");
    double worst = 0.0;
    auto one = [&](std::size_t i) {
        RandomStream stream(derive_seed(cfg.seed, i));
        if (stiefel) {
            StiefelFrame f = sample_stiefel(n, k, stream);
            worst = std::max(worst, f.frame_residual());
            return f.stacked();
        }
        QMatrix m = sample_sp(n, stream);
        worst = std::max(worst, symplectic_residual(m));
        return m;
    };
    if (count == 1) {
        write_matrix_path(out_path, one(0));
    } else {
        json arr = json::array();
        for (std::size_t i = 0; i < count; ++i) arr.push_back(matrix_json(one(i)));
        json out{{"samples", std::move(arr)}};
        if (out_path == "-")
            std::cout << out.dump() << "\n";
        else {
            std::ofstream f(out_path);
            if (!f) throw std::invalid_argument("cannot open " + out_path + " for writing");
            f << out.dump() << "\n";
        }
    }
    std::cerr << "max orthonormality residual over " << count << " sample(s): " << fmt(worst)
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Quaternionic symplectic toolkit: relative SVD, frame admissibility and "
        "completion, Cayley-set cover checks, and category bounds.\n"
        "Exit codes: 0 success; 1 cover hole found; 2 non-symplectic or "
        "inadmissible input; 3 parse error; 4 numerical failure."};
    app.require_subcommand(1);
    Config cfg;

    std::string input = "-";
    std::size_t k = 0, n = 0;

    CLI::App* dec = app.add_subcommand("decompose", "Relative SVD of a symplectic matrix");
    dec->add_option("input", input, "Matrix file (\"-\" for stdin)")->capture_default_str();
    dec->add_option("-k,--k", k, "Corner block size")->required();
    dec->add_option("--tol", cfg.tol, "Symplectic and classification tolerance")
        ->capture_default_str();
    add_output_flag(dec, cfg);

    bool with_completion = false;
    CLI::App* adm = app.add_subcommand("admissible", "Test a block for frame completability");
    adm->add_option("input", input, "Matrix file (\"-\" for stdin)")->capture_default_str();
    adm->add_option("-n,--n", n, "Ambient frame dimension")->required();
    adm->add_flag("--complete", with_completion, "Also emit the canonical completion block");
    adm->add_option("--tol", cfg.tol, "Classification tolerance")->capture_default_str();
    add_output_flag(adm, cfg);

    std::string family_kind = "sp2", family_path = "-", sampler_name = "embedded";
    std::string witness_out = "witness.json";
    double cover_tol = 1e-12;
    CLI::App* cov = app.add_subcommand("verify-cover", "Sample a Cayley-set family for holes");
    cov->add_option("family", family_kind, "Family: sp2, spk-j0, spk-j1, spk-j2, or custom-file")
        ->check(CLI::IsMember({"sp2", "spk-j0", "spk-j1", "spk-j2", "custom-file"}))
        ->capture_default_str();
    cov->add_option("-k,--k", k, "Group size for the spk families");
    cov->add_option("--family-file", family_path, "Center file for custom-file (\"-\" for stdin)");
    cov->add_option("--sampler", sampler_name, "embedded (Haar on Sp(k)) or stiefel (full manifold)")
        ->check(CLI::IsMember({"embedded", "stiefel"}))
        ->capture_default_str();
    cov->add_option("--seed", cfg.seed, "Base RNG seed")->capture_default_str();
    cov->add_option("--samples", cfg.samples, "Monte Carlo sample count")->capture_default_str();
    cov->add_option("--tol", cover_tol, "Membership margin threshold")->capture_default_str();
    cov->add_option("--witness-out", witness_out, "Where to write an uncovered frame (\"\" skips)")
        ->capture_default_str();
    add_output_flag(cov, cfg);

    CLI::App* bnd = app.add_subcommand("bounds", "Category bounds for the frame manifold");
    bnd->add_option("-n,--n", n, "Ambient dimension")->required();
    bnd->add_option("-k,--k", k, "Frame size")->required();
    add_output_flag(bnd, cfg);

    std::string what = "sp", out_path = "-";
    std::size_t count = 1;
    CLI::App* smp = app.add_subcommand("sample", "Draw Haar symplectic matrices or frames");
    smp->add_option("what", what, "sp or stiefel")
        ->check(CLI::IsMember({"sp", "stiefel"}))
        ->capture_default_str();
    smp->add_option("-n,--n", n, "Ambient dimension")->required();
    smp->add_option("-k,--k", k, "Frame size (stiefel only)");
    smp->add_option("--seed", cfg.seed, "Base RNG seed")->capture_default_str();
    smp->add_option("--samples", count, "Number of draws")->capture_default_str();
    smp->add_option("--output-file", out_path, "Destination (\"-\" for stdout)")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    auto guarded = [&](auto&& body) {
        try {
            return body();
        } catch (const ParseError& e) {
            std::cerr << "parse error: " << e.what() << "\n";
            return 3;
        } catch (const NotSymplecticError& e) {
            std::cerr << "input rejected: " << e.what() << "\n";
            return 2;
        } catch (const InadmissibleError& e) {
            std::cerr << "input rejected: " << e.what() << "\n";
            return 2;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 4;
        }
    };

    if (dec->parsed()) return guarded([&] { return cmd_decompose(input, k, cfg); });
    if (adm->parsed())
        return guarded([&] { return cmd_admissible(input, n, with_completion, cfg); });
    if (cov->parsed()) {
        cfg.tol = cover_tol;
        return guarded([&] {
            return cmd_verify_cover(family_kind, k, family_path, sampler_name, witness_out, cfg);
        });
    }
    if (bnd->parsed()) return guarded([&] { return cmd_bounds(n, k, cfg); });
    return guarded([&] { return cmd_sample(what, n, k, count, out_path, cfg); });
}
