// Command-line surface: membership decisions, witness search, certificate
// and witness checking, Krylov closures, and truncated-Fock inspection.
//
// Exit codes follow the subcommand contracts: 0 member/found/valid,
// 1 non-member/invalid, 2 unknown/none found, 64 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncalg/json_io.hpp"
#include "ncalg/ncalg.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitNone = 2;
constexpr int kExitUsage = 64;

struct Instance {
    ncalg::NcPoly g{0};
    std::vector<ncalg::NcPoly> f;
    std::size_t d = 0;
};

// Parses g and the generators and widens everything to one shared alphabet.
Instance read_instance(const std::string& g_text, const std::vector<std::string>& f_texts) {
    Instance inst;
    inst.g = ncalg::parse_poly(g_text);
    inst.d = inst.g.nvars();
    for (const std::string& t : f_texts) {
        inst.f.push_back(ncalg::parse_poly(t));
        inst.d = std::max(inst.d, inst.f.back().nvars());
    }
    inst.g = inst.g.with_nvars(inst.d);
    for (ncalg::NcPoly& fj : inst.f) fj = fj.with_nvars(inst.d);
    return inst;
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

std::string render_vector(const std::vector<ncalg::Rat>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + "]";
}

void print_matrix(std::ostream& os, const ncalg::RatMatrix& m, const std::string& indent) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << indent << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << m(i, j).str();
        }
        os << "]\n";
    }
}

int run_member(const Instance& inst, const std::string& mode, std::size_t cap, bool as_json) {
    ncalg::MembershipVerdict verdict;
    if (mode == "single" || (mode == "auto" && inst.f.size() == 1)) {
        if (inst.f.size() != 1) {
            std::cerr << "error: --mode single needs exactly one generator\n";
            return kExitUsage;
        }
        verdict = ncalg::decide_single_generator(inst.g, inst.f.front());
    } else {
        bool all_homog = true;
        for (const ncalg::NcPoly& fj : inst.f)
            all_homog = all_homog && fj.homogeneity().is_homogeneous_or_zero();
        if (mode == "homog" || (mode == "auto" && all_homog)) {
            // throws (-> exit 64) when a generator is not homogeneous
            verdict = ncalg::decide_homogeneous_fock(inst.g, inst.f);
        } else {
            verdict = ncalg::semidecide_membership(inst.g, inst.f, cap);
        }
    }

    if (as_json) {
        std::cout << ncalg::verdict_to_json(verdict).dump(2) << "\n";
    } else {
        switch (verdict.kind) {
            case ncalg::MembershipVerdict::Kind::member:
                std::cout << "verdict: member\n"
                          << "h = " << ncalg::format_poly(verdict.certificate->h, 'y') << "\n"
                          << "route: " << ncalg::route_name(verdict.certificate->route);
                if (verdict.certificate->m) std::cout << " (m = " << *verdict.certificate->m << ")";
                std::cout << "\n";
                break;
            case ncalg::MembershipVerdict::Kind::non_member:
                std::cout << "verdict: non-member\n";
                break;
            case ncalg::MembershipVerdict::Kind::unknown:
                std::cout << "verdict: unknown (cap " << *verdict.cap << ")\n";
                break;
        }
    }
    if (verdict.is_member()) return kExitYes;
    return verdict.is_non_member() ? kExitNo : kExitUnknown;
}

int run_witness(const Instance& inst, std::size_t max_n, std::uint64_t seed) {
    ncalg::SearchConfig cfg;
    cfg.max_n = max_n;
    cfg.seed = seed;
    std::cerr << "witness search: seed " << seed << ", max size " << max_n << "\n";
    const auto w = ncalg::search_witness(inst.g, inst.f, cfg);
    if (!w) {
        std::cerr << "no witness found up to size " << max_n << "\n";
        return kExitNone;
    }
    std::cout << ncalg::witness_to_json(*w).dump(2) << "\n";
    return kExitYes;
}

int run_check_cert(const Instance& inst, const std::string& h_text) {
    const ncalg::NcPoly h = ncalg::parse_poly(h_text, inst.f.size());
    if (h.nvars() != inst.f.size())
        throw std::invalid_argument("certificate uses more variables than there are generators");
    if (ncalg::verify_certificate(inst.g, inst.f, h)) {
        std::cout << "certificate valid: g = h(f1, ..., f" << inst.f.size() << ")\n";
        return kExitYes;
    }
    std::cout << "certificate invalid\n";
    return kExitNo;
}

int run_check_witness(const Instance& inst, const std::string& path) {
    const ncalg::Witness w = ncalg::witness_from_json(read_json_file(path));
    if (ncalg::verify_witness(inst.g, inst.f, w.X, w.V)) {
        std::cout << "witness valid: g is not in the generated unital algebra\n";
        return kExitYes;
    }
    std::cout << "witness invalid\n";
    return kExitNo;
}

int run_closure(const std::vector<std::string>& op_paths, const std::string& vec_path, bool as_json) {
    std::vector<ncalg::RatMatrix> ops;
    for (const std::string& p : op_paths) ops.push_back(ncalg::matrix_from_json(read_json_file(p)));
    const std::vector<ncalg::Rat> v = ncalg::vector_from_json(read_json_file(vec_path));
    const ncalg::KrylovClosure c = ncalg::krylov_closure(ops, v);
    if (as_json) {
        std::cout << ncalg::closure_to_json(c).dump(2) << "\n";
        return kExitYes;
    }
    std::cout << "ambient dimension: " << c.ambient_dim << "\n"
              << "rank: " << c.rank() << "\n"
              << "stabilized_at: " << c.stabilized_at << "\n";
    for (std::size_t k = 0; k < c.rank(); ++k) {
        std::string label = "1";
        if (!c.labels[k].word.is_empty()) {
            label.clear();
            ncalg::detail::format_word(label, c.labels[k].word, 'y');
        }
        std::cout << "basis[" << k << "]: label " << label << ", vector "
                  << render_vector(c.labels[k].vector) << "\n";
    }
    return kExitYes;
}

int run_fock(std::size_t d, std::size_t m, bool matrices) {
    if (d < 1) throw std::invalid_argument("fock: need -d >= 1");
    // dim = (d^(m+1)-1)/(d-1); refuse anything that cannot be printed sanely
    double dim_estimate = 1;
    for (std::size_t i = 0; i < m && dim_estimate < 1e6; ++i) dim_estimate = dim_estimate * d + 1;
    if (dim_estimate >= 1e6) throw std::invalid_argument("fock: basis too large to enumerate");
    const ncalg::FockSpace space(d, m);
    std::cout << "dim: " << space.dim() << "\n";
    for (const ncalg::Word& w : space.basis()) {
        std::string s = "1";
        if (!w.is_empty()) {
            s.clear();
            ncalg::detail::format_word(s, w, 'x');
        }
        std::cout << s << "\n";
    }
    if (matrices) {
        for (std::uint32_t k = 0; k < d; ++k) {
            std::cout << "L(x" << k + 1 << "):\n";
            print_matrix(std::cout, space.creation_matrix(k), "  ");
        }
    }
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact subalgebra membership for noncommutative polynomials"};
    app.require_subcommand(1);

    std::string g_text;
    std::vector<std::string> f_texts;
    std::string mode = "auto";
    std::size_t cap = 6;
    bool as_json = false;

    auto* member = app.add_subcommand("member", "decide whether g lies in the algebra generated by f");
    member->add_option("-g", g_text, "polynomial g")->required();
    member->add_option("-f", f_texts, "generator (repeatable)")->required();
    member->add_option("--mode", mode, "auto|homog|single|semi")
        ->check(CLI::IsMember({"auto", "homog", "single", "semi"}));
    member->add_option("--cap", cap, "degree cap for the semidecision procedure");
    member->add_flag("--json", as_json, "JSON output");

    std::size_t max_n = 4;
    std::uint64_t seed = 0;
    auto* witness = app.add_subcommand("witness", "search for a non-membership witness");
    witness->add_option("-g", g_text, "polynomial g")->required();
    witness->add_option("-f", f_texts, "generator (repeatable)")->required();
    witness->add_option("--max-n", max_n, "largest matrix size / Fock order to try");
    witness->add_option("--seed", seed, "random seed");
    witness->add_flag("--json", as_json, "JSON output (the witness is always printed as JSON)");

    std::string h_text;
    auto* check_cert = app.add_subcommand("check-cert", "verify a membership certificate");
    check_cert->add_option("-g", g_text, "polynomial g")->required();
    check_cert->add_option("-f", f_texts, "generator (repeatable)")->required();
    check_cert->add_option("--h", h_text, "certificate polynomial in y1, ..., yl")->required();

    std::string witness_path;
    auto* check_witness = app.add_subcommand("check-witness", "verify a witness file");
    check_witness->add_option("-g", g_text, "polynomial g")->required();
    check_witness->add_option("-f", f_texts, "generator (repeatable)")->required();
    check_witness->add_option("--witness", witness_path, "witness JSON file")->required();

    std::vector<std::string> op_paths;
    std::string vec_path;
    auto* closure = app.add_subcommand("closure", "smallest joint invariant subspace containing a vector");
    closure->add_option("--ops", op_paths, "operator matrix file (repeatable)")->required();
    closure->add_option("--vec", vec_path, "start vector file")->required();
    closure->add_flag("--json", as_json, "JSON output");

    std::size_t fock_d = 1;
    std::size_t fock_m = 0;
    bool fock_matrices = false;
    auto* fock = app.add_subcommand("fock", "enumerate a truncated Fock basis");
    fock->add_option("-d", fock_d, "number of variables")->required();
    fock->add_option("-m", fock_m, "truncation order")->required();
    fock->add_flag("--matrices", fock_matrices, "also print the creation matrices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (member->parsed()) return run_member(read_instance(g_text, f_texts), mode, cap, as_json);
        if (witness->parsed()) return run_witness(read_instance(g_text, f_texts), max_n, seed);
        if (check_cert->parsed()) return run_check_cert(read_instance(g_text, f_texts), h_text);
        if (check_witness->parsed())
            return run_check_witness(read_instance(g_text, f_texts), witness_path);
        if (closure->parsed()) return run_closure(op_paths, vec_path, as_json);
        if (fock->parsed()) return run_fock(fock_d, fock_m, fock_matrices);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
