// rankcodes: exact calculator for rank-metric codes over finite fields.
//
// Subcommands:
//   code       dual | rankdist | minrk | maxrk | check-mrd | check-anticode
//   gabidulin  expand | dual | mrd-construct | check-thm-2-7
//   count      matrices by rank and h-trace (recursive/explicit/bruteforce)
//   verify     seeded property suite over every module
//
// Exit codes: 0 success, 1 usage, 2 parse error, 3 budget exceeded,
// 4 verification or check failure. All reports are deterministic given
// (inputs, seed, flags); big integers print in full decimal.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rmc/codefile.hpp"
#include "rmc/counting.hpp"
#include "rmc/delsarte.hpp"
#include "rmc/errors.hpp"
#include "rmc/gabidulin.hpp"
#include "rmc/qcalc.hpp"
#include "rmc/verify.hpp"

namespace {

using namespace rmc;

// right-aligned columns, two-space gutter
void print_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << "  ";
            os << std::string(width[i] - row[i].size(), ' ') << row[i];
        }
        os << "\n";
    }
}

std::string int_str(const Int& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

CodeFile load_code(const std::string& path) {
    if (path == "-") return read_code_file(std::cin);
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open '" + path + "'");
    return read_code_file(in);
}

void emit_file(const std::string& out_path, const std::string& report_comment,
               const std::string& body) {
    if (out_path.empty() || out_path == "-") {
        std::cout << report_comment << body;
    } else {
        std::ofstream os(out_path);
        if (!os) throw domain_error("cannot write '" + out_path + "'");
        os << body;
        std::cout << "wrote: " << out_path << "\n";
    }
}

std::string describe_route(DistRoute r) {
    return r == DistRoute::Enumeration ? "enumeration" : "dual transform";
}

void print_code_info(std::ostream& os, const CodeFile& f) {
    os << "field: " << field_spec_text(*f.field) << "\n";
    if (f.ext) os << "ext: " << ext_spec_text(*f.ext) << "\n";
    os << "shape: " << f.k << "x" << f.m << " "
       << (f.kind == CodeFile::Kind::Delsarte ? "delsarte" : "gabidulin") << "\n";
    if (f.basis) {
        os << "basis:";
        for (std::size_t i = 0; i < f.basis->size(); ++i)
            os << (i ? "," : " ") << ext_element_text((*f.basis)[static_cast<unsigned>(i)]);
        os << "\n";
    }
    const int dim = f.kind == CodeFile::Kind::Delsarte ? f.delsarte->dim() : f.gabidulin->dim();
    os << "canonicalized: dim " << dim << " from " << f.given_generators
       << " given generator block" << (f.given_generators == 1 ? "" : "s") << "\n";
}

// Delsarte view of any input file; gabidulin codes are expanded over the
// file basis when present, the power basis otherwise.
DelsarteCode as_delsarte(const CodeFile& f, std::ostream& os) {
    if (f.kind == CodeFile::Kind::Delsarte) return *f.delsarte;
    FieldBasis g = f.basis ? *f.basis : FieldBasis::power_basis(*f.ext);
    os << "expansion basis:";
    for (std::size_t i = 0; i < g.size(); ++i)
        os << (i ? "," : " ") << ext_element_text(g[static_cast<unsigned>(i)]);
    os << (f.basis ? " (from file)" : " (power basis)") << "\n";
    return expand_code(*f.gabidulin, g);
}

// ---------------------------------------------------------------------------
// code subcommands

struct CodeArgs {
    std::string file;
    std::string out;
    bool csv = false;
    int sampled_trials = 64;
    std::uint64_t seed = 1;
};

int run_code_dual(const CodeArgs& a, std::uint64_t budget) {
    (void)budget;
    CodeFile f = load_code(a.file);
    std::ostringstream report;
    report << "# rankcodes code dual\n";
    {
        std::ostringstream info;
        print_code_info(info, f);
        std::istringstream lines(info.str());
        std::string line;
        while (std::getline(lines, line)) report << "# " << line << "\n";
    }
    std::ostringstream work;
    DelsarteCode c = as_delsarte(f, work);
    DelsarteCode d = dual(c);
    report << "# dual: dim " << c.dim() << " -> dim " << d.dim() << "\n";
    std::ostringstream body;
    write_delsarte_file(body, d);
    emit_file(a.out, report.str(), body.str());
    return 0;
}

int run_code_rankdist(const CodeArgs& a, std::uint64_t budget) {
    CodeFile f = load_code(a.file);
    if (a.csv) {
        std::ostringstream info;
        DelsarteCode c = as_delsarte(f, info);
        RankDistResult r = rank_distribution_with_route(c, budget);
        std::istringstream lines(info.str());
        for (std::string line; std::getline(lines, line);) std::cout << "# " << line << "\n";
        std::cout << "# route: " << describe_route(r.route) << "\n";
        std::cout << "r,count\n";
        for (int i = 0; i <= r.dist.max_index(); ++i)
            std::cout << i << "," << r.dist.at(i) << "\n";
        return 0;
    }
    std::cout << "rankcodes code rankdist\n";
    print_code_info(std::cout, f);
    DelsarteCode c = as_delsarte(f, std::cout);
    RankDistResult r = rank_distribution_with_route(c, budget);
    std::cout << "cardinality: " << c.cardinality() << "\n";
    std::cout << "route: " << describe_route(r.route) << "\n";
    std::vector<std::vector<std::string>> rows{{"r", "count"}};
    for (int i = 0; i <= r.dist.max_index(); ++i)
        rows.push_back({std::to_string(i), int_str(r.dist.at(i))});
    print_table(std::cout, rows);
    return 0;
}

int run_code_extreme_rank(const CodeArgs& a, std::uint64_t budget, bool want_min) {
    CodeFile f = load_code(a.file);
    std::cout << "rankcodes code " << (want_min ? "minrk" : "maxrk") << "\n";
    print_code_info(std::cout, f);
    DelsarteCode c = as_delsarte(f, std::cout);
    RankDistResult r = rank_distribution_with_route(c, budget);
    std::cout << "route: " << describe_route(r.route) << "\n";
    if (want_min) {
        if (c.dim() == 0) throw domain_error("the zero code has no nonzero codeword");
        for (int i = 1; i <= r.dist.max_index(); ++i)
            if (r.dist.at(i) > 0) {
                std::cout << "minrk: " << i << "\n";
                return 0;
            }
        throw domain_error("no nonzero rank found");
    }
    int best = 0;
    for (int i = 0; i <= r.dist.max_index(); ++i)
        if (r.dist.at(i) > 0) best = i;
    std::cout << "maxrk: " << best << "\n";
    return 0;
}

int run_code_check_mrd(const CodeArgs& a, std::uint64_t budget) {
    CodeFile f = load_code(a.file);
    std::cout << "rankcodes code check-mrd\n";
    print_code_info(std::cout, f);
    DelsarteCode c = as_delsarte(f, std::cout);
    RankDistResult r = rank_distribution_with_route(c, budget);
    std::cout << "route: " << describe_route(r.route) << "\n";
    const int lo = std::min(c.k(), c.m());
    const int hi = std::max(c.k(), c.m());
    int minrk = 0;
    for (int i = 1; i <= r.dist.max_index(); ++i)
        if (r.dist.at(i) > 0) {
            minrk = i;
            break;
        }
    if (c.dim() == 0) {
        std::cout << "minrk: - (zero code)\n";
        std::cout << "result: PASS\n";
        return 0;
    }
    const int bound_dim = hi * (lo - minrk + 1);
    std::cout << "minrk: " << minrk << "\n";
    std::cout << "dim: " << c.dim() << ", bound: max(k,m)*(min(k,m)-minrk+1) = " << hi << "*"
              << (lo - minrk + 1) << " = " << bound_dim << "\n";
    const bool ok = is_mrd(c, budget);
    std::cout << "result: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 4;
}

int run_code_check_anticode(const CodeArgs& a, std::uint64_t budget) {
    CodeFile f = load_code(a.file);
    std::cout << "rankcodes code check-anticode\n";
    print_code_info(std::cout, f);
    DelsarteCode c = as_delsarte(f, std::cout);
    RankDistResult r = rank_distribution_with_route(c, budget);
    std::cout << "route: " << describe_route(r.route) << "\n";
    const int hi = std::max(c.k(), c.m());
    int maxrk = 0;
    for (int i = 0; i <= r.dist.max_index(); ++i)
        if (r.dist.at(i) > 0) maxrk = i;
    std::cout << "maxrk: " << maxrk << "\n";
    std::cout << "dim: " << c.dim() << ", bound: max(k,m)*maxrk = " << hi << "*" << maxrk << " = "
              << hi * maxrk << "\n";
    const bool ok = is_optimal_anticode(c, budget);
    std::cout << "predicate: " << (ok ? "optimal anticode" : "not an optimal anticode") << "\n";
    const int lo = std::min(c.k(), c.m());
    if (c.dim() % hi != 0) {
        std::cout << "sampled criterion: not applicable (dim is not a multiple of max(k,m))\n";
    } else if (c.dim() / hi > lo - 1) {
        std::cout << "sampled criterion: not applicable (maxrk bound exceeds min(k,m)-1)\n";
    } else {
        const bool sampled = sampled_anticode_criterion(c, a.sampled_trials, a.seed);
        std::cout << "sampled criterion: " << a.sampled_trials << " trials, seed " << a.seed
                  << ": " << (sampled ? "no MRD intersection found" : "MRD intersection found")
                  << (sampled == ok ? " (agrees)" : " (disagrees)") << "\n";
    }
    std::cout << "result: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 4;
}

// ---------------------------------------------------------------------------
// gabidulin subcommands

const GabidulinCode& need_gabidulin(const CodeFile& f) {
    if (f.kind != CodeFile::Kind::Gabidulin)
        throw domain_error("this subcommand needs a gabidulin code file");
    return *f.gabidulin;
}

int run_gab_expand(const CodeArgs& a) {
    CodeFile f = load_code(a.file);
    const GabidulinCode& c = need_gabidulin(f);
    FieldBasis g = f.basis ? *f.basis : FieldBasis::power_basis(*f.ext);
    DelsarteCode e = expand_code(c, g);
    std::ostringstream report;
    report << "# rankcodes gabidulin expand\n";
    report << "# basis:";
    for (std::size_t i = 0; i < g.size(); ++i)
        report << (i ? "," : " ") << ext_element_text(g[static_cast<unsigned>(i)]);
    report << (f.basis ? " (from file)" : " (power basis)") << "\n";
    report << "# expansion: dim " << c.dim() << " over " << ext_spec_text(*f.ext) << " -> dim "
           << e.dim() << " over " << field_spec_text(*f.field) << "\n";
    std::ostringstream body;
    write_delsarte_file(body, e);
    emit_file(a.out, report.str(), body.str());
    return 0;
}

int run_gab_dual(const CodeArgs& a) {
    CodeFile f = load_code(a.file);
    const GabidulinCode& c = need_gabidulin(f);
    GabidulinCode d = gabidulin_dual(c);
    std::optional<FieldBasis> basis;
    std::ostringstream report;
    report << "# rankcodes gabidulin dual\n";
    report << "# dual: dim " << c.dim() << " -> dim " << d.dim() << "\n";
    if (f.basis) {
        basis = dual_basis(*f.basis);
        report << "# basis mapped to its trace-dual, so expansion still commutes with duality\n";
    }
    std::ostringstream body;
    write_gabidulin_file(body, d, basis);
    emit_file(a.out, report.str(), body.str());
    return 0;
}

struct MrdArgs {
    std::uint32_t q = 2;
    int m = 2;
    int k = 2;
    int d = 2;
    std::string out;
};

int run_gab_mrd_construct(const MrdArgs& a) {
    std::uint32_t p = 2;
    while (a.q % p != 0) ++p;
    unsigned n = 0;
    std::uint32_t t = a.q;
    while (t > 1) {
        if (t % p != 0) throw domain_error("q must be a prime power");
        t /= p;
        ++n;
    }
    FieldSpecPtr fp = FieldSpec::get(p, n);
    ExtensionSpecPtr ep = ExtensionSpec::get(fp, static_cast<unsigned>(a.m));
    GabidulinCode c = evaluation_code(*ep, a.k, a.d);
    std::ostringstream report;
    report << "# rankcodes gabidulin mrd-construct\n";
    report << "# evaluation code: q=" << a.q << " m=" << a.m << " k=" << a.k << " d=" << a.d
           << ", dim " << c.dim() << " over " << ext_spec_text(*ep) << "\n";
    report << "# expansion over the recorded power basis is MRD with minrk " << a.d << "\n";
    std::ostringstream body;
    write_gabidulin_file(body, c, FieldBasis::power_basis(*ep));
    emit_file(a.out, report.str(), body.str());
    return 0;
}

struct ThmArgs {
    std::string file;
    std::uint64_t seed = 1;
    int trials = 20;
    std::uint32_t max_q = 3;
};

int check_thm_instance(const GabidulinCode& c, const FieldBasis& g, const std::string& label) {
    DelsarteCode lhs = dual(expand_code(c, g));
    DelsarteCode rhs = expand_code(gabidulin_dual(c), dual_basis(g));
    DelsarteCode same = expand_code(gabidulin_dual(c), g);
    const bool ok = check_orthobasis_duality(c, g);
    std::cout << label << ": dual-basis expansion equality "
              << (ok && lhs == rhs ? "PASS" : "FAIL") << "; same-basis expansion "
              << (same == lhs ? "coincides" : "differs") << "\n";
    return ok && lhs == rhs ? 0 : 4;
}

int run_gab_check_thm(const ThmArgs& a) {
    std::cout << "rankcodes gabidulin check-thm-2-7\n";
    if (!a.file.empty()) {
        CodeFile f = load_code(a.file);
        const GabidulinCode& c = need_gabidulin(f);
        print_code_info(std::cout, f);
        FieldBasis g = f.basis ? *f.basis : FieldBasis::power_basis(*f.ext);
        const int rc = check_thm_instance(c, g, "input");
        std::cout << "result: " << (rc == 0 ? "PASS" : "FAIL") << "\n";
        return rc;
    }
    std::cout << "random instances: seed " << a.seed << ", trials " << a.trials << ", max-q "
              << a.max_q << "\n";
    gen::Rng rng(a.seed);
    int rc = 0;
    for (int t = 0; t < a.trials; ++t) {
        FieldSpecPtr fp = gen::random_field(rng, a.max_q);
        const unsigned m = 2 + static_cast<unsigned>(gen::below(rng, 3));
        std::uint64_t card = 1;
        bool fits = true;
        for (unsigned i = 0; i < m; ++i) {
            card *= fp->cardinality();
            if (card > 256) fits = false;
        }
        if (!fits) {
            --t;  // redraw without advancing the instance counter
            continue;
        }
        ExtensionSpecPtr ep = ExtensionSpec::get(fp, m);
        const int k = 1 + static_cast<int>(gen::below(rng, 4));
        const int dim = static_cast<int>(gen::below(rng, static_cast<std::uint64_t>(k) + 1));
        GabidulinCode c = gen::random_gabidulin(rng, *ep, k, dim);
        FieldBasis g = gen::random_basis(rng, *ep);
        std::ostringstream label;
        label << "instance " << t + 1 << " (q=" << fp->cardinality() << " m=" << m << " k=" << k
              << " dim=" << dim << ")";
        rc |= check_thm_instance(c, g, label.str());
    }
    std::cout << "result: " << (rc == 0 ? "PASS" : "FAIL") << "\n";
    return rc;
}

// ---------------------------------------------------------------------------
// count subcommand

struct CountArgs {
    std::uint32_t q = 2;
    int k = 1;
    int m = 1;
    int r = -1;  // -1: all ranks
    int h = -1;  // -1: all h values
    std::string method = "recursive";
    bool csv = false;
};

Int zero_trace_count(const CountArgs& a, int r, int h) {
    if (a.method == "explicit") return count_rank_htrace_explicit(a.q, a.k, a.m, r, h);
    return count_rank_htrace_recursive(a.q, a.k, a.m, r, h);
}

int run_count(const CountArgs& a, std::uint64_t budget) {
    if (a.q < 2) throw domain_error("q must be at least 2");
    if (a.k < 1 || a.m < 1) throw domain_error("k and m must be positive");
    if (a.r > std::min(a.k, a.m)) throw domain_error("r exceeds min(k,m)");
    if (a.h > std::min(a.k, a.m)) throw domain_error("h exceeds min(k,m)");
    {
        // validate q as a prime power up front
        std::uint32_t p = 2;
        while (a.q % p != 0) ++p;
        std::uint32_t t = a.q;
        while (t > 1) {
            if (t % p != 0) throw domain_error("q must be a prime power");
            t /= p;
        }
    }
    const bool all_methods = a.method == "all";
    const bool need_census = all_methods || a.method == "bruteforce";
    std::optional<CensusTable> census;
    if (need_census) census.emplace(census_bruteforce(a.q, a.k, a.m, budget));

    const int lo = std::min(a.k, a.m);
    std::vector<int> ranks, hs;
    if (a.r >= 0)
        ranks.push_back(a.r);
    else
        for (int r = 0; r <= lo; ++r) ranks.push_back(r);
    if (a.h >= 0)
        hs.push_back(a.h);
    else
        for (int h = 0; h <= lo; ++h) hs.push_back(h);

    bool all_match = true;
    std::vector<std::vector<std::string>> rows;
    std::ostringstream csv_out;
    if (a.csv) {
        csv_out << "q,k,m,r,h,trace_value,count";
        if (all_methods) csv_out << "_recursive,count_explicit,count_bruteforce,match";
        csv_out << "\n";
    } else {
        std::vector<std::string> head{"r", "h", "trace", "count"};
        if (all_methods) head = {"r", "h", "trace", "recursive", "explicit", "bruteforce", "match"};
        rows.push_back(std::move(head));
    }

    auto emit = [&](int r, int h, const std::string& trace, const std::vector<Int>& counts) {
        bool match = true;
        for (const Int& v : counts)
            if (v != counts.front()) match = false;
        all_match = all_match && match;
        if (a.csv) {
            csv_out << a.q << "," << a.k << "," << a.m << "," << r << "," << h << "," << trace;
            for (const Int& v : counts) csv_out << "," << v;
            if (all_methods) csv_out << "," << (match ? "yes" : "NO");
            csv_out << "\n";
        } else {
            std::vector<std::string> row{std::to_string(r), std::to_string(h), trace};
            for (const Int& v : counts) row.push_back(int_str(v));
            if (all_methods) row.push_back(match ? "yes" : "NO");
            rows.push_back(std::move(row));
        }
    };

    for (int r : ranks)
        for (int h : hs) {
            if (h == 0) {
                std::vector<Int> counts;
                if (all_methods) {
                    const Int closed = count_rank(a.q, a.k, a.m, r);
                    counts = {closed, closed, census->rank_count(r)};
                } else if (a.method == "bruteforce") {
                    counts = {census->rank_count(r)};
                } else {
                    counts = {count_rank(a.q, a.k, a.m, r)};
                }
                emit(r, 0, "-", counts);
                continue;
            }
            for (std::uint32_t v = 0; v < a.q; ++v) {
                std::vector<Int> counts;
                if (all_methods) {
                    const Int rec = v == 0 ? count_rank_htrace_recursive(a.q, a.k, a.m, r, h)
                                           : count_rank_trace_value(a.q, a.k, a.m, r, h, v);
                    const Int zero_exp = count_rank_htrace_explicit(a.q, a.k, a.m, r, h);
                    const Int exp =
                        v == 0 ? zero_exp
                               : (count_rank(a.q, a.k, a.m, r) - zero_exp) / Int(a.q - 1);
                    counts = {rec, exp, census->count(r, h, v)};
                } else if (a.method == "bruteforce") {
                    counts = {census->count(r, h, v)};
                } else if (v == 0) {
                    counts = {zero_trace_count(a, r, h)};
                } else if (a.method == "explicit") {
                    const Int zero_exp = count_rank_htrace_explicit(a.q, a.k, a.m, r, h);
                    counts = {(count_rank(a.q, a.k, a.m, r) - zero_exp) / Int(a.q - 1)};
                } else {
                    counts = {count_rank_trace_value(a.q, a.k, a.m, r, h, v)};
                }
                emit(r, h, std::to_string(v), counts);
            }
        }

    if (a.csv) {
        std::cout << csv_out.str();
    } else {
        std::cout << "rankcodes count\n";
        std::cout << "q=" << a.q << " k=" << a.k << " m=" << a.m << " method=" << a.method
                  << "\n";
        print_table(std::cout, rows);
    }
    if (all_methods) {
        if (!a.csv) std::cout << "result: " << (all_match ? "PASS" : "FAIL") << "\n";
        return all_match ? 0 : 4;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify subcommand

int run_verify(const VerifyConfig& cfg, bool list_only) {
    if (list_only) {
        for (const auto& name : verification_property_names()) std::cout << name << "\n";
        return 0;
    }
    std::cout << "rankcodes verify\n";
    std::cout << "seed=" << cfg.seed << " trials=" << cfg.trials << " max-q=" << cfg.max_q
              << " max-dim=" << cfg.max_dim << " enum-budget=" << cfg.enum_budget << "\n";
    const auto results = run_verification(cfg);
    int failed = 0;
    for (const auto& r : results) {
        if (r.pass) {
            std::cout << "PASS " << r.name << " (" << r.detail << ")\n";
        } else {
            ++failed;
            std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
            std::cout << "     reproduce: rankcodes verify --seed " << cfg.seed << " --trials "
                      << cfg.trials << " --only " << r.name << "\n";
        }
    }
    std::cout << "summary: " << results.size() << " properties, " << results.size() - failed
              << " passed, " << failed << " failed\n";
    return failed ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for rank-metric codes over finite fields"};
    app.require_subcommand(1);
    std::uint64_t budget = kDefaultEnumBudget;
    app.add_option("--enum-budget", budget, "enumeration budget shared by all subcommands")
        ->capture_default_str();

    // code
    auto* code = app.add_subcommand("code", "operations on a code file");
    code->require_subcommand(1);
    CodeArgs code_args;
    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", code_args.file, "input code file, or - for stdin")->required();
    };
    auto* c_dual = code->add_subcommand("dual", "trace-bilinear-form dual, as a code file");
    add_file(c_dual);
    c_dual->add_option("-o,--out", code_args.out, "output path (default: stdout)");
    auto* c_dist = code->add_subcommand("rankdist", "rank distribution");
    add_file(c_dist);
    c_dist->add_flag("--csv", code_args.csv, "emit CSV instead of an aligned table");
    auto* c_min = code->add_subcommand("minrk", "smallest nonzero-codeword rank");
    add_file(c_min);
    auto* c_max = code->add_subcommand("maxrk", "largest codeword rank");
    add_file(c_max);
    auto* c_mrd = code->add_subcommand("check-mrd", "test the Singleton-like dimension equality");
    add_file(c_mrd);
    auto* c_anti =
        code->add_subcommand("check-anticode", "test the optimal-anticode dimension equality");
    add_file(c_anti);
    c_anti->add_option("--sampled-trials", code_args.sampled_trials,
                       "trial count for the sampled MRD-intersection criterion")
        ->capture_default_str();
    c_anti->add_option("--seed", code_args.seed, "seed for the sampled criterion")
        ->capture_default_str();

    // gabidulin
    auto* gab = app.add_subcommand("gabidulin", "operations on extension-field codes");
    gab->require_subcommand(1);
    CodeArgs gab_args;
    MrdArgs mrd_args;
    ThmArgs thm_args;
    auto* g_expand =
        gab->add_subcommand("expand", "matrix expansion over the recorded or power basis");
    g_expand->add_option("file", gab_args.file, "input code file, or - for stdin")->required();
    g_expand->add_option("-o,--out", gab_args.out, "output path (default: stdout)");
    auto* g_dual = gab->add_subcommand("dual", "dual over the extension field");
    g_dual->add_option("file", gab_args.file, "input code file, or - for stdin")->required();
    g_dual->add_option("-o,--out", gab_args.out, "output path (default: stdout)");
    auto* g_mrd = gab->add_subcommand("mrd-construct", "evaluation code with prescribed minrk");
    g_mrd->add_option("-q", mrd_args.q, "base field size (prime power)")->required();
    g_mrd->add_option("-m", mrd_args.m, "extension degree")->required();
    g_mrd->add_option("-k", mrd_args.k, "code length")->required();
    g_mrd->add_option("-d", mrd_args.d, "designed minimum rank")->required();
    g_mrd->add_option("-o,--out", mrd_args.out, "output path (default: stdout)");
    auto* g_thm = gab->add_subcommand(
        "check-thm-2-7", "expansion duality: dual of the expansion equals the expansion of the "
                         "dual over the trace-dual basis");
    g_thm->add_option("file", thm_args.file, "gabidulin code file (omit to use random instances)");
    g_thm->add_option("--seed", thm_args.seed, "seed for random instances")->capture_default_str();
    g_thm->add_option("--trials", thm_args.trials, "number of random instances")
        ->capture_default_str();
    g_thm->add_option("--max-q", thm_args.max_q, "largest base field size for random instances")
        ->capture_default_str();

    // count
    auto* cnt = app.add_subcommand("count", "count matrices by rank and h-trace");
    cnt->set_help_flag("--help", "print this help message and exit");
    CountArgs count_args;
    cnt->add_option("-q", count_args.q, "field size (prime power)")->required();
    cnt->add_option("-k", count_args.k, "rows")->required();
    cnt->add_option("-m", count_args.m, "columns")->required();
    cnt->add_option("-r", count_args.r, "rank (default: all 0..min(k,m))");
    cnt->add_option("-h,--htrace", count_args.h,
                    "h-trace length (default: all 0..min(k,m); 0 = rank counts only)");
    cnt->add_option("--method", count_args.method, "computation route")
        ->check(CLI::IsMember({"recursive", "explicit", "bruteforce", "all"}))
        ->capture_default_str();
    cnt->add_flag("--csv", count_args.csv, "emit CSV instead of an aligned table");

    // verify
    auto* ver = app.add_subcommand("verify", "run the seeded property suite");
    VerifyConfig vcfg;
    bool list_only = false;
    ver->add_option("--seed", vcfg.seed, "PRNG seed")->capture_default_str();
    ver->add_option("--trials", vcfg.trials, "iterations per property")->capture_default_str();
    ver->add_option("--max-q", vcfg.max_q, "largest field size for random instances")
        ->capture_default_str();
    ver->add_option("--max-dim", vcfg.max_dim, "largest ambient dimension k*m")
        ->capture_default_str();
    ver->add_option("--only", vcfg.only, "run a single property by name");
    ver->add_flag("--list", list_only, "list property names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(code)) {
            if (code->got_subcommand(c_dual)) return run_code_dual(code_args, budget);
            if (code->got_subcommand(c_dist)) return run_code_rankdist(code_args, budget);
            if (code->got_subcommand(c_min)) return run_code_extreme_rank(code_args, budget, true);
            if (code->got_subcommand(c_max))
                return run_code_extreme_rank(code_args, budget, false);
            if (code->got_subcommand(c_mrd)) return run_code_check_mrd(code_args, budget);
            if (code->got_subcommand(c_anti)) return run_code_check_anticode(code_args, budget);
        }
        if (app.got_subcommand(gab)) {
            if (gab->got_subcommand(g_expand)) return run_gab_expand(gab_args);
            if (gab->got_subcommand(g_dual)) return run_gab_dual(gab_args);
            if (gab->got_subcommand(g_mrd)) return run_gab_mrd_construct(mrd_args);
            if (gab->got_subcommand(g_thm)) return run_gab_check_thm(thm_args);
        }
        if (app.got_subcommand(cnt)) return run_count(count_args, budget);
        if (app.got_subcommand(ver)) {
            vcfg.enum_budget = budget;
            return run_verify(vcfg, list_only);
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
