// Command-line front end: check / search / census / gram / transform /
// scramble / descramble / tables / catalog-verify.
//
// Exit codes: 0 success, 1 domain failure (failed check, invalid key,
// cost-guard refusal, malformed container), 2 usage or parse error,
// 3 I/O error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nht/catalog.hpp"
#include "nht/circulant.hpp"
#include "nht/codec.hpp"
#include "nht/conditions.hpp"
#include "nht/reference_tables.hpp"
#include "nht/residue.hpp"
#include "nht/search.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_domain = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::uint64_t> parse_u64_list(const std::string& text, const char* what) {
    std::vector<std::uint64_t> values;
    std::string token;
    std::istringstream stream(text);
    while (std::getline(stream, token, ',')) {
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError(std::string(what) + ": '" + token +
                             "' is not a decimal integer");
        try {
            values.push_back(std::stoull(token));
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + ": '" + token + "' is out of range");
        }
    }
    if (values.empty())
        throw UsageError(std::string(what) + ": empty list");
    return values;
}

template <typename Range>
std::string join(const Range& values, const char* sep) {
    std::string out;
    bool first = true;
    for (const auto& v : values) {
        if (!first)
            out += sep;
        out += std::to_string(v);
        first = false;
    }
    return out;
}

// Shared --n/--mod/--coeffs flags.
struct KeyArgs {
    std::uint64_t n = 0;
    std::uint64_t mod = 0;
    std::string coeffs;

    void attach(CLI::App* cmd, bool required = true) {
        auto* n_opt = cmd->add_option("--n", n, "transform size n (even, >= 4)");
        auto* m_opt = cmd->add_option("--mod", mod, "modulus m (>= 2)");
        auto* c_opt = cmd->add_option("--coeffs", coeffs,
                                      "comma-separated coefficients u0,...,u_{n/2-1}");
        if (required) {
            n_opt->required();
            m_opt->required();
            c_opt->required();
        }
    }

    [[nodiscard]] bool any_given() const { return n != 0 || mod != 0 || !coeffs.empty(); }

    [[nodiscard]] nht::Modulus modulus() const {
        if (mod < 2 || mod >= nht::Modulus::max_exclusive)
            throw UsageError("--mod must lie in [2, 2^63)");
        return nht::Modulus{mod};
    }

    [[nodiscard]] nht::CoeffVector coefficients() const {
        if (n < 4 || n % 2 != 0)
            throw UsageError("--n must be even and at least 4");
        auto values = parse_u64_list(coeffs, "--coeffs");
        if (values.size() != n / 2)
            throw UsageError("--coeffs: expected " + std::to_string(n / 2) +
                             " values for n=" + std::to_string(n) + ", got " +
                             std::to_string(values.size()));
        for (std::uint64_t v : values)
            if (v >= mod)
                throw UsageError("--coeffs: " + std::to_string(v) +
                                 " is not reduced mod " + std::to_string(mod));
        return values;
    }
};

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path + " for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad())
        throw IoError("read failed for " + path);
    return bytes;
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out)
        throw IoError("write failed for " + path);
}

std::string verdict_text(const nht::Verdict& verdict) {
    std::string text = "diagonal residual " + std::to_string(verdict.diagonal_residual);
    for (std::size_t lag = 1; lag <= verdict.lag_residuals.size(); ++lag)
        text += ", lag " + std::to_string(lag) + " residual " +
                std::to_string(verdict.lag_residuals[lag - 1]);
    return text;
}

// ---------------------------------------------------------------- commands

int cmd_check(const KeyArgs& key) {
    const auto m = key.modulus();
    const auto coeffs = key.coefficients();
    const auto verdict = nht::check_solution(coeffs, m);
    std::cout << (verdict.pass ? "PASS" : "FAIL") << " n=" << key.n << " mod=" << key.mod
              << " coeffs=" << join(coeffs, ",") << '\n';
    std::cout << "  diagonal residual = " << verdict.diagonal_residual << '\n';
    for (std::size_t lag = 1; lag <= verdict.lag_residuals.size(); ++lag)
        std::cout << "  lag " << lag << " residual     = "
                  << verdict.lag_residuals[lag - 1] << '\n';
    return verdict.pass ? exit_ok : exit_domain;
}

struct SearchArgs {
    std::uint64_t n = 0;
    std::uint64_t mod = 0;
    bool exhaustive = false;
    bool random = false;
    std::uint64_t budget = 1'000'000;
    std::uint64_t seed = 0;
    std::uint64_t limit = 0;
    bool canonical = false;
    std::string append_path;
    std::uint64_t cost_guard = nht::default_cost_guard;
    unsigned workers = 1;
};

nht::SearchSpec to_spec(const SearchArgs& args) {
    if (args.n < 4 || args.n % 2 != 0)
        throw UsageError("--n must be even and at least 4");
    if (args.mod < 2 || args.mod >= nht::Modulus::max_exclusive)
        throw UsageError("--mod must lie in [2, 2^63)");
    if (args.exhaustive == args.random)
        throw UsageError("choose exactly one of --exhaustive and --random");
    nht::SearchSpec spec{.h = static_cast<std::size_t>(args.n / 2),
                         .m = nht::Modulus{args.mod}};
    spec.mode = args.random ? nht::SearchMode::random : nht::SearchMode::exhaustive;
    spec.trial_budget = args.budget;
    spec.seed = args.seed;
    if (args.limit > 0)
        spec.limit = args.limit;
    spec.cost_guard = args.cost_guard;
    spec.workers = args.workers;
    return spec;
}

int cmd_search(const SearchArgs& args) {
    const auto spec = to_spec(args);
    if (spec.mode == nht::SearchMode::random && spec.trial_budget == 0)
        throw UsageError("--random requires a nonzero --budget");
    auto records = nht::enumerate_solutions(spec);
    if (args.canonical)
        std::erase_if(records, [](const nht::SolutionRecord& r) { return !r.canonical; });

    for (const auto& record : records)
        std::cout << record.n << ' ' << record.m << ' ' << join(record.coeffs, " ")
                  << '\n';

    if (!args.append_path.empty()) {
        std::vector<nht::CatalogEntry> found;
        found.reserve(records.size());
        for (const auto& record : records) {
            nht::CatalogEntry entry;
            entry.n = record.n;
            entry.m = record.m;
            entry.coeffs = record.coeffs;
            entry.source = "searched";
            entry.verified = true; // every emitted record passed check_solution
            found.push_back(std::move(entry));
        }
        std::vector<nht::CatalogEntry> existing;
        if (std::filesystem::exists(args.append_path)) {
            std::ifstream in(args.append_path, std::ios::binary);
            if (!in)
                throw IoError("cannot open " + args.append_path + " for reading");
            existing = nht::load_catalog(in);
        }
        const auto merged = nht::merge_catalogs(existing, found);
        std::ostringstream text;
        nht::save_catalog(merged, text);
        const std::string& str = text.str();
        write_file(args.append_path,
                   {reinterpret_cast<const std::uint8_t*>(str.data()), str.size()});
        std::cerr << "appended to " << args.append_path << " (" << merged.size()
                  << " entries)\n";
    }
    return exit_ok;
}

int cmd_census(std::uint64_t n, std::uint64_t mod, std::uint64_t cost_guard,
               unsigned workers) {
    if (n < 4 || n % 2 != 0)
        throw UsageError("--n must be even and at least 4");
    if (mod < 2 || mod >= nht::Modulus::max_exclusive)
        throw UsageError("--mod must lie in [2, 2^63)");
    const auto result =
        nht::census(n / 2, nht::Modulus{mod}, cost_guard, workers);
    std::cout << "total " << result.total_solutions << '\n';
    std::cout << "orbits " << result.equivalence_classes << '\n';
    return exit_ok;
}

int cmd_gram(const KeyArgs& key, std::size_t dense_bound) {
    const auto m = key.modulus();
    const nht::NhtMatrix matrix(key.n, m, key.coefficients());
    const auto product = nht::gram(matrix, dense_bound);
    for (std::size_t r = 0; r < product.size(); ++r) {
        for (std::size_t c = 0; c < product.size(); ++c)
            std::cout << (c ? " " : "") << product.at(r, c);
        std::cout << '\n';
    }
    std::cout << "identity: " << (nht::is_identity(product, m) ? "yes" : "no") << '\n';
    return exit_ok;
}

int cmd_transform(const KeyArgs& key, const std::string& block_text, bool inverse_mode,
                  bool unchecked) {
    const auto m = key.modulus();
    const auto coeffs = key.coefficients();
    auto block = parse_u64_list(block_text, "--block");
    for (std::uint64_t v : block)
        if (v >= key.mod)
            throw UsageError("--block: " + std::to_string(v) + " is not reduced mod " +
                             std::to_string(key.mod));
    nht::BlockVector out;
    if (inverse_mode) {
        if (unchecked)
            throw UsageError("--unchecked cannot be combined with --inverse");
        out = nht::inverse(nht::ScrambleKey(key.n, m, coeffs), block);
    } else if (unchecked) {
        out = nht::forward(nht::NhtMatrix(key.n, m, coeffs), block);
    } else {
        out = nht::forward(nht::ScrambleKey(key.n, m, coeffs), block);
    }
    std::cout << join(out, ",") << '\n';
    return exit_ok;
}

int cmd_scramble(const KeyArgs& key, const std::string& input,
                 const std::string& output) {
    const nht::ScrambleKey scramble_key(key.n, key.modulus(), key.coefficients());
    const auto bytes = read_file(input);
    const auto container = nht::scramble_stream(scramble_key, bytes);
    write_file(output, nht::serialize(container));
    std::cerr << "scrambled " << bytes.size() << " bytes into "
              << container.block_count() << " blocks\n";
    return exit_ok;
}

int cmd_descramble(const KeyArgs& key, const std::string& input,
                   const std::string& output) {
    const auto bytes = read_file(input);
    const auto container = nht::parse_container(bytes);
    std::optional<nht::ScrambleKey> scramble_key;
    if (key.any_given()) {
        if (key.n == 0 || key.mod == 0 || key.coeffs.empty())
            throw UsageError("descramble needs all of --n, --mod and --coeffs, or none");
        scramble_key.emplace(key.n, key.modulus(), key.coefficients());
    } else {
        // The container stores its key in clear; fall back to it.
        scramble_key.emplace(container.n, nht::Modulus{container.m}, container.coeffs);
    }
    const auto restored = nht::descramble_stream(container, *scramble_key);
    write_file(output, restored);
    std::cerr << "restored " << restored.size() << " bytes\n";
    return exit_ok;
}

int cmd_tables() {
    std::size_t unreduced = 0;
    std::size_t mismatches = 0;
    for (const auto& table : nht::reference_tables()) {
        const auto report = nht::reproduce(table);
        std::cout << table.label << ": n=" << table.n << " mod=" << table.m
                  << " key=" << join(table.coeffs, ",") << '\n';
        std::cout << "  key check: " << (report.key_verdict.pass ? "PASS" : "FAIL")
                  << " (" << verdict_text(report.key_verdict) << ")\n";
        if (!table.note.empty())
            std::cout << "  note: " << table.note << '\n';
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            std::cout << "  row " << (r + 1)
                      << ": f       = " << join(table.rows[r].input, ",") << '\n';
            std::cout << "         g       = " << join(report.computed[r], ",") << '\n';
            std::cout << "         printed = " << join(table.rows[r].printed, ",")
                      << '\n';
            for (const auto& d : report.discrepancies) {
                if (d.row != r + 1)
                    continue;
                if (d.reduction_only) {
                    std::cout << "         erratum: g(" << d.index << ") printed "
                              << d.printed << ", computed " << d.computed
                              << " (unreduced print, equal mod " << table.m << ")\n";
                    ++unreduced;
                } else {
                    std::cout << "         MISMATCH: g(" << d.index << ") printed "
                              << d.printed << ", computed " << d.computed << '\n';
                    ++mismatches;
                }
            }
        }
        bool clean = true;
        for (const auto& d : report.discrepancies)
            clean = clean && d.reduction_only;
        std::cout << "  result: "
                  << (clean ? "rows reproduce the printed table after reduction mod " +
                                  std::to_string(table.m)
                            : "printed table does NOT reproduce")
                  << '\n';
    }
    std::cout << "tables: " << unreduced << " unreduced prints flagged, " << mismatches
              << " value mismatches\n";
    return mismatches == 0 ? exit_ok : exit_domain;
}

int cmd_catalog_verify(std::string path) {
    if (path.empty()) {
        if (const char* env = std::getenv("NHT_CATALOG"))
            path = env;
        else
            throw UsageError("no catalog path given and NHT_CATALOG is not set");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path + " for reading");
    const auto entries = nht::load_catalog(in);
    std::size_t good = 0;
    for (const auto& entry : entries) {
        std::cout << (entry.verified ? "ok  " : "FAIL") << ' ' << entry.n << ' '
                  << entry.m << ' ' << join(entry.coeffs, " ") << '\n';
        if (entry.verified)
            ++good;
    }
    std::cout << "verified " << good << " of " << entries.size() << " entries\n";
    return good == entries.size() ? exit_ok : exit_domain;
}

int run_guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const nht::CatalogParseError& e) {
        std::cerr << "error: catalog " << e.what() << '\n';
        return exit_usage;
    } catch (const nht::CostGuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_domain;
    } catch (const nht::CodecError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_domain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_domain;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"number theoretic Hilbert transform toolkit"};
    app.require_subcommand(1);
    int rc = exit_ok;

    // check
    KeyArgs check_key;
    auto* check = app.add_subcommand("check", "check the orthogonality conditions");
    check_key.attach(check);
    check->callback([&] { rc = run_guarded([&] { return cmd_check(check_key); }); });

    // search
    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "enumerate or sample solutions");
    search->add_option("--n", search_args.n, "transform size n")->required();
    search->add_option("--mod", search_args.mod, "modulus m")->required();
    search->add_flag("--exhaustive", search_args.exhaustive,
                     "visit every tuple in [0,m)^{n/2}");
    search->add_flag("--random", search_args.random, "sample tuples at random");
    search->add_option("--budget", search_args.budget,
                       "random mode: number of tuples to draw");
    search->add_option("--seed", search_args.seed, "random mode: RNG seed");
    search->add_option("--limit", search_args.limit, "emit at most this many solutions");
    search->add_flag("--canonical", search_args.canonical,
                     "emit only orbit representatives");
    search->add_option("--append", search_args.append_path,
                       "merge the solutions into this catalog file");
    search->add_option("--cost-guard", search_args.cost_guard,
                       "max candidate checks for exhaustive mode");
    search->add_option("--workers", search_args.workers, "worker threads");
    search->callback([&] { rc = run_guarded([&] { return cmd_search(search_args); }); });

    // census
    std::uint64_t census_n = 0;
    std::uint64_t census_mod = 0;
    std::uint64_t census_guard = nht::default_cost_guard;
    unsigned census_workers = 1;
    auto* census_cmd =
        app.add_subcommand("census", "count solutions and equivalence classes");
    census_cmd->add_option("--n", census_n, "transform size n")->required();
    census_cmd->add_option("--mod", census_mod, "modulus m")->required();
    census_cmd->add_option("--cost-guard", census_guard, "max candidate checks");
    census_cmd->add_option("--workers", census_workers, "worker threads");
    census_cmd->callback([&] {
        rc = run_guarded(
            [&] { return cmd_census(census_n, census_mod, census_guard, census_workers); });
    });

    // gram
    KeyArgs gram_key;
    std::uint64_t gram_bound = nht::default_dense_bound;
    auto* gram_cmd = app.add_subcommand("gram", "print the dense product N N^T mod m");
    gram_key.attach(gram_cmd);
    gram_cmd->add_option("--dense-bound", gram_bound, "largest n to materialize");
    gram_cmd->callback([&] {
        rc = run_guarded([&] { return cmd_gram(gram_key, gram_bound); });
    });

    // transform
    KeyArgs transform_key;
    std::string block_text;
    bool inverse_mode = false;
    bool unchecked = false;
    auto* transform_cmd = app.add_subcommand("transform", "apply the transform to one block");
    transform_key.attach(transform_cmd);
    transform_cmd->add_option("--block", block_text, "comma-separated block entries")
        ->required();
    transform_cmd->add_flag("--inverse", inverse_mode, "apply the inverse transform");
    transform_cmd->add_flag("--unchecked", unchecked,
                            "allow a key that fails the conditions (forward only)");
    transform_cmd->callback([&] {
        rc = run_guarded(
            [&] { return cmd_transform(transform_key, block_text, inverse_mode, unchecked); });
    });

    // scramble
    KeyArgs scramble_key;
    std::string scramble_in;
    std::string scramble_out;
    auto* scramble_cmd = app.add_subcommand("scramble", "scramble a file into a container");
    scramble_key.attach(scramble_cmd);
    scramble_cmd->add_option("--input", scramble_in, "input file")->required();
    scramble_cmd->add_option("--output", scramble_out, "output container file")->required();
    scramble_cmd->callback([&] {
        rc = run_guarded(
            [&] { return cmd_scramble(scramble_key, scramble_in, scramble_out); });
    });

    // descramble
    KeyArgs descramble_key;
    std::string descramble_in;
    std::string descramble_out;
    auto* descramble_cmd =
        app.add_subcommand("descramble", "restore the original file from a container");
    descramble_key.attach(descramble_cmd, /*required=*/false);
    descramble_cmd->add_option("--input", descramble_in, "container file")->required();
    descramble_cmd->add_option("--output", descramble_out, "restored output file")
        ->required();
    descramble_cmd->callback([&] {
        rc = run_guarded(
            [&] { return cmd_descramble(descramble_key, descramble_in, descramble_out); });
    });

    // tables
    auto* tables_cmd =
        app.add_subcommand("tables", "recompute the bundled reference tables");
    tables_cmd->callback([&] { rc = run_guarded(cmd_tables); });

    // catalog-verify
    std::string catalog_path;
    auto* verify_cmd =
        app.add_subcommand("catalog-verify", "re-check every entry of a catalog file");
    verify_cmd->add_option("path", catalog_path,
                           "catalog file (defaults to $NHT_CATALOG)");
    verify_cmd->callback(
        [&] { rc = run_guarded([&] { return cmd_catalog_verify(catalog_path); }); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }
    return rc;
}
