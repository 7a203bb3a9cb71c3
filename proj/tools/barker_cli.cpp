#include "cli_io.hpp"
#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <set>

using namespace barker::cli;

int main(int argc, char** argv) {
    CLI::App app{"Barker sequence toolkit: autocorrelation identities, searches and nonexistence certificates"};
    app.require_subcommand(1);
    app.fallthrough();

    RunContext ctx;
    ctx.command_line.assign(argv, argv + argc);

    std::string format = "text";
    std::optional<unsigned long long> seed;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("-o,--output", ctx.output_path, "Write output to FILE instead of stdout");
    app.add_flag("--manifest", ctx.manifest, "Write FILE.manifest.json beside --output");
    app.add_option("--workers", ctx.workers, "Worker threads for searches (0: all cores)")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", seed, "Seed for randomized tooling; recorded in the manifest");
    app.add_flag("--timing", ctx.timing, "Include wall-clock times in search output");
    app.add_flag("-q,--quiet", ctx.quiet, "No progress on stderr");

    std::function<int()> run;

    std::string input;
    auto seq_arg = [&input](CLI::App* sub) {
        sub->add_option("sequence", input, "Signs (+-), bits (10), comma separated ±1, @FILE or - for stdin")->required();
    };

    auto* autocorr = app.add_subcommand("autocorr", "Aperiodic autocorrelation profile c_0..c_{n-1}");
    seq_arg(autocorr);
    autocorr->callback([&] { run = [&] { return cmd_autocorr(ctx, input); }; });

    auto* check = app.add_subcommand("check", "Barker test plus identity suite; exit 0 if Barker, 1 if not");
    seq_arg(check);
    check->callback([&] { run = [&] { return cmd_check(ctx, input); }; });

    auto* canon = app.add_subcommand("canon", "Canonical representative under negation, reversal and alternation");
    seq_arg(canon);
    canon->callback([&] { run = [&] { return cmd_canon(ctx, input); }; });

    std::optional<int> count;
    auto* psums = app.add_subcommand("power-sums", "Root power sums of Q (S_mu) and P (s_mu)");
    seq_arg(psums);
    psums->add_option("count", count, "Number of terms (default n - 1)");
    psums->callback([&] { run = [&] { return cmd_power_sums(ctx, input, count); }; });

    SearchArgs sargs;
    auto search_flags = [&sargs](CLI::App* sub, bool with_rules) {
        sub->add_option("--mode", sargs.mode, "exhaustive, pruned or auto (pruned for odd n)")
            ->check(CLI::IsMember({"auto", "exhaustive", "pruned"}));
        sub->add_option("--ceiling", sargs.ceiling, "Raise the default length ceiling");
        sub->add_flag("--raw", sargs.raw, "Report every orientation, not just canonical forms");
        sub->add_option("--shard-width", sargs.shard_width, "Prefix width used to split work");
        if (with_rules) sub->add_option("--rules", sargs.rules, "Pruning rules: all, none or a comma separated list");
    };

    int n = 0, lo = 0, hi = 0;
    auto* search = app.add_subcommand("search", "Find Barker sequences of length n");
    search->add_option("n", n, "Length")->required();
    search_flags(search, true);
    search->callback([&] { run = [&] { return cmd_search(ctx, n, sargs); }; });

    auto* scan = app.add_subcommand("scan", "Count Barker sequences for every length in [lo, hi]");
    scan->add_option("lo", lo, "First length")->required();
    scan->add_option("hi", hi, "Last length")->required();
    search_flags(scan, true);
    scan->callback([&] { run = [&] { return cmd_scan(ctx, lo, hi, sargs); }; });

    std::optional<int> psl_ceiling;
    auto* psl = app.add_subcommand("psl", "Minimum peak sidelobe level over all sequences of length n");
    psl->add_option("n", n, "Length")->required();
    psl->add_option("--ceiling", psl_ceiling, "Raise the default length ceiling");
    psl->callback([&] { run = [&] { return cmd_psl(ctx, n, psl_ceiling); }; });

    CertificateArgs cargs;
    auto* certificate = app.add_subcommand("certificate", "Write or verify nonexistence certificates for odd n > 13");
    certificate->add_option("n", cargs.n, "Length, or first length of a range");
    certificate->add_option("hi", cargs.hi, "Last length of a range");
    certificate->add_option("--verify", cargs.verify_path, "Re-check an existing certificate file; exit 0 valid, 1 invalid");
    certificate->add_option("--dir", cargs.dir, "Write certificate_<n>.json files into DIR");
    certificate->add_option("--indent", cargs.indent, "JSON indentation (-1: compact)");
    certificate->callback([&] { run = [&] { return cmd_certificate(ctx, cargs); }; });

    std::set<std::string> value_options;
    std::function<void(const CLI::App*)> collect = [&](const CLI::App* a) {
        for (const auto* opt : a->get_options()) {
            if (opt->get_type_size() == 0 || opt->get_positional()) continue;
            for (const auto& name : opt->get_lnames()) value_options.insert("--" + name);
            for (const auto& name : opt->get_snames()) value_options.insert("-" + name);
        }
        for (const auto* sub : a->get_subcommands({})) collect(sub);
    };
    collect(&app);
    auto args = protect_sequence_args(argc, argv, value_options);
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    ctx.seed = seed;
    ctx.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
    if (ctx.manifest && ctx.output_path.empty()) {
        std::cerr << "error: --manifest requires -o/--output FILE\n";
        return 2;
    }

    try {
        return run();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
