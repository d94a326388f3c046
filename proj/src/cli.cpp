#include "stq/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stq/identities.hpp"
#include "stq/partitions.hpp"

namespace stq {
namespace {

using nlohmann::json;

json report_to_json(const IdentityReport &r)
{
    json j;
    j["name"] = r.name;
    j["order"] = r.order;
    j["passed"] = r.passed;
    if (r.first_bad_exponent)
        j["first_bad_exponent"] = *r.first_bad_exponent;
    if (!r.detail.empty())
        j["detail"] = r.detail;
    return j;
}

void print_report_text(std::ostream &out, const IdentityReport &r)
{
    out << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " (order " << r.order << ")";
    if (r.first_bad_exponent)
        out << " first bad exponent " << *r.first_bad_exponent;
    if (!r.detail.empty())
        out << " -- " << r.detail;
    out << "\n";
}

void print_report_csv_row(std::ostream &out, const IdentityReport &r)
{
    out << r.name << "," << r.order << "," << (r.passed ? "true" : "false") << ",";
    if (r.first_bad_exponent)
        out << *r.first_bad_exponent;
    out << "\n";
}

int cmd_st_table(std::ostream &out, int max_n, const std::string &format)
{
    IntSeries st = max_n >= 1 ? st_series(max_n) : IntSeries(0);
    if (format == "csv") {
        out << "n,sT\n";
        for (int n = 1; n <= max_n; ++n)
            out << n << "," << st.coeff(n) << "\n";
    } else if (format == "json") {
        json rows = json::array();
        for (int n = 1; n <= max_n; ++n)
            rows.push_back({{"n", n}, {"sT", to_string(st.coeff(n))}});
        out << rows.dump() << "\n";
    } else {
        out << "n\tsT\n";
        for (int n = 1; n <= max_n; ++n)
            out << n << "\t" << st.coeff(n) << "\n";
    }
    return 0;
}

int cmd_crank_table(std::ostream &out, int max_n, int modulus, const std::string &format)
{
    CrankTable table = crank_table_enum(std::max(max_n, 0));
    struct Row {
        int n, m;
        long long c;
    };
    std::vector<Row> rows;
    if (modulus > 0) {
        for (int n = 1; n <= max_n; ++n) {
            auto classes = crank_mod_counts(table, modulus, n);
            for (int k = 0; k < modulus; ++k)
                rows.push_back({n, k, classes[static_cast<std::size_t>(k)]});
        }
    } else {
        for (const auto &[key, c] : table.counts) {
            auto [m, n] = key;
            if (n >= 1 && n <= max_n && c != 0)
                rows.push_back({n, m, c});
        }
        std::sort(rows.begin(), rows.end(),
                  [](const Row &a, const Row &b) { return std::tie(a.n, a.m) < std::tie(b.n, b.m); });
    }
    if (format == "csv") {
        out << "n,m,C\n";
        for (const auto &r : rows)
            out << r.n << "," << r.m << "," << r.c << "\n";
    } else if (format == "json") {
        json j = json::array();
        for (const auto &r : rows)
            j.push_back({{"n", r.n}, {"m", r.m}, {"C", r.c}});
        out << j.dump() << "\n";
    } else {
        out << "n\tm\tC\n";
        for (const auto &r : rows)
            out << r.n << "\t" << r.m << "\t" << r.c << "\n";
    }
    return 0;
}

int cmd_enumerate(std::ostream &out, int max_n, const std::string &format)
{
    struct Row {
        int n;
        std::string pi1, pi2;
        int crank;
    };
    std::vector<Row> rows;
    for (int n = 1; n <= max_n; ++n)
        for (const auto &p : enumerate_st_pairs(n))
            rows.push_back({n, p.pi1.str(), p.pi2.str(), paircrank(p)});
    if (format == "csv") {
        out << "n,pi1,pi2,paircrank\n";
        for (const auto &r : rows)
            out << r.n << "," << r.pi1 << "," << r.pi2 << "," << r.crank << "\n";
    } else if (format == "json") {
        json j = json::array();
        for (const auto &r : rows)
            j.push_back({{"n", r.n}, {"pi1", r.pi1}, {"pi2", r.pi2}, {"paircrank", r.crank}});
        out << j.dump() << "\n";
    } else {
        out << "n\tpi1\tpi2\tpaircrank\n";
        for (const auto &r : rows)
            out << r.n << "\t" << r.pi1 << "\t" << r.pi2 << "\t" << r.crank << "\n";
    }
    return 0;
}

int emit_reports(std::ostream &out, const std::vector<IdentityReport> &reports, const std::string &format)
{
    bool all_passed = true;
    for (const auto &r : reports)
        all_passed = all_passed && r.passed;
    if (format == "json") {
        if (reports.size() == 1) {
            out << report_to_json(reports.front()).dump() << "\n";
        } else {
            json j = json::array();
            for (const auto &r : reports)
                j.push_back(report_to_json(r));
            out << j.dump() << "\n";
        }
    } else if (format == "csv") {
        out << "name,order,passed,first_bad_exponent\n";
        for (const auto &r : reports)
            print_report_csv_row(out, r);
    } else {
        for (const auto &r : reports)
            print_report_text(out, r);
    }
    return all_passed ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"exact q-series tables and identity checks for a family of partition pairs"};
    app.require_subcommand(0, 1);

    std::string format = "text";
    int order = 0;
    int max_n = 10;
    int modulus = 0;
    std::string identity;
    unsigned long long seed = 20260826ULL;
    bool list = false;

    app.add_flag("--list", list, "print the check registry and exit");

    auto add_format = [&](CLI::App *cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    CLI::App *st_table = app.add_subcommand("st-table", "table of the pair-counting function");
    st_table->add_option("--max-n", max_n, "largest n")->required();
    add_format(st_table);

    CLI::App *crank_table = app.add_subcommand("crank-table", "crank counts C(m,n) from the series");
    crank_table->add_option("--max-n", max_n, "largest n")->required();
    crank_table->add_option("--modulus", modulus, "aggregate counts by crank residue");
    add_format(crank_table);

    CLI::App *enumerate = app.add_subcommand("enumerate", "list the pairs and their cranks");
    enumerate->add_option("--max-n", max_n, "largest n")->required();
    add_format(enumerate);

    CLI::App *verify = app.add_subcommand("verify", "run one identity check");
    verify->add_option("--identity", identity, "check name")->required();
    verify->add_option("--order", order, "truncation order (0 = check default)");
    verify->add_option("--seed", seed, "seed for randomized specializations");
    add_format(verify);

    CLI::App *verify_all = app.add_subcommand("verify-all", "run the whole registry");
    verify_all->add_option("--order", order, "truncation order (0 = per-check defaults)");
    verify_all->add_option("--seed", seed, "seed for randomized specializations");
    add_format(verify_all);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (list) {
            for (const auto &c : identity_checks())
                out << c.name << " (default order " << c.default_order << "): " << c.description << "\n";
            return 0;
        }
        if (app.get_subcommands().empty()) {
            err << "expected a command: st-table, crank-table, enumerate, verify, verify-all\n";
            return 2;
        }
        CheckContext ctx;
        ctx.order = order;
        ctx.seed = seed;
        if (st_table->parsed())
            return cmd_st_table(out, max_n, format);
        if (crank_table->parsed())
            return cmd_crank_table(out, max_n, modulus, format);
        if (enumerate->parsed())
            return cmd_enumerate(out, max_n, format);
        if (verify->parsed()) {
            if (!find_check(identity)) {
                err << "unknown identity: " << identity << "\n";
                return 2;
            }
            return emit_reports(out, {run_check(identity, ctx)}, format);
        }
        return emit_reports(out, run_all_checks(ctx), format);
    } catch (const std::invalid_argument &e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace stq
