#include "partred/cli.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "partred/arc_diagram.hpp"
#include "partred/enumeration.hpp"
#include "partred/identities.hpp"
#include "partred/motzkin.hpp"
#include "partred/reduction.hpp"

namespace partred {

namespace {

std::string partition_json(const SetPartition& p) {
    nlohmann::ordered_json j;
    j["n"] = p.n();
    j["blocks"] = p.blocks();
    return j.dump();
}

FamilyFilter make_filter(std::optional<int> k, int m, bool noncrossing, bool poor) {
    FamilyFilter f;
    f.k = k;
    f.m = Regularity::finite(m);
    f.noncrossing = noncrossing;
    f.poor = poor;
    return f;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"m-regular set partitions: reduction, bijections, counting, verification"};
    app.set_help_all_flag("--help-all");
    app.require_subcommand(1);

    int n = 0;
    std::optional<int> k;
    int m = 1;
    bool noncrossing = false, poor = false;
    std::string format = "text";

    auto add_family_options = [&](CLI::App* cmd, bool with_format) {
        cmd->add_option("--n", n, "ground-set size")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--k", k, "number of blocks")->check(CLI::PositiveNumber);
        cmd->add_option("--m", m, "regularity lower bound")
            ->default_val(1)
            ->check(CLI::PositiveNumber);
        cmd->add_flag("--noncrossing", noncrossing, "restrict to noncrossing partitions");
        cmd->add_flag("--poor", poor, "restrict to blocks of size at most two");
        if (with_format)
            cmd->add_option("--format", format, "output format")
                ->default_val("text")
                ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* enumerate = app.add_subcommand("enumerate", "list a partition family");
    add_family_options(enumerate, true);

    CLI::App* count = app.add_subcommand("count", "count a partition family");
    add_family_options(count, false);

    std::string partition_text, arcs_json, path_text;

    CLI::App* reduce = app.add_subcommand("reduce", "apply the reduction algorithm");
    reduce->add_option("--partition", partition_text, "partition in block notation")->required();
    bool reduce_to_arcs = false;
    reduce->add_flag("--arcs", reduce_to_arcs,
                     "emit the reduced arc diagram as JSON (works for any regularity)");

    CLI::App* expand = app.add_subcommand("expand", "invert the reduction algorithm");
    auto* expand_input = expand->add_option_group("input");
    expand_input->add_option("--partition", partition_text, "partition in block notation");
    expand_input->add_option("--arcs", arcs_json, "arc diagram as JSON");
    expand_input->require_option(1);

    CLI::App* motzkin = app.add_subcommand("motzkin", "2-Motzkin path correspondence");
    auto* motzkin_input = motzkin->add_option_group("input");
    motzkin_input->add_option("--partition", partition_text, "noncrossing partition to encode");
    motzkin_input->add_option("--path", path_text, "path over U,D,L,W to decode");
    motzkin_input->require_option(1);

    CLI::App* verify = app.add_subcommand("verify", "sweep an identity, one JSON report per cell");
    std::string identity;
    int max_n = -1;
    int jobs = 1;
    verify->add_option("--identity", identity, "which identity to sweep")
        ->required()
        ->check(CLI::IsMember({"eq2", "eq3", "narayana", "eq5", "motzkin"}));
    verify->add_option("--max-n", max_n, "largest ground-set size (default per identity)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--jobs", jobs, "worker threads")->default_val(1)->check(CLI::PositiveNumber);

    CLI::App* render = app.add_subcommand("render", "draw a partition or arc diagram");
    auto* render_input = render->add_option_group("input");
    render_input->add_option("--partition", partition_text, "partition in block notation");
    render_input->add_option("--arcs", arcs_json, "arc diagram as JSON");
    render_input->require_option(1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*enumerate) {
            for_each_partition(n, make_filter(k, m, noncrossing, poor),
                               [&](const SetPartition& p) {
                                   out << (format == "json" ? partition_json(p)
                                                            : format_partition(p))
                                       << '\n';
                                   return true;
                               });
        } else if (*count) {
            out << count_family(n, make_filter(k, m, noncrossing, poor)).str() << '\n';
        } else if (*reduce) {
            SetPartition p = parse_partition(partition_text);
            if (reduce_to_arcs)
                out << diagram_to_json(reduce_arcs(from_partition(p))) << '\n';
            else
                out << format_partition(reduce_partition(p)) << '\n';
        } else if (*expand) {
            if (!partition_text.empty())
                out << format_partition(expand_partition(parse_partition(partition_text))) << '\n';
            else
                out << diagram_to_json(expand_arcs(diagram_from_json(arcs_json))) << '\n';
        } else if (*motzkin) {
            if (!partition_text.empty())
                out << format_path(partition_to_path(parse_partition(partition_text))) << '\n';
            else
                out << format_partition(path_to_partition(parse_path(path_text))) << '\n';
        } else if (*render) {
            ArcDiagram d = partition_text.empty()
                               ? diagram_from_json(arcs_json)
                               : from_partition(parse_partition(partition_text));
            out << render_ascii(d) << '\n';
        } else if (*verify) {
            std::vector<VerificationReport> reports;
            if (identity == "eq2") {
                reports = verify_eq2(max_n < 0 ? 11 : max_n, jobs);
            } else if (identity == "eq3") {
                reports = verify_eq3(max_n < 0 ? 11 : max_n, jobs);
            } else if (identity == "narayana") {
                int top = max_n < 0 ? 16 : max_n;
                reports = verify_narayana(top, std::min(top, 11), jobs);
            } else if (identity == "eq5") {
                reports = verify_eq5(max_n < 0 ? 16 : max_n, jobs);
            } else {
                reports = verify_motzkin(max_n < 0 ? 10 : max_n, jobs);
            }
            bool all_pass = true;
            for (const auto& r : reports) {
                out << report_to_json_line(r) << '\n';
                all_pass = all_pass && r.pass();
            }
            if (!all_pass) return 3;
        }
    } catch (const DomainError& e) {
        err << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace partred
