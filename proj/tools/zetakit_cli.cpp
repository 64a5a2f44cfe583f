// zetakit verify | compute
//
// Exit codes: 0 success / all identities pass, 1 at least one failure,
// 2 usage error.

#include <zetakit/verifier.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kUsage = 2;

int do_verify(const std::vector<std::string>& ids, const std::vector<std::string>& tags, double tol_scale,
              int jobs, const std::string& format, bool list_only) {
    using namespace zetakit::verify;
    Filter f{ids, tags};
    if (list_only) {
        auto picked = list(f);
        if (format == "json") {
            nlohmann::ordered_json j = nlohmann::ordered_json::array();
            for (const auto* e : picked) {
                nlohmann::ordered_json o;
                o["id"] = e->id;
                o["paper_ref"] = e->paper_ref;
                o["kind"] = to_string(e->kind);
                if (e->exact()) o["tol"] = nullptr;
                else o["tol"] = e->tol;
                o["relative"] = e->relative;
                o["tags"] = e->tags;
                j.push_back(std::move(o));
            }
            std::cout << j.dump(2) << '\n';
        } else {
            write_list(std::cout, picked);
        }
        return 0;
    }
    Report rep = run(f, tol_scale, jobs);
    if (format == "json") std::cout << to_json(rep).dump(2) << '\n';
    else write_text(std::cout, rep);
    return rep.summary.failed == 0 ? 0 : 1;
}

int do_compute(const std::string& fn, const std::vector<std::string>& args) {
    using namespace zetakit::verify;
    std::cout << format_value(compute(fn, args)) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zetakit: special functions and identity verification"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run the identity registry");
    std::vector<std::string> ids, tags;
    double tol_scale = 1.0;
    int jobs = 1;
    std::string format = "text";
    bool list_only = false;
    verify->add_option("--id", ids, "identity id or family (repeatable)");
    verify->add_option("--tag", tags, "tag (repeatable)");
    verify->add_option("--tol-scale", tol_scale, "multiply every tolerance")->check(CLI::PositiveNumber);
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--list", list_only, "list matching identities without evaluating");

    auto* compute = app.add_subcommand("compute", "evaluate one function");
    std::string fn;
    std::vector<std::string> args;
    compute->add_option("fn", fn, "function name")->required();
    compute->add_option("args", args, "arguments");
    // negative numbers are arguments, not options
    compute->allow_extras(false);
    compute->positionals_at_end(true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (verify->parsed()) return do_verify(ids, tags, tol_scale, jobs, format, list_only);
        return do_compute(fn, args);
    } catch (const zetakit::usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
