#include "protoric/protoric.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

struct Options {
    std::string format = "text";
    std::string file;
    std::size_t index = 0;
    std::string what;
    std::size_t degree = 0;
    std::size_t depth = 0;
    std::string omega;
    std::string finsupp;
    std::size_t level = 0;
    std::string values;
    std::string eval;
    std::string demo;
};

protoric_format format_of(const Options& o)
{
    return o.format == "json" ? PROTORIC_FORMAT_JSON : PROTORIC_FORMAT_TEXT;
}

// Prints a result and returns its exit code. Takes ownership of r.
int emit(protoric_result* r)
{
    if (!r) {
        std::cerr << "protoric: error: out of memory\n";
        return 1;
    }
    std::cout << protoric_result_output(r);
    std::cerr << protoric_result_diagnostics(r);
    const int code = protoric_status_exit_code(protoric_result_status(r));
    protoric_result_free(r);
    return code;
}

std::optional<std::string> read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <typename F>
int with_document(const Options& o, F&& f)
{
    const auto text = read_file(o.file);
    if (!text) {
        std::cerr << "protoric: error: cannot read '" << o.file << "'\n";
        return 2;
    }
    protoric_document* doc = nullptr;
    protoric_result* report = nullptr;
    const protoric_status s =
        protoric_document_parse(text->data(), text->size(), o.file.c_str(), format_of(o), &doc, &report);
    if (s != PROTORIC_OK) {
        if (report)
            return emit(report);
        std::cerr << "protoric: error: " << protoric_status_name(s) << "\n";
        return protoric_status_exit_code(s);
    }
    const int code = emit(f(doc));
    protoric_document_free(doc);
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations with towers of affine semigroups and their toric duals", "protoric"};
    app.require_subcommand(1);
    app.set_version_flag("--version", protoric_version());
    Options o;
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* parse = app.add_subcommand("parse", "Parse a tower file and print its canonical form");
    parse->add_option("file", o.file, "Tower description (.twr)")->required();

    auto* check = app.add_subcommand("check", "Validate a tower");
    check->add_option("file", o.file, "Tower description (.twr)")->required();

    auto* level = app.add_subcommand("level", "Query one level of a tower");
    level->add_option("file", o.file, "Tower description (.twr)")->required();
    level->add_option("--index", o.index, "Level index, from 1")->required();
    level->add_option("--what", o.what, "Query")
        ->required()
        ->check(CLI::IsMember({"generators", "hilbert", "inequalities", "ideal"}));
    level->add_option("--degree", o.degree, "Binomial degree bound for --what ideal");

    auto* embed = app.add_subcommand("embed", "Report the canonical embedding of a tower");
    embed->add_option("file", o.file, "Tower description (.twr)")->required();
    embed->add_option("--depth", o.depth, "Truncation depth (default: the tower depth)");

    auto* dualize = app.add_subcommand("dualize", "Dualize a tower and check the round trip");
    dualize->add_option("file", o.file, "Tower description (.twr)")->required();

    auto* pair = app.add_subcommand("pair", "Pair a prefix of Z^omega with a finitely supported vector");
    pair->add_option("--omega", o.omega, "Prefix, e.g. \"(1,2,3)\"")->required();
    pair->add_option("--finsupp", o.finsupp, "Finitely supported vector, e.g. \"(0,1)\"")->required();

    auto* point = app.add_subcommand("point", "Check a point of a toric level and evaluate it");
    point->add_option("file", o.file, "Tower description (.twr)")->required();
    point->add_option("--level", o.level, "Level index, from 1")->required();
    point->add_option("--values", o.values, "Values per generator, e.g. \"(1,1/2,2)\"")->required();
    auto* eval = point->add_option("--eval", o.eval, "Semigroup element to evaluate at");

    auto* demo = app.add_subcommand("demo", "Run a built-in demonstration");
    demo->add_option("name", o.demo, "Demonstration")
        ->required()
        ->check(CLI::IsMember({"cauchy-algebra", "incomplete-subsemigroup"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const protoric_format fmt = format_of(o);
    if (*parse)
        return with_document(o, [&](protoric_document* d) { return protoric_document_render(d, fmt); });
    if (*check)
        return with_document(o, [&](protoric_document* d) { return protoric_document_check(d, fmt); });
    if (*level)
        return with_document(o, [&](protoric_document* d) {
            return protoric_document_level(d, o.index, o.what.c_str(), o.degree, fmt);
        });
    if (*embed)
        return with_document(o, [&](protoric_document* d) { return protoric_document_embed(d, o.depth, fmt); });
    if (*dualize)
        return with_document(o, [&](protoric_document* d) { return protoric_document_dualize(d, fmt); });
    if (*point)
        return with_document(o, [&](protoric_document* d) {
            return protoric_document_point(d, o.level, o.values.c_str(), *eval ? o.eval.c_str() : nullptr, fmt);
        });
    if (*pair)
        return emit(protoric_pair(o.omega.c_str(), o.finsupp.c_str(), fmt));
    return emit(protoric_demo(o.demo.c_str(), fmt));
}
