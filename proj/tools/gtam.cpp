// gtam: count, enumerate, map, verify, series, render.

#include <fstream>
#include <iostream>
#include <iterator>

#include "CLI11.hpp"
#include "gtam/counting.hpp"
#include "gtam/dispatch.hpp"
#include "gtam/errors.hpp"
#include "gtam/verify.hpp"

using namespace gtam;

namespace {

enum Exit { kPass = 0, kVerifyFail = 1, kCap = 2, kParse = 3, kDomain = 4 };

std::string read_input(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized Tamari intervals, separating decompositions and their bijections"};
    app.require_subcommand(1);
    int max = -1;
    std::string format = "text";
    app.add_option("--max", max, "Size cap for enumerations, or size bound for verify");
    app.add_option("--format", format, "Output format of render")->check(CLI::IsMember({"text", "dot"}));

    std::string family, name, path = "-", suite;
    std::vector<int> params;
    int degree = 6;

    auto* count = app.add_subcommand("count", "Print the size of a family");
    count->add_option("family", family)->required();
    count->add_option("params", params);
    auto* enumerate = app.add_subcommand("enumerate", "Print every object of a family, separated by '---'");
    enumerate->add_option("family", family)->required();
    enumerate->add_option("params", params);
    auto* map = app.add_subcommand("map", "Apply a bijection to the object in a file ('-' for stdin)");
    map->add_option("bijection", name)->required();
    map->add_option("file", path);
    auto* verify = app.add_subcommand("verify", "Run an exhaustive verification suite");
    verify->add_option("suite", suite)->required();
    verify->add_option("size", max);
    auto* series = app.add_subcommand("series", "Print F(x,y,z) up to a total degree");
    series->add_option("degree", degree);
    auto* rend = app.add_subcommand("render", "Rewrite an object canonically, or as DOT");
    rend->add_option("file", path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed()) {
            std::cout << count_family(family, params, max) << '\n';
        } else if (enumerate->parsed()) {
            const auto all = enumerate_family(family, params, max);
            for (std::size_t k = 0; k < all.size(); ++k) std::cout << (k ? "---\n" : "") << all[k];
        } else if (map->parsed()) {
            std::cout << apply_bijection(name, read_input(path));
        } else if (verify->parsed()) {
            if (suite == "list") {
                for (const auto& s : suite_names()) std::cout << s << '\n';
                return kPass;
            }
            const auto r = run_suite(suite, max >= 0 ? max : default_suite_size(suite));
            std::cout << r.suite << ": " << (r.ok ? "pass" : "FAIL") << " (" << r.instances << " instances, "
                      << r.seconds << " s)\n";
            if (!r.ok) {
                std::cout << "counterexample: " << r.counterexample << '\n';
                return kVerifyFail;
            }
        } else if (series->parsed()) {
            std::cout << F_series(degree).to_text();
        } else if (rend->parsed()) {
            std::cout << render(read_input(path), format);
        }
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return kCap;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const InvariantFailure& e) {
        std::cerr << "invariant failure: " << e.what() << '\n';
        return kVerifyFail;
    }
    return kPass;
}
