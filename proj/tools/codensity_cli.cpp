/*
 * Copyright 2026 The codensity authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace codensity;
using namespace codensity::cli;

int main(int argc, char** argv) {
    CLI::App app{"codensity: codensity liftings, bisimilarities and fiberedness checks over finite sets"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "text";
    std::string epsilon;
    std::size_t bound = 0;
    std::size_t max_iter = 10'000;
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--input", input, "JSON input document");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--epsilon", epsilon, "Grid step for metric instances, as p/q");
        sub->add_option("--max-iter", max_iter, "Iteration cap for fixed points");
        sub->add_option("--bound", bound, "Carrier size bound for exhaustive searches");
    };

    auto* lift = app.add_subcommand("lift", "Lift the document's fiber elements");
    common(lift);
    lift->add_option("--element", o.names, "Element names (default: all)");

    auto* bisim = app.add_subcommand("bisim", "Codensity bisimilarity of the document's coalgebras");
    common(bisim);
    bisim->add_option("--coalgebra", o.names, "Coalgebra names (default: all)");
    bisim->add_flag("--trace", o.trace, "Print every iterate");

    std::string which;
    auto* check = app.add_subcommand("check", "Bounded property checks");
    common(check);
    check->add_option("which", which, "cinjective, fibered, stability or battery")
        ->required()
        ->check(CLI::IsMember({"cinjective", "fibered", "stability", "battery"}));
    check->add_option("--instance", o.instance, "Fibration: ERel, Pre, EqRel, PMet or Top");
    check->add_option("--omega", o.omega, "Observation object name");
    check->add_option("--functor", o.functor, "Functor: powerset, subdist, detlts, machine or identity");
    check->add_option("--param", o.params, "Modality names");
    check->add_option("--alphabet", o.alphabet, "Letters for detlts and machine");
    check->add_option("--denominator", o.denominator, "Weight denominator for subdist");
    check->add_option("--entry", o.entry, "Catalog entry supplying the setup");
    check->add_option("--morphism", o.names, "Morphism names for stability (default: all)");
    check->add_option("--entries", o.names, "Catalog entries for the battery (default: all)");

    std::string oracle;
    auto* compare = app.add_subcommand("compare", "Compare the engine with an independent oracle");
    common(compare);
    compare->add_option("--oracle", oracle, "Oracle name")->required()->check(CLI::IsMember(oracle_names()));
    compare->add_option("--denominator", o.denominator, "Weight denominator for subdist");
    compare->add_option("--name", o.names, "Element or coalgebra names (default: all)");

    auto* cat = app.add_subcommand("catalog", "List the built-in liftings");
    common(cat);

    auto* fmt = app.add_subcommand("format", "Print the document in canonical form");
    common(fmt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return e.get_exit_code() == 0 ? code : kInvalid;
    }

    try {
        if (!input.empty()) o.doc = load_document(input);
        if (!epsilon.empty()) o.epsilon = parse_rational(epsilon);
        for (auto* sub : {lift, bisim, check, compare, cat, fmt})
            if (sub->count("--bound") != 0) o.bound = bound;
        o.max_iter = max_iter;

        Outcome out;
        if (lift->parsed()) out = cmd_lift(o);
        else if (bisim->parsed()) out = cmd_bisim(o);
        else if (check->parsed()) out = cmd_check(which, o);
        else if (compare->parsed()) out = cmd_compare(oracle, o);
        else if (cat->parsed()) out = cmd_catalog(o);
        else out = cmd_format(o);

        std::cout << (format == "json" ? canonical_text(out.json) : out.text);
        return out.exit_code;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
}
