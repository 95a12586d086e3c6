// Copyright 2026 The gtele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gtele/cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gtele/acceptance.h"
#include "gtele/entanglement.h"
#include "gtele/gbasis.h"
#include "gtele/ket_json.h"
#include "gtele/random.h"
#include "gtele/report_io.h"
#include "gtele/teleport.h"

namespace gtele::cli {

namespace {

/// Thrown for bad user input; maps to kExitUsage.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr double kInputNormTolerance = 1e-6;

struct StateOptions {
    std::string file;
    std::string named;
    bool random = false;
    bool random_product = false;
    uint64_t state_seed = 0;
    CLI::Option *state_seed_opt = nullptr;
};

void add_state_options(CLI::App *cmd, StateOptions &opts, bool allow_named, bool allow_product) {
    auto *file = cmd->add_option("--state-file", opts.file, "Ket document {\"qubits\": n, \"amplitudes\": [[re, im], ...]}");
    auto *random = cmd->add_flag("--random-state", opts.random, "Use a seeded Haar-random state");
    file->excludes(random);
    CLI::Option *named = nullptr;
    if (allow_named) {
        named = cmd->add_option("--named", opts.named, "Named state: ghz+, ghz-, w, seed, sJ, gJ, g+-, h+-, z+-");
        named->excludes(file)->excludes(random);
    }
    if (allow_product) {
        auto *product = cmd->add_flag("--random-product", opts.random_product, "Use a seeded random product state");
        product->excludes(file)->excludes(random);
        if (named) {
            product->excludes(named);
        }
    }
    opts.state_seed_opt = cmd->add_option("--state-seed", opts.state_seed, "Seed for --random-state / --random-product");
}

Ket read_state_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("Cannot read state file '" + path + "'.");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    Ket k = parse_ket(buf.str());
    if (std::abs(k.norm_squared() - 1) > kInputNormTolerance) {
        throw UsageError("State in '" + path + "' is not normalized (|psi|^2 = " + format_real(k.norm_squared()) + ").");
    }
    return k.normalized();
}

/// Resolves the state source. `qubits` is the requested size when the
/// source does not fix it.
Ket resolve_state(const StateOptions &opts, size_t qubits) {
    if (!opts.file.empty()) {
        return read_state_file(opts.file);
    }
    if (!opts.named.empty()) {
        if (qubits % 2 != 0) {
            throw UsageError("Named states need an even qubit count.");
        }
        return named_state(opts.named, qubits / 2);
    }
    Rng rng(mix_seed(opts.state_seed));
    if (opts.random_product) {
        return random_product_ket(qubits, rng);
    }
    if (opts.random) {
        return random_ket(qubits, rng);
    }
    throw UsageError("No state given: use --state-file, --random-state or --named.");
}

void write_json(std::ostream &out, const nlohmann::json &doc) {
    out << doc.dump(2) << "\n";
}

int cmd_basis(size_t n, const std::string &format, std::ostream &out) {
    if (n < 1 || n > kMaxBasisWidth) {
        throw UsageError("basis: --n must lie in [1, " + std::to_string(kMaxBasisWidth) + "].");
    }
    GBasis basis = g_basis(n);
    if (format == "json") {
        write_json(out, basis_to_json(basis));
    } else {
        out << basis_to_text(basis);
    }
    return kExitOk;
}

struct TeleportOptions {
    size_t n = 0;
    uint64_t channel = 0;
    std::optional<uint64_t> seed;
    std::optional<uint64_t> force;
    StateOptions state;
};

int cmd_teleport(const TeleportOptions &opts, const std::string &format, std::ostream &out, std::ostream &err) {
    StateOptions state = opts.state;
    // Without --state-seed a random input follows --seed.
    if (opts.seed && !(state.state_seed_opt && *state.state_seed_opt)) {
        state.state_seed = *opts.seed;
    }
    Ket input = resolve_state(state, opts.n == 0 ? 2 : opts.n);
    if (opts.n != 0 && input.qubits() != opts.n) {
        throw UsageError(
            "State has " + std::to_string(input.qubits()) + " qubits but --n is " + std::to_string(opts.n) + ".");
    }
    ChannelSpec channel{input.qubits(), opts.channel};
    OutcomeSelector selector = opts.force ? OutcomeSelector(Forced{*opts.force}) : Seeded{opts.seed.value_or(0)};
    Transcript t = [&] {
        try {
            return run_protocol(input, channel, selector);
        } catch (const ZeroProbabilityOutcome &e) {
            err << "teleport: " << e.what() << "\n";
            throw;
        }
    }();
    if (format == "json") {
        write_json(out, transcript_to_json(t));
    } else {
        out << transcript_to_text(t);
    }
    if (t.fidelity < 1 - kFidelityTolerance) {
        err << "teleport: fidelity " << format_real(t.fidelity) << " below threshold\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

int cmd_concurrence(const StateOptions &state, size_t n, const std::string &format, std::ostream &out) {
    Ket k = resolve_state(state, 2 * n);
    if (k.qubits() % 2 != 0) {
        throw UsageError("concurrence: the state needs an even number of qubits.");
    }
    const double c = concurrence(k).value();
    nlohmann::json doc{{"qubits", k.qubits()}, {"concurrence", c}};
    if (k.qubits() == 4) {
        const double cf = concurrence_f(k).value();
        const double cm = concurrence_magic(k).value();
        doc["concurrence_f"] = cf;
        doc["concurrence_magic"] = cm;
        doc["max_discrepancy"] = std::max({std::abs(c - cf), std::abs(c - cm), std::abs(cf - cm)});
    }
    if (format == "json") {
        write_json(out, doc);
        return kExitOk;
    }
    out << "qubits: " << k.qubits() << "\n";
    out << "concurrence: " << format_real(c) << "\n";
    if (k.qubits() == 4) {
        out << "concurrence_f: " << format_real(doc["concurrence_f"].get<double>()) << "\n";
        out << "concurrence_magic: " << format_real(doc["concurrence_magic"].get<double>()) << "\n";
        out << "max_discrepancy: " << format_real(doc["max_discrepancy"].get<double>()) << "\n";
    }
    return kExitOk;
}

int cmd_et(const StateOptions &state, size_t n, const std::string &side, const std::string &format, std::ostream &out) {
    Ket k = resolve_state(state, 2 * n);
    if (k.qubits() % 2 != 0) {
        throw UsageError("et: the state needs an even number of qubits.");
    }
    if (k.qubits() / 2 > kMaxBasisWidth) {
        throw UsageError("et: orbits are limited to N <= " + std::to_string(kMaxBasisWidth) + ".");
    }
    OrbitReport report = entanglement_of_teleportation(k, side == "last" ? OrbitSide::Last : OrbitSide::First);
    if (format == "json") {
        nlohmann::json doc = orbit_report_to_json(report);
        doc["side"] = side;
        write_json(out, doc);
    } else {
        out << orbit_report_to_text(report);
    }
    return kExitOk;
}

int cmd_selftest(const std::string &format, std::ostream &out) {
    auto examples = checks::worked_examples();
    auto criteria = checks::acceptance_criteria();
    auto count_passed = [](const std::vector<checks::CheckResult> &rs) {
        return size_t(std::count_if(rs.begin(), rs.end(), [](const auto &r) { return r.passed; }));
    };
    const size_t passed = count_passed(examples) + count_passed(criteria);
    const size_t total = examples.size() + criteria.size();
    if (format == "json") {
        auto to_json = [](const std::vector<checks::CheckResult> &rs) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto &r : rs) {
                arr.push_back({{"id", r.id}, {"description", r.description}, {"passed", r.passed}, {"detail", r.detail}});
            }
            return arr;
        };
        write_json(
            out, {{"examples", to_json(examples)},
                  {"criteria", to_json(criteria)},
                  {"passed", passed},
                  {"total", total}});
    } else {
        out << "worked examples:\n" << checks::render(examples);
        out << "acceptance criteria:\n" << checks::render(criteria);
        out << "passed " << passed << "/" << total << "\n";
    }
    return passed == total ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Generalized Bell state teleportation and entanglement measures", "gtele"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App *cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    size_t basis_n = 2;
    auto *basis = app.add_subcommand("basis", "Dump the generalized Bell basis in s-order");
    basis->add_option("--n", basis_n, "Qubits per side (1-4)");
    add_format(basis);

    TeleportOptions tele;
    uint64_t seed_value = 0;
    uint64_t force_value = 0;
    auto *teleport = app.add_subcommand("teleport", "Run one protocol instance and print its transcript");
    teleport->add_option("--n", tele.n, "Qubits to teleport (default: from the state, else 2)");
    teleport->add_option("--channel", tele.channel, "s-index of the shared channel state");
    auto *seed_opt = teleport->add_option("--seed", seed_value, "Seed for outcome sampling");
    auto *force_opt = teleport->add_option("--force-outcome", force_value, "Post-select this outcome index");
    seed_opt->excludes(force_opt);
    add_state_options(teleport, tele.state, false, false);
    add_format(teleport);

    StateOptions conc_state;
    size_t conc_n = 2;
    auto *conc = app.add_subcommand("concurrence", "Generalized concurrence of an even-qubit state");
    conc->add_option("--n", conc_n, "Half the qubit count for named or random states");
    add_state_options(conc, conc_state, true, true);
    add_format(conc);

    StateOptions et_state;
    size_t et_n = 2;
    std::string et_side = "first";
    auto *et = app.add_subcommand("et", "Entanglement of teleportation with the full orbit table");
    et->add_option("--n", et_n, "Half the qubit count for named or random states");
    et->add_option("--side", et_side, "Half acted on by the orbit operators")->check(CLI::IsMember({"first", "last"}));
    add_state_options(et, et_state, true, true);
    add_format(et);

    auto *selftest = app.add_subcommand("selftest", "Run the built-in verification suite");
    add_format(selftest);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "gtele: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*basis) {
            return cmd_basis(basis_n, format, out);
        }
        if (*teleport) {
            if (*seed_opt) {
                tele.seed = seed_value;
            }
            if (*force_opt) {
                tele.force = force_value;
            }
            return cmd_teleport(tele, format, out, err);
        }
        if (*conc) {
            return cmd_concurrence(conc_state, conc_n, format, out);
        }
        if (*et) {
            return cmd_et(et_state, et_n, et_side, format, out);
        }
        if (*selftest) {
            return cmd_selftest(format, out);
        }
    } catch (const ZeroProbabilityOutcome &) {
        return kExitVerificationFailed;
    } catch (const std::exception &e) {
        err << "gtele: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace gtele::cli
