#include "rcb/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcb/blocks.hpp"
#include "rcb/combin.hpp"
#include "rcb/params.hpp"
#include "rcb/verify.hpp"

namespace rcb::cli {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

int require_m(const CommandConfig& cfg) {
    if (!cfg.m) throw UsageError(cfg.command + ": --m is required");
    if (*cfg.m < 1) throw UsageError("--m must be >= 1");
    return *cfg.m;
}

int require_n(const CommandConfig& cfg) {
    if (!cfg.n) throw UsageError(cfg.command + ": --n is required");
    if (*cfg.n < 0) throw UsageError("--n must be >= 0");
    return *cfg.n;
}

void forbid(bool present, const std::string& flag, const CommandConfig& cfg) {
    if (present) throw UsageError(cfg.command + ": " + flag + " is not accepted by this command");
}

FieldPtr field_for(const CommandConfig& cfg, int m) {
    const int order = cfg.zeta_order.value_or(m);
    if (order < 1) throw UsageError("--zeta-order must be >= 1");
    if (order % m != 0)
        throw UsageError("--zeta-order " + std::to_string(order) + " must be a multiple of m=" + std::to_string(m));
    return make_cyclotomic_field(order);
}

std::vector<Cyclotomic> parse_c(const CommandConfig& cfg, const FieldPtr& field, int m) {
    if (static_cast<int>(cfg.c.size()) != m - 1)
        throw UsageError("--c expects m-1 = " + std::to_string(m - 1) + " comma-separated values, got " +
                         std::to_string(cfg.c.size()));
    std::vector<Cyclotomic> c;
    for (const auto& s : cfg.c) c.push_back(Cyclotomic::parse(field, s));
    return c;
}

// Exactly one of --generic or numeric values.
ParamSpec param_spec(const CommandConfig& cfg, int m, bool kappa_optional = false) {
    if (cfg.generic) {
        if (cfg.kappa || !cfg.c.empty() || cfg.zeta_order)
            throw UsageError("--generic cannot be combined with --kappa, --c or --zeta-order");
        return ParamSpec::generic(m, cfg.d);
    }
    if (!cfg.kappa && !kappa_optional) throw UsageError(cfg.command + ": give --kappa (and --c when m > 1) or --generic");
    const FieldPtr field = field_for(cfg, m);
    const Cyclotomic kappa = cfg.kappa ? Cyclotomic::parse(field, *cfg.kappa) : Cyclotomic::zero(field);
    return ParamSpec::numeric(m, kappa, parse_c(cfg, field, m));
}

Multipartition lambda_arg(const std::optional<std::string>& text, const std::string& flag, int m) {
    if (!text) throw UsageError(flag + " is required");
    return parse_multipartition(*text, m);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

int cmd_blocks(const CommandConfig& cfg, std::ostream& out) {
    const int m = require_m(cfg);
    const int n = require_n(cfg);
    forbid(cfg.lambda.has_value() || cfg.mu.has_value(), "--lambda/--mu", cfg);
    const ParamSpec params = param_spec(cfg, m);
    PartitionOptions opts;
    opts.threads = cfg.threads;
    const BlockPartition bp = block_partition_g_m_d_n(m, cfg.d, n, params, opts);
    if (cfg.json) {
        out << bp.to_json().dump(2) << "\n";
        return ok;
    }
    out << "G(" << m << "," << cfg.d << "," << n << "), " << (params.is_numeric() ? "numeric" : "generic")
        << " parameters: " << bp.classes.size() << " blocks\n";
    for (const auto& cls : bp.classes) {
        std::vector<std::string> names;
        for (auto i : cls) names.push_back(label_to_string(bp.labels[i]));
        out << "  {" << join(names, ", ") << "}\n";
    }
    return ok;
}

int cmd_invariant(const CommandConfig& cfg, std::ostream& out) {
    const int m = require_m(cfg);
    const Multipartition lambda = lambda_arg(cfg.lambda, "--lambda", m);
    const BlockInvariant inv = block_invariant(lambda, param_spec(cfg, m));
    if (cfg.json)
        out << json{{"lambda", lambda.to_json()}, {"invariant", inv.to_json()}}.dump(2) << "\n";
    else
        out << lambda.to_string() << ": " << inv.to_string() << "\n";
    return ok;
}

int cmd_same_block(const CommandConfig& cfg, std::ostream& out) {
    const int m = require_m(cfg);
    const Multipartition lambda = lambda_arg(cfg.lambda, "--lambda", m);
    const Multipartition mu = lambda_arg(cfg.mu, "--mu", m);
    const bool same = same_block(lambda, mu, param_spec(cfg, m));
    if (cfg.json)
        out << json{{"lambda", lambda.to_json()}, {"mu", mu.to_json()}, {"same_block", same}}.dump(2) << "\n";
    else
        out << (same ? "same block" : "different blocks") << "\n";
    return ok;
}

int cmd_tableaux(const CommandConfig& cfg, std::ostream& out) {
    const int m = cfg.m ? require_m(cfg) : 0;
    const Multipartition lambda = lambda_arg(cfg.lambda, "--lambda", m);
    const auto tabs = enumerate_standard_tableaux(lambda);
    if (cfg.json) {
        json arr = json::array();
        for (const auto& t : tabs) arr.push_back(t.to_json());
        out << json{{"shape", lambda.to_json()}, {"count", tabs.size()}, {"tableaux", arr}}.dump(2) << "\n";
        return ok;
    }
    out << lambda.to_string() << ": " << tabs.size() << " standard tableaux\n";
    for (const auto& t : tabs) {
        std::vector<std::string> cells;
        for (int i = 1; i <= t.size(); ++i) {
            const Box& b = t.placement[static_cast<std::size_t>(i - 1)];
            cells.push_back(std::to_string(i) + "@(" + std::to_string(b.component) + "," + std::to_string(b.row) +
                            "," + std::to_string(b.col) + ")");
        }
        out << "  " << join(cells, " ") << "\n";
    }
    return ok;
}

int cmd_convert(const CommandConfig& cfg, std::ostream& out) {
    const int m = require_m(cfg);
    if (cfg.generic) throw UsageError("convert needs numeric --c values");
    const DerivedParams d = c_to_H(param_spec(cfg, m, /*kappa_optional=*/true));
    if (cfg.json) {
        out << d.to_json().dump(2) << "\n";
        return ok;
    }
    auto list = [](const std::vector<Cyclotomic>& v) {
        std::vector<std::string> s;
        for (const auto& x : v) s.push_back(x.to_string());
        return "[" + join(s, ", ") + "]";
    };
    out << "H = " << list(d.H) << "\n"
        << "a = " << list(d.a) << "\n"
        << "C = " << d.C.to_string() << "\n"
        << "h = " << d.h.to_string() << "\n";
    return ok;
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out) {
    if (!cfg.suite) throw UsageError("verify: --suite is required");
    const int m = require_m(cfg);
    const int n = require_n(cfg);
    if (n < 1) throw UsageError("verify: --n must be >= 1");
    forbid(cfg.d != 1, "--d", cfg);
    forbid(cfg.generic || cfg.kappa.has_value() || !cfg.c.empty(), "parameter values (identities are checked over R)", cfg);
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), *cfg.suite) == names.end())
        throw UsageError("unknown suite '" + *cfg.suite + "'; expected one of " + join(names, ", "));
    if (cfg.r && *cfg.suite != "plemmas" && *cfg.suite != "central")
        throw UsageError("--r applies only to the plemmas and central suites");
    if (cfg.k && *cfg.suite != "plemmas") throw UsageError("--k applies only to the plemmas suite");

    SuiteOptions opts;
    opts.threads = cfg.threads;
    opts.r = cfg.r;
    opts.k = cfg.k;
    const Report rep = run_suite(*cfg.suite, m, n, opts);
    if (cfg.json) {
        out << rep.to_json().dump(2) << "\n";
    } else {
        for (const auto& c : rep.cases) out << (c.pass ? "PASS " : "FAIL ") << c.id << "\n";
        out << rep.suite << " (m=" << m << ", n=" << n << "): " << (rep.all_pass() ? "all pass" : "FAILURES") << ", "
            << rep.cases.size() << " cases\n";
    }
    return rep.all_pass() ? ok : verification_failed;
}

int dispatch(const CommandConfig& cfg, std::ostream& out) {
    if (cfg.threads < 0) throw UsageError("--threads must be >= 0");
    if (cfg.command == "blocks") return cmd_blocks(cfg, out);
    if (cfg.command == "invariant") return cmd_invariant(cfg, out);
    if (cfg.command == "same-block") return cmd_same_block(cfg, out);
    if (cfg.command == "tableaux") return cmd_tableaux(cfg, out);
    if (cfg.command == "convert") return cmd_convert(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    throw UsageError("unknown command '" + cfg.command + "'");
}

}  // namespace

int run(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        std::ostringstream buffer;
        const int code = dispatch(cfg, buffer);
        if (cfg.out_path) {
            std::ofstream file(*cfg.out_path, std::ios::binary);
            if (!file) {
                err << "error: cannot open output file " << *cfg.out_path << "\n";
                return invalid_input;
            }
            file << buffer.str();
        } else {
            out << buffer.str();
        }
        return code;
    } catch (const ResourceLimitExceeded& e) {
        err << "resource limit: " << e.what() << "\n";
        return resource_cap;
    } catch (const json::exception& e) {
        err << "error: malformed JSON input: " << e.what() << "\n";
        return invalid_input;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return verification_failed;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Blocks of restricted rational Cherednik algebras for G(m,d,n)", "rcb"};
    app.require_subcommand(1);
    CommandConfig cfg;

    struct Spec {
        const char* name;
        const char* help;
    };
    const Spec specs[] = {
        {"blocks", "Block partition of the baby Verma modules"},
        {"invariant", "Block invariant of one multipartition"},
        {"same-block", "Whether two multipartitions lie in the same block"},
        {"tableaux", "Standard tableaux on a multipartition"},
        {"convert", "c parameters to H, a, C, h"},
        {"verify", "Machine-check algebra identities in the PBW normal form"},
    };
    for (const auto& spec : specs) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        sub->add_option("--m", cfg.m, "Order of the cyclic factor");
        sub->add_option("--d", cfg.d, "Divisor d of m")->capture_default_str();
        sub->add_option("--n", cfg.n, "Rank");
        sub->add_option("--kappa", cfg.kappa, "kappa in the cyclotomic grammar");
        sub->add_option("--c", cfg.c, "c_1..c_{m-1}, comma separated")->delimiter(',');
        sub->add_flag("--generic", cfg.generic, "Treat kappa and H as free symbols");
        sub->add_option("--zeta-order", cfg.zeta_order, "N for Q(zeta_N); defaults to m");
        sub->add_option("--lambda", cfg.lambda, "Multipartition as a JSON array of arrays");
        sub->add_option("--mu", cfg.mu, "Second multipartition");
        sub->add_option("--suite", cfg.suite, "Identity suite for verify");
        sub->add_option("--r", cfg.r, "Index r");
        sub->add_option("--k", cfg.k, "Index k");
        sub->add_flag("--json", cfg.json, "JSON output");
        sub->add_option("--threads", cfg.threads, "OpenMP threads (0 = runtime default)");
        sub->add_option("--out", cfg.out_path, "Write output to a file");
        sub->callback([&cfg, name = std::string(spec.name)] { cfg.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : invalid_input;
    }
    return run(cfg, out, err);
}

}  // namespace rcb::cli
