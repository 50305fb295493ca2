#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and writes to the given streams, so tests can drive it in-process.
//
// Exit codes: 0 success, 1 an identity failed, 2 usage or input error,
// 3 a computation needed data beyond a truncation degree.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <ncfree/ncfree.hpp>

namespace ncfree::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verify_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_truncation = 3;

namespace detail {

struct Options {
    int max_degree = 8;
    bool json = false;
};

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_argument("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw invalid_argument("'" + path + "' is not valid JSON: " + e.what());
    }
}

class Session {
public:
    Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

    NCSeries load_series(const std::string& path) const {
        auto f = series_from_json(read_json_file(path));
        return f.max_degree() > opt_.max_degree ? truncate(f, opt_.max_degree) : f;
    }

    JointDistribution load_distribution(const std::string& path) const {
        auto mu = distribution_from_json(read_json_file(path));
        return mu.max_degree() > opt_.max_degree ? truncate(mu, opt_.max_degree) : mu;
    }

    int degree(int d) const {
        if (d < 1) throw invalid_argument("--degree must be positive");
        if (d > opt_.max_degree)
            throw invalid_argument("--degree " + std::to_string(d) + " exceeds --max-degree " +
                                   std::to_string(opt_.max_degree));
        return d;
    }

    void emit(const json& doc, const std::string& out_path) const {
        const std::string text = doc.dump(2) + "\n";
        if (out_path.empty()) {
            out_ << text;
            return;
        }
        std::ofstream file(out_path);
        if (!file) throw invalid_argument("cannot write '" + out_path + "'");
        file << text;
    }

    int report(const VerificationReport& r) const {
        if (opt_.json) {
            json checks = json::array();
            for (const auto& c : r.checks) {
                json entry{{"identity", c.name}, {"passed", c.passed}, {"instances", c.instances}};
                if (!c.passed) {
                    entry["witness"] = c.witness;
                    entry["lhs"] = to_string(c.lhs);
                    entry["rhs"] = to_string(c.rhs);
                }
                checks.push_back(std::move(entry));
            }
            out_ << json{{"passed", r.passed()}, {"checks", std::move(checks)}}.dump(2) << "\n";
        } else {
            for (const auto& c : r.checks) {
                if (c.passed)
                    out_ << "PASS " << c.name << " (" << c.instances << (c.instances == 1 ? " instance)\n" : " instances)\n");
                else
                    out_ << "FAIL " << c.name << " at " << c.witness << ": lhs=" << to_string(c.lhs)
                         << " rhs=" << to_string(c.rhs) << "\n";
            }
        }
        return r.passed() ? exit_ok : exit_verify_failed;
    }

    std::ostream& out() const { return out_; }
    const Options& options() const { return opt_; }

private:
    const Options& opt_;
    std::ostream& out_;
};

inline IdentityCheck tracial_check(const JointDistribution& mu) {
    IdentityCheck c{"input distribution is tracial"};
    c.record("cyclic rotations", Scalar(is_tracial(mu) ? 1 : 0), Scalar(1));
    return c;
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    detail::Options opt;
    CLI::App app{"Non-crossing partitions, boxed-star convolution and free probability with exact rationals", "ncfree"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--max-degree", opt.max_degree, "Global truncation cap; inputs are cut to it")
        ->check(CLI::Range(1, 14))
        ->capture_default_str();
    app.add_flag("--json", opt.json, "Machine-readable verification reports");

    detail::Session session(opt, out);
    std::function<int()> action;

    // Shared option storage; each subcommand binds what it needs.
    int k = 0, degree = 0, p_index = 1;
    std::string pi_text, rho_text, lhs, rhs, in, a_path, b_path, out_path, scalar_text, pipeline = "rr";

    auto* nc = app.add_subcommand("nc", "Non-crossing partition lattice")->require_subcommand(1);
    {
        auto* c = nc->add_subcommand("enumerate", "List NC(k), one partition per line");
        c->add_option("--k", k)->required();
        c->callback([&] {
            action = [&] {
                const auto& all = enumerate_nc(k);
                for (const auto& p : all) out << format_partition(p) << "\n";
                return exit_ok;
            };
        });
    }
    {
        auto* c = nc->add_subcommand("kreweras", "Kreweras complement of a partition");
        c->add_option("--k", k)->required();
        c->add_option("--pi", pi_text)->required();
        c->callback([&] {
            action = [&] {
                out << format_partition(kreweras(parse_nc_partition(pi_text, k))) << "\n";
                return exit_ok;
            };
        });
    }
    {
        auto* c = nc->add_subcommand("relative", "Kreweras complement of pi relative to rho >= pi");
        c->add_option("--k", k)->required();
        c->add_option("--pi", pi_text)->required();
        c->add_option("--rho", rho_text)->required();
        c->callback([&] {
            action = [&] {
                out << format_partition(relative_kreweras(parse_nc_partition(pi_text, k), parse_nc_partition(rho_text, k)))
                    << "\n";
                return exit_ok;
            };
        });
    }

    auto* series = app.add_subcommand("series", "Series arithmetic")->require_subcommand(1);
    {
        auto* c = series->add_subcommand("star", "Boxed-star product of two series");
        c->add_option("--lhs", lhs)->required();
        c->add_option("--rhs", rhs)->required();
        c->add_option("--out", out_path);
        c->callback([&] {
            action = [&] {
                session.emit(to_json(boxstar(session.load_series(lhs), session.load_series(rhs))), out_path);
                return exit_ok;
            };
        });
    }
    {
        auto* c = series->add_subcommand("invert", "Boxed-star inverse of a series");
        c->add_option("--in", in)->required();
        c->add_option("--out", out_path);
        c->callback([&] {
            action = [&] {
                session.emit(to_json(boxstar_inverse(session.load_series(in))), out_path);
                return exit_ok;
            };
        });
    }

    auto* dist = app.add_subcommand("dist", "Distribution transforms and convolutions")->require_subcommand(1);
    auto add_transform = [&](const char* name, const char* help, bool r_side) {
        auto* c = dist->add_subcommand(name, help);
        c->add_option("--in", in, "distribution, or series to transform back")->required();
        c->add_option("--out", out_path);
        c->callback([&, r_side] {
            action = [&, r_side] {
                const json doc = detail::read_json_file(in);
                if (doc.is_object() && doc.value("kind", "") == "series") {
                    const auto f = session.load_series(in);
                    session.emit(to_json(r_side ? from_r_series(f) : from_m_series(f)), out_path);
                } else {
                    const auto mu = session.load_distribution(in);
                    session.emit(to_json(r_side ? r_transform(mu) : m_series(mu)), out_path);
                }
                return exit_ok;
            };
        });
    };
    add_transform("r", "R-transform of a distribution, or the distribution of an R-series", true);
    add_transform("m", "Moment series of a distribution, or the distribution of a moment series", false);
    {
        auto* c = dist->add_subcommand("freeadd", "Sum of free tuples");
        c->add_option("--a", a_path)->required();
        c->add_option("--b", b_path)->required();
        c->add_option("--out", out_path);
        c->callback([&] {
            action = [&] {
                session.emit(to_json(free_additive(session.load_distribution(a_path), session.load_distribution(b_path))),
                             out_path);
                return exit_ok;
            };
        });
    }
    {
        auto* c = dist->add_subcommand("freemul", "Componentwise product of free tuples");
        c->add_option("--a", a_path)->required();
        c->add_option("--b", b_path)->required();
        c->add_option("--pipeline", pipeline, "rr, rm or mr")->check(CLI::IsMember({"rr", "rm", "mr"}))->capture_default_str();
        c->add_option("--out", out_path);
        c->callback([&] {
            action = [&] {
                const auto which = pipeline == "rm"   ? ProductPipeline::r_m
                                   : pipeline == "mr" ? ProductPipeline::m_r
                                                      : ProductPipeline::r_r;
                session.emit(to_json(multiply_free_tuples(session.load_distribution(a_path),
                                                          session.load_distribution(b_path), which)),
                             out_path);
                return exit_ok;
            };
        });
    }
    {
        auto* c = dist->add_subcommand("freeprod-oracle", "Joint distribution of two free families, from the definition");
        c->add_option("--a", a_path)->required();
        c->add_option("--b", b_path)->required();
        c->add_option("--degree", degree)->required();
        c->add_option("--out", out_path);
        c->callback([&] {
            action = [&] {
                session.emit(to_json(free_product_centering(session.load_distribution(a_path),
                                                            session.load_distribution(b_path), session.degree(degree))),
                             out_path);
                return exit_ok;
            };
        });
    }
    auto add_scalar_op = [&](const char* name, const char* help, const char* flag,
                             std::function<json(const JointDistribution&, const Scalar&)> op) {
        auto* c = dist->add_subcommand(name, help);
        c->add_option("--in", in)->required();
        c->add_option(flag, scalar_text, "rational p/q")->required();
        c->add_option("--out", out_path);
        c->callback([&, op] {
            action = [&, op] {
                session.emit(op(session.load_distribution(in), parse_scalar(scalar_text)), out_path);
                return exit_ok;
            };
        });
    };
    add_scalar_op("compress", "Compression by a free idempotent of trace alpha", "--alpha",
                  [](const JointDistribution& mu, const Scalar& a) { return to_json(compress(mu, a)); });
    add_scalar_op("conjugate-sc", "R-transform of (b a_i b) for b semicircular of variance s", "--s",
                  [](const JointDistribution& mu, const Scalar& s) { return to_json(conjugate_by_semicircular(mu, s)); });
    add_scalar_op("semigroup", "Distribution with R-transform t R(mu)", "--t",
                  [](const JointDistribution& mu, const Scalar& t) { return to_json(semigroup_t(mu, t)); });

    auto* verify = app.add_subcommand("verify", "Check identities on given inputs; exit 1 on the first mismatch")
                       ->require_subcommand(1);
    {
        auto* c = verify->add_subcommand("thm14", "Product of free tuples: oracle and three transform pipelines");
        c->add_option("--a", a_path)->required();
        c->add_option("--b", b_path)->required();
        c->add_option("--degree", degree)->required();
        c->callback([&] {
            action = [&] {
                const int d = session.degree(degree);
                return session.report(
                    verify_product_formula(session.load_distribution(a_path), session.load_distribution(b_path), d));
            };
        });
    }
    {
        auto* c = verify->add_subcommand("app16", "R-transform of (b a_i b) against the oracle");
        c->add_option("--in", in)->required();
        c->add_option("--s", scalar_text, "semicircular variance")->required();
        c->add_option("--degree", degree)->required();
        c->callback([&] {
            action = [&] {
                const int d = session.degree(degree);
                const auto mu = session.load_distribution(in);
                VerificationReport r;
                r.checks.push_back(detail::tracial_check(mu));
                r.checks.push_back(verify_conjugation(mu, parse_scalar(scalar_text), d));
                return session.report(r);
            };
        });
    }
    {
        auto* c = verify->add_subcommand("app110", "Freeness of (b a_i b) from the a's via the moment criterion");
        c->add_option("--in", in)->required();
        c->add_option("--s", scalar_text, "semicircular variance")->required();
        c->add_option("--degree", degree)->required();
        c->callback([&] {
            action = [&] {
                const int d = session.degree(degree);
                const auto mu = session.load_distribution(in);
                VerificationReport r;
                r.checks.push_back(detail::tracial_check(mu));
                r.checks.push_back(verify_bab_free_from_a(mu, parse_scalar(scalar_text), d));
                return session.report(r);
            };
        });
    }
    {
        auto* c = verify->add_subcommand("app111", "Compression formula against the oracle");
        c->add_option("--in", in)->required();
        c->add_option("--alpha", scalar_text, "trace of the idempotent")->required();
        c->add_option("--degree", degree)->required();
        c->callback([&] {
            action = [&] {
                const int d = session.degree(degree);
                const auto mu = session.load_distribution(in);
                VerificationReport r;
                r.checks.push_back(detail::tracial_check(mu));
                r.checks.push_back(verify_compression(mu, parse_scalar(scalar_text), d));
                return session.report(r);
            };
        });
    }
    {
        auto* c = verify->add_subcommand("app113", "Compressed a's free from the compressed B");
        c->add_option("--a", a_path)->required();
        c->add_option("--b", b_path, "family containing the idempotent")->required();
        c->add_option("--p", p_index, "index of the idempotent inside --b")->capture_default_str();
        c->add_option("--degree", degree)->required();
        c->callback([&] {
            action = [&] {
                const int d = session.degree(degree);
                const auto a = session.load_distribution(a_path);
                const auto b = session.load_distribution(b_path);
                VerificationReport r;
                r.checks.push_back(detail::tracial_check(a));
                r.checks.push_back(detail::tracial_check(b));
                r.checks.push_back(verify_compression_freeness_check(a, b, p_index, d));
                return session.report(r);
            };
        });
    }
    {
        auto* c = verify->add_subcommand("lemma410", "Interleaving identity with Sqsum");
        c->add_option("--in", in)->required();
        c->add_option("--degree", degree)->required();
        c->callback([&] {
            action = [&] {
                const int d = session.degree(degree);
                VerificationReport r;
                r.checks.push_back(verify_interleaving_identity(session.load_distribution(in), d));
                return session.report(r);
            };
        });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    try {
        return action ? action() : exit_usage;
    } catch (const truncation_exceeded& e) {
        err << "error: " << e.what() << "\n";
        return exit_truncation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace ncfree::cli
