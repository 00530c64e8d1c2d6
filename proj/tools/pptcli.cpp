// pptcli: thresholds of p^a + x^b and y^a + x^b from the command line.
//
//   pptcli fpt --p 5 --a 2 --b 3             -> 4/5
//   pptcli certify --p 11 --a 3 --b 4        -> UNDETERMINED lower=6/11 upper=7/12
//   pptcli table1 --prime-bound 200 --format md
//   pptcli scatter --p 3 --max-ab 60 --format svg --out scatter.svg
//
// Exit status: 0 success, 1 usage or validation error, 2 computation incomplete.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "ppt/ppt.hpp"

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Range {
    std::uint64_t lo = 2;
    std::uint64_t hi = 2;
    bool single() const { return lo == hi; }
};

std::uint64_t parse_u64(const std::string& s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("not a nonnegative integer: " + s);
    return v;
}

// "7" or "2..9"
Range parse_range(const std::string& s, const char* name) {
    Range r;
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_u64(s);
    } else {
        r.lo = parse_u64(s.substr(0, dots));
        r.hi = parse_u64(s.substr(dots + 2));
    }
    if (r.lo > r.hi) throw UsageError(std::string("empty range for --") + name);
    if (r.lo < 2) throw UsageError(std::string("--") + name + " must be at least 2");
    return r;
}

enum class Format { Text, Csv, Json, Md, Svg };

struct Common {
    std::string format;
    std::string out;
    unsigned jobs = 1;
    std::uint64_t oracle_emax = 14;
    std::optional<std::uint64_t> c_max;
    std::uint64_t prime_bound = 200;

    ppt::CertConfig cert_config() const {
        if (oracle_emax < 2) throw UsageError("--oracle-emax must be at least 2");
        return {oracle_emax, c_max};
    }
};

Format resolve_format(const std::string& f, Format fallback, bool svg_ok) {
    if (f.empty()) return fallback;
    if (f == "csv") return Format::Csv;
    if (f == "json") return Format::Json;
    if (f == "md") return Format::Md;
    if (f == "svg") {
        if (!svg_ok) throw UsageError("--format svg is only valid for scatter");
        return Format::Svg;
    }
    throw UsageError("unknown format: " + f);
}

std::string render(const ppt::report::Table& t, Format f) {
    switch (f) {
        case Format::Json: return ppt::report::to_json(t);
        case Format::Md: return ppt::report::to_markdown(t);
        default: return ppt::report::to_csv(t);
    }
}

void emit(const std::string& text, const Common& c) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw std::ios_base::failure("cannot open " + c.out);
    f << text;
    if (!f) throw std::ios_base::failure("write failed for " + c.out);
}

std::vector<std::uint64_t> primes_for(const std::optional<std::uint64_t>& p, const Common& c) {
    if (p) {
        ppt::require_prime(*p);
        return {*p};
    }
    if (c.prime_bound < 2) throw UsageError("--prime-bound must be at least 2");
    return ppt::primes_up_to(c.prime_bound);
}

struct Triple {
    std::uint64_t p, a, b;
};

std::vector<Triple> grid(const std::vector<std::uint64_t>& primes, Range a, Range b) {
    std::vector<Triple> out;
    for (auto p : primes)
        for (auto x = a.lo; x <= a.hi; ++x)
            for (auto y = b.lo; y <= b.hi; ++y) out.push_back({p, x, y});
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thresholds of cusp-like binomials: F-pure thresholds and plus-pure threshold certificates"};
    app.require_subcommand(1);

    Common common;
    std::optional<std::uint64_t> p_opt;
    std::string a_str = "2", b_str = "3";
    std::string e_str = "1";
    std::uint64_t scatter_p = 3, max_ab = 60;

    auto add_common = [&](CLI::App* sub, bool with_bound) {
        sub->add_option("--format", common.format, "csv|json|md|svg (svg: scatter only)");
        sub->add_option("--out", common.out, "write output to PATH instead of stdout");
        sub->add_option("--jobs", common.jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--oracle-emax", common.oracle_emax, "level cap for the nu oracle (default 14)");
        sub->add_option("--c-max", common.c_max, "upper end of the c search (default: derived bound)");
        if (with_bound) sub->add_option("--prime-bound", common.prime_bound, "primes <= this when --p is absent");
    };

    auto* fpt_cmd = app.add_subcommand("fpt", "F-pure threshold of y^a + x^b over F_p");
    fpt_cmd->add_option("--p", p_opt, "prime (default: all primes <= --prime-bound)");
    fpt_cmd->add_option("--a", a_str, "exponent or range lo..hi")->required();
    fpt_cmd->add_option("--b", b_str, "exponent or range lo..hi")->required();
    add_common(fpt_cmd, true);

    auto* nu_cmd = app.add_subcommand("nu", "nu oracle: max r with (y^a + x^b)^r outside (y^(p^e), x^(p^e))");
    nu_cmd->add_option("--p", p_opt, "prime")->required();
    nu_cmd->add_option("--a", a_str, "exponent or range")->required();
    nu_cmd->add_option("--b", b_str, "exponent or range")->required();
    nu_cmd->add_option("--e", e_str, "level or range")->required();
    add_common(nu_cmd, false);

    auto* cert_cmd = app.add_subcommand("certify", "certify ppt(p^a + x^b) = fpt(y^a + x^b)");
    cert_cmd->add_option("--p", p_opt, "prime (default: all primes <= --prime-bound)");
    cert_cmd->add_option("--a", a_str, "exponent or range")->required();
    cert_cmd->add_option("--b", b_str, "exponent or range")->required();
    add_common(cert_cmd, true);

    auto* class_cmd = app.add_subcommand("class-table", "residue-class constants (i mod ab, m_i, C_i)");
    class_cmd->add_option("--a", a_str, "exponent or range")->required();
    class_cmd->add_option("--b", b_str, "exponent or range")->required();
    add_common(class_cmd, false);

    auto* table_cmd = app.add_subcommand("table1", "certified primes for 2 <= a, b <= 5 against the known table");
    add_common(table_cmd, true);

    auto* scatter_cmd = app.add_subcommand("scatter", "(a, b) grid classification for a fixed p");
    scatter_cmd->add_option("--p", scatter_p, "prime (default 3)");
    scatter_cmd->add_option("--max-ab", max_ab, "grid is [2, max-ab]^2 (default 60)");
    add_common(scatter_cmd, false);

    auto* lines_cmd = app.add_subcommand("three-lines", "ppt and fpt of p x (p - x) and t x (t - x)");
    lines_cmd->add_option("--p", p_opt, "prime (default: all primes <= --prime-bound)");
    add_common(lines_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        const auto config = common.cert_config();
        if (fpt_cmd->parsed()) {
            const auto a = parse_range(a_str, "a"), b = parse_range(b_str, "b");
            const auto cells = grid(primes_for(p_opt, common), a, b);
            const bool single = cells.size() == 1;
            const auto fmt = resolve_format(common.format, single ? Format::Text : Format::Csv, false);
            auto results = ppt::parallel_map(cells.size(), common.jobs, [&](std::size_t i) {
                const auto& c = cells[i];
                return ppt::report::FptRow{c.p, c.a, c.b,
                                           ppt::fpt_binomial(c.p, c.a, c.b, ppt::FptOptions{config.oracle_level_cap})};
            });
            if (fmt == Format::Text) {
                emit(results.front().result.value.str() + "\n", common);
            } else {
                emit(render(ppt::report::fpt_table(results), fmt), common);
            }
        } else if (nu_cmd->parsed()) {
            const auto a = parse_range(a_str, "a"), b = parse_range(b_str, "b");
            auto dots = e_str.find("..");
            const std::uint64_t e_lo = parse_u64(e_str.substr(0, dots));
            const std::uint64_t e_hi = dots == std::string::npos ? e_lo : parse_u64(e_str.substr(dots + 2));
            if (e_lo < 1 || e_lo > e_hi) throw UsageError("--e must be a positive level or range");
            ppt::require_prime(*p_opt);
            std::vector<ppt::report::NuRow> rows;
            for (const auto& c : grid({*p_opt}, a, b))
                for (auto e = e_lo; e <= e_hi; ++e) rows.push_back({c.p, c.a, c.b, e, 0});
            auto nus = ppt::parallel_map(rows.size(), common.jobs, [&](std::size_t i) {
                return ppt::nu_binomial(rows[i].p, rows[i].a, rows[i].b, rows[i].e);
            });
            for (std::size_t i = 0; i < rows.size(); ++i) rows[i].nu = nus[i];
            const auto fmt = resolve_format(common.format, rows.size() == 1 ? Format::Text : Format::Csv, false);
            if (fmt == Format::Text) {
                emit(std::to_string(rows.front().nu) + "\n", common);
            } else {
                emit(render(ppt::report::nu_table(rows), fmt), common);
            }
        } else if (cert_cmd->parsed()) {
            const auto a = parse_range(a_str, "a"), b = parse_range(b_str, "b");
            const auto cells = grid(primes_for(p_opt, common), a, b);
            const auto fmt = resolve_format(common.format, cells.size() == 1 ? Format::Text : Format::Csv, false);
            auto rows = ppt::parallel_map(cells.size(), common.jobs, [&](std::size_t i) {
                const auto& c = cells[i];
                return ppt::report::CertRow{c.p, c.a, c.b, ppt::certify_ppt(c.p, c.a, c.b, config)};
            });
            if (fmt == Format::Text) {
                emit(ppt::report::cert_line(rows.front().outcome) + "\n", common);
            } else {
                emit(render(ppt::report::cert_table(rows), fmt), common);
            }
        } else if (class_cmd->parsed()) {
            const auto a = parse_range(a_str, "a"), b = parse_range(b_str, "b");
            const auto fmt = resolve_format(common.format, Format::Csv, false);
            ppt::report::Table all;
            for (auto x = a.lo; x <= a.hi; ++x) {
                for (auto y = b.lo; y <= b.hi; ++y) {
                    auto t = ppt::report::class_table(x, y, ppt::class_constants(x, y));
                    all.header = t.header;
                    all.rows.insert(all.rows.end(), t.rows.begin(), t.rows.end());
                }
            }
            emit(render(all, fmt), common);
        } else if (table_cmd->parsed()) {
            const auto fmt = resolve_format(common.format, Format::Md, false);
            if (common.prime_bound < 2) throw UsageError("--prime-bound must be at least 2");
            const auto cells = ppt::gen_table1(common.prime_bound, config, common.jobs);
            if (fmt == Format::Md) {
                emit(ppt::report::table1_markdown(cells, common.prime_bound), common);
            } else if (fmt == Format::Json) {
                emit(ppt::report::table1_json(cells), common);
            } else {
                emit(ppt::report::to_csv(ppt::report::table1_rows(cells)), common);
            }
        } else if (scatter_cmd->parsed()) {
            const auto fmt = resolve_format(common.format, Format::Csv, true);
            if (max_ab < 2) throw UsageError("--max-ab must be at least 2");
            const auto pts = ppt::gen_scatter(scatter_p, max_ab, config, common.jobs);
            if (fmt == Format::Svg) {
                emit(ppt::report::scatter_svg(scatter_p, pts), common);
            } else {
                emit(render(ppt::report::scatter_table(pts), fmt), common);
            }
        } else if (lines_cmd->parsed()) {
            const auto primes = primes_for(p_opt, common);
            const auto fmt = resolve_format(common.format, primes.size() == 1 ? Format::Text : Format::Csv, false);
            std::vector<std::pair<std::uint64_t, ppt::ThreeLines>> rows;
            for (auto p : primes) rows.emplace_back(p, ppt::three_lines_threshold(p));
            if (fmt == Format::Text) {
                emit("fpt=" + rows.front().second.fpt.str() + " ppt=" + rows.front().second.ppt.str() + "\n", common);
            } else {
                emit(render(ppt::report::three_lines_table(rows), fmt), common);
            }
        }
    } catch (const ppt::ComputationIncomplete& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
