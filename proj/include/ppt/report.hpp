#pragma once

// Text renderings of results: CSV, JSON, Markdown, SVG. Every function here is a pure
// function of its input so repeated runs produce identical bytes.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "certify.hpp"
#include "fpt.hpp"
#include "sweep.hpp"

namespace ppt::report {

using Json = nlohmann::ordered_json;

/// A flat table: header plus rows of optional cells (nullopt renders empty / null).
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::optional<std::string>>> rows;
};

inline std::string to_csv(const Table& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i].value_or("");
        os << '\n';
    }
    return os.str();
}

inline std::string to_markdown(const Table& t) {
    std::ostringstream os;
    os << '|';
    for (const auto& h : t.header) os << ' ' << h << " |";
    os << "\n|";
    for (std::size_t i = 0; i < t.header.size(); ++i) os << "---|";
    os << '\n';
    for (const auto& row : t.rows) {
        os << '|';
        for (const auto& c : row) os << ' ' << c.value_or("") << " |";
        os << '\n';
    }
    return os.str();
}

inline Json to_json_value(const Table& t) {
    Json arr = Json::array();
    for (const auto& row : t.rows) {
        Json obj = Json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i]) {
                obj[t.header[i]] = *row[i];
            } else {
                obj[t.header[i]] = nullptr;
            }
        }
        arr.push_back(std::move(obj));
    }
    return arr;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::string to_json(const Table& t) { return dump(to_json_value(t)); }

namespace detail {
inline std::string num(std::uint64_t x) { return std::to_string(x); }
inline std::optional<std::string> opt_num(const std::optional<std::uint64_t>& x) {
    return x ? std::optional<std::string>(num(*x)) : std::nullopt;
}
inline std::optional<std::string> opt_q(const std::optional<Rational>& x) {
    return x ? std::optional<std::string>(x->str()) : std::nullopt;
}
}  // namespace detail

// fpt: p,a,b,fpt,kind,m,e_min,method
struct FptRow {
    std::uint64_t p, a, b;
    FptResult result;
};

inline Table fpt_table(const std::vector<FptRow>& rows) {
    using namespace detail;
    Table t{{"p", "a", "b", "fpt", "kind", "m", "e_min", "method"}, {}};
    for (const auto& r : rows) {
        t.rows.push_back({num(r.p), num(r.a), num(r.b), r.result.value.str(), std::string(to_string(r.result.kind)),
                          opt_num(r.result.carry_index), opt_num(r.result.e_min),
                          std::string(to_string(r.result.method))});
    }
    return t;
}

// certify: p,a,b,verdict,value,e,c,lower,upper
struct CertRow {
    std::uint64_t p, a, b;
    CertOutcome outcome;
};

inline Table cert_table(const std::vector<CertRow>& rows) {
    using namespace detail;
    Table t{{"p", "a", "b", "verdict", "value", "e", "c", "lower", "upper"}, {}};
    for (const auto& r : rows) {
        const auto& o = r.outcome;
        t.rows.push_back({num(r.p), num(r.a), num(r.b), std::string(to_string(o.verdict)), opt_q(o.value),
                          o.witness ? std::optional(num(o.witness->e)) : std::nullopt,
                          o.witness ? std::optional(num(o.witness->c)) : std::nullopt, opt_q(o.lower),
                          opt_q(o.upper)});
    }
    return t;
}

/// One-line human summary, e.g. "UNDETERMINED lower=6/11 upper=7/12".
inline std::string cert_line(const CertOutcome& o) {
    std::ostringstream os;
    os << to_string(o.verdict);
    if (o.value) os << " value=" << *o.value;
    if (o.witness) os << " e=" << o.witness->e << " c=" << o.witness->c;
    if (o.rule_id) os << " rule=" << *o.rule_id;
    if (o.lower) os << " lower=" << *o.lower;
    if (o.upper) os << " upper=" << *o.upper;
    if (!o.fpt_exact) os << " (lower is an oracle bound)";
    return os.str();
}

// nu: p,a,b,e,nu,upper
struct NuRow {
    std::uint64_t p, a, b, e, nu;
};

inline Table nu_table(const std::vector<NuRow>& rows) {
    using namespace detail;
    Table t{{"p", "a", "b", "e", "nu", "upper"}, {}};
    for (const auto& r : rows)
        t.rows.push_back(
            {num(r.p), num(r.a), num(r.b), num(r.e), num(r.nu), Rational(BigInt(r.nu + 1), big_pow(r.p, r.e)).str()});
    return t;
}

// class-table: a,b,i,m,C
inline Table class_table(std::uint64_t a, std::uint64_t b, const std::vector<ResidueClassEntry>& entries) {
    using namespace detail;
    Table t{{"a", "b", "i", "m", "C"}, {}};
    for (const auto& e : entries)
        t.rows.push_back({num(a), num(b), num(e.class_rep), e.m ? num(*e.m) : std::string("inf"), e.C.str()});
    return t;
}

// three-lines: p,fpt,ppt
inline Table three_lines_table(const std::vector<std::pair<std::uint64_t, ThreeLines>>& rows) {
    Table t{{"p", "fpt", "ppt"}, {}};
    for (const auto& [p, v] : rows) t.rows.push_back({detail::num(p), v.fpt.str(), v.ppt.str()});
    return t;
}

// scatter: a,b,category
inline Table scatter_table(const std::vector<ScatterPoint>& pts) {
    Table t{{"a", "b", "category"}, {}};
    for (const auto& pt : pts) t.rows.push_back({detail::num(pt.a), detail::num(pt.b), std::string(to_string(pt.category))});
    return t;
}

/// Static scatter plot. LCT points are filled orange, CERT/SPORADIC points blue; UNKNOWN is omitted.
inline std::string scatter_svg(std::uint64_t p, const std::vector<ScatterPoint>& pts) {
    std::uint64_t max_ab = 2;
    for (const auto& pt : pts) max_ab = std::max({max_ab, pt.a, pt.b});
    constexpr int cell = 10, margin = 40;
    const int span = static_cast<int>(max_ab - 1) * cell;
    const int size = span + 2 * margin;
    auto x_of = [&](std::uint64_t a) { return margin + static_cast<int>(a - 2) * cell + cell / 2; };
    auto y_of = [&](std::uint64_t b) { return margin + span - (static_cast<int>(b - 2) * cell + cell / 2); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
    os << "<title>(a,b) with known ppt(p^a + x^b), p=" << p << "</title>\n";
    os << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << span << "\" height=\"" << span
       << "\" fill=\"none\" stroke=\"#888\"/>\n";
    for (std::uint64_t v = 10; v <= max_ab; v += 10) {
        os << "<text x=\"" << x_of(v) << "\" y=\"" << margin + span + 15 << "\" font-size=\"10\" text-anchor=\"middle\">"
           << v << "</text>\n";
        os << "<text x=\"" << margin - 5 << "\" y=\"" << y_of(v) + 3 << "\" font-size=\"10\" text-anchor=\"end\">" << v
           << "</text>\n";
    }
    os << "<text x=\"" << margin + span / 2 << "\" y=\"" << size - 8 << "\" font-size=\"12\" text-anchor=\"middle\">a</text>\n";
    os << "<text x=\"12\" y=\"" << margin + span / 2 << "\" font-size=\"12\">b</text>\n";
    for (const auto& pt : pts) {
        if (pt.category == Category::UNKNOWN) continue;
        const char* fill = pt.category == Category::LCT ? "#f28e2b" : "#4e79a7";
        os << "<circle class=\"" << to_string(pt.category) << "\" cx=\"" << x_of(pt.a) << "\" cy=\"" << y_of(pt.b)
           << "\" r=\"3\" fill=\"" << fill << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

// table1: per-cell summary (md/json) or per-prime rows (csv: a,b,p,verdict,in_table,expected)
inline Table table1_rows(const std::vector<Table1Cell>& cells) {
    using namespace detail;
    Table t{{"a", "b", "p", "verdict", "in_table", "expected"}, {}};
    for (const auto& c : cells)
        for (const auto& e : c.entries)
            t.rows.push_back({num(c.rule.a), num(c.rule.b), num(e.p), std::string(to_string(e.outcome.verdict)),
                              std::string(counts_for_table1(e.outcome) ? "1" : "0"),
                              std::string(e.expected ? "1" : "0")});
    return t;
}

inline std::string join(const std::vector<std::uint64_t>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
    return os.str();
}

inline std::string table1_markdown(const std::vector<Table1Cell>& cells, std::uint64_t prime_bound) {
    std::ostringstream os;
    os << "Primes p <= " << prime_bound << " with ppt(p^a + x^b) = fpt(y^a + x^b) certified.\n\n";
    os << "| a \\ b | 2 | 3 | 4 | 5 |\n|---|---|---|---|---|\n";
    for (std::uint64_t a = 2; a <= 5; ++a) {
        os << "| " << a << " |";
        for (std::uint64_t b = 2; b <= 5; ++b) {
            for (const auto& c : cells) {
                if (c.rule.a != a || c.rule.b != b) continue;
                auto miss = c.mismatches();
                os << ' ' << c.rule.text << (miss.empty() ? " ✓" : " ✗ mismatch: " + join(miss)) << " |";
            }
        }
        os << '\n';
    }
    os << '\n';
    for (const auto& c : cells) {
        std::vector<std::uint64_t> missing;
        for (const auto& e : c.entries)
            if (!counts_for_table1(e.outcome)) missing.push_back(e.p);
        os << "- (a,b)=(" << c.rule.a << "," << c.rule.b << "): " << c.certified_primes().size() << "/"
           << c.entries.size() << " certified; not certified: " << (missing.empty() ? "none" : join(missing)) << '\n';
    }
    return os.str();
}

inline std::string table1_json(const std::vector<Table1Cell>& cells) {
    Json arr = Json::array();
    for (const auto& c : cells) {
        Json obj;
        obj["a"] = c.rule.a;
        obj["b"] = c.rule.b;
        obj["description"] = c.rule.text;
        obj["certified"] = c.certified_primes();
        obj["mismatches"] = c.mismatches();
        Json verdicts = Json::array();
        for (const auto& e : c.entries) verdicts.push_back({{"p", e.p}, {"verdict", to_string(e.outcome.verdict)}});
        obj["verdicts"] = std::move(verdicts);
        arr.push_back(std::move(obj));
    }
    return dump(arr);
}

}  // namespace ppt::report
