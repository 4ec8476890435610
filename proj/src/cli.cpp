#include "qcount/cli.hpp"

#include "qcount/counts.hpp"
#include "qcount/errors.hpp"
#include "qcount/genfun.hpp"
#include "qcount/gfq.hpp"
#include "qcount/oracle.hpp"
#include "qcount/qanalogs.hpp"
#include "qcount/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace qcount::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct FieldFlags {
    std::string q;
    std::uint64_t p = 0;
    unsigned m = 1;
};

void add_field_flags(CLI::App* cmd, FieldFlags& f)
{
    auto* q = cmd->add_option("--q", f.q, "Field order (a prime power)");
    auto* p = cmd->add_option("--p", f.p, "Field characteristic");
    cmd->add_option("--m", f.m, "Field degree (with --p)")->needs(p);
    q->excludes(p);
}

QParam resolve_q(const FieldFlags& f)
{
    if (!f.q.empty()) {
        QParam q = QParam::from_order(parse_decimal(f.q));
        if (!q.is_prime_power()) {
            throw InvalidArgument("--q " + f.q + " is not a prime power");
        }
        return q;
    }
    if (f.p != 0) {
        return QParam(f.p, f.m);
    }
    throw InvalidArgument("one of --q or --p is required");
}

Json field_echo(const QParam& q)
{
    Json j;
    j["p"] = *q.p();
    j["m"] = *q.m();
    return j;
}

std::int64_t elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::vector<std::uint64_t> parse_q_list(const std::string& text)
{
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const BigInt v = parse_decimal(item);
        if (v < 2 || v > BigInt(static_cast<unsigned long>(FieldCtx::kMaxOrder))) {
            throw InvalidArgument("q-list entry " + item + " must lie in [2, 2^20]");
        }
        out.push_back(v.get_ui());
    }
    if (out.empty()) {
        throw InvalidArgument("--q-list is empty");
    }
    return out;
}

std::string trim(std::string s)
{
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

} // namespace

/// Parses `p,m;row1;row2;...` with whitespace-separated element indices.
MatGF parse_matrix(const std::string& text)
{
    std::vector<std::string> parts;
    std::stringstream ss(trim(text));
    std::string part;
    while (std::getline(ss, part, ';')) {
        parts.push_back(trim(part));
    }
    if (parts.size() < 2) {
        throw ParseError("matrix must look like 'p,m;row;row;...'");
    }
    const auto comma = parts[0].find(',');
    if (comma == std::string::npos) {
        throw ParseError("matrix header must be 'p,m', got '" + parts[0] + "'");
    }
    const BigInt p = parse_decimal(trim(parts[0].substr(0, comma)));
    const BigInt m = parse_decimal(trim(parts[0].substr(comma + 1)));
    if (p < 2 || p > BigInt(static_cast<unsigned long>(FieldCtx::kMaxOrder)) || m < 1 || m > 20) {
        throw ParseError("matrix header field GF(" + p.get_str() + "^" + m.get_str() + ") out of range");
    }
    const FieldCtx ctx(static_cast<std::uint32_t>(p.get_ui()), static_cast<unsigned>(m.get_ui()));

    const std::size_t n = parts.size() - 1;
    std::vector<FieldElem> entries;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        std::istringstream row(parts[i]);
        std::string tok;
        std::size_t count = 0;
        while (row >> tok) {
            const BigInt v = parse_decimal(tok);
            if (v < 0 || v >= ctx.q()) {
                throw ParseError("entry " + tok + " is not an element index of GF(" +
                                 std::to_string(ctx.q()) + ")");
            }
            entries.push_back({static_cast<std::uint32_t>(v.get_ui())});
            ++count;
        }
        if (count != n) {
            throw DimensionMismatch("row " + std::to_string(i) + " has " + std::to_string(count) +
                                    " entries; a square matrix with " + std::to_string(n) +
                                    " rows needs " + std::to_string(n));
        }
    }
    return MatGF(ctx, n, n, std::move(entries));
}

namespace {

std::string load_matrix_text(const std::string& arg)
{
    if (arg.find(';') != std::string::npos) {
        return arg;
    }
    std::ifstream in(arg);
    if (!in) {
        throw ParseError("--matrix '" + arg + "' is neither an inline matrix nor a readable file");
    }
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

TraceClass parse_alpha_class(const std::string& s)
{
    return (s == "0" || s == "zero") ? TraceClass::Zero : TraceClass::Nonzero;
}

struct CountArgs {
    unsigned n = 0;
    unsigned r = 0;
    unsigned k = 0;
    FieldFlags field;
    std::string alpha = "0";
    std::string method = "closed";
    bool json = false;
};

int cmd_count(const CountArgs& a, std::ostream& out)
{
    const auto start = Clock::now();
    const QParam q = resolve_q(a.field);
    const CountQuery query{a.n, a.r, a.k, q, parse_alpha_class(a.alpha)};
    query.validate();

    BigCount result;
    std::string method;
    if (a.method == "rec") {
        result = trace_count_row_rec(a.n, a.k, q, query.alpha).at(a.r);
        method = "recurrence";
    } else {
        result = trace_count(query);
        method = "closed_form";
    }

    if (a.json) {
        Json rec;
        Json qj{{"n", a.n}, {"r", a.r}, {"k", a.k}};
        qj.update(field_echo(q));
        qj["alpha"] = std::string(to_string(query.alpha));
        rec["query"] = qj;
        rec["result"] = to_decimal(result);
        rec["method"] = method;
        rec["elapsed_ms"] = elapsed_ms(start);
        out << rec.dump() << '\n';
    } else {
        out << to_decimal(result) << '\n';
    }
    return kOk;
}

struct TableArgs {
    unsigned n = 0;
    unsigned k = 0;
    FieldFlags field;
    std::string format = "csv";
};

int cmd_table(const TableArgs& a, std::ostream& out)
{
    const auto start = Clock::now();
    const QParam q = resolve_q(a.field);
    if (a.k > a.n) {
        throw KOutOfRange("k = " + std::to_string(a.k) + " exceeds n = " + std::to_string(a.n));
    }
    struct Row {
        BigInt f0, f1, g, a;
    };
    std::vector<Row> rows;
    for (unsigned r = 0; r <= a.n; ++r) {
        rows.push_back({trace_count({a.n, r, a.k, q, TraceClass::Zero}),
                        trace_count({a.n, r, a.k, q, TraceClass::Nonzero}), trace_diff(a.n, r, a.k, q),
                        rank_count(a.n, r, q)});
    }
    if (a.format == "json") {
        Json rec;
        Json qj{{"n", a.n}, {"k", a.k}};
        qj.update(field_echo(q));
        rec["query"] = qj;
        Json arr = Json::array();
        for (unsigned r = 0; r < rows.size(); ++r) {
            arr.push_back({{"r", r},
                           {"f0", to_decimal(rows[r].f0)},
                           {"f1", to_decimal(rows[r].f1)},
                           {"g", to_decimal(rows[r].g)},
                           {"a", to_decimal(rows[r].a)}});
        }
        rec["rows"] = arr;
        rec["method"] = "closed_form";
        rec["elapsed_ms"] = elapsed_ms(start);
        out << rec.dump() << '\n';
    } else {
        out << "r,f0,f1,g,a\n";
        for (unsigned r = 0; r < rows.size(); ++r) {
            out << r << ',' << rows[r].f0.get_str() << ',' << rows[r].f1.get_str() << ','
                << rows[r].g.get_str() << ',' << rows[r].a.get_str() << '\n';
        }
    }
    return kOk;
}

struct VerifyArgs {
    std::string suite = "all";
    unsigned max_n = 3;
    std::string q_list = "2,3";
    unsigned workers = 1;
    std::uint64_t seed = 1;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out)
{
    const auto qs = parse_q_list(a.q_list);
    std::vector<CheckResult> results;
    // run the guard checks before any long computation
    if (a.suite == "oracle" || a.suite == "all") {
        for (auto q : qs) {
            for (unsigned n = 1; n <= a.max_n; ++n) {
                check_enumeration_size(n, static_cast<std::uint32_t>(q));
            }
        }
    }
    if (a.suite == "identities" || a.suite == "all") {
        auto r = identity_suite(a.max_n, qs);
        results.insert(results.end(), r.begin(), r.end());
    }
    if (a.suite == "oracle" || a.suite == "all") {
        auto r = oracle_suite(a.max_n, qs, a.workers, a.seed);
        results.insert(results.end(), r.begin(), r.end());
    }
    bool all_passed = true;
    for (const auto& r : results) {
        all_passed = all_passed && r.passed;
        out << (r.passed ? "PASS  " : "FAIL  ") << r.name << " (" << r.cases << " cases)";
        if (!r.passed) {
            out << "\n      counterexample: " << r.detail;
        }
        out << '\n';
    }
    out << (all_passed ? "PASS" : "FAIL") << '\n';
    return all_passed ? kOk : kVerificationFailed;
}

struct ZcountArgs {
    std::string matrix;
    unsigned r = 0;
    std::uint32_t alpha = 0;
    std::string method;
    bool json = false;
};

int cmd_zcount(const ZcountArgs& a, std::ostream& out, std::ostream& err)
{
    const MatGF mat = parse_matrix(load_matrix_text(a.matrix));
    const FieldCtx& ctx = mat.ctx();
    const FieldElem alpha = ctx.elem(a.alpha);
    const auto n = static_cast<unsigned>(mat.rows());
    if (a.r > n) {
        throw InvalidArgument("rank r = " + std::to_string(a.r) + " exceeds n = " + std::to_string(n));
    }
    const auto k = static_cast<unsigned>(mat_rank(mat));
    const QParam q = ctx.qparam();

    const bool run_closed = a.method.empty() || a.method == "closed";
    const bool run_oracle = a.method == "oracle" ||
                            (a.method.empty() && enumeration_size(n, ctx.q()) <= kMaxEnumeration);

    struct Outcome {
        std::string method;
        BigCount value;
        std::int64_t ms;
    };
    std::vector<Outcome> outcomes;
    if (run_closed) {
        const auto start = Clock::now();
        BigCount v = trace_form_count(mat, a.r, alpha);
        outcomes.push_back({"closed_form", std::move(v), elapsed_ms(start)});
    }
    if (run_oracle) {
        const auto start = Clock::now();
        BigCount v = trace_form_oracle(mat, a.r, alpha);
        outcomes.push_back({"oracle", std::move(v), elapsed_ms(start)});
    }

    for (const auto& o : outcomes) {
        if (a.json) {
            Json rec;
            Json qj{{"n", n}, {"r", a.r}, {"k", k}};
            qj.update(field_echo(q));
            qj["alpha"] = std::string(to_string(trace_class(alpha)));
            qj["alpha_index"] = alpha.index;
            rec["query"] = qj;
            rec["result"] = to_decimal(o.value);
            rec["method"] = o.method;
            rec["elapsed_ms"] = o.ms;
            out << rec.dump() << '\n';
        } else if (outcomes.size() == 1) {
            out << to_decimal(o.value) << '\n';
        } else {
            out << o.method << ' ' << to_decimal(o.value) << '\n';
        }
    }
    if (outcomes.size() == 2 && outcomes[0].value != outcomes[1].value) {
        err << "error: closed form " << outcomes[0].value.get_str() << " disagrees with enumeration "
            << outcomes[1].value.get_str() << '\n';
        return kVerificationFailed;
    }
    return kOk;
}

struct GfInfoArgs {
    FieldFlags field;
    bool json = false;
};

int cmd_gf_info(const GfInfoArgs& a, std::ostream& out)
{
    const QParam q = resolve_q(a.field);
    if (q.q() > BigInt(static_cast<unsigned long>(FieldCtx::kMaxOrder))) {
        throw DegreeTooLarge("field order exceeds 2^20");
    }
    const FieldCtx ctx(static_cast<std::uint32_t>(*q.p()), *q.m());
    if (a.json) {
        Json rec{{"p", ctx.p()}, {"m", ctx.m()}, {"q", ctx.q()}, {"modulus", ctx.modulus_string()}};
        rec["modulus_coeffs"] = std::vector<std::uint32_t>(ctx.modulus().begin(), ctx.modulus().end());
        rec["generator"] = ctx.generator().index;
        Json elems = Json::array();
        for (FieldElem x : ctx.elements()) {
            Json e{{"index", x.index}, {"coeffs", ctx.coeffs(x)}, {"element", ctx.format(x)}};
            e["inverse"] = x.index == 0 ? Json(nullptr) : Json(ctx.inv(x).index);
            elems.push_back(e);
        }
        rec["elements"] = elems;
        out << rec.dump() << '\n';
        return kOk;
    }
    out << "GF(" << ctx.q() << ") = GF(" << ctx.p() << ")[t]/(" << ctx.modulus_string() << ")\n";
    out << "generator: " << ctx.format(ctx.generator()) << " (index " << ctx.generator().index << ")\n";
    out << "index\telement\tinverse\n";
    for (FieldElem x : ctx.elements()) {
        out << x.index << '\t' << ctx.format(x) << '\t';
        if (x.index == 0) {
            out << '-';
        } else {
            out << ctx.inv(x).index;
        }
        out << '\n';
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact counts of matrices over GF(q) by rank and partial trace", "qcount"};
    app.require_subcommand(1);

    CountArgs count;
    auto* c = app.add_subcommand("count", "Count n x n rank-r matrices with k-trace in a class");
    c->add_option("--n", count.n, "Matrix size")->required();
    c->add_option("--r", count.r, "Rank")->required();
    c->add_option("--k", count.k, "Number of leading diagonal entries in the trace")->required();
    add_field_flags(c, count.field);
    c->add_option("--alpha", count.alpha, "Trace class")
        ->check(CLI::IsMember({"0", "1", "zero", "nonzero"}));
    c->add_option("--method", count.method, "closed or rec")->check(CLI::IsMember({"closed", "rec"}));
    c->add_flag("--json", count.json, "Emit a JSON record");

    TableArgs table;
    auto* t = app.add_subcommand("table", "Emit f0, f1, g, a for every rank");
    t->add_option("--n", table.n, "Matrix size")->required();
    t->add_option("--k", table.k, "Number of leading diagonal entries in the trace")->required();
    add_field_flags(t, table.field);
    t->add_option("--format", table.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Machine-check identities and enumeration agreement");
    v->add_option("--suite", verify.suite, "identities, oracle or all")
        ->check(CLI::IsMember({"identities", "oracle", "all"}));
    v->add_option("--max-n", verify.max_n, "Largest matrix size");
    v->add_option("--q-list", verify.q_list, "Comma-separated field orders");
    v->add_option("--workers", verify.workers, "Enumeration threads")->check(CLI::PositiveNumber);
    v->add_option("--seed", verify.seed, "Seed for random matrices");

    ZcountArgs z;
    auto* zc = app.add_subcommand("zcount", "Count rank-r X with tr(A X) = alpha");
    zc->add_option("--matrix", z.matrix, "'p,m;row;row;...' or a file holding it")->required();
    zc->add_option("--r", z.r, "Rank")->required();
    zc->add_option("--alpha", z.alpha, "Element index of alpha")->required();
    zc->add_option("--method", z.method, "closed or oracle (both when omitted)")
        ->check(CLI::IsMember({"closed", "oracle"}));
    zc->add_flag("--json", z.json, "Emit JSON records");

    GfInfoArgs gf;
    auto* g = app.add_subcommand("gf-info", "Show the modulus and element table of GF(q)");
    add_field_flags(g, gf.field);
    g->add_flag("--json", gf.json, "Emit JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (c->parsed()) {
            return cmd_count(count, out);
        }
        if (t->parsed()) {
            return cmd_table(table, out);
        }
        if (v->parsed()) {
            return cmd_verify(verify, out);
        }
        if (zc->parsed()) {
            return cmd_zcount(z, out, err);
        }
        return cmd_gf_info(gf, out);
    } catch (const DivisionInexact& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const InvariantBreach& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

} // namespace qcount::cli
