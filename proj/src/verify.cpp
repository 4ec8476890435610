#include "qcount/verify.hpp"

#include "qcount/counts.hpp"
#include "qcount/errors.hpp"
#include "qcount/genfun.hpp"
#include "qcount/gfq.hpp"
#include "qcount/oracle.hpp"
#include "qcount/qanalogs.hpp"

#include <sstream>

namespace qcount {

namespace {

class Check {
public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    template <typename Describe>
    void expect(bool ok, Describe&& describe)
    {
        ++result_.cases;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.detail = describe();
        }
    }

    CheckResult take() { return std::move(result_); }

private:
    CheckResult result_;
};

std::string at(unsigned n, unsigned r, unsigned k, const BigInt& q)
{
    std::ostringstream os;
    os << "n=" << n << " r=" << r << " k=" << k << " q=" << q.get_str();
    return os.str();
}

std::string mismatch(const std::string& where, const std::string& lhs, const std::string& rhs)
{
    return where + ": " + lhs + " != " + rhs;
}

} // namespace

std::vector<CheckResult> identity_suite(unsigned max_n, std::span<const std::uint64_t> q_list)
{
    std::vector<QParam> qs;
    for (auto q : q_list) {
        qs.push_back(QParam::from_order(BigInt(static_cast<unsigned long>(q))));
    }

    Check symmetry("gauss_binom symmetry");
    Check qbinom("q-binomial theorem");
    Check rank_sum("rank counts sum to q^(n^2)");
    Check conservation("f0 + (q-1) f1 = a(n,r,q)");
    Check main_vs_gf("alternating sum = trace_diff_poly coefficient");
    Check rank_rec("rank_poly = rank_poly_rec");
    Check diff_rec("trace_diff_poly = trace_diff_poly_rec");
    Check row_rec("trace_count_row_rec = trace_count");
    Check square("n = k closed form");
    Check codim1("n = k + 1 closed form");
    Check codim1_full("n = r = k + 1 closed form");
    Check quotient("trace_diff_poly(k+j, k) / (X;q)_k = rank_poly(j)(q^k X), j = 1, 2");
    Check degrees("deg rank_poly = deg trace_diff_poly = n");

    for (const QParam& q : qs) {
        const BigInt& qq = q.q();
        for (unsigned n = 0; n <= max_n; ++n) {
            BigInt sum = 0;
            for (unsigned r = 0; r <= n; ++r) {
                const BigInt a = gauss_binom(n, r, q);
                const BigInt b = gauss_binom(n, n - r, q);
                symmetry.expect(a == b, [&] { return mismatch(at(n, r, 0, qq), a.get_str(), b.get_str()); });
                sum += rank_count(n, r, q);
            }
            const BigInt all = ipow(qq, n * n);
            rank_sum.expect(sum == all, [&] { return mismatch(at(n, 0, 0, qq), sum.get_str(), all.get_str()); });

            const PolyZ lhs = q_binomial_expand(n, q);
            const PolyZ rhs = q_pochhammer_poly(n, q);
            qbinom.expect(lhs == rhs, [&] { return mismatch(at(n, 0, 0, qq), lhs.to_string(), rhs.to_string()); });

            const PolyZ a_direct = rank_poly(n, q);
            const PolyZ a_rec = rank_poly_rec(n, q);
            rank_rec.expect(a_direct == a_rec,
                            [&] { return mismatch(at(n, 0, 0, qq), a_direct.to_string(), a_rec.to_string()); });
            degrees.expect(a_direct.degree() == static_cast<int>(n),
                           [&] { return at(n, 0, 0, qq) + ": deg rank_poly = " + std::to_string(a_direct.degree()); });

            for (unsigned k = 0; k <= n; ++k) {
                const PolyZ g = trace_diff_poly(n, k, q);
                const PolyZ g_rec = trace_diff_poly_rec(n, k, q);
                diff_rec.expect(g == g_rec, [&] { return mismatch(at(n, 0, k, qq), g.to_string(), g_rec.to_string()); });
                degrees.expect(g.degree() == static_cast<int>(n),
                               [&] { return at(n, 0, k, qq) + ": deg trace_diff_poly = " + std::to_string(g.degree()); });

                const auto row0 = trace_count_row_rec(n, k, q, TraceClass::Zero);
                const auto row1 = trace_count_row_rec(n, k, q, TraceClass::Nonzero);
                for (unsigned r = 0; r <= n; ++r) {
                    const BigInt d = trace_diff(n, r, k, q);
                    const BigInt coeff = g.coeff(r);
                    main_vs_gf.expect(d == coeff, [&] { return mismatch(at(n, r, k, qq), d.get_str(), coeff.get_str()); });

                    const BigInt f0 = trace_count({n, r, k, q, TraceClass::Zero});
                    const BigInt f1 = trace_count({n, r, k, q, TraceClass::Nonzero});
                    const BigInt a = rank_count(n, r, q);
                    const BigInt lhs_c = f0 + (qq - 1) * f1;
                    conservation.expect(lhs_c == a, [&] { return mismatch(at(n, r, k, qq), lhs_c.get_str(), a.get_str()); });
                    row_rec.expect(row0[r] == f0 && row1[r] == f1, [&] {
                        return mismatch(at(n, r, k, qq), row0[r].get_str() + "/" + row1[r].get_str(),
                                        f0.get_str() + "/" + f1.get_str());
                    });
                }
                if (n == k) {
                    for (unsigned r = 0; r <= k; ++r) {
                        const BigInt special = full_trace_diff(k, r, q);
                        const BigInt d = trace_diff(n, r, k, q);
                        square.expect(special == d, [&] { return mismatch(at(n, r, k, qq), special.get_str(), d.get_str()); });
                    }
                }
                if (n == k + 1) {
                    for (unsigned r = 0; r <= k; ++r) {
                        const BigInt special = codim1_trace_diff(k, r, q);
                        const BigInt d = trace_diff(n, r, k, q);
                        codim1.expect(special == d, [&] { return mismatch(at(n, r, k, qq), special.get_str(), d.get_str()); });
                    }
                    const BigInt special = codim1_full_rank_diff(k, q);
                    const BigInt d = trace_diff(n, n, k, q);
                    codim1_full.expect(special == d, [&] { return mismatch(at(n, n, k, qq), special.get_str(), d.get_str()); });
                }
                if (n == k + 1 || n == k + 2) {
                    const PolyZ quot = divide_exact(g, q_pochhammer_poly(k, q));
                    const PolyZ expected = scale_arg(rank_poly(n - k, q), ipow(qq, k));
                    quotient.expect(quot == expected,
                                    [&] { return mismatch(at(n, 0, k, qq), quot.to_string(), expected.to_string()); });
                }
            }
        }
    }

    std::vector<CheckResult> out;
    for (Check* c : {&symmetry, &qbinom, &rank_sum, &conservation, &main_vs_gf, &rank_rec, &diff_rec,
                     &row_rec, &square, &codim1, &codim1_full, &quotient, &degrees}) {
        out.push_back(c->take());
    }
    return out;
}

std::vector<CheckResult> oracle_suite(unsigned max_n, std::span<const std::uint64_t> q_list,
                                      unsigned workers, std::uint64_t seed, unsigned samples_per_field)
{
    std::vector<FieldCtx> fields;
    for (auto q : q_list) {
        const QParam param = QParam::from_order(BigInt(static_cast<unsigned long>(q)));
        if (!param.is_prime_power()) {
            throw InvalidArgument(std::to_string(q) + " is not a prime power");
        }
        if (q > FieldCtx::kMaxOrder) {
            throw TooLarge("size guard exceeded: field order " + std::to_string(q) + " exceeds 2^20");
        }
        for (unsigned n = 1; n <= max_n; ++n) {
            check_enumeration_size(n, static_cast<std::uint32_t>(q));
        }
        fields.emplace_back(static_cast<std::uint32_t>(*param.p()), *param.m());
    }

    Check counts("enumeration = closed form (every n, r, k, trace class)");
    Check totals("enumeration totals = q^(n^2) and a(n,r,q)");
    Check uniform("nonzero trace cells equal within each rank");
    Check bijection("tr(A X) tallies = closed form at k = rank(A)");

    Rng rng(seed);
    for (const FieldCtx& ctx : fields) {
        const QParam q = ctx.qparam();
        const BigInt& qq = q.q();
        for (unsigned n = 1; n <= max_n; ++n) {
            for (unsigned k = 0; k <= n; ++k) {
                const CountTable table = partitioned_enumerate(n, k, ctx, workers);
                const BigInt total = table.total();
                const BigInt all = ipow(qq, n * n);
                totals.expect(total == all, [&] { return mismatch(at(n, 0, k, qq), total.get_str(), all.get_str()); });
                for (unsigned r = 0; r <= n; ++r) {
                    const BigInt rt = table.rank_total(r);
                    const BigInt a = rank_count(n, r, q);
                    totals.expect(rt == a, [&] { return mismatch(at(n, r, k, qq), rt.get_str(), a.get_str()); });
                    uniform.expect(table.nonzero_uniform(r), [&] { return at(n, r, k, qq); });
                    for (TraceClass c : {TraceClass::Zero, TraceClass::Nonzero}) {
                        const BigInt closed = trace_count({n, r, k, q, c});
                        const BigInt& enumerated = table.class_cell(r, c);
                        counts.expect(closed == enumerated, [&] {
                            return mismatch(at(n, r, k, qq) + " " + std::string(to_string(c)),
                                            enumerated.get_str(), closed.get_str());
                        });
                    }
                }
            }
            for (unsigned s = 0; s < samples_per_field; ++s) {
                const MatGF a = (s % 2 == 0) ? random_matrix(n, n, ctx, rng)
                                             : random_rank_k(n, s / 2 % (n + 1), ctx, rng);
                const CountTable table = trace_form_table(a);
                for (unsigned r = 0; r <= n; ++r) {
                    for (FieldElem alpha : ctx.elements()) {
                        const BigInt closed = trace_form_count(a, r, alpha);
                        const BigInt& enumerated = table.cell(r, alpha);
                        bijection.expect(closed == enumerated, [&] {
                            return mismatch(at(n, r, table.k(), qq) + " alpha=" + std::to_string(alpha.index),
                                            enumerated.get_str(), closed.get_str());
                        });
                    }
                }
            }
        }
    }

    std::vector<CheckResult> out;
    for (Check* c : {&counts, &totals, &uniform, &bijection}) {
        out.push_back(c->take());
    }
    return out;
}

} // namespace qcount
