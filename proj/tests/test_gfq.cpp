#include "qcount/errors.hpp"
#include "qcount/gfq.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace qcount;

namespace {

const std::vector<std::pair<std::uint32_t, unsigned>> kSmallFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}};

// Reference multiplication: schoolbook product of coefficient vectors
// reduced by the modulus, independent of the context's tables.
FieldElem slow_mul(const FieldCtx& f, FieldElem a, FieldElem b)
{
    const auto ca = f.coeffs(a);
    const auto cb = f.coeffs(b);
    const unsigned m = f.m();
    const std::uint64_t p = f.p();
    std::vector<std::uint64_t> prod(2 * m, 0);
    for (unsigned i = 0; i < m; ++i) {
        for (unsigned j = 0; j < m; ++j) {
            prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
        }
    }
    const auto mod = f.modulus();
    for (unsigned top = 2 * m - 1; top >= m; --top) {
        const std::uint64_t c = prod[top];
        for (unsigned j = 0; j <= m; ++j) {
            prod[top - m + j] = (prod[top - m + j] + (p - c) * mod[j]) % p;
        }
    }
    std::vector<std::uint32_t> out(m);
    for (unsigned i = 0; i < m; ++i) {
        out[i] = static_cast<std::uint32_t>(prod[i]);
    }
    return f.from_coeffs(out);
}

// Rank oracle: eliminates by columns (operating on the transpose) with a full
// reduction, then counts nonzero rows.
std::size_t column_rank(const MatGF& m)
{
    const FieldCtx& f = m.ctx();
    const std::size_t rows = m.cols();
    const std::size_t cols = m.rows();
    std::vector<FieldElem> a(rows * cols);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            a[j * cols + i] = m.at(i, j);
        }
    }
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t piv = next;
        while (piv < rows && a[piv * cols + c].index == 0) {
            ++piv;
        }
        if (piv == rows) {
            continue;
        }
        for (std::size_t j = 0; j < cols; ++j) {
            std::swap(a[piv * cols + j], a[next * cols + j]);
        }
        const FieldElem s = f.inv(a[next * cols + c]);
        for (std::size_t j = 0; j < cols; ++j) {
            a[next * cols + j] = f.mul(a[next * cols + j], s);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != next) {
                const FieldElem lead = a[i * cols + c];
                for (std::size_t j = 0; j < cols; ++j) {
                    a[i * cols + j] = f.sub(a[i * cols + j], f.mul(lead, a[next * cols + j]));
                }
            }
        }
        ++next;
    }
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        bool any = false;
        for (std::size_t j = 0; j < cols; ++j) {
            any = any || a[i * cols + j].index != 0;
        }
        nonzero += any ? 1 : 0;
    }
    return nonzero;
}

// rank = n - log_q |ker M|, counting the kernel by enumeration.
std::size_t kernel_rank(const MatGF& m)
{
    const FieldCtx& f = m.ctx();
    const std::size_t n = m.cols();
    std::vector<FieldElem> x(n);
    std::uint64_t kernel = 0;
    while (true) {
        bool zero = true;
        for (std::size_t i = 0; i < m.rows() && zero; ++i) {
            FieldElem acc = FieldCtx::zero();
            for (std::size_t j = 0; j < n; ++j) {
                acc = f.add(acc, f.mul(m.at(i, j), x[j]));
            }
            zero = acc.index == 0;
        }
        kernel += zero ? 1 : 0;
        std::size_t pos = n;
        while (pos > 0 && ++x[pos - 1].index == f.q()) {
            x[pos - 1].index = 0;
            --pos;
        }
        if (pos == 0) {
            break;
        }
    }
    std::size_t dim = 0;
    while (kernel > 1) {
        kernel /= f.q();
        ++dim;
    }
    return n - dim;
}

} // namespace

TEST_SUITE("gfq") {

TEST_CASE("modulus selection")
{
    const FieldCtx gf2(2, 1);
    CHECK(std::vector<std::uint32_t>(gf2.modulus().begin(), gf2.modulus().end()) ==
          std::vector<std::uint32_t>{0, 1});
    const FieldCtx gf4(2, 2);
    CHECK(gf4.modulus_string() == "t^2+t+1");
    const FieldCtx gf9(3, 2);
    CHECK(gf9.modulus_string() == "t^2+1");
    CHECK(FieldCtx(2, 3).modulus_string() == "t^3+t+1");
    CHECK(least_irreducible(5, 2) == std::vector<std::uint32_t>{2, 0, 1});
}

TEST_CASE("field construction errors")
{
    CHECK_THROWS_AS(FieldCtx(4, 1), NotPrime);
    CHECK_THROWS_AS(FieldCtx(2, 21), DegreeTooLarge);
    CHECK_THROWS_AS(FieldCtx(3, 13), DegreeTooLarge);
    CHECK_THROWS_AS(FieldCtx(2, std::vector<std::uint32_t>{1, 0, 1}), NotIrreducible);
    CHECK_THROWS_AS(FieldCtx(3, std::vector<std::uint32_t>{2, 0, 1}), NotIrreducible);
    CHECK_THROWS_AS(FieldCtx(3, std::vector<std::uint32_t>{1, 5, 1}), InvalidArgument);
    CHECK_NOTHROW(FieldCtx(2, std::vector<std::uint32_t>{1, 0, 1, 1}));
}

TEST_CASE("element arithmetic examples")
{
    const FieldCtx gf4(2, 2);
    const FieldElem t = gf4.elem(2);
    CHECK(gf4.format(t) == "t");
    CHECK(gf4.mul(t, t) == gf4.elem(3));
    CHECK(gf4.format(gf4.elem(3)) == "1+t");

    const FieldCtx gf5(5, 1);
    CHECK(gf5.inv(gf5.elem(2)) == gf5.elem(3));
    CHECK_THROWS_AS((void)gf5.inv(FieldCtx::zero()), DivisionByZero);
    CHECK_THROWS_AS((void)gf5.elem(5), InvalidArgument);

    for (auto [p, m] : kSmallFields) {
        const FieldCtx f(p, m);
        const auto all = f.elements();
        REQUIRE(all.size() == f.q());
        CHECK(all[0] == FieldCtx::zero());
        CHECK(all[1] == FieldCtx::one());
        CHECK(std::set<FieldElem>(all.begin(), all.end()).size() == f.q());
        for (FieldElem x : all) {
            CHECK(f.add(x, f.neg(x)) == FieldCtx::zero());
            CHECK(f.from_coeffs(f.coeffs(x)) == x);
        }
    }
}

TEST_CASE("field axioms, exhaustive for q <= 9")
{
    for (auto [p, m] : kSmallFields) {
        const FieldCtx f(p, m);
        if (f.q() > 9) {
            continue;
        }
        const auto all = f.elements();
        for (FieldElem a : all) {
            if (a.index != 0) {
                CHECK(f.mul(a, f.inv(a)) == FieldCtx::one());
            }
            CHECK(f.mul(a, FieldCtx::one()) == a);
            CHECK(f.add(a, FieldCtx::zero()) == a);
            for (FieldElem b : all) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.mul(a, b) == slow_mul(f, a, b));
                for (FieldElem c : all) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("field axioms, randomized for q <= 16 and large untabled fields")
{
    Rng rng(11);
    std::vector<FieldCtx> fields;
    for (auto [p, m] : kSmallFields) {
        fields.emplace_back(p, m);
    }
    fields.emplace_back(3, 6);  // 729 > table bound
    fields.emplace_back(2, 10); // 1024
    fields.emplace_back(17, 2); // 289
    for (const FieldCtx& f : fields) {
        std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
        for (int trial = 0; trial < 300; ++trial) {
            const FieldElem a{pick(rng)};
            const FieldElem b{pick(rng)};
            const FieldElem c{pick(rng)};
            CHECK(f.mul(a, b) == slow_mul(f, a, b));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.sub(f.add(a, b), b) == a);
            if (b.index != 0) {
                CHECK(f.mul(f.div(a, b), b) == a);
            }
        }
    }
}

TEST_CASE("mat_rank examples")
{
    const FieldCtx f2(2, 1);
    CHECK(mat_rank(MatGF(f2, 3, 3)) == 0);
    for (std::size_t n = 0; n <= 4; ++n) {
        CHECK(mat_rank(MatGF::identity(f2, n)) == n);
    }
    CHECK(mat_rank(MatGF(f2, 2, 2, {{1}, {1}, {1}, {1}})) == 1);
    CHECK(mat_rank(MatGF(f2, 2, 3, {{1}, {0}, {1}, {0}, {1}, {1}})) == 2);
}

TEST_CASE("mat_rank agrees with independent rank oracles")
{
    Rng rng(5);
    for (auto [p, m] : kSmallFields) {
        const FieldCtx f(p, m);
        for (int trial = 0; trial < 1000; ++trial) {
            const std::size_t n = 1 + trial % 4;
            // mix uniform matrices with low-rank ones so every rank shows up
            const MatGF a = (trial % 3 == 0) ? random_rank_k(n, trial % (n + 1), f, rng)
                                             : random_matrix(n, n, f, rng);
            const std::size_t r = mat_rank(a);
            CHECK(r == column_rank(a));
            if (f.q() <= 5 && n <= 3) {
                CHECK(r == kernel_rank(a));
            }
        }
    }
}

TEST_CASE("rank is invariant under invertible multiplication")
{
    Rng rng(17);
    for (auto [p, m] : kSmallFields) {
        const FieldCtx f(p, m);
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t n = 1 + trial % 4;
            const MatGF a = random_rank_k(n, trial % (n + 1), f, rng);
            const MatGF g1 = random_invertible(n, f, rng);
            const MatGF g2 = random_invertible(n, f, rng);
            CHECK(mat_rank(g1 * a * g2) == mat_rank(a));
        }
    }
}

TEST_CASE("mat_inverse")
{
    Rng rng(3);
    const FieldCtx f(3, 2);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const MatGF g = random_invertible(n, f, rng);
        const auto inv = mat_inverse(g);
        REQUIRE(inv.has_value());
        CHECK(g * *inv == MatGF::identity(f, n));
    }
    CHECK_FALSE(mat_inverse(MatGF(f, 2, 2)).has_value());
}

TEST_CASE("k_trace")
{
    const FieldCtx f3(3, 1);
    for (std::size_t k = 0; k <= 4; ++k) {
        CHECK(k_trace(MatGF::identity(f3, 4), k) == FieldElem{static_cast<std::uint32_t>(k % 3)});
    }
    Rng rng(1);
    CHECK(k_trace(random_matrix(3, 3, f3, rng), 0) == FieldCtx::zero());

    const FieldCtx gf4(2, 2);
    const MatGF d(gf4, 2, 2, {FieldCtx::one(), FieldCtx::zero(), FieldCtx::zero(), gf4.elem(2)});
    CHECK(k_trace(d, 2) == gf4.elem(3));
    CHECK(trace(d) == gf4.elem(3));

    CHECK_THROWS_AS(k_trace(MatGF(f3, 2, 3), 1), DimensionMismatch);
    CHECK_THROWS_AS(k_trace(MatGF(f3, 2, 2), 3), KOutOfRange);
}

TEST_CASE("canonical rank matrix")
{
    const FieldCtx f2(2, 1);
    CHECK(canonical_rank_matrix(2, 1, f2) == MatGF(f2, 2, 2, {{1}, {0}, {0}, {0}}));
    CHECK(canonical_rank_matrix(3, 0, f2).is_zero());
    CHECK(canonical_rank_matrix(3, 3, f2) == MatGF::identity(f2, 3));
    for (std::size_t k = 0; k <= 4; ++k) {
        CHECK(mat_rank(canonical_rank_matrix(4, k, f2)) == k);
    }
    CHECK_THROWS_AS(canonical_rank_matrix(2, 3, f2), KOutOfRange);
}

TEST_CASE("matrix construction checks")
{
    const FieldCtx f2(2, 1);
    CHECK_THROWS_AS(MatGF(f2, 2, 2, {{1}, {0}, {0}}), DimensionMismatch);
    CHECK_THROWS_AS(MatGF(f2, 1, 1, {{2}}), InvalidArgument);
    MatGF a(f2, 1, 1);
    CHECK_THROWS_AS(a.set(0, 0, FieldElem{5}), InvalidArgument);
    CHECK_THROWS_AS(MatGF(f2, 2, 2) * MatGF(f2, 3, 3), DimensionMismatch);
}

TEST_CASE("random matrices of prescribed rank")
{
    const FieldCtx f3(3, 1);
    Rng rng(99);
    CHECK(random_rank_k(3, 0, f3, rng).is_zero());
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng r(seed);
        CHECK(mat_rank(random_rank_k(3, 2, f3, r)) == 2);
    }

    // GL(2, F2) enumerated directly
    const FieldCtx f2(2, 1);
    std::set<std::vector<std::uint32_t>> gl2;
    for (std::uint32_t bits = 0; bits < 16; ++bits) {
        std::vector<FieldElem> e;
        for (int i = 3; i >= 0; --i) {
            e.push_back({(bits >> i) & 1U});
        }
        const MatGF mtx(f2, 2, 2, e);
        if (mat_rank(mtx) == 2) {
            gl2.insert({bits});
        }
    }
    CHECK(gl2.size() == 6);
    for (int trial = 0; trial < 100; ++trial) {
        const MatGF g = random_invertible(2, f2, rng);
        std::uint32_t bits = 0;
        for (FieldElem x : g.entries()) {
            bits = (bits << 1) | x.index;
        }
        CHECK(gl2.count({bits}) == 1);
    }
}

TEST_CASE("random_rank_k is uniform on rank-1 2x2 matrices over F2")
{
    const FieldCtx f2(2, 1);
    Rng rng(12345);
    std::vector<int> counts(16, 0);
    const int samples = 9000;
    for (int s = 0; s < samples; ++s) {
        const MatGF a = random_rank_k(2, 1, f2, rng);
        std::uint32_t bits = 0;
        for (FieldElem x : a.entries()) {
            bits = (bits << 1) | x.index;
        }
        ++counts[bits];
    }
    int support = 0;
    double chi2 = 0;
    const double expected = samples / 9.0;
    for (int c : counts) {
        if (c > 0) {
            ++support;
            chi2 += (c - expected) * (c - expected) / expected;
        }
    }
    CHECK(support == 9);
    // chi-square critical value for 8 degrees of freedom at p = 0.001
    CHECK(chi2 < 26.124);
}

TEST_CASE("trace form transports along the orbit map")
{
    // With A = g1^-1 B g2 and X -> g2 X g1^-1, tr(B . image) = tr(A X).
    Rng rng(8);
    for (auto [p, m] : kSmallFields) {
        const FieldCtx f(p, m);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t n = 1 + trial % 4;
            const std::size_t k = trial % (n + 1);
            const MatGF b = canonical_rank_matrix(n, k, f);
            const MatGF g1 = random_invertible(n, f, rng);
            const MatGF g2 = random_invertible(n, f, rng);
            const MatGF g1_inv = *mat_inverse(g1);
            const MatGF a = g1_inv * b * g2;
            const MatGF x = random_matrix(n, n, f, rng);
            const MatGF image = g2 * x * g1_inv;
            CHECK(trace(b * image) == trace(a * x));
            CHECK(k_trace(image, k) == trace(a * x));
            CHECK(mat_rank(image) == mat_rank(x));
        }
    }
}

} // TEST_SUITE
