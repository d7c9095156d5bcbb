#include "arrcover/exactlin.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace arrcover {

IntMatrix::IntMatrix(const SparseIntMatrix& sparse) : IntMatrix(sparse.rows, sparse.cols)
{
    for (const auto& t : sparse.entries)
        (*this)(t.row, t.col) += t.value;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("IntMatrix: ragged rows");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const
{
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(i, j) += x * b(k, j);
        }
    return c;
}

namespace {

/*
 * Smith normal form on a working copy. When column transforms are
 * requested, v and v_inv are kept so that (row ops) * m * v = diag and
 * v * v_inv = I.
 */
struct SnfWork {
    IntMatrix a;
    IntMatrix v;
    IntMatrix v_inv;
    bool track = false;

    void swap_rows(std::size_t i, std::size_t k)
    {
        if (i == k)
            return;
        for (std::size_t j = 0; j < a.cols(); ++j)
            std::swap(a(i, j), a(k, j));
    }

    void swap_cols(std::size_t j, std::size_t k)
    {
        if (j == k)
            return;
        for (std::size_t i = 0; i < a.rows(); ++i)
            std::swap(a(i, j), a(i, k));
        if (track) {
            for (std::size_t i = 0; i < v.rows(); ++i)
                std::swap(v(i, j), v(i, k));
            for (std::size_t i = 0; i < v_inv.cols(); ++i)
                std::swap(v_inv(j, i), v_inv(k, i));
        }
    }

    // row_i -= q * row_k
    void sub_row(std::size_t i, std::size_t k, const Integer& q)
    {
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(k, j) != 0)
                a(i, j) -= q * a(k, j);
    }

    // col_j -= q * col_k
    void sub_col(std::size_t j, std::size_t k, const Integer& q)
    {
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (a(i, k) != 0)
                a(i, j) -= q * a(i, k);
        if (track) {
            for (std::size_t i = 0; i < v.rows(); ++i)
                if (v(i, k) != 0)
                    v(i, j) -= q * v(i, k);
            for (std::size_t i = 0; i < v_inv.cols(); ++i)
                if (v_inv(j, i) != 0)
                    v_inv(k, i) += q * v_inv(j, i);
        }
    }

    void negate_col(std::size_t j)
    {
        for (std::size_t i = 0; i < a.rows(); ++i)
            a(i, j) = -a(i, j);
        if (track) {
            for (std::size_t i = 0; i < v.rows(); ++i)
                v(i, j) = -v(i, j);
            for (std::size_t i = 0; i < v_inv.cols(); ++i)
                v_inv(j, i) = -v_inv(j, i);
        }
    }

    // Smallest nonzero |entry| in the trailing block starting at (t, t).
    bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const
    {
        bool found = false;
        Integer best;
        for (std::size_t i = t; i < a.rows(); ++i)
            for (std::size_t j = t; j < a.cols(); ++j) {
                if (a(i, j) == 0)
                    continue;
                Integer m = abs(a(i, j));
                if (!found || m < best) {
                    found = true;
                    best = std::move(m);
                    pr = i;
                    pc = j;
                }
            }
        return found;
    }

    std::vector<Integer> run()
    {
        std::vector<Integer> diag;
        const std::size_t limit = std::min(a.rows(), a.cols());
        for (std::size_t t = 0; t < limit; ++t) {
            std::size_t pr = 0, pc = 0;
            if (!find_pivot(t, pr, pc))
                break;
            swap_rows(t, pr);
            swap_cols(t, pc);
            for (;;) {
                bool dirty = false;
                for (std::size_t i = t + 1; i < a.rows(); ++i) {
                    if (a(i, t) == 0)
                        continue;
                    Integer q;
                    mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                    sub_row(i, t, q);
                    dirty = dirty || a(i, t) != 0;
                }
                for (std::size_t j = t + 1; j < a.cols(); ++j) {
                    if (a(t, j) == 0)
                        continue;
                    Integer q;
                    mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                    sub_col(j, t, q);
                    dirty = dirty || a(t, j) != 0;
                }
                if (dirty) {
                    // Move the smallest remainder in row/column t to the pivot.
                    std::size_t br = t, bc = t;
                    Integer best = abs(a(t, t));
                    for (std::size_t i = t + 1; i < a.rows(); ++i)
                        if (a(i, t) != 0 && abs(a(i, t)) < best) {
                            best = abs(a(i, t));
                            br = i;
                            bc = t;
                        }
                    for (std::size_t j = t + 1; j < a.cols(); ++j)
                        if (a(t, j) != 0 && abs(a(t, j)) < best) {
                            best = abs(a(t, j));
                            br = t;
                            bc = j;
                        }
                    swap_rows(t, br);
                    swap_cols(t, bc);
                    continue;
                }
                // Row and column are clear; enforce divisibility of the block.
                bool fixed = true;
                for (std::size_t i = t + 1; i < a.rows() && fixed; ++i)
                    for (std::size_t j = t + 1; j < a.cols(); ++j)
                        if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                            sub_row(t, i, Integer(-1));
                            fixed = false;
                            break;
                        }
                if (fixed)
                    break;
            }
            if (a(t, t) < 0)
                negate_col(t);
            diag.push_back(a(t, t));
        }
        return diag;
    }
};

Integer gcd_int(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

} // namespace

SnfResult smith_normal_form(const IntMatrix& m)
{
    SnfWork w{m, {}, {}, false};
    SnfResult r;
    r.invariant_factors = w.run();
    r.rank = r.invariant_factors.size();
    return r;
}

std::size_t rank_rational(const IntMatrix& m)
{
    // Fraction-free elimination with row content removal.
    IntMatrix a = m;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t p = rank;
        while (p < a.rows() && a(p, c) == 0)
            ++p;
        if (p == a.rows())
            continue;
        if (p != rank)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a(p, j), a(rank, j));
        for (std::size_t i = rank + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0)
                continue;
            const Integer g = gcd_int(a(i, c), a(rank, c));
            const Integer fi = a(rank, c) / g;
            const Integer fp = a(i, c) / g;
            Integer content = 0;
            for (std::size_t j = c; j < a.cols(); ++j) {
                a(i, j) = fi * a(i, j) - fp * a(rank, j);
                content = gcd_int(content, a(i, j));
            }
            if (content > 1)
                for (std::size_t j = c; j < a.cols(); ++j)
                    mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), content.get_mpz_t());
        }
        ++rank;
    }
    return rank;
}

bool is_prime(unsigned long n)
{
    if (n < 2)
        return false;
    for (unsigned long p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

std::size_t rank_mod_prime(const IntMatrix& m, unsigned long p)
{
    if (!is_prime(p))
        throw std::invalid_argument("rank_mod_prime: " + std::to_string(p) + " is not prime");
    using u128 = unsigned __int128;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<unsigned long> a(rows * cols);
    const Integer modulus(p);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Integer r;
            mpz_fdiv_r(r.get_mpz_t(), m(i, j).get_mpz_t(), modulus.get_mpz_t());
            a[i * cols + j] = r.get_ui();
        }
    auto mulmod = [p](unsigned long x, unsigned long y) {
        return static_cast<unsigned long>(static_cast<u128>(x) * y % p);
    };
    auto inv = [&](unsigned long x) {
        unsigned long result = 1, base = x, e = p - 2;
        while (e) {
            if (e & 1)
                result = mulmod(result, base);
            base = mulmod(base, base);
            e >>= 1;
        }
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv * cols + c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        for (std::size_t j = 0; j < cols; ++j)
            std::swap(a[piv * cols + j], a[rank * cols + j]);
        const unsigned long pinv = inv(a[rank * cols + c]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const unsigned long f = mulmod(a[i * cols + c], pinv);
            if (f == 0)
                continue;
            for (std::size_t j = c; j < cols; ++j) {
                const unsigned long sub = mulmod(f, a[rank * cols + j]);
                unsigned long& x = a[i * cols + j];
                x = x >= sub ? x - sub : x + p - sub;
            }
        }
        ++rank;
    }
    return rank;
}

namespace {

std::vector<IntMatrix> dense_differentials(const AomotoComplex& c)
{
    std::vector<IntMatrix> d;
    for (const auto& s : c.diff)
        d.emplace_back(s);
    return d;
}

} // namespace

CohomologyProfile cohomology_Q(const AomotoComplex& c)
{
    const auto d = dense_differentials(c);
    std::vector<std::size_t> ranks;
    for (const auto& m : d)
        ranks.push_back(rank_rational(m));
    CohomologyProfile out;
    for (std::size_t q = 0; q < c.bases.size(); ++q) {
        std::size_t dim = c.bases[q].size();
        if (q < ranks.size())
            dim -= ranks[q];
        if (q > 0)
            dim -= ranks[q - 1];
        out.dims.push_back(dim);
    }
    return out;
}

CohomologyProfile cohomology_mod_prime(const AomotoComplex& c, unsigned long p)
{
    const auto d = dense_differentials(c);
    std::vector<std::size_t> ranks;
    for (const auto& m : d)
        ranks.push_back(rank_mod_prime(m, p));
    CohomologyProfile out{CohomologyProfile::Ring::integers_mod, p, {}};
    for (std::size_t q = 0; q < c.bases.size(); ++q) {
        std::size_t dim = c.bases[q].size();
        if (q < ranks.size())
            dim -= ranks[q];
        if (q > 0)
            dim -= ranks[q - 1];
        out.dims.push_back(dim);
    }
    return out;
}

CohomologyProfile cohomology_modN(const AomotoComplex& c, unsigned long modulus)
{
    if (modulus < 2)
        throw std::invalid_argument("cohomology_modN: modulus must be at least 2");
    const Integer n(modulus);
    const auto d = dense_differentials(c);
    CohomologyProfile out{CohomologyProfile::Ring::integers_mod, modulus, {}};

    for (std::size_t q = 0; q < c.bases.size(); ++q) {
        const std::size_t dim_q = c.bases[q].size();
        if (dim_q == 0) {
            out.dims.push_back(0);
            continue;
        }
        // Cycles: K = {x : D^q x = 0 mod N} = v * diag(scale) * Z^dim_q.
        IntMatrix outgoing = q < d.size() ? d[q] : IntMatrix(0, dim_q);
        SnfWork w{outgoing, IntMatrix::identity(dim_q), IntMatrix::identity(dim_q), true};
        const std::vector<Integer> diag = w.run();
        std::vector<Integer> scale(dim_q, Integer(1));
        for (std::size_t i = 0; i < diag.size(); ++i)
            scale[i] = n / gcd_int(n, diag[i]);

        // Boundaries plus N * Z^dim_q, written in the basis of K.
        const std::size_t incoming_cols = q > 0 ? d[q - 1].cols() : 0;
        IntMatrix gens(dim_q, incoming_cols + dim_q);
        for (std::size_t i = 0; i < dim_q; ++i) {
            for (std::size_t j = 0; j < incoming_cols; ++j) {
                Integer acc = 0;
                for (std::size_t k = 0; k < dim_q; ++k)
                    if (d[q - 1](k, j) != 0)
                        acc += w.v_inv(i, k) * d[q - 1](k, j);
                gens(i, j) = acc;
            }
            for (std::size_t k = 0; k < dim_q; ++k)
                gens(i, incoming_cols + k) = w.v_inv(i, k) * n;
            for (std::size_t j = 0; j < gens.cols(); ++j) {
                if (!mpz_divisible_p(gens(i, j).get_mpz_t(), scale[i].get_mpz_t()))
                    throw std::logic_error("cohomology_modN: boundary outside the cycle lattice");
                mpz_divexact(gens(i, j).get_mpz_t(), gens(i, j).get_mpz_t(), scale[i].get_mpz_t());
            }
        }
        // H^q = K / L is finite (L contains N K); count its nontrivial cyclic factors.
        const SnfResult snf = smith_normal_form(gens);
        std::size_t generators = 0;
        for (const auto& f : snf.invariant_factors)
            if (f != 1)
                ++generators;
        out.dims.push_back(generators);
    }
    return out;
}

} // namespace arrcover
