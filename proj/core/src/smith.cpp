#include "nmsh/smith.hpp"

#include <optional>
#include <utility>

namespace nmsh {

namespace {

struct Position {
    std::size_t row;
    std::size_t col;
};

// Least |entry| among nonzero entries of the block [t.., t..]; row-major scan
// with strict comparison gives the lowest-row, lowest-column tie break.
std::optional<Position> find_pivot(const IntegerMatrix& a, std::size_t t)
{
    std::optional<Position> best;
    Integer best_abs;
    for (std::size_t i = t; i < a.rows(); ++i) {
        for (std::size_t j = t; j < a.cols(); ++j) {
            const Integer& x = a(i, j);
            if (sgn(x) == 0) continue;
            if (!best || mpz_cmpabs(x.get_mpz_t(), best_abs.get_mpz_t()) < 0) {
                best = Position{i, j};
                best_abs = abs(x);
            }
        }
    }
    return best;
}

// Finds an entry of the trailing block not divisible by the pivot at (t, t).
std::optional<std::size_t> find_indivisible_row(const IntegerMatrix& a, std::size_t t)
{
    const Integer& pivot = a(t, t);
    for (std::size_t i = t + 1; i < a.rows(); ++i) {
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
            if (sgn(a(i, j)) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), pivot.get_mpz_t())) return i;
        }
    }
    return std::nullopt;
}

class SmithReducer {
public:
    explicit SmithReducer(const IntegerMatrix& m)
        : a_(m), u_(IntegerMatrix::identity(m.rows())), v_(IntegerMatrix::identity(m.cols()))
    {
    }

    SmithDecomposition run() &&
    {
        const std::size_t limit = std::min(a_.rows(), a_.cols());
        std::size_t t = 0;
        for (; t < limit; ++t) {
            if (!reduce_block(t)) break;
            if (sgn(a_(t, t)) < 0) {
                a_.negate_row(t);
                u_.negate_row(t);
            }
        }

        SmithDecomposition out;
        out.divisors.reserve(t);
        for (std::size_t i = 0; i < t; ++i) out.divisors.push_back(a_(i, i));
        out.s = std::move(a_);
        out.u = std::move(u_);
        out.v = std::move(v_);
        return out;
    }

private:
    // Leaves a pivot at (t, t) that is alone in its row and column and divides
    // every entry of the trailing block. Returns false if the block is zero.
    bool reduce_block(std::size_t t)
    {
        for (;;) {
            const auto pivot = find_pivot(a_, t);
            if (!pivot) return false;
            move_to_diagonal(*pivot, t);

            if (!clear_column(t) || !clear_row(t)) continue;

            if (const auto row = find_indivisible_row(a_, t)) {
                a_.add_row_multiple(t, *row, 1);
                u_.add_row_multiple(t, *row, 1);
                continue;
            }
            return true;
        }
    }

    void move_to_diagonal(Position p, std::size_t t)
    {
        a_.swap_rows(t, p.row);
        u_.swap_rows(t, p.row);
        a_.swap_cols(t, p.col);
        v_.swap_cols(t, p.col);
    }

    // True when every entry below the pivot became zero.
    bool clear_column(std::size_t t)
    {
        bool clean = true;
        for (std::size_t i = t + 1; i < a_.rows(); ++i) {
            if (sgn(a_(i, t)) == 0) continue;
            const Integer q = -(a_(i, t) / a_(t, t));
            a_.add_row_multiple(i, t, q);
            u_.add_row_multiple(i, t, q);
            clean = clean && sgn(a_(i, t)) == 0;
        }
        return clean;
    }

    bool clear_row(std::size_t t)
    {
        bool clean = true;
        for (std::size_t j = t + 1; j < a_.cols(); ++j) {
            if (sgn(a_(t, j)) == 0) continue;
            const Integer q = -(a_(t, j) / a_(t, t));
            a_.add_col_multiple(j, t, q);
            v_.add_col_multiple(j, t, q);
            clean = clean && sgn(a_(t, j)) == 0;
        }
        return clean;
    }

    IntegerMatrix a_;
    IntegerMatrix u_;
    IntegerMatrix v_;
};

} // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m)
{
    return SmithReducer(m).run();
}

std::vector<Integer> elementary_divisors(const IntegerMatrix& m)
{
    return smith_normal_form(m).divisors;
}

} // namespace nmsh
