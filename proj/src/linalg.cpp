#include "hspoly/linalg.hpp"

#include "hspoly/errors.hpp"

#include <utility>

namespace hspoly {

namespace {

struct Echelon {
    std::vector<std::vector<Int>> a;          // row echelon, fraction-free
    std::vector<std::pair<int, int>> pivots;  // (row, col) in elimination order
};

Echelon bareiss(const RationalMatrix& m) {
    Echelon e;
    e.a.assign(static_cast<size_t>(m.rows), std::vector<Int>(static_cast<size_t>(m.cols), Int(0)));
    for (int i = 0; i < m.rows; ++i) {
        Int den = 1;
        for (int j = 0; j < m.cols; ++j)
            den = lcm(den, denominator(m.at(i, j)));
        for (int j = 0; j < m.cols; ++j) {
            const Rational& q = m.at(i, j);
            e.a[i][j] = numerator(q) * (den / denominator(q));
        }
    }
    Int prev = 1;
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (e.a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(e.a[piv], e.a[rank]);
        for (int i = rank + 1; i < m.rows; ++i) {
            for (int j = col + 1; j < m.cols; ++j) {
                Int num = e.a[rank][col] * e.a[i][j] - e.a[i][col] * e.a[rank][j];
                Int q, r;
                divide_qr(num, prev, q, r);
                if (r != 0)
                    throw error("bareiss: non-exact division");
                e.a[i][j] = std::move(q);
            }
            e.a[i][col] = 0;
        }
        prev = e.a[rank][col];
        e.pivots.emplace_back(rank, col);
        ++rank;
    }
    return e;
}

}  // namespace

int exact_rank(const RationalMatrix& m) {
    return static_cast<int>(bareiss(m).pivots.size());
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    const Echelon e = bareiss(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
    for (const auto& [r, c] : e.pivots)
        is_pivot[static_cast<size_t>(c)] = true;

    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)])
            continue;
        std::vector<Rational> v(static_cast<size_t>(m.cols), Rational(0));
        v[static_cast<size_t>(f)] = 1;
        for (size_t pi = e.pivots.size(); pi-- > 0;) {
            const auto [pr, pc] = e.pivots[pi];
            Rational s(0);
            for (int j = pc + 1; j < m.cols; ++j)
                if (e.a[pr][j] != 0 && v[static_cast<size_t>(j)] != 0)
                    s += Rational(e.a[pr][j]) * v[static_cast<size_t>(j)];
            v[static_cast<size_t>(pc)] = -s / Rational(e.a[pr][pc]);
        }
        // paranoid re-check against the original rational matrix
        for (int i = 0; i < m.rows; ++i) {
            Rational s(0);
            for (int j = 0; j < m.cols; ++j)
                if (v[static_cast<size_t>(j)] != 0)
                    s += m.at(i, j) * v[static_cast<size_t>(j)];
            if (s != 0)
                throw error("nullspace: verification failed");
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hspoly
