#include "support/oracles.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace coflag::testing {

std::vector<Monomial> monomials_of_degree(int arity, int degree) {
    std::vector<Monomial> out;
    std::vector<int> exps(static_cast<std::size_t>(arity), 0);
    // Odometer over exponent tuples summing to `degree`.
    auto recurse = [&](auto&& self, int position, int remaining) -> void {
        if (position == arity - 1) {
            exps[static_cast<std::size_t>(position)] = remaining;
            out.push_back(Monomial::from_exponents(exps));
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[static_cast<std::size_t>(position)] = e;
            self(self, position + 1, remaining - e);
        }
    };
    if (arity == 0) {
        if (degree == 0) out.push_back(Monomial(0));
        return out;
    }
    recurse(recurse, 0, degree);
    return out;
}

namespace {

using Row = std::vector<Rational>;

// Reduce `row` against the pivot rows (each normalized to pivot value 1);
// returns the reduced row.
void reduce_row(Row& row, const std::map<std::size_t, Row>& pivots) {
    for (const auto& [col, pivot_row] : pivots) {
        if (row[col] == 0) continue;
        Rational factor = row[col];
        for (std::size_t i = col; i < row.size(); ++i) {
            Rational delta = factor * pivot_row[i];
            row[i] -= delta;
        }
    }
}

std::size_t first_nonzero(const Row& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] != 0) return i;
    }
    return row.size();
}

}  // namespace

bool in_ideal_linear_algebra(const Polynomial& f, const std::vector<Polynomial>& generators) {
    if (f.is_zero()) return true;
    if (!f.is_homogeneous()) throw std::invalid_argument("oracle needs a homogeneous candidate");
    int arity = f.arity();
    int degree = f.total_degree();

    std::vector<Monomial> basis = monomials_of_degree(arity, degree);
    std::map<std::vector<int>, std::size_t> column;
    for (std::size_t i = 0; i < basis.size(); ++i) column[basis[i].exponents()] = i;

    auto to_row = [&](const Polynomial& p) {
        Row row(basis.size(), Rational(0));
        for (const Term& t : p.terms()) row[column.at(t.mono.exponents())] = t.coeff;
        return row;
    };

    std::map<std::size_t, Row> pivots;
    for (const Polynomial& g : generators) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) {
            throw std::invalid_argument("oracle needs homogeneous generators");
        }
        if (g.total_degree() > degree) continue;
        for (const Monomial& m : monomials_of_degree(arity, degree - g.total_degree())) {
            Row row = to_row(g.scaled_shift(Rational(1), m));
            reduce_row(row, pivots);
            std::size_t col = first_nonzero(row);
            if (col == row.size()) continue;
            Rational inv = 1 / row[col];
            for (std::size_t i = col; i < row.size(); ++i) {
                Rational scaled = row[i] * inv;
                row[i] = scaled;
            }
            pivots.emplace(col, std::move(row));
        }
    }
    Row target = to_row(f);
    reduce_row(target, pivots);
    return first_nonzero(target) == target.size();
}

namespace {

using Matrix = std::vector<int>;  // n*n row-major

Matrix identity_matrix(int n) {
    Matrix m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 1;
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b, int n) {
    Matrix c(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            int aik = a[static_cast<std::size_t>(i * n + k)];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) {
                c[static_cast<std::size_t>(i * n + j)] +=
                    aik * b[static_cast<std::size_t>(k * n + j)];
            }
        }
    }
    return c;
}

Matrix transposition(int n, int i) {  // swap coordinates i, i+1
    Matrix m = identity_matrix(n);
    m[static_cast<std::size_t>(i * n + i)] = 0;
    m[static_cast<std::size_t>((i + 1) * n + i + 1)] = 0;
    m[static_cast<std::size_t>(i * n + i + 1)] = 1;
    m[static_cast<std::size_t>((i + 1) * n + i)] = 1;
    return m;
}

}  // namespace

long long reflection_group_order(char family, int rank) {
    int n = 0;
    std::vector<Matrix> gens;
    if (family == 'A') {
        n = rank + 1;  // permutations of n points
        for (int i = 0; i + 1 < n; ++i) gens.push_back(transposition(n, i));
    } else if (family == 'B') {
        n = rank;
        for (int i = 0; i + 1 < n; ++i) gens.push_back(transposition(n, i));
        Matrix flip = identity_matrix(n);
        flip[static_cast<std::size_t>((n - 1) * n + (n - 1))] = -1;
        gens.push_back(flip);
    } else if (family == 'D') {
        n = rank;
        for (int i = 0; i + 1 < n; ++i) gens.push_back(transposition(n, i));
        // swap the last two coordinates and negate both
        Matrix r = identity_matrix(n);
        r[static_cast<std::size_t>((n - 2) * n + (n - 2))] = 0;
        r[static_cast<std::size_t>((n - 1) * n + (n - 1))] = 0;
        r[static_cast<std::size_t>((n - 2) * n + (n - 1))] = -1;
        r[static_cast<std::size_t>((n - 1) * n + (n - 2))] = -1;
        gens.push_back(r);
    } else {
        throw std::invalid_argument("reflection oracle supports families A, B and D");
    }

    std::set<Matrix> seen{identity_matrix(n)};
    std::vector<Matrix> frontier{identity_matrix(n)};
    while (!frontier.empty()) {
        std::vector<Matrix> next;
        for (const Matrix& m : frontier) {
            for (const Matrix& g : gens) {
                Matrix prod = multiply(m, g, n);
                if (seen.insert(prod).second) next.push_back(std::move(prod));
            }
        }
        frontier = std::move(next);
    }
    return static_cast<long long>(seen.size());
}

Polynomial random_homogeneous(std::mt19937_64& rng, int arity, int degree) {
    std::vector<Monomial> candidates = monomials_of_degree(arity, degree);
    std::uniform_int_distribution<int> keep(0, 1);
    std::uniform_int_distribution<int> coeff_dist(1, 6);
    std::vector<Term> terms;
    while (terms.empty()) {
        for (const Monomial& m : candidates) {
            if (keep(rng) == 0) continue;
            int c = coeff_dist(rng);  // 1..6 -> {-3..-1, 1..3}
            int value = c <= 3 ? c : 3 - c;
            terms.push_back({Rational(value), m});
        }
    }
    return Polynomial::from_terms(arity, std::move(terms));
}

}  // namespace coflag::testing
