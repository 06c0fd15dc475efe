#include "mathverify/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mathverify {

ValidationOutcome validate_dts(int n, int k, const IntMatrix& rows) {
    ValidationOutcome out;
    if (n < 1 || k < 1) {
        out.diagnostics.push_back("parameters must satisfy n >= 1 and k >= 1");
        return out;
    }
    if (static_cast<int>(rows.size()) != n) {
        out.diagnostics.push_back("expected " + std::to_string(n) + " rows, got " +
                                  std::to_string(rows.size()));
        return out;
    }
    bool shape_ok = true;
    for (int i = 0; i < n; ++i) {
        const auto& row = rows[i];
        if (static_cast<int>(row.size()) != k + 1) {
            out.diagnostics.push_back("row " + std::to_string(i) + " has " +
                                      std::to_string(row.size()) + " entries, expected " +
                                      std::to_string(k + 1));
            shape_ok = false;
            continue;
        }
        if (row[0] != 0) {
            out.diagnostics.push_back("row " + std::to_string(i) +
                                      " must start at 0 (normalization), got " +
                                      std::to_string(row[0]));
            shape_ok = false;
        }
        for (int j = 0; j + 1 <= k; ++j) {
            if (j + 1 < static_cast<int>(row.size()) && row[j] >= row[j + 1]) {
                out.diagnostics.push_back("row " + std::to_string(i) +
                                          " is not strictly increasing at position " +
                                          std::to_string(j + 1));
                shape_ok = false;
            }
        }
    }
    if (!shape_ok) return out;

    // all within-row differences, across all rows, must be distinct
    std::map<long long, std::pair<int, std::pair<int, int>>> seen;
    bool distinct = true;
    long long scope = 0;
    int reported = 0, suppressed = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= k; ++j) {
            scope = std::max(scope, rows[i][j]);
            for (int jp = 0; jp < j; ++jp) {
                long long d = rows[i][j] - rows[i][jp];
                auto [it, inserted] = seen.insert({d, {i, {jp, j}}});
                if (!inserted) {
                    const auto& first = it->second;
                    if (reported < 20) {
                        out.diagnostics.push_back(
                            "duplicate difference " + std::to_string(d) + ": rows " +
                            std::to_string(first.first) + " and " + std::to_string(i));
                        ++reported;
                    } else {
                        ++suppressed;
                    }
                    distinct = false;
                }
            }
        }
    }
    if (suppressed > 0)
        out.diagnostics.push_back("+" + std::to_string(suppressed) +
                                  " further duplicate differences");
    out.valid = distinct;
    out.metric = Rational(static_cast<long>(scope));
    if (!distinct) return out;
    out.diagnostics.push_back("valid (" + std::to_string(n) + "," + std::to_string(k) +
                              ")-DTS with scope " + std::to_string(scope));
    return out;
}

ValidationOutcome validate_hadamard(const IntMatrix& matrix) {
    ValidationOutcome out;
    const size_t n = matrix.size();
    if (n == 0) {
        out.diagnostics.push_back("empty matrix");
        return out;
    }
    for (size_t i = 0; i < n; ++i) {
        if (matrix[i].size() != n) {
            out.diagnostics.push_back("row " + std::to_string(i) + " has " +
                                      std::to_string(matrix[i].size()) +
                                      " entries, expected " + std::to_string(n));
            return out;
        }
        for (size_t j = 0; j < n; ++j)
            if (matrix[i][j] != 1 && matrix[i][j] != -1) {
                out.diagnostics.push_back("entry (" + std::to_string(i) + "," +
                                          std::to_string(j) + ") is " +
                                          std::to_string(matrix[i][j]) +
                                          ", must be +1 or -1");
                return out;
            }
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            long long dot = 0;
            for (size_t t = 0; t < n; ++t) dot += matrix[i][t] * matrix[j][t];
            long long want = i == j ? static_cast<long long>(n) : 0;
            if (dot != want) {
                out.diagnostics.push_back("rows " + std::to_string(i) + " and " +
                                          std::to_string(j) + " have dot product " +
                                          std::to_string(dot) + ", expected " +
                                          std::to_string(want));
                return out;
            }
        }
    out.valid = true;
    out.diagnostics.push_back("valid Hadamard matrix of order " + std::to_string(n));
    return out;
}

ValidationOutcome validate_mols(int order, const std::vector<IntMatrix>& squares) {
    ValidationOutcome out;
    if (order < 1) {
        out.diagnostics.push_back("order must be >= 1");
        return out;
    }
    const size_t n = static_cast<size_t>(order);
    for (size_t s = 0; s < squares.size(); ++s) {
        const auto& sq = squares[s];
        if (sq.size() != n) {
            out.diagnostics.push_back("square " + std::to_string(s) + " has " +
                                      std::to_string(sq.size()) + " rows, expected " +
                                      std::to_string(n));
            return out;
        }
        for (size_t i = 0; i < n; ++i) {
            if (sq[i].size() != n) {
                out.diagnostics.push_back("square " + std::to_string(s) + " row " +
                                          std::to_string(i) + " has wrong length");
                return out;
            }
            std::set<long long> row_syms, col_syms;
            for (size_t j = 0; j < n; ++j) {
                long long rv = sq[i][j], cv = sq[j][i];
                if (rv < 0 || rv >= order) {
                    out.diagnostics.push_back("square " + std::to_string(s) +
                                              " uses symbol " + std::to_string(rv) +
                                              " outside 0.." + std::to_string(order - 1));
                    return out;
                }
                row_syms.insert(rv);
                col_syms.insert(cv);
            }
            if (row_syms.size() != n || col_syms.size() != n) {
                out.diagnostics.push_back("square " + std::to_string(s) +
                                          " is not Latin at row/column " +
                                          std::to_string(i));
                return out;
            }
        }
    }
    for (size_t a = 0; a < squares.size(); ++a)
        for (size_t b = a + 1; b < squares.size(); ++b) {
            std::set<std::pair<long long, long long>> pairs;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    pairs.insert({squares[a][i][j], squares[b][i][j]});
            if (pairs.size() != n * n) {
                out.diagnostics.push_back("squares " + std::to_string(a) + " and " +
                                          std::to_string(b) + " are not orthogonal (" +
                                          std::to_string(pairs.size()) + " of " +
                                          std::to_string(n * n) +
                                          " superposition pairs distinct)");
                return out;
            }
        }
    out.valid = true;
    out.diagnostics.push_back("valid set of " + std::to_string(squares.size()) +
                              " mutually orthogonal Latin square(s) of order " +
                              std::to_string(order));
    return out;
}

ScoreResult score_against_baseline(const ValidationOutcome& outcome,
                                   const BaselineSpec& baseline) {
    ScoreResult result;
    result.diagnostics = outcome.diagnostics;
    if (!outcome.valid) {
        result.verdict = Verdict::fail;
        result.diagnostics.push_back("construction invalid; metric not scored");
        return result;
    }
    if (!outcome.metric) {
        result.verdict = Verdict::error;
        result.diagnostics.push_back("validator produced no metric to score");
        return result;
    }
    const Rational& m = *outcome.metric;
    const Rational& b = baseline.value;
    bool strictly_better =
        baseline.direction == Direction::minimize ? m < b : m > b;
    if (m == b) {
        result.verdict = Verdict::fail;
        result.diagnostics.push_back(
            "metric ties the baseline; strict improvement is required");
        return result;
    }
    if (!strictly_better) {
        result.verdict = Verdict::fail;
        result.diagnostics.push_back("metric " + m.to_string() +
                                     " does not improve on baseline " + b.to_string());
        return result;
    }
    result.verdict = Verdict::pass;
    if (!b.is_zero()) result.relative_improvement = ((m - b).abs() / b.abs());
    return result;
}

}  // namespace mathverify
