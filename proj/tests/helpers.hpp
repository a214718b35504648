#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cogmap/modelio.hpp"
#include "oracle.hpp"

namespace testutil {

inline cogmap::ConceptSpace space_n(std::size_t n, const std::string& prefix = "c") {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
    return cogmap::ConceptSpace(labels);
}

inline cogmap::StateVector seed_at(const cogmap::ConceptSpace& space,
                                   std::initializer_list<std::size_t> on) {
    return cogmap::StateVector::seed(space, std::vector<std::size_t>(on));
}

// "11010" -> StateVector (no clamps).
inline cogmap::StateVector sv(const cogmap::ConceptSpace& space, std::string_view bits) {
    std::vector<std::uint8_t> values;
    for (char c : bits) values.push_back(c == '1' ? 1 : 0);
    return cogmap::StateVector(space, values);
}

inline std::string bits(const cogmap::StateVector& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += s.value(i) ? '1' : '0';
    return out;
}

inline std::vector<std::string> term_names(const cogmap::LinguisticState& s) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s.term(i));
    return out;
}

inline oracle::Mat to_oracle(const cogmap::ConnectionMatrix& m) {
    oracle::Mat out(m.size(), oracle::Vec(m.size(), 0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = static_cast<int>(m.at(i, j));
    }
    return out;
}

inline oracle::Mat to_oracle(const cogmap::RelationalMatrix& m) {
    oracle::Mat out(m.rows(), oracle::Vec(m.cols(), 0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = static_cast<int>(m.at(i, j));
    }
    return out;
}

inline oracle::Vec to_oracle(const cogmap::StateVector& s) {
    oracle::Vec out;
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s.value(i));
    return out;
}

inline oracle::Vec to_oracle_values(const cogmap::LinguisticState& s) {
    oracle::Vec out;
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back(static_cast<int>(s.value(i)));
    return out;
}

// Random {-1,0,1} square matrix with zero diagonal.
inline cogmap::ConnectionMatrix random_simple(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> entry(-1, 1);
    std::vector<std::int64_t> entries(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) entries[i * n + j] = entry(rng);
        }
    }
    return cogmap::ConnectionMatrix(space_n(n), cogmap::MatrixKind::simple, entries);
}

inline cogmap::ConnectionMatrix random_positive(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> entry(0, 1);
    std::vector<std::int64_t> entries(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) entries[i * n + j] = entry(rng);
        }
    }
    return cogmap::ConnectionMatrix(space_n(n), cogmap::MatrixKind::positive, entries);
}

inline cogmap::RelationalMatrix random_relational(std::mt19937& rng, std::size_t n,
                                                  std::size_t m) {
    std::uniform_int_distribution<int> entry(-1, 1);
    std::vector<std::int64_t> entries(n * m, 0);
    for (auto& e : entries) e = entry(rng);
    return cogmap::RelationalMatrix(space_n(n, "d"), space_n(m, "r"), entries);
}

// Random nonzero binary seed over n coordinates.
inline std::vector<std::size_t> random_seed_set(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> flip(0, 1);
    std::vector<std::size_t> on;
    while (on.empty()) {
        on.clear();
        for (std::size_t i = 0; i < n; ++i) {
            if (flip(rng)) on.push_back(i);
        }
    }
    return on;
}

} // namespace testutil
