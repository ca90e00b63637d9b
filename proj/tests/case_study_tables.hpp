#pragma once

// Reference tables of the photovoltaic-cell case study, transcribed as printed
// (two decimals, three for similarity scores).

#include <array>
#include <string_view>

namespace cpfuzzy::testdata {

struct Pair {
  double mu, nu;
};
struct Triple {
  double mu, nu, r;
};

// [expert][alternative][criterion], after complementing the cost criteria C1, C4, C5.
inline constexpr std::array<std::array<std::array<Pair, 5>, 5>, 3> kNormalized = {{
    {{
        {{{0.4, 0.8}, {0.8, 0.6}, {0.6, 0.7}, {0.3, 0.8}, {0.5, 0.6}}},
        {{{0.7, 0.5}, {0.9, 0.2}, {0.8, 0.5}, {0.3, 0.6}, {0.6, 0.5}}},
        {{{0.3, 0.4}, {0.3, 0.7}, {0.7, 0.4}, {0.6, 0.4}, {0.4, 0.5}}},
        {{{0.6, 0.6}, {0.7, 0.5}, {0.7, 0.2}, {0.4, 0.6}, {0.3, 0.7}}},
        {{{0.5, 0.7}, {0.6, 0.4}, {0.9, 0.3}, {0.6, 0.7}, {0.1, 0.7}}},
    }},
    {{
        {{{0.3, 0.9}, {0.7, 0.6}, {0.5, 0.8}, {0.3, 0.6}, {0.3, 0.6}}},
        {{{0.7, 0.4}, {0.9, 0.2}, {0.8, 0.1}, {0.3, 0.5}, {0.3, 0.5}}},
        {{{0.3, 0.6}, {0.7, 0.7}, {0.7, 0.6}, {0.4, 0.4}, {0.4, 0.3}}},
        {{{0.4, 0.8}, {0.7, 0.5}, {0.6, 0.2}, {0.4, 0.7}, {0.4, 0.7}}},
        {{{0.2, 0.7}, {0.8, 0.2}, {0.8, 0.4}, {0.6, 0.6}, {0.6, 0.6}}},
    }},
    {{
        {{{0.6, 0.8}, {0.7, 0.6}, {0.5, 0.8}, {0.5, 0.5}, {0.1, 0.6}}},
        {{{0.6, 0.5}, {0.9, 0.2}, {0.8, 0.1}, {0.3, 0.5}, {0.3, 0.4}}},
        {{{0.4, 0.7}, {0.7, 0.5}, {0.6, 0.1}, {0.2, 0.9}, {0.6, 0.5}}},
        {{{0.2, 0.9}, {0.5, 0.6}, {0.6, 0.2}, {0.1, 0.6}, {0.4, 0.7}}},
        {{{0.1, 0.6}, {0.8, 0.2}, {0.9, 0.2}, {0.6, 0.5}, {0.4, 0.6}}},
    }},
}};

// Quadratic-mean centers.
inline constexpr std::array<std::array<Pair, 5>, 5> kCenters = {{
    {{{0.45, 0.83}, {0.73, 0.6}, {0.54, 0.77}, {0.38, 0.64}, {0.34, 0.6}}},
    {{{0.67, 0.47}, {0.9, 0.2}, {0.8, 0.3}, {0.3, 0.54}, {0.42, 0.47}}},
    {{{0.34, 0.58}, {0.6, 0.64}, {0.67, 0.42}, {0.43, 0.61}, {0.48, 0.44}}},
    {{{0.43, 0.78}, {0.64, 0.54}, {0.63, 0.2}, {0.33, 0.64}, {0.37, 0.7}}},
    {{{0.32, 0.67}, {0.74, 0.28}, {0.87, 0.31}, {0.6, 0.6}, {0.42, 0.64}}},
}};

// Radii.
inline constexpr std::array<std::array<double, 5>, 5> kRadii = {{
    {{0.16, 0.07, 0.09, 0.19, 0.24}},
    {{0.08, 0.0, 0.2, 0.06, 0.18}},
    {{0.18, 0.3, 0.33, 0.37, 0.16}},
    {{0.26, 0.15, 0.07, 0.23, 0.07}},
    {{0.23, 0.18, 0.12, 0.1, 0.32}},
}};

inline constexpr std::array<std::string_view, 4> kOperators = {"cpwa_q", "cpwa_p", "cpwg_q", "cpwg_p"};

// Aggregated values: [operator][alternative], operators in kOperators order.
inline constexpr std::array<std::array<Triple, 5>, 4> kAggregated = {{
    {{{0.59, 0.66, 0.11}, {0.78, 0.32, 0.0}, {0.53, 0.55, 0.25}, {0.54, 0.56, 0.14}, {0.66, 0.43, 0.18}}},
    {{{0.59, 0.66, 0.13}, {0.78, 0.32, 0.11}, {0.53, 0.55, 0.27}, {0.54, 0.56, 0.17}, {0.66, 0.43, 0.22}}},
    {{{0.52, 0.69, 0.11}, {0.65, 0.38, 0.0}, {0.5, 0.57, 0.25}, {0.49, 0.63, 0.14}, {0.56, 0.52, 0.18}}},
    {{{0.52, 0.69, 0.13}, {0.65, 0.38, 0.11}, {0.5, 0.57, 0.27}, {0.49, 0.63, 0.17}, {0.56, 0.52, 0.22}}},
}};

// Similarity to <1, 0; 1>.
inline constexpr std::array<std::array<double, 5>, 4> kSimilarity = {{
    {{0.325, 0.493, 0.465, 0.411, 0.555}},
    {{0.377, 0.548, 0.475, 0.425, 0.571}},
    {{0.301, 0.473, 0.429, 0.328, 0.468}},
    {{0.311, 0.528, 0.439, 0.343, 0.488}},
}};

// Rankings.
inline constexpr std::array<std::string_view, 4> kRankings = {
    "A1 < A4 < A3 < A2 < A5",
    "A1 < A4 < A3 < A2 < A5",
    "A1 < A4 < A3 < A5 < A2",
    "A1 < A4 < A3 < A5 < A2",
};

inline constexpr std::array<double, 5> kWeights = {0.2, 0.4, 0.1, 0.1, 0.2};

}  // namespace cpfuzzy::testdata
