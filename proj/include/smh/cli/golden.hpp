#pragma once

#include <string>
#include <vector>

namespace smh::cli {

struct GoldenRow
{
    int n = 0;
    std::vector<double> values; ///< ordered y_{n,1}, y_{n,2}, ... (or their scaled images)
};

/// One published table. Raw tables list the largest zeros; scaled tables list
/// n sqrt(2(1 - y)) for the zeros paired with the limit function, followed by
/// the limit zeros.
struct GoldenTable
{
    std::string id;
    std::string preset;
    bool scaled = false;
    std::vector<GoldenRow> rows;
    std::vector<double> limit;
};

const std::vector<GoldenTable>& golden_tables();

} // namespace smh::cli
