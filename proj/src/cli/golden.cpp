#include "smh/cli/golden.hpp"

namespace smh::cli {

const std::vector<GoldenTable>& golden_tables()
{
    static const std::vector<GoldenTable> tables = {
        {"table1", "table1", false,
         {{150, {0.999125, 0.997952, 0.99636, 0.994346}},
          {250, {0.999681, 0.999254, 0.998672, 0.997937}},
          {500, {0.999919, 0.999811, 0.999665, 0.999479}}},
         {}},
        {"table2", "table2", true,
         {{150, {6.27524, 9.59956, 12.7982, 15.9503}},
          {250, {6.31687, 9.66386, 12.885, 16.0602}},
          {500, {6.34839, 9.71233, 12.9501, 16.1421}}},
         {6.38016, 9.76102, 13.0152, 16.2235}},
        {"table3", "table3", false,
         {{150, {0.999286, 0.998169, 0.996593, 0.994574}},
          {250, {1.0016, 0.999497, 0.998915, 0.998176}},
          {500, {1.0014, 0.999883, 0.999739, 0.999554}}},
         {}},
        {"table4", "table4", true,
         {{150, {9.07735, 12.382, 15.6257}},
          {250, {7.92964, 11.6463, 15.1011}},
          {500, {7.6415, 11.4238, 14.9355}}},
         {7.64622, 11.4432, 14.9699}},
        {"table5", "table5", false,
         {{150, {0.999991, 0.999585, 0.99854, 0.99778}},
          {250, {0.999997, 0.999871, 0.999585, 0.999142}},
          {500, {0.999999, 0.999968, 0.99985, 0.999786}}},
         {}},
        {"table6", "table6", true,
         {{150, {0.649565, 4.02672, 7.20558, 10.3659}},
          {250, {0.64887, 4.02249, 7.19831, 10.3561}},
          {500, {0.64853, 4.01929, 7.19273, 10.3484}}},
         {0.648561, 4.01985, 7.19169, 10.3446}},
        {"table7", "table7", false,
         {{150, {1.00042, 0.999978, 0.999306, 0.996412}},
          {250, {1.00009, 0.999991, 0.999739, 0.99931}},
          {500, {1.000001, 0.999999, 0.999928, 0.999818}}},
         {}},
        {"table8", "table8", true,
         {{150, {1.77464, 6.0132, 9.53661}},
          {250, {1.10344, 5.71202, 9.35539}},
          {500, {1.00403, 5.58651, 9.27349}}},
         {0.903528, 5.34057, 9.07889}},
    };
    return tables;
}

} // namespace smh::cli
