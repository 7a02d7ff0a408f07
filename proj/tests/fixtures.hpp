// Harmonic knots with (a-1)(b-1) <= 30: fraction and name per row.
#pragma once

#include <string>
#include <vector>

namespace fixtures {

struct Row {
  long long a, b, c;
  long long alpha, beta;  // 0/0 when no fraction is printed
  std::string name;
};

inline const std::vector<Row>& table() {
  static const std::vector<Row> rows = {
      {3, 4, 5, 3, 1, "3_1"},          {3, 5, 7, 5, 2, "4_1"},          {3, 7, 8, 5, 1, "5_1"},
      {3, 7, 11, 13, 5, "6_3"},        {3, 8, 13, 21, 8, "7_7"},        {3, 10, 11, 7, 1, "7_1"},
      {3, 10, 17, 55, 21, "9_31"},     {3, 11, 13, 17, 4, "8_3"},       {3, 11, 16, 39, 14, "9_17"},
      {3, 11, 19, 89, 34, "10_45"},    {3, 13, 14, 9, 1, "9_1"},        {3, 13, 17, 53, 23, "10_28"},
      {3, 13, 20, 105, 41, "11a175"},  {3, 13, 23, 233, 89, "12a499"},  {3, 14, 19, 77, 34, "11a119"},
      {3, 14, 25, 377, 144, "13a1739"}, {3, 16, 17, 11, 1, "11a367"},   {3, 16, 23, 187, 67, "13a2124"},
      {3, 16, 29, 987, 377, "15a39533"},
      {4, 5, 7, 7, 2, "5_2"},          {4, 5, 11, 11, 3, "6_2"},        {4, 7, 9, 17, 5, "7_5"},
      {4, 7, 13, 23, 5, "8_7"},        {4, 7, 17, 41, 11, "9_20"},      {4, 9, 11, 41, 12, "9_18"},
      {4, 9, 19, 89, 25, "11a180"},    {4, 9, 23, 153, 41, "12a541"},   {4, 11, 13, 99, 29, "11a236"},
      {4, 11, 17, 113, 31, "12a758"},  {4, 11, 21, 187, 41, "13a2679"}, {4, 11, 25, 329, 87, "14a7552"},
      {4, 11, 29, 571, 153, "15a42637"},
      {5, 6, 7, 7, 4, "5_2"},          {5, 6, 13, 0, 0, "10_159"},      {5, 6, 19, 0, 0, "10_116"},
      {5, 7, 8, 5, 2, "4_1"},          {5, 7, 9, 13, 8, "6_3"},         {5, 7, 11, 0, 0, "4_1#4_1"},
      {5, 7, 13, 0, 0, "12n356"},      {5, 7, 16, 0, 0, "12n798"},      {5, 7, 18, 0, 0, "12n321"},
      {5, 7, 23, 0, 0, "12a960"},      {5, 8, 9, 13, 4, "7_3"},         {5, 8, 11, 21, 13, "7_7"},
      {5, 8, 17, 0, 0, "14n22712"},    {5, 8, 19, 0, 0, "14n26120"},    {5, 8, 27, 0, 0, "14a19221"},
      {6, 7, 11, 0, 0, "10_134"},      {6, 7, 17, 0, 0, "15n42918"},    {6, 7, 23, 0, 0, "15n165258"},
      {6, 7, 29, 0, 0, "15a81117"},
  };
  return rows;
}

}  // namespace fixtures
