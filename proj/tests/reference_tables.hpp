// Reference values: the p = 2 xi grids for n = 1..8, the three n = 6 alpha grids
// and the triangulation census by type for n = 3..16. Grids are row-major, -1 marks a blank
// (structurally zero) cell.
#pragma once

#include <utility>
#include <vector>

namespace icf::reference {

using Grid = std::vector<std::vector<long>>;

inline const std::vector<Grid>& xi_grids() {
  static const std::vector<Grid> grids = {
      {{1}},
      {{-1, 1}, {1, -1}},
      {{-1, 1}, {1, 3}},
      {{-1, -1, 1}, {-1, 8, 2}, {1, 2, -1}},
      {{-1, -1, 1}, {-1, 5, 15}, {1, 15, 5}},
      {{-1, -1, -1, 1}, {-1, -1, 27, 8}, {-1, 27, 54, 3}, {1, 8, 3, -1}},
      {{-1, -1, -1, 1}, {-1, -1, 14, 42}, {-1, 14, 168, 70}, {1, 42, 70, 7}},
      {{-1, -1, -1, -1, 1},
       {-1, -1, -1, 64, 20},
       {-1, -1, 200, 400, 30},
       {-1, 64, 400, 192, 4},
       {1, 20, 30, 4, -1}},
  };
  return grids;
}

struct AlphaGrid {
  std::vector<int> rho;
  Grid cells;
};

inline const std::vector<AlphaGrid>& alpha_grids() {
  static const std::vector<AlphaGrid> grids = {
      {{3, 0, 0},
       {{-1, -1, 81, 300, 81},
        {-1, 135, 1350, 1350, 135},
        {18, 540, 1458, 540, 18},
        {10, 81, 81, 10, -1},
        {-1, -1, -1, -1, -1}}},
      {{2, 1, 0},
       {{-1, -1, 55, 140, 15},
        {-1, 145, 1150, 786, 31},
        {34, 860, 1830, 460, 6},
        {50, 339, 265, 22, -1},
        {-1, -1, -1, -1, -1}}},
      {{1, 1, 1},
       {{-1, -1, 10, 64, 10},
        {-1, 32, 640, 640, 32},
        {10, 640, 2000, 640, 10},
        {64, 640, 640, 64, -1},
        {10, 32, 10, -1, -1}}},
  };
  return grids;
}

struct CensusRow {
  int n;
  std::vector<int> type;
  long count;
};

inline const std::vector<CensusRow>& triangulation_census() {
  static const std::vector<CensusRow> rows = {
      {3, {1, 1, 1}, 1},
      {4, {2, 1, 1}, 2},
      {5, {2, 2, 1}, 5},
      {6, {3, 2, 1}, 6},       {6, {2, 2, 2}, 8},
      {7, {3, 3, 1}, 7},       {7, {3, 2, 2}, 35},
      {8, {4, 3, 1}, 8},       {8, {4, 2, 2}, 16},      {8, {3, 3, 2}, 108},
      {9, {4, 4, 1}, 9},       {9, {4, 3, 2}, 252},     {9, {3, 3, 3}, 168},
      {10, {5, 4, 1}, 10},     {10, {5, 3, 2}, 100},    {10, {4, 4, 2}, 320},   {10, {4, 3, 3}, 1000},
      {11, {5, 5, 1}, 11},     {11, {5, 4, 2}, 660},    {11, {5, 3, 3}, 891},   {11, {4, 4, 3}, 3300},
      {12, {6, 5, 1}, 12},     {12, {6, 4, 2}, 240},    {12, {6, 3, 3}, 294},   {12, {5, 5, 2}, 750},
      {12, {5, 4, 3}, 10500},  {12, {4, 4, 4}, 5000},
      {13, {6, 6, 1}, 13},     {13, {6, 5, 2}, 1430},   {13, {6, 4, 3}, 8008},  {13, {5, 5, 3}, 14300},
      {13, {5, 4, 4}, 35035},
      {14, {7, 6, 1}, 14},     {14, {7, 5, 2}, 490},    {14, {7, 4, 3}, 2352},  {14, {6, 6, 2}, 1512},
      {14, {6, 5, 3}, 39690},  {14, {6, 4, 4}, 43904},  {14, {5, 5, 4}, 120050},
      {15, {7, 7, 1}, 15},     {15, {7, 6, 2}, 2730},   {15, {7, 5, 3}, 27300}, {15, {7, 4, 4}, 28080},
      {15, {6, 6, 3}, 47775},  {15, {6, 5, 4}, 458640}, {15, {5, 5, 5}, 178360},
      {16, {8, 7, 1}, 16},     {16, {8, 6, 2}, 896},    {16, {8, 5, 3}, 7392},  {16, {8, 4, 4}, 7200},
      {16, {7, 7, 2}, 2744},   {16, {7, 6, 3}, 120736}, {16, {7, 5, 4}, 493920},
      {16, {6, 6, 4}, 658560}, {16, {6, 5, 5}, 1382976},
  };
  return rows;
}

}  // namespace icf::reference
