#include "table_rows.hpp"

namespace hsc::cli {

namespace {

constexpr TableInput kRows[] = {
    {4, "11"},    {5, "14"},    {6, "17"},    {7, "20"},    {7, "19/2"},  {8, "23"},    {8, "7"},
    {9, "26"},    {9, "25/2"},  {10, "29"},   {10, "9"},    {11, "32"},   {11, "31/2"}, {11, "10"},
    {11, "29/4"}, {12, "35"},   {13, "38"},   {13, "37/2"}, {13, "12"},   {13, "35/4"}, {14, "41"},
    {14, "13"},   {14, "37/5"}, {15, "44"},   {15, "43/2"}, {15, "41/4"}, {16, "47"},   {16, "15"},
    {16, "43/5"}, {17, "50"},   {17, "49/2"}, {17, "16"},   {17, "47/4"}, {17, "46/5"}, {17, "15/2"},
    {18, "53"},   {18, "49/5"}, {19, "56"},   {19, "55/2"}, {19, "18"},   {19, "53/4"}, {19, "52/5"},
    {19, "17/2"}, {19, "50/7"}, {20, "59"},   {20, "19"},   {20, "53/7"}, {21, "62"},   {21, "61/2"},
    {21, "59/4"}, {21, "58/5"}, {21, "55/8"}, {22, "65"},   {22, "21"},   {22, "61/5"}, {22, "59/7"},
    {23, "68"},   {23, "67/2"}, {23, "22"},   {23, "65/4"}, {23, "64/5"}, {23, "21/2"}, {23, "62/7"},
    {23, "61/8"}, {24, "71"},   {24, "67/5"}, {24, "65/7"},
};

}  // namespace

std::span<const TableInput> published_rows() { return kRows; }

}  // namespace hsc::cli
