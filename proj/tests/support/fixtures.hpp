#pragma once

// Frozen expected values for the five worked semigroups exercised throughout
// the suite.  The gap lists were computed with an independent implementation
// and are pinned here as literals; the strata and generator lists below were
// derived the same way.  Tests compare the library against these literals,
// never against the library's own output.

#include <vector>

#include <lipsat/types.hpp>

namespace fixtures {

using lipsat::Exponent;

// --- <6, 25> -----------------------------------------------------------------

inline const std::vector<Exponent> kGens_6_25 = {6, 25};

inline const std::vector<Exponent> kGaps_6_25 = {
    1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 13, 14, 15, 16, 17, 19,
    20, 21, 22, 23, 26, 27, 28, 29, 32, 33, 34, 35, 38, 39, 40, 41,
    44, 45, 46, 47, 51, 52, 53, 57, 58, 59, 63, 64, 65, 69, 70, 71,
    76, 77, 82, 83, 88, 89, 94, 95, 101, 107, 113, 119
};

inline const std::vector<Exponent> kPartialGcds_6_25 = {6, 1};
inline constexpr int kR_6_25 = 2;
inline const std::vector<Exponent> kLTildeR_6_25 = {26, 27, 28, 29};
inline const std::vector<Exponent> kNewExponents_6_25 = {26, 27, 28, 29};
inline const std::vector<Exponent> kNewGenerators_6_25 = {26, 27, 28, 29};
inline const std::vector<Exponent> kSaturatedGens_6_25 = {6, 25, 26, 27, 28, 29};

// --- <9, 12, 22> ---------------------------------------------------------------

inline const std::vector<Exponent> kGens_9_12_22 = {9, 12, 22};

inline const std::vector<Exponent> kGaps_9_12_22 = {
    1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 13, 14, 15, 16, 17, 19,
    20, 23, 25, 26, 28, 29, 32, 35, 37, 38, 41, 47, 50, 59
};

inline const std::vector<Exponent> kPartialGcds_9_12_22 = {9, 3, 1};
inline constexpr int kR_9_12_22 = 3;
inline const std::vector<std::vector<Exponent>> kL_9_12_22 = {{}, {15}};
inline const std::vector<std::vector<Exponent>> kLTrunc_9_12_22 = {{}, {15}};
inline const std::vector<std::vector<Exponent>> kLTilde_9_12_22 = {
    {13, 14, 15, 16, 17, 19, 20},     // window above 12
    {23, 25, 26, 28, 29}              // window above 22
};
inline const std::vector<Exponent> kNewExponents_9_12_22 = {15, 23, 25, 26, 28, 29};
inline const std::vector<Exponent> kNewGenerators_9_12_22 = {15, 23, 25, 26, 28, 29};
inline const std::vector<Exponent> kSaturatedGens_9_12_22 = {9, 12, 15, 22, 23, 25, 26, 28, 29};

// --- <18, 24, 39, 55> -----------------------------------------------------------

inline const std::vector<Exponent> kGens_18_24_39_55 = {18, 24, 39, 55};

inline const std::vector<Exponent> kGaps_18_24_39_55 = {
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16,
    17, 19, 20, 21, 22, 23, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34,
    35, 37, 38, 40, 41, 43, 44, 45, 46, 47, 49, 50, 51, 52, 53, 56,
    58, 59, 61, 62, 64, 65, 67, 68, 69, 70, 71, 74, 76, 77, 80, 82,
    83, 85, 86, 88, 89, 92, 95, 98, 100, 101, 104, 106, 107, 113, 116, 119,
    122, 124, 125, 131, 137, 140, 143, 155, 161, 179
};

inline const std::vector<Exponent> kPartialGcds_18_24_39_55 = {18, 6, 3, 1};
inline constexpr int kR_18_24_39_55 = 4;
inline const std::vector<std::vector<Exponent>> kL_18_24_39_55 = {{}, {30}, {45, 51}};
inline const std::vector<std::vector<Exponent>> kLTrunc_18_24_39_55 = {{}, {30}, {45, 51}};
inline const std::vector<Exponent> kLTildeR_18_24_39_55 = {
    56, 58, 59, 61, 62, 64, 65, 67, 68, 69, 70, 71
};
inline const std::vector<Exponent> kNewExponents_18_24_39_55 = {
    30, 45, 51, 56, 58, 59, 61, 62, 64, 65, 67, 68, 69, 70, 71
};
// 69 = 24 + 45 drops out of the minimal generating set
inline const std::vector<Exponent> kNewGenerators_18_24_39_55 = {
    30, 45, 51, 56, 58, 59, 61, 62, 64, 65, 67, 68, 70, 71
};
inline const std::vector<Exponent> kSaturatedGens_18_24_39_55 = {
    18, 24, 30, 39, 45, 51, 55, 56, 58, 59, 61, 62, 64, 65, 67, 68, 70, 71
};

// --- <40, 60, 70, 85, 103> -------------------------------------------------------

inline const std::vector<Exponent> kGens_40_60_70_85_103 = {40, 60, 70, 85, 103};

inline const std::vector<Exponent> kGaps_40_60_70_85_103 = {
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16,
    17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32,
    33, 34, 35, 36, 37, 38, 39, 41, 42, 43, 44, 45, 46, 47, 48, 49,
    50, 51, 52, 53, 54, 55, 56, 57, 58, 59, 61, 62, 63, 64, 65, 66,
    67, 68, 69, 71, 72, 73, 74, 75, 76, 77, 78, 79, 81, 82, 83, 84,
    86, 87, 88, 89, 90, 91, 92, 93, 94, 95, 96, 97, 98, 99, 101, 102,
    104, 105, 106, 107, 108, 109, 111, 112, 113, 114, 115, 116, 117, 118, 119, 121,
    122, 123, 124, 126, 127, 128, 129, 131, 132, 133, 134, 135, 136, 137, 138, 139,
    141, 142, 144, 146, 147, 148, 149, 151, 152, 153, 154, 156, 157, 158, 159, 161,
    162, 164, 166, 167, 168, 169, 171, 172, 174, 175, 176, 177, 178, 179, 181, 182,
    184, 186, 187, 189, 191, 192, 193, 194, 196, 197, 198, 199, 201, 202, 204, 207,
    208, 209, 211, 212, 214, 216, 217, 218, 219, 221, 222, 224, 226, 227, 229, 231,
    232, 234, 236, 237, 238, 239, 241, 242, 244, 247, 249, 251, 252, 254, 256, 257,
    259, 261, 262, 264, 267, 269, 271, 272, 274, 277, 278, 279, 281, 282, 284, 287,
    289, 292, 294, 296, 297, 299, 301, 302, 304, 307, 311, 312, 314, 317, 319, 321,
    322, 324, 327, 329, 332, 334, 337, 339, 341, 342, 344, 347, 352, 354, 357, 359,
    362, 364, 367, 372, 374, 377, 381, 382, 384, 387, 392, 397, 399, 402, 404, 407,
    414, 417, 422, 424, 427, 432, 437, 442, 444, 447, 457, 462, 467, 477, 484, 487,
    502, 507, 517, 527, 547, 587
};

inline const std::vector<Exponent> kPartialGcds_40_60_70_85_103 = {40, 20, 10, 5, 1};
inline constexpr int kR_40_60_70_85_103 = 5;
inline const std::vector<std::vector<Exponent>> kL_40_60_70_85_103 = {
    {}, {}, {}, {90, 95}
};
inline const std::vector<std::vector<Exponent>> kLTrunc_40_60_70_85_103 = {
    {}, {}, {}, {90, 95}
};
inline const std::vector<Exponent> kLTildeR_40_60_70_85_103 = {
    104, 105, 106, 107, 108, 109, 111, 112, 113, 114, 115, 116, 117,
    118, 119, 121, 122, 123, 124, 126, 127, 128, 129, 131, 132, 133,
    134, 135, 136, 137, 138, 139, 141, 142
};
inline const std::vector<Exponent> kNewExponents_40_60_70_85_103 = {
    90, 95, 104, 105, 106, 107, 108, 109, 111, 112, 113, 114, 115, 116,
    117, 118, 119, 121, 122, 123, 124, 126, 127, 128, 129, 131, 132, 133,
    134, 135, 136, 137, 138, 139, 141, 142
};
// 135 = 40 + 95 drops out of the minimal generating set
inline const std::vector<Exponent> kNewGenerators_40_60_70_85_103 = {
    90, 95, 104, 105, 106, 107, 108, 109, 111, 112, 113, 114, 115, 116,
    117, 118, 119, 121, 122, 123, 124, 126, 127, 128, 129, 131, 132, 133,
    134, 136, 137, 138, 139, 141, 142
};

// --- <12, 18, 22, 29, 35, 49> ------------------------------------------------------

inline const std::vector<Exponent> kGens_12_18_22_29_35_49 = {12, 18, 22, 29, 35, 49};

inline const std::vector<Exponent> kGaps_12_18_22_29_35_49 = {
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 15, 16, 17,
    19, 20, 21, 23, 25, 26, 27, 28, 31, 32, 33, 37, 38, 39, 43, 45,
    50, 55
};

inline const std::vector<Exponent> kPartialGcds_12_18_22_29_35_49 = {12, 6, 2, 1, 1, 1};
inline constexpr int kR_12_18_22_29_35_49 = 4;
inline const std::vector<std::vector<Exponent>> kL_12_18_22_29_35_49 = {
    {}, {}, {26, 28}, {31, 32, 33}, {37, 38, 39, 43, 45}
};
inline const std::vector<std::vector<Exponent>> kLTrunc_12_18_22_29_35_49 = {
    {}, {}, {26, 28}, {31, 32, 33}, {37, 38, 39, 43, 45}
};
inline const std::vector<Exponent> kLTildeR_12_18_22_29_35_49 = {31, 32, 33, 37, 38, 39};
inline const std::vector<Exponent> kNewExponents_12_18_22_29_35_49 = {
    26, 28, 31, 32, 33, 37, 38, 39
};
// 38 = 12 + 26 and the input generator 49 = 12 + 37 both decompose
inline const std::vector<Exponent> kNewGenerators_12_18_22_29_35_49 = {
    26, 28, 31, 32, 33, 37, 39
};
inline const std::vector<Exponent> kSaturatedGens_12_18_22_29_35_49 = {
    12, 18, 22, 26, 28, 29, 31, 32, 33, 35, 37, 39
};

} // namespace fixtures
