//! Printed values for n = 1..=8.
#![allow(dead_code)]

/// pk_n for each listed pattern set.
pub const PK_ROWS: &[(&str, [u64; 8])] = &[
    // five patterns
    ("123,132,213,231,312", [1, 3, 1, 1, 1, 1, 1, 1]),
    ("132,213,231,312,321", [1, 3, 6, 24, 120, 720, 5040, 40320]),
    // four patterns
    ("123,132,213,231", [1, 3, 3, 3, 3, 3, 3, 3]),
    ("123,132,213,312", [1, 3, 3, 3, 3, 3, 3, 3]),
    ("123,213,231,312", [1, 3, 3, 3, 3, 3, 3, 3]),
    ("123,132,231,312", [1, 3, 4, 5, 6, 7, 8, 9]),
    ("132,213,231,312", [1, 3, 7, 25, 121, 721, 5041, 40321]),
    ("132,213,231,321", [1, 3, 8, 30, 144, 840, 5760, 45360]),
    ("132,213,312,321", [1, 3, 8, 30, 144, 840, 5760, 45360]),
    ("213,231,312,321", [1, 3, 8, 30, 144, 840, 5760, 45360]),
    ("132,231,312,321", [1, 3, 9, 36, 180, 1080, 7560, 60480]),
    // three patterns
    ("123,132,231", [1, 3, 6, 10, 15, 21, 28, 36]),
    ("123,132,312", [1, 3, 6, 10, 15, 21, 28, 36]),
    ("123,231,312", [1, 3, 6, 10, 15, 21, 28, 36]),
    ("123,213,231", [1, 3, 5, 7, 9, 11, 13, 15]),
    ("123,213,312", [1, 3, 5, 7, 9, 11, 13, 15]),
    ("123,132,213", [1, 3, 5, 11, 21, 43, 85, 171]),
    ("132,213,231", [1, 3, 9, 33, 153, 873, 5913, 46233]),
    // printed as 123,213,312, which already has its own row above
    ("132,213,312", [1, 3, 9, 33, 153, 873, 5913, 46233]),
    ("213,231,312", [1, 3, 9, 33, 153, 873, 5913, 46233]),
    ("132,231,312", [1, 3, 10, 41, 206, 1237, 8660, 69281]),
    ("132,231,321", [1, 3, 11, 50, 274, 1764, 13068, 109584]),
    ("132,312,321", [1, 3, 11, 50, 274, 1764, 13068, 109584]),
    ("132,213,321", [1, 3, 10, 40, 192, 1092, 7248, 55296]),
    ("213,231,321", [1, 3, 10, 40, 192, 1092, 7248, 55296]),
    ("213,312,321", [1, 3, 10, 42, 216, 1320, 9360, 75600]),
    ("231,312,321", [1, 3, 11, 53, 309, 2119, 16687, 148329]),
    // two patterns
    ("123,231", [1, 3, 8, 17, 31, 51, 78, 113]),
    ("123,312", [1, 3, 8, 17, 31, 51, 78, 113]),
    ("123,132", [1, 3, 8, 21, 55, 144, 377, 987]),
    ("123,213", [1, 3, 7, 17, 41, 99, 239, 577]),
    ("132,231", [1, 3, 12, 60, 360, 2520, 20160, 181440]),
    ("132,312", [1, 3, 12, 60, 360, 2520, 20160, 181440]),
    ("231,312", [1, 3, 12, 60, 360, 2520, 20160, 181440]),
    ("132,213", [1, 3, 11, 47, 231, 1303, 8431, 62391]),
    ("213,231", [1, 3, 11, 47, 231, 1303, 8431, 62391]),
    ("132,321", [1, 3, 13, 68, 412, 2844, 22116, 191904]),
    ("213,321", [1, 3, 12, 56, 300, 1836, 12768, 100224]),
    ("213,312", [1, 3, 11, 49, 261, 1631, 11743, 95901]),
    ("231,321", [1, 3, 13, 71, 461, 3447, 29093, 273343]),
    ("312,321", [1, 3, 13, 73, 501, 4051, 37633, 394353]),
    // one pattern
    ("132", [1, 3, 14, 85, 621, 5236, 49680, 521721]),
    ("231", [1, 3, 14, 85, 621, 5236, 49680, 521721]),
    ("123", [1, 3, 10, 37, 146, 602, 2563, 11181]),
    ("213", [1, 3, 13, 69, 421, 2867, 21477, 175769]),
    ("312", [1, 3, 14, 87, 669, 6098, 64050, 759817]),
    ("321", [1, 3, 15, 102, 860, 8553, 97331, 1241900]),
];

pub const PF_312_321: [u64; 8] = [1, 3, 13, 63, 324, 1736, 9589, 54223];

/// Rows m = 1..=5 of the class-count tables.
pub const HYPOSYLVESTER_MULTI: [[u64; 8]; 5] = [
    [1, 3, 12, 55, 273, 1428, 7752, 43263],
    [1, 4, 21, 126, 818, 5594, 39693, 289510],
    [1, 5, 32, 233, 1833, 15180, 130392, 1151057],
    [1, 6, 45, 382, 3498, 33696, 336549, 3453750],
    [1, 7, 60, 579, 6017, 65732, 744264, 8656795],
];

pub const METASYLVESTER_MULTI: [[u64; 8]; 5] = [
    [1, 3, 14, 87, 669, 6098, 64050, 759817],
    [1, 4, 27, 254, 3048, 44328, 755681, 14750646],
    [1, 5, 44, 551, 8919, 176634, 4130208, 111222029],
    [1, 6, 65, 1014, 20598, 514604, 15240261, 521457190],
    [1, 7, 90, 1679, 40977, 1234002, 44162294, 1829650545],
];

pub const METASYLVESTER_M: [[u64; 8]; 5] = [
    [1, 3, 14, 87, 669, 6098, 64050, 759817],
    [1, 5, 45, 585, 9944, 208783, 5218212, 151283473],
    [1, 7, 94, 1879, 50006, 1663866, 66483078, 3101878511],
    [1, 9, 161, 4353, 158035, 7212505, 396783811, 25558807077],
    [1, 11, 246, 8391, 386211, 22414326, 1571290734, 129166342089],
];

pub const HYPOPLACTIC_M: [[u64; 8]; 5] = [
    [1, 3, 11, 45, 197, 903, 4279, 20793],
    [1, 5, 33, 249, 2033, 17485, 156033, 1431281],
    [1, 7, 67, 741, 8909, 113107, 1492103, 20251945],
    [1, 9, 113, 1649, 26225, 440985, 7711009, 138792929],
    [1, 11, 171, 3101, 61381, 1285663, 28015735, 628599577],
];
