//! Reference rank profiles in this crate's block order: row-major by (row grade,
//! column grade), total last. Tables that stop at a stabilized rank may be shorter
//! or longer than what `rank_profile` emits.

pub type Table = &'static [&'static [usize]];

pub const W3C6_GRASSMANNIAN: Table = &[
    &[0, 10, 10, 0, 20],
    &[0, 0, 0, 1, 1],
    &[0, 0, 0, 0, 0],
];

pub const W3C6_RESTRICTED_CHORDAL: Table = &[
    &[0, 15, 15, 0, 30],
    &[10, 0, 0, 6, 16],
    &[0, 1, 1, 0, 2],
    &[1, 0, 0, 0, 1],
    &[0, 0, 0, 0, 0],
];

pub const W3C6_TANGENTIAL: Table = &[
    &[0, 19, 19, 0, 38],
    &[18, 0, 0, 11, 29],
    &[0, 10, 10, 0, 20],
    &[9, 0, 0, 2, 11],
    &[0, 1, 1, 0, 2],
    &[0, 0, 0, 1, 1],
    &[0, 0, 0, 0, 0],
];

pub const W3C6_SECANT: Table = &[
    &[0, 19, 19, 0, 38],
    &[18, 0, 0, 19, 37],
    &[0, 18, 18, 0, 36],
];

pub const E7_83: Table = &[
    &[0, 62, 62, 0, 124],
    &[54, 0, 0, 61, 115],
    &[0, 53, 53, 0, 106],
    &[46, 0, 0, 52, 98],
    &[0, 45, 45, 0, 90],
    &[38, 0, 0, 44, 82],
    &[0, 37, 37, 0, 74],
    &[31, 0, 0, 36, 67],
    &[0, 30, 30, 0, 60],
    &[24, 0, 0, 29, 53],
    &[0, 23, 23, 0, 46],
    &[19, 0, 0, 22, 41],
    &[0, 18, 18, 0, 36],
    &[14, 0, 0, 17, 31],
    &[0, 13, 13, 0, 26],
    &[10, 0, 0, 12, 22],
    &[0, 9, 9, 0, 18],
    &[6, 0, 0, 9, 15],
    &[0, 6, 6, 0, 12],
    &[4, 0, 0, 6, 10],
    &[0, 4, 4, 0, 8],
    &[2, 0, 0, 4, 6],
    &[0, 2, 2, 0, 4],
    &[1, 0, 0, 2, 3],
    &[0, 1, 1, 0, 2],
    &[0, 0, 0, 1, 1],
    &[0, 0, 0, 0, 0],
];

pub const E7_86: Table = &[
    &[0, 61, 61, 0, 122],
    &[52, 0, 0, 59, 111],
    &[0, 50, 50, 0, 100],
    &[43, 0, 0, 48, 91],
    &[0, 41, 41, 0, 82],
    &[34, 0, 0, 39, 73],
    &[0, 32, 32, 0, 64],
    &[26, 0, 0, 30, 56],
    &[0, 24, 24, 0, 48],
    &[18, 0, 0, 23, 41],
    &[0, 17, 17, 0, 34],
    &[13, 0, 0, 16, 29],
    &[0, 12, 12, 0, 24],
    &[8, 0, 0, 11, 19],
    &[0, 7, 7, 0, 14],
    &[5, 0, 0, 6, 11],
    &[0, 4, 4, 0, 8],
    &[2, 0, 0, 4, 6],
    &[0, 2, 2, 0, 4],
    &[1, 0, 0, 2, 3],
    &[0, 1, 1, 0, 2],
    &[0, 0, 0, 1, 1],
    &[0, 0, 0, 0, 0],
];

pub const E7_88: Table = &[
    &[0, 63, 63, 0, 126],
    &[56, 0, 0, 63, 119],
    &[0, 56, 56, 0, 112],
    &[50, 0, 0, 56, 106],
    &[0, 50, 50, 0, 100],
    &[44, 0, 0, 50, 94],
    &[0, 44, 44, 0, 88],
    &[38, 0, 0, 44, 82],
    &[0, 38, 38, 0, 76],
    &[32, 0, 0, 38, 70],
    &[0, 32, 32, 0, 64],
    &[27, 0, 0, 32, 59],
    &[0, 27, 27, 0, 54],
    &[22, 0, 0, 27, 49],
    &[0, 22, 22, 0, 44],
    &[18, 0, 0, 22, 40],
    &[0, 18, 18, 0, 36],
    &[14, 0, 0, 18, 32],
    &[0, 14, 14, 0, 28],
    &[11, 0, 0, 14, 25],
    &[0, 11, 11, 0, 22],
    &[8, 0, 0, 11, 19],
    &[0, 8, 8, 0, 16],
    &[6, 0, 0, 8, 14],
    &[0, 6, 6, 0, 12],
    &[4, 0, 0, 6, 10],
    &[0, 4, 4, 0, 8],
    &[3, 0, 0, 4, 7],
    &[0, 3, 3, 0, 6],
    &[2, 0, 0, 3, 5],
    &[0, 2, 2, 0, 4],
    &[1, 0, 0, 2, 3],
    &[0, 1, 1, 0, 2],
    &[0, 0, 0, 1, 1],
    &[0, 0, 0, 0, 0],
];

pub const E7_65: Table = &[
    &[0, 60, 60, 0, 120],
    &[50, 0, 0, 57, 107],
    &[0, 47, 47, 0, 94],
    &[39, 0, 0, 44, 83],
    &[0, 36, 36, 0, 72],
    &[28, 0, 0, 34, 62],
    &[0, 26, 26, 0, 52],
    &[20, 0, 0, 24, 44],
    &[0, 18, 18, 0, 36],
    &[12, 0, 0, 17, 29],
    &[0, 11, 11, 0, 22],
    &[8, 0, 0, 10, 18],
    &[0, 7, 7, 0, 14],
    &[4, 0, 0, 6, 10],
    &[0, 3, 3, 0, 6],
    &[2, 0, 0, 2, 4],
    &[0, 1, 1, 0, 2],
    &[0, 0, 0, 1, 1],
    &[0, 0, 0, 0, 0],
];

pub const E7_67: Table = &[
    &[0, 60, 60, 0, 120],
    &[50, 0, 0, 57, 107],
    &[0, 47, 47, 0, 94],
    &[39, 0, 0, 44, 83],
    &[0, 36, 36, 0, 72],
    &[29, 0, 0, 33, 62],
    &[0, 26, 26, 0, 52],
    &[20, 0, 0, 24, 44],
    &[0, 18, 18, 0, 36],
    &[13, 0, 0, 16, 29],
    &[0, 11, 11, 0, 22],
    &[8, 0, 0, 10, 18],
    &[0, 7, 7, 0, 14],
    &[4, 0, 0, 6, 10],
    &[0, 3, 3, 0, 6],
    &[1, 0, 0, 3, 4],
    &[0, 1, 1, 0, 2],
    &[0, 0, 0, 1, 1],
    &[0, 0, 0, 0, 0],
];

pub const E7_69: Table = &[
    &[0, 60, 60, 0, 120],
    &[52, 0, 0, 58, 110],
    &[0, 50, 50, 0, 100],
    &[43, 0, 0, 48, 91],
    &[0, 41, 41, 0, 82],
    &[34, 0, 0, 39, 73],
    &[0, 32, 32, 0, 64],
    &[25, 0, 0, 30, 55],
    &[0, 23, 23, 0, 46],
    &[18, 0, 0, 22, 40],
    &[0, 17, 17, 0, 34],
    &[13, 0, 0, 16, 29],
    &[0, 12, 12, 0, 24],
    &[8, 0, 0, 11, 19],
    &[0, 7, 7, 0, 14],
    &[4, 0, 0, 6, 10],
    &[0, 3, 3, 0, 6],
    &[2, 0, 0, 3, 5],
    &[0, 2, 2, 0, 4],
    &[1, 0, 0, 2, 3],
    &[0, 1, 1, 0, 2],
    &[0, 0, 0, 1, 1],
    &[0, 0, 0, 0, 0],
];

pub const W3C9_RANK1: Table = &[
    &[0, 0, 19, 19, 0, 0, 0, 20, 0, 58],
    &[0, 0, 0, 0, 0, 1, 0, 0, 0, 1],
    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const W3C9_RANK2: Table = &[
    &[0, 0, 38, 38, 0, 0, 0, 38, 0, 114],
    &[0, 19, 0, 0, 0, 20, 19, 0, 0, 58],
    &[0, 0, 0, 0, 1, 0, 0, 0, 1, 2],
    &[0, 0, 0, 0, 0, 0, 0, 1, 0, 1],
    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const W3C9_RANK3: Table = &[
    &[0, 0, 56, 56, 0, 0, 0, 56, 0, 168],
    &[0, 56, 0, 0, 0, 56, 56, 0, 0, 168],
];

pub const W3C9_RANK4: Table = &[
    &[0, 0, 72, 72, 0, 0, 0, 72, 0, 216],
    &[0, 72, 0, 0, 0, 72, 72, 0, 0, 216],
];

pub const W3C9_RANK5: Table = &[
    &[0, 0, 80, 80, 0, 0, 0, 80, 0, 240],
    &[0, 80, 0, 0, 0, 80, 80, 0, 0, 240],
];

pub const W3C9_RANK6: Table = &[
    &[0, 0, 80, 80, 0, 0, 0, 80, 0, 240],
    &[0, 80, 0, 0, 0, 80, 80, 0, 0, 240],
];

pub const W3C9_79: Table = &[
    &[0, 0, 56, 56, 0, 0, 0, 56, 0, 168],
    &[0, 46, 0, 0, 0, 48, 46, 0, 0, 140],
    &[36, 0, 0, 0, 38, 0, 0, 0, 38, 112],
    &[0, 0, 28, 28, 0, 0, 0, 29, 0, 85],
    &[0, 19, 0, 0, 0, 20, 19, 0, 0, 58],
    &[9, 0, 0, 0, 11, 0, 0, 0, 11, 31],
    &[0, 0, 1, 1, 0, 0, 0, 2, 0, 4],
    &[0, 1, 0, 0, 0, 1, 1, 0, 0, 3],
    &[0, 0, 0, 0, 1, 0, 0, 0, 1, 2],
    &[0, 0, 0, 0, 0, 0, 0, 1, 0, 1],
    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const W3C9_79_VARIANT: Table = &[
    &[0, 0, 55, 55, 0, 0, 0, 54, 0, 164],
    &[0, 33, 0, 0, 0, 38, 33, 0, 0, 104],
    &[16, 0, 0, 0, 21, 0, 0, 0, 21, 58],
    &[0, 0, 6, 6, 0, 0, 0, 10, 0, 22],
    &[0, 2, 0, 0, 0, 0, 2, 0, 0, 4],
    &[1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const W3C9_87: Table = &[
    &[0, 0, 52, 52, 0, 0, 0, 60, 0, 164],
    &[0, 33, 0, 0, 0, 38, 33, 0, 0, 104],
    &[16, 0, 0, 0, 21, 0, 0, 0, 21, 58],
    &[0, 0, 8, 8, 0, 0, 0, 6, 0, 22],
    &[0, 1, 0, 0, 0, 2, 1, 0, 0, 4],
    &[1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const W3C9_9: Table = &[
    &[0, 0, 76, 76, 0, 0, 0, 74, 0, 226],
    &[0, 66, 0, 0, 0, 72, 66, 0, 0, 204],
    &[58, 0, 0, 0, 62, 0, 0, 0, 62, 182],
    &[0, 0, 54, 54, 0, 0, 0, 56, 0, 164],
    &[0, 48, 0, 0, 0, 50, 48, 0, 0, 146],
    &[41, 0, 0, 0, 44, 0, 0, 0, 44, 129],
    &[0, 0, 37, 37, 0, 0, 0, 38, 0, 112],
    &[0, 31, 0, 0, 0, 35, 31, 0, 0, 97],
    &[24, 0, 0, 0, 29, 0, 0, 0, 29, 82],
    &[0, 0, 22, 22, 0, 0, 0, 26, 0, 70],
    &[0, 19, 0, 0, 0, 20, 19, 0, 0, 58],
    &[15, 0, 0, 0, 17, 0, 0, 0, 17, 49],
    &[0, 0, 13, 13, 0, 0, 0, 14, 0, 40],
    &[0, 10, 0, 0, 0, 11, 10, 0, 0, 31],
    &[6, 0, 0, 0, 8, 0, 0, 0, 8, 22],
    &[0, 0, 4, 4, 0, 0, 0, 8, 0, 16],
    &[0, 4, 0, 0, 0, 2, 4, 0, 0, 10],
    &[3, 0, 0, 0, 2, 0, 0, 0, 2, 7],
    &[0, 0, 1, 1, 0, 0, 0, 2, 0, 4],
    &[0, 1, 0, 0, 0, 1, 1, 0, 0, 3],
    &[0, 0, 0, 0, 1, 0, 0, 0, 1, 2],
    &[0, 0, 0, 0, 0, 0, 0, 1, 0, 1],
    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const W3C9_96: Table = &[
    &[0, 0, 38, 38, 0, 0, 0, 38, 0, 114],
    &[0, 19, 0, 0, 0, 20, 19, 0, 0, 58],
    &[0, 0, 0, 0, 1, 0, 0, 0, 1, 2],
    &[0, 0, 0, 0, 0, 0, 0, 1, 0, 1],
    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const W3C9_100: Table = &[
    &[0, 0, 30, 30, 0, 0, 0, 32, 0, 92],
    &[0, 4, 0, 0, 0, 6, 4, 0, 0, 14],
    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const W3C9_101: Table = &[
    &[0, 0, 19, 19, 0, 0, 0, 20, 0, 58],
    &[0, 0, 0, 0, 0, 1, 0, 0, 0, 1],
    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const W3C9_FAMILY1: Table = &[
    &[0, 0, 80, 80, 0, 0, 0, 80, 0, 240],
    &[0, 80, 0, 0, 0, 80, 80, 0, 0, 240],
];

pub const MMULT: Table = &[
    &[0, 0, 0, 132, 132, 0, 0, 0, 0, 219, 0, 0, 0, 0, 219, 0, 702],
    &[0, 0, 132, 0, 0, 0, 0, 132, 132, 0, 0, 0, 0, 0, 0, 0, 396],
    &[0, 0, 0, 0, 0, 0, 132, 0, 0, 0, 0, 132, 0, 0, 0, 0, 264],
    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 132, 0, 0, 0, 0, 0, 132],
    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const MMULT_RANK1: Table = &[
    &[0, 0, 0, 28, 28, 0, 0, 0, 0, 84, 0, 0, 0, 0, 84, 0, 224],
    &[0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const MMULT_RANK2: Table = &[
    &[0, 0, 0, 56, 56, 0, 0, 0, 0, 147, 0, 0, 0, 0, 147, 0, 406],
    &[0, 0, 37, 0, 0, 0, 0, 20, 37, 0, 0, 0, 0, 0, 0, 0, 94],
    &[0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 2],
    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1],
    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const MMULT_RANK3: Table = &[
    &[0, 0, 0, 84, 84, 0, 0, 0, 0, 192, 0, 0, 0, 0, 192, 0, 552],
    &[0, 0, 83, 0, 0, 0, 0, 57, 83, 0, 0, 0, 0, 0, 0, 0, 223],
    &[0, 0, 0, 0, 0, 0, 56, 0, 0, 0, 0, 56, 0, 0, 0, 0, 112],
    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 56, 0, 0, 0, 0, 0, 56],
    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const MMULT_RANK4: Table = &[
    &[0, 0, 0, 111, 111, 0, 0, 0, 0, 219, 0, 0, 0, 0, 219, 0, 660],
    &[0, 0, 111, 0, 0, 0, 0, 111, 111, 0, 0, 0, 0, 0, 0, 0, 333],
    &[0, 0, 0, 0, 0, 0, 111, 0, 0, 0, 0, 111, 0, 0, 0, 0, 222],
    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 111, 0, 0, 0, 0, 0, 111],
    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const MMULT_RANK5: Table = &[
    &[0, 0, 0, 135, 135, 0, 0, 0, 0, 219, 0, 0, 0, 0, 219, 0, 708],
    &[0, 0, 135, 0, 0, 0, 0, 135, 135, 0, 0, 0, 0, 0, 0, 0, 405],
    &[0, 0, 0, 0, 0, 0, 135, 0, 0, 0, 0, 135, 0, 0, 0, 0, 270],
    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 135, 0, 0, 0, 0, 0, 135],
    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const MMULT_RANK6: Table = &[
    &[0, 0, 0, 141, 141, 0, 0, 0, 0, 219, 0, 0, 0, 0, 219, 0, 720],
    &[0, 0, 141, 0, 0, 0, 0, 141, 141, 0, 0, 0, 0, 0, 0, 0, 423],
    &[0, 0, 0, 0, 0, 0, 141, 0, 0, 0, 0, 141, 0, 0, 0, 0, 282],
    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 141, 0, 0, 0, 0, 0, 141],
    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const QI4_FAMILY1: Table = &[
    &[0, 60, 60, 0, 120],
    &[60, 0, 0, 60, 120],
    &[0, 60, 60, 0, 120],
    &[60, 0, 0, 60, 120],
];

pub const QI4_FAMILY2: Table = &[
    &[0, 60, 60, 0, 120],
    &[59, 0, 0, 60, 119],
    &[0, 59, 59, 0, 118],
    &[59, 0, 0, 59, 118],
    &[0, 59, 59, 0, 118],
];

pub const QI4_FAMILY3: Table = &[
    &[0, 56, 56, 0, 112],
    &[52, 0, 0, 54, 106],
    &[0, 50, 50, 0, 100],
    &[50, 0, 0, 50, 100],
    &[0, 50, 50, 0, 100],
];

pub const QI4_FAMILY6: Table = &[
    &[0, 60, 60, 0, 120],
    &[58, 0, 0, 60, 118],
    &[0, 58, 58, 0, 116],
    &[57, 0, 0, 58, 115],
    &[0, 57, 57, 0, 114],
    &[57, 0, 0, 57, 114],
    &[0, 57, 57, 0, 114],
];

pub const QI4_FAMILY9: Table = &[
    &[0, 56, 56, 0, 112],
    &[51, 0, 0, 54, 105],
    &[0, 49, 49, 0, 98],
    &[45, 0, 0, 47, 92],
    &[0, 43, 43, 0, 86],
    &[42, 0, 0, 43, 85],
    &[0, 42, 42, 0, 84],
    &[42, 0, 0, 42, 84],
    &[0, 42, 42, 0, 84],
];

pub const QI4_FAMILY10: Table = &[
    &[0, 48, 48, 0, 96],
    &[39, 0, 0, 42, 81],
    &[0, 33, 33, 0, 66],
    &[33, 0, 0, 33, 66],
    &[0, 33, 33, 0, 66],
];

pub const QI4_FAMILY12: Table = &[
    &[0, 48, 48, 0, 96],
    &[38, 0, 0, 42, 80],
    &[0, 32, 32, 0, 64],
    &[23, 0, 0, 26, 49],
    &[0, 17, 17, 0, 34],
    &[8, 0, 0, 11, 19],
    &[0, 2, 2, 0, 4],
    &[1, 0, 0, 2, 3],
    &[0, 1, 1, 0, 2],
    &[0, 0, 0, 1, 1],
    &[0, 0, 0, 0, 0],
];

pub const QI4_FAMILY14: Table = &[
    &[0, 47, 47, 0, 94],
    &[30, 0, 0, 34, 64],
    &[0, 17, 17, 0, 34],
    &[9, 0, 0, 10, 19],
    &[0, 2, 2, 0, 4],
    &[0, 0, 0, 2, 2],
    &[0, 0, 0, 0, 0],
];

pub const QI4_FAMILY16: Table = &[
    &[0, 33, 33, 0, 66],
    &[14, 0, 0, 20, 34],
    &[0, 1, 1, 0, 2],
    &[1, 0, 0, 0, 1],
    &[0, 0, 0, 0, 0],
];

pub const QI5_SS1: Table = &[
    &[0, 72, 72, 0, 144],
    &[66, 0, 0, 72, 138],
    &[0, 66, 66, 0, 132],
    &[66, 0, 0, 66, 132],
];

pub const QI5_SS1_RESTRICTED: Table = &[
    &[0, 10, 10, 0, 20],
    &[6, 0, 0, 10, 16],
    &[0, 6, 6, 0, 12],
    &[6, 0, 0, 6, 12],
];

pub const QI5_SS2: Table = &[
    &[0, 51, 51, 0, 102],
    &[18, 0, 0, 34, 52],
    &[0, 1, 1, 0, 2],
    &[1, 0, 0, 0, 1],
    &[0, 0, 0, 0, 0],
];

pub const QI5_SS2_RESTRICTED: Table = &[
    &[0, 11, 11, 0, 22],
    &[2, 0, 0, 10, 12],
    &[0, 1, 1, 0, 2],
    &[1, 0, 0, 0, 1],
    &[0, 0, 0, 0, 0],
];

pub const QI5_SS3: Table = &[
    &[0, 26, 26, 0, 52],
    &[0, 0, 0, 1, 1],
    &[0, 0, 0, 0, 0],
];

pub const QI5_SS3_RESTRICTED: Table = &[
    &[0, 6, 6, 0, 12],
    &[0, 0, 0, 1, 1],
    &[0, 0, 0, 0, 0],
];

pub const QI5_SS4: Table = &[
    &[0, 76, 76, 0, 152],
    &[56, 0, 0, 76, 132],
    &[0, 56, 56, 0, 112],
    &[56, 0, 0, 56, 112],
];

pub const QI5_SS4_RESTRICTED: Table = &[
    &[0, 12, 12, 0, 24],
    &[4, 0, 0, 12, 16],
    &[0, 4, 4, 0, 8],
    &[4, 0, 0, 4, 8],
];

pub const QI5_SS5: Table = &[
    &[0, 76, 76, 0, 152],
    &[56, 0, 0, 76, 132],
    &[0, 56, 56, 0, 112],
    &[56, 0, 0, 56, 112],
];

pub const QI5_SS5_RESTRICTED: Table = &[
    &[0, 12, 12, 0, 24],
    &[4, 0, 0, 12, 16],
    &[0, 4, 4, 0, 8],
    &[4, 0, 0, 4, 8],
];

pub const QI5_SS6: Table = &[
    &[0, 51, 51, 0, 102],
    &[50, 0, 0, 51, 101],
    &[0, 50, 50, 0, 100],
    &[50, 0, 0, 50, 100],
];

pub const QI5_SS6_RESTRICTED: Table = &[
    &[0, 11, 11, 0, 22],
    &[10, 0, 0, 11, 21],
    &[0, 10, 10, 0, 20],
    &[10, 0, 0, 10, 20],
];

pub const QI5_RANK1: Table = &[
    &[0, 26, 26, 0, 52],
    &[0, 0, 0, 1, 1],
    &[0, 0, 0, 0, 0],
];

pub const QI5_RANK1_RESTRICTED: Table = &[
    &[0, 6, 6, 0, 12],
    &[0, 0, 0, 1, 1],
    &[0, 0, 0, 0, 0],
];

pub const QI5_RANK2: Table = &[
    &[0, 51, 51, 0, 102],
    &[50, 0, 0, 51, 101],
    &[0, 50, 50, 0, 100],
];

pub const QI5_RANK2_RESTRICTED: Table = &[
    &[0, 11, 11, 0, 22],
    &[10, 0, 0, 11, 21],
    &[0, 10, 10, 0, 20],
];

pub const QI5_RANK3: Table = &[
    &[0, 75, 75, 0, 150],
    &[50, 0, 0, 75, 125],
    &[0, 50, 50, 0, 100],
];

pub const QI5_RANK3_RESTRICTED: Table = &[
    &[0, 15, 15, 0, 30],
    &[10, 0, 0, 15, 25],
    &[0, 10, 10, 0, 20],
];

pub const QI5_RANK4: Table = &[
    &[0, 95, 95, 0, 190],
    &[90, 0, 0, 95, 185],
    &[0, 90, 90, 0, 180],
];

pub const QI5_RANK4_RESTRICTED: Table = &[
    &[0, 15, 15, 0, 30],
    &[10, 0, 0, 15, 25],
    &[0, 10, 10, 0, 20],
];

pub const QI5_PSI2: Table = &[
    &[0, 51, 51, 0, 102],
    &[50, 0, 0, 51, 101],
    &[0, 50, 50, 0, 100],
];

pub const QI5_PSI2_RESTRICTED: Table = &[
    &[0, 11, 11, 0, 22],
    &[10, 0, 0, 11, 21],
    &[0, 10, 10, 0, 20],
];

pub const QI5_PSI4: Table = &[
    &[0, 76, 76, 0, 152],
    &[56, 0, 0, 76, 132],
    &[0, 56, 56, 0, 112],
];

pub const QI5_PSI4_RESTRICTED: Table = &[
    &[0, 12, 12, 0, 24],
    &[4, 0, 0, 12, 16],
    &[0, 4, 4, 0, 8],
];

pub const QI5_PSI5: Table = &[
    &[0, 84, 84, 0, 168],
    &[42, 0, 0, 84, 126],
    &[0, 42, 42, 0, 84],
    &[9, 0, 0, 42, 51],
    &[0, 9, 9, 0, 18],
    &[0, 0, 0, 9, 9],
    &[0, 0, 0, 0, 0],
];

pub const QI5_PSI5_RESTRICTED: Table = &[
    &[0, 14, 14, 0, 28],
    &[6, 0, 0, 14, 20],
    &[0, 6, 6, 0, 12],
    &[3, 0, 0, 6, 9],
    &[0, 3, 3, 0, 6],
    &[0, 0, 0, 3, 3],
    &[0, 0, 0, 0, 0],
];

pub const QI5_PSI6: Table = &[
    &[0, 75, 75, 0, 150],
    &[50, 0, 0, 75, 125],
    &[0, 50, 50, 0, 100],
    &[25, 0, 0, 50, 75],
    &[0, 25, 25, 0, 50],
    &[0, 0, 0, 25, 25],
    &[0, 0, 0, 0, 0],
];

pub const QI5_PSI6_RESTRICTED: Table = &[
    &[0, 15, 15, 0, 30],
    &[10, 0, 0, 15, 25],
    &[0, 10, 10, 0, 20],
    &[5, 0, 0, 10, 15],
    &[0, 5, 5, 0, 10],
    &[0, 0, 0, 5, 5],
    &[0, 0, 0, 0, 0],
];

/// Total ranks only.
pub const FULL_C12: &[(&str, &[usize])] = &[
    ("fullC12/rank1", &[572, 1, 0]),
    ("fullC12/rank2", &[1018, 118, 14, 1, 0]),
    ("fullC12/rank3", &[1368, 259, 130, 56, 0]),
    ("fullC12/rank4", &[1644, 381, 246, 111, 0]),
    ("fullC12/rank5", &[1824, 453, 294, 135, 0]),
    ("fullC12/rank6", &[1860, 471, 306, 141, 0]),
    ("fullC12/rank7", &[1860, 471, 306, 141, 0]),
    ("fullC12/mmult", &[1812, 444, 288, 132, 0]),
];

pub const W3C10: &[(&str, &[usize])] = &[
    ("w3c10/rank1", &[176, 1, 0]),
    ("w3c10/rank2", &[322, 94, 14, 1, 0]),
    ("w3c10/rank3", &[444, 223, 130, 56, 0]),
    ("w3c10/rank4", &[536, 294, 178, 79, 0]),
    ("w3c10/rank5", &[566, 337, 218, 99, 0]),
];
