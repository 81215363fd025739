//! Published tables and lists, copied exactly as printed (typos included).

/// `l, m, l²+m², n, x, y, z, t`.
pub const SAMPLE_SOLUTIONS: [[u64; 8]; 15] = [
    [1, 1, 2, 1, 1, 2, 2, 3],
    [3, 3, 18, 3, 3, 6, 6, 9],
    [5, 1, 26, 1, 25, 10, 2, 27],
    [5, 3, 34, 1, 33, 10, 6, 35],
    [5, 5, 50, 1, 49, 10, 10, 51],
    [6, 4, 52, 1, 51, 12, 8, 53],
    [7, 3, 58, 1, 57, 14, 6, 59],
    [7, 7, 98, 1, 97, 14, 14, 99],
    [8, 2, 68, 1, 67, 16, 4, 69],
    [9, 3, 90, 5, 13, 18, 6, 23],
    [9, 3, 90, 6, 9, 18, 6, 21],
    [9, 5, 106, 2, 51, 18, 10, 55],
    [9, 7, 130, 10, 3, 18, 14, 23],
    [9, 9, 162, 1, 161, 18, 18, 163],
    [9, 9, 162, 9, 9, 18, 18, 27],
];

pub const SAMPLE_COLUMNS: [&str; 8] = ["l", "m", "l²+m²", "n", "x", "y", "z", "t"];

#[derive(Debug, Clone, Copy)]
pub struct GeneratedRow {
    pub solution: [u64; 4],
    pub sides: [u64; 3],
    pub area: u64,
    /// The printed prime factorization of the area.
    pub factorization: &'static str,
}

/// Triangles generated with scale 2 from the sample solutions.
pub const GENERATED_SCALE: u64 = 2;

pub const GENERATED_TRIANGLES: [GeneratedRow; 15] = [
    GeneratedRow { solution: [1, 2, 2, 3], sides: [8, 5, 5], area: 12, factorization: "2^2 · 3" },
    GeneratedRow { solution: [3, 6, 6, 9], sides: [72, 45, 45], area: 972, factorization: "2^2 · 3^5" },
    GeneratedRow { solution: [25, 10, 2, 27], sides: [104, 627, 725], area: 13_500, factorization: "2^2 · 3^3 · 5^3" },
    GeneratedRow { solution: [33, 10, 6, 35], sides: [136, 1_125, 1_189], area: 69_300, factorization: "2^2 · 3^2 · 5 · 7 · 11" },
    GeneratedRow { solution: [49, 10, 10, 51], sides: [200, 2_501, 2_501], area: 249_900, factorization: "2^2 · d · 5^2 · 7^2 · 17" },
    GeneratedRow { solution: [51, 12, 8, 53], sides: [208, 2_665, 2_745], area: 259_488, factorization: "2^5 · 3^2 · 17 · 53" },
    GeneratedRow { solution: [57, 14, 6, 59], sides: [232, 3_285, 3_445], area: 282_492, factorization: "2^2 · 3^2 · 7 · 19 · 59" },
    GeneratedRow { solution: [97, 14, 14, 99], sides: [392, 9_605, 9_605], area: 1_882_188, factorization: "2^3 · 3^4 · 7^2 · 11^2" },
    GeneratedRow { solution: [67, 16, 4, 69], sides: [272, 4_505, 4_745], area: 295_872, factorization: "2^6 · 3 · 23 · 67" },
    GeneratedRow { solution: [13, 18, 6, 23], sides: [360, 204, 493], area: 32_292, factorization: "2^2 · 3^3 · 13 · 23" },
    GeneratedRow { solution: [9, 18, 6, 21], sides: [360, 81, 405], area: 20_412, factorization: "2^2 · 3^6 · 7" },
    GeneratedRow { solution: [51, 18, 10, 55], sides: [424, 2_701, 2_925], area: 504_900, factorization: "2^2 · 3^3 · 5^2 · 11 · 17" },
    GeneratedRow { solution: [3, 18, 14, 23], sides: [520, 205, 333], area: 17_388, factorization: "2^2 · 3^3 · 7 · 23" },
    GeneratedRow { solution: [161, 18, 18, 163], sides: [648, 26_245, 26_245], area: 8_502_732, factorization: "2^2 · 3^4 · 7 · 23 · 163" },
    GeneratedRow { solution: [9, 18, 18, 27], sides: [648, 415, 415], area: 78_732, factorization: "2^2 · 3^9" },
];

#[derive(Debug, Clone, Copy)]
pub struct FactorizationRow {
    pub perimeter_gcds: [u64; 3],
    /// `d₁₂, d₁₃, d₂₃`.
    pub pair_gcds: [u64; 3],
    pub excess_roots: [u64; 3],
    pub perimeter_root: u64,
    pub d: u64,
    pub sides: [u64; 3],
    pub area: u64,
    pub factorization: &'static str,
}

const fn frow(v: [u64; 15], factorization: &'static str) -> FactorizationRow {
    FactorizationRow {
        perimeter_gcds: [v[0], v[1], v[2]],
        pair_gcds: [v[3], v[4], v[5]],
        excess_roots: [v[6], v[7], v[8]],
        perimeter_root: v[9],
        d: v[10],
        sides: [v[11], v[12], v[13]],
        area: v[14],
        factorization,
    }
}

/// Factorizations of the first seven areas ≡ 2 (mod 4).
pub const FACTORIZATIONS: [FactorizationRow; 7] = [
    frow([1, 2, 3, 1, 1, 1, 1, 1, 1, 1, 2, 5, 4, 3, 6], "2 · 3"),
    frow([1, 3, 7, 1, 1, 2, 1, 1, 1, 1, 2, 20, 15, 7, 42], "2 · 3 · 7"),
    frow([2, 1, 11, 1, 1, 1, 1, 3, 1, 1, 2, 20, 13, 11, 66], "2 · 3 · 11"),
    frow([1, 1, 3, 2, 1, 5, 1, 1, 1, 3, 2, 25, 17, 12, 90], "2 · 3^2 · 5"),
    frow([1, 1, 19, 1, 1, 1, 1, 3, 1, 1, 2, 37, 20, 19, 114], "2 · 3 · 19"),
    frow([2, 3, 1, 1, 1, 1, 1, 1, 7, 3, 2, 52, 51, 3, 126], "2 · 3^2 · 7"),
    frow([1, 11, 6, 1, 1, 1, 1, 1, 3, 1, 2, 65, 55, 12, 198], "2 · 3^2 · 11"),
];

pub const AREA_NUMBERS_999: [u64; 96] = [
    6, 12, 24, 30, 36, 42, 48, 54, 60, 66, 72, 84, 90, 96, 108, 114, 120, 126, 132, 144, 150, 156, 168,
    180, 192, 198, 204, 210, 216, 234, 240, 252, 264, 270, 288, 294, 300, 306, 324, 330, 336, 360, 378,
    384, 390, 296, 408, 420, 432, 456, 462, 468, 480, 486, 504, 510, 522, 528, 540, 546, 570, 576, 588,
    594, 600, 624, 630, 648, 660, 672, 684, 690, 714, 720, 726, 744, 750, 756, 768, 780, 792, 798, 810,
    816, 840, 864, 876, 900, 924, 930, 936, 960, 966, 972, 984, 990,
];

pub const PYTHAGOREAN_NUMBERS_999: [u64; 31] = [
    6, 24, 30, 54, 60, 84, 96, 120, 150, 180, 210, 216, 270, 294, 330, 384, 420, 480, 486, 504, 540, 546,
    600, 630, 726, 750, 840, 864, 924, 960, 990,
];

pub const SOLID_NUMBERS_999: [u64; 2] = [12, 972];

pub const AREA_2_MOD_4_999: [u64; 21] = [
    6, 42, 66, 90, 114, 126, 198, 234, 306, 390, 462, 510, 522, 570, 594, 690, 714, 798, 810, 966, 990,
];

/// Printed counts: area numbers, Pythagorean, solid but not Pythagorean, neither, ≡ 2 (mod 4).
pub const COUNT_AREA: usize = 96;
pub const COUNT_PYTHAGOREAN: usize = 31;
pub const COUNT_SOLID_NOT_PYTHAGOREAN: usize = 2;
pub const COUNT_NEITHER: usize = 63;
pub const COUNT_2_MOD_4: usize = 21;

/// The two right triangles printed for area 210.
pub const RIGHT_TRIANGLES_210: [[u64; 3]; 2] = [[37, 35, 12], [20, 21, 20]];
