//! Published reference values for the bound tables, kept verbatim (including
//! entries that disagree with the formulas) so generated tables can be
//! diffed against them.

/// Known maximum sizes `g(d)` of Euclidean two-distance sets, `d = 1..=8`.
pub const MAX_TWO_DISTANCE: [(usize, u32); 8] =
    [(1, 2), (2, 5), (3, 6), (4, 9), (5, 10), (6, 12), (7, 29), (8, 45)];

/// Euclidean bounds for `d = 5..=33`, columns `k = 2..=5`; `None` is a blank
/// cell. The last field is the printed `g(d)` column (a trailing `-` marks a
/// lower bound).
pub const EUCLIDEAN: [(usize, [Option<u32>; 4], &str); 29] = [
    (5, [Some(17), Some(8), Some(7), Some(7)], "16"),
    (6, [Some(29), Some(10), Some(9), Some(8)], "27"),
    (7, [Some(65), Some(12), Some(10), Some(9)], "29"),
    (8, [None, Some(14), Some(11), Some(11)], "45"),
    (9, [None, Some(17), Some(13), Some(12)], "45-"),
    (10, [None, Some(19), Some(14), Some(13)], "55-"),
    (11, [None, Some(23), Some(16), Some(14)], "66-"),
    (12, [None, Some(27), Some(18), Some(16)], "78-"),
    (13, [None, Some(31), Some(20), Some(17)], "91-"),
    (14, [None, Some(37), Some(22), Some(19)], "105-"),
    (15, [None, Some(43), Some(24), Some(20)], "120-"),
    (16, [None, Some(52), Some(26), Some(22)], "136-"),
    (17, [None, Some(62), Some(28), Some(23)], "153-"),
    (18, [None, Some(77), Some(31), Some(25)], "171-"),
    (19, [None, Some(97), Some(34), Some(27)], "190-"),
    (20, [None, Some(127), Some(37), Some(29)], "210-"),
    (21, [None, Some(177), Some(40), Some(30)], "231-"),
    (22, [None, Some(277), Some(43), Some(32)], "253-"),
    (23, [None, Some(577), Some(47), Some(34)], "276-"),
    (24, [None, None, Some(51), Some(36)], "300-"),
    (25, [None, None, Some(55), Some(38)], "325-"),
    (26, [None, None, Some(59), Some(41)], "351-"),
    (27, [None, None, Some(65), Some(43)], "378-"),
    (28, [None, None, Some(70), Some(45)], "406-"),
    (29, [None, None, Some(76), Some(48)], "435-"),
    (30, [None, None, Some(83), Some(50)], "465-"),
    (31, [None, None, Some(91), Some(53)], "496-"),
    (32, [None, None, Some(100), Some(56)], "528-"),
    (33, [None, None, Some(109), Some(58)], "561-"),
];

/// Spherical (`a + b >= 0`) bounds for `d = 5..=33`, columns `k = 2..=5`. The
/// last field is the printed `M⁺(d)` column.
pub const SPHERICAL_POS: [(usize, [Option<u32>; 4], &str); 29] = [
    (5, [Some(10), Some(6), Some(5), Some(5)], "16"),
    (6, [Some(16), Some(7), Some(6), Some(6)], "27"),
    (7, [Some(28), Some(9), Some(8), Some(7)], "28"),
    (8, [Some(64), Some(11), Some(9), Some(8)], "36"),
    (9, [None, Some(13), Some(10), Some(10)], "45"),
    (10, [None, Some(16), Some(12), Some(11)], "55"),
    (11, [None, Some(18), Some(13), Some(12)], "66"),
    (12, [None, Some(22), Some(15), Some(13)], "78"),
    (13, [None, Some(26), Some(17), Some(15)], "91"),
    (14, [None, Some(30), Some(19), Some(16)], "105"),
    (15, [None, Some(36), Some(21), Some(18)], "120"),
    (16, [None, Some(42), Some(23), Some(19)], "136"),
    (17, [None, Some(51), Some(25), Some(21)], "153"),
    (18, [None, Some(61), Some(27), Some(22)], "171"),
    (19, [None, Some(76), Some(30), Some(24)], "190"),
    (20, [None, Some(96), Some(33), Some(26)], "210"),
    (21, [None, Some(126), Some(36), Some(28)], "231"),
    (22, [None, Some(176), Some(39), Some(29)], "275"),
    (23, [None, Some(276), Some(42), Some(31)], "276"),
    (24, [None, Some(576), Some(46), Some(33)], "300"),
    (25, [None, None, Some(50), Some(35)], "325"),
    (26, [None, None, Some(54), Some(37)], "351"),
    (27, [None, None, Some(58), Some(40)], "378"),
    (28, [None, None, Some(64), Some(45)], "406"),
    (29, [None, None, Some(69), Some(48)], "435"),
    (30, [None, None, Some(75), Some(50)], "465"),
    (31, [None, None, Some(82), Some(53)], "496"),
    (32, [None, None, Some(90), Some(56)], "528"),
    (33, [None, None, Some(99), Some(58)], "561"),
];

/// Comparison at `γ = 5` for `d = 9..=23`: Euclidean, spherical `a + b >= 0`
/// and spherical `a + b < 0`, after existence refinements.
pub const COMPARISON_GAMMA5: [(usize, [u32; 3]); 15] = [
    (9, [17, 13, 16]),
    (10, [19, 16, 19]),
    (11, [23, 18, 23]),
    (12, [27, 22, 26]),
    (13, [31, 26, 31]),
    (14, [37, 30, 36]),
    (15, [43, 36, 43]),
    (16, [52, 42, 51]),
    (17, [62, 51, 62]),
    (18, [76, 61, 75]),
    (19, [97, 75, 96]),
    (20, [127, 96, 126]),
    (21, [177, 126, 176]),
    (22, [277, 176, 276]),
    (23, [577, 276, 576]),
];

/// Cells of [`COMPARISON_GAMMA5`] that reflect an existence refinement, as
/// `(d, column)`.
pub const COMPARISON_REFINED: [(usize, usize); 3] = [(18, 0), (19, 1), (18, 2)];

fn lookup(rows: &[(usize, [Option<u32>; 4], &str)], d: usize, k: u64) -> Option<Option<u32>> {
    let col = usize::try_from(k).ok()?.checked_sub(2)?;
    rows.iter().find(|r| r.0 == d).and_then(|r| r.1.get(col).copied())
}

/// Printed Euclidean cell: `None` outside the printed grid, `Some(None)` for
/// a blank.
pub fn euclidean_cell(d: usize, k: u64) -> Option<Option<u32>> {
    lookup(&EUCLIDEAN, d, k)
}

pub fn spherical_pos_cell(d: usize, k: u64) -> Option<Option<u32>> {
    lookup(&SPHERICAL_POS, d, k)
}

/// Printed comparison cell, column 0..3.
pub fn comparison_cell(d: usize, col: usize) -> Option<u32> {
    COMPARISON_GAMMA5.iter().find(|r| r.0 == d).and_then(|r| r.1.get(col).copied())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_shapes() {
        let printed = |rows: &[(usize, [Option<u32>; 4], &str)]| {
            rows.iter().map(|r| r.1.iter().flatten().count()).sum::<usize>()
        };
        assert_eq!(printed(&EUCLIDEAN), 80);
        assert_eq!(printed(&SPHERICAL_POS), 82);
        assert_eq!(euclidean_cell(8, 2), Some(None));
        assert_eq!(euclidean_cell(33, 5), Some(Some(58)));
        assert_eq!(euclidean_cell(4, 2), None);
        assert_eq!(spherical_pos_cell(24, 3), Some(Some(576)));
        assert_eq!(comparison_cell(18, 0), Some(76));
    }
}
