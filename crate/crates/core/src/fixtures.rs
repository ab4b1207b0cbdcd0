//! Embedded benchmark inputs and their published reference results.
//!
//! Each fixture is the set of leading monomials of the degree-reverse-
//! lexicographical Groebner basis of a classical polynomial system; the
//! files record their provenance and are validated against the expected
//! (m, n, d) sizes at load time.  The reference table lists, per division,
//! the minimal basis length, the number of prolongations considered, and
//! the rounded percentage of reducible prolongations; an empty length marks
//! runs that were not carried out (Pommaret on ideals that are not
//! zero-dimensional, and cells whose computation was out of reach).

use crate::division::DivisionKind;
use crate::monomial::{parse_monomial_set, MonomialSet, OrderingKind};

/// Reference numbers for one (fixture, division) cell.
#[derive(Clone, Copy, Debug)]
pub struct ExpectedCell {
    pub division: DivisionKind,
    /// Minimal involutive basis length; `None` for cells left empty.
    pub length: Option<usize>,
    /// Prolongations considered during completion (reported, convention-
    /// dependent).
    pub prolongations: Option<u64>,
    /// Reducible prolongations as a rounded percentage.
    pub reducible_percent: Option<u8>,
}

const fn cell(division: DivisionKind, length: usize, prols: u64, pct: u8) -> ExpectedCell {
    ExpectedCell {
        division,
        length: Some(length),
        prolongations: Some(prols),
        reducible_percent: Some(pct),
    }
}

const fn empty(division: DivisionKind) -> ExpectedCell {
    ExpectedCell { division, length: None, prolongations: None, reducible_percent: None }
}

/// A benchmark input with its expected per-division results.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    /// Number of monomials, number of variables, maximal total degree.
    pub size: (usize, usize, u32),
    pub expected: &'static [ExpectedCell],
    raw: &'static str,
}

impl Fixture {
    /// Parses the embedded file, lex-sorted.  Panics if the fixture does not
    /// match its recorded (m, n, d) size.
    pub fn input(&self) -> MonomialSet {
        let set = parse_monomial_set(self.raw, OrderingKind::Lex)
            .unwrap_or_else(|e| panic!("fixture {}: {e}", self.name));
        let (m, n, d) = self.size;
        assert_eq!(set.len(), m, "fixture {}: monomial count", self.name);
        assert_eq!(set.arity(), n, "fixture {}: arity", self.name);
        assert_eq!(set.max_degree(), d, "fixture {}: max degree", self.name);
        set
    }

    pub fn expected_for(&self, division: DivisionKind) -> Option<&'static ExpectedCell> {
        self.expected.iter().find(|c| c.division == division)
    }

    /// The raw embedded file, provenance comments included.
    pub fn raw_text(&self) -> &'static str {
        self.raw
    }
}

use DivisionKind::{DivisionI, DivisionII, Janet, Pommaret, Thomas};
const D_L: DivisionKind = DivisionKind::Induced(OrderingKind::Lex);
const D_DL: DivisionKind = DivisionKind::Induced(OrderingKind::DegLex);
const D_DRL: DivisionKind = DivisionKind::Induced(OrderingKind::DegRevLex);

pub static FIXTURES: &[Fixture] = &[
    Fixture {
        name: "reimer5",
        size: (38, 5, 8),
        raw: include_str!("../fixtures/reimer5.mon"),
        expected: &[
            cell(Janet, 55, 190, 91),
            cell(Thomas, 4392, 17406, 75),
            cell(Pommaret, 55, 190, 91),
            empty(DivisionI),
            cell(DivisionII, 151, 503, 77),
            cell(D_L, 242, 798, 74),
            cell(D_DRL, 894, 3994, 79),
            cell(D_DL, 594, 2639, 79),
        ],
    },
    Fixture {
        name: "katsura7",
        size: (41, 7, 7),
        raw: include_str!("../fixtures/katsura7.mon"),
        expected: &[
            cell(Janet, 43, 211, 99),
            empty(Thomas),
            cell(Pommaret, 43, 211, 99),
            empty(DivisionI),
            cell(DivisionII, 201, 861, 81),
            cell(D_L, 201, 892, 82),
            cell(D_DRL, 1337, 7600, 83),
            cell(D_DL, 1346, 7663, 83),
        ],
    },
    Fixture {
        name: "cyc4",
        size: (7, 4, 6),
        raw: include_str!("../fixtures/cyc4.mon"),
        expected: &[
            cell(Janet, 7, 14, 100),
            cell(Thomas, 98, 242, 62),
            empty(Pommaret),
            cell(DivisionI, 98, 242, 62),
            cell(DivisionII, 25, 55, 67),
            cell(D_L, 41, 92, 63),
            cell(D_DRL, 9, 20, 90),
            cell(D_DL, 7, 14, 100),
        ],
    },
    Fixture {
        name: "cyc5",
        size: (20, 5, 8),
        raw: include_str!("../fixtures/cyc5.mon"),
        expected: &[
            cell(Janet, 23, 76, 96),
            cell(Thomas, 1010, 3544, 72),
            cell(Pommaret, 23, 76, 96),
            cell(DivisionI, 1010, 3544, 72),
            cell(DivisionII, 93, 297, 75),
            cell(D_L, 154, 488, 72),
            cell(D_DRL, 135, 548, 79),
            cell(D_DL, 106, 419, 79),
        ],
    },
    Fixture {
        name: "cyc6",
        size: (45, 6, 9),
        raw: include_str!("../fixtures/cyc6.mon"),
        expected: &[
            cell(Janet, 46, 194, 99),
            empty(Thomas),
            cell(Pommaret, 46, 194, 99),
            empty(DivisionI),
            cell(DivisionII, 201, 807, 81),
            cell(D_L, 385, 1527, 78),
            cell(D_DRL, 841, 4230, 81),
            cell(D_DL, 972, 4899, 81),
        ],
    },
    Fixture {
        name: "sq3",
        size: (25, 9, 4),
        raw: include_str!("../fixtures/sq3.mon"),
        expected: &[
            cell(Janet, 56, 239, 87),
            empty(Thomas),
            empty(Pommaret),
            empty(DivisionI),
            cell(DivisionII, 612, 2972, 80),
            cell(D_L, 531, 2920, 83),
            cell(D_DRL, 1711, 9362, 82),
            cell(D_DL, 1479, 8044, 82),
        ],
    },
    Fixture {
        name: "sq4",
        size: (161, 16, 6),
        raw: include_str!("../fixtures/sq4.mon"),
        expected: &[
            cell(Janet, 1324, 11836, 90),
            empty(Thomas),
            empty(Pommaret),
            empty(DivisionI),
            empty(DivisionII),
            empty(D_L),
            empty(D_DRL),
            empty(D_DL),
        ],
    },
];

pub fn by_name(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}
