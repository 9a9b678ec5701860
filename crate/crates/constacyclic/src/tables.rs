//! Published parameters of the parity-split negacyclic codes (table 1) and
//! the q-weight constacyclic codes (table 2), with their optimality labels
//! carried verbatim.

use serde::Serialize;

/// `[n, k, d]` with the optimality label printed next to it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Published {
    pub n: u64,
    pub k: u64,
    pub d: u64,
    pub label: &'static str,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PublishedRow {
    pub q: u64,
    pub m: u32,
    /// Table 2 only: every `ℓ` listed in the row.
    pub ells: &'static [u32],
    pub code: Published,
    pub dual: Published,
}

const OPT: &str = "optimal linear code";
const BKLC: &str = "best linear code known";

const fn row(q: u64, m: u32, ells: &'static [u32], code: (u64, u64, u64, &'static str), dual: (u64, u64, u64, &'static str)) -> PublishedRow {
    PublishedRow {
        q,
        m,
        ells,
        code: Published {
            n: code.0,
            k: code.1,
            d: code.2,
            label: code.3,
        },
        dual: Published {
            n: dual.0,
            k: dual.1,
            d: dual.2,
            label: dual.3,
        },
    }
}

pub const TABLE1: &[PublishedRow] = &[
    row(3, 2, &[], (4, 2, 3, OPT), (4, 2, 3, OPT)),
    row(3, 3, &[], (13, 6, 6, OPT), (13, 7, 5, OPT)),
    row(3, 4, &[], (40, 20, 9, "d_best=12"), (40, 20, 9, "d_best=12")),
    row(5, 2, &[], (12, 8, 4, OPT), (12, 4, 6, "d_optimal=8")),
    row(5, 3, &[], (62, 24, 22, "d_best=23"), (62, 38, 12, "d_best=14")),
    row(7, 2, &[], (24, 18, 5, BKLC), (24, 6, 14, "d_best=16")),
    row(9, 2, &[], (40, 32, 6, BKLC), (40, 8, 20, "d_best=27")),
];

pub const TABLE2: &[PublishedRow] = &[
    row(3, 2, &[0, 1], (4, 2, 3, OPT), (4, 2, 3, OPT)),
    row(3, 3, &[0, 2], (13, 10, 3, OPT), (13, 3, 9, OPT)),
    row(3, 3, &[1], (13, 6, 6, OPT), (13, 7, 5, OPT)),
    row(3, 4, &[0, 3], (40, 36, 3, OPT), (40, 4, 27, OPT)),
    row(3, 4, &[1, 2], (40, 24, 9, BKLC), (40, 16, 15, BKLC)),
    row(3, 5, &[0, 4], (121, 116, 3, OPT), (121, 5, 81, OPT)),
    row(3, 5, &[1], (121, 91, 9, "d_best=11"), (121, 30, 45, "d_best=46")),
    row(4, 2, &[0], (5, 3, 3, OPT), (5, 2, 4, OPT)),
    row(4, 2, &[1], (5, 2, 4, OPT), (5, 3, 3, OPT)),
    row(4, 3, &[0], (21, 18, 3, OPT), (21, 3, 16, OPT)),
    row(4, 3, &[1], (21, 9, 9, OPT), (21, 12, 7, OPT)),
    row(4, 3, &[2], (21, 15, 4, "d_best=5"), (21, 6, 12, OPT)),
    row(5, 2, &[0], (6, 4, 3, OPT), (6, 2, 5, OPT)),
    row(5, 2, &[1], (6, 2, 5, OPT), (6, 4, 3, OPT)),
    row(5, 3, &[0], (31, 28, 3, OPT), (31, 3, 25, OPT)),
    row(5, 3, &[1], (31, 13, 13, BKLC), (31, 18, 9, BKLC)),
    row(5, 3, &[2], (31, 21, 5, "d_best=7"), (31, 10, 15, BKLC)),
    row(7, 2, &[0], (8, 6, 3, OPT), (8, 2, 7, OPT)),
    row(7, 2, &[1], (8, 2, 7, OPT), (8, 6, 3, OPT)),
    row(7, 3, &[0], (57, 54, 3, OPT), (57, 3, 49, OPT)),
    row(7, 3, &[1], (57, 24, 21, BKLC), (57, 33, 13, "d_best=15")),
    row(7, 3, &[2], (57, 36, 7, "d_best=13"), (57, 21, 21, "d_best=24")),
];

pub fn table(id: u8) -> Option<&'static [PublishedRow]> {
    match id {
        1 => Some(TABLE1),
        2 => Some(TABLE2),
        _ => None,
    }
}
