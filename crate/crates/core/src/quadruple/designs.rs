//! Stored data for the ring hosts and the small packings, found by a SAT
//! search (degree and cut constraints) over random caps; every entry is
//! validated in tests.

use crate::graph::Vertex;

/// Partition of the two caps for residue `r` and ring-count parity `parity`.
///
/// Classes: `0..3` paths, `3` matching, `4` discarded. Inner names: `0..4`
/// the 4-cycle, `4 + c` column `c` of the first ring. Outer names: `0..8`
/// the last ring, `8 + t` cap vertex `t`.
pub(super) struct Caps {
    pub r: usize,
    pub parity: usize,
    pub inner: &'static [(usize, usize, u8)],
    pub outer: &'static [(usize, usize, u8)],
    pub outer_crossings: &'static [[[usize; 2]; 2]],
}

/// A whole packing of three paths and a perfect matching.
pub(super) struct Small {
    pub n: usize,
    pub paths: [&'static [Vertex]; 3],
    pub matching: &'static [[Vertex; 2]],
    pub crossings: &'static [[[Vertex; 2]; 2]],
}

pub(super) const CAPS: [Caps; 8] = [
    Caps {
        r: 0,
        parity: 0,
        inner: &[(0, 1, 2), (0, 4, 1), (0, 5, 0), (0, 6, 0), (1, 5, 2), (1, 2, 1), (1, 6, 3), (1, 7, 1), (1, 8, 0), (2, 7, 0), (2, 3, 0), (2, 8, 2), (2, 9, 3), (2, 10, 2), (3, 9, 2), (0, 3, 3), (3, 10, 1), (3, 11, 1), (3, 4, 2), (0, 11, 2), (0, 2, 1), (1, 3, 0), (4, 5, 3), (5, 6, 1), (6, 7, 2), (7, 8, 3), (8, 9, 1), (9, 10, 0), (10, 11, 3), (4, 11, 0)],
        outer: &[(0, 1, 0), (1, 2, 3), (2, 3, 2), (3, 4, 3), (4, 5, 4), (5, 6, 2), (6, 7, 1), (0, 7, 3), (0, 9, 1), (1, 3, 1), (1, 7, 4), (1, 9, 2), (2, 9, 1), (3, 8, 0), (3, 9, 4), (4, 8, 2), (4, 9, 0), (4, 11, 1), (5, 8, 0), (5, 10, 1), (5, 11, 3), (6, 10, 3), (6, 11, 0), (7, 9, 4), (7, 10, 2), (7, 11, 0), (8, 9, 3), (8, 11, 1), (9, 10, 0), (9, 11, 2), (10, 11, 2)],
        outer_crossings: &[[[0, 9], [1, 7]], [[9, 10], [7, 11]], [[1, 3], [2, 9]], [[4, 9], [3, 8]], [[4, 11], [5, 8]], [[6, 11], [5, 10]]],
    },
    Caps {
        r: 2,
        parity: 0,
        inner: &[(0, 1, 2), (0, 4, 1), (0, 5, 0), (0, 6, 0), (1, 5, 1), (1, 2, 0), (1, 6, 1), (1, 7, 2), (1, 8, 0), (2, 7, 0), (2, 3, 1), (2, 8, 2), (2, 9, 1), (2, 10, 3), (3, 9, 0), (0, 3, 1), (3, 10, 0), (3, 11, 2), (3, 4, 2), (0, 11, 3), (0, 2, 2), (1, 3, 3), (4, 5, 3), (5, 6, 2), (6, 7, 3), (7, 8, 1), (8, 9, 3), (9, 10, 2), (10, 11, 1), (4, 11, 0)],
        outer: &[(0, 1, 1), (1, 2, 4), (2, 3, 3), (3, 4, 4), (4, 5, 0), (5, 6, 2), (6, 7, 0), (0, 7, 3), (0, 10, 2), (0, 13, 0), (1, 8, 0), (1, 10, 4), (1, 11, 3), (1, 13, 2), (2, 8, 2), (2, 11, 0), (2, 12, 1), (3, 8, 1), (3, 9, 2), (3, 12, 0), (4, 6, 3), (4, 9, 1), (4, 12, 2), (5, 9, 3), (6, 9, 4), (6, 10, 1), (7, 9, 1), (7, 10, 2), (8, 9, 0), (8, 10, 4), (8, 11, 2), (8, 12, 3), (8, 13, 1), (9, 10, 0), (9, 12, 2), (10, 11, 1), (10, 12, 0), (10, 13, 3), (11, 13, 1)],
        outer_crossings: &[[[3, 9], [4, 12]], [[8, 9], [10, 12]], [[7, 9], [6, 10]], [[1, 8], [2, 11]], [[10, 11], [8, 13]], [[1, 10], [0, 13]], [[4, 6], [5, 9]], [[2, 12], [3, 8]]],
    },
    Caps {
        r: 4,
        parity: 0,
        inner: &[(0, 1, 0), (0, 4, 2), (0, 5, 2), (0, 6, 0), (1, 5, 0), (1, 2, 3), (1, 6, 1), (1, 7, 1), (1, 8, 2), (2, 7, 0), (2, 3, 0), (2, 8, 1), (2, 9, 2), (2, 10, 2), (3, 9, 1), (0, 3, 3), (3, 10, 1), (3, 11, 2), (3, 4, 0), (0, 11, 1), (0, 2, 1), (1, 3, 2), (4, 5, 1), (5, 6, 3), (6, 7, 2), (7, 8, 3), (8, 9, 0), (9, 10, 3), (10, 11, 0), (4, 11, 3)],
        outer: &[(0, 1, 1), (1, 2, 4), (2, 3, 1), (3, 4, 0), (4, 5, 3), (5, 6, 0), (6, 7, 3), (0, 7, 4), (0, 8, 2), (0, 11, 0), (0, 12, 3), (1, 8, 0), (1, 11, 3), (1, 13, 2), (2, 10, 3), (2, 11, 2), (2, 13, 0), (3, 10, 2), (3, 13, 4), (3, 14, 3), (4, 6, 1), (4, 10, 2), (4, 14, 4), (5, 14, 2), (6, 12, 2), (6, 14, 4), (7, 8, 0), (7, 12, 1), (7, 14, 2), (8, 11, 1), (8, 12, 1), (8, 13, 3), (8, 15, 2), (9, 10, 1), (9, 12, 2), (9, 13, 2), (9, 14, 0), (9, 15, 3), (10, 13, 0), (10, 14, 1), (10, 15, 0), (11, 13, 1), (12, 13, 4), (12, 14, 0), (12, 15, 0), (13, 15, 1), (14, 15, 1)],
        outer_crossings: &[[[4, 6], [5, 14]], [[2, 10], [3, 13]], [[7, 14], [6, 12]], [[14, 15], [9, 12]], [[3, 14], [4, 10]], [[8, 15], [12, 13]], [[10, 15], [9, 13]], [[1, 8], [0, 11]], [[7, 8], [0, 12]], [[1, 13], [2, 11]]],
    },
    Caps {
        r: 6,
        parity: 0,
        inner: &[(0, 1, 0), (0, 4, 1), (0, 5, 2), (0, 6, 1), (1, 5, 1), (1, 2, 2), (1, 6, 0), (1, 7, 3), (1, 8, 2), (2, 7, 1), (2, 3, 0), (2, 8, 1), (2, 9, 0), (2, 10, 3), (3, 9, 2), (0, 3, 0), (3, 10, 2), (3, 11, 1), (3, 4, 3), (0, 11, 3), (0, 2, 2), (1, 3, 1), (4, 5, 0), (5, 6, 3), (6, 7, 2), (7, 8, 0), (8, 9, 3), (9, 10, 1), (10, 11, 0), (4, 11, 2)],
        outer: &[(0, 1, 3), (1, 2, 1), (2, 3, 0), (3, 4, 4), (4, 5, 3), (5, 6, 1), (6, 7, 3), (0, 7, 0), (0, 9, 1), (0, 10, 2), (1, 9, 4), (1, 10, 2), (1, 12, 0), (1, 16, 4), (2, 11, 2), (2, 12, 3), (3, 11, 3), (3, 12, 1), (3, 13, 4), (3, 14, 2), (3, 17, 4), (4, 6, 0), (4, 14, 2), (4, 17, 1), (5, 17, 2), (6, 9, 2), (6, 17, 4), (7, 9, 1), (7, 17, 2), (8, 9, 0), (8, 10, 3), (8, 13, 1), (8, 15, 1), (8, 16, 2), (8, 17, 0), (9, 10, 0), (9, 15, 3), (9, 16, 2), (9, 17, 4), (10, 12, 0), (10, 16, 1), (11, 12, 2), (11, 13, 0), (11, 14, 1), (11, 16, 0), (12, 13, 2), (12, 16, 1), (13, 14, 0), (13, 15, 2), (13, 16, 3), (13, 17, 1), (14, 15, 1), (14, 17, 3), (15, 16, 0), (15, 17, 0)],
        outer_crossings: &[[[0, 10], [1, 9]], [[11, 16], [12, 13]], [[3, 12], [2, 11]], [[15, 16], [8, 13]], [[6, 9], [7, 17]], [[4, 6], [5, 17]], [[3, 17], [4, 14]], [[9, 16], [8, 10]], [[3, 13], [11, 14]], [[9, 15], [8, 17]], [[1, 16], [10, 12]], [[13, 17], [14, 15]]],
    },
    Caps {
        r: 0,
        parity: 1,
        inner: &[(0, 1, 3), (0, 4, 0), (0, 5, 1), (0, 6, 1), (1, 5, 0), (1, 2, 0), (1, 6, 2), (1, 7, 2), (1, 8, 1), (2, 7, 1), (2, 3, 3), (2, 8, 2), (2, 9, 1), (2, 10, 0), (3, 9, 2), (0, 3, 0), (3, 10, 2), (3, 11, 0), (3, 4, 1), (0, 11, 2), (0, 2, 2), (1, 3, 1), (4, 5, 2), (5, 6, 3), (6, 7, 0), (7, 8, 3), (8, 9, 0), (9, 10, 3), (10, 11, 1), (4, 11, 3)],
        outer: &[(0, 1, 3), (1, 2, 2), (2, 3, 3), (3, 4, 2), (4, 5, 4), (5, 6, 0), (6, 7, 3), (0, 7, 1), (0, 9, 2), (1, 3, 1), (1, 7, 4), (1, 9, 0), (2, 9, 0), (3, 8, 0), (3, 9, 4), (4, 8, 3), (4, 9, 1), (4, 11, 0), (5, 8, 1), (5, 10, 2), (5, 11, 3), (6, 10, 1), (6, 11, 2), (7, 9, 4), (7, 10, 0), (7, 11, 2), (8, 9, 2), (8, 11, 1), (9, 10, 3), (9, 11, 1), (10, 11, 0)],
        outer_crossings: &[[[0, 9], [1, 7]], [[9, 10], [7, 11]], [[1, 3], [2, 9]], [[4, 9], [3, 8]], [[4, 11], [5, 8]], [[6, 11], [5, 10]]],
    },
    Caps {
        r: 2,
        parity: 1,
        inner: &[(0, 1, 3), (0, 4, 2), (0, 5, 0), (0, 6, 1), (1, 5, 2), (1, 2, 0), (1, 6, 2), (1, 7, 1), (1, 8, 0), (2, 7, 3), (2, 3, 0), (2, 8, 1), (2, 9, 2), (2, 10, 2), (3, 9, 1), (0, 3, 2), (3, 10, 3), (3, 11, 2), (3, 4, 0), (0, 11, 0), (0, 2, 1), (1, 3, 1), (4, 5, 1), (5, 6, 3), (6, 7, 0), (7, 8, 2), (8, 9, 3), (9, 10, 0), (10, 11, 1), (4, 11, 3)],
        outer: &[(0, 1, 0), (1, 2, 4), (2, 3, 2), (3, 4, 4), (4, 5, 3), (5, 6, 1), (6, 7, 3), (0, 7, 1), (0, 10, 2), (0, 13, 3), (1, 8, 3), (1, 10, 4), (1, 11, 2), (1, 13, 1), (2, 8, 1), (2, 11, 0), (2, 12, 3), (3, 8, 0), (3, 9, 3), (3, 12, 1), (4, 6, 0), (4, 9, 1), (4, 12, 2), (5, 9, 0), (6, 9, 4), (6, 10, 2), (7, 9, 2), (7, 10, 0), (8, 9, 2), (8, 10, 4), (8, 11, 1), (8, 12, 0), (8, 13, 2), (9, 10, 1), (9, 12, 0), (10, 11, 3), (10, 12, 1), (10, 13, 0), (11, 13, 2)],
        outer_crossings: &[[[3, 9], [4, 12]], [[8, 9], [10, 12]], [[7, 9], [6, 10]], [[1, 8], [2, 11]], [[10, 11], [8, 13]], [[1, 10], [0, 13]], [[4, 6], [5, 9]], [[2, 12], [3, 8]]],
    },
    Caps {
        r: 4,
        parity: 1,
        inner: &[(0, 1, 3), (0, 4, 2), (0, 5, 1), (0, 6, 0), (1, 5, 2), (1, 2, 1), (1, 6, 1), (1, 7, 0), (1, 8, 2), (2, 7, 1), (2, 3, 3), (2, 8, 0), (2, 9, 2), (2, 10, 2), (3, 9, 0), (0, 3, 2), (3, 10, 1), (3, 11, 2), (3, 4, 1), (0, 11, 1), (0, 2, 0), (1, 3, 0), (4, 5, 0), (5, 6, 3), (6, 7, 2), (7, 8, 3), (8, 9, 1), (9, 10, 3), (10, 11, 0), (4, 11, 3)],
        outer: &[(0, 1, 2), (1, 2, 1), (2, 3, 4), (3, 4, 3), (4, 5, 0), (5, 6, 1), (6, 7, 3), (0, 7, 4), (0, 8, 1), (0, 11, 3), (0, 12, 0), (1, 8, 3), (1, 11, 0), (1, 13, 4), (2, 10, 0), (2, 11, 2), (2, 13, 3), (3, 10, 2), (3, 13, 1), (3, 14, 0), (4, 6, 2), (4, 10, 1), (4, 14, 4), (5, 14, 3), (6, 12, 0), (6, 14, 4), (7, 8, 2), (7, 12, 1), (7, 14, 0), (8, 11, 0), (8, 12, 2), (8, 13, 0), (8, 15, 1), (9, 10, 0), (9, 12, 3), (9, 13, 2), (9, 14, 1), (9, 15, 2), (10, 13, 2), (10, 14, 1), (10, 15, 3), (11, 13, 1), (12, 13, 4), (12, 14, 2), (12, 15, 1), (13, 15, 0), (14, 15, 2)],
        outer_crossings: &[[[4, 6], [5, 14]], [[2, 10], [3, 13]], [[7, 14], [6, 12]], [[14, 15], [9, 12]], [[3, 14], [4, 10]], [[8, 15], [12, 13]], [[10, 15], [9, 13]], [[1, 8], [0, 11]], [[7, 8], [0, 12]], [[1, 13], [2, 11]]],
    },
    Caps {
        r: 6,
        parity: 1,
        inner: &[(0, 1, 1), (0, 4, 2), (0, 5, 3), (0, 6, 0), (1, 5, 0), (1, 2, 2), (1, 6, 1), (1, 7, 2), (1, 8, 3), (2, 7, 1), (2, 3, 3), (2, 8, 1), (2, 9, 0), (2, 10, 2), (3, 9, 1), (0, 3, 2), (3, 10, 1), (3, 11, 2), (3, 4, 0), (0, 11, 1), (0, 2, 0), (1, 3, 0), (4, 5, 1), (5, 6, 2), (6, 7, 3), (7, 8, 0), (8, 9, 2), (9, 10, 3), (10, 11, 0), (4, 11, 3)],
        outer: &[(0, 1, 2), (1, 2, 1), (2, 3, 3), (3, 4, 4), (4, 5, 1), (5, 6, 2), (6, 7, 3), (0, 7, 0), (0, 9, 3), (0, 10, 1), (1, 9, 4), (1, 10, 3), (1, 12, 0), (1, 16, 4), (2, 11, 0), (2, 12, 2), (3, 11, 0), (3, 12, 2), (3, 13, 4), (3, 14, 1), (3, 17, 4), (4, 6, 0), (4, 14, 3), (4, 17, 2), (5, 17, 3), (6, 9, 1), (6, 17, 4), (7, 9, 2), (7, 17, 1), (8, 9, 1), (8, 10, 1), (8, 13, 0), (8, 15, 2), (8, 16, 3), (8, 17, 0), (9, 10, 0), (9, 15, 2), (9, 16, 0), (9, 17, 4), (10, 12, 0), (10, 16, 2), (11, 12, 3), (11, 13, 2), (11, 14, 2), (11, 16, 1), (12, 13, 1), (12, 16, 1), (13, 14, 0), (13, 15, 3), (13, 16, 2), (13, 17, 1), (14, 15, 1), (14, 17, 2), (15, 16, 0), (15, 17, 0)],
        outer_crossings: &[[[0, 10], [1, 9]], [[11, 16], [12, 13]], [[3, 12], [2, 11]], [[15, 16], [8, 13]], [[6, 9], [7, 17]], [[4, 6], [5, 17]], [[3, 17], [4, 14]], [[9, 16], [8, 10]], [[3, 13], [11, 14]], [[9, 15], [8, 17]], [[1, 16], [10, 12]], [[13, 17], [14, 15]]],
    },
];

pub(super) const SMALL: [Small; 6] = [
    Small {
        n: 12,
        paths: [&[4, 10, 0, 1, 5, 2, 6, 7, 8, 9, 3, 11], &[7, 11, 8, 1, 4, 2, 0, 3, 6, 5, 10, 9], &[6, 9, 2, 3, 8, 5, 4, 11, 0, 7, 1, 10]],
        matching: &[[2, 10], [6, 8], [0, 4], [1, 11], [3, 7], [5, 9]],
        crossings: &[[[5, 2], [10, 9]], [[1, 7], [8, 11]], [[4, 2], [0, 10]], [[10, 1], [5, 4]], [[9, 8], [6, 5]], [[7, 0], [3, 11]], [[6, 2], [9, 3]], [[6, 7], [3, 8]], [[11, 4], [0, 1]]],
    },
    Small {
        n: 14,
        paths: [&[1, 0, 11, 7, 3, 6, 8, 9, 5, 13, 10, 4, 12, 2], &[3, 12, 7, 9, 13, 2, 10, 1, 5, 0, 4, 6, 11, 8], &[10, 0, 2, 1, 7, 5, 8, 3, 9, 4, 13, 6, 12, 11]],
        matching: &[[0, 12], [1, 13], [2, 4], [3, 11], [5, 10], [6, 9], [7, 8]],
        crossings: &[[[4, 9], [6, 13]], [[5, 8], [7, 9]], [[0, 11], [7, 12]], [[6, 8], [3, 9]], [[0, 4], [2, 12]], [[8, 11], [3, 7]], [[0, 5], [1, 7]], [[4, 10], [2, 13]], [[1, 2], [0, 10]], [[5, 10], [1, 13]], [[6, 11], [3, 12]]],
    },
    Small {
        n: 16,
        paths: [&[7, 2, 1, 8, 9, 14, 15, 12, 11, 4, 5, 6, 0, 3, 10, 13], &[4, 12, 6, 14, 13, 9, 15, 10, 11, 5, 0, 1, 3, 2, 8, 7], &[4, 3, 9, 10, 2, 0, 11, 13, 12, 5, 14, 7, 1, 6, 8, 15]],
        matching: &[[0, 4], [1, 5], [2, 9], [3, 11], [6, 7], [8, 14], [10, 12], [13, 15]],
        crossings: &[[[0, 6], [1, 5]], [[1, 8], [2, 7]], [[2, 10], [3, 9]], [[3, 4], [0, 11]], [[0, 2], [1, 3]], [[8, 15], [9, 14]], [[10, 12], [11, 13]], [[5, 14], [6, 12]], [[13, 14], [12, 15]], [[7, 14], [6, 8]], [[9, 13], [10, 15]], [[5, 11], [4, 12]]],
    },
    Small {
        n: 18,
        paths: [&[7, 1, 6, 16, 12, 11, 10, 2, 8, 14, 9, 3, 4, 0, 5, 13, 17, 15], &[13, 12, 10, 15, 4, 5, 1, 0, 11, 3, 2, 9, 8, 6, 7, 14, 16, 17], &[7, 8, 1, 2, 0, 3, 10, 16, 9, 12, 15, 13, 11, 4, 17, 5, 6, 14]],
        matching: &[[0, 6], [1, 3], [2, 7], [4, 13], [5, 14], [8, 16], [9, 10], [11, 15], [12, 17]],
        crossings: &[[[0, 6], [1, 5]], [[1, 8], [2, 7]], [[2, 10], [3, 9]], [[3, 4], [0, 11]], [[0, 2], [1, 3]], [[5, 13], [4, 17]], [[8, 16], [9, 14]], [[4, 15], [11, 13]], [[10, 16], [9, 12]], [[6, 8], [7, 14]], [[10, 15], [11, 12]], [[5, 14], [6, 16]], [[12, 13], [15, 17]]],
    },
    Small {
        n: 20,
        paths: [&[12, 18, 13, 6, 15, 17, 10, 14, 9, 3, 11, 19, 4, 0, 5, 1, 2, 7, 8, 16], &[5, 15, 13, 12, 14, 16, 18, 7, 6, 0, 1, 8, 2, 9, 17, 11, 4, 3, 10, 19], &[5, 4, 6, 1, 7, 16, 12, 17, 13, 19, 15, 11, 0, 3, 2, 10, 9, 8, 14, 18]],
        matching: &[[0, 2], [1, 3], [4, 15], [5, 6], [7, 12], [8, 18], [9, 16], [10, 11], [13, 14], [17, 19]],
        crossings: &[[[0, 6], [1, 5]], [[1, 8], [2, 7]], [[2, 10], [3, 9]], [[3, 4], [0, 11]], [[0, 2], [1, 3]], [[15, 17], [13, 19]], [[12, 17], [13, 14]], [[10, 14], [9, 17]], [[13, 18], [7, 12]], [[11, 15], [4, 19]], [[14, 18], [12, 16]], [[4, 6], [5, 15]], [[8, 18], [7, 16]], [[9, 16], [8, 14]], [[11, 17], [10, 19]]],
    },
    Small {
        n: 22,
        paths: [&[13, 5, 0, 1, 2, 3, 4, 12, 19, 11, 10, 18, 17, 9, 8, 16, 15, 7, 6, 14, 20, 21], &[12, 11, 0, 4, 13, 20, 19, 10, 3, 9, 18, 21, 17, 8, 2, 7, 16, 14, 5, 1, 6, 15], &[16, 9, 2, 10, 17, 15, 8, 1, 7, 14, 21, 19, 4, 5, 12, 13, 6, 0, 3, 11, 18, 20]],
        matching: &[[0, 2], [1, 3], [4, 11], [5, 6], [7, 8], [9, 10], [12, 20], [13, 21], [14, 15], [16, 17], [18, 19]],
        crossings: &[[[4, 13], [5, 12]], [[5, 14], [6, 13]], [[6, 15], [7, 14]], [[7, 16], [8, 15]], [[8, 17], [9, 16]], [[9, 18], [10, 17]], [[10, 19], [11, 18]], [[11, 12], [4, 19]], [[0, 6], [1, 5]], [[1, 8], [2, 7]], [[2, 10], [3, 9]], [[3, 4], [0, 11]], [[0, 2], [1, 3]], [[19, 21], [18, 20]], [[13, 21], [14, 20]], [[15, 17], [14, 16]]],
    },
];
