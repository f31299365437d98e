//! Whole packings for caterpillars the leaf additions cannot reach: double
//! stars with at most six legs on a side, and backbone-5 caterpillars whose
//! only leafy spine vertex has fewer than ten leaves.
//!
//! Found by randomized search over triangulations with crossing pairs in
//! adjacent triangle pairs; every entry is realized and validated in tests.

use super::Whole;

/// Keyed by the legs `(a, b)` of the two spine vertices, `2 <= a <= b <= 6`.
/// The first three tree edges walk the backbone; the spine vertex with `a`
/// legs comes second.
pub(super) const DOUBLE_STARS: [((usize, usize), Whole); 15] = [
    (
        (2, 2),
        Whole {
            n: 6,
            tree: &[[5, 1], [1, 4], [4, 2], [1, 0], [4, 3]],
            paths: [&[1, 2, 0, 3, 5, 4], &[1, 3, 2, 5, 0, 4]],
            crossings: &[[[4, 3], [2, 5]], [[1, 3], [5, 0]], [[1, 2], [0, 4]]],
        },
    ),
    (
        (2, 3),
        Whole {
            n: 7,
            tree: &[[6, 4], [4, 3], [3, 1], [4, 2], [3, 0], [3, 5]],
            paths: [&[0, 2, 1, 4, 5, 6, 3], &[3, 2, 6, 1, 5, 0, 4]],
            crossings: &[[[4, 3], [5, 6]], [[0, 2], [3, 1]], [[4, 2], [6, 1]], [[0, 4], [1, 5]]],
        },
    ),
    (
        (2, 4),
        Whole {
            n: 8,
            tree: &[[1, 5], [5, 4], [4, 7], [5, 2], [4, 0], [4, 6], [4, 3]],
            paths: [&[4, 1, 2, 0, 6, 3, 7, 5], &[4, 2, 6, 7, 1, 3, 0, 5]],
            crossings: &[[[1, 2], [5, 4]], [[6, 7], [3, 0]], [[4, 7], [1, 3]], [[4, 0], [2, 6]]],
        },
    ),
    (
        (2, 5),
        Whole {
            n: 9,
            tree: &[[3, 7], [7, 4], [4, 8], [7, 6], [4, 2], [4, 5], [4, 1], [4, 0]],
            paths: [&[0, 1, 2, 5, 7, 8, 6, 3, 4], &[4, 6, 5, 8, 2, 0, 3, 1, 7]],
            crossings: &[[[4, 6], [7, 8]], [[1, 2], [4, 0]], [[3, 4], [1, 7]], [[4, 5], [8, 2]], [[6, 3], [5, 7]]],
        },
    ),
    (
        (2, 6),
        Whole {
            n: 10,
            tree: &[[6, 4], [4, 2], [2, 1], [4, 8], [2, 7], [2, 9], [2, 0], [2, 3], [2, 5]],
            paths: [&[2, 6, 0, 1, 3, 7, 8, 9, 5, 4], &[2, 8, 5, 6, 1, 7, 9, 3, 0, 4]],
            crossings: &[[[7, 8], [9, 5]], [[2, 7], [9, 3]], [[2, 5], [4, 8]], [[3, 0], [1, 7]], [[0, 4], [5, 6]], [[2, 0], [6, 1]]],
        },
    ),
    (
        (3, 3),
        Whole {
            n: 8,
            tree: &[[0, 7], [7, 2], [2, 3], [7, 4], [7, 5], [2, 1], [2, 6]],
            paths: [&[2, 0, 4, 3, 7, 6, 1, 5], &[3, 6, 4, 2, 5, 0, 1, 7]],
            crossings: &[[[0, 4], [1, 7]], [[7, 6], [4, 3]], [[4, 2], [6, 1]], [[2, 0], [7, 5]]],
        },
    ),
    (
        (3, 4),
        Whole {
            n: 9,
            tree: &[[2, 7], [7, 3], [3, 6], [7, 5], [7, 8], [3, 4], [3, 0], [3, 1]],
            paths: [&[3, 5, 1, 6, 8, 0, 2, 4, 7], &[3, 8, 5, 4, 1, 2, 6, 0, 7]],
            crossings: &[[[2, 7], [8, 5]], [[0, 2], [6, 8]], [[5, 1], [2, 4]], [[0, 7], [3, 8]], [[3, 5], [4, 7]]],
        },
    ),
    (
        (3, 5),
        Whole {
            n: 10,
            tree: &[[2, 9], [9, 7], [7, 5], [9, 4], [9, 8], [7, 3], [7, 0], [7, 1], [7, 6]],
            paths: [&[0, 4, 3, 1, 9, 6, 2, 7, 8, 5], &[2, 1, 6, 8, 0, 9, 3, 5, 4, 7]],
            crossings: &[[[9, 7], [6, 8]], [[2, 7], [3, 1]], [[1, 9], [6, 2]], [[7, 0], [8, 5]], [[4, 7], [3, 5]]],
        },
    ),
    (
        (3, 6),
        Whole {
            n: 11,
            tree: &[[1, 2], [2, 10], [10, 6], [2, 8], [2, 0], [10, 7], [10, 9], [10, 3], [10, 4], [10, 5]],
            paths: [&[2, 3, 5, 7, 9, 4, 6, 0, 1, 8, 10], &[2, 6, 1, 10, 0, 8, 3, 7, 4, 5, 9]],
            crossings: &[[[0, 8], [2, 10]], [[4, 6], [1, 10]], [[1, 8], [2, 3]], [[10, 7], [3, 5]], [[4, 5], [10, 9]], [[0, 1], [2, 6]]],
        },
    ),
    (
        (4, 4),
        Whole {
            n: 10,
            tree: &[[9, 1], [1, 2], [2, 8], [1, 7], [1, 0], [1, 6], [2, 3], [2, 5], [2, 4]],
            paths: [&[0, 2, 6, 4, 7, 5, 8, 1, 3, 9], &[0, 5, 1, 4, 3, 6, 9, 2, 7, 8]],
            crossings: &[[[3, 9], [1, 6]], [[6, 4], [2, 3]], [[2, 7], [5, 8]], [[8, 1], [4, 7]]],
        },
    ),
    (
        (4, 5),
        Whole {
            n: 11,
            tree: &[[5, 0], [0, 2], [2, 9], [0, 1], [0, 8], [0, 4], [2, 6], [2, 3], [2, 7], [2, 10]],
            paths: [&[0, 3, 4, 1, 6, 5, 2, 8, 7, 10, 9], &[7, 3, 8, 1, 2, 4, 6, 0, 10, 5, 9]],
            crossings: &[[[0, 1], [4, 6]], [[8, 1], [2, 4]], [[0, 2], [6, 5]], [[0, 8], [3, 4]], [[2, 3], [7, 10]]],
        },
    ),
    (
        (4, 6),
        Whole {
            n: 12,
            tree: &[[8, 9], [9, 4], [4, 3], [9, 1], [9, 6], [9, 11], [4, 7], [4, 5], [4, 10], [4, 0], [4, 2]],
            paths: [&[0, 5, 1, 4, 6, 8, 11, 7, 10, 2, 3, 9], &[4, 8, 7, 6, 11, 3, 1, 2, 5, 10, 0, 9]],
            crossings: &[[[11, 3], [0, 9]], [[9, 6], [8, 11]], [[4, 6], [8, 7]], [[5, 1], [4, 2]], [[4, 3], [9, 1]], [[0, 5], [10, 2]], [[4, 0], [7, 10]]],
        },
    ),
    (
        (5, 5),
        Whole {
            n: 12,
            tree: &[[4, 0], [0, 6], [6, 10], [0, 1], [0, 9], [0, 3], [0, 7], [6, 2], [6, 8], [6, 5], [6, 11]],
            paths: [&[0, 8, 4, 1, 2, 11, 3, 6, 7, 9, 5, 10], &[0, 11, 1, 3, 2, 4, 6, 9, 10, 7, 8, 5]],
            crossings: &[[[6, 10], [8, 5]], [[0, 9], [6, 7]], [[3, 2], [11, 1]], [[3, 6], [0, 11]]],
        },
    ),
    (
        (5, 6),
        Whole {
            n: 13,
            tree: &[[11, 5], [5, 4], [4, 1], [5, 6], [5, 8], [5, 9], [5, 0], [4, 10], [4, 3], [4, 2], [4, 7], [4, 12]],
            paths: [&[0, 4, 6, 1, 3, 2, 12, 5, 10, 11, 8, 7, 9], &[2, 5, 3, 12, 1, 7, 6, 9, 8, 4, 11, 0, 10]],
            crossings: &[[[11, 8], [4, 10]], [[11, 5], [0, 4]], [[4, 6], [8, 7]], [[6, 1], [7, 9]], [[1, 3], [4, 12]], [[5, 6], [9, 8]], [[5, 3], [2, 12]]],
        },
    ),
    (
        (6, 6),
        Whole {
            n: 14,
            tree: &[[9, 2], [2, 4], [4, 8], [2, 3], [2, 10], [2, 5], [2, 6], [2, 13], [4, 1], [4, 7], [4, 0], [4, 12], [4, 11]],
            paths: [&[0, 2, 7, 6, 8, 11, 3, 1, 10, 13, 5, 12, 9, 4], &[3, 0, 12, 1, 13, 9, 7, 8, 2, 11, 6, 4, 5, 10]],
            crossings: &[[[4, 1], [0, 12]], [[2, 5], [13, 9]], [[1, 13], [5, 10]], [[7, 8], [6, 4]], [[4, 5], [12, 9]], [[9, 7], [2, 4]], [[0, 2], [11, 3]], [[8, 2], [11, 6]]],
        },
    ),
];

/// Backbone-5 caterpillars with `k` leaves on spine position `j` only,
/// `j` in `{1, 2}`, `5 <= k <= 9`. The first four tree edges walk the backbone.
pub(super) const SINGLE_LEAFY: [((usize, usize), Whole); 10] = [
    (
        (1, 5),
        Whole {
            n: 10,
            tree: &[[2, 7], [7, 4], [4, 9], [9, 0], [7, 8], [7, 5], [7, 3], [7, 1], [7, 6]],
            paths: [&[1, 2, 3, 4, 0, 5, 8, 6, 9, 7], &[4, 5, 3, 1, 6, 2, 9, 8, 0, 7]],
            crossings: &[[[9, 7], [8, 6]], [[7, 1], [2, 3]], [[2, 9], [1, 6]], [[0, 7], [5, 8]], [[7, 4], [5, 3]]],
        },
    ),
    (
        (1, 6),
        Whole {
            n: 11,
            tree: &[[4, 5], [5, 2], [2, 10], [10, 9], [5, 6], [5, 0], [5, 7], [5, 3], [5, 1], [5, 8]],
            paths: [&[0, 8, 9, 4, 2, 3, 6, 7, 1, 10, 5], &[1, 3, 7, 2, 6, 4, 8, 10, 0, 9, 5]],
            crossings: &[[[5, 3], [7, 1]], [[10, 0], [9, 4]], [[6, 4], [5, 2]], [[3, 6], [7, 2]], [[9, 5], [8, 10]], [[4, 8], [5, 0]]],
        },
    ),
    (
        (1, 7),
        Whole {
            n: 12,
            tree: &[[7, 9], [9, 5], [5, 1], [1, 10], [9, 6], [9, 3], [9, 0], [9, 4], [9, 8], [9, 11], [9, 2]],
            paths: [&[3, 2, 5, 7, 6, 1, 8, 0, 4, 11, 10, 9], &[8, 4, 10, 5, 6, 3, 7, 2, 11, 0, 1, 9]],
            crossings: &[[[10, 9], [2, 11]], [[9, 4], [11, 0]], [[0, 1], [8, 4]], [[6, 3], [7, 9]], [[6, 1], [9, 5]]],
        },
    ),
    (
        (1, 8),
        Whole {
            n: 13,
            tree: &[[7, 2], [2, 0], [0, 6], [6, 4], [2, 5], [2, 12], [2, 11], [2, 8], [2, 10], [2, 9], [2, 3], [2, 1]],
            paths: [&[0, 3, 9, 11, 6, 7, 12, 1, 8, 10, 5, 4, 2], &[2, 6, 9, 0, 11, 3, 10, 1, 5, 8, 12, 4, 7]],
            crossings: &[[[2, 5], [3, 10]], [[6, 9], [2, 0]], [[4, 2], [7, 12]], [[12, 1], [5, 8]], [[0, 3], [11, 6]], [[2, 1], [8, 10]], [[2, 11], [3, 9]]],
        },
    ),
    (
        (1, 9),
        Whole {
            n: 14,
            tree: &[[3, 0], [0, 6], [6, 5], [5, 12], [0, 11], [0, 1], [0, 2], [0, 4], [0, 7], [0, 8], [0, 9], [0, 13], [0, 10]],
            paths: [&[0, 5, 1, 2, 7, 13, 8, 9, 11, 4, 3, 6, 12, 10], &[0, 12, 1, 9, 13, 11, 8, 4, 7, 3, 2, 6, 10, 5]],
            crossings: &[[[0, 7], [4, 3]], [[12, 10], [6, 5]], [[9, 11], [0, 8]], [[5, 1], [0, 12]], [[3, 6], [0, 2]], [[13, 11], [8, 4]], [[0, 13], [1, 9]]],
        },
    ),
    (
        (2, 5),
        Whole {
            n: 10,
            tree: &[[5, 6], [6, 1], [1, 2], [2, 3], [1, 0], [1, 8], [1, 9], [1, 7], [1, 4]],
            paths: [&[0, 7, 3, 6, 2, 9, 8, 4, 5, 1], &[1, 3, 5, 2, 4, 9, 0, 8, 7, 6]],
            crossings: &[[[2, 3], [4, 5]], [[1, 4], [2, 9]], [[1, 3], [7, 6]], [[6, 2], [5, 1]], [[1, 8], [0, 7]]],
        },
    ),
    (
        (2, 6),
        Whole {
            n: 11,
            tree: &[[4, 5], [5, 10], [10, 1], [1, 2], [10, 9], [10, 6], [10, 3], [10, 8], [10, 7], [10, 0]],
            paths: [&[1, 9, 5, 7, 8, 0, 2, 3, 6, 4, 10], &[7, 9, 8, 5, 0, 3, 4, 1, 6, 2, 10]],
            crossings: &[[[0, 2], [10, 3]], [[5, 10], [8, 0]], [[1, 2], [10, 6]], [[4, 10], [1, 9]], [[5, 7], [9, 8]]],
        },
    ),
    (
        (2, 7),
        Whole {
            n: 12,
            tree: &[[7, 10], [10, 1], [1, 6], [6, 4], [1, 9], [1, 2], [1, 5], [1, 11], [1, 8], [1, 0], [1, 3]],
            paths: [&[1, 4, 2, 0, 5, 8, 10, 3, 7, 11, 6, 9], &[1, 7, 8, 0, 10, 5, 11, 3, 4, 9, 2, 6]],
            crossings: &[[[10, 5], [7, 8]], [[1, 8], [0, 10]], [[1, 7], [10, 3]], [[1, 5], [2, 0]], [[3, 4], [1, 11]], [[11, 6], [4, 2]], [[1, 6], [9, 2]]],
        },
    ),
    (
        (2, 8),
        Whole {
            n: 13,
            tree: &[[9, 4], [4, 2], [2, 5], [5, 0], [2, 12], [2, 3], [2, 8], [2, 7], [2, 1], [2, 10], [2, 11], [2, 6]],
            paths: [&[2, 0, 3, 4, 6, 9, 11, 12, 7, 1, 8, 10, 5], &[2, 9, 12, 4, 11, 7, 8, 5, 1, 10, 0, 6, 3]],
            crossings: &[[[12, 4], [9, 11]], [[12, 7], [2, 11]], [[2, 3], [0, 6]], [[2, 5], [10, 0]], [[4, 2], [6, 9]], [[2, 1], [7, 8]], [[1, 10], [8, 5]]],
        },
    ),
    (
        (2, 9),
        Whole {
            n: 14,
            tree: &[[7, 12], [12, 0], [0, 3], [3, 4], [0, 11], [0, 2], [0, 9], [0, 13], [0, 8], [0, 1], [0, 10], [0, 5], [0, 6]],
            paths: [&[0, 4, 1, 2, 3, 7, 10, 13, 5, 6, 8, 11, 9, 12], &[0, 7, 9, 8, 12, 6, 11, 5, 10, 2, 4, 13, 1, 3]],
            crossings: &[[[0, 9], [8, 12]], [[0, 2], [3, 7]], [[0, 4], [13, 1]], [[0, 10], [13, 5]], [[1, 2], [3, 4]], [[6, 8], [11, 9]], [[0, 6], [11, 5]], [[12, 6], [7, 9]]],
        },
    ),
];
