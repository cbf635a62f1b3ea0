//! Small named graphs used throughout the tests and the CLI.

use crate::graph::Graph;

/// Whisker graph of a single edge: `x1x2, x1y1, x2y2`.
pub fn fix1() -> Graph {
    Graph::labeled(2, &[(0, 1), (0, 2), (1, 3)]).expect("valid")
}

/// The 12-vertex Cohen-Macaulay very well-covered graph with edge ideal
/// `(x1y1, ..., x6y6, x1x2, x1x3, x1x4, x1x5, x1x6, x2x3, x2x4, x2x5, x2x6,
/// x3y4, x3y5, x3y6, x4y5, x4y6)`.
pub fn fix2() -> Graph {
    let n = 6;
    let x = |i: usize| i - 1;
    let y = |i: usize| n + i - 1;
    let mut edges: Vec<(usize, usize)> = (1..=n).map(|i| (x(i), y(i))).collect();
    edges.extend([
        (x(1), x(2)),
        (x(1), x(3)),
        (x(1), x(4)),
        (x(1), x(5)),
        (x(1), x(6)),
        (x(2), x(3)),
        (x(2), x(4)),
        (x(2), x(5)),
        (x(2), x(6)),
        (x(3), y(4)),
        (x(3), y(5)),
        (x(3), y(6)),
        (x(4), y(5)),
        (x(4), y(6)),
    ]);
    Graph::labeled(n, &edges).expect("valid")
}

/// A single whisker `x1y1`.
pub fn fix3() -> Graph {
    Graph::labeled(1, &[(0, 1)]).expect("valid")
}
