//! Independence-number bounds on the upper domination number.
//!
//! For minimum degree `δ` and maximum degree `Δ > 0`:
//!
//! ```text
//! α ≤ Γ ≤ max{ α, n/2 + α(Δ-δ)/(2Δ) - (Δ-δ)/Δ }
//! ```
//!
//! The second term is evaluated exactly over the common denominator `2Δ`
//! and floored. A cubic graph on at least six vertices additionally has
//! `Γ ≤ n/2`.

use crate::error::Result;
use crate::graph::Graph;
use crate::oracle::alpha_oracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsReport {
    pub alpha: usize,
    pub lower: usize,
    pub upper: usize,
    /// The graph is 3-regular with at least 6 vertices, so `upper <= n/2`.
    pub corollary_applies: bool,
}

/// `n/2 + α(Δ-δ)/(2Δ) - (Δ-δ)/Δ` as `(numerator, 2Δ)`; `None` when `Δ = 0`.
pub fn degree_bound_ratio(
    n: usize,
    alpha: usize,
    min_deg: usize,
    max_deg: usize,
) -> Option<(i64, i64)> {
    if max_deg == 0 {
        return None;
    }
    let (n, alpha, lo, hi) = (n as i64, alpha as i64, min_deg as i64, max_deg as i64);
    let spread = hi - lo;
    Some((n * hi + alpha * spread - 2 * spread, 2 * hi))
}

pub fn bazgan_bounds(g: &Graph) -> Result<BoundsReport> {
    let alpha = alpha_oracle(g)?;
    let mut upper = match degree_bound_ratio(g.n(), alpha, g.min_degree(), g.max_degree()) {
        None => alpha,
        Some((num, den)) => alpha.max(num.div_euclid(den).max(0) as usize),
    };
    let corollary_applies = g.regular_degree() == Some(3) && g.n() >= 6;
    if corollary_applies {
        upper = upper.min(g.n() / 2);
    }
    Ok(BoundsReport {
        alpha,
        lower: alpha,
        upper,
        corollary_applies,
    })
}

/// `⌊n/2⌋` when `g` is `d`-regular with `1 <= d <= ⌈n/2⌉`; the independence
/// number never exceeds it then.
pub fn rosenfeld_bound(g: &Graph) -> Option<usize> {
    let d = g.regular_degree()?;
    (d >= 1 && d <= g.n().div_ceil(2)).then_some(g.n() / 2)
}
