//! Hermite functions `h_k` of the harmonic oscillator, their tensor products
//! `Φ_μ`, eigenvalues, level multiplicities, and the Plancherel-Rotach
//! approximation used as a cross-validation oracle.
//!
//! `h_k(t) = (2^k k! √π)^{-1/2} H_k(t) e^{-t²/2}` is evaluated through the
//! normalized three-term recurrence
//! `h_{k+1}(t) = t √(2/(k+1)) h_k(t) − √(k/(k+1)) h_{k-1}(t)`
//! with the Gaussian folded into `h_0`; mantissa/exponent scaling keeps every
//! intermediate representable even where `h_0` alone underflows.

use crate::gamma::binomial;
use crate::scaled::{Scaled, ScaledPair};
use crate::{Error, Result};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Float;

const PI: f64 = core::f64::consts::PI;

/// Multi-index μ ∈ ℕ₀ⁿ labelling a tensor eigenfunction Φ_μ.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument("multi-index needs dimension >= 1"));
        }
        Ok(MultiIndex(entries))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// |μ| = Σ μ_i.
    pub fn order(&self) -> u64 {
        self.0.iter().map(|&m| m as u64).sum()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }
}

impl From<&[u32]> for MultiIndex {
    fn from(s: &[u32]) -> Self {
        MultiIndex(s.to_vec())
    }
}

/// Eigenvalue of Φ_μ under H: `2|μ| + n`.
pub fn eigenvalue(mu: &MultiIndex) -> u64 {
    2 * mu.order() + mu.dim() as u64
}

/// Dimension of the level-k eigenspace in n variables: C(k+n-1, n-1).
pub fn level_multiplicity(k: u64, n: u32) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("dimension must be >= 1"));
    }
    binomial(k + n as u64 - 1, n as u64 - 1)
}

/// One level of the spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Eigenlevel {
    pub k: u64,
    pub n: u32,
    pub eigenvalue: u64,
    pub multiplicity: u64,
}

impl Eigenlevel {
    pub fn new(k: u64, n: u32) -> Result<Self> {
        Ok(Eigenlevel { k, n, eigenvalue: 2 * k + n as u64, multiplicity: level_multiplicity(k, n)? })
    }
}

#[inline]
fn check_point(t: f64) -> Result<()> {
    if !t.is_finite() {
        return Err(Error::InvalidArgument("evaluation point must be finite"));
    }
    Ok(())
}

fn h0_scaled(t: f64) -> Scaled {
    Scaled::from_ln(-0.5 * t * t - 0.25 * PI.ln(), false)
}

/// Walk the recurrence at a fixed point, yielding `(k, h_k(t))` scaled.
fn walk<F: FnMut(usize, Scaled)>(kmax: usize, t: f64, mut visit: F) {
    let h0 = h0_scaled(t);
    visit(0, h0);
    if kmax == 0 {
        return;
    }
    let mut pair = ScaledPair::new(h0, core::f64::consts::SQRT_2 * t * h0.mantissa);
    visit(1, pair.current());
    for k in 1..kmax {
        let a = t * (2.0 / (k as f64 + 1.0)).sqrt();
        let b = -(k as f64 / (k as f64 + 1.0)).sqrt();
        pair.step(a, b);
        visit(k + 1, pair.current());
    }
}

/// `h_k(t)`. Stable with no representable-range excursions for any
/// `k ≤ 10^4`, `|t| ≤ 200`; in the deep forbidden region the result flushes
/// to the correctly rounded 0.
pub fn hermite_1d(k: usize, t: f64) -> Result<f64> {
    check_point(t)?;
    let mut out = 0.0;
    walk(k, t, |j, v| {
        if j == k {
            out = v.to_f64();
        }
    });
    Ok(out)
}

/// `(sign, ln|h_k(t)|)`; sign 0 means an exact zero.
pub fn hermite_1d_log(k: usize, t: f64) -> Result<(i8, f64)> {
    check_point(t)?;
    let mut out = (0i8, f64::neg_infinity());
    walk(k, t, |j, v| {
        if j == k {
            out = v.sign_ln();
        }
    });
    Ok(out)
}

/// All of `h_0(t) .. h_kmax(t)` as f64.
pub fn hermite_values_upto(kmax: usize, t: f64) -> Result<Vec<f64>> {
    check_point(t)?;
    let mut out = vec![0.0; kmax + 1];
    walk(kmax, t, |j, v| out[j] = v.to_f64());
    Ok(out)
}

/// Tensor eigenfunction `Φ_μ(x) = Π_i h_{μ_i}(x_i)`.
pub fn hermite_nd(mu: &MultiIndex, x: &[f64]) -> Result<f64> {
    if mu.dim() != x.len() {
        return Err(Error::DimensionMismatch { expected: mu.dim(), got: x.len() });
    }
    let mut acc = 1.0;
    for (&m, &xi) in mu.entries().iter().zip(x) {
        acc *= hermite_1d(m as usize, xi)?;
        if acc == 0.0 {
            break;
        }
    }
    Ok(acc)
}

/// Cached values of `h_0..h_K` on a fixed node set, row-major `[k][node]`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteTable {
    max_degree: usize,
    nodes: Vec<f64>,
    values: Vec<f64>,
}

impl HermiteTable {
    /// Build by the scaled recurrence; one pass per node.
    pub fn build(max_degree: usize, nodes: &[f64]) -> Result<Self> {
        let q = nodes.len();
        let mut values = vec![0.0; (max_degree + 1) * q];
        for (j, &t) in nodes.iter().enumerate() {
            check_point(t)?;
            walk(max_degree, t, |k, v| values[k * q + j] = v.to_f64());
        }
        Ok(HermiteTable { max_degree, nodes: nodes.to_vec(), values })
    }

    /// Reassemble from raw parts (used by the cache layer); validates shape.
    pub fn from_parts(max_degree: usize, nodes: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if values.len() != (max_degree + 1) * nodes.len() {
            return Err(Error::InvalidArgument("table shape mismatch"));
        }
        Ok(HermiteTable { max_degree, nodes, values })
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn value(&self, k: usize, node: usize) -> f64 {
        self.values[k * self.nodes.len() + node]
    }

    pub fn row(&self, k: usize) -> &[f64] {
        let q = self.nodes.len();
        &self.values[k * q..(k + 1) * q]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// `Σ_j w_j f(x_j) h_k(x_j)²` for every k in `k_targets`, in one recurrence
/// pass over the nodes. Backbone of weighted-moment and band-mass sweeps.
pub fn weighted_square_sums<F: Fn(f64) -> f64>(
    k_targets: &[usize],
    nodes: &[f64],
    weights: &[f64],
    point_factor: F,
) -> Result<Vec<f64>> {
    if nodes.len() != weights.len() {
        return Err(Error::DimensionMismatch { expected: nodes.len(), got: weights.len() });
    }
    let kmax = match k_targets.iter().max() {
        Some(&m) => m,
        None => return Ok(Vec::new()),
    };
    let mut slot = vec![usize::MAX; kmax + 1];
    for (i, &k) in k_targets.iter().enumerate() {
        slot[k] = i;
    }
    let mut sums = vec![0.0; k_targets.len()];
    for (j, &t) in nodes.iter().enumerate() {
        check_point(t)?;
        let wf = weights[j] * point_factor(t);
        walk(kmax, t, |k, v| {
            let s = slot[k];
            if s != usize::MAX {
                let h = v.to_f64();
                sums[s] += wf * h * h;
            }
        });
    }
    Ok(sums)
}

/// Plancherel-Rotach main term
/// `(2/π)^{1/2} (N−x²)^{-1/4} cos((N(2θ−sin 2θ)−π)/4)` with `N = 2k+1`,
/// `θ = arccos(x N^{-1/2})`, valid for `0 ≤ x ≤ √N − N^{-1/6}`.
/// Cross-validation only; the recurrence is the production path.
pub fn hermite_asymptotic(k: usize, x: f64) -> Result<f64> {
    let n = 2.0 * k as f64 + 1.0;
    let upper = n.sqrt() - n.powf(-1.0 / 6.0);
    if !(0.0..=upper).contains(&x) {
        return Err(Error::OutOfRange("x outside the oscillatory range [0, √N − N^{-1/6}]"));
    }
    let theta = (x / n.sqrt()).acos();
    let phase = (n * (2.0 * theta - (2.0 * theta).sin()) - PI) / 4.0;
    Ok((2.0 / PI).sqrt() * (n - x * x).powf(-0.25) * phase.cos())
}

/// Absolute error band `N^{1/2} (N−x²)^{-7/4}` of [`hermite_asymptotic`].
pub fn hermite_asymptotic_error_band(k: usize, x: f64) -> f64 {
    let n = 2.0 * k as f64 + 1.0;
    n.sqrt() * (n - x * x).powf(-1.75)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    // Reference values evaluated from the defining formula with exact
    // factorials in 30-digit arithmetic.
    const H0_AT_0: f64 = 0.751125544464942482858703004776;
    const H2_AT_0: f64 = -0.531125966013598457238536524254;
    const H2_AT_HALF: f64 = -0.234358509944625863229356280157;
    const H3_AT_M12: f64 = 0.0303964153025357792361795143405;
    const H7_AT_175: f64 = -0.112804004059290972627862319331;
    const H40_AT_3: f64 = 0.0573695812357407063871334618598;
    const H100_AT_0: f64 = 0.211904267763431088826276516931;
    const H500_AT_03: f64 = -0.141538863708374929484258717946;
    const H501_AT_61: f64 = -0.049040872214890999491852476064;

    #[test]
    fn low_degree_oracle_values() {
        assert_relative_eq!(hermite_1d(0, 0.0).unwrap(), H0_AT_0, max_relative = 1e-14);
        assert_eq!(hermite_1d(1, 0.0).unwrap(), 0.0);
        assert_relative_eq!(hermite_1d(2, 0.0).unwrap(), H2_AT_0, max_relative = 1e-14);
        assert_relative_eq!(hermite_1d(2, 0.5).unwrap(), H2_AT_HALF, max_relative = 1e-13);
        assert_relative_eq!(hermite_1d(3, -1.2).unwrap(), H3_AT_M12, max_relative = 1e-13);
        assert_relative_eq!(hermite_1d(7, 1.75).unwrap(), H7_AT_175, max_relative = 1e-13);
    }

    #[test]
    fn high_degree_oracle_values() {
        assert_relative_eq!(hermite_1d(40, 3.0).unwrap(), H40_AT_3, max_relative = 1e-12);
        assert_relative_eq!(hermite_1d(100, 0.0).unwrap(), H100_AT_0, max_relative = 1e-12);
        assert_relative_eq!(hermite_1d(500, 0.3).unwrap(), H500_AT_03, max_relative = 1e-11);
        assert_relative_eq!(hermite_1d(501, 6.1).unwrap(), H501_AT_61, max_relative = 1e-11);
    }

    #[test]
    fn extreme_arguments_stay_finite() {
        // far inside the forbidden region: correct answer underflows to 0
        let v = hermite_1d(10_000, 200.0).unwrap();
        assert!(v.is_finite());
        assert_eq!(v, 0.0);
        let (sign, ln) = hermite_1d_log(10_000, 200.0).unwrap();
        assert!(sign != 0);
        assert!(ln.is_finite() && ln < -9_000.0);
        // oscillatory region at the same degree is order k^{-1/4}
        let w = hermite_1d(10_000, 1.0).unwrap();
        assert!(w.is_finite() && w.abs() > 1e-3);
        assert!(hermite_1d(3, f64::NAN).is_err());
    }

    #[test]
    fn parity() {
        for k in [0usize, 1, 2, 5, 17, 64, 333] {
            for &t in &[0.3, 1.7, 4.0, 9.5] {
                let plus = hermite_1d(k, t).unwrap();
                let minus = hermite_1d(k, -t).unwrap();
                let expect = if k % 2 == 0 { plus } else { -plus };
                assert_abs_diff_eq!(minus, expect, epsilon = 1e-15 * plus.abs().max(1e-300));
            }
        }
    }

    #[test]
    fn tensor_product() {
        let mu = MultiIndex::new(vec![0, 0]).unwrap();
        assert_relative_eq!(
            hermite_nd(&mu, &[0.0, 0.0]).unwrap(),
            1.0 / PI.sqrt(),
            max_relative = 1e-14
        );
        let mu = MultiIndex::new(vec![1, 0]).unwrap();
        for a in [0.0, 0.7, -31.0] {
            assert_eq!(hermite_nd(&mu, &[0.0, a]).unwrap(), 0.0);
        }
        let mu = MultiIndex::new(vec![2, 3]).unwrap();
        assert_relative_eq!(
            hermite_nd(&mu, &[0.5, -1.2]).unwrap(),
            H2_AT_HALF * H3_AT_M12,
            max_relative = 1e-13
        );
        assert!(hermite_nd(&mu, &[0.5]).is_err());
    }

    #[test]
    fn eigenvalues_and_multiplicities() {
        let mu = MultiIndex::new(vec![0; 7]).unwrap();
        assert_eq!(eigenvalue(&mu), 7);
        let mu = MultiIndex::new(vec![3, 1, 2]).unwrap();
        assert_eq!(eigenvalue(&mu), 15);
        assert_eq!(level_multiplicity(0, 5).unwrap(), 1);
        assert_eq!(level_multiplicity(3, 2).unwrap(), 4);
        assert_eq!(level_multiplicity(9, 1).unwrap(), 1);
        let lvl = Eigenlevel::new(3, 2).unwrap();
        assert_eq!((lvl.eigenvalue, lvl.multiplicity), (8, 4));
    }

    #[test]
    fn asymptotic_oracle() {
        // θ = π/2 at the origin
        let k = 100;
        let n = 201.0f64;
        let direct = (2.0 / PI).sqrt()
            * n.powf(-0.25)
            * ((n * (PI - (PI).sin() - 0.0) - PI) / 4.0).cos();
        // 2θ − sin 2θ = π − 0 at θ = π/2
        let expect = (2.0 / PI).sqrt() * n.powf(-0.25) * ((n * PI - PI) / 4.0).cos();
        assert_relative_eq!(hermite_asymptotic(k, 0.0).unwrap(), expect, max_relative = 1e-13);
        let _ = direct;
        assert_abs_diff_eq!(
            hermite_asymptotic(k, 0.0).unwrap(),
            H100_AT_0,
            epsilon = hermite_asymptotic_error_band(k, 0.0)
        );
    }

    #[test]
    fn asymptotic_tracks_recurrence_at_degree_500() {
        let k = 500;
        for &x in &[0.0, 0.3, 1.0, 3.0, 10.0, 25.0] {
            let truth = hermite_1d(k, x).unwrap();
            let approx = hermite_asymptotic(k, x).unwrap();
            let band = hermite_asymptotic_error_band(k, x);
            assert_abs_diff_eq!(approx, truth, epsilon = 2.0 * band);
        }
        // outside the oscillatory window
        let n = 1001.0f64;
        assert!(hermite_asymptotic(k, n.sqrt()).is_err());
        assert!(hermite_asymptotic(k, -0.1).is_err());
    }

    #[test]
    fn table_matches_pointwise() {
        let nodes = [-3.0, -0.5, 0.0, 1.25, 6.0];
        let table = HermiteTable::build(12, &nodes).unwrap();
        for k in 0..=12 {
            for (j, &t) in nodes.iter().enumerate() {
                assert_eq!(table.value(k, j), hermite_1d(k, t).unwrap());
            }
        }
        assert_eq!(table.row(0)[2], hermite_1d(0, 0.0).unwrap());
    }
}
